#ifndef SCHROEDER_PARTIAL_MAP_HPP_
#define SCHROEDER_PARTIAL_MAP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace schroeder {

/// Largest supported chain size. Point sets are stored as 64-bit masks;
/// whole-monoid enumeration is separately capped far below this.
inline constexpr int kMaxChainSize = 64;

/// A subset of the chain [n] = {1, ..., n}, stored as a bitmask.
class PointSet {
 public:
  constexpr PointSet() = default;
  static constexpr PointSet from_mask(std::uint64_t mask) {
    PointSet s;
    s.bits_ = mask;
    return s;
  }
  static PointSet full(int n);
  static PointSet of(std::initializer_list<int> points);

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcountll(bits_); }
  constexpr bool contains(int point) const {
    return (bits_ >> (point - 1)) & 1;
  }
  void insert(int point) { bits_ |= std::uint64_t{1} << (point - 1); }
  void erase(int point) { bits_ &= ~(std::uint64_t{1} << (point - 1)); }

  /// Smallest member; 0 if empty.
  int min() const { return bits_ == 0 ? 0 : __builtin_ctzll(bits_) + 1; }
  /// Largest member; 0 if empty.
  int max() const { return bits_ == 0 ? 0 : 64 - __builtin_clzll(bits_); }

  std::vector<int> points() const;

  friend constexpr PointSet operator&(PointSet a, PointSet b) {
    return from_mask(a.bits_ & b.bits_);
  }
  friend constexpr PointSet operator|(PointSet a, PointSet b) {
    return from_mask(a.bits_ | b.bits_);
  }
  friend constexpr bool operator==(PointSet a, PointSet b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// A partial transformation of the chain [n]: each point is either
/// undefined or mapped to a point of [n]. Immutable value type; all
/// operations on it are pure functions.
///
/// Composition is applied left to right throughout: x(ab) = (xa)b.
class PartialMap {
 public:
  /// The empty map on [n] (every point undefined).
  explicit PartialMap(int n);

  /// Builds the map sending each listed point to its value, undefined
  /// elsewhere. Throws std::invalid_argument on duplicate points or
  /// out-of-range points/values.
  static PartialMap from_pairs(int n,
                               std::span<const std::pair<int, int>> pairs);
  static PartialMap from_pairs(
      int n, std::initializer_list<std::pair<int, int>> pairs);

  /// The identity map on [n].
  static PartialMap identity(int n);

  int chain_size() const { return n_; }
  bool contains(int point) const {
    return point >= 1 && point <= n_ && values_[point - 1] != 0;
  }

  /// Image of a point in the domain; 0 when the point is undefined.
  int operator()(int point) const { return values_[point - 1]; }

  PointSet domain() const;
  PointSet image() const;
  int height() const { return image().count(); }
  bool is_empty_map() const { return domain().empty(); }

  /// Map equal to this one except that `point` goes to `value`.
  PartialMap with(int point, int value) const;

  friend bool operator==(const PartialMap& a, const PartialMap& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

  std::span<const std::uint8_t> raw_values() const { return values_; }

 private:
  friend PartialMap compose(const PartialMap&, const PartialMap&);
  friend PartialMap partial_identity(int, PointSet);

  int n_;
  std::vector<std::uint8_t> values_;  // values_[x-1] = xa, 0 = undefined
};

/// Left-to-right composition: dom(ab) = {x in dom a : xa in dom b} and
/// x(ab) = (xa)b. Throws std::invalid_argument on mismatched chain sizes.
PartialMap compose(const PartialMap& a, const PartialMap& b);

/// True iff x <= y implies xa <= ya on the domain.
bool is_isotone(const PartialMap& a);

/// True iff xa <= x for every x in the domain.
bool is_decreasing(const PartialMap& a);

/// True iff aa = a.
bool is_idempotent(const PartialMap& a);

/// The set {x in dom a : xa = x}.
PointSet fixed_points(const PartialMap& a);

/// Identity on `points`, undefined elsewhere. Always an isotone,
/// order-decreasing idempotent.
PartialMap partial_identity(int n, PointSet points);

struct PartialMapHash {
  std::size_t operator()(const PartialMap& a) const noexcept;
};

}  // namespace schroeder

template <>
struct std::hash<schroeder::PartialMap> {
  std::size_t operator()(const schroeder::PartialMap& a) const noexcept {
    return schroeder::PartialMapHash{}(a);
  }
};

#endif  // SCHROEDER_PARTIAL_MAP_HPP_
