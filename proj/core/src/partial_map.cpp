#include "schroeder/partial_map.hpp"

#include <stdexcept>
#include <string>

namespace schroeder {

namespace {

void check_chain_size(int n) {
  if (n < 0 || n > kMaxChainSize) {
    throw std::invalid_argument("chain size must be in [0, " +
                                std::to_string(kMaxChainSize) + "], got " +
                                std::to_string(n));
  }
}

void check_point(int n, int point, const char* what) {
  if (point < 1 || point > n) {
    throw std::invalid_argument(std::string(what) + " " +
                                std::to_string(point) +
                                " out of range 1.." + std::to_string(n));
  }
}

}  // namespace

PointSet PointSet::full(int n) {
  check_chain_size(n);
  return n == 0 ? PointSet{} : from_mask(~std::uint64_t{0} >> (64 - n));
}

PointSet PointSet::of(std::initializer_list<int> points) {
  PointSet s;
  for (int p : points) {
    check_point(kMaxChainSize, p, "point");
    s.insert(p);
  }
  return s;
}

std::vector<int> PointSet::points() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(__builtin_ctzll(rest) + 1);
  }
  return out;
}

PartialMap::PartialMap(int n) : n_(n) {
  check_chain_size(n);
  values_.assign(static_cast<std::size_t>(n), 0);
}

PartialMap PartialMap::from_pairs(int n,
                                  std::span<const std::pair<int, int>> pairs) {
  PartialMap map(n);
  for (const auto& [point, value] : pairs) {
    check_point(n, point, "point");
    check_point(n, value, "value");
    if (map.contains(point)) {
      throw std::invalid_argument("duplicate point " + std::to_string(point));
    }
    map.values_[point - 1] = static_cast<std::uint8_t>(value);
  }
  return map;
}

PartialMap PartialMap::from_pairs(
    int n, std::initializer_list<std::pair<int, int>> pairs) {
  return from_pairs(n, std::span<const std::pair<int, int>>(pairs.begin(),
                                                            pairs.size()));
}

PartialMap PartialMap::identity(int n) {
  PartialMap map(n);
  for (int x = 1; x <= n; ++x) {
    map.values_[x - 1] = static_cast<std::uint8_t>(x);
  }
  return map;
}

PointSet PartialMap::domain() const {
  PointSet d;
  for (int x = 1; x <= n_; ++x) {
    if (values_[x - 1] != 0) {
      d.insert(x);
    }
  }
  return d;
}

PointSet PartialMap::image() const {
  PointSet im;
  for (int x = 1; x <= n_; ++x) {
    if (values_[x - 1] != 0) {
      im.insert(values_[x - 1]);
    }
  }
  return im;
}

PartialMap PartialMap::with(int point, int value) const {
  check_point(n_, point, "point");
  check_point(n_, value, "value");
  PartialMap copy = *this;
  copy.values_[point - 1] = static_cast<std::uint8_t>(value);
  return copy;
}

PartialMap compose(const PartialMap& a, const PartialMap& b) {
  if (a.chain_size() != b.chain_size()) {
    throw std::invalid_argument("compose: mismatched chain sizes");
  }
  const int n = a.chain_size();
  PartialMap result(n);
  for (int x = 1; x <= n; ++x) {
    const int y = a(x);
    if (y != 0) {
      result.values_[x - 1] = b.values_[y - 1];
    }
  }
  return result;
}

bool is_isotone(const PartialMap& a) {
  int previous = 0;
  for (int x = 1; x <= a.chain_size(); ++x) {
    const int y = a(x);
    if (y == 0) {
      continue;
    }
    if (y < previous) {
      return false;
    }
    previous = y;
  }
  return true;
}

bool is_decreasing(const PartialMap& a) {
  for (int x = 1; x <= a.chain_size(); ++x) {
    if (a(x) > x) {
      return false;
    }
  }
  return true;
}

bool is_idempotent(const PartialMap& a) { return compose(a, a) == a; }

PointSet fixed_points(const PartialMap& a) {
  PointSet fixed;
  for (int x = 1; x <= a.chain_size(); ++x) {
    if (a(x) == x) {
      fixed.insert(x);
    }
  }
  return fixed;
}

PartialMap partial_identity(int n, PointSet points) {
  if (points.max() > n) {
    throw std::invalid_argument("partial_identity: point out of range");
  }
  PartialMap map(n);
  for (int x : points.points()) {
    map.values_[x - 1] = static_cast<std::uint8_t>(x);
  }
  return map;
}

std::size_t PartialMapHash::operator()(const PartialMap& a) const noexcept {
  // FNV-1a over the value vector.
  std::uint64_t h = 1469598103934665603ull;
  h = (h ^ static_cast<std::uint64_t>(a.chain_size())) * 1099511628211ull;
  for (std::uint8_t v : a.raw_values()) {
    h = (h ^ v) * 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace schroeder
