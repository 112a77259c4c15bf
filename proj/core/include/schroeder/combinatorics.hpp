#ifndef SCHROEDER_COMBINATORICS_HPP_
#define SCHROEDER_COMBINATORICS_HPP_

#include <cstdint>

namespace schroeder {

// All counting here is exact integer arithmetic. Anything that would
// overflow 64 bits, or a closed form whose implied division is not exact,
// throws std::overflow_error / std::logic_error instead of returning a
// wrong value.

/// Binomial coefficient C(n, k), exact. Throws std::overflow_error if the
/// value does not fit in 64 bits.
std::uint64_t binomial(unsigned n, unsigned k);

/// base^exp with overflow checking.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

enum class SchroederKind { Large, Small };

/// Large Schroeder numbers 1, 2, 6, 22, 90, 394, 1806, ... (the order of
/// the monoid of isotone order-decreasing partial maps on [n]) and small
/// Schroeder numbers 1, 3, 11, 45, 197, 903, ... (the order of the
/// submonoid whose members have 1 in their domain).
///
/// Computed from the summation formulas
///   large(n) = (1/(n+1))   * sum_{r=0..n} C(n+1, n-r) C(n+r, r)   (n >= 1)
///   small(n) = (1/(2(n+1))) * sum_{r=0..n} C(n+1, n-r) C(n+r, r)  (n >= 1)
/// with large(0) = 1. The divisions are asserted exact; a remainder would
/// mean the formula was transcribed wrongly.
std::uint64_t schroeder_number(SchroederKind kind, unsigned n);

/// Number of kernels (equivalently idempotents, equivalently R*-classes)
/// at height exactly p in the large Schroeder monoid on [n]:
///   sum_{r=p..n} C(n, r) C(r-1, p-1).
/// Counts the ways to pick a domain of size r and split it into p convex
/// pieces. For p = 0 returns 1 (the empty map).
std::uint64_t idempotent_count_ls_slice(unsigned n, unsigned p);

/// Same count restricted to maps whose domain contains 1:
///   sum_{r=p..n} C(n-1, r-1) C(r-1, p-1)  =  C(n-1, p-1) 2^(n-p).
/// Evaluated via the closed product form. For p = 0 returns 0.
std::uint64_t idempotent_count_ss_slice(unsigned n, unsigned p);

/// Checks the identity
///   sum_{r=p..n} C(n-1, r-1) C(r-1, p-1) == C(n-1, p-1) 2^(n-p)
/// by evaluating both sides exactly. Requires 1 <= p <= n.
bool binomial_identity_check(unsigned n, unsigned p);

}  // namespace schroeder

#endif  // SCHROEDER_COMBINATORICS_HPP_
