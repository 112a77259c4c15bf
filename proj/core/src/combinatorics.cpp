#include "schroeder/combinatorics.hpp"

#include <stdexcept>

namespace schroeder {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMax64 = ~std::uint64_t{0};

std::uint64_t narrow(u128 v, const char* what) {
  if (v > kMax64) {
    throw std::overflow_error(what);
  }
  return static_cast<std::uint64_t>(v);
}

u128 mul_checked(u128 a, u128 b, const char* what) {
  if (a != 0 && b > (~u128{0}) / a) {
    throw std::overflow_error(what);
  }
  return a * b;
}

}  // namespace

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  u128 result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result = mul_checked(result, n - k + i, "binomial overflow");
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return narrow(result, "binomial overflow");
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  u128 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    result = mul_checked(result, base, "checked_pow overflow");
  }
  return narrow(result, "checked_pow overflow");
}

std::uint64_t schroeder_number(SchroederKind kind, unsigned n) {
  if (n == 0) {
    if (kind == SchroederKind::Small) {
      throw std::invalid_argument("small Schroeder number requires n >= 1");
    }
    return 1;
  }
  u128 sum = 0;
  for (unsigned r = 0; r <= n; ++r) {
    u128 term = mul_checked(binomial(n + 1, n - r), binomial(n + r, r),
                            "Schroeder number overflow");
    sum += term;
    if (sum < term) {
      throw std::overflow_error("Schroeder number overflow");
    }
  }
  u128 divisor = (kind == SchroederKind::Large) ? u128{n + 1} : u128{2} * (n + 1);
  if (sum % divisor != 0) {
    throw std::logic_error("Schroeder formula division is not exact");
  }
  return narrow(sum / divisor, "Schroeder number overflow");
}

std::uint64_t idempotent_count_ls_slice(unsigned n, unsigned p) {
  if (p == 0) {
    return 1;
  }
  if (p > n) {
    return 0;
  }
  u128 sum = 0;
  for (unsigned r = p; r <= n; ++r) {
    sum += mul_checked(binomial(n, r), binomial(r - 1, p - 1),
                       "idempotent count overflow");
  }
  return narrow(sum, "idempotent count overflow");
}

std::uint64_t idempotent_count_ss_slice(unsigned n, unsigned p) {
  if (p == 0 || p > n) {
    return 0;
  }
  u128 product = mul_checked(binomial(n - 1, p - 1), checked_pow(2, n - p),
                             "idempotent count overflow");
  return narrow(product, "idempotent count overflow");
}

bool binomial_identity_check(unsigned n, unsigned p) {
  if (p < 1 || p > n) {
    throw std::invalid_argument("binomial_identity_check requires 1 <= p <= n");
  }
  u128 lhs = 0;
  for (unsigned r = p; r <= n; ++r) {
    lhs += mul_checked(binomial(n - 1, r - 1), binomial(r - 1, p - 1),
                       "binomial identity overflow");
  }
  u128 rhs = mul_checked(binomial(n - 1, p - 1), checked_pow(2, n - p),
                         "binomial identity overflow");
  return lhs == rhs;
}

}  // namespace schroeder
