#pragma once

// lambda(k[X] / (I_2(X) + m^r + m^[q])) for a generic m x n matrix X, by
// three independent routes:
//
//   closed  R - S, valid when r = sq is an integer
//   tu      T(m,n,r,q) + T(n,m,r,q) - U(m,n,r,q), any integer r
//   oracle  listing of row/column-sum profiles
//
// plus the length of k[x_1..x_d] / (m^r + m^[q]) for comparison.

#include <cstdint>
#include <string>
#include <string_view>

#include "smult/exactmath.hpp"

namespace smult::length {

struct LengthQuery {
  std::int64_t m = 1;
  std::int64_t n = 1;
  ExactRational s = 1;
  std::int64_t q = 1;
  std::int64_t p = 2;

  /// Throws std::invalid_argument unless m, n >= 1, s > 0, p prime and q a power of p.
  void validate() const;
  /// ceil(s q), computed exactly.
  [[nodiscard]] std::int64_t degree_bound() const;
  [[nodiscard]] bool sq_is_integer() const;
};

bool is_prime(std::int64_t p);
bool is_power_of(std::int64_t q, std::int64_t p);

/// ceil(s * q); throws std::overflow_error if it does not fit in 64 bits.
std::int64_t ceil_sq(const ExactRational& s, std::int64_t q);

BigInteger R_term(std::int64_t m, std::int64_t n, std::int64_t sq, std::int64_t q);
BigInteger S_term(std::int64_t m, std::int64_t n, std::int64_t sq, std::int64_t q);

/// R - S. Throws std::domain_error when s q is not an integer; use length_TU
/// with r = ceil(s q) instead.
BigInteger length_closed(const LengthQuery& query);

BigInteger length_TU(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q);

BigInteger length_oracle(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q);

/// lambda(k[x_1..x_d] / (m^r + m^[q])) = sum_{e<r} #{z in [0,q)^d : |z| = e}.
BigInteger regular_length(std::int64_t d, std::int64_t r, std::int64_t q);

enum class Route { closed, tu, oracle };

std::string_view to_string(Route route);
/// Throws std::invalid_argument on an unknown name.
Route parse_route(std::string_view name);

/// Dispatches on the route; the closed route requires s q to be an integer.
BigInteger compute(const LengthQuery& query, Route route);

}  // namespace smult::length
