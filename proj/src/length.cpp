#include "smult/length.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "smult/counting.hpp"
#include "smult/staircase.hpp"

namespace smult::length {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

bool is_power_of(std::int64_t q, std::int64_t p) {
  if (q < 1 || p < 2) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::int64_t ceil_sq(const ExactRational& s, std::int64_t q) {
  const BigInteger r = ceil(s * ExactRational(big(q)));
  if (!r.fits_slong_p()) throw std::overflow_error("ceil(s q) exceeds 64 bits");
  return r.get_si();
}

void LengthQuery::validate() const {
  if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
  if (s <= 0) throw std::invalid_argument("s must be positive");
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (!is_power_of(q, p)) {
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a power of p = " +
                                std::to_string(p));
  }
}

std::int64_t LengthQuery::degree_bound() const { return ceil_sq(s, q); }

bool LengthQuery::sq_is_integer() const {
  return ExactRational(s * ExactRational(big(q))).get_den() == 1;
}

BigInteger R_term(std::int64_t m, std::int64_t n, std::int64_t sq, std::int64_t /*q*/) {
  BigInteger sum = 0;
  for (std::int64_t a = 0; a <= m - 1; ++a) {
    const BigInteger ma = binom(m - 1, a);
    for (std::int64_t b = 0; b <= n - 1; ++b) {
      const BigInteger nb = binom(n - 1, b);
      for (std::int64_t l = 0; l <= std::min(a, b); ++l) {
        sum += ma * nb * binom(sq + l, a + b + 1) * binom(a, l) * binom(b, l);
      }
    }
  }
  return sum;
}

BigInteger S_term(std::int64_t m, std::int64_t n, std::int64_t sq, std::int64_t q) {
  BigInteger sum = 0;
  for (std::int64_t i = 1; i <= m; ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      const BigInteger outer = binom(m, i) * binom(n, j);
      const std::int64_t top = sq - std::max(i, j) * q;
      // Every binom(top + l, a+b+1) with l <= min(a,b) vanishes once top < 0.
      if (top < 0) continue;
      const bool negative = (i + j) % 2 != 0;
      for (std::int64_t a = 0; a <= m - 1; ++a) {
        const BigInteger ma = binom(monus(j, i) * q + m - 1, m - 1 - a);
        for (std::int64_t b = 0; b <= n - 1; ++b) {
          const BigInteger nb = binom(monus(i, j) * q + n - 1, n - 1 - b);
          for (std::int64_t l = 0; l <= std::min(a, b); ++l) {
            const BigInteger term =
                outer * ma * nb * binom(top + l, a + b + 1) * binom(a, l) * binom(b, l);
            if (negative) sum -= term; else sum += term;
          }
        }
      }
    }
  }
  return sum;
}

BigInteger length_closed(const LengthQuery& query) {
  query.validate();
  if (!query.sq_is_integer()) {
    throw std::domain_error("s q = " + to_fraction_string(query.s * ExactRational(big(query.q))) +
                            " is not an integer; use the tu route with r = ceil(s q) = " +
                            std::to_string(query.degree_bound()));
  }
  const std::int64_t sq = query.degree_bound();
  return R_term(query.m, query.n, sq, query.q) - S_term(query.m, query.n, sq, query.q);
}

BigInteger length_TU(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q) {
  return counting::T_closed(m, n, r, q) + counting::T_closed(n, m, r, q) -
         counting::U_closed(m, n, r, q);
}

BigInteger length_oracle(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q) {
  return staircase::count_staircase_basis_naive(m, n, r, q);
}

BigInteger regular_length(std::int64_t d, std::int64_t r, std::int64_t q) {
  if (d < 1 || r < 0 || q < 1) throw std::invalid_argument("regular_length needs d >= 1, r >= 0, q >= 1");
  BigInteger sum = 0;
  for (std::int64_t e = 0; e < r; ++e) sum += counting::bounded_compositions(d, e, q);
  return sum;
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::closed: return "closed";
    case Route::tu: return "tu";
    case Route::oracle: return "oracle";
  }
  return "?";
}

Route parse_route(std::string_view name) {
  if (name == "closed") return Route::closed;
  if (name == "tu") return Route::tu;
  if (name == "oracle") return Route::oracle;
  throw std::invalid_argument("unknown route '" + std::string(name) + "'");
}

BigInteger compute(const LengthQuery& query, Route route) {
  query.validate();
  switch (route) {
    case Route::closed: return length_closed(query);
    case Route::tu: return length_TU(query.m, query.n, query.degree_bound(), query.q);
    case Route::oracle: return length_oracle(query.m, query.n, query.degree_bound(), query.q);
  }
  throw std::logic_error("unhandled route");
}

}  // namespace smult::length
