#include "smult/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smult::counting {

namespace {

void require_composition_query(std::int64_t v, std::int64_t d, std::int64_t q) {
  if (v < 1 || d < 0 || q < 1) {
    throw std::invalid_argument("bounded compositions need v >= 1, d >= 0, q >= 1 (got v=" +
                                std::to_string(v) + ", d=" + std::to_string(d) +
                                ", q=" + std::to_string(q) + ")");
  }
}

void require_tu_query(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q) {
  if (m < 1 || n < 1 || r < 0 || q < 1) {
    throw std::invalid_argument("T/U need m, n >= 1, r >= 0, q >= 1 (got m=" +
                                std::to_string(m) + ", n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + ", q=" + std::to_string(q) + ")");
  }
}

inline int sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

BigInteger bounded_compositions(std::int64_t v, std::int64_t d, std::int64_t q) {
  require_composition_query(v, d, q);
  BigInteger sum = 0;
  for (std::int64_t i = 0; i <= v; ++i) {
    const BigInteger term = binom(v, i) * binom(d - i * q + v - 1, v - 1);
    if (sign(i) > 0) sum += term; else sum -= term;
  }
  return sum;
}

std::vector<BigInteger> bounded_composition_table(std::int64_t v, std::int64_t d_max,
                                                  std::int64_t q) {
  require_composition_query(v, std::max<std::int64_t>(d_max, 0), q);
  if (d_max < 0) return {};
  const auto width = static_cast<std::size_t>(d_max + 1);
  std::vector<BigInteger> row(width, BigInteger(0));
  row[0] = 1;  // zero parts: only the empty tuple, of sum 0
  std::vector<BigInteger> next(width);
  for (std::int64_t parts = 1; parts <= v; ++parts) {
    // Sliding window: next[d] = sum_{z=0}^{min(d, q-1)} row[d-z].
    BigInteger window = 0;
    for (std::size_t d = 0; d < width; ++d) {
      window += row[d];
      if (d >= static_cast<std::size_t>(q)) window -= row[d - static_cast<std::size_t>(q)];
      next[d] = window;
    }
    std::swap(row, next);
  }
  return row;
}

BigInteger bounded_compositions_oracle(std::int64_t v, std::int64_t d, std::int64_t q) {
  require_composition_query(v, d, q);
  return bounded_composition_table(v, d, q).back();
}

BigInteger T_closed(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q) {
  require_tu_query(m, n, r, q);
  BigInteger sum = 0;
  for (std::int64_t i = 0; i <= m; ++i) {
    const BigInteger mi = binom(m, i);
    for (std::int64_t a = 0; a <= m - 1; ++a) {
      const BigInteger ma = binom(m - 1, m - 1 - a);
      for (std::int64_t b = 0; b <= n - 1; ++b) {
        const BigInteger nb = binom(i * q + n - 1, n - 1 - b);
        for (std::int64_t j = 0; j <= std::min(a, b); ++j) {
          const BigInteger term = mi * ma * nb * binom(r - i * q + j, a + b + 1) * binom(a, j) *
                                  binom(b, j);
          if (sign(i) > 0) sum += term; else sum -= term;
        }
      }
    }
  }
  return sum;
}

BigInteger U_closed(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q) {
  require_tu_query(m, n, r, q);
  BigInteger sum = 0;
  for (std::int64_t i = 0; i <= m; ++i) {
    for (std::int64_t j = 0; j <= n; ++j) {
      const BigInteger outer = binom(m, i) * binom(n, j);
      const std::int64_t top = r - std::max(i, j) * q;
      for (std::int64_t a = 0; a <= m - 1; ++a) {
        const BigInteger ma = binom(monus(j, i) * q + m - 1, m - 1 - a);
        for (std::int64_t b = 0; b <= n - 1; ++b) {
          const BigInteger nb = binom(monus(i, j) * q + n - 1, n - 1 - b);
          for (std::int64_t l = 0; l <= std::min(a, b); ++l) {
            const BigInteger term = outer * ma * nb * binom(top + l, a + b + 1) * binom(a, l) *
                                    binom(b, l);
            if (sign(i + j) > 0) sum += term; else sum -= term;
          }
        }
      }
    }
  }
  return sum;
}

BigInteger T_oracle(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q) {
  require_tu_query(m, n, r, q);
  if (r == 0) return 0;
  const auto rows = bounded_composition_table(m, r - 1, q);
  BigInteger sum = 0;
  for (std::int64_t d = 0; d < r; ++d) {
    sum += rows[static_cast<std::size_t>(d)] * binom(d + n - 1, n - 1);
  }
  return sum;
}

BigInteger U_oracle(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q) {
  require_tu_query(m, n, r, q);
  if (r == 0) return 0;
  const auto rows = bounded_composition_table(m, r - 1, q);
  const auto cols = bounded_composition_table(n, r - 1, q);
  BigInteger sum = 0;
  for (std::size_t d = 0; d < rows.size(); ++d) sum += rows[d] * cols[d];
  return sum;
}

}  // namespace smult::counting
