#pragma once

// Counts of bounded compositions and the tuple counts T and U.
//
// T(m,n,r,q): tuples (x_1..x_m, y_1..y_n) of nonnegative integers with
//   sum x = sum y < r and every x_i < q.
// U(m,n,r,q): the same with every y_j < q as well.
//
// Each count has a closed form (alternating binomial sums) and a dynamic
// programming oracle; the two share nothing but binom().

#include <cstdint>
#include <vector>

#include "smult/exactmath.hpp"

namespace smult::counting {

/// Number of (z_1..z_v) >= 0 with sum d and every z_i < q, by inclusion-exclusion.
/// Throws std::invalid_argument unless v >= 1, d >= 0, q >= 1.
BigInteger bounded_compositions(std::int64_t v, std::int64_t d, std::int64_t q);

/// Same count by the recurrence N(v,d) = sum_{z=0}^{min(d,q-1)} N(v-1, d-z).
BigInteger bounded_compositions_oracle(std::int64_t v, std::int64_t d, std::int64_t q);

/// bounded_compositions_oracle(v, d, q) for every d in [0, d_max].
std::vector<BigInteger> bounded_composition_table(std::int64_t v, std::int64_t d_max,
                                                  std::int64_t q);

BigInteger T_closed(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q);
BigInteger U_closed(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q);

/// sum_{d<r} N_q(m,d) C(d+n-1, n-1)
BigInteger T_oracle(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q);
/// sum_{d<r} N_q(m,d) N_q(n,d)
BigInteger U_oracle(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q);

}  // namespace smult::counting
