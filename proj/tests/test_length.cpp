#include <doctest.h>

#include "smult/counting.hpp"
#include "smult/length.hpp"

using namespace smult;
using namespace smult::length;

namespace {

LengthQuery query(std::int64_t m, std::int64_t n, ExactRational s, std::int64_t q, std::int64_t p = 2) {
  LengthQuery lq;
  lq.m = m;
  lq.n = n;
  lq.s = std::move(s);
  lq.q = q;
  lq.p = p;
  return lq;
}

}  // namespace

TEST_CASE("query validation") {
  CHECK_NOTHROW(query(2, 2, 3, 4).validate());
  CHECK_NOTHROW(query(1, 1, 1, 1).validate());
  CHECK_THROWS_AS(query(0, 2, 3, 4).validate(), std::invalid_argument);
  CHECK_THROWS_AS(query(2, 2, 0, 4).validate(), std::invalid_argument);
  CHECK_THROWS_AS(query(2, 2, -1, 4).validate(), std::invalid_argument);
  CHECK_THROWS_AS(query(2, 2, 1, 6).validate(), std::invalid_argument);
  CHECK_THROWS_AS(query(2, 2, 1, 4, 4).validate(), std::invalid_argument);
  CHECK(query(2, 2, 3, 9, 3).degree_bound() == 27);
}

TEST_CASE("degree bound is an exact ceiling") {
  CHECK(ceil_sq(ExactRational(4, 3), 2) == 3);
  CHECK(ceil_sq(ExactRational(4, 3), 4) == 6);
  CHECK(ceil_sq(ExactRational(4, 3), 3) == 4);
  CHECK(ceil_sq(ExactRational(1, 1000000), 2) == 1);
  CHECK(query(2, 2, ExactRational(5, 2), 2).sq_is_integer());
  CHECK_FALSE(query(2, 2, ExactRational(5, 4), 2).sq_is_integer());
}

TEST_CASE("R and S terms") {
  CHECK(R_term(2, 2, 6, 2) == 91);
  CHECK(S_term(2, 2, 6, 2) == 81);
  CHECK(R_term(2, 3, 6, 2) - S_term(2, 3, 6, 2) == 23);
  for (std::int64_t r = 0; r <= 10; ++r) CHECK(R_term(1, 1, r, 3) == r);
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t n = 1; n <= 3; ++n) CHECK(R_term(m, n, 0, 2) == 0);
}

TEST_CASE("closed form: worked values") {
  CHECK(length_closed(query(2, 2, 3, 2)) == 10);
  CHECK(length_closed(query(2, 2, 1, 4)) == 30);
  CHECK(length_closed(query(2, 3, 3, 2)) == 23);
  CHECK(length_closed(query(1, 1, 1, 1)) == 1);
}

TEST_CASE("closed form refuses a fractional degree bound") {
  CHECK_THROWS_AS(length_closed(query(2, 2, ExactRational(4, 3), 2)), std::domain_error);
  CHECK_THROWS_AS(compute(query(2, 2, ExactRational(4, 3), 2), Route::closed), std::domain_error);
  CHECK(compute(query(2, 2, ExactRational(4, 3), 2), Route::tu) == length_TU(2, 2, 3, 2));
}

TEST_CASE("T + T - U: worked values") {
  CHECK(length_TU(2, 2, 6, 2) == 10);
  CHECK(length_TU(2, 2, 3, 2) == 10);
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t n = 1; n <= 3; ++n) CHECK(length_TU(m, n, 0, 3) == 0);
}

TEST_CASE("oracle: worked values") {
  CHECK(length_oracle(2, 2, 6, 2) == 10);
  CHECK(length_oracle(2, 3, 6, 2) == 23);
  // One variable x: x^k survives while k < r and k < q.
  for (std::int64_t q = 1; q <= 5; ++q)
    for (std::int64_t r = 0; r <= 12; ++r) CHECK(length_oracle(1, 1, r, q) == std::min(r, q));
}

TEST_CASE("three routes agree") {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t n = 1; n <= 3; ++n)
      for (std::int64_t q : {2, 4})
        for (std::int64_t sq = 1; sq <= 3 * q; ++sq) {
          const auto lq = query(m, n, ExactRational(sq, q), q);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(q);
          CAPTURE(sq);
          const auto closed = compute(lq, Route::closed);
          REQUIRE(closed == compute(lq, Route::tu));
          REQUIRE(closed == compute(lq, Route::oracle));
          CHECK(closed == compute(query(n, m, ExactRational(sq, q), q), Route::closed));
          if (sq <= q) CHECK(S_term(m, n, sq, q) == 0);
        }
}

TEST_CASE("routes agree for odd primes") {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t n = 1; n <= 3; ++n)
      for (std::int64_t sq = 1; sq <= 9; ++sq) {
        const auto lq = query(m, n, ExactRational(sq, 3), 3, 3);
        CHECK(compute(lq, Route::closed) == compute(lq, Route::oracle));
      }
}

TEST_CASE("length saturates in r") {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t n = 1; n <= 3; ++n)
      for (std::int64_t q : {2, 4}) {
        const std::int64_t start = (q - 1) * (m + n) + 1;
        for (std::int64_t r = start; r <= start + 4; ++r)
          CHECK(length_TU(m, n, r, q) == length_TU(m, n, r + 1, q));
      }
}

TEST_CASE("regular length") {
  CHECK(regular_length(2, 3, 2) == 4);
  CHECK(regular_length(2, 6, 4) == 15);
  for (std::int64_t q = 1; q <= 6; ++q) CHECK(regular_length(1, q + 3, q) == q);
  CHECK_THROWS_AS(regular_length(0, 3, 2), std::invalid_argument);
  for (std::int64_t e = 1; e <= 10; ++e) {
    const std::int64_t q = std::int64_t{1} << e;
    const ExactRational qq(big(q));
    const ExactRational expected =
        e % 2 == 1 ? ExactRational(ExactRational(7, 9) * qq * qq + ExactRational(5, 9) * qq - ExactRational(2, 9))
                   : ExactRational(ExactRational(7, 9) * qq * qq + ExactRational(7, 9) * qq - ExactRational(5, 9));
    CHECK(ExactRational(regular_length(2, ceil_sq(ExactRational(4, 3), q), q)) == expected);
  }
}

TEST_CASE("route names") {
  CHECK(parse_route("closed") == Route::closed);
  CHECK(parse_route("tu") == Route::tu);
  CHECK(parse_route("oracle") == Route::oracle);
  CHECK(to_string(Route::tu) == "tu");
  CHECK_THROWS_AS(parse_route("all"), std::invalid_argument);
}

TEST_CASE("lengths outgrow 64 bits") {
  const auto big_q = std::int64_t{1} << 40;
  const auto value = length_closed(query(3, 3, 3, big_q));
  CHECK_FALSE(value.fits_slong_p());
}
