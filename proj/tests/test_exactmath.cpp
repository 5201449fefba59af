#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

#include "smult/exactmath.hpp"
#include "smult/serialize.hpp"
#include "support/oracles.hpp"

using namespace smult;

TEST_CASE("binom follows the truncating convention") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-2, 1) == 0);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(-1, -1) == 0);
}

TEST_CASE("binom agrees with Pascal's triangle") {
  const auto triangle = testing::pascal_triangle(60);
  for (std::int64_t m = 0; m <= 60; ++m) {
    for (std::int64_t n = 0; n <= m; ++n) {
      CHECK(binom(m, n) == triangle[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("Pascal recurrence holds for m, n <= 30") {
  for (std::int64_t m = 1; m <= 30; ++m) {
    for (std::int64_t n = 0; n <= m; ++n) {
      CHECK(binom(m, n) == binom(m - 1, n - 1) + binom(m - 1, n));
    }
  }
}

TEST_CASE("hockeystick telescopes") {
  for (std::int64_t j = 0; j <= 15; ++j)
    for (std::int64_t k = 0; k <= 15; ++k)
      for (std::int64_t c = 0; c <= 15; ++c) {
        BigInteger sum = 0;
        for (std::int64_t i = 0; i <= c; ++i) sum += binom(i + j, k);
        // sum_{x=j}^{c+j} C(x,k) = C(c+j+1,k+1) - C(j,k+1)
        CHECK(sum == binom(c + j + 1, k + 1) - binom(j, k + 1));
      }
}

TEST_CASE("binom exceeds 64 bits without overflow") {
  CHECK(binom(100, 50).get_str() == "100891344545564193334812497256");
}

TEST_CASE("binom memo is per thread") {
  std::vector<std::thread> workers;
  std::vector<BigInteger> results(8);
  for (std::size_t t = 0; t < results.size(); ++t) {
    workers.emplace_back([&results, t] {
      BigInteger acc = 0;
      for (std::int64_t m = 0; m < 80; ++m)
        for (std::int64_t n = 0; n <= m; ++n) acc += binom(m, n);
      results[t] = acc;
    });
  }
  for (auto& w : workers) w.join();
  BigInteger expected = 0;
  for (std::int64_t m = 0; m < 80; ++m) expected += BigInteger(1) << static_cast<mp_bitcnt_t>(m);
  for (const auto& r : results) CHECK(r == expected);
}

TEST_CASE("monus") {
  CHECK(monus(5, 3) == 2);
  CHECK(monus(3, 5) == 0);
  CHECK(monus(4, 4) == 0);
  for (std::int64_t a = -5; a <= 5; ++a)
    for (std::int64_t b = -5; b <= 5; ++b) CHECK(monus(a, b) == (a >= b ? a - b : 0));
}

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_fraction_string(parse_rational("6/4")) == "3/2");
  CHECK(to_fraction_string(parse_rational("3")) == "3/1");
  CHECK(to_fraction_string(parse_rational("-2/-4")) == "1/2");
  CHECK(to_fraction_string(parse_rational("0/7")) == "0/1");
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("floor and ceil are exact") {
  CHECK(floor(make_rational(7, 3)) == 2);
  CHECK(ceil(make_rational(7, 3)) == 3);
  CHECK(floor(make_rational(-7, 3)) == -3);
  CHECK(ceil(make_rational(-7, 3)) == -2);
  CHECK(ceil(make_rational(6, 3)) == 2);
}

TEST_CASE("interpolate") {
  SUBCASE("parabola") {
    const std::vector<InterpolationPoint> pts{{0, 0}, {1, 1}, {2, 4}};
    CHECK(interpolate(pts) == ExactPolynomial({0, 0, 1}));
  }
  SUBCASE("single point gives a constant") {
    const std::vector<InterpolationPoint> pts{{1, make_rational(5, 7)}};
    CHECK(interpolate(pts) == ExactPolynomial({make_rational(5, 7)}));
  }
  SUBCASE("cubic through powers of two") {
    const ExactPolynomial cubic({0, make_rational(-1, 3), 0, make_rational(4, 3)});
    std::vector<InterpolationPoint> pts;
    for (std::int64_t q : {2, 4, 8, 16}) pts.push_back({q, eval(cubic, q)});
    CHECK(interpolate(pts) == cubic);
  }
  SUBCASE("errors") {
    const std::vector<InterpolationPoint> dup{{1, 1}, {1, 2}};
    CHECK_THROWS_AS(interpolate(dup), std::invalid_argument);
    CHECK_THROWS_AS(interpolate(std::span<const InterpolationPoint>{}), std::invalid_argument);
  }
}

TEST_CASE("interpolate then eval reproduces every point") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto count = static_cast<std::size_t>(1 + trial % 8);
    std::vector<InterpolationPoint> pts;
    std::int64_t x = num(rng);
    for (std::size_t k = 0; k < count; ++k) {
      x += 1 + den(rng);
      pts.push_back({x, make_rational(num(rng), den(rng))});
    }
    const auto poly = interpolate(pts);
    CHECK(poly.degree() < static_cast<int>(count));
    for (const auto& p : pts) CHECK(eval(poly, p.x) == p.y);
  }
}

TEST_CASE("eval") {
  CHECK(eval(ExactPolynomial({0, 0, 1}), 3) == 9);
  CHECK(eval(ExactPolynomial({0, make_rational(-1, 3), 0, make_rational(4, 3)}), 2) == 10);
  CHECK(eval(ExactPolynomial(), 7) == 0);
}

TEST_CASE("polynomial display and trimming") {
  CHECK(ExactPolynomial({0, make_rational(-1, 3), 0, make_rational(4, 3)}).to_string() == "4/3 q^3 - 1/3 q");
  CHECK(ExactPolynomial({-1, 1}).to_string() == "q - 1");
  CHECK(ExactPolynomial({0, 0, 0}).is_zero());
  CHECK(ExactPolynomial({1, 0, 0}).degree() == 0);
}

TEST_CASE("polynomial JSON lists coefficients lowest degree first") {
  const ExactPolynomial cubic({0, make_rational(-1, 3), 0, make_rational(4, 3)});
  const auto doc = to_json(cubic);
  CHECK(doc.dump() == R"({"coeffs":["0/1","-1/3","0/1","4/3"]})");
  CHECK(polynomial_from_json(doc) == cubic);
  CHECK(to_json(ExactPolynomial()).dump() == R"({"coeffs":[]})");
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json{{"coeffs", {1, 2}}}), std::invalid_argument);
}
