#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "smult/length.hpp"
#include "smult/staircase.hpp"
#include "support/oracles.hpp"

using namespace smult;
using namespace smult::staircase;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

ExponentMatrix from_flat(std::size_t m, std::size_t n, const std::vector<std::int64_t>& flat) {
  ExponentMatrix e(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) e.set(i, j, flat[i * n + j]);
  return e;
}

void for_each_matrix(std::size_t m, std::size_t n, std::int64_t max_entry,
                     const std::function<void(const ExponentMatrix&)>& visit) {
  testing::for_each_box_point(m * n, max_entry + 1,
                              [&](const auto& flat) { visit(from_flat(m, n, flat)); });
}

bool dominated(const ExponentMatrix& d, const ExponentMatrix& e) {
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (d(i, j) > e(i, j)) return false;
  return true;
}

bool has_q_stair_divisor(const ExponentMatrix& e, std::int64_t q) {
  bool found = false;
  for_each_matrix(e.rows(), e.cols(), q, [&](const ExponentMatrix& d) {
    if (!found && dominated(d, e) && is_q_stair(d, q)) found = true;
  });
  return found;
}

bool avoids_frobenius(const TupleProfile& t, std::int64_t q) {
  auto below = [q](const std::vector<std::int64_t>& v) {
    for (auto x : v)
      if (x >= q) return false;
    return true;
  };
  return below(t.rows) || below(t.cols);
}

/// Every staircase matrix reachable from `e` by exchanges in any order.
void all_normal_forms(const ExponentMatrix& e, std::set<Rows>& out, std::set<Rows>& seen) {
  if (!seen.insert(e.to_rows()).second) return;
  const auto vs = violations(e);
  if (vs.empty()) {
    out.insert(e.to_rows());
    return;
  }
  for (const auto& v : vs) {
    ExponentMatrix next = e;
    exchange(next, v);
    all_normal_forms(next, out, seen);
  }
}

}  // namespace

TEST_CASE("exponent matrix construction") {
  CHECK_THROWS_AS(ExponentMatrix(Rows{}), std::invalid_argument);
  CHECK_THROWS_AS(ExponentMatrix(Rows{{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(ExponentMatrix(Rows{{1, -1}}), std::invalid_argument);
  ExponentMatrix e(2, 3);
  CHECK_THROWS_AS(e.set(0, 0, -2), std::invalid_argument);
  e.set(1, 2, 4);
  CHECK(e.degree() == 4);
  CHECK(e.to_rows() == Rows{{0, 0, 0}, {0, 0, 4}});
}

TEST_CASE("staircase predicate") {
  CHECK(is_staircase(ExponentMatrix(Rows{{0, 1}, {1, 0}})));
  CHECK_FALSE(is_staircase(ExponentMatrix(Rows{{1, 0}, {0, 1}})));
  CHECK(is_staircase(ExponentMatrix(Rows{{0, 2}, {2, 0}})));
  CHECK(is_staircase(ExponentMatrix(Rows{{3, 1, 0}, {0, 2, 0}, {0, 5, 0}})) == false);
  CHECK(is_staircase(ExponentMatrix(Rows{{0, 1, 2}, {0, 3, 0}, {4, 5, 0}})));
}

TEST_CASE("stair and q-stair") {
  const ExponentMatrix cross(Rows{{0, 2}, {2, 0}});
  CHECK(is_stair(cross));
  CHECK(is_q_stair(cross, 2));
  CHECK_FALSE(is_q_stair(cross, 3));

  const ExponentMatrix zero(2, 2);
  CHECK(is_stair(zero));
  for (std::int64_t q = 1; q <= 4; ++q) CHECK_FALSE(is_q_stair(zero, q));

  CHECK_FALSE(is_stair(ExponentMatrix(Rows{{1, 1}, {1, 1}})));
  CHECK_FALSE(is_stair(ExponentMatrix(Rows{{1, 0}, {0, 1}})));
  CHECK(is_stair(ExponentMatrix(Rows{{0, 0, 1}, {2, 1, 3}, {0, 0, 0}})));
}

TEST_CASE("profile") {
  CHECK(profile(ExponentMatrix(Rows{{0, 1}, {1, 0}})) == TupleProfile{{1, 1}, {1, 1}});
  CHECK(profile(ExponentMatrix(Rows{{1, 1}, {1, 1}})) == TupleProfile{{2, 2}, {2, 2}});
  CHECK(profile(ExponentMatrix(2, 3)) == TupleProfile{{0, 0}, {0, 0, 0}});
}

TEST_CASE("reduction: worked examples") {
  CHECK(reduce_to_staircase(ExponentMatrix(Rows{{1, 0}, {0, 1}})) == ExponentMatrix(Rows{{0, 1}, {1, 0}}));
  CHECK(reduce_to_staircase(ExponentMatrix(Rows{{1, 1}, {1, 1}})) == ExponentMatrix(Rows{{0, 2}, {2, 0}}));
  const ExponentMatrix stair(Rows{{0, 1, 2}, {0, 3, 0}, {4, 5, 0}});
  CHECK(reduce_to_staircase(stair) == stair);
}

TEST_CASE("a single exchange moves mass off the main diagonal") {
  ExponentMatrix e(Rows{{1, 0}, {0, 1}});
  const auto v = first_violation(e);
  REQUIRE(v.has_value());
  CHECK(*v == Violation{0, 1, 0, 1});
  exchange(e, *v);
  CHECK(e == ExponentMatrix(Rows{{0, 1}, {1, 0}}));
  CHECK_FALSE(first_violation(e).has_value());
}

TEST_CASE("reduction is exhaustive for entries <= 2, m, n <= 3") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      for_each_matrix(m, n, 2, [&](const ExponentMatrix& e) {
        const auto reduced = reduce_to_staircase(e);
        REQUIRE(is_staircase(reduced));
        REQUIRE(profile(reduced) == profile(e));
        REQUIRE(reduced == staircase_from_profile(profile(e)));
      });
}

TEST_CASE("reduction on random larger matrices") {
  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_int_distribution<std::int64_t> entry(0, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    ExponentMatrix e(dim(rng), dim(rng));
    for (std::size_t i = 0; i < e.rows(); ++i)
      for (std::size_t j = 0; j < e.cols(); ++j) e.set(i, j, entry(rng));
    const auto reduced = reduce_to_staircase(e);
    REQUIRE(is_staircase(reduced));
    REQUIRE(profile(reduced) == profile(e));
  }
}

TEST_CASE("every order of exchanges reaches the same normal form") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      if (m * n > 6) continue;
      for_each_matrix(m, n, 2, [&](const ExponentMatrix& e) {
        std::set<Rows> forms;
        std::set<Rows> seen;
        all_normal_forms(e, forms, seen);
        REQUIRE(forms.size() == 1);
        CHECK(*forms.begin() == reduce_to_staircase(e).to_rows());
      });
    }
  std::set<Rows> forms;
  std::set<Rows> seen;
  all_normal_forms(ExponentMatrix(Rows{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), forms, seen);
  CHECK(forms.size() == 1);
}

TEST_CASE("staircase from profile: worked examples and errors") {
  CHECK(staircase_from_profile({{1, 1}, {1, 1}}) == ExponentMatrix(Rows{{0, 1}, {1, 0}}));
  CHECK(staircase_from_profile({{2, 2}, {2, 2}}) == ExponentMatrix(Rows{{0, 2}, {2, 0}}));
  CHECK(staircase_from_profile({{0, 0, 0}, {0, 0}}) == ExponentMatrix(3, 2));
  CHECK_THROWS_AS(staircase_from_profile({{1, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(staircase_from_profile({{2, -1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(staircase_from_profile({{}, {}}), std::invalid_argument);
}

TEST_CASE("profile round trip for totals <= 6") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      testing::for_each_box_point(m + n, 7, [&](const auto& t) {
        const auto rows_total = testing::sum_of(t, 0, m);
        if (rows_total > 6 || rows_total != testing::sum_of(t, m, m + n)) return;
        const TupleProfile tp{{t.begin(), t.begin() + static_cast<std::ptrdiff_t>(m)},
                              {t.begin() + static_cast<std::ptrdiff_t>(m), t.end()}};
        const auto e = staircase_from_profile(tp);
        REQUIRE(is_staircase(e));
        REQUIRE(profile(e) == tp);
      });
}

TEST_CASE("each realizable profile has exactly one staircase matrix") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, int> count;
      for_each_matrix(m, n, 3, [&](const ExponentMatrix& e) {
        if (!is_staircase(e)) return;
        REQUIRE(staircase_from_profile(profile(e)) == e);
        const auto p = profile(e);
        ++count[{p.rows, p.cols}];
      });
      for (const auto& [key, c] : count) REQUIRE(c == 1);
    }
}

TEST_CASE("staircase monomials outside the Frobenius power are the q-stair multiples") {
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 2; ++n)
      for_each_matrix(m, n, 2, [&](const ExponentMatrix& e) {
        if (!is_staircase(e)) return;
        CAPTURE(e.to_string());
        CHECK(avoids_frobenius(profile(e), 2) == !has_q_stair_divisor(e, 2));
      });
}

TEST_CASE("basis count") {
  CHECK(count_staircase_basis(2, 2, 6, 2) == 10);
  CHECK(count_staircase_basis(2, 3, 6, 2) == 23);
  CHECK(count_staircase_basis_naive(2, 3, 6, 2) == 23);
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t n = 1; n <= 3; ++n) CHECK(count_staircase_basis(m, n, 0, 3) == 0);
}

TEST_CASE("basis count agrees with the naive lister and with T + T - U") {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t n = 1; n <= 3; ++n)
      for (std::int64_t q : {1, 2, 3})
        for (std::int64_t r = 0; r <= 3 * q + 1; ++r) {
          const auto fast = count_staircase_basis(m, n, r, q);
          CHECK(fast == count_staircase_basis_naive(m, n, r, q));
          CHECK(fast == length::length_TU(m, n, r, q));
        }
}

TEST_CASE("basis count matches listing staircase matrices directly") {
  // Degree < 4 with entries <= 3 covers every relevant staircase matrix.
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::int64_t q : {1, 2, 3}) {
        std::int64_t listed = 0;
        for_each_matrix(m, n, 3, [&](const ExponentMatrix& e) {
          if (e.degree() < 4 && is_staircase(e) && avoids_frobenius(profile(e), q)) ++listed;
        });
        CHECK(count_staircase_basis(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), 4, q) == listed);
      }
}
