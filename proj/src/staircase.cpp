#include "smult/staircase.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "smult/counting.hpp"

namespace smult::staircase {

ExponentMatrix::ExponentMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("exponent matrix must be nonempty");
}

ExponentMatrix::ExponentMatrix(const std::vector<std::vector<std::int64_t>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("exponent matrix must be nonempty");
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("exponent matrix rows differ in length");
    for (auto v : row) {
      if (v < 0) throw std::invalid_argument("exponent matrix entries must be nonnegative");
      data_.push_back(v);
    }
  }
}

void ExponentMatrix::set(std::size_t i, std::size_t j, std::int64_t value) {
  if (value < 0) throw std::invalid_argument("exponent matrix entries must be nonnegative");
  data_.at(i * cols_ + j) = value;
}

std::int64_t ExponentMatrix::degree() const {
  return std::accumulate(data_.begin(), data_.end(), std::int64_t{0});
}

std::vector<std::vector<std::int64_t>> ExponentMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  return out;
}

std::string ExponentMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

bool TupleProfile::balanced() const {
  const auto r = std::accumulate(rows.begin(), rows.end(), std::int64_t{0});
  const auto c = std::accumulate(cols.begin(), cols.end(), std::int64_t{0});
  return r == c;
}

std::vector<Violation> violations(const ExponentMatrix& e) {
  std::vector<Violation> out;
  for (std::size_t a = 0; a < e.rows(); ++a)
    for (std::size_t b = a + 1; b < e.rows(); ++b)
      for (std::size_t c = 0; c < e.cols(); ++c) {
        if (e(a, c) == 0) continue;
        for (std::size_t d = c + 1; d < e.cols(); ++d) {
          if (e(b, d) != 0) out.push_back({a, b, c, d});
        }
      }
  return out;
}

std::optional<Violation> first_violation(const ExponentMatrix& e) {
  for (std::size_t a = 0; a < e.rows(); ++a)
    for (std::size_t b = a + 1; b < e.rows(); ++b)
      for (std::size_t c = 0; c < e.cols(); ++c) {
        if (e(a, c) == 0) continue;
        for (std::size_t d = c + 1; d < e.cols(); ++d) {
          if (e(b, d) != 0) return Violation{a, b, c, d};
        }
      }
  return std::nullopt;
}

bool is_staircase(const ExponentMatrix& e) { return !first_violation(e).has_value(); }

namespace {

// Support confined to row c and column d.
bool supported_on_cross(const ExponentMatrix& e, std::size_t c, std::size_t d) {
  for (std::size_t l = 0; l < e.rows(); ++l)
    for (std::size_t k = 0; k < e.cols(); ++k)
      if (l != c && k != d && e(l, k) != 0) return false;
  return true;
}

std::int64_t row_sum(const ExponentMatrix& e, std::size_t i) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < e.cols(); ++j) s += e(i, j);
  return s;
}

std::int64_t col_sum(const ExponentMatrix& e, std::size_t j) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) s += e(i, j);
  return s;
}

}  // namespace

bool is_stair(const ExponentMatrix& e) {
  if (!is_staircase(e)) return false;
  for (std::size_t c = 0; c < e.rows(); ++c)
    for (std::size_t d = 0; d < e.cols(); ++d)
      if (supported_on_cross(e, c, d)) return true;
  return false;
}

bool is_q_stair(const ExponentMatrix& e, std::int64_t q) {
  if (!is_staircase(e)) return false;
  for (std::size_t c = 0; c < e.rows(); ++c)
    for (std::size_t d = 0; d < e.cols(); ++d)
      if (supported_on_cross(e, c, d) && row_sum(e, c) == q && col_sum(e, d) == q) return true;
  return false;
}

TupleProfile profile(const ExponentMatrix& e) {
  TupleProfile t;
  for (std::size_t i = 0; i < e.rows(); ++i) t.rows.push_back(row_sum(e, i));
  for (std::size_t j = 0; j < e.cols(); ++j) t.cols.push_back(col_sum(e, j));
  return t;
}

void exchange(ExponentMatrix& e, const Violation& v) {
  if (e(v.a, v.c) <= 0 || e(v.b, v.d) <= 0) {
    throw std::invalid_argument("exchange needs positive entries at (a,c) and (b,d)");
  }
  e.set(v.a, v.c, e(v.a, v.c) - 1);
  e.set(v.b, v.d, e(v.b, v.d) - 1);
  e.set(v.a, v.d, e(v.a, v.d) + 1);
  e.set(v.b, v.c, e(v.b, v.c) + 1);
}

ExponentMatrix reduce_to_staircase(ExponentMatrix e) {
  while (auto v = first_violation(e)) exchange(e, *v);
  return e;
}

ExponentMatrix staircase_from_profile(const TupleProfile& t) {
  if (t.rows.empty() || t.cols.empty()) throw std::invalid_argument("profile must be nonempty");
  auto negative = [](std::int64_t x) { return x < 0; };
  if (std::any_of(t.rows.begin(), t.rows.end(), negative) ||
      std::any_of(t.cols.begin(), t.cols.end(), negative)) {
    throw std::invalid_argument("profile entries must be nonnegative");
  }
  if (!t.balanced()) throw std::invalid_argument("profile row and column sums differ");

  ExponentMatrix e(t.rows.size(), t.cols.size());
  auto row_left = t.rows;
  auto col_left = t.cols;
  // Walk from the northeast corner towards the southwest.
  std::size_t i = 0;
  std::size_t j = t.cols.size() - 1;
  while (i < t.rows.size()) {
    const auto take = std::min(row_left[i], col_left[j]);
    e.set(i, j, take);
    row_left[i] -= take;
    col_left[j] -= take;
    if (row_left[i] == 0) {
      ++i;
    } else if (j == 0) {
      break;  // unreachable for balanced profiles
    } else {
      --j;
    }
  }
  return e;
}

BigInteger count_staircase_basis(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q) {
  if (m < 1 || n < 1 || r < 0 || q < 1) {
    throw std::invalid_argument("count_staircase_basis needs m, n >= 1, r >= 0, q >= 1");
  }
  if (r == 0) return 0;
  const auto rows_small = counting::bounded_composition_table(m, r - 1, q);
  const auto cols_small = counting::bounded_composition_table(n, r - 1, q);
  BigInteger total = 0;
  for (std::int64_t d = 0; d < r; ++d) {
    const auto ud = static_cast<std::size_t>(d);
    const BigInteger rows_all = binom(d + m - 1, m - 1);
    const BigInteger cols_all = binom(d + n - 1, n - 1);
    total += rows_small[ud] * cols_all + rows_all * cols_small[ud] - rows_small[ud] * cols_small[ud];
  }
  return total;
}

namespace {

// Calls `visit` with every tuple of `parts` nonnegative integers summing to `total`.
void for_each_composition(std::int64_t parts, std::int64_t total,
                          const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> tuple(static_cast<std::size_t>(parts), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t left) {
    if (k + 1 == tuple.size()) {
      tuple[k] = left;
      visit(tuple);
      return;
    }
    for (std::int64_t z = 0; z <= left; ++z) {
      tuple[k] = z;
      rec(k + 1, left - z);
    }
  };
  rec(0, total);
}

}  // namespace

BigInteger count_staircase_basis_naive(std::int64_t m, std::int64_t n, std::int64_t r,
                                       std::int64_t q) {
  if (m < 1 || n < 1 || r < 0 || q < 1) {
    throw std::invalid_argument("count_staircase_basis_naive needs m, n >= 1, r >= 0, q >= 1");
  }
  auto all_below = [q](const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [q](std::int64_t x) { return x < q; });
  };
  BigInteger count = 0;
  for (std::int64_t d = 0; d < r; ++d) {
    std::vector<std::vector<std::int64_t>> xs;
    for_each_composition(m, d, [&](const auto& x) { xs.push_back(x); });
    for_each_composition(n, d, [&](const auto& y) {
      for (const auto& x : xs) {
        if (all_below(x) || all_below(y)) ++count;
      }
    });
  }
  return count;
}

}  // namespace smult::staircase
