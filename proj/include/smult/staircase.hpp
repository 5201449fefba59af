#pragma once

// Monomials of k[X], X a generic m x n matrix, as exponent matrices.
//
// A matrix is staircase when no two nonzero entries sit in strict
// northwest/southeast position; its support then runs from the southwest
// corner to the northeast corner. Modulo the 2x2 minors every monomial is
// equivalent to exactly one staircase monomial with the same row and column
// sums, and those sums (the profile) determine it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smult/exactmath.hpp"

namespace smult::staircase {

class ExponentMatrix {
 public:
  ExponentMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument on ragged rows, an empty matrix or a negative entry.
  explicit ExponentMatrix(const std::vector<std::vector<std::int64_t>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  /// 0-based access.
  [[nodiscard]] std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Throws std::invalid_argument if `value` is negative.
  void set(std::size_t i, std::size_t j, std::int64_t value);

  [[nodiscard]] std::int64_t degree() const;
  [[nodiscard]] std::vector<std::vector<std::int64_t>> to_rows() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

struct TupleProfile {
  std::vector<std::int64_t> rows;
  std::vector<std::int64_t> cols;

  [[nodiscard]] bool balanced() const;
  friend bool operator==(const TupleProfile&, const TupleProfile&) = default;
};

bool is_staircase(const ExponentMatrix& e);

/// Staircase with support inside one row plus one column.
bool is_stair(const ExponentMatrix& e);

/// A stair whose witnessing row and column both sum to q.
bool is_q_stair(const ExponentMatrix& e, std::int64_t q);

TupleProfile profile(const ExponentMatrix& e);

/// Rows a < b and columns c < d with e(a,c) e(b,d) != 0.
struct Violation {
  std::size_t a, b, c, d;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// All violating quadruples in lexicographic (a, b, c, d) order.
std::vector<Violation> violations(const ExponentMatrix& e);
std::optional<Violation> first_violation(const ExponentMatrix& e);

/// x_{a,c} x_{b,d} -> x_{a,d} x_{b,c}, the binomial relation of one minor.
/// Precondition: e(a,c) > 0 and e(b,d) > 0.
void exchange(ExponentMatrix& e, const Violation& v);

/// Staircase normal form modulo the 2x2 minors. Each exchange strictly raises
/// sum e(i,j) (i-j)^2, which is bounded for a fixed profile, so this terminates.
ExponentMatrix reduce_to_staircase(ExponentMatrix e);

/// The staircase matrix with the given sums, filled greedily from the
/// northeast corner. Throws std::invalid_argument if the sums differ or any
/// entry is negative.
ExponentMatrix staircase_from_profile(const TupleProfile& t);

/// Staircase monomials of degree < r with all row sums < q or all column sums < q.
/// Counted per degree by inclusion-exclusion over the two events.
BigInteger count_staircase_basis(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q);

/// Same count by listing every profile. Slow; used as ground truth.
BigInteger count_staircase_basis_naive(std::int64_t m, std::int64_t n, std::int64_t r,
                                       std::int64_t q);

}  // namespace smult::staircase
