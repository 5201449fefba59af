#pragma once

// Exact integers, rationals and univariate polynomials over the rationals.
//
// BigInteger and ExactRational are GMP's C++ classes. Rationals built through
// make_rational() or parse_rational() are always canonical: lowest terms and a
// positive denominator.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace smult {

using BigInteger = mpz_class;
using ExactRational = mpq_class;

static_assert(sizeof(long) == sizeof(std::int64_t), "gmpxx conversions assume LP64");

inline BigInteger big(std::int64_t v) { return BigInteger(static_cast<long>(v)); }

/// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
ExactRational make_rational(const BigInteger& num, const BigInteger& den = 1);

/// Parses "NUM/DEN" or "NUM". Decimal notation is rejected.
ExactRational parse_rational(std::string_view text);

/// Always "num/den", including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const ExactRational& r);

std::string to_decimal_string(const BigInteger& z);

BigInteger floor(const ExactRational& r);
BigInteger ceil(const ExactRational& r);

/// Binomial coefficient with the truncating convention: zero whenever
/// n < 0, m < 0 or m < n. Memoized per thread.
BigInteger binom(std::int64_t m, std::int64_t n);

/// Truncated subtraction max(a - b, 0).
constexpr std::int64_t monus(std::int64_t a, std::int64_t b) noexcept {
  return a > b ? a - b : 0;
}

/// Univariate polynomial in q with rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<ExactRational> coeffs);

  [[nodiscard]] const std::vector<ExactRational>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of q^k; zero past the degree.
  [[nodiscard]] ExactRational coefficient(std::size_t k) const;

  [[nodiscard]] ExactRational operator()(const ExactRational& q) const;

  /// Human-readable form such as "4/3 q^3 - 1/3 q".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

 private:
  void trim();
  std::vector<ExactRational> coeffs_;
};

struct InterpolationPoint {
  std::int64_t x;
  ExactRational y;
};

/// Newton divided differences. Throws std::invalid_argument on an empty
/// input or a repeated abscissa.
ExactPolynomial interpolate(std::span<const InterpolationPoint> points);

/// Horner evaluation at an integer point.
ExactRational eval(const ExactPolynomial& poly, std::int64_t q);

}  // namespace smult
