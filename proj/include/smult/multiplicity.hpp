#pragma once

// The s-multiplicity of k[X]/I_2(X).
//
// For s in Z[1/p] the length at q = p^e is a polynomial in q of degree
// m+n-1 (the ring dimension). We recover that polynomial exactly by
// interpolating closed-form lengths at powers of p, read h_s off its leading
// coefficient, and divide by the regular-ring normalizer to get e_s.

#include <cstdint>
#include <optional>
#include <vector>

#include "smult/exactmath.hpp"

namespace smult::multiplicity {

/// Volume of {x in [0,1]^d : sum x <= s}:
///   sum_{i=0}^{floor s} (-1)^i / d! C(d,i) (s-i)^d.
/// Returns 0 for s <= 0. Throws std::invalid_argument for d < 1.
ExactRational normalizer(const ExactRational& s, std::int64_t d);

/// Smallest e >= 0 with s p^e integral, or nullopt if the denominator of s
/// is not a power of p.
std::optional<std::int64_t> integrality_exponent(const ExactRational& s, std::int64_t p);

struct LengthFit {
  ExactPolynomial polynomial;
  /// Frobenius exponents sampled; the last two were verification samples.
  std::vector<std::int64_t> exponents;
  /// True when the first window failed verification and the fit was redone one exponent later.
  bool refit = false;
};

/// Throws std::domain_error when s is not in Z[1/p], and std::runtime_error
/// if both fitting windows fail verification.
LengthFit fit_length_polynomial_detailed(std::int64_t m, std::int64_t n, const ExactRational& s,
                                         std::int64_t p);

ExactPolynomial fit_length_polynomial(std::int64_t m, std::int64_t n, const ExactRational& s,
                                      std::int64_t p);

/// Coefficient of q^{m+n-1} of the fitted length polynomial.
ExactRational h_s_value(std::int64_t m, std::int64_t n, const ExactRational& s, std::int64_t p);

/// h_s / normalizer(s, m+n-1).
ExactRational e_s_value(std::int64_t m, std::int64_t n, const ExactRational& s, std::int64_t p);

struct MultiplicityResult {
  std::int64_t m;
  std::int64_t n;
  ExactRational s;
  std::int64_t p;
  ExactPolynomial fitted_polynomial;
  std::vector<std::int64_t> exponents;
  ExactRational h_s;
  ExactRational normalizer;
  ExactRational e_s;
};

MultiplicityResult compute_multiplicity(std::int64_t m, std::int64_t n, const ExactRational& s,
                                        std::int64_t p);

// ---------------------------------------------------------------------------
// Lengths in k[x,y] at s outside Z[1/p], where no single polynomial exists.

struct NonPolynomialRow {
  std::int64_t e;
  std::int64_t q;
  std::int64_t r;  // ceil(s q)
  BigInteger length;
  /// Closed form for this parity, only for p = 2, s = 4/3.
  std::optional<ExactRational> expected;
  [[nodiscard]] bool matches() const { return !expected || ExactRational(length) == *expected; }
};

struct NonPolynomialReport {
  std::int64_t p;
  ExactRational s;
  std::vector<NonPolynomialRow> rows;
  [[nodiscard]] bool all_match() const;
};

/// Odd e:  7/9 q^2 + 5/9 q - 2/9.  Even e: 7/9 q^2 + 7/9 q - 5/9.
ExactRational four_thirds_branch(std::int64_t e);

/// Throws std::invalid_argument if s lies in Z[1/p] or e_max < 1.
NonPolynomialReport nonpolynomial_demo(std::int64_t p, const ExactRational& s, std::int64_t e_max);

}  // namespace smult::multiplicity
