#pragma once

// Binomial identities behind the T/U closed forms, checked by exact
// summation, plus the colored-chain bijection that proves the product
// identity combinatorially.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smult/exactmath.hpp"

namespace smult::identities {

/// Both sides of an identity evaluated exactly.
struct IdentitySides {
  BigInteger lhs;
  BigInteger rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

/// sum_{w=0}^{min(a,b)} C(c+w, a+b) C(a,w) C(b,w).
BigInteger product_identity_lhs(std::int64_t a, std::int64_t b, std::int64_t c);
/// C(c,a) C(c,b).
BigInteger product_identity_rhs(std::int64_t a, std::int64_t b, std::int64_t c);

/// sum_{i=0}^{c} C(i,a) C(i,b) against sum_j C(c+j+1, a+b+1) C(a,j) C(b,j).
IdentitySides hockeystick_corollary_sides(std::int64_t a, std::int64_t b, std::int64_t c);
bool hockeystick_corollary_check(std::int64_t a, std::int64_t b, std::int64_t c);

/// sum_{i=0}^{c} C(t+i,u) C(v+i,w) against the triple sum over a, b, j.
IdentitySides general_corollary_sides(std::int64_t t, std::int64_t u, std::int64_t v,
                                      std::int64_t w, std::int64_t c);
bool general_corollary_check(std::int64_t t, std::int64_t u, std::int64_t v, std::int64_t w,
                             std::int64_t c);

// ---------------------------------------------------------------------------
// Certificate recurrence

struct IntRange {
  std::int64_t lo;
  std::int64_t hi;  // inclusive
};

struct LatticePoint {
  std::int64_t w;
  std::int64_t a;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct CertificateReport {
  bool holds = true;
  std::size_t checked = 0;
  /// Points where a certificate evaluation hits its pole.
  std::vector<LatticePoint> skipped;
  /// First failing point, if any.
  std::optional<LatticePoint> witness;
};

/// F(w,a) = C(c+w, a+b) C(a,w) C(b,w).
ExactRational wz_summand(std::int64_t w, std::int64_t a, std::int64_t b, std::int64_t c);

/// G(w,a) = w^2 (c+w-a-b) / ((1+a+b)(w-a-1)) F(w,a); nullopt at the pole w = a+1.
std::optional<ExactRational> wz_certificate(std::int64_t w, std::int64_t a, std::int64_t b,
                                            std::int64_t c);

/// Checks G(w+1,a) - G(w,a) = (a-c) F(w,a) + (1+a) F(w,a+1) at every point of
/// the grid. Points where either G is undefined are skipped and reported.
CertificateReport check_wz_certificate(IntRange w_range, IntRange a_range, std::int64_t b,
                                       std::int64_t c);

using LatticeFunction = std::function<std::optional<ExactRational>(std::int64_t w, std::int64_t a)>;

/// The same telescoping check with caller-supplied summand and certificate.
CertificateReport check_telescoping(IntRange w_range, IntRange a_range, std::int64_t c,
                                    const LatticeFunction& summand,
                                    const LatticeFunction& certificate);

// ---------------------------------------------------------------------------
// Colored chains

enum class Color : std::uint8_t { red = 0, blue = 1 };

/// Ordered by value, then red before blue.
struct ColoredInteger {
  std::int64_t value;
  Color color;
  friend auto operator<=>(const ColoredInteger&, const ColoredInteger&) = default;
};

/// Strictly increasing chain of colored integers with values in [1, c].
/// Stored as the sorted red values and the sorted blue values.
class ColoredChain {
 public:
  /// Throws std::invalid_argument on unsorted or repeated values, or values outside [1, c].
  ColoredChain(std::vector<std::int64_t> reds, std::vector<std::int64_t> blues, std::int64_t c);

  /// Parses "1r<2r<3r<4b". The empty string is the empty chain.
  static ColoredChain parse(std::string_view text, std::int64_t c);

  [[nodiscard]] std::int64_t a() const noexcept { return static_cast<std::int64_t>(reds_.size()); }
  [[nodiscard]] std::int64_t b() const noexcept { return static_cast<std::int64_t>(blues_.size()); }
  [[nodiscard]] std::int64_t c() const noexcept { return c_; }
  [[nodiscard]] const std::vector<std::int64_t>& reds() const noexcept { return reds_; }
  [[nodiscard]] const std::vector<std::int64_t>& blues() const noexcept { return blues_; }

  /// The chain in colored order.
  [[nodiscard]] std::vector<ColoredInteger> elements() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ColoredChain&, const ColoredChain&) = default;

 private:
  std::vector<std::int64_t> reds_;
  std::vector<std::int64_t> blues_;
  std::int64_t c_;
};

/// (w, A, B, C) with A in [a], B in [b], C in [c+w]; all sets sorted, 1-based.
struct ChainCode {
  std::int64_t w = 0;
  std::vector<std::int64_t> A;
  std::vector<std::int64_t> B;
  std::vector<std::int64_t> C;
  friend bool operator==(const ChainCode&, const ChainCode&) = default;
  friend auto operator<=>(const ChainCode&, const ChainCode&) = default;
};

/// Throws std::invalid_argument when the code breaks its size or range constraints.
void validate_code(const ChainCode& code, std::int64_t a, std::int64_t b, std::int64_t c);

std::string to_string(const ChainCode& code);

/// phi: records the rb-pairs and which of them are stable.
ChainCode encode_chain(const ColoredChain& chain);

/// psi: inverse of encode_chain.
ColoredChain decode_chain(const ChainCode& code, std::int64_t a, std::int64_t b, std::int64_t c);

/// Every chain of type (a,b) over [c], in lexicographic order of (reds, blues).
std::vector<ColoredChain> enumerate_chains(std::int64_t a, std::int64_t b, std::int64_t c);

/// Every valid code for type (a,b) over [c].
std::vector<ChainCode> enumerate_codes(std::int64_t a, std::int64_t b, std::int64_t c);

// ---------------------------------------------------------------------------
// Sweep report

struct SweepBounds {
  std::int64_t product_max = 12;
  std::int64_t hockeystick_ab_max = 8;
  std::int64_t hockeystick_c_max = 12;
  std::int64_t general_max = 6;
  std::int64_t wz_max = 10;
  std::int64_t bijection_ab_max = 3;
  std::int64_t bijection_c_max = 4;

  /// Every bound set to `n`.
  static SweepBounds uniform(std::int64_t n);
};

struct IdentityResult {
  std::string name;
  std::string range;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  bool passed = true;
  std::optional<std::string> witness;
};

std::vector<IdentityResult> verify_all(const SweepBounds& bounds);

}  // namespace smult::identities
