#include "smult/multiplicity.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include "smult/length.hpp"

namespace smult::multiplicity {

namespace {

BigInteger factorial(std::int64_t d) {
  BigInteger out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(d));
  return out;
}

ExactRational power(const ExactRational& base, std::int64_t exp) {
  ExactRational out = 1;
  for (std::int64_t k = 0; k < exp; ++k) out *= base;
  return out;
}

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t out = 1;
  for (std::int64_t k = 0; k < exp; ++k) {
    if (out > std::numeric_limits<std::int64_t>::max() / base) {
      throw std::overflow_error("p^e exceeds 64 bits");
    }
    out *= base;
  }
  return out;
}

}  // namespace

ExactRational normalizer(const ExactRational& s, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("normalizer needs d >= 1");
  if (s <= 0) return 0;
  const BigInteger top = floor(s);
  const auto imax = std::min<std::int64_t>(top.get_si(), d);  // C(d,i) = 0 past d
  ExactRational sum = 0;
  for (std::int64_t i = 0; i <= imax; ++i) {
    const ExactRational term = ExactRational(binom(d, i)) * power(s - ExactRational(big(i)), d);
    if (i % 2 == 0) sum += term; else sum -= term;
  }
  return sum / ExactRational(factorial(d));
}

std::optional<std::int64_t> integrality_exponent(const ExactRational& s, std::int64_t p) {
  BigInteger den = s.get_den();
  std::int64_t e = 0;
  while (den != 1) {
    if (den % p != 0) return std::nullopt;
    den /= p;
    ++e;
  }
  return e;
}

LengthFit fit_length_polynomial_detailed(std::int64_t m, std::int64_t n, const ExactRational& s,
                                         std::int64_t p) {
  if (!length::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (s <= 0) throw std::invalid_argument("s must be positive");
  const auto e0 = integrality_exponent(s, p);
  if (!e0) {
    throw std::domain_error("s = " + to_fraction_string(s) + " is not in Z[1/" + std::to_string(p) +
                            "]; the length is not eventually polynomial in q");
  }

  const std::int64_t fit_points = m + n;  // degree <= m+n-1
  const std::int64_t check_points = 2;

  auto attempt = [&](std::int64_t first) -> std::optional<LengthFit> {
    std::vector<InterpolationPoint> samples;
    std::vector<std::int64_t> exponents;
    for (std::int64_t k = 0; k < fit_points + check_points; ++k) {
      const std::int64_t e = first + k;
      const std::int64_t q = ipow(p, e);
      length::LengthQuery query{m, n, s, q, p};
      samples.push_back({q, ExactRational(length::length_closed(query))});
      exponents.push_back(e);
    }
    const std::span<const InterpolationPoint> all(samples);
    ExactPolynomial poly = interpolate(all.first(static_cast<std::size_t>(fit_points)));
    for (const auto& pt : all.subspan(static_cast<std::size_t>(fit_points))) {
      if (eval(poly, pt.x) != pt.y) return std::nullopt;
    }
    return LengthFit{std::move(poly), std::move(exponents), false};
  };

  if (auto fit = attempt(*e0 + 1)) return *fit;
  if (auto fit = attempt(*e0 + 2)) {
    fit->refit = true;
    return *fit;
  }
  throw std::runtime_error("length samples for m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                           ", s=" + to_fraction_string(s) + " do not lie on one polynomial");
}

ExactPolynomial fit_length_polynomial(std::int64_t m, std::int64_t n, const ExactRational& s,
                                      std::int64_t p) {
  return fit_length_polynomial_detailed(m, n, s, p).polynomial;
}

ExactRational h_s_value(std::int64_t m, std::int64_t n, const ExactRational& s, std::int64_t p) {
  return fit_length_polynomial(m, n, s, p).coefficient(static_cast<std::size_t>(m + n - 1));
}

ExactRational e_s_value(std::int64_t m, std::int64_t n, const ExactRational& s, std::int64_t p) {
  return h_s_value(m, n, s, p) / normalizer(s, m + n - 1);
}

MultiplicityResult compute_multiplicity(std::int64_t m, std::int64_t n, const ExactRational& s,
                                        std::int64_t p) {
  auto fit = fit_length_polynomial_detailed(m, n, s, p);
  MultiplicityResult out{m, n, s, p, fit.polynomial, fit.exponents, 0, 0, 0};
  out.h_s = fit.polynomial.coefficient(static_cast<std::size_t>(m + n - 1));
  out.normalizer = normalizer(s, m + n - 1);
  out.e_s = out.h_s / out.normalizer;
  return out;
}

// ---------------------------------------------------------------------------

bool NonPolynomialReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.matches(); });
}

ExactRational four_thirds_branch(std::int64_t e) {
  const ExactRational q(big(ipow(2, e)));
  if (e % 2 != 0) return make_rational(7, 9) * q * q + make_rational(5, 9) * q - make_rational(2, 9);
  return make_rational(7, 9) * q * q + make_rational(7, 9) * q - make_rational(5, 9);
}

NonPolynomialReport nonpolynomial_demo(std::int64_t p, const ExactRational& s, std::int64_t e_max) {
  if (!length::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (s <= 0) throw std::invalid_argument("s must be positive");
  if (e_max < 1) throw std::invalid_argument("e_max must be at least 1");
  if (integrality_exponent(s, p)) {
    throw std::invalid_argument("s = " + to_fraction_string(s) + " lies in Z[1/" +
                                std::to_string(p) + "]; the length is eventually polynomial");
  }
  const bool known_branches = p == 2 && s == make_rational(4, 3);
  NonPolynomialReport report{p, s, {}};
  for (std::int64_t e = 1; e <= e_max; ++e) {
    const std::int64_t q = ipow(p, e);
    const std::int64_t r = length::ceil_sq(s, q);
    NonPolynomialRow row{e, q, r, length::regular_length(2, r, q), std::nullopt};
    if (known_branches) row.expected = four_thirds_branch(e);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace smult::multiplicity
