#include "smult/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace smult {

ExactRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInteger parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return BigInteger(std::string(s), 10);
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(parse_integer(text));
  const auto den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_fraction_string(const ExactRational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal_string(const BigInteger& z) { return z.get_str(); }

BigInteger floor(const ExactRational& r) {
  BigInteger out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

BigInteger ceil(const ExactRational& r) {
  BigInteger out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

BigInteger binom(std::int64_t m, std::int64_t n) {
  if (n < 0 || m < 0 || m < n) return 0;
  const std::int64_t k = std::min(n, m - n);
  if (k == 0) return 1;
  if (k == 1) return big(m);

  thread_local std::map<std::pair<std::int64_t, std::int64_t>, BigInteger> cache;
  const auto key = std::make_pair(m, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // prod_{i=1..k} (m-k+i)/i; every prefix is itself a binomial, so each
  // division is exact.
  BigInteger acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= big(m - k + i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  cache.emplace(key, acc);
  return acc;
}

ExactPolynomial::ExactPolynomial(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void ExactPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRational ExactPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ExactRational(0);
}

ExactRational ExactPolynomial::operator()(const ExactRational& q) const {
  ExactRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string ExactPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const ExactRational& c = coeffs_[k];
    if (c == 0) continue;
    ExactRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << " ";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

ExactPolynomial interpolate(std::span<const InterpolationPoint> points) {
  if (points.empty()) throw std::invalid_argument("interpolate: no points");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].x == points[j].x) {
        throw std::invalid_argument("interpolate: duplicate abscissa " +
                                    std::to_string(points[i].x));
      }
    }
  }

  // In-place divided differences: dd[i] ends as f[x_0..x_i].
  std::vector<ExactRational> dd;
  dd.reserve(n);
  for (const auto& p : points) dd.push_back(p.y);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const ExactRational span(big(points[i].x - points[i - level].x));
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  }

  // Expand the Newton form into monomial coefficients, innermost first.
  std::vector<ExactRational> coeffs{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // coeffs <- coeffs * (q - x_i) + dd[i]
    const ExactRational xi(big(points[i].x));
    std::vector<ExactRational> next(coeffs.size() + 1, ExactRational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= coeffs[k] * xi;
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return ExactPolynomial(std::move(coeffs));
}

ExactRational eval(const ExactPolynomial& poly, std::int64_t q) {
  return poly(ExactRational(big(q)));
}

}  // namespace smult
