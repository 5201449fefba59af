#include "smult/identities.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace smult::identities {

BigInteger product_identity_lhs(std::int64_t a, std::int64_t b, std::int64_t c) {
  BigInteger sum = 0;
  for (std::int64_t w = 0; w <= std::min(a, b); ++w) {
    sum += binom(c + w, a + b) * binom(a, w) * binom(b, w);
  }
  return sum;
}

BigInteger product_identity_rhs(std::int64_t a, std::int64_t b, std::int64_t c) {
  return binom(c, a) * binom(c, b);
}

IdentitySides hockeystick_corollary_sides(std::int64_t a, std::int64_t b, std::int64_t c) {
  IdentitySides sides{0, 0};
  for (std::int64_t i = 0; i <= c; ++i) sides.lhs += binom(i, a) * binom(i, b);
  for (std::int64_t j = 0; j <= std::min(a, b); ++j) {
    sides.rhs += binom(c + j + 1, a + b + 1) * binom(a, j) * binom(b, j);
  }
  return sides;
}

bool hockeystick_corollary_check(std::int64_t a, std::int64_t b, std::int64_t c) {
  return hockeystick_corollary_sides(a, b, c).holds();
}

IdentitySides general_corollary_sides(std::int64_t t, std::int64_t u, std::int64_t v,
                                      std::int64_t w, std::int64_t c) {
  IdentitySides sides{0, 0};
  for (std::int64_t i = 0; i <= c; ++i) sides.lhs += binom(t + i, u) * binom(v + i, w);
  // C(t, u-a) vanishes unless 0 <= a <= u, likewise b <= w.
  for (std::int64_t a = 0; a <= u; ++a) {
    const BigInteger ta = binom(t, u - a);
    if (ta == 0) continue;
    for (std::int64_t b = 0; b <= w; ++b) {
      const BigInteger vb = binom(v, w - b);
      if (vb == 0) continue;
      for (std::int64_t j = 0; j <= std::min(a, b); ++j) {
        sides.rhs += ta * vb * binom(c + j + 1, a + b + 1) * binom(a, j) * binom(b, j);
      }
    }
  }
  return sides;
}

bool general_corollary_check(std::int64_t t, std::int64_t u, std::int64_t v, std::int64_t w,
                             std::int64_t c) {
  return general_corollary_sides(t, u, v, w, c).holds();
}

// ---------------------------------------------------------------------------

ExactRational wz_summand(std::int64_t w, std::int64_t a, std::int64_t b, std::int64_t c) {
  return ExactRational(binom(c + w, a + b) * binom(a, w) * binom(b, w));
}

std::optional<ExactRational> wz_certificate(std::int64_t w, std::int64_t a, std::int64_t b,
                                            std::int64_t c) {
  const std::int64_t pole = w - a - 1;
  if (pole == 0) return std::nullopt;
  const BigInteger num = big(w) * big(w) * big(c + w - a - b);
  const BigInteger den = big(1 + a + b) * big(pole);
  return make_rational(num, den) * wz_summand(w, a, b, c);
}

CertificateReport check_telescoping(IntRange w_range, IntRange a_range, std::int64_t c,
                                    const LatticeFunction& summand,
                                    const LatticeFunction& certificate) {
  CertificateReport report;
  for (std::int64_t a = a_range.lo; a <= a_range.hi; ++a) {
    for (std::int64_t w = w_range.lo; w <= w_range.hi; ++w) {
      const auto g_next = certificate(w + 1, a);
      const auto g_here = certificate(w, a);
      const auto f_here = summand(w, a);
      const auto f_up = summand(w, a + 1);
      if (!g_next || !g_here || !f_here || !f_up) {
        report.skipped.push_back({w, a});
        continue;
      }
      ++report.checked;
      const ExactRational lhs = *g_next - *g_here;
      const ExactRational rhs = ExactRational(big(a - c)) * *f_here + ExactRational(big(1 + a)) * *f_up;
      if (lhs != rhs && report.holds) {
        report.holds = false;
        report.witness = LatticePoint{w, a};
      }
    }
  }
  return report;
}

CertificateReport check_wz_certificate(IntRange w_range, IntRange a_range, std::int64_t b,
                                       std::int64_t c) {
  return check_telescoping(
      w_range, a_range, c,
      [b, c](std::int64_t w, std::int64_t a) -> std::optional<ExactRational> {
        return wz_summand(w, a, b, c);
      },
      [b, c](std::int64_t w, std::int64_t a) { return wz_certificate(w, a, b, c); });
}

// ---------------------------------------------------------------------------

namespace {

void require_strictly_increasing(const std::vector<std::int64_t>& values, std::int64_t lo,
                                 std::int64_t hi, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < lo || values[i] > hi) {
      throw std::invalid_argument(std::string(what) + " value " + std::to_string(values[i]) +
                                  " outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                  "]");
    }
    if (i > 0 && values[i] <= values[i - 1]) {
      throw std::invalid_argument(std::string(what) + " values not strictly increasing");
    }
  }
}

// All k-subsets of {1..n}, each sorted, in lexicographic order.
std::vector<std::vector<std::int64_t>> subsets(std::int64_t n, std::int64_t k) {
  std::vector<std::vector<std::int64_t>> out;
  if (k < 0 || k > n) return out;
  std::vector<std::int64_t> current(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(current);
    std::int64_t i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < k; ++j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::string set_string(const std::vector<std::int64_t>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace

ColoredChain::ColoredChain(std::vector<std::int64_t> reds, std::vector<std::int64_t> blues,
                           std::int64_t c)
    : reds_(std::move(reds)), blues_(std::move(blues)), c_(c) {
  if (c_ < 0) throw std::invalid_argument("chain value bound must be nonnegative");
  require_strictly_increasing(reds_, 1, c_, "red");
  require_strictly_increasing(blues_, 1, c_, "blue");
}

ColoredChain ColoredChain::parse(std::string_view text, std::int64_t c) {
  std::vector<std::int64_t> reds;
  std::vector<std::int64_t> blues;
  std::vector<ColoredInteger> seen;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('<', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.size() < 2) throw std::invalid_argument("malformed chain element '" + std::string(token) + "'");
    const char tag = token.back();
    if (tag != 'r' && tag != 'b') {
      throw std::invalid_argument("chain element must end in r or b: '" + std::string(token) + "'");
    }
    const std::string digits(token.substr(0, token.size() - 1));
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw std::invalid_argument("malformed chain value '" + digits + "'");
    }
    const ColoredInteger x{std::stoll(digits), tag == 'r' ? Color::red : Color::blue};
    if (!seen.empty() && !(seen.back() < x)) {
      throw std::invalid_argument("chain is not strictly increasing at '" + std::string(token) + "'");
    }
    seen.push_back(x);
    (x.color == Color::red ? reds : blues).push_back(x.value);
    pos = end + 1;
  }
  return ColoredChain(std::move(reds), std::move(blues), c);
}

std::vector<ColoredInteger> ColoredChain::elements() const {
  std::vector<ColoredInteger> out;
  out.reserve(reds_.size() + blues_.size());
  for (auto v : reds_) out.push_back({v, Color::red});
  for (auto v : blues_) out.push_back({v, Color::blue});
  std::sort(out.begin(), out.end());
  return out;
}

std::string ColoredChain::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : elements()) {
    if (!first) os << "<";
    first = false;
    os << x.value << (x.color == Color::red ? 'r' : 'b');
  }
  return os.str();
}

void validate_code(const ChainCode& code, std::int64_t a, std::int64_t b, std::int64_t c) {
  auto fail = [](const std::string& why) { throw std::invalid_argument("invalid chain code: " + why); };
  if (a < 0 || b < 0 || c < 0) fail("negative type parameters");
  if (code.w < 0) fail("negative w");
  if (static_cast<std::int64_t>(code.A.size()) != code.w) fail("|A| != w");
  if (static_cast<std::int64_t>(code.B.size()) != code.w) fail("|B| != w");
  if (static_cast<std::int64_t>(code.C.size()) != a + b) fail("|C| != a+b");
  try {
    require_strictly_increasing(code.A, 1, a, "A");
    require_strictly_increasing(code.B, 1, b, "B");
    require_strictly_increasing(code.C, 1, c + code.w, "C");
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::string to_string(const ChainCode& code) {
  return "(" + std::to_string(code.w) + ", " + set_string(code.A) + ", " + set_string(code.B) +
         ", " + set_string(code.C) + ")";
}

ChainCode encode_chain(const ColoredChain& chain) {
  const auto xs = chain.elements();
  ChainCode code;
  std::vector<bool> stable;  // indexed like A
  std::int64_t red_index = 0;
  std::int64_t blue_index = 0;
  for (std::size_t pos = 0; pos < xs.size(); ++pos) {
    if (xs[pos].color == Color::red) {
      ++red_index;
      if (pos + 1 < xs.size() && xs[pos + 1].color == Color::blue) {
        code.A.push_back(red_index);
        stable.push_back(xs[pos + 1].value == xs[pos].value);
      }
    } else {
      ++blue_index;
      if (pos > 0 && xs[pos - 1].color == Color::red) code.B.push_back(blue_index);
    }
  }
  code.w = static_cast<std::int64_t>(code.A.size());

  std::set<std::int64_t> values;
  for (const auto& x : xs) values.insert(x.value);
  code.C.assign(values.begin(), values.end());
  for (std::size_t k = 0; k < stable.size(); ++k) {
    if (stable[k]) code.C.push_back(chain.c() + static_cast<std::int64_t>(k) + 1);
  }
  return code;
}

ColoredChain decode_chain(const ChainCode& code, std::int64_t a, std::int64_t b, std::int64_t c) {
  validate_code(code, a, b, c);

  // Color word: b^{B1-1} r^{A1} b^{B2-B1} r^{A2-A1} ... b^{b-Bw+1} r^{a-Aw}.
  std::vector<Color> word;
  word.reserve(static_cast<std::size_t>(a + b));
  std::int64_t reds_used = 0;
  std::int64_t blues_used = 0;
  // Positions (in word) of the blue half of each rb-pair, in A order.
  std::vector<std::size_t> pair_blue_pos;
  for (std::int64_t k = 0; k < code.w; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    for (; blues_used < code.B[uk] - 1; ++blues_used) word.push_back(Color::blue);
    for (; reds_used < code.A[uk]; ++reds_used) word.push_back(Color::red);
    pair_blue_pos.push_back(word.size());
  }
  for (; blues_used < b; ++blues_used) word.push_back(Color::blue);
  for (; reds_used < a; ++reds_used) word.push_back(Color::red);

  std::vector<bool> repeats(word.size(), false);
  std::vector<std::int64_t> fresh;
  for (auto v : code.C) {
    if (v <= c) {
      fresh.push_back(v);
    } else {
      repeats[pair_blue_pos[static_cast<std::size_t>(v - c - 1)]] = true;
    }
  }

  std::vector<std::int64_t> reds;
  std::vector<std::int64_t> blues;
  std::size_t next_value = 0;
  std::int64_t last = 0;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    if (!repeats[pos]) {
      if (next_value == fresh.size()) throw std::invalid_argument("chain code has too few values");
      last = fresh[next_value++];
    }
    (word[pos] == Color::red ? reds : blues).push_back(last);
  }
  if (next_value != fresh.size()) throw std::invalid_argument("chain code has unused values");
  return ColoredChain(std::move(reds), std::move(blues), c);
}

std::vector<ColoredChain> enumerate_chains(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::vector<ColoredChain> out;
  const auto red_sets = subsets(c, a);
  const auto blue_sets = subsets(c, b);
  out.reserve(red_sets.size() * blue_sets.size());
  for (const auto& r : red_sets) {
    for (const auto& bl : blue_sets) out.emplace_back(r, bl, c);
  }
  return out;
}

std::vector<ChainCode> enumerate_codes(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::vector<ChainCode> out;
  for (std::int64_t w = 0; w <= std::min(a, b); ++w) {
    const auto as = subsets(a, w);
    const auto bs = subsets(b, w);
    const auto cs = subsets(c + w, a + b);
    for (const auto& A : as) {
      for (const auto& B : bs) {
        for (const auto& C : cs) out.push_back(ChainCode{w, A, B, C});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SweepBounds SweepBounds::uniform(std::int64_t n) {
  return SweepBounds{n, n, n, n, n, n, n};
}

namespace {

std::string range_string(std::initializer_list<std::pair<const char*, std::int64_t>> parts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, hi] : parts) {
    os << (first ? "" : ", ") << name << " <= " << hi;
    first = false;
  }
  return os.str();
}

IdentityResult started(std::string name, std::string range) {
  IdentityResult r;
  r.name = std::move(name);
  r.range = std::move(range);
  return r;
}

void record_failure(IdentityResult& result, const std::string& witness) {
  if (result.passed) {
    result.passed = false;
    result.witness = witness;
  }
}

}  // namespace

std::vector<IdentityResult> verify_all(const SweepBounds& bounds) {
  std::vector<IdentityResult> results;

  {
    IdentityResult r = started("product_identity", range_string({{"a,b,c", bounds.product_max}}));
    for (std::int64_t a = 0; a <= bounds.product_max; ++a) {
      for (std::int64_t b = 0; b <= bounds.product_max; ++b) {
        for (std::int64_t c = 0; c <= bounds.product_max; ++c) {
          ++r.checked;
          const auto lhs = product_identity_lhs(a, b, c);
          const auto rhs = product_identity_rhs(a, b, c);
          if (lhs != rhs) {
            record_failure(r, "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" +
                                  std::to_string(c) + ": " + lhs.get_str() + " != " + rhs.get_str());
          }
        }
      }
    }
    results.push_back(std::move(r));
  }

  {
    IdentityResult r = started("hockeystick_corollary", range_string({{"a,b", bounds.hockeystick_ab_max},
                                                            {"c", bounds.hockeystick_c_max}}));
    for (std::int64_t a = 0; a <= bounds.hockeystick_ab_max; ++a) {
      for (std::int64_t b = 0; b <= bounds.hockeystick_ab_max; ++b) {
        for (std::int64_t c = 0; c <= bounds.hockeystick_c_max; ++c) {
          ++r.checked;
          const auto sides = hockeystick_corollary_sides(a, b, c);
          if (!sides.holds()) {
            record_failure(r, "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" +
                                  std::to_string(c) + ": " + sides.lhs.get_str() + " != " +
                                  sides.rhs.get_str());
          }
        }
      }
    }
    results.push_back(std::move(r));
  }

  {
    const auto hi = bounds.general_max;
    IdentityResult r = started("general_corollary", range_string({{"t,u,v,w,c", hi}}));
    for (std::int64_t t = 0; t <= hi; ++t)
      for (std::int64_t u = 0; u <= hi; ++u)
        for (std::int64_t v = 0; v <= hi; ++v)
          for (std::int64_t w = 0; w <= hi; ++w)
            for (std::int64_t c = 0; c <= hi; ++c) {
              ++r.checked;
              const auto sides = general_corollary_sides(t, u, v, w, c);
              if (!sides.holds()) {
                record_failure(r, "t=" + std::to_string(t) + " u=" + std::to_string(u) +
                                      " v=" + std::to_string(v) + " w=" + std::to_string(w) +
                                      " c=" + std::to_string(c));
              }
            }
    results.push_back(std::move(r));
  }

  {
    const auto hi = bounds.wz_max;
    IdentityResult r = started("wz_certificate", range_string({{"w,a,b,c", hi}}));
    for (std::int64_t b = 0; b <= hi; ++b) {
      for (std::int64_t c = 0; c <= hi; ++c) {
        const auto rep = check_wz_certificate({0, hi}, {0, hi}, b, c);
        r.checked += rep.checked;
        r.skipped += rep.skipped.size();
        if (!rep.holds) {
          record_failure(r, "w=" + std::to_string(rep.witness->w) + " a=" +
                                std::to_string(rep.witness->a) + " b=" + std::to_string(b) +
                                " c=" + std::to_string(c));
        }
      }
    }
    results.push_back(std::move(r));
  }

  {
    const auto ab = bounds.bijection_ab_max;
    const auto cmax = bounds.bijection_c_max;
    const auto range = range_string({{"a,b", ab}, {"c", cmax}});
    IdentityResult roundtrip = started("chain_bijection_roundtrip", range);
    IdentityResult chain_count = started("chain_count", range);
    IdentityResult code_count = started("code_count", range);
    for (std::int64_t a = 0; a <= ab; ++a) {
      for (std::int64_t b = 0; b <= ab; ++b) {
        for (std::int64_t c = 0; c <= cmax; ++c) {
          const std::string at = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                 " c=" + std::to_string(c);
          const auto chains = enumerate_chains(a, b, c);
          const auto codes = enumerate_codes(a, b, c);

          ++chain_count.checked;
          if (big(static_cast<std::int64_t>(chains.size())) != product_identity_rhs(a, b, c)) {
            record_failure(chain_count, at);
          }
          ++code_count.checked;
          if (big(static_cast<std::int64_t>(codes.size())) != product_identity_lhs(a, b, c)) {
            record_failure(code_count, at);
          }

          std::set<ChainCode> images;
          for (const auto& chain : chains) {
            ++roundtrip.checked;
            const auto code = encode_chain(chain);
            images.insert(code);
            if (decode_chain(code, a, b, c) != chain) record_failure(roundtrip, at + " chain " + chain.to_string());
          }
          if (images.size() != chains.size()) record_failure(roundtrip, at + " encode not injective");
          for (const auto& code : codes) {
            ++roundtrip.checked;
            if (encode_chain(decode_chain(code, a, b, c)) != code) {
              record_failure(roundtrip, at + " code " + to_string(code));
            }
          }
        }
      }
    }
    results.push_back(std::move(roundtrip));
    results.push_back(std::move(chain_count));
    results.push_back(std::move(code_count));
  }

  {
    IdentityResult r = started("worked_examples", "a=7 b=8 c=15");
    const auto chain = ColoredChain::parse("1r<2r<3r<4b<5r<5b<6b<7b<8b<9r<10r<10b<11b<12r<13b", 15);
    const ChainCode phi_expected{4, {3, 4, 6, 7}, {1, 2, 6, 8}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17, 18}};
    ++r.checked;
    if (encode_chain(chain) != phi_expected) record_failure(r, "phi gave " + to_string(encode_chain(chain)));
    const ChainCode psi_input{2, {3, 5}, {1, 2}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 17}};
    const std::string psi_expected = "1r<2r<3r<4b<5r<6r<6b<7b<8b<9b<10b<11b<12b<13r<14r";
    ++r.checked;
    const auto psi = decode_chain(psi_input, 7, 8, 15).to_string();
    if (psi != psi_expected) record_failure(r, "psi gave " + psi);
    results.push_back(std::move(r));
  }

  return results;
}

}  // namespace smult::identities
