#include "smult/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "smult/counting.hpp"
#include "smult/exactmath.hpp"
#include "smult/identities.hpp"
#include "smult/length.hpp"
#include "smult/multiplicity.hpp"
#include "smult/serialize.hpp"
#include "smult/staircase.hpp"

#ifndef SMULT_DEFAULT_GOLDEN
#define SMULT_DEFAULT_GOLDEN "tests/data/v1/worked_examples.json"
#endif

namespace smult::cli {

using nlohmann::json;

std::string default_golden_path() { return SMULT_DEFAULT_GOLDEN; }

namespace {

/// Domain failure that carries a structured payload for the error JSON.
class CommandFailure : public std::runtime_error {
 public:
  CommandFailure(std::string type, const std::string& message, json detail = json::object())
      : std::runtime_error(message), type_(std::move(type)), detail_(std::move(detail)) {}
  [[nodiscard]] const std::string& type() const { return type_; }
  [[nodiscard]] const json& detail() const { return detail_; }

 private:
  std::string type_;
  json detail_;
};

json error_json(const std::string& type, const std::string& message, const json& detail = json::object()) {
  json body{{"type", type}, {"message", message}};
  for (const auto& [k, v] : detail.items()) body[k] = v;
  return json{{"error", body}};
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw CLI::ValidationError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw CLI::ValidationError("not an integer: '" + text + "'");
  return v;
}

/// "3", "1,2,4" or the inclusive range "1:3".
std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const auto lo = parse_int(item.substr(0, colon));
    const auto hi = parse_int(item.substr(colon + 1));
    if (hi < lo) throw CLI::ValidationError("empty range '" + item + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("empty list '" + text + "'");
  return out;
}

ExactRational parse_rational_arg(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string("bad rational: ") + e.what());
  }
}

std::vector<ExactRational> parse_rational_list(const std::string& text) {
  std::vector<ExactRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational_arg(item));
  if (out.empty()) throw CLI::ValidationError("empty list '" + text + "'");
  return out;
}

std::int64_t smallest_prime_factor(std::int64_t q) {
  if (q < 2) return 2;
  for (std::int64_t k = 2; k * k <= q; ++k) {
    if (q % k == 0) return k;
  }
  return q;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t out = 1;
  for (std::int64_t k = 0; k < exp; ++k) {
    if (out > std::numeric_limits<std::int64_t>::max() / base) throw CLI::ValidationError("p^e too large");
    out *= base;
  }
  return out;
}

// ---------------------------------------------------------------------------

/// Output of one subcommand.
struct Payload {
  json doc;
  std::optional<std::string> csv = std::nullopt;  // set when CSV was requested
  int code = kOk;
};

struct LengthOptions {
  std::string m, n, s, q, e;
  std::optional<std::int64_t> p;
  std::string route = "auto";
  std::string format = "json";
};

Payload run_length(const LengthOptions& o) {
  const auto ms = parse_int_list(o.m);
  const auto ns = parse_int_list(o.n);
  const auto ss = parse_rational_list(o.s);
  std::vector<std::int64_t> qs;
  if (!o.q.empty()) {
    qs = parse_int_list(o.q);
  } else if (!o.e.empty() && o.p) {
    for (auto e : parse_int_list(o.e)) qs.push_back(checked_pow(*o.p, e));
  } else {
    throw CLI::ValidationError("length needs --q, or --p together with --e");
  }
  if (o.route != "auto" && o.route != "all") length::parse_route(o.route);  // validates

  json rows = json::array();
  std::ostringstream csv;
  csv << "m,n,s,q,r,route,length\n";
  for (auto m : ms)
    for (auto n : ns)
      for (const auto& s : ss)
        for (auto q : qs) {
          length::LengthQuery query{m, n, s, q, o.p.value_or(smallest_prime_factor(q))};
          query.validate();
          const auto r = query.degree_bound();
          json row{{"m", m}, {"n", n}, {"s", to_fraction_string(s)}, {"q", q}, {"r", r}};
          if (o.route == "all") {
            json routes;
            if (query.sq_is_integer()) routes["closed"] = to_decimal_string(length::length_closed(query));
            routes["tu"] = to_decimal_string(length::length_TU(m, n, r, q));
            routes["oracle"] = to_decimal_string(length::length_oracle(m, n, r, q));
            const json first = routes["tu"];
            for (const auto& [name, value] : routes.items()) {
              if (value != first) {
                json detail = row;
                detail["routes"] = routes;
                throw CommandFailure("route_disagreement",
                                     "length routes disagree at m=" + std::to_string(m) + " n=" +
                                         std::to_string(n) + " s=" + to_fraction_string(s) +
                                         " q=" + std::to_string(q),
                                     detail);
              }
            }
            row["length"] = first;
            row["route"] = "all";
            row["routes"] = routes;
          } else {
            const auto route = o.route == "auto"
                                   ? (query.sq_is_integer() ? length::Route::closed : length::Route::tu)
                                   : length::parse_route(o.route);
            row["length"] = to_decimal_string(length::compute(query, route));
            row["route"] = std::string(length::to_string(route));
          }
          csv << m << "," << n << "," << to_fraction_string(s) << "," << q << "," << r << ","
              << row["route"].get<std::string>() << "," << row["length"].get<std::string>() << "\n";
          rows.push_back(std::move(row));
        }

  Payload out;
  out.doc = rows.size() == 1 ? rows.front() : json{{"rows", rows}};
  if (o.format == "csv") out.csv = csv.str();
  return out;
}

Payload run_tu(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t q) {
  const auto t = counting::T_closed(m, n, r, q);
  const auto t_oracle = counting::T_oracle(m, n, r, q);
  const auto u = counting::U_closed(m, n, r, q);
  const auto u_oracle = counting::U_oracle(m, n, r, q);
  Payload out;
  out.doc = json{{"m", m},
                 {"n", n},
                 {"r", r},
                 {"q", q},
                 {"T", to_decimal_string(t)},
                 {"T_oracle", to_decimal_string(t_oracle)},
                 {"U", to_decimal_string(u)},
                 {"U_oracle", to_decimal_string(u_oracle)},
                 {"agree", t == t_oracle && u == u_oracle}};
  if (t != t_oracle || u != u_oracle) {
    throw CommandFailure("route_disagreement", "closed forms and oracles disagree", out.doc);
  }
  return out;
}

Payload run_es(std::int64_t m, std::int64_t n, const std::string& s, std::int64_t p) {
  return Payload{to_json(multiplicity::compute_multiplicity(m, n, parse_rational_arg(s), p))};
}

Payload run_fit(std::int64_t m, std::int64_t n, const std::string& s_text, std::int64_t p) {
  const auto s = parse_rational_arg(s_text);
  const auto fit = multiplicity::fit_length_polynomial_detailed(m, n, s, p);
  return Payload{json{{"m", m},
                      {"n", n},
                      {"s", to_fraction_string(s)},
                      {"p", p},
                      {"polynomial", to_json(fit.polynomial)},
                      {"display", fit.polynomial.to_string()},
                      {"sample_exponents", fit.exponents},
                      {"refit", fit.refit}}};
}

Payload run_reduce(const std::string& matrix_text, const std::string& input_path) {
  std::string text = matrix_text;
  if (text.empty()) {
    std::ostringstream buf;
    if (!input_path.empty()) {
      std::ifstream in(input_path);
      if (!in) throw CommandFailure("io", "cannot read " + input_path);
      buf << in.rdbuf();
    } else {
      buf << std::cin.rdbuf();
    }
    text = buf.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CLI::ValidationError(std::string("matrix is not valid JSON: ") + e.what());
  }
  const auto input = matrix_from_json(doc);
  const auto reduced = staircase::reduce_to_staircase(input);
  return Payload{json{{"input", to_json(input)},
                      {"staircase", to_json(reduced)},
                      {"profile", to_json(staircase::profile(reduced))}}};
}

Payload run_verify(std::optional<std::int64_t> max) {
  const auto bounds = max ? identities::SweepBounds::uniform(*max) : identities::SweepBounds{};
  const auto results = identities::verify_all(bounds);
  json list = json::array();
  bool passed = true;
  for (const auto& r : results) {
    list.push_back(to_json(r));
    passed = passed && r.passed;
  }
  return Payload{json{{"passed", passed}, {"identities", list}}, std::nullopt,
                 passed ? kOk : kFailure};
}

Payload run_demo(std::int64_t p, const std::string& s, std::int64_t e_max, const std::string& format) {
  const auto report = multiplicity::nonpolynomial_demo(p, parse_rational_arg(s), e_max);
  Payload out{to_json(report), std::nullopt, report.all_match() ? kOk : kFailure};
  if (format == "csv") {
    std::ostringstream csv;
    csv << "e,q,r,parity,length,expected\n";
    for (const auto& row : report.rows) {
      csv << row.e << "," << row.q << "," << row.r << "," << (row.e % 2 == 0 ? "even" : "odd") << ","
          << to_decimal_string(row.length) << ","
          << (row.expected ? to_fraction_string(*row.expected) : "") << "\n";
    }
    out.csv = csv.str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Golden examples

std::int64_t need_int(const json& entry, const char* key) {
  if (!entry.contains(key) || !entry[key].is_number_integer()) {
    throw std::invalid_argument(std::string("golden entry needs integer \"") + key + "\"");
  }
  return entry[key].get<std::int64_t>();
}

std::string need_string(const json& entry, const char* key) {
  if (!entry.contains(key) || !entry[key].is_string()) {
    throw std::invalid_argument(std::string("golden entry needs string \"") + key + "\"");
  }
  return entry[key].get<std::string>();
}

ExactRational need_rational(const json& entry, const char* key) {
  return parse_rational(need_string(entry, key));
}

std::string rational_json(const ExactRational& r) { return to_fraction_string(r); }

/// Computes the value an entry describes, in the same JSON shape as "expected".
json compute_example(const json& e) {
  const std::string kind = need_string(e, "kind");
  if (kind == "binom") return to_decimal_string(binom(need_int(e, "m"), need_int(e, "n")));
  if (kind == "eval") {
    return rational_json(eval(polynomial_from_json(e.at("poly")), need_int(e, "q")));
  }
  if (kind == "interpolate") {
    std::vector<InterpolationPoint> pts;
    for (const auto& pt : e.at("points")) {
      pts.push_back({pt.at(0).get<std::int64_t>(), parse_rational(pt.at(1).get<std::string>())});
    }
    return to_json(interpolate(pts));
  }
  if (kind == "length") {
    length::LengthQuery q{need_int(e, "m"), need_int(e, "n"), need_rational(e, "s"), need_int(e, "q"),
                          e.contains("p") ? need_int(e, "p") : smallest_prime_factor(need_int(e, "q"))};
    const auto route = e.contains("route") ? length::parse_route(need_string(e, "route")) : length::Route::closed;
    return to_decimal_string(length::compute(q, route));
  }
  if (kind == "length_tu") {
    return to_decimal_string(length::length_TU(need_int(e, "m"), need_int(e, "n"), need_int(e, "r"), need_int(e, "q")));
  }
  if (kind == "R_term" || kind == "S_term") {
    const auto f = kind == "R_term" ? length::R_term : length::S_term;
    return to_decimal_string(f(need_int(e, "m"), need_int(e, "n"), need_int(e, "sq"), need_int(e, "q")));
  }
  if (kind == "staircase_count") {
    return to_decimal_string(staircase::count_staircase_basis(need_int(e, "m"), need_int(e, "n"),
                                                              need_int(e, "r"), need_int(e, "q")));
  }
  if (kind == "regular_length") {
    return to_decimal_string(length::regular_length(need_int(e, "d"), need_int(e, "r"), need_int(e, "q")));
  }
  if (kind == "fit") {
    return to_json(multiplicity::fit_length_polynomial(need_int(e, "m"), need_int(e, "n"),
                                                       need_rational(e, "s"), need_int(e, "p")));
  }
  if (kind == "h_s") {
    return rational_json(multiplicity::h_s_value(need_int(e, "m"), need_int(e, "n"), need_rational(e, "s"), need_int(e, "p")));
  }
  if (kind == "e_s") {
    return rational_json(multiplicity::e_s_value(need_int(e, "m"), need_int(e, "n"), need_rational(e, "s"), need_int(e, "p")));
  }
  if (kind == "normalizer") {
    return rational_json(multiplicity::normalizer(need_rational(e, "s"), need_int(e, "d")));
  }
  if (kind == "nonpoly") {
    const auto report = multiplicity::nonpolynomial_demo(need_int(e, "p"), need_rational(e, "s"), need_int(e, "e"));
    return to_decimal_string(report.rows.back().length);
  }
  if (kind == "encode_chain") {
    return to_json(identities::encode_chain(identities::ColoredChain::parse(need_string(e, "chain"), need_int(e, "c"))));
  }
  if (kind == "decode_chain") {
    const auto& c = e.at("code");
    identities::ChainCode code{c.at("w").get<std::int64_t>(), c.at("A").get<std::vector<std::int64_t>>(),
                               c.at("B").get<std::vector<std::int64_t>>(), c.at("C").get<std::vector<std::int64_t>>()};
    return identities::decode_chain(code, need_int(e, "a"), need_int(e, "b"), need_int(e, "c")).to_string();
  }
  if (kind == "reduce") {
    return to_json(staircase::reduce_to_staircase(matrix_from_json(e.at("matrix"))));
  }
  throw std::invalid_argument("unknown golden kind '" + kind + "'");
}

/// Brings "expected" to canonical form so "1/1" and "1" compare equal.
json canonical_expected(const json& e) {
  const std::string kind = need_string(e, "kind");
  const json& expected = e.at("expected");
  if (kind == "fit" || kind == "interpolate") return to_json(polynomial_from_json(expected));
  if ((kind == "h_s" || kind == "e_s" || kind == "normalizer" || kind == "eval") && expected.is_string()) {
    return to_fraction_string(parse_rational(expected.get<std::string>()));
  }
  return expected;
}

}  // namespace

json reproduce_examples(const json& golden) {
  if (!golden.is_object() || !golden.contains("examples") || !golden["examples"].is_array()) {
    throw std::invalid_argument("golden file needs an \"examples\" array");
  }
  json results = json::array();
  bool all = true;
  for (const auto& entry : golden["examples"]) {
    json row{{"id", entry.value("id", std::string("?"))}};
    try {
      const json expected = canonical_expected(entry);
      const json actual = compute_example(entry);
      row["expected"] = expected;
      row["actual"] = actual;
      row["match"] = expected == actual;
    } catch (const std::exception& ex) {
      row["error"] = ex.what();
      row["match"] = false;
    }
    all = all && row["match"].get<bool>();
    results.push_back(std::move(row));
  }
  return json{{"version", golden.value("version", 0)}, {"passed", all}, {"examples", results}};
}

namespace {

Payload run_reproduce(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CommandFailure("io", "cannot read golden file " + path);
  json golden;
  try {
    golden = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CommandFailure("io", std::string("golden file is not valid JSON: ") + e.what());
  }
  json report = reproduce_examples(golden);
  report["golden"] = path;
  const bool passed = report["passed"].get<bool>();
  return Payload{std::move(report), std::nullopt, passed ? kOk : kFailure};
}

// ---------------------------------------------------------------------------

std::string config_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) {
      if (!out.empty()) out += ",";
      out += config_value(item);
    }
    return out;
  }
  return v.dump();
}

/// Splices flags from --config FILE in front of the command-line flags, so
/// explicit flags (parsed later, last value wins) take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::optional<std::string> config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ValidationError("--config needs a file");
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!config_path) return rest;

  std::ifstream in(*config_path);
  if (!in) throw CLI::ValidationError("cannot read config file " + *config_path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CLI::ValidationError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw CLI::ValidationError("config file must hold a JSON object");

  std::vector<std::string> out;
  auto sub = std::find_if(rest.begin(), rest.end(), [](const std::string& a) { return a.rfind("-", 0) != 0; });
  out.insert(out.end(), rest.begin(), sub == rest.end() ? sub : sub + 1);
  for (const auto& [key, value] : cfg.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) out.push_back("--" + key);
      continue;
    }
    out.push_back("--" + key);
    out.push_back(config_value(value));
  }
  if (sub != rest.end()) out.insert(out.end(), sub + 1, rest.end());
  return out;
}

void emit(std::ostream& out, const Payload& payload, const std::string& command,
          const std::string& output_dir) {
  const std::string body = payload.csv ? *payload.csv : payload.doc.dump(2) + "\n";
  out << body;
  if (output_dir.empty()) return;
  std::filesystem::create_directories(output_dir);
  const auto file = std::filesystem::path(output_dir) / (command + (payload.csv ? ".csv" : ".json"));
  std::ofstream(file) << body;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lengths and s-multiplicities of 2x2 determinantal rings", "smult"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  std::string output_dir;
  if (const char* env = std::getenv("SMULT_OUTPUT_DIR")) output_dir = env;
  app.add_option("--output-dir", output_dir, "Also write the result to DIR/<command>.json (env SMULT_OUTPUT_DIR)");
  // Handled before parsing; registered so it appears in --help.
  std::string config_unused;
  app.add_option("--config", config_unused, "JSON file whose keys mirror the flags; flags win");

  LengthOptions lo;
  auto* length_cmd = app.add_subcommand("length", "Length of k[X]/(I2 + m^ceil(sq) + m^[q])");
  length_cmd->add_option("--m", lo.m, "Rows (N, N,M or A:B)")->required();
  length_cmd->add_option("--n", lo.n, "Columns")->required();
  length_cmd->add_option("--s", lo.s, "s as NUM/DEN (comma list allowed)")->required();
  length_cmd->add_option("--q", lo.q, "Frobenius bound q (list allowed)");
  length_cmd->add_option("--p", lo.p, "Characteristic; defaults to the smallest prime factor of q");
  length_cmd->add_option("--e", lo.e, "Exponents e, with q = p^e");
  length_cmd->add_option("--route", lo.route, "auto, closed, tu, oracle or all")
      ->check(CLI::IsMember({"auto", "closed", "tu", "oracle", "all"}));
  length_cmd->add_option("--format", lo.format)->check(CLI::IsMember({"json", "csv"}));

  std::int64_t tm = 0, tn = 0, tr = 0, tq = 0;
  auto* tu_cmd = app.add_subcommand("tu", "T and U with their oracles");
  tu_cmd->add_option("--m", tm)->required();
  tu_cmd->add_option("--n", tn)->required();
  tu_cmd->add_option("--r", tr)->required();
  tu_cmd->add_option("--q", tq)->required();

  std::int64_t em = 0, en = 0, ep = 2;
  std::string es;
  auto* es_cmd = app.add_subcommand("es", "h_s, normalizer and e_s");
  auto* fit_cmd = app.add_subcommand("fit", "Length polynomial in q at fixed s");
  for (auto* cmd : {es_cmd, fit_cmd}) {
    cmd->add_option("--m", em)->required();
    cmd->add_option("--n", en)->required();
    cmd->add_option("--s", es, "s as NUM/DEN")->required();
    cmd->add_option("--p", ep)->required();
  }

  std::string matrix, input;
  auto* reduce_cmd = app.add_subcommand("reduce", "Staircase normal form of an exponent matrix");
  reduce_cmd->add_option("--matrix", matrix, "JSON rows, e.g. [[1,0],[0,1]]; read from stdin if absent");
  reduce_cmd->add_option("--input", input, "File holding the JSON rows");

  std::optional<std::int64_t> max;
  auto* verify_cmd = app.add_subcommand("verify-identities", "Exhaustive identity and bijection sweeps");
  verify_cmd->add_option("--max", max, "Use N for every sweep bound");

  std::int64_t dp = 2, emax = 10;
  std::string ds = "4/3", dformat = "json";
  auto* demo_cmd = app.add_subcommand("demo-nonpoly", "Lengths in k[x,y] for s outside Z[1/p]");
  demo_cmd->add_option("--p", dp);
  demo_cmd->add_option("--s", ds);
  demo_cmd->add_option("--emax", emax);
  demo_cmd->add_option("--format", dformat)->check(CLI::IsMember({"json", "csv"}));

  std::string golden = default_golden_path();
  auto* repro_cmd = app.add_subcommand("reproduce-examples", "Recompute the worked examples and diff against the golden file");
  repro_cmd->add_option("--golden", golden);

  try {
    auto args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_json("usage", e.what()).dump(2) << "\n";
    err << app.help();
    return kUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    Payload payload;
    if (cmd == length_cmd) payload = run_length(lo);
    else if (cmd == tu_cmd) payload = run_tu(tm, tn, tr, tq);
    else if (cmd == es_cmd) payload = run_es(em, en, es, ep);
    else if (cmd == fit_cmd) payload = run_fit(em, en, es, ep);
    else if (cmd == reduce_cmd) payload = run_reduce(matrix, input);
    else if (cmd == verify_cmd) payload = run_verify(max);
    else if (cmd == demo_cmd) payload = run_demo(dp, ds, emax, dformat);
    else payload = run_reproduce(golden);
    emit(out, payload, name, output_dir);
    return payload.code;
  } catch (const CLI::ValidationError& e) {
    out << error_json("usage", e.what()).dump(2) << "\n";
    return kUsage;
  } catch (const CommandFailure& e) {
    out << error_json(e.type(), e.what(), e.detail()).dump(2) << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    out << error_json("domain", e.what()).dump(2) << "\n";
    return kFailure;
  }
}

}  // namespace smult::cli
