// Command-line front end: check / eval / witness / enumerate over tensor
// documents. Machine-readable single-line JSON goes to stdout, a human
// summary to stderr. Exit codes: 0 strictly copositive, 10 copositive but
// not strict, 20 not copositive, 2 usage or parse error, 3 internal
// inconsistency between the analytic rules and the oracle, 4 indecisive.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <coposit/coposit.hpp>

namespace {

using json = nlohmann::ordered_json;
using namespace coposit;

constexpr int kExitStrict = 0;
constexpr int kExitCopositiveNotStrict = 10;
constexpr int kExitNotCopositive = 20;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitIndecisive = 4;

std::string fnv1a_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << h;
  return out.str();
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::StrictlyCopositive: return kExitStrict;
    case Verdict::CopositiveNotStrict: return kExitCopositiveNotStrict;
    case Verdict::NotCopositive: return kExitNotCopositive;
  }
  return kExitUsage;
}

json witness_json(const Witness<Rational>& w) {
  json j;
  j["kind"] = to_string(w.kind);
  json coords = json::array();
  for (const Rational& c : w.x) coords.push_back(to_string(c));
  j["x"] = coords;
  j["value"] = to_string(w.value);
  return j;
}

json witness_json(const Witness<double>& w) {
  json j;
  j["kind"] = to_string(w.kind);
  json coords = json::array();
  for (double c : w.x) coords.push_back(c);
  j["x"] = coords;
  j["value"] = w.value;
  return j;
}

struct OutputOptions {
  std::string format = "json";
};

void emit(const json& report, const std::string& human, const OutputOptions& out) {
  if (out.format == "json") {
    std::cout << report.dump() << "\n";
    std::cerr << human << "\n";
  } else {
    std::cout << human << "\n";
  }
}

struct CheckSettings {
  std::string mode = "auto";  // analytic | oracle | both; auto = both for exact, oracle for float
  long long resolution = 0;
  double tol = 1e-9;
};

template <class S>
json oracle_json(const OracleVerdict<S>& o, const OracleOptions& opts) {
  json j;
  j["resolution"] = o.resolution;
  j["tol"] = opts.tol;
  j["decisive"] = o.decisive;
  j["verdict"] = to_string(o.verdict);
  if constexpr (std::is_same_v<S, Rational>) {
    j["min_value"] = to_string(o.min_value);
  } else {
    j["min_value"] = o.min_value;
  }
  json k = json::array();
  for (long long c : o.argmin.k) k.push_back(c);
  j["argmin"] = k;
  return j;
}

int run_check(const std::string& path, const CheckSettings& settings, const OutputOptions& out) {
  const auto started = std::chrono::steady_clock::now();
  ParsedTensor parsed = load_tensor_file(path);

  const int order = std::visit([](const auto& t) { return t.order(); }, parsed);
  const int dim = std::visit([](const auto& t) { return t.dim(); }, parsed);
  if (order != 4 || dim > 3)
    throw ParseError("check expects an order-4 tensor of dimension at most 3");

  OracleOptions opts;
  opts.resolution = settings.resolution;
  opts.tol = settings.tol;

  std::string mode = settings.mode;
  if (mode == "auto") mode = is_exact(parsed) ? "both" : "oracle";
  if (!is_exact(parsed) && mode != "oracle") mode = "oracle";  // no analytic float rules
  if (dim == 1) mode = "oracle";

  json report;
  report["input"] = fnv1a_digest(serialize(parsed));
  report["mode"] = mode;

  std::optional<Verdict> verdict;
  bool decisive = false;
  std::string rule;
  json witness = nullptr;
  json oracle_info = nullptr;
  json disagreement = nullptr;

  if (is_exact(parsed)) {
    const RationalTensor& T = std::get<RationalTensor>(parsed);
    std::optional<ClassifierReport<Rational>> analytic;
    std::optional<OracleVerdict<Rational>> oracle;
    if (mode == "analytic" || mode == "both") analytic = dispatch(T, opts);
    if (mode == "oracle" || mode == "both") oracle = oracle_verdict(T, opts);

    if (analytic && oracle && analytic->verdict && *analytic->verdict != oracle->verdict) {
      disagreement = json::object();
      disagreement["analytic"] = to_string(*analytic->verdict);
      disagreement["analytic_rule"] = analytic->rule;
      disagreement["oracle"] = to_string(oracle->verdict);
    } else if (analytic) {
      verdict = analytic->verdict;
      decisive = analytic->decisive;
      rule = analytic->rule;
      if (analytic->evidence) witness = witness_json(*analytic->evidence);
      if (oracle) decisive = decisive || oracle->decisive;
    } else if (oracle) {
      verdict = oracle->verdict;
      decisive = oracle->decisive;
      rule = "oracle";
      if (oracle->witness) witness = witness_json(*oracle->witness);
    }
    if (oracle) oracle_info = oracle_json(*oracle, opts);
  } else {
    const FloatTensor& T = std::get<FloatTensor>(parsed);
    const auto oracle = oracle_verdict(T, opts);
    verdict = oracle.verdict;
    decisive = oracle.decisive;
    rule = "oracle";
    if (oracle.witness) witness = witness_json(*oracle.witness);
    oracle_info = oracle_json(oracle, opts);
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();

  int code;
  std::string human;
  if (!disagreement.is_null()) {
    code = kExitInconsistent;
    report["verdict"] = nullptr;
    report["disagreement"] = disagreement;
    human = "INCONSISTENT: analytic " + disagreement["analytic"].get<std::string>() +
            " vs oracle " + disagreement["oracle"].get<std::string>();
  } else if (verdict && decisive) {
    code = exit_code_for(*verdict);
    report["verdict"] = to_string(*verdict);
    human = std::string(to_string(*verdict)) + " (rule " + rule + ")";
  } else {
    code = kExitIndecisive;
    report["verdict"] = nullptr;
    if (verdict) report["heuristic_verdict"] = to_string(*verdict);
    human = verdict ? std::string("indecisive; heuristic ") + to_string(*verdict) : "indecisive";
  }
  report["rule"] = rule;
  report["decisive"] = decisive;
  report["witness"] = witness;
  report["oracle"] = oracle_info;
  report["elapsed_ms"] = elapsed;
  emit(report, human, out);
  return code;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) parts.push_back(token);
  return parts;
}

int run_eval(const std::string& path, const std::string& at, const OutputOptions& out) {
  ParsedTensor parsed = load_tensor_file(path);
  const int dim = std::visit([](const auto& t) { return t.dim(); }, parsed);
  const auto tokens = split_commas(at);
  if (static_cast<int>(tokens.size()) != dim)
    throw ParseError("--at needs " + std::to_string(dim) + " coordinates");

  json report;
  report["input"] = fnv1a_digest(serialize(parsed));
  std::string rendered;
  if (is_exact(parsed)) {
    std::vector<Rational> x;
    for (const auto& t : tokens) x.push_back(parse_rational(t));
    const Rational value = std::get<RationalTensor>(parsed).evaluate(x);
    rendered = to_string(value);
    report["value"] = rendered;
  } else {
    std::vector<double> x;
    for (const auto& t : tokens) x.push_back(std::stod(t));
    const double value = std::get<FloatTensor>(parsed).evaluate(x);
    std::ostringstream s;
    s.precision(17);
    s << value;
    rendered = s.str();
    report["value"] = value;
  }
  report["at"] = tokens;
  emit(report, rendered, out);
  return 0;
}

int run_witness(const std::string& path, const std::string& kind, const CheckSettings& settings,
                const OutputOptions& out) {
  ParsedTensor parsed = load_tensor_file(path);
  OracleOptions opts;
  opts.resolution = settings.resolution;
  opts.tol = settings.tol;

  json report;
  report["input"] = fnv1a_digest(serialize(parsed));
  report["kind"] = kind;

  const auto finish = [&](const json& w, const std::string& human) {
    report["witness"] = w;
    emit(report, human, out);
    return w.is_null() ? kExitIndecisive : 0;
  };

  return std::visit(
      [&](const auto& T) {
        using S = typename std::decay_t<decltype(T)>::Scalar;
        std::optional<Witness<S>> w;
        if (kind == "positive") {
          w = find_positive_witness(T);
        } else if (kind == "zero") {
          w = find_zero_nonneg(T, settings.resolution, settings.tol);
        } else {  // negative
          const auto oracle = oracle_verdict(T, opts);
          if (oracle.verdict == Verdict::NotCopositive) w = oracle.witness;
        }
        if (!w) return finish(nullptr, "no " + kind + " witness found");
        json wj = witness_json(*w);
        return finish(wj, kind + " witness found, value " + wj["value"].dump());
      },
      parsed);
}

int run_enumerate(const std::string& family, long long resolution, const OutputOptions& out) {
  const FamilySpec* spec = find_family(family);
  if (!spec) throw CLI::ValidationError("--family", "unknown family '" + family + "'");

  const auto rows = family_check(*spec, resolution);
  std::size_t strict = 0, cns = 0, notcop = 0, silent = 0, mismatches = 0;
  json members = json::array();
  std::ostringstream table;
  for (const auto& row : rows) {
    std::string claim = "(none)";
    if (row.classifier.verdict) {
      claim = to_string(*row.classifier.verdict);
      if (*row.classifier.verdict == Verdict::StrictlyCopositive) ++strict;
      if (*row.classifier.verdict == Verdict::CopositiveNotStrict) ++cns;
      if (*row.classifier.verdict == Verdict::NotCopositive) ++notcop;
    } else {
      ++silent;
    }
    if (row.mismatch) ++mismatches;

    std::string slots;
    for (const auto& [idx, value] : row.tensor.entries()) {
      bool is_fixed = false;
      for (const auto& [fidx, fvalue] : spec->fixed)
        if (fidx == idx) {
          is_fixed = true;
          break;
        }
      if (is_fixed) continue;
      if (!slots.empty()) slots += " ";
      slots += index_key(idx) + "=" + to_string(value);
    }
    json m;
    m["i"] = row.index;
    m["slots"] = slots;
    m["classifier"] = claim;
    m["oracle"] = to_string(row.oracle.verdict);
    m["match"] = !row.mismatch;
    members.push_back(m);
    table << row.index << "\t" << slots << "\t" << claim << "\t"
          << to_string(row.oracle.verdict) << (row.mismatch ? "\tMISMATCH" : "") << "\n";
  }

  json report;
  report["family"] = spec->name;
  report["count"] = rows.size();
  report["strict"] = strict;
  report["copositive_not_strict"] = cns;
  report["not_copositive"] = notcop;
  report["no_conclusion"] = silent;
  report["mismatches"] = mismatches;
  report["members"] = members;

  const std::string human = spec->name + ": " + std::to_string(rows.size()) + " members, " +
                            std::to_string(strict) + " strict, " + std::to_string(mismatches) +
                            " mismatches";
  if (out.format == "json") {
    std::cout << report.dump() << "\n";
    std::cerr << table.str() << human << "\n";
  } else {
    std::cout << table.str() << human << "\n";
  }
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"copositivity toolkit for 4th-order symmetric tensors"};
  app.require_subcommand(1);

  OutputOptions out;
  CheckSettings settings;

  std::string file;
  std::string at;
  std::string kind = "negative";
  std::string family;
  long long resolution = 0;

  auto* check = app.add_subcommand("check", "classify a tensor file");
  check->add_option("file", file)->required();
  check->add_option("--mode", settings.mode)
      ->check(CLI::IsMember({"auto", "analytic", "oracle", "both"}));
  check->add_option("--resolution", settings.resolution);
  check->add_option("--tol", settings.tol);
  check->add_option("--format", out.format)->check(CLI::IsMember({"json", "text"}));

  auto* eval = app.add_subcommand("eval", "evaluate the form at a point");
  eval->add_option("file", file)->required();
  eval->add_option("--at", at)->required();
  std::string eval_format = "text";
  eval->add_option("--format", eval_format)->check(CLI::IsMember({"json", "text"}));

  auto* witness = app.add_subcommand("witness", "search for a witness point");
  witness->add_option("file", file)->required();
  witness->add_option("--kind", kind)->check(CLI::IsMember({"negative", "zero", "positive"}));
  witness->add_option("--resolution", settings.resolution);
  witness->add_option("--tol", settings.tol);
  witness->add_option("--format", out.format)->check(CLI::IsMember({"json", "text"}));

  auto* enumerate = app.add_subcommand("enumerate", "classify a built-in sign family");
  enumerate->add_option("--family", family)->required();
  enumerate->add_option("--resolution", resolution);
  enumerate->add_option("--format", out.format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);
    return cli_code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(file, settings, out);
    if (eval->parsed()) {
      OutputOptions eval_out;
      eval_out.format = eval_format;
      return run_eval(file, at, eval_out);
    }
    if (witness->parsed()) return run_witness(file, kind, settings, out);
    if (enumerate->parsed()) return run_enumerate(family, resolution, out);
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cout << err.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
