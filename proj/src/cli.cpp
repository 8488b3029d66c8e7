#include "mmatrix/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmatrix/designs.hpp"
#include "mmatrix/errors.hpp"
#include "mmatrix/graphs.hpp"
#include "mmatrix/orthogonality.hpp"
#include "mmatrix/verify.hpp"

namespace mmatrix::cli {

using Json = nlohmann::ordered_json;

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&text](const std::string& part) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
      throw UsageError("bad order '" + text + "' (expected N or A..B)");
    try {
      return std::stoi(part);
    } catch (const std::out_of_range&) {
      throw UsageError("order '" + text + "' out of range");
    }
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw UsageError("range '" + text + "' has a > b");
  return {lo, hi};
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& help) {
  CLI::App app{"Modular +-1 matrices: generation, orthogonality, designs and graphs", "mmatrix"};
  app.require_subcommand(1);

  int type = 3;
  std::string n_text;
  std::string convention = "odd-plus";
  std::string format = "text";
  std::string out;
  std::string view = "adjacency";
  std::string show = "both";
  int cap = kDefaultScanCap;

  const std::vector<std::pair<Command, std::pair<const char*, const char*>>> commands = {
      {Command::Gen, {"gen", "print the base table and/or the sign matrix"}},
      {Command::Analyze, {"analyze", "orthogonal numbers, formula checks and exact determinant"}},
      {Command::Design, {"design", "block design parameters and association scheme"}},
      {Command::Graph, {"graph", "export the adjacency (M-graph) or Levi view as DOT/JSON"}},
      {Command::Verify, {"verify", "run the property suite over n or a range"}},
      {Command::Scan, {"scan", "tabulate determinant, orthogonal values and design kind per n"}},
  };
  std::vector<std::pair<Command, CLI::App*>> subs;
  for (const auto& [command, names] : commands) {
    CLI::App* sub = app.add_subcommand(names.first, names.second);
    sub->add_option("--type", type, "matrix type 1, 2 or 3")->check(CLI::IsMember({1, 2, 3}));
    sub->add_option("--n", n_text, "order N or range A..B")->required();
    sub->add_option("--convention", convention, "odd-plus | even-plus | type1-retain")
        ->check(CLI::IsMember({"odd-plus", "even-plus", "type1-retain"}));
    sub->add_option("--format", format, "text | json | csv | dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    sub->add_option("--out", out, "write output to this file instead of stdout");
    if (command == Command::Graph)
      sub->add_option("--view", view, "adjacency | levi")->check(CLI::IsMember({"adjacency", "levi"}));
    if (command == Command::Gen)
      sub->add_option("--show", show, "base | sign | incidence | both | all")
          ->check(CLI::IsMember({"base", "sign", "incidence", "both", "all"}));
    if (command == Command::Scan)
      sub->add_option("--cap", cap, "largest n scan accepts")->check(CLI::PositiveNumber);
    subs.emplace_back(command, sub);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    help << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    help << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig config;
  for (const auto& [command, sub] : subs)
    if (sub->parsed()) config.command = command;
  config.rule = *rule_from_number(type);
  std::tie(config.n_lo, config.n_hi) = parse_range(n_text);
  config.convention = *convention_from_string(convention);
  if (format == "json") config.format = Format::Json;
  else if (format == "csv") config.format = Format::Csv;
  else if (format == "dot") config.format = Format::Dot;
  else config.format = Format::Text;
  if (!out.empty()) config.out = out;
  config.view = view;
  config.show = show;
  config.cap = cap;
  return config;
}

namespace {

std::string render_matrix(const IntMatrix& m, char separator = ' ') {
  int width = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      width = std::max<int>(width, static_cast<int>(std::to_string(m(i, j)).size()));
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) os << separator;
      if (separator == ' ') os << std::setw(width);
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string join(const std::vector<int>& values, const char* separator) {
  std::ostringstream os;
  for (std::size_t t = 0; t < values.size(); ++t) os << (t ? separator : "") << values[t];
  return os.str();
}

void require_single(const RunConfig& c, const char* command) {
  if (c.n_lo != c.n_hi)
    throw UsageError(std::string(command) + " takes a single order, not a range");
}

void require_format(const RunConfig& c, std::initializer_list<Format> allowed, const char* command) {
  if (std::find(allowed.begin(), allowed.end(), c.format) == allowed.end())
    throw UsageError(c.format == Format::Dot ? "dot format is only valid for the graph command"
                                             : std::string("format not supported by ") + command);
}

std::string header(const RunConfig& c, int n) {
  std::ostringstream os;
  os << "type " << rule_number(c.rule) << ", n = " << n << ", convention " << to_string(c.convention);
  return os.str();
}

Json provenance(const RunConfig& c, int n) {
  return {{"type", rule_number(c.rule)}, {"n", n}, {"convention", std::string(to_string(c.convention))}};
}

int run_gen(const RunConfig& c, std::ostream& out) {
  require_single(c, "gen");
  require_format(c, {Format::Text, Format::Json, Format::Csv}, "gen");
  const int n = c.n_lo;
  const ModularTable table = build_base(c.rule, n);
  const SignMatrix signs = apply_signs(table, c.convention);

  std::vector<std::pair<std::string, IntMatrix>> sections;
  const bool all = c.show == "all";
  if (all || c.show == "base" || c.show == "both") sections.emplace_back("base", table.entries());
  if (all || c.show == "sign" || c.show == "both") sections.emplace_back("sign", signs.entries());
  if (all || c.show == "incidence")
    sections.emplace_back("incidence", to_incidence(signs).entries());

  if (c.format == Format::Json) {
    Json j = provenance(c, n);
    for (const auto& [name, m] : sections) j[name] = matrix_json(m);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  bool first = true;
  for (const auto& [name, m] : sections) {
    if (!first) out << '\n';
    first = false;
    if (c.format == Format::Csv) {
      out << render_matrix(m, ',');
      continue;
    }
    if (name == "base") out << "base table (" << header(c, n) << ")\n";
    else if (name == "sign") out << "sign matrix (" << header(c, n) << ")\n";
    else out << "incidence matrix (" << header(c, n) << ")\n";
    out << render_matrix(m);
  }
  return kExitOk;
}

struct FormulaVerdict {
  std::string name;     // empty when no closed form applies
  bool pass = false;
};

FormulaVerdict formula_verdict(const SignMatrix& signs, const OrthogonalProfile& prof) {
  const int n = signs.order();
  if (signs.source_rule() != GeneratorRule::Type3CyclicSum ||
      signs.convention() != SignConvention::OddPlus)
    return {};
  FormulaVerdict verdict{n % 2 ? "4k-2-n" : "4k-n", true};
  for (int i = 1; i <= n && verdict.pass; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int k = coincident_unities(signs.row(i), signs.row(j));
      try {
        const int g = n % 2 ? predicted_g_odd(n, k) : predicted_g_even(n, k);
        if (g != prof.value(i, j)) verdict.pass = false;
      } catch (const DomainError&) {
        verdict.pass = false;
      }
    }
  }
  return verdict;
}

int run_analyze(const RunConfig& c, std::ostream& out) {
  require_single(c, "analyze");
  require_format(c, {Format::Text, Format::Json, Format::Csv}, "analyze");
  const int n = c.n_lo;
  const SignMatrix signs = build_sign_matrix(c.rule, n, c.convention);
  const OrthogonalProfile prof = profile(signs);
  const DeterminantResult det = exact_determinant(signs);
  const FormulaVerdict formula = formula_verdict(signs, prof);
  const IntVector self = prof.gram().diagonal();
  const bool self_ok = (self.array() == n).all();

  if (c.format == Format::Csv) {
    out << "i,j,g\n";
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out << i << ',' << j << ',' << prof.value(i, j) << '\n';
    return kExitOk;
  }
  if (c.format == Format::Json) {
    Json j = provenance(c, n);
    j["self_product"] = self_ok ? Json(n) : Json(nullptr);
    Json pairs = Json::array();
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k) pairs.push_back({i, k, prof.value(i, k)});
    j["pair_values"] = std::move(pairs);
    j["distinct_g"] = prof.distinct_values();
    j["multiplicities"] = prof.multiplicities();
    j["formula"] = formula.name.empty() ? Json(nullptr) : Json(formula.name);
    j["formula_verdict"] = formula.name.empty() ? Json(nullptr) : Json(formula.pass ? "PASS" : "FAIL");
    j["determinant"] = det.value.str();
    j["predicted_determinant"] = det.predicted ? Json(det.predicted->str()) : Json(nullptr);
    j["determinant_match"] = det.predicted ? Json(det.matches) : Json(nullptr);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << header(c, n) << '\n';
  out << "self products: " << (self_ok ? std::to_string(n) + " for every row" : "NOT all n") << '\n';
  out << "inner products:\n" << render_matrix(prof.gram());
  out << "orthogonal numbers:\n";
  for (std::size_t t = 0; t < prof.distinct_values().size(); ++t)
    out << "  g = " << prof.distinct_values()[t] << ": " << prof.multiplicities()[t] << " pairs\n";
  out << "distinct g: " << join(prof.distinct_values(), " ") << '\n';
  if (formula.name.empty()) out << "formula check: not applicable\n";
  else out << "formula check g = " << formula.name << ": " << (formula.pass ? "PASS" : "FAIL") << '\n';
  out << "determinant: " << det.value.str() << '\n';
  if (det.predicted)
    out << "predicted determinant: " << det.predicted->str() << (det.matches ? " (match)" : " (MISMATCH)")
        << '\n';
  else
    out << "predicted determinant: not applicable\n";
  return kExitOk;
}

Json design_json(const RunConfig& c, int n, const DesignSummary& s) {
  Json j = provenance(c, n);
  j["v"] = s.v;
  j["b"] = s.b;
  j["r"] = s.r ? Json(*s.r) : Json(nullptr);
  j["k"] = s.k ? Json(*s.k) : Json(nullptr);
  j["kind"] = std::string(to_string(s.kind));
  j["m_classes"] = s.lambdas.size();
  j["lambdas"] = s.lambdas;
  j["class_sizes"] = s.class_sizes;
  const bool valid = s.scheme && s.scheme->valid();
  j["scheme_valid"] = valid;
  j["witness"] = valid || !s.scheme ? Json(nullptr) : Json(s.scheme->witness());
  Json tensors = Json::array();
  if (valid)
    for (int i = 1; i <= s.scheme->class_count(); ++i) tensors.push_back(matrix_json(s.scheme->p_matrix(i)));
  j["p_matrices"] = std::move(tensors);
  return j;
}

int run_design(const RunConfig& c, std::ostream& out) {
  require_single(c, "design");
  require_format(c, {Format::Text, Format::Json, Format::Csv}, "design");
  const int n = c.n_lo;
  const DesignSummary s = classify_design(to_incidence(build_sign_matrix(c.rule, n, c.convention)));
  const bool valid = s.scheme && s.scheme->valid();
  auto opt = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("-"); };

  if (c.format == Format::Json) {
    out << design_json(c, n, s).dump(2) << '\n';
    return kExitOk;
  }
  if (c.format == Format::Csv) {
    out << "v,b,r,k,kind,m_classes,lambdas,class_sizes,scheme_valid\n";
    out << s.v << ',' << s.b << ',' << (s.r ? std::to_string(*s.r) : "") << ','
        << (s.k ? std::to_string(*s.k) : "") << ',' << to_string(s.kind) << ',' << s.lambdas.size()
        << ',' << join(s.lambdas, ";") << ',' << join(s.class_sizes, ";") << ','
        << (valid ? "true" : "false") << '\n';
    return kExitOk;
  }
  out << header(c, n) << '\n';
  out << "v = " << s.v << ", b = " << s.b << ", r = " << opt(s.r) << ", k = " << opt(s.k) << '\n';
  out << "kind: " << to_string(s.kind) << " (" << s.lambdas.size() << " classes)\n";
  out << "lambda: " << join(s.lambdas, " ") << '\n';
  out << "n_i: " << (s.class_sizes.empty() ? "-" : join(s.class_sizes, " ")) << '\n';
  out << "scheme: " << (valid ? "valid" : "invalid (" + (s.scheme ? s.scheme->witness() : "") + ")")
      << '\n';
  if (valid) {
    for (int i = 1; i <= s.scheme->class_count(); ++i)
      out << "P_" << i << ":\n" << render_matrix(s.scheme->p_matrix(i));
  }
  return kExitOk;
}

int run_graph(const RunConfig& c, std::ostream& out) {
  require_single(c, "graph");
  if (c.format == Format::Csv) throw UsageError("graph supports dot or json output");
  const GraphFormat format = c.format == Format::Json ? GraphFormat::Json : GraphFormat::Dot;
  const IncidenceMatrix incidence = to_incidence(build_sign_matrix(c.rule, c.n_lo, c.convention));
  if (c.view == "levi") out << export_graph(levi_graph(incidence), format);
  else out << export_graph(adjacency_graph(incidence.entries()), format);
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  require_format(c, {Format::Text, Format::Json, Format::Csv}, "verify");
  if (admissible_orders(c.rule, c.n_lo, c.n_hi).empty()) check_order(c.rule, c.n_lo);
  const auto results = verify_claims(c.rule, c.convention, c.n_lo, c.n_hi);
  const bool ok = all_passed(results);

  if (c.format == Format::Json) {
    Json j{{"type", rule_number(c.rule)},
           {"convention", std::string(to_string(c.convention))},
           {"range", {c.n_lo, c.n_hi}}};
    Json claims = Json::array();
    for (const auto& r : results)
      claims.push_back({{"claim", r.claim},
                        {"description", r.description},
                        {"status", std::string(to_string(r.status))},
                        {"checked", r.checked},
                        {"detail", r.detail}});
    j["claims"] = std::move(claims);
    j["ok"] = ok;
    out << j.dump(2) << '\n';
  } else if (c.format == Format::Csv) {
    out << "claim,status,checked,detail\n";
    for (const auto& r : results)
      out << r.claim << ',' << to_string(r.status) << ',' << r.checked << ",\"" << r.detail << "\"\n";
  } else {
    out << "verify type " << rule_number(c.rule) << ", n = " << c.n_lo << ".." << c.n_hi
        << ", convention " << to_string(c.convention) << '\n';
    for (const auto& r : results) {
      out << to_string(r.status) << "  " << std::left << std::setw(10) << r.claim << std::right << "  "
          << r.description << "  [" << r.checked << " orders]";
      if (!r.detail.empty()) out << "  -- " << r.detail;
      out << '\n';
    }
    out << (ok ? "all claims hold" : "verification FAILED") << '\n';
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_scan(const RunConfig& c, std::ostream& out) {
  require_format(c, {Format::Text, Format::Json, Format::Csv}, "scan");
  if (c.n_hi > c.cap)
    throw UsageError("scan range exceeds cap " + std::to_string(c.cap) + " (raise it with --cap)");
  if (admissible_orders(c.rule, c.n_lo, c.n_hi).empty()) check_order(c.rule, c.n_lo);
  const auto rows = scan_range(c.rule, c.convention, c.n_lo, c.n_hi);

  if (c.format == Format::Json) {
    Json j = Json::array();
    for (const auto& r : rows)
      j.push_back({{"n", r.n},
                   {"type", r.type},
                   {"convention", r.convention},
                   {"det", r.det},
                   {"det_predicted", r.det_predicted.empty() ? Json(nullptr) : Json(r.det_predicted)},
                   {"det_match", r.det_match.empty() ? Json(nullptr) : Json(r.det_match == "true")},
                   {"distinct_g", r.distinct_g},
                   {"design_kind", r.design_kind},
                   {"m_classes", r.m_classes},
                   {"scheme_valid", r.scheme_valid}});
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "n,type,convention,det,det_predicted,det_match,distinct_g,design_kind,m_classes,scheme_valid\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.type << ',' << r.convention << ',' << r.det << ',' << r.det_predicted << ','
        << r.det_match << ',' << join(r.distinct_g, ";") << ',' << r.design_kind << ','
        << r.m_classes << ',' << (r.scheme_valid ? "true" : "false") << '\n';
  return kExitOk;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::Gen: return run_gen(c, out);
      case Command::Analyze: return run_analyze(c, out);
      case Command::Design: return run_design(c, out);
      case Command::Graph: return run_graph(c, out);
      case Command::Verify: return run_verify(c, out);
      case Command::Scan: return run_scan(c, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!config) return kExitOk;

  if (!config->out) return run(*config, out, err);
  std::ostringstream buffer;
  const int status = run(*config, buffer, err);
  std::ofstream file(*config->out, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << *config->out << " for writing\n";
    return kExitUsage;
  }
  file << buffer.str();
  return status;
}

}  // namespace mmatrix::cli
