// altrat: tables, quadrature rules, expansions, plot series and the identity
// audit for the alternative rational functions R_nk^(gamma,beta) on [1, inf).

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "altrat/altrat.hpp"
#include "output.hpp"

namespace {

using namespace altrat;
using altrat::cli::CsvTable;
using altrat::cli::csv_number;
using altrat::cli::Format;
using altrat::cli::Json;
using altrat::cli::json_number;

constexpr int kExitDomain = 2;
constexpr int kExitComputation = 3;

struct FamilyArgs {
  std::string family;
  std::optional<double> gamma, beta;
};

void add_family_options(CLI::App* sub, FamilyArgs& a) {
  sub->add_option("--family", a.family, "A, T, legendre-mixed");
  sub->add_option("--gamma", a.gamma, "weight exponent of x");
  sub->add_option("--beta", a.beta, "weight exponent of x-1");
}

Family resolve_family(const FamilyArgs& a) {
  if (!a.family.empty()) {
    if (a.gamma || a.beta) throw DomainError("give either --family or --gamma/--beta, not both");
    if (a.family == "A") return Family::named(FamilyTag::A);
    if (a.family == "T") return Family::named(FamilyTag::T);
    if (a.family == "legendre-mixed") return Family::named(FamilyTag::LegendreMixed);
    throw DomainError("unknown family '" + a.family + "' (expected A, T or legendre-mixed)");
  }
  if (!a.gamma || !a.beta) throw DomainError("either --family or both --gamma and --beta are required");
  return Family::generic(classify_params(*a.gamma, *a.beta));
}

Json family_header(const Family& f) {
  Json j;
  j["family"] = f.name();
  j["gamma"] = f.params.gamma;
  j["beta"] = f.params.beta;
  return j;
}

void emit(Format fmt, const Json& doc, const CsvTable& table) {
  if (fmt == Format::Json)
    cli::write_json(std::cout, doc);
  else
    table.write(std::cout);
}

// ---- coeffs

struct CoeffsArgs {
  FamilyArgs fam;
  int n = 0;
  std::optional<int> k;
};

void cmd_coeffs(const CoeffsArgs& a, Format fmt) {
  const Family family = resolve_family(a.fam);
  if (a.n < 0 || a.n > kMaxOrder) throw DomainError("n must satisfy 0 <= n <= " + std::to_string(kMaxOrder));
  std::vector<int> ks;
  if (a.k) {
    ks.push_back(*a.k);
  } else {
    for (int k = family.first_index(); k <= a.n; ++k) ks.push_back(k);
  }
  Json doc = family_header(family);
  doc["n"] = a.n;
  doc["rows"] = Json::array();
  CsvTable table{{"n", "k", "j", "coefficient"}, {}};
  for (int k : ks) {
    const auto c = family.coeffs<double>(a.n, k);
    Json row;
    row["k"] = k;
    row["coeffs"] = Json::array();
    for (int j = k; j <= a.n; ++j) {
      row["coeffs"].push_back(Json{{"j", j}, {"value", c.at(j)}});
      table.rows.push_back({std::to_string(a.n), std::to_string(k), std::to_string(j), csv_number(c.at(j))});
    }
    doc["rows"].push_back(row);
  }
  emit(fmt, doc, table);
}

// ---- rule

struct RuleArgs {
  std::string kind;
  int n = 0;
  std::optional<int> k;
  std::optional<double> gamma, beta;
};

void cmd_rule(const RuleArgs& a, Format fmt) {
  std::optional<HalfLineRule<double>> rule;
  if (a.kind == "radau") {
    if (a.gamma || a.beta) throw DomainError("the radau rule has the fixed weight 1/x^2; drop --gamma/--beta");
    rule.emplace(radau_rational_rule<double>(a.n));
  } else if (a.kind == "altgauss" || a.kind == "directgauss") {
    if (!a.gamma || !a.beta) throw DomainError("--gamma and --beta are required for " + a.kind);
    if (!a.k) throw DomainError("-k is required for " + a.kind);
    const ParamPair p = classify_params(*a.gamma, *a.beta);
    if (a.kind == "altgauss")
      rule.emplace(alt_gauss_rule<double>(a.n, *a.k, p));
    else
      rule.emplace(direct_gauss_rule<double>(a.n, *a.k, p));
  } else {
    throw DomainError("unknown rule kind '" + a.kind + "' (expected altgauss, directgauss or radau)");
  }

  Json doc;
  doc["kind"] = to_string(rule->kind());
  doc["gamma"] = rule->params().gamma;
  doc["beta"] = rule->params().beta;
  doc["n"] = rule->n();
  doc["k"] = rule->kind() == RuleKind::RadauRational ? Json(nullptr) : Json(rule->k());
  doc["nodes"] = Json::array();
  doc["weights"] = Json::array();
  CsvTable table{{"node", "weight"}, {}};
  if (rule->at_infinity()) {
    const double inf = std::numeric_limits<double>::infinity();
    doc["nodes"].push_back(json_number(inf));
    doc["weights"].push_back(rule->infinity_weight());
    table.rows.push_back({csv_number(inf), csv_number(rule->infinity_weight())});
  }
  for (std::size_t i = 0; i < rule->nodes().size(); ++i) {
    doc["nodes"].push_back(rule->nodes()[i]);
    doc["weights"].push_back(rule->weights()[i]);
    table.rows.push_back({csv_number(rule->nodes()[i]), csv_number(rule->weights()[i])});
  }
  doc["at_infinity"] = rule->at_infinity();
  doc["exact_j"] = Json::array({rule->j_lo(), rule->j_hi()});
  emit(fmt, doc, table);
}

// ---- audit

struct AuditArgs {
  double gamma = 0, beta = 0;
  int n = 0;
  std::vector<double> xs;
  double tolerance = kIdentityTolerance;
};

void cmd_audit(const AuditArgs& a, Format fmt) {
  const ParamPair p = classify_params(a.gamma, a.beta);
  require_valid(p);
  std::vector<double> xs = a.xs;
  if (xs.empty()) xs.assign(kDefaultAuditXs.begin(), kDefaultAuditXs.end());
  const IdentityReport report = identity_audit(a.n, p, xs, a.tolerance);

  Json doc;
  doc["gamma"] = p.gamma;
  doc["beta"] = p.beta;
  doc["n_max"] = report.n_max;
  doc["tolerance"] = report.tolerance;
  doc["xs"] = report.sample_xs;
  Json summary = Json::object();
  for (IdentityId id : kAllIdentities) summary[std::string(to_string(id))] = to_string(report.verdict(id));
  doc["summary"] = summary;
  doc["flagged"] = report.flagged().size();
  doc["rows"] = Json::array();
  CsvTable table{{"identity", "n", "k", "p", "x", "residual", "verdict"}, {}};
  for (const auto& r : report.rows) {
    Json row;
    row["identity"] = to_string(r.id);
    row["n"] = r.n;
    row["k"] = r.k;
    row["p"] = r.p;
    row["x"] = r.x;
    row["residual"] = r.residual;
    row["verdict"] = to_string(r.verdict);
    doc["rows"].push_back(row);
    table.rows.push_back({std::string(to_string(r.id)), std::to_string(r.n), std::to_string(r.k),
                          std::to_string(r.p), csv_number(r.x), csv_number(r.residual),
                          std::string(to_string(r.verdict))});
  }
  emit(fmt, doc, table);
}

// ---- project

struct ProjectArgs {
  FamilyArgs fam;
  int n = 0;
  std::string builtin;
  std::string input;
};

/// Samples file: lines "x,f(x)"; an optional first row "inf,<limit>".
HalfLineFunction read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read samples file '" + path + "'");
  auto samples = std::make_shared<std::map<double, double>>();
  std::optional<double> limit;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DomainError("samples line " + std::to_string(lineno) + ": expected x,f");
    const std::string xs = line.substr(0, comma);
    double f;
    try {
      f = std::stod(line.substr(comma + 1));
      if (xs == "inf") {
        limit = f;
      } else {
        (*samples)[std::stod(xs)] = f;
      }
    } catch (const std::logic_error&) {
      throw DomainError("samples line " + std::to_string(lineno) + ": not a number");
    }
  }
  auto value = [samples](double x) {
    // sample abscissas must coincide with the rule's nodes
    auto it = samples->lower_bound(x * (1 - 1e-12));
    if (it == samples->end() || std::abs(it->first - x) > 1e-12 * x) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "samples file has no value at rule node x=" << x;
      throw DomainError(msg.str());
    }
    return it->second;
  };
  return {value, limit};
}

void cmd_project(const ProjectArgs& a, Format fmt) {
  const Family family = resolve_family(a.fam);
  if (a.builtin.empty() == a.input.empty()) throw DomainError("give exactly one of --builtin or --input");
  const HalfLineFunction f = a.builtin.empty() ? read_samples(a.input) : builtin_function(a.builtin);
  const Expansion e = project(f, family, a.n);

  Json doc = family_header(family);
  doc["n"] = e.n;
  doc["includes_k0"] = e.includes_k0();
  doc["coefficients"] = Json::array();
  CsvTable table{{"k", "coefficient"}, {}};
  for (int k = e.first; k <= e.n; ++k) {
    doc["coefficients"].push_back(Json{{"k", k}, {"value", e.coefficient(k)}});
    table.rows.push_back({std::to_string(k), csv_number(e.coefficient(k))});
  }
  doc["limit_at_infinity"] = synthesize(e, std::numeric_limits<double>::infinity());
  emit(fmt, doc, table);
}

// ---- plot

struct PlotArgs {
  FamilyArgs fam;
  int n = 0;
  double from = 1, to = 10;
  int points = 200;
};

void cmd_plot(const PlotArgs& a, Format fmt) {
  const Family family = resolve_family(a.fam);
  if (!(a.from >= 1) || !(a.to > a.from) || std::isinf(a.to)) {
    throw DomainError("plot range must satisfy 1 <= from < to < inf");
  }
  if (a.points < 2) throw DomainError("--points must be >= 2");
  std::vector<int> ks;
  for (int k = family.first_index(); k <= a.n; ++k) ks.push_back(k);

  Json doc = family_header(family);
  doc["n"] = a.n;
  doc["x"] = Json::array();
  doc["series"] = Json::array();
  CsvTable table{{"x"}, {}};
  for (int k : ks) table.header.push_back("k=" + std::to_string(k));
  std::vector<Json> series(ks.size(), Json::array());
  for (int i = 0; i < a.points; ++i) {
    const double x = i + 1 == a.points ? a.to : a.from + (a.to - a.from) * i / (a.points - 1);
    doc["x"].push_back(x);
    std::vector<std::string> row{csv_number(x)};
    for (std::size_t b = 0; b < ks.size(); ++b) {
      const double v = family.value(a.n, ks[b], x);
      series[b].push_back(v);
      row.push_back(csv_number(v));
    }
    table.rows.push_back(std::move(row));
  }
  for (std::size_t b = 0; b < ks.size(); ++b) {
    doc["series"].push_back(Json{{"k", ks[b]}, {"values", series[b]}});
  }
  emit(fmt, doc, table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternative orthogonal rational functions on [1, inf)"};
  app.require_subcommand(1);

  std::string format;
  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  CoeffsArgs coeffs;
  auto* c = app.add_subcommand("coeffs", "coefficient table c_j of R_nk");
  add_family_options(c, coeffs.fam);
  c->add_option("-n", coeffs.n, "order n")->required();
  c->add_option("-k", coeffs.k, "index k (all k when omitted)");
  add_format(c);

  RuleArgs rule;
  auto* r = app.add_subcommand("rule", "quadrature rule on [1, inf)");
  r->add_option("--kind", rule.kind, "altgauss, directgauss or radau")->required();
  r->add_option("-n", rule.n, "order n")->required();
  r->add_option("-k", rule.k, "index k");
  r->add_option("--gamma", rule.gamma, "weight exponent of x");
  r->add_option("--beta", rule.beta, "weight exponent of x-1");
  add_format(r);

  AuditArgs audit;
  auto* au = app.add_subcommand("audit", "residual table of the identities for n <= n_max");
  au->add_option("--gamma", audit.gamma, "weight exponent of x")->required();
  au->add_option("--beta", audit.beta, "weight exponent of x-1")->required();
  au->add_option("-n", audit.n, "n_max")->required();
  au->add_option("--x", audit.xs, "sample abscissas (default 1.1 2 5 50)");
  au->add_option("--tolerance", audit.tolerance, "pass threshold");
  add_format(au);

  ProjectArgs proj;
  auto* p = app.add_subcommand("project", "expansion coefficients of a function");
  add_family_options(p, proj.fam);
  p->add_option("-n", proj.n, "order n")->required();
  p->add_option("--builtin", proj.builtin, "const1, recip or recip1p");
  p->add_option("--input", proj.input, "CSV samples x,f(x) at the rule nodes");
  add_format(p);

  PlotArgs plot;
  auto* pl = app.add_subcommand("plot", "values of R_nk for every k on a uniform grid");
  add_family_options(pl, plot.fam);
  pl->add_option("-n", plot.n, "order n")->required();
  pl->add_option("--from", plot.from, "left end (>= 1)");
  pl->add_option("--to", plot.to, "right end");
  pl->add_option("--points", plot.points, "number of grid points");
  add_format(pl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitDomain;
  }

  try {
    if (*c) {
      cmd_coeffs(coeffs, formats.at(format.empty() ? "json" : format));
    } else if (*r) {
      cmd_rule(rule, formats.at(format.empty() ? "json" : format));
    } else if (*au) {
      cmd_audit(audit, formats.at(format.empty() ? "json" : format));
    } else if (*p) {
      cmd_project(proj, formats.at(format.empty() ? "json" : format));
    } else if (*pl) {
      cmd_plot(plot, formats.at(format.empty() ? "csv" : format));
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ComputationError& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kExitComputation;
  }
  return 0;
}
