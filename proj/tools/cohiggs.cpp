// cohiggs: tables, solver and verification reports for co-Higgs bundles on the plane.
//
// Exit codes: 0 ok, 1 usage, 2 route disagreement or failed check,
// 3 not integrable, 4 not stable, 5 malformed input.

#include <algorithm>
#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohiggs/defcomplex.hpp"
#include "cohiggs/errors.hpp"
#include "cohiggs/higgsfields.hpp"
#include "cohiggs/report.hpp"
#include "cohiggs/sampling.hpp"
#include "cohiggs/schwarz.hpp"
#include "cohiggs/verify.hpp"
#include "json.hpp"

using namespace cohiggs;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kFailed = 2, kNotIntegrable = 3, kNotStable = 4, kBadInput = 5 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

long parse_long(const std::string& text) {
  long v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("not an integer: '" + text + "'");
  return v;
}

/// "a..b" or "a".
std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(text);
    return {v, v};
  }
  const long a = parse_long(text.substr(0, dots));
  const long b = parse_long(text.substr(dots + 2));
  if (a > b) throw UsageError("empty range '" + text + "'");
  return {a, b};
}

std::string slug(const SchwarzSheaf& s) { return s.tensor_tangent ? "tensor-T" : "twist-" + std::to_string(s.twist); }

std::string pad(long n) { return (n < 10 ? "0" : "") + std::to_string(n); }

void emit(const json& j, const std::string& format, const std::string& markdown) {
  if (format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << markdown;
}

std::string lines(const std::vector<std::string>& xs, const std::string& indent = "  ") {
  std::string out;
  for (const auto& x : xs) out += indent + x + "\n";
  return out;
}

// ---- tables ------------------------------------------------------------------

struct TablesOpts {
  std::optional<long> k;
  std::string k_range;
  std::string routes = "closed,kunneth,rr";
  std::string format = "md";
};

int cmd_tables(const TablesOpts& o) {
  std::pair<long, long> range{3, 3};
  if (o.k && !o.k_range.empty()) throw UsageError("give --k or --k-range, not both");
  if (o.k) range = {*o.k, *o.k};
  if (!o.k_range.empty()) range = parse_range(o.k_range);
  if (range.first < 3 || range.second > 64) throw UsageError("k must lie in [3, 64]");
  std::vector<Route> routes;
  try {
    routes = parse_routes(o.routes);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  VerificationReport report;
  std::string md;
  for (long k = range.first; k <= range.second; ++k) {
    const DimTable t = compute_table(k, routes);
    md += (md.empty() ? "" : "\n") + t.to_markdown();
    for (const auto& row : t.rows) {
      json computed = json::object(), expected = json::object();
      std::string names;
      for (const auto& [route, prof] : row.routes) {
        computed[to_string(route)] = prof.h;
        expected[to_string(route)] = table_formula(k, row.sheaf).h;
        names += (names.empty() ? "" : ", ") + to_string(route);
      }
      report.add(make_check("tables.k" + pad(k) + "." + slug(row.sheaf), "cohomology of " + row.sheaf.label(),
                            names, computed, expected, t.disagreements()));
    }
  }
  if (!report.all_pass()) {
    md += "\nroute disagreement:\n" + lines(report.failing_ids());
  }
  emit(report.to_json(), o.format, md);
  return report.all_pass() ? kOk : kFailed;
}

// ---- solve ---------------------------------------------------------------------

struct SolveOpts {
  std::string bundle;
  std::string a, b, c;
  std::uint64_t seed = 0;
  std::string format = "md";
};

json regularity_json(const RegularityReport& r) {
  json bad = json::array();
  for (const auto& p : r.non_regular) bad.push_back(p.to_string());
  return {{"points_checked", r.checked.size()}, {"regular", r.regular()}, {"non_regular", bad}};
}

std::vector<ProjectivePoint> sample_points(const SplitHiggs& h, Sampler& rng) {
  std::vector<ProjectivePoint> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto push = [&](const ProjectivePoint& p) {
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  };
  if (h.c().twist() == -1 && !h.c().is_zero()) push(zero_locus(h.c()));
  while (pts.size() < 10) {
    const Vector v = rng.nonzero_vector(3);
    push({v[0], v[1], v[2]});
  }
  return pts;
}

int cmd_solve(const SolveOpts& o) {
  const SplitBundle bundle = parse_split_bundle(o.bundle);
  const int d = bundle.delta();
  Sampler rng(o.seed);
  json out{{"bundle", bundle.to_string()}};
  std::string md = "bundle: " + bundle.to_string() + "\n";

  if (d >= 2 || d <= -2) {
    const std::string why = "|m1 - m2| = " + std::to_string(d < 0 ? -d : d) +
                            " >= 2: the larger summand is invariant under every field";
    std::cerr << "not stable: " << why << "\n";
    return kNotStable;
  }

  const bool full = !o.a.empty() || !o.b.empty();
  if (!full && d < 0) throw UsageError("with only --C, list the larger summand first (split:m1,m2 with m1 >= m2)");
  auto field = [&](const std::string& name, const std::string& text, int twist) {
    try {
      return parse_vector_field(text, twist);
    } catch (const GradingMismatch& e) {
      throw GradingMismatch("--" + name + " on " + bundle.to_string() + " lies in H0(T(" + std::to_string(twist) +
                            ")), components of degree " + std::to_string(twist + 1) + ": " + e.what());
    }
  };
  const TwistedVectorField c = field("C", o.c, -d);

  SplitHiggs h = SplitHiggs::zero(bundle);
  if (full) {
    const auto a = o.a.empty() ? TwistedVectorField::zero(0) : field("A", o.a, 0);
    const auto b = o.b.empty() ? TwistedVectorField::zero(d) : field("B", o.b, d);
    h = SplitHiggs(bundle, a, b, c).normalized();
    if (!is_integrable(h)) throw NotIntegrable("Phi ^ Phi != 0");
    out["field"] = to_json(h);
  } else {
    if (c.is_zero()) throw NotStable("C = 0 leaves the first summand invariant");
    const IntegrableSolution sol = solve_integrable(c, bundle);
    out["a_space"] = sol.a_space.size();
    out["b_space"] = sol.b_space.size();
    out["lambda_dim"] = sol.lambda_basis.size();
    out["mu_dim"] = sol.mu_basis.size();
    out["simple_parametrization"] = sol.simple_parametrization;
    md += "A-space: " + std::to_string(sol.a_space.size()) + " (A = lambda C, lambda in H0(O(" +
          std::to_string(d) + ")))\n";
    md += "B-space: " + std::to_string(sol.b_space.size()) + " (B = mu C, mu in H0(O(" + std::to_string(2 * d) +
          ")))\n";
    md += std::string("simple parametrization: ") + (sol.simple_parametrization ? "yes" : "no") + "\n";
    Poly lambda = rng.poly(Grading::plane(d));
    Poly mu = rng.poly(Grading::plane(2 * d));
    while (mu.is_zero()) mu = rng.poly(Grading::plane(2 * d));
    h = sol.field(lambda, mu);
    out["sample"] = {{"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"field", to_json(h)}};
    md += "sample: lambda = " + lambda.to_string() + ", mu = " + mu.to_string() + "\n";
  }

  const StabilityVerdict verdict = is_stable_split(h);
  out["stability"] = {{"status", to_string(verdict.status)}, {"witness", verdict.witness}};
  md += "stability: " + to_string(verdict.status) + (verdict.witness.empty() ? "" : " (" + verdict.witness + ")") +
        "\n";
  if (!verdict.stable()) {
    emit(out, o.format, md);
    return kNotStable;
  }
  const Normalization n = gauge_normalize(h);
  const NormalForm canon = n.form.canonical();
  out["normal_form"] = {{"q", canon.q.to_string()}, {"C", vector_field_literal(canon.c)}};
  out["hitchin_det"] = hitchin_det(h).to_string();
  out["nilpotent"] = is_nilpotent(h);
  const RegularityReport reg = regularity_check(h, sample_points(h, rng));
  out["regularity"] = regularity_json(reg);
  md += "normal form: (0 q; 1 0) (x) C with q = " + canon.q.to_string() + ", C = (" + vector_field_literal(canon.c) +
        ")\n";
  md += "hitchin det: " + hitchin_det(h).to_string() + "\n";
  md += "regularity: " + std::to_string(reg.checked.size()) + " points, " +
        std::to_string(reg.non_regular.size()) + " non-regular";
  for (const auto& p : reg.non_regular) md += " " + p.to_string();
  md += "\n";
  emit(out, o.format, md);
  return kOk;
}

// ---- h1 --------------------------------------------------------------------------

struct H1Opts {
  std::string family;
  std::optional<long> k;
  std::uint64_t seed = 0;
  std::string format = "md";
};

TwistedVectorField random_field(Sampler& rng, int twist) {
  for (;;) {
    auto v = TwistedVectorField::from_coordinates(twist, rng.vector(tfield_dim(twist)));
    if (!v.is_zero()) return v;
  }
}

int cmd_h1(const H1Opts& o) {
  Sampler rng(o.seed);
  E2Summary s;
  json field;
  if (o.family == "schwarzenberger") {
    if (!o.k) throw UsageError("--family schwarzenberger needs --k");
    if (*o.k < 3) throw UsageError("k must be at least 3");
    s = schwarz_e2(*o.k);
    field = {{"family", o.family}, {"k", *o.k}};
  } else if (o.family == "tangent") {
    for (;;) {
      const auto h = TangentHiggs::simple(rng.nonzero_vector(kEndoCount), rng.nonzero_vector(kFieldCount));
      if (tangent_factor(h).first.det().is_zero()) continue;
      s = tangent_e2(h);
      field = to_json(h);
      break;
    }
  } else {
    const SplitBundle bundle = parse_split_bundle(o.family).normalized();
    if (!(bundle == SplitBundle{0, -1}) && !(bundle == SplitBundle{0, 0})) {
      throw UsageError("family must be split:0,-1, split:0,0, tangent or schwarzenberger");
    }
    const int d = bundle.delta();
    const auto sol = solve_integrable(random_field(rng, -d), bundle);
    Poly mu = rng.poly(Grading::plane(2 * d));
    while (mu.is_zero()) mu = rng.poly(Grading::plane(2 * d));
    const SplitHiggs h = sol.field(rng.poly(Grading::plane(d)), mu);
    s = split_e2(h);
    field = to_json(h);
  }
  json out = s.to_json();
  out["field"] = field;
  out["seed"] = o.seed;
  std::string md = "field: " + field.dump() + "\n";
  md += "E2^{1,0} = " + std::to_string(s.e2_10) + "\nE2^{0,1} = " + std::to_string(s.e2_01) +
        "\nrank d2 = " + std::to_string(s.d2_rank) + "\nh1 = " + std::to_string(s.h1) + "\nledger:\n" +
        lines(s.ledger);
  if (!s.assumptions.empty()) md += "assumptions:\n" + lines(s.assumptions);
  emit(out, o.format, md);
  return kOk;
}

// ---- chern -----------------------------------------------------------------------

int cmd_chern(std::optional<long> k, const std::string& k_range, const std::string& format) {
  std::pair<long, long> range{3, 3};
  if (k) range = {*k, *k};
  if (!k_range.empty()) range = parse_range(k_range);
  if (range.first < 0) throw UsageError("k must be nonnegative");
  json rows = json::array();
  std::string md = "| k | c(V_k) | c(V_k^) | twist | (c1, c2) | family index |\n|---|---|---|---|---|---|\n";
  for (long i = range.first; i <= range.second; ++i) {
    const auto [v, dv] = schwarz_chern(i);
    const ChernCoverage cov = chern_coverage(i);
    rows.push_back({{"k", i},
                    {"chern", {v.rank, v.c1, v.c2}},
                    {"dual", {dv.rank, dv.c1, dv.c2}},
                    {"twist", cov.twist},
                    {"normalized", {cov.c1, cov.c2}},
                    {"family_index", cov.family_index}});
    auto t = [](long a, long b, long c) {
      return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
    };
    md += "| " + std::to_string(i) + " | " + t(v.rank, v.c1, v.c2) + " | " + t(dv.rank, dv.c1, dv.c2) + " | " +
          std::to_string(cov.twist) + " | (" + std::to_string(cov.c1) + ", " + std::to_string(cov.c2) + ") | " +
          std::to_string(cov.family_index) + " |\n";
  }
  emit(rows, format, md);
  return kOk;
}

// ---- conic -----------------------------------------------------------------------

int cmd_conic(const std::string& text, const std::string& format) {
  const Poly rho = parse_poly(text);
  const bool singular = conic_singular(rho);
  const Matrix m = conic_matrix(rho);
  json rows = json::array();
  std::string md = "conic: " + rho.to_string() + "\nmatrix:\n";
  for (std::size_t i = 0; i < 3; ++i) {
    json row = json::array();
    md += "  ";
    for (std::size_t j = 0; j < 3; ++j) {
      row.push_back(to_string(m(i, j)));
      md += to_string(m(i, j)) + (j < 2 ? " " : "\n");
    }
    rows.push_back(row);
  }
  md += std::string(singular ? "singular" : "nonsingular") + "\n";
  emit({{"conic", rho.to_string()}, {"matrix", rows}, {"singular", singular}}, format, md);
  return kOk;
}

// ---- verify-all --------------------------------------------------------------------

int cmd_verify_all(const std::string& seeds, const std::string& format) {
  const auto [lo, hi] = parse_range(seeds);
  if (lo < 0) throw UsageError("seed must be nonnegative");
  std::optional<VerificationReport> first;
  bool consistent = true;
  for (long s = lo; s <= hi; ++s) {
    VerificationReport r = verify_all(static_cast<std::uint64_t>(s));
    if (!first) {
      first = std::move(r);
    } else if (r.verdicts() != first->verdicts()) {
      consistent = false;
      std::cerr << "seed " << s << " changes the pass/fail pattern\n";
    }
  }
  emit(first->to_json(), format, first->to_markdown());
  const auto failing = first->failing_ids();
  for (const auto& id : failing) std::cerr << "failed: " << id << "\n";
  return failing.empty() && consistent ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"co-Higgs bundles on the plane: tables, solver, deformation counts, verification"};
  app.require_subcommand(1);
  std::string format = "md";
  const auto formats = CLI::IsMember({"md", "json"});

  TablesOpts tables;
  auto* t = app.add_subcommand("tables", "cohomology tables for End0 V_k");
  t->add_option("--k", tables.k, "Schwarzenberger index");
  t->add_option("--k-range", tables.k_range, "range a..b");
  t->add_option("--routes", tables.routes, "comma-separated: closed, kunneth, rr");
  t->add_option("--format", tables.format)->check(formats);

  SolveOpts solve;
  auto* s = app.add_subcommand("solve", "integrable fields and normal form on O(m1) + O(m2)");
  s->add_option("--bundle", solve.bundle, "split:m1,m2")->required();
  s->add_option("--C", solve.c, "lower-left entry, \"P0, P1, P2\"")->required();
  s->add_option("--A", solve.a, "diagonal entry");
  s->add_option("--B", solve.b, "upper-right entry");
  s->add_option("--seed", solve.seed);
  s->add_option("--format", solve.format)->check(formats);

  H1Opts h1;
  auto* h = app.add_subcommand("h1", "first-order deformations of a random field in a family");
  h->add_option("--family,--bundle", h1.family, "split:0,-1, split:0,0, tangent or schwarzenberger")->required();
  h->add_option("--k", h1.k);
  h->add_option("--seed", h1.seed);
  h->add_option("--format", h1.format)->check(formats);

  std::optional<long> chern_k;
  std::string chern_range;
  auto* c = app.add_subcommand("chern", "Chern data of V_k and its normalization");
  c->add_option("--k", chern_k);
  c->add_option("--k-range", chern_range);
  c->add_option("--format", format)->check(formats);

  std::string conic_text;
  auto* q = app.add_subcommand("conic", "nonsingularity of a plane conic");
  q->add_option("rho", conic_text, "quadratic form, e.g. \"x0*x1 - x2^2\"")->required();
  q->add_option("--format", format)->check(formats);

  std::string seeds = "0";
  auto* v = app.add_subcommand("verify-all", "run the acceptance suite");
  v->add_option("--seed", seeds, "seed or range a..b");
  v->add_option("--format", format)->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*t) return cmd_tables(tables);
    if (*s) return cmd_solve(solve);
    if (*h) return cmd_h1(h1);
    if (*c) return cmd_chern(chern_k, chern_range, format);
    if (*q) return cmd_conic(conic_text, format);
    if (*v) return cmd_verify_all(seeds, format);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const NotIntegrable& e) {
    std::cerr << "not integrable: " << e.what() << "\n";
    return kNotIntegrable;
  } catch (const NotStable& e) {
    std::cerr << "not stable: " << e.what() << "\n";
    return kNotStable;
  } catch (const RouteDisagreement& e) {
    std::cerr << "route disagreement: " << e.what() << "\n";
    return kFailed;
  } catch (const DomainError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  }
  return kUsage;
}
