#include "cohiggs/schwarz.hpp"

#include <algorithm>
#include <sstream>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

void require_range(long k, long d) {
  if (k < 3) throw DomainError("Schwarzenberger index must be at least 3, got " + std::to_string(k));
  if (d < 0) throw DomainError("twist must be nonnegative, got " + std::to_string(d));
}

std::string triple(const std::array<long, 3>& h) {
  return "(" + std::to_string(h[0]) + ", " + std::to_string(h[1]) + ", " + std::to_string(h[2]) + ")";
}

std::string quadric_name(long a, long b) { return "O(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

CohomProfile make_profile(std::array<long, 3> h, Route route, std::vector<std::string> ledger) {
  CohomProfile p;
  p.h = h;
  p.route = route;
  p.ledger = std::move(ledger);
  return p;
}

void append(std::vector<std::string>& into, const std::vector<std::string>& from) {
  into.insert(into.end(), from.begin(), from.end());
}

// 0 -> O(d,d) -> f*V^(d, d+k) -> O(d-k+1, d+k+1) -> 0 on the quadric; the
// middle term computes H(End V_k(d)) by the projection formula.
LesResult endo_chase(long k, long d) {
  LesInput in;
  in.sub = line_bundle_quadric(d, d);
  in.quotient = line_bundle_quadric(d - k + 1, d + k + 1);
  in.label = "0 -> " + quadric_name(d, d) + " -> f*V^(" + std::to_string(d) + "," + std::to_string(d + k) +
             ") -> " + quadric_name(d - k + 1, d + k + 1) + " -> 0";
  return les_chase(in);
}

CohomProfile resolved(const LesResult& r, const std::string& what) {
  if (!r.exact()) throw ChaseUnresolved(what + " is not determined by the long exact sequence");
  return r.profile(Route::KunnethChase);
}

}  // namespace

long endo_twist_h0(long k, long d) {
  require_range(k, d);
  const long extra = d >= k - 1 ? (d + 2) * (d + 2) - k * k : 0;
  return d * (d + 1) / 2 + extra;
}

long endo_twist_h1(long k, long d) {
  require_range(k, d);
  return d >= k - 1 ? 0 : k * k - d * d - 4 * d - 4;
}

long endo_tangent_h0(long k) {
  require_range(k, 0);
  return k == 3 ? 8 : 3;
}

std::string SchwarzSheaf::label() const {
  if (tensor_tangent) return "End0 V_k (x) T";
  if (twist == 0) return "End0 V_k";
  return "End0 V_k(" + std::to_string(twist) + ")";
}

const std::vector<SchwarzSheaf>& table_rows() {
  static const std::vector<SchwarzSheaf> rows = {SchwarzSheaf::twisted(0), SchwarzSheaf::twisted(1),
                                                 SchwarzSheaf::twisted(2), SchwarzSheaf::tangent(),
                                                 SchwarzSheaf::twisted(3)};
  return rows;
}

CohomProfile closed_form_route(long k, const SchwarzSheaf& s) {
  if (s.tensor_tangent) {
    const long h0 = endo_tangent_h0(k);
    const long h1 = k == 3 ? 0 : 2 * k * k - 23;
    return make_profile({h0, h1, 0}, Route::ClosedForm,
                        {"h0 = " + std::to_string(h0) + (k == 3 ? " (k = 3)" : " (k > 3)"),
                         "h1 = " + std::string(k == 3 ? "0" : "2k^2 - 23 = " + std::to_string(h1))});
  }
  const long d = s.twist;
  const long h0 = endo_twist_h0(k, d);
  const long h1 = endo_twist_h1(k, d);
  std::ostringstream l0, l1;
  l0 << "h0 = d(d+1)/2 + [d >= k-1]((d+2)^2 - k^2) = " << d * (d + 1) / 2 << " + " << h0 - d * (d + 1) / 2
     << " = " << h0;
  l1 << "h1 = " << (d >= k - 1 ? "0 since d >= k-1" : "k^2 - d^2 - 4d - 4 = " + std::to_string(h1));
  return make_profile({h0, h1, 0}, Route::ClosedForm, {l0.str(), l1.str()});
}

long kunneth_endo_h0(long k, long d) {
  const LesResult r = endo_chase(k, d);
  if (r.lo[0] != r.hi[0]) throw ChaseUnresolved("h0(End V_k(" + std::to_string(d) + ")) is not determined");
  return r.lo[0];
}

CohomProfile kunneth_route(long k, const SchwarzSheaf& s) {
  if (k < 3) throw DomainError("Schwarzenberger index must be at least 3");
  std::vector<std::string> ledger;

  if (!s.tensor_tangent) {
    const long d = s.twist;
    const CohomProfile end = resolved(endo_chase(k, d), "h(End V_k(d))");
    const CohomProfile trace = line_bundle_p2(d);
    append(ledger, end.ledger);
    ledger.push_back("h(End V_k(" + std::to_string(d) + ")) = " + triple(end.h));
    append(ledger, trace.ledger);
    std::array<long, 3> h{};
    for (std::size_t i = 0; i < 3; ++i) h[i] = end.h[i] - trace.h[i];
    ledger.push_back("h(End0) = h(End) - h(O(" + std::to_string(d) + ")) = " + triple(h));
    return make_profile(h, Route::KunnethChase, std::move(ledger));
  }

  // f*T on the quadric: 0 -> O(2,0) -> f*T -> O(1,3) -> 0.
  LesInput pulled;
  pulled.sub = line_bundle_quadric(2, 0);
  pulled.quotient = line_bundle_quadric(1, 3);
  pulled.label = "0 -> O(2,0) -> f*T -> O(1,3) -> 0";
  const CohomProfile ft = resolved(les_chase(pulled), "h(f*T)");
  append(ledger, ft.ledger);
  ledger.push_back("h0(f*T) = " + std::to_string(ft.h0()));

  // The same sequence twisted by O(1-k, 1+k).
  LesInput twisted;
  twisted.sub = line_bundle_quadric(3 - k, 1 + k);
  twisted.quotient = line_bundle_quadric(2 - k, 4 + k);
  twisted.label = "0 -> " + quadric_name(3 - k, 1 + k) + " -> f*T" + "(" + std::to_string(1 - k) + "," +
                  std::to_string(1 + k) + ") -> " + quadric_name(2 - k, 4 + k) + " -> 0";
  const CohomProfile ftk = resolved(les_chase(twisted), "h(f*T(1-k,1+k))");
  append(ledger, ftk.ledger);

  // 0 -> f*T -> f*(V^ (x) T)(0,k) -> f*T(1-k,1+k) -> 0 computes H(End V_k (x) T).
  LesInput tensor;
  tensor.sub = ft;
  tensor.quotient = ftk;
  tensor.label = "0 -> f*T -> f*(V^ (x) T)(0,k) -> f*T(1-k,1+k) -> 0";
  const CohomProfile end = resolved(les_chase(tensor), "h(End V_k (x) T)");
  append(ledger, end.ledger);
  ledger.push_back(std::to_string(ft.h0()) + " + " + std::to_string(ftk.h0()) + " = " + std::to_string(end.h0()));

  // Trace part: h(T) from the Euler sequence 0 -> O -> O(1)^3 -> T -> 0.
  LesInput euler;
  euler.sub = line_bundle_p2(0);
  CohomProfile three_lines = line_bundle_p2(1);
  for (auto& x : three_lines.h) x *= 3;
  three_lines.ledger = {"h(O(1)^3) = " + triple(three_lines.h)};
  euler.middle = three_lines;
  euler.label = "0 -> O -> O(1)^3 -> T -> 0";
  const CohomProfile tangent = resolved(les_chase(euler), "h(T)");
  append(ledger, tangent.ledger);

  std::array<long, 3> h{};
  for (std::size_t i = 0; i < 3; ++i) h[i] = end.h[i] - tangent.h[i];
  ledger.push_back(std::to_string(end.h0()) + " - " + std::to_string(tangent.h0()) + " = " + std::to_string(h[0]));
  ledger.push_back("h(End0 V_k (x) T) = " + triple(h));
  return make_profile(h, Route::KunnethChase, std::move(ledger));
}

long rr_chi(long k, const SchwarzSheaf& s) {
  ChernCharacter ch = endo_ch(schwarz_chern(k).first);
  if (s.tensor_tangent) return chi_rr(tensor_ch(ch, tangent_ch()), 0);
  return chi_rr(ch, s.twist);
}

CohomProfile rr_route(long k, const SchwarzSheaf& s) {
  if (k < 3) throw DomainError("Schwarzenberger index must be at least 3");
  std::vector<std::string> ledger;
  const long chi = rr_chi(k, s);
  ledger.push_back("chi(" + s.label() + ") = " + std::to_string(chi) + " by Riemann-Roch");

  // h2 by Serre duality: End_0 V is self-dual and K = O(-3). For the tangent
  // row, Omega(-3) sits inside O(-4)^3 by the dual Euler sequence.
  const long dual_twist = s.tensor_tangent ? -4 : -s.twist - 3;
  const long dual_h0 = kunneth_endo_h0(k, dual_twist);
  if (dual_h0 != 0) throw ChaseUnresolved("h2 is not forced to vanish for " + s.label());
  ledger.push_back(std::string(s.tensor_tangent ? "h2 <= 3 h0(End V_k(-4))" : "h2 = h0(End0 V_k(" +
                                                                                 std::to_string(dual_twist) + "))") +
                   " = 0 by Serre duality");

  const long h0 = closed_form_route(k, s).h0();
  const long h1 = h0 - chi;
  if (h1 < 0) throw InconsistentData("negative h1 from chi = " + std::to_string(chi) + " and h0 = " + std::to_string(h0));
  ledger.push_back("h1 = h0 + h2 - chi = " + std::to_string(h0) + " + 0 - (" + std::to_string(chi) + ") = " +
                   std::to_string(h1));
  return make_profile({h0, h1, 0}, Route::RiemannRoch, std::move(ledger));
}

CohomProfile table_formula(long k, const SchwarzSheaf& s) {
  if (k < 3) throw DomainError("Schwarzenberger index must be at least 3");
  const long kk = k * k;
  std::array<long, 3> h{};
  if (s.tensor_tangent) {
    h = k == 3 ? std::array<long, 3>{8, 0, 0} : std::array<long, 3>{3, 2 * kk - 23, 0};
  } else if (k == 3) {
    static const std::map<long, std::array<long, 3>> small = {
        {0, {0, 5, 0}}, {1, {1, 0, 0}}, {2, {10, 0, 0}}, {3, {22, 0, 0}}};
    auto it = small.find(s.twist);
    if (it == small.end()) throw DomainError("no tabulated value for " + s.label());
    h = it->second;
  } else {
    switch (s.twist) {
      case 0: h = {0, kk - 4, 0}; break;
      case 1: h = {1, kk - 9, 0}; break;
      case 2: h = {3, kk - 16, 0}; break;
      case 3: h = {k == 4 ? 15 : 6, std::max(0L, kk - 25), 0}; break;
      default: throw DomainError("no tabulated value for " + s.label());
    }
  }
  return make_profile(h, Route::ClosedForm, {"tabulated " + triple(h)});
}

// ---- tables ---------------------------------------------------------------

bool TableRow::agree() const {
  if (routes.empty()) return true;
  const auto& first = routes.begin()->second;
  return std::all_of(routes.begin(), routes.end(), [&](const auto& r) { return r.second.same_dims(first); });
}

std::array<long, 3> TableRow::value() const {
  if (routes.empty()) throw std::logic_error("table row without routes");
  if (!agree()) throw RouteDisagreement("routes disagree on " + sheaf.label());
  return routes.begin()->second.h;
}

bool DimTable::agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.agree(); });
}

std::vector<std::string> DimTable::disagreements() const {
  std::vector<std::string> out;
  for (const auto& row : rows) {
    if (row.agree()) continue;
    std::ostringstream line;
    line << "k = " << k << ", " << row.sheaf.label() << ":";
    for (const auto& [route, prof] : row.routes) line << " " << to_string(route) << " " << triple(prof.h);
    out.push_back(line.str());
  }
  return out;
}

nlohmann::json DimTable::to_json() const {
  nlohmann::json out{{"k", k}, {"agree", agree()}};
  nlohmann::json js_rows = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r{{"sheaf", row.sheaf.label()}};
    if (row.agree() && !row.routes.empty()) r["h"] = row.value();
    nlohmann::json by_route = nlohmann::json::object();
    for (const auto& [route, prof] : row.routes) {
      by_route[to_string(route)] = {{"h", prof.h}, {"ledger", prof.ledger}};
    }
    r["routes"] = by_route;
    js_rows.push_back(r);
  }
  out["rows"] = js_rows;
  return out;
}

std::string DimTable::to_markdown() const {
  std::ostringstream out;
  out << "| k = " << k << " | h0 | h1 | h2 | routes |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    std::string label = row.sheaf.label();
    const auto pos = label.find("V_k");
    if (pos != std::string::npos) label.replace(pos, 3, "V_" + std::to_string(k));
    out << "| " << label;
    for (std::size_t i = 0; i < 3; ++i) {
      out << " | ";
      bool first = true;
      std::vector<long> seen;
      for (const auto& [route, prof] : row.routes) {
        if (std::find(seen.begin(), seen.end(), prof.h[i]) != seen.end()) continue;
        seen.push_back(prof.h[i]);
        out << (first ? "" : "/") << prof.h[i];
        first = false;
      }
    }
    out << " | ";
    bool first = true;
    for (const auto& [route, prof] : row.routes) {
      out << (first ? "" : ", ") << to_string(route);
      first = false;
    }
    out << (row.agree() ? "" : " (disagree)") << " |\n";
  }
  return out.str();
}

std::vector<Route> all_table_routes() { return {Route::ClosedForm, Route::KunnethChase, Route::RiemannRoch}; }

std::vector<Route> parse_routes(const std::string& text) {
  std::vector<Route> out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    Route r;
    if (token == "closed" || token == "closed-form") r = Route::ClosedForm;
    else if (token == "kunneth" || token == "kunneth-chase") r = Route::KunnethChase;
    else if (token == "rr" || token == "riemann-roch") r = Route::RiemannRoch;
    else throw std::invalid_argument("unknown route '" + token + "'");
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  if (out.empty()) throw std::invalid_argument("no routes given");
  return out;
}

DimTable compute_table(long k, const std::vector<Route>& routes) {
  if (k < 3) throw DomainError("Schwarzenberger index must be at least 3");
  DimTable table;
  table.k = k;
  for (const auto& sheaf : table_rows()) {
    TableRow row{sheaf, {}};
    for (Route r : routes) {
      switch (r) {
        case Route::ClosedForm: row.routes.emplace(r, closed_form_route(k, sheaf)); break;
        case Route::KunnethChase: row.routes.emplace(r, kunneth_route(k, sheaf)); break;
        case Route::RiemannRoch: row.routes.emplace(r, rr_route(k, sheaf)); break;
        case Route::SymbolicRank: throw std::invalid_argument("symbolic-rank is not a table route");
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

DimTable build_table(long k, const std::vector<Route>& routes) {
  DimTable table = compute_table(k, routes);
  if (!table.agree()) {
    std::string diff;
    for (const auto& line : table.disagreements()) diff += "\n  " + line;
    throw RouteDisagreement("table routes disagree:" + diff);
  }
  return table;
}

// ---- conics and Chern data ------------------------------------------------

Matrix conic_matrix(const Poly& rho) {
  if (rho.grading() != Grading::plane(2)) throw GradingMismatch("a conic needs a quadratic form");
  Matrix s(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Exponent e{0, 0, 0, 0};
      ++e[i];
      ++e[j];
      s(i, j) = i == j ? rho.coefficient(e) : rho.coefficient(e) / 2;
    }
  return s;
}

bool conic_singular(const Poly& rho) {
  if (rho.is_zero()) throw ZeroConic("the zero form does not define a conic");
  const Matrix s = conic_matrix(rho);
  const Scalar det = s(0, 0) * (s(1, 1) * s(2, 2) - s(1, 2) * s(2, 1)) -
                     s(0, 1) * (s(1, 0) * s(2, 2) - s(1, 2) * s(2, 0)) +
                     s(0, 2) * (s(1, 0) * s(2, 1) - s(1, 1) * s(2, 0));
  return det == 0;
}

SchwarzParams::SchwarzParams(long k, std::optional<Poly> conic) : k_(k), conic_(std::move(conic)) {
  if (k_ < 0) throw DomainError("Schwarzenberger index must be nonnegative");
  if (conic_) nonsingular_ = !conic_singular(*conic_);
}

void SchwarzParams::require_nonsingular() const {
  if (!conic_) throw DomainError("no branch conic given");
  if (!nonsingular_) throw SingularConic("branch conic " + conic_->to_string() + " is singular");
}

ChernCoverage chern_coverage(long k) {
  const ChernData v = schwarz_chern(k).first;
  const bool odd = k % 2 == 1;
  const long m = odd ? -(k - 1) / 2 : -k / 2;
  const ChernData t = chern_twist(v, m);
  return {t.c1, t.c2, m, odd ? (k - 1) / 2 + 1 : k / 2};
}

}  // namespace cohiggs
