#pragma once

// Cohomology of trace-free endomorphisms of the Schwarzenberger bundles V_k,
// the rank-2 bundles on the plane obtained by pushing O(0,k) forward along the
// double cover of the plane by the quadric, branched over a smooth conic.
//
// Three independent routes produce (h0, h1, h2) for End_0 V_k(d) and
// End_0 V_k (x) T:
//   closed-form   explicit formulas in k and d
//   kunneth-chase pull back to the quadric, Kunneth, long exact sequences
//   riemann-roch  chi from Chern characters, promoted with h2 = 0 (Serre
//                 duality) and an h0 taken from the closed form

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohiggs/polyring.hpp"
#include "cohiggs/sheafdim.hpp"
#include "json.hpp"

namespace cohiggs {

/// d(d+1)/2 + [d >= k-1] ((d+2)^2 - k^2) = h0(End_0 V_k(d)). k >= 3, d >= 0.
long endo_twist_h0(long k, long d);
/// 0 if d >= k-1, else k^2 - d^2 - 4d - 4 = h1(End_0 V_k(d)).
long endo_twist_h1(long k, long d);
/// h0(End_0 V_k (x) T): 8 for k = 3, 3 for k > 3.
long endo_tangent_h0(long k);

/// One of the tabulated sheaves: End_0 V_k(twist), or End_0 V_k (x) T.
struct SchwarzSheaf {
  long twist = 0;
  bool tensor_tangent = false;

  static SchwarzSheaf twisted(long d) { return {d, false}; }
  static SchwarzSheaf tangent() { return {0, true}; }
  /// "End0 V_k(d)" or "End0 V_k (x) T"
  std::string label() const;
  bool operator==(const SchwarzSheaf&) const = default;
};

/// Rows in table order: twists 0, 1, 2, the tangent twist, twist 3.
const std::vector<SchwarzSheaf>& table_rows();

CohomProfile closed_form_route(long k, const SchwarzSheaf& s);
/// Push-pull to the quadric. Throws ChaseUnresolved if a sequence leaves an interval.
CohomProfile kunneth_route(long k, const SchwarzSheaf& s);
/// chi(End_0 V_k(d)) or chi(End_0 V_k (x) T) from Chern characters.
long rr_chi(long k, const SchwarzSheaf& s);
CohomProfile rr_route(long k, const SchwarzSheaf& s);
/// The tabulated expressions: k^2-4, k^2-9, k^2-16, 2k^2-23, max(0, k^2-25),
/// with the k = 3 values listed separately.
CohomProfile table_formula(long k, const SchwarzSheaf& s);

/// h0(End V_k(d)) on the quadric side, valid for any d; only h0 is resolved
/// in general (the chase may leave h1, h2 open for negative d).
long kunneth_endo_h0(long k, long d);

struct TableRow {
  SchwarzSheaf sheaf;
  std::map<Route, CohomProfile> routes;
  bool agree() const;
  /// The common value; throws RouteDisagreement when routes differ.
  std::array<long, 3> value() const;
};

struct DimTable {
  long k = 0;
  std::vector<TableRow> rows;

  bool agree() const;
  /// One line per disagreeing cell.
  std::vector<std::string> disagreements() const;
  nlohmann::json to_json() const;
  /// h0 h1 h2 per sheaf, plus the routes that produced each row.
  std::string to_markdown() const;
};

std::vector<Route> all_table_routes();
/// Parses "closed,kunneth,rr" (or the full route names); throws std::invalid_argument.
std::vector<Route> parse_routes(const std::string& text);

/// Every row through the requested routes, without asserting agreement.
DimTable compute_table(long k, const std::vector<Route>& routes = all_table_routes());
/// compute_table followed by RouteDisagreement if any cell differs.
DimTable build_table(long k, const std::vector<Route>& routes = all_table_routes());

// ---- conics and Chern data ------------------------------------------------

/// Symmetric matrix of a plane quadratic form (off-diagonals halved).
Matrix conic_matrix(const Poly& rho);
/// True iff the conic rho = 0 is singular. Throws ZeroConic, GradingMismatch.
bool conic_singular(const Poly& rho);

class SchwarzParams {
 public:
  explicit SchwarzParams(long k, std::optional<Poly> conic = std::nullopt);
  long k() const { return k_; }
  const std::optional<Poly>& conic() const { return conic_; }
  bool has_nonsingular_conic() const { return conic_ && nonsingular_; }
  /// Throws SingularConic (or DomainError when no conic is present).
  void require_nonsingular() const;

 private:
  long k_;
  std::optional<Poly> conic_;
  bool nonsingular_ = false;
};

/// Chern data of V_k twisted so that c1 is 0 or -1.
struct ChernCoverage {
  long c1 = 0;
  long c2 = 0;
  long twist = 0;
  /// Position in the normalized family: n(n-1) for c1 = 0, n^2 for c1 = -1.
  long family_index = 0;
  bool operator==(const ChernCoverage&) const = default;
};
ChernCoverage chern_coverage(long k);

}  // namespace cohiggs
