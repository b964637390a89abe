#pragma once

// Cohomology dimensions on P^1, P^2 and P^1 x P^1, Chern-character arithmetic
// in Q[H]/(H^3), Riemann-Roch on the plane, and a dimension chaser for the
// long exact sequence of a short exact sequence of sheaves.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cohiggs/exactlin.hpp"

namespace cohiggs {

enum class Route { ClosedForm, KunnethChase, RiemannRoch, SymbolicRank };
std::string to_string(Route r);

/// (h0, h1, h2) of one sheaf with the route that produced it.
struct CohomProfile {
  std::array<long, 3> h{0, 0, 0};
  Route route = Route::ClosedForm;
  std::vector<std::string> ledger;

  long h0() const { return h[0]; }
  long h1() const { return h[1]; }
  long h2() const { return h[2]; }
  long euler_characteristic() const { return h[0] - h[1] + h[2]; }
  bool same_dims(const CohomProfile& o) const { return h == o.h; }
};

long h_p1(int i, long n);
long h_p2(int i, long d);
/// Kunneth: h^i(O(a,b)) = sum_{p+q=i} h^p(O(a)) h^q(O(b)).
long h_quadric(int i, long a, long b);
CohomProfile line_bundle_p2(long d);
CohomProfile line_bundle_quadric(long a, long b);

/// Rank-r Chern data on the plane; c1 in units of H, c2 in units of H^2.
struct ChernData {
  long rank = 0;
  long c1 = 0;
  long c2 = 0;
  bool operator==(const ChernData&) const = default;
};

/// ch = ch0 + ch1 H + ch2 H^2 (truncated; H^3 = 0 on the plane).
struct ChernCharacter {
  Scalar ch0 = 0;
  Scalar ch1 = 0;
  Scalar ch2 = 0;
  bool operator==(const ChernCharacter&) const = default;
};

ChernData dual(const ChernData& c);
/// (r, c1, c2) tensored by O(m); rank 2 only (RankUnsupported otherwise).
ChernData chern_twist(const ChernData& c, long m);
/// Chern data of the k-th Schwarzenberger bundle and of its dual.
std::pair<ChernData, ChernData> schwarz_chern(long k);

ChernCharacter chern_character(const ChernData& c);
ChernCharacter line_bundle_ch(long d);
ChernCharacter tensor_ch(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter dual_ch(const ChernCharacter& a);
/// ch(End_0 V) = ch(V) ch(V^) - 1.
ChernCharacter endo_ch(const ChernData& c);
ChernCharacter tangent_ch();

/// chi(F(d)) = [ch(F) e^{dH} (1 + 3/2 H + H^2)]_{H^2}; IntegralityError
/// when the result is not an integer.
long chi_rr(const ChernCharacter& ch, long twist = 0);

// ---- long exact sequence chase -------------------------------------------

/// Maps in the long exact sequence of 0 -> A -> B -> C -> 0, in order.
enum class LesMap {
  H0A_H0B, H0B_H0C, Delta0, H1A_H1B, H1B_H1C, Delta1, H2A_H2B, H2B_H2C
};
std::string to_string(LesMap m);

enum class LesPosition { Sub, Middle, Quotient };

struct LesInput {
  std::optional<CohomProfile> sub;
  std::optional<CohomProfile> middle;
  std::optional<CohomProfile> quotient;
  std::vector<LesMap> forced_zero;
  std::string label;  // e.g. "0 -> O(2,0) -> f*T -> O(1,3) -> 0"
};

struct LesResult {
  LesPosition unknown = LesPosition::Middle;
  std::array<long, 3> lo{0, 0, 0};
  std::array<long, 3> hi{0, 0, 0};
  /// Maps whose rank is not determined by the data; fixing them narrows the interval.
  std::vector<LesMap> undetermined;
  std::vector<std::string> ledger;

  bool exact() const { return lo == hi; }
  /// The resolved profile; throws ChaseUnresolved unless exact().
  CohomProfile profile(Route route = Route::KunnethChase) const;
};

/// Exactly one of sub/middle/quotient must be absent. Throws InconsistentData
/// when no choice of map ranks is compatible with exactness.
LesResult les_chase(const LesInput& in);

}  // namespace cohiggs
