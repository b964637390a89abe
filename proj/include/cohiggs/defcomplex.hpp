#pragma once

// First-order deformations of co-Higgs bundles (V, Phi) through the
// hypercohomology spectral sequence of
//   End_0 V  --[-, Phi]-->  End_0 V (x) T  --Phi ^ -->  End_0 V (x) /\^2 T.
//
//   E2^{1,0} = ker(H0 d1) / im(H0 d0)
//   E2^{0,1} = ker(H1(End_0 V) -> H1(End_0 V (x) T))
//   0 -> E2^{1,0} -> H1 -> E2^{0,1} --d2--> E2^{2,0}
// so dim H1 = e2_10 + e2_01 - rank d2.

#include <string>
#include <vector>

#include "cohiggs/exactlin.hpp"
#include "cohiggs/higgsfields.hpp"
#include "json.hpp"

namespace cohiggs {

struct E2Summary {
  long e2_10 = 0;
  long e2_01 = 0;
  long d2_rank = 0;
  long h1 = 0;
  std::vector<std::string> ledger;
  /// Facts taken as hypotheses rather than computed.
  std::vector<std::string> assumptions;

  bool operator==(const E2Summary& o) const {
    return e2_10 == o.e2_10 && e2_01 == o.e2_01 && d2_rank == o.d2_rank && h1 == o.h1;
  }
  nlohmann::json to_json() const;
};

/// e2_10 + e2_01 - d2_rank; throws RankExceedsSource when d2_rank > e2_01.
long hyper_h1(long e2_10, long e2_01, long d2_rank);

/// The H0 part of the complex for a split bundle, in explicit bases:
///   source of d0: H0(O) + H0(O(delta)) + H0(O(-delta))          (a, b, c)
///   middle:       tfield bases of T, T(delta), T(-delta)        (A', B', C')
///   target of d1: monomials of O(3), O(3+delta), O(3-delta)
struct SplitComplex {
  Matrix d0;
  Matrix d1;
};
SplitComplex split_complex(const SplitHiggs& h);

/// Requires a stable integrable field (NotStable, NotIntegrable).
E2Summary split_e2(const SplitHiggs& h);
E2Summary split_e2(SplitBundle bundle, const NormalForm& n);

/// Requires a coefficient table of rank exactly 1 (NotSimpleTensor).
E2Summary tangent_e2(const TangentHiggs& h);

/// Dimension ledger for End_0 V_k; k >= 3 (DomainError otherwise).
E2Summary schwarz_e2(long k);

struct PointConstraintReport {
  long linear_through_point = 0;
  std::vector<std::string> ledger;
};
/// Linear forms through [1:0:0] and the arithmetic of the point-constraint count.
PointConstraintReport point_constraint_ledger();

}  // namespace cohiggs
