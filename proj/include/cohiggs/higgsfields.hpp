#pragma once

// Higgs fields with values in the tangent bundle of the plane, for rank-2
// bundles O(m1) + O(m2) and for T itself.
//
// On O(m1) + O(m2) a trace-free field is Phi = (A B; C -A) with
// A in H0(T), B in H0(T(m1-m2)), C in H0(T(m2-m1)). On T, a field in
// H0(End_0 T (x) T) is a 6x3 coefficient table against the fixed bases
// end0T_basis(1) and tfield_basis(-1).

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cohiggs/eulercalc.hpp"
#include "cohiggs/sampling.hpp"
#include "json.hpp"

namespace cohiggs {

// ---- split bundles --------------------------------------------------------

struct SplitBundle {
  int m1 = 0;
  int m2 = 0;

  int delta() const { return m1 - m2; }
  /// Same bundle with the summands ordered so that m1 >= m2.
  SplitBundle normalized() const { return m1 >= m2 ? *this : SplitBundle{m2, m1}; }
  /// "split:m1,m2"
  std::string to_string() const;
  bool operator==(const SplitBundle&) const = default;
};

/// Parses "split:m1,m2"; throws ParseError.
SplitBundle parse_split_bundle(const std::string& text);

class SplitHiggs {
 public:
  /// Checks the twists of A, B, C against the bundle; throws GradingMismatch.
  SplitHiggs(SplitBundle bundle, TwistedVectorField a, TwistedVectorField b, TwistedVectorField c);
  static SplitHiggs zero(SplitBundle bundle);

  const SplitBundle& bundle() const { return bundle_; }
  const TwistedVectorField& a() const { return a_; }
  const TwistedVectorField& b() const { return b_; }
  const TwistedVectorField& c() const { return c_; }
  /// The same field after swapping the summands: (-A C; B A) on O(m2) + O(m1).
  SplitHiggs swapped() const;
  /// swapped() when m1 < m2, otherwise a copy.
  SplitHiggs normalized() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }
  bool operator==(const SplitHiggs&) const = default;

 private:
  SplitBundle bundle_;
  TwistedVectorField a_;
  TwistedVectorField b_;
  TwistedVectorField c_;
};

/// Phi ^ Phi = (B^C, 2A^B; 2C^A, C^B), row-major.
std::array<Poly, 4> phi_wedge_phi(const SplitHiggs& h);
bool is_integrable(const SplitHiggs& h);

enum class Stability { Stable, StrictlySemistable, Unstable };
std::string to_string(Stability s);

struct StabilityVerdict {
  Stability status = Stability::Unstable;
  /// Invariant sub-line bundle that violates (or saturates) the slope bound.
  std::string witness;
  bool stable() const { return status == Stability::Stable; }
};

/// Stability on O(m1) + O(m2) through invariant sub-line bundles:
///   |m1-m2| >= 2: the larger summand is invariant, unstable.
///   |m1-m2| = 1:  stable iff the component leaving the larger summand is nonzero.
///   m1 = m2:      stable iff B != 0 and C != 0; strictly semistable otherwise.
StabilityVerdict is_stable_split(const SplitHiggs& h);

struct IntegrableSolution {
  SplitBundle bundle;
  TwistedVectorField c;
  /// Canonical bases of {A in H0(T) : A ^ C = 0} and {B in H0(T(delta)) : B ^ C = 0}.
  std::vector<TwistedVectorField> a_space;
  std::vector<TwistedVectorField> b_space;
  /// Bases of H0(O(delta)) and H0(O(2 delta)), the lambda and mu of A = lambda C, B = mu C.
  std::vector<Poly> lambda_basis;
  std::vector<Poly> mu_basis;
  /// True when a_space = {lambda C} and b_space = {mu C} exactly.
  bool simple_parametrization = false;

  SplitHiggs field(const Poly& lambda, const Poly& mu) const;
};

/// Integrable fields with a given C on O(m1) + O(m2), 0 <= m1-m2 <= 1.
/// Throws ZeroSection for C = 0 and DomainError for other bundle types.
IntegrableSolution solve_integrable(const TwistedVectorField& c, SplitBundle bundle);

/// Matrix of v |-> v ^ C on tfield_basis(twist), columns indexed by the basis.
Matrix wedge_matrix(int twist, const TwistedVectorField& c);

/// f with x = f * C, if one exists (f of degree x.twist - C.twist).
std::optional<Poly> factor_through(const TwistedVectorField& x, const TwistedVectorField& c);

/// Constant-determinant gauge (alpha beta; gamma epsilon) on O(m1) + O(m2):
/// beta in H0(O(delta)), gamma in H0(O(-delta)).
struct SplitGauge {
  Scalar alpha = 1;
  Poly beta;
  Poly gamma;
  Scalar epsilon = 1;

  /// Upper unipotent (1 lambda; 0 1) times diag(t, 1).
  static SplitGauge upper(const Poly& lambda, const Scalar& t = 1);
  static SplitGauge diagonal(const Scalar& a, const Scalar& e, int delta);
  /// alpha epsilon - beta gamma; must be a nonzero constant.
  Scalar determinant() const;
};

/// Psi^-1 Phi Psi. Throws DomainError when the gauge is not invertible.
SplitHiggs conjugate(const SplitHiggs& h, const SplitGauge& g);

/// (0 q; 1 0) (x) C, with q of degree -2 C.twist. Canonical scaling puts the
/// first nonzero coordinate of C equal to 1.
struct NormalForm {
  Poly q;
  TwistedVectorField c;

  NormalForm(Poly q, TwistedVectorField c);
  /// The (t^-2 q, t C) representative with the leading coordinate of C equal to 1.
  NormalForm canonical() const;
  /// t . (q, C) = (t^-2 q, t C).
  NormalForm scaled(const Scalar& t) const;
  /// (0 qC; C 0) on the given bundle.
  SplitHiggs field(SplitBundle bundle) const;
  bool operator==(const NormalForm&) const = default;
};

struct Normalization {
  NormalForm form;
  Poly lambda;
  Poly mu;
  /// Psi = (1 lambda; 0 1) diag(t, 1) with Psi^-1 Phi Psi = form.field(bundle).
  SplitGauge gauge;
};

/// Extracts A = lambda C, B = mu C and conjugates to the canonical normal form
/// with q = lambda^2 + mu. Throws NotStable or NotIntegrable.
Normalization gauge_normalize(const SplitHiggs& h);
/// Same with a given (lambda, mu); throws NotIntegrable unless A = lambda C and B = mu C.
Normalization gauge_normalize(const SplitHiggs& h, const Poly& lambda, const Poly& mu);

/// Whether some t != 0 has q2 = t^-2 q1 and C2 = t C1.
bool orbit_equal(const NormalForm& n1, const NormalForm& n2);
/// Orbit equality, with every nilpotent (q = 0) normal form on O + O
/// identified with the zero field.
bool s_equivalent(const NormalForm& n1, const NormalForm& n2);

/// det Phi = -(A.A) - (B.C) in H0(S^2 T), products via sym_prod.
Sym2Section hitchin_det(const SplitHiggs& h);
/// -q (C.C).
Sym2Section hitchin_det(const NormalForm& n);
bool is_nilpotent(const SplitHiggs& h);
bool is_nilpotent(const NormalForm& n);

struct RegularityReport {
  std::vector<ProjectivePoint> checked;
  /// Points where Phi vanishes, so ker [-, Phi] jumps.
  std::vector<ProjectivePoint> non_regular;
  bool regular() const { return non_regular.empty(); }
};
RegularityReport regularity_check(const SplitHiggs& h, const std::vector<ProjectivePoint>& points);

nlohmann::json to_json(const SplitHiggs& h);
/// "P0, P1, P2" in the polynomial grammar; components must have degree twist+1.
TwistedVectorField parse_vector_field(const std::string& text, int twist);
std::string vector_field_literal(const TwistedVectorField& v);

// ---- the tangent bundle ---------------------------------------------------

inline constexpr std::size_t kEndoCount = 6;
inline constexpr std::size_t kFieldCount = 3;

class TangentHiggs {
 public:
  /// A 6x3 table of coefficients a_ij of phi_i (x) C_j.
  explicit TangentHiggs(Matrix coeffs);
  static TangentHiggs from_flat(const Vector& coeffs);
  /// a_ij = u_i v_j.
  static TangentHiggs simple(const Vector& u, const Vector& v);

  const Matrix& coeffs() const { return coeffs_; }
  Vector flat() const;
  bool operator==(const TangentHiggs&) const = default;

 private:
  Matrix coeffs_;
};

/// Fixed bases phi_1..phi_6 of H0(End_0 T(1)) and C_1..C_3 of H0(T(-1)).
struct TangentFamily {
  std::vector<EndoTSection> phi;
  std::vector<TwistedVectorField> c;
  /// [phi_i, phi_k] wedge(C_j, C_l) in H0(End_0 T(3)) coordinates, indexed by
  /// ((i * 3 + j) * 6 + k) * 3 + l.
  std::vector<Vector> products;
  std::size_t target_dim = 0;
};
const TangentFamily& tangent_family();

/// Sum a_ij b_kl [phi_i, phi_k] wedge(C_j, C_l); symmetric in (a, b).
Vector tangent_pairing(const TangentHiggs& a, const TangentHiggs& b);
/// tangent_pairing(Phi, Phi) in H0(End_0 T(3)) coordinates.
Vector tangent_wedge(const TangentHiggs& h);
/// Derivative of tangent_wedge at Phi as a 27x18 matrix (columns follow flat()).
Matrix tangent_linearization(const TangentHiggs& h);
/// Coefficient table rank <= 1.
bool simple_tensor_test(const TangentHiggs& h);
/// (phi, C) with Phi = phi (x) C for a rank-1 table; throws NotSimpleTensor otherwise.
std::pair<EndoTSection, TwistedVectorField> tangent_factor(const TangentHiggs& h);

nlohmann::json to_json(const TangentHiggs& h);

/// Rank of psi |-> [psi, phi] from H0(End_0 T(1)) to H0(End_0 T(2)).
std::size_t commutator_rank(const EndoTSection& phi);
/// The symmetric bilinear form with det_polarization(a, a) = a.det().
Poly det_polarization(const EndoTSection& a, const EndoTSection& b);
/// Jacobian of det : H0(End_0 T(1)) -> H0(O(2)) at phi, 6x6.
Matrix det_jacobian(const EndoTSection& phi);

struct DoubleCoverReport {
  std::size_t samples = 0;
  std::size_t even_ok = 0;
  std::size_t nondegenerate = 0;  // samples with det phi != 0
  std::size_t full_rank = 0;      // among those, Jacobian rank 6
  std::vector<std::string> failures;
  bool passed() const { return failures.empty() && even_ok == samples && full_rank == nondegenerate; }
};
/// Samples random phi in H0(End_0 T(1)); checks det(-phi) = det(phi) and full
/// Jacobian rank wherever det phi != 0. The Jacobian drops rank where det phi
/// is a double line; coefficients in [-bound, bound] keep samples off that
/// locus, which small bounds hit with visible frequency.
DoubleCoverReport det_double_cover_probe(std::size_t samples, Sampler& rng, long bound = 1000);

// ---- JSON input -----------------------------------------------------------

/// {bundle: "split:m1,m2", A, B, C} or {bundle: "tangent", coeffs: [18 rationals]}.
/// Throws ParseError on malformed input.
std::variant<SplitHiggs, TangentHiggs> higgs_from_json(const nlohmann::json& j);

}  // namespace cohiggs
