#pragma once

// Sections of twisted tangent-type bundles on the plane, modelled through the
// Euler sequence 0 -> O -> O(1)^3 -> T -> 0.
//
//   T(d)         triples (P0,P1,P2) of degree d+1, modulo (Q x0, Q x1, Q x2)
//   S^2 T(d)     symmetric 3x3 matrices of degree d+2, modulo x v^T + v x^T
//   End_0 T(d)   3x3 matrices M of degree d with M x = g x and tr M = g,
//                modulo M -> M + x w^T
//
// Every class is stored through its canonical representative: the
// representative's coordinate vector reduced modulo the relation subspace (see
// Subspace::reduce). Equality of classes is equality of representatives.
// The *_raw functions act on arbitrary representatives; they exist so that
// well-definedness can be checked independently of the canonical form.

#include <array>
#include <string>
#include <vector>

#include "cohiggs/exactlin.hpp"
#include "cohiggs/polyring.hpp"

namespace cohiggs {

using PolyTriple = std::array<Poly, 3>;
using PolyMatrix3 = std::array<Poly, 9>;  // row-major
using SymEntries = std::array<Poly, 6>;   // (0,0) (0,1) (0,2) (1,1) (1,2) (2,2)

/// A point of the plane with rational homogeneous coordinates, scaled so the
/// first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(Scalar a0, Scalar a1, Scalar a2);
  const std::array<Scalar, 3>& coords() const { return coords_; }
  std::vector<Scalar> as_vector() const { return {coords_[0], coords_[1], coords_[2]}; }
  bool operator==(const ProjectivePoint&) const = default;
  std::string to_string() const;

 private:
  std::array<Scalar, 3> coords_;
};

/// The coordinate x_i as a linear form on the plane.
Poly coordinate(int i);

// ---- T(d) -------------------------------------------------------------------

class TwistedVectorField {
 public:
  /// Components must have degree twist + 1; throws GradingMismatch otherwise.
  TwistedVectorField(int twist, const PolyTriple& representative);

  static TwistedVectorField zero(int twist);
  static TwistedVectorField constant(const Scalar& a0, const Scalar& a1, const Scalar& a2);
  static TwistedVectorField from_coordinates(int twist, const Vector& quotient_coords);
  /// Decodes a (not necessarily reduced) vector in the [P0|P1|P2] layout.
  static TwistedVectorField from_ambient(int twist, const Vector& v);

  int twist() const { return twist_; }
  const PolyTriple& components() const { return rep_; }
  /// Canonical representative as a vector of length 3 * #monomials(twist+1).
  Vector ambient_vector() const;
  /// Coordinates in tfield_basis(twist).
  Vector coordinates() const;
  bool is_zero() const;
  /// True when the section vanishes at p, i.e. P(p) is proportional to p.
  bool vanishes_at(const ProjectivePoint& p) const;

  TwistedVectorField operator-() const;
  friend TwistedVectorField operator+(const TwistedVectorField& a, const TwistedVectorField& b);
  friend TwistedVectorField operator-(const TwistedVectorField& a, const TwistedVectorField& b);
  friend TwistedVectorField operator*(const Scalar& s, const TwistedVectorField& v);
  /// f * v for f in H0(O(e)); the twist becomes twist + e.
  friend TwistedVectorField operator*(const Poly& f, const TwistedVectorField& v);
  bool operator==(const TwistedVectorField& other) const = default;

  /// "(P0, P1, P2)" with canonical components.
  std::string to_string() const;

 private:
  int twist_;
  PolyTriple rep_;
};

/// dim H0(T(d)) from the Euler model: 3 h0(O(d+1)) - h0(O(d)).
std::size_t tfield_dim(int d);
/// Canonical basis of H0(T(d)); empty for d < -1.
std::vector<TwistedVectorField> tfield_basis(int d);
/// Euler triple (Q x0, Q x1, Q x2); always represents the zero section.
PolyTriple euler_triple(const Poly& q);
/// Canonical representative of an arbitrary triple.
PolyTriple canonical_triple(int twist, const PolyTriple& representative);

/// det [[x0,x1,x2],[P],[P']] in H0(O(d1+d2+3)).
Poly wedge_raw(const PolyTriple& p, const PolyTriple& q);
Poly wedge(const TwistedVectorField& u, const TwistedVectorField& v);

/// The point where a nonzero section of T(-1) vanishes. Throws ZeroSection.
ProjectivePoint zero_locus(const TwistedVectorField& c);

// ---- S^2 T(d) -------------------------------------------------------------

class Sym2Section {
 public:
  Sym2Section(int twist, const SymEntries& representative);

  static Sym2Section zero(int twist);
  static Sym2Section from_ambient(int twist, const Vector& v);
  int twist() const { return twist_; }
  const SymEntries& entries() const { return rep_; }
  const Poly& entry(int i, int j) const;
  Vector ambient_vector() const;
  Vector coordinates() const;
  bool is_zero() const;

  Sym2Section operator-() const;
  friend Sym2Section operator+(const Sym2Section& a, const Sym2Section& b);
  friend Sym2Section operator-(const Sym2Section& a, const Sym2Section& b);
  friend Sym2Section operator*(const Poly& f, const Sym2Section& s);
  bool operator==(const Sym2Section& other) const = default;
  std::string to_string() const;

 private:
  int twist_;
  SymEntries rep_;
};

std::size_t sym2_dim(int d);
/// (P P'^T + P' P^T) / 2 for arbitrary representatives.
SymEntries sym_prod_raw(const PolyTriple& p, const PolyTriple& q);
Sym2Section sym_prod(const TwistedVectorField& u, const TwistedVectorField& v);
/// Canonical basis of H0(S^2 T(d)); sym2_basis() is the untwisted case (27).
std::vector<Sym2Section> sym2_basis(int d = 0);
/// Rank of the symmetrized Euler moves inside the symmetric matrices.
std::size_t sym2_euler_move_rank(int d);

// ---- End_0 T(d) -------------------------------------------------------------

class EndoTSection {
 public:
  /// Validates M x = g x and tr M = g; throws InvalidSection otherwise.
  EndoTSection(int twist, const PolyMatrix3& m, const Poly& g);
  /// Recovers g from M x = g x; throws InvalidSection when M does not
  /// preserve the Euler line or is not trace-free.
  static EndoTSection from_matrix(int twist, const PolyMatrix3& m);
  static EndoTSection zero(int twist);
  static EndoTSection from_basis_coordinates(int twist, const Vector& coords);
  /// Decodes [M00..M22 | g]; validates like the public constructor.
  static EndoTSection from_ambient(int twist, const Vector& v);

  int twist() const { return twist_; }
  const PolyMatrix3& matrix() const { return m_; }
  const Poly& entry(int i, int j) const { return m_[static_cast<std::size_t>(3 * i + j)]; }
  const Poly& scalar_part() const { return g_; }
  Vector ambient_vector() const;
  /// Coordinates in end0T_basis(twist).
  Vector basis_coordinates() const;
  bool is_zero() const;
  /// True when the induced endomorphism of T_p vanishes.
  bool vanishes_at(const ProjectivePoint& p) const;
  /// Determinant of the induced trace-free endomorphism: -(tr M^2 - g^2)/2.
  Poly det() const;

  EndoTSection operator-() const;
  friend EndoTSection operator+(const EndoTSection& a, const EndoTSection& b);
  friend EndoTSection operator-(const EndoTSection& a, const EndoTSection& b);
  friend EndoTSection operator*(const Scalar& s, const EndoTSection& e);
  friend EndoTSection operator*(const Poly& f, const EndoTSection& e);
  bool operator==(const EndoTSection& other) const = default;
  std::string to_string() const;

 private:
  EndoTSection(int twist, PolyMatrix3 m, Poly g, bool canonical);

  int twist_;
  PolyMatrix3 m_;
  Poly g_;
};

std::size_t end0T_dim(int d);
std::vector<EndoTSection> end0T_basis(int d);
/// Matrix commutator; no canonicalization.
PolyMatrix3 commutator_raw(const PolyMatrix3& a, const PolyMatrix3& b);
EndoTSection endoT_commutator(const EndoTSection& a, const EndoTSection& b);
/// Induced determinant computed from an arbitrary lift (M, g).
Poly det_raw(const PolyMatrix3& m, const Poly& g);

// ---- point conditions -----------------------------------------------------

std::vector<Poly> sections_vanishing_at(const std::vector<Poly>& basis, const ProjectivePoint& p);
std::vector<TwistedVectorField> sections_vanishing_at(const std::vector<TwistedVectorField>& basis,
                                                      const ProjectivePoint& p);
std::vector<EndoTSection> sections_vanishing_at(const std::vector<EndoTSection>& basis,
                                                const ProjectivePoint& p);

/// Canonical basis of polynomials of the given grading (monomials).
std::vector<Poly> poly_basis(const Grading& g);

}  // namespace cohiggs
