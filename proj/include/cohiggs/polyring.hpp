#pragma once

// Homogeneous polynomials on the plane (x0, x1, x2) and bihomogeneous
// polynomials on the quadric (s0, s1 | t0, t1), with coordinates over a fixed
// monomial basis. Monomials are ordered graded-lexicographically, x0 > x1 > x2
// (resp. s0 > s1 > t0 > t1); every basis, coordinate vector and printed form
// follows this order.

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohiggs/exactlin.hpp"

namespace cohiggs {

enum class Family { Plane, Quadric };

/// Degree d on the plane, or bidegree (a, b) on the quadric.
struct Grading {
  Family family = Family::Plane;
  int first = 0;   // d, or a
  int second = 0;  // unused on the plane, or b

  static Grading plane(int d) { return {Family::Plane, d, 0}; }
  static Grading bi(int a, int b) { return {Family::Quadric, a, b}; }

  bool operator==(const Grading&) const = default;
  Grading operator+(const Grading& other) const;
  /// True when no monomial has this grading (some degree is negative).
  bool is_empty() const;
  std::string to_string() const;
};

/// Exponent tuple; the plane uses the first three slots, the fourth stays 0.
using Exponent = std::array<int, 4>;

/// Number of monomials: C(d+2, 2), (a+1)(b+1), or 0 for negative degrees.
std::size_t basis_size(const Grading& g);
/// Monomials of the grading in graded-lex order.
std::vector<Exponent> basis(const Grading& g);
/// Position of a monomial inside basis(g).
std::size_t basis_index(const Grading& g, const Exponent& e);

class Poly {
 public:
  explicit Poly(Grading g = Grading::plane(0)) : grading_(g) {}

  static Poly zero(Grading g) { return Poly(g); }
  static Poly constant(const Scalar& c, Family f = Family::Plane);
  static Poly monomial(const Exponent& e, const Scalar& c, Family f);
  /// x0, x1, x2 (plane) or s0, s1, t0, t1 (quadric).
  static Poly variable(int index, Family f = Family::Plane);
  static Poly from_coords(const Grading& g, const Vector& coords);

  const Grading& grading() const { return grading_; }
  /// Plane degree; throws GradingMismatch on the quadric.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Scalar coefficient(const Exponent& e) const;
  const std::map<Exponent, Scalar, std::greater<>>& terms() const { return terms_; }

  Vector coord_vector() const;
  Scalar evaluate(const std::vector<Scalar>& point) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  /// Product; gradings add. Throws GradingMismatch across families.
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& other) const;

  /// Canonical text form, accepted back by parse_poly.
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Scalar& c);

  Grading grading_;
  std::map<Exponent, Scalar, std::greater<>> terms_;  // descending lex = graded-lex
};

/// Parses a polynomial literal:
///   poly := [sign] term (("+"|"-") term)*
///   term := rational | [rational "*"] factor ("*" factor)*
///   factor := var ["^" nat];  rational := int ["/" nat]
/// Variables: x0 x1 x2 | s0 s1 t0 t1. Whitespace is insignificant.
/// When `expected` is given the result must carry that grading (a literal of
/// zero or a constant adopts it where that is consistent).
/// Throws ParseError, NonHomogeneous, GradingMismatch.
Poly parse_poly(const std::string& text, std::optional<Grading> expected = std::nullopt);

}  // namespace cohiggs
