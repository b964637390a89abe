#include "cohiggs/defcomplex.hpp"

#include "cohiggs/errors.hpp"
#include "cohiggs/schwarz.hpp"
#include "cohiggs/sheafdim.hpp"

namespace cohiggs {

namespace {

std::string n(long x) { return std::to_string(x); }

// d2 kills E2^{0,1} classes through a factor C ^ C; check it on H0(T(-1)).
void record_d2_vanishing(E2Summary& s) {
  const auto cs = tfield_basis(-1);
  TwistedVectorField sum = TwistedVectorField::zero(-1);
  for (const auto& c : cs) {
    if (!wedge(c, c).is_zero()) throw InconsistentData("C ^ C is not zero");
    sum = sum + c;
  }
  if (!wedge(sum, sum).is_zero()) throw InconsistentData("C ^ C is not zero");
  s.d2_rank = 0;
  s.ledger.push_back("d2 = 0: d2(psi) = [theta, phi] C ^ C and C ^ C = 0 on H0(T(-1))");
}

void finish(E2Summary& s) {
  s.h1 = hyper_h1(s.e2_10, s.e2_01, s.d2_rank);
  s.ledger.push_back("h1 = " + n(s.e2_10) + " + " + n(s.e2_01) + " - " + n(s.d2_rank) + " = " + n(s.h1));
}

}  // namespace

nlohmann::json E2Summary::to_json() const {
  return {{"e2_10", e2_10}, {"e2_01", e2_01}, {"d2_rank", d2_rank}, {"h1", h1},
          {"ledger", ledger}, {"assumptions", assumptions}};
}

long hyper_h1(long e2_10, long e2_01, long d2_rank) {
  if (e2_10 < 0 || e2_01 < 0 || d2_rank < 0) throw DomainError("negative dimension");
  if (d2_rank > e2_01) {
    throw RankExceedsSource("rank of d2 (" + n(d2_rank) + ") exceeds dim E2^{0,1} (" + n(e2_01) + ")");
  }
  return e2_10 + e2_01 - d2_rank;
}

SplitComplex split_complex(const SplitHiggs& h) {
  const int d = h.bundle().delta();
  const auto& A = h.a();
  const auto& B = h.b();
  const auto& C = h.c();
  const Scalar two = 2;

  const std::size_t middle = tfield_dim(0) + tfield_dim(d) + tfield_dim(-d);
  std::vector<Vector> d0_cols;
  auto add_d0 = [&](const Poly& a, const Poly& b, const Poly& c) {
    const TwistedVectorField da = b * C - c * B;
    const TwistedVectorField db = two * (a * B) - two * (b * A);
    const TwistedVectorField dc = two * (c * A) - two * (a * C);
    d0_cols.push_back(concat({da.coordinates(), db.coordinates(), dc.coordinates()}));
  };
  const Poly za = Poly::zero(Grading::plane(0));
  const Poly zb = Poly::zero(Grading::plane(d));
  const Poly zc = Poly::zero(Grading::plane(-d));
  for (const auto& a : poly_basis(Grading::plane(0))) add_d0(a, zb, zc);
  for (const auto& b : poly_basis(Grading::plane(d))) add_d0(za, b, zc);
  for (const auto& c : poly_basis(Grading::plane(-d))) add_d0(za, zb, c);

  const std::size_t target = basis_size(Grading::plane(3)) + basis_size(Grading::plane(3 + d)) +
                             basis_size(Grading::plane(3 - d));
  std::vector<Vector> d1_cols;
  auto add_d1 = [&](const TwistedVectorField& a1, const TwistedVectorField& b1, const TwistedVectorField& c1) {
    const Poly e0 = wedge(b1, C) + wedge(B, c1);
    const Poly e1 = two * (wedge(a1, B) + wedge(A, b1));
    const Poly e2 = two * (wedge(c1, A) + wedge(C, a1));
    d1_cols.push_back(concat({e0.coord_vector(), e1.coord_vector(), e2.coord_vector()}));
  };
  const auto ta = TwistedVectorField::zero(0);
  const auto tb = TwistedVectorField::zero(d);
  const auto tc = TwistedVectorField::zero(-d);
  for (const auto& v : tfield_basis(0)) add_d1(v, tb, tc);
  for (const auto& v : tfield_basis(d)) add_d1(ta, v, tc);
  for (const auto& v : tfield_basis(-d)) add_d1(ta, tb, v);

  return {Matrix::from_columns(d0_cols, middle), Matrix::from_columns(d1_cols, target)};
}

E2Summary split_e2(const SplitHiggs& h) {
  const StabilityVerdict verdict = is_stable_split(h);
  if (!verdict.stable()) throw NotStable("field is " + to_string(verdict.status) + " (" + verdict.witness + ")");
  if (!is_integrable(h)) throw NotIntegrable("Phi ^ Phi is not zero");

  const int d = h.bundle().delta();
  const SplitComplex cx = split_complex(h);
  std::vector<Vector> image;
  for (std::size_t j = 0; j < cx.d0.cols(); ++j) image.push_back(cx.d0.column(j));
  const auto kernel = kernel_basis(cx.d1);
  const long rank_d0 = static_cast<long>(span_dim(image, cx.d0.rows()));

  E2Summary s;
  s.ledger.push_back("bundle " + h.bundle().to_string());
  s.ledger.push_back("dim H0(End0 V) = " + n(static_cast<long>(cx.d0.cols())));
  s.ledger.push_back("dim H0(End0 V (x) T) = " + n(static_cast<long>(cx.d1.cols())));
  s.ledger.push_back("dim H0(End0 V (x) /\\^2 T) = " + n(static_cast<long>(cx.d1.rows())));
  s.ledger.push_back("rank d0 = " + n(rank_d0));
  s.ledger.push_back("dim ker d1 = " + n(static_cast<long>(kernel.size())));
  s.e2_10 = static_cast<long>(subspace_quotient_dim(kernel, image));
  s.ledger.push_back("e2_10 = " + n(static_cast<long>(kernel.size())) + " - " + n(rank_d0) + " = " + n(s.e2_10));

  long h1_sum = 0;
  for (int t : {0, d, -d}) h1_sum += h_p2(1, t);
  s.e2_01 = h1_sum;
  s.ledger.push_back("h1(O) + h1(O(" + n(d) + ")) + h1(O(" + n(-d) + ")) = " + n(h1_sum));
  if (s.e2_01 == 0) {
    s.d2_rank = 0;
    s.ledger.push_back("E2^{0,1} = 0");
  } else {
    s.assumptions.push_back("d2 = 0 assumed");
  }
  if (is_nilpotent(h)) s.assumptions.push_back("nilpotent field: value recorded without a reference dimension");
  finish(s);
  return s;
}

E2Summary split_e2(SplitBundle bundle, const NormalForm& nf) { return split_e2(nf.field(bundle)); }

E2Summary tangent_e2(const TangentHiggs& h) {
  const std::size_t table_rank = rank(h.coeffs());
  if (table_rank != 1) throw NotSimpleTensor("coefficient table has rank " + n(static_cast<long>(table_rank)));
  E2Summary s;
  const Matrix lin = tangent_linearization(h);
  const long r = static_cast<long>(rank(lin));
  const long source = static_cast<long>(lin.cols());
  const long h0_end = static_cast<long>(end0T_dim(0));
  s.ledger.push_back("dim H0(End0 T (x) T) = " + n(source));
  s.ledger.push_back("rank of the linearized Phi ^ Phi = " + n(r));
  s.ledger.push_back("h0(End0 T) = " + n(h0_end) + ", so im d0 = 0");
  if (h0_end != 0) throw InconsistentData("End0 T has global sections");
  s.e2_10 = source - r - h0_end;
  s.ledger.push_back("e2_10 = " + n(source) + " - " + n(r) + " - " + n(h0_end) + " = " + n(s.e2_10));

  // h1(End0 T) = h0 + h2 - chi, with h2 = h0(End0 T(-3)) by Serre duality.
  const long chi = chi_rr(endo_ch({2, 3, 3}), 0);
  const long h2 = static_cast<long>(end0T_dim(-3));
  const long h1_end = h0_end + h2 - chi;
  s.ledger.push_back("chi(End0 T) = " + n(chi) + ", h2(End0 T) = h0(End0 T(-3)) = " + n(h2));
  s.ledger.push_back("h1(End0 T) = " + n(h0_end) + " + " + n(h2) + " - " + n(chi) + " = " + n(h1_end));
  s.e2_01 = h1_end;
  s.d2_rank = 0;
  if (s.e2_01 == 0) s.ledger.push_back("E2^{0,1} = 0");
  else s.assumptions.push_back("d2 = 0 assumed");
  const auto factor = tangent_factor(h);
  s.ledger.push_back(std::string("det phi ") + (factor.first.det().is_zero() ? "= 0" : "!= 0"));
  finish(s);
  return s;
}

E2Summary schwarz_e2(long k) {
  if (k < 3) throw DomainError("Schwarzenberger index must be at least 3");
  const DimTable table = build_table(k);
  const auto row = [&](const SchwarzSheaf& sheaf) {
    for (const auto& r : table.rows)
      if (r.sheaf == sheaf) return r.value();
    throw std::logic_error("missing table row");
  };
  const auto end0 = row(SchwarzSheaf::twisted(0));
  const auto end1 = row(SchwarzSheaf::twisted(1));
  const auto tens = row(SchwarzSheaf::tangent());

  E2Summary s;
  s.ledger.push_back("k = " + n(k));
  if (k > 3) {
    s.ledger.push_back("h0(End0 V_k) = " + n(end0[0]) + ", so im d0 = 0");
    s.ledger.push_back("h0(End0 V_k (x) T) = " + n(tens[0]) + ", spanned by integrable directions");
    s.assumptions.push_back("every section of End0 V_k (x) T is annihilated by d1 (spanning argument)");
    s.e2_10 = tens[0] - end0[0];
    s.ledger.push_back("e2_10 = " + n(tens[0]) + " - " + n(end0[0]) + " = " + n(s.e2_10));

    const long h0_o2 = line_bundle_p2(2).h0();
    const long alternating = end1[0] - h0_o2 + end0[1] - end1[1];
    s.ledger.push_back(n(end1[0]) + " - " + n(h0_o2) + " + " + n(end0[1]) + " - " + n(end1[1]) + " = " +
                       n(alternating));
    if (alternating != 0) throw InconsistentData("four-term sequence is not exact");
    s.e2_01 = h0_o2 - end1[0];
    s.ledger.push_back(n(h0_o2) + " - " + n(end1[0]) + " = " + n(s.e2_01));
  } else {
    const PointConstraintReport pc = point_constraint_ledger();
    s.ledger.insert(s.ledger.end(), pc.ledger.begin(), pc.ledger.end());
    s.e2_10 = end1[0] + (pc.linear_through_point);
    s.ledger.push_back("e2_10 = " + n(end1[0]) + " + " + n(pc.linear_through_point) + " = " + n(s.e2_10));
    s.ledger.push_back("h1(End0 V_3) = " + n(end0[1]) + ", h1(End0 V_3 (x) T) = " + n(tens[1]));
    if (tens[1] != 0) throw InconsistentData("h1(End0 V_3 (x) T) should vanish");
    s.e2_01 = end0[1];
  }
  record_d2_vanishing(s);
  finish(s);
  return s;
}

PointConstraintReport point_constraint_ledger() {
  PointConstraintReport r;
  const ProjectivePoint x(1, 0, 0);
  r.linear_through_point =
      static_cast<long>(sections_vanishing_at(poly_basis(Grading::plane(1)), x).size());
  r.ledger.push_back("h0(O(1) (x) I_x) = " + n(r.linear_through_point) + " at x = " + x.to_string());
  const long h0_end2 = endo_twist_h0(4, 2);
  r.ledger.push_back("h0(End0 V_k(2) (x) I_x) = " + n(h0_end2) + " - 1 = " + n(h0_end2 - 1));
  const long h0_end1 = endo_twist_h0(3, 1);
  r.ledger.push_back(n(h0_end1) + " + " + n(h0_end2 - 1) + " = " + n(h0_end1 + h0_end2 - 1));
  return r;
}

}  // namespace cohiggs
