#include "cohiggs/higgsfields.hpp"

#include <charconv>
#include <mutex>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

TwistedVectorField combine(int twist, const std::vector<TwistedVectorField>& basis, const Vector& coeffs) {
  TwistedVectorField out = TwistedVectorField::zero(twist);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out = out + coeffs[i] * basis[i];
  return out;
}

std::vector<Vector> coordinate_rows(const std::vector<TwistedVectorField>& fields) {
  std::vector<Vector> rows;
  for (const auto& f : fields) rows.push_back(f.coordinates());
  return rows;
}

Scalar leading(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return x;
  return 0;
}

std::string bundle_line(int m) { return "O(" + std::to_string(m) + ")"; }

}  // namespace

// ---- split bundles --------------------------------------------------------

std::string SplitBundle::to_string() const { return "split:" + std::to_string(m1) + "," + std::to_string(m2); }

SplitBundle parse_split_bundle(const std::string& text) {
  const std::string prefix = "split:";
  if (text.rfind(prefix, 0) != 0) throw ParseError("bundle must look like split:m1,m2", 0);
  const auto comma = text.find(',', prefix.size());
  if (comma == std::string::npos) throw ParseError("expected ',' in bundle", text.size());
  auto read = [&](std::size_t from, std::size_t to) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + from, text.data() + to, value);
    if (ec != std::errc() || ptr != text.data() + to || from == to) throw ParseError("expected an integer", from);
    return value;
  };
  return {read(prefix.size(), comma), read(comma + 1, text.size())};
}

SplitHiggs::SplitHiggs(SplitBundle bundle, TwistedVectorField a, TwistedVectorField b, TwistedVectorField c)
    : bundle_(bundle), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const int d = bundle_.delta();
  if (a_.twist() != 0 || b_.twist() != d || c_.twist() != -d) {
    throw GradingMismatch("Higgs components on " + bundle_.to_string() + " must lie in T, T(" + std::to_string(d) +
                          "), T(" + std::to_string(-d) + ")");
  }
}

SplitHiggs SplitHiggs::zero(SplitBundle bundle) {
  const int d = bundle.delta();
  return {bundle, TwistedVectorField::zero(0), TwistedVectorField::zero(d), TwistedVectorField::zero(-d)};
}

SplitHiggs SplitHiggs::swapped() const { return {{bundle_.m2, bundle_.m1}, -a_, c_, b_}; }

SplitHiggs SplitHiggs::normalized() const { return bundle_.m1 >= bundle_.m2 ? *this : swapped(); }

std::array<Poly, 4> phi_wedge_phi(const SplitHiggs& h) {
  const Scalar two = 2;
  return {wedge(h.b(), h.c()), two * wedge(h.a(), h.b()), two * wedge(h.c(), h.a()), wedge(h.c(), h.b())};
}

bool is_integrable(const SplitHiggs& h) {
  for (const auto& p : phi_wedge_phi(h))
    if (!p.is_zero()) return false;
  return true;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::StrictlySemistable: return "strictly semistable";
    case Stability::Unstable: return "unstable";
  }
  return "?";
}

StabilityVerdict is_stable_split(const SplitHiggs& h) {
  const SplitBundle& v = h.bundle();
  const int d = v.delta();
  if (d >= 2) return {Stability::Unstable, "destabilizing " + bundle_line(v.m1)};
  if (d <= -2) return {Stability::Unstable, "destabilizing " + bundle_line(v.m2)};
  if (d == 1) {
    if (h.c().is_zero()) return {Stability::Unstable, "destabilizing " + bundle_line(v.m1)};
    return {Stability::Stable, ""};
  }
  if (d == -1) {
    if (h.b().is_zero()) return {Stability::Unstable, "destabilizing " + bundle_line(v.m2)};
    return {Stability::Stable, ""};
  }
  if (h.b().is_zero()) return {Stability::StrictlySemistable, "invariant " + bundle_line(v.m1) + " (first summand)"};
  if (h.c().is_zero()) return {Stability::StrictlySemistable, "invariant " + bundle_line(v.m2) + " (second summand)"};
  return {Stability::Stable, ""};
}

Matrix wedge_matrix(int twist, const TwistedVectorField& c) {
  const auto basis = tfield_basis(twist);
  const Grading target = Grading::plane(twist + c.twist() + 3);
  std::vector<Vector> columns;
  for (const auto& b : basis) columns.push_back(wedge(b, c).coord_vector());
  return Matrix::from_columns(columns, basis_size(target));
}

std::optional<Poly> factor_through(const TwistedVectorField& x, const TwistedVectorField& c) {
  const int e = x.twist() - c.twist();
  const Grading g = Grading::plane(e);
  if (x.is_zero()) return Poly::zero(g);
  if (c.is_zero() || e < 0) return std::nullopt;
  const auto monos = poly_basis(g);
  std::vector<Vector> columns;
  for (const auto& m : monos) columns.push_back((m * c).coordinates());
  const auto sol = solve(Matrix::from_columns(columns, tfield_dim(x.twist())), x.coordinates());
  if (!sol) return std::nullopt;
  return Poly::from_coords(g, *sol);
}

SplitHiggs IntegrableSolution::field(const Poly& lambda, const Poly& mu) const {
  return {bundle, lambda * c, mu * c, c};
}

IntegrableSolution solve_integrable(const TwistedVectorField& c, SplitBundle bundle) {
  const int d = bundle.delta();
  if (d < 0 || d > 1) {
    throw DomainError("solve_integrable handles O(m) + O(m) and O(m) + O(m-1); got " + bundle.to_string());
  }
  if (c.twist() != -d) throw GradingMismatch("C must lie in H0(T(" + std::to_string(-d) + "))");
  if (c.is_zero()) throw ZeroSection("C is identically zero");

  IntegrableSolution sol{bundle, c, {}, {}, poly_basis(Grading::plane(d)), poly_basis(Grading::plane(2 * d)), false};
  auto kernel_fields = [&](int twist) {
    const auto basis = tfield_basis(twist);
    std::vector<TwistedVectorField> out;
    for (const auto& k : kernel_basis(wedge_matrix(twist, c))) out.push_back(combine(twist, basis, k));
    return out;
  };
  sol.a_space = kernel_fields(0);
  sol.b_space = kernel_fields(d);

  auto multiples = [&](const std::vector<Poly>& polys) {
    std::vector<TwistedVectorField> out;
    for (const auto& p : polys) out.push_back(p * c);
    return out;
  };
  auto same_span = [](const std::vector<TwistedVectorField>& u, const std::vector<TwistedVectorField>& v, int twist) {
    const std::size_t n = tfield_dim(twist);
    return canonical_basis(coordinate_rows(u), n) == canonical_basis(coordinate_rows(v), n);
  };
  sol.simple_parametrization =
      same_span(sol.a_space, multiples(sol.lambda_basis), 0) && same_span(sol.b_space, multiples(sol.mu_basis), d);
  return sol;
}

// ---- gauge ---------------------------------------------------------------

SplitGauge SplitGauge::upper(const Poly& lambda, const Scalar& t) {
  const int d = lambda.degree();
  return {t, lambda, Poly::zero(Grading::plane(-d)), 1};
}

SplitGauge SplitGauge::diagonal(const Scalar& a, const Scalar& e, int delta) {
  return {a, Poly::zero(Grading::plane(delta)), Poly::zero(Grading::plane(-delta)), e};
}

Scalar SplitGauge::determinant() const { return alpha * epsilon - (beta * gamma).coefficient({0, 0, 0, 0}); }

SplitHiggs conjugate(const SplitHiggs& h, const SplitGauge& g) {
  const int d = h.bundle().delta();
  if (g.beta.grading() != Grading::plane(d) || g.gamma.grading() != Grading::plane(-d)) {
    throw GradingMismatch("gauge entries do not match " + h.bundle().to_string());
  }
  const Scalar det = g.determinant();
  if (det == 0) throw DomainError("gauge transformation is not invertible");
  const Scalar inv = 1 / det;
  const auto& a = h.a();
  const auto& b = h.b();
  const auto& c = h.c();
  // Phi * Psi = (P Q; R S)
  const TwistedVectorField p = g.alpha * a + g.gamma * b;
  const TwistedVectorField q = g.beta * a + g.epsilon * b;
  const TwistedVectorField r = g.alpha * c - g.gamma * a;
  const TwistedVectorField s = g.beta * c - g.epsilon * a;
  return {h.bundle(), inv * (g.epsilon * p - g.beta * r), inv * (g.epsilon * q - g.beta * s),
          inv * (g.alpha * r - g.gamma * p)};
}

// ---- normal forms ---------------------------------------------------------

NormalForm::NormalForm(Poly q_, TwistedVectorField c_) : q(std::move(q_)), c(std::move(c_)) {
  if (q.grading() != Grading::plane(-2 * c.twist())) {
    throw GradingMismatch("q must have degree " + std::to_string(-2 * c.twist()));
  }
}

NormalForm NormalForm::scaled(const Scalar& t) const {
  if (t == 0) throw DomainError("scaling by zero");
  return {q * Scalar(1 / (t * t)), t * c};
}

NormalForm NormalForm::canonical() const {
  const Scalar lead = leading(c.coordinates());
  if (lead == 0) return *this;
  return scaled(1 / lead);
}

SplitHiggs NormalForm::field(SplitBundle bundle) const {
  return {bundle, TwistedVectorField::zero(0), q * c, c};
}

Normalization gauge_normalize(const SplitHiggs& h, const Poly& lambda, const Poly& mu) {
  if (!is_stable_split(h).stable()) throw NotStable("normal form needs a stable field");
  if (!is_integrable(h)) throw NotIntegrable("Phi ^ Phi is not zero");
  if (lambda * h.c() != h.a() || mu * h.c() != h.b()) {
    throw NotIntegrable("A = lambda C and B = mu C do not hold for the given lambda, mu");
  }
  const NormalForm raw(lambda * lambda + mu, h.c());
  const Scalar t = 1 / leading(h.c().coordinates());
  Normalization out{raw.scaled(t), lambda, mu, SplitGauge::upper(lambda, t)};
  if (conjugate(h, out.gauge) != out.form.field(h.bundle())) {
    throw std::logic_error("normal form reconstruction failed");
  }
  return out;
}

Normalization gauge_normalize(const SplitHiggs& h) {
  if (!is_stable_split(h).stable()) throw NotStable("normal form needs a stable field");
  if (!is_integrable(h)) throw NotIntegrable("Phi ^ Phi is not zero");
  const auto lambda = factor_through(h.a(), h.c());
  const auto mu = factor_through(h.b(), h.c());
  if (!lambda || !mu) throw NotIntegrable("integrable field is not of the form A = lambda C, B = mu C");
  return gauge_normalize(h, *lambda, *mu);
}

bool orbit_equal(const NormalForm& n1, const NormalForm& n2) {
  if (n1.c.twist() != n2.c.twist()) return false;
  const Vector c1 = n1.c.coordinates();
  const Vector c2 = n2.c.coordinates();
  if (is_zero(c1) || is_zero(c2)) {
    if (!(is_zero(c1) && is_zero(c2))) return false;
    // Only q moves, and t^-2 reaches every nonzero complex factor.
    const Vector q1 = n1.q.coord_vector();
    const Vector q2 = n2.q.coord_vector();
    if (is_zero(q1) || is_zero(q2)) return is_zero(q1) == is_zero(q2);
    return span_dim({q1, q2}, q1.size()) == 1;
  }
  std::size_t i = 0;
  while (c1[i] == 0) ++i;
  const Scalar t = c2[i] / c1[i];
  if (t == 0 || scale(t, c1) != c2) return false;
  return n2.q * (t * t) == n1.q;
}

bool s_equivalent(const NormalForm& n1, const NormalForm& n2) {
  if (n1.c.twist() == 0 && n2.c.twist() == 0 && is_nilpotent(n1) && is_nilpotent(n2)) return true;
  return orbit_equal(n1, n2);
}

Sym2Section hitchin_det(const SplitHiggs& h) { return -sym_prod(h.a(), h.a()) - sym_prod(h.b(), h.c()); }

Sym2Section hitchin_det(const NormalForm& n) { return -(n.q * sym_prod(n.c, n.c)); }

bool is_nilpotent(const SplitHiggs& h) { return hitchin_det(h).is_zero(); }

bool is_nilpotent(const NormalForm& n) { return hitchin_det(n).is_zero(); }

RegularityReport regularity_check(const SplitHiggs& h, const std::vector<ProjectivePoint>& points) {
  RegularityReport report;
  for (const auto& p : points) {
    report.checked.push_back(p);
    if (h.a().vanishes_at(p) && h.b().vanishes_at(p) && h.c().vanishes_at(p)) report.non_regular.push_back(p);
  }
  return report;
}

// ---- text and JSON --------------------------------------------------------

std::string vector_field_literal(const TwistedVectorField& v) {
  const auto& r = v.components();
  return r[0].to_string() + ", " + r[1].to_string() + ", " + r[2].to_string();
}

TwistedVectorField parse_vector_field(const std::string& text, int twist) {
  PolyTriple parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    const bool last = i == 2;
    if (last != (comma == std::string::npos)) {
      throw ParseError("expected three comma-separated components", last ? comma : text.size());
    }
    const std::string piece = text.substr(start, last ? std::string::npos : comma - start);
    try {
      parts[i] = parse_poly(piece, Grading::plane(twist + 1));
    } catch (const ParseError& e) {
      throw ParseError("component " + std::to_string(i + 1) + ": " + e.what(), start + e.position());
    }
    start = comma + 1;
  }
  return {twist, parts};
}

nlohmann::json to_json(const SplitHiggs& h) {
  return {{"bundle", h.bundle().to_string()},
          {"A", vector_field_literal(h.a())},
          {"B", vector_field_literal(h.b())},
          {"C", vector_field_literal(h.c())}};
}

nlohmann::json to_json(const TangentHiggs& h) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& x : h.flat()) coeffs.push_back(x.get_str());
  return {{"bundle", "tangent"}, {"coeffs", coeffs}};
}

std::variant<SplitHiggs, TangentHiggs> higgs_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("bundle") || !j["bundle"].is_string()) {
    throw ParseError("Higgs field JSON needs a string 'bundle'", 0);
  }
  const std::string bundle = j["bundle"].get<std::string>();
  if (bundle == "tangent") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].size() != kEndoCount * kFieldCount) {
      throw ParseError("tangent Higgs field needs 18 coefficients", 0);
    }
    Vector flat;
    for (const auto& c : j["coeffs"]) {
      if (c.is_string()) {
        try {
          flat.push_back(parse_scalar(c.get<std::string>()));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), flat.size());
        }
      } else if (c.is_number_integer()) {
        flat.emplace_back(c.get<long>());
      } else {
        throw ParseError("coefficients must be integers or rational strings", flat.size());
      }
    }
    return TangentHiggs::from_flat(flat);
  }
  const SplitBundle v = parse_split_bundle(bundle);
  auto component = [&](const char* key, int twist) {
    if (!j.contains(key)) return TwistedVectorField::zero(twist);
    if (!j[key].is_string()) throw ParseError(std::string("component ") + key + " must be a string", 0);
    return parse_vector_field(j[key].get<std::string>(), twist);
  };
  return SplitHiggs(v, component("A", 0), component("B", v.delta()), component("C", -v.delta()));
}

// ---- the tangent bundle ---------------------------------------------------

TangentHiggs::TangentHiggs(Matrix coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != kEndoCount || coeffs_.cols() != kFieldCount) {
    throw std::invalid_argument("tangent Higgs field needs a 6x3 coefficient table");
  }
}

TangentHiggs TangentHiggs::from_flat(const Vector& coeffs) {
  if (coeffs.size() != kEndoCount * kFieldCount) throw std::invalid_argument("expected 18 coefficients");
  Matrix m(kEndoCount, kFieldCount);
  for (std::size_t i = 0; i < kEndoCount; ++i)
    for (std::size_t j = 0; j < kFieldCount; ++j) m(i, j) = coeffs[i * kFieldCount + j];
  return TangentHiggs(std::move(m));
}

TangentHiggs TangentHiggs::simple(const Vector& u, const Vector& v) {
  if (u.size() != kEndoCount || v.size() != kFieldCount) throw std::invalid_argument("simple tensor needs 6 + 3 entries");
  Matrix m(kEndoCount, kFieldCount);
  for (std::size_t i = 0; i < kEndoCount; ++i)
    for (std::size_t j = 0; j < kFieldCount; ++j) m(i, j) = u[i] * v[j];
  return TangentHiggs(std::move(m));
}

Vector TangentHiggs::flat() const {
  Vector out;
  for (std::size_t i = 0; i < kEndoCount; ++i)
    for (std::size_t j = 0; j < kFieldCount; ++j) out.push_back(coeffs_(i, j));
  return out;
}

const TangentFamily& tangent_family() {
  static const TangentFamily family = [] {
    TangentFamily f;
    f.phi = end0T_basis(1);
    f.c = tfield_basis(-1);
    if (f.phi.size() != kEndoCount || f.c.size() != kFieldCount) {
      throw std::logic_error("unexpected dimensions for the tangent Higgs family");
    }
    f.target_dim = end0T_dim(3);
    f.products.resize(kEndoCount * kFieldCount * kEndoCount * kFieldCount);
    for (std::size_t i = 0; i < kEndoCount; ++i)
      for (std::size_t k = 0; k < kEndoCount; ++k) {
        const EndoTSection bracket = endoT_commutator(f.phi[i], f.phi[k]);
        for (std::size_t j = 0; j < kFieldCount; ++j)
          for (std::size_t l = 0; l < kFieldCount; ++l) {
            const std::size_t idx = ((i * kFieldCount + j) * kEndoCount + k) * kFieldCount + l;
            f.products[idx] = (wedge(f.c[j], f.c[l]) * bracket).basis_coordinates();
          }
      }
    return f;
  }();
  return family;
}

Vector tangent_pairing(const TangentHiggs& a, const TangentHiggs& b) {
  const TangentFamily& f = tangent_family();
  const Vector fa = a.flat();
  const Vector fb = b.flat();
  Vector out(f.target_dim);
  for (std::size_t x = 0; x < fa.size(); ++x) {
    if (fa[x] == 0) continue;
    for (std::size_t y = 0; y < fb.size(); ++y) {
      if (fb[y] == 0) continue;
      axpy(out, fa[x] * fb[y], f.products[x * fb.size() + y]);
    }
  }
  return out;
}

Vector tangent_wedge(const TangentHiggs& h) { return tangent_pairing(h, h); }

Matrix tangent_linearization(const TangentHiggs& h) {
  const std::size_t n = kEndoCount * kFieldCount;
  std::vector<Vector> columns;
  for (std::size_t e = 0; e < n; ++e) {
    columns.push_back(scale(2, tangent_pairing(h, TangentHiggs::from_flat(unit_vector(n, e)))));
  }
  return Matrix::from_columns(columns, tangent_family().target_dim);
}

bool simple_tensor_test(const TangentHiggs& h) { return rank(h.coeffs()) <= 1; }

std::pair<EndoTSection, TwistedVectorField> tangent_factor(const TangentHiggs& h) {
  if (rank(h.coeffs()) != 1) throw NotSimpleTensor("coefficient table does not have rank 1");
  const Matrix& a = h.coeffs();
  const TangentFamily& f = tangent_family();
  std::size_t r = 0;
  while (is_zero(a.row(r))) ++r;
  const Vector v = a.row(r);
  std::size_t jp = 0;
  while (v[jp] == 0) ++jp;
  EndoTSection phi = EndoTSection::zero(1);
  for (std::size_t i = 0; i < kEndoCount; ++i) {
    const Scalar u = a(i, jp) / v[jp];
    if (u != 0) phi = phi + u * f.phi[i];
  }
  return {phi, combine(-1, f.c, v)};
}

std::size_t commutator_rank(const EndoTSection& phi) {
  if (phi.twist() != 1) throw GradingMismatch("commutator_rank expects a section of End_0 T(1)");
  std::vector<Vector> columns;
  for (const auto& b : end0T_basis(1)) columns.push_back(endoT_commutator(b, phi).basis_coordinates());
  return rank(Matrix::from_columns(columns, end0T_dim(2)));
}

Poly det_polarization(const EndoTSection& a, const EndoTSection& b) {
  const Grading g = a.scalar_part().grading() + b.scalar_part().grading();
  Poly tr = Poly::zero(g);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) tr += a.entry(i, j) * b.entry(j, i);
  return Scalar(-1, 2) * (tr - a.scalar_part() * b.scalar_part());
}

Matrix det_jacobian(const EndoTSection& phi) {
  std::vector<Vector> columns;
  for (const auto& b : end0T_basis(phi.twist())) columns.push_back(scale(2, det_polarization(phi, b).coord_vector()));
  return Matrix::from_columns(columns, basis_size(Grading::plane(2 * phi.twist())));
}

DoubleCoverReport det_double_cover_probe(std::size_t samples, Sampler& rng, long bound) {
  if (samples == 0) throw DomainError("det_double_cover_probe needs at least one sample");
  DoubleCoverReport report;
  if (!EndoTSection::zero(1).det().is_zero()) report.failures.push_back("det(0) != 0");
  const std::size_t n = end0T_dim(1);
  for (std::size_t s = 0; s < samples; ++s) {
    const EndoTSection phi = EndoTSection::from_basis_coordinates(1, rng.vector(n, bound));
    ++report.samples;
    const Poly det = phi.det();
    if ((-phi).det() == det) ++report.even_ok;
    else report.failures.push_back("det(-phi) != det(phi) at sample " + std::to_string(s));
    if (det.is_zero()) continue;
    ++report.nondegenerate;
    const std::size_t r = rank(det_jacobian(phi));
    if (r == n) ++report.full_rank;
    else report.failures.push_back("Jacobian rank " + std::to_string(r) + " at phi = " + phi.to_string());
  }
  return report;
}

}  // namespace cohiggs
