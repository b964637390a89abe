#include "cohiggs/eulercalc.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

template <class T>
class TwistCache {
 public:
  template <class Build>
  const T& get(int twist, Build build) {
    std::lock_guard lock(mu_);
    auto it = items_.find(twist);
    if (it == items_.end()) it = items_.emplace(twist, build()).first;
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<int, T> items_;
};

Grading deg(int d) { return Grading::plane(d); }
std::size_t count(int d) { return basis_size(deg(d)); }

void require_grading(const Poly& p, int d, const char* what) {
  if (p.grading() != deg(d)) {
    throw GradingMismatch(std::string(what) + ": expected degree " + std::to_string(d) + ", got " +
                          p.grading().to_string());
  }
}

template <std::size_t N>
Vector pack(const std::array<Poly, N>& polys) {
  std::vector<Vector> parts;
  parts.reserve(N);
  for (const auto& p : polys) parts.push_back(p.coord_vector());
  return concat(parts);
}

template <std::size_t N>
std::array<Poly, N> unpack(int d, const Vector& v) {
  const std::size_t n = count(d);
  if (v.size() != N * n) throw std::invalid_argument("ambient vector has the wrong length");
  std::array<Poly, N> out;
  for (std::size_t b = 0; b < N; ++b) {
    out[b] = Poly::from_coords(deg(d), Vector(v.begin() + static_cast<long>(b * n),
                                              v.begin() + static_cast<long>((b + 1) * n)));
  }
  return out;
}

Vector place(std::size_t blocks, std::size_t block, const Poly& p, std::size_t n) {
  Vector v(blocks * n);
  const Vector c = p.coord_vector();
  for (std::size_t i = 0; i < n; ++i) v[block * n + i] = c[i];
  return v;
}

std::vector<Scalar> point_vec(const ProjectivePoint& p) { return p.as_vector(); }

// Relation subspace for T(d): Euler triples Q x, Q of degree d.
const Subspace& tfield_relations(int d) {
  static TwistCache<Subspace> cache;
  return cache.get(d, [d] {
    const std::size_t n = count(d + 1);
    std::vector<Vector> moves;
    for (const auto& e : basis(deg(d))) {
      moves.push_back(pack(euler_triple(Poly::monomial(e, 1, Family::Plane))));
    }
    return Subspace(moves, 3 * n);
  });
}

constexpr std::array<std::pair<int, int>, 6> kSymSlots = {
    std::pair{0, 0}, std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}};

std::size_t sym_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  for (std::size_t k = 0; k < 6; ++k)
    if (kSymSlots[k].first == i && kSymSlots[k].second == j) return k;
  throw std::out_of_range("symmetric index");
}

// Relation subspace for S^2 T(d): x v^T + v x^T, v of degree d+1.
const Subspace& sym2_relations(int d) {
  static TwistCache<Subspace> cache;
  return cache.get(d, [d] {
    std::vector<Vector> moves;
    for (const auto& e : basis(deg(d + 1))) {
      const Poly m = Poly::monomial(e, 1, Family::Plane);
      for (int c = 0; c < 3; ++c) {
        SymEntries s;
        for (std::size_t k = 0; k < 6; ++k) {
          const auto [i, j] = kSymSlots[k];
          Poly entry = Poly::zero(deg(d + 2));
          if (j == c) entry += coordinate(i) * m;
          if (i == c) entry += coordinate(j) * m;
          s[k] = entry;
        }
        moves.push_back(pack(s));
      }
    }
    return Subspace(moves, 6 * count(d + 2));
  });
}

// End_0 T(d): constraint kernel modulo x w^T moves, with a canonical basis.
struct EndoModel {
  Subspace relations;
  std::vector<Vector> basis;
  std::vector<std::size_t> basis_pivots;
};

PolyTriple times_x(const PolyMatrix3& m) {
  PolyTriple out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = m[3 * i] * coordinate(0) + m[3 * i + 1] * coordinate(1) + m[3 * i + 2] * coordinate(2);
  }
  return out;
}

Vector endo_constraints(int d, const Vector& v) {
  const auto parts = unpack<10>(d, v);
  PolyMatrix3 m;
  for (std::size_t i = 0; i < 9; ++i) m[i] = parts[i];
  const Poly& g = parts[9];
  const PolyTriple mx = times_x(m);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < 3; ++i) rows.push_back((mx[i] - g * coordinate(static_cast<int>(i))).coord_vector());
  rows.push_back((m[0] + m[4] + m[8] - g).coord_vector());
  return concat(rows);
}

const EndoModel& endo_model(int d) {
  static TwistCache<EndoModel> cache;
  return cache.get(d, [d] {
    EndoModel model;
    const std::size_t n = count(d);
    const std::size_t ambient = 10 * n;
    std::vector<Vector> moves;
    for (const auto& e : basis(deg(d - 1))) {
      const Poly mono = Poly::monomial(e, 1, Family::Plane);
      for (std::size_t j = 0; j < 3; ++j) {
        Vector v(ambient);
        for (std::size_t i = 0; i < 3; ++i) {
          axpy(v, 1, place(10, 3 * i + j, coordinate(static_cast<int>(i)) * mono, n));
        }
        axpy(v, 1, place(10, 9, coordinate(static_cast<int>(j)) * mono, n));
        moves.push_back(std::move(v));
      }
    }
    model.relations = Subspace(moves, ambient);
    if (ambient == 0) return model;

    std::vector<Vector> columns;
    columns.reserve(ambient);
    for (std::size_t c = 0; c < ambient; ++c) columns.push_back(endo_constraints(d, unit_vector(ambient, c)));
    const Matrix constraints = Matrix::from_columns(columns, columns.front().size());
    std::vector<Vector> reduced;
    for (const auto& k : kernel_basis(constraints)) reduced.push_back(model.relations.reduce(k));
    model.basis = canonical_basis(reduced, ambient);
    for (const auto& b : model.basis) {
      std::size_t p = 0;
      while (b[p] == 0) ++p;
      model.basis_pivots.push_back(p);
    }
    return model;
  });
}

std::optional<Poly> divide_by_coordinate(const Poly& p, int i) {
  Poly out = Poly::zero(deg(p.degree() - 1));
  for (const auto& [e, c] : p.terms()) {
    if (e[static_cast<std::size_t>(i)] == 0) return std::nullopt;
    Exponent q = e;
    --q[static_cast<std::size_t>(i)];
    out += Poly::monomial(q, c, Family::Plane);
  }
  return out;
}

// Common engine for sections_vanishing_at: column k of the evaluation matrix
// lists the conditions of basis element k; kernel combinations are mapped
// back to ambient vectors and put in echelon form.
std::vector<Vector> vanishing_combinations(const std::vector<Vector>& ambient_vectors,
                                           const std::vector<Vector>& conditions, std::size_t ambient_dim) {
  if (ambient_vectors.empty()) return {};
  const Matrix eval = Matrix::from_columns(conditions, conditions.front().size());
  std::vector<Vector> combos;
  for (const auto& k : kernel_basis(eval)) {
    Vector v(ambient_dim);
    for (std::size_t j = 0; j < k.size(); ++j) axpy(v, k[j], ambient_vectors[j]);
    combos.push_back(std::move(v));
  }
  return canonical_basis(combos, ambient_dim);
}

Vector cross(const std::array<Scalar, 3>& p, const std::array<Scalar, 3>& v) {
  return {p[1] * v[2] - p[2] * v[1], p[2] * v[0] - p[0] * v[2], p[0] * v[1] - p[1] * v[0]};
}

}  // namespace

// ---- points ---------------------------------------------------------------

ProjectivePoint::ProjectivePoint(Scalar a0, Scalar a1, Scalar a2) : coords_{a0, a1, a2} {
  Scalar lead = 0;
  for (const auto& c : coords_)
    if (c != 0) {
      lead = c;
      break;
    }
  if (lead == 0) throw DomainError("projective point with all coordinates zero");
  for (auto& c : coords_) c /= lead;
}

std::string ProjectivePoint::to_string() const {
  return "[" + coords_[0].get_str() + ":" + coords_[1].get_str() + ":" + coords_[2].get_str() + "]";
}

Poly coordinate(int i) { return Poly::variable(i, Family::Plane); }

std::vector<Poly> poly_basis(const Grading& g) {
  std::vector<Poly> out;
  for (const auto& e : basis(g)) out.push_back(Poly::monomial(e, 1, g.family));
  return out;
}

// ---- T(d) -------------------------------------------------------------------

PolyTriple euler_triple(const Poly& q) { return {q * coordinate(0), q * coordinate(1), q * coordinate(2)}; }

PolyTriple canonical_triple(int twist, const PolyTriple& representative) {
  for (const auto& p : representative) require_grading(p, twist + 1, "vector field component");
  return unpack<3>(twist + 1, tfield_relations(twist).reduce(pack(representative)));
}

TwistedVectorField::TwistedVectorField(int twist, const PolyTriple& representative)
    : twist_(twist), rep_(canonical_triple(twist, representative)) {}

TwistedVectorField TwistedVectorField::zero(int twist) {
  const Poly z = Poly::zero(deg(twist + 1));
  return {twist, {z, z, z}};
}

TwistedVectorField TwistedVectorField::constant(const Scalar& a0, const Scalar& a1, const Scalar& a2) {
  return {-1, {Poly::constant(a0), Poly::constant(a1), Poly::constant(a2)}};
}

TwistedVectorField TwistedVectorField::from_coordinates(int twist, const Vector& quotient_coords) {
  const Subspace& rel = tfield_relations(twist);
  if (quotient_coords.size() != rel.free_columns().size()) {
    throw std::invalid_argument("wrong number of coordinates for H0(T(" + std::to_string(twist) + "))");
  }
  return from_ambient(twist, rel.lift(quotient_coords));
}

TwistedVectorField TwistedVectorField::from_ambient(int twist, const Vector& v) {
  return {twist, unpack<3>(twist + 1, v)};
}

Vector TwistedVectorField::ambient_vector() const { return pack(rep_); }

Vector TwistedVectorField::coordinates() const {
  return tfield_relations(twist_).quotient_coordinates(ambient_vector());
}

bool TwistedVectorField::is_zero() const {
  return rep_[0].is_zero() && rep_[1].is_zero() && rep_[2].is_zero();
}

bool TwistedVectorField::vanishes_at(const ProjectivePoint& p) const {
  const auto pt = point_vec(p);
  const std::array<Scalar, 3> value = {rep_[0].evaluate(pt), rep_[1].evaluate(pt), rep_[2].evaluate(pt)};
  return cohiggs::is_zero(cross(p.coords(), value));
}

TwistedVectorField TwistedVectorField::operator-() const { return {twist_, {-rep_[0], -rep_[1], -rep_[2]}}; }

TwistedVectorField operator+(const TwistedVectorField& a, const TwistedVectorField& b) {
  if (a.twist_ != b.twist_) throw GradingMismatch("adding vector fields of different twists");
  return {a.twist_, {a.rep_[0] + b.rep_[0], a.rep_[1] + b.rep_[1], a.rep_[2] + b.rep_[2]}};
}

TwistedVectorField operator-(const TwistedVectorField& a, const TwistedVectorField& b) { return a + (-b); }

TwistedVectorField operator*(const Scalar& s, const TwistedVectorField& v) {
  return {v.twist_, {s * v.rep_[0], s * v.rep_[1], s * v.rep_[2]}};
}

TwistedVectorField operator*(const Poly& f, const TwistedVectorField& v) {
  return {v.twist_ + f.degree(), {f * v.rep_[0], f * v.rep_[1], f * v.rep_[2]}};
}

std::string TwistedVectorField::to_string() const {
  return "(" + rep_[0].to_string() + ", " + rep_[1].to_string() + ", " + rep_[2].to_string() + ")";
}

std::size_t tfield_dim(int d) { return tfield_relations(d).free_columns().size(); }

std::vector<TwistedVectorField> tfield_basis(int d) {
  std::vector<TwistedVectorField> out;
  const std::size_t n = tfield_dim(d);
  for (std::size_t i = 0; i < n; ++i) out.push_back(TwistedVectorField::from_coordinates(d, unit_vector(n, i)));
  return out;
}

Poly wedge_raw(const PolyTriple& p, const PolyTriple& q) {
  const Poly x0 = coordinate(0), x1 = coordinate(1), x2 = coordinate(2);
  return x0 * (p[1] * q[2] - p[2] * q[1]) - x1 * (p[0] * q[2] - p[2] * q[0]) + x2 * (p[0] * q[1] - p[1] * q[0]);
}

Poly wedge(const TwistedVectorField& u, const TwistedVectorField& v) {
  return wedge_raw(u.components(), v.components());
}

ProjectivePoint zero_locus(const TwistedVectorField& c) {
  if (c.twist() != -1) throw GradingMismatch("zero_locus needs a section of T(-1)");
  if (c.is_zero()) throw ZeroSection("the zero section of T(-1) vanishes everywhere");
  const auto& r = c.components();
  const std::vector<Scalar> origin = {0, 0, 0};
  return {r[0].evaluate(origin), r[1].evaluate(origin), r[2].evaluate(origin)};
}

// ---- S^2 T(d) -------------------------------------------------------------

Sym2Section::Sym2Section(int twist, const SymEntries& representative) : twist_(twist) {
  for (const auto& p : representative) require_grading(p, twist + 2, "symmetric section entry");
  rep_ = unpack<6>(twist + 2, sym2_relations(twist).reduce(pack(representative)));
}

Sym2Section Sym2Section::zero(int twist) {
  SymEntries z;
  z.fill(Poly::zero(deg(twist + 2)));
  return {twist, z};
}

Sym2Section Sym2Section::from_ambient(int twist, const Vector& v) { return {twist, unpack<6>(twist + 2, v)}; }

const Poly& Sym2Section::entry(int i, int j) const { return rep_[sym_slot(i, j)]; }

Vector Sym2Section::ambient_vector() const { return pack(rep_); }

Vector Sym2Section::coordinates() const { return sym2_relations(twist_).quotient_coordinates(ambient_vector()); }

bool Sym2Section::is_zero() const {
  for (const auto& p : rep_)
    if (!p.is_zero()) return false;
  return true;
}

Sym2Section Sym2Section::operator-() const {
  SymEntries e = rep_;
  for (auto& p : e) p = -p;
  return {twist_, e};
}

Sym2Section operator+(const Sym2Section& a, const Sym2Section& b) {
  if (a.twist_ != b.twist_) throw GradingMismatch("adding symmetric sections of different twists");
  SymEntries e;
  for (std::size_t k = 0; k < 6; ++k) e[k] = a.rep_[k] + b.rep_[k];
  return {a.twist_, e};
}

Sym2Section operator-(const Sym2Section& a, const Sym2Section& b) { return a + (-b); }

Sym2Section operator*(const Poly& f, const Sym2Section& s) {
  SymEntries e;
  for (std::size_t k = 0; k < 6; ++k) e[k] = f * s.rep_[k];
  return {s.twist_ + f.degree(), e};
}

std::string Sym2Section::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < 3; ++i) {
    out << (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j) out << (j ? ", " : "") << entry(i, j).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

std::size_t sym2_euler_move_rank(int d) { return sym2_relations(d).dim(); }

std::size_t sym2_dim(int d) { return sym2_relations(d).free_columns().size(); }

SymEntries sym_prod_raw(const PolyTriple& p, const PolyTriple& q) {
  SymEntries out;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = kSymSlots[k];
    const auto a = static_cast<std::size_t>(i);
    const auto b = static_cast<std::size_t>(j);
    out[k] = Scalar(1, 2) * (p[a] * q[b] + q[a] * p[b]);
  }
  return out;
}

Sym2Section sym_prod(const TwistedVectorField& u, const TwistedVectorField& v) {
  return {u.twist() + v.twist(), sym_prod_raw(u.components(), v.components())};
}

std::vector<Sym2Section> sym2_basis(int d) {
  const Subspace& rel = sym2_relations(d);
  const std::size_t n = rel.free_columns().size();
  std::vector<Sym2Section> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Sym2Section::from_ambient(d, rel.lift(unit_vector(n, i))));
  return out;
}

// ---- End_0 T(d) -------------------------------------------------------------

EndoTSection::EndoTSection(int twist, PolyMatrix3 m, Poly g, bool canonical)
    : twist_(twist), m_(std::move(m)), g_(std::move(g)) {
  if (canonical) return;
  std::array<Poly, 10> parts;
  for (std::size_t i = 0; i < 9; ++i) parts[i] = m_[i];
  parts[9] = g_;
  const auto reduced = unpack<10>(twist_, endo_model(twist_).relations.reduce(pack(parts)));
  for (std::size_t i = 0; i < 9; ++i) m_[i] = reduced[i];
  g_ = reduced[9];
}

EndoTSection::EndoTSection(int twist, const PolyMatrix3& m, const Poly& g) : EndoTSection(twist, m, g, true) {
  for (const auto& p : m_) require_grading(p, twist, "endomorphism entry");
  require_grading(g_, twist, "scalar part");
  const PolyTriple mx = times_x(m_);
  for (std::size_t i = 0; i < 3; ++i) {
    if (mx[i] != g_ * coordinate(static_cast<int>(i))) {
      throw InvalidSection("matrix does not preserve the Euler line with the given scalar part");
    }
  }
  if (!(m_[0] + m_[4] + m_[8] - g_).is_zero()) throw InvalidSection("induced endomorphism is not trace-free");
  *this = EndoTSection(twist_, m_, g_, false);
}

EndoTSection EndoTSection::from_matrix(int twist, const PolyMatrix3& m) {
  for (const auto& p : m) require_grading(p, twist, "endomorphism entry");
  const PolyTriple mx = times_x(m);
  std::optional<Poly> g;
  for (int i = 0; i < 3 && !g; ++i) {
    if (mx[static_cast<std::size_t>(i)].is_zero()) continue;
    g = divide_by_coordinate(mx[static_cast<std::size_t>(i)], i);
    if (!g) throw InvalidSection("matrix does not preserve the Euler line");
  }
  return {twist, m, g.value_or(Poly::zero(deg(twist)))};
}

EndoTSection EndoTSection::zero(int twist) {
  PolyMatrix3 m;
  m.fill(Poly::zero(deg(twist)));
  return {twist, m, Poly::zero(deg(twist)), true};
}

EndoTSection EndoTSection::from_ambient(int twist, const Vector& v) {
  const auto parts = unpack<10>(twist, v);
  PolyMatrix3 m;
  for (std::size_t i = 0; i < 9; ++i) m[i] = parts[i];
  return {twist, m, parts[9]};
}

EndoTSection EndoTSection::from_basis_coordinates(int twist, const Vector& coords) {
  const EndoModel& model = endo_model(twist);
  if (coords.size() != model.basis.size()) throw std::invalid_argument("wrong number of End_0 T coordinates");
  Vector v(10 * count(twist));
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(v, coords[i], model.basis[i]);
  const auto parts = unpack<10>(twist, v);
  PolyMatrix3 m;
  for (std::size_t i = 0; i < 9; ++i) m[i] = parts[i];
  return {twist, m, parts[9], true};
}

Vector EndoTSection::ambient_vector() const {
  std::array<Poly, 10> parts;
  for (std::size_t i = 0; i < 9; ++i) parts[i] = m_[i];
  parts[9] = g_;
  return pack(parts);
}

Vector EndoTSection::basis_coordinates() const {
  const EndoModel& model = endo_model(twist_);
  const Vector v = ambient_vector();
  Vector out;
  out.reserve(model.basis_pivots.size());
  for (auto p : model.basis_pivots) out.push_back(v[p]);
  return out;
}

bool EndoTSection::is_zero() const { return cohiggs::is_zero(ambient_vector()); }

bool EndoTSection::vanishes_at(const ProjectivePoint& p) const {
  const auto pt = point_vec(p);
  for (std::size_t j = 0; j < 3; ++j) {
    const std::array<Scalar, 3> col = {m_[j].evaluate(pt), m_[3 + j].evaluate(pt), m_[6 + j].evaluate(pt)};
    if (!cohiggs::is_zero(cross(p.coords(), col))) return false;
  }
  return true;
}

Poly det_raw(const PolyMatrix3& m, const Poly& g) {
  Poly tr_sq = Poly::zero(g.grading() + g.grading());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) tr_sq += m[3 * i + j] * m[3 * j + i];
  return Scalar(-1, 2) * (tr_sq - g * g);
}

Poly EndoTSection::det() const { return det_raw(m_, g_); }

EndoTSection EndoTSection::operator-() const {
  PolyMatrix3 m = m_;
  for (auto& p : m) p = -p;
  return {twist_, m, -g_, true};
}

EndoTSection operator+(const EndoTSection& a, const EndoTSection& b) {
  if (a.twist_ != b.twist_) throw GradingMismatch("adding endomorphisms of different twists");
  PolyMatrix3 m;
  for (std::size_t i = 0; i < 9; ++i) m[i] = a.m_[i] + b.m_[i];
  return {a.twist_, m, a.g_ + b.g_, true};
}

EndoTSection operator-(const EndoTSection& a, const EndoTSection& b) { return a + (-b); }

EndoTSection operator*(const Scalar& s, const EndoTSection& e) {
  PolyMatrix3 m = e.m_;
  for (auto& p : m) p *= s;
  return {e.twist_, m, s * e.g_, true};
}

EndoTSection operator*(const Poly& f, const EndoTSection& e) {
  PolyMatrix3 m;
  for (std::size_t i = 0; i < 9; ++i) m[i] = f * e.m_[i];
  return {e.twist_ + f.degree(), m, f * e.g_};
}

std::string EndoTSection::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < 3; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < 3; ++j) out << (j ? ", " : "") << m_[3 * i + j].to_string();
    out << "]";
  }
  out << "] mod x w^T, scalar " << g_.to_string();
  return out.str();
}

std::size_t end0T_dim(int d) { return endo_model(d).basis.size(); }

std::vector<EndoTSection> end0T_basis(int d) {
  const std::size_t n = end0T_dim(d);
  std::vector<EndoTSection> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(EndoTSection::from_basis_coordinates(d, unit_vector(n, i)));
  return out;
}

PolyMatrix3 commutator_raw(const PolyMatrix3& a, const PolyMatrix3& b) {
  PolyMatrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Poly s = Poly::zero(a[0].grading() + b[0].grading());
      for (std::size_t k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j] - b[3 * i + k] * a[3 * k + j];
      out[3 * i + j] = s;
    }
  return out;
}

EndoTSection endoT_commutator(const EndoTSection& a, const EndoTSection& b) {
  const int twist = a.twist() + b.twist();
  return {twist, commutator_raw(a.matrix(), b.matrix()), Poly::zero(deg(twist))};
}

// ---- point conditions -----------------------------------------------------

std::vector<Poly> sections_vanishing_at(const std::vector<Poly>& basis, const ProjectivePoint& p) {
  if (basis.empty()) return {};
  const Grading g = basis.front().grading();
  const auto pt = point_vec(p);
  std::vector<Vector> ambient, conditions;
  for (const auto& f : basis) {
    if (f.grading() != g) throw GradingMismatch("mixed gradings in a section basis");
    ambient.push_back(f.coord_vector());
    conditions.push_back({f.evaluate(pt)});
  }
  std::vector<Poly> out;
  for (const auto& v : vanishing_combinations(ambient, conditions, basis_size(g))) out.push_back(Poly::from_coords(g, v));
  return out;
}

std::vector<TwistedVectorField> sections_vanishing_at(const std::vector<TwistedVectorField>& basis,
                                                      const ProjectivePoint& p) {
  if (basis.empty()) return {};
  const int twist = basis.front().twist();
  const auto pt = point_vec(p);
  std::vector<Vector> ambient, conditions;
  for (const auto& v : basis) {
    if (v.twist() != twist) throw GradingMismatch("mixed twists in a section basis");
    ambient.push_back(v.ambient_vector());
    const auto& r = v.components();
    conditions.push_back(cross(p.coords(), {r[0].evaluate(pt), r[1].evaluate(pt), r[2].evaluate(pt)}));
  }
  std::vector<TwistedVectorField> out;
  for (const auto& v : vanishing_combinations(ambient, conditions, 3 * count(twist + 1))) {
    out.push_back(TwistedVectorField::from_ambient(twist, v));
  }
  return out;
}

std::vector<EndoTSection> sections_vanishing_at(const std::vector<EndoTSection>& basis, const ProjectivePoint& p) {
  if (basis.empty()) return {};
  const int twist = basis.front().twist();
  const auto pt = point_vec(p);
  std::vector<Vector> ambient, conditions;
  for (const auto& e : basis) {
    if (e.twist() != twist) throw GradingMismatch("mixed twists in a section basis");
    ambient.push_back(e.ambient_vector());
    Vector cond;
    for (int j = 0; j < 3; ++j) {
      const std::array<Scalar, 3> col = {e.entry(0, j).evaluate(pt), e.entry(1, j).evaluate(pt),
                                         e.entry(2, j).evaluate(pt)};
      const Vector c = cross(p.coords(), col);
      cond.insert(cond.end(), c.begin(), c.end());
    }
    conditions.push_back(std::move(cond));
  }
  std::vector<EndoTSection> out;
  for (const auto& v : vanishing_combinations(ambient, conditions, 10 * count(twist))) {
    out.push_back(EndoTSection::from_ambient(twist, v));
  }
  return out;
}

}  // namespace cohiggs
