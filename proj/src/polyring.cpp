#include "cohiggs/polyring.hpp"

#include <cctype>
#include <sstream>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

constexpr std::array<const char*, 3> kPlaneNames = {"x0", "x1", "x2"};
constexpr std::array<const char*, 4> kQuadricNames = {"s0", "s1", "t0", "t1"};

Grading grading_of(const Exponent& e, Family f) {
  if (f == Family::Plane) return Grading::plane(e[0] + e[1] + e[2]);
  return Grading::bi(e[0] + e[1], e[2] + e[3]);
}

}  // namespace

Grading Grading::operator+(const Grading& other) const {
  if (family != other.family) throw GradingMismatch("cannot combine plane and quadric gradings");
  if (family == Family::Plane) return plane(first + other.first);
  return bi(first + other.first, second + other.second);
}

bool Grading::is_empty() const {
  return first < 0 || (family == Family::Quadric && second < 0);
}

std::string Grading::to_string() const {
  if (family == Family::Plane) return std::to_string(first);
  return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
}

std::size_t basis_size(const Grading& g) {
  if (g.is_empty()) return 0;
  if (g.family == Family::Plane) {
    const auto d = static_cast<std::size_t>(g.first);
    return (d + 1) * (d + 2) / 2;
  }
  return static_cast<std::size_t>(g.first + 1) * static_cast<std::size_t>(g.second + 1);
}

std::vector<Exponent> basis(const Grading& g) {
  std::vector<Exponent> out;
  if (g.is_empty()) return out;
  out.reserve(basis_size(g));
  if (g.family == Family::Plane) {
    const int d = g.first;
    for (int e0 = d; e0 >= 0; --e0)
      for (int e1 = d - e0; e1 >= 0; --e1) out.push_back({e0, e1, d - e0 - e1, 0});
  } else {
    for (int s0 = g.first; s0 >= 0; --s0)
      for (int t0 = g.second; t0 >= 0; --t0) out.push_back({s0, g.first - s0, t0, g.second - t0});
  }
  return out;
}

std::size_t basis_index(const Grading& g, const Exponent& e) {
  if (grading_of(e, g.family) != g) throw GradingMismatch("monomial does not match grading " + g.to_string());
  if (g.family == Family::Plane) {
    const auto span = static_cast<std::size_t>(g.first - e[0]);
    return span * (span + 1) / 2 + (span - static_cast<std::size_t>(e[1]));
  }
  return static_cast<std::size_t>(g.first - e[0]) * static_cast<std::size_t>(g.second + 1) +
         static_cast<std::size_t>(g.second - e[2]);
}

Poly Poly::constant(const Scalar& c, Family f) {
  Poly p(f == Family::Plane ? Grading::plane(0) : Grading::bi(0, 0));
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

Poly Poly::monomial(const Exponent& e, const Scalar& c, Family f) {
  Poly p(grading_of(e, f));
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(int index, Family f) {
  const int count = f == Family::Plane ? 3 : 4;
  if (index < 0 || index >= count) throw std::out_of_range("variable index out of range");
  Exponent e{0, 0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(e, 1, f);
}

Poly Poly::from_coords(const Grading& g, const Vector& coords) {
  const auto mons = basis(g);
  if (coords.size() != mons.size()) throw std::invalid_argument("Poly::from_coords: wrong length");
  Poly p(g);
  for (std::size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], coords[i]);
  return p;
}

int Poly::degree() const {
  if (grading_.family != Family::Plane) throw GradingMismatch("degree() on a bigraded polynomial");
  return grading_.first;
}

Scalar Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Vector Poly::coord_vector() const {
  Vector v(basis_size(grading_));
  for (const auto& [e, c] : terms_) v[basis_index(grading_, e)] = c;
  return v;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  const std::size_t nvars = grading_.family == Family::Plane ? 3 : 4;
  if (point.size() != nvars) throw std::invalid_argument("Poly::evaluate: wrong number of coordinates");
  Scalar total = 0;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (grading_ != other.grading_) {
    throw GradingMismatch("adding polynomials of gradings " + grading_.to_string() + " and " +
                          other.grading_.to_string());
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.grading_ + b.grading_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

bool Poly::operator==(const Poly& other) const {
  return grading_ == other.grading_ && terms_ == other.terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& names = grading_.family == Family::Plane ? std::vector<std::string>(kPlaneNames.begin(), kPlaneNames.end())
                                                      : std::vector<std::string>(kQuadricNames.begin(), kQuadricNames.end());
  for (const auto& [e, c] : terms_) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : text_(text) {}

  struct Term {
    Exponent exponent{0, 0, 0, 0};
    Scalar coeff = 1;
    bool has_vars = false;
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    terms.push_back(term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      terms.push_back(term(op == '-' ? -1 : 1));
    }
    return terms;
  }

  std::optional<Family> family() const { return family_; }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  mpz_class natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a natural number", start);
    return mpz_class(text_.substr(start, pos_ - start));
  }

  Scalar rational() {
    mpz_class num = natural();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      mpz_class den = natural();
      if (den == 0) throw ParseError("zero denominator", at);
      Scalar q(num, den);
      q.canonicalize();
      return q;
    }
    return Scalar(num);
  }

  bool at_variable() {
    skip_ws();
    const char c = peek();
    return c == 'x' || c == 's' || c == 't';
  }

  void factor(Term& t) {
    skip_ws();
    const std::size_t start = pos_;
    const char letter = peek();
    if (letter != 'x' && letter != 's' && letter != 't') throw ParseError("expected a variable", start);
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected a variable index", pos_);
    }
    const int idx = peek() - '0';
    ++pos_;
    Family f = Family::Plane;
    int slot = 0;
    if (letter == 'x') {
      if (idx > 2) throw ParseError("unknown variable", start);
      slot = idx;
    } else {
      if (idx > 1) throw ParseError("unknown variable", start);
      f = Family::Quadric;
      slot = (letter == 's' ? 0 : 2) + idx;
    }
    if (family_ && *family_ != f) throw ParseError("mixed plane and quadric variables", start);
    family_ = f;
    int power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      power = static_cast<int>(natural().get_si());
    }
    t.exponent[static_cast<std::size_t>(slot)] += power;
    t.has_vars = true;
  }

  Term term(int sign) {
    Term t;
    t.coeff = sign;
    skip_ws();
    if (!at_variable()) {
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected a coefficient or variable", pos_);
      }
      t.coeff *= rational();
      skip_ws();
      if (peek() != '*') return t;
      ++pos_;
    }
    factor(t);
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::optional<Family> family_;
};

}  // namespace

Poly parse_poly(const std::string& text, std::optional<Grading> expected) {
  PolyParser parser(text);
  const auto terms = parser.parse();
  const Family fam = parser.family().value_or(expected ? expected->family : Family::Plane);

  std::optional<Grading> grading;
  bool all_constant = true;
  for (const auto& t : terms) {
    const Grading g = grading_of(t.exponent, fam);
    all_constant = all_constant && !t.has_vars;
    if (!grading) grading = g;
    else if (*grading != g) throw NonHomogeneous(grading->to_string(), g.to_string());
  }

  Poly out(*grading);
  for (const auto& t : terms) out = out + Poly::monomial(t.exponent, t.coeff, fam);

  if (expected) {
    if (all_constant && out.is_zero()) return Poly::zero(*expected);
    if (out.grading() != *expected) {
      throw GradingMismatch("literal '" + text + "' has grading " + out.grading().to_string() +
                            ", expected " + expected->to_string());
    }
  }
  return out;
}

}  // namespace cohiggs
