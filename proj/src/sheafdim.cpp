#include "cohiggs/sheafdim.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "cohiggs/errors.hpp"

namespace cohiggs {

std::string to_string(Route r) {
  switch (r) {
    case Route::ClosedForm: return "closed-form";
    case Route::KunnethChase: return "kunneth-chase";
    case Route::RiemannRoch: return "riemann-roch";
    case Route::SymbolicRank: return "symbolic-rank";
  }
  return "?";
}

long h_p1(int i, long n) {
  switch (i) {
    case 0: return std::max(n + 1, 0L);
    case 1: return std::max(-n - 1, 0L);
    default: return 0;
  }
}

long h_p2(int i, long d) {
  switch (i) {
    case 0: return d >= 0 ? (d + 1) * (d + 2) / 2 : 0;
    case 1: return 0;
    case 2: return h_p2(0, -d - 3);  // Serre duality, K = O(-3)
    default: return 0;
  }
}

long h_quadric(int i, long a, long b) {
  long total = 0;
  for (int p = 0; p <= 1; ++p) {
    const int q = i - p;
    if (q < 0 || q > 1) continue;
    total += h_p1(p, a) * h_p1(q, b);
  }
  return total;
}

CohomProfile line_bundle_p2(long d) {
  CohomProfile p;
  p.h = {h_p2(0, d), h_p2(1, d), h_p2(2, d)};
  p.route = Route::ClosedForm;
  std::ostringstream s;
  s << "h(O(" << d << ")) = (" << p.h[0] << ", " << p.h[1] << ", " << p.h[2] << ")";
  if (d < 0) s << " [h2 = h0(O(" << -d - 3 << ")) by Serre duality]";
  p.ledger.push_back(s.str());
  return p;
}

CohomProfile line_bundle_quadric(long a, long b) {
  CohomProfile p;
  p.h = {h_quadric(0, a, b), h_quadric(1, a, b), h_quadric(2, a, b)};
  p.route = Route::KunnethChase;
  std::ostringstream s;
  s << "h(O(" << a << "," << b << ")) = (" << p.h[0] << ", " << p.h[1] << ", " << p.h[2]
    << ") [Kunneth]";
  p.ledger.push_back(s.str());
  return p;
}

ChernData dual(const ChernData& c) {
  if (c.rank != 2) throw RankUnsupported("dual Chern data implemented for rank 2 only");
  return {2, -c.c1, c.c2};
}

ChernData chern_twist(const ChernData& c, long m) {
  if (c.rank != 2) throw RankUnsupported("chern_twist implemented for rank 2 only");
  return {2, c.c1 + 2 * m, c.c2 + m * c.c1 + m * m};
}

std::pair<ChernData, ChernData> schwarz_chern(long k) {
  if (k < 0) throw DomainError("Schwarzenberger index must be nonnegative");
  const ChernData v{2, k - 1, k * (k - 1) / 2};
  return {v, dual(v)};
}

ChernCharacter chern_character(const ChernData& c) {
  const Scalar c1 = c.c1;
  return {Scalar(c.rank), c1, (c1 * c1 - 2 * Scalar(c.c2)) / 2};
}

ChernCharacter line_bundle_ch(long d) {
  const Scalar dd = d;
  return {1, dd, dd * dd / 2};
}

ChernCharacter tensor_ch(const ChernCharacter& a, const ChernCharacter& b) {
  return {a.ch0 * b.ch0, a.ch0 * b.ch1 + a.ch1 * b.ch0,
          a.ch0 * b.ch2 + a.ch1 * b.ch1 + a.ch2 * b.ch0};
}

ChernCharacter dual_ch(const ChernCharacter& a) { return {a.ch0, -a.ch1, a.ch2}; }

ChernCharacter endo_ch(const ChernData& c) {
  const ChernCharacter v = chern_character(c);
  ChernCharacter e = tensor_ch(v, dual_ch(v));
  e.ch0 -= 1;
  return e;
}

ChernCharacter tangent_ch() { return chern_character({2, 3, 3}); }

long chi_rr(const ChernCharacter& ch, long twist) {
  const ChernCharacter t = tensor_ch(ch, line_bundle_ch(twist));
  const Scalar chi = t.ch0 + t.ch1 * Scalar(3, 2) + t.ch2;
  if (chi.get_den() != 1) {
    throw IntegralityError("Riemann-Roch gives non-integral chi = " + chi.get_str());
  }
  return chi.get_num().get_si();
}

std::string to_string(LesMap m) {
  switch (m) {
    case LesMap::H0A_H0B: return "H0(A)->H0(B)";
    case LesMap::H0B_H0C: return "H0(B)->H0(C)";
    case LesMap::Delta0: return "delta0:H0(C)->H1(A)";
    case LesMap::H1A_H1B: return "H1(A)->H1(B)";
    case LesMap::H1B_H1C: return "H1(B)->H1(C)";
    case LesMap::Delta1: return "delta1:H1(C)->H2(A)";
    case LesMap::H2A_H2B: return "H2(A)->H2(B)";
    case LesMap::H2B_H2C: return "H2(B)->H2(C)";
  }
  return "?";
}

CohomProfile LesResult::profile(Route route) const {
  if (!exact()) throw ChaseUnresolved("long exact sequence leaves an interval");
  CohomProfile p;
  p.h = lo;
  p.route = route;
  p.ledger = ledger;
  return p;
}

namespace {

std::string pos_name(LesPosition p) {
  switch (p) {
    case LesPosition::Sub: return "A";
    case LesPosition::Middle: return "B";
    case LesPosition::Quotient: return "C";
  }
  return "?";
}

}  // namespace

LesResult les_chase(const LesInput& in) {
  const int known_count = int(in.sub.has_value()) + int(in.middle.has_value()) + int(in.quotient.has_value());
  if (known_count != 2) throw std::invalid_argument("les_chase needs exactly one unknown position");

  LesResult result;
  int unknown_slot = 0;
  if (!in.sub) {
    result.unknown = LesPosition::Sub;
    unknown_slot = 0;
  } else if (!in.middle) {
    result.unknown = LesPosition::Middle;
    unknown_slot = 1;
  } else {
    result.unknown = LesPosition::Quotient;
    unknown_slot = 2;
  }

  // V[1..9] = H0A H0B H0C H1A H1B H1C H2A H2B H2C; -1 marks unknown.
  std::array<long, 10> dims{};
  const std::array<const std::optional<CohomProfile>*, 3> slots = {&in.sub, &in.middle, &in.quotient};
  for (int deg = 0; deg < 3; ++deg)
    for (int s = 0; s < 3; ++s) {
      const auto& prof = *slots[static_cast<std::size_t>(s)];
      dims[static_cast<std::size_t>(1 + 3 * deg + s)] = prof ? prof->h[static_cast<std::size_t>(deg)] : -1;
    }

  std::array<bool, 9> forced{};
  for (auto m : in.forced_zero) forced[static_cast<std::size_t>(m) + 1] = true;

  std::array<long, 3> lo{-1, -1, -1};
  std::array<long, 3> hi{-1, -1, -1};
  std::array<std::set<long>, 9> seen_ranks;
  std::array<long, 10> r{};
  bool feasible = false;

  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == 9) {
      if (dims[9] >= 0 && dims[9] != r[8]) return;
      feasible = true;
      for (int deg = 0; deg < 3; ++deg) {
        const std::size_t v = static_cast<std::size_t>(1 + 3 * deg + unknown_slot);
        const long value = r[v - 1] + (v < 9 ? r[v] : 0);
        auto& l = lo[static_cast<std::size_t>(deg)];
        auto& h = hi[static_cast<std::size_t>(deg)];
        l = l < 0 ? value : std::min(l, value);
        h = std::max(h, value);
      }
      for (std::size_t m = 1; m <= 8; ++m) seen_ranks[m].insert(r[m]);
      return;
    }
    if (dims[i] >= 0) {
      const long ri = dims[i] - r[i - 1];
      if (ri < 0) return;
      if (forced[i] && ri != 0) return;
      if (dims[i + 1] >= 0 && ri > dims[i + 1]) return;
      r[i] = ri;
      walk(i + 1);
    } else {
      const long bound = forced[i] ? 0 : dims[i + 1];
      for (long ri = 0; ri <= bound; ++ri) {
        r[i] = ri;
        walk(i + 1);
      }
    }
  };
  r[0] = 0;
  walk(1);

  if (!feasible) {
    throw InconsistentData("no map ranks make " + (in.label.empty() ? std::string("the sequence") : in.label) +
                           " exact");
  }
  result.lo = lo;
  result.hi = hi;
  for (std::size_t m = 1; m <= 8; ++m) {
    if (seen_ranks[m].size() > 1) result.undetermined.push_back(static_cast<LesMap>(m - 1));
  }

  if (!in.label.empty()) result.ledger.push_back("sequence " + in.label);
  for (int s = 0; s < 3; ++s) {
    const auto& prof = *slots[static_cast<std::size_t>(s)];
    if (!prof) continue;
    std::ostringstream line;
    line << "h(" << pos_name(static_cast<LesPosition>(s)) << ") = (" << prof->h[0] << ", " << prof->h[1]
         << ", " << prof->h[2] << ")";
    result.ledger.push_back(line.str());
  }
  for (auto m : in.forced_zero) result.ledger.push_back("assumed zero: " + to_string(m));
  for (int deg = 0; deg < 3; ++deg) {
    std::ostringstream line;
    const auto d = static_cast<std::size_t>(deg);
    line << "h" << deg << "(" << pos_name(result.unknown) << ") = ";
    if (lo[d] == hi[d]) line << lo[d];
    else line << "[" << lo[d] << ", " << hi[d] << "]";
    result.ledger.push_back(line.str());
  }
  for (auto m : result.undetermined) result.ledger.push_back("rank undetermined: " + to_string(m));
  return result;
}

}  // namespace cohiggs
