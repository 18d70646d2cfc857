#ifndef APOLAR_HVECTORS_HPP
#define APOLAR_HVECTORS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/inverse_system.hpp"
#include "apolar/multipoly.hpp"
#include "apolar/rational.hpp"

namespace apolar {

/// d-th Macaulay representation n = C(k_d, d) + C(k_{d-1}, d-1) + ... with
/// k_d > k_{d-1} > ... >= j >= 1, chosen greedily.
struct MacaulayRep {
  std::size_t n = 0;
  unsigned d = 0;
  /// (k_j, j) pairs from j = d downwards.
  std::vector<std::pair<std::size_t, unsigned>> terms;
};

inline MacaulayRep macaulay_representation(std::size_t n, unsigned d) {
  if (d == 0) throw ContractViolation("Macaulay representation needs d >= 1");
  MacaulayRep rep{n, d, {}};
  std::size_t rest = n;
  for (unsigned j = d; j >= 1 && rest > 0; --j) {
    std::size_t k = j;
    while (binomial(k + 1, j) <= rest) ++k;
    rep.terms.emplace_back(k, j);
    rest -= binomial(k, j);
  }
  return rep;
}

/// n^<d>: each C(k_j, j) becomes C(k_j + 1, j + 1).
inline std::size_t macaulay_growth(std::size_t n, unsigned d) {
  std::size_t out = 0;
  for (auto [k, j] : macaulay_representation(n, d).terms) out += binomial(k + 1, j + 1);
  return out;
}

/// h_{i+1} <= h_i^<i> for every i >= 1; h_1 is unconstrained.
inline bool is_o_sequence(const std::vector<std::size_t>& h) {
  if (h.empty() || h[0] != 1) return false;
  for (std::size_t i = 1; i + 1 < h.size(); ++i)
    if (h[i + 1] > macaulay_growth(h[i], static_cast<unsigned>(i))) return false;
  return true;
}
inline bool is_o_sequence(const HVector& h) { return is_o_sequence(h.entries()); }

/// The first violated condition for a level local h-vector of socle degree
/// <= 3, or nullopt when admissible.
inline std::optional<std::string> admissibility_violation(const HVector& h) {
  const std::size_t s = h.socle_degree();
  if (s == 0) throw ContractViolation("h-vector of socle degree 0");
  if (s >= 4) throw Unsupported("unsupported socle degree " + std::to_string(s));
  const std::size_t m = h[1];
  if (s == 1) return std::nullopt;
  const std::size_t quad = binomial(m + 1, 2);
  if (s == 2) {
    if (h[2] > quad) return "tau > binom(m+1,2)";
    return std::nullopt;
  }
  const std::size_t n = h[2], tau = h[3];
  if (n > quad) return "n > binom(m+1,2)";
  if (tau > macaulay_growth(n, 2)) return "tau > n^<2>";
  if (n > tau * m) return "n > tau*m";
  return std::nullopt;
}

inline bool is_admissible_level_local(const HVector& h) { return !admissibility_violation(h); }

/// Which construction realizes an admissible h-vector.
enum class ConstructionTag { linear, soc2, prop1, proamm1_a, proamm1_b, proamm1_c, proamm1_d, proamm3_h0, proamm3_hpos };

inline std::string to_string(ConstructionTag t) {
  switch (t) {
    case ConstructionTag::linear: return "linear";
    case ConstructionTag::soc2: return "soc2";
    case ConstructionTag::prop1: return "prop1";
    case ConstructionTag::proamm1_a: return "proamm1-a";
    case ConstructionTag::proamm1_b: return "proamm1-b";
    case ConstructionTag::proamm1_c: return "proamm1-c";
    case ConstructionTag::proamm1_d: return "proamm1-d";
    case ConstructionTag::proamm3_h0: return "proamm3-h0";
    case ConstructionTag::proamm3_hpos: return "proamm3-hpos";
  }
  return "?";
}

struct ConstructionReport {
  HVector target;
  std::vector<Poly> generators;
  ConstructionTag tag{};
  bool homogeneous = false;
  HVector verified_hvector;
  bool verified_level = false;
  std::size_t verified_type = 0;
};

/// Raised by construct() for inadmissible input; what() names the violated condition.
class Inadmissible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct Builder {
  std::size_t m;

  /// x_{i1} x_{i2} ... with 1-based indices read modulo m (x_{m+1} = x_1).
  Poly mono(std::initializer_list<std::size_t> idx) const {
    std::vector<unsigned> e(m, 0);
    for (auto i : idx) e[(i - 1) % m] += 1;
    return Poly::term(Monomial(std::move(e)), 1);
  }
  Poly cube(std::size_t i) const { return mono({i, i, i}); }
  Poly square(std::size_t i) const { return mono({i, i}); }
  /// x_i^2 x_{i+j}, an element of the ladder D_j.
  Poly ladder(std::size_t i, std::size_t j) const { return mono({i, i, i + j}); }
  Poly zero() const { return Poly(m); }
};

/// Degree-d monomials in x_1..x_l, lex order, as polynomials in m variables.
inline std::vector<Poly> lex_support(std::size_t m, std::size_t l, unsigned d) {
  std::vector<Poly> out;
  for (const auto& mono : frame(l, d)) out.push_back(Poly::term(mono, 1).embedded(m));
  return out;
}

inline ConstructionTag dispatch_tag(const HVector& h) {
  const std::size_t s = h.socle_degree();
  if (s == 1) return ConstructionTag::linear;
  if (s == 2) return ConstructionTag::soc2;
  const std::size_t m = h[1], n = h[2], tau = h[3];
  const bool p3 = n < tau, p1 = tau <= n && n < m, pa = n >= std::max(tau, m);
  if (int(p3) + int(p1) + int(pa) != 1) throw std::logic_error("construction ranges overlap");
  if (p3) return macaulay_representation(n, 2).terms.size() == 1 ? ConstructionTag::proamm3_h0
                                                                  : ConstructionTag::proamm3_hpos;
  if (p1) return ConstructionTag::prop1;
  if (m == 1) return ConstructionTag::proamm1_b;
  const std::size_t h_ = (n - tau) / (m - 1), l = (n - tau) % (m - 1);
  if (tau == h_) return ConstructionTag::proamm1_a;
  if (tau == h_ + 1) return ConstructionTag::proamm1_b;
  if (tau <= h_ + m - l) return ConstructionTag::proamm1_c;
  return ConstructionTag::proamm1_d;
}

/// The monomials of the ladder D_j, in ladder order i = 1..m.
inline std::vector<Monomial> ladder_monomials(std::size_t m, std::size_t j) {
  const Builder b{m};
  std::vector<Monomial> out;
  for (std::size_t i = 1; i <= m; ++i) out.push_back(b.ladder(i, j).leading_monomial());
  return out;
}

inline std::vector<Poly> build_soc2(std::size_t m, std::size_t tau) {
  const Builder b{m};
  std::vector<Poly> f;
  if (tau >= m) {
    auto all = lex_support(m, m, 2);
    f.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(tau));
    return f;
  }
  for (std::size_t i = 1; i < tau; ++i) f.push_back(b.square(i));
  Poly last = b.zero();
  for (std::size_t i = tau; i <= m; ++i) last += b.square(i);
  f.push_back(std::move(last));
  return f;
}

inline std::vector<Poly> build_prop1(std::size_t m, std::size_t n, std::size_t tau) {
  const Builder b{m};
  std::vector<Poly> f;
  for (std::size_t i = 1; i < tau; ++i) f.push_back(b.cube(i));
  Poly last = b.zero();
  for (std::size_t i = tau; i <= n; ++i) last += b.cube(i);
  for (std::size_t i = n + 1; i <= m; ++i) last += b.square(i);
  f.push_back(std::move(last));
  return f;
}

/// Homogeneous cubics with disjoint supports drawn from the ladders
/// D_j = {x_i^2 x_{i+j}}, indices wrapping around modulo m.
inline std::vector<Poly> build_proamm1(std::size_t m, std::size_t n, std::size_t tau) {
  const Builder b{m};
  if (m == 1) return {b.cube(1)};
  const std::size_t h = (n - tau) / (m - 1), l = (n - tau) % (m - 1);
  std::vector<Poly> f;
  // (a): full ladders D_0 .. D_{h-1} as sums.
  for (std::size_t j = 1; j <= h && f.size() < tau; ++j) {
    Poly g = b.zero();
    for (std::size_t i = 1; i <= m; ++i) g += b.ladder(i, j - 1);
    f.push_back(std::move(g));
  }
  if (f.size() == tau) return f;
  // (b): the first l+1 terms of D_h.
  {
    Poly g = b.zero();
    for (std::size_t i = 1; i <= l + 1; ++i) g += b.ladder(i, h);
    f.push_back(std::move(g));
  }
  // (c): the rest of D_h one term at a time.
  for (std::size_t i = l + 2; i <= m && f.size() < tau; ++i) f.push_back(b.ladder(i, h));
  // (d): then D_{h+1}, D_{h+2}, ... in their ladder order.
  for (std::size_t j = h + 1; f.size() < tau; ++j) {
    if (j >= m) throw std::logic_error("proamm1: ran out of ladder terms");
    for (std::size_t i = 1; i <= m && f.size() < tau; ++i) f.push_back(b.ladder(i, j));
  }
  return f;
}

inline std::vector<Poly> build_proamm3(std::size_t m, std::size_t n, std::size_t tau) {
  const Builder b{m};
  const auto rep = macaulay_representation(n, 2);
  // n = C(l+1, 2) + h with 0 <= h <= l.
  const std::size_t l = rep.terms[0].first - 1;
  const std::size_t h = rep.terms.size() > 1 ? rep.terms[1].first : 0;
  std::vector<Poly> forms;
  std::size_t tail_from;
  if (h == 0) {
    auto cubics = lex_support(m, l, 3);
    forms.assign(cubics.begin(), cubics.begin() + static_cast<std::ptrdiff_t>(tau));
    tail_from = l + 1;
  } else {
    // x1 * T_l^2 in lex order, then x_{l+1}^3, x1 x_{l+1}^2, ..., x_{h-1} x_{l+1}^2.
    for (const auto& q : lex_support(m, l, 2)) forms.push_back(b.mono({1}) * q);
    forms.push_back(b.cube(l + 1));
    for (std::size_t i = 1; i + 1 <= h; ++i) forms.push_back(b.mono({i, l + 1, l + 1}));
    // Extra forms from (T_l^3 \ x1 T_l^2) ∪ x_{l+1} T_{h-1}^2, lex order.
    std::vector<Poly> spare;
    for (const auto& c : lex_support(m, l, 3))
      if (c.leading_monomial()[0] == 0) spare.push_back(c);
    if (h >= 2)
      for (const auto& q : lex_support(m, h - 1, 2)) spare.push_back(b.mono({l + 1}) * q);
    std::sort(spare.begin(), spare.end(),
              [](const Poly& x, const Poly& y) { return x.leading_monomial() > y.leading_monomial(); });
    for (std::size_t k = 0; forms.size() < tau; ++k) {
      if (k >= spare.size()) throw std::logic_error("proamm3: not enough spare cubics");
      forms.push_back(spare[k]);
    }
    tail_from = l + 2;
  }
  for (std::size_t i = tail_from; i <= m; ++i) forms[0] += b.square(i);
  return forms;
}

}  // namespace detail

inline ConstructionTag dispatch_tag(const HVector& h) {
  if (auto v = admissibility_violation(h)) throw Inadmissible(*v);
  return detail::dispatch_tag(h);
}

/// Explicit inverse-system generators realizing an admissible h-vector of
/// socle degree <= 3, re-verified before returning.
inline ConstructionReport construct(const HVector& h) {
  if (auto v = admissibility_violation(h)) throw Inadmissible(*v);
  ConstructionReport rep;
  rep.target = h;
  rep.tag = detail::dispatch_tag(h);
  const std::size_t m = h[1];
  switch (h.socle_degree()) {
    case 1:
      for (std::size_t i = 0; i < m; ++i) rep.generators.push_back(Poly::variable(m, i));
      break;
    case 2:
      rep.generators = detail::build_soc2(m, h[2]);
      break;
    default: {
      const std::size_t n = h[2], tau = h[3];
      switch (rep.tag) {
        case ConstructionTag::prop1: rep.generators = detail::build_prop1(m, n, tau); break;
        case ConstructionTag::proamm3_h0:
        case ConstructionTag::proamm3_hpos: rep.generators = detail::build_proamm3(m, n, tau); break;
        default: rep.generators = detail::build_proamm1(m, n, tau); break;
      }
    }
  }
  rep.homogeneous = std::all_of(rep.generators.begin(), rep.generators.end(),
                                [](const Poly& g) { return g.is_homogeneous(); });
  const InverseSystem is = build(rep.generators, m);
  rep.verified_hvector = hilbert_function(is);
  const auto lvl = is_level(is);
  rep.verified_level = lvl.level;
  rep.verified_type = lvl.type;
  if (rep.verified_hvector != h || !rep.verified_level)
    throw std::logic_error("construction for " + to_string(h) + " produced " + to_string(rep.verified_hvector));
  return rep;
}

struct AdmissibleEntry {
  HVector h;
  ConstructionTag tag{};
  /// Commentary for the codimension-three vectors that no graded level algebra attains.
  std::string note;
};

/// Every admissible h-vector with h_1 = m and socle degree s in {1,2,3},
/// optionally restricted to type tau. Sorted lexicographically.
inline std::vector<AdmissibleEntry> enumerate_admissible(std::size_t m, unsigned s,
                                                        std::optional<std::size_t> type = std::nullopt) {
  if (m == 0) throw ContractViolation("enumerate_admissible: m must be positive");
  if (s == 0 || s >= 4) throw Unsupported("unsupported socle degree " + std::to_string(s));
  std::vector<AdmissibleEntry> out;
  auto push = [&](std::vector<std::size_t> v) {
    HVector h(std::move(v));
    if (type && h[s] != *type) return;
    if (!is_admissible_level_local(h)) return;
    AdmissibleEntry e{h, detail::dispatch_tag(h), {}};
    if (h == HVector{1, 3, 2, 1}) e.note = "not graded-admissible: Gorenstein but not symmetric";
    if (h == HVector{1, 3, 2, 2} || h == HVector{1, 3, 3, 4})
      e.note = "not graded-admissible: consecutive cancellation in the lex resolution";
    out.push_back(std::move(e));
  };
  const std::size_t quad = binomial(m + 1, 2);
  if (s == 1) push({1, m});
  if (s == 2)
    for (std::size_t tau = 1; tau <= quad; ++tau) push({1, m, tau});
  if (s == 3)
    for (std::size_t n = 1; n <= quad; ++n)
      for (std::size_t tau = 1, top = macaulay_growth(n, 2); tau <= top; ++tau) push({1, m, n, tau});
  return out;
}

}  // namespace apolar

#endif  // APOLAR_HVECTORS_HPP
