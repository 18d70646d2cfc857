#ifndef APOLAR_INVERSE_SYSTEM_HPP
#define APOLAR_INVERSE_SYSTEM_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/exactlin.hpp"
#include "apolar/multipoly.hpp"
#include "apolar/rational.hpp"

namespace apolar {

/// Span of polynomials kept in reduced echelon form with respect to deg-lex:
/// every basis element is monic in its leading monomial and no other basis
/// element mentions that monomial. The basis is therefore canonical.
class PolySpan {
 public:
  PolySpan() = default;
  explicit PolySpan(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  std::size_t dim() const { return rows_.size(); }

  /// Basis keyed by leading monomial, largest first.
  const std::map<Monomial, Poly, DegLexGreater>& basis() const { return rows_; }

  /// p minus its projection on the span; zero iff p lies in the span.
  Poly reduce(const Poly& p) const {
    check(p);
    Poly r = p;
    for (const auto& [lead, row] : rows_) {
      const Rational c = p.coeff(lead);
      if (sgn(c) != 0) r -= row * c;
    }
    return r;
  }

  bool contains(const Poly& p) const { return reduce(p).is_zero(); }

  /// Adds p to the span; returns false when p was already in it.
  bool insert(const Poly& p) {
    Poly r = reduce(p);
    if (r.is_zero()) return false;
    r *= 1 / r.leading_coefficient();
    const Monomial lead = r.leading_monomial();
    for (auto& [l, row] : rows_) {
      const Rational c = row.coeff(lead);
      if (sgn(c) != 0) row -= r * c;
    }
    rows_.emplace(lead, std::move(r));
    return true;
  }

  /// Coordinates of p (assumed in the span) along basis(), in basis order.
  RationalVector coordinates(const Poly& p) const {
    RationalVector v;
    v.reserve(rows_.size());
    for (const auto& [lead, row] : rows_) v.push_back(p.coeff(lead));
    return v;
  }

  std::vector<Poly> elements() const {
    std::vector<Poly> out;
    for (const auto& [l, row] : rows_) out.push_back(row);
    return out;
  }

  friend bool operator==(const PolySpan& a, const PolySpan& b) {
    return a.num_vars_ == b.num_vars_ && a.rows_ == b.rows_;
  }

 private:
  void check(const Poly& p) const {
    if (p.num_vars() != num_vars_) throw ContractViolation("polynomial has wrong number of variables");
  }

  std::size_t num_vars_ = 0;
  std::map<Monomial, Poly, DegLexGreater> rows_;
};

/// Finite sequence (h0, ..., hs) with h0 = 1 and hs >= 1.
class HVector {
 public:
  HVector() = default;
  HVector(std::initializer_list<std::size_t> v) : HVector(std::vector<std::size_t>(v)) {}
  explicit HVector(std::vector<std::size_t> v) : h_(std::move(v)) {
    if (h_.empty() || h_.front() != 1) throw ContractViolation("h-vector must start with 1");
    if (h_.back() == 0) throw ContractViolation("h-vector must end with a positive entry");
  }

  std::size_t socle_degree() const { return h_.size() - 1; }
  std::size_t size() const { return h_.size(); }
  std::size_t operator[](std::size_t i) const { return i < h_.size() ? h_[i] : 0; }
  const std::vector<std::size_t>& entries() const { return h_; }
  std::size_t length() const {
    std::size_t s = 0;
    for (auto x : h_) s += x;
    return s;
  }

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  std::vector<std::size_t> h_;
};

inline std::string to_string(const HVector& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s + ")";
}

/// Generators f1..ft together with their derivative closure <f>_R, the
/// k-span of all partial derivatives of every order.
class InverseSystem {
 public:
  InverseSystem() = default;

  std::size_t num_vars() const { return m_; }
  const std::vector<Poly>& generators() const { return gens_; }
  unsigned socle_degree() const { return s_; }
  const PolySpan& closure() const { return closure_; }
  std::size_t length() const { return closure_.dim(); }

  /// Derivative layers processed before the closure stopped growing.
  std::size_t stabilization_rounds() const { return rounds_; }

  /// V^(d): leading forms of closure elements of degree d, over the
  /// degree-d frame in plain coefficients.
  const Subspace& slice(unsigned d) const { return slices_.at(d); }
  const std::vector<Subspace>& slices() const { return slices_; }

  friend InverseSystem build(const std::vector<Poly>& generators, std::size_t num_vars);

 private:
  std::size_t m_ = 0;
  std::vector<Poly> gens_;
  unsigned s_ = 0;
  PolySpan closure_;
  std::size_t rounds_ = 0;
  std::vector<Subspace> slices_;
};

/// Computes the derivative closure by differentiating newly independent
/// elements layer by layer until nothing new appears.
inline InverseSystem build(const std::vector<Poly>& generators, std::size_t num_vars) {
  if (generators.empty()) throw ContractViolation("inverse system needs at least one generator");
  InverseSystem is;
  is.m_ = num_vars;
  is.closure_ = PolySpan(num_vars);
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars) throw ContractViolation("generator has wrong number of variables");
    if (g.is_zero()) throw ContractViolation("generators must be nonzero");
    is.s_ = std::max(is.s_, g.degree());
  }
  is.gens_ = generators;

  std::vector<Poly> layer = generators;
  while (!layer.empty()) {
    std::vector<Poly> next;
    bool grew = false;
    for (const auto& p : layer) {
      if (!is.closure_.insert(p)) continue;
      grew = true;
      for (std::size_t i = 0; i < num_vars; ++i) {
        Poly d = derivative(p, i);
        if (!d.is_zero()) next.push_back(std::move(d));
      }
    }
    if (grew) ++is.rounds_;
    layer = std::move(next);
  }

  std::vector<std::vector<RationalVector>> rows(is.s_ + 1);
  std::vector<MonomialFrame> frames;
  for (unsigned d = 0; d <= is.s_; ++d) frames.push_back(frame(num_vars, d));
  for (const auto& [lead, row] : is.closure_.basis()) {
    const unsigned d = lead.degree();
    rows[d].push_back(plain_coeff_vector(row.homogeneous_part(d), frames[d]));
  }
  for (unsigned d = 0; d <= is.s_; ++d) is.slices_.push_back(Subspace::span(rows[d], frames[d].size()));
  return is;
}

/// HF(i) = dim V^(i) for i = 0..s.
inline HVector hilbert_function(const InverseSystem& is) {
  std::vector<std::size_t> h(is.socle_degree() + 1, 0);
  for (const auto& [lead, row] : is.closure().basis()) ++h[lead.degree()];
  return HVector(std::move(h));
}

/// dim V - dim(∂1 V + ... + ∂m V), the dimension of the socle of the dual algebra.
inline std::size_t socle_dimension(const InverseSystem& is) {
  PolySpan derived(is.num_vars());
  for (const auto& [lead, row] : is.closure().basis())
    for (std::size_t i = 0; i < is.num_vars(); ++i) {
      Poly d = derivative(row, i);
      if (!d.is_zero()) derived.insert(d);
    }
  return is.length() - derived.dim();
}

namespace detail {
inline bool leading_forms_independent(const std::vector<Poly>& gens) {
  PolySpan span(gens.front().num_vars());
  for (const auto& g : gens)
    if (!span.insert(leading_form(g))) return false;
  return true;
}
}  // namespace detail

/// Level test read off the generators: every generator has degree s and the
/// leading forms are independent. Only meaningful when the generating set is
/// minimal (as many generators as the socle dimension); nullopt otherwise.
inline std::optional<bool> structural_level_check(const InverseSystem& is) {
  if (is.generators().size() != socle_dimension(is)) return std::nullopt;
  const unsigned s = is.socle_degree();
  const auto& gens = is.generators();
  const bool top = std::all_of(gens.begin(), gens.end(), [s](const Poly& g) { return g.degree() == s; });
  return top && detail::leading_forms_independent(gens);
}

struct LevelInfo {
  bool level = false;
  /// Cohen-Macaulay type: dimension of the socle.
  std::size_t type = 0;
};

/// Level iff the whole socle sits in degree s, i.e. socle dimension == HF(s).
inline LevelInfo is_level(const InverseSystem& is) {
  const std::size_t soc = socle_dimension(is);
  const bool level = soc == hilbert_function(is)[is.socle_degree()];
  if (auto structural = structural_level_check(is); structural && *structural != level)
    throw std::logic_error("level test disagrees with the structural generator test");
  return {level, soc};
}

/// Ann_R(<f>) computed degree by degree without the derivative closure.
struct ApolarIdeal {
  unsigned socle_degree = 0;
  /// per_degree[d] spans Ann ∩ P_{<=d}, d = 0..s+1.
  std::vector<std::vector<Poly>> per_degree;
  /// Minimal generators, ordered by degree then deg-lex leading monomial.
  std::vector<Poly> minimal_generators;
  /// dim P_{<=s} - dim(Ann ∩ P_{<=s}) = length of R/Ann.
  std::size_t colength = 0;
};

namespace detail {

/// Coordinates over `fr` reversed so that column 0 is the deg-lex largest
/// monomial; rref pivots are then leading monomials.
inline RationalVector reversed_coords(const Poly& p, const MonomialFrame& fr) {
  auto v = plain_coeff_vector(p, fr);
  std::reverse(v.begin(), v.end());
  return v;
}

inline Poly from_reversed_coords(RationalVector v, const MonomialFrame& fr) {
  std::reverse(v.begin(), v.end());
  return from_plain_coords(v, fr);
}

}  // namespace detail

/// Kernel of g ↦ (g∘f1, ..., g∘ft) on P_{<=d} for each d <= s+1, plus a
/// minimal generating set extracted modulo m·Ann in ascending degree.
inline ApolarIdeal apolar_ideal_upto(const InverseSystem& is) {
  const std::size_t m = is.num_vars();
  const unsigned s = is.socle_degree();
  const auto& gens = is.generators();
  const MonomialFrame big = frame(m, s + 1, FrameMode::up_to_degree);
  const MonomialFrame target = frame(m, s, FrameMode::up_to_degree);

  // Row k: coefficients of x^k ∘ (f1, ..., ft) over P_{<=s}.
  std::vector<RationalVector> images;
  images.reserve(big.size());
  for (const auto& mono : big) {
    RationalVector row;
    row.reserve(gens.size() * target.size());
    for (const auto& f : gens) {
      auto v = plain_coeff_vector(contract(mono, f), target);
      row.insert(row.end(), v.begin(), v.end());
    }
    images.push_back(std::move(row));
  }

  ApolarIdeal out;
  out.socle_degree = s;
  Subspace full_kernel;
  for (unsigned d = 0; d <= s + 1; ++d) {
    std::size_t n = binomial(m + d, d);
    std::vector<RationalVector> sub(images.begin(), images.begin() + n);
    const Subspace ker = kernel_basis(RationalMatrix::from_rows(sub, gens.size() * target.size()).transpose());
    std::vector<Poly> basis;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      RationalVector coords(big.size());
      std::copy(ker.basis().row(i).begin(), ker.basis().row(i).end(), coords.begin());
      basis.push_back(from_plain_coords(coords, big));
    }
    if (d == s) out.colength = n - ker.dim();
    out.per_degree.push_back(std::move(basis));
  }

  // Work in R / m^{s+2} ≅ P_{<=s+1}; m·Ann is spanned by x_i·g truncated.
  const auto& ann = out.per_degree.back();
  std::vector<RationalVector> products;
  for (const auto& g : ann)
    for (std::size_t i = 0; i < m; ++i)
      products.push_back(detail::reversed_coords((Poly::variable(m, i) * g).truncated(s + 1), big));
  Subspace reached = Subspace::span(products, big.size());

  for (unsigned d = 0; d <= s + 1; ++d) {
    std::vector<RationalVector> layer;
    for (const auto& g : out.per_degree[d]) layer.push_back(detail::reversed_coords(g, big));
    const Subspace layer_span = Subspace::span(layer, big.size());
    for (std::size_t i = 0; i < layer_span.dim(); ++i) {
      auto r = reached.reduce(layer_span.basis().row(i));
      if (std::all_of(r.begin(), r.end(), [](const Rational& q) { return sgn(q) == 0; })) continue;
      Poly g = detail::from_reversed_coords(r, big);
      g *= 1 / g.leading_coefficient();
      reached = subspace_sum(reached, Subspace::span({detail::reversed_coords(g, big)}, big.size()));
      out.minimal_generators.push_back(std::move(g));
    }
  }
  std::stable_sort(out.minimal_generators.begin(), out.minimal_generators.end(),
                   [](const Poly& a, const Poly& b) {
                     if (a.degree() != b.degree()) return a.degree() < b.degree();
                     return a.leading_monomial() > b.leading_monomial();
                   });
  return out;
}

/// A = R/Ann realized on the dual of the closure: X_i is the transpose of the
/// matrix of ∂_i on the closure basis.
struct AlgebraModel {
  std::size_t dim = 0;
  std::vector<RationalMatrix> mult_ops;
};

inline AlgebraModel algebra_model(const InverseSystem& is) {
  const auto& span = is.closure();
  const std::size_t e = span.dim();
  AlgebraModel model;
  model.dim = e;
  for (std::size_t i = 0; i < is.num_vars(); ++i) {
    RationalMatrix x(e, e);
    std::size_t k = 0;
    for (const auto& [lead, row] : span.basis()) {
      // column k of D_i = coordinates of ∂_i v_k; X_i = D_i^t, so row k of X_i.
      auto coords = span.coordinates(derivative(row, i));
      for (std::size_t l = 0; l < e; ++l) x(k, l) = coords[l];
      ++k;
    }
    model.mult_ops.push_back(std::move(x));
  }
  return model;
}

/// dim C(a)_i and dim Q(a)_i for 0 <= a, i <= s.
struct QDecomposition {
  unsigned socle_degree = 0;
  std::vector<std::vector<std::size_t>> c;
  std::vector<std::vector<std::size_t>> q;
};

namespace detail {

/// m^k A for k = 0..n: m^k = Σ_i X_i(m^{k-1}).
inline std::vector<Subspace> maximal_ideal_powers(const AlgebraModel& a, unsigned n) {
  std::vector<Subspace> powers{Subspace::full(a.dim)};
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<RationalVector> imgs;
    const auto& prev = powers.back();
    for (const auto& x : a.mult_ops)
      for (std::size_t r = 0; r < prev.dim(); ++r) imgs.push_back(apolar::apply(x, prev.basis().row(r)));
    powers.push_back(Subspace::span(imgs, a.dim));
  }
  return powers;
}

/// (0 : m^k) for k = 0..n: a ∈ (0:m^k) iff X_i a ∈ (0:m^{k-1}) for all i.
inline std::vector<Subspace> socle_filtration(const AlgebraModel& a, unsigned n) {
  std::vector<Subspace> ann{Subspace::zero(a.dim)};
  for (unsigned k = 1; k <= n; ++k) {
    const auto& prev = ann.back();
    // Rows of `test` cut out prev: y ∈ prev iff test·y = 0.
    RationalMatrix test = prev.dim() == 0 ? RationalMatrix::identity(a.dim) : kernel_basis(prev.basis()).basis();
    RationalMatrix stacked(0, a.dim);
    for (const auto& x : a.mult_ops) stacked = stacked.vstack(test * x);
    ann.push_back(kernel_basis(stacked));
  }
  return ann;
}

}  // namespace detail

/// C(a)_i = ((0:m^{s+1-a-i}) ∩ m^i) / ((0:m^{s+1-a-i}) ∩ m^{i+1}), Q(a) = C(a)/C(a+1).
inline QDecomposition q_decomposition(const AlgebraModel& model, unsigned s) {
  const auto powers = detail::maximal_ideal_powers(model, s + 1);
  const auto loewy = detail::socle_filtration(model, s + 1);
  QDecomposition qd;
  qd.socle_degree = s;
  qd.c.assign(s + 2, std::vector<std::size_t>(s + 1, 0));
  for (unsigned a = 0; a <= s; ++a)
    for (unsigned i = 0; i <= s; ++i) {
      const int k = static_cast<int>(s) + 1 - static_cast<int>(a) - static_cast<int>(i);
      if (k <= 0) continue;
      const Subspace& ann = loewy[static_cast<std::size_t>(k)];
      const std::size_t top = subspace_intersect(ann, powers[i]).dim();
      const std::size_t below = subspace_intersect(ann, powers[i + 1]).dim();
      qd.c[a][i] = top - below;
    }
  qd.q.assign(s + 1, std::vector<std::size_t>(s + 1, 0));
  for (unsigned a = 0; a <= s; ++a)
    for (unsigned i = 0; i <= s; ++i) qd.q[a][i] = qd.c[a][i] - qd.c[a + 1][i];
  qd.c.pop_back();
  return qd;
}

inline QDecomposition q_decomposition(const InverseSystem& is) {
  return q_decomposition(algebra_model(is), is.socle_degree());
}

/// Level systems are generated by the closure elements of top degree; this
/// returns the system regenerated by those reduced basis elements.
inline InverseSystem level_presentation(const InverseSystem& is) {
  if (!is_level(is).level) throw ContractViolation("level_presentation: inverse system is not level");
  std::vector<Poly> top;
  for (const auto& e : is.closure().elements())
    if (e.degree() == is.socle_degree()) top.push_back(e);
  return build(top, is.num_vars());
}

/// True when every generator has degree s and the leading forms are independent.
inline bool is_level_presentation(const InverseSystem& is) {
  for (const auto& g : is.generators())
    if (g.degree() != is.socle_degree()) return false;
  return detail::leading_forms_independent(is.generators());
}

/// Inverse system of the leading forms, whose algebra is Q(0). Requires the
/// level presentation: all generators of degree s with independent leading forms.
inline InverseSystem q0(const InverseSystem& is) {
  const unsigned s = is.socle_degree();
  std::vector<Poly> forms;
  for (const auto& g : is.generators()) {
    if (g.degree() != s) throw ContractViolation("q0: generator of degree below the socle degree");
    forms.push_back(leading_form(g));
  }
  if (!detail::leading_forms_independent(is.generators()))
    throw ContractViolation("q0: leading forms are linearly dependent");
  return build(forms, is.num_vars());
}

/// True iff the associated graded ring is level, i.e. HF(A) = HF(Q(0)).
inline bool g_is_level(const InverseSystem& is) {
  if (!is_level(is).level) throw ContractViolation("g_is_level: inverse system is not level");
  const bool equal = hilbert_function(is) == hilbert_function(q0(is));
  if (is.socle_degree() == 3) {
    const auto qd = q_decomposition(is);
    if ((qd.q[1][1] == 0) != equal) throw std::logic_error("C(1)_1 disagrees with the Hilbert function test");
  }
  return equal;
}

/// Equality of the R-submodules of P generated by the two systems.
inline bool module_equal(const InverseSystem& a, const InverseSystem& b) {
  if (a.num_vars() != b.num_vars()) throw ContractViolation("module_equal: different numbers of variables");
  return a.closure() == b.closure();
}

/// Inverse system generated by all first partials of the generators.
inline InverseSystem truncation(const InverseSystem& is) {
  std::vector<Poly> parts;
  for (const auto& g : is.generators())
    for (std::size_t i = 0; i < is.num_vars(); ++i) {
      Poly d = derivative(g, i);
      if (!d.is_zero()) parts.push_back(std::move(d));
    }
  if (parts.empty()) throw ContractViolation("truncation: all generators are constant");
  return build(parts, is.num_vars());
}

}  // namespace apolar

#endif  // APOLAR_INVERSE_SYSTEM_HPP
