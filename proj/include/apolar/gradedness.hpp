#ifndef APOLAR_GRADEDNESS_HPP
#define APOLAR_GRADEDNESS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/exactlin.hpp"
#include "apolar/inverse_system.hpp"
#include "apolar/multipoly.hpp"
#include "apolar/rational.hpp"

namespace apolar {

namespace detail {
inline void require_cubic_form(const Poly& f, const char* who) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() != 3)
    throw ContractViolation(std::string(who) + ": expected a nonzero homogeneous cubic");
}
inline void require_quadratic_form(const Poly& q, const char* who) {
  if (!q.is_zero() && (!q.is_homogeneous() || q.degree() != 2))
    throw ContractViolation(std::string(who) + ": expected a homogeneous quadric or zero");
}
}  // namespace detail

/// Delta_1(F): row j holds the dual coordinates of dF/dx_j over the degree-2
/// frame x1^2/2, x1x2, ..., xm^2/2.
inline RationalMatrix delta(const Poly& f) {
  detail::require_cubic_form(f, "delta");
  const std::size_t m = f.num_vars();
  const MonomialFrame quad = frame(m, 2);
  std::vector<RationalVector> rows;
  for (std::size_t j = 0; j < m; ++j) rows.push_back(dual_coeff_vector(derivative(f, j), quad));
  return RationalMatrix::from_rows(rows, quad.size());
}

/// Delta_2(F): row u holds the coordinates of the second partial x^u o F over
/// the linear frame.
inline RationalMatrix delta2(const Poly& f) {
  detail::require_cubic_form(f, "delta2");
  const std::size_t m = f.num_vars();
  const MonomialFrame lin = frame(m, 1);
  std::vector<RationalVector> rows;
  for (const auto& u : frame(m, 2)) rows.push_back(dual_coeff_vector(contract(u, f), lin));
  return RationalMatrix::from_rows(rows, m);
}

inline bool transpose_check(const Poly& f) { return delta(f) == delta2(f).transpose(); }

inline RationalMatrix stacked_delta(const std::vector<Poly>& forms) {
  if (forms.empty()) throw ContractViolation("stacked_delta: no forms");
  RationalMatrix out = delta(forms.front());
  for (std::size_t j = 1; j < forms.size(); ++j) out = out.vstack(delta(forms[j]));
  return out;
}

/// Compressed level of socle degree 3: HF = (1, m, min(tau*m, binom(m+1,2)), tau).
inline bool is_compressed_s3(const InverseSystem& is) {
  if (is.socle_degree() != 3) throw ContractViolation("is_compressed_s3: socle degree is not 3");
  if (!is_level(is).level) throw ContractViolation("is_compressed_s3: inverse system is not level");
  const HVector h = hilbert_function(is);
  const std::size_t m = h[1], tau = h[3];
  return h[2] == std::min(tau * m, binomial(m + 1, 2));
}

/// Coefficients a^h_u of phi(x_h) = x_h + sum_u a^h_u x^u over quadratic u,
/// stored at index h * binom(m+1,2) + (position of u in the lex frame).
struct AutomorphismCoeffs {
  std::size_t m = 0;
  RationalVector values;

  std::size_t quad_size() const { return binomial(m + 1, 2); }
  const Rational& at(std::size_t h, std::size_t u) const { return values.at(h * quad_size() + u); }
  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& q) { return q == 0; });
  }
  static AutomorphismCoeffs zero(std::size_t m) { return {m, RationalVector(m * binomial(m + 1, 2))}; }

  /// The quadric added to x_h.
  Poly tail(std::size_t h) const {
    const MonomialFrame quad = frame(m, 2);
    return from_plain_coords(std::span<const Rational>(values).subspan(h * quad.size(), quad.size()), quad);
  }
};

struct AutomorphismSystem {
  /// Rows indexed by unknowns (h, u), columns by equations (j, w); solve a * T = rhs.
  RationalMatrix matrix;
  RationalVector rhs;
};

/// Linear conditions on a making phi* send F_j to F_j + Q_j. Pairing the
/// degree-3 part of phi(x^w), |w| = 2, with F_j gives sum_h w_h x^(w - e_h) a^h.
inline AutomorphismSystem build_automorphism_system(const std::vector<Poly>& forms, const std::vector<Poly>& quads) {
  if (forms.empty() || forms.size() != quads.size())
    throw ContractViolation("build_automorphism_system: need one quadric per cubic form");
  const std::size_t m = forms.front().num_vars();
  for (const auto& f : forms) {
    detail::require_cubic_form(f, "build_automorphism_system");
    if (f.num_vars() != m) throw ContractViolation("build_automorphism_system: mixed numbers of variables");
  }
  for (const auto& q : quads) detail::require_quadratic_form(q, "build_automorphism_system");
  const MonomialFrame quad = frame(m, 2), cub = frame(m, 3);
  const std::size_t n2 = quad.size(), tau = forms.size();
  AutomorphismSystem sys{RationalMatrix(m * n2, tau * n2), RationalVector(tau * n2)};
  for (std::size_t j = 0; j < tau; ++j) {
    const RationalVector alpha = dual_coeff_vector(forms[j], cub);
    const RationalVector beta = dual_coeff_vector(quads[j], quad);
    for (std::size_t w = 0; w < n2; ++w) {
      sys.rhs[j * n2 + w] = beta[w];
      const Monomial& wm = quad[w];
      for (std::size_t h = 0; h < m; ++h) {
        if (wm[h] == 0) continue;
        const Monomial rest = wm / Monomial::variable(m, h);
        for (std::size_t u = 0; u < n2; ++u)
          sys.matrix(h * n2 + u, j * n2 + w) = Rational(wm[h]) * alpha[cub.index_of(rest * quad[u])];
      }
    }
  }
  return sys;
}

/// M(phi) on the deg-lex basis of P_{<=s}: column k holds phi(e_k) truncated
/// at degree s. It is lower unitriangular because phi only adds higher terms.
inline RationalMatrix automorphism_matrix(const AutomorphismCoeffs& a, unsigned s) {
  const MonomialFrame basis = frame(a.m, s, FrameMode::up_to_degree);
  std::vector<Poly> images;
  for (std::size_t h = 0; h < a.m; ++h) images.push_back((Poly::variable(a.m, h) + a.tail(h)).truncated(s));
  RationalMatrix out(basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Poly img = Poly::constant(a.m, 1);
    for (std::size_t h = 0; h < a.m; ++h)
      for (unsigned e = 0; e < basis[k][h]; ++e) img = (img * images[h]).truncated(s);
    const RationalVector col = plain_coeff_vector(img, basis);
    for (std::size_t l = 0; l < basis.size(); ++l) out(l, k) = col[l];
  }
  return out;
}

namespace detail {
inline void check_automorphism_input(const AutomorphismCoeffs& a, const std::vector<Poly>& polys, unsigned s) {
  if (a.values.size() != a.m * a.quad_size()) throw ContractViolation("automorphism: wrong coefficient count");
  for (const auto& p : polys) {
    if (p.num_vars() != a.m) throw ContractViolation("automorphism: wrong number of variables");
    if (!p.is_zero() && p.degree() > s) throw ContractViolation("automorphism: polynomial above degree s");
  }
}
}  // namespace detail

/// phi* on P_{<=s}: dual coordinates transform as [phi* f] = [f] M(phi).
inline std::vector<Poly> apply_automorphism_dual_forward(const AutomorphismCoeffs& a, const std::vector<Poly>& polys,
                                                         unsigned s) {
  detail::check_automorphism_input(a, polys, s);
  const MonomialFrame basis = frame(a.m, s, FrameMode::up_to_degree);
  const RationalMatrix mphi = automorphism_matrix(a, s);
  std::vector<Poly> out;
  for (const auto& p : polys) out.push_back(from_dual_coords(dual_coeff_vector(p, basis) * mphi, basis));
  return out;
}

/// (phi*)^{-1} on P_{<=s}: solves x M(phi) = [f] by back substitution.
inline std::vector<Poly> apply_automorphism_dual(const AutomorphismCoeffs& a, const std::vector<Poly>& polys,
                                                 unsigned s) {
  detail::check_automorphism_input(a, polys, s);
  const MonomialFrame basis = frame(a.m, s, FrameMode::up_to_degree);
  const RationalMatrix mphi = automorphism_matrix(a, s);
  const std::size_t n = basis.size();
  std::vector<Poly> out;
  for (const auto& p : polys) {
    const RationalVector b = dual_coeff_vector(p, basis);
    RationalVector x(n);
    for (std::size_t k = n; k-- > 0;) {
      Rational acc = b[k];
      for (std::size_t l = k + 1; l < n; ++l)
        if (x[l] != 0 && mphi(l, k) != 0) acc -= x[l] * mphi(l, k);
      x[k] = acc;
    }
    out.push_back(from_dual_coords(x, basis));
  }
  return out;
}

enum class GradedVerdict { graded, not_graded, unknown };

inline std::string to_string(GradedVerdict v) {
  switch (v) {
    case GradedVerdict::graded: return "graded";
    case GradedVerdict::not_graded: return "not_graded";
    case GradedVerdict::unknown: return "unknown";
  }
  return "?";
}

struct GradedCertificate {
  AutomorphismCoeffs coeffs;
  std::size_t system_rank = 0;
  bool verified = false;
  std::string method = "direct-system";
};

/// Hilbert functions of A and of Q(0) when they differ.
struct NotGradedWitness {
  HVector hvector;
  HVector q0_hvector;
};

struct GradednessResult {
  GradedVerdict verdict = GradedVerdict::unknown;
  std::optional<GradedCertificate> certificate;
  std::optional<NotGradedWitness> witness;
  std::string reason;
};

/// Drops the terms of degree <= 1 from each generator.
inline std::vector<Poly> strip_low_terms(const std::vector<Poly>& gens) {
  std::vector<Poly> out;
  for (const auto& g : gens) {
    Poly r(g.num_vars());
    for (const auto& [mono, c] : g.terms())
      if (mono.degree() >= 2) r.add_term(mono, c);
    out.push_back(std::move(r));
  }
  return out;
}

/// Gradedness of a level algebra of socle degree 3: an HF mismatch with Q(0)
/// proves it is not graded; otherwise look for phi(x_h) = x_h + quadric with
/// phi* <F> = <f> and verify the result exactly.
inline GradednessResult certify_graded_s3(const InverseSystem& input) {
  if (input.socle_degree() != 3) throw ContractViolation("certify_graded_s3: socle degree is not 3");
  if (!is_level(input).level) throw ContractViolation("certify_graded_s3: inverse system is not level");
  const InverseSystem is = is_level_presentation(input) ? input : level_presentation(input);
  const std::size_t m = is.num_vars();
  const InverseSystem graded = q0(is);
  GradednessResult res;

  const HVector h = hilbert_function(is), hq = hilbert_function(graded);
  if (h != hq) {
    res.verdict = GradedVerdict::not_graded;
    res.witness = NotGradedWitness{h, hq};
    res.reason = "Hilbert function differs from that of Q(0)";
    return res;
  }

  const std::vector<Poly> stripped = strip_low_terms(is.generators());
  const InverseSystem st = build(stripped, m);
  if (!module_equal(st, is)) {
    res.reason = "terms of degree <= 1 are not in the closure";
    return res;
  }
  if (module_equal(st, graded)) {
    res.verdict = GradedVerdict::graded;
    res.certificate = GradedCertificate{AutomorphismCoeffs::zero(m), 0, true};
    res.reason = "generates the same module as its leading forms";
    return res;
  }

  std::vector<Poly> forms, quads;
  for (const auto& g : stripped) {
    forms.push_back(g.homogeneous_part(3));
    quads.push_back(g.homogeneous_part(2));
  }
  const AutomorphismSystem sys = build_automorphism_system(forms, quads);
  const auto sol = solve_left(sys.matrix, sys.rhs);
  if (!sol) {
    res.reason = "automorphism system is incompatible";
    return res;
  }
  GradedCertificate cert{{m, *sol}, rank(sys.matrix), false};
  const InverseSystem back = build(apply_automorphism_dual(cert.coeffs, stripped, 3), m);
  cert.verified = module_equal(back, graded);
  if (!cert.verified) {
    res.reason = "transformed generators do not match the leading forms";
    return res;
  }
  res.verdict = GradedVerdict::graded;
  res.certificate = std::move(cert);
  res.reason = "automorphism found and verified";
  return res;
}

enum class GradedStatus { graded, not_graded, unknown, not_applicable };

inline std::string to_string(GradedStatus v) {
  switch (v) {
    case GradedStatus::graded: return "graded";
    case GradedStatus::not_graded: return "not_graded";
    case GradedStatus::unknown: return "unknown";
    case GradedStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

struct GradedAssessment {
  GradedStatus status = GradedStatus::not_applicable;
  GradednessResult detail;
};

/// Limits on the automorphism search, measured in unknowns times equations.
struct AssessOptions {
  std::size_t max_system_entries = 400000;
};

/// Gradedness for any inverse system: non-level systems are out of scope;
/// socle degree 3 goes through the certifier; otherwise only the Hilbert
/// function test and the direct comparison with the leading forms are used.
inline GradedAssessment assess_gradedness(const InverseSystem& is, const AssessOptions& opt = {}) {
  GradedAssessment out;
  if (!is_level(is).level) {
    out.detail.reason = "not level";
    return out;
  }
  const std::size_t m = is.num_vars(), n2 = binomial(m + 1, 2);
  const std::size_t tau = is_level(is).type;
  auto from_verdict = [](GradedVerdict v) {
    return v == GradedVerdict::graded ? GradedStatus::graded
           : v == GradedVerdict::not_graded ? GradedStatus::not_graded
                                            : GradedStatus::unknown;
  };
  if (is.socle_degree() == 3 && m * n2 * tau * n2 <= opt.max_system_entries) {
    out.detail = certify_graded_s3(is);
    out.status = from_verdict(out.detail.verdict);
    return out;
  }
  const InverseSystem lp = is_level_presentation(is) ? is : level_presentation(is);
  const InverseSystem graded = q0(lp);
  const HVector h = hilbert_function(lp), hq = hilbert_function(graded);
  if (h != hq) {
    out.status = GradedStatus::not_graded;
    out.detail.verdict = GradedVerdict::not_graded;
    out.detail.witness = NotGradedWitness{h, hq};
    out.detail.reason = "Hilbert function differs from that of Q(0)";
  } else if (module_equal(lp, graded)) {
    out.status = GradedStatus::graded;
    out.detail.verdict = GradedVerdict::graded;
    out.detail.reason = "generates the same module as its leading forms";
  } else {
    out.status = GradedStatus::unknown;
    out.detail.reason = is.socle_degree() == 3 ? "automorphism system too large" : "no certificate for this socle degree";
  }
  return out;
}

}  // namespace apolar

#endif  // APOLAR_GRADEDNESS_HPP
