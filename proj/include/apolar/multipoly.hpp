#ifndef APOLAR_MULTIPOLY_HPP
#define APOLAR_MULTIPOLY_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apolar/exactlin.hpp"
#include "apolar/rational.hpp"

namespace apolar {

/// Exponent vector x^a = x1^a1 ... xm^am. Variables are 0-based internally
/// and printed as x1..xm.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<unsigned> exps)
      : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

  static Monomial variable(std::size_t num_vars, std::size_t i) {
    Monomial m(num_vars);
    m.exps_.at(i) = 1;
    m.degree_ = 1;
    return m;
  }

  std::size_t num_vars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
  }

  /// this / other; requires other | this.
  Monomial operator/(const Monomial& other) const {
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
    return Monomial(std::move(e));
  }

  /// a! = a1! ... am!
  Rational factorial() const {
    Rational r = 1;
    for (auto e : exps_) r *= apolar::factorial(e);
    return r;
  }

  /// Deg-lex with x1 > x2 > ... > xm: higher degree first, then the first
  /// differing exponent decides.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (std::size_t i = 0; i < a.exps_.size() && i < b.exps_.size(); ++i)
      if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
    return a.exps_.size() <=> b.exps_.size();
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Orders a map so that begin() is the deg-lex largest monomial.
struct DegLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

/// Names used when parsing and printing. Defaults to x1..xm.
class VariableNames {
 public:
  VariableNames() = default;
  explicit VariableNames(std::size_t num_vars) {
    for (std::size_t i = 0; i < num_vars; ++i) names_.push_back("x" + std::to_string(i + 1));
  }
  explicit VariableNames(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw ContractViolation("duplicate variable name '" + names_[i] + "'");
  }

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of `name`, or size() when unknown.
  std::size_t find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return names_.size();
  }

 private:
  std::vector<std::string> names_;
};

/// Sparse polynomial over Q. Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, DegLexGreater>;

  Poly() = default;
  explicit Poly(std::size_t num_vars) : num_vars_(num_vars) {}

  static Poly term(const Monomial& mono, const Rational& c) {
    Poly p(mono.num_vars());
    p.add_term(mono, c);
    return p;
  }
  static Poly constant(std::size_t num_vars, const Rational& c) { return term(Monomial(num_vars), c); }
  static Poly variable(std::size_t num_vars, std::size_t i) {
    return term(Monomial::variable(num_vars, i), 1);
  }

  std::size_t num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& mono, const Rational& c) {
    if (mono.num_vars() != num_vars_) throw ContractViolation("monomial has wrong number of variables");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  unsigned degree() const {
    require_nonzero("degree");
    return terms_.begin()->first.degree();
  }
  const Monomial& leading_monomial() const {
    require_nonzero("leading_monomial");
    return terms_.begin()->first;
  }
  const Rational& leading_coefficient() const {
    require_nonzero("leading_coefficient");
    return terms_.begin()->second;
  }

  bool is_homogeneous() const {
    if (is_zero()) return true;
    const unsigned d = degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
  }

  Poly homogeneous_part(unsigned d) const {
    Poly out(num_vars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  /// Terms of degree <= max_degree.
  Poly truncated(unsigned max_degree) const {
    Poly out(num_vars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() <= max_degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  /// Same polynomial viewed in `new_num_vars` variables, variable i renamed to i + offset.
  Poly embedded(std::size_t new_num_vars, std::size_t offset = 0) const {
    if (offset + num_vars_ > new_num_vars) throw ContractViolation("embedding does not fit");
    Poly out(new_num_vars);
    for (const auto& [m, c] : terms_) {
      std::vector<unsigned> e(new_num_vars, 0);
      std::copy(m.exponents().begin(), m.exponents().end(), e.begin() + offset);
      out.terms_.emplace(Monomial(std::move(e)), c);
    }
    return out;
  }

  Poly& operator+=(const Poly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly out(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  void check_vars(const Poly& o) const {
    if (o.num_vars_ != num_vars_) throw ContractViolation("polynomials in different numbers of variables");
  }

 private:
  void require_nonzero(const char* what) const {
    if (terms_.empty()) throw ContractViolation(std::string(what) + " of the zero polynomial");
  }

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

/// Formal partial derivative with respect to variable i (0-based).
inline Poly derivative(const Poly& p, std::size_t i) {
  if (i >= p.num_vars()) throw ContractViolation("derivative: variable index out of range");
  Poly out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[i];
    if (e == 0) continue;
    std::vector<unsigned> ex = m.exponents();
    ex[i] -= 1;
    out.add_term(Monomial(std::move(ex)), c * e);
  }
  return out;
}

/// x^b ∘ x^a = a!/(a-b)! x^(a-b) when b <= a, else 0.
inline Poly contract(const Monomial& b, const Poly& p) {
  Poly out(p.num_vars());
  for (const auto& [a, c] : p.terms()) {
    if (!b.divides(a)) continue;
    const Monomial q = a / b;
    out.add_term(q, c * a.factorial() / q.factorial());
  }
  return out;
}

/// g ∘ p = g(∂1,...,∂m)(p).
inline Poly contract(const Poly& g, const Poly& p) {
  g.check_vars(p);
  Poly out(p.num_vars());
  for (const auto& [b, gc] : g.terms()) out += contract(b, p) * gc;
  return out;
}

/// <g, p> = (g ∘ p)(0).
inline Rational pairing(const Poly& g, const Poly& p) {
  g.check_vars(p);
  Rational r = 0;
  for (const auto& [b, gc] : g.terms()) {
    const Rational pc = p.coeff(b);
    if (sgn(pc) != 0) r += gc * pc * b.factorial();
  }
  return r;
}

inline Poly leading_form(const Poly& p) { return p.homogeneous_part(p.degree()); }

enum class FrameMode { exact_degree, up_to_degree };

/// Ordered monomial basis. Exact-degree frames list the degree-d monomials in
/// lex order (x1^d first); up-to frames concatenate the exact frames for
/// degrees 0..d, which is the deg-lex basis 1, x1, ..., xm, x1^2, ...
class MonomialFrame {
 public:
  MonomialFrame() = default;

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return monos_.size(); }
  unsigned min_degree() const { return min_deg_; }
  unsigned max_degree() const { return max_deg_; }
  const Monomial& operator[](std::size_t i) const { return monos_[i]; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  auto begin() const { return monos_.begin(); }
  auto end() const { return monos_.end(); }

  /// Position of `m`, or size() when absent.
  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? monos_.size() : it->second;
  }

  FrameMode mode() const { return mode_; }
  bool covers_degree(unsigned d) const { return d >= min_deg_ && d <= max_deg_; }

  friend MonomialFrame frame(std::size_t num_vars, unsigned d, FrameMode mode);

 private:
  std::size_t num_vars_ = 0;
  FrameMode mode_ = FrameMode::exact_degree;
  unsigned min_deg_ = 0, max_deg_ = 0;
  std::vector<Monomial> monos_;
  std::map<Monomial, std::size_t, DegLexGreater> index_;
};

namespace detail {
inline void lex_monomials(std::size_t m, unsigned d, std::size_t i, std::vector<unsigned>& cur,
                          std::vector<Monomial>& out) {
  if (i + 1 == m) {
    cur[i] = d;
    out.emplace_back(cur);
    cur[i] = 0;
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    cur[i] = e;
    lex_monomials(m, d - e, i + 1, cur, out);
  }
  cur[i] = 0;
}
}  // namespace detail

inline MonomialFrame frame(std::size_t num_vars, unsigned d, FrameMode mode = FrameMode::exact_degree) {
  if (num_vars == 0) throw ContractViolation("frame: need at least one variable");
  MonomialFrame f;
  f.num_vars_ = num_vars;
  f.mode_ = mode;
  f.min_deg_ = mode == FrameMode::exact_degree ? d : 0;
  f.max_deg_ = d;
  std::vector<unsigned> cur(num_vars, 0);
  for (unsigned k = f.min_deg_; k <= d; ++k) detail::lex_monomials(num_vars, k, 0, cur, f.monos_);
  for (std::size_t i = 0; i < f.monos_.size(); ++i) f.index_.emplace(f.monos_[i], i);
  return f;
}

namespace detail {
inline RationalVector frame_coords(const Poly& p, const MonomialFrame& fr, bool dual) {
  if (p.num_vars() != fr.num_vars()) throw ContractViolation("frame and polynomial disagree on variables");
  RationalVector v(fr.size());
  for (const auto& [m, c] : p.terms()) {
    if (!fr.covers_degree(m.degree())) {
      if (fr.mode() == FrameMode::up_to_degree)
        throw ContractViolation("term of degree " + std::to_string(m.degree()) + " outside the frame");
      continue;
    }
    const std::size_t k = fr.index_of(m);
    if (k == fr.size()) throw ContractViolation("term outside the frame");
    v[k] = dual ? c * m.factorial() : c;
  }
  return v;
}
}  // namespace detail

/// Coordinates of p in the dual basis {x^a / a!}: entry a is a! times the
/// plain coefficient of x^a. Terms of degrees the frame does not cover are
/// ignored for exact-degree frames and rejected above an up-to frame.
inline RationalVector dual_coeff_vector(const Poly& p, const MonomialFrame& fr) {
  return detail::frame_coords(p, fr, true);
}

/// Plain coefficients over the frame, same coverage rules as dual_coeff_vector.
inline RationalVector plain_coeff_vector(const Poly& p, const MonomialFrame& fr) {
  return detail::frame_coords(p, fr, false);
}

/// Inverse of dual_coeff_vector.
inline Poly from_dual_coords(std::span<const Rational> v, const MonomialFrame& fr) {
  if (v.size() != fr.size()) throw ContractViolation("coordinate vector does not match frame");
  Poly p(fr.num_vars());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) p.add_term(fr[i], v[i] / fr[i].factorial());
  return p;
}

inline Poly from_plain_coords(std::span<const Rational> v, const MonomialFrame& fr) {
  if (v.size() != fr.size()) throw ContractViolation("coordinate vector does not match frame");
  Poly p(fr.num_vars());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) p.add_term(fr[i], v[i]);
  return p;
}

// ---------------------------------------------------------------------------
// Text form

/// Syntax error in a polynomial expression; `column` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg + " at column " + std::to_string(column)), column_(column), message_(msg) {}
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t column_;
  std::string message_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableNames& names) : s_(text), names_(names) {}

  Poly parse() {
    Poly out(names_.size());
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [mono, c] = parse_term();
      out.add_term(mono, c * sign);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_rational();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_ident_start(peek())) fail("expected a variable after '*'");
      }
    }
    std::vector<unsigned> exps(names_.size(), 0);
    bool have_factor = false;
    while (!at_end()) {
      if (is_ident_start(peek())) {
        const std::size_t start = pos_;
        while (!at_end() && is_ident_char(peek())) ++pos_;
        const std::string_view name = s_.substr(start, pos_ - start);
        const std::size_t idx = names_.find(name);
        if (idx == names_.size()) fail_at("unknown variable '" + std::string(name) + "'", start);
        unsigned e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_exponent();
        }
        exps[idx] += e;
        have_factor = true;
        skip_ws();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_ws();
          if (at_end() || !is_ident_start(peek())) fail("expected a variable after '*'");
        }
        continue;
      }
      break;
    }
    if (!have_coeff && !have_factor) fail("expected a term");
    return {Monomial(std::move(exps)), coeff};
  }

  Rational parse_rational() {
    const Integer num = parse_integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      const Integer den = parse_integer();
      if (den == 0) fail_at("zero denominator", at);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  unsigned parse_exponent() {
    const std::size_t start = pos_;
    const Integer e = parse_integer();
    if (e < 1 || e > 10000) fail_at("exponent must be a positive integer", start);
    return static_cast<unsigned>(e.get_ui());
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at + 1); }

  std::string_view s_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `3*x1^2 - 2/3 x1 x2 + 5` style text. Factors may be separated by
/// '*' or whitespace.
inline Poly parse(std::string_view text, const VariableNames& names) {
  return detail::PolyParser(text, names).parse();
}
inline Poly parse(std::string_view text, std::size_t num_vars) { return parse(text, VariableNames(num_vars)); }

inline std::string to_string(const Monomial& m, const VariableNames& names) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Terms in deg-lex descending order; output parses back to the same value.
inline std::string to_string(const Poly& p, const VariableNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (m.degree() == 0) {
      out += a.get_str();
    } else if (a == 1) {
      out += to_string(m, names);
    } else {
      out += a.get_str() + "*" + to_string(m, names);
    }
  }
  return out;
}

inline std::string to_string(const Poly& p) { return to_string(p, VariableNames(p.num_vars())); }

}  // namespace apolar

#endif  // APOLAR_MULTIPOLY_HPP
