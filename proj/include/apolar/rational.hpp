#ifndef APOLAR_RATIONAL_HPP
#define APOLAR_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// A caller broke an operation's precondition (shape mismatch, wrong degree,
/// zero polynomial where a degree is required, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the range this library characterizes (e.g. socle degree >= 4).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Printed as `N` or `N/D`, never as a decimal.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return static_cast<std::size_t>(r.get_ui());
}

}  // namespace apolar

#endif  // APOLAR_RATIONAL_HPP
