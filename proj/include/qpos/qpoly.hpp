#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>

namespace qpos {

// Polynomial in one variable q with arbitrary-precision integer coefficients.
// Sparse map exponent -> coefficient; zero coefficients are never stored, so
// equality is structural.
class QPoly {
 public:
  QPoly() = default;  // zero
  QPoly(long constant);
  QPoly(const mpz_class& constant);
  static QPoly term(int exponent, mpz_class coeff = 1);
  static QPoly q() { return term(1); }

  bool is_zero() const { return coef_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  mpz_class coeff(int exponent) const;
  const std::map<int, mpz_class>& terms() const { return coef_; }

  void add_term(int exponent, const mpz_class& c);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const mpz_class& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const mpz_class& c) { return a *= c; }
  QPoly operator-() const;
  bool operator==(const QPoly& o) const = default;

  // q := value, e.g. value = -q or a constant.
  QPoly substituted(const QPoly& value) const;
  mpz_class evaluated(const mpz_class& q0) const;

  // Ascending powers: "1 + 4q + 4q^2 + q^3"; zero prints "0".
  std::string to_string() const;

 private:
  std::map<int, mpz_class> coef_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

// Binomial coefficient with integer (possibly negative) top argument:
// m*(m-1)*...*(m-k+1)/k!, zero for k < 0.
mpz_class binomial(long m, int k);

}  // namespace qpos
