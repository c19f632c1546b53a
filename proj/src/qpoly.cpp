#include "qpos/qpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qpos {

QPoly::QPoly(long constant) {
  if (constant != 0) coef_[0] = constant;
}

QPoly::QPoly(const mpz_class& constant) {
  if (constant != 0) coef_[0] = constant;
}

QPoly QPoly::term(int exponent, mpz_class coeff) {
  if (exponent < 0) throw std::invalid_argument("negative q exponent");
  QPoly p;
  if (coeff != 0) p.coef_[exponent] = std::move(coeff);
  return p;
}

int QPoly::degree() const {
  return coef_.empty() ? -1 : coef_.rbegin()->first;
}

mpz_class QPoly::coeff(int exponent) const {
  auto it = coef_.find(exponent);
  return it == coef_.end() ? mpz_class(0) : it->second;
}

void QPoly::add_term(int exponent, const mpz_class& c) {
  if (exponent < 0) throw std::invalid_argument("negative q exponent");
  if (c == 0) return;
  auto [it, fresh] = coef_.emplace(exponent, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coef_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.coef_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.coef_) add_term(e, -c);
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  QPoly out;
  for (const auto& [e1, c1] : coef_) {
    for (const auto& [e2, c2] : o.coef_) out.add_term(e1 + e2, c1 * c2);
  }
  coef_ = std::move(out.coef_);
  return *this;
}

QPoly& QPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coef_.clear();
    return *this;
  }
  for (auto& [e, v] : coef_) v *= c;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out;
  for (const auto& [e, c] : coef_) out.coef_[e] = -c;
  return out;
}

QPoly QPoly::substituted(const QPoly& value) const {
  QPoly out;
  QPoly power(1);  // value^e, built incrementally over ascending exponents
  int at = 0;
  for (const auto& [e, c] : coef_) {
    while (at < e) {
      power *= value;
      ++at;
    }
    out += power * c;
  }
  return out;
}

mpz_class QPoly::evaluated(const mpz_class& q0) const {
  mpz_class out = 0, power = 1;
  int at = 0;
  for (const auto& [e, c] : coef_) {
    for (; at < e; ++at) power *= q0;
    out += c * power;
  }
  return out;
}

std::string QPoly::to_string() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coef_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.get_str();
    if (e >= 1) {
      os << 'q';
      if (e >= 2) os << '^' << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) {
  return os << p.to_string();
}

mpz_class binomial(long m, int k) {
  if (k < 0) return 0;
  mpz_class num = 1, den = 1;
  for (int t = 0; t < k; ++t) {
    num *= mpz_class(m) - t;
    den *= t + 1;
  }
  return num / den;  // exact: product of k consecutive integers over k!
}

}  // namespace qpos
