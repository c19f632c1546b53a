#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qpos/qpoly.hpp"
#include "qpos/qsym.hpp"

namespace qpos {

// Exact polynomial expansion in the first m variables x_1..x_m with Z[q]
// coefficients; keys are exponent vectors of length m.
class TruncatedExpansion {
 public:
  explicit TruncatedExpansion(int m);

  int variables() const { return m_; }
  const std::map<std::vector<int>, QPoly>& monomials() const { return monomials_; }
  QPoly coefficient(const std::vector<int>& exponents) const;
  void add_monomial(const std::vector<int>& exponents, const QPoly& c);

  TruncatedExpansion& operator+=(const TruncatedExpansion& o);
  friend TruncatedExpansion operator+(TruncatedExpansion a, const TruncatedExpansion& b) {
    return a += b;
  }
  TruncatedExpansion operator*(const TruncatedExpansion& o) const;
  bool operator==(const TruncatedExpansion& o) const {
    return m_ == o.m_ && monomials_ == o.monomials_;
  }

  std::string to_string() const;  // "q*x1^2 + x1*x2 + ..."

 private:
  int m_ = 0;
  std::map<std::vector<int>, QPoly> monomials_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedExpansion& e);

// Expand each M_alpha over ordered variable choices 1 <= i_1 < ... < i_k <= m.
TruncatedExpansion truncate(const QSym& f, int m);

}  // namespace qpos
