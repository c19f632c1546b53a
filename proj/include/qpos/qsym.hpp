#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "qpos/composition.hpp"
#include "qpos/qpoly.hpp"

namespace qpos {

// Element of QSym tensored with Z[q], held in the monomial basis: a finite
// map from compositions to nonzero coefficient polynomials. Equality is exact
// term-wise equality. The product is the quasi-shuffle.
class QSym {
 public:
  QSym() = default;  // zero
  static QSym unit() { return monomial(Composition{}); }
  static QSym monomial(const Composition& alpha, QPoly c = QPoly(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Composition, QPoly>& terms() const { return terms_; }
  QPoly coefficient(const Composition& alpha) const;
  std::set<int> weights() const;  // grading accessor
  void add_term(const Composition& alpha, const QPoly& c);

  QSym& operator+=(const QSym& o);
  QSym& operator-=(const QSym& o);
  friend QSym operator+(QSym a, const QSym& b) { return a += b; }
  friend QSym operator-(QSym a, const QSym& b) { return a -= b; }
  QSym operator-() const;
  QSym operator*(const QSym& o) const;  // quasi-shuffle
  QSym& operator*=(const QSym& o) { return *this = *this * o; }
  QSym& operator*=(const QPoly& c);
  friend QSym operator*(QSym a, const QPoly& c) { return a *= c; }
  bool operator==(const QSym& o) const { return terms_ == o.terms_; }

  std::string to_string(const std::string& basis_symbol = "M") const;

 private:
  std::map<Composition, QPoly> terms_;
};

std::ostream& operator<<(std::ostream& os, const QSym& f);

QSym quasi_shuffle(const QSym& f, const QSym& g);
QSym quasi_shuffle_power(const QSym& f, int k);  // k >= 0
QSym concat_product(const QSym& f, const QSym& g);
QSym append(const QSym& f, int part);  // M_alpha -> M_(alpha,part)

// Element of QSym tensor QSym over Z[q], monomial basis on both legs.
class QSymTensor {
 public:
  QSymTensor() = default;
  void add_term(const Composition& left, const Composition& right, const QPoly& c);
  const std::map<std::pair<Composition, Composition>, QPoly>& terms() const { return terms_; }
  QSymTensor& operator+=(const QSymTensor& o);
  bool operator==(const QSymTensor& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

 private:
  std::map<std::pair<Composition, Composition>, QPoly> terms_;
};

std::ostream& operator<<(std::ostream& os, const QSymTensor& t);

QSymTensor tensor(const QSym& f, const QSym& g);
QSymTensor coproduct(const QSym& f);  // deconcatenation
QSym counit_apply(const QSymTensor& t);  // (counit x id), for axiom checks
QSym antipode_convolution(const QSym& f);  // m(S x id)Delta(f)

QSym antipode(const QSym& f);

QSym fundamental(const Composition& alpha);            // L_alpha in the M basis
std::map<Composition, QPoly> to_fundamental(const QSym& f);  // f = sum c_beta L_beta

QPoly principal_specialization(const QSym& f, long m);

QSym substitute_q(const QSym& f, const QPoly& value);
QSym reverse_map(const QSym& f);

}  // namespace qpos
