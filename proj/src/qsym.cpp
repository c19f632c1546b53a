#include "qpos/qsym.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qpos {

QSym QSym::monomial(const Composition& alpha, QPoly c) {
  QSym f;
  f.add_term(alpha, c);
  return f;
}

QPoly QSym::coefficient(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? QPoly() : it->second;
}

std::set<int> QSym::weights() const {
  std::set<int> out;
  for (const auto& [alpha, c] : terms_) out.insert(alpha.weight());
  return out;
}

void QSym::add_term(const Composition& alpha, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(alpha, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QSym& QSym::operator+=(const QSym& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

QSym& QSym::operator-=(const QSym& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

QSym QSym::operator-() const {
  QSym out;
  for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, -c);
  return out;
}

namespace {

// All overlapping shuffles of a and b: interleave parts in order, optionally
// merging one part of a with one part of b by addition.
void shuffle_walk(const std::vector<int>& a, size_t ia, const std::vector<int>& b, size_t ib,
                  std::vector<int>& acc, const QPoly& c, QSym& out) {
  if (ia == a.size() && ib == b.size()) {
    out.add_term(Composition(acc), c);
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    shuffle_walk(a, ia + 1, b, ib, acc, c, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    acc.push_back(b[ib]);
    shuffle_walk(a, ia, b, ib + 1, acc, c, out);
    acc.pop_back();
  }
  if (ia < a.size() && ib < b.size()) {
    acc.push_back(a[ia] + b[ib]);
    shuffle_walk(a, ia + 1, b, ib + 1, acc, c, out);
    acc.pop_back();
  }
}

}  // namespace

QSym QSym::operator*(const QSym& o) const {
  QSym out;
  std::vector<int> acc;
  for (const auto& [alpha, ca] : terms_) {
    for (const auto& [beta, cb] : o.terms_) {
      shuffle_walk(alpha.parts(), 0, beta.parts(), 0, acc, ca * cb, out);
    }
  }
  return out;
}

QSym& QSym::operator*=(const QPoly& c) {
  if (c.is_zero()) {
    *this = QSym();
    return *this;
  }
  for (auto& [alpha, v] : terms_) v *= c;
  return *this;
}

QSym quasi_shuffle(const QSym& f, const QSym& g) { return f * g; }

QSym quasi_shuffle_power(const QSym& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  QSym out = QSym::unit();
  for (int t = 0; t < k; ++t) out = out * f;
  return out;
}

QSym concat_product(const QSym& f, const QSym& g) {
  QSym out;
  for (const auto& [alpha, ca] : f.terms()) {
    for (const auto& [beta, cb] : g.terms()) {
      out.add_term(alpha.concat(beta), ca * cb);
    }
  }
  return out;
}

QSym append(const QSym& f, int part) {
  if (part < 1) throw std::invalid_argument("appended part must be positive");
  return concat_product(f, QSym::monomial(Composition{part}));
}

void QSymTensor::add_term(const Composition& left, const Composition& right, const QPoly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(left, right);
  auto [it, fresh] = terms_.emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QSymTensor& QSymTensor::operator+=(const QSymTensor& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

std::string QSymTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*M" << key.first.to_string() << "(x)M" << key.second.to_string();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSymTensor& t) {
  return os << t.to_string();
}

QSymTensor tensor(const QSym& f, const QSym& g) {
  QSymTensor out;
  for (const auto& [alpha, ca] : f.terms()) {
    for (const auto& [beta, cb] : g.terms()) {
      out.add_term(alpha, beta, ca * cb);
    }
  }
  return out;
}

QSymTensor coproduct(const QSym& f) {
  QSymTensor out;
  for (const auto& [alpha, c] : f.terms()) {
    for (int i = 0; i <= alpha.length(); ++i) {
      out.add_term(alpha.take(i), alpha.drop(i), c);
    }
  }
  return out;
}

QSym counit_apply(const QSymTensor& t) {
  QSym out;
  for (const auto& [key, c] : t.terms()) {
    if (key.first.empty()) out.add_term(key.second, c);
  }
  return out;
}

QSym antipode(const QSym& f) {
  QSym out;
  for (const auto& [alpha, c] : f.terms()) {
    QPoly signed_c = alpha.length() % 2 == 0 ? c : -c;
    for (const Composition& beta : coarsenings_of(alpha.reversed())) {
      out.add_term(beta, signed_c);
    }
  }
  return out;
}

QSym antipode_convolution(const QSym& f) {
  QSym out;
  for (const auto& [alpha, c] : f.terms()) {
    for (int i = 0; i <= alpha.length(); ++i) {
      out += (antipode(QSym::monomial(alpha.take(i))) * QSym::monomial(alpha.drop(i))) * c;
    }
  }
  return out;
}

QSym fundamental(const Composition& alpha) {
  QSym out;
  for (const Composition& beta : refinements_of(alpha)) out.add_term(beta, QPoly(1));
  return out;
}

std::map<Composition, QPoly> to_fundamental(const QSym& f) {
  std::map<Composition, QPoly> out;
  for (const auto& [alpha, c] : f.terms()) {
    for (const Composition& beta : refinements_of(alpha)) {
      QPoly add = (beta.length() - alpha.length()) % 2 == 0 ? c : -c;
      auto [it, fresh] = out.emplace(beta, add);
      if (!fresh) it->second += add;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

QPoly principal_specialization(const QSym& f, long m) {
  QPoly out;
  for (const auto& [alpha, c] : f.terms()) {
    out += c * binomial(m, alpha.length());
  }
  return out;
}

QSym substitute_q(const QSym& f, const QPoly& value) {
  QSym out;
  for (const auto& [alpha, c] : f.terms()) out.add_term(alpha, c.substituted(value));
  return out;
}

QSym reverse_map(const QSym& f) {
  QSym out;
  for (const auto& [alpha, c] : f.terms()) out.add_term(alpha.reversed(), c);
  return out;
}

std::string QSym::to_string(const std::string& basis_symbol) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    bool neg = false;
    std::string coefpart;
    if (c.terms().size() == 1) {
      const auto& [e, v] = *c.terms().begin();
      neg = v < 0;
      mpz_class a = abs(v);
      std::ostringstream cs;
      if (a != 1 || e == 0) cs << a.get_str();
      if (e >= 1) {
        cs << 'q';
        if (e >= 2) cs << '^' << e;
      }
      coefpart = cs.str();
      if (a == 1 && e == 0) coefpart.clear();  // bare basis element for +-1
    } else {
      coefpart = "(" + c.to_string() + ")";
    }
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (!coefpart.empty()) os << coefpart << '*';
    os << basis_symbol << alpha.to_string();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSym& f) {
  return os << f.to_string();
}

}  // namespace qpos
