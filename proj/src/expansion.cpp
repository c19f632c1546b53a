#include "qpos/expansion.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qpos {

TruncatedExpansion::TruncatedExpansion(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("negative variable count");
}

QPoly TruncatedExpansion::coefficient(const std::vector<int>& exponents) const {
  auto it = monomials_.find(exponents);
  return it == monomials_.end() ? QPoly() : it->second;
}

void TruncatedExpansion::add_monomial(const std::vector<int>& exponents, const QPoly& c) {
  if (static_cast<int>(exponents.size()) != m_) {
    throw std::invalid_argument("exponent vector has wrong length");
  }
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  if (c.is_zero()) return;
  auto [it, fresh] = monomials_.emplace(exponents, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) monomials_.erase(it);
  }
}

TruncatedExpansion& TruncatedExpansion::operator+=(const TruncatedExpansion& o) {
  if (m_ != o.m_) throw std::invalid_argument("mismatched variable counts");
  for (const auto& [e, c] : o.monomials_) add_monomial(e, c);
  return *this;
}

TruncatedExpansion TruncatedExpansion::operator*(const TruncatedExpansion& o) const {
  if (m_ != o.m_) throw std::invalid_argument("mismatched variable counts");
  TruncatedExpansion out(m_);
  for (const auto& [e1, c1] : monomials_) {
    for (const auto& [e2, c2] : o.monomials_) {
      std::vector<int> e = e1;
      for (int i = 0; i < m_; ++i) e[static_cast<size_t>(i)] += e2[static_cast<size_t>(i)];
      out.add_monomial(e, c1 * c2);
    }
  }
  return out;
}

std::string TruncatedExpansion::to_string() const {
  if (monomials_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : monomials_) {
    std::ostringstream xs;
    bool any = false;
    for (int i = 0; i < m_; ++i) {
      int e = exps[static_cast<size_t>(i)];
      if (e == 0) continue;
      if (any) xs << '*';
      any = true;
      xs << 'x' << (i + 1);
      if (e >= 2) xs << '^' << e;
    }
    std::string base = any ? xs.str() : "1";

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
      if (a == 1 && e == 0) coefpart.clear();
    } else {
      coefpart = "(" + c.to_string() + ")";
    }
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (!coefpart.empty() && base != "1") {
      os << coefpart << '*' << base;
    } else if (!coefpart.empty()) {
      os << coefpart;
    } else {
      os << base;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedExpansion& e) {
  return os << e.to_string();
}

TruncatedExpansion truncate(const QSym& f, int m) {
  if (m < 0) throw std::invalid_argument("negative variable count");
  TruncatedExpansion out(m);
  for (const auto& [alpha, c] : f.terms()) {
    int k = alpha.length();
    if (k > m) continue;
    // ordered choices i_1 < ... < i_k from {0..m-1}
    std::vector<int> idx(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) idx[static_cast<size_t>(t)] = t;
    while (true) {
      std::vector<int> exps(static_cast<size_t>(m), 0);
      for (int t = 0; t < k; ++t) exps[static_cast<size_t>(idx[static_cast<size_t>(t)])] = alpha[t];
      out.add_monomial(exps, c);
      int t = k - 1;
      while (t >= 0 && idx[static_cast<size_t>(t)] == m - k + t) --t;
      if (t < 0) break;
      ++idx[static_cast<size_t>(t)];
      for (int u = t + 1; u < k; ++u) idx[static_cast<size_t>(u)] = idx[static_cast<size_t>(u - 1)] + 1;
    }
  }
  return out;
}

}  // namespace qpos
