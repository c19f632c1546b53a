#include "qpos/enumerator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "qpos/errors.hpp"

namespace qpos {

QSym fq_poset_cone(const Poset& p) {
  QSym out;
  int n = p.size();
  for_each_ideal_flag(p, [&](const Flag& f) {
    int components = 0;
    for (Mask b : f.blocks()) components += component_count_within(p, b);
    out.add_term(f.type(), QPoly::term(n - components));
  });
  return out;
}

QPoly zeta_coefficient(const Poset& p, const Composition& alpha) {
  if (alpha.weight() != p.size()) throw WeightError("composition weight differs from ground-set size");
  return fq_poset_cone(p).coefficient(alpha);
}

QPoly f_polynomial(const Poset& p) {
  QPoly value = principal_specialization(substitute_q(fq_poset_cone(p), -QPoly::q()), -1);
  if (p.size() % 2 != 0) value = -value;
  return value;
}

QSym f0(const Poset& p) {
  QSym out;
  for_each_discrete_ideal_flag(p, [&](const Flag& f) { out.add_term(f.type(), QPoly(1)); });
  return out;
}

TruncatedExpansion ppartitions_bruteforce(const Poset& labelled, int m) {
  if (m < 0) throw std::invalid_argument("negative variable count");
  TruncatedExpansion out(m);
  int n = labelled.size();
  if (n == 0) {
    out.add_monomial(std::vector<int>(static_cast<size_t>(m), 0), QPoly(1));
    return out;
  }
  if (m == 0) return out;
  auto pairs = labelled.relation_pairs();
  std::vector<int> f(static_cast<size_t>(n), 1);
  while (true) {
    bool ok = true;
    for (auto [i, j] : pairs) {
      int fi = f[static_cast<size_t>(i - 1)], fj = f[static_cast<size_t>(j - 1)];
      if (i < j ? fi > fj : fi >= fj) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<int> exps(static_cast<size_t>(m), 0);
      for (int v : f) ++exps[static_cast<size_t>(v - 1)];
      out.add_monomial(exps, QPoly(1));
    }
    int t = n - 1;
    while (t >= 0 && f[static_cast<size_t>(t)] == m) {
      f[static_cast<size_t>(t)] = 1;
      --t;
    }
    if (t < 0) break;
    ++f[static_cast<size_t>(t)];
  }
  return out;
}

QSym ppartitions_via_extensions(const Poset& labelled) {
  int n = labelled.size();
  QSym out;
  for (const auto& ext : linear_extensions(labelled)) {
    std::vector<int> descents;
    for (size_t a = 0; a + 1 < ext.size(); ++a) {
      if (ext[a] > ext[a + 1]) descents.push_back(static_cast<int>(a) + 1);
    }
    out += fundamental(Composition::from_descents(n, std::move(descents)));
  }
  return out;
}

QSym antipode_rhs(const Poset& p) {
  int n = p.size();
  QSym out;
  // Distinct quotients repeat across flags; cache their f-polynomials.
  std::map<std::vector<Mask>, QPoly> cache;
  for_each_ideal_flag(p, [&](const Flag& g) {
    Poset quo = quotient(p, g);
    std::vector<Mask> key;
    key.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) key.push_back(quo.below_mask(j));
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(std::move(key), f_polynomial(quo).substituted(-QPoly::q())).first;
    }
    out.add_term(g.opposite().type(), it->second);
  });
  if (n % 2 != 0) out *= QPoly(-1);
  return out;
}

bool opposite_identity_check(const Poset& p) {
  return fq_poset_cone(opposite(p)) == reverse_map(fq_poset_cone(p));
}

QSym closed_form_star(int n) {
  if (n < 1) throw std::invalid_argument("star closed form needs n >= 1");
  QSym m1 = QSym::monomial(Composition{1});
  QSym out;
  for (int i = 0; i <= n - 1; ++i) {
    QSym piece = append(quasi_shuffle_power(m1, n - 1 - i), i + 1);
    out += piece * QPoly::term(i, binomial(n - 1, i));
  }
  return out;
}

QSym closed_form_chain(int n) {
  if (n < 1) throw std::invalid_argument("chain closed form needs n >= 1");
  QSym out;
  for (const Composition& alpha : compositions_of(n)) {
    out.add_term(alpha, QPoly::term(n - alpha.length()));
  }
  return out;
}

QSym closed_form_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("bipartite closed form needs m, n >= 1");
  QSym m1 = QSym::monomial(Composition{1});
  QSym out = concat_product(quasi_shuffle_power(m1, m), quasi_shuffle_power(m1, n));
  for (int k = 1; k <= m + n - 1; ++k) {
    for (int t1 = std::max(1, k + 1 - n); t1 <= std::min(m, k); ++t1) {
      int t2 = k + 1 - t1;
      QSym piece = concat_product(
          concat_product(quasi_shuffle_power(m1, m - t1), QSym::monomial(Composition{k + 1})),
          quasi_shuffle_power(m1, n - t2));
      out += piece * QPoly::term(k, binomial(m, t1) * binomial(n, t2));
    }
  }
  return out;
}

QPoly fpoly_closed_form_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("bipartite closed form needs m, n >= 1");
  QPoly out(1);
  for (int k = 1; k <= m + n - 1; ++k) {
    mpz_class total = 0;
    for (int t1 = std::max(1, k + 1 - n); t1 <= std::min(m, k); ++t1) {
      total += binomial(m, t1) * binomial(n, k + 1 - t1);
    }
    out.add_term(k, total);
  }
  return out;
}

bool series_identity_check(const std::vector<Poset>& parts) {
  Poset total;
  QSym rhs = QSym::unit();
  for (const Poset& p : parts) {
    total = series_composition(total, p);
    rhs = concat_product(rhs, f0(p));
  }
  return f0(total) == rhs;
}

namespace {

std::string memo_key(const Poset& p) {
  if (p.size() <= 8) return canonical_form(p);
  std::string key(1, static_cast<char>(p.size()));
  for (int j = 1; j <= p.size(); ++j) {
    Mask m = p.below_mask(j);
    for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((m >> (8 * b)) & 0xff));
  }
  return key;
}

QSym max_rec_impl(const Poset& p, std::map<std::string, QSym>& memo) {
  if (p.size() == 0) return QSym::unit();
  std::string key = memo_key(p);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  QSym out;
  auto comps = connected_components(p);
  if (comps.size() > 1) {
    out = QSym::unit();
    for (Mask c : comps) out *= max_rec_impl(restriction(p, c), memo);
  } else {
    Mask maxels = maximal_elements(p);
    for (Mask a = maxels; a != 0; a = (a - 1) & maxels) {
      out += append(max_rec_impl(restriction(p, p.ground_mask() & ~a), memo), popcount(a));
    }
  }
  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

QSym max_recursion(const Poset& p) {
  if (p.size() > 0 && component_count(p) > 1) {
    throw ConnectivityError("recursion defined for connected posets");
  }
  std::map<std::string, QSym> memo;
  return max_rec_impl(p, memo);
}

bool hopf_product_check(const Poset& a, const Poset& b) {
  return fq_poset_cone(disjoint_union(a, b)) == fq_poset_cone(a) * fq_poset_cone(b);
}

bool hopf_coproduct_check(const Poset& p) {
  QSymTensor rhs;
  Mask ground = p.ground_mask();
  for (Mask s : ideals(p)) {
    rhs += tensor(fq_poset_cone(restriction(p, s)), fq_poset_cone(restriction(p, ground & ~s)));
  }
  return coproduct(fq_poset_cone(p)) == rhs;
}

bool hopf_morphism_checks(const Poset& a, const Poset& b) {
  return hopf_product_check(a, b) && hopf_coproduct_check(a) && hopf_coproduct_check(b);
}

}  // namespace qpos
