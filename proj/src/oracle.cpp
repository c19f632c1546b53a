#include "qpos/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "qpos/errors.hpp"

namespace qpos {

bool in_normal_fan(const Poset& p, const WeightVector& omega) {
  if (static_cast<int>(omega.size()) != p.size()) {
    throw IndexError("weight vector length differs from ground-set size");
  }
  for (auto [i, j] : p.relation_pairs()) {
    if (omega[static_cast<size_t>(i - 1)] > omega[static_cast<size_t>(j - 1)]) return false;
  }
  return true;
}

Flag level_flag(const WeightVector& omega) {
  std::map<int, Mask> levels;
  for (size_t i = 0; i < omega.size(); ++i) {
    levels[omega[i]] |= Mask{1} << i;
  }
  std::vector<Mask> blocks;
  blocks.reserve(levels.size());
  for (const auto& [value, block] : levels) blocks.push_back(block);
  return Flag(std::move(blocks));
}

TruncatedExpansion fq_integer_points(const Poset& p, int m) {
  if (m < 0) throw std::invalid_argument("negative variable count");
  TruncatedExpansion out(m);
  int n = p.size();
  if (n == 0) {
    out.add_monomial(std::vector<int>(static_cast<size_t>(m), 0), QPoly(1));
    return out;
  }
  if (m == 0) return out;
  WeightVector omega(static_cast<size_t>(n), 1);
  while (true) {
    if (in_normal_fan(p, omega)) {
      int r = rank_of_flag(p, level_flag(omega));
      std::vector<int> exps(static_cast<size_t>(m), 0);
      for (int v : omega) ++exps[static_cast<size_t>(v - 1)];
      out.add_monomial(exps, QPoly::term(r));
    }
    int t = n - 1;
    while (t >= 0 && omega[static_cast<size_t>(t)] == m) {
      omega[static_cast<size_t>(t)] = 1;
      --t;
    }
    if (t < 0) break;
    ++omega[static_cast<size_t>(t)];
  }
  return out;
}

namespace {

std::vector<Mask> below_key(const Poset& p) {
  std::vector<Mask> key;
  key.reserve(static_cast<size_t>(p.size()));
  for (int j = 1; j <= p.size(); ++j) key.push_back(p.below_mask(j));
  return key;
}

}  // namespace

std::vector<Face> face_lattice(const Poset& p) {
  std::map<std::vector<Mask>, int> seen;
  for_each_ideal_flag(p, [&](const Flag& f) {
    Poset quo = quotient(p, f);
    seen.emplace(below_key(quo), rank(quo));
  });
  std::vector<Face> out;
  out.reserve(seen.size());
  for (const auto& [key, dim] : seen) {
    out.push_back(Face{Poset::unchecked(p.size(), key), dim});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Face& a, const Face& b) { return a.dim < b.dim; });
  return out;
}

QPoly face_count_polynomial(const Poset& p) {
  QPoly out;
  for (const Face& face : face_lattice(p)) out.add_term(face.dim, 1);
  return out;
}

bool positive_subposet_cross_check(const Poset& p) {
  int n = p.size();
  if (n > 4) throw SizeError("positive-subposet enumeration bounded at n <= 4");
  std::set<std::vector<Mask>> from_flags;
  for (const Face& face : face_lattice(p)) from_flags.insert(below_key(face.relation));

  std::set<std::vector<Mask>> from_subsets;
  auto pairs = p.relation_pairs();
  auto cycles = comparability_cycles(p);
  size_t r = pairs.size();
  for (Mask choose = 0; choose < (Mask{1} << r); ++choose) {
    std::vector<Mask> below(static_cast<size_t>(n), 0);
    for (size_t t = 0; t < r; ++t) {
      if (choose & (Mask{1} << t)) {
        below[static_cast<size_t>(pairs[t].second - 1)] |= Mask{1} << (pairs[t].first - 1);
      }
    }
    bool closed = true;
    for (int j = 0; j < n && closed; ++j) {
      Mask m = below[static_cast<size_t>(j)];
      while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        if (below[static_cast<size_t>(i)] & ~below[static_cast<size_t>(j)]) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    Poset q = Poset::unchecked(n, below);
    if (is_positive_subposet(p, q, cycles)) from_subsets.insert(below_key(q));
  }
  return from_flags == from_subsets;
}

bool euler_flag_identity(const Poset& p) {
  int n = p.size();
  std::map<std::vector<Mask>, std::pair<long, int>> groups;  // key -> (signed count, dim)
  for_each_ideal_flag(p, [&](const Flag& f) {
    Poset quo = quotient(p, f);
    auto [it, fresh] = groups.emplace(below_key(quo), std::make_pair(0L, rank(quo)));
    it->second.first += f.block_count() % 2 == 0 ? 1 : -1;
  });
  for (const auto& [key, entry] : groups) {
    long expected = (n - entry.second) % 2 == 0 ? 1 : -1;
    if (entry.first != expected) return false;
  }
  return true;
}

}  // namespace qpos
