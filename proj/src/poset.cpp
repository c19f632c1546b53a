#include "qpos/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qpos/errors.hpp"

namespace qpos {

namespace {
constexpr Mask bit(int i) { return Mask{1} << i; }
}

int popcount(Mask m) { return std::popcount(m); }

std::vector<int> mask_to_list(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i + 1);
    m &= m - 1;
  }
  return out;
}

Mask list_to_mask(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > 64) throw IndexError("element outside 1..64");
    m |= bit(e - 1);
  }
  return m;
}

Poset Poset::unchecked(int n, std::vector<Mask> below) {
  if (n < 0) throw IndexError("negative ground-set size");
  if (n > 64) throw SizeError("ground set larger than 64");
  Poset p;
  p.n_ = n;
  p.below_ = std::move(below);
  p.above_.assign(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    Mask m = p.below_[static_cast<size_t>(j)];
    while (m) {
      int i = std::countr_zero(m);
      m &= m - 1;
      p.above_[static_cast<size_t>(i)] |= bit(j);
    }
  }
  return p;
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw IndexError("negative ground-set size");
  if (n > 64) throw SizeError("ground set larger than 64");
  std::vector<Mask> below(static_cast<size_t>(n), 0);
  for (auto [i, j] : pairs) {
    if (i < 1 || i > n || j < 1 || j > n) throw IndexError("relation label outside 1..n");
    if (i == j) throw CycleError("reflexive relation");
    below[static_cast<size_t>(j - 1)] |= bit(i - 1);
  }
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      if (below[static_cast<size_t>(j)] & bit(k)) below[static_cast<size_t>(j)] |= below[static_cast<size_t>(k)];
    }
  }
  for (int j = 0; j < n; ++j) {
    if (below[static_cast<size_t>(j)] & bit(j)) throw CycleError("relations contain a cycle");
  }
  return unchecked(n, std::move(below));
}

bool Poset::less(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw IndexError("label outside 1..n");
  return (below_[static_cast<size_t>(j - 1)] & bit(i - 1)) != 0;
}

Mask Poset::ground_mask() const {
  return n_ == 64 ? ~Mask{0} : bit(n_) - 1;
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    Mask m = above_[static_cast<size_t>(i - 1)];
    while (m) {
      int j = std::countr_zero(m);
      m &= m - 1;
      out.emplace_back(i, j + 1);
    }
  }
  return out;
}

int Poset::relation_count() const {
  int c = 0;
  for (Mask m : below_) c += std::popcount(m);
  return c;
}

Poset Poset::chain(int n) {
  std::vector<Mask> below(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) below[static_cast<size_t>(j)] = bit(j) - 1;
  return unchecked(n, std::move(below));
}

Poset Poset::antichain(int n) {
  return unchecked(n, std::vector<Mask>(static_cast<size_t>(n), 0));
}

Poset Poset::star(int n) {
  std::vector<Mask> below(static_cast<size_t>(n), 0);
  if (n >= 1) below[static_cast<size_t>(n - 1)] = bit(n - 1) - 1;
  return unchecked(n, std::move(below));
}

Poset Poset::complete_bipartite(int m, int n) {
  if (m < 0 || n < 0) throw IndexError("negative part size");
  std::vector<Mask> below(static_cast<size_t>(m + n), 0);
  Mask lower = m == 0 ? 0 : bit(m) - 1;
  for (int j = m; j < m + n; ++j) below[static_cast<size_t>(j)] = lower;
  return unchecked(m + n, std::move(below));
}

std::ostream& operator<<(std::ostream& os, const Poset& p) {
  os << "{n=" << p.size() << ':';
  for (auto [i, j] : p.relation_pairs()) os << ' ' << i << '<' << j;
  return os << '}';
}

Flag::Flag(std::vector<Mask> blocks) : blocks_(std::move(blocks)) {
  Mask seen = 0;
  for (Mask b : blocks_) {
    if (b == 0) throw FlagError("empty block");
    if (seen & b) throw FlagError("overlapping blocks");
    seen |= b;
  }
}

Flag Flag::of_lists(const std::vector<std::vector<int>>& blocks) {
  std::vector<Mask> ms;
  ms.reserve(blocks.size());
  for (const auto& b : blocks) ms.push_back(list_to_mask(b));
  return Flag(std::move(ms));
}

Mask Flag::support() const {
  Mask m = 0;
  for (Mask b : blocks_) m |= b;
  return m;
}

Mask Flag::prefix(int i) const {
  Mask m = 0;
  for (int t = 0; t < i; ++t) m |= blocks_[static_cast<size_t>(t)];
  return m;
}

Composition Flag::type() const {
  std::vector<int> parts;
  parts.reserve(blocks_.size());
  for (Mask b : blocks_) parts.push_back(std::popcount(b));
  return Composition(std::move(parts));
}

Flag Flag::opposite() const {
  std::vector<Mask> rev(blocks_.rbegin(), blocks_.rend());
  return Flag(std::move(rev));
}

std::vector<std::vector<int>> Flag::block_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(blocks_.size());
  for (Mask b : blocks_) out.push_back(mask_to_list(b));
  return out;
}

std::string Flag::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t t = 0; t < blocks_.size(); ++t) {
    if (t) os << ',';
    os << '{';
    auto elems = mask_to_list(blocks_[t]);
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i) os << ',';
      os << elems[i];
    }
    os << '}';
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Flag& f) {
  return os << f.to_string();
}

bool flag_less(const Flag& a, const Flag& b) {
  if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
  return a.block_lists() < b.block_lists();
}

bool is_ideal(const Poset& p, Mask s) {
  Mask m = s;
  while (m) {
    int j = std::countr_zero(m);
    m &= m - 1;
    if (p.below_mask(j + 1) & ~s) return false;
  }
  return true;
}

bool is_ideal(const Poset& p, const std::vector<int>& s) {
  return is_ideal(p, list_to_mask(s));
}

std::vector<Mask> ideals(const Poset& p) {
  int n = p.size();
  if (n > 20) throw SizeError("ideal enumeration bounded at n <= 20");
  std::vector<Mask> out;
  Mask ground = p.ground_mask();
  for (Mask s = 0;; ++s) {
    if (is_ideal(p, s)) out.push_back(s);
    if (s == ground) break;
  }
  return out;
}

namespace {

void flag_walk(const Poset& p, Mask remaining, std::vector<Mask>& blocks,
               bool discrete_only, const std::function<void(const Flag&)>& fn) {
  if (remaining == 0) {
    fn(Flag(blocks));
    return;
  }
  if (discrete_only) {
    // A block that is both an ideal of the restriction and an antichain is
    // exactly a set of minimal elements of the restriction.
    Mask minmask = 0;
    Mask m = remaining;
    while (m) {
      int j = std::countr_zero(m);
      m &= m - 1;
      if ((p.below_mask(j + 1) & remaining) == 0) minmask |= bit(j);
    }
    for (Mask b = minmask; b != 0; b = (b - 1) & minmask) {
      blocks.push_back(b);
      flag_walk(p, remaining & ~b, blocks, discrete_only, fn);
      blocks.pop_back();
    }
  } else {
    for (Mask b = remaining; b != 0; b = (b - 1) & remaining) {
      bool ok = true;
      Mask m = b;
      while (m) {
        int j = std::countr_zero(m);
        m &= m - 1;
        if (p.below_mask(j + 1) & remaining & ~b) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      blocks.push_back(b);
      flag_walk(p, remaining & ~b, blocks, discrete_only, fn);
      blocks.pop_back();
    }
  }
}

}  // namespace

void for_each_ideal_flag(const Poset& p, const std::function<void(const Flag&)>& fn) {
  std::vector<Mask> blocks;
  flag_walk(p, p.ground_mask(), blocks, false, fn);
}

void for_each_discrete_ideal_flag(const Poset& p, const std::function<void(const Flag&)>& fn) {
  std::vector<Mask> blocks;
  flag_walk(p, p.ground_mask(), blocks, true, fn);
}

std::vector<Flag> ideal_flags(const Poset& p) {
  std::vector<Flag> out;
  for_each_ideal_flag(p, [&](const Flag& f) { out.push_back(f); });
  std::sort(out.begin(), out.end(), flag_less);
  return out;
}

bool is_ideal_flag(const Poset& p, const Flag& f) {
  if (f.support() != p.ground_mask()) return false;
  Mask prefix = 0;
  for (Mask b : f.blocks()) {
    prefix |= b;
    if (!is_ideal(p, prefix)) return false;
  }
  return true;
}

Poset quotient(const Poset& p, const Flag& f) {
  if (!is_ideal_flag(p, f)) throw FlagError("not a flag of ideals of the host poset");
  std::vector<Mask> below(static_cast<size_t>(p.size()), 0);
  for (Mask b : f.blocks()) {
    Mask m = b;
    while (m) {
      int j = std::countr_zero(m);
      m &= m - 1;
      below[static_cast<size_t>(j)] = p.below_mask(j + 1) & b;
    }
  }
  return Poset::unchecked(p.size(), std::move(below));
}

std::vector<Mask> connected_components(const Poset& p) {
  int n = p.size();
  std::vector<Mask> out;
  Mask seen = 0;
  for (int s = 0; s < n; ++s) {
    if (seen & bit(s)) continue;
    Mask comp = bit(s), frontier = bit(s);
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask nb = (p.below_mask(v + 1) | p.above_mask(v + 1)) & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

int component_count(const Poset& p) {
  return static_cast<int>(connected_components(p).size());
}

int component_count_within(const Poset& p, Mask s) {
  int count = 0;
  Mask seen = 0;
  Mask todo = s;
  while (todo) {
    int v = std::countr_zero(todo);
    Mask comp = bit(v), frontier = bit(v);
    while (frontier) {
      int w = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask nb = (p.below_mask(w + 1) | p.above_mask(w + 1)) & s & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    seen |= comp;
    todo = s & ~seen;
    ++count;
  }
  return count;
}

int rank(const Poset& p) {
  return p.size() - component_count(p);
}

int rank_of_flag(const Poset& p, const Flag& f) {
  if (!is_ideal_flag(p, f)) throw FlagError("not a flag of ideals of the host poset");
  int components = 0;
  for (Mask b : f.blocks()) components += component_count_within(p, b);
  return p.size() - components;
}

Poset opposite(const Poset& p) {
  std::vector<Mask> below;
  below.reserve(static_cast<size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) below.push_back(p.above_mask(i));
  return Poset::unchecked(p.size(), std::move(below));
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  int na = a.size(), nb = b.size();
  if (na + nb > 64) throw SizeError("ground set larger than 64");
  std::vector<Mask> below(static_cast<size_t>(na + nb), 0);
  for (int j = 0; j < na; ++j) below[static_cast<size_t>(j)] = a.below_mask(j + 1);
  for (int j = 0; j < nb; ++j) below[static_cast<size_t>(na + j)] = b.below_mask(j + 1) << na;
  return Poset::unchecked(na + nb, std::move(below));
}

Poset series_composition(const Poset& a, const Poset& b) {
  int na = a.size(), nb = b.size();
  if (na + nb > 64) throw SizeError("ground set larger than 64");
  std::vector<Mask> below(static_cast<size_t>(na + nb), 0);
  Mask lower = na == 0 ? 0 : bit(na) - 1;
  for (int j = 0; j < na; ++j) below[static_cast<size_t>(j)] = a.below_mask(j + 1);
  for (int j = 0; j < nb; ++j) {
    below[static_cast<size_t>(na + j)] = (b.below_mask(j + 1) << na) | lower;
  }
  return Poset::unchecked(na + nb, std::move(below));
}

Poset restriction(const Poset& p, Mask s) {
  std::vector<int> old_index;  // 0-based, ascending: position t holds element old_index[t]
  Mask m = s;
  while (m) {
    old_index.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  int k = static_cast<int>(old_index.size());
  std::vector<int> new_of(static_cast<size_t>(p.size()), -1);
  for (int t = 0; t < k; ++t) new_of[static_cast<size_t>(old_index[static_cast<size_t>(t)])] = t;
  std::vector<Mask> below(static_cast<size_t>(k), 0);
  for (int t = 0; t < k; ++t) {
    Mask b = p.below_mask(old_index[static_cast<size_t>(t)] + 1) & s;
    while (b) {
      int o = std::countr_zero(b);
      b &= b - 1;
      below[static_cast<size_t>(t)] |= bit(new_of[static_cast<size_t>(o)]);
    }
  }
  return Poset::unchecked(k, std::move(below));
}

Poset relabel(const Poset& p, const std::vector<int>& perm) {
  int n = p.size();
  if (static_cast<int>(perm.size()) != n) throw IndexError("relabeling has wrong length");
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || hit[static_cast<size_t>(v - 1)]) throw IndexError("relabeling is not a permutation");
    hit[static_cast<size_t>(v - 1)] = true;
  }
  std::vector<Mask> below(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    Mask b = p.below_mask(j + 1);
    Mask nb = 0;
    while (b) {
      int i = std::countr_zero(b);
      b &= b - 1;
      nb |= bit(perm[static_cast<size_t>(i)] - 1);
    }
    below[static_cast<size_t>(perm[static_cast<size_t>(j)] - 1)] = nb;
  }
  return Poset::unchecked(n, std::move(below));
}

Mask maximal_elements(const Poset& p) {
  Mask m = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.above_mask(i) == 0) m |= bit(i - 1);
  }
  return m;
}

std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : p.relation_pairs()) {
    if ((p.above_mask(i) & p.below_mask(j)) == 0) out.emplace_back(i, j);
  }
  return out;
}

bool hasse_is_tree(const Poset& p) {
  if (p.size() == 0) return false;
  return component_count(p) == 1 &&
         static_cast<int>(cover_pairs(p).size()) == p.size() - 1;
}

namespace {

void extensions_walk(const Poset& p, Mask used, std::vector<int>& seq,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(seq.size()) == p.size()) {
    out.push_back(seq);
    return;
  }
  for (int j = 0; j < p.size(); ++j) {
    if (used & bit(j)) continue;
    if (p.below_mask(j + 1) & ~used) continue;
    seq.push_back(j + 1);
    extensions_walk(p, used | bit(j), seq, out);
    seq.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  extensions_walk(p, 0, seq, out);
  return out;
}

bool is_well_labelled(const Poset& p) {
  for (auto [i, j] : p.relation_pairs()) {
    if (i < j) return false;
  }
  return true;
}

Poset well_labelling(const Poset& p) {
  // Greedy lexicographically-first linear extension, then label its a-th
  // element n+1-a, so every relation decreases labels.
  int n = p.size();
  Mask used = 0;
  std::vector<int> perm(static_cast<size_t>(n), 0);
  for (int a = 1; a <= n; ++a) {
    for (int j = 0; j < n; ++j) {
      if (used & bit(j)) continue;
      if (p.below_mask(j + 1) & ~used) continue;
      perm[static_cast<size_t>(j)] = n + 1 - a;
      used |= bit(j);
      break;
    }
  }
  return relabel(p, perm);
}

namespace {

void cycle_walk(const Poset& p, const std::vector<Mask>& adj, int start, int v,
                Mask onpath, std::vector<int>& path, std::vector<std::vector<int>>& out) {
  Mask m = adj[static_cast<size_t>(v)];
  while (m) {
    int w = std::countr_zero(m);
    m &= m - 1;
    if (w < start) continue;
    if (w == start) {
      if (path.size() >= 3 && path[1] < path.back()) {
        std::vector<int> cyc;
        cyc.reserve(path.size());
        for (int u : path) cyc.push_back(u + 1);
        out.push_back(std::move(cyc));
      }
      continue;
    }
    if (onpath & bit(w)) continue;
    path.push_back(w);
    cycle_walk(p, adj, start, w, onpath | bit(w), path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> comparability_cycles(const Poset& p) {
  int n = p.size();
  std::vector<Mask> adj(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    adj[static_cast<size_t>(j)] = p.below_mask(j + 1) | p.above_mask(j + 1);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    cycle_walk(p, adj, s, s, bit(s), path, out);
  }
  return out;
}

bool is_positive_subposet(const Poset& p, const Poset& q,
                          const std::vector<std::vector<int>>& cycles) {
  if (q.size() != p.size()) throw IndexError("subrelation on a different ground set");
  for (auto [i, j] : q.relation_pairs()) {
    if (!p.less(i, j)) throw IndexError("not a subrelation of the host poset");
  }
  for (const auto& cyc : cycles) {
    bool all_up = true, all_down = true;
    size_t len = cyc.size();
    for (size_t t = 0; t < len; ++t) {
      int a = cyc[t], b = cyc[(t + 1) % len];
      if (p.less(a, b)) {
        all_up = all_up && q.less(a, b);
      } else {
        all_down = all_down && q.less(b, a);
      }
    }
    if (all_up != all_down) return false;
  }
  return true;
}

bool is_positive_subposet(const Poset& p, const Poset& q) {
  return is_positive_subposet(p, q, comparability_cycles(p));
}

namespace {

Poset poset_from_code(const std::string& code) {
  int n = static_cast<unsigned char>(code[0]);
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) {
    bits = (bits << 8) | static_cast<unsigned char>(code[static_cast<size_t>(1 + b)]);
  }
  std::vector<Mask> below(static_cast<size_t>(n), 0);
  while (bits) {
    int t = std::countr_zero(bits);
    bits &= bits - 1;
    int i = t / n, j = t % n;
    below[static_cast<size_t>(j)] |= bit(i);
  }
  return Poset::unchecked(n, std::move(below));
}

}  // namespace

std::string canonical_form(const Poset& p) {
  int n = p.size();
  if (n > 8) throw SizeError("canonical form bounded at n <= 8");
  std::vector<std::pair<int, int>> pairs0;
  for (auto [i, j] : p.relation_pairs()) pairs0.emplace_back(i - 1, j - 1);
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (auto [i, j] : pairs0) {
      code |= std::uint64_t{1} << (perm[static_cast<size_t>(i)] * n + perm[static_cast<size_t>(j)]);
    }
    if (code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string s(9, '\0');
  s[0] = static_cast<char>(n);
  for (int b = 0; b < 8; ++b) {
    s[static_cast<size_t>(1 + b)] = static_cast<char>((best >> (8 * (7 - b))) & 0xff);
  }
  return s;
}

std::vector<Poset> all_posets(int n) {
  if (n < 0) throw IndexError("negative ground-set size");
  if (n > 7) throw SizeError("isomorphism-class generation bounded at n <= 7");
  std::vector<Poset> reps = {Poset()};
  for (int k = 1; k <= n; ++k) {
    // Add a new maximal element k over every ideal of every (k-1)-class; each
    // k-class arises this way from any of its maximal elements.
    std::set<std::string> codes;
    for (const Poset& q : reps) {
      for (Mask d : ideals(q)) {
        std::vector<Mask> below(static_cast<size_t>(k), 0);
        for (int j = 0; j < k - 1; ++j) below[static_cast<size_t>(j)] = q.below_mask(j + 1);
        below[static_cast<size_t>(k - 1)] = d;
        codes.insert(canonical_form(Poset::unchecked(k, std::move(below))));
      }
    }
    reps.clear();
    reps.reserve(codes.size());
    for (const std::string& c : codes) reps.push_back(poset_from_code(c));
  }
  return reps;
}

}  // namespace qpos
