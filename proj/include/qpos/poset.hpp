#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qpos/composition.hpp"

namespace qpos {

// Subsets of the ground set {1..n} are bitmasks: element i occupies bit i-1.
using Mask = std::uint64_t;

int popcount(Mask m);
std::vector<int> mask_to_list(Mask m);  // 1-based elements, ascending
Mask list_to_mask(const std::vector<int>& elements);

// Finite strict partial order on {1..n}, n <= 64, stored transitively closed
// as per-element strictly-below / strictly-above masks. Immutable.
class Poset {
 public:
  Poset() = default;  // empty poset, n = 0

  // Transitive closure of arbitrary strict relations.
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& pairs);

  // Trusted fast path: `below` must already be transitively closed, irreflexive
  // and antisymmetric. Used by quotients, restrictions and generation loops.
  static Poset unchecked(int n, std::vector<Mask> below);

  int size() const { return n_; }
  bool less(int i, int j) const;  // i <_P j, 1-based
  Mask below_mask(int j) const { return below_[static_cast<size_t>(j - 1)]; }
  Mask above_mask(int i) const { return above_[static_cast<size_t>(i - 1)]; }
  Mask ground_mask() const;
  std::vector<std::pair<int, int>> relation_pairs() const;  // sorted ascending
  int relation_count() const;
  bool operator==(const Poset& o) const { return n_ == o.n_ && below_ == o.below_; }

  static Poset chain(int n);      // 1 < 2 < ... < n
  static Poset antichain(int n);  // no relations
  static Poset star(int n);       // i < n for all i < n
  static Poset complete_bipartite(int m, int n);  // i < j for i in [m], j in [m+n]\[m]

 private:
  int n_ = 0;
  std::vector<Mask> below_, above_;
};

std::ostream& operator<<(std::ostream& os, const Poset& p);

// Ordered set partition of a subset of {1..n} into nonempty disjoint blocks.
// Serves both as a flag of ideals (prefix unions are ideals of a host poset)
// and as the level-set partition of a weight vector.
class Flag {
 public:
  Flag() = default;  // the empty flag (n = 0)
  explicit Flag(std::vector<Mask> blocks);                       // FlagError on empty/overlap
  static Flag of_lists(const std::vector<std::vector<int>>& blocks);  // 1-based

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Mask>& blocks() const { return blocks_; }
  Mask block(int i) const { return blocks_[static_cast<size_t>(i)]; }
  Mask support() const;     // union of all blocks
  Mask prefix(int i) const; // union of the first i blocks
  Composition type() const;
  Flag opposite() const;    // blocks in reverse order
  std::vector<std::vector<int>> block_lists() const;
  std::string to_string() const;  // "({1},{2,3,4})"
  bool operator==(const Flag& o) const { return blocks_ == o.blocks_; }

 private:
  std::vector<Mask> blocks_;
};

std::ostream& operator<<(std::ostream& os, const Flag& f);

// Enumeration order for flags: block count ascending, then lexicographic on
// the sequence of sorted blocks.
bool flag_less(const Flag& a, const Flag& b);

bool is_ideal(const Poset& p, Mask s);
bool is_ideal(const Poset& p, const std::vector<int>& s);
std::vector<Mask> ideals(const Poset& p);  // all ideals, ascending mask order

bool is_ideal_flag(const Poset& p, const Flag& f);
std::vector<Flag> ideal_flags(const Poset& p);  // sorted by flag_less
// Walk without materializing; visit order is unspecified but deterministic.
void for_each_ideal_flag(const Poset& p, const std::function<void(const Flag&)>& fn);
// Same walk restricted to flags whose blocks are antichains of p (exactly the
// flags with discrete quotient).
void for_each_discrete_ideal_flag(const Poset& p, const std::function<void(const Flag&)>& fn);

// Relations of p within the blocks of f, on the same ground set; FlagError if
// f is not a flag of ideals of p.
Poset quotient(const Poset& p, const Flag& f);

std::vector<Mask> connected_components(const Poset& p);  // by smallest element
int component_count(const Poset& p);
int component_count_within(const Poset& p, Mask s);

int rank(const Poset& p);                           // n - c(P)
int rank_of_flag(const Poset& p, const Flag& f);    // n - sum of c(P restricted to blocks)

Poset opposite(const Poset& p);
Poset disjoint_union(const Poset& a, const Poset& b);      // b shifted by |a|
Poset series_composition(const Poset& a, const Poset& b);  // all of a below all of b
Poset restriction(const Poset& p, Mask s);  // relabelled order-isomorphically onto {1..|s|}
Poset relabel(const Poset& p, const std::vector<int>& perm);  // perm[i-1] = new label of i

Mask maximal_elements(const Poset& p);
std::vector<std::pair<int, int>> cover_pairs(const Poset& p);
bool hasse_is_tree(const Poset& p);

std::vector<std::vector<int>> linear_extensions(const Poset& p);  // lexicographic

bool is_well_labelled(const Poset& p);  // i <_P j implies i > j as integers
Poset well_labelling(const Poset& p);

// Simple cycles (length >= 3, distinct vertices) of the comparability graph,
// each listed once as a 1-based vertex sequence.
std::vector<std::vector<int>> comparability_cycles(const Poset& p);

// q must be a subrelation of p on the same ground set. True iff every cycle
// has all its down-edges in q exactly when it has all its up-edges in q.
bool is_positive_subposet(const Poset& p, const Poset& q);
bool is_positive_subposet(const Poset& p, const Poset& q,
                          const std::vector<std::vector<int>>& cycles);

// Isomorphism-invariant encoding: minimum relation-matrix code over all n!
// relabelings, one size byte followed by 8 code bytes. SizeError for n > 8.
std::string canonical_form(const Poset& p);

// One canonically labelled representative per isomorphism class, sorted by
// canonical form. SizeError for n > 7.
std::vector<Poset> all_posets(int n);

}  // namespace qpos
