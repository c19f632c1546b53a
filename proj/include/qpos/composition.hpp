#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace qpos {

// A composition: finite ordered list of positive integer parts. The empty
// composition (weight 0) indexes the unit of the quasisymmetric algebra.
//
// Compositions of weight n are in bijection with subsets of {1..n-1} via the
// descent set D(a) = {a1, a1+a2, ...} of proper partial sums. The refinement
// order used throughout is: coarse <= fine iff D(coarse) subseteq D(fine).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  // Proper partial sums a1, a1+a2, ..., excluding the full weight.
  std::vector<int> descent_set() const;
  static Composition from_descents(int n, std::vector<int> descents);

  Composition reversed() const;
  Composition concat(const Composition& tail) const;
  Composition take(int k) const;  // first k parts
  Composition drop(int k) const;  // all but the first k parts

  // Total order: weight, then length, then lexicographic on parts. This is
  // the display and serialization order for quasisymmetric terms.
  std::strong_ordering operator<=>(const Composition& other) const;
  bool operator==(const Composition& other) const = default;

  std::string to_string() const;  // "[1,2,1]", "[]"

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Composition& a);

// coarse <= fine in refinement order; compositions of unequal weight are
// incomparable (returns false).
bool refinement_leq(const Composition& coarse, const Composition& fine);

std::vector<Composition> coarsenings_of(const Composition& a);  // all b <= a
std::vector<Composition> refinements_of(const Composition& a);  // all b >= a
std::vector<Composition> compositions_of(int n);                // all 2^(n-1), sorted

}  // namespace qpos
