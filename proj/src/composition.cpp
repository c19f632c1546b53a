#include "qpos/composition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qpos/errors.hpp"

namespace qpos {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

int Composition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Composition::descent_set() const {
  std::vector<int> d;
  int sum = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) {
    sum += parts_[i];
    d.push_back(sum);
  }
  return d;
}

Composition Composition::from_descents(int n, std::vector<int> descents) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  std::sort(descents.begin(), descents.end());
  descents.erase(std::unique(descents.begin(), descents.end()), descents.end());
  for (int d : descents) {
    if (d < 1 || d >= n) throw std::invalid_argument("descent outside 1..n-1");
  }
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    parts.push_back(d - prev);
    prev = d;
  }
  if (n > prev) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

Composition Composition::reversed() const {
  std::vector<int> p(parts_.rbegin(), parts_.rend());
  return Composition(std::move(p));
}

Composition Composition::concat(const Composition& tail) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), tail.parts_.begin(), tail.parts_.end());
  return Composition(std::move(p));
}

Composition Composition::take(int k) const {
  if (k < 0 || k > length()) throw std::out_of_range("take: bad prefix length");
  return Composition(std::vector<int>(parts_.begin(), parts_.begin() + k));
}

Composition Composition::drop(int k) const {
  if (k < 0 || k > length()) throw std::out_of_range("drop: bad prefix length");
  return Composition(std::vector<int>(parts_.begin() + k, parts_.end()));
}

std::strong_ordering Composition::operator<=>(const Composition& other) const {
  if (auto c = weight() <=> other.weight(); c != 0) return c;
  if (auto c = length() <=> other.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end());
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Composition& a) {
  return os << a.to_string();
}

bool refinement_leq(const Composition& coarse, const Composition& fine) {
  if (coarse.weight() != fine.weight()) return false;
  std::vector<int> dc = coarse.descent_set();
  std::vector<int> df = fine.descent_set();
  return std::includes(df.begin(), df.end(), dc.begin(), dc.end());
}

namespace {

// Emits one composition of weight n per subset of the given descent positions.
std::vector<Composition> from_descent_subsets(int n, const std::vector<int>& positions) {
  std::vector<Composition> out;
  size_t m = positions.size();
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    std::vector<int> d;
    for (size_t i = 0; i < m; ++i) {
      if (mask & (size_t{1} << i)) d.push_back(positions[i]);
    }
    out.push_back(Composition::from_descents(n, std::move(d)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Composition> coarsenings_of(const Composition& a) {
  // Coarsenings keep a subset of the descents.
  std::vector<Composition> out = from_descent_subsets(a.weight(), a.descent_set());
  return out;
}

std::vector<Composition> refinements_of(const Composition& a) {
  // Refinements keep all of D(a) and add any subset of the rest of {1..n-1}.
  int n = a.weight();
  std::vector<int> base = a.descent_set();
  std::vector<int> rest;
  for (int d = 1; d < n; ++d) {
    if (!std::binary_search(base.begin(), base.end(), d)) rest.push_back(d);
  }
  std::vector<Composition> out;
  size_t m = rest.size();
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    std::vector<int> d = base;
    for (size_t i = 0; i < m; ++i) {
      if (mask & (size_t{1} << i)) d.push_back(rest[i]);
    }
    out.push_back(Composition::from_descents(n, std::move(d)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  std::vector<int> all;
  for (int d = 1; d < n; ++d) all.push_back(d);
  return from_descent_subsets(n, all);
}

}  // namespace qpos
