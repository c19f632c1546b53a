#pragma once

#include <vector>

#include "qpos/expansion.hpp"
#include "qpos/poset.hpp"
#include "qpos/qpoly.hpp"

namespace qpos {

// Positive integer weight vector (omega_1..omega_n) on the ground set.
using WeightVector = std::vector<int>;

// omega lies in the normal fan of the poset cone iff it is monotone:
// omega_i <= omega_j whenever i <_P j.
bool in_normal_fan(const Poset& p, const WeightVector& omega);

// Level sets of omega as an ordered partition, blocks by increasing value.
Flag level_flag(const WeightVector& omega);

// Brute-force integer-point accumulation over {1..m}^n: each monotone omega
// contributes q^(rank of its level flag) * x^omega. Must equal
// truncate(fq_poset_cone(p), m).
TruncatedExpansion fq_integer_points(const Poset& p, int m);

struct Face {
  Poset relation;  // a quotient of p, on the same ground set
  int dim;         // n - (components of the relation)
};

// Distinct quotients over all flags of ideals, each with its dimension,
// sorted by dimension then relation; the faces of the poset cone.
std::vector<Face> face_lattice(const Poset& p);

// Sum of q^dim over the face lattice.
QPoly face_count_polynomial(const Poset& p);

// The distinct-quotient face set must coincide with the set of transitively
// closed subrelations passing the positivity cycle test. SizeError for n > 4.
bool positive_subposet_cross_check(const Poset& p);

// For every distinct quotient Q: the signed flag count over flags with that
// quotient is (-1)^(n - dim Q). The n-1-dim exponent variant fails already on
// the 2-chain.
bool euler_flag_identity(const Poset& p);

}  // namespace qpos
