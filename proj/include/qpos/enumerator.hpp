#pragma once

#include <vector>

#include "qpos/expansion.hpp"
#include "qpos/poset.hpp"
#include "qpos/qpoly.hpp"
#include "qpos/qsym.hpp"

namespace qpos {

// Weighted quasisymmetric enumerator of the poset cone: the sum over flags of
// ideals of q^(rank of flag) * M_(type of flag). Homogeneous of weight n.
QSym fq_poset_cone(const Poset& p);

// Coefficient of M_alpha in fq_poset_cone(p); WeightError unless
// weight(alpha) = n.
QPoly zeta_coefficient(const Poset& p, const Composition& alpha);

// Face-count polynomial of the poset cone, computed algebraically as
// (-1)^n ps1(F_{-q})(-1). The (-1)^(n-1) prefactor variant fails already on
// the 2-chain, whose cone is a ray with f = 1 + q.
QPoly f_polynomial(const Poset& p);

// The q = 0 part: the sum of M_(type) over flags with discrete quotient.
QSym f0(const Poset& p);

// All maps f: {1..n} -> {1..m} with f(i) <= f(j) when i <_P j and i < j as
// integers, f(i) < f(j) when i <_P j and i > j as integers; the labels of p
// double as the integer order.
TruncatedExpansion ppartitions_bruteforce(const Poset& labelled, int m);

// Sum over linear extensions (i_1..i_n) of the fundamental function indexed
// by the descent positions {a : i_a > i_(a+1)}, expanded in the M basis.
QSym ppartitions_via_extensions(const Poset& labelled);

// The flag-side counterpart of antipode(fq_poset_cone(p)):
// (-1)^n * sum over flags G of f(cone of quotient, -q) * M_(type of reversed G).
QSym antipode_rhs(const Poset& p);

// fq of the opposite poset equals the composition-reversal of fq.
bool opposite_identity_check(const Poset& p);

// Closed forms for the named families, assembled from shuffle powers, append
// and concatenation; fixtures to compare against fq_poset_cone.
QSym closed_form_star(int n);                    // n >= 1
QSym closed_form_chain(int n);                   // n >= 1
QSym closed_form_bipartite(int m, int n);        // m, n >= 1
QPoly fpoly_closed_form_bipartite(int m, int n); // m, n >= 1

// f0 of a series composition is the concatenation of the f0's.
bool series_identity_check(const std::vector<Poset>& parts);

// Bottom-up recursion over subsets of maximal elements; equals f0 on
// connected posets. ConnectivityError on disconnected input (n >= 2).
QSym max_recursion(const Poset& p);

bool hopf_product_check(const Poset& a, const Poset& b);
bool hopf_coproduct_check(const Poset& p);
bool hopf_morphism_checks(const Poset& a, const Poset& b);

}  // namespace qpos
