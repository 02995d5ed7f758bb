#ifndef SMR_STRUCTURAL_HPP
#define SMR_STRUCTURAL_HPP

// Structural matrix rings as explicit matrix sets: the set of matrices
// vanishing outside a relation, subring predicates, generated-subring
// closure, intersections, conjugation, and the enumeration of all subrings
// of M_n(Z_m) that contain the diagonal matrices.

#include <vector>

#include "smr/matrices.hpp"
#include "smr/parallel.hpp"
#include "smr/relations.hpp"
#include "smr/rings.hpp"
#include "smr/subring_set.hpp"

namespace smr {

// {A : A(i,j) = 0 unless i theta j} for a pre-order theta. The result is a
// subring of size m^|theta| containing the identity.
SubringSet structural_ring(const Relation& preorder, RingCtx ctx,
                           unsigned max_set_bits = kDefaultMaxSetBits);

// The same matrix set for an arbitrary relation, with no subring guarantee.
SubringSet matrix_set_of_relation(const Relation& r, RingCtx ctx,
                                  unsigned max_set_bits = kDefaultMaxSetBits);

// True iff s contains the identity and is closed under addition, negation
// and multiplication.
bool is_subring(const SubringSet& s);

// Least subring containing the generators and the identity.
SubringSet generated_subring(const std::vector<Matrix>& generators, int n, RingCtx ctx,
                             unsigned max_set_bits = kDefaultMaxSetBits);

SubringSet subring_intersection(const SubringSet& a, const SubringSet& b);

// {P A P^-1 : A in s} for a permutation matrix p.
SubringSet conjugate_subring(const Matrix& p, const SubringSet& s);

// Every subring of M_n(Z_m) containing all diagonal matrices, exactly once,
// sorted by member-set encoding. Such subrings correspond to additive
// subgroups of the off-diagonal quotient (Z_m)^(n^2-n) whose preimage is
// multiplicatively closed; the subgroups are enumerated by echelon-form
// bases when m is prime (n^2-n <= 6) and by closure search otherwise
// (quotient size capped at 2^16).
std::vector<SubringSet> enumerate_diagonal_subrings(int n, RingCtx ctx,
                                                    Threading threading = default_threading(),
                                                    unsigned max_set_bits = kDefaultMaxSetBits);

}  // namespace smr

#endif  // SMR_STRUCTURAL_HPP
