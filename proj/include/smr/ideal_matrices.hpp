#ifndef SMR_IDEAL_MATRICES_HPP
#define SMR_IDEAL_MATRICES_HPP

// The ordered semiring of n x n matrices with ideal entries, the
// reflexive-transitive criterion U^2 + I <= U, the subring of M_n(Z_m)
// defined by such an entry pattern, and the extraction map recovering an
// ideal matrix from a subring that contains the diagonal matrices.

#include <array>
#include <cstdint>
#include <vector>

#include "smr/parallel.hpp"
#include "smr/relations.hpp"
#include "smr/rings.hpp"
#include "smr/subring_set.hpp"

namespace smr {

// Cap on divisor-tuple enumeration: d(m)^(n^2) <= 2^20.
inline constexpr std::uint64_t kRtEnumCap = std::uint64_t{1} << 20;

class IdealMatrix {
 public:
  // All entries the zero ideal.
  IdealMatrix(int n, RingCtx ctx);
  // Entries by canonical generator, row-major; each must divide m.
  IdealMatrix(int n, RingCtx ctx, const std::vector<std::uint32_t>& generators);

  // The multiplicatively neutral matrix: (1) on the diagonal, (0) off it.
  static IdealMatrix identity(int n, RingCtx ctx);

  int n() const { return n_; }
  std::uint32_t m() const { return m_; }
  RingCtx ctx() const { return RingCtx(m_); }
  Ideal entry(int i, int j) const { return Ideal(g_[static_cast<std::size_t>(i * n_ + j)], ctx()); }
  std::uint32_t generator(int i, int j) const { return g_[static_cast<std::size_t>(i * n_ + j)]; }
  void set_entry(int i, int j, const Ideal& ideal);

  friend bool operator==(const IdealMatrix&, const IdealMatrix&) = default;

 private:
  int n_;
  std::uint32_t m_;
  std::array<std::uint32_t, kMaxIndices * kMaxIndices> g_{};
};

// Entrywise ideal sum; the lattice join of the full semiring.
IdealMatrix imat_sum(const IdealMatrix& u, const IdealMatrix& v);
// Entry (i,j) = sum over k of U(i,k) V(k,j).
IdealMatrix imat_product(const IdealMatrix& u, const IdealMatrix& v);
// Entrywise inclusion.
bool imat_leq(const IdealMatrix& u, const IdealMatrix& v);
// Entrywise intersection; the lattice meet.
IdealMatrix imat_meet(const IdealMatrix& u, const IdealMatrix& v);

// U^2 + I <= U.
bool is_reflexive_transitive(const IdealMatrix& u);

// Least reflexive-transitive matrix above the entrywise sum of u and v:
// the fixpoint of w <- w^2 + w + I.
IdealMatrix rt_join(const IdealMatrix& u, const IdealMatrix& v);

// {A : A(i,j) in U(i,j) for all i,j}. Always an additive subgroup; a
// subring exactly when u is reflexive-transitive.
SubringSet defined_subring(const IdealMatrix& u, unsigned max_set_bits = kDefaultMaxSetBits);

// (1) at related positions, (0) elsewhere.
IdealMatrix preorder_to_imat(const Relation& preorder, RingCtx ctx);

// Entry (i,j) = the ideal {A(i,j) : A in s}. Requires s to be a subring
// containing all diagonal matrices.
IdealMatrix extract_imat(const SubringSet& s);

// All reflexive-transitive ideal matrices, ascending by row-major generator
// tuple.
std::vector<IdealMatrix> enumerate_rt_imats(int n, RingCtx ctx,
                                            Threading threading = default_threading());

struct SublatticeWitness {
  bool found = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t rt_count = 0;
  // Valid when found: rt matrices whose entrywise sum fails the criterion.
  std::vector<IdealMatrix> pair;
};

// Searches pairs of reflexive-transitive matrices for one whose entrywise
// sum is not reflexive-transitive, in ascending tuple order.
SublatticeWitness find_sublattice_witness(int n, RingCtx ctx);

}  // namespace smr

#endif  // SMR_IDEAL_MATRICES_HPP
