#ifndef SMR_RELATIONS_HPP
#define SMR_RELATIONS_HPP

// Finite binary relations on {0..n-1} (n <= 8), pre-order / partial-order /
// linear-order predicates, reflexive-transitive closure, meets and joins in
// the pre-order lattice, linear extensions, and relabeling by permutations.
//
// A relation is stored as an n^2-bit incidence mask: bit i*n+j (row-major)
// is set iff i is related to j. That integer doubles as the canonical
// encoding used for sorting and hashing. Indices are 0-based throughout the
// API; the text and JSON forms are 1-based.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "smr/parallel.hpp"

namespace smr {

inline constexpr int kMaxIndices = 8;

struct RelationFlags {
  bool reflexive = false;
  bool transitive = false;
  bool preorder = false;
  bool order = false;
  bool linear = false;
};

// Bijection of {0..n-1}, stored as its image array.
class Permutation {
 public:
  static Permutation identity(int n);
  static Permutation from_image(const std::vector<int>& image);

  int n() const { return n_; }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }

  Permutation inverse() const;
  // (s.compose(t))(i) = s(t(i))
  Permutation compose(const Permutation& inner) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  int n_ = 0;
  std::array<std::uint8_t, kMaxIndices> image_{};
};

// All n! permutations in lexicographic order of their image arrays.
std::vector<Permutation> all_permutations(int n);

class Relation {
 public:
  Relation(int n, std::uint64_t bits);

  static Relation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  static Relation equality(int n);
  static Relation full(int n);
  // i related to j iff i <= j.
  static Relation natural_order(int n);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool related(int i, int j) const {
    return (bits_ >> (i * n_ + j)) & 1u;
  }
  std::size_t pair_count() const;
  // Related pairs in row-major order, 0-based.
  std::vector<std::pair<int, int>> pairs() const;
  bool contains(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  int n_;
  std::uint64_t bits_;
};

RelationFlags classify(const Relation& r);

// Least pre-order containing r: diagonal added, then the Warshall
// reachability fixpoint.
Relation rt_closure(const Relation& r);

// Lattice operations on pre-orders. Both arguments must be pre-orders on
// the same index set.
Relation preorder_meet(const Relation& a, const Relation& b);
Relation preorder_join(const Relation& a, const Relation& b);

// All pre-orders on {0..n-1}, ascending by incidence encoding. n <= 4.
std::vector<Relation> enumerate_preorders(int n, Threading threading = default_threading());

// All linear orders containing the partial order r, ascending by encoding.
std::vector<Relation> linear_extensions(const Relation& r);

// Image relation: (s(i), s(j)) related iff (i, j) is in r.
Relation relabel(const Relation& r, const Permutation& s);

// relabel(natural_order, s): the linear order ranking s(0) < s(1) < ...
Relation linear_order_of(const Permutation& s);

// Inverse of linear_order_of. r must be a linear order.
Permutation permutation_of_linear_order(const Relation& r);

}  // namespace smr

#endif  // SMR_RELATIONS_HPP
