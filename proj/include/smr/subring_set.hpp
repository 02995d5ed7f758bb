#ifndef SMR_SUBRING_SET_HPP
#define SMR_SUBRING_SET_HPP

// Explicit finite sets of matrices over Z_m, stored as a membership bitset
// over the code space [0, m^(n^2)). The code space must stay within the
// explicit-set cap 2^max_set_bits (default 2^24).

#include <cstdint>
#include <vector>

#include "smr/matrices.hpp"
#include "smr/rings.hpp"

namespace smr {

inline constexpr unsigned kDefaultMaxSetBits = 24;

enum class Provenance {
  unspecified,
  structural,
  generated,
  conjugate,
  intersection,
  defined_by_ideal_matrix,
};

class SubringSet {
 public:
  SubringSet(int n, RingCtx ctx, unsigned max_set_bits = kDefaultMaxSetBits);

  int n() const { return n_; }
  std::uint32_t m() const { return m_; }
  RingCtx ctx() const { return RingCtx(m_); }
  std::uint64_t capacity() const { return capacity_; }
  std::uint64_t size() const { return size_; }

  bool contains(std::uint64_t code) const {
    return (words_[code >> 6] >> (code & 63)) & 1u;
  }
  void insert(std::uint64_t code);
  bool contains_matrix(const Matrix& a) const { return contains(encode_matrix(a)); }

  // Member codes in ascending order.
  std::vector<std::uint64_t> members() const;
  template <typename Fn>
  void for_each_member(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int bit = __builtin_ctzll(word);
        fn(static_cast<std::uint64_t>(w) * 64 + static_cast<std::uint64_t>(bit));
        word &= word - 1;
      }
    }
  }

  bool is_subset_of(const SubringSet& other) const;
  bool has_member_above(std::uint64_t code) const;

  // FNV-1a 64 over the ascending member codes, each taken as 8 bytes
  // little-endian.
  std::uint64_t fnv1a_digest() const;

  // Lexicographic order on the ascending member sequences.
  static bool member_lex_less(const SubringSet& a, const SubringSet& b);

  // Equality compares the member sets (and n, m); provenance is metadata.
  friend bool operator==(const SubringSet& a, const SubringSet& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.words_ == b.words_;
  }

  Provenance provenance = Provenance::unspecified;

 private:
  int n_;
  std::uint32_t m_;
  std::uint64_t capacity_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace smr

#endif  // SMR_SUBRING_SET_HPP
