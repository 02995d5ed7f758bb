#include "smr/subring_set.hpp"

#include <string>

#include "smr/errors.hpp"

namespace smr {

SubringSet::SubringSet(int n, RingCtx ctx, unsigned max_set_bits)
    : n_(n), m_(ctx.m), capacity_(code_space_size(n, ctx)) {
  if (max_set_bits > 62 || capacity_ > (std::uint64_t{1} << max_set_bits)) {
    throw ResourceCapError("explicit matrix set of size m^(n^2) = " + std::to_string(capacity_) +
                           " exceeds the 2^" + std::to_string(max_set_bits) + " cap");
  }
  words_.assign(static_cast<std::size_t>((capacity_ + 63) / 64), 0);
}

void SubringSet::insert(std::uint64_t code) {
  if (code >= capacity_) throw InvalidInputError("matrix code out of range for this set");
  std::uint64_t& word = words_[code >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (code & 63);
  if (!(word & bit)) {
    word |= bit;
    ++size_;
  }
}

std::vector<std::uint64_t> SubringSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(size_));
  for_each_member([&](std::uint64_t code) { out.push_back(code); });
  return out;
}

bool SubringSet::has_member_above(std::uint64_t code) const {
  const std::size_t w0 = static_cast<std::size_t>(code >> 6);
  const int bit = static_cast<int>(code & 63);
  if (bit < 63 && (words_[w0] >> (bit + 1))) return true;
  for (std::size_t w = w0 + 1; w < words_.size(); ++w)
    if (words_[w]) return true;
  return false;
}

bool SubringSet::is_subset_of(const SubringSet& other) const {
  if (n_ != other.n_ || m_ != other.m_) {
    throw InvalidInputError("subset test between incompatible sets");
  }
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

std::uint64_t SubringSet::fnv1a_digest() const {
  std::uint64_t h = 14695981039346656037ull;
  for_each_member([&](std::uint64_t code) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (code >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  });
  return h;
}

bool SubringSet::member_lex_less(const SubringSet& a, const SubringSet& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_) {
    throw InvalidInputError("ordering comparison between incompatible sets");
  }
  // Compare the ascending member sequences lexicographically. The sequences
  // share their prefix below the lowest code at which the bitsets differ.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (!diff) continue;
    const int bit = __builtin_ctzll(diff);
    const std::uint64_t code = static_cast<std::uint64_t>(w) * 64 + static_cast<std::uint64_t>(bit);
    if ((a.words_[w] >> bit) & 1u) {
      // a owns the lowest differing code. It is the smaller sequence unless
      // b has already ended, in which case b is a proper prefix of a.
      return b.has_member_above(code);
    }
    return !a.has_member_above(code);
  }
  return false;
}

}  // namespace smr
