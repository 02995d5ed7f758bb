#include "smr/relations.hpp"

#include <algorithm>
#include <numeric>

#include "smr/errors.hpp"

namespace smr {

namespace {

void check_index_count(int n) {
  if (n < 1 || n > kMaxIndices) {
    throw InvalidInputError("index count must be between 1 and 8, got " + std::to_string(n));
  }
}

std::uint64_t full_mask(int n) {
  const int b = n * n;
  return b == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << b) - 1;
}

std::uint64_t diagonal_mask(int n) {
  std::uint64_t d = 0;
  for (int i = 0; i < n; ++i) d |= std::uint64_t{1} << (i * n + i);
  return d;
}

// Row i as an n-bit mask of successors.
std::uint64_t row_of(std::uint64_t bits, int n, int i) {
  return (bits >> (i * n)) & ((std::uint64_t{1} << n) - 1);
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_index_count(n);
  Permutation s;
  s.n_ = n;
  for (int i = 0; i < n; ++i) s.image_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return s;
}

Permutation Permutation::from_image(const std::vector<int>& image) {
  check_index_count(static_cast<int>(image.size()));
  const int n = static_cast<int>(image.size());
  std::uint32_t seen = 0;
  for (int v : image) {
    if (v < 0 || v >= n || (seen >> v) & 1u) {
      throw InvalidInputError("permutation image is not a bijection of {0..n-1}");
    }
    seen |= 1u << v;
  }
  Permutation s;
  s.n_ = n;
  for (int i = 0; i < n; ++i) s.image_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(image[static_cast<std::size_t>(i)]);
  return s;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.image_[image_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (n_ != inner.n_) throw InvalidInputError("permutation size mismatch in compose");
  Permutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.image_[static_cast<std::size_t>(i)] = image_[inner.image_[static_cast<std::size_t>(i)]];
  return r;
}

std::vector<Permutation> all_permutations(int n) {
  check_index_count(n);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_image(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

Relation::Relation(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_index_count(n);
  if (bits & ~full_mask(n)) {
    throw InvalidInputError("relation bits outside the n^2-bit incidence range");
  }
}

Relation Relation::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  check_index_count(n);
  std::uint64_t bits = 0;
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw InvalidInputError("relation pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") out of range for n=" + std::to_string(n));
    }
    bits |= std::uint64_t{1} << (i * n + j);
  }
  return Relation(n, bits);
}

Relation Relation::equality(int n) {
  check_index_count(n);
  return Relation(n, diagonal_mask(n));
}

Relation Relation::full(int n) {
  check_index_count(n);
  return Relation(n, full_mask(n));
}

Relation Relation::natural_order(int n) {
  check_index_count(n);
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) bits |= std::uint64_t{1} << (i * n + j);
  return Relation(n, bits);
}

std::size_t Relation::pair_count() const {
  return static_cast<std::size_t>(__builtin_popcountll(bits_));
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(pair_count());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (related(i, j)) out.emplace_back(i, j);
  return out;
}

bool Relation::contains(const Relation& other) const {
  if (n_ != other.n_) throw InvalidInputError("relation size mismatch in contains");
  return (other.bits_ & ~bits_) == 0;
}

RelationFlags classify(const Relation& r) {
  const int n = r.n();
  const std::uint64_t bits = r.bits();
  RelationFlags f;
  f.reflexive = (bits & diagonal_mask(n)) == diagonal_mask(n);

  f.transitive = true;
  for (int i = 0; i < n && f.transitive; ++i) {
    const std::uint64_t ri = row_of(bits, n, i);
    for (int j = 0; j < n; ++j) {
      if ((ri >> j) & 1u) {
        if (row_of(bits, n, j) & ~ri) {
          f.transitive = false;
          break;
        }
      }
    }
  }

  f.preorder = f.reflexive && f.transitive;

  bool antisymmetric = true;
  bool total = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool ij = r.related(i, j);
      const bool ji = r.related(j, i);
      if (ij && ji) antisymmetric = false;
      if (!ij && !ji) total = false;
    }
  }
  f.order = f.preorder && antisymmetric;
  f.linear = f.order && total;
  return f;
}

Relation rt_closure(const Relation& r) {
  const int n = r.n();
  std::array<std::uint64_t, kMaxIndices> row{};
  for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = row_of(r.bits(), n, i) | (std::uint64_t{1} << i);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((row[static_cast<std::size_t>(i)] >> k) & 1u) row[static_cast<std::size_t>(i)] |= row[static_cast<std::size_t>(k)];
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) bits |= row[static_cast<std::size_t>(i)] << (i * n);
  return Relation(n, bits);
}

namespace {

void check_preorder_args(const Relation& a, const Relation& b, const char* op) {
  if (a.n() != b.n()) throw InvalidInputError(std::string(op) + ": index-count mismatch");
  if (!classify(a).preorder || !classify(b).preorder) {
    throw InvalidInputError(std::string(op) + ": both arguments must be pre-orders");
  }
}

}  // namespace

Relation preorder_meet(const Relation& a, const Relation& b) {
  check_preorder_args(a, b, "preorder_meet");
  return Relation(a.n(), a.bits() & b.bits());
}

Relation preorder_join(const Relation& a, const Relation& b) {
  check_preorder_args(a, b, "preorder_join");
  return rt_closure(Relation(a.n(), a.bits() | b.bits()));
}

std::vector<Relation> enumerate_preorders(int n, Threading threading) {
  check_index_count(n);
  if (n > 4) {
    throw ResourceCapError("pre-order enumeration is capped at n <= 4, got n=" + std::to_string(n));
  }
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  std::vector<std::uint8_t> keep(total, 0);
  parallel_for(total, threading, [&](std::uint64_t code) {
    const Relation r(n, code);
    const RelationFlags f = classify(r);
    keep[code] = f.preorder ? 1 : 0;
  });
  std::vector<Relation> out;
  for (std::uint64_t code = 0; code < total; ++code)
    if (keep[code]) out.emplace_back(n, code);
  return out;
}

std::vector<Relation> linear_extensions(const Relation& r) {
  if (!classify(r).order) {
    throw InvalidInputError("linear_extensions requires a partial order");
  }
  std::vector<Relation> out;
  for (const Permutation& s : all_permutations(r.n())) {
    Relation lin = linear_order_of(s);
    if (lin.contains(r)) out.push_back(lin);
  }
  std::sort(out.begin(), out.end(),
            [](const Relation& x, const Relation& y) { return x.bits() < y.bits(); });
  return out;
}

Relation relabel(const Relation& r, const Permutation& s) {
  if (r.n() != s.n()) throw InvalidInputError("relabel: index-count mismatch");
  const int n = r.n();
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r.related(i, j)) bits |= std::uint64_t{1} << (s(i) * n + s(j));
  return Relation(n, bits);
}

Relation linear_order_of(const Permutation& s) {
  return relabel(Relation::natural_order(s.n()), s);
}

Permutation permutation_of_linear_order(const Relation& r) {
  if (!classify(r).linear) {
    throw InvalidInputError("permutation_of_linear_order requires a linear order");
  }
  const int n = r.n();
  // s(rank) = element; rank = number of strict predecessors.
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int rank = 0;
    for (int y = 0; y < n; ++y)
      if (y != x && r.related(y, x)) ++rank;
    image[static_cast<std::size_t>(rank)] = x;
  }
  return Permutation::from_image(image);
}

}  // namespace smr
