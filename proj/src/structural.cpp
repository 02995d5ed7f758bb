#include "smr/structural.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

#include "smr/errors.hpp"

namespace smr {

namespace {

// Additive span of a growing generator list, kept as a membership bitset
// plus the decoded member and generator lists.
class AdditiveSpan {
 public:
  AdditiveSpan(int n, RingCtx ctx, unsigned max_set_bits) : set_(n, ctx, max_set_bits) {
    set_.insert(0);
    members_.emplace_back(n, ctx);
  }

  const SubringSet& set() const { return set_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  bool contains(const Matrix& a) const { return set_.contains(encode_matrix(a)); }

  // Extends the span by g unless it is already spanned. Returns true when
  // the span grew.
  bool add(const Matrix& g) {
    if (contains(g)) return false;
    generators_.push_back(g);
    const std::vector<Matrix> base = members_;
    Matrix shift = g;
    while (!contains(shift)) {
      for (const Matrix& b : base) {
        const Matrix x = mat_add(b, shift);
        const std::uint64_t code = encode_matrix(x);
        if (!set_.contains(code)) {
          set_.insert(code);
          members_.push_back(x);
        }
      }
      shift = mat_add(shift, g);
    }
    return true;
  }

 private:
  SubringSet set_;
  std::vector<Matrix> members_;
  std::vector<Matrix> generators_;
};

// 63 disables the explicit-set cap for internal scratch sets whose capacity
// was already vetted by the caller.
constexpr unsigned kVettedBits = 62;

}  // namespace

SubringSet matrix_set_of_relation(const Relation& r, RingCtx ctx, unsigned max_set_bits) {
  const int n = r.n();
  SubringSet out(n, ctx, max_set_bits);

  std::vector<std::uint64_t> weights;
  std::uint64_t weight = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (r.related(i, j)) weights.push_back(weight);
      weight *= ctx.m;
    }
  }

  // Odometer over the digits at the allowed positions.
  std::vector<std::uint32_t> digit(weights.size(), 0);
  std::uint64_t code = 0;
  while (true) {
    out.insert(code);
    std::size_t t = 0;
    for (; t < digit.size(); ++t) {
      if (++digit[t] < ctx.m) {
        code += weights[t];
        break;
      }
      digit[t] = 0;
      code -= static_cast<std::uint64_t>(ctx.m - 1) * weights[t];
    }
    if (t == digit.size()) break;
  }
  return out;
}

SubringSet structural_ring(const Relation& preorder, RingCtx ctx, unsigned max_set_bits) {
  if (!classify(preorder).preorder) {
    throw InvalidInputError("structural_ring requires a pre-order");
  }
  SubringSet out = matrix_set_of_relation(preorder, ctx, max_set_bits);
  out.provenance = Provenance::structural;
  return out;
}

bool is_subring(const SubringSet& s) {
  const int n = s.n();
  const RingCtx ctx = s.ctx();
  if (!s.contains(encode_matrix(Matrix::identity(n, ctx)))) return false;
  if (!s.contains(0)) return false;

  // Additive closure: the span of the members must not leave the set. The
  // span always contains every member, so equality of sizes decides.
  AdditiveSpan span(n, ctx, kVettedBits);
  bool escaped = false;
  s.for_each_member([&](std::uint64_t code) {
    if (escaped || span.set().contains(code)) return;
    span.add(decode_matrix(code, n, ctx));
    if (span.set().size() > s.size()) escaped = true;
  });
  if (escaped || span.set().size() != s.size()) return false;

  // A finite additive subgroup is closed under negation; multiplicative
  // closure follows from closure on the additive generators.
  const std::vector<Matrix>& gens = span.generators();
  for (const Matrix& a : gens)
    for (const Matrix& b : gens)
      if (!s.contains(encode_matrix(mat_mul(a, b)))) return false;
  return true;
}

SubringSet generated_subring(const std::vector<Matrix>& generators, int n, RingCtx ctx,
                             unsigned max_set_bits) {
  for (const Matrix& g : generators) {
    if (g.n() != n || g.m() != ctx.m) {
      throw InvalidInputError("generated_subring: generator shape or modulus mismatch");
    }
  }
  AdditiveSpan span(n, ctx, max_set_bits);
  span.add(Matrix::identity(n, ctx));
  for (const Matrix& g : generators) span.add(g);

  // Products of additive generators that escape the span become new
  // generators; repeat until multiplicatively closed.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Matrix> gens = span.generators();
    for (const Matrix& a : gens) {
      for (const Matrix& b : gens) {
        const Matrix p = mat_mul(a, b);
        if (!span.contains(p)) {
          span.add(p);
          grew = true;
        }
      }
    }
  }
  SubringSet out = span.set();
  out.provenance = Provenance::generated;
  return out;
}

SubringSet subring_intersection(const SubringSet& a, const SubringSet& b) {
  if (a.n() != b.n() || a.m() != b.m()) {
    throw InvalidInputError("subring_intersection: shape or modulus mismatch");
  }
  SubringSet out(a.n(), a.ctx(), kVettedBits);
  a.for_each_member([&](std::uint64_t code) {
    if (b.contains(code)) out.insert(code);
  });
  out.provenance = Provenance::intersection;
  return out;
}

SubringSet conjugate_subring(const Matrix& p, const SubringSet& s) {
  if (p.n() != s.n() || p.m() != s.m()) {
    throw InvalidInputError("conjugate_subring: shape or modulus mismatch");
  }
  if (!is_permutation_matrix(p)) {
    throw InvalidInputError("conjugate_subring requires a permutation matrix");
  }
  const int n = s.n();
  const RingCtx ctx = s.ctx();
  const Permutation perm = permutation_of_matrix(p);
  const Matrix p_inv = permutation_matrix(perm.inverse(), ctx);
  SubringSet out(n, ctx, kVettedBits);
  s.for_each_member([&](std::uint64_t code) {
    const Matrix a = decode_matrix(code, n, ctx);
    out.insert(encode_matrix(mat_mul(mat_mul(p, a), p_inv)));
  });
  out.provenance = Provenance::conjugate;
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of the subrings containing all diagonal matrices.
//
// Any such subring N decomposes as N = D + H where D is the diagonal ring
// and H = N cut to the strictly off-diagonal matrices, an additive subgroup
// of the quotient (Z_m)^k with k = n^2 - n. Conversely D + H is a candidate
// for every subgroup H; it is a subring iff it is multiplicatively closed,
// which is decided on the additive generators.

namespace {

struct QuotientSpace {
  int n;
  std::uint32_t m;
  int k;                                  // number of off-diagonal positions
  std::uint64_t size;                     // m^k
  std::vector<int> position;              // off-diagonal cell index i*n+j per digit
  std::vector<std::uint64_t> cell_weight; // m^(i*n+j) per digit

  QuotientSpace(int n_, RingCtx ctx) : n(n_), m(ctx.m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) position.push_back(i * n + j);
    k = static_cast<int>(position.size());
    size = 1;
    for (int t = 0; t < k; ++t) size *= m;  // capped by callers
    std::uint64_t w = 1;
    int cell = 0;
    for (int t = 0; t < k; ++t) {
      while (cell < position[static_cast<std::size_t>(t)]) {
        w *= m;
        ++cell;
      }
      cell_weight.push_back(w);
    }
  }

  std::uint32_t digit(std::uint64_t qcode, int t) const {
    for (int u = 0; u < t; ++u) qcode /= m;
    return static_cast<std::uint32_t>(qcode % m);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    std::uint64_t w = 1;
    for (int t = 0; t < k; ++t) {
      out += ((a % m + b % m) % m) * w;
      a /= m;
      b /= m;
      w *= m;
    }
    return out;
  }

  // Matrix code of the lift with zero diagonal.
  std::uint64_t lift_code(std::uint64_t qcode) const {
    std::uint64_t code = 0;
    for (int t = 0; t < k; ++t) {
      code += (qcode % m) * cell_weight[static_cast<std::size_t>(t)];
      qcode /= m;
    }
    return code;
  }

  // Off-diagonal projection of a matrix.
  std::uint64_t project(const Matrix& a) const {
    std::uint64_t qcode = 0;
    std::uint64_t w = 1;
    for (int t = 0; t < k; ++t) {
      const int cell = position[static_cast<std::size_t>(t)];
      qcode += static_cast<std::uint64_t>(a(cell / n, cell % n)) * w;
      w *= m;
    }
    return qcode;
  }
};

struct Subgroup {
  std::vector<std::uint64_t> mask;      // membership bitset over the quotient
  std::vector<std::uint64_t> gens;      // quotient codes generating it

  bool test(std::uint64_t q) const { return (mask[q >> 6] >> (q & 63)) & 1u; }
  void set(std::uint64_t q) { mask[q >> 6] |= std::uint64_t{1} << (q & 63); }
};

Subgroup trivial_subgroup(std::uint64_t qsize) {
  Subgroup h;
  h.mask.assign(static_cast<std::size_t>((qsize + 63) / 64), 0);
  h.set(0);
  return h;
}

std::vector<std::uint64_t> subgroup_elements(const Subgroup& h, std::uint64_t qsize) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 0; q < qsize; ++q)
    if (h.test(q)) out.push_back(q);
  return out;
}

// Subgroup generated by h and the extra element x.
Subgroup extend_subgroup(const QuotientSpace& qs, const Subgroup& h, std::uint64_t x) {
  Subgroup out = h;
  out.gens.push_back(x);
  const std::vector<std::uint64_t> base = subgroup_elements(h, qs.size);
  std::uint64_t shift = x;
  while (!out.test(shift)) {
    for (std::uint64_t e : base) out.set(qs.add(e, shift));
    shift = qs.add(shift, x);
  }
  return out;
}

constexpr std::size_t kSubgroupSearchCap = std::size_t{1} << 17;

// All additive subgroups of (Z_m)^k by breadth-first generator closure.
std::vector<Subgroup> subgroups_by_closure(const QuotientSpace& qs) {
  std::vector<Subgroup> found;
  std::set<std::vector<std::uint64_t>> seen;
  found.push_back(trivial_subgroup(qs.size));
  seen.insert(found.front().mask);
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Subgroup current = found[head];
    for (std::uint64_t x = 1; x < qs.size; ++x) {
      if (current.test(x)) continue;
      Subgroup next = extend_subgroup(qs, current, x);
      if (seen.insert(next.mask).second) {
        found.push_back(std::move(next));
        if (found.size() > kSubgroupSearchCap) {
          throw ResourceCapError("subgroup enumeration exceeded " +
                                 std::to_string(kSubgroupSearchCap) + " subgroups");
        }
      }
    }
  }
  return found;
}

// All subgroups when the quotient has at most 16 elements: filter the
// 2^|quotient| subsets directly.
std::vector<Subgroup> subgroups_by_subset_filter(const QuotientSpace& qs, Threading threading) {
  const std::uint32_t q = static_cast<std::uint32_t>(qs.size);
  std::vector<std::uint32_t> add_table(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      add_table[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint32_t>(qs.add(a, b));

  const std::uint64_t total = std::uint64_t{1} << q;
  std::vector<std::uint8_t> keep(total, 0);
  parallel_for(total, threading, [&](std::uint64_t mask) {
    if (!(mask & 1u)) return;  // must contain 0
    for (std::uint32_t a = 0; a < q; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (std::uint32_t b = a; b < q; ++b) {
        if (!((mask >> b) & 1u)) continue;
        if (!((mask >> add_table[static_cast<std::size_t>(a) * q + b]) & 1u)) return;
      }
    }
    keep[mask] = 1;
  });

  std::vector<Subgroup> found;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    if (!keep[mask]) continue;
    Subgroup h = trivial_subgroup(qs.size);
    // Greedy generators: grow the span by each member it does not yet hold.
    for (std::uint32_t x = 1; x < q; ++x) {
      if (!((mask >> x) & 1u) || h.test(x)) continue;
      h = extend_subgroup(qs, h, x);
    }
    found.push_back(std::move(h));
  }
  return found;
}

// All linear subspaces of (F_p)^k via reduced echelon bases.
std::vector<Subgroup> subgroups_by_echelon(const QuotientSpace& qs) {
  const std::uint32_t p = qs.m;
  const int k = qs.k;
  std::vector<Subgroup> found;
  found.push_back(trivial_subgroup(qs.size));

  std::vector<int> pivots;
  for (std::uint32_t pivot_set = 1; pivot_set < (1u << k); ++pivot_set) {
    pivots.clear();
    for (int c = 0; c < k; ++c)
      if ((pivot_set >> c) & 1u) pivots.push_back(c);
    const int d = static_cast<int>(pivots.size());

    // Free cells: in row r, the columns after pivot r that are not pivots.
    std::vector<std::pair<int, int>> free_cells;
    for (int r = 0; r < d; ++r)
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < k; ++c)
        if (!((pivot_set >> c) & 1u)) free_cells.emplace_back(r, c);

    std::vector<std::uint32_t> free_val(free_cells.size(), 0);
    while (true) {
      std::vector<std::vector<std::uint32_t>> rows(
          static_cast<std::size_t>(d), std::vector<std::uint32_t>(static_cast<std::size_t>(k), 0));
      for (int r = 0; r < d; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
      for (std::size_t t = 0; t < free_cells.size(); ++t)
        rows[static_cast<std::size_t>(free_cells[t].first)][static_cast<std::size_t>(free_cells[t].second)] = free_val[t];

      Subgroup h = trivial_subgroup(qs.size);
      for (int r = 0; r < d; ++r) {
        std::uint64_t qcode = 0;
        std::uint64_t w = 1;
        for (int c = 0; c < k; ++c) {
          qcode += rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * w;
          w *= p;
        }
        h = extend_subgroup(qs, h, qcode);
      }
      found.push_back(std::move(h));

      std::size_t t = 0;
      for (; t < free_val.size(); ++t) {
        if (++free_val[t] < p) break;
        free_val[t] = 0;
      }
      if (t == free_val.size()) break;
    }
  }
  return found;
}

}  // namespace

std::vector<SubringSet> enumerate_diagonal_subrings(int n, RingCtx ctx, Threading threading,
                                                    unsigned max_set_bits) {
  // Materialized survivors live in the full code space; enforce its cap
  // before doing any enumeration work.
  const std::uint64_t space = code_space_size(n, ctx);
  if (max_set_bits > 62 || space > (std::uint64_t{1} << max_set_bits)) {
    throw ResourceCapError("matrix code space exceeds the explicit-set cap");
  }

  const QuotientSpace qs(n, ctx);
  std::vector<Subgroup> candidates;
  if (is_prime_modulus(ctx.m) && qs.k <= 6) {
    candidates = subgroups_by_echelon(qs);
  } else if (qs.size <= 16) {
    candidates = subgroups_by_subset_filter(qs, threading);
  } else if (n == 2 && qs.size <= 65536) {
    // For composite m the subgroup lattice of (Z_m)^k is walked by closure
    // search. Beyond k = 2 the subgroup count explodes, so only the n = 2
    // quotient is admitted.
    candidates = subgroups_by_closure(qs);
  } else {
    throw ResourceCapError("off-diagonal quotient of size " + std::to_string(qs.size) +
                           " over a composite modulus is beyond the enumeration caps");
  }

  // Additive generators of the candidate D + H: the diagonal units and the
  // lifted subgroup generators. Multiplicative closure is decided on them.
  std::vector<Matrix> diag_units;
  for (int i = 0; i < n; ++i) diag_units.push_back(Matrix::unit(n, ctx, i, i));

  std::vector<std::uint8_t> keep(candidates.size(), 0);
  parallel_for(candidates.size(), threading, [&](std::uint64_t idx) {
    const Subgroup& h = candidates[static_cast<std::size_t>(idx)];
    std::vector<Matrix> gens = diag_units;
    for (std::uint64_t q : h.gens) gens.push_back(decode_matrix(qs.lift_code(q), n, ctx));
    for (const Matrix& a : gens) {
      for (const Matrix& b : gens) {
        if (!h.test(qs.project(mat_mul(a, b)))) return;
      }
    }
    keep[idx] = 1;
  });

  // Diagonal digit weights for materializing D + H.
  std::vector<std::uint64_t> diag_weight;
  {
    std::uint64_t w = 1;
    for (int cell = 0; cell < n * n; ++cell) {
      if (cell % (n + 1) == 0) diag_weight.push_back(w);
      w *= ctx.m;
    }
  }

  std::vector<SubringSet> out;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    if (!keep[idx]) continue;
    SubringSet s(n, ctx, max_set_bits);
    for (std::uint64_t q : subgroup_elements(candidates[idx], qs.size)) {
      const std::uint64_t base = qs.lift_code(q);
      std::vector<std::uint32_t> digit(static_cast<std::size_t>(n), 0);
      std::uint64_t code = base;
      while (true) {
        s.insert(code);
        std::size_t t = 0;
        for (; t < digit.size(); ++t) {
          if (++digit[t] < ctx.m) {
            code += diag_weight[t];
            break;
          }
          digit[t] = 0;
          code -= static_cast<std::uint64_t>(ctx.m - 1) * diag_weight[t];
        }
        if (t == digit.size()) break;
      }
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), SubringSet::member_lex_less);
  return out;
}

}  // namespace smr
