#include "smr/ideal_matrices.hpp"

#include <numeric>
#include <string>

#include "smr/errors.hpp"
#include "smr/matrices.hpp"
#include "smr/structural.hpp"

namespace smr {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxIndices) {
    throw InvalidInputError("ideal matrix size must be between 1 and 8, got " + std::to_string(n));
  }
}

void check_compatible(const IdealMatrix& u, const IdealMatrix& v, const char* op) {
  if (u.n() != v.n() || u.m() != v.m()) {
    throw InvalidInputError(std::string(op) + ": shape or modulus mismatch");
  }
}

}  // namespace

IdealMatrix::IdealMatrix(int n, RingCtx ctx) : n_(n), m_(ctx.m) {
  check_size(n);
  for (int k = 0; k < n * n; ++k) g_[static_cast<std::size_t>(k)] = m_;
}

IdealMatrix::IdealMatrix(int n, RingCtx ctx, const std::vector<std::uint32_t>& generators)
    : IdealMatrix(n, ctx) {
  if (generators.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InvalidInputError("ideal matrix generator list has wrong length");
  }
  for (std::size_t k = 0; k < generators.size(); ++k) {
    g_[k] = Ideal(generators[k], ctx).g();
  }
}

IdealMatrix IdealMatrix::identity(int n, RingCtx ctx) {
  IdealMatrix u(n, ctx);
  for (int i = 0; i < n; ++i) u.g_[static_cast<std::size_t>(i * n + i)] = 1;
  return u;
}

void IdealMatrix::set_entry(int i, int j, const Ideal& ideal) {
  if (ideal.m() != m_) throw InvalidInputError("ideal entry modulus mismatch");
  g_[static_cast<std::size_t>(i * n_ + j)] = ideal.g();
}

IdealMatrix imat_sum(const IdealMatrix& u, const IdealMatrix& v) {
  check_compatible(u, v, "imat_sum");
  IdealMatrix w(u.n(), u.ctx());
  for (int i = 0; i < u.n(); ++i)
    for (int j = 0; j < u.n(); ++j)
      w.set_entry(i, j, ideal_combine(IdealOp::sum, u.entry(i, j), v.entry(i, j)));
  return w;
}

IdealMatrix imat_product(const IdealMatrix& u, const IdealMatrix& v) {
  check_compatible(u, v, "imat_product");
  const int n = u.n();
  const RingCtx ctx = u.ctx();
  IdealMatrix w(n, ctx);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Ideal acc(ctx.m, ctx);  // zero ideal
      for (int k = 0; k < n; ++k) {
        acc = ideal_combine(IdealOp::sum, acc,
                            ideal_combine(IdealOp::product, u.entry(i, k), v.entry(k, j)));
      }
      w.set_entry(i, j, acc);
    }
  }
  return w;
}

bool imat_leq(const IdealMatrix& u, const IdealMatrix& v) {
  check_compatible(u, v, "imat_leq");
  for (int i = 0; i < u.n(); ++i)
    for (int j = 0; j < u.n(); ++j)
      if (!ideal_leq(u.entry(i, j), v.entry(i, j))) return false;
  return true;
}

IdealMatrix imat_meet(const IdealMatrix& u, const IdealMatrix& v) {
  check_compatible(u, v, "imat_meet");
  IdealMatrix w(u.n(), u.ctx());
  for (int i = 0; i < u.n(); ++i)
    for (int j = 0; j < u.n(); ++j)
      w.set_entry(i, j, ideal_combine(IdealOp::intersection, u.entry(i, j), v.entry(i, j)));
  return w;
}

bool is_reflexive_transitive(const IdealMatrix& u) {
  const IdealMatrix lhs = imat_sum(imat_product(u, u), IdealMatrix::identity(u.n(), u.ctx()));
  return imat_leq(lhs, u);
}

IdealMatrix rt_join(const IdealMatrix& u, const IdealMatrix& v) {
  check_compatible(u, v, "rt_join");
  const IdealMatrix identity = IdealMatrix::identity(u.n(), u.ctx());
  IdealMatrix w = imat_sum(u, v);
  // Entries only grow and live in a finite divisor lattice, so this
  // terminates at the least reflexive-transitive matrix above u + v.
  while (true) {
    const IdealMatrix next = imat_sum(imat_sum(imat_product(w, w), w), identity);
    if (next == w) return w;
    w = next;
  }
}

SubringSet defined_subring(const IdealMatrix& u, unsigned max_set_bits) {
  const int n = u.n();
  const RingCtx ctx = u.ctx();
  SubringSet out(n, ctx, max_set_bits);
  out.provenance = Provenance::defined_by_ideal_matrix;

  // Per position: the allowed residues (multiples of the entry generator)
  // and the positional weight.
  std::vector<std::vector<std::uint64_t>> allowed;
  std::vector<std::uint64_t> weights;
  std::uint64_t w = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<std::uint64_t> vals;
      for (std::uint32_t x : u.entry(i, j).elements()) vals.push_back(x);
      allowed.push_back(std::move(vals));
      weights.push_back(w);
      w *= ctx.m;
    }
  }

  std::vector<std::size_t> pick(allowed.size(), 0);
  std::uint64_t code = 0;
  while (true) {
    out.insert(code);
    std::size_t t = 0;
    for (; t < pick.size(); ++t) {
      const auto& vals = allowed[t];
      if (++pick[t] < vals.size()) {
        code += (vals[pick[t]] - vals[pick[t] - 1]) * weights[t];
        break;
      }
      code -= vals.back() * weights[t];
      pick[t] = 0;
    }
    if (t == pick.size()) break;
  }
  return out;
}

IdealMatrix preorder_to_imat(const Relation& preorder, RingCtx ctx) {
  if (!classify(preorder).preorder) {
    throw InvalidInputError("preorder_to_imat requires a pre-order");
  }
  const int n = preorder.n();
  IdealMatrix u(n, ctx);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (preorder.related(i, j)) u.set_entry(i, j, Ideal(1, ctx));
  return u;
}

IdealMatrix extract_imat(const SubringSet& s) {
  const int n = s.n();
  const RingCtx ctx = s.ctx();

  // Precondition: a subring containing every diagonal matrix.
  {
    std::vector<std::uint64_t> diag_weight;
    std::uint64_t w = 1;
    for (int cell = 0; cell < n * n; ++cell) {
      if (cell % (n + 1) == 0) diag_weight.push_back(w);
      w *= ctx.m;
    }
    std::vector<std::uint32_t> digit(static_cast<std::size_t>(n), 0);
    std::uint64_t code = 0;
    while (true) {
      if (!s.contains(code)) {
        throw InvalidInputError(
            "extract_imat: set is missing the diagonal matrix with code " + std::to_string(code));
      }
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
  if (!is_subring(s)) {
    throw InvalidInputError("extract_imat: set of size " + std::to_string(s.size()) +
                            " is not a subring");
  }

  // Entry (i,j) is generated by the gcd of all observed residues with m.
  std::vector<std::uint32_t> gens(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  s.for_each_member([&](std::uint64_t code) {
    for (std::size_t cell = 0; cell < gens.size(); ++cell) {
      gens[cell] = std::gcd(gens[cell], static_cast<std::uint32_t>(code % ctx.m));
      code /= ctx.m;
    }
  });
  for (std::uint32_t& g : gens) g = std::gcd(g, ctx.m);
  for (std::uint32_t& g : gens)
    if (g == 0) g = ctx.m;
  return IdealMatrix(n, ctx, gens);
}

namespace {

std::uint64_t divisor_tuple_space(int n, RingCtx ctx) {
  const std::uint64_t d = divisors_of(ctx.m).size();
  const std::uint64_t limit = std::uint64_t{1} << 40;  // beyond every cap
  std::uint64_t total = 1;
  for (int k = 0; k < n * n; ++k) {
    if (total > limit / d) return limit;
    total *= d;
  }
  return total;
}

// Ideal matrix for a mixed-radix divisor-index tuple. Index significance is
// row-major with entry (0,0) most significant, so ascending tuple_index
// yields ascending generator tuples.
IdealMatrix imat_of_tuple_index(std::uint64_t tuple_index, int n,
                                const std::vector<std::uint32_t>& divisors, RingCtx ctx) {
  const std::uint64_t d = divisors.size();
  std::vector<std::uint32_t> gens(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int cell = n * n - 1; cell >= 0; --cell) {
    gens[static_cast<std::size_t>(cell)] = divisors[static_cast<std::size_t>(tuple_index % d)];
    tuple_index /= d;
  }
  return IdealMatrix(n, ctx, gens);
}

}  // namespace

std::vector<IdealMatrix> enumerate_rt_imats(int n, RingCtx ctx, Threading threading) {
  check_size(n);
  const std::vector<std::uint32_t> divisors = divisors_of(ctx.m);
  const std::uint64_t total = divisor_tuple_space(n, ctx);
  if (total > kRtEnumCap) {
    throw ResourceCapError("ideal-matrix enumeration needs d^(n^2) <= 2^20; d=" +
                           std::to_string(divisors.size()) + ", n=" + std::to_string(n));
  }
  std::vector<std::uint8_t> keep(total, 0);
  parallel_for(total, threading, [&](std::uint64_t idx) {
    if (is_reflexive_transitive(imat_of_tuple_index(idx, n, divisors, ctx))) keep[idx] = 1;
  });
  std::vector<IdealMatrix> out;
  for (std::uint64_t idx = 0; idx < total; ++idx)
    if (keep[idx]) out.push_back(imat_of_tuple_index(idx, n, divisors, ctx));
  return out;
}

SublatticeWitness find_sublattice_witness(int n, RingCtx ctx) {
  check_size(n);
  const std::vector<std::uint32_t> divisors = divisors_of(ctx.m);
  const std::uint64_t total = divisor_tuple_space(n, ctx);
  constexpr std::uint64_t kCandidateCap = std::uint64_t{1} << 24;
  if (total > kCandidateCap) {
    throw ResourceCapError("sublattice witness search: divisor tuple space too large");
  }

  std::vector<IdealMatrix> rt;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    IdealMatrix u = imat_of_tuple_index(idx, n, divisors, ctx);
    if (is_reflexive_transitive(u)) rt.push_back(std::move(u));
  }

  SublatticeWitness result;
  result.rt_count = rt.size();
  constexpr std::uint64_t kPairBudget = 100'000'000;
  for (std::size_t i = 0; i < rt.size(); ++i) {
    for (std::size_t j = i; j < rt.size(); ++j) {
      if (++result.pairs_checked > kPairBudget) {
        throw ResourceCapError("sublattice witness search exhausted its pair budget");
      }
      if (!is_reflexive_transitive(imat_sum(rt[i], rt[j]))) {
        result.found = true;
        result.pair = {rt[i], rt[j]};
        return result;
      }
    }
  }
  return result;
}

}  // namespace smr
