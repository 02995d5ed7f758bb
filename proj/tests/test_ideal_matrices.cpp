#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "smr/errors.hpp"
#include "smr/ideal_matrices.hpp"
#include "smr/structural.hpp"
#include "oracles.hpp"

using namespace smr;

namespace {

IdealMatrix imat(int n, std::uint32_t m, const std::vector<std::uint32_t>& gens) {
  return IdealMatrix(n, RingCtx(m), gens);
}

std::vector<IdealMatrix> all_imats(int n, RingCtx ctx) {
  const std::vector<std::uint32_t> divisors = divisors_of(ctx.m);
  std::vector<IdealMatrix> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<std::uint32_t> gens;
    for (std::size_t t : pick) gens.push_back(divisors[t]);
    out.push_back(IdealMatrix(n, ctx, gens));
    std::size_t t = 0;
    for (; t < pick.size(); ++t) {
      if (++pick[t] < divisors.size()) break;
      pick[t] = 0;
    }
    if (t == pick.size()) break;
  }
  return out;
}

// Entry sets of the product computed through explicit element sets.
std::vector<std::uint32_t> product_generators_by_sets(const IdealMatrix& u, const IdealMatrix& v) {
  const std::uint32_t m = u.m();
  std::vector<std::uint32_t> out;
  for (int i = 0; i < u.n(); ++i) {
    for (int j = 0; j < u.n(); ++j) {
      std::set<std::uint32_t> acc{0};
      for (int k = 0; k < u.n(); ++k) {
        const auto a = oracle::principal_ideal_elements(u.generator(i, k), m);
        const auto b = oracle::principal_ideal_elements(v.generator(k, j), m);
        acc = oracle::set_sum(acc, oracle::set_product(a, b, m), m);
      }
      out.push_back(oracle::canonical_generator(acc, m));
    }
  }
  return out;
}

std::vector<std::uint32_t> generator_grid(const IdealMatrix& u) {
  std::vector<std::uint32_t> out;
  for (int i = 0; i < u.n(); ++i)
    for (int j = 0; j < u.n(); ++j) out.push_back(u.generator(i, j));
  return out;
}

}  // namespace

TEST_CASE("construction and the neutral matrix") {
  const RingCtx z4(4);
  const IdealMatrix id = IdealMatrix::identity(2, z4);
  CHECK(id.generator(0, 0) == 1);
  CHECK(id.generator(0, 1) == 4);
  CHECK(id.entry(0, 1).is_zero());
  CHECK_THROWS_AS(imat(2, 4, {1, 3, 4, 1}), InvalidInputError);  // 3 does not divide 4
  CHECK_THROWS_AS(imat(2, 4, {1, 2, 4}), InvalidInputError);
}

TEST_CASE("sum and product against the element-set oracle") {
  const IdealMatrix u = imat(2, 4, {1, 2, 4, 1});
  CHECK(imat_product(u, u) == u);

  const IdealMatrix zero(2, RingCtx(4));
  CHECK(imat_sum(u, zero) == u);

  // Every product at (2,4) matches the set-level computation.
  const std::vector<IdealMatrix> all = all_imats(2, RingCtx(4));
  for (const IdealMatrix& a : all) {
    for (const IdealMatrix& b : all) {
      CHECK(generator_grid(imat_product(a, b)) == product_generators_by_sets(a, b));
    }
  }

  CHECK_THROWS_AS(imat_sum(u, IdealMatrix(3, RingCtx(4))), InvalidInputError);
  CHECK_THROWS_AS(imat_product(u, IdealMatrix(2, RingCtx(8))), InvalidInputError);
}

TEST_CASE("identity is multiplicatively neutral") {
  for (std::uint32_t m : {4u, 12u}) {
    const RingCtx ctx(m);
    const IdealMatrix id = IdealMatrix::identity(2, ctx);
    for (const IdealMatrix& u : all_imats(2, ctx)) {
      CHECK(imat_product(id, u) == u);
      CHECK(imat_product(u, id) == u);
    }
  }
}

TEST_CASE("ordering, meet, and the entrywise lattice") {
  const RingCtx z4(4);
  const IdealMatrix a = imat(2, 4, {1, 2, 4, 1});
  const IdealMatrix b = imat(2, 4, {1, 4, 2, 1});
  CHECK(imat_meet(a, b) == IdealMatrix::identity(2, z4));

  IdealMatrix bottom(2, z4);
  IdealMatrix top = imat(2, 4, {1, 1, 1, 1});
  const std::vector<IdealMatrix> all = all_imats(2, z4);
  for (const IdealMatrix& u : all) {
    CHECK(imat_leq(u, u));
    CHECK(imat_leq(bottom, u));
    CHECK(imat_leq(u, top));
  }

  // The order is entrywise, and meet/sum agree with entrywise ideal ops.
  for (const IdealMatrix& u : all) {
    for (const IdealMatrix& v : all) {
      bool entrywise = true;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          entrywise = entrywise && ideal_leq(u.entry(i, j), v.entry(i, j));
      CHECK(imat_leq(u, v) == entrywise);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          CHECK(imat_meet(u, v).entry(i, j) ==
                ideal_combine(IdealOp::intersection, u.entry(i, j), v.entry(i, j)));
          CHECK(imat_sum(u, v).entry(i, j) ==
                ideal_combine(IdealOp::sum, u.entry(i, j), v.entry(i, j)));
        }
    }
  }
}

TEST_CASE("semiring axioms at (2,4) exhaustively and (2,12) sampled") {
  {
    const std::vector<IdealMatrix> all = all_imats(2, RingCtx(4));
    for (const IdealMatrix& a : all) {
      for (const IdealMatrix& b : all) {
        CHECK(imat_sum(a, b) == imat_sum(b, a));
        for (const IdealMatrix& c : all) {
          CHECK(imat_sum(imat_sum(a, b), c) == imat_sum(a, imat_sum(b, c)));
          CHECK(imat_product(imat_product(a, b), c) == imat_product(a, imat_product(b, c)));
          CHECK(imat_product(a, imat_sum(b, c)) == imat_sum(imat_product(a, b), imat_product(a, c)));
          CHECK(imat_product(imat_sum(b, c), a) == imat_sum(imat_product(b, a), imat_product(c, a)));
        }
      }
    }
  }
  {
    const RingCtx z12(12);
    const std::vector<std::uint32_t> divisors = divisors_of(12);
    std::mt19937_64 rng(0xabcdef);
    const auto random_imat = [&] {
      std::vector<std::uint32_t> gens;
      for (int k = 0; k < 4; ++k) gens.push_back(divisors[rng() % divisors.size()]);
      return IdealMatrix(2, z12, gens);
    };
    for (int trial = 0; trial < 10000; ++trial) {
      const IdealMatrix a = random_imat();
      const IdealMatrix b = random_imat();
      const IdealMatrix c = random_imat();
      CHECK(imat_sum(a, b) == imat_sum(b, a));
      CHECK(imat_sum(imat_sum(a, b), c) == imat_sum(a, imat_sum(b, c)));
      CHECK(imat_product(imat_product(a, b), c) == imat_product(a, imat_product(b, c)));
      CHECK(imat_product(a, imat_sum(b, c)) == imat_sum(imat_product(a, b), imat_product(a, c)));
      CHECK(imat_product(imat_sum(b, c), a) == imat_sum(imat_product(b, a), imat_product(c, a)));
    }
  }
}

TEST_CASE("reflexive-transitive criterion") {
  CHECK(is_reflexive_transitive(IdealMatrix::identity(3, RingCtx(8))));
  CHECK(is_reflexive_transitive(imat(2, 4, {1, 2, 4, 1})));

  // Two steps of (2) compose to (4), which is not inside the zero ideal.
  const IdealMatrix chain = imat(3, 8, {1, 2, 8, 8, 1, 2, 8, 8, 1});
  CHECK_FALSE(is_reflexive_transitive(chain));
}

TEST_CASE("defined subring of an ideal matrix") {
  const RingCtx z4(4);
  CHECK(defined_subring(imat(2, 4, {1, 1, 1, 1})).size() == 256);

  const SubringSet g = defined_subring(imat(2, 4, {1, 2, 4, 1}));
  CHECK(g.size() == 32);
  CHECK(is_subring(g));
  CHECK(g.provenance == Provenance::defined_by_ideal_matrix);
  for (const Relation& p : enumerate_preorders(2)) {
    CHECK_FALSE(g == structural_ring(p, z4));
  }

  // Members are exactly the upper triangular matrices with an even corner.
  g.for_each_member([&](std::uint64_t code) {
    const Matrix a = decode_matrix(code, 2, z4);
    CHECK(a(0, 1) % 2 == 0);
    CHECK(a(1, 0) == 0);
  });

  // Every defined set at (2,4) is an additive subgroup.
  for (const IdealMatrix& u : all_imats(2, z4)) {
    const SubringSet s = defined_subring(u);
    CHECK(s.contains(0));
    const std::vector<std::uint64_t> members = s.members();
    for (std::uint64_t x : members) {
      const Matrix mx = decode_matrix(x, 2, z4);
      CHECK(s.contains_matrix(mat_neg(mx)));
      for (std::uint64_t y : members) {
        CHECK(s.contains_matrix(mat_add(mx, decode_matrix(y, 2, z4))));
      }
    }
  }
}

TEST_CASE("non-transitive entries give an additive subgroup that is not a subring") {
  const RingCtx z8(8);
  const IdealMatrix chain = imat(3, 8, {1, 2, 8, 8, 1, 2, 8, 8, 1});
  const SubringSet g = defined_subring(chain, 27);
  CHECK(g.size() == 8192);
  CHECK_FALSE(is_subring(g));

  // Additive subgroup: closed under negation and under translation by a
  // generating set.
  std::vector<Matrix> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(Matrix::unit(3, z8, i, i));
  gens.push_back(Matrix::unit(3, z8, 0, 1, 2));
  gens.push_back(Matrix::unit(3, z8, 1, 2, 2));
  std::uint64_t count = 0;
  g.for_each_member([&](std::uint64_t code) {
    const Matrix a = decode_matrix(code, 3, z8);
    if (!g.contains_matrix(mat_neg(a))) ++count;
    for (const Matrix& t : gens)
      if (!g.contains_matrix(mat_add(a, t))) ++count;
  });
  CHECK(count == 0);

  // The escaping product.
  const Matrix a = Matrix::unit(3, z8, 0, 1, 2);
  const Matrix b = Matrix::unit(3, z8, 1, 2, 2);
  CHECK(g.contains_matrix(a));
  CHECK(g.contains_matrix(b));
  CHECK(mat_mul(a, b) == Matrix::unit(3, z8, 0, 2, 4));
  CHECK_FALSE(g.contains_matrix(mat_mul(a, b)));
}

TEST_CASE("pre-orders embed as ideal matrices") {
  const RingCtx z4(4);
  CHECK(preorder_to_imat(Relation::equality(2), z4) == IdealMatrix::identity(2, z4));
  CHECK(preorder_to_imat(Relation::full(2), z4) == imat(2, 4, {1, 1, 1, 1}));
  CHECK(preorder_to_imat(Relation::natural_order(2), z4) == imat(2, 4, {1, 1, 4, 1}));
  CHECK(defined_subring(preorder_to_imat(Relation::natural_order(2), z4)) ==
        structural_ring(Relation::natural_order(2), z4));

  for (int n = 2; n <= 3; ++n) {
    for (std::uint32_t m : {2u, 4u}) {
      const RingCtx ctx(m);
      for (const Relation& p : enumerate_preorders(n)) {
        const IdealMatrix u = preorder_to_imat(p, ctx);
        CHECK(is_reflexive_transitive(u));
        CHECK(defined_subring(u) == structural_ring(p, ctx));
      }
    }
  }

  CHECK_THROWS_AS(preorder_to_imat(Relation(2, 0b0100), z4), InvalidInputError);
}

TEST_CASE("extraction recovers the entry ideals") {
  const RingCtx z2(2);
  CHECK(extract_imat(structural_ring(Relation::equality(2), z2)) ==
        IdealMatrix::identity(2, z2));
  CHECK(extract_imat(structural_ring(Relation::natural_order(2), z2)) == imat(2, 2, {1, 1, 2, 1}));
  CHECK(extract_imat(defined_subring(imat(2, 4, {1, 2, 4, 1}))) == imat(2, 4, {1, 2, 4, 1}));

  // Precondition violations carry a witness.
  SubringSet not_diag(2, z2);
  not_diag.insert(0);
  CHECK_THROWS_WITH_AS(extract_imat(not_diag), doctest::Contains("missing the diagonal"),
                       InvalidInputError);
  SubringSet not_ring(2, z2);
  for (std::uint64_t d : oracle::diagonal_codes(2, z2)) not_ring.insert(d);
  not_ring.insert(encode_matrix(Matrix::unit(2, z2, 0, 1)));
  CHECK_THROWS_WITH_AS(extract_imat(not_ring), doctest::Contains("not a subring"),
                       InvalidInputError);
}

TEST_CASE("enumeration of reflexive-transitive matrices") {
  CHECK(enumerate_rt_imats(2, RingCtx(2)).size() == 4);
  CHECK(enumerate_rt_imats(2, RingCtx(4)).size() == 9);
  CHECK(enumerate_rt_imats(3, RingCtx(2)).size() == 29);

  const std::vector<IdealMatrix> at24 = enumerate_rt_imats(2, RingCtx(4));
  for (const IdealMatrix& u : at24) CHECK(is_reflexive_transitive(u));
  for (std::size_t i = 1; i < at24.size(); ++i) {
    CHECK(generator_grid(at24[i - 1]) < generator_grid(at24[i]));
  }
  CHECK(enumerate_rt_imats(2, RingCtx(4), Threading::serial) ==
        enumerate_rt_imats(2, RingCtx(4), Threading::openmp));

  // Over a field every reflexive-transitive matrix comes from a pre-order.
  for (const auto& [n, m] : std::vector<std::pair<int, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}}) {
    const RingCtx ctx(m);
    std::set<std::vector<std::uint32_t>> from_preorders;
    for (const Relation& p : enumerate_preorders(n))
      from_preorders.insert(generator_grid(preorder_to_imat(p, ctx)));
    std::set<std::vector<std::uint32_t>> enumerated;
    for (const IdealMatrix& u : enumerate_rt_imats(n, ctx))
      enumerated.insert(generator_grid(u));
    CHECK(from_preorders == enumerated);
  }

  CHECK_THROWS_AS(enumerate_rt_imats(3, RingCtx(12)), ResourceCapError);
}

TEST_CASE("monotonicity and its converse on reflexive-transitive matrices") {
  const RingCtx z4(4);
  const std::vector<IdealMatrix> rt = enumerate_rt_imats(2, z4);
  for (const IdealMatrix& u : rt) {
    for (const IdealMatrix& v : rt) {
      CHECK(imat_leq(u, v) == defined_subring(u).is_subset_of(defined_subring(v)));
    }
  }
  // Monotonicity holds for arbitrary ideal matrices.
  for (const IdealMatrix& u : all_imats(2, z4)) {
    for (const IdealMatrix& v : all_imats(2, z4)) {
      if (imat_leq(u, v)) CHECK(defined_subring(u).is_subset_of(defined_subring(v)));
    }
  }
}

TEST_CASE("galois round-trips between matrices and subrings") {
  for (const auto& [n, m] :
       std::vector<std::pair<int, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    const RingCtx ctx(m);
    for (const IdealMatrix& u : enumerate_rt_imats(n, ctx)) {
      CHECK(extract_imat(defined_subring(u)) == u);
    }
    for (const SubringSet& s : enumerate_diagonal_subrings(n, ctx)) {
      CHECK(defined_subring(extract_imat(s)) == s);
    }
  }
}

TEST_CASE("meet closure and the join closure inside the lattice") {
  for (const auto& [n, m] : std::vector<std::pair<int, std::uint32_t>>{{2, 4}, {3, 2}}) {
    const RingCtx ctx(m);
    const std::vector<IdealMatrix> rt = enumerate_rt_imats(n, ctx);
    for (const IdealMatrix& u : rt) {
      for (const IdealMatrix& v : rt) {
        CHECK(is_reflexive_transitive(imat_meet(u, v)));
        const IdealMatrix join = rt_join(u, v);
        CHECK(is_reflexive_transitive(join));
        CHECK(imat_leq(u, join));
        CHECK(imat_leq(v, join));
        for (const IdealMatrix& w : rt) {
          if (imat_leq(u, w) && imat_leq(v, w)) CHECK(imat_leq(join, w));
        }
      }
    }
  }
}

TEST_CASE("entrywise sums of reflexive-transitive matrices can leave the set") {
  // At n = 2 the reflexive-transitive matrices are closed under entrywise
  // sums: the full sweep finds nothing.
  for (std::uint32_t m : {4u, 8u, 12u}) {
    const SublatticeWitness w = find_sublattice_witness(2, RingCtx(m));
    CHECK_FALSE(w.found);
    CHECK(w.pairs_checked == w.rt_count * (w.rt_count + 1) / 2);
  }
  // At n = 3 a witness pair exists for every tested composite modulus.
  for (std::uint32_t m : {4u, 8u}) {
    const SublatticeWitness w = find_sublattice_witness(3, RingCtx(m));
    REQUIRE(w.found);
    CHECK(is_reflexive_transitive(w.pair[0]));
    CHECK(is_reflexive_transitive(w.pair[1]));
    CHECK_FALSE(is_reflexive_transitive(imat_sum(w.pair[0], w.pair[1])));
  }
}
