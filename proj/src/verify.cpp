#include "smr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <vector>

#include "smr/errors.hpp"
#include "smr/ideal_matrices.hpp"
#include "smr/matrices.hpp"
#include "smr/relations.hpp"
#include "smr/structural.hpp"

namespace smr {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  }
};

Report base_report(const char* subject, int n, std::optional<std::uint32_t> m) {
  Report rep;
  rep.subject = subject;
  rep.n = n;
  rep.m = m;
  rep.status = "verified";
  rep.counterexample = nullptr;
  rep.details = nullptr;
  return rep;
}

void mark_infeasible(Report& rep, const std::string& reason) {
  rep.status = "infeasible";
  rep.details = Json{{"reason", reason}};
}

// The lower-triangular pattern: i related to j iff i >= j.
Relation reverse_natural_order(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) pairs.emplace_back(i, j);
  return Relation::from_pairs(n, pairs);
}

std::vector<Matrix> decoded_members(const SubringSet& s) {
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  s.for_each_member(
      [&](std::uint64_t code) { out.push_back(decode_matrix(code, s.n(), s.ctx())); });
  return out;
}

}  // namespace

Json report_to_json(const Report& report) {
  Json out;
  out["subject"] = report.subject;
  out["n"] = report.n;
  if (report.m) out["m"] = *report.m;
  out["status"] = report.status;
  out["cases_checked"] = report.cases_checked;
  out["counterexample"] = report.counterexample;
  if (!report.details.is_null()) out["details"] = report.details;
  out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

Report verify_prop1(int n, RingCtx ctx, Threading threading, unsigned max_set_bits) {
  Timer timer;
  Report rep = base_report("prop1", n, ctx.m);
  if (n < 1 || n > 3) {
    mark_infeasible(rep, "pre-order pair sweep is limited to n <= 3");
    rep.elapsed_ms = timer.ms();
    return rep;
  }
  try {
    const std::vector<Relation> preorders = enumerate_preorders(n, threading);
    const std::size_t count = preorders.size();
    std::vector<SubringSet> rings;
    rings.reserve(count);
    for (const Relation& p : preorders) rings.push_back(structural_ring(p, ctx, max_set_bits));

    const std::uint64_t cases = static_cast<std::uint64_t>(count) * count;
    std::vector<std::uint8_t> verdict(cases, 0);
    parallel_for(cases, threading, [&](std::uint64_t idx) {
      const std::size_t a = static_cast<std::size_t>(idx / count);
      const std::size_t b = static_cast<std::size_t>(idx % count);
      if (a != b && rings[a] == rings[b]) {
        verdict[idx] = 1;
        return;
      }
      const Relation meet = preorder_meet(preorders[a], preorders[b]);
      if (!(structural_ring(meet, ctx, max_set_bits) ==
            subring_intersection(rings[a], rings[b]))) {
        verdict[idx] = 2;
        return;
      }
      const Relation join = preorder_join(preorders[a], preorders[b]);
      std::vector<Matrix> union_members = decoded_members(rings[a]);
      const std::vector<Matrix> more = decoded_members(rings[b]);
      union_members.insert(union_members.end(), more.begin(), more.end());
      if (!(structural_ring(join, ctx, max_set_bits) ==
            generated_subring(union_members, n, ctx, max_set_bits))) {
        verdict[idx] = 3;
      }
    });

    rep.cases_checked = cases;
    for (std::uint64_t idx = 0; idx < cases; ++idx) {
      if (!verdict[idx]) continue;
      const char* kind = verdict[idx] == 1 ? "injectivity" : verdict[idx] == 2 ? "meet" : "join";
      rep.status = "failed";
      rep.counterexample = Json{
          {"check", kind},
          {"theta1", relation_to_json(preorders[static_cast<std::size_t>(idx / count)])},
          {"theta2", relation_to_json(preorders[static_cast<std::size_t>(idx % count)])}};
      break;
    }
    rep.details = Json{{"preorders", count}};
  } catch (const ResourceCapError& e) {
    mark_infeasible(rep, e.what());
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

Report verify_prop2(int n, RingCtx ctx, Threading threading, unsigned max_set_bits) {
  Timer timer;
  Report rep = base_report("prop2", n, ctx.m);
  if (n < 1 || n > 3) {
    mark_infeasible(rep, "conjugate sweep is limited to n <= 3");
    rep.elapsed_ms = timer.ms();
    return rep;
  }
  try {
    const std::vector<Relation> preorders = enumerate_preorders(n, threading);
    const SubringSet upper = structural_ring(Relation::natural_order(n), ctx, max_set_bits);
    const SubringSet lower = structural_ring(reverse_natural_order(n), ctx, max_set_bits);

    std::vector<SubringSet> upper_conjugates;
    std::vector<SubringSet> lower_conjugates;
    for (const Permutation& s : all_permutations(n)) {
      const Matrix p = permutation_matrix(s, ctx);
      upper_conjugates.push_back(conjugate_subring(p, upper));
      lower_conjugates.push_back(conjugate_subring(p, lower));
    }

    const std::size_t count = preorders.size();
    std::vector<std::uint8_t> verdict(count, 0);
    std::size_t linear_count = 0;
    parallel_for(count, threading, [&](std::uint64_t idx) {
      const Relation& p = preorders[static_cast<std::size_t>(idx)];
      const SubringSet ring = structural_ring(p, ctx, max_set_bits);
      const bool linear = classify(p).linear;
      const bool in_upper = std::any_of(upper_conjugates.begin(), upper_conjugates.end(),
                                        [&](const SubringSet& c) { return c == ring; });
      const bool in_lower = std::any_of(lower_conjugates.begin(), lower_conjugates.end(),
                                        [&](const SubringSet& c) { return c == ring; });
      if (in_upper != linear || in_lower != linear) verdict[idx] = 1;
    });
    for (const Relation& p : preorders)
      if (classify(p).linear) ++linear_count;

    rep.cases_checked = count;
    for (std::size_t idx = 0; idx < count; ++idx) {
      if (!verdict[idx]) continue;
      rep.status = "failed";
      rep.counterexample =
          Json{{"check", "conjugate-membership"},
               {"theta", relation_to_json(preorders[idx])},
               {"linear", classify(preorders[idx]).linear}};
      break;
    }
    rep.details = Json{{"preorders", count}, {"linear_orders", linear_count}};
  } catch (const ResourceCapError& e) {
    mark_infeasible(rep, e.what());
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

Report verify_prop3(int n, RingCtx ctx, Threading threading, unsigned max_set_bits) {
  Timer timer;
  Report rep = base_report("prop3", n, ctx.m);
  if (n < 1 || n > 3) {
    mark_infeasible(rep, "conjugate-subset sweep is limited to n <= 3");
    rep.elapsed_ms = timer.ms();
    return rep;
  }
  try {
    const std::vector<Relation> preorders = enumerate_preorders(n, threading);
    std::vector<Relation> orders;
    std::vector<Relation> non_orders;
    for (const Relation& p : preorders) {
      (classify(p).order ? orders : non_orders).push_back(p);
    }

    const SubringSet upper = structural_ring(Relation::natural_order(n), ctx, max_set_bits);
    const std::vector<Permutation> perms = all_permutations(n);
    std::vector<SubringSet> conjugates;
    std::vector<Relation> conjugate_orders;  // the linear order each conjugate realizes
    for (const Permutation& s : perms) {
      conjugates.push_back(conjugate_subring(permutation_matrix(s, ctx), upper));
      conjugate_orders.push_back(linear_order_of(s));
    }

    Json counterexample = nullptr;

    // Forward direction: each partial order is the intersection of its
    // linear-extension conjugates.
    std::uint64_t cases = 0;
    for (const Relation& order : orders) {
      ++cases;
      const std::vector<Relation> extensions = linear_extensions(order);
      std::optional<SubringSet> inter;
      for (const Relation& ext : extensions) {
        const Permutation s = permutation_of_linear_order(ext);
        SubringSet conj = conjugate_subring(permutation_matrix(s, ctx), upper);
        inter = inter ? subring_intersection(*inter, conj) : std::move(conj);
      }
      if (!(inter && *inter == structural_ring(order, ctx, max_set_bits))) {
        counterexample = Json{{"check", "extension-intersection"},
                              {"theta", relation_to_json(order)},
                              {"extensions", extensions.size()}};
        break;
      }
    }

    // Reverse direction: every nonempty conjugate-subset intersection is the
    // structural ring of the meet of the matching linear orders, a partial
    // order. The empty family would give the full ring, the image of the
    // full (non-order) pre-order; it is excluded by convention.
    std::vector<SubringSet> intersections;
    if (counterexample.is_null()) {
      const std::uint32_t subsets = (1u << perms.size()) - 1;
      for (std::uint32_t t = 1; t <= subsets; ++t) {
        ++cases;
        std::optional<SubringSet> inter;
        std::optional<Relation> meet;
        for (std::size_t s = 0; s < perms.size(); ++s) {
          if (!((t >> s) & 1u)) continue;
          inter = inter ? subring_intersection(*inter, conjugates[s]) : conjugates[s];
          meet = meet ? preorder_meet(*meet, conjugate_orders[s]) : conjugate_orders[s];
        }
        if (!classify(*meet).order ||
            !(*inter == structural_ring(*meet, ctx, max_set_bits))) {
          counterexample = Json{{"check", "subset-intersection"}, {"subset_mask", t}};
          break;
        }
        intersections.push_back(std::move(*inter));
      }
    }

    // No non-order pre-order's ring may arise as such an intersection.
    if (counterexample.is_null()) {
      for (const Relation& p : non_orders) {
        ++cases;
        const SubringSet ring = structural_ring(p, ctx, max_set_bits);
        if (std::any_of(intersections.begin(), intersections.end(),
                        [&](const SubringSet& s) { return s == ring; })) {
          counterexample = Json{{"check", "non-order-excluded"}, {"theta", relation_to_json(p)}};
          break;
        }
      }
    }

    rep.cases_checked = cases;
    if (!counterexample.is_null()) {
      rep.status = "failed";
      rep.counterexample = std::move(counterexample);
    }
    rep.details = Json{{"orders", orders.size()},
                       {"non_order_preorders", non_orders.size()},
                       {"conjugate_subsets", (1u << perms.size()) - 1}};
  } catch (const ResourceCapError& e) {
    mark_infeasible(rep, e.what());
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

Report verify_prop4(int n, RingCtx ctx, Threading threading, unsigned max_set_bits) {
  Timer timer;
  Report rep = base_report("prop4", n, ctx.m);
  try {
    const std::vector<IdealMatrix> rt = enumerate_rt_imats(n, ctx, threading);
    const std::vector<SubringSet> diag = enumerate_diagonal_subrings(n, ctx, threading, max_set_bits);

    std::vector<std::optional<SubringSet>> defined(rt.size());
    parallel_for(rt.size(), threading, [&](std::uint64_t idx) {
      defined[static_cast<std::size_t>(idx)] =
          defined_subring(rt[static_cast<std::size_t>(idx)], max_set_bits);
    });

    Json counterexample = nullptr;
    std::uint64_t cases = 0;

    // (a) The defined subrings are exactly the diagonal-containing ones.
    {
      std::vector<const SubringSet*> sorted;
      for (const auto& s : defined) sorted.push_back(&*s);
      std::sort(sorted.begin(), sorted.end(), [](const SubringSet* a, const SubringSet* b) {
        return SubringSet::member_lex_less(*a, *b);
      });
      if (sorted.size() != diag.size()) {
        counterexample = Json{{"check", "range-equality"},
                              {"rt_count", sorted.size()},
                              {"subring_count", diag.size()}};
      } else {
        for (std::size_t i = 0; i < sorted.size(); ++i) {
          ++cases;
          if (!(*sorted[i] == diag[i])) {
            counterexample = Json{{"check", "range-equality"}, {"position", i}};
            break;
          }
          if (i + 1 < sorted.size() && *sorted[i] == *sorted[i + 1]) {
            counterexample = Json{{"check", "injectivity"}, {"position", i}};
            break;
          }
        }
      }
    }

    // (b) Both round-trips.
    if (counterexample.is_null()) {
      for (std::size_t i = 0; i < rt.size(); ++i) {
        ++cases;
        if (!(extract_imat(*defined[i]) == rt[i])) {
          counterexample = Json{{"check", "extract-roundtrip"}, {"u", imat_to_json(rt[i])}};
          break;
        }
      }
    }
    if (counterexample.is_null()) {
      for (std::size_t j = 0; j < diag.size(); ++j) {
        ++cases;
        if (!(defined_subring(extract_imat(diag[j]), max_set_bits) == diag[j])) {
          counterexample = Json{{"check", "define-roundtrip"}, {"subring", subring_to_json(diag[j])}};
          break;
        }
      }
    }

    // (c) Order isomorphism.
    if (counterexample.is_null()) {
      for (std::size_t i = 0; i < rt.size() && counterexample.is_null(); ++i) {
        for (std::size_t j = 0; j < rt.size(); ++j) {
          ++cases;
          if (imat_leq(rt[i], rt[j]) != defined[i]->is_subset_of(*defined[j])) {
            counterexample = Json{{"check", "order-isomorphism"},
                                  {"u", imat_to_json(rt[i])},
                                  {"v", imat_to_json(rt[j])}};
            break;
          }
        }
      }
    }

    rep.cases_checked = cases;
    if (!counterexample.is_null()) {
      rep.status = "failed";
      rep.counterexample = std::move(counterexample);
    }
    rep.details = Json{{"rt_count", rt.size()}, {"subring_count", diag.size()}};
  } catch (const ResourceCapError& e) {
    mark_infeasible(rep, e.what());
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

Report verify_convexity(int n, RingCtx ctx, Threading threading, unsigned max_set_bits) {
  Timer timer;
  Report rep = base_report("convexity", n, ctx.m);
  if (n < 2) {
    mark_infeasible(rep, "the probe needs n >= 2");
    rep.elapsed_ms = timer.ms();
    return rep;
  }
  try {
    const std::vector<SubringSet> diag = enumerate_diagonal_subrings(n, ctx, threading, max_set_bits);
    const std::vector<Relation> preorders = enumerate_preorders(n, threading);
    std::vector<SubringSet> structural;
    for (const Relation& p : preorders) structural.push_back(structural_ring(p, ctx, max_set_bits));

    const auto is_structural = [&](const SubringSet& s) {
      return std::any_of(structural.begin(), structural.end(),
                         [&](const SubringSet& t) { return t == s; });
    };
    bool all_structural_present = true;
    for (const SubringSet& s : structural) {
      if (std::none_of(diag.begin(), diag.end(), [&](const SubringSet& d) { return d == s; })) {
        all_structural_present = false;
      }
    }

    rep.cases_checked = diag.size();
    rep.details = Json{{"diagonal_count", diag.size()}, {"structural_count", structural.size()}};

    if (is_prime_modulus(ctx.m)) {
      if (!all_structural_present || diag.size() != structural.size()) {
        rep.status = "failed";
        rep.counterexample = Json{{"check", "division-ring-range"},
                                  {"diagonal_count", diag.size()},
                                  {"structural_count", structural.size()}};
      }
    } else {
      // Composite modulus: expect a strict gap, witnessed by the smallest
      // non-structural subring (by size, then member order).
      const SubringSet* witness = nullptr;
      for (const SubringSet& d : diag) {
        if (is_structural(d)) continue;
        if (!witness || d.size() < witness->size() ||
            (d.size() == witness->size() && SubringSet::member_lex_less(d, *witness))) {
          witness = &d;
        }
      }
      if (!all_structural_present || witness == nullptr) {
        rep.status = "failed";
        rep.counterexample = Json{{"check", "composite-gap"},
                                  {"diagonal_count", diag.size()},
                                  {"structural_count", structural.size()}};
      } else {
        rep.details["witness"] = Json{{"imat", imat_to_json(extract_imat(*witness))},
                                      {"size", witness->size()}};
      }
    }
  } catch (const ResourceCapError& e) {
    mark_infeasible(rep, e.what());
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

Report census(int n, Threading threading) {
  Timer timer;
  Report rep = base_report("census", n, std::nullopt);
  if (n < 1 || n > 4) {
    mark_infeasible(rep, "relation census is limited to n <= 4");
    rep.elapsed_ms = timer.ms();
    return rep;
  }
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  std::vector<std::uint8_t> tier(total, 0);
  parallel_for(total, threading, [&](std::uint64_t code) {
    const RelationFlags f = classify(Relation(n, code));
    if (f.linear)
      tier[code] = 3;
    else if (f.order)
      tier[code] = 2;
    else if (f.preorder)
      tier[code] = 1;
  });
  std::uint64_t preorders = 0, orders = 0, linear = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (tier[code] >= 1) ++preorders;
    if (tier[code] >= 2) ++orders;
    if (tier[code] >= 3) ++linear;
  }
  rep.cases_checked = total;
  rep.details = Json{{"relations", total},
                     {"preorders", preorders},
                     {"orders", orders},
                     {"linear_orders", linear}};
  rep.elapsed_ms = timer.ms();
  return rep;
}

Report verify_sublattice_witness(int n, RingCtx ctx) {
  Timer timer;
  Report rep = base_report("sublattice-witness", n, ctx.m);
  try {
    const SublatticeWitness witness = find_sublattice_witness(n, ctx);
    rep.cases_checked = witness.pairs_checked;
    rep.details = Json{{"rt_count", witness.rt_count}, {"witness_found", witness.found}};
    if (witness.found) {
      rep.details["u"] = imat_to_json(witness.pair[0]);
      rep.details["v"] = imat_to_json(witness.pair[1]);
      rep.details["entrywise_sum"] = imat_to_json(imat_sum(witness.pair[0], witness.pair[1]));
    }
  } catch (const ResourceCapError& e) {
    mark_infeasible(rep, e.what());
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

}  // namespace smr
