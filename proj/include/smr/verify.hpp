#ifndef SMR_VERIFY_HPP
#define SMR_VERIFY_HPP

// Exhaustive desk-scale verification drivers. Each driver sweeps every case
// in a fixed order, aggregates deterministically, and reports the first
// counterexample it finds in a form that replays through the public
// operations.

#include <cstdint>
#include <optional>
#include <string>

#include "smr/io.hpp"
#include "smr/parallel.hpp"
#include "smr/rings.hpp"
#include "smr/subring_set.hpp"

namespace smr {

struct Report {
  std::string subject;           // prop1|prop2|prop3|prop4|convexity|census|sublattice-witness
  int n = 0;
  std::optional<std::uint32_t> m;  // absent for census
  std::string status;              // verified | failed | infeasible
  std::uint64_t cases_checked = 0;
  Json counterexample;             // object, or null when absent
  Json details;                    // subject-specific payload, or null
  std::int64_t elapsed_ms = 0;

  bool verified() const { return status == "verified"; }
};

Json report_to_json(const Report& report);

// Lattice embedding: injectivity, meet preservation through intersection,
// join preservation through the generated subring, over all pre-order
// pairs. n <= 3.
Report verify_prop1(int n, RingCtx ctx, Threading threading = default_threading(),
                    unsigned max_set_bits = kDefaultMaxSetBits);

// A structural ring is a permutation conjugate of the upper (equivalently
// lower) triangular ring exactly for the linear orders. n <= 3.
Report verify_prop2(int n, RingCtx ctx, Threading threading = default_threading(),
                    unsigned max_set_bits = kDefaultMaxSetBits);

// Structural rings of partial orders are exactly the intersections of
// nonempty families of triangular conjugates. n <= 3.
Report verify_prop3(int n, RingCtx ctx, Threading threading = default_threading(),
                    unsigned max_set_bits = kDefaultMaxSetBits);

// The bijection and order isomorphism between reflexive-transitive ideal
// matrices and subrings containing the diagonal matrices.
Report verify_prop4(int n, RingCtx ctx, Threading threading = default_threading(),
                    unsigned max_set_bits = kDefaultMaxSetBits);

// Division-ring probe: for prime m the diagonal-containing subrings are
// exactly the structural rings; for composite m a non-structural witness
// exists and is reported.
Report verify_convexity(int n, RingCtx ctx, Threading threading = default_threading(),
                        unsigned max_set_bits = kDefaultMaxSetBits);

// Counts of pre-orders / orders / linear orders among all relations. n <= 4.
Report census(int n, Threading threading = default_threading());

// Search for two reflexive-transitive matrices whose entrywise sum fails
// the criterion.
Report verify_sublattice_witness(int n, RingCtx ctx);

}  // namespace smr

#endif  // SMR_VERIFY_HPP
