#include "smr/cli.hpp"

#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "smr/errors.hpp"
#include "smr/ideal_matrices.hpp"
#include "smr/io.hpp"
#include "smr/matrices.hpp"
#include "smr/relations.hpp"
#include "smr/rings.hpp"
#include "smr/structural.hpp"
#include "smr/subring_set.hpp"
#include "smr/verify.hpp"

namespace smr {

namespace {

struct OutputCtx {
  std::string format = "text";
  unsigned max_set_bits = kDefaultMaxSetBits;
  std::ostream* out = nullptr;

  bool json() const { return format == "json"; }
  void emit(const Json& j) const { *out << j.dump(2) << "\n"; }
};

void print_flags(const OutputCtx& oc, const Relation& r, const RelationFlags& f) {
  if (oc.json()) {
    oc.emit(Json{{"relation", relation_to_json(r)},
                 {"flags",
                  Json{{"reflexive", f.reflexive},
                       {"transitive", f.transitive},
                       {"preorder", f.preorder},
                       {"order", f.order},
                       {"linear", f.linear}}}});
    return;
  }
  *oc.out << "relation: " << relation_text(r) << "\n"
          << "reflexive: " << (f.reflexive ? "true" : "false") << "\n"
          << "transitive: " << (f.transitive ? "true" : "false") << "\n"
          << "preorder: " << (f.preorder ? "true" : "false") << "\n"
          << "order: " << (f.order ? "true" : "false") << "\n"
          << "linear: " << (f.linear ? "true" : "false") << "\n";
}

int emit_report(const OutputCtx& oc, const Report& rep) {
  if (oc.json()) {
    oc.emit(report_to_json(rep));
  } else {
    *oc.out << "subject: " << rep.subject << "\n"
            << "n: " << rep.n << "\n";
    if (rep.m) *oc.out << "m: " << *rep.m << "\n";
    *oc.out << "status: " << rep.status << "\n"
            << "cases_checked: " << rep.cases_checked << "\n";
    if (!rep.counterexample.is_null()) {
      *oc.out << "counterexample: " << rep.counterexample.dump() << "\n";
    }
    if (!rep.details.is_null()) *oc.out << "details: " << rep.details.dump() << "\n";
  }
  if (rep.status == "verified") return 0;
  if (rep.status == "failed") return 1;
  return 3;
}

Ideal ideal_from_flag(std::uint32_t g, RingCtx ctx) {
  // Accept the canonical rendering (g = m for the zero ideal) as well as
  // any ring element, which names the ideal it generates.
  if (g == ctx.m) return Ideal(ctx.m, ctx);
  return canonical_ideal(g, ctx);
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  OutputCtx oc;
  oc.out = &out;
  if (const char* env = std::getenv("SMR_MAX_SET_BITS")) {
    try {
      oc.max_set_bits = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw InvalidInputError("SMR_MAX_SET_BITS must be an unsigned integer");
    }
  }

  CLI::App app{"structural matrix rings over Z_m"};
  app.require_subcommand(1);
  app.add_option("--format", oc.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-set-bits", oc.max_set_bits,
                 "cap exponent for explicit matrix sets (default 24, env SMR_MAX_SET_BITS)");

  int exit_code = 0;

  int rel_n = 0;
  std::string rel_pairs;

  CLI::App* relation = app.add_subcommand("relation", "binary relations on {1..n}");
  relation->require_subcommand(1);
  relation->fallthrough();

  CLI::App* rel_classify = relation->add_subcommand("classify", "pre-order / order / linear flags");
  rel_classify->fallthrough();
  rel_classify->add_option("--n", rel_n, "index count")->required();
  rel_classify->add_option("--pairs", rel_pairs, "related pairs, e.g. \"1,2 2,3\"");
  rel_classify->callback([&] {
    const Relation r = Relation::from_pairs(rel_n, parse_pairs(rel_pairs));
    const RelationFlags f = classify(r);
    print_flags(oc, r, f);
    exit_code = f.preorder ? 0 : 1;
  });

  CLI::App* rel_closure = relation->add_subcommand("closure", "least pre-order containing the input");
  rel_closure->fallthrough();
  rel_closure->add_option("--n", rel_n, "index count")->required();
  rel_closure->add_option("--pairs", rel_pairs, "related pairs");
  rel_closure->callback([&] {
    const Relation r = rt_closure(Relation::from_pairs(rel_n, parse_pairs(rel_pairs)));
    if (oc.json())
      oc.emit(relation_to_json(r));
    else
      *oc.out << relation_text(r) << "\n";
  });

  CLI::App* rel_ext = relation->add_subcommand("extensions", "linear extensions of a partial order");
  rel_ext->fallthrough();
  rel_ext->add_option("--n", rel_n, "index count")->required();
  rel_ext->add_option("--pairs", rel_pairs, "related pairs");
  rel_ext->callback([&] {
    if (rel_n > 6) {
      throw ResourceCapError("linear extension listing is capped at n <= 6 on the command line");
    }
    const Relation r = Relation::from_pairs(rel_n, parse_pairs(rel_pairs));
    const std::vector<Relation> exts = linear_extensions(r);
    if (oc.json()) {
      Json list = Json::array();
      for (const Relation& e : exts) list.push_back(relation_to_json(e));
      oc.emit(Json{{"n", rel_n}, {"count", exts.size()}, {"extensions", std::move(list)}});
    } else {
      *oc.out << "count: " << exts.size() << "\n";
      for (const Relation& e : exts) *oc.out << relation_text(e) << "\n";
    }
  });

  CLI::App* rel_pre = relation->add_subcommand("preorders", "all pre-orders on {1..n}");
  rel_pre->fallthrough();
  rel_pre->add_option("--n", rel_n, "index count")->required();
  rel_pre->callback([&] {
    const std::vector<Relation> list = enumerate_preorders(rel_n);
    if (oc.json()) {
      Json arr = Json::array();
      for (const Relation& p : list) arr.push_back(relation_to_json(p));
      oc.emit(Json{{"n", rel_n}, {"count", list.size()}, {"preorders", std::move(arr)}});
    } else {
      *oc.out << "count: " << list.size() << "\n";
      for (const Relation& p : list) *oc.out << relation_text(p) << "\n";
    }
  });

  std::uint32_t modulus = 0;
  std::uint32_t ideal_a = 0;
  std::uint32_t ideal_b = 0;
  std::uint32_t element_x = 0;
  std::string combine_kind;

  CLI::App* ideal = app.add_subcommand("ideal", "ideals of Z_m");
  ideal->require_subcommand(1);
  ideal->fallthrough();

  CLI::App* ideal_of = ideal->add_subcommand("of", "canonical ideal generated by an element");
  ideal_of->fallthrough();
  ideal_of->add_option("--modulus", modulus, "base ring modulus")->required();
  ideal_of->add_option("--x", element_x, "ring element")->required();
  ideal_of->callback([&] {
    const Ideal i = canonical_ideal(element_x, RingCtx(modulus));
    if (oc.json())
      oc.emit(Json{{"m", modulus}, {"ideal", i.g()}});
    else
      *oc.out << ideal_text(i) << "\n";
  });

  CLI::App* ideal_combine_cmd = ideal->add_subcommand("combine", "ideal sum, product or intersection");
  ideal_combine_cmd->fallthrough();
  ideal_combine_cmd->add_option("--modulus", modulus, "base ring modulus")->required();
  ideal_combine_cmd->add_option("--kind", combine_kind, "sum | product | intersection")
      ->required()
      ->check(CLI::IsMember({"sum", "product", "intersection"}));
  ideal_combine_cmd->add_option("--a", ideal_a, "left ideal generator")->required();
  ideal_combine_cmd->add_option("--b", ideal_b, "right ideal generator")->required();
  ideal_combine_cmd->callback([&] {
    const RingCtx ctx(modulus);
    const IdealOp op = combine_kind == "sum"       ? IdealOp::sum
                       : combine_kind == "product" ? IdealOp::product
                                                   : IdealOp::intersection;
    const Ideal result = ideal_combine(op, ideal_from_flag(ideal_a, ctx), ideal_from_flag(ideal_b, ctx));
    if (oc.json())
      oc.emit(Json{{"m", modulus}, {"kind", combine_kind}, {"ideal", result.g()}});
    else
      *oc.out << ideal_text(result) << "\n";
  });

  CLI::App* ideal_leq_cmd = ideal->add_subcommand("leq", "inclusion of ideals");
  ideal_leq_cmd->fallthrough();
  ideal_leq_cmd->add_option("--modulus", modulus, "base ring modulus")->required();
  ideal_leq_cmd->add_option("--a", ideal_a, "left ideal generator")->required();
  ideal_leq_cmd->add_option("--b", ideal_b, "right ideal generator")->required();
  ideal_leq_cmd->callback([&] {
    const RingCtx ctx(modulus);
    const bool leq = ideal_leq(ideal_from_flag(ideal_a, ctx), ideal_from_flag(ideal_b, ctx));
    if (oc.json())
      oc.emit(Json{{"m", modulus}, {"leq", leq}});
    else
      *oc.out << (leq ? "true" : "false") << "\n";
    exit_code = leq ? 0 : 1;
  });

  CLI::App* ideal_list = ideal->add_subcommand("list", "all ideals, ascending by generator");
  ideal_list->fallthrough();
  ideal_list->add_option("--modulus", modulus, "base ring modulus")->required();
  ideal_list->callback([&] {
    const std::vector<Ideal> ideals = ideals_of(RingCtx(modulus));
    if (oc.json()) {
      Json arr = Json::array();
      for (const Ideal& i : ideals) arr.push_back(i.g());
      oc.emit(Json{{"m", modulus}, {"count", ideals.size()}, {"ideals", std::move(arr)}});
    } else {
      *oc.out << "count: " << ideals.size() << "\n";
      for (const Ideal& i : ideals) *oc.out << ideal_text(i) << "\n";
    }
  });

  CLI::App* ring = app.add_subcommand("ring", "the base ring Z_m");
  ring->require_subcommand(1);
  ring->fallthrough();

  CLI::App* ring_axioms = ring->add_subcommand("axioms", "exhaustive ring axiom check");
  ring_axioms->fallthrough();
  ring_axioms->add_option("--modulus", modulus, "base ring modulus")->required();
  ring_axioms->callback([&] {
    if (modulus > 64) {
      throw ResourceCapError("exhaustive ring axiom check is capped at m <= 64");
    }
    const RingCtx ctx(modulus);
    bool ok = ctx.mul(1, 1) == 1 && 1u % ctx.m != 0u;
    std::uint64_t cases = 0;
    for (std::uint32_t a = 0; a < ctx.m && ok; ++a) {
      for (std::uint32_t b = 0; b < ctx.m && ok; ++b) {
        if (ctx.add(a, b) != ctx.add(b, a)) ok = false;
        if (ctx.add(a, ctx.neg(a)) != 0) ok = false;
        if (ctx.mul(a, 1) != a || ctx.mul(1, a) != a) ok = false;
        for (std::uint32_t c = 0; c < ctx.m && ok; ++c) {
          ++cases;
          if (ctx.add(ctx.add(a, b), c) != ctx.add(a, ctx.add(b, c))) ok = false;
          if (ctx.mul(ctx.mul(a, b), c) != ctx.mul(a, ctx.mul(b, c))) ok = false;
          if (ctx.mul(a, ctx.add(b, c)) != ctx.add(ctx.mul(a, b), ctx.mul(a, c))) ok = false;
          if (ctx.mul(ctx.add(b, c), a) != ctx.add(ctx.mul(b, a), ctx.mul(c, a))) ok = false;
        }
      }
    }
    if (oc.json())
      oc.emit(Json{{"m", modulus}, {"status", ok ? "verified" : "failed"}, {"cases_checked", cases}});
    else
      *oc.out << (ok ? "verified" : "failed") << " (" << cases << " triples)\n";
    exit_code = ok ? 0 : 1;
  });

  int mat_n = 0;
  std::string entries;

  CLI::App* imat = app.add_subcommand("imat", "matrices with ideal entries");
  imat->require_subcommand(1);
  imat->fallthrough();

  CLI::App* imat_check = imat->add_subcommand("check", "reflexive-transitive criterion");
  imat_check->fallthrough();
  imat_check->add_option("--n", mat_n, "matrix size")->required();
  imat_check->add_option("--modulus", modulus, "base ring modulus")->required();
  imat_check->add_option("--entries", entries, "generator grid, e.g. \"1 2; 4 1\"")->required();
  imat_check->callback([&] {
    const IdealMatrix u = parse_imat_text(entries, RingCtx(modulus));
    if (u.n() != mat_n) {
      throw InvalidInputError("entry grid size does not match --n");
    }
    const bool rt = is_reflexive_transitive(u);
    if (oc.json())
      oc.emit(Json{{"imat", imat_to_json(u)}, {"reflexive_transitive", rt}});
    else
      *oc.out << "imat: " << imat_text(u) << "\n"
              << "reflexive-transitive: " << (rt ? "true" : "false") << "\n";
    exit_code = rt ? 0 : 1;
  });

  CLI::App* imat_subring = imat->add_subcommand("subring", "the matrix set defined by an ideal matrix");
  imat_subring->fallthrough();
  imat_subring->add_option("--n", mat_n, "matrix size")->required();
  imat_subring->add_option("--modulus", modulus, "base ring modulus")->required();
  imat_subring->add_option("--entries", entries, "generator grid")->required();
  imat_subring->callback([&] {
    const IdealMatrix u = parse_imat_text(entries, RingCtx(modulus));
    if (u.n() != mat_n) {
      throw InvalidInputError("entry grid size does not match --n");
    }
    const SubringSet s = defined_subring(u, oc.max_set_bits);
    const bool subring = is_subring(s);
    if (oc.json()) {
      oc.emit(Json{{"imat", imat_to_json(u)},
                   {"reflexive_transitive", is_reflexive_transitive(u)},
                   {"is_subring", subring},
                   {"set", subring_to_json(s)}});
    } else {
      *oc.out << "size: " << s.size() << "\n"
              << "is_subring: " << (subring ? "true" : "false") << "\n";
    }
  });

  CLI::App* imat_list = imat->add_subcommand("list", "all reflexive-transitive ideal matrices");
  imat_list->fallthrough();
  imat_list->add_option("--n", mat_n, "matrix size")->required();
  imat_list->add_option("--modulus", modulus, "base ring modulus")->required();
  imat_list->callback([&] {
    const std::vector<IdealMatrix> list = enumerate_rt_imats(mat_n, RingCtx(modulus));
    if (oc.json()) {
      Json arr = Json::array();
      for (const IdealMatrix& u : list) arr.push_back(imat_to_json(u));
      oc.emit(Json{{"n", mat_n}, {"m", modulus}, {"count", list.size()}, {"matrices", std::move(arr)}});
    } else {
      *oc.out << "count: " << list.size() << "\n";
      for (const IdealMatrix& u : list) *oc.out << imat_text(u) << "\n";
    }
  });

  CLI::App* subrings = app.add_subcommand("subrings", "subrings of M_n(Z_m)");
  subrings->require_subcommand(1);
  subrings->fallthrough();

  CLI::App* subrings_enum =
      subrings->add_subcommand("enumerate", "all subrings containing the diagonal matrices");
  subrings_enum->fallthrough();
  subrings_enum->add_option("--n", mat_n, "matrix size")->required();
  subrings_enum->add_option("--modulus", modulus, "base ring modulus")->required();
  subrings_enum->callback([&] {
    const RingCtx ctx(modulus);
    const std::vector<SubringSet> list =
        enumerate_diagonal_subrings(mat_n, ctx, default_threading(), oc.max_set_bits);
    if (oc.json()) {
      Json arr = Json::array();
      for (const SubringSet& s : list) {
        arr.push_back(Json{{"set", subring_to_json(s)}, {"imat", imat_to_json(extract_imat(s))}});
      }
      oc.emit(Json{{"n", mat_n}, {"m", modulus}, {"count", list.size()}, {"subrings", std::move(arr)}});
    } else {
      *oc.out << "count: " << list.size() << "\n";
      for (const SubringSet& s : list) {
        *oc.out << "size " << s.size() << "  imat " << imat_text(extract_imat(s)) << "\n";
      }
    }
  });

  int prop = 0;
  bool want_convexity = false;
  bool want_sublattice = false;
  int verify_n = 0;

  CLI::App* verify = app.add_subcommand("verify", "machine-check one proposition");
  verify->fallthrough();
  verify->add_option("--prop", prop, "proposition number 1..4")->check(CLI::Range(1, 4));
  verify->add_flag("--convexity", want_convexity, "order-convexity probe");
  verify->add_flag("--sublattice-witness", want_sublattice,
                   "search for an entrywise-sum witness");
  verify->add_option("--n", verify_n, "matrix size")->required();
  verify->add_option("--modulus", modulus, "base ring modulus")->required();
  verify->callback([&] {
    const int selected = (prop != 0 ? 1 : 0) + (want_convexity ? 1 : 0) + (want_sublattice ? 1 : 0);
    if (selected != 1) {
      throw InvalidInputError("choose exactly one of --prop, --convexity, --sublattice-witness");
    }
    const RingCtx ctx(modulus);
    Report rep;
    if (want_convexity) {
      rep = verify_convexity(verify_n, ctx, default_threading(), oc.max_set_bits);
    } else if (want_sublattice) {
      rep = verify_sublattice_witness(verify_n, ctx);
    } else {
      switch (prop) {
        case 1: rep = verify_prop1(verify_n, ctx, default_threading(), oc.max_set_bits); break;
        case 2: rep = verify_prop2(verify_n, ctx, default_threading(), oc.max_set_bits); break;
        case 3: rep = verify_prop3(verify_n, ctx, default_threading(), oc.max_set_bits); break;
        default: rep = verify_prop4(verify_n, ctx, default_threading(), oc.max_set_bits); break;
      }
    }
    exit_code = emit_report(oc, rep);
  });

  int census_n = 0;
  CLI::App* census_cmd = app.add_subcommand("census", "pre-order / order / linear counts");
  census_cmd->fallthrough();
  census_cmd->add_option("--n", census_n, "index count")->required();
  census_cmd->callback([&] { exit_code = emit_report(oc, census(census_n)); });

  std::vector<std::string> argv_storage;
  argv_storage.push_back("smr");
  for (const std::string& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  return exit_code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceCapError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace smr
