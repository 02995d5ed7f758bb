#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "smr/cli.hpp"
#include "smr/io.hpp"

using namespace smr;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json parse_json(const std::string& text) {
  return Json::parse(text);
}

}  // namespace

TEST_CASE("verify subcommand emits a report") {
  const RunResult r = run({"verify", "--prop", "4", "--n", "2", "--modulus", "4", "--format", "json"});
  CHECK(r.code == 0);
  const Json rep = parse_json(r.out);
  CHECK(rep.at("subject") == "prop4");
  CHECK(rep.at("status") == "verified");
  CHECK(rep.at("details").at("rt_count") == 9);
  CHECK(rep.at("details").at("subring_count") == 9);
  CHECK(r.err.empty());
}

TEST_CASE("classify prints flags and reports a non-pre-order through the exit code") {
  const RunResult r = run({"relation", "classify", "--n", "3", "--pairs", "1,2 2,3"});
  CHECK(r.code == 1);
  CHECK(r.out.find("reflexive: false") != std::string::npos);
  CHECK(r.out.find("transitive: false") != std::string::npos);
  CHECK(r.out.find("preorder: false") != std::string::npos);

  const RunResult ok = run({"relation", "classify", "--n", "2", "--pairs", "1,1 2,2"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("preorder: true") != std::string::npos);
}

TEST_CASE("reflexive-transitive check mirrors the library") {
  const RunResult r = run({"imat", "check", "--n", "2", "--modulus", "4", "--entries", "1 2; 4 1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("reflexive-transitive: true") != std::string::npos);

  const RunResult no = run({"imat", "check", "--n", "3", "--modulus", "8", "--entries",
                            "1 2 8; 8 1 2; 8 8 1"});
  CHECK(no.code == 1);
  CHECK(no.out.find("reflexive-transitive: false") != std::string::npos);
}

TEST_CASE("exit codes for invalid input and resource caps") {
  CHECK(run({"relation", "classify", "--n", "3", "--pairs", "9,9"}).code == 2);
  CHECK(run({"relation", "classify", "--n", "9", "--pairs", "1,1"}).code == 2);
  CHECK(run({"relation", "classify", "--n", "3", "--pairs", "1:2"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"verify", "--n", "2", "--modulus", "4"}).code == 2);  // no check selected
  CHECK(run({"census", "--n", "5"}).code == 3);
  CHECK(run({"relation", "preorders", "--n", "5"}).code == 3);
  CHECK(run({"relation", "extensions", "--n", "7", "--pairs", "1,1"}).code == 3);
  CHECK(run({"imat", "check", "--n", "2", "--modulus", "1", "--entries", "1 1; 1 1"}).code == 2);

  // Diagnostics go to stderr, never stdout.
  const RunResult bad = run({"relation", "classify", "--n", "3", "--pairs", "9,9"});
  CHECK(bad.out.empty());
  CHECK(!bad.err.empty());
}

TEST_CASE("relation helpers") {
  const RunResult closure = run({"relation", "closure", "--n", "3", "--pairs", "1,2 2,3"});
  CHECK(closure.code == 0);
  CHECK(closure.out == "3; 1,1 1,2 1,3 2,2 2,3 3,3\n");

  const RunResult exts =
      run({"relation", "extensions", "--n", "3", "--pairs", "1,1 2,2 3,3 1,2 1,3", "--format", "json"});
  CHECK(exts.code == 0);
  CHECK(parse_json(exts.out).at("count") == 2);

  const RunResult pre = run({"relation", "preorders", "--n", "2", "--format", "json"});
  CHECK(pre.code == 0);
  CHECK(parse_json(pre.out).at("count") == 4);
}

TEST_CASE("ideal and ring helpers") {
  CHECK(run({"ideal", "of", "--modulus", "12", "--x", "8"}).out == "(4)\n");
  CHECK(run({"ideal", "combine", "--kind", "sum", "--modulus", "12", "--a", "2", "--b", "3"}).out ==
        "(1)\n");
  CHECK(run({"ideal", "combine", "--kind", "product", "--modulus", "12", "--a", "4", "--b", "6"})
            .out == "(12)\n");
  CHECK(run({"ideal", "combine", "--kind", "intersection", "--modulus", "12", "--a", "2", "--b",
             "3"}).out == "(6)\n");

  CHECK(run({"ideal", "leq", "--modulus", "12", "--a", "4", "--b", "2"}).code == 0);
  CHECK(run({"ideal", "leq", "--modulus", "12", "--a", "2", "--b", "4"}).code == 1);

  const RunResult list = run({"ideal", "list", "--modulus", "12", "--format", "json"});
  CHECK(parse_json(list.out).at("count") == 6);
  CHECK(parse_json(list.out).at("ideals") == Json::array({1, 2, 3, 4, 6, 12}));

  CHECK(run({"ring", "axioms", "--modulus", "12"}).code == 0);
  CHECK(run({"ring", "axioms", "--modulus", "100"}).code == 3);
}

TEST_CASE("subring listings") {
  const RunResult r = run({"subrings", "enumerate", "--n", "2", "--modulus", "4", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = parse_json(r.out);
  CHECK(j.at("count") == 9);
  CHECK(j.at("subrings").size() == 9);
  // Sizes are listed and every member list parses back.
  for (const auto& entry : j.at("subrings")) {
    CHECK(entry.at("set").at("size").get<std::uint64_t>() >= 16);
    CHECK(entry.at("set").contains("members"));
    CHECK(entry.at("imat").contains("rows"));
  }

  const RunResult imat_list = run({"imat", "list", "--n", "2", "--modulus", "4", "--format", "json"});
  CHECK(parse_json(imat_list.out).at("count") == 9);

  const RunResult sub = run({"imat", "subring", "--n", "2", "--modulus", "4", "--entries",
                             "1 2; 4 1", "--format", "json"});
  const Json sj = parse_json(sub.out);
  CHECK(sj.at("is_subring") == true);
  CHECK(sj.at("set").at("size") == 32);
}

TEST_CASE("repeat invocations are byte-identical apart from elapsed time") {
  const auto strip_elapsed = [](const std::string& text) {
    Json j = Json::parse(text);
    j["elapsed_ms"] = 0;
    return j.dump(2);
  };
  const RunResult a = run({"verify", "--prop", "1", "--n", "2", "--modulus", "3", "--format", "json"});
  const RunResult b = run({"verify", "--prop", "1", "--n", "2", "--modulus", "3", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));

  const RunResult c = run({"subrings", "enumerate", "--n", "2", "--modulus", "4", "--format", "json"});
  const RunResult d = run({"subrings", "enumerate", "--n", "2", "--modulus", "4", "--format", "json"});
  CHECK(c.out == d.out);
}

TEST_CASE("set cap flag and environment override") {
  // Environment lowers the cap: the 2^8-slot space at (2,4) needs 8 bits.
  setenv("SMR_MAX_SET_BITS", "4", 1);
  CHECK(run({"subrings", "enumerate", "--n", "2", "--modulus", "4"}).code == 3);
  // The command-line flag wins over the environment.
  CHECK(run({"subrings", "enumerate", "--n", "2", "--modulus", "4", "--max-set-bits", "24"}).code ==
        0);
  setenv("SMR_MAX_SET_BITS", "not-a-number", 1);
  CHECK(run({"subrings", "enumerate", "--n", "2", "--modulus", "4"}).code == 2);
  unsetenv("SMR_MAX_SET_BITS");
  CHECK(run({"subrings", "enumerate", "--n", "2", "--modulus", "4"}).code == 0);
}

TEST_CASE("json outputs parse as single documents") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"census", "--n", "3", "--format", "json"},
           {"relation", "closure", "--n", "2", "--pairs", "1,2", "--format", "json"},
           {"imat", "check", "--n", "2", "--modulus", "4", "--entries", "1 2; 4 1", "--format",
            "json"},
           {"verify", "--convexity", "--n", "2", "--modulus", "4", "--format", "json"}}) {
    const RunResult r = run(args);
    CHECK_NOTHROW(parse_json(r.out));
  }
}
