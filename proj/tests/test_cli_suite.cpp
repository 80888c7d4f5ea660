#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "srw/cache.hpp"
#include "srw/constructions.hpp"
#include "srw/error.hpp"
#include "srw/io.hpp"
#include "srw/suite.hpp"

using namespace srw;
namespace fs = std::filesystem;

namespace {

  fs::path scratch(std::string const& name) {
    fs::path const p = fs::temp_directory_path() / ("srw-test-" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }

  std::string slurp(fs::path const& p) {
    std::ifstream      in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  int run(std::string const& args) {
    std::string const cmd = std::string(SRW_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int const         rc  = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }

  std::string q(fs::path const& p) {
    return "'" + p.string() + "'";
  }

  SearchSpec flat(std::size_t order) {
    SearchSpec s;
    s.order = order;
    return s;
  }

  std::vector<std::string> serialised(std::vector<FiniteSemiring> const& ms) {
    std::vector<std::string> out;
    for (auto const& m : ms) out.push_back(format_algebra(m));
    return out;
  }

}  // namespace

TEST_CASE("algebra files round trip") {
  auto const s    = word_semiring(parse_word("abc", true)).semiring;
  Algebra    back = parse_algebra(format_algebra(s));
  auto const* bs  = std::get_if<FiniteSemiring>(&back);
  REQUIRE(bs);
  CHECK(bs->add_table() == s.add_table());
  CHECK(bs->mul_table() == s.mul_table());
  CHECK(bs->labels() == s.labels());

  auto const g  = group_Q8();
  Algebra    gb = parse_algebra(format_algebra(g));
  auto const* bg = std::get_if<FiniteGroup>(&gb);
  REQUIRE(bg);
  CHECK(bg->mul_table() == g.mul_table());
  CHECK(bg->labels() == g.labels());

  fs::path const dir = scratch("io");
  store_algebra(s, dir / "scabc.json");
  CHECK(format_algebra(load_algebra(dir / "scabc.json")) == format_algebra(s));
}

TEST_CASE("algebra file errors") {
  CHECK_THROWS_AS(parse_algebra(R"({"kind":"semiring","add":[[0,0,0],[0,1,0],[0,0,2]],
      "mul":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})"),
                  TableError);
  CHECK_THROWS_AS(parse_algebra(R"({"mul":[[0,1],[1]]})"), TableError);
  CHECK_THROWS_AS(parse_algebra(R"({"mul":[[0,1],[1,0]], "labels":["e"]})"), TableError);
  CHECK_THROWS_AS(parse_algebra(R"({"mul":[[0,1],[1,5]]})"), TableError);
  CHECK_THROWS_AS(parse_algebra("{\"mul\": [[0,1],"), Error);
  // Addition not idempotent.
  CHECK_THROWS_AS(parse_algebra(R"({"kind":"semiring","add":[[1,1],[1,1]],"mul":[[0,0],[0,0]]})"), ValidationError);
  // Not a group: no identity.
  CHECK_THROWS_AS(parse_algebra(R"({"mul":[[0,0],[0,0]]})"), ValidationError);

  Algebra const g = parse_algebra(R"({"mul":[[0,1],[1,0]]})");
  CHECK(std::holds_alternative<FiniteGroup>(g));

  try {
    load_algebra("/nonexistent/dir/x.json");
    FAIL("no error");
  } catch (Error const& e) {
    CHECK(std::string(e.what()).find("/nonexistent/dir/x.json") != std::string::npos);
  }
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("result cache") {
  fs::path const dir = scratch("cache");
  SearchSpec const spec = flat(4);
  auto const       fresh = serialised(enumerate_models(spec));

  ResultCache cache(dir);
  CHECK(serialised(cached_enumerate_models(cache, spec)) == fresh);
  CHECK(cache.stats().misses == 1);
  CHECK(serialised(cached_enumerate_models(cache, spec)) == fresh);
  CHECK(cache.stats().hits == 1);

  ResultCache off(dir, false);
  CHECK(serialised(cached_enumerate_models(off, spec)) == fresh);
  CHECK(off.stats().hits == 0);

  SearchSpec other = spec;
  other.require_si = true;
  CHECK(ResultCache::key("enumerate_models", describe(spec)) != ResultCache::key("enumerate_models", describe(other)));
  CHECK(ResultCache::key("a", "b") == ResultCache::key("a", "b"));
  CHECK(ResultCache::key("a", "b") != ResultCache::key("ab", ""));

  // Damage every entry; the next read recomputes and repairs it.
  for (auto const& e : fs::directory_iterator(dir)) {
    std::string text = slurp(e.path());
    text.back()      = text.back() == 'x' ? 'y' : 'x';
    std::ofstream(e.path(), std::ios::trunc) << text;
  }
  ResultCache again(dir);
  CHECK(serialised(cached_enumerate_models(again, spec)) == fresh);
  CHECK(again.stats().corrupt == 1);
  CHECK(serialised(cached_enumerate_models(again, spec)) == fresh);
  CHECK(again.stats().hits == 1);

  ResultCache iso(scratch("cache-iso"));
  Algebra const a = group_metacyclic(2, 2, 1), b = group_nonmetacyclic(2, 1, 1), q8 = group_Q8();
  auto const    m1 = cached_is_isomorphic(iso, a, b);
  auto const    m2 = cached_is_isomorphic(iso, a, b);
  REQUIRE(m1);
  REQUIRE(m2);
  CHECK(m1->map == m2->map);
  CHECK(iso.stats().hits == 1);
  CHECK_FALSE(cached_is_isomorphic(iso, a, q8));
  CHECK_FALSE(cached_is_isomorphic(iso, a, q8));
}

TEST_CASE("suites") {
  CHECK_THROWS_AS(run_suite("nope"), PreconditionError);
  auto const names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "all") != names.end());

  SuiteReport const r1 = run_suite("groups");
  SuiteReport const r2 = run_suite("groups");
  CHECK(r1.passed());
  REQUIRE(r1.checks.size() == r2.checks.size());
  for (std::size_t k = 0; k < r1.checks.size(); ++k) {
    CHECK(r1.checks[k].id == r2.checks[k].id);
    CHECK(r1.checks[k].status == r2.checks[k].status);
    CHECK(r1.checks[k].detail == r2.checks[k].detail);
    CHECK(r1.checks[k].id.rfind("groups.", 0) == 0);
  }
  auto const j = nlohmann::json::parse(r1.to_json());
  CHECK(j.at("suite") == "groups");
  CHECK(j.at("checks").size() == r1.checks.size());
  CHECK(r1.to_text().find("groups.redei_orders") != std::string::npos);

  SuiteParams p;
  p.lee_max_n = 4;
  SuiteReport const lee = run_suite("lee", p);
  CHECK(lee.passed());
  CHECK(lee.params.at("lee_max_n") == "4");
}

TEST_CASE("command line") {
  fs::path const dir   = scratch("cli");
  std::string const g  = "--cache-dir " + q(dir / "cache") + " ";

  CHECK(run(g + "build --kind word --word ab --commutative " + q(dir / "scab.json")) == 0);
  CHECK(run(g + "build --kind word --word 'ell(3)' " + q(dir / "ell3.json")) == 0);
  CHECK(run(g + "build --kind group --family 'M_2(2,1)' " + q(dir / "m221.json")) == 0);
  CHECK(run(g + "build --kind group --family 'M_2(1,1,1)' " + q(dir / "m2111.json")) == 0);
  CHECK(run(g + "build --kind group --family Q8 " + q(dir / "q8.json")) == 0);
  CHECK(run(g + "build --kind flat-group --family 'Z(2)' " + q(dir / "fz2.json")) == 0);
  CHECK(run(g + "build --kind group --family 'M_3(1,1)' " + q(dir / "bad.json")) == 2);

  auto const scab = parse_algebra(slurp(dir / "scab.json"));
  CHECK(format_algebra(scab) == format_algebra(word_semiring(parse_word("ab", true)).semiring));

  CHECK(run(g + "check --algebra " + q(dir / "scab.json") + " --statement 'x*y = y*x' 'x*x*y = x*x'") == 0);
  CHECK(run(g + "check --algebra " + q(dir / "scab.json") + " --statement 'x1*x2 = y1*y2'") == 1);
  CHECK(run(g + "check --algebra " + q(dir / "scab.json") + " --statement 'x * = y'") == 2);
  CHECK(run(g + "check --algebra " + q(dir / "q8.json") + " --statement 'x = x'") == 2);
  CHECK(run(g + "--budget 5 check --algebra " + q(dir / "ell3.json") + " --statement 'x1 x2 x3 = y1 y2 y3'") == 3);

  CHECK(run(g + "iso " + q(dir / "m221.json") + " " + q(dir / "m2111.json")) == 0);
  CHECK(run(g + "iso " + q(dir / "m221.json") + " " + q(dir / "q8.json")) == 1);
  CHECK(run(g + "--no-cache iso " + q(dir / "m221.json") + " " + q(dir / "m2111.json")) == 0);

  CHECK(run(g + "isoterm --algebra " + q(dir / "scab.json") + " --word xy --bound 2") == 1);
  // In the flat extension of Z(2), g^3 = g, so xxx <= x; no shorter word is.
  CHECK(run(g + "isoterm --algebra " + q(dir / "fz2.json") + " --word x --bound 1") == 0);
  CHECK(run(g + "isoterm --algebra " + q(dir / "fz2.json") + " --word x --bound 2") == 1);

  fs::path const found = dir / "found";
  CHECK(run(g + "--out " + q(found) + " find --order 2 --min-order 1") == 0);
  CHECK(fs::exists(found / "0.json"));
  CHECK(fs::exists(found / "2.json"));
  CHECK_FALSE(fs::exists(found / "3.json"));
  CHECK(run(g + "find --order 13") == 2);

  fs::path const rep = dir / "reports";
  CHECK(run(g + "--out " + q(rep) + " verify --suite groups") == 0);
  auto const j = nlohmann::json::parse(slurp(rep / "report-groups.json"));
  CHECK(j.at("suite") == "groups");

  CHECK(run("frobnicate") == 2);
  CHECK(run("check --algebra") == 2);
  CHECK(run("--help") == 0);
  fs::remove_all(dir.parent_path());
}
