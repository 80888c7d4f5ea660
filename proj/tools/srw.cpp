// srw: build, check and compare finite semirings and groups, search for
// small models, and run the verification suites.

#include <cstdlib>
#include <iostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "srw/cache.hpp"
#include "srw/constructions.hpp"
#include "srw/error.hpp"
#include "srw/finder.hpp"
#include "srw/io.hpp"
#include "srw/suite.hpp"

namespace {

  using nlohmann::json;
  using namespace srw;

  struct Globals {
    unsigned long long budget = EngineOptions::from_environment().budget;
    unsigned           jobs   = 1;
    bool               no_cache = false;
    std::string        cache_dir;
    std::string        out;
    bool               json_output = false;

    EngineOptions engine() const {
      EngineOptions o;
      o.budget = budget;
      o.jobs   = jobs;
      return o;
    }
  };

  // "Q8", "M_p(m,n)", "M_p(m,n,1)", "Z(n)"; the underscore is optional.
  FiniteGroup group_family(std::string const& text) {
    std::smatch m;
    if (text == "Q8" || text == "Q_8") {
      return group_Q8();
    }
    static std::regex const redei(R"(M_?(\d+)\((\d+),(\d+)(,1)?\))");
    if (std::regex_match(text, m, redei)) {
      unsigned const p = std::stoul(m[1]), a = std::stoul(m[2]), b = std::stoul(m[3]);
      return m[4].matched ? group_nonmetacyclic(p, a, b) : group_metacyclic(p, a, b);
    }
    static std::regex const cyclic(R"([ZC]_?\(?(\d+)\)?)");
    if (std::regex_match(text, m, cyclic)) {
      return group_cyclic(std::stoul(m[1]));
    }
    throw PreconditionError("unknown group family '" + text + "' (expected Q8, M_p(m,n), M_p(m,n,1) or Z(n))");
  }

  void print_json(json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  json assignment_json(Assignment const& a, FiniteSemiring const& s) {
    json out = json::object();
    for (auto const& [var, e] : a) out[var] = s.label(e);
    return out;
  }

  FiniteSemiring load_semiring(std::string const& path) {
    auto a = load_algebra(path);
    if (auto* s = std::get_if<FiniteSemiring>(&a)) {
      return std::move(*s);
    }
    throw PreconditionError(path + " holds a group; a semiring is needed");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"srw: finite semirings, groups and their identities"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (char const* env = std::getenv("SRW_CACHE_DIR")) {
    g.cache_dir = env;
  } else {
    g.cache_dir = ".srw-cache";
  }
  app.add_option("--budget", g.budget, "search node budget per statement");
  app.add_option("--jobs", g.jobs, "worker threads for satisfaction checks")->check(CLI::Range(1u, 256u));
  app.add_flag("--no-cache", g.no_cache, "neither read nor write the result cache");
  app.add_option("--cache-dir", g.cache_dir, "result cache directory");
  app.add_option("--out", g.out, "output directory");
  app.add_flag("--json", g.json_output, "machine-readable output");

  // build
  auto*                    build = app.add_subcommand("build", "construct a named algebra and store it");
  std::string              kind, family, build_file;
  std::vector<std::string> build_words;
  bool                     commutative = false, monoid = false;
  build->add_option("--kind", kind, "flat-group, word or group")
      ->required()
      ->check(CLI::IsMember({"flat-group", "word", "group"}));
  build->add_option("--family", family, "group family: Q8, M_p(m,n), M_p(m,n,1), Z(n)");
  build->add_option("--word", build_words, "word or pattern such as abacdc, ell(4), k(5,2), s(1), p(2)");
  build->add_flag("--commutative", commutative, "commutative word semiring S_c");
  build->add_flag("--monoid", monoid, "adjoin the empty word as identity (M, M_c)");
  build->add_option("file", build_file, "output JSON file")->required();

  // check
  auto*                    check = app.add_subcommand("check", "decide statements in an algebra");
  std::string              check_algebra;
  std::vector<std::string> statements;
  check->add_option("--algebra", check_algebra)->required();
  check->add_option("--statement", statements, "identity, order or quasi-identity")->required();

  // iso
  auto*       iso = app.add_subcommand("iso", "isomorphism test; exit 0 iff isomorphic");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  // find
  auto*                    find = app.add_subcommand("find", "enumerate ai-semirings up to isomorphism");
  SearchSpec               spec;
  std::vector<std::string> sat, fail;
  bool                     not_flat = false;
  std::size_t              limit    = 0;
  find->add_option("--order", spec.order, "largest order")->required();
  find->add_option("--min-order", spec.min_order, "smallest order (default: --order)");
  find->add_flag("--flat", spec.require_flat, "flat semirings (default)");
  find->add_flag("--ai", not_flat, "all ai-semirings (order <= 6)");
  find->add_option("--satisfies", sat);
  find->add_option("--fails", fail);
  find->add_flag("--si", spec.require_si, "subdirectly irreducible only");
  find->add_option("--limit", limit);

  // verify
  auto*       verify = app.add_subcommand("verify", "run a verification suite; exit 0 iff every check passes");
  std::string suite_name;
  SuiteParams params;
  verify->add_option("--suite", suite_name)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--lee-max-n", params.lee_max_n, "Lee matrix over n, m in 3..N");
  verify->add_option("--finder-max-order", params.finder_max_order, "largest order for finder checks");
  verify->add_option("--isoterm-bound", params.isoterm_bound, "extra word length in isoterm checks");

  // isoterm
  auto*       isoterm = app.add_subcommand("isoterm", "bounded isoterm test; exit 0 iff no witness within the bound");
  std::string isoterm_algebra, isoterm_word;
  unsigned    bound = 2;
  isoterm->add_option("--algebra", isoterm_algebra)->required();
  isoterm->add_option("--word", isoterm_word)->required();
  isoterm->add_option("--bound", bound);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    // --help exits 0; every other parse error is a usage error.
    return app.exit(e) == 0 ? 0 : 2;
  }

  ResultCache cache(g.cache_dir, !g.no_cache);

  try {
    if (*build) {
      Algebra a;
      if (kind == "word") {
        if (build_words.empty()) {
          throw PreconditionError("--kind word needs --word");
        }
        std::vector<Word> ws;
        for (auto const& w : build_words) ws.push_back(parse_word_or_pattern(w, commutative));
        a = word_semiring(ws, commutative, monoid).semiring;
      } else {
        if (family.empty()) {
          throw PreconditionError("--kind " + kind + " needs --family");
        }
        auto grp = group_family(family);
        if (kind == "group") {
          a = std::move(grp);
        } else {
          a = flat_extension(grp);
        }
      }
      std::filesystem::path file = build_file;
      if (!g.out.empty() && file.is_relative()) file = std::filesystem::path(g.out) / file;
      store_algebra(a, file);
      if (g.json_output) {
        print_json({{"file", file.string()}, {"order", algebra_size(a)}});
      } else {
        std::cout << "wrote " << file.string() << " (order " << algebra_size(a) << ")\n";
      }
      return 0;
    }

    if (*check) {
      auto const s  = load_semiring(check_algebra);
      bool       ok = true;
      json       results = json::array();
      for (auto const& text : statements) {
        auto const st = parse_statement(text);
        auto const v  = satisfies(s, st, g.engine());
        ok            = ok && v.holds;
        if (g.json_output) {
          json r{{"statement", format_statement(st)}, {"holds", v.holds}, {"nodes", v.nodes}};
          if (v.witness) r["witness"] = assignment_json(*v.witness, s);
          results.push_back(r);
        } else {
          std::cout << (v.holds ? "holds  " : "FAILS  ") << format_statement(st);
          if (v.witness) std::cout << "  at " << format_assignment(*v.witness, s);
          std::cout << "\n";
        }
      }
      if (g.json_output) print_json(results);
      return ok ? 0 : 1;
    }

    if (*iso) {
      auto const a = load_algebra(iso_a);
      auto const b = load_algebra(iso_b);
      auto const m = cached_is_isomorphic(cache, a, b);
      if (g.json_output) {
        print_json({{"isomorphic", m.has_value()}, {"map", m ? json(m->map) : json(nullptr)}});
      } else if (m) {
        std::cout << "isomorphic:";
        for (element x = 0; x < m->map.size(); ++x) std::cout << " " << x << "->" << m->map[x];
        std::cout << "\n";
      } else {
        std::cout << "not isomorphic\n";
      }
      return m ? 0 : 1;
    }

    if (*find) {
      if (not_flat) spec.require_flat = false;
      for (auto const& t : sat) spec.constraints.push_back(parse_statement(t));
      for (auto const& t : fail) spec.failing.push_back(parse_statement(t));
      if (limit > 0) spec.limit = limit;
      auto const models = cached_enumerate_models(cache, spec, g.engine());
      std::vector<std::string> files;
      if (!g.out.empty()) {
        for (std::size_t k = 0; k < models.size(); ++k) {
          auto const path = std::filesystem::path(g.out) / (std::to_string(k) + ".json");
          store_algebra(models[k], path);
          files.push_back(path.string());
        }
      }
      if (g.json_output) {
        json arr = json::array();
        for (auto const& m : models) arr.push_back(json::parse(format_algebra(m)));
        print_json({{"spec", describe(spec)}, {"count", models.size()}, {"models", arr}, {"files", files}});
      } else {
        std::cout << describe(spec) << ": " << models.size() << " model(s)\n";
        for (std::size_t k = 0; k < models.size(); ++k) {
          std::cout << "#" << k << " order " << models[k].size() << " mul " << json(models[k].mul_table().rows()).dump()
                    << "\n";
        }
      }
      return 0;
    }

    if (*verify) {
      params.engine  = g.engine();
      params.cache   = &cache;
      params.out_dir = g.out;
      auto const report = run_suite(suite_name, params);
      std::cout << (g.json_output ? report.to_json() + "\n" : report.to_text());
      if (!g.out.empty()) {
        std::filesystem::create_directories(g.out);
        std::ofstream(std::filesystem::path(g.out) / ("report-" + suite_name + ".json")) << report.to_json() << "\n";
      }
      return report.passed() ? 0 : 1;
    }

    if (*isoterm) {
      auto const s = load_semiring(isoterm_algebra);
      auto const w = parse_word_or_pattern(isoterm_word);
      auto const v = is_isoterm_bounded(s, w, bound, g.engine());
      if (g.json_output) {
        print_json({{"word", format_word(w)},
                    {"isoterm_up_to_bound", v.isoterm_up_to_bound},
                    {"max_length", v.max_length},
                    {"witness", v.witness ? json(format_word(*v.witness)) : json(nullptr)},
                    {"candidates", v.candidates},
                    {"method", v.method}});
      } else if (v.isoterm_up_to_bound) {
        std::cout << format_word(w) << " is an isoterm up to length " << v.max_length << "\n";
      } else {
        std::cout << format_word(w) << " is not an isoterm: " << format_word(*v.witness) << " <= "
                  << format_word(w) << "\n";
      }
      return v.isoterm_up_to_bound ? 0 : 1;
    }
  } catch (BudgetExceeded const& e) {
    std::cerr << "srw: " << e.what() << " (at least " << e.required() << " nodes needed)\n";
    return 3;
  } catch (Error const& e) {
    std::cerr << "srw: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "srw: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
