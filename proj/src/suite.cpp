#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "srw/constructions.hpp"
#include "srw/embedding.hpp"
#include "srw/error.hpp"
#include "srw/finder.hpp"
#include "srw/io.hpp"
#include "srw/suite.hpp"

namespace srw {

  namespace {

    using nlohmann::json;

    struct Outcome {
      bool                     pass = true;
      std::string              detail;
      json                     witness;
      std::vector<std::string> artifacts;

      // Records a failed expectation; the first one becomes the witness.
      void expect(bool ok, std::string const& what, json w = nullptr) {
        if (!ok) {
          if (pass) {
            witness = w.is_null() ? json(what) : std::move(w);
          }
          pass = false;
          note("FAILED: " + what);
        }
      }
      void note(std::string const& line) {
        if (!detail.empty()) {
          detail += '\n';
        }
        detail += line;
      }
    };

    struct Check {
      std::string                                   id;
      std::string                                   description;
      std::function<Outcome(SuiteParams const&)>    run;
      std::function<bool(SuiteParams const&)>       enabled = [](SuiteParams const&) { return true; };
    };

    std::optional<Morphism> iso(SuiteParams const& p, Algebra const& a, Algebra const& b) {
      return p.cache ? cached_is_isomorphic(*p.cache, a, b) : is_isomorphic(a, b);
    }

    std::vector<FiniteSemiring> models(SuiteParams const& p, SearchSpec const& spec) {
      return p.cache ? cached_enumerate_models(*p.cache, spec, p.engine) : enumerate_models(spec, p.engine);
    }

    json assignment_json(Assignment const& a, FiniteSemiring const& s) {
      json out = json::object();
      for (auto const& [var, e] : a) {
        out[var] = s.label(e);
      }
      return out;
    }

    std::string verdict_line(std::string const& what, FiniteSemiring const& s, Verdict const& v) {
      std::string line = what + (v.holds ? ": holds" : ": fails");
      if (v.witness) {
        line += " at " + format_assignment(*v.witness, s);
      }
      return line;
    }

    ////////////////////////////////////////////////////////////////////////
    // groups
    ////////////////////////////////////////////////////////////////////////

    // Relations are re-checked here from the labels, independently of the
    // constructors' own checks.
    bool metacyclic_relations(FiniteGroup const& g, unsigned p, unsigned m, unsigned n) {
      element const a = g.element_named("a"), b = g.element_named("b");
      std::uint64_t pm = 1, pn = 1;
      for (unsigned k = 0; k < m; ++k) pm *= p;
      for (unsigned k = 0; k < n; ++k) pn *= p;
      std::uint64_t const r = 1 + pm / p;
      return g.element_order(a) == pm && g.element_order(b) == pn
             && g.mul(g.mul(g.inverse(b), a), b) == g.power(a, r)
             && subalgebra_closure(g, {a, b}).elements.size() == g.size();
    }

    bool nonmetacyclic_relations(FiniteGroup const& g, unsigned p, unsigned m, unsigned n) {
      element const a = g.element_named("a"), b = g.element_named("b"), c = g.element_named("c");
      std::uint64_t pm = 1, pn = 1;
      for (unsigned k = 0; k < m; ++k) pm *= p;
      for (unsigned k = 0; k < n; ++k) pn *= p;
      return g.element_order(a) == pm && g.element_order(b) == pn && g.element_order(c) == p
             && g.commutator(a, b) == c && g.commutator(a, c) == g.identity()
             && g.commutator(b, c) == g.identity()
             && subalgebra_closure(g, {a, b}).elements.size() == g.size();
    }

    Outcome redei_orders(SuiteParams const&) {
      Outcome o;
      auto    q8 = group_Q8();
      element a = q8.element_named("a"), b = q8.element_named("b");
      o.expect(q8.size() == 8, "|Q8| = 8");
      o.expect(q8.element_order(a) == 4 && q8.power(b, 2) == q8.power(a, 2)
                   && q8.mul(q8.mul(q8.inverse(b), a), b) == q8.inverse(a),
               "Q8 relations a^4 = 1, b^2 = a^2, b^-1 a b = a^-1");
      o.note("|Q8| = 8");
      for (auto [p, m, n] : std::vector<std::array<unsigned, 3>>{{2, 2, 1}, {2, 2, 2}, {3, 1, 1}, {3, 2, 1}, {5, 1, 1}}) {
        std::string const tag = std::to_string(p) + "(" + std::to_string(m) + "," + std::to_string(n);
        std::size_t       order = 1;
        for (unsigned k = 0; k < m + n; ++k) order *= p;
        if (m >= 2) {
          auto g = group_metacyclic(p, m, n);
          o.expect(g.size() == order, "|M_" + tag + ")| = " + std::to_string(order));
          o.expect(metacyclic_relations(g, p, m, n), "relations of M_" + tag + ")");
          o.note("|M_" + tag + ")| = " + std::to_string(g.size()));
        } else {
          // b^-1 a b = a^2 with a^p = 1 is not an automorphism of order
          // dividing p for m = 1; the family starts at m = 2.
          bool rejected = false;
          try {
            group_metacyclic(p, m, n);
          } catch (PreconditionError const&) {
            rejected = true;
          }
          o.expect(rejected, "M_" + tag + ") is rejected (m = 1)");
          o.note("M_" + tag + ") not constructed: the metacyclic family needs m >= 2");
        }
        auto h = group_nonmetacyclic(p, m, n);
        o.expect(h.size() == order * p, "|M_" + tag + ",1)| = " + std::to_string(order * p));
        o.expect(nonmetacyclic_relations(h, p, m, n), "relations of M_" + tag + ",1)");
        o.note("|M_" + tag + ",1)| = " + std::to_string(h.size()));
      }
      return o;
    }

    Outcome dihedral(SuiteParams const& p) {
      Outcome o;
      auto const d1 = group_metacyclic(2, 2, 1), d2 = group_nonmetacyclic(2, 1, 1);
      auto const m  = iso(p, d1, d2);
      o.expect(m.has_value(), "M_2(2,1) ~ M_2(1,1,1)");
      if (m) {
        json map = json::object();
        for (element x = 0; x < d1.size(); ++x) map[d1.label(x)] = d2.label((*m)(x));
        o.note("M_2(2,1) -> M_2(1,1,1): " + map.dump());
      }
      o.expect(!iso(p, group_Q8(), d1).has_value(), "Q8 not ~ M_2(2,1)");
      o.note("Q8 and M_2(2,1) are not isomorphic");
      return o;
    }

    Outcome product_subgroup(SuiteParams const& p, FiniteGroup const& g,
                             std::vector<std::array<char const*, 2>> const& gens, FiniteGroup const& expected,
                             std::string const& name, std::size_t order) {
      Outcome                           o;
      std::vector<FiniteGroup>          factors{g, g};
      std::vector<std::vector<element>> tuples;
      for (auto const& [x, y] : gens) {
        tuples.push_back({g.element_named(x), g.element_named(y)});
      }
      auto const h = closure_in_product(std::span<FiniteGroup const>(factors), tuples);
      o.expect(h.algebra.size() == order, "|H| = " + std::to_string(order) + ", got " + std::to_string(h.algebra.size()));
      auto const m = iso(p, h.algebra, expected);
      o.expect(m.has_value(), "H ~ " + name);
      o.note("|H| = " + std::to_string(h.algebra.size()) + (m ? ", isomorphic to " : ", not isomorphic to ") + name);
      return o;
    }

    Outcome exponents(SuiteParams const&) {
      Outcome o;
      for (auto [p, m] : std::vector<std::array<unsigned, 2>>{{3, 1}, {2, 2}, {3, 2}, {5, 1}}) {
        std::uint64_t pm = 1;
        for (unsigned k = 0; k < m; ++k) pm *= p;
        auto const e = group_exponent(group_nonmetacyclic(p, m, m));
        std::string const tag = "exp(M_" + std::to_string(p) + "(" + std::to_string(m) + "," + std::to_string(m) + ",1))";
        o.expect(e == pm, tag + " = " + std::to_string(pm) + ", got " + std::to_string(e));
        o.note(tag + " = " + std::to_string(e));
      }
      return o;
    }

    std::vector<std::vector<unsigned>> abelian_types_up_to(unsigned bound) {
      // Invariant factor lists d1 | d2 | ... with product <= bound.
      std::vector<std::vector<unsigned>> out{{}};
      std::function<void(std::vector<unsigned>&, unsigned)> grow = [&](std::vector<unsigned>& f, unsigned prod) {
        for (unsigned d = 2; prod * d <= bound; ++d) {
          if (!f.empty() && d % f.back() != 0) {
            continue;
          }
          f.push_back(d);
          out.push_back(f);
          grow(f, prod * d);
          f.pop_back();
        }
      };
      std::vector<unsigned> f;
      grow(f, 1);
      return out;
    }

    Outcome minimal_nonabelian(SuiteParams const&) {
      Outcome o;
      std::vector<std::pair<std::string, FiniteGroup>> yes{
          {"Q8", group_Q8()}, {"M_2(2,2)", group_metacyclic(2, 2, 2)}, {"M_3(1,1,1)", group_nonmetacyclic(3, 1, 1)}};
      for (auto const& [name, g] : yes) {
        auto const v = is_minimal_nonabelian(g);
        o.expect(v.is_minimal_nonabelian, name + " is minimal nonabelian");
        o.note(name + (v.is_minimal_nonabelian ? ": minimal nonabelian" : ": not minimal nonabelian"));
      }
      unsigned count = 0;
      for (auto const& type : abelian_types_up_to(16)) {
        std::vector<FiniteGroup> factors;
        std::string              name = "Z1";
        for (unsigned d : type) {
          factors.push_back(group_cyclic(d));
        }
        if (!type.empty()) {
          name.clear();
          for (unsigned d : type) name += (name.empty() ? "Z" : " x Z") + std::to_string(d);
        }
        FiniteGroup g = factors.empty() ? group_cyclic(1) : direct_product(std::span<FiniteGroup const>(factors));
        o.expect(!is_minimal_nonabelian(g).is_minimal_nonabelian, name + " is not minimal nonabelian");
        ++count;
      }
      o.note(std::to_string(count) + " abelian groups of order <= 16: none minimal nonabelian");
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // semirings
    ////////////////////////////////////////////////////////////////////////

    Statement const& law(int k) {
      static std::vector<Statement> const laws{
          parse_statement("x*y = y*x"), parse_statement("x*x*y = x*x"),
          parse_statement("x1*x2*x3 = y1*y2*y3"), parse_statement("x1*x2 = y1*y2")};
      return laws.at(k - 1);
    }

    Outcome identity_table(SuiteParams const& p) {
      Outcome    o;
      auto const scab  = word_semiring(parse_word("ab", true)).semiring;
      auto const scabc = word_semiring(parse_word("abc", true)).semiring;
      auto const sca   = word_semiring(parse_word("a", true)).semiring;
      struct Row {
        char const*            algebra;
        FiniteSemiring const*  s;
        std::string            name;
        Statement              st;
        bool                   expected;
      };
      std::vector<Row> rows{
          {"S_c(ab)", &scab, "(i1)", law(1), true},    {"S_c(ab)", &scab, "(i2)", law(2), true},
          {"S_c(ab)", &scab, "(i3)", law(3), true},    {"S_c(ab)", &scab, "(i4)", law(4), false},
          {"S_c(abc)", &scabc, "(i1)", law(1), true},  {"S_c(abc)", &scabc, "(i2)", law(2), true},
          {"S_c(abc)", &scabc, "x1x2x3x4 = y1y2y3y4", parse_statement("x1*x2*x3*x4 = y1*y2*y3*y4"), true},
          {"S_c(abc)", &scabc, "(i3)", law(3), false}, {"S_c(a)", &sca, "(i4)", law(4), true}};
      for (auto const& r : rows) {
        auto const v = satisfies(*r.s, r.st, p.engine);
        std::string const what = std::string(r.algebra) + " |= " + r.name;
        o.note(verdict_line(what, *r.s, v));
        o.expect(v.holds == r.expected, what + (r.expected ? " should hold" : " should fail"),
                 v.witness ? json{{"algebra", r.algebra}, {"statement", r.name},
                                  {"assignment", assignment_json(*v.witness, *r.s)}}
                           : json{{"algebra", r.algebra}, {"statement", r.name}});
        if (!v.holds) {
          o.expect(v.witness && !holds_under(r.st, *r.s, *v.witness), what + " witness re-check");
        }
      }
      return o;
    }

    Outcome scab_embeddings(SuiteParams const& p) {
      Outcome    o;
      SearchSpec spec;
      spec.order       = p.finder_max_order;
      spec.min_order   = 2;
      spec.require_si  = true;
      spec.constraints = {law(1), law(2), law(3)};
      auto const found = models(p, spec);
      o.note(std::to_string(found.size()) + " SI flat models of order <= " + std::to_string(spec.order)
             + " satisfy (i1), (i2), (i3)");
      o.expect(!found.empty(), "the finder produced at least one model");
      auto const scab      = word_semiring(parse_word("ab", true)).semiring;
      bool       saw_scab  = false;
      for (std::size_t k = 0; k < found.size(); ++k) {
        auto const& s = found[k];
        saw_scab      = saw_scab || iso(p, s, scab).has_value();
        try {
          auto const e = scab_power_embedding(s, p.engine);
          o.note("model " + std::to_string(k) + " (order " + std::to_string(s.size()) + "): m = "
                 + std::to_string(e.m) + ", |T| = " + std::to_string(e.generated_order) + ", |T/I| = "
                 + std::to_string(e.quotient.size()));
        } catch (Error const& e) {
          o.expect(false, "embedding of model " + std::to_string(k) + ": " + e.what(),
                   json{{"model", json::parse(format_algebra(s))}, {"error", e.what()}});
        }
      }
      o.expect(saw_scab, "S_c(ab) is among the models");
      return o;
    }

    Outcome anticommutativity(SuiteParams const& p) {
      Outcome o;
      for (int n = 3; n <= 5; ++n) {
        auto const s = word_semiring(generate_pattern("ell", {n})).semiring;
        auto const v = check_anticommutative(s, p.engine);
        o.note(verdict_line("S(ell(" + std::to_string(n) + ")) anticommutative", s, v));
        o.expect(v.holds, "S(ell(" + std::to_string(n) + ")) is anticommutative");
      }
      auto const scab = word_semiring(parse_word("ab", true)).semiring;
      auto const va   = check_anticommutative(scab, p.engine);
      o.note(verdict_line("S_c(ab) anticommutative", scab, va));
      o.expect(!va.holds, "S_c(ab) is not anticommutative");

      auto const st = parse_statement("x y z + y z x = x y z + y z x + x x x");
      for (int n = 1; n <= 2; ++n) {
        auto const s = word_semiring(generate_pattern("p", {n})).semiring;
        auto const v = satisfies(s, st, p.engine);
        o.note(verdict_line("S(p(" + std::to_string(n) + ")) |= xyz + yzx = xyz + yzx + xxx", s, v));
        o.expect(v.holds, "S(p(" + std::to_string(n) + ")) satisfies xyz + yzx = xyz + yzx + xxx");
      }
      auto const scabc = word_semiring(parse_word("abc", true)).semiring;
      auto const v     = satisfies(scabc, st, p.engine);
      o.note(verdict_line("S_c(abc) |= xyz + yzx = xyz + yzx + xxx", scabc, v));
      Assignment const expected{{"x", scabc.element_named("a")}, {"y", scabc.element_named("b")},
                                {"z", scabc.element_named("c")}};
      o.expect(!v.holds && v.witness == expected, "S_c(abc) fails with witness (a,b,c)",
               v.witness ? assignment_json(*v.witness, scabc) : json(nullptr));
      return o;
    }

    Outcome maxplus(SuiteParams const& p) {
      Outcome    o;
      SearchSpec spec;
      spec.order       = std::min<std::size_t>(5, p.finder_max_order);
      spec.min_order   = 2;
      spec.require_si  = true;
      spec.constraints = {parse_statement("x y + x = x y"), parse_statement("x y = y x")};
      auto const found = models(p, spec);
      auto const sa    = word_semiring(parse_word("a")).semiring;
      auto const m1    = word_semiring({parse_word("1")}, false, true).semiring;
      int        n_sa = 0, n_m1 = 0;
      for (auto const& s : found) {
        bool const is_sa = iso(p, s, sa).has_value();
        bool const is_m1 = iso(p, s, m1).has_value();
        n_sa += is_sa;
        n_m1 += is_m1;
        o.expect(is_sa || is_m1, "model of order " + std::to_string(s.size()) + " is S(a) or M(1)",
                 json::parse(format_algebra(s)));
      }
      o.note(std::to_string(found.size()) + " SI flat models of order <= " + std::to_string(spec.order)
             + " satisfy xy + x = xy and xy = yx");
      o.expect(found.size() == 2 && n_sa == 1 && n_m1 == 1, "exactly S(a) and M(1) up to isomorphism");
      return o;
    }

    Outcome separating(SuiteParams const& p) {
      Outcome    o;
      auto const found = find_separating_algebra({law(1), law(2), law(3)}, {law(4)},
                                                 std::min<std::size_t>(4, p.finder_max_order), true, true, p.engine);
      o.expect(found.has_value(), "a flat SI model of (i1)-(i3) failing (i4) exists at order <= 4");
      if (found) {
        auto const scab = word_semiring(parse_word("ab", true)).semiring;
        bool const same = iso(p, *found, scab).has_value();
        o.note("least model has order " + std::to_string(found->size())
               + (same ? ", isomorphic to S_c(ab)" : ", not isomorphic to S_c(ab)"));
        o.expect(same, "the least separating model is S_c(ab)", json::parse(format_algebra(*found)));
      }
      return o;
    }

    Outcome flat_counts(SuiteParams const& p) {
      Outcome o;
      for (std::size_t n = 1; n <= std::min<std::size_t>(3, p.finder_max_order); ++n) {
        SearchSpec spec;
        spec.order       = n;
        auto const found = models(p, spec);
        for (std::size_t i = 0; i < found.size(); ++i) {
          o.expect(is_zero_cancellative(found[i]), "model is 0-cancellative");
          for (std::size_t j = 0; j < i; ++j) {
            o.expect(!iso(p, found[i], found[j]).has_value(), "models pairwise non-isomorphic");
          }
        }
        o.note("flat semirings of order " + std::to_string(n) + ": " + std::to_string(found.size()));
      }
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // lee
    ////////////////////////////////////////////////////////////////////////

    Outcome lee_matrix(SuiteParams const& p) {
      Outcome o;
      json    matrix = json::array();
      for (int n = 3; n <= p.lee_max_n; ++n) {
        auto const s = word_semiring(generate_pattern("ell", {n})).semiring;
        for (int m = 3; m <= p.lee_max_n; ++m) {
          Term const v  = word_term(generate_pattern("ell", {m}));
          auto const vd = check_free_laws(s, v, p.engine);
          std::string const tag = "S(ell(" + std::to_string(n) + ")) |= ell(" + std::to_string(m) + ")-free laws";
          o.note(verdict_line(tag, s, vd) + " [" + std::to_string(vd.nodes) + " nodes]");
          o.expect(vd.holds == (n != m), tag + (n != m ? " should hold" : " should fail"),
                   json{{"n", n}, {"m", m}, {"holds", vd.holds}});
          matrix.push_back({{"n", n}, {"m", m}, {"holds", vd.holds}});
        }
      }
      return o;
    }

    Outcome lee_free_words(SuiteParams const& p) {
      Outcome o;
      for (int n = 3; n <= p.lee_max_n; ++n) {
        for (int m = 3; m <= p.lee_max_n; ++m) {
          auto const v = is_v_free_word(generate_pattern("ell", {n}), generate_pattern("ell", {m}));
          o.expect(v.is_free == (n != m), "ell(" + std::to_string(n) + ") is ell(" + std::to_string(m)
                                              + ")-free iff n != m");
        }
      }
      o.note("ell(n) is ell(m)-free exactly when n != m, for n, m in 3.." + std::to_string(p.lee_max_n));
      return o;
    }

    Outcome kni(SuiteParams const& p) {
      Outcome o;
      for (auto [n, i, m] : std::vector<std::array<int, 3>>{{4, 2, 6}, {5, 2, 7}, {5, 3, 7}}) {
        std::string const tag = "k(" + std::to_string(n) + "," + std::to_string(i) + ")";
        try {
          auto const h = verify_kni_embedding(n, i, m);
          o.note(tag + " -> ell(" + std::to_string(m) + "): injective homomorphism");
        } catch (Error const& e) {
          o.expect(false, tag + " -> ell(" + std::to_string(m) + "): " + e.what());
        }
        auto const tl = t_subsemiring(generate_pattern("ell", {n}), i);
        auto const tk = t_subsemiring(generate_pattern("k", {n, i}), i);
        bool const same = iso(p, tl.algebra, tk.algebra).has_value();
        o.note("T_" + std::to_string(i) + "(ell(" + std::to_string(n) + ")) and T_" + std::to_string(i) + "(" + tag
               + "): order " + std::to_string(tl.algebra.size()) + (same ? ", isomorphic" : ", not isomorphic"));
        o.expect(same, "T_i(ell(n)) ~ T_i(k(n,i)) for " + tag);
      }
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // isoterm
    ////////////////////////////////////////////////////////////////////////

    Outcome isoterm_s1(SuiteParams const& p) {
      Outcome    o;
      auto const s = word_semiring({parse_word("abacdc")}, false, true).semiring;
      auto const w = generate_pattern("s", {1});
      auto const v = is_isoterm_bounded(s, w, p.isoterm_bound, p.engine);
      o.note("s(1) = " + format_word(w) + " in M(abacdc): "
             + (v.isoterm_up_to_bound ? "isoterm up to length " + std::to_string(v.max_length)
                                      : "witness " + format_word(*v.witness))
             + " [" + std::to_string(v.candidates) + " nodes]");
      o.expect(v.isoterm_up_to_bound, "s(1) is an isoterm for M(abacdc) up to the bound",
               v.witness ? json(format_word(*v.witness)) : json(nullptr));
      return o;
    }

    Outcome isoterm_scab(SuiteParams const& p) {
      Outcome    o;
      auto const s = word_semiring(parse_word("ab", true)).semiring;
      auto const v = is_isoterm_bounded(s, parse_word("xy"), p.isoterm_bound, p.engine);
      o.note(std::string("xy in S_c(ab): ") + (v.witness ? "witness " + format_word(*v.witness) : "no witness"));
      o.expect(v.witness && *v.witness == parse_word("yx"), "S_c(ab) |= yx <= xy",
               v.witness ? json(format_word(*v.witness)) : json(nullptr));
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // Registry
    ////////////////////////////////////////////////////////////////////////

    std::vector<std::pair<std::string, std::vector<Check>>> const& registry() {
      static std::vector<std::pair<std::string, std::vector<Check>>> const r{
          {"groups",
           {{"groups.redei_orders", "Redei groups: |Q8| = 8, |M_p(m,n)| = p^(m+n), |M_p(m,n,1)| = p^(m+n+1) with their defining relations", redei_orders},
            {"groups.dihedral", "M_2(2,1) and M_2(1,1,1) are both the dihedral group of order 8; Q8 is not", dihedral},
            {"groups.subgroup_q8", "<(a,1),(ab,b)> in Q8 x Q8 is isomorphic to M_2(2,2), order 16",
             [](SuiteParams const& p) {
               return product_subgroup(p, group_Q8(), {{{"a", "1"}}, {{"ab", "b"}}}, group_metacyclic(2, 2, 2), "M_2(2,2)", 16);
             }},
            {"groups.subgroup_m222", "<(a,b),(b,1)> in M_2(2,2)^2 is isomorphic to M_2(2,2,1), order 32",
             [](SuiteParams const& p) {
               return product_subgroup(p, group_metacyclic(2, 2, 2), {{{"a", "b"}}, {{"b", "1"}}},
                                       group_nonmetacyclic(2, 2, 2), "M_2(2,2,1)", 32);
             }},
            {"groups.subgroup_m321", "<(a,b),(1,a)> in M_3(2,1)^2 is isomorphic to M_3(2,2), order 81",
             [](SuiteParams const& p) {
               return product_subgroup(p, group_metacyclic(3, 2, 1), {{{"a", "b"}}, {{"1", "a"}}},
                                       group_metacyclic(3, 2, 2), "M_3(2,2)", 81);
             }},
            {"groups.subgroup_m3211", "<(a,b),(1,a)> in M_3(2,1,1)^2 is isomorphic to M_3(2,2,1), order 243",
             [](SuiteParams const& p) {
               return product_subgroup(p, group_nonmetacyclic(3, 2, 1), {{{"a", "b"}}, {{"1", "a"}}},
                                       group_nonmetacyclic(3, 2, 2), "M_3(2,2,1)", 243);
             }},
            {"groups.exponent", "exp(M_p(m,m,1)) = p^m", exponents},
            {"groups.minimal_nonabelian", "Q8, M_2(2,2), M_3(1,1,1) are minimal nonabelian; abelian groups are not", minimal_nonabelian}}},
          {"semirings",
           {{"semirings.identities", "S_c(ab) satisfies (i1)-(i3) but not (i4); S_c(abc) satisfies (i1), (i2), x1x2x3x4 = y1y2y3y4 but not (i3); S_c(a) satisfies (i4)", identity_table},
            {"semirings.scab_embedding", "every SI flat semiring satisfying (i1)-(i3) embeds in T/I for T generated by {a,b}^m in S_c(ab)^m", scab_embeddings},
            {"semirings.separating", "the least SI flat model of (i1)-(i3) failing (i4) is S_c(ab)", separating},
            {"semirings.anticommutative", "S(ell(n)) is anticommutative and S_c(ab) is not; S(p(n)) satisfies xyz + yzx = xyz + yzx + xxx and S_c(abc) fails it at (a,b,c)", anticommutativity},
            {"semirings.maxplus", "an SI flat semiring satisfying xy + x = xy = yx is isomorphic to S(a) or M(1)", maxplus},
            {"semirings.flat_counts", "flat semirings of order <= 3 up to isomorphism (count recorded)", flat_counts}}},
          {"lee",
           {{"lee.matrix", "S(ell(n)) satisfies the ell(m)-free laws if and only if n != m", lee_matrix,
             [](SuiteParams const& p) { return p.lee_max_n >= 3; }},
            {"lee.free_words", "ell(n) is ell(m)-free if and only if n != m", lee_free_words,
             [](SuiteParams const& p) { return p.lee_max_n >= 3; }},
            {"lee.kni", "S(k(n,i)) embeds in S(ell(m)) for m >= n+2, and T_i(ell(n)) ~ T_i(k(n,i))", kni}}},
          {"isoterm",
           {{"isoterm.s1", "s(1) is an isoterm for M(abacdc)", isoterm_s1},
            {"isoterm.scab", "xy is not an isoterm for S_c(ab): yx <= xy", isoterm_scab}}},
      };
      return r;
    }

    CheckResult run_check(Check const& c, SuiteParams const& params) {
      CheckResult r;
      r.id          = c.id;
      r.description = c.description;
      if (!c.enabled(params)) {
        r.status = CheckStatus::skipped;
        r.detail = "excluded by the scale parameters";
        return r;
      }
      auto const start = std::chrono::steady_clock::now();
      Outcome    o;
      try {
        o = c.run(params);
      } catch (std::exception const& e) {
        o.expect(false, std::string("error: ") + e.what());
      }
      r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      r.status          = o.pass ? CheckStatus::pass : CheckStatus::fail;
      r.detail          = o.detail;
      r.artifacts       = o.artifacts;
      if (!o.pass && !params.out_dir.empty()) {
        auto const path = params.out_dir / "witnesses" / (c.id + ".json");
        std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path);
        out << json{{"id", c.id}, {"description", c.description}, {"detail", o.detail}, {"witness", o.witness}}.dump(2)
            << '\n';
        r.artifacts.push_back(path.string());
      }
      return r;
    }

  }  // namespace

  char const* to_string(CheckStatus s) {
    switch (s) {
      case CheckStatus::pass: return "pass";
      case CheckStatus::fail: return "fail";
      case CheckStatus::skipped: return "skipped";
    }
    return "?";
  }

  bool SuiteReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](CheckResult const& c) { return c.status == CheckStatus::fail; });
  }

  std::string SuiteReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << "\n";
    for (auto const& [k, v] : params) {
      os << "  " << k << " = " << v << "\n";
    }
    for (auto const& c : checks) {
      std::string status = to_string(c.status);
      for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
      os << status << " " << c.id << " (" << std::fixed << std::setprecision(3) << c.elapsed_seconds << " s)\n";
      os << "    " << c.description << "\n";
      std::istringstream lines(c.detail);
      for (std::string line; std::getline(lines, line);) {
        os << "      " << line << "\n";
      }
      for (auto const& a : c.artifacts) {
        os << "      artifact: " << a << "\n";
      }
    }
    os << (passed() ? "all checks passed" : "some checks FAILED") << "\n";
    return os.str();
  }

  std::string SuiteReport::to_json() const {
    json j;
    j["suite"]  = suite;
    j["params"] = params;
    j["passed"] = passed();
    j["checks"] = json::array();
    for (auto const& c : checks) {
      j["checks"].push_back({{"id", c.id},
                             {"description", c.description},
                             {"status", to_string(c.status)},
                             {"elapsed_seconds", c.elapsed_seconds},
                             {"detail", c.detail},
                             {"artifacts", c.artifacts}});
    }
    return j.dump(2);
  }

  std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (auto const& [name, checks] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }

  SuiteReport run_suite(std::string const& name, SuiteParams const& params) {
    bool known = name == "all";
    for (auto const& [n, checks] : registry()) known = known || n == name;
    if (!known) {
      throw PreconditionError("unknown suite '" + name + "'");
    }
    SuiteReport report;
    report.suite                      = name;
    report.params["lee_max_n"]        = std::to_string(params.lee_max_n);
    report.params["finder_max_order"] = std::to_string(params.finder_max_order);
    report.params["isoterm_bound"]    = std::to_string(params.isoterm_bound);
    report.params["budget"]           = std::to_string(params.engine.budget);
    report.params["jobs"]             = std::to_string(params.engine.jobs);
    report.params["cache"]            = params.cache && params.cache->enabled() ? params.cache->directory().string() : "off";
    for (auto const& [n, checks] : registry()) {
      if (name != "all" && name != n) {
        continue;
      }
      for (auto const& c : checks) {
        report.checks.push_back(run_check(c, params));
      }
    }
    return report;
  }

}  // namespace srw
