#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "srw/constructions.hpp"
#include "srw/error.hpp"
#include "srw/finder.hpp"
#include "srw/operations.hpp"

using namespace srw;

namespace {

  FiniteSemiring word(char const* w, bool commutative = false, bool monoid = false) {
    return word_semiring({parse_word(w, commutative)}, commutative, monoid).semiring;
  }

  std::vector<FiniteSemiring> semiring_corpus() {
    return {word("a"),
            word("1", false, true),
            word("aa"),
            word("ab", true),
            word("ab"),
            word("aba"),
            word("abc", true),
            word("ab", true, true),
            flat_extension(group_cyclic(2)),
            flat_extension(group_cyclic(3)),
            word_semiring(generate_pattern("ell", {3})).semiring};
  }

  std::vector<FiniteGroup> group_corpus() {
    return {group_cyclic(1), group_cyclic(4),        group_cyclic(8),           group_Q8(),
            group_metacyclic(2, 2, 1), group_nonmetacyclic(2, 1, 1), group_metacyclic(2, 2, 2),
            group_nonmetacyclic(3, 1, 1), group_metacyclic(3, 2, 1), group_cyclic(27)};
  }

}  // namespace

TEST_CASE("tables") {
  CHECK_THROWS_AS(Table::from_rows({{0, 1}, {1}}), TableError);
  CHECK_THROWS_AS(Table::from_rows({{0, 2}, {1, 0}}), TableError);
  auto const t = Table::from_rows({{0, 1}, {1, 0}});
  CHECK(t(0, 1) == 1);
  CHECK(t.rows() == std::vector<std::vector<element>>{{0, 1}, {1, 0}});
}

TEST_CASE("semiring validation") {
  auto const s = word("ab", true);
  auto const r = validate_semiring(s.add_table(), s.mul_table());
  CHECK(r.ok());
  CHECK(r.is_ai);
  CHECK(r.is_flat);
  CHECK(r.zero == element{0});

  // The ring Z_2: a semiring, but 1 + 1 = 0.
  auto const z2add = Table::from_rows({{0, 1}, {1, 0}});
  auto const z2mul = Table::from_rows({{0, 0}, {0, 1}});
  auto const ring  = validate_semiring(z2add, z2mul);
  CHECK(ring.ok());
  CHECK_FALSE(ring.is_ai);
  // Z_2 addition with a multiplication that does not distribute.
  CHECK_FALSE(validate_semiring(z2add, Table::from_rows({{1, 1}, {1, 1}})).ok());

  // (ab)c != a(bc) under flat addition.
  auto const bad = Table::from_rows({{0, 0, 0}, {0, 2, 0}, {0, 1, 0}});
  auto const rep = validate_semiring(oracle::flat_add(3), bad);
  REQUIRE_FALSE(rep.ok());
  bool saw_assoc = false;
  for (auto const& v : rep.violations) {
    if (v.axiom == "multiplicative associativity") {
      saw_assoc = true;
      auto const& w = v.witness;
      CHECK(bad(bad(w[0], w[1]), w[2]) != bad(w[0], bad(w[1], w[2])));
    }
  }
  CHECK(saw_assoc);
  CHECK_THROWS_AS(FiniteSemiring(oracle::flat_add(3), bad), ValidationError);
  CHECK_THROWS_AS(FiniteSemiring(oracle::flat_add(3), Table(2)), TableError);
}

TEST_CASE("group validation") {
  auto const z4 = validate_group(group_cyclic(4).mul_table());
  CHECK(z4.identity() == 0);
  CHECK(validate_group(group_Q8().mul_table()).size() == 8);
  CHECK_THROWS_AS(validate_group(Table::from_rows({{0, 0}, {1, 1}})), ValidationError);
}

TEST_CASE("direct products and projections") {
  std::vector<FiniteGroup> q{group_Q8(), group_Q8()};
  CHECK(direct_product(std::span<FiniteGroup const>(q)).size() == 64);
  std::vector<FiniteSemiring> f{flat_extension(group_cyclic(2)), flat_extension(group_cyclic(2))};
  auto const                  p = direct_product(std::span<FiniteSemiring const>(f));
  CHECK(p.size() == 9);
  CHECK(validate_semiring(p.add_table(), p.mul_table()).ok());
  for (std::size_t i = 0; i < 2; ++i) {
    auto const pi = projection(std::span<FiniteSemiring const>(f), i);
    CHECK(pi.verified_hom);
    CHECK(pi.surjective);
  }
  CHECK_THROWS_AS(direct_product(std::span<FiniteSemiring const>()), PreconditionError);
  std::vector<FiniteGroup> big(4, group_cyclic(9));
  CHECK_THROWS_AS(direct_product(std::span<FiniteGroup const>(big)), OrderCapError);
}

TEST_CASE("generated subalgebras") {
  auto const               q8 = group_Q8();
  std::vector<FiniteGroup> q{q8, q8};
  auto const               prod = direct_product(std::span<FiniteGroup const>(q));
  std::vector<std::size_t> sizes{8, 8};
  auto enc = [&](char const* x, char const* y) {
    std::vector<element> c{q8.element_named(x), q8.element_named(y)};
    return static_cast<element>(encode_tuple(sizes, c));
  };
  auto const h = subalgebra_closure(prod, {enc("a", "1"), enc("ab", "b")});
  CHECK(h.elements.size() == 16);
  auto const again = subalgebra_closure(prod, h.elements);
  CHECK(again.elements == h.elements);

  // closure_in_product agrees with closing inside the materialised product.
  auto const hp = closure_in_product(std::span<FiniteGroup const>(q),
                                     {{q8.element_named("a"), q8.element_named("1")},
                                      {q8.element_named("ab"), q8.element_named("b")}});
  REQUIRE(hp.tuples.size() == h.elements.size());
  for (std::size_t k = 0; k < hp.tuples.size(); ++k) {
    CHECK(decode_tuple(sizes, h.elements[k]) == hp.tuples[k]);
  }
  CHECK(hp.algebra.mul_table() == h.algebra.mul_table());

  auto const s = word("ab", true);
  CHECK(subalgebra_closure(s, {s.element_named("a"), s.element_named("b")}).elements.size() == 4);
  CHECK(subalgebra_closure(q8, {q8.element_named("a")}).elements.size() == 4);
  CHECK(induced_subalgebra(s, {0, s.element_named("a")}).algebra.size() == 2);
  CHECK_THROWS_AS(induced_subalgebra(s, {0, s.element_named("a"), s.element_named("b")}), PreconditionError);
}

TEST_CASE("homomorphisms from generator images") {
  auto const q8 = group_Q8();
  auto const z2 = group_cyclic(2);
  auto const h  = hom_from_generator_images(q8, z2, {{q8.element_named("a"), 1}, {q8.element_named("b"), 1}});
  CHECK(h.verified_hom);
  CHECK_FALSE(h.injective);

  // M_2(2,2) onto the subgroup <(a,1),(ab,b)> of Q8 x Q8.
  auto const               m    = group_metacyclic(2, 2, 2);
  std::vector<FiniteGroup> q{q8, q8};
  auto const               hsub = closure_in_product(std::span<FiniteGroup const>(q),
                                                     {{q8.element_named("a"), q8.element_named("1")},
                                                      {q8.element_named("ab"), q8.element_named("b")}});
  auto idx = [&](char const* x, char const* y) {
    std::vector<element> t{q8.element_named(x), q8.element_named(y)};
    return static_cast<element>(std::lower_bound(hsub.tuples.begin(), hsub.tuples.end(), t) - hsub.tuples.begin());
  };
  auto const phi = hom_from_generator_images(m, hsub.algebra,
                                             {{m.element_named("a"), idx("a", "1")}, {m.element_named("b"), idx("ab", "b")}});
  CHECK(phi.is_isomorphism());

  // In Z_4, a -> 1 and b -> 0 break a^2 = b^2.
  CHECK_THROWS_AS(hom_from_generator_images(q8, group_cyclic(4), {{q8.element_named("a"), 1}, {q8.element_named("b"), 0}}),
                  HomomorphismError);
  CHECK_THROWS_AS(hom_from_generator_images(q8, z2, {{q8.element_named("a"), 1}}), PreconditionError);
}

TEST_CASE("isomorphism examples") {
  CHECK(is_isomorphic(group_metacyclic(2, 2, 1), group_nonmetacyclic(2, 1, 1)));
  CHECK_FALSE(is_isomorphic(group_Q8(), group_metacyclic(2, 2, 1)));
  for (auto const& s : semiring_corpus()) {
    auto const m = is_isomorphic(s, s);
    REQUIRE(m);
    std::vector<element> id(s.size());
    std::iota(id.begin(), id.end(), element{0});
    // The least isomorphism of an algebra with itself is the identity.
    CHECK(m->map == id);
  }
}

TEST_CASE("isomorphism is an equivalence and agrees with the permutation oracle") {
  auto const corpus = semiring_corpus();
  // Relabelled copies join the corpus so that positive pairs exist.
  std::vector<FiniteSemiring> all = corpus;
  for (auto const& s : corpus) {
    if (s.size() > 7) continue;
    std::vector<element> pi(s.size());
    std::iota(pi.begin(), pi.end(), element{0});
    std::reverse(pi.begin(), pi.end());
    Table add(s.size()), mul(s.size());
    for (element x = 0; x < s.size(); ++x)
      for (element y = 0; y < s.size(); ++y) {
        add.set(pi[x], pi[y], pi[s.add(x, y)]);
        mul.set(pi[x], pi[y], pi[s.mul(x, y)]);
      }
    all.push_back(FiniteSemiring(add, mul));
  }
  std::vector<std::vector<bool>> rel(all.size(), std::vector<bool>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      auto const m = is_isomorphic(all[i], all[j]);
      rel[i][j]    = m.has_value();
      if (m) CHECK(m->is_isomorphism());
      if (all[i].size() <= 7 && all[j].size() <= 7) {
        CHECK(rel[i][j] == oracle::isomorphic(all[i], all[j]));
      }
    }
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(rel[i][i]);
    for (std::size_t j = 0; j < all.size(); ++j) {
      CHECK(rel[i][j] == rel[j][i]);
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
      }
    }
  }

  auto const groups = group_corpus();
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = 0; j < groups.size(); ++j) {
      bool const r = is_isomorphic(groups[i], groups[j]).has_value();
      CHECK(r == is_isomorphic(groups[j], groups[i]).has_value());
      if (groups[i].size() <= 8 && groups[j].size() <= 8) {
        CHECK(r == oracle::isomorphic(groups[i], groups[j]));
      }
    }
}

TEST_CASE("the least isomorphism matches brute force") {
  // Flat semirings of order 5 have many automorphisms; the search must still
  // return the lexicographically least map.
  auto const models = enumerate_models(SearchSpec{.order = 5});
  for (auto const& s : models) {
    auto const m = is_isomorphic(s, s);
    REQUIRE(m);
    std::optional<std::vector<element>> least;
    oracle::for_each_permutation(s.size(), [&](std::vector<element> const& pi) {
      if (!least && oracle::preserves(s.add_table(), s.add_table(), pi)
          && oracle::preserves(s.mul_table(), s.mul_table(), pi)) {
        least = pi;
      }
    });
    CHECK(m->map == *least);
  }
}

TEST_CASE("principal congruences") {
  auto const s  = word("ab", true);
  auto const ab = s.element_named("ab");
  auto const cg = principal_congruence(s, 0, ab);
  CHECK(cg.nontrivial_blocks() == std::vector<std::vector<element>>{{0, ab}});
  CHECK(principal_congruence(s, 1, 1).is_identity());
  auto const two = word("a");
  CHECK(principal_congruence(two, 0, 1).number_of_blocks() == 1);
}

TEST_CASE("subdirect irreducibility examples") {
  auto const s = word("ab", true);
  auto const v = subdirectly_irreducible(s);
  CHECK(v.subdirectly_irreducible);
  REQUIRE(v.monolith);
  CHECK(v.monolith->nontrivial_blocks() == std::vector<std::vector<element>>{{0, s.element_named("ab")}});
  CHECK(v.ideal_criterion == true);

  std::vector<FiniteSemiring> f{word("a"), word("a")};
  auto const                  sa2 = direct_product(std::span<FiniteSemiring const>(f));
  auto const                  nv  = subdirectly_irreducible(sa2);
  CHECK_FALSE(nv.subdirectly_irreducible);
  REQUIRE(nv.decomposition);
  CHECK_FALSE(nv.decomposition->first == nv.decomposition->second);

  CHECK(subdirectly_irreducible(word("abc", true)).subdirectly_irreducible);
  CHECK(multiplicative_ideals(s) == std::vector<std::vector<element>>{{0, s.element_named("ab")}});
  auto const fz2 = flat_extension(group_cyclic(2));
  CHECK(multiplicative_ideals(fz2) == std::vector<std::vector<element>>{{0, 1, 2}});
  auto const l3 = word_semiring(generate_pattern("ell", {3}));
  auto const l3i = multiplicative_ideals(l3.semiring);
  REQUIRE(l3i.size() == 1);
  CHECK(l3i[0] == std::vector<element>{0, l3.element_of(generate_pattern("ell", {3}))});
  CHECK_THROWS_AS(subdirectly_irreducible(FiniteSemiring(Table(1), Table(1))), PreconditionError);
}

TEST_CASE("SI by congruences agrees with the partition oracle (all flat semirings of order <= 6)") {
  SearchSpec spec;
  spec.order     = 6;
  spec.min_order = 2;
  for (auto const& s : enumerate_models(spec)) {
    CHECK(subdirectly_irreducible(s).subdirectly_irreducible == oracle::subdirectly_irreducible(s));
  }
  for (auto const& s : semiring_corpus()) {
    if (s.size() <= 7) {
      CHECK(subdirectly_irreducible(s).subdirectly_irreducible == oracle::subdirectly_irreducible(s));
    }
  }
}

TEST_CASE("SI by congruences agrees with the ideal criterion (all flat semirings of order <= 8)") {
  SearchSpec spec;
  spec.order     = 8;
  spec.min_order = 2;
  std::size_t si = 0, total = 0;
  for (auto const& s : enumerate_models(spec)) {
    auto const v = subdirectly_irreducible(s);
    REQUIRE(v.ideal_criterion);
    CHECK(*v.ideal_criterion == v.subdirectly_irreducible);
    CHECK(si_by_ideals(s) == v.subdirectly_irreducible);
    si += v.subdirectly_irreducible;
    ++total;
  }
  MESSAGE(si << " of " << total << " flat semirings of order 2..8 are SI");
  CHECK(total > 0);
}

TEST_CASE("Rees quotients") {
  auto const s  = word("abc", true);
  std::vector<element> ideal{0};
  for (char const* w : {"abc", "ab", "ac", "bc"}) ideal.push_back(s.element_named(w));
  std::sort(ideal.begin(), ideal.end());
  auto const q = rees_quotient(s, ideal);
  CHECK(q.quotient.size() == 4);
  for (element x = 0; x < 4; ++x)
    for (element y = 0; y < 4; ++y) CHECK(q.quotient.mul(x, y) == 0);
  CHECK(q.quotient.is_flat());

  auto const same = rees_quotient(s, {0});
  CHECK(same.quotient.same_tables(s));
  CHECK_THROWS_AS(rees_quotient(s, {0, s.element_named("a")}), PreconditionError);
}

TEST_CASE("group exponent and minimal nonabelian groups") {
  CHECK(group_exponent(group_nonmetacyclic(3, 1, 1)) == 3);
  CHECK(group_exponent(group_Q8()) == 4);
  CHECK(group_exponent(group_cyclic(6)) == 6);
  CHECK(is_minimal_nonabelian(group_Q8()).is_minimal_nonabelian);
  CHECK(is_minimal_nonabelian(group_metacyclic(2, 2, 2)).is_minimal_nonabelian);
  auto const z4 = is_minimal_nonabelian(group_cyclic(4));
  CHECK_FALSE(z4.is_minimal_nonabelian);
  CHECK(z4.abelian);
  // Q8 x Z2 is nonabelian with the nonabelian proper subgroup Q8.
  std::vector<FiniteGroup> f{group_Q8(), group_cyclic(2)};
  auto const               v = is_minimal_nonabelian(direct_product(std::span<FiniteGroup const>(f)));
  CHECK_FALSE(v.is_minimal_nonabelian);
  CHECK(v.witness.has_value());
}

TEST_CASE("constructed algebras validate") {
  for (auto const& s : semiring_corpus()) {
    CHECK(validate_semiring(s.add_table(), s.mul_table()).ok());
  }
  for (auto const& g : group_corpus()) {
    CHECK_NOTHROW(validate_group(g.mul_table()));
  }
}
