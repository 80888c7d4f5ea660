#include <algorithm>

#include "srw/constructions.hpp"
#include "srw/embedding.hpp"
#include "srw/error.hpp"
#include "srw/operations.hpp"

namespace srw {

  std::vector<std::pair<Symbol, Word>> kni_letter_images(int n, int i, int m) {
    if (!(1 < i && i < n - 1)) {
      throw PreconditionError("k(n,i) needs 1 < i < n-1");
    }
    if (m < n + 2) {
      throw PreconditionError("the embedding of k(" + std::to_string(n) + "," + std::to_string(i)
                              + ") into ell(m) needs m >= n+2; got m = " + std::to_string(m));
    }
    auto x     = [](long j) { return Symbol{"x", j}; };
    int  shift = m - n;

    // The central block (x_{j+1} x_j) for j = i .. i+m-n.
    std::vector<Symbol> block;
    for (int j = i; j <= i + shift; ++j) {
      block.push_back(x(j + 1));
      block.push_back(x(j));
    }
    std::vector<std::pair<Symbol, Word>> out;
    for (auto const& s : generate_pattern("k", {n, i}).alphabet()) {
      long const j = *s.index;
      if (s.base == "x") {
        out.emplace_back(s, Word({x(j < i ? j : j + shift)}));
      } else if (s.base == "y" && j == i) {
        out.emplace_back(s, Word({x(i)}));
      } else if (s.base == "y") {
        out.emplace_back(s, Word({block.begin(), block.begin() + 3}));
      } else if (j == i) {
        out.emplace_back(s, Word({block.begin() + 3, block.end()}));
      } else {
        out.emplace_back(s, Word({x(i + 1 + shift)}));
      }
    }
    return out;
  }

  Morphism verify_kni_embedding(int n, int i, int m) {
    auto const images = kni_letter_images(n, i, m);
    auto const source = word_semiring(generate_pattern("k", {n, i}));
    auto const target = word_semiring(generate_pattern("ell", {m}));
    std::map<element, element> gen;
    for (auto const& [letter, image] : images) {
      gen.emplace(source.element_of(Word({letter})), target.element_of(image));
    }
    Morphism h;
    try {
      h = hom_from_generator_images(source.semiring, target.semiring, gen);
    } catch (HomomorphismError const& e) {
      throw ConstructionFailure("k(" + std::to_string(n) + "," + std::to_string(i)
                                + ") matching is not a homomorphism into ell(" + std::to_string(m)
                                + "): " + e.what());
    }
    if (!h.verified_hom || !h.injective) {
      throw ConstructionFailure("k(n,i) matching is not an injective homomorphism");
    }
    return h;
  }

  ScabEmbedding scab_power_embedding(FiniteSemiring const& s, EngineOptions const& options) {
    if (!s.is_flat()) {
      throw PreconditionError("the S_c(ab) power embedding needs a flat semiring");
    }
    if (s.size() < 2 || !si_by_ideals(s)) {
      throw PreconditionError("the S_c(ab) power embedding needs a subdirectly irreducible semiring");
    }
    for (char const* law : {"x*y = y*x", "x*x*y = x*x", "x1*x2*x3 = y1*y2*y3"}) {
      auto const v = satisfies(s, parse_statement(law), options);
      if (!v.holds) {
        throw PreconditionError(std::string("the semiring fails ") + law + " at "
                                + format_assignment(*v.witness, s));
      }
    }

    element const zero   = *s.zero();
    auto const    ideals = multiplicative_ideals(s);
    if (ideals.size() != 1 || ideals.front().size() != 2) {
      throw ConstructionFailure("the 0-minimal ideal does not have exactly one nonzero element");
    }
    ScabEmbedding out;
    out.omega = ideals.front()[0] == zero ? ideals.front()[1] : ideals.front()[0];
    out.m     = 1;
    while (s.size() > (std::size_t{1} << out.m) + 2) {
      ++out.m;
    }

    std::size_t const n = s.size();
    std::vector<char> paired(n, 0);
    paired[zero] = paired[out.omega] = 1;
    for (element x = 0; x < n; ++x) {
      if (paired[x]) {
        continue;
      }
      std::vector<element> partners;
      for (element y = 0; y < n; ++y) {
        if (s.mul(x, y) == out.omega) {
          partners.push_back(y);
        }
      }
      if (partners.size() != 1 || paired[partners[0]] || partners[0] == x) {
        throw ConstructionFailure("element " + s.label(x) + " has no unique partner");
      }
      paired[x] = paired[partners[0]] = 1;
      out.pairs.emplace_back(x, partners[0]);
    }

    auto const    scab = word_semiring(parse_word("ab", true));
    element const a = scab.element_of(parse_word("a")), b = scab.element_of(parse_word("b"));
    element const ab = scab.element_of(parse_word("ab", true));
    std::vector<FiniteSemiring> factors(out.m, scab.semiring);

    std::vector<std::vector<element>> gens;
    for (std::size_t code = 0; code < (std::size_t{1} << out.m); ++code) {
      std::vector<element> t(out.m);
      for (unsigned k = 0; k < out.m; ++k) {
        t[k] = (code >> (out.m - 1 - k)) & 1 ? b : a;
      }
      gens.push_back(std::move(t));
    }
    auto const T = closure_in_product(std::span<FiniteSemiring const>(factors), gens);
    out.generated_order = T.tuples.size();
    std::vector<element> ideal;
    for (element t = 0; t < T.tuples.size(); ++t) {
      if (std::count(T.tuples[t].begin(), T.tuples[t].end(), element{0})) {
        ideal.push_back(t);
      }
    }
    auto rees = rees_quotient(T.algebra, ideal);

    auto image_of = [&](std::vector<element> const& tuple) {
      auto it = std::lower_bound(T.tuples.begin(), T.tuples.end(), tuple);
      if (it == T.tuples.end() || *it != tuple) {
        throw ConstructionFailure("codeword tuple is not in the generated subsemiring");
      }
      return rees.projection[it - T.tuples.begin()];
    };
    std::vector<element> map(n, 0);
    map[zero]      = 0;
    map[out.omega] = image_of(std::vector<element>(out.m, ab));
    for (std::size_t t = 0; t < out.pairs.size(); ++t) {
      // 'a' then the binary digits of t, most significant first.
      std::vector<element> code(out.m), complement(out.m);
      for (unsigned k = 0; k < out.m; ++k) {
        bool const bit = k > 0 && ((t >> (out.m - 1 - k)) & 1);
        code[k]        = bit ? b : a;
        complement[k]  = bit ? a : b;
      }
      map[out.pairs[t].first]  = image_of(code);
      map[out.pairs[t].second] = image_of(complement);
    }
    out.quotient  = std::move(rees.quotient);
    out.embedding = verify_morphism(s, out.quotient, std::move(map));
    if (!out.embedding.verified_hom || !out.embedding.injective) {
      throw ConstructionFailure("the codeword map into T/I is not an injective homomorphism");
    }
    return out;
  }

}  // namespace srw
