#pragma once

// Structural operations on finite algebras: products, generated
// subalgebras, homomorphisms, isomorphism, congruences and ideals.

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "srw/algebra.hpp"

namespace srw {

  ////////////////////////////////////////////////////////////////////////
  // Products and subalgebras
  ////////////////////////////////////////////////////////////////////////

  // Componentwise tables over the product carrier, indexed lexicographically
  // (first factor most significant). Labels are tuples "(l1,l2,...)".
  // Throws PreconditionError on an empty list and OrderCapError above
  // max_order.
  FiniteSemiring direct_product(std::span<FiniteSemiring const> factors);
  FiniteGroup    direct_product(std::span<FiniteGroup const> factors);
  // Throws PreconditionError on mixed kinds.
  Algebra direct_product(std::span<Algebra const> factors);

  // Index of a tuple in the product carrier and back.
  std::size_t encode_tuple(std::span<std::size_t const> sizes,
                           std::span<element const>     coordinates);
  std::vector<element> decode_tuple(std::span<std::size_t const> sizes,
                                    std::size_t                  index);

  // The i-th projection out of a product of the given factors.
  Morphism projection(std::span<FiniteSemiring const> factors, std::size_t i);
  Morphism projection(std::span<FiniteGroup const> factors, std::size_t i);

  template <typename A>
  struct Subalgebra {
    A                    algebra;
    Morphism             inclusion;  // into the ambient algebra
    std::vector<element> elements;   // sorted ambient elements
  };

  // Worklist closure of gens under every operation. The subalgebra carrier is
  // ordered as in the ambient algebra.
  Subalgebra<FiniteSemiring> subalgebra_closure(FiniteSemiring const&    s,
                                                std::vector<element> const& gens);
  Subalgebra<FiniteGroup>    subalgebra_closure(FiniteGroup const&       g,
                                                std::vector<element> const& gens);

  // The induced algebra on a subset that must already be closed; throws
  // PreconditionError with a witness otherwise.
  Subalgebra<FiniteSemiring> induced_subalgebra(FiniteSemiring const&    s,
                                                std::vector<element> const& elements);

  // Closure of tuples inside a direct product without materialising the
  // product, so the ambient product may exceed max_order as long as the
  // closure does not. Element order and labels agree with
  // subalgebra_closure(direct_product(factors), ...).
  template <typename A>
  struct ProductSubalgebra {
    A                                 algebra;
    std::vector<std::vector<element>> tuples;
  };
  ProductSubalgebra<FiniteGroup> closure_in_product(
      std::span<FiniteGroup const>             factors,
      std::vector<std::vector<element>> const& gens);
  ProductSubalgebra<FiniteSemiring> closure_in_product(
      std::span<FiniteSemiring const>          factors,
      std::vector<std::vector<element>> const& gens);

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms and isomorphism
  ////////////////////////////////////////////////////////////////////////

  // Extends generator images along the generated closure. Throws
  // PreconditionError if the keys do not generate the source, and
  // HomomorphismError with a witness pair if the extension is inconsistent.
  Morphism hom_from_generator_images(FiniteGroup const&                source,
                                     FiniteGroup const&                target,
                                     std::map<element, element> const& images);
  Morphism hom_from_generator_images(FiniteSemiring const&             source,
                                     FiniteSemiring const&             target,
                                     std::map<element, element> const& images);

  // The isomorphism whose map vector is lexicographically least, or nothing.
  std::optional<Morphism> is_isomorphic(FiniteGroup const& a, FiniteGroup const& b);
  std::optional<Morphism> is_isomorphic(FiniteSemiring const& a, FiniteSemiring const& b);
  // Throws PreconditionError on mixed kinds.
  std::optional<Morphism> is_isomorphic(Algebra const& a, Algebra const& b);

  ////////////////////////////////////////////////////////////////////////
  // Congruences, ideals, subdirect irreducibility
  ////////////////////////////////////////////////////////////////////////

  Congruence principal_congruence(FiniteSemiring const& s, element x, element y);
  Congruence principal_congruence(FiniteGroup const& g, element x, element y);

  struct SIVerdict {
    bool subdirectly_irreducible = false;
    // Least nontrivial congruence when SI.
    std::optional<Congruence> monolith;
    // Two distinct minimal nontrivial congruences when not SI; they meet in
    // the identity congruence.
    std::optional<std::pair<Congruence, Congruence>> decomposition;
    // For flat semirings: the verdict of the ideal criterion, which must agree.
    std::optional<bool> ideal_criterion;
  };

  // Requires at least two elements. For flat semirings the congruence-based
  // and ideal-based answers are compared; a disagreement throws
  // ConstructionFailure.
  SIVerdict subdirectly_irreducible(FiniteSemiring const& s);
  SIVerdict subdirectly_irreducible(FiniteGroup const& g);

  // The ideal generated by x: {0, x} closed under multiplication by arbitrary
  // elements on either side. Sorted.
  std::vector<element> principal_ideal(FiniteSemiring const& s, element x);

  // The 0-minimal multiplicative ideals of a flat semiring, sorted.
  // Throws PreconditionError if s is not flat.
  std::vector<std::vector<element>> multiplicative_ideals(FiniteSemiring const& s);

  // Whether s is SI by the flat ideal criterion: a unique 0-minimal ideal.
  bool si_by_ideals(FiniteSemiring const& s);

  struct ReesQuotient {
    FiniteSemiring       quotient;
    std::vector<element> projection;  // ambient element -> quotient element
  };

  // Collapses the ideal to the single element 0 of the quotient; the other
  // elements follow in ambient order. Throws PreconditionError with a witness
  // if the set is not an ideal absorbing addition.
  ReesQuotient rees_quotient(FiniteSemiring const& s, std::vector<element> const& ideal);

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  // Least common multiple of the element orders.
  std::uint64_t group_exponent(FiniteGroup const& g);

  struct MinimalNonabelianVerdict {
    bool is_minimal_nonabelian = false;
    bool abelian               = false;
    // A non-commuting pair that generates a proper subgroup, if any.
    std::optional<std::pair<element, element>> witness;
  };

  MinimalNonabelianVerdict is_minimal_nonabelian(FiniteGroup const& g);

}  // namespace srw
