#pragma once

// Named algebras: flat extensions, word semirings, the minimal nonabelian
// p-group families, bracket representations and T_i subsemirings.

#include <map>
#include <optional>
#include <vector>

#include "srw/algebra.hpp"
#include "srw/operations.hpp"
#include "srw/word.hpp"

namespace srw {

  // G with a new element 0 (index 0) that is a multiplicative zero and the
  // sum of any two distinct elements; g in G becomes g+1. The result is
  // checked to be flat and 0-cancellative.
  FiniteSemiring flat_extension(FiniteGroup const& g);

  // ab = ac != 0 implies b = c, and ba = ca != 0 implies b = c. False when
  // there is no zero.
  bool is_zero_cancellative(FiniteSemiring const& s);

  struct WordSemiring {
    FiniteSemiring semiring;
    // words[x] is the word of element x; empty for the zero.
    std::vector<std::optional<Word>> words;
    bool                             commutative = false;
    bool                             monoid      = false;

    // Throws PreconditionError if w is not an element.
    element element_of(Word const& w) const;
  };

  // S(W), S_c(W), M(W) or M_c(W). The carrier is 0, then the empty word when
  // monoid, then the nonempty factors (contiguous substrings, or
  // sub-multisets when commutative) in shortlex order. The empty word may
  // appear in W only when monoid.
  WordSemiring word_semiring(std::vector<Word> const& words, bool commutative, bool monoid);
  // Single word shorthand; the word's own flag decides commutativity.
  WordSemiring word_semiring(Word const& w, bool monoid = false);

  // Normal form a^i b^j, index i + 4j; labels "1", "a", "a^2b", ...
  FiniteGroup group_Q8();
  // M_p(m,n): b^j a^i with index j p^m + i. Requires p prime, m >= 2, n >= 1.
  FiniteGroup group_metacyclic(unsigned p, unsigned m, unsigned n);
  // M_p(m,n,1): b^j a^i c^k with index (j p^m + i) p + k. Requires p prime,
  // m, n >= 1.
  FiniteGroup group_nonmetacyclic(unsigned p, unsigned m, unsigned n);
  // Z_n with labels 0..n-1.
  FiniteGroup group_cyclic(unsigned n);

  struct Bracket {
    std::size_t start = 0;  // 1-based
    std::size_t end   = 0;
    auto operator<=>(Bracket const&) const = default;
  };

  struct BracketMap {
    std::map<Bracket, element> elements;   // nonletter factors
    std::vector<element>       letter_at;  // 1-based; letter_at[0] unused
  };

  // The bracket of every nonletter element of S(w), built from
  // word_semiring(w). Throws PreconditionError naming a repeated nonletter
  // factor, and ConstructionFailure if bracket products disagree with the
  // table.
  BracketMap bracket_elements(WordSemiring const& s, Word const& w);

  // S(w) without the letters of index i and i+1, for w = ell(n) or k(n,i).
  // Requires 1 < i < n-1 where n is the largest index in w.
  Subalgebra<FiniteSemiring> t_subsemiring(Word const& w, int i);

}  // namespace srw
