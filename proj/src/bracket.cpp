#include <algorithm>
#include <map>

#include "srw/constructions.hpp"
#include "srw/error.hpp"

namespace srw {

  BracketMap bracket_elements(WordSemiring const& s, Word const& w) {
    if (s.commutative || w.commutative()) {
      throw PreconditionError("bracket representation needs a noncommutative word");
    }
    std::size_t const len = w.size();
    auto const&       l   = w.letters();

    // Every nonletter factor must occur once.
    std::map<std::vector<Symbol>, Bracket> first;
    BracketMap                             out;
    for (std::size_t i = 1; i <= len; ++i) {
      for (std::size_t j = i + 1; j <= len; ++j) {
        std::vector<Symbol> factor(l.begin() + (i - 1), l.begin() + j);
        auto [it, fresh] = first.emplace(factor, Bracket{i, j});
        if (!fresh) {
          throw PreconditionError("the factor '" + format_word(Word(factor))
                                  + "' occurs more than once (at " + std::to_string(it->second.start)
                                  + " and " + std::to_string(i) + ")");
        }
        out.elements.emplace(Bracket{i, j}, s.element_of(Word(std::move(factor))));
      }
    }
    out.letter_at.assign(len + 1, 0);
    for (std::size_t i = 1; i <= len; ++i) {
      out.letter_at[i] = s.element_of(Word({l[i - 1]}));
    }

    // Each element as the set of brackets it occupies; letters occupy (p,p)
    // for every position p of the letter.
    std::size_t const                n = s.semiring.size();
    std::vector<std::vector<Bracket>> where(n);
    for (auto const& [b, x] : out.elements) {
      where[x].push_back(b);
    }
    for (std::size_t p = 1; p <= len; ++p) {
      where[out.letter_at[p]].push_back({p, p});
    }
    element const zero = 0;
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        if (where[x].empty() || where[y].empty()) {
          continue;  // 0 or the empty word
        }
        element expected = zero;
        for (auto const& u : where[x]) {
          for (auto const& v : where[y]) {
            if (v.start == u.end + 1) {
              expected = out.elements.at({u.start, v.end});
            }
          }
        }
        if (s.semiring.mul(x, y) != expected) {
          throw ConstructionFailure("bracket product of " + s.semiring.label(x) + " and "
                                    + s.semiring.label(y) + " disagrees with the table");
        }
      }
    }
    return out;
  }

  Subalgebra<FiniteSemiring> t_subsemiring(Word const& w, int i) {
    long n = 0;
    for (auto const& s : w.letters()) {
      if (!s.index) {
        throw PreconditionError("T_i needs an indexed word such as ell(n) or k(n,i)");
      }
      n = std::max(n, *s.index);
    }
    if (!(1 < i && i < n - 1)) {
      throw PreconditionError("T_i needs 1 < i < n-1; got i = " + std::to_string(i)
                              + ", n = " + std::to_string(n));
    }
    auto const           s = word_semiring(w);
    std::vector<element> keep;
    for (element x = 0; x < s.semiring.size(); ++x) {
      auto const& word = s.words[x];
      bool const  drop = word && word->size() == 1 && ((*word)[0].index == i || (*word)[0].index == i + 1);
      if (!drop) {
        keep.push_back(x);
      }
    }
    return induced_subalgebra(s.semiring, keep);
  }

}  // namespace srw
