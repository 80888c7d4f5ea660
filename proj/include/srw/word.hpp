#pragma once

// Words over an indexed alphabet and the named word families.
//
// A symbol is a base name with an optional integer index ("a", "x3", "y-1").
// Symbols of the same base are ordered: no index, then nonnegative indices
// ascending, then negative indices ascending, so x-1 is the largest.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srw/term.hpp"

namespace srw {

  struct Symbol {
    std::string         base;
    std::optional<long> index;

    std::strong_ordering operator<=>(Symbol const& other) const;
    bool                 operator==(Symbol const& other) const = default;
  };

  std::string format_symbol(Symbol const& s);
  // Throws SyntaxError.
  Symbol parse_symbol(std::string_view text);
  // A term variable name for the symbol ("x-1" becomes "x_m1").
  std::string symbol_variable(Symbol const& s);

  class Word {
   public:
    Word() = default;
    // Commutative words are stored sorted.
    explicit Word(std::vector<Symbol> letters, bool commutative = false);

    std::vector<Symbol> const& letters() const noexcept {
      return letters_;
    }
    bool commutative() const noexcept {
      return commutative_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Symbol const& operator[](std::size_t i) const {
      return letters_.at(i);
    }

    // Distinct symbols, sorted.
    std::vector<Symbol> alphabet() const;

    bool operator==(Word const&) const = default;

   private:
    std::vector<Symbol> letters_;
    bool                commutative_ = false;
  };

  // Shortlex on the symbol order.
  bool shortlex_less(Word const& a, Word const& b);

  // Letters separated by spaces or '*', or a bare run of plain letters
  // ("abacdc" = a b a c d c). "1" is the empty word.
  Word parse_word(std::string_view text, bool commutative = false);

  // "ell(n)", "k(n,i)", "s(n)", "p(n)". Throws SyntaxError on bad syntax
  // and PreconditionError on bad parameters.
  Word parse_pattern(std::string_view text);

  // A family call if the text looks like one, a plain word otherwise.
  Word parse_word_or_pattern(std::string_view text, bool commutative = false);

  // Concatenated when every symbol is a single unindexed character,
  // space-separated otherwise; "1" for the empty word.
  std::string format_word(Word const& w);

  // family is one of "ell", "k", "s", "p".
  //   ell(n) = x1 (x2 x1)(x3 x2)...(xn xn-1) xn              n >= 2
  //   k(n,i): ell(n) with the first occurrences of xi, xi+1
  //           renamed yi, yi+1 and the second zi, zi+1     1 < i < n-1
  //   s(n)   = y0 x1..x5 y0 (y1 x6 y1)...(yn xn+5 yn)
  //            yn+1 xn+6..xn+10 yn+1                         n >= 1
  //   p(n)   = x0^3 y1^2 ... yn^2 x1^3                      n >= 1
  Word generate_pattern(std::string_view family, std::vector<int> const& params);

  // Whether no factor has the form uu.
  bool is_square_free(Word const& w);

  // The product term of the word's letters. Throws PreconditionError on the
  // empty word.
  Term word_term(Word const& w);
  // The word of a variable or product of variables. Throws PreconditionError
  // otherwise.
  Word term_word(Term const& t);

}  // namespace srw
