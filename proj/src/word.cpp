#include <algorithm>
#include <cctype>

#include "srw/error.hpp"
#include "srw/word.hpp"

namespace srw {

  namespace {
    // 0: no index, 1: nonnegative, 2: negative.
    int index_class(std::optional<long> const& i) {
      if (!i) {
        return 0;
      }
      return *i >= 0 ? 1 : 2;
    }

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }
  }  // namespace

  std::strong_ordering Symbol::operator<=>(Symbol const& other) const {
    if (auto c = base <=> other.base; c != 0) {
      return c;
    }
    if (auto c = index_class(index) <=> index_class(other.index); c != 0) {
      return c;
    }
    return index.value_or(0) <=> other.index.value_or(0);
  }

  std::string format_symbol(Symbol const& s) {
    return s.index ? s.base + std::to_string(*s.index) : s.base;
  }

  std::string symbol_variable(Symbol const& s) {
    if (!s.index) {
      return s.base;
    }
    return *s.index < 0 ? s.base + "_m" + std::to_string(-*s.index)
                        : s.base + std::to_string(*s.index);
  }

  Symbol parse_symbol(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      ++i;
    }
    if (i == 0 || !std::isalpha(static_cast<unsigned char>(text[0]))) {
      throw SyntaxError(0, "a letter must start with an alphabetic character: '"
                               + std::string(text) + "'");
    }
    Symbol s{std::string(text.substr(0, i)), std::nullopt};
    if (i == text.size()) {
      return s;
    }
    std::size_t j = i;
    if (text[j] == '-') {
      ++j;
    }
    if (j == text.size()) {
      throw SyntaxError(j, "missing index digits in '" + std::string(text) + "'");
    }
    for (std::size_t k = j; k < text.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
        throw SyntaxError(k, "illegal character in letter '" + std::string(text) + "'");
      }
    }
    s.index = std::stol(std::string(text.substr(i)));
    return s;
  }

  Word::Word(std::vector<Symbol> letters, bool commutative)
      : letters_(std::move(letters)), commutative_(commutative) {
    if (commutative_) {
      std::sort(letters_.begin(), letters_.end());
    }
  }

  std::vector<Symbol> Word::alphabet() const {
    std::vector<Symbol> out = letters_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool shortlex_less(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                        b.letters().begin(), b.letters().end());
  }

  Word parse_word(std::string_view text, bool commutative) {
    std::vector<std::string> tokens;
    std::string              current;
    for (char c : text) {
      if (is_space(c) || c == '*') {
        if (!current.empty()) {
          tokens.push_back(std::move(current));
          current.clear();
        }
      } else {
        current += c;
      }
    }
    if (!current.empty()) {
      tokens.push_back(std::move(current));
    }
    if (tokens.empty()) {
      throw SyntaxError(0, "empty word");
    }
    if (tokens.size() == 1 && tokens[0] == "1") {
      return Word({}, commutative);
    }
    std::vector<Symbol> letters;
    if (tokens.size() == 1
        && std::all_of(tokens[0].begin(), tokens[0].end(),
                       [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; })) {
      for (char c : tokens[0]) {
        letters.push_back({std::string(1, c), std::nullopt});
      }
    } else {
      for (auto const& t : tokens) {
        letters.push_back(parse_symbol(t));
      }
    }
    return Word(std::move(letters), commutative);
  }

  Word parse_pattern(std::string_view text) {
    auto const open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')') {
      throw SyntaxError(0, "expected a family call such as ell(4): '" + std::string(text) + "'");
    }
    std::string family;
    for (char c : text.substr(0, open)) {
      if (!is_space(c)) {
        family += c;
      }
    }
    std::vector<int> params;
    std::string      number;
    auto flush = [&](std::size_t pos) {
      if (number.empty()) {
        throw SyntaxError(pos, "empty parameter in '" + std::string(text) + "'");
      }
      params.push_back(std::stoi(number));
      number.clear();
    };
    for (std::size_t i = open + 1; i + 1 < text.size(); ++i) {
      char const c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        number += c;
      } else if (c == ',') {
        flush(i);
      } else if (!is_space(c)) {
        throw SyntaxError(i, "illegal character in family parameters");
      }
    }
    flush(text.size() - 1);
    return generate_pattern(family, params);
  }

  Word parse_word_or_pattern(std::string_view text, bool commutative) {
    if (text.find('(') != std::string_view::npos) {
      Word w = parse_pattern(text);
      return commutative ? Word(w.letters(), true) : w;
    }
    return parse_word(text, commutative);
  }

  std::string format_word(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    bool const compact = std::all_of(w.letters().begin(), w.letters().end(), [](Symbol const& s) {
      return !s.index && s.base.size() == 1;
    });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!compact && i) {
        out += ' ';
      }
      out += format_symbol(w[i]);
    }
    return out;
  }

  namespace {
    Symbol sym(char const* base, long index) {
      return {base, index};
    }

    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw PreconditionError(what);
      }
    }

    std::vector<Symbol> ell(int n) {
      std::vector<Symbol> w{sym("x", 1)};
      for (int i = 1; i < n; ++i) {
        w.push_back(sym("x", i + 1));
        w.push_back(sym("x", i));
      }
      w.push_back(sym("x", n));
      return w;
    }
  }  // namespace

  Word generate_pattern(std::string_view family, std::vector<int> const& params) {
    auto arity = [&](std::size_t k) {
      require(params.size() == k, std::string(family) + " takes " + std::to_string(k)
                                      + " parameter" + (k == 1 ? "" : "s"));
    };
    if (family == "ell") {
      arity(1);
      require(params[0] >= 2, "ell(n) needs n >= 2");
      return Word(ell(params[0]));
    }
    if (family == "k") {
      arity(2);
      int const n = params[0], i = params[1];
      require(1 < i && i < n - 1, "k(n,i) needs 1 < i < n-1");
      auto w    = ell(n);
      // Occurrences of x_j are seen in order, so a counter per index tells
      // first from second.
      std::vector<int> seen(n + 1, 0);
      for (auto& s : w) {
        int const j = static_cast<int>(*s.index);
        if (j == i || j == i + 1) {
          s.base = seen[j]++ == 0 ? "y" : "z";
        }
      }
      return Word(std::move(w));
    }
    if (family == "s") {
      arity(1);
      int const n = params[0];
      require(n >= 1, "s(n) needs n >= 1");
      std::vector<Symbol> w{sym("y", 0)};
      for (int j = 1; j <= 5; ++j) {
        w.push_back(sym("x", j));
      }
      w.push_back(sym("y", 0));
      for (int i = 1; i <= n; ++i) {
        w.push_back(sym("y", i));
        w.push_back(sym("x", i + 5));
        w.push_back(sym("y", i));
      }
      w.push_back(sym("y", n + 1));
      for (int j = n + 6; j <= n + 10; ++j) {
        w.push_back(sym("x", j));
      }
      w.push_back(sym("y", n + 1));
      return Word(std::move(w));
    }
    if (family == "p") {
      arity(1);
      int const n = params[0];
      require(n >= 1, "p(n) needs n >= 1");
      std::vector<Symbol> w(3, sym("x", 0));
      for (int i = 1; i <= n; ++i) {
        w.push_back(sym("y", i));
        w.push_back(sym("y", i));
      }
      for (int k = 0; k < 3; ++k) {
        w.push_back(sym("x", 1));
      }
      return Word(std::move(w));
    }
    throw PreconditionError("unknown word family '" + std::string(family) + "'");
  }

  bool is_square_free(Word const& w) {
    auto const& l = w.letters();
    for (std::size_t start = 0; start < l.size(); ++start) {
      for (std::size_t half = 1; start + 2 * half <= l.size(); ++half) {
        if (std::equal(l.begin() + start, l.begin() + start + half, l.begin() + start + half)) {
          return false;
        }
      }
    }
    return true;
  }

  Term word_term(Word const& w) {
    if (w.empty()) {
      throw PreconditionError("the empty word has no term");
    }
    std::vector<Term> factors;
    for (auto const& s : w.letters()) {
      factors.push_back(Term::variable(symbol_variable(s)));
    }
    return Term::product(std::move(factors));
  }

  Word term_word(Term const& t) {
    if (!t.is_word()) {
      throw PreconditionError("not a product of variables: " + format_term(t));
    }
    std::vector<Symbol> letters;
    auto add = [&](Term const& v) { letters.push_back(Symbol{v.name(), std::nullopt}); };
    if (t.is_variable()) {
      add(t);
    } else {
      for (auto const& c : t.children()) {
        add(c);
      }
    }
    return Word(std::move(letters));
  }

}  // namespace srw
