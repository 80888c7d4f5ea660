#include <algorithm>

#include "srw/error.hpp"
#include "srw/satisfaction.hpp"

namespace srw {

  namespace {

    Symbol fresh_symbol(std::vector<Symbol> const& alphabet) {
      Symbol f{"t", std::nullopt};
      while (std::binary_search(alphabet.begin(), alphabet.end(), f)) {
        f.base += "t";
      }
      return f;
    }

    void charge(unsigned long long& counter, EngineOptions const& options, char const* what) {
      if (++counter > options.budget) {
        throw BudgetExceeded(std::string(what) + " exceeded the budget of "
                                 + std::to_string(options.budget),
                             counter);
      }
    }

    // In a flat S, v <= w holds iff v and w agree under every assignment
    // that makes w nonzero; those assignments are enumerated once.
    class FlatIsotermSearch {
     public:
      FlatIsotermSearch(FiniteSemiring const& s, Word const& w, EngineOptions const& options)
          : s_(s), options_(options), zero_(*s.zero()) {
        letters_ = w.alphabet();
        for (auto const& x : w.letters()) {
          target_word_.push_back(letter_id(x));
        }
        ldiv_.assign(s.size() * s.size(), 0);
        for (element a = 0; a < s.size(); ++a) {
          ldiv_[a * s.size() + a] = 1;
          for (element c = 0; c < s.size(); ++c) {
            ldiv_[a * s.size() + s.mul(a, c)] = 1;
          }
        }
        enumerate_nonzero();
      }

      std::vector<Symbol> const& letters() const {
        return letters_;
      }
      bool w_always_zero() const {
        return values_.empty();
      }
      unsigned long long nodes() const {
        return nodes_;
      }

      // Shortlex-least word of the given length, other than w, agreeing with
      // w on every nonzero evaluation.
      std::optional<std::vector<int>> search(std::size_t length) {
        std::vector<int> v;
        std::vector<std::vector<element>> prefix(length + 1);
        if (dfs(v, length, prefix)) {
          return v;
        }
        return std::nullopt;
      }

     private:
      int letter_id(Symbol const& x) const {
        return static_cast<int>(std::lower_bound(letters_.begin(), letters_.end(), x)
                                - letters_.begin());
      }

      void enumerate_nonzero() {
        // Letters in order of first occurrence; after assigning the j-th of
        // them the prefix of w up to the next new letter is determined.
        std::vector<int>         order;
        std::vector<std::size_t> known_until;  // prefix length fixed after step j
        std::vector<char>        seen(letters_.size(), 0);
        for (std::size_t p = 0; p < target_word_.size(); ++p) {
          int const x = target_word_[p];
          if (!seen[x]) {
            seen[x] = 1;
            if (!order.empty()) {
              known_until.push_back(p);
            }
            order.push_back(x);
          }
        }
        known_until.push_back(target_word_.size());
        std::vector<element> phi(letters_.size(), 0);
        assign(order, known_until, phi, 0, 0, 0, false);
      }

      void assign(std::vector<int> const& order, std::vector<std::size_t> const& known_until,
                  std::vector<element>& phi, std::size_t j, std::size_t done, element prefix,
                  bool has_prefix) {
        if (j == order.size()) {
          values_.push_back(phi);
          targets_.push_back(prefix);
          return;
        }
        for (element e = 0; e < s_.size(); ++e) {
          charge(nodes_, options_, "isoterm evaluation enumeration");
          phi[order[j]]          = e;
          element p   = prefix;
          bool    has = has_prefix;
          for (std::size_t q = done; q < known_until[j]; ++q) {
            element const x = phi[target_word_[q]];
            p               = has ? s_.mul(p, x) : x;
            has             = true;
          }
          if (p == zero_) {
            continue;
          }
          assign(order, known_until, phi, j + 1, known_until[j], p, true);
        }
      }

      bool dfs(std::vector<int>& v, std::size_t length,
               std::vector<std::vector<element>>& prefix) {
        std::size_t const depth = v.size();
        if (depth == length) {
          if (v == target_word_) {
            return false;
          }
          for (std::size_t f = 0; f < values_.size(); ++f) {
            if (prefix[depth][f] != targets_[f]) {
              return false;
            }
          }
          return true;
        }
        std::size_t const n = s_.size();
        for (int x = 0; x < static_cast<int>(letters_.size()); ++x) {
          charge(nodes_, options_, "isoterm search");
          auto& next = prefix[depth + 1];
          next.resize(values_.size());
          bool ok = true;
          for (std::size_t f = 0; f < values_.size() && ok; ++f) {
            element const e = values_[f][x];
            next[f]         = depth == 0 ? e : s_.mul(prefix[depth][f], e);
            ok              = ldiv_[next[f] * n + targets_[f]] != 0;
          }
          if (!ok) {
            continue;
          }
          v.push_back(x);
          if (dfs(v, length, prefix)) {
            return true;
          }
          v.pop_back();
        }
        return false;
      }

      FiniteSemiring const&             s_;
      EngineOptions const&              options_;
      element                           zero_;
      std::vector<Symbol>               letters_;
      std::vector<int>                  target_word_;
      std::vector<char>                 ldiv_;
      std::vector<std::vector<element>> values_;   // nonzero evaluations of w
      std::vector<element>              targets_;  // the value of w under each
      unsigned long long                nodes_ = 0;
    };

    Term term_of(std::vector<Symbol> const& alphabet, std::vector<int> const& v) {
      std::vector<Symbol> letters;
      for (int x : v) {
        letters.push_back(alphabet[x]);
      }
      return word_term(Word(std::move(letters)));
    }

  }  // namespace

  IsotermVerdict is_isoterm_bounded(FiniteSemiring const& s, Word const& w, unsigned max_extra_len,
                                    EngineOptions const& options) {
    if (w.empty() || w.commutative()) {
      throw PreconditionError("isoterm search needs a nonempty noncommutative word");
    }
    IsotermVerdict out;
    out.max_length   = w.size() + max_extra_len;
    auto const alpha = w.alphabet();
    out.alphabet     = alpha;
    out.alphabet.push_back(fresh_symbol(alpha));

    auto to_word = [&](std::vector<int> const& v) {
      std::vector<Symbol> letters;
      for (int x : v) {
        letters.push_back(out.alphabet[x]);
      }
      return Word(std::move(letters));
    };

    if (s.is_flat()) {
      out.method = "flat: agreement on the nonzero evaluations of w";
      FlatIsotermSearch search(s, w, options);
      if (search.w_always_zero()) {
        // w is the top under every assignment, so every word lies below it.
        std::vector<int> v{0};
        if (to_word(v) == w) {
          v = {static_cast<int>(out.alphabet.size() > 1 ? 1 : 0)};
        }
        out.isoterm_up_to_bound = false;
        out.witness             = to_word(v);
        out.candidates          = search.nodes();
        return out;
      }
      // A word with the fresh letter fails: send it to 0 under any nonzero
      // evaluation of w. So only the letters of w are searched.
      for (std::size_t len = 1; len <= out.max_length; ++len) {
        if (auto v = search.search(len)) {
          out.isoterm_up_to_bound = false;
          out.witness             = to_word(*v);
          break;
        }
      }
      out.candidates = search.nodes();
      if (out.witness) {
        auto const verdict = satisfies(s, Statement::order(word_term(*out.witness), word_term(w)),
                                       options);
        if (!verdict.holds) {
          throw ConstructionFailure("isoterm witness " + format_word(*out.witness)
                                    + " fails the order check");
        }
      }
      return out;
    }

    out.method      = "exhaustive: one satisfaction check per candidate";
    Term const wt   = word_term(w);
    std::size_t const k = out.alphabet.size();
    unsigned long long counter = 0;
    for (std::size_t len = 1; len <= out.max_length; ++len) {
      std::vector<int> v(len, 0);
      for (;;) {
        charge(counter, options, "isoterm search");
        Word const cand = to_word(v);
        if (!(cand == w)
            && satisfies(s, Statement::order(term_of(out.alphabet, v), wt), options).holds) {
          out.isoterm_up_to_bound = false;
          out.witness             = cand;
          out.candidates          = counter;
          return out;
        }
        std::size_t i = len;
        while (i > 0 && v[i - 1] == static_cast<int>(k) - 1) {
          v[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++v[i - 1];
      }
    }
    out.candidates = counter;
    return out;
  }

}  // namespace srw
