#include <algorithm>
#include <map>
#include <set>

#include "srw/constructions.hpp"
#include "srw/error.hpp"

namespace srw {

  ////////////////////////////////////////////////////////////////////////
  // Flat extensions
  ////////////////////////////////////////////////////////////////////////

  bool is_zero_cancellative(FiniteSemiring const& s) {
    auto const zero = s.zero();
    if (!zero) {
      return false;
    }
    std::size_t const n = s.size();
    std::vector<element> seen(n);
    for (element a = 0; a < n; ++a) {
      // Row a and column a must be injective away from 0.
      for (int side = 0; side < 2; ++side) {
        std::fill(seen.begin(), seen.end(), 0);
        for (element b = 0; b < n; ++b) {
          element const p = side == 0 ? s.mul(a, b) : s.mul(b, a);
          if (p != *zero && seen[p]++) {
            return false;
          }
        }
      }
    }
    return true;
  }

  FiniteSemiring flat_extension(FiniteGroup const& g) {
    std::size_t const n = g.size() + 1;
    detail::check_order(n, "flat extension");
    Table add(n), mul(n);
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        add.set(x, y, x == y ? x : 0);
        mul.set(x, y, x == 0 || y == 0 ? 0 : g.mul(x - 1, y - 1) + 1);
      }
    }
    std::vector<std::string> labels{"0"};
    labels.insert(labels.end(), g.labels().begin(), g.labels().end());
    auto s = FiniteSemiring::unchecked(std::move(add), std::move(mul), std::move(labels));
    if (!s.is_flat() || !is_zero_cancellative(s)) {
      throw ConstructionFailure("flat extension of a group is not a flat 0-cancellative semiring");
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word semirings
  ////////////////////////////////////////////////////////////////////////

  element WordSemiring::element_of(Word const& w) const {
    Word const key(w.letters(), commutative);
    for (element x = 0; x < words.size(); ++x) {
      if (words[x] && words[x]->letters() == key.letters()) {
        return x;
      }
    }
    throw PreconditionError("'" + format_word(w) + "' is not an element");
  }

  WordSemiring word_semiring(std::vector<Word> const& words, bool commutative, bool monoid) {
    if (words.empty()) {
      throw PreconditionError("word semiring of an empty set of words");
    }
    std::vector<Symbol> alphabet;
    for (auto const& w : words) {
      if (w.empty() && !monoid) {
        throw PreconditionError("the empty word is only allowed in monoid constructions");
      }
      auto a = w.alphabet();
      alphabet.insert(alphabet.end(), a.begin(), a.end());
    }
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    auto id = [&](Symbol const& s) {
      return static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), s)
                              - alphabet.begin());
    };

    using Key = std::vector<int>;
    std::set<Key> factors;
    for (auto const& w : words) {
      Key ids;
      for (auto const& s : w.letters()) {
        ids.push_back(id(s));
      }
      if (commutative) {
        std::sort(ids.begin(), ids.end());
        // Sub-multisets: choose a count up to the multiplicity of each id.
        std::vector<std::pair<int, int>> counts;
        for (int x : ids) {
          if (counts.empty() || counts.back().first != x) {
            counts.emplace_back(x, 0);
          }
          ++counts.back().second;
        }
        std::vector<int> pick(counts.size(), 0);
        for (;;) {
          std::size_t k = 0;
          while (k < pick.size() && pick[k] == counts[k].second) {
            pick[k++] = 0;
          }
          if (k == pick.size()) {
            break;
          }
          ++pick[k];
          Key f;
          for (std::size_t c = 0; c < counts.size(); ++c) {
            f.insert(f.end(), pick[c], counts[c].first);
          }
          factors.insert(std::move(f));
          detail::check_order(factors.size() + 2, "word semiring");
        }
      } else {
        for (std::size_t i = 0; i < ids.size(); ++i) {
          for (std::size_t j = i + 1; j <= ids.size(); ++j) {
            factors.emplace(ids.begin() + i, ids.begin() + j);
          }
          detail::check_order(factors.size() + 2, "word semiring");
        }
      }
    }

    std::vector<Key> ordered(factors.begin(), factors.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](Key const& a, Key const& b) { return a.size() < b.size(); });
    if (monoid) {
      ordered.insert(ordered.begin(), Key{});
    }
    std::size_t const n = ordered.size() + 1;
    detail::check_order(n, "word semiring");

    std::map<Key, element> index;
    WordSemiring           out;
    out.commutative = commutative;
    out.monoid      = monoid;
    out.words.resize(n);
    std::vector<std::string> labels{"0"};
    for (element x = 1; x < n; ++x) {
      Key const&          k = ordered[x - 1];
      std::vector<Symbol> letters;
      for (int s : k) {
        letters.push_back(alphabet[s]);
      }
      out.words[x] = Word(std::move(letters), commutative);
      labels.push_back(format_word(*out.words[x]));
      index.emplace(k, x);
    }

    Table add(n), mul(n);
    Key   buffer;
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        add.set(x, y, x == y ? x : 0);
        if (x == 0 || y == 0) {
          continue;
        }
        Key const& u = ordered[x - 1];
        Key const& v = ordered[y - 1];
        buffer.clear();
        if (commutative) {
          std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(buffer));
        } else {
          buffer.insert(buffer.end(), u.begin(), u.end());
          buffer.insert(buffer.end(), v.begin(), v.end());
        }
        auto it = index.find(buffer);
        mul.set(x, y, it == index.end() ? 0 : it->second);
      }
    }
    out.semiring = FiniteSemiring::unchecked(std::move(add), std::move(mul), std::move(labels));
    return out;
  }

  WordSemiring word_semiring(Word const& w, bool monoid) {
    return word_semiring(std::vector<Word>{w}, w.commutative(), monoid);
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool is_prime(unsigned p) {
      if (p < 2) {
        return false;
      }
      for (unsigned d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::size_t checked_power(unsigned p, unsigned e) {
      std::size_t r = 1;
      for (unsigned i = 0; i < e; ++i) {
        r *= p;
        if (r > max_order) {
          throw OrderCapError("group order " + std::to_string(p) + "^" + std::to_string(e)
                              + " is above the cap of " + std::to_string(max_order));
        }
      }
      return r;
    }

    std::string power_label(char const* g, std::size_t k) {
      if (k == 0) {
        return "";
      }
      return k == 1 ? std::string(g) : std::string(g) + "^" + std::to_string(k);
    }

    std::string join_label(std::string s) {
      return s.empty() ? "1" : s;
    }

    // Group axioms by Light's test over the generators: (x g) y = x (g y) for
    // every generator g suffices once the generators generate the table as a
    // semigroup.
    void check_group(FiniteGroup const& g, std::vector<element> const& gens, char const* name) {
      std::size_t const n = g.size();
      auto fail = [&](std::string const& what) {
        throw ConstructionFailure(std::string(name) + ": " + what);
      };
      std::vector<char>    in(n, 0);
      std::vector<element> reached;
      for (auto x : gens) {
        if (!in[x]) {
          in[x] = 1;
          reached.push_back(x);
        }
      }
      for (std::size_t i = 0; i < reached.size(); ++i) {
        for (auto x : gens) {
          element const y = g.mul(reached[i], x);
          if (!in[y]) {
            in[y] = 1;
            reached.push_back(y);
          }
        }
      }
      if (reached.size() != n) {
        fail("the generators do not generate the table");
      }
      for (auto a : gens) {
        for (element x = 0; x < n; ++x) {
          element const xa = g.mul(x, a);
          for (element y = 0; y < n; ++y) {
            if (g.mul(xa, y) != g.mul(x, g.mul(a, y))) {
              fail("multiplication is not associative");
            }
          }
        }
      }
      for (element x = 0; x < n; ++x) {
        if (g.mul(g.identity(), x) != x || g.mul(x, g.identity()) != x) {
          fail("no identity");
        }
        if (g.mul(x, g.inverse(x)) != g.identity() || g.mul(g.inverse(x), x) != g.identity()) {
          fail("missing inverse");
        }
      }
    }

    void relation(bool holds, char const* name, char const* rel) {
      if (!holds) {
        throw ConstructionFailure(std::string(name) + ": relation " + rel + " fails");
      }
    }

  }  // namespace

  FiniteGroup group_Q8() {
    auto index = [](unsigned i, unsigned j) { return static_cast<element>((i % 4) + 4 * (j % 2)); };
    Table                    mul(8);
    std::vector<std::string> labels(8);
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned j = 0; j < 2; ++j) {
        labels[index(i, j)] = join_label(power_label("a", i) + power_label("b", j));
        for (unsigned k = 0; k < 4; ++k) {
          for (unsigned l = 0; l < 2; ++l) {
            // b a^k = a^-k b and b^2 = a^2.
            unsigned const e = i + (j ? 4 - k : k) + (j && l ? 2 : 0);
            mul.set(index(i, j), index(k, l), index(e, j + l));
          }
        }
      }
    }
    auto      g = FiniteGroup::unchecked(std::move(mul), std::move(labels));
    element   a = g.element_named("a"), b = g.element_named("b");
    char const* name = "Q8";
    check_group(g, {a, b}, name);
    relation(g.power(a, 4) == g.identity(), name, "a^4 = 1");
    relation(g.power(a, 2) == g.power(b, 2), name, "a^2 = b^2");
    relation(g.mul(g.mul(a, b), a) == b, name, "aba = b");
    return g;
  }

  FiniteGroup group_metacyclic(unsigned p, unsigned m, unsigned n) {
    if (!is_prime(p) || m < 2 || n < 1) {
      throw PreconditionError("M_p(m,n) needs p prime, m >= 2 and n >= 1");
    }
    checked_power(p, m + n);
    std::size_t const pm = checked_power(p, m), pn = checked_power(p, n);
    std::size_t const r  = 1 + checked_power(p, m - 1);
    // rpow[j] = r^j mod p^m
    std::vector<std::size_t> rpow(pn);
    rpow[0] = 1;
    for (std::size_t j = 1; j < pn; ++j) {
      rpow[j] = rpow[j - 1] * r % pm;
    }
    std::size_t const        order = pm * pn;
    Table                    mul(order);
    std::vector<std::string> labels(order);
    for (std::size_t j = 0; j < pn; ++j) {
      for (std::size_t i = 0; i < pm; ++i) {
        element const x = static_cast<element>(j * pm + i);
        labels[x]       = join_label(power_label("b", j) + power_label("a", i));
        for (std::size_t j2 = 0; j2 < pn; ++j2) {
          for (std::size_t i2 = 0; i2 < pm; ++i2) {
            std::size_t const jj = (j + j2) % pn;
            std::size_t const ii = (i * rpow[j2] + i2) % pm;
            mul.set(x, static_cast<element>(j2 * pm + i2), static_cast<element>(jj * pm + ii));
          }
        }
      }
    }
    auto        g    = FiniteGroup::unchecked(std::move(mul), std::move(labels));
    element     a    = g.element_named("a"), b = g.element_named("b");
    char const* name = "M_p(m,n)";
    check_group(g, {a, b}, name);
    relation(g.power(a, pm) == g.identity(), name, "a^(p^m) = 1");
    relation(g.power(b, pn) == g.identity(), name, "b^(p^n) = 1");
    relation(g.mul(a, b) == g.mul(b, g.power(a, r)), name, "ab = ba^(1+p^(m-1))");
    relation(g.element_order(a) == pm && g.element_order(b) == pn, name, "generator orders");
    return g;
  }

  FiniteGroup group_nonmetacyclic(unsigned p, unsigned m, unsigned n) {
    if (!is_prime(p) || m < 1 || n < 1) {
      throw PreconditionError("M_p(m,n,1) needs p prime, m >= 1 and n >= 1");
    }
    checked_power(p, m + n + 1);
    std::size_t const pm = checked_power(p, m), pn = checked_power(p, n);
    std::size_t const order = pm * pn * p;
    auto index = [&](std::size_t j, std::size_t i, std::size_t k) {
      return static_cast<element>((j * pm + i) * p + k);
    };
    Table                    mul(order);
    std::vector<std::string> labels(order);
    for (std::size_t j = 0; j < pn; ++j) {
      for (std::size_t i = 0; i < pm; ++i) {
        for (std::size_t k = 0; k < p; ++k) {
          element const x = index(j, i, k);
          labels[x] =
              join_label(power_label("b", j) + power_label("a", i) + power_label("c", k));
          for (std::size_t j2 = 0; j2 < pn; ++j2) {
            for (std::size_t i2 = 0; i2 < pm; ++i2) {
              for (std::size_t k2 = 0; k2 < p; ++k2) {
                // a^i b^j' = b^j' a^i c^(i j')
                mul.set(x, index(j2, i2, k2),
                        index((j + j2) % pn, (i + i2) % pm, (k + k2 + i * j2) % p));
              }
            }
          }
        }
      }
    }
    auto        g    = FiniteGroup::unchecked(std::move(mul), std::move(labels));
    element     a    = g.element_named("a"), b = g.element_named("b"), c = g.element_named("c");
    char const* name = "M_p(m,n,1)";
    check_group(g, {a, b}, name);
    relation(g.power(a, pm) == g.identity(), name, "a^(p^m) = 1");
    relation(g.power(b, pn) == g.identity(), name, "b^(p^n) = 1");
    relation(g.power(c, p) == g.identity(), name, "c^p = 1");
    relation(g.mul(a, b) == g.mul(g.mul(b, a), c), name, "ab = bac");
    relation(g.mul(a, c) == g.mul(c, a), name, "ac = ca");
    relation(g.mul(b, c) == g.mul(c, b), name, "bc = cb");
    relation(g.element_order(a) == pm && g.element_order(b) == pn && g.element_order(c) == p, name,
             "generator orders");
    return g;
  }

  FiniteGroup group_cyclic(unsigned n) {
    if (n < 1) {
      throw PreconditionError("cyclic group of order 0");
    }
    detail::check_order(n, "cyclic group");
    Table                    mul(n);
    std::vector<std::string> labels(n);
    for (element x = 0; x < n; ++x) {
      labels[x] = join_label(power_label("g", x));
      for (element y = 0; y < n; ++y) {
        mul.set(x, y, (x + y) % n);
      }
    }
    return FiniteGroup::unchecked(std::move(mul), std::move(labels));
  }

}  // namespace srw
