#pragma once

// Slow, independent reference implementations. None of these call into the
// search code they are used to check; they only read tables.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "srw/algebra.hpp"
#include "srw/term.hpp"

namespace oracle {

  using srw::element;
  using srw::Table;

  // Every permutation of the carrier, applied to both tables.
  template <typename F>
  void for_each_permutation(std::size_t n, F&& f) {
    std::vector<element> pi(n);
    std::iota(pi.begin(), pi.end(), element{0});
    do {
      f(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
  }

  inline bool preserves(Table const& a, Table const& b, std::vector<element> const& pi) {
    for (element x = 0; x < a.size(); ++x)
      for (element y = 0; y < a.size(); ++y)
        if (pi[a(x, y)] != b(pi[x], pi[y])) return false;
    return true;
  }

  inline bool isomorphic(srw::FiniteSemiring const& a, srw::FiniteSemiring const& b) {
    if (a.size() != b.size()) return false;
    bool found = false;
    for_each_permutation(a.size(), [&](std::vector<element> const& pi) {
      found = found || (preserves(a.add_table(), b.add_table(), pi) && preserves(a.mul_table(), b.mul_table(), pi));
    });
    return found;
  }

  inline bool isomorphic(srw::FiniteGroup const& a, srw::FiniteGroup const& b) {
    if (a.size() != b.size()) return false;
    bool found = false;
    for_each_permutation(a.size(), [&](std::vector<element> const& pi) {
      found = found || preserves(a.mul_table(), b.mul_table(), pi);
    });
    return found;
  }

  // Semiring axioms checked directly over the tables.
  inline bool is_ai_semiring(Table const& add, Table const& mul) {
    std::size_t const n = add.size();
    for (element x = 0; x < n; ++x) {
      if (add(x, x) != x) return false;
      for (element y = 0; y < n; ++y) {
        if (add(x, y) != add(y, x)) return false;
        for (element z = 0; z < n; ++z) {
          if (add(add(x, y), z) != add(x, add(y, z))) return false;
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
          if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) return false;
          if (mul(add(y, z), x) != add(mul(y, x), mul(z, x))) return false;
        }
      }
    }
    return true;
  }

  inline Table flat_add(std::size_t n) {
    Table t(n);
    for (element x = 0; x < n; ++x)
      for (element y = 0; y < n; ++y) t.set(x, y, x == y ? x : 0);
    return t;
  }

  // Canonical form: the least (add, mul) data over all relabellings.
  inline std::vector<element> canonical(Table const& add, Table const& mul) {
    std::size_t const    n = add.size();
    std::vector<element> best;
    for_each_permutation(n, [&](std::vector<element> const& pi) {
      std::vector<element> img(2 * n * n);
      for (element x = 0; x < n; ++x)
        for (element y = 0; y < n; ++y) {
          img[pi[x] * n + pi[y]]         = pi[add(x, y)];
          img[n * n + pi[x] * n + pi[y]] = pi[mul(x, y)];
        }
      if (best.empty() || img < best) best = img;
    });
    return best;
  }

  // Every n^(n^2) multiplication table under the flat addition with 0 as
  // the top; kept when 0 is a multiplicative zero and the axioms hold.
  inline std::size_t flat_class_count(std::size_t n) {
    Table const                      add = flat_add(n);
    std::set<std::vector<element>>   classes;
    std::vector<element>             cells(n * n, 0);
    std::size_t                      total = 1;
    for (std::size_t k = 0; k < n * n; ++k) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      Table       mul(n);
      for (std::size_t k = 0; k < n * n; ++k) {
        mul.set(static_cast<element>(k / n), static_cast<element>(k % n), static_cast<element>(c % n));
        c /= n;
      }
      bool zero = true;
      for (element x = 0; x < n; ++x) zero = zero && mul(0, x) == 0 && mul(x, 0) == 0;
      if (!zero || !is_ai_semiring(add, mul)) continue;
      classes.insert(canonical(add, mul));
    }
    return classes.size();
  }

  // All ai-semirings of order n (n <= 3): every pair of tables.
  inline std::size_t ai_class_count(std::size_t n) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n * n; ++k) total *= n;
    std::set<std::vector<element>> classes;
    auto decode = [&](std::size_t code) {
      Table t(n);
      for (std::size_t k = 0; k < n * n; ++k) {
        t.set(static_cast<element>(k / n), static_cast<element>(k % n), static_cast<element>(code % n));
        code /= n;
      }
      return t;
    };
    for (std::size_t a = 0; a < total; ++a) {
      Table const add = decode(a);
      bool        sl  = true;
      for (element x = 0; x < n && sl; ++x)
        for (element y = 0; y < n && sl; ++y) {
          sl = add(x, x) == x && add(x, y) == add(y, x);
          for (element z = 0; z < n && sl; ++z) sl = add(add(x, y), z) == add(x, add(y, z));
        }
      if (!sl) continue;
      for (std::size_t m = 0; m < total; ++m) {
        Table const mul = decode(m);
        if (is_ai_semiring(add, mul)) classes.insert(canonical(add, mul));
      }
    }
    return classes.size();
  }

  // All partitions of 0..n-1 as block vectors (restricted growth strings).
  inline std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t blocks) {
      if (i == n) {
        out.push_back(rgs);
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        rgs[i] = b;
        go(i + 1, std::max(blocks, b + 1));
      }
    };
    if (n > 0) go(1, 1);
    return out;
  }

  inline bool is_congruence(srw::FiniteSemiring const& s, std::vector<std::size_t> const& block) {
    std::size_t const n = s.size();
    for (element x = 0; x < n; ++x)
      for (element y = 0; y < n; ++y) {
        if (block[x] != block[y]) continue;
        for (element z = 0; z < n; ++z) {
          if (block[s.add(x, z)] != block[s.add(y, z)]) return false;
          if (block[s.mul(x, z)] != block[s.mul(y, z)]) return false;
          if (block[s.mul(z, x)] != block[s.mul(z, y)]) return false;
        }
      }
    return true;
  }

  // SI iff the nontrivial congruences have a least element.
  inline bool subdirectly_irreducible(srw::FiniteSemiring const& s) {
    std::vector<std::vector<std::size_t>> cons;
    for (auto const& p : partitions(s.size())) {
      if (*std::max_element(p.begin(), p.end()) + 1 == s.size()) continue;  // identity
      if (is_congruence(s, p)) cons.push_back(p);
    }
    auto finer = [&](std::vector<std::size_t> const& a, std::vector<std::size_t> const& b) {
      for (element x = 0; x < a.size(); ++x)
        for (element y = 0; y < a.size(); ++y)
          if (a[x] == a[y] && b[x] != b[y]) return false;
      return true;
    };
    for (auto const& c : cons) {
      if (std::all_of(cons.begin(), cons.end(), [&](auto const& d) { return finer(c, d); })) return true;
    }
    return false;
  }

  // The lexicographically least falsifying assignment (variables sorted,
  // elements ascending), by plain enumeration.
  inline std::optional<srw::Assignment> counterexample(srw::FiniteSemiring const& s, srw::Statement const& st) {
    auto const           vars = srw::variables(st);
    std::vector<element> val(vars.size(), 0);
    for (;;) {
      srw::Assignment a;
      for (std::size_t k = 0; k < vars.size(); ++k) a[vars[k]] = val[k];
      if (!srw::holds_under(st, s, a)) return a;
      std::size_t k = vars.size();
      while (k > 0 && val[k - 1] + 1 == s.size()) val[--k] = 0;
      if (k == 0) return std::nullopt;
      ++val[k - 1];
    }
  }

}  // namespace oracle
