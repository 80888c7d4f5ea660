#include <algorithm>
#include <numeric>
#include <set>

#include "srw/error.hpp"
#include "srw/operations.hpp"

namespace srw {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), element{0});
      }

      element find(element x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      bool unite(element x, element y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        parent_[std::max(x, y)] = std::min(x, y);
        return true;
      }

     private:
      std::vector<element> parent_;
    };

    Congruence generated(std::size_t n, std::vector<Table const*> const& ops, element x,
                         element y) {
      if (x >= n || y >= n) {
        throw PreconditionError("element outside the carrier");
      }
      UnionFind                             uf(n);
      std::vector<std::pair<element, element>> pending{{x, y}};
      while (!pending.empty()) {
        auto [u, v] = pending.back();
        pending.pop_back();
        if (!uf.unite(u, v)) {
          continue;
        }
        for (Table const* t : ops) {
          for (element c = 0; c < n; ++c) {
            pending.emplace_back((*t)(u, c), (*t)(v, c));
            pending.emplace_back((*t)(c, u), (*t)(c, v));
          }
        }
      }
      Congruence                c;
      std::vector<std::size_t> number(n, static_cast<std::size_t>(-1));
      std::size_t              next = 0;
      c.block.resize(n);
      for (element z = 0; z < n; ++z) {
        element const r = uf.find(z);
        if (number[r] == static_cast<std::size_t>(-1)) {
          number[r] = next++;
        }
        c.block[z] = number[r];
      }
      return c;
    }

    // Whether every pair related by a is related by b.
    bool finer(Congruence const& a, Congruence const& b) {
      std::vector<std::size_t> image(a.number_of_blocks(), static_cast<std::size_t>(-1));
      for (std::size_t x = 0; x < a.block.size(); ++x) {
        auto& slot = image[a.block[x]];
        if (slot == static_cast<std::size_t>(-1)) {
          slot = b.block[x];
        } else if (slot != b.block[x]) {
          return false;
        }
      }
      return true;
    }

    SIVerdict si_by_congruences(std::size_t n, std::vector<Table const*> const& ops) {
      if (n < 2) {
        throw PreconditionError("subdirect irreducibility needs at least two elements");
      }
      std::vector<Congruence> principal;
      for (element x = 0; x < n; ++x) {
        for (element y = x + 1; y < n; ++y) {
          auto c = generated(n, ops, x, y);
          if (std::find(principal.begin(), principal.end(), c) == principal.end()) {
            principal.push_back(std::move(c));
          }
        }
      }
      std::vector<Congruence const*> minimal;
      for (auto const& c : principal) {
        bool is_min = true;
        for (auto const& d : principal) {
          if (!(d == c) && finer(d, c)) {
            is_min = false;
            break;
          }
        }
        if (is_min) {
          minimal.push_back(&c);
        }
      }
      SIVerdict v;
      if (minimal.size() == 1) {
        v.subdirectly_irreducible = true;
        v.monolith                = *minimal.front();
      } else {
        v.decomposition = std::make_pair(*minimal[0], *minimal[1]);
      }
      return v;
    }

  }  // namespace

  Congruence principal_congruence(FiniteSemiring const& s, element x, element y) {
    return generated(s.size(), {&s.add_table(), &s.mul_table()}, x, y);
  }

  Congruence principal_congruence(FiniteGroup const& g, element x, element y) {
    return generated(g.size(), {&g.mul_table()}, x, y);
  }

  SIVerdict subdirectly_irreducible(FiniteSemiring const& s) {
    auto v = si_by_congruences(s.size(), {&s.add_table(), &s.mul_table()});
    if (s.is_flat()) {
      v.ideal_criterion = si_by_ideals(s);
      if (*v.ideal_criterion != v.subdirectly_irreducible) {
        throw ConstructionFailure(
            "congruence and ideal criteria disagree on subdirect irreducibility");
      }
    }
    return v;
  }

  SIVerdict subdirectly_irreducible(FiniteGroup const& g) {
    return si_by_congruences(g.size(), {&g.mul_table()});
  }

  std::vector<element> principal_ideal(FiniteSemiring const& s, element x) {
    std::size_t const    n = s.size();
    std::vector<char>    in(n, 0);
    std::vector<element> elems;
    auto push = [&](element e) {
      if (!in[e]) {
        in[e] = 1;
        elems.push_back(e);
      }
    };
    push(x);
    if (auto z = s.zero()) {
      push(*z);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      element const e = elems[i];
      for (element c = 0; c < n; ++c) {
        push(s.mul(c, e));
        push(s.mul(e, c));
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  std::vector<std::vector<element>> multiplicative_ideals(FiniteSemiring const& s) {
    if (!s.is_flat()) {
      throw PreconditionError("multiplicative_ideals requires a flat semiring");
    }
    element const                  zero = *s.zero();
    std::set<std::vector<element>> ideals;
    for (element x = 0; x < s.size(); ++x) {
      if (x != zero) {
        ideals.insert(principal_ideal(s, x));
      }
    }
    std::vector<std::vector<element>> out;
    for (auto const& i : ideals) {
      bool is_min = true;
      for (auto const& j : ideals) {
        if (j != i && std::includes(i.begin(), i.end(), j.begin(), j.end())) {
          is_min = false;
          break;
        }
      }
      if (is_min) {
        out.push_back(i);
      }
    }
    return out;
  }

  bool si_by_ideals(FiniteSemiring const& s) {
    if (s.size() < 2) {
      throw PreconditionError("subdirect irreducibility needs at least two elements");
    }
    return multiplicative_ideals(s).size() == 1;
  }

  ReesQuotient rees_quotient(FiniteSemiring const& s, std::vector<element> const& ideal) {
    std::size_t const n = s.size();
    std::vector<char> in(n, 0);
    for (auto i : ideal) {
      if (i >= n) {
        throw PreconditionError("ideal element outside the carrier");
      }
      in[i] = 1;
    }
    auto const zero = s.zero();
    if (!zero || !in[*zero]) {
      throw PreconditionError("the ideal must contain the zero");
    }
    for (element i = 0; i < n; ++i) {
      if (!in[i]) {
        continue;
      }
      for (element x = 0; x < n; ++x) {
        char const* op = nullptr;
        if (!in[s.mul(x, i)] || !in[s.mul(i, x)]) {
          op = "product";
        } else if (!in[s.add(x, i)]) {
          op = "sum";
        }
        if (op) {
          throw PreconditionError(std::string("not an ideal: a ") + op + " of " + s.label(x)
                                  + " and " + s.label(i) + " leaves the set");
        }
      }
    }
    ReesQuotient r;
    r.projection.assign(n, 0);
    std::vector<std::string> labels{s.label(*zero)};
    element                  next = 1;
    for (element x = 0; x < n; ++x) {
      if (!in[x]) {
        r.projection[x] = next++;
        labels.push_back(s.label(x));
      }
    }
    Table add(next), mul(next);
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        add.set(r.projection[x], r.projection[y], r.projection[s.add(x, y)]);
        mul.set(r.projection[x], r.projection[y], r.projection[s.mul(x, y)]);
      }
    }
    r.quotient = FiniteSemiring(std::move(add), std::move(mul), std::move(labels));
    return r;
  }

}  // namespace srw
