#include <algorithm>
#include <map>

#include "srw/error.hpp"
#include "srw/operations.hpp"

namespace srw {

  namespace {

    struct View {
      std::size_t                n = 0;
      std::vector<Table const*>  ops;
      std::vector<std::vector<std::uint64_t>> profile;  // per element
    };

    using Colours = std::vector<std::uint32_t>;

    // Joint colour refinement. Both algebras share the signature -> colour
    // map, so equal colours mean equal refined invariants. Returns false as
    // soon as the colour class histograms differ.
    bool refine(View const& a, View const& b, Colours& ca, Colours& cb) {
      std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
      auto assign = [&](std::vector<std::uint64_t> const& sig) {
        return ids.emplace(sig, static_cast<std::uint32_t>(ids.size())).first->second;
      };
      std::size_t const n = a.n;
      ca.assign(n, 0);
      cb.assign(n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        ca[x] = assign(a.profile[x]);
      }
      for (std::size_t x = 0; x < n; ++x) {
        cb[x] = assign(b.profile[x]);
      }
      auto histogram_equal = [&] {
        std::vector<std::size_t> ha(ids.size()), hb(ids.size());
        for (std::size_t x = 0; x < n; ++x) {
          ++ha[ca[x]];
          ++hb[cb[x]];
        }
        return ha == hb;
      };
      if (!histogram_equal()) {
        return false;
      }
      std::size_t classes = ids.size();
      for (;;) {
        ids.clear();
        std::uint64_t const k = classes + 1;
        auto signature = [&](View const& v, Colours const& c, element x) {
          std::vector<std::uint64_t> sig{c[x]};
          std::vector<std::uint64_t> part;
          for (Table const* t : v.ops) {
            for (int side = 0; side < 2; ++side) {
              part.clear();
              for (element y = 0; y < v.n; ++y) {
                element const r = side == 0 ? (*t)(x, y) : (*t)(y, x);
                part.push_back(c[y] * k + c[r]);
              }
              std::sort(part.begin(), part.end());
              sig.push_back(k * k);  // separator
              sig.insert(sig.end(), part.begin(), part.end());
            }
          }
          return sig;
        };
        Colours na(n), nb(n);
        for (element x = 0; x < n; ++x) {
          na[x] = assign(signature(a, ca, x));
        }
        for (element x = 0; x < n; ++x) {
          nb[x] = assign(signature(b, cb, x));
        }
        ca.swap(na);
        cb.swap(nb);
        if (!histogram_equal()) {
          return false;
        }
        if (ids.size() == classes) {
          return true;
        }
        classes = ids.size();
      }
    }

    class Search {
     public:
      Search(View const& a, View const& b, Colours const& ca, Colours const& cb)
          : a_(a), b_(b), ca_(ca), cb_(cb), map_(a.n, unset), used_(a.n, 0) {}

      std::optional<std::vector<element>> run() {
        if (dfs()) {
          return map_;
        }
        return std::nullopt;
      }

     private:
      static constexpr element unset = static_cast<element>(-1);

      bool set(element x, element t) {
        if (map_[x] != unset) {
          return map_[x] == t;
        }
        if (used_[t] || ca_[x] != cb_[t]) {
          return false;
        }
        map_[x] = t;
        used_[t] = 1;
        trail_.push_back(x);
        queue_.push_back(x);
        return true;
      }

      // Closes the partial map under every operation.
      bool propagate() {
        while (!queue_.empty()) {
          element const x = queue_.back();
          queue_.pop_back();
          for (std::size_t i = 0; i < trail_.size(); ++i) {
            element const y = trail_[i];
            for (std::size_t k = 0; k < a_.ops.size(); ++k) {
              Table const& ta = *a_.ops[k];
              Table const& tb = *b_.ops[k];
              if (!set(ta(x, y), tb(map_[x], map_[y])) || !set(ta(y, x), tb(map_[y], map_[x]))) {
                queue_.clear();
                return false;
              }
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (trail_.size() > mark) {
          element const x = trail_.back();
          trail_.pop_back();
          used_[map_[x]] = 0;
          map_[x]        = unset;
        }
      }

      bool dfs() {
        element x = 0;
        while (x < a_.n && map_[x] != unset) {
          ++x;
        }
        if (x == a_.n) {
          return true;
        }
        for (element t = 0; t < b_.n; ++t) {
          if (used_[t] || ca_[x] != cb_[t]) {
            continue;
          }
          std::size_t const mark = trail_.size();
          if (set(x, t) && propagate() && dfs()) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      View const&          a_;
      View const&          b_;
      Colours const&       ca_;
      Colours const&       cb_;
      std::vector<element> map_;
      std::vector<char>    used_;
      std::vector<element> trail_;
      std::vector<element> queue_;
    };

    std::optional<std::vector<element>> find_isomorphism(View const& a, View const& b) {
      if (a.n != b.n) {
        return std::nullopt;
      }
      Colours ca, cb;
      if (!refine(a, b, ca, cb)) {
        return std::nullopt;
      }
      return Search(a, b, ca, cb).run();
    }

    View group_view(FiniteGroup const& g) {
      View v;
      v.n   = g.size();
      v.ops = {&g.mul_table()};
      for (element x = 0; x < v.n; ++x) {
        std::uint64_t centralizer = 0;
        for (element y = 0; y < v.n; ++y) {
          centralizer += g.mul(x, y) == g.mul(y, x);
        }
        v.profile.push_back({g.element_order(x), centralizer});
      }
      return v;
    }

    View semiring_view(FiniteSemiring const& s) {
      View v;
      v.n   = s.size();
      v.ops = {&s.add_table(), &s.mul_table()};
      auto const zero = s.zero();
      for (element x = 0; x < v.n; ++x) {
        std::uint64_t row_zero = 0, col_zero = 0, left_fixed = 0, right_fixed = 0, below = 0;
        for (element y = 0; y < v.n; ++y) {
          row_zero += zero && s.mul(x, y) == *zero;
          col_zero += zero && s.mul(y, x) == *zero;
          left_fixed += s.mul(x, y) == y;
          right_fixed += s.mul(y, x) == y;
          below += s.add(x, y) == x;
        }
        v.profile.push_back({s.add(x, x) == x, s.mul(x, x) == x, zero && x == *zero, row_zero,
                             col_zero, left_fixed, right_fixed, below});
      }
      return v;
    }

  }  // namespace

  std::optional<Morphism> is_isomorphic(FiniteGroup const& a, FiniteGroup const& b) {
    auto map = find_isomorphism(group_view(a), group_view(b));
    if (!map) {
      return std::nullopt;
    }
    auto m = verify_morphism(a, b, std::move(*map));
    if (!m.is_isomorphism()) {
      throw ConstructionFailure("isomorphism search returned a map that is not an isomorphism");
    }
    return m;
  }

  std::optional<Morphism> is_isomorphic(FiniteSemiring const& a, FiniteSemiring const& b) {
    auto map = find_isomorphism(semiring_view(a), semiring_view(b));
    if (!map) {
      return std::nullopt;
    }
    auto m = verify_morphism(a, b, std::move(*map));
    if (!m.is_isomorphism()) {
      throw ConstructionFailure("isomorphism search returned a map that is not an isomorphism");
    }
    return m;
  }

  std::optional<Morphism> is_isomorphic(Algebra const& a, Algebra const& b) {
    if (a.index() != b.index()) {
      throw PreconditionError("cannot compare a group with a semiring");
    }
    if (auto const* s = std::get_if<FiniteSemiring>(&a)) {
      return is_isomorphic(*s, std::get<FiniteSemiring>(b));
    }
    return is_isomorphic(std::get<FiniteGroup>(a), std::get<FiniteGroup>(b));
  }

}  // namespace srw
