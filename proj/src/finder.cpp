#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "srw/error.hpp"
#include "srw/finder.hpp"
#include "srw/operations.hpp"

namespace srw {

  namespace {

    constexpr std::size_t canonical_check_limit = 9;
    constexpr int         unset                 = -1;

    Table flat_addition(std::size_t n) {
      Table add(n);
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          add.set(x, y, x == y ? x : 0);
        }
      }
      return add;
    }

    // Whether no relabelling (fixing the elements in `fixed`) gives a
    // lexicographically smaller sequence of table entries, read in `cells`
    // order for each table in turn.
    bool lex_minimal(std::vector<Table const*> const&                   tables,
                     std::vector<std::pair<element, element>> const& cells, element first_moved) {
      std::size_t const    n = tables.front()->size();
      std::vector<element> pi(n), inv(n);
      std::iota(pi.begin(), pi.end(), element{0});
      while (std::next_permutation(pi.begin() + first_moved, pi.end())) {
        for (element x = 0; x < n; ++x) {
          inv[pi[x]] = x;
        }
        int cmp = 0;
        for (Table const* t : tables) {
          for (auto [u, v] : cells) {
            element const image = pi[(*t)(inv[u], inv[v])];
            element const own   = (*t)(u, v);
            if (image != own) {
              cmp = image < own ? -1 : 1;
              break;
            }
          }
          if (cmp != 0) {
            break;
          }
        }
        if (cmp < 0) {
          return false;
        }
      }
      return true;
    }

    ////////////////////////////////////////////////////////////////////////
    // Flat search: only the multiplication of the nonzero elements is free.
    ////////////////////////////////////////////////////////////////////////

    class FlatSearch {
     public:
      using Leaf = std::function<void(Table const&)>;

      FlatSearch(std::size_t n, bool canonical, SearchStats& stats)
          : n_(n), canonical_(canonical), stats_(stats) {
        // Cells by nondecreasing larger index, so that the least number
        // heuristic and lexicographic minimality agree.
        for (element level = 1; level < n; ++level) {
          for (element j = 1; j <= level; ++j) {
            cells_.emplace_back(level, j);
            if (j != level) {
              cells_.emplace_back(j, level);
            }
          }
        }
        tab_.assign(n * n, unset);
        for (element x = 0; x < n; ++x) {
          tab_[x]          = 0;
          tab_[x * n_]     = 0;
        }
        row_used_.assign(n * n, 0);
        col_used_.assign(n * n, 0);
        pos_.assign(n * n, 0);
        for (std::size_t c = 0; c < cells_.size(); ++c) {
          pos_[cells_[c].first * n_ + cells_[c].second] = c;
        }
      }

      std::vector<std::pair<element, element>> const& cells() const {
        return cells_;
      }

      void run(Leaf const& leaf) {
        leaf_ = &leaf;
        dfs(0, 0);
      }

     private:
      int get(int a, int b) const {
        if (a == unset || b == unset) {
          return unset;
        }
        return tab_[static_cast<std::size_t>(a) * n_ + b];
      }

      // (ab)c = a(bc) whenever all four products are known.
      bool assoc(int a, int b, int c) const {
        int const l = get(get(a, b), c);
        if (l == unset) {
          return true;
        }
        int const r = get(a, get(b, c));
        return r == unset || l == r;
      }

      // Every triple whose evaluation uses the cell (x,y): as the inner left
      // or right product, or as the outer product on either side.
      bool consistent(element x, element y) const {
        for (element z = 0; z < n_; ++z) {
          if (!assoc(x, y, z) || !assoc(z, x, y)) {
            return false;
          }
        }
        for (element a = 1; a < n_; ++a) {
          for (element b = 1; b < n_; ++b) {
            int const p = tab_[a * n_ + b];
            if (p == static_cast<int>(x) && !assoc(a, b, y)) {
              return false;
            }
            if (p == static_cast<int>(y) && !assoc(x, a, b)) {
              return false;
            }
          }
        }
        return true;
      }

      // False if some relabelling fixing 0 makes the first `filled` cells
      // lexicographically smaller; such a table cannot complete to the least
      // member of its class. Comparison stops at the first cell whose value
      // or image is not yet known.
      bool prefix_minimal(std::size_t filled) const {
        std::vector<element> pi(n_), inv(n_);
        std::iota(pi.begin(), pi.end(), element{0});
        while (std::next_permutation(pi.begin() + 1, pi.end())) {
          for (element x = 0; x < n_; ++x) {
            inv[pi[x]] = x;
          }
          for (std::size_t c = 0; c < filled; ++c) {
            auto const [u, v] = cells_[c];
            element const su = inv[u], sv = inv[v];
            if (pos_[su * n_ + sv] >= filled) {
              break;
            }
            element const image = pi[tab_[su * n_ + sv]];
            element const own   = static_cast<element>(tab_[u * n_ + v]);
            if (image != own) {
              if (image < own) {
                return false;
              }
              break;
            }
          }
        }
        return true;
      }

      void dfs(std::size_t idx, element mentioned) {
        if (canonical_ && idx > 1) {
          std::size_t level = 1;
          while (level * level < idx) {
            ++level;
          }
          if (level * level == idx && !prefix_minimal(idx)) {
            return;
          }
        }
        if (idx == cells_.size()) {
          ++stats_.complete_tables;
          Table t(n_);
          for (element x = 0; x < n_; ++x) {
            for (element y = 0; y < n_; ++y) {
              t.set(x, y, static_cast<element>(tab_[x * n_ + y]));
            }
          }
          (*leaf_)(t);
          return;
        }
        auto const [x, y] = cells_[idx];
        element const m   = std::max({mentioned, x, y});
        element const top = std::min<element>(static_cast<element>(n_ - 1), m + 1);
        for (element v = 0; v <= top; ++v) {
          // 0-cancellation: a nonzero value appears at most once per row and
          // per column.
          if (v != 0 && (row_used_[x * n_ + v] || col_used_[y * n_ + v])) {
            continue;
          }
          ++stats_.nodes;
          tab_[x * n_ + y] = static_cast<int>(v);
          if (v != 0) {
            row_used_[x * n_ + v] = col_used_[y * n_ + v] = 1;
          }
          if (consistent(x, y)) {
            dfs(idx + 1, std::max(m, v));
          }
          if (v != 0) {
            row_used_[x * n_ + v] = col_used_[y * n_ + v] = 0;
          }
          tab_[x * n_ + y] = unset;
        }
      }

      std::size_t                              n_;
      bool                                     canonical_;
      SearchStats&                             stats_;
      std::vector<std::pair<element, element>> cells_;
      std::vector<std::size_t>                 pos_;  // cell -> index in cells_
      std::vector<int>                         tab_;
      std::vector<char>                        row_used_;
      std::vector<char>                        col_used_;
      Leaf const*                              leaf_ = nullptr;
    };

    ////////////////////////////////////////////////////////////////////////
    // General ai search: a semilattice addition, then a multiplication that
    // is associative and distributes over it.
    ////////////////////////////////////////////////////////////////////////

    class AiSearch {
     public:
      using Leaf = std::function<void(Table const&, Table const&)>;

      AiSearch(std::size_t n, SearchStats& stats) : n_(n), stats_(stats) {}

      void run(Leaf const& leaf) {
        leaf_ = &leaf;
        add_.assign(n_ * n_, unset);
        for (element x = 0; x < n_; ++x) {
          add_[x * n_ + x] = static_cast<int>(x);
        }
        for (element x = 0; x < n_; ++x) {
          for (element y = x + 1; y < n_; ++y) {
            add_cells_.emplace_back(x, y);
          }
        }
        for (element x = 0; x < n_; ++x) {
          for (element y = 0; y < n_; ++y) {
            mul_cells_.emplace_back(x, y);
          }
        }
        fill_add(0);
      }

     private:
      static int at(std::vector<int> const& t, std::size_t n, int a, int b) {
        if (a == unset || b == unset) {
          return unset;
        }
        return t[static_cast<std::size_t>(a) * n + b];
      }

      bool add_associative() const {
        for (element x = 0; x < n_; ++x) {
          for (element y = 0; y < n_; ++y) {
            for (element z = 0; z < n_; ++z) {
              int const l = at(add_, n_, at(add_, n_, x, y), z);
              int const r = at(add_, n_, x, at(add_, n_, y, z));
              if (l != unset && r != unset && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void fill_add(std::size_t idx) {
        if (idx == add_cells_.size()) {
          mul_.assign(n_ * n_, unset);
          fill_mul(0);
          return;
        }
        auto const [x, y] = add_cells_[idx];
        for (element v = 0; v < n_; ++v) {
          ++stats_.nodes;
          add_[x * n_ + y] = add_[y * n_ + x] = static_cast<int>(v);
          if (add_associative()) {
            fill_add(idx + 1);
          }
        }
        add_[x * n_ + y] = add_[y * n_ + x] = unset;
      }

      bool mul_consistent(element x, element y) const {
        auto m = [&](int a, int b) { return at(mul_, n_, a, b); };
        auto s = [&](int a, int b) { return at(add_, n_, a, b); };
        auto differ = [](int l, int r) { return l != unset && r != unset && l != r; };
        for (element a = 0; a < n_; ++a) {
          for (element b = 0; b < n_; ++b) {
            for (element c = 0; c < n_; ++c) {
              if (differ(m(m(a, b), c), m(a, m(b, c)))) {
                return false;
              }
            }
          }
        }
        for (element b = 0; b < n_; ++b) {
          for (element c = 0; c < n_; ++c) {
            // x(b+c) = xb + xc and (b+c)y = by + cy
            if (differ(m(x, s(b, c)), s(m(x, b), m(x, c)))
                || differ(m(s(b, c), y), s(m(b, y), m(c, y)))) {
              return false;
            }
          }
        }
        return true;
      }

      void fill_mul(std::size_t idx) {
        if (idx == mul_cells_.size()) {
          ++stats_.complete_tables;
          Table add(n_), mul(n_);
          for (element x = 0; x < n_; ++x) {
            for (element y = 0; y < n_; ++y) {
              add.set(x, y, static_cast<element>(add_[x * n_ + y]));
              mul.set(x, y, static_cast<element>(mul_[x * n_ + y]));
            }
          }
          (*leaf_)(add, mul);
          return;
        }
        auto const [x, y] = mul_cells_[idx];
        for (element v = 0; v < n_; ++v) {
          ++stats_.nodes;
          mul_[x * n_ + y] = static_cast<int>(v);
          if (mul_consistent(x, y)) {
            fill_mul(idx + 1);
          }
        }
        mul_[x * n_ + y] = unset;
      }

      std::size_t                              n_;
      SearchStats&                             stats_;
      std::vector<int>                         add_;
      std::vector<int>                         mul_;
      std::vector<std::pair<element, element>> add_cells_;
      std::vector<std::pair<element, element>> mul_cells_;
      Leaf const*                              leaf_ = nullptr;
    };

    bool passes_filters(FiniteSemiring const& s, SearchSpec const& spec, EngineOptions const& options) {
      if (spec.require_si) {
        if (s.size() < 2) {
          return false;
        }
        bool const si = s.is_flat() ? si_by_ideals(s) : subdirectly_irreducible(s).subdirectly_irreducible;
        if (!si) {
          return false;
        }
      }
      for (auto const& st : spec.constraints) {
        if (!satisfies(s, st, options).holds) {
          return false;
        }
      }
      for (auto const& st : spec.failing) {
        if (satisfies(s, st, options).holds) {
          return false;
        }
      }
      return true;
    }

    std::vector<FiniteSemiring> models_of_order(std::size_t n, SearchSpec const& spec,
                                                EngineOptions const& options, SearchStats& stats) {
      std::vector<FiniteSemiring> found;
      if (spec.require_flat) {
        FlatSearch  search(n, n <= canonical_check_limit, stats);
        Table const add = flat_addition(n);
        search.run([&](Table const& mul) {
          auto s = FiniteSemiring::unchecked(add, mul);
          if (n > canonical_check_limit) {
            for (auto const& f : found) {
              if (is_isomorphic(f, s)) {
                return;
              }
            }
          }
          ++stats.canonical;
          if (passes_filters(s, spec, options)) {
            found.push_back(std::move(s));
          }
        });
      } else {
        AiSearch                                 search(n, stats);
        std::vector<std::pair<element, element>> cells;
        for (element x = 0; x < n; ++x) {
          for (element y = 0; y < n; ++y) {
            cells.emplace_back(x, y);
          }
        }
        search.run([&](Table const& add, Table const& mul) {
          if (!lex_minimal({&add, &mul}, cells, 0)) {
            return;
          }
          ++stats.canonical;
          auto s = FiniteSemiring::unchecked(add, mul);
          if (passes_filters(s, spec, options)) {
            found.push_back(std::move(s));
          }
        });
      }
      std::sort(found.begin(), found.end(), [](FiniteSemiring const& a, FiniteSemiring const& b) {
        if (a.mul_table() != b.mul_table()) {
          return a.mul_table() < b.mul_table();
        }
        return a.add_table() < b.add_table();
      });
      return found;
    }

  }  // namespace

  std::vector<FiniteSemiring> enumerate_models(SearchSpec const& spec, EngineOptions const& options,
                                               SearchStats* stats) {
    std::size_t const cap = spec.require_flat ? max_flat_search_order : max_ai_search_order;
    if (spec.order > cap) {
      throw OrderCapError("model search of order " + std::to_string(spec.order)
                          + " is above the cap of " + std::to_string(cap));
    }
    if (spec.order < 1 || spec.first_order() > spec.order) {
      throw PreconditionError("empty order range for the model search");
    }
    SearchStats                 local;
    SearchStats&                st = stats ? *stats : local;
    std::vector<FiniteSemiring> out;
    for (std::size_t n = spec.first_order(); n <= spec.order; ++n) {
      auto models = models_of_order(n, spec, options, st);
      for (auto& m : models) {
        if (spec.limit && out.size() >= *spec.limit) {
          return out;
        }
        out.push_back(std::move(m));
      }
    }
    return out;
  }

  std::optional<FiniteSemiring> find_separating_algebra(std::vector<Statement> const& sat,
                                                        std::vector<Statement> const& fail,
                                                        std::size_t max_order, bool require_flat,
                                                        bool require_si, EngineOptions const& options) {
    for (std::size_t n = 1; n <= max_order; ++n) {
      SearchSpec spec;
      spec.order        = n;
      spec.require_flat = require_flat;
      spec.require_si   = require_si;
      spec.constraints  = sat;
      spec.failing      = fail;
      spec.limit        = 1;
      auto models       = enumerate_models(spec, options);
      if (!models.empty()) {
        return models.front();
      }
    }
    return std::nullopt;
  }

  std::string describe(SearchSpec const& spec) {
    std::ostringstream os;
    os << "order " << spec.first_order() << ".." << spec.order << (spec.require_flat ? " flat" : " ai")
       << (spec.require_si ? " si" : "");
    for (auto const& st : spec.constraints) {
      os << " | sat " << format_statement(st);
    }
    for (auto const& st : spec.failing) {
      os << " | fail " << format_statement(st);
    }
    if (spec.limit) {
      os << " | limit " << *spec.limit;
    }
    return os.str();
  }

}  // namespace srw
