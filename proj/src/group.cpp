#include <algorithm>
#include <numeric>

#include "srw/algebra.hpp"
#include "srw/error.hpp"
#include "srw/operations.hpp"

namespace srw {

  FiniteGroup validate_group(Table const& mul, std::vector<std::string> labels) {
    std::size_t const n = mul.size();
    if (n == 0) {
      throw TableError("empty carrier");
    }
    for (auto v : mul.data()) {
      if (v >= n) {
        throw TableError("multiplication table has out-of-range entry " + std::to_string(v));
      }
    }
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        for (element z = 0; z < n; ++z) {
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw ValidationError("not a group: associativity fails at (" + std::to_string(x)
                                  + "," + std::to_string(y) + "," + std::to_string(z) + ")");
          }
        }
      }
    }
    std::optional<element> identity;
    for (element e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (element x = 0; x < n && ok; ++x) {
        ok = mul(e, x) == x && mul(x, e) == x;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      throw ValidationError("not a group: no identity element");
    }
    std::vector<element> inverse(n);
    for (element x = 0; x < n; ++x) {
      bool found = false;
      for (element y = 0; y < n && !found; ++y) {
        if (mul(x, y) == *identity && mul(y, x) == *identity) {
          inverse[x] = y;
          found      = true;
        }
      }
      if (!found) {
        throw ValidationError("not a group: element " + std::to_string(x)
                              + " has no inverse");
      }
    }
    FiniteGroup g;
    g.mul_      = mul;
    g.identity_ = *identity;
    g.inverse_  = std::move(inverse);
    g.labels_   = labels.empty() ? detail::default_labels(n) : std::move(labels);
    if (g.labels_.size() != n) {
      throw TableError("label count does not match the order");
    }
    return g;
  }

  FiniteGroup FiniteGroup::unchecked(Table mul, std::vector<std::string> labels) {
    detail::check_order(mul.size(), "group");
    std::size_t const n = mul.size();
    FiniteGroup       g;
    // The identity is the unique idempotent.
    for (element e = 0; e < n; ++e) {
      if (mul(e, e) == e) {
        g.identity_ = e;
        break;
      }
    }
    g.inverse_.assign(n, 0);
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        if (mul(x, y) == g.identity_) {
          g.inverse_[x] = y;
          break;
        }
      }
    }
    g.mul_    = std::move(mul);
    g.labels_ = labels.empty() ? detail::default_labels(n) : std::move(labels);
    return g;
  }

  element FiniteGroup::element_named(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      throw PreconditionError("no element labelled '" + std::string(label) + "'");
    }
    return static_cast<element>(it - labels_.begin());
  }

  element FiniteGroup::power(element x, std::uint64_t k) const noexcept {
    element result = identity_;
    element base   = x;
    while (k > 0) {
      if (k & 1) {
        result = mul(result, base);
      }
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  element FiniteGroup::commutator(element x, element y) const noexcept {
    return mul(mul(inverse(x), inverse(y)), mul(x, y));
  }

  std::size_t FiniteGroup::element_order(element x) const noexcept {
    std::size_t k   = 1;
    element     acc = x;
    while (acc != identity_) {
      acc = mul(acc, x);
      ++k;
    }
    return k;
  }

  bool FiniteGroup::is_abelian() const noexcept {
    for (element x = 0; x < size(); ++x) {
      for (element y = x + 1; y < size(); ++y) {
        if (mul(x, y) != mul(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  Morphism verify_morphism(FiniteGroup const& source, FiniteGroup const& target, std::vector<element> map) {
    if (map.size() != source.size()) {
      throw PreconditionError("map size does not match the source order");
    }
    for (auto v : map) {
      if (v >= target.size()) {
        throw PreconditionError("map value outside the target carrier");
      }
    }
    Morphism m;
    m.target_order      = target.size();
    m.map               = std::move(map);
    std::size_t const n = source.size();
    bool              hom = true;
    for (element x = 0; x < n && hom; ++x) {
      for (element y = 0; y < n && hom; ++y) {
        hom = m.map[source.mul(x, y)] == target.mul(m.map[x], m.map[y]);
      }
    }
    m.verified_hom = hom;
    std::vector<bool> hit(target.size(), false);
    std::size_t       distinct = 0;
    for (auto v : m.map) {
      if (!hit[v]) {
        hit[v] = true;
        ++distinct;
      }
    }
    m.injective  = distinct == n;
    m.surjective = distinct == target.size();
    return m;
  }

  std::uint64_t group_exponent(FiniteGroup const& g) {
    std::uint64_t result = 1;
    for (element x = 0; x < g.size(); ++x) {
      result = std::lcm(result, static_cast<std::uint64_t>(g.element_order(x)));
    }
    return result;
  }

  // A nonabelian group is minimal nonabelian iff every non-commuting pair
  // generates the whole group: a proper nonabelian subgroup contains such a
  // pair, which then generates a proper subgroup.
  MinimalNonabelianVerdict is_minimal_nonabelian(FiniteGroup const& g) {
    MinimalNonabelianVerdict v;
    if (g.is_abelian()) {
      v.abelian = true;
      return v;
    }
    std::size_t const n = g.size();
    for (element x = 0; x < n; ++x) {
      for (element y = x + 1; y < n; ++y) {
        if (g.mul(x, y) == g.mul(y, x)) {
          continue;
        }
        if (subalgebra_closure(g, {x, y}).elements.size() != n) {
          v.witness = std::make_pair(x, y);
          return v;
        }
      }
    }
    v.is_minimal_nonabelian = true;
    return v;
  }

}  // namespace srw
