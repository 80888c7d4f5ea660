#include <algorithm>
#include <functional>
#include <map>

#include "srw/error.hpp"
#include "srw/operations.hpp"

namespace srw {

  std::size_t encode_tuple(std::span<std::size_t const> sizes,
                           std::span<element const>     coordinates) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      index = index * sizes[i] + coordinates[i];
    }
    return index;
  }

  std::vector<element> decode_tuple(std::span<std::size_t const> sizes, std::size_t index) {
    std::vector<element> out(sizes.size());
    for (std::size_t i = sizes.size(); i-- > 0;) {
      out[i] = static_cast<element>(index % sizes[i]);
      index /= sizes[i];
    }
    return out;
  }

  namespace {

    template <typename A>
    std::vector<std::size_t> sizes_of(std::span<A const> factors) {
      std::vector<std::size_t> sizes;
      for (auto const& f : factors) {
        sizes.push_back(f.size());
      }
      return sizes;
    }

    std::size_t checked_product_size(std::vector<std::size_t> const& sizes) {
      std::size_t total = 1;
      for (auto s : sizes) {
        total *= s;
        detail::check_order(total, "direct product");
      }
      return total;
    }

    template <typename A>
    std::string tuple_label(std::span<A const> factors, std::span<element const> coords) {
      std::string out = "(";
      for (std::size_t i = 0; i < coords.size(); ++i) {
        out += (i ? "," : "") + factors[i].label(coords[i]);
      }
      return out + ")";
    }

    // Componentwise product table for operation `op` of each factor.
    template <typename A, typename Op>
    Table product_table(std::span<A const> factors, std::vector<std::size_t> const& sizes,
                        std::size_t total, Op op) {
      Table                             t(total);
      std::vector<std::vector<element>> decoded(total);
      for (std::size_t x = 0; x < total; ++x) {
        decoded[x] = decode_tuple(sizes, x);
      }
      std::vector<element> z(sizes.size());
      for (std::size_t x = 0; x < total; ++x) {
        for (std::size_t y = 0; y < total; ++y) {
          for (std::size_t i = 0; i < sizes.size(); ++i) {
            z[i] = op(factors[i], decoded[x][i], decoded[y][i]);
          }
          t.set(x, y, encode_tuple(sizes, z));
        }
      }
      return t;
    }

    template <typename A>
    std::vector<std::string> product_labels(std::span<A const> factors,
                                            std::vector<std::size_t> const& sizes,
                                            std::size_t                     total) {
      std::vector<std::string> labels(total);
      for (std::size_t x = 0; x < total; ++x) {
        auto c    = decode_tuple(sizes, x);
        labels[x] = tuple_label(factors, std::span<element const>(c));
      }
      return labels;
    }

    // Closure of gens under the binary operations (and an optional unary one),
    // returned in ambient order.
    std::vector<element> close(std::size_t                                          n,
                               std::vector<element> const&                          gens,
                               std::vector<std::function<element(element, element)>> const& ops,
                               std::function<element(element)> const&               unary) {
      std::vector<char>    in(n, 0);
      std::vector<element> elems;
      auto push = [&](element x) {
        if (!in[x]) {
          in[x] = 1;
          elems.push_back(x);
        }
      };
      for (auto g : gens) {
        if (g >= n) {
          throw PreconditionError("generator " + std::to_string(g) + " is outside the carrier");
        }
        push(g);
      }
      for (std::size_t i = 0; i < elems.size(); ++i) {
        element const x = elems[i];
        if (unary) {
          push(unary(x));
        }
        for (std::size_t j = 0; j <= i; ++j) {
          element const y = elems[j];
          for (auto const& op : ops) {
            push(op(x, y));
            push(op(y, x));
          }
        }
      }
      std::sort(elems.begin(), elems.end());
      return elems;
    }

    std::vector<element> local_index(std::size_t n, std::vector<element> const& elems) {
      std::vector<element> idx(n, static_cast<element>(-1));
      for (element i = 0; i < elems.size(); ++i) {
        idx[elems[i]] = i;
      }
      return idx;
    }

    Morphism inclusion(std::vector<element> const& elems, std::size_t ambient) {
      Morphism m;
      m.map          = elems;
      m.target_order = ambient;
      m.verified_hom = true;
      m.injective    = true;
      m.surjective   = elems.size() == ambient;
      return m;
    }

  }  // namespace

  FiniteSemiring direct_product(std::span<FiniteSemiring const> factors) {
    if (factors.empty()) {
      throw PreconditionError("direct product of an empty list");
    }
    auto const  sizes = sizes_of(factors);
    std::size_t total = checked_product_size(sizes);
    auto add = product_table(factors, sizes, total, [](FiniteSemiring const& s, element x, element y) {
      return s.add(x, y);
    });
    auto mul = product_table(factors, sizes, total, [](FiniteSemiring const& s, element x, element y) {
      return s.mul(x, y);
    });
    return FiniteSemiring::unchecked(std::move(add), std::move(mul),
                                     product_labels(factors, sizes, total));
  }

  FiniteGroup direct_product(std::span<FiniteGroup const> factors) {
    if (factors.empty()) {
      throw PreconditionError("direct product of an empty list");
    }
    auto const  sizes = sizes_of(factors);
    std::size_t total = checked_product_size(sizes);
    auto mul = product_table(factors, sizes, total, [](FiniteGroup const& g, element x, element y) {
      return g.mul(x, y);
    });
    return FiniteGroup::unchecked(std::move(mul), product_labels(factors, sizes, total));
  }

  Algebra direct_product(std::span<Algebra const> factors) {
    if (factors.empty()) {
      throw PreconditionError("direct product of an empty list");
    }
    if (std::holds_alternative<FiniteSemiring>(factors.front())) {
      std::vector<FiniteSemiring> s;
      for (auto const& f : factors) {
        if (!std::holds_alternative<FiniteSemiring>(f)) {
          throw PreconditionError("direct product of mixed kinds");
        }
        s.push_back(std::get<FiniteSemiring>(f));
      }
      return direct_product(std::span<FiniteSemiring const>(s));
    }
    std::vector<FiniteGroup> g;
    for (auto const& f : factors) {
      if (!std::holds_alternative<FiniteGroup>(f)) {
        throw PreconditionError("direct product of mixed kinds");
      }
      g.push_back(std::get<FiniteGroup>(f));
    }
    return direct_product(std::span<FiniteGroup const>(g));
  }

  namespace {
    template <typename A>
    Morphism projection_impl(std::span<A const> factors, std::size_t i) {
      if (i >= factors.size()) {
        throw PreconditionError("projection index out of range");
      }
      auto const  sizes = sizes_of(factors);
      std::size_t total = checked_product_size(sizes);
      Morphism    m;
      m.target_order = factors[i].size();
      m.map.resize(total);
      for (std::size_t x = 0; x < total; ++x) {
        m.map[x] = decode_tuple(sizes, x)[i];
      }
      return verify_morphism(direct_product(factors), factors[i], std::move(m.map));
    }
  }  // namespace

  Morphism projection(std::span<FiniteSemiring const> factors, std::size_t i) {
    return projection_impl(factors, i);
  }

  Morphism projection(std::span<FiniteGroup const> factors, std::size_t i) {
    return projection_impl(factors, i);
  }

  Subalgebra<FiniteSemiring> induced_subalgebra(FiniteSemiring const&       s,
                                                std::vector<element> const& elements) {
    std::vector<element> elems = elements;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) {
      throw PreconditionError("empty subset");
    }
    auto const        idx = local_index(s.size(), elems);
    std::size_t const k   = elems.size();
    Table             add(k), mul(k);
    std::vector<std::string> labels;
    for (element i = 0; i < k; ++i) {
      labels.push_back(s.label(elems[i]));
      for (element j = 0; j < k; ++j) {
        element const a = s.add(elems[i], elems[j]);
        element const m = s.mul(elems[i], elems[j]);
        if (a >= s.size() || idx[a] == static_cast<element>(-1)
            || idx[m] == static_cast<element>(-1)) {
          throw PreconditionError("subset is not closed: " + s.label(elems[i]) + " and "
                                  + s.label(elems[j]) + " combine outside it");
        }
        add.set(i, j, idx[a]);
        mul.set(i, j, idx[m]);
      }
    }
    return {FiniteSemiring::unchecked(std::move(add), std::move(mul), std::move(labels)),
            inclusion(elems, s.size()), elems};
  }

  Subalgebra<FiniteSemiring> subalgebra_closure(FiniteSemiring const&       s,
                                                std::vector<element> const& gens) {
    if (gens.empty()) {
      throw PreconditionError("empty generating set");
    }
    auto elems = close(
        s.size(), gens,
        {[&](element x, element y) { return s.add(x, y); },
         [&](element x, element y) { return s.mul(x, y); }},
        {});
    return induced_subalgebra(s, elems);
  }

  Subalgebra<FiniteGroup> subalgebra_closure(FiniteGroup const& g, std::vector<element> const& gens) {
    if (gens.empty()) {
      throw PreconditionError("empty generating set");
    }
    auto elems = close(g.size(), gens, {[&](element x, element y) { return g.mul(x, y); }},
                       [&](element x) { return g.inverse(x); });
    auto const        idx = local_index(g.size(), elems);
    std::size_t const k   = elems.size();
    Table             mul(k);
    std::vector<std::string> labels;
    for (element i = 0; i < k; ++i) {
      labels.push_back(g.label(elems[i]));
      for (element j = 0; j < k; ++j) {
        mul.set(i, j, idx[g.mul(elems[i], elems[j])]);
      }
    }
    return {FiniteGroup::unchecked(std::move(mul), std::move(labels)), inclusion(elems, g.size()),
            elems};
  }

  namespace {

    template <typename A, typename Combine>
    std::vector<std::vector<element>> close_tuples(std::span<A const>                       factors,
                                                   std::vector<std::vector<element>> const& gens,
                                                   Combine combine) {
      if (gens.empty()) {
        throw PreconditionError("empty generating set");
      }
      std::map<std::vector<element>, std::size_t> seen;
      std::vector<std::vector<element>>           elems;
      auto push = [&](std::vector<element> t) {
        if (seen.emplace(t, elems.size()).second) {
          elems.push_back(std::move(t));
          detail::check_order(elems.size(), "generated subalgebra");
        }
      };
      for (auto const& g : gens) {
        if (g.size() != factors.size()) {
          throw PreconditionError("generator tuple has the wrong length");
        }
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (g[i] >= factors[i].size()) {
            throw PreconditionError("generator coordinate outside the carrier");
          }
        }
        push(g);
      }
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          for (auto&& t : combine(elems[i], elems[j])) {
            push(std::move(t));
          }
        }
      }
      std::sort(elems.begin(), elems.end());
      return elems;
    }

    template <typename A>
    std::vector<element> componentwise(std::span<A const> factors, std::vector<element> const& x,
                                       std::vector<element> const& y,
                                       element (A::*op)(element, element) const noexcept) {
      std::vector<element> z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = (factors[i].*op)(x[i], y[i]);
      }
      return z;
    }

    template <typename A>
    Table tuple_table(std::span<A const> factors, std::vector<std::vector<element>> const& elems,
                      element (A::*op)(element, element) const noexcept) {
      std::map<std::vector<element>, element> index;
      for (element i = 0; i < elems.size(); ++i) {
        index.emplace(elems[i], i);
      }
      Table t(elems.size());
      for (element i = 0; i < elems.size(); ++i) {
        for (element j = 0; j < elems.size(); ++j) {
          t.set(i, j, index.at(componentwise(factors, elems[i], elems[j], op)));
        }
      }
      return t;
    }

  }  // namespace

  ProductSubalgebra<FiniteGroup> closure_in_product(std::span<FiniteGroup const>             factors,
                                                    std::vector<std::vector<element>> const& gens) {
    auto elems = close_tuples(factors, gens, [&](auto const& x, auto const& y) {
      return std::vector<std::vector<element>>{
          componentwise(factors, x, y, &FiniteGroup::mul),
          componentwise(factors, y, x, &FiniteGroup::mul)};
    });
    std::vector<std::string> labels;
    for (auto const& t : elems) {
      labels.push_back(tuple_label(factors, std::span<element const>(t)));
    }
    auto mul = tuple_table(factors, elems, &FiniteGroup::mul);
    return {FiniteGroup::unchecked(std::move(mul), std::move(labels)), std::move(elems)};
  }

  ProductSubalgebra<FiniteSemiring> closure_in_product(
      std::span<FiniteSemiring const>          factors,
      std::vector<std::vector<element>> const& gens) {
    auto elems = close_tuples(factors, gens, [&](auto const& x, auto const& y) {
      return std::vector<std::vector<element>>{
          componentwise(factors, x, y, &FiniteSemiring::add),
          componentwise(factors, x, y, &FiniteSemiring::mul),
          componentwise(factors, y, x, &FiniteSemiring::mul)};
    });
    std::vector<std::string> labels;
    for (auto const& t : elems) {
      labels.push_back(tuple_label(factors, std::span<element const>(t)));
    }
    auto add = tuple_table(factors, elems, &FiniteSemiring::add);
    auto mul = tuple_table(factors, elems, &FiniteSemiring::mul);
    return {FiniteSemiring::unchecked(std::move(add), std::move(mul), std::move(labels)),
            std::move(elems)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms from generator images
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using BinOp = std::function<element(element, element)>;

    std::vector<element> extend_images(std::size_t source_order, std::size_t target_order,
                                       std::map<element, element> const& images,
                                       std::vector<std::pair<BinOp, BinOp>> const& ops,
                                       std::vector<std::string> const& source_labels) {
      constexpr element        unset = static_cast<element>(-1);
      std::vector<element>     img(source_order, unset);
      std::vector<element>     order;
      for (auto const& [g, h] : images) {
        if (g >= source_order || h >= target_order) {
          throw PreconditionError("generator image outside the carrier");
        }
        img[g] = h;
        order.push_back(g);
      }
      for (std::size_t i = 0; i < order.size(); ++i) {
        element const x = order[i];
        for (std::size_t j = 0; j <= i; ++j) {
          element const y = order[j];
          for (auto const& [src, dst] : ops) {
            for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
              element const p = src(u, v);
              element const q = dst(img[u], img[v]);
              if (img[p] == unset) {
                img[p] = q;
                order.push_back(p);
              } else if (img[p] != q) {
                throw HomomorphismError("generator images do not extend to a homomorphism: "
                                        "inconsistent at the pair ("
                                        + source_labels[u] + ", " + source_labels[v] + ")");
              }
            }
          }
        }
      }
      if (order.size() != source_order) {
        throw PreconditionError("the given elements do not generate the source: they generate "
                                + std::to_string(order.size()) + " of "
                                + std::to_string(source_order) + " elements");
      }
      return img;
    }

  }  // namespace

  Morphism hom_from_generator_images(FiniteGroup const& source, FiniteGroup const& target,
                                     std::map<element, element> const& images) {
    // Inverses are products of positive powers in a finite group, so the
    // multiplication alone determines the extension.
    auto img = extend_images(
        source.size(), target.size(), images,
        {{[&](element x, element y) { return source.mul(x, y); },
          [&](element x, element y) { return target.mul(x, y); }}},
        source.labels());
    return verify_morphism(source, target, std::move(img));
  }

  Morphism hom_from_generator_images(FiniteSemiring const& source, FiniteSemiring const& target,
                                     std::map<element, element> const& images) {
    auto img = extend_images(
        source.size(), target.size(), images,
        {{[&](element x, element y) { return source.add(x, y); },
          [&](element x, element y) { return target.add(x, y); }},
         {[&](element x, element y) { return source.mul(x, y); },
          [&](element x, element y) { return target.mul(x, y); }}},
        source.labels());
    return verify_morphism(source, target, std::move(img));
  }

}  // namespace srw
