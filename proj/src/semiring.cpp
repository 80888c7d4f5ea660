#include <algorithm>
#include <sstream>

#include "srw/algebra.hpp"
#include "srw/error.hpp"

namespace srw {

  namespace detail {
    std::vector<std::string> default_labels(std::size_t n) {
      std::vector<std::string> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::to_string(i);
      }
      return out;
    }

    void check_order(std::size_t n, char const* what) {
      if (n > max_order) {
        throw OrderCapError(std::string(what) + " would have order " + std::to_string(n)
                            + ", above the cap of " + std::to_string(max_order));
      }
    }
  }  // namespace detail

  Table::Table(std::size_t n, element fill) : n_(n), data_(n * n, fill) {}

  Table Table::from_rows(std::vector<std::vector<element>> const& rows) {
    std::size_t const n = rows.size();
    Table             t(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (rows[x].size() != n) {
        throw TableError("table is not square: row " + std::to_string(x) + " has "
                         + std::to_string(rows[x].size()) + " entries, expected "
                         + std::to_string(n));
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (rows[x][y] >= n) {
          throw TableError("entry (" + std::to_string(x) + "," + std::to_string(y)
                           + ") = " + std::to_string(rows[x][y]) + " is out of range");
        }
        t.set(x, y, rows[x][y]);
      }
    }
    return t;
  }

  std::vector<std::vector<element>> Table::rows() const {
    std::vector<std::vector<element>> out(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      auto r = row(x);
      out[x].assign(r.begin(), r.end());
    }
    return out;
  }

  std::string ValidationReport::to_string() const {
    std::ostringstream os;
    if (ok()) {
      os << "valid semiring";
      os << (is_ai ? ", additively idempotent" : ", not additively idempotent");
      if (is_flat) {
        os << ", flat";
      }
      if (zero) {
        os << ", zero=" << *zero;
      }
      return os.str();
    }
    os << "invalid semiring:";
    for (auto const& v : violations) {
      os << "\n  " << v.axiom << " fails at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        os << (i ? "," : "") << v.witness[i];
      }
      os << ")";
    }
    return os.str();
  }

  namespace {
    void check_range(Table const& t, char const* name) {
      for (auto v : t.data()) {
        if (v >= t.size()) {
          throw TableError(std::string(name) + " table has out-of-range entry "
                           + std::to_string(v));
        }
      }
    }

    std::optional<element> find_zero(Table const& mul) {
      std::size_t const n = mul.size();
      for (element z = 0; z < n; ++z) {
        bool ok = true;
        for (element x = 0; x < n && ok; ++x) {
          ok = mul(z, x) == z && mul(x, z) == z;
        }
        if (ok) {
          return z;
        }
      }
      return std::nullopt;
    }

    std::optional<element> find_one(Table const& mul) {
      std::size_t const n = mul.size();
      for (element e = 0; e < n; ++e) {
        bool ok = true;
        for (element x = 0; x < n && ok; ++x) {
          ok = mul(e, x) == x && mul(x, e) == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    std::optional<element> find_top(Table const& add) {
      std::size_t const n = add.size();
      for (element t = 0; t < n; ++t) {
        bool ok = true;
        for (element x = 0; x < n && ok; ++x) {
          ok = add(t, x) == t && add(x, t) == t;
        }
        if (ok) {
          return t;
        }
      }
      return std::nullopt;
    }

    bool idempotent(Table const& add) {
      for (element x = 0; x < add.size(); ++x) {
        if (add(x, x) != x) {
          return false;
        }
      }
      return true;
    }

    bool flat(Table const& add, std::optional<element> zero) {
      if (!zero) {
        return false;
      }
      std::size_t const n = add.size();
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          if (add(x, y) != (x == y ? x : *zero)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  ValidationReport validate_semiring(Table const& add, Table const& mul) {
    if (add.size() != mul.size()) {
      throw TableError("dimension mismatch: addition table is " + std::to_string(add.size())
                       + "x" + std::to_string(add.size()) + ", multiplication table is "
                       + std::to_string(mul.size()) + "x" + std::to_string(mul.size()));
    }
    if (add.size() == 0) {
      throw TableError("empty carrier");
    }
    check_range(add, "addition");
    check_range(mul, "multiplication");

    std::size_t const n = add.size();
    ValidationReport  report;
    auto record = [&](char const* axiom, std::vector<element> w) {
      for (auto const& v : report.violations) {
        if (v.axiom == axiom) {
          return;
        }
      }
      report.violations.push_back({axiom, std::move(w)});
    };

    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        if (add(x, y) != add(y, x)) {
          record("additive commutativity", {x, y});
        }
        for (element z = 0; z < n; ++z) {
          if (add(add(x, y), z) != add(x, add(y, z))) {
            record("additive associativity", {x, y, z});
          }
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            record("multiplicative associativity", {x, y, z});
          }
          if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) {
            record("left distributivity", {x, y, z});
          }
          if (mul(add(x, y), z) != add(mul(x, z), mul(y, z))) {
            record("right distributivity", {x, y, z});
          }
        }
      }
    }
    report.is_ai   = idempotent(add);
    report.zero    = find_zero(mul);
    report.is_flat = report.is_ai && flat(add, report.zero);
    return report;
  }

  FiniteSemiring::FiniteSemiring(Table add, Table mul, std::vector<std::string> labels) {
    auto report = validate_semiring(add, mul);
    if (!report.ok()) {
      throw ValidationError(report.to_string());
    }
    *this = unchecked(std::move(add), std::move(mul), std::move(labels));
  }

  FiniteSemiring FiniteSemiring::unchecked(Table add, Table mul, std::vector<std::string> labels) {
    if (add.size() != mul.size()) {
      throw TableError("dimension mismatch between addition and multiplication tables");
    }
    detail::check_order(add.size(), "semiring");
    FiniteSemiring s;
    s.add_    = std::move(add);
    s.mul_    = std::move(mul);
    s.labels_ = labels.empty() ? detail::default_labels(s.add_.size()) : std::move(labels);
    if (s.labels_.size() != s.add_.size()) {
      throw TableError("label count does not match the order");
    }
    s.compute_flags();
    return s;
  }

  void FiniteSemiring::compute_flags() {
    is_ai_   = idempotent(add_);
    zero_    = find_zero(mul_);
    one_     = find_one(mul_);
    top_     = find_top(add_);
    is_flat_ = is_ai_ && flat(add_, zero_);
  }

  element FiniteSemiring::element_named(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      throw PreconditionError("no element labelled '" + std::string(label) + "'");
    }
    return static_cast<element>(it - labels_.begin());
  }

  std::size_t algebra_size(Algebra const& a) {
    return std::visit([](auto const& x) { return x.size(); }, a);
  }

  Morphism verify_morphism(FiniteSemiring const& source,
                           FiniteSemiring const& target,
                           std::vector<element>  map) {
    if (map.size() != source.size()) {
      throw PreconditionError("map size does not match the source order");
    }
    Morphism m;
    m.target_order = target.size();
    for (auto v : map) {
      if (v >= target.size()) {
        throw PreconditionError("map value outside the target carrier");
      }
    }
    m.map          = std::move(map);
    bool hom       = true;
    std::size_t const n = source.size();
    for (element x = 0; x < n && hom; ++x) {
      for (element y = 0; y < n && hom; ++y) {
        hom = m.map[source.add(x, y)] == target.add(m.map[x], m.map[y])
              && m.map[source.mul(x, y)] == target.mul(m.map[x], m.map[y]);
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

  std::size_t Congruence::number_of_blocks() const {
    std::size_t mx = 0;
    for (auto b : block) {
      mx = std::max(mx, b + 1);
    }
    return mx;
  }

  std::vector<std::vector<element>> Congruence::nontrivial_blocks() const {
    std::vector<std::vector<element>> blocks(number_of_blocks());
    for (element x = 0; x < block.size(); ++x) {
      blocks[block[x]].push_back(x);
    }
    std::vector<std::vector<element>> out;
    for (auto& b : blocks) {
      if (b.size() > 1) {
        out.push_back(std::move(b));
      }
    }
    return out;
  }

}  // namespace srw
