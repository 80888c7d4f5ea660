#pragma once

// Table-based finite algebras. The carrier is always 0..n-1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace srw {

  using element = std::uint32_t;

  inline constexpr std::size_t max_order = 4096;

  // Square operation table, row-major.
  class Table {
   public:
    Table() = default;
    explicit Table(std::size_t n, element fill = 0);

    // Throws TableError if the rows are ragged or not square, or if an entry
    // is out of range.
    static Table from_rows(std::vector<std::vector<element>> const& rows);

    std::size_t size() const noexcept {
      return n_;
    }

    element operator()(element x, element y) const noexcept {
      return data_[static_cast<std::size_t>(x) * n_ + y];
    }

    void set(element x, element y, element value) noexcept {
      data_[static_cast<std::size_t>(x) * n_ + y] = value;
    }

    std::span<element const> row(element x) const noexcept {
      return {data_.data() + static_cast<std::size_t>(x) * n_, n_};
    }

    std::vector<element> const& data() const noexcept {
      return data_;
    }

    std::vector<std::vector<element>> rows() const;

    bool operator==(Table const&) const = default;
    auto operator<=>(Table const&) const = default;

   private:
    std::size_t          n_ = 0;
    std::vector<element> data_;
  };

  struct Violation {
    std::string          axiom;
    std::vector<element> witness;
  };

  struct ValidationReport {
    std::vector<Violation> violations;
    bool                   is_ai   = false;
    bool                   is_flat = false;
    std::optional<element> zero;

    bool ok() const noexcept {
      return violations.empty();
    }
    std::string to_string() const;
  };

  // Checks every semiring axiom, recording the first witness for each
  // violated one. Throws TableError on dimension mismatch or range errors.
  ValidationReport validate_semiring(Table const& add, Table const& mul);

  class FiniteSemiring {
   public:
    FiniteSemiring() = default;

    // Validates; throws ValidationError carrying the report on failure.
    FiniteSemiring(Table add, Table mul, std::vector<std::string> labels = {});

    // For tables known to be valid by construction (products, closures).
    static FiniteSemiring unchecked(Table                    add,
                                    Table                    mul,
                                    std::vector<std::string> labels = {});

    std::size_t size() const noexcept {
      return add_.size();
    }
    element add(element x, element y) const noexcept {
      return add_(x, y);
    }
    element mul(element x, element y) const noexcept {
      return mul_(x, y);
    }
    Table const& add_table() const noexcept {
      return add_;
    }
    Table const& mul_table() const noexcept {
      return mul_;
    }
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    std::string const& label(element x) const {
      return labels_.at(x);
    }

    // Additively idempotent.
    bool is_ai() const noexcept {
      return is_ai_;
    }
    // ai, with a multiplicative zero that is the sum of any two distinct
    // elements.
    bool is_flat() const noexcept {
      return is_flat_;
    }
    // The multiplicative zero, if any.
    std::optional<element> zero() const noexcept {
      return zero_;
    }
    // The multiplicative identity, if any.
    std::optional<element> one() const noexcept {
      return one_;
    }
    // Element absorbing for addition (x + t = t for all x), if any.
    std::optional<element> additive_top() const noexcept {
      return top_;
    }

    // Looks an element up by label; throws PreconditionError if absent.
    element element_named(std::string_view label) const;

    bool same_tables(FiniteSemiring const& other) const noexcept {
      return add_ == other.add_ && mul_ == other.mul_;
    }

   private:
    void compute_flags();

    Table                    add_;
    Table                    mul_;
    std::vector<std::string> labels_;
    bool                     is_ai_   = false;
    bool                     is_flat_ = false;
    std::optional<element>   zero_;
    std::optional<element>   one_;
    std::optional<element>   top_;
  };

  class FiniteGroup {
   public:
    FiniteGroup() = default;

    // Tables already known to form a group.
    static FiniteGroup unchecked(Table mul, std::vector<std::string> labels = {});

    std::size_t size() const noexcept {
      return mul_.size();
    }
    element mul(element x, element y) const noexcept {
      return mul_(x, y);
    }
    element identity() const noexcept {
      return identity_;
    }
    element inverse(element x) const noexcept {
      return inverse_[x];
    }
    Table const& mul_table() const noexcept {
      return mul_;
    }
    std::vector<element> const& inverses() const noexcept {
      return inverse_;
    }
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    std::string const& label(element x) const {
      return labels_.at(x);
    }
    element element_named(std::string_view label) const;

    element power(element x, std::uint64_t k) const noexcept;
    // [x, y] = x^-1 y^-1 x y
    element commutator(element x, element y) const noexcept;
    std::size_t element_order(element x) const noexcept;
    bool        is_abelian() const noexcept;

   private:
    friend FiniteGroup validate_group(Table const& mul,
                                      std::vector<std::string> labels);

    Table                    mul_;
    element                  identity_ = 0;
    std::vector<element>     inverse_;
    std::vector<std::string> labels_;
  };

  // Locates identity and inverses; throws ValidationError naming the
  // violated axiom (non-associative, no identity, missing inverse).
  FiniteGroup validate_group(Table const& mul, std::vector<std::string> labels = {});

  using Algebra = std::variant<FiniteSemiring, FiniteGroup>;

  std::size_t algebra_size(Algebra const& a);

  // A total map between carriers. Flags are only meaningful once filled in by
  // verify_morphism or one of the constructing operations.
  struct Morphism {
    std::vector<element> map;
    std::size_t          target_order = 0;
    bool                 verified_hom = false;
    bool                 injective    = false;
    bool                 surjective   = false;

    element operator()(element x) const {
      return map.at(x);
    }
    bool is_isomorphism() const noexcept {
      return verified_hom && injective && surjective;
    }
  };

  // Fills the flags by exhaustive check against both operation tables.
  Morphism verify_morphism(FiniteSemiring const& source,
                           FiniteSemiring const& target,
                           std::vector<element>  map);
  Morphism verify_morphism(FiniteGroup const&   source,
                           FiniteGroup const&   target,
                           std::vector<element> map);

  // Partition of the carrier; block[x] is the block index of x, numbered in
  // order of first appearance.
  struct Congruence {
    std::vector<std::size_t> block;

    std::size_t number_of_blocks() const;
    bool        related(element x, element y) const {
      return block.at(x) == block.at(y);
    }
    bool is_identity() const {
      return number_of_blocks() == block.size();
    }
    // The nontrivial blocks as sorted element lists.
    std::vector<std::vector<element>> nontrivial_blocks() const;
    bool operator==(Congruence const&) const = default;
  };

  namespace detail {
    std::vector<std::string> default_labels(std::size_t n);
    void check_order(std::size_t n, char const* what);
  }  // namespace detail

}  // namespace srw
