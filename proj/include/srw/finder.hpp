#pragma once

// Enumeration of small ai-semirings up to isomorphism.

#include <optional>
#include <string>
#include <vector>

#include "srw/algebra.hpp"
#include "srw/satisfaction.hpp"
#include "srw/term.hpp"

namespace srw {

  inline constexpr std::size_t max_flat_search_order = 12;
  inline constexpr std::size_t max_ai_search_order   = 6;

  struct SearchSpec {
    // Largest order searched.
    std::size_t order = 1;
    // Smallest order searched; 0 means the same as order.
    std::size_t min_order = 0;
    bool        require_flat = true;
    // Every model satisfies all of these...
    std::vector<Statement> constraints;
    // ...and fails each of these.
    std::vector<Statement> failing;
    bool                   require_si = false;
    std::optional<std::size_t> limit;

    std::size_t first_order() const noexcept {
      return min_order == 0 ? order : min_order;
    }
  };

  struct SearchStats {
    unsigned long long nodes           = 0;  // table cells assigned
    unsigned long long complete_tables = 0;
    unsigned long long canonical       = 0;  // complete tables surviving isomorph rejection
  };

  // One representative per isomorphism class, by increasing order and, within
  // an order, by increasing multiplication (then addition) table. For flat
  // searches element 0 is the zero and the addition is the flat one.
  // Throws OrderCapError above max_flat_search_order (flat) or
  // max_ai_search_order (otherwise).
  std::vector<FiniteSemiring> enumerate_models(SearchSpec const& spec, EngineOptions const& options = {},
                                               SearchStats* stats = nullptr);

  // The first model of the least order up to max_order that satisfies every
  // statement of sat and fails every statement of fail.
  std::optional<FiniteSemiring> find_separating_algebra(std::vector<Statement> const& sat,
                                                        std::vector<Statement> const& fail,
                                                        std::size_t max_order, bool require_flat = true,
                                                        bool                 require_si = false,
                                                        EngineOptions const& options    = {});

  // Canonical one-line description of a spec, used for cache keys and
  // reports.
  std::string describe(SearchSpec const& spec);

}  // namespace srw
