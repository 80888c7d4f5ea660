#pragma once

// Exhaustive satisfaction of identities, order statements and
// quasi-identities in finite semirings.
//
// Variables are enumerated in sorted name order and elements ascending; the
// witness of a failure is the lexicographically least falsifying assignment
// in that order, whatever the number of worker threads.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srw/algebra.hpp"
#include "srw/term.hpp"
#include "srw/word.hpp"

namespace srw {

  struct EngineOptions {
    // Upper bound on visited search nodes for a single statement.
    unsigned long long budget = 1'000'000'000ULL;
    unsigned           jobs   = 1;

    // Defaults, with the budget overridden by SRW_BUDGET when set.
    static EngineOptions from_environment();
  };

  struct Verdict {
    bool                      holds = true;
    std::optional<Assignment> witness;
    // The statement that failed, or the last one checked.
    std::string              failed_statement;
    std::vector<std::string> statements;
    // Search nodes visited, including the pruned ones; independent of jobs.
    unsigned long long nodes = 0;
  };

  // Throws BudgetExceeded when the search visits more than options.budget
  // nodes.
  Verdict satisfies(FiniteSemiring const& s, Statement const& st, EngineOptions const& options = {});
  // Checks in order and stops at the first failure.
  Verdict satisfies_all(FiniteSemiring const& s, std::vector<Statement> const& sts,
                        EngineOptions const& options = {});

  // v = v + z, v = z v and v = v z for a fresh variable z. Throws
  // PreconditionError if v is not a product of variables.
  Verdict check_free_laws(FiniteSemiring const& s, Term const& v, EngineOptions const& options = {});

  // xy + yx = xy + yx + z, xy + yx = (xy + yx) z, xy + yx = z (xy + yx).
  Verdict check_anticommutative(FiniteSemiring const& s, EngineOptions const& options = {});

  struct FreeWordVerdict {
    bool is_free = true;
    // When not free: the image of each letter of v and the 0-based start of
    // the matching factor of w.
    std::map<Symbol, Word> substitution;
    std::size_t            position = 0;
  };

  // Whether no factor of w is the image of v under a substitution of
  // nonempty words for letters.
  FreeWordVerdict is_v_free_word(Word const& w, Word const& v);

  struct IsotermVerdict {
    // True means no witness exists among the words searched; it is not a
    // proof for longer words.
    bool                isoterm_up_to_bound = true;
    std::optional<Word> witness;
    std::size_t         max_length = 0;
    // Letters searched, in the order used for shortlex.
    std::vector<Symbol> alphabet;
    unsigned long long  candidates = 0;
    std::string         method;
  };

  // Searches words v != w over the letters of w plus one fresh letter, with
  // |v| <= |w| + max_extra_len, for the shortlex-least v with S |= v <= w.
  // Flat semirings use a pruned search over the nonzero evaluations of w;
  // other semirings fall back to one satisfaction check per candidate.
  IsotermVerdict is_isoterm_bounded(FiniteSemiring const& s, Word const& w, unsigned max_extra_len,
                                    EngineOptions const& options = {});

}  // namespace srw
