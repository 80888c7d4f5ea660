#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srw {

  // Base of every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t position, std::string const& what)
        : Error("syntax error at position " + std::to_string(position) + ": "
                + what),
          position_(position) {}

    std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

  // Malformed input tables: wrong dimensions or out-of-range entries.
  class TableError : public Error {
   public:
    using Error::Error;
  };

  // Tables that are well formed but violate an algebraic axiom.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // An operation would build an algebra larger than max_order.
  class OrderCapError : public Error {
   public:
    using Error::Error;
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  class UnboundVariableError : public Error {
   public:
    explicit UnboundVariableError(std::string const& name)
        : Error("unbound variable '" + name + "'") {}
  };

  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string const& what, unsigned long long required)
        : Error(what), required_(required) {}

    // Lower bound on the work that would have been needed.
    unsigned long long required() const noexcept {
      return required_;
    }

   private:
    unsigned long long required_;
  };

  // A map that fails to extend to a homomorphism.
  class HomomorphismError : public Error {
   public:
    using Error::Error;
  };

  // A construction whose correctness is a mathematical theorem produced a
  // wrong answer. Never expected; reported loudly.
  class ConstructionFailure : public Error {
   public:
    using Error::Error;
  };

}  // namespace srw
