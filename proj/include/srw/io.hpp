#pragma once

// Algebra files:
//   {"kind":"semiring"|"group","order":n,"add":[[...]],"mul":[[...]],"labels":[...]}
// "add" is absent for groups; labels are optional.

#include <filesystem>
#include <string>
#include <string_view>

#include "srw/algebra.hpp"

namespace srw {

  // Throws Error on malformed JSON, TableError on bad dimensions and
  // ValidationError (with the report) on tables that fail the axioms. A file
  // without "kind" is a group exactly when it has no "add".
  Algebra parse_algebra(std::string_view json_text);
  std::string format_algebra(Algebra const& a);

  Algebra load_algebra(std::filesystem::path const& path);
  void    store_algebra(Algebra const& a, std::filesystem::path const& path);

}  // namespace srw
