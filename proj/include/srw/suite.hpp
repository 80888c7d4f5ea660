#pragma once

// The verification suites: each check re-derives one finite claim about the
// semirings and groups involved and reports pass or fail with a witness.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "srw/cache.hpp"
#include "srw/satisfaction.hpp"

namespace srw {

  struct SuiteParams {
    // Lee matrix over n, m in 3..lee_max_n.
    int lee_max_n = 5;
    // Largest order for finder-backed checks.
    std::size_t finder_max_order = 6;
    // Extra length allowed in isoterm searches.
    unsigned      isoterm_bound = 2;
    EngineOptions engine;
    // Witness files go to out_dir/witnesses; nothing is written when empty.
    std::filesystem::path out_dir;
    // Optional; finder and isomorphism results go through it when set.
    ResultCache* cache = nullptr;
  };

  enum class CheckStatus { pass, fail, skipped };

  struct CheckResult {
    std::string              id;
    std::string              description;
    CheckStatus              status = CheckStatus::skipped;
    double                   elapsed_seconds = 0;
    std::string              detail;
    std::vector<std::string> artifacts;
  };

  struct SuiteReport {
    std::string                        suite;
    std::map<std::string, std::string> params;
    std::vector<CheckResult>           checks;  // registration order

    // No check failed.
    bool        passed() const;
    std::string to_text() const;
    std::string to_json() const;
  };

  std::vector<std::string> suite_names();

  // name is one of suite_names(); "all" runs every suite in turn. Throws
  // PreconditionError on an unknown name.
  SuiteReport run_suite(std::string const& name, SuiteParams const& params = {});

  char const* to_string(CheckStatus s);

}  // namespace srw
