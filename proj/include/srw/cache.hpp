#pragma once

// On-disk result cache keyed by a SHA-256 digest of the operation and its
// inputs. Each entry stores the digest of its payload; an entry whose
// payload does not match is treated as a miss and overwritten.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srw/algebra.hpp"
#include "srw/finder.hpp"

namespace srw {

  // Lowercase hex SHA-256.
  std::string sha256_hex(std::string_view data);

  class ResultCache {
   public:
    // A disabled cache never reads or writes.
    explicit ResultCache(std::filesystem::path dir, bool enabled = true);

    bool enabled() const noexcept {
      return enabled_;
    }
    std::filesystem::path const& directory() const noexcept {
      return dir_;
    }

    static std::string key(std::string_view operation, std::string_view inputs);

    std::optional<std::string> get(std::string const& key);
    void                       put(std::string const& key, std::string_view payload);

    struct Stats {
      unsigned hits    = 0;
      unsigned misses  = 0;
      unsigned corrupt = 0;
    };
    Stats const& stats() const noexcept {
      return stats_;
    }

   private:
    std::filesystem::path path_of(std::string const& key) const;

    std::filesystem::path dir_;
    bool                  enabled_;
    Stats                 stats_;
  };

  // enumerate_models and is_isomorphic through the cache. The cached result
  // is the serialised output, so a hit is bit-identical to recomputation.
  std::vector<FiniteSemiring> cached_enumerate_models(ResultCache& cache, SearchSpec const& spec,
                                                      EngineOptions const& options = {});
  std::optional<Morphism> cached_is_isomorphic(ResultCache& cache, Algebra const& a, Algebra const& b);

}  // namespace srw
