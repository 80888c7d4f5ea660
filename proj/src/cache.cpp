#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "srw/cache.hpp"
#include "srw/error.hpp"
#include "srw/io.hpp"
#include "srw/operations.hpp"

namespace srw {

  namespace {

    using nlohmann::json;

    // Bumped when a cached payload format changes.
    constexpr char const* format_version = "srw-cache-1";

    std::string models_payload(std::vector<FiniteSemiring> const& models) {
      json arr = json::array();
      for (auto const& m : models) {
        arr.push_back(json::parse(format_algebra(m)));
      }
      return arr.dump();
    }

    std::vector<FiniteSemiring> models_from_payload(std::string const& payload) {
      std::vector<FiniteSemiring> out;
      for (auto const& j : json::parse(payload)) {
        out.push_back(std::get<FiniteSemiring>(parse_algebra(j.dump())));
      }
      return out;
    }

  }  // namespace

  std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
      throw Error("SHA-256 computation failed");
    }
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) {
      os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return os.str();
  }

  ResultCache::ResultCache(std::filesystem::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

  std::string ResultCache::key(std::string_view operation, std::string_view inputs) {
    std::string material = format_version;
    material += '\n';
    material += operation;
    material += '\n';
    material += inputs;
    return sha256_hex(material);
  }

  std::filesystem::path ResultCache::path_of(std::string const& key) const {
    return dir_ / (key + ".entry");
  }

  std::optional<std::string> ResultCache::get(std::string const& key) {
    if (!enabled_) {
      return std::nullopt;
    }
    std::ifstream in(path_of(key), std::ios::binary);
    if (!in) {
      ++stats_.misses;
      return std::nullopt;
    }
    std::string digest;
    std::getline(in, digest);
    std::ostringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    if (digest != sha256_hex(payload)) {
      ++stats_.corrupt;
      ++stats_.misses;
      return std::nullopt;
    }
    ++stats_.hits;
    return payload;
  }

  void ResultCache::put(std::string const& key, std::string_view payload) {
    if (!enabled_) {
      return;
    }
    std::filesystem::create_directories(dir_);
    auto const target = path_of(key);
    auto       tmp    = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw Error("cannot write cache entry " + tmp.string());
      }
      out << sha256_hex(payload) << '\n' << payload;
    }
    std::filesystem::rename(tmp, target);
  }

  std::vector<FiniteSemiring> cached_enumerate_models(ResultCache& cache, SearchSpec const& spec,
                                                      EngineOptions const& options) {
    std::string const key = ResultCache::key("enumerate_models", describe(spec));
    if (auto hit = cache.get(key)) {
      try {
        return models_from_payload(*hit);
      } catch (std::exception const&) {
        // A payload that matches its digest but does not parse was written by
        // an incompatible build; fall through and overwrite it.
      }
    }
    auto models = enumerate_models(spec, options);
    cache.put(key, models_payload(models));
    return models;
  }

  std::optional<Morphism> cached_is_isomorphic(ResultCache& cache, Algebra const& a, Algebra const& b) {
    std::string const key = ResultCache::key("is_isomorphic", format_algebra(a) + "\n" + format_algebra(b));
    if (auto hit = cache.get(key)) {
      try {
        auto const j = json::parse(*hit);
        if (j.is_null()) {
          return std::nullopt;
        }
        auto map = j.get<std::vector<element>>();
        // Re-verified so that a stale entry cannot pass as an isomorphism.
        Morphism m = std::holds_alternative<FiniteSemiring>(a)
                         ? verify_morphism(std::get<FiniteSemiring>(a), std::get<FiniteSemiring>(b), map)
                         : verify_morphism(std::get<FiniteGroup>(a), std::get<FiniteGroup>(b), map);
        if (m.is_isomorphism()) {
          return m;
        }
      } catch (std::exception const&) {
      }
    }
    auto result = is_isomorphic(a, b);
    cache.put(key, result ? json(result->map).dump() : json(nullptr).dump());
    return result;
  }

}  // namespace srw
