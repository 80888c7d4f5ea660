#include <fstream>
#include <sstream>

#include <json.hpp>

#include "srw/error.hpp"
#include "srw/io.hpp"

namespace srw {

  namespace {

    using nlohmann::json;

    Table read_table(json const& j, char const* name, std::size_t n) {
      if (!j.is_array()) {
        throw TableError(std::string("\"") + name + "\" is not an array of rows");
      }
      if (j.size() != n) {
        throw TableError(std::string("\"") + name + "\" has " + std::to_string(j.size())
                         + " rows but the order is " + std::to_string(n));
      }
      std::vector<std::vector<element>> rows;
      for (auto const& r : j) {
        if (!r.is_array()) {
          throw TableError(std::string("\"") + name + "\" has a row that is not an array");
        }
        std::vector<element> row;
        for (auto const& v : r) {
          if (!v.is_number_integer() || v.get<long long>() < 0) {
            throw TableError(std::string("\"") + name + "\" has a non-element entry " + v.dump());
          }
          row.push_back(static_cast<element>(v.get<long long>()));
        }
        rows.push_back(std::move(row));
      }
      return Table::from_rows(rows);
    }

    json write_table(Table const& t) {
      json out = json::array();
      for (auto const& r : t.rows()) {
        out.push_back(r);
      }
      return out;
    }

  }  // namespace

  Algebra parse_algebra(std::string_view json_text) {
    json j;
    try {
      j = json::parse(json_text);
    } catch (json::parse_error const& e) {
      throw Error(std::string("malformed algebra JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("mul")) {
      throw Error("algebra JSON needs an object with a \"mul\" table");
    }
    std::string kind = j.contains("add") ? "semiring" : "group";
    if (j.contains("kind")) {
      kind = j.at("kind").get<std::string>();
    }
    std::size_t n = j.at("mul").size();
    if (j.contains("order")) {
      n = j.at("order").get<std::size_t>();
    }
    detail::check_order(n, "loaded algebra");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
      if (labels.size() != n) {
        throw TableError("\"labels\" has " + std::to_string(labels.size()) + " entries but the order is "
                         + std::to_string(n));
      }
    }
    Table mul = read_table(j.at("mul"), "mul", n);
    if (kind == "group") {
      if (j.contains("add")) {
        throw Error("a group file must not have an \"add\" table");
      }
      return validate_group(mul, std::move(labels));
    }
    if (kind != "semiring") {
      throw Error("unknown algebra kind \"" + kind + "\"");
    }
    if (!j.contains("add")) {
      throw Error("a semiring file needs an \"add\" table");
    }
    Table add = read_table(j.at("add"), "add", n);
    return FiniteSemiring(std::move(add), std::move(mul), std::move(labels));
  }

  std::string format_algebra(Algebra const& a) {
    json j;
    if (auto const* s = std::get_if<FiniteSemiring>(&a)) {
      j["kind"]   = "semiring";
      j["order"]  = s->size();
      j["add"]    = write_table(s->add_table());
      j["mul"]    = write_table(s->mul_table());
      j["labels"] = s->labels();
    } else {
      auto const& g = std::get<FiniteGroup>(a);
      j["kind"]     = "group";
      j["order"]    = g.size();
      j["mul"]      = write_table(g.mul_table());
      j["labels"]   = g.labels();
    }
    return j.dump();
  }

  Algebra load_algebra(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      return parse_algebra(buf.str());
    } catch (ValidationError const& e) {
      throw ValidationError(path.string() + ": " + e.what());
    } catch (TableError const& e) {
      throw TableError(path.string() + ": " + e.what());
    }
  }

  void store_algebra(Algebra const& a, std::filesystem::path const& path) {
    if (path.has_parent_path()) {
      std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path.string());
    }
    out << format_algebra(a) << '\n';
  }

}  // namespace srw
