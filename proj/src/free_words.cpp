#include "srw/satisfaction.hpp"

namespace srw {

  namespace {

    // Matches v[k..] against w starting at pos, extending the substitution.
    class Matcher {
     public:
      Matcher(Word const& w, Word const& v) : w_(w.letters()), v_(v.letters()) {}

      bool match(std::size_t k, std::size_t pos) {
        if (k == v_.size()) {
          return true;
        }
        Symbol const& x  = v_[k];
        auto          it = sub_.find(x);
        if (it != sub_.end()) {
          auto const& img = it->second;
          if (pos + img.size() > w_.size()
              || !std::equal(img.begin(), img.end(), w_.begin() + pos)) {
            return false;
          }
          return match(k + 1, pos + img.size());
        }
        // Leave at least one letter for each remaining position of v.
        std::size_t const rest = v_.size() - k - 1;
        for (std::size_t len = 1; pos + len + rest <= w_.size(); ++len) {
          sub_.emplace(x, std::vector<Symbol>(w_.begin() + pos, w_.begin() + pos + len));
          if (match(k + 1, pos + len)) {
            return true;
          }
          sub_.erase(x);
        }
        return false;
      }

      std::map<Symbol, std::vector<Symbol>> const& substitution() const {
        return sub_;
      }

     private:
      std::vector<Symbol> const&            w_;
      std::vector<Symbol> const&            v_;
      std::map<Symbol, std::vector<Symbol>> sub_;
    };

  }  // namespace

  FreeWordVerdict is_v_free_word(Word const& w, Word const& v) {
    FreeWordVerdict out;
    if (v.empty()) {
      return out;
    }
    for (std::size_t start = 0; start + v.size() <= w.size(); ++start) {
      Matcher m(w, v);
      if (m.match(0, start)) {
        out.is_free  = false;
        out.position = start;
        for (auto const& [x, img] : m.substitution()) {
          out.substitution.emplace(x, Word(img));
        }
        return out;
      }
    }
    return out;
  }

}  // namespace srw
