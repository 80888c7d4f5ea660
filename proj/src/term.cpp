#include "srw/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "srw/error.hpp"

namespace srw {

  ////////////////////////////////////////////////////////////////////////
  // Term
  ////////////////////////////////////////////////////////////////////////

  Term Term::variable(std::string name) {
    Term t;
    t.kind_ = Kind::variable;
    t.name_ = std::move(name);
    return t;
  }

  namespace {
    Term make_nary(Term::Kind kind, std::vector<Term> operands, Term (*build)(Term::Kind, std::vector<Term>)) {
      if (operands.empty()) {
        throw PreconditionError("empty operand list");
      }
      if (operands.size() == 1) {
        return std::move(operands.front());
      }
      std::vector<Term> flat;
      for (auto& op : operands) {
        if (op.kind() == kind) {
          flat.insert(flat.end(), op.children().begin(), op.children().end());
        } else {
          flat.push_back(std::move(op));
        }
      }
      return build(kind, std::move(flat));
    }
  }  // namespace

  Term Term::sum(std::vector<Term> operands) {
    return make_nary(Kind::sum, std::move(operands), [](Kind k, std::vector<Term> c) {
      Term t;
      t.kind_     = k;
      t.children_ = std::move(c);
      return t;
    });
  }

  Term Term::product(std::vector<Term> operands) {
    return make_nary(Kind::product, std::move(operands), [](Kind k, std::vector<Term> c) {
      Term t;
      t.kind_     = k;
      t.children_ = std::move(c);
      return t;
    });
  }

  bool Term::is_word() const {
    if (kind_ == Kind::variable) {
      return true;
    }
    return kind_ == Kind::product
           && std::all_of(children_.begin(), children_.end(), [](Term const& c) {
                return c.is_variable();
              });
  }

  Statement Statement::identity(Term lhs, Term rhs) {
    Statement s;
    s.kind       = Kind::identity;
    s.conclusion = {std::move(lhs), std::move(rhs)};
    return s;
  }

  Statement Statement::order(Term lo, Term hi) {
    Statement s;
    s.kind         = Kind::order;
    s.order_bounds = Equation{lo, hi};
    s.conclusion   = {Term::sum({std::move(lo), hi}), hi};
    return s;
  }

  Statement Statement::quasi_identity(std::vector<Equation> premises,
                                      Equation              conclusion) {
    Statement s;
    s.kind       = Kind::quasi_identity;
    s.premises   = std::move(premises);
    s.conclusion = std::move(conclusion);
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tokenizer and parser
  ////////////////////////////////////////////////////////////////////////

  namespace {

    enum class Tok { ident, plus, star, lparen, rparen, eq, le, implies, amp, end };

    struct Token {
      Tok         type;
      std::string text;
      std::size_t pos;
    };

    std::string describe(Tok t) {
      switch (t) {
        case Tok::ident:
          return "identifier";
        case Tok::plus:
          return "'+'";
        case Tok::star:
          return "'*'";
        case Tok::lparen:
          return "'('";
        case Tok::rparen:
          return "')'";
        case Tok::eq:
          return "'='";
        case Tok::le:
          return "'<='";
        case Tok::implies:
          return "'=>'";
        case Tok::amp:
          return "'&'";
        case Tok::end:
          return "end of input";
      }
      return "?";
    }

    std::vector<Token> tokenize(std::string_view s) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
          ++i;
          continue;
        }
        if (std::isalpha(c)) {
          std::size_t j = i + 1;
          while (j < s.size()
                 && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
            ++j;
          }
          out.push_back({Tok::ident, std::string(s.substr(i, j - i)), i});
          i = j;
          continue;
        }
        auto two = s.substr(i, 2);
        if (two == "==") {
          out.push_back({Tok::eq, "==", i});
          i += 2;
        } else if (two == "=>") {
          out.push_back({Tok::implies, "=>", i});
          i += 2;
        } else if (two == "<=") {
          out.push_back({Tok::le, "<=", i});
          i += 2;
        } else if (two == "!=") {
          throw SyntaxError(i, "'!=' is not supported; statements use equalities only");
        } else {
          switch (c) {
            case '+':
              out.push_back({Tok::plus, "+", i});
              break;
            case '*':
              out.push_back({Tok::star, "*", i});
              break;
            case '(':
              out.push_back({Tok::lparen, "(", i});
              break;
            case ')':
              out.push_back({Tok::rparen, ")", i});
              break;
            case '=':
              out.push_back({Tok::eq, "=", i});
              break;
            case '&':
              out.push_back({Tok::amp, "&", i});
              break;
            default:
              throw SyntaxError(i, std::string("illegal character '") + s[i] + "'");
          }
          ++i;
        }
      }
      out.push_back({Tok::end, "", s.size()});
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

      Term term_only() {
        Term t = sum();
        expect(Tok::end);
        return t;
      }

      Statement statement() {
        std::vector<Equation> eqs;
        std::vector<bool>     is_order;
        bool                  seen_implies = false;
        std::vector<Equation> premises;
        std::optional<Equation> order_bounds;

        auto one_equation = [&]() -> std::pair<Equation, bool> {
          Term        lhs = sum();
          Token const op  = peek();
          if (op.type != Tok::eq && op.type != Tok::le) {
            throw SyntaxError(op.pos, "expected '=', '==' or '<=' but found " + describe(op.type));
          }
          ++pos_;
          Term rhs = sum();
          return {Equation{std::move(lhs), std::move(rhs)}, op.type == Tok::le};
        };
        auto normalized = [](std::pair<Equation, bool> const& e) {
          if (e.second) {
            return Equation{Term::sum({e.first.lhs, e.first.rhs}), e.first.rhs};
          }
          return e.first;
        };

        while (true) {
          auto e = one_equation();
          Token const t = peek();
          if (t.type == Tok::amp) {
            if (seen_implies) {
              throw SyntaxError(t.pos, "'&' is not allowed after '=>'");
            }
            premises.push_back(normalized(e));
            ++pos_;
            continue;
          }
          if (t.type == Tok::implies) {
            if (seen_implies) {
              throw SyntaxError(t.pos, "more than one '=>'");
            }
            seen_implies = true;
            premises.push_back(normalized(e));
            ++pos_;
            continue;
          }
          if (t.type != Tok::end) {
            throw SyntaxError(t.pos, "unexpected " + describe(t.type));
          }
          if (!premises.empty() && !seen_implies) {
            throw SyntaxError(t.pos, "conjunction without '=>'");
          }
          if (seen_implies) {
            return Statement::quasi_identity(std::move(premises), normalized(e));
          }
          if (e.second) {
            return Statement::order(e.first.lhs, e.first.rhs);
          }
          return Statement::identity(e.first.lhs, e.first.rhs);
        }
      }

     private:
      Token const& peek() const {
        return toks_[pos_];
      }

      void expect(Tok t) {
        if (peek().type != t) {
          throw SyntaxError(peek().pos,
                            "expected " + describe(t) + " but found " + describe(peek().type));
        }
        ++pos_;
      }

      Term sum() {
        std::vector<Term> ops;
        ops.push_back(prod());
        while (peek().type == Tok::plus) {
          ++pos_;
          ops.push_back(prod());
        }
        return Term::sum(std::move(ops));
      }

      static bool starts_atom(Tok t) {
        return t == Tok::ident || t == Tok::lparen;
      }

      Term prod() {
        std::vector<Term> ops;
        ops.push_back(atom());
        while (true) {
          if (peek().type == Tok::star) {
            ++pos_;
            ops.push_back(atom());
          } else if (starts_atom(peek().type)) {
            ops.push_back(atom());
          } else {
            break;
          }
        }
        return Term::product(std::move(ops));
      }

      Term atom() {
        Token const t = peek();
        if (t.type == Tok::ident) {
          ++pos_;
          return Term::variable(t.text);
        }
        if (t.type == Tok::lparen) {
          ++pos_;
          Term inner = sum();
          if (peek().type != Tok::rparen) {
            throw SyntaxError(peek().pos, "unbalanced parentheses: expected ')' but found "
                                              + describe(peek().type));
          }
          ++pos_;
          return inner;
        }
        if (t.type == Tok::rparen) {
          throw SyntaxError(t.pos, "unbalanced parentheses or empty operand");
        }
        throw SyntaxError(t.pos, "empty operand: expected identifier or '(' but found "
                                     + describe(t.type));
      }

      std::vector<Token> toks_;
      std::size_t        pos_ = 0;
    };

  }  // namespace

  Term parse_term(std::string_view text) {
    return Parser(text).term_only();
  }

  Statement parse_statement(std::string_view text) {
    return Parser(text).statement();
  }

  ////////////////////////////////////////////////////////////////////////
  // Formatting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void format_into(std::ostringstream& os, Term const& t, bool in_product) {
      switch (t.kind()) {
        case Term::Kind::variable:
          os << t.name();
          return;
        case Term::Kind::sum: {
          if (in_product) {
            os << '(';
          }
          bool first = true;
          for (auto const& c : t.children()) {
            if (!first) {
              os << " + ";
            }
            first = false;
            format_into(os, c, false);
          }
          if (in_product) {
            os << ')';
          }
          return;
        }
        case Term::Kind::product: {
          bool first = true;
          for (auto const& c : t.children()) {
            if (!first) {
              os << '*';
            }
            first = false;
            format_into(os, c, true);
          }
          return;
        }
      }
    }
  }  // namespace

  std::string format_term(Term const& t) {
    std::ostringstream os;
    format_into(os, t, false);
    return os.str();
  }

  std::string format_equation(Equation const& e) {
    return format_term(e.lhs) + " = " + format_term(e.rhs);
  }

  std::string format_statement(Statement const& s) {
    switch (s.kind) {
      case Statement::Kind::identity:
        return format_equation(s.conclusion);
      case Statement::Kind::order:
        return format_term(s.order_bounds->lhs) + " <= " + format_term(s.order_bounds->rhs);
      case Statement::Kind::quasi_identity: {
        std::string out;
        for (std::size_t i = 0; i < s.premises.size(); ++i) {
          out += (i ? " & " : "") + format_equation(s.premises[i]);
        }
        return out + " => " + format_equation(s.conclusion);
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Variables and evaluation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void collect(Term const& t, std::set<std::string>& out) {
      if (t.is_variable()) {
        out.insert(t.name());
        return;
      }
      for (auto const& c : t.children()) {
        collect(c, out);
      }
    }
  }  // namespace

  std::vector<std::string> variables(Term const& t) {
    std::set<std::string> s;
    collect(t, s);
    return {s.begin(), s.end()};
  }

  std::vector<std::string> variables(Statement const& st) {
    std::set<std::string> s;
    for (auto const& e : st.premises) {
      collect(e.lhs, s);
      collect(e.rhs, s);
    }
    collect(st.conclusion.lhs, s);
    collect(st.conclusion.rhs, s);
    return {s.begin(), s.end()};
  }

  element eval_term(Term const& t, FiniteSemiring const& s, Assignment const& asg) {
    switch (t.kind()) {
      case Term::Kind::variable: {
        auto it = asg.find(t.name());
        if (it == asg.end()) {
          throw UnboundVariableError(t.name());
        }
        if (it->second >= s.size()) {
          throw PreconditionError("value of '" + t.name() + "' is outside the carrier");
        }
        return it->second;
      }
      case Term::Kind::sum: {
        element acc = eval_term(t.children().front(), s, asg);
        for (std::size_t i = 1; i < t.children().size(); ++i) {
          acc = s.add(acc, eval_term(t.children()[i], s, asg));
        }
        return acc;
      }
      case Term::Kind::product: {
        element acc = eval_term(t.children().front(), s, asg);
        for (std::size_t i = 1; i < t.children().size(); ++i) {
          acc = s.mul(acc, eval_term(t.children()[i], s, asg));
        }
        return acc;
      }
    }
    return 0;
  }

  bool holds_under(Statement const& st, FiniteSemiring const& s, Assignment const& asg) {
    for (auto const& p : st.premises) {
      if (eval_term(p.lhs, s, asg) != eval_term(p.rhs, s, asg)) {
        return true;
      }
    }
    return eval_term(st.conclusion.lhs, s, asg) == eval_term(st.conclusion.rhs, s, asg);
  }

  std::string format_assignment(Assignment const& asg, FiniteSemiring const& s) {
    std::string out;
    for (auto const& [name, value] : asg) {
      if (!out.empty()) {
        out += ", ";
      }
      out += name + "->" + (value < s.size() ? s.label(value) : std::to_string(value));
    }
    return out;
  }

}  // namespace srw
