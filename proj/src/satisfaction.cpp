#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "srw/error.hpp"
#include "srw/satisfaction.hpp"

namespace srw {

  EngineOptions EngineOptions::from_environment() {
    EngineOptions o;
    if (char const* env = std::getenv("SRW_BUDGET")) {
      char*                    end = nullptr;
      unsigned long long const v   = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0) {
        throw PreconditionError(std::string("SRW_BUDGET is not a positive integer: ") + env);
      }
      o.budget = v;
    }
    return o;
  }

  namespace {

    constexpr long long unknown = -1;

    struct Node {
      Term::Kind       kind;
      int              var = -1;
      std::vector<int> children;
    };

    // Terms flattened into one node array. Evaluation is partial: a variable
    // is known when its index is below the current depth, and a node is
    // known once its value is forced, either by all children being known or
    // by an absorbing element (the multiplicative zero inside a known run of
    // factors, the additive top among the known summands).
    class Compiled {
     public:
      Compiled(FiniteSemiring const& s, std::vector<std::string> const& vars)
          : s_(s), vars_(vars), zero_(s.zero()), top_(s.additive_top()) {}

      int add(Term const& t) {
        Node n{t.kind(), -1, {}};
        if (t.is_variable()) {
          n.var = static_cast<int>(std::lower_bound(vars_.begin(), vars_.end(), t.name())
                                   - vars_.begin());
        } else {
          for (auto const& c : t.children()) {
            n.children.push_back(add(c));
          }
        }
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size() - 1);
      }

      long long eval(int node, std::vector<element> const& vals, int depth) const {
        Node const& n = nodes_[node];
        switch (n.kind) {
          case Term::Kind::variable:
            return n.var < depth ? static_cast<long long>(vals[n.var]) : unknown;
          case Term::Kind::sum: {
            long long acc = unknown;
            bool      all = true;
            for (int c : n.children) {
              long long const v = eval(c, vals, depth);
              if (v == unknown) {
                all = false;
                continue;
              }
              acc = acc == unknown ? v : s_.add(static_cast<element>(acc), static_cast<element>(v));
              if (top_ && acc == *top_) {
                return acc;
              }
            }
            return all ? acc : unknown;
          }
          case Term::Kind::product: {
            long long run = unknown;
            bool      all = true;
            for (int c : n.children) {
              long long const v = eval(c, vals, depth);
              if (v == unknown) {
                if (zero_ && run == *zero_) {
                  return run;
                }
                run = unknown;
                all = false;
                continue;
              }
              run = run == unknown ? v : s_.mul(static_cast<element>(run), static_cast<element>(v));
            }
            if (zero_ && run == *zero_) {
              return run;
            }
            return all ? run : unknown;
          }
        }
        return unknown;
      }

     private:
      FiniteSemiring const&           s_;
      std::vector<std::string> const& vars_;
      std::optional<element>          zero_;
      std::optional<element>          top_;
      std::vector<Node>               nodes_;
    };

    enum class Status { holds, fails, open };

    class Engine {
     public:
      Engine(FiniteSemiring const& s, Statement const& st, EngineOptions const& options)
          : s_(s), vars_(variables(st)), code_(s, vars_), options_(options) {
        for (auto const& p : st.premises) {
          premises_.emplace_back(code_.add(p.lhs), code_.add(p.rhs));
        }
        conclusion_ = {code_.add(st.conclusion.lhs), code_.add(st.conclusion.rhs)};
      }

      std::vector<std::string> const& vars() const {
        return vars_;
      }

      // Returns the witness values, if any, and the node count.
      std::pair<std::optional<std::vector<element>>, unsigned long long> run() {
        int const          v = static_cast<int>(vars_.size());
        std::vector<element> vals(v, 0);
        spent_ = 1;
        Status const root = status(vals, 0);
        if (root == Status::holds) {
          return {std::nullopt, 1};
        }
        if (root == Status::fails || v == 0) {
          return {vals, 1};
        }
        std::size_t const n = s_.size();
        tasks_.assign(n, {});
        best_ = n;
        next_ = 0;
        unsigned const threads = std::max(1u, std::min<unsigned>(options_.jobs, n));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) {
          pool.emplace_back([this] { work(); });
        }
        work();
        for (auto& t : pool) {
          t.join();
        }
        if (error_) {
          std::rethrow_exception(error_);
        }
        std::size_t const  last  = best_.load();
        unsigned long long nodes = 1;
        for (std::size_t k = 0; k < n && k <= last; ++k) {
          nodes += tasks_[k].nodes;
        }
        if (last < n) {
          return {tasks_[last].witness, nodes};
        }
        return {std::nullopt, nodes};
      }

     private:
      struct Task {
        unsigned long long                  nodes = 0;
        std::optional<std::vector<element>> witness;
      };

      Status status(std::vector<element> const& vals, int depth) const {
        bool premises_known_true = true;
        for (auto [l, r] : premises_) {
          long long const a = code_.eval(l, vals, depth);
          long long const b = code_.eval(r, vals, depth);
          if (a != unknown && b != unknown) {
            if (a != b) {
              return Status::holds;  // vacuous below this node
            }
          } else {
            premises_known_true = false;
          }
        }
        long long const a = code_.eval(conclusion_.first, vals, depth);
        long long const b = code_.eval(conclusion_.second, vals, depth);
        if (a != unknown && b != unknown) {
          if (a == b) {
            return Status::holds;
          }
          return premises_known_true ? Status::fails : Status::open;
        }
        return Status::open;
      }

      void work() {
        try {
          std::vector<element> vals(vars_.size(), 0);
          for (;;) {
            std::size_t const k = next_++;
            if (k >= tasks_.size() || k >= best_.load()) {
              return;
            }
            Task& task = tasks_[k];
            vals[0]    = static_cast<element>(k);
            if (dfs(vals, 1, k, task)) {
              task.witness = vals;
              std::size_t cur = best_.load();
              while (k < cur && !best_.compare_exchange_weak(cur, k)) {
              }
            }
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex_);
          if (!error_) {
            error_ = std::current_exception();
          }
          best_ = 0;
        }
      }

      bool dfs(std::vector<element>& vals, int depth, std::size_t task_id, Task& task) {
        ++task.nodes;
        if (++spent_ > options_.budget) {
          throw BudgetExceeded("satisfaction search exceeded the budget of "
                                   + std::to_string(options_.budget) + " nodes",
                               space_size());
        }
        if (best_.load(std::memory_order_relaxed) < task_id) {
          return false;  // a smaller witness exists; this task no longer matters
        }
        switch (status(vals, depth)) {
          case Status::holds:
            return false;
          case Status::fails:
            std::fill(vals.begin() + depth, vals.end(), 0);
            return true;
          case Status::open:
            break;
        }
        for (element e = 0; e < s_.size(); ++e) {
          vals[depth] = e;
          if (dfs(vals, depth + 1, task_id, task)) {
            return true;
          }
        }
        return false;
      }

      unsigned long long space_size() const {
        unsigned long long total = 1;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
          if (total > ~0ULL / s_.size()) {
            return ~0ULL;
          }
          total *= s_.size();
        }
        return total;
      }

      FiniteSemiring const&            s_;
      std::vector<std::string>         vars_;
      Compiled                         code_;
      EngineOptions                    options_;
      std::vector<std::pair<int, int>> premises_;
      std::pair<int, int>              conclusion_;

      std::vector<Task>                    tasks_;
      std::atomic<std::size_t>             next_{0};
      std::atomic<std::size_t>             best_{0};
      std::atomic<unsigned long long>      spent_{0};
      std::mutex                           error_mutex_;
      std::exception_ptr                   error_;
    };

  }  // namespace

  Verdict satisfies(FiniteSemiring const& s, Statement const& st, EngineOptions const& options) {
    Engine  engine(s, st, options);
    auto [witness, nodes] = engine.run();
    Verdict v;
    v.nodes            = nodes;
    v.failed_statement = format_statement(st);
    v.statements       = {v.failed_statement};
    if (witness) {
      v.holds = false;
      Assignment asg;
      for (std::size_t i = 0; i < engine.vars().size(); ++i) {
        asg.emplace(engine.vars()[i], (*witness)[i]);
      }
      if (holds_under(st, s, asg)) {
        throw ConstructionFailure("satisfaction witness does not falsify " + v.failed_statement);
      }
      v.witness = std::move(asg);
    }
    return v;
  }

  Verdict satisfies_all(FiniteSemiring const& s, std::vector<Statement> const& sts,
                        EngineOptions const& options) {
    Verdict total;
    for (auto const& st : sts) {
      Verdict v = satisfies(s, st, options);
      total.nodes += v.nodes;
      total.statements.push_back(v.failed_statement);
      total.failed_statement = v.failed_statement;
      if (!v.holds) {
        total.holds   = false;
        total.witness = std::move(v.witness);
        return total;
      }
    }
    return total;
  }

  Verdict check_free_laws(FiniteSemiring const& s, Term const& v, EngineOptions const& options) {
    if (!v.is_word()) {
      throw PreconditionError("free laws need a product of variables: " + format_term(v));
    }
    auto const  used = variables(v);
    std::string z    = "z";
    for (int k = 0; std::binary_search(used.begin(), used.end(), z); ++k) {
      z = "z" + std::to_string(k);
    }
    Term const zt = Term::variable(z);
    return satisfies_all(s,
                         {Statement::identity(v, Term::sum({v, zt})),
                          Statement::identity(v, Term::product({zt, v})),
                          Statement::identity(v, Term::product({v, zt}))},
                         options);
  }

  Verdict check_anticommutative(FiniteSemiring const& s, EngineOptions const& options) {
    Term const x = Term::variable("x"), y = Term::variable("y"), z = Term::variable("z");
    Term const both = Term::sum({Term::product({x, y}), Term::product({y, x})});
    return satisfies_all(s,
                         {Statement::identity(both, Term::sum({both, z})),
                          Statement::identity(both, Term::product({both, z})),
                          Statement::identity(both, Term::product({z, both}))},
                         options);
  }

}  // namespace srw
