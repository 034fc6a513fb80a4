#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "surreal/arithmetic.hpp"
#include "surreal/birthday.hpp"
#include "surreal/canonical.hpp"
#include "surreal/error.hpp"
#include "surreal/expr.hpp"
#include "surreal/formats.hpp"
#include "surreal/verify.hpp"

namespace surreal::cli {

namespace {

struct GlobalOptions {
  std::size_t max_cache = 0;
  std::string cache_policy = "fail-fast";
  std::size_t max_depth = Limits{}.max_depth;
  double time_budget = 0;  // seconds, 0: none
  bool no_validate = false;
};

void configure(FormStore& store, const GlobalOptions& g) {
  Limits limits;
  limits.max_cache_entries = g.max_cache;
  limits.on_cache_overflow =
      g.cache_policy == "evict-none" ? CacheOverflow::evict_none : CacheOverflow::fail_fast;
  limits.max_depth = g.max_depth;
  limits.validate_numeric = !g.no_validate;
  store.set_limits(limits);
  if (g.time_budget > 0) {
    store.set_time_budget(std::chrono::milliseconds(static_cast<long long>(g.time_budget * 1000)));
  }
}

std::optional<std::chrono::milliseconds> seconds_to_budget(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
}

// Operands of the addition birthday table, in display order.
const std::vector<Dyadic>& addition_operands() {
  static const std::vector<Dyadic> operands = {Dyadic(0), Dyadic(1, 1), Dyadic(3, 2), Dyadic(1),
                                               Dyadic(2)};
  return operands;
}

void print_addition_table(FormStore& store, std::ostream& out) {
  const auto& ops = addition_operands();
  constexpr int w = 6;
  out << std::setw(w) << "" << std::setw(w) << "x:";
  for (const auto& q : ops) out << std::setw(w) << q.to_string();
  out << '\n';
  out << std::setw(w) << "y" << std::setw(w) << "g(y)";
  for (const auto& q : ops) out << std::setw(w) << store.generation(dali(store, q));
  out << "  <- g(x)\n";
  for (const auto& qy : ops) {
    FormId y = dali(store, qy);
    out << std::setw(w) << qy.to_string() << std::setw(w) << store.generation(y);
    for (const auto& qx : ops) {
      out << std::setw(w) << store.generation(add(store, dali(store, qx), y));
    }
    out << '\n';
  }
}

int print_product_table(FormStore& store, std::ostream& out, const SuiteOptions& options, bool csv) {
  auto cells = product_cells(store, options);
  bool mismatch = std::any_of(cells.begin(), cells.end(), [](const ProductCell& pc) {
    return pc.cell.status == CellStatus::mismatch;
  });
  if (csv) {
    std::vector<CellReport> rows;
    for (const auto& pc : cells) rows.push_back(pc.cell);
    out << format_rows_csv(rows);
    return mismatch ? kExitCounterexample : kExitOk;
  }

  const std::size_t n_max = options.max_generation;
  std::size_t w = 4;
  for (const auto& pc : cells) w = std::max(w, pc.cell.predicted.str().size() + 3);
  out << std::setw(6) << "n\\m";
  for (std::size_t m = 0; m <= n_max; ++m) out << std::setw(static_cast<int>(w)) << m;
  out << '\n';
  for (std::size_t n = 0; n <= n_max; ++n) {
    out << std::setw(6) << n;
    for (std::size_t m = 0; m <= n_max; ++m) {
      const CellReport& c = cells[n * (n_max + 1) + m].cell;
      std::string text = c.predicted.str();
      if (c.status == CellStatus::recurrence_only) text = "(" + text + ")";
      if (c.status == CellStatus::mismatch) text = "!" + text;
      out << std::setw(static_cast<int>(w)) << text;
    }
    out << '\n';
  }
  out << "plain: f(n,m) confirmed by real products; (parenthesized): recurrence only";
  if (mismatch) out << "; !: product disagreed";
  out << '\n';
  return mismatch ? kExitCounterexample : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite surreal number forms: arithmetic, birthdays and DAG export", "surreal"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--max-cache", global.max_cache, "Memo cache entry cap, 0 for none")
      ->capture_default_str();
  app.add_option("--cache-policy", global.cache_policy, "On a full cache: fail-fast or evict-none")
      ->check(CLI::IsMember({"fail-fast", "evict-none"}))
      ->capture_default_str();
  app.add_option("--max-depth", global.max_depth, "Recursion depth limit")->capture_default_str();
  app.add_option("--time-budget", global.time_budget, "Wall-clock budget in seconds, 0 for none")
      ->capture_default_str();
  app.add_flag("--no-validate", global.no_validate,
               "Skip the numeric-condition check when interning (unsafe)");

  std::string expr_text;
  std::string expand;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression: value, generation, form");
  eval->add_option("expr", expr_text, "Expression, e.g. \"dali(2) * dali(3)\"")->required();
  eval->add_option("--expand", expand, "Print the expanded form, optionally to a depth")
      ->expected(0, 1)
      ->check(CLI::NonNegativeNumber | CLI::IsMember({""}));

  auto* value = app.add_subcommand("value", "Print the value of an expression");
  value->add_option("expr", expr_text)->required();

  auto* dot = app.add_subcommand("dot", "Print the DAG of an expression as Graphviz DOT");
  dot->add_option("expr", expr_text)->required();

  auto* json = app.add_subcommand("json", "Print a JSON snapshot of an expression's DAG");
  json->add_option("expr", expr_text)->required();

  std::string table_kind;
  std::size_t table_max_gen = 6;
  std::uint64_t table_ceiling = kDefaultProductCeiling;
  double table_cell_budget = 10;
  std::uint64_t table_seed = 1;
  bool table_csv = false;
  auto* table = app.add_subcommand("table", "Birthday tables for sums (add) or products (mul)");
  table->add_option("kind", table_kind)->required()->check(CLI::IsMember({"add", "mul"}));
  table->add_option("max_gen", table_max_gen, "Largest operand generation (mul)")
      ->capture_default_str();
  table->add_option("--ceiling", table_ceiling, "Largest predicted generation to multiply out")
      ->capture_default_str();
  table->add_option("--cell-budget", table_cell_budget, "Seconds per product, 0 for none")
      ->capture_default_str();
  table->add_option("--seed", table_seed)->capture_default_str();
  table->add_flag("--csv", table_csv, "Rows n,m,f,measured,status");

  std::vector<std::size_t> rec_args;
  std::optional<std::size_t> rec_diagonal;
  std::optional<std::size_t> rec_pow2;
  auto* recurrence = app.add_subcommand("recurrence", "Product-birthday recurrence f(n,m)");
  recurrence->add_option("nm", rec_args, "n m: print f(n,m)")->expected(2);
  recurrence->add_option("--diagonal", rec_diagonal, "Print f(i,i) for i = 0..N");
  recurrence->add_option("--pow2", rec_pow2, "Print the generation of 2^i for i = 1..N");

  std::string suite;
  SuiteOptions suite_options;
  double suite_budget = 0;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"lemma1", "thm1", "thm2", "gonshor", "laws"}));
  verify->add_option("--seed", suite_options.seed)->capture_default_str();
  verify->add_option("--samples", suite_options.samples, "Sample count, 0 for the suite default")
      ->capture_default_str();
  verify->add_option("--ceiling", suite_options.product_ceiling,
                     "Largest predicted product generation (thm2, gonshor)")
      ->capture_default_str();
  verify->add_option("--budget", suite_budget, "Seconds per product, 0 for none")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  FormStore store;
  configure(store, global);

  try {
    if (*eval) {
      FormId x = evaluate(store, expr_text);
      Dyadic v = value_of(store, x);
      out << "value: " << v << '\n';
      out << "generation: " << store.generation(x) << '\n';
      out << "identical-to-canonical: " << (dali(store, v) == x ? "true" : "false") << '\n';
      if (eval->count("--expand") > 0) {
        std::optional<std::size_t> depth;
        if (!expand.empty()) depth = std::stoul(expand);
        out << "form: " << print_form(store, x, depth) << '\n';
      }
      return kExitOk;
    }
    if (*value) {
      out << value_of(store, evaluate(store, expr_text)) << '\n';
      return kExitOk;
    }
    if (*dot) {
      out << to_dot(store, evaluate(store, expr_text));
      return kExitOk;
    }
    if (*json) {
      out << to_json(store, evaluate(store, expr_text));
      return kExitOk;
    }
    if (*table) {
      if (table_kind == "add") {
        print_addition_table(store, out);
        return kExitOk;
      }
      SuiteOptions options;
      options.seed = table_seed;
      options.max_generation = table_max_gen;
      options.product_ceiling = table_ceiling;
      options.cell_budget = seconds_to_budget(table_cell_budget);
      return print_product_table(store, out, options, table_csv);
    }
    if (*recurrence) {
      if (rec_args.empty() && !rec_diagonal && !rec_pow2) {
        err << "recurrence: give n m, --diagonal N or --pow2 N\n";
        return kExitUsage;
      }
      if (!rec_args.empty()) out << product_birthday(rec_args[0], rec_args[1]) << '\n';
      if (rec_diagonal) {
        for (std::size_t i = 0; i <= *rec_diagonal; ++i) {
          out << (i ? "," : "") << square_diagonal(i);
        }
        out << '\n';
      }
      if (rec_pow2) {
        for (std::size_t i = 1; i <= *rec_pow2; ++i) out << (i > 1 ? "," : "") << pow2_generation(i);
        out << '\n';
      }
      return kExitOk;
    }
    if (*verify) {
      suite_options.cell_budget = seconds_to_budget(suite_budget);
      SuiteResult result = run_suite(suite, store, suite_options);
      for (const auto& line : result.lines) out << line << '\n';
      for (const auto& failure : result.failures) out << "COUNTEREXAMPLE " << failure << '\n';
      out << result.name << ": " << result.checks << " checks, " << result.failures.size()
          << " failed, " << result.skipped << " skipped on budget\n";
      if (!result.passed()) return kExitCounterexample;
      if (!result.complete()) return kExitIncomplete;
      return kExitOk;
    }
  } catch (const SyntaxError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const NonDyadicDenominator& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const NotANumber& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kExitIncomplete;
  } catch (const DepthExceeded& e) {
    err << e.what() << '\n';
    return kExitIncomplete;
  } catch (const CacheLimitExceeded& e) {
    err << e.what() << '\n';
    return kExitIncomplete;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace surreal::cli
