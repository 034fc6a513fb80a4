#include "surreal/verify.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "surreal/arithmetic.hpp"
#include "surreal/canonical.hpp"
#include "surreal/error.hpp"
#include "surreal/expr.hpp"
#include "surreal/ordering.hpp"
#include "surreal/sampler.hpp"

namespace surreal {

namespace {

// Tally of one named property across samples.
class Tally {
 public:
  explicit Tally(SuiteResult& result) : result_(result) {}

  void check(const std::string& law, bool ok, const std::function<std::string()>& witness) {
    auto it = std::find_if(counts_.begin(), counts_.end(),
                           [&](const auto& entry) { return entry.law == law; });
    if (it == counts_.end()) it = counts_.insert(counts_.end(), Entry{law, 0, 0});
    ++it->total;
    ++result_.checks;
    if (ok) {
      ++it->passed;
    } else {
      result_.failures.push_back(law + ": " + witness());
    }
  }

  void summarize() {
    for (const auto& entry : counts_) {
      result_.lines.push_back(entry.law + ": " + std::to_string(entry.passed) + "/" +
                              std::to_string(entry.total));
    }
  }

 private:
  struct Entry {
    std::string law;
    std::size_t passed;
    std::size_t total;
  };
  SuiteResult& result_;
  std::vector<Entry> counts_;
};

}  // namespace

SuiteResult verify_canonical_birthdays(FormStore& store, const SuiteOptions&) {
  SuiteResult result;
  result.name = "lemma1";
  Tally tally(result);
  for (std::uint32_t k = 0; k <= 6; ++k) {
    const long long bound = 8LL << k;
    for (long long n = -bound; n <= bound; ++n) {
      if (k > 0 && n % 2 == 0) continue;  // lowest terms only
      Dyadic q(Integer(n), k);
      Generation measured = store.generation(dali(store, q));
      std::uint64_t expected = canonical_birthday(q);
      tally.check("g(dali(q)) = ceil(|q|) + k", measured == expected, [&] {
        return "dali(" + q.to_string() + ") has generation " + std::to_string(measured) +
               ", expected " + std::to_string(expected);
      });
    }
  }
  tally.summarize();
  return result;
}

SuiteResult verify_sum_birthdays(FormStore& store, const SuiteOptions& options) {
  SuiteResult result;
  result.name = "thm1";
  Tally tally(result);
  FormSampler sampler(store, options.seed);
  const std::size_t samples = options.samples ? options.samples : 200;
  for (std::size_t i = 0; i < samples; ++i) {
    Sample x = sampler.up_to(8);
    Sample y = sampler.up_to(8);
    AdditionReport sum = verify_birthday_addition(store, x.form, y.form);
    tally.check("g(x + y) = g(x) + g(y)", sum.pass, [&] {
      return "g(" + x.recipe + " + " + y.recipe + ") = " + std::to_string(sum.measured) +
             ", expected " + std::to_string(sum.gx) + " + " + std::to_string(sum.gy);
    });
    AdditionReport diff = verify_birthday_subtraction(store, x.form, y.form);
    tally.check("g(x - y) = g(x) + g(y)", diff.pass, [&] {
      return "g(" + x.recipe + " - " + y.recipe + ") = " + std::to_string(diff.measured) +
             ", expected " + std::to_string(diff.gx) + " + " + std::to_string(diff.gy);
    });
  }
  tally.summarize();
  return result;
}

std::vector<ProductCell> product_cells(FormStore& store, const SuiteOptions& options) {
  FormSampler sampler(store, options.seed);
  const std::size_t max_gen = options.max_generation;
  ProductBirthdayTable table(max_gen, max_gen);
  std::vector<ProductCell> cells;

  for (std::size_t n = 0; n <= max_gen; ++n) {
    for (std::size_t m = 0; m <= max_gen; ++m) {
      ProductCell pc;
      pc.cell.n = n;
      pc.cell.m = m;
      pc.cell.predicted = table.at(n, m);
      if (pc.cell.predicted > options.product_ceiling) {
        cells.push_back(std::move(pc));
        continue;
      }

      bool mismatch = false;
      auto attempt = [&](bool canonical_pair, const std::function<std::pair<Sample, Sample>()>& make) {
        try {
          auto [x, y] = make();
          // Big products get a store of their own so their nodes and caches are dropped after.
          FormStore scratch;
          scratch.set_limits(store.limits());
          if (options.cell_budget) scratch.set_time_budget(*options.cell_budget);
          FormId sx = evaluate(scratch, x.recipe);
          FormId sy = evaluate(scratch, y.recipe);
          if (scratch.generation(sx) != x.generation || scratch.generation(sy) != y.generation) {
            throw InternalError("operand recipe does not rebuild its form: " + x.recipe + ", " +
                                y.recipe);
          }
          MultiplicationReport r =
              verify_birthday_multiplication(scratch, sx, sy, options.product_ceiling);
          pc.cell.measured = r.measured;
          ++pc.cell.products;
          mismatch = mismatch || !r.pass;
          (canonical_pair ? pc.canonical_pair : pc.noncanonical_pair) = true;
          pc.checks.push_back({x.recipe, y.recipe, std::move(r)});
        } catch (const BudgetExceeded&) {
          // left out of the cell; the caller sees fewer products
        } catch (const CacheLimitExceeded&) {
        }
      };

      auto gen_n = static_cast<Generation>(n);
      auto gen_m = static_cast<Generation>(m);
      attempt(true, [&] {
        FormId x = dali(store, static_cast<long long>(n));
        FormId y = dali(store, static_cast<long long>(m));
        return std::pair{Sample{x, gen_n, "dali(" + std::to_string(n) + ")"},
                         Sample{y, gen_m, "dali(" + std::to_string(m) + ")"}};
      });
      attempt(true, [&] { return std::pair{sampler.canonical(gen_n), sampler.canonical(gen_m)}; });
      if (n >= 2 || m >= 2) {
        attempt(false, [&] {
          Sample x = n >= 2 ? zero_valued_noncanonical(store, gen_n, (n + m) % 2 == 1)
                            : sampler.canonical(gen_n);
          Sample y = m >= 2 ? zero_valued_noncanonical(store, gen_m, n % 2 == 1)
                            : sampler.canonical(gen_m);
          return std::pair{x, y};
        });
        attempt(false, [&] {
          Sample x = n >= 2 ? sampler.noncanonical(gen_n) : sampler.canonical(gen_n);
          Sample y = m >= 2 ? sampler.noncanonical(gen_m) : sampler.canonical(gen_m);
          return std::pair{x, y};
        });
      }

      if (mismatch) {
        pc.cell.status = CellStatus::mismatch;
      } else if (pc.cell.products > 0) {
        pc.cell.status = CellStatus::verified;
      }
      cells.push_back(std::move(pc));
    }
  }
  return cells;
}

namespace {

// Products the table cell should have attempted but abandoned on the time budget.
std::size_t expected_products(const ProductCell& pc) {
  return (pc.cell.n >= 2 || pc.cell.m >= 2) ? 4 : 2;
}

}  // namespace

SuiteResult verify_product_birthdays(FormStore& store, const SuiteOptions& options) {
  SuiteResult result;
  result.name = "thm2";
  for (const ProductCell& pc : product_cells(store, options)) {
    if (pc.cell.predicted > options.product_ceiling) continue;
    result.skipped += expected_products(pc) - pc.checks.size();
    for (const ProductCheck& check : pc.checks) {
      ++result.checks;
      if (!check.report.pass) {
        result.failures.push_back("g((" + check.x_recipe + ") * (" + check.y_recipe +
                                  ")) = " + std::to_string(check.report.measured) + ", expected f(" +
                                  std::to_string(check.report.gx) + "," +
                                  std::to_string(check.report.gy) +
                                  ") = " + check.report.predicted.str());
      }
    }
    std::ostringstream line;
    line << "f(" << pc.cell.n << "," << pc.cell.m << ") = " << pc.cell.predicted.str() << ": "
         << to_string(pc.cell.status) << " (" << pc.checks.size() << " products"
         << (pc.noncanonical_pair ? ", incl. non-canonical" : "") << ")";
    result.lines.push_back(line.str());
  }
  return result;
}

SuiteResult verify_weak_product_bound(FormStore& store, const SuiteOptions& options) {
  SuiteResult result;
  result.name = "gonshor";
  Tally tally(result);
  for (const ProductCell& pc : product_cells(store, options)) {
    if (pc.cell.predicted > options.product_ceiling) continue;
    result.skipped += expected_products(pc) - pc.checks.size();
    for (const ProductCheck& check : pc.checks) {
      tally.check("g(xy) <= 3^(g(x)+g(y))", check.report.within_weak_bound, [&] {
        return "g((" + check.x_recipe + ") * (" + check.y_recipe +
               ")) = " + std::to_string(check.report.measured);
      });
    }
  }
  tally.summarize();
  return result;
}

SuiteResult verify_algebraic_laws(FormStore& store, const SuiteOptions& options) {
  SuiteResult result;
  result.name = "laws";
  Tally tally(result);
  FormSampler sampler(store, options.seed);
  const std::size_t samples = options.samples ? options.samples : 100;

  // Products are kept at or under this predicted generation.
  constexpr std::uint64_t kProductBudget = 31;

  for (std::size_t i = 0; i < samples; ++i) {
    Sample x = sampler.up_to(5);
    Sample y = sampler.up_to(5);
    Sample z = sampler.up_to(5);
    auto names = [&](std::initializer_list<const Sample*> ss) {
      std::string out;
      for (const Sample* s : ss) out += (out.empty() ? "" : ", ") + s->recipe;
      return out;
    };

    // Multiplicative laws on operands small enough for every product involved.
    Sample a;
    Sample b;
    Sample c;
    for (;;) {
      a = sampler.up_to(5);
      b = sampler.up_to(5);
      c = sampler.up_to(5);
      auto ga = a.generation, gb = b.generation, gc = c.generation;
      auto fits = [&](const BigNat& v) { return v <= kProductBudget; };
      // every product below: ab, (ab)c, bc, a(bc), a(b+c), ac
      const BigNat ab = product_birthday(ga, gb);
      const BigNat bc = product_birthday(gb, gc);
      if (fits(ab) && fits(bc) && fits(product_birthday(ga, gc)) &&
          fits(product_birthday(static_cast<std::size_t>(ab), gc)) &&
          fits(product_birthday(ga, static_cast<std::size_t>(bc))) &&
          fits(product_birthday(ga, gb + gc))) {
        break;
      }
    }
    // Each sample runs in a store of its own, rebuilt from the recipes, so
    // big products and their caches do not pile up across samples.
    FormStore scratch;
    scratch.set_limits(store.limits());
    auto rebuild = [&](Sample s) {
      s.form = evaluate(scratch, s.recipe);
      return s;
    };
    x = rebuild(x);
    y = rebuild(y);
    z = rebuild(z);
    a = rebuild(a);
    b = rebuild(b);
    c = rebuild(c);
    const FormId zero = scratch.zero();
    const FormId one = dali(scratch, 1);

    tally.check("x + y == y + x", add(scratch, x.form, y.form) == add(scratch, y.form, x.form),
                [&] { return names({&x, &y}); });
    tally.check("(x + y) + z = x + (y + z)",
                equiv(scratch, add(scratch, add(scratch, x.form, y.form), z.form),
                      add(scratch, x.form, add(scratch, y.form, z.form))),
                [&] { return names({&x, &y, &z}); });
    tally.check("x + 0 == x", add(scratch, x.form, zero) == x.form, [&] { return names({&x}); });
    tally.check("g(-x) = g(x)", scratch.generation(negate(scratch, x.form)) == x.generation,
                [&] { return names({&x}); });
    tally.check("-(-x) == x", negate(scratch, negate(scratch, x.form)) == x.form,
                [&] { return names({&x}); });
    tally.check("v(x + y) = v(x) + v(y)",
                value_of(scratch, add(scratch, x.form, y.form)) ==
                    value_of(scratch, x.form) + value_of(scratch, y.form),
                [&] { return names({&x, &y}); });

    FormId ab = mul(scratch, a.form, b.form);
    tally.check("x * y == y * x", ab == mul(scratch, b.form, a.form), [&] { return names({&a, &b}); });
    tally.check("(x * y) * z = x * (y * z)",
                equiv(scratch, mul(scratch, ab, c.form), mul(scratch, a.form, mul(scratch, b.form, c.form))),
                [&] { return names({&a, &b, &c}); });
    tally.check("x * (y + z) = x * y + x * z",
                equiv(scratch, mul(scratch, a.form, add(scratch, b.form, c.form)),
                      add(scratch, ab, mul(scratch, a.form, c.form))),
                [&] { return names({&a, &b, &c}); });
    tally.check("0 * x == 0", mul(scratch, zero, a.form) == zero, [&] { return names({&a}); });
    tally.check("1 * x == x", mul(scratch, one, a.form) == a.form, [&] { return names({&a}); });
    tally.check("v(x * y) = v(x) * v(y)",
                value_of(scratch, ab) == value_of(scratch, a.form) * value_of(scratch, b.form),
                [&] { return names({&a, &b}); });
  }
  tally.summarize();
  return result;
}

SuiteResult run_suite(std::string_view name, FormStore& store, const SuiteOptions& options) {
  if (name == "lemma1") return verify_canonical_birthdays(store, options);
  if (name == "thm1") return verify_sum_birthdays(store, options);
  if (name == "thm2") return verify_product_birthdays(store, options);
  if (name == "gonshor") return verify_weak_product_bound(store, options);
  if (name == "laws") return verify_algebraic_laws(store, options);
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "' (expected lemma1, thm1, thm2, gonshor or laws)");
}

}  // namespace surreal
