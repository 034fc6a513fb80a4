#pragma once

// Property suites over seeded samples of forms. Each returns a report instead
// of throwing, so callers can print witnesses and keep going.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surreal/birthday.hpp"
#include "surreal/form_store.hpp"

namespace surreal {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 0;  // 0: the suite's default
  // Products whose predicted generation is above this are reported recurrence-only.
  std::uint64_t product_ceiling = 31;
  std::size_t max_generation = 6;  // table extent for the product suites
  std::optional<std::chrono::milliseconds> cell_budget;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t skipped = 0;             // checks abandoned on a resource limit
  std::vector<std::string> lines;      // human-readable report
  std::vector<std::string> failures;   // one witness per counterexample

  bool passed() const { return failures.empty(); }
  bool complete() const { return skipped == 0; }
};

// g(dali(q)) == ceil(|q|) + k for every q = n/2^k, k <= 6, |q| <= 8.
SuiteResult verify_canonical_birthdays(FormStore& store, const SuiteOptions& options);

// g(x + y) == g(x) + g(y) and g(x - y) == g(x) + g(y) on random pairs (default 200)
// of canonical and non-canonical forms born on day 8 or earlier.
SuiteResult verify_sum_birthdays(FormStore& store, const SuiteOptions& options);

// Every product-table cell at or under the ceiling, multiplied with canonical
// and non-canonical operands of the right generations.
SuiteResult verify_product_birthdays(FormStore& store, const SuiteOptions& options);

// g(xy) <= 3^(g(x) + g(y)) on the same products.
SuiteResult verify_weak_product_bound(FormStore& store, const SuiteOptions& options);

// Commutativity, associativity, distributivity, identities and the value
// homomorphism on random samples (default 100) born on day 5 or earlier.
SuiteResult verify_algebraic_laws(FormStore& store, const SuiteOptions& options);

// Dispatch by CLI name: lemma1, thm1, thm2, gonshor, laws.
// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, FormStore& store, const SuiteOptions& options);

struct ProductCheck {
  std::string x_recipe;
  std::string y_recipe;
  MultiplicationReport report;
};

struct ProductCell {
  CellReport cell;
  std::vector<ProductCheck> checks;
  bool canonical_pair = false;     // at least one all-canonical pair was multiplied
  bool noncanonical_pair = false;  // at least one pair with a non-canonical operand
};

// Row-major over 0 <= n, m <= max_generation. Cells above the ceiling, or whose
// products overrun cell_budget, come back recurrence-only.
std::vector<ProductCell> product_cells(FormStore& store, const SuiteOptions& options);

}  // namespace surreal
