#pragma once

// Birthday arithmetic: the product-birthday recurrence, its growth sequences,
// and checks that tie predictions to generations of real forms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surreal/form_store.hpp"

namespace surreal {

using BigNat = boost::multiprecision::cpp_int;

// Table of the product-birthday function
//   f(n, 0) = f(0, m) = 0
//   f(n, m) = f(n, m-1) + f(n-1, m) + f(n-1, m-1) + 1
// filled row by row for 0 <= n <= max_n, 0 <= m <= max_m.
class ProductBirthdayTable {
 public:
  ProductBirthdayTable(std::size_t max_n, std::size_t max_m);

  const BigNat& at(std::size_t n, std::size_t m) const;
  std::size_t max_n() const { return max_n_; }
  std::size_t max_m() const { return max_m_; }

 private:
  std::size_t max_n_;
  std::size_t max_m_;
  std::vector<BigNat> cells_;
};

// Predicted generation of x*y from g(x) = n and g(y) = m.
BigNat product_birthday(std::size_t n, std::size_t m);

// f(n, n): the generation of the square of a form born on day n.
BigNat square_diagonal(std::size_t n);

// Generation of the canonical 2 raised to the n-th power (n >= 1):
// g_1 = 2, g_n = g_{n-1} (g_{n-1} + 1).
BigNat pow2_generation(std::size_t n);

// 3^(g(x) + g(y)), the weak bound on the generation of a product.
BigNat weak_product_bound(Generation gx, Generation gy);

struct AdditionReport {
  Generation gx = 0;
  Generation gy = 0;
  Generation measured = 0;
  bool pass = false;
};

// Checks g(x + y) == g(x) + g(y).
AdditionReport verify_birthday_addition(FormStore& store, FormId x, FormId y);

// Same identity for x - y.
AdditionReport verify_birthday_subtraction(FormStore& store, FormId x, FormId y);

struct MultiplicationReport {
  Generation gx = 0;
  Generation gy = 0;
  BigNat predicted;
  Generation measured = 0;
  bool pass = false;
  bool within_weak_bound = false;
};

inline constexpr std::uint64_t kDefaultProductCeiling = 64;

// Multiplies x and y and compares g(xy) with f(g(x), g(y)).
// Throws FeasibilityExceeded when f(g(x), g(y)) > ceiling; the product is not attempted.
MultiplicationReport verify_birthday_multiplication(FormStore& store, FormId x, FormId y,
                                                    std::uint64_t ceiling = kDefaultProductCeiling);

// One cell of a product-birthday table checked against real products.
enum class CellStatus {
  verified,         // every product tried matched the recurrence
  mismatch,         // some product disagreed
  recurrence_only,  // too large to multiply, or the time budget ran out
};

std::string to_string(CellStatus status);

struct CellReport {
  std::size_t n = 0;
  std::size_t m = 0;
  BigNat predicted;
  std::optional<Generation> measured;  // generation of the last product computed
  std::size_t products = 0;            // how many operand pairs were multiplied
  CellStatus status = CellStatus::recurrence_only;
};

// Columns: n, m, f, measured, status. measured is "-" when nothing was multiplied.
std::string format_rows_text(const std::vector<CellReport>& rows);
std::string format_rows_csv(const std::vector<CellReport>& rows);

}  // namespace surreal
