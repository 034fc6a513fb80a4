#include "surreal/birthday.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "surreal/arithmetic.hpp"
#include "surreal/error.hpp"

namespace surreal {

ProductBirthdayTable::ProductBirthdayTable(std::size_t max_n, std::size_t max_m)
    : max_n_(max_n), max_m_(max_m), cells_((max_n + 1) * (max_m + 1)) {
  const std::size_t width = max_m + 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t m = 1; m <= max_m; ++m) {
      cells_[n * width + m] = cells_[n * width + m - 1] + cells_[(n - 1) * width + m] +
                              cells_[(n - 1) * width + m - 1] + 1;
    }
  }
}

const BigNat& ProductBirthdayTable::at(std::size_t n, std::size_t m) const {
  if (n > max_n_ || m > max_m_) throw std::out_of_range("product birthday table index");
  return cells_[n * (max_m_ + 1) + m];
}

BigNat product_birthday(std::size_t n, std::size_t m) {
  // Only the smaller dimension needs a full row.
  if (n > m) std::swap(n, m);
  std::vector<BigNat> row(m + 1);
  std::vector<BigNat> prev(m + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    std::swap(row, prev);
    row[0] = 0;
    for (std::size_t j = 1; j <= m; ++j) row[j] = row[j - 1] + prev[j] + prev[j - 1] + 1;
  }
  return n == 0 ? BigNat(0) : row[m];
}

BigNat square_diagonal(std::size_t n) { return product_birthday(n, n); }

BigNat pow2_generation(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pow2_generation needs n >= 1");
  BigNat g = 2;
  for (std::size_t i = 2; i <= n; ++i) g = g * (g + 1);
  return g;
}

BigNat weak_product_bound(Generation gx, Generation gy) {
  return boost::multiprecision::pow(BigNat(3), static_cast<unsigned>(gx + gy));
}

AdditionReport verify_birthday_addition(FormStore& store, FormId x, FormId y) {
  AdditionReport r;
  r.gx = store.generation(x);
  r.gy = store.generation(y);
  r.measured = store.generation(add(store, x, y));
  r.pass = r.measured == r.gx + r.gy;
  return r;
}

AdditionReport verify_birthday_subtraction(FormStore& store, FormId x, FormId y) {
  AdditionReport r;
  r.gx = store.generation(x);
  r.gy = store.generation(y);
  r.measured = store.generation(sub(store, x, y));
  r.pass = r.measured == r.gx + r.gy;
  return r;
}

MultiplicationReport verify_birthday_multiplication(FormStore& store, FormId x, FormId y,
                                                    std::uint64_t ceiling) {
  MultiplicationReport r;
  r.gx = store.generation(x);
  r.gy = store.generation(y);
  r.predicted = product_birthday(r.gx, r.gy);
  if (r.predicted > ceiling) {
    throw FeasibilityExceeded("predicted generation " + r.predicted.str() + " exceeds ceiling " +
                              std::to_string(ceiling));
  }
  r.measured = store.generation(mul(store, x, y));
  r.pass = BigNat(r.measured) == r.predicted;
  r.within_weak_bound = BigNat(r.measured) <= weak_product_bound(r.gx, r.gy);
  return r;
}

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::verified:
      return "verified";
    case CellStatus::mismatch:
      return "MISMATCH";
    case CellStatus::recurrence_only:
      return "recurrence-only";
  }
  return "?";
}

std::string format_rows_text(const std::vector<CellReport>& rows) {
  std::ostringstream out;
  out << std::setw(3) << "n" << std::setw(4) << "m" << std::setw(10) << "f(n,m)" << std::setw(10)
      << "measured" << "  status\n";
  for (const auto& row : rows) {
    out << std::setw(3) << row.n << std::setw(4) << row.m << std::setw(10) << row.predicted.str()
        << std::setw(10) << (row.measured ? std::to_string(*row.measured) : "-") << "  "
        << to_string(row.status) << '\n';
  }
  return out.str();
}

std::string format_rows_csv(const std::vector<CellReport>& rows) {
  std::ostringstream out;
  out << "n,m,f,measured,status\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.m << ',' << row.predicted.str() << ','
        << (row.measured ? std::to_string(*row.measured) : "") << ',' << to_string(row.status)
        << '\n';
  }
  return out.str();
}

}  // namespace surreal
