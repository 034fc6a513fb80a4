#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>

#include "oracles.hpp"
#include "surreal/arithmetic.hpp"
#include "surreal/birthday.hpp"
#include "surreal/canonical.hpp"
#include "surreal/error.hpp"
#include "surreal/verify.hpp"

using namespace surreal;

namespace {

// g(x y) for n, m = 0..6, as published.
const int kProductTable[7][7] = {
    {0, 0, 0, 0, 0, 0, 0},        {0, 1, 2, 3, 4, 5, 6},          {0, 2, 6, 12, 20, 30, 42},
    {0, 3, 12, 31, 64, 115, 188}, {0, 4, 20, 64, 160, 340, 644},  {0, 5, 30, 115, 340, 841, 1826},
    {0, 6, 42, 188, 644, 1826, 4494}};

}  // namespace

TEST_SUITE("birthday") {

TEST_CASE("recurrence examples") {
  CHECK(product_birthday(2, 3) == 12);
  CHECK(product_birthday(2, 6) == 42);
  CHECK(product_birthday(3, 3) == 31);
  CHECK(product_birthday(4, 4) == 160);
  CHECK(product_birthday(6, 6) == 4494);
  CHECK(product_birthday(0, 9) == 0);
  CHECK(product_birthday(9, 0) == 0);
}

TEST_CASE("table matches the published grid") {
  ProductBirthdayTable t(6, 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t m = 0; m <= 6; ++m) CHECK(t.at(n, m) == kProductTable[n][m]);
  }
}

TEST_CASE("table fill against plain recursion, symmetric, increasing") {
  ProductBirthdayTable t(40, 40);
  for (std::size_t n = 0; n <= 24; ++n) {
    for (std::size_t m = 0; m <= 24; ++m) CHECK(t.at(n, m) == oracle::f_recursive(n, m));
  }
  for (std::size_t n = 0; n <= 40; ++n) {
    for (std::size_t m = 0; m <= 40; ++m) {
      CHECK(t.at(n, m) == t.at(m, n));
      if (n >= 1 && m >= 1 && m < 40) CHECK(t.at(n, m) < t.at(n, m + 1));
      if (n >= 1 && m >= 1 && n < 40) CHECK(t.at(n, m) < t.at(n + 1, m));
    }
  }
  for (std::size_t m = 0; m <= 40; ++m) {
    CHECK(t.at(1, m) == m);
    CHECK(t.at(2, m) == m * (m + 1));
  }
  CHECK(product_birthday(40, 40) == t.at(40, 40));
}

TEST_CASE("large arguments stay exact") {
  BigNat f = product_birthday(1000, 1000);
  CHECK(f > BigNat(1) << 2000);
  CHECK(product_birthday(1000, 999) == product_birthday(999, 1000));
  CHECK(product_birthday(300, 200) == product_birthday(300, 199) + product_birthday(299, 200) +
                                          product_birthday(299, 199) + 1);
}

TEST_CASE("square diagonal") {
  const int expected[] = {0, 1, 6, 31, 160, 841, 4494};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(square_diagonal(n) == expected[n]);
  CHECK(square_diagonal(7) == oracle::f_recursive(7, 7));
  CHECK(square_diagonal(7) == 24319);
}

TEST_CASE("square diagonal: successive ratios approach 3 + 2 sqrt 2") {
  const double lambda = 3 + 2 * std::sqrt(2.0);
  double previous_gap = 1e9;
  for (std::size_t n = 10; n <= 200; n += 10) {
    double ratio = square_diagonal(n).convert_to<double>() / square_diagonal(n - 1).convert_to<double>();
    double gap = std::abs(ratio - lambda);
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
  CHECK(previous_gap < 0.02);
}

TEST_CASE("square diagonal: asymptotic form within 5% for n = 15..25") {
  const double lambda = 3 + 2 * std::sqrt(2.0);
  const double pi = std::acos(-1.0);
  const double a = std::pow(2.0, -9.0 / 4) * std::sqrt(lambda / pi);
  for (std::size_t n = 15; n <= 25; ++n) {
    double f = square_diagonal(n).convert_to<double>();
    double approx = a * std::pow(lambda, static_cast<double>(n)) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(f / approx - 1) < 0.05);
  }
}

TEST_CASE("powers of two") {
  CHECK(pow2_generation(1) == 2);
  CHECK(pow2_generation(2) == 6);
  CHECK(pow2_generation(3) == 42);
  CHECK(pow2_generation(4) == 1806);
  CHECK(pow2_generation(5) == 3263442);
  for (std::size_t n = 2; n <= 8; ++n) {
    BigNat g = pow2_generation(n - 1);
    CHECK(pow2_generation(n) == g * (g + 1));
  }
  // 2^n = 2 * 2^(n-1), so g_n = f(2, g_{n-1})
  for (std::size_t n = 2; n <= 5; ++n) {
    CHECK(pow2_generation(n) == product_birthday(2, pow2_generation(n - 1).convert_to<std::size_t>()));
  }
  FormStore s;
  CHECK(generation(s, mul(s, dali(s, 2), dali(s, 2))) == 6);
}

TEST_CASE("powers of two: floor(c^(2^n))") {
  using Float = boost::multiprecision::cpp_dec_float_50;
  const Float c("1.597910218031873178338070118157");
  for (std::size_t n = 0; n <= 5; ++n) {
    Float p = pow(c, Float(1ULL << n));
    BigNat expected = n == 0 ? BigNat(1) : pow2_generation(n);
    CHECK(floor(p).convert_to<BigNat>() == expected);
  }
}

TEST_CASE("weak product bound") {
  CHECK(weak_product_bound(0, 0) == 1);
  CHECK(weak_product_bound(2, 3) == 243);
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t m = 0; m <= 12; ++m) CHECK(product_birthday(n, m) <= weak_product_bound(n, m));
  }
}

TEST_CASE("addition reports") {
  FormStore s;
  FormId q = dali(s, Dyadic(3, 2));
  AdditionReport r = verify_birthday_addition(s, q, q);
  CHECK(r.pass);
  CHECK(r.gx == 3);
  CHECK(r.gy == 3);
  CHECK(r.measured == 6);

  FormId x = dali(s, Dyadic(5, 3));
  r = verify_birthday_addition(s, s.zero(), x);
  CHECK(r.pass);
  CHECK(r.measured == generation(s, x));

  // a non-canonical 1/2 born on day 4
  FormId half = s.make_form({dali(s, Dyadic(1, 2))}, {dali(s, Dyadic(3, 2))});
  REQUIRE(value_of(s, half) == Dyadic(1, 1));
  REQUIRE(generation(s, half) == 4);
  r = verify_birthday_addition(s, half, dali(s, 1));
  CHECK(r.pass);
  CHECK(r.measured == 5);

  AdditionReport d = verify_birthday_subtraction(s, half, dali(s, 1));
  CHECK(d.pass);
  CHECK(d.measured == 5);
}

TEST_CASE("multiplication reports") {
  FormStore s;
  MultiplicationReport r = verify_birthday_multiplication(s, dali(s, 2), dali(s, 3));
  CHECK(r.pass);
  CHECK(r.measured == 12);
  CHECK(r.predicted == 12);
  CHECK(r.within_weak_bound);

  FormId x = dali(s, Dyadic(-5, 2));
  r = verify_birthday_multiplication(s, dali(s, 1), x);
  CHECK(r.pass);
  CHECK(r.measured == generation(s, x));

  r = verify_birthday_multiplication(s, dali(s, 3), dali(s, 3));
  CHECK(r.pass);
  CHECK(r.measured == 31);

  CHECK_THROWS_AS(verify_birthday_multiplication(s, dali(s, 3), dali(s, 5)), FeasibilityExceeded);
  CHECK_THROWS_AS(verify_birthday_multiplication(s, dali(s, 3), dali(s, 3), 30), FeasibilityExceeded);
}

TEST_CASE("row formats") {
  std::vector<CellReport> rows(2);
  rows[0].n = 2;
  rows[0].m = 3;
  rows[0].predicted = 12;
  rows[0].measured = 12;
  rows[0].products = 4;
  rows[0].status = CellStatus::verified;
  rows[1].n = 6;
  rows[1].m = 6;
  rows[1].predicted = 4494;
  CHECK(format_rows_csv(rows) == "n,m,f,measured,status\n2,3,12,12,verified\n6,6,4494,,recurrence-only\n");
  std::string text = format_rows_text(rows);
  CHECK(text.find("4494") != std::string::npos);
  CHECK(text.find("recurrence-only") != std::string::npos);
  CHECK(to_string(CellStatus::mismatch) == "MISMATCH");
}

TEST_CASE("product cells up to generation 3") {
  FormStore s;
  SuiteOptions o;
  o.max_generation = 3;
  o.product_ceiling = 31;
  auto cells = product_cells(s, o);
  REQUIRE(cells.size() == 16);
  for (const auto& pc : cells) {
    CAPTURE(pc.cell.n);
    CAPTURE(pc.cell.m);
    CHECK(pc.cell.predicted == kProductTable[pc.cell.n][pc.cell.m]);
    CHECK(pc.cell.status == CellStatus::verified);
    CHECK(pc.canonical_pair);
    if (pc.cell.n >= 2 || pc.cell.m >= 2) CHECK(pc.noncanonical_pair);
    for (const auto& check : pc.checks) {
      CHECK(check.report.pass);
      CHECK(check.report.measured == pc.cell.predicted);
    }
  }
  o.product_ceiling = 12;
  cells = product_cells(s, o);
  CHECK(cells[3 * 4 + 3].cell.status == CellStatus::recurrence_only);
  CHECK(cells[3 * 4 + 3].cell.products == 0);
  CHECK(cells[2 * 4 + 3].cell.status == CellStatus::verified);
}

}
