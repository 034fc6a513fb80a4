#include <doctest.h>

#include "oracles.hpp"
#include "surreal/arithmetic.hpp"
#include "surreal/canonical.hpp"
#include "surreal/ordering.hpp"
#include "surreal/sampler.hpp"

using namespace surreal;

namespace {

std::vector<Sample> samples(FormStore& s, std::uint64_t seed, std::size_t n, Generation max_gen) {
  FormSampler sampler(s, seed);
  std::vector<Sample> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(sampler.up_to(max_gen));
  return out;
}

}  // namespace

TEST_SUITE("ordering") {

TEST_CASE("-1 <= 0 <= 1") {
  FormStore s;
  CHECK(leq(s, dali(s, -1), s.zero()));
  CHECK(leq(s, s.zero(), dali(s, 1)));
  CHECK_FALSE(leq(s, dali(s, 1), s.zero()));
  CHECK(lt(s, dali(s, -1), dali(s, 1)));
  CHECK(gt(s, dali(s, 1), dali(s, -1)));
  CHECK(geq(s, dali(s, 1), dali(s, 1)));
}

TEST_CASE("3/4 is not <= 1/2") {
  FormStore s;
  CHECK_FALSE(leq(s, dali(s, Dyadic(3, 2)), dali(s, Dyadic(1, 1))));
  CHECK(leq(s, dali(s, Dyadic(1, 1)), dali(s, Dyadic(3, 2))));
}

TEST_CASE("equivalence versus identity") {
  FormStore s;
  FormId x = s.make_form({dali(s, -1)}, {dali(s, 1)});
  CHECK(equiv(s, x, s.zero()));
  CHECK_FALSE(identical(x, s.zero()));
  CHECK_FALSE(equiv(s, dali(s, 1), s.zero()));
  CHECK(identical(s.zero(), s.zero()));
  FormId sum = add(s, dali(s, 1), dali(s, Dyadic(1, 1)));
  CHECK(equiv(s, sum, dali(s, Dyadic(3, 1))));
  CHECK_FALSE(identical(sum, dali(s, Dyadic(3, 1))));
}

TEST_CASE("x + y is identical to y + x") {
  FormStore s;
  auto xs = samples(s, 11, 100, 5);
  auto ys = samples(s, 12, 100, 5);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(identical(add(s, xs[i].form, ys[i].form), add(s, ys[i].form, xs[i].form)));
  }
}

TEST_CASE("agrees with the values of the simplicity oracle") {
  FormStore s;
  oracle::DayEnumeration days(10);
  std::map<std::uint32_t, Dyadic> memo;
  auto xs = samples(s, 3, 60, 6);
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      Dyadic va = oracle::brute_value(s, a.form, days, memo);
      Dyadic vb = oracle::brute_value(s, b.form, days, memo);
      CHECK(leq(s, a.form, b.form) == (va <= vb));
    }
  }
}

TEST_CASE("reflexive, total, transitive") {
  FormStore s;
  auto xs = samples(s, 5, 30, 5);
  for (const auto& a : xs) {
    CHECK(leq(s, a.form, a.form));
    CHECK(equiv(s, a.form, a.form));
    for (const auto& b : xs) {
      CHECK((leq(s, a.form, b.form) || leq(s, b.form, a.form)));
      CHECK(equiv(s, a.form, b.form) == equiv(s, b.form, a.form));
      for (const auto& c : xs) {
        if (leq(s, a.form, b.form) && leq(s, b.form, c.form)) CHECK(leq(s, a.form, c.form));
        if (equiv(s, a.form, b.form) && equiv(s, b.form, c.form)) CHECK(equiv(s, a.form, c.form));
      }
    }
  }
}

TEST_CASE("reflexive on every node of a product") {
  FormStore s;
  FormId x = mul(s, dali(s, 2), dali(s, 3));
  for (FormId id : s.reachable(x)) CHECK(leq(s, id, id));
}

TEST_CASE("canonical forms are ordered like their values") {
  FormStore s;
  oracle::DayEnumeration days(5);
  std::vector<Dyadic> qs;
  for (std::size_t d = 0; d <= days.days(); ++d) {
    for (const auto& q : days.day(d)) qs.push_back(q);
  }
  for (const auto& p : qs) {
    for (const auto& q : qs) {
      CHECK(leq(s, dali(s, p), dali(s, q)) == (p <= q));
    }
  }
}

TEST_CASE("identical implies equivalent") {
  FormStore s;
  auto xs = samples(s, 9, 40, 4);
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      if (identical(a.form, b.form)) CHECK(equiv(s, a.form, b.form));
    }
  }
}

}
