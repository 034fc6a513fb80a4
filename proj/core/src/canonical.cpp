#include "surreal/canonical.hpp"

#include <algorithm>

namespace surreal {

FormId dali(FormStore& store, const Dyadic& q) {
  auto& memo = store.caches().dali;
  if (auto it = memo.find(q); it != memo.end()) return it->second;

  FormStore::Frame frame(store);
  FormId result;
  if (q.sign() == 0) {
    result = store.zero();
  } else if (q.is_integer() && q.sign() > 0) {
    result = store.make_form({dali(store, q - 1)}, {});
  } else if (q.is_integer()) {
    result = store.make_form({}, {dali(store, q + 1)});
  } else {
    const Integer& n = q.numerator();
    result = store.make_form({dali(store, Dyadic(n - 1, q.exponent()))},
                             {dali(store, Dyadic(n + 1, q.exponent()))});
  }
  if (store.may_cache()) memo.emplace(q, result);
  return result;
}

Dyadic simplest_between(const std::optional<Dyadic>& lower, const std::optional<Dyadic>& upper) {
  // Walks the dyadic tree from the root; the first node inside the interval
  // is the one with the smallest birthday.
  if (upper && *upper <= 0) {
    std::optional<Dyadic> flipped_upper;
    if (lower) flipped_upper = -*lower;
    return -simplest_between(-*upper, flipped_upper);
  }
  if (!lower || *lower < 0) return Dyadic(0);

  // lower >= 0: the smallest integer above lower is the simplest integer candidate.
  Integer m = lower->floor() + 1;
  Dyadic candidate(m, 0);
  if (!upper || candidate < *upper) return candidate;

  Dyadic lo(m - 1, 0);
  Dyadic hi(m, 0);
  for (;;) {
    Dyadic mid = Dyadic::midpoint(lo, hi);
    if (mid <= *lower) {
      lo = mid;
    } else if (mid >= *upper) {
      hi = mid;
    } else {
      return mid;
    }
  }
}

Dyadic value_of(FormStore& store, FormId x) {
  auto& memo = store.caches().value;
  if (x.index < memo.size() && memo[x.index]) return *memo[x.index];

  FormStore::Frame frame(store);
  std::optional<Dyadic> lower;
  for (FormId l : store.left(x)) {
    Dyadic v = value_of(store, l);
    if (!lower || v > *lower) lower = std::move(v);
  }
  std::optional<Dyadic> upper;
  for (FormId r : store.right(x)) {
    Dyadic v = value_of(store, r);
    if (!upper || v < *upper) upper = std::move(v);
  }
  Dyadic result = simplest_between(lower, upper);

  if (store.may_cache()) {
    auto& cache = store.caches();
    if (cache.value.size() <= x.index) cache.value.resize(store.size());
    cache.value[x.index] = result;
    ++cache.value_entries;
  }
  return result;
}

bool is_canonical(FormStore& store, FormId x) { return dali(store, value_of(store, x)) == x; }

}  // namespace surreal
