#include "surreal/arithmetic.hpp"

#include <optional>
#include <string>

#include "surreal/canonical.hpp"
#include "surreal/error.hpp"

namespace surreal {

namespace {

// Results of add and mul are numbers by theorem; a rejection here is a bug.
// Every member is already a number, so on those leq agrees with value order and
// max v(L) < min v(R) is the numeric condition. Pairwise leq on product members
// was hundreds of times slower.
FormId make_result(FormStore& store, const char* op, std::vector<FormId> left,
                   std::vector<FormId> right) {
  if (store.limits().validate_numeric && !left.empty() && !right.empty()) {
    std::optional<Dyadic> lower;
    for (FormId l : left) {
      Dyadic v = value_of(store, l);
      if (!lower || v > *lower) lower = std::move(v);
    }
    for (FormId r : right) {
      if (value_of(store, r) <= *lower) {
        throw InternalError(std::string(op) + " produced a non-numeric form: right member " +
                            std::to_string(r.index) + " <= " + lower->to_string());
      }
    }
  }
  return store.make_form_unchecked(std::move(left), std::move(right));
}

}  // namespace

FormId add(FormStore& store, FormId x, FormId y) {
  const std::uint64_t key = detail::unordered_key(x, y);
  if (auto it = store.caches().add.find(key); it != store.caches().add.end()) return it->second;

  FormStore::Frame frame(store);
  std::vector<FormId> left;
  std::vector<FormId> right;
  for (FormId xl : store.left(x)) left.push_back(add(store, xl, y));
  for (FormId yl : store.left(y)) left.push_back(add(store, x, yl));
  for (FormId xr : store.right(x)) right.push_back(add(store, xr, y));
  for (FormId yr : store.right(y)) right.push_back(add(store, x, yr));

  FormId result = make_result(store, "add", std::move(left), std::move(right));
  if (store.may_cache()) store.caches().add.emplace(key, result);
  return result;
}

FormId negate(FormStore& store, FormId x) {
  auto& memo = store.caches().negate;
  if (x.index < memo.size() && memo[x.index]) return *memo[x.index];

  FormStore::Frame frame(store);
  std::vector<FormId> left;
  std::vector<FormId> right;
  for (FormId xr : store.right(x)) left.push_back(negate(store, xr));
  for (FormId xl : store.left(x)) right.push_back(negate(store, xl));

  FormId result = make_result(store, "negate", std::move(left), std::move(right));
  if (store.may_cache()) {
    auto& cache = store.caches();
    if (cache.negate.size() < store.size()) cache.negate.resize(store.size());
    cache.negate[x.index] = result;
    cache.negate[result.index] = x;
    cache.negate_entries += 2;
  }
  return result;
}

FormId sub(FormStore& store, FormId x, FormId y) { return add(store, x, negate(store, y)); }

FormId mul(FormStore& store, FormId x, FormId y) {
  const std::uint64_t key = detail::unordered_key(x, y);
  if (auto it = store.caches().mul.find(key); it != store.caches().mul.end()) return it->second;

  FormStore::Frame frame(store);
  // a y + x b - a b
  auto term = [&](FormId a, FormId b) {
    FormId ay = mul(store, a, y);
    FormId xb = mul(store, x, b);
    FormId ab = mul(store, a, b);
    return sub(store, add(store, ay, xb), ab);
  };

  std::vector<FormId> left;
  std::vector<FormId> right;
  for (FormId xl : store.left(x)) {
    for (FormId yl : store.left(y)) left.push_back(term(xl, yl));
  }
  for (FormId xr : store.right(x)) {
    for (FormId yr : store.right(y)) left.push_back(term(xr, yr));
  }
  for (FormId xl : store.left(x)) {
    for (FormId yr : store.right(y)) right.push_back(term(xl, yr));
  }
  for (FormId xr : store.right(x)) {
    for (FormId yl : store.left(y)) right.push_back(term(xr, yl));
  }

  FormId result = make_result(store, "mul", std::move(left), std::move(right));
  if (store.may_cache()) store.caches().mul.emplace(key, result);
  return result;
}

}  // namespace surreal
