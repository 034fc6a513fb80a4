#include "surreal/ordering.hpp"

namespace surreal {

bool leq(FormStore& store, FormId x, FormId y) {
  const std::uint64_t key = detail::ordered_key(x, y);
  auto& memo = store.caches().leq;
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  FormStore::Frame frame(store);
  bool result = true;
  for (FormId xl : store.left(x)) {
    if (leq(store, y, xl)) {
      result = false;
      break;
    }
  }
  if (result) {
    for (FormId yr : store.right(y)) {
      if (leq(store, yr, x)) {
        result = false;
        break;
      }
    }
  }
  if (store.may_cache()) memo.emplace(key, result);
  return result;
}

}  // namespace surreal
