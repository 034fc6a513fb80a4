#include "surreal/form_store.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "surreal/error.hpp"
#include "surreal/ordering.hpp"

namespace surreal {

std::ostream& operator<<(std::ostream& os, FormId id) { return os << '#' << id.index; }

std::size_t detail::KeyHash::operator()(const std::vector<std::uint32_t>& key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
  for (std::uint32_t v : key) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return PairHash{}(h);
}

namespace {

void canonicalize(std::vector<FormId>& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

}  // namespace

FormStore::FormStore(Limits limits) : limits_(limits) { intern({}, {}); }

FormId FormStore::make_form(std::vector<FormId> left, std::vector<FormId> right) {
  for (const auto* set : {&left, &right}) {
    for (FormId id : *set) {
      if (!contains(id)) throw std::out_of_range("unknown form id " + std::to_string(id.index));
    }
  }
  canonicalize(left);
  canonicalize(right);
  if (limits_.validate_numeric) {
    for (FormId l : left) {
      for (FormId r : right) {
        if (leq(*this, r, l)) {
          throw NotANumber("left member " + std::to_string(l.index) + " >= right member " +
                           std::to_string(r.index));
        }
      }
    }
  }
  return intern(std::move(left), std::move(right));
}

FormId FormStore::make_form_unchecked(std::vector<FormId> left, std::vector<FormId> right) {
  for (const auto* set : {&left, &right}) {
    for (FormId id : *set) {
      if (!contains(id)) throw std::out_of_range("unknown form id " + std::to_string(id.index));
    }
  }
  canonicalize(left);
  canonicalize(right);
  return intern(std::move(left), std::move(right));
}

FormId FormStore::intern(std::vector<FormId> left, std::vector<FormId> right) {
  std::vector<std::uint32_t> key;
  key.reserve(left.size() + right.size() + 1);
  key.push_back(static_cast<std::uint32_t>(left.size()));
  for (FormId id : left) key.push_back(id.index);
  for (FormId id : right) key.push_back(id.index);

  auto [it, inserted] = interned_.try_emplace(std::move(key), FormId{0});
  if (!inserted) return it->second;

  Generation generation = 0;
  bool has_parent = false;
  for (const auto* set : {&left, &right}) {
    for (FormId id : *set) {
      generation = std::max(generation, nodes_[id.index].generation);
      has_parent = true;
    }
  }
  if (has_parent) ++generation;

  FormId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(FormNode{std::move(left), std::move(right), generation});
  it->second = id;
  return id;
}

std::vector<FormId> FormStore::parents(FormId id) const {
  const FormNode& n = node(id);
  std::vector<FormId> out;
  out.reserve(n.left.size() + n.right.size());
  std::set_union(n.left.begin(), n.left.end(), n.right.begin(), n.right.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<FormId> FormStore::reachable(FormId root) const {
  std::vector<bool> seen(root.index + 1, false);
  std::vector<FormId> stack{root};
  seen[root.index] = true;
  std::vector<FormId> out;
  while (!stack.empty()) {
    FormId id = stack.back();
    stack.pop_back();
    out.push_back(id);
    const FormNode& n = node(id);
    for (const auto* set : {&n.left, &n.right}) {
      for (FormId p : *set) {
        if (!seen[p.index]) {
          seen[p.index] = true;
          stack.push_back(p);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FormStore::may_cache() {
  if (limits_.max_cache_entries == 0 || caches_.entries() < limits_.max_cache_entries) {
    return true;
  }
  if (limits_.on_cache_overflow == CacheOverflow::evict_none) return false;
  throw CacheLimitExceeded("memo caches reached " + std::to_string(limits_.max_cache_entries) +
                           " entries");
}

void FormStore::check_deadline() {
  if (deadline_ && std::chrono::steady_clock::now() > *deadline_) {
    throw BudgetExceeded("time budget exhausted");
  }
}

FormStore::Frame::Frame(FormStore& store) : store_(store) {
  if (++store_.depth_ > store_.limits_.max_depth) {
    --store_.depth_;
    throw DepthExceeded("recursion depth exceeded " + std::to_string(store_.limits_.max_depth));
  }
  if ((++store_.ticks_ & 0xfff) == 0) {
    try {
      store_.check_deadline();
    } catch (...) {
      --store_.depth_;
      throw;
    }
  }
}

}  // namespace surreal
