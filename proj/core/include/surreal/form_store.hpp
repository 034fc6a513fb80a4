#pragma once

// Hash-consed storage of finite surreal forms.
//
// - A form {L | R} is a node whose sets hold ids of older nodes.
// - Sets are sorted by id and deduplicated, so structural identity is id equality.
// - Nodes are never freed; memo caches key on ids.
// - Single-writer contract: calls that may create nodes or fill caches (every
//   operation in this library) must be serialized by the caller. Reading nodes
//   that already exist is safe from any number of threads while no writer runs.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "surreal/dyadic.hpp"

namespace surreal {

struct FormId {
  std::uint32_t index = 0;

  friend constexpr bool operator==(FormId, FormId) = default;
  friend constexpr auto operator<=>(FormId, FormId) = default;
};

std::ostream& operator<<(std::ostream& os, FormId id);

using Generation = std::uint64_t;

struct FormNode {
  std::vector<FormId> left;
  std::vector<FormId> right;
  // 0 for {phi|phi}, else 1 + the largest parent generation; filled at interning.
  Generation generation = 0;
};

// What to do once the memo caches hold max_cache_entries entries.
enum class CacheOverflow {
  fail_fast,   // throw CacheLimitExceeded
  evict_none,  // keep every cached entry, stop caching new results
};

struct Limits {
  std::size_t max_cache_entries = 0;  // 0: unbounded
  CacheOverflow on_cache_overflow = CacheOverflow::fail_fast;
  std::size_t max_depth = 20000;
  // Unsafe when false: games can then be interned and the order is no longer total.
  bool validate_numeric = true;
};

namespace detail {

struct PairHash {
  std::size_t operator()(std::uint64_t key) const {
    // splitmix64 finalizer
    key ^= key >> 30;
    key *= 0xbf58476d1ce4e5b9ULL;
    key ^= key >> 27;
    key *= 0x94d049bb133111ebULL;
    key ^= key >> 31;
    return static_cast<std::size_t>(key);
  }
};

inline std::uint64_t ordered_key(FormId a, FormId b) {
  return (std::uint64_t{a.index} << 32) | b.index;
}

inline std::uint64_t unordered_key(FormId a, FormId b) {
  return a.index <= b.index ? ordered_key(a, b) : ordered_key(b, a);
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const;
};

}  // namespace detail

class FormStore {
 public:
  FormStore() : FormStore(Limits{}) {}
  explicit FormStore(Limits limits);

  FormStore(const FormStore&) = delete;
  FormStore& operator=(const FormStore&) = delete;

  // Interns {left | right}. Throws NotANumber if some r in right is <= some
  // l in left (unless numeric validation is disabled).
  FormId make_form(std::vector<FormId> left, std::vector<FormId> right);

  // Same, minus the numeric check. For callers that have already checked the
  // condition some other way (arithmetic compares member values).
  FormId make_form_unchecked(std::vector<FormId> left, std::vector<FormId> right);

  FormId zero() const { return FormId{0}; }

  const FormNode& node(FormId id) const { return nodes_.at(id.index); }
  std::span<const FormId> left(FormId id) const { return node(id).left; }
  std::span<const FormId> right(FormId id) const { return node(id).right; }
  Generation generation(FormId id) const { return node(id).generation; }

  // Union of the left and right sets, sorted by id.
  std::vector<FormId> parents(FormId id) const;

  bool contains(FormId id) const { return id.index < nodes_.size(); }
  std::size_t size() const { return nodes_.size(); }

  // Every id reachable from root (root included), ascending.
  std::vector<FormId> reachable(FormId root) const;

  const Limits& limits() const { return limits_; }
  void set_limits(const Limits& limits) { limits_ = limits; }

  // Long computations throw BudgetExceeded once the deadline has passed.
  void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline) {
    deadline_ = deadline;
  }
  void set_time_budget(std::chrono::milliseconds budget) {
    deadline_ = std::chrono::steady_clock::now() + budget;
  }
  void clear_deadline() { deadline_.reset(); }

  struct Caches {
    std::unordered_map<std::uint64_t, bool, detail::PairHash> leq;
    std::unordered_map<std::uint64_t, FormId, detail::PairHash> add;
    std::unordered_map<std::uint64_t, FormId, detail::PairHash> mul;
    std::vector<std::optional<FormId>> negate;
    std::vector<std::optional<Dyadic>> value;
    std::map<Dyadic, FormId> dali;

    std::size_t entries() const {
      return leq.size() + add.size() + mul.size() + dali.size() + negate_entries + value_entries;
    }
    std::size_t negate_entries = 0;
    std::size_t value_entries = 0;
  };

  const Caches& caches() const { return caches_; }
  Caches& caches() { return caches_; }

  // False when the cache is full under evict_none; throws under fail_fast.
  bool may_cache();

  // Called on entry of every recursive operation: enforces the depth limit
  // and, every few thousand calls, the deadline.
  class Frame {
   public:
    explicit Frame(FormStore& store);
    ~Frame() { --store_.depth_; }
    Frame(const Frame&) = delete;
    Frame& operator=(const Frame&) = delete;

   private:
    FormStore& store_;
  };

 private:
  FormId intern(std::vector<FormId> left, std::vector<FormId> right);
  void check_deadline();

  Limits limits_;
  std::deque<FormNode> nodes_;  // deque: references stay valid as nodes are appended
  std::unordered_map<std::vector<std::uint32_t>, FormId, detail::KeyHash> interned_;
  Caches caches_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t depth_ = 0;
  std::uint32_t ticks_ = 0;
};

}  // namespace surreal

template <>
struct std::hash<surreal::FormId> {
  std::size_t operator()(surreal::FormId id) const { return std::hash<std::uint32_t>{}(id.index); }
};
