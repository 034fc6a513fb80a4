#pragma once

// Canonical (oldest) forms of dyadic rationals, and value recovery.

#include "surreal/dyadic.hpp"
#include "surreal/form_store.hpp"

namespace surreal {

// The Dali construction:
//   0                -> {phi | phi}
//   n > 0 integer    -> {dali(n-1) | phi}
//   n < 0 integer    -> {phi | dali(n+1)}
//   n/2^k, n odd     -> {dali((n-1)/2^k) | dali((n+1)/2^k)}
FormId dali(FormStore& store, const Dyadic& q);

inline Generation generation(const FormStore& store, FormId x) { return store.generation(x); }

// The simplest dyadic strictly above every left value and strictly below
// every right value. Memoized.
Dyadic value_of(FormStore& store, FormId x);

// The simplest dyadic in the open interval (lower, upper); an absent bound is infinite.
Dyadic simplest_between(const std::optional<Dyadic>& lower, const std::optional<Dyadic>& upper);

// x is exactly the canonical form of its own value.
bool is_canonical(FormStore& store, FormId x);

}  // namespace surreal
