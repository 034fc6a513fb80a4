#pragma once

// Conway's order on numeric forms. leq is the primitive; everything else derives from it.

#include "surreal/form_store.hpp"

namespace surreal {

// x <= y iff no left member of x is >= y and no right member of y is <= x.
// Memoized on the ordered pair.
bool leq(FormStore& store, FormId x, FormId y);

inline bool geq(FormStore& store, FormId x, FormId y) { return leq(store, y, x); }
inline bool lt(FormStore& store, FormId x, FormId y) { return !leq(store, y, x); }
inline bool gt(FormStore& store, FormId x, FormId y) { return !leq(store, x, y); }

// Same value.
inline bool equiv(FormStore& store, FormId x, FormId y) {
  return leq(store, x, y) && leq(store, y, x);
}

// Same form.
inline bool identical(FormId x, FormId y) { return x == y; }

}  // namespace surreal
