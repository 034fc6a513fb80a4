#pragma once

// Conway addition, negation, subtraction and multiplication on forms.
// Results are interned and memoized; sums and products are keyed on the
// unordered operand pair since both definitions are symmetric.

#include "surreal/form_store.hpp"

namespace surreal {

// {X_L + y, x + Y_L | X_R + y, x + Y_R}
FormId add(FormStore& store, FormId x, FormId y);

// {-X_R | -X_L}
FormId negate(FormStore& store, FormId x);

// x + (-y)
FormId sub(FormStore& store, FormId x, FormId y);

// Left:  x_l y + x y_l - x_l y_l  and  x_r y + x y_r - x_r y_r
// Right: x_l y + x y_r - x_l y_r  and  x_r y + x y_l - x_r y_l
// over all pairs drawn from the named sets.
FormId mul(FormStore& store, FormId x, FormId y);

}  // namespace surreal
