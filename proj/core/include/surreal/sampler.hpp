#pragma once

// Seeded generation of test operands with a known generation.

#include <cstdint>
#include <random>
#include <string>

#include "surreal/dyadic.hpp"
#include "surreal/form_store.hpp"

namespace surreal {

struct Sample {
  FormId form;
  Generation generation = 0;
  // An expression that elaborates to exactly this form.
  std::string recipe;
};

class FormSampler {
 public:
  FormSampler(FormStore& store, std::uint64_t seed) : store_(store), rng_(seed) {}

  // Uniform over the 2^g dyadics whose canonical form is born on day g.
  Dyadic dyadic_with_birthday(Generation g);

  Sample canonical(Generation g);

  // A form born on day g that is not the canonical form of its value. Needs g >= 2,
  // since days 0 and 1 only produce 0 and +-1.
  Sample noncanonical(Generation g);

  // Canonical or non-canonical (when possible) with probability 1/2 each.
  Sample any(Generation g);

  // Generation drawn uniformly from [0, max_generation].
  Sample up_to(Generation max_generation);

  std::mt19937_64& engine() { return rng_; }

 private:
  Sample one_sided(Generation g);
  Sample bracket(Generation g);
  Sample sum(Generation g);
  Sample difference(Generation g);
  Sample shifted_by_zero(Generation g);
  Sample spread(Generation g);

  Generation uniform(Generation lo, Generation hi);

  FormStore& store_;
  std::mt19937_64 rng_;
};

// {dali(-(g-1)) | phi}, or its mirror {phi | dali(g-1)}: value 0, born on day g >= 2,
// with a single parent. Cheap operands for products.
Sample zero_valued_noncanonical(FormStore& store, Generation g, bool mirrored = false);

}  // namespace surreal
