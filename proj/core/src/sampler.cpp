#include "surreal/sampler.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "surreal/arithmetic.hpp"
#include "surreal/canonical.hpp"
#include "surreal/error.hpp"

namespace surreal {

namespace {

std::string set_recipe(const std::vector<Sample>& members) {
  if (members.empty()) return "phi";
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != 0) out += ", ";
    out += members[i].recipe;
  }
  return out;
}

Sample form_of(FormStore& store, const std::vector<Sample>& left, const std::vector<Sample>& right) {
  std::vector<FormId> l;
  std::vector<FormId> r;
  for (const auto& s : left) l.push_back(s.form);
  for (const auto& s : right) r.push_back(s.form);
  FormId id = store.make_form(std::move(l), std::move(r));
  return {id, store.generation(id), "{" + set_recipe(left) + " | " + set_recipe(right) + "}"};
}

}  // namespace

Generation FormSampler::uniform(Generation lo, Generation hi) {
  return std::uniform_int_distribution<Generation>(lo, hi)(rng_);
}

Dyadic FormSampler::dyadic_with_birthday(Generation g) {
  // Random descent through the dyadic tree; each level is one day.
  Dyadic value(0);
  std::optional<Dyadic> lo;
  std::optional<Dyadic> hi;
  for (Generation day = 0; day < g; ++day) {
    if (rng_() & 1) {
      Dyadic next = hi ? Dyadic::midpoint(value, *hi) : value + 1;
      lo = value;
      value = std::move(next);
    } else {
      Dyadic next = lo ? Dyadic::midpoint(*lo, value) : value - 1;
      hi = value;
      value = std::move(next);
    }
  }
  return value;
}

Sample FormSampler::canonical(Generation g) {
  Dyadic q = dyadic_with_birthday(g);
  FormId id = dali(store_, q);
  return {id, store_.generation(id), "dali(" + q.to_string() + ")"};
}

Sample FormSampler::any(Generation g) {
  if (g < 2 || (rng_() & 1)) return canonical(g);
  return noncanonical(g);
}

Sample FormSampler::up_to(Generation max_generation) { return any(uniform(0, max_generation)); }

Sample FormSampler::one_sided(Generation g) {
  Sample p = canonical(g - 1);
  if (rng_() & 1) return form_of(store_, {p}, {});
  return form_of(store_, {}, {p});
}

Sample FormSampler::bracket(Generation g) {
  Sample a = canonical(g - 1);
  Sample b = any(uniform(0, g - 1));
  Dyadic va = value_of(store_, a.form);
  Dyadic vb = value_of(store_, b.form);
  if (va == vb) return one_sided(g);
  if (va < vb) return form_of(store_, {a}, {b});
  return form_of(store_, {b}, {a});
}

Sample FormSampler::sum(Generation g) {
  Generation g1 = uniform(1, g - 1);
  Sample u = any(g1);
  Sample v = any(g - g1);
  FormId id = add(store_, u.form, v.form);
  return {id, store_.generation(id), "(" + u.recipe + " + " + v.recipe + ")"};
}

Sample FormSampler::difference(Generation g) {
  Generation g1 = uniform(1, g - 1);
  Sample u = any(g1);
  Sample v = any(g - g1);
  FormId id = sub(store_, u.form, v.form);
  return {id, store_.generation(id), "(" + u.recipe + " - " + v.recipe + ")"};
}

Sample FormSampler::shifted_by_zero(Generation g) {
  static constexpr std::array<const char*, 3> kZeros = {"{dali(-1) | dali(1)}", "{dali(-1) | phi}",
                                                        "{phi | dali(1)}"};
  std::size_t which = uniform(0, kZeros.size() - 1);
  FormId minus_one = dali(store_, -1);
  FormId one = dali(store_, 1);
  FormId zero_form = which == 0   ? store_.make_form({minus_one}, {one})
                     : which == 1 ? store_.make_form({minus_one}, {})
                                  : store_.make_form({}, {one});
  if (g == 2) return {zero_form, store_.generation(zero_form), kZeros[which]};
  Sample x = any(g - 2);
  FormId id = add(store_, x.form, zero_form);
  return {id, store_.generation(id), "(" + x.recipe + " + " + kZeros[which] + ")"};
}

Sample FormSampler::spread(Generation g) {
  std::vector<Sample> members{any(g - 1)};
  std::size_t extra = uniform(1, 2);
  for (std::size_t i = 0; i < extra; ++i) members.push_back(any(uniform(0, g - 1)));

  std::vector<std::pair<Dyadic, Sample>> valued;
  for (auto& s : members) valued.emplace_back(value_of(store_, s.form), std::move(s));
  // Among equal values the youngest comes first and survives the dedup, so the
  // day g-1 member is kept and the result lands on day g.
  std::sort(valued.begin(), valued.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.generation > b.second.generation;
  });
  valued.erase(std::unique(valued.begin(), valued.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               valued.end());

  std::size_t split = uniform(0, valued.size());
  std::vector<Sample> left;
  std::vector<Sample> right;
  for (std::size_t i = 0; i < valued.size(); ++i) {
    (i < split ? left : right).push_back(std::move(valued[i].second));
  }
  return form_of(store_, left, right);
}

Sample FormSampler::noncanonical(Generation g) {
  if (g < 2) throw std::invalid_argument("no non-canonical forms are born before day 2");
  for (int attempt = 0; attempt < 64; ++attempt) {
    Sample s;
    switch (uniform(0, 5)) {
      case 0:
        s = one_sided(g);
        break;
      case 1:
        s = bracket(g);
        break;
      case 2:
        s = sum(g);
        break;
      case 3:
        s = difference(g);
        break;
      case 4:
        s = shifted_by_zero(g);
        break;
      default:
        s = spread(g);
        break;
    }
    if (s.generation != g) {
      throw InternalError("sampler built " + s.recipe + " on day " + std::to_string(s.generation) +
                          ", expected day " + std::to_string(g));
    }
    if (!is_canonical(store_, s.form)) return s;
  }
  return zero_valued_noncanonical(store_, g, rng_() & 1);
}

Sample zero_valued_noncanonical(FormStore& store, Generation g, bool mirrored) {
  if (g < 2) throw std::invalid_argument("no non-canonical forms are born before day 2");
  auto n = static_cast<long long>(g - 1);
  FormId id = mirrored ? store.make_form({}, {dali(store, n)}) : store.make_form({dali(store, -n)}, {});
  std::string recipe = mirrored ? "{phi | dali(" + std::to_string(n) + ")}"
                                : "{dali(" + std::to_string(-n) + ") | phi}";
  return {id, store.generation(id), recipe};
}

}  // namespace surreal
