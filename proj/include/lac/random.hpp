#pragma once

// Seeded random instances for the property suites.

#include <cstdint>
#include <random>
#include <string_view>

#include "lac/tensor.hpp"

namespace lac {

struct GenParams {
  int max_degree = 2;     // total degree of coefficient polynomials
  int max_terms = 3;      // monomials per coefficient
  int max_keys = 3;       // basis elements per tensor
  int coef_bound = 3;     // integer coefficients in [-bound, bound] \ {0}
};

// FNV-1a over (seed, item, fixture, trial): every trial can be replayed alone.
std::uint64_t trial_seed(std::uint64_t seed, std::string_view item, std::string_view fixture, int trial);

class Gen {
 public:
  explicit Gen(std::uint64_t seed, GenParams params = {}) : rng_(seed), params_(params) {}

  int uniform(int lo, int hi);  // inclusive
  // Polynomial in the first `vars` coordinates.
  Poly poly(std::size_t vars);
  Poly poly(const AlgebroidPtr& owner) { return poly(owner->dim()); }
  // Random tensor; mixed tensors take the form degree.
  Tensor tensor(const AlgebroidPtr& owner, Kind kind, int degree);
  Tensor function(const AlgebroidPtr& owner, Kind kind = Kind::Form) {
    return Tensor::function(owner, kind, poly(owner));
  }
  const GenParams& params() const { return params_; }

 private:
  std::mt19937_64 rng_;
  GenParams params_;
};

}  // namespace lac
