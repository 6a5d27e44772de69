#include "lac/random.hpp"

#include <algorithm>
#include <numeric>

namespace lac {

std::uint64_t trial_seed(std::uint64_t seed, std::string_view item, std::string_view fixture, int trial) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (int i = 0; i < 8; ++i) mix((seed >> (8 * i)) & 0xff);
  for (char c : item) mix(std::uint8_t(c));
  mix(0);
  for (char c : fixture) mix(std::uint8_t(c));
  mix(0);
  for (int i = 0; i < 4; ++i) mix((std::uint32_t(trial) >> (8 * i)) & 0xff);
  return h;
}

int Gen::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Poly Gen::poly(std::size_t vars) {
  Poly p;
  const int terms = uniform(1, params_.max_terms);
  for (int t = 0; t < terms; ++t) {
    int c = uniform(1, params_.coef_bound) * (uniform(0, 1) ? 1 : -1);
    Monomial m;
    if (vars > 0) {
      int deg = uniform(0, params_.max_degree);
      for (int d = 0; d < deg; ++d) ++m.exp[uniform(0, int(vars) - 1)];
    }
    p += Poly::monomial(m, Rational(c));
  }
  return p;
}

Tensor Gen::tensor(const AlgebroidPtr& owner, Kind kind, int degree) {
  const int m = int(owner->rank());
  Tensor t(owner, kind, degree);
  if (kind != Kind::Sym && kind != Kind::Mixed && degree > m) return t;
  if (kind == Kind::Mixed && degree > m) return t;
  const int keys = uniform(1, params_.max_keys);
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  for (int k = 0; k < keys; ++k) {
    std::vector<int> idx;
    if (kind == Kind::Sym) {
      for (int i = 0; i < degree; ++i) idx.push_back(uniform(0, m - 1));
    } else {
      std::shuffle(pool.begin(), pool.end(), rng_);
      idx.assign(pool.begin(), pool.begin() + degree);
    }
    int fiber = kind == Kind::Mixed ? uniform(0, m - 1) : -1;
    t.add(idx, fiber, poly(owner));
  }
  return t;
}

}  // namespace lac
