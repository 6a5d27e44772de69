#pragma once

// The fixture corpus the suites run over.

#include <string>
#include <vector>

#include "lac/model.hpp"

namespace lac {

struct AlgebroidFixture {
  std::string name;
  AlgebroidPtr algebroid;
};

struct PoissonFixture {
  std::string name;
  PoissonPtr poisson;
};

struct Corpus {
  std::vector<AlgebroidFixture> algebroids;
  std::vector<PoissonFixture> poisson;

  AlgebroidPtr algebroid(const std::string& name) const;
  PoissonPtr poisson_structure(const std::string& name) const;
};

AlgebroidPtr so3_algebroid();
// Rank 2 over (x): α(e_a) = ∂x, α(e_b) = x∂x, [e_a, e_b] = (1 - x^2) e_a + x e_b.
AlgebroidPtr rank2_algebroid();
PoissonPtr canonical_poisson(const std::vector<std::string>& base);  // on (base, p_base)

// so3, canonical (x), (x,y), (x,y,z), rank2; canonical Poisson on (x, p_x)
// and (x, y, p_x, p_y); the so(3) linear Poisson structure.
const Corpus& builtin_corpus();
// Every algebroid and Poisson structure of a model, sorted by name.
Corpus corpus_from_model(const Model& m);

// Designed-invalid inputs as model text.
std::string broken_anchor_model();
std::string broken_jacobi_model();
std::string not_poisson_model();

}  // namespace lac
