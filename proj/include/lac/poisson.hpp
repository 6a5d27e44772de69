#pragma once

// Poisson structures on a chart and the bracket machinery on forms.
//
// Pairing: <∂u∧∂v, dα∧dβ> = ∂uα ∂vβ - ∂vα ∂uβ, so for P = Σ_{a<b} P^{ab} ∂a∧∂b
// we get {f, g} = Σ P^{ab} ∂a f ∂b g and P̃(dx^a) = Σ_b P^{ab} ∂b.

#include "lac/calculus.hpp"

namespace lac {

struct PoissonStructure {
  AlgebroidPtr canonical;  // canonical algebroid of the chart; P and all forms live here
  Tensor P;
  std::vector<std::vector<Poly>> matrix;  // matrix[a][b] = P^{ab}
  std::vector<Tensor> sharp;              // P̃(dx^a)
  AlgebroidPtr cotangent;                 // (T*M, [,]_P, P̃), fibers "d"+coord

  const Chart& chart() const { return canonical->chart(); }
};

// Throws NotPoisson with the nonzero trivector [P, P] as residual.
PoissonPtr build_poisson(const Tensor& p);
PoissonPtr build_poisson(const Chart& chart, const Tensor& p);
PoissonPtr make_linear_poisson(const AlgebroidPtr& a);

Poly poisson_bracket(const PoissonStructure& ps, const Poly& f, const Poly& g);
const AlgebroidPtr& cotangent_algebroid(const PoissonStructure& ps);

// Forms on the chart viewed as multisections of the cotangent algebroid, and back.
Tensor to_cotangent(const PoissonStructure& ps, const Tensor& form);
Tensor from_cotangent(const PoissonStructure& ps, const Tensor& mv);

// d_π of the cotangent algebroid acting on multivectors.
Tensor d_pi(const PoissonStructure& ps, const Tensor& x);

Tensor koszul_schouten(const PoissonStructure& ps, const Tensor& mu, const Tensor& nu);

enum class LambdaMode { Plain, Star, Inverse };
// Plain/Star take a form, Inverse takes a multivector (constant invertible P̃ only).
Tensor lambda_P(const PoissonStructure& ps, const Tensor& t, LambdaMode mode = LambdaMode::Plain);
Tensor R_P(const PoissonStructure& ps, const Tensor& mu);
Tensor H_P(const PoissonStructure& ps, const Tensor& mu);  // R_P ∘ d
Tensor G_P(const PoissonStructure& ps, const Tensor& mu);  // Λ_P ∘ d
Tensor extended_bracket(const PoissonStructure& ps, const Tensor& mu, const Tensor& nu);

// Complete lift d_T P on the chart (x, x_dot).
PoissonPtr tangent_poisson(const PoissonStructure& ps);

}  // namespace lac
