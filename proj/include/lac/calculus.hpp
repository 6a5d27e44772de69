#pragma once

// Exterior derivative, Lie differentials and the graded brackets on an
// algebroid. Multivector degrees are raw; shifted degrees (deg - 1) are only
// used inside the sign rules.

#include "lac/parallel.hpp"
#include "lac/tensor.hpp"

namespace lac {

Tensor d_tau(const Tensor& mu);

// L_X = i_X d - (-1)^k d i_X for a multivector X of degree k,
// L_K = i_K d + (-1)^k d i_K for a mixed K of form degree k.
Tensor lie_derivative(const Tensor& w, const Tensor& mu);

Tensor section_bracket(const Tensor& x, const Tensor& y);
// α(X) as a multivector of degree 1 over the canonical algebroid of the base.
Tensor anchor_apply(const Tensor& x);

Tensor schouten(const Tensor& x, const Tensor& y);
// Same bracket with the term pairs of x spread over OpenMP threads.
Tensor schouten(const Tensor& x, const Tensor& y, Exec exec);
Tensor sym_schouten(const Tensor& x, const Tensor& y);
Tensor nr_bracket(const Tensor& k, const Tensor& l);
Tensor fn_bracket(const Tensor& k, const Tensor& l);

inline int parity(int n) { return (n % 2 + 2) % 2 ? -1 : 1; }

}  // namespace lac
