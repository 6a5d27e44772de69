#pragma once

// Lifts of sections to the tangent lift TE, the dual bundle E* with chart
// (x, ξ) and the total space E with chart (x, y); the flip κ between TE of a
// canonical algebroid and T(TM); the canonical-case maps J* and H.

#include "lac/poisson.hpp"

namespace lac {

enum class Provenance { Plain, V, T, Vpi, Vtau, Iota, G, J, Gmix, Kappa, Alpha, Jstar, H };
std::string_view to_string(Provenance p);

struct LiftedSection {
  Provenance provenance = Provenance::Plain;
  AlgebroidPtr source;  // algebroid of the input
  Tensor value;
};

// ι(X) on (x, ξ) for a section or symmetric multisection.
Poly iota(const Tensor& x);

// To the tangent lift: forms use index i for the dual of ē_i and m + i for
// the dual of ė_i, so V sends e^{*i} to index m + i and T puts the dotted
// factor at index i.
Tensor vertical_lift_V(const Tensor& s);
Tensor complete_lift_T(const Tensor& s);

Tensor vertical_pi(const Tensor& mu);   // e^{*i} -> ∂_{ξ_i}
Tensor vertical_tau(const Tensor& s);   // e_j -> ∂_{y_j}
Tensor cot_complete_G_vec(const Tensor& x);
Tensor J_map(const Tensor& k);

// Both branches of the dual complete lift of a mixed tensor.
struct GBranches {
  Tensor bracket;   // [P, J(K)]
  Tensor explicit_; // G(X)∧V_π(μ) - ι(X) V_π(dμ) on simple tensors
};
GBranches G_map_branches(const Tensor& k);
// Throws Validation when the two branches disagree.
Tensor G_map(const Tensor& k);

// Half swap i <-> i ± n between the tangent lift of a canonical algebroid
// and the canonical algebroid of (x, x_dot). `base` is the canonical
// algebroid; either side is accepted, so kappa∘kappa = id.
Tensor kappa(const AlgebroidPtr& base, const Tensor& t);
Tensor kappa(const Tensor& t);  // from the tangent-lift side
Tensor v_T(const Tensor& s);    // κ∘V
Tensor d_T(const Tensor& s);    // κ∘T

Tensor Jstar(const Tensor& k);
Tensor H_map(const Tensor& k);

enum class Transport { Kappa, Alpha };
// Only V- and T-lifts (or earlier transports) over a canonical algebroid are accepted.
LiftedSection canonical_transport(Transport dir, const LiftedSection& t);
LiftedSection lift(Provenance kind, const Tensor& s);

}  // namespace lac
