#include "helpers.hpp"
#include "lac/lifts.hpp"

using namespace lac;
using namespace lac::test;
using K = Kind;

TEST_CASE("algebroid lifts") {
  auto cx = canon({"x"});
  auto ta = cx->tangent();
  CHECK(ta->anchor(0, 1) == Poly(1));  // α(ē) = ∂x_dot
  CHECK(ta->anchor(1, 0) == Poly(1));  // α(ė) = ∂x
  auto so3 = so3_algebroid();
  CHECK(so3->tangent()->c(0, 4, 2) == Poly(1));  // [ē1, ė2] = ē3
  auto ct = cx->cotangent();
  CHECK(ct->anchor(0, 1) == Poly(-1));
  CHECK(ct->anchor(1, 0) == Poly(1));
  CHECK(so3->cotangent()->c(0, 1, 2) == Poly(1));
}

TEST_CASE("vertical and complete lifts") {
  auto cx = canon({"x"});
  CHECK(to_string(vertical_lift_V(T(cx, K::MultiVector, 1, {{"1", "1"}}))) == "ex_bar");
  CHECK(to_string(complete_lift_T(T(cx, K::MultiVector, 1, {{"1", "x"}}))) == "x_dot*ex_bar + x*ex_dot");
  CHECK(to_string(complete_lift_T(fn(cx, "x^2"))) == "2*x*x_dot");
  CHECK(to_string(d_T(T(cx, K::MultiVector, 1, {{"1", "x"}}))) == "x*∂x + x_dot*∂x_dot");
  CHECK(to_string(v_T(T(cx, K::Form, 1, {{"1", "1"}}))) == "dx");
  CHECK(to_string(d_T(T(cx, K::Form, 1, {{"1", "x"}}))) == "x_dot*dx + x*dx_dot");
}

TEST_CASE("cotangent lifts") {
  auto cx = canon({"x"});
  CHECK(iota(T(cx, K::MultiVector, 1, {{"1", "x"}})) == P(cx->dual_canonical(), "x*p_x"));
  CHECK(to_string(vertical_pi(T(cx, K::Form, 1, {{"1", "1"}}))) == "∂p_x");
  CHECK(to_string(vertical_tau(T(cx, K::MultiVector, 1, {{"1", "1"}}))) == "∂y_x");
  CHECK(to_string(cot_complete_G_vec(T(cx, K::MultiVector, 1, {{"1", "1"}}))) == "∂x");
  CHECK(to_string(cot_complete_G_vec(T(cx, K::MultiVector, 1, {{"1", "x"}}))) == "x*∂x - p_x*∂p_x");
  auto so3 = so3_algebroid();
  CHECK(to_string(cot_complete_G_vec(T(so3, K::MultiVector, 1, {{"1", "1"}}))) == "xi_3*∂xi_2 - xi_2*∂xi_3");
  CHECK(to_string(J_map(T(cx, K::Mixed, 1, {{"1|1", "1"}}))) == "-p_x*∂p_x");
  Tensor g = G_map(T(cx, K::Mixed, 1, {{"1|1", "1"}}));
  CHECK(to_string(g) == "∂x∧∂p_x");
  CHECK(to_string(Jstar(T(cx, K::Mixed, 1, {{"1|1", "1"}}))) == "p_x*dx");
  CHECK(to_string(H_map(T(cx, K::Mixed, 0, {{"|1", "1"}}))) == "1⊗∂x");
}

TEST_CASE("tangent poisson") {
  auto xp = canonical_poisson({"x"});
  auto tp = tangent_poisson(*xp);
  CHECK(to_string(tp->P) == "-∂x∧∂p_x_dot + ∂p_x∧∂x_dot");
}
