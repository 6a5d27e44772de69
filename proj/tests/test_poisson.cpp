#include "helpers.hpp"
#include "lac/poisson.hpp"

using namespace lac;
using namespace lac::test;
using K = Kind;

TEST_CASE("poisson structures") {
  auto xp = canonical_poisson({"x"});
  const auto& can = xp->canonical;
  CHECK(poisson_bracket(*xp, P(can, "p_x"), P(can, "x")) == Poly(1));
  auto so3 = so3_algebroid()->linear_poisson();
  CHECK(to_string(so3->P) == "xi_3*∂xi_1∧∂xi_2 - xi_2*∂xi_1∧∂xi_3 + xi_1*∂xi_2∧∂xi_3");
  CHECK(poisson_bracket(*so3, P(so3->canonical, "xi_1"), P(so3->canonical, "xi_2")) == P(so3->canonical, "xi_3"));

  auto bad = canon({"x1", "x2", "x3"});
  try {
    build_poisson(T(bad, K::MultiVector, 2, {{"1,2", "1"}, {"1,3", "x1"}}));
    FAIL("expected NotPoisson");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPoisson);
    CHECK(e.witness() == std::vector<int>{1, 2, 3});
  }
}

TEST_CASE("cotangent algebroid") {
  auto xp = canonical_poisson({"x"});
  const auto& ct = cotangent_algebroid(*xp);
  CHECK(ct->bracket(0, 1).empty());
  CHECK(ct->anchor(1, 0) == Poly(1));  // P̃(dp) = ∂x
  auto so3 = so3_algebroid()->linear_poisson();
  CHECK(so3->cotangent->c(0, 1, 2) == Poly(1));
}

TEST_CASE("lambda and R") {
  auto xp = canonical_poisson({"x"});
  const auto& can = xp->canonical;
  CHECK(lambda_P(*xp, fn(can, "x*p_x")) == fn(can, "x*p_x", K::MultiVector));
  CHECK(lambda_P(*xp, T(can, K::Form, 1, {{"1", "1"}})) == T(can, K::MultiVector, 1, {{"2", "-1"}}));
  Tensor dxdp = T(can, K::Form, 2, {{"1,2", "1"}});
  CHECK(lambda_P(*xp, dxdp) == wedge(xp->sharp[0], xp->sharp[1]));
  // R(dx∧dp) = dp⊗P̃(dx) - dx⊗P̃(dp)
  CHECK(R_P(*xp, dxdp) == T(can, K::Mixed, 1, {{"2|2", "-1"}, {"1|1", "-1"}}));
  CHECK(R_P(*xp, fn(can, "x")).is_zero());
  Tensor back = lambda_P(*xp, lambda_P(*xp, dxdp), LambdaMode::Inverse);
  CHECK(back == dxdp);
}

TEST_CASE("koszul-schouten and extended bracket") {
  auto xp = canonical_poisson({"x"});
  const auto& can = xp->canonical;
  Tensor dp = T(can, K::Form, 1, {{"2", "1"}});
  CHECK(koszul_schouten(*xp, dp, fn(can, "x")) == fn(can, "1"));
  Tensor f = fn(can, "x^2*p_x"), g = fn(can, "p_x^2 + x");
  CHECK(extended_bracket(*xp, f, g) == Tensor::function(can, K::Form, poisson_bracket(*xp, f.scalar(), g.scalar())));
  CHECK(extended_bracket(*xp, T(can, K::Form, 1, {{"1", "1"}}), fn(can, "p_x")).is_zero());
  CHECK(koszul_schouten(*xp, d_tau(f), d_tau(g)) == d_tau(extended_bracket(*xp, f, g)));
}
