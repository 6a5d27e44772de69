#include "helpers.hpp"
#include "lac/calculus.hpp"

using namespace lac;
using namespace lac::test;
using K = Kind;

TEST_CASE("exterior derivative") {
  auto cx = canon({"x"});
  CHECK(to_string(d_tau(fn(cx, "x^2"))) == "2*x*dx");
  auto so3 = so3_algebroid();
  CHECK(to_string(d_tau(T(so3, K::Form, 1, {{"3", "1"}}))) == "-e*1∧e*2");
  auto cxy = canon({"x", "y"});
  CHECK(d_tau(d_tau(fn(cxy, "x^2*y"))).is_zero());
}

TEST_CASE("lie derivative") {
  auto cx = canon({"x"});
  Tensor ex = T(cx, K::MultiVector, 1, {{"1", "1"}});
  CHECK(lie_derivative(ex, T(cx, K::Form, 1, {{"1", "x"}})) == T(cx, K::Form, 1, {{"1", "1"}}));
  Tensor k = T(cx, K::Mixed, 1, {{"1|1", "1"}});
  CHECK(lie_derivative(k, fn(cx, "x")) == T(cx, K::Form, 1, {{"1", "1"}}));
}

TEST_CASE("section bracket and anchor") {
  auto so3 = so3_algebroid();
  Tensor e1 = T(so3, K::MultiVector, 1, {{"1", "1"}}), e2 = T(so3, K::MultiVector, 1, {{"2", "1"}});
  CHECK(to_string(section_bracket(e1, e2)) == "e3");
  auto cx = canon({"x"});
  CHECK(to_string(section_bracket(T(cx, K::MultiVector, 1, {{"1", "1"}}), T(cx, K::MultiVector, 1, {{"1", "x"}}))) ==
        "∂x");
}

TEST_CASE("schouten examples") {
  auto cx = canon({"x"});
  CHECK(schouten(T(cx, K::MultiVector, 1, {{"1", "x"}}), fn(cx, "x", K::MultiVector)) == fn(cx, "x", K::MultiVector));
  auto cxp = canon({"x", "xi"});
  Tensor p = T(cxp, K::MultiVector, 2, {{"1,2", "-1"}});
  CHECK(schouten(p, p).is_zero());
  auto cxy = canon({"x", "y"});
  Tensor lhs = sym_schouten(T(cxy, K::MultiVector, 1, {{"1", "1"}}), T(cxy, K::Sym, 2, {{"2,2", "x"}}));
  CHECK(lhs == T(cxy, K::Sym, 2, {{"2,2", "1"}}));
}

TEST_CASE("nijenhuis-richardson examples") {
  auto cxy = canon({"x", "y"});
  CHECK(nr_bracket(T(cxy, K::Mixed, 1, {{"1|1", "1"}}), T(cxy, K::Mixed, 1, {{"1|2", "1"}})) ==
        T(cxy, K::Mixed, 1, {{"1|2", "1"}}));
  CHECK(nr_bracket(T(cxy, K::MultiVector, 1, {{"1", "1"}}), T(cxy, K::Mixed, 1, {{"1|2", "1"}})) ==
        T(cxy, K::Mixed, 0, {{"|2", "1"}}));
  Tensor k = T(cxy, K::Mixed, 2, {{"1,2|1", "1"}});
  CHECK(nr_bracket(k, k).is_zero());
}

TEST_CASE("frolicher-nijenhuis examples") {
  auto cx = canon({"x"});
  Tensor n = T(cx, K::Mixed, 1, {{"1|1", "1"}});
  CHECK(fn_bracket(n, n).is_zero());
  auto cxy = canon({"x", "y"});
  CHECK(fn_bracket(T(cxy, K::Mixed, 1, {{"1|2", "1"}}), T(cxy, K::Mixed, 1, {{"2|1", "1"}})).is_zero());
}

TEST_CASE("contractions") {
  auto cx = canon({"x"});
  CHECK(contract(T(cx, K::MultiVector, 1, {{"1", "1"}}), T(cx, K::Form, 1, {{"1", "1"}})) == fn(cx, "1"));
  Tensor k = T(cx, K::Mixed, 1, {{"1|1", "1"}});
  CHECK(contract_mixed(k, T(cx, K::Form, 1, {{"1", "1"}})) == T(cx, K::Form, 1, {{"1", "1"}}));
  auto cxy = canon({"x", "y"});
  Tensor kx = T(cxy, K::Mixed, 1, {{"1|1", "1"}});
  CHECK(contract_mixed(kx, T(cxy, K::Form, 1, {{"2", "1"}})).is_zero());
  CHECK(contract_mixed(kx, T(cxy, K::Mixed, 1, {{"2|2", "1"}})).is_zero());
}
