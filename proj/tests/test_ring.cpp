#include <functional>
#include <random>

#include "helpers.hpp"
#include "lac/random.hpp"

using namespace lac;

namespace {

ErrorCode parse_error(const std::string& src, const Chart& chart) {
  try {
    parse_poly(src, chart);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed: " << src);
  return ErrorCode::Parse;
}

// Random expression text together with its value at a fixed point,
// computed by walking the tree directly.
struct Expr {
  std::string text;
  Rational value;
};

Expr random_expr(std::mt19937_64& rng, const std::vector<std::pair<std::string, Rational>>& point, int depth) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  if (depth == 0 || pick(3) == 0) {
    if (pick(2)) {
      const auto& [name, v] = point[pick(int(point.size()))];
      return {name, v};
    }
    int c = pick(7);
    return {std::to_string(c), Rational(c)};
  }
  Expr a = random_expr(rng, point, depth - 1);
  switch (pick(4)) {
    case 0: {
      Expr b = random_expr(rng, point, depth - 1);
      return {"(" + a.text + " + " + b.text + ")", a.value + b.value};
    }
    case 1: {
      Expr b = random_expr(rng, point, depth - 1);
      return {"(" + a.text + " - " + b.text + ")", a.value - b.value};
    }
    case 2: {
      Expr b = random_expr(rng, point, depth - 1);
      return {"(" + a.text + ")*(" + b.text + ")", a.value * b.value};
    }
    default: {
      int e = pick(3);
      Rational v = 1;
      for (int i = 0; i < e; ++i) v *= a.value;
      return {"(" + a.text + ")^" + std::to_string(e), v};
    }
  }
}

}  // namespace

TEST_CASE("ring examples") {
  Chart c({"x", "y"});
  CHECK(parse_poly("0", c).is_zero());
  CHECK(parse_poly("x*y - y*x", c).is_zero());
  CHECK(parse_poly("(x+1)^2", c) == parse_poly("x^2 + 2*x + 1", c));
  CHECK(to_string(parse_poly("(x+1)^2", c), c) == "x^2 + 2*x + 1");
  CHECK(partial(parse_poly("x^2*y", c), c, "x") == parse_poly("2*x*y", c));
  CHECK(partial(parse_poly("x", c), c, "y").is_zero());
  CHECK(eval_at(parse_poly("x^2 + 1", c), c, {{"x", 2}, {"y", 0}}) == 5);
  CHECK(eval_at(Poly(), c, {{"x", 7}, {"y", -1}}) == 0);
  CHECK(to_string(parse_poly("1/2*x - 1/3", c), c) == "1/2*x - 1/3");
  CHECK_THROWS_AS(parse_poly("x/2", c), Error);
}

TEST_CASE("parser errors") {
  Chart c({"x"});
  CHECK(parse_error("x^-1", c) == ErrorCode::NegativeExponent);
  CHECK(parse_error("2x", c) == ErrorCode::Syntax);
  CHECK(parse_error("1/0", c) == ErrorCode::Syntax);
  CHECK(parse_error("x + z", c) == ErrorCode::UnknownVariable);
  CHECK(parse_error("(x + 1", c) == ErrorCode::Syntax);
  CHECK_THROWS_AS(Chart({"x", "x"}), Error);
}

TEST_CASE("print then parse is the identity") {
  Chart c({"x", "y", "z"});
  Gen gen(11, GenParams{3, 5, 3, 9});
  for (int t = 0; t < 200; ++t) {
    Poly p = gen.poly(3);
    CHECK(parse_poly(to_string(p, c), c) == p);
  }
}

TEST_CASE("mixed partials commute") {
  Chart c({"x", "y"});
  Gen gen(12, GenParams{4, 5, 3, 9});
  for (int t = 0; t < 50; ++t) {
    Poly p = gen.poly(2);
    CHECK(p.partial(0).partial(1) == p.partial(1).partial(0));
  }
}

TEST_CASE("parse then eval matches a direct evaluation") {
  Chart c({"x", "y"});
  std::vector<std::pair<std::string, Rational>> point{{"x", Rational(3, 2)}, {"y", Rational(-2)}};
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    Expr e = random_expr(rng, point, 4);
    CAPTURE(e.text);
    CHECK(eval_at(parse_poly(e.text, c), c, {{"x", point[0].second}, {"y", point[1].second}}) == e.value);
  }
}
