#include "lac/fixtures.hpp"

namespace lac {

AlgebroidPtr Corpus::algebroid(const std::string& name) const {
  for (const auto& f : algebroids)
    if (f.name == name) return f.algebroid;
  throw Error(ErrorCode::UnknownName, "no fixture algebroid named \"" + name + "\"");
}

PoissonPtr Corpus::poisson_structure(const std::string& name) const {
  for (const auto& f : poisson)
    if (f.name == name) return f.poisson;
  throw Error(ErrorCode::UnknownName, "no fixture Poisson structure named \"" + name + "\"");
}

AlgebroidPtr so3_algebroid() {
  StructureMap c;
  c[{0, 1, 2}] = 1;
  c[{1, 2, 0}] = 1;
  c[{0, 2, 1}] = -1;
  return build_algebroid(Chart{}, {"1", "2", "3"}, {{}, {}, {}}, c);
}

AlgebroidPtr rank2_algebroid() {
  Chart chart({"x"});
  StructureMap c;
  c[{0, 1, 0}] = parse_poly("1 - x^2", chart);
  c[{0, 1, 1}] = parse_poly("x", chart);
  return build_algebroid(chart, {"a", "b"}, {{Poly(1)}, {Poly::variable(0)}}, c);
}

PoissonPtr canonical_poisson(const std::vector<std::string>& base) {
  return canonical_algebroid(Chart(base))->linear_poisson();
}

const Corpus& builtin_corpus() {
  static const Corpus corpus = [] {
    Corpus c;
    c.algebroids = {
        {"canonical_x", canonical_algebroid(Chart({"x"}))},
        {"canonical_xy", canonical_algebroid(Chart({"x", "y"}))},
        {"canonical_xyz", canonical_algebroid(Chart({"x", "y", "z"}))},
        {"rank2", rank2_algebroid()},
        {"so3", so3_algebroid()},
    };
    c.poisson = {
        {"canonical_xp", canonical_poisson({"x"})},
        {"canonical_xyp", canonical_poisson({"x", "y"})},
        {"so3_linear", c.algebroid("so3")->linear_poisson()},
    };
    return c;
  }();
  return corpus;
}

Corpus corpus_from_model(const Model& m) {
  Corpus c;
  for (const auto& [name, a] : m.algebroids) c.algebroids.push_back({name, a.algebroid});
  for (const auto& [name, p] : m.poisson) c.poisson.push_back({name, p.poisson});
  return c;
}

std::string broken_anchor_model() {
  return R"({"charts": {"X": ["x"]},
  "algebroids": {"broken_anchor": {"chart": "X", "fibers": ["1", "2"], "anchor": [["1"], ["x"]], "c": {}}}})";
}

std::string broken_jacobi_model() {
  return R"({"charts": {"pt": []},
  "algebroids": {"broken_jacobi": {"chart": "pt", "fibers": ["1", "2", "3"], "anchor": [[], [], []],
    "c": {"1,2": {"2": "-1"}, "2,3": {"3": "1"}}}}})";
}

std::string not_poisson_model() {
  return R"({"charts": {"X": ["x1", "x2", "x3"]},
  "poisson": {"not_poisson": {"chart": "X", "bivector": {"1,2": "1", "1,3": "x1"}}}})";
}

}  // namespace lac
