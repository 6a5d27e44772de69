#include "helpers.hpp"

using namespace lac;

namespace {

std::string fixture(const std::string& name) { return std::string(LAC_FIXTURE_DIR) + "/" + name + ".json"; }

Error load_error(const std::string& path) {
  try {
    load_model(path);
  } catch (const Error& e) {
    return e;
  }
  FAIL("loaded " << path);
  return Error(ErrorCode::Parse, "");
}

}  // namespace

TEST_CASE("shipped models match the builtin corpus") {
  const Corpus& builtin = builtin_corpus();
  Corpus shipped;
  for (const char* f : {"so3", "canonical", "rank2", "poisson"}) {
    Corpus c = corpus_from_model(load_model(fixture(f)));
    shipped.algebroids.insert(shipped.algebroids.end(), c.algebroids.begin(), c.algebroids.end());
    shipped.poisson.insert(shipped.poisson.end(), c.poisson.begin(), c.poisson.end());
  }
  REQUIRE(shipped.algebroids.size() == builtin.algebroids.size());
  REQUIRE(shipped.poisson.size() == builtin.poisson.size());
  for (const auto& f : builtin.algebroids) {
    CAPTURE(f.name);
    AlgebroidPtr a = shipped.algebroid(f.name);
    CHECK(a->fingerprint() == f.algebroid->fingerprint());
    CHECK(a->is_canonical() == f.algebroid->is_canonical());
  }
  for (const auto& f : builtin.poisson) {
    CAPTURE(f.name);
    PoissonPtr p = shipped.poisson_structure(f.name);
    CHECK(p->P == f.poisson->P);
  }
}

TEST_CASE("so3 model") {
  Model m = load_model(fixture("so3"));
  REQUIRE(m.algebroids.size() == 1);
  AlgebroidPtr a = m.owner("so3");
  CHECK(a->rank() == 3);
  CHECK(a->dim() == 0);
  CHECK(to_string(d_tau(m.tensor("estar3"))) == "-e*1∧e*2");
}

TEST_CASE("designed-invalid models") {
  Error anchor = load_error(fixture("broken_anchor"));
  CHECK(anchor.code() == ErrorCode::Validation);
  CHECK(std::string(anchor.what()).find("AnchorNotMorphism") != std::string::npos);
  CHECK(anchor.witness() == std::vector<int>{1, 2});
  CHECK(anchor.residual() == "∂x");

  Error jacobi = load_error(fixture("broken_jacobi"));
  CHECK(std::string(jacobi.what()).find("JacobiViolation") != std::string::npos);
  CHECK(jacobi.witness() == std::vector<int>{1, 2, 3});
  CHECK(jacobi.residual() == "-e3");

  Error poisson = load_error(fixture("not_poisson"));
  CHECK(std::string(poisson.what()).find("NotPoisson") != std::string::npos);
  CHECK(poisson.witness() == std::vector<int>{1, 2, 3});
}

TEST_CASE("model parse errors") {
  CHECK_THROWS_AS(parse_model_text("{"), Error);
  CHECK_THROWS_AS(parse_model_text(R"({"bogus": {}})"), Error);
  CHECK_THROWS_AS(parse_model_text(R"({"charts": {"X": ["x"]},
    "tensors": {"t": {"owner": "Y", "kind": "form", "degree": 0, "terms": {}}}})"),
                  Error);
  CHECK_THROWS_AS(parse_model_text(R"({"charts": {"X": ["x"]},
    "tensors": {"t": {"owner": "X", "kind": "form", "degree": 1, "terms": {"2": "1"}}}})"),
                  Error);
  CHECK(parse_key("1,3|2") == std::pair<std::vector<int>, int>{{0, 2}, 1});
  CHECK(parse_key("|1") == std::pair<std::vector<int>, int>{{}, 0});
}

TEST_CASE("dump then load is canonical") {
  for (const char* f : {"so3", "canonical", "rank2", "poisson"}) {
    CAPTURE(f);
    Model m = load_model(fixture(f));
    const std::string once = dump_model(m).dump(2);
    const std::string twice = dump_model(parse_model_text(once)).dump(2);
    CHECK(once == twice);
  }
}
