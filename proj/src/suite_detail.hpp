#pragma once

#include <functional>
#include <set>

#include "lac/lifts.hpp"
#include "lac/random.hpp"
#include "lac/suite.hpp"

namespace lac::suite_detail {

struct Fixture {
  std::string name;
  AlgebroidPtr algebroid;  // null for Poisson fixtures
  PoissonPtr poisson;      // null for algebroid fixtures
};

// Thrown by Ctx::eq; ends the trial with a failure.
struct Mismatch {
  std::string check;
  std::string residual;
};

class Ctx {
 public:
  Ctx(std::uint64_t seed, const GenParams& params, const Fixture& fx) : gen(seed, params), fx(fx) {}

  Gen gen;
  const Fixture& fx;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::set<std::string> notes;
  long checks = 0;

  const AlgebroidPtr& A() const { return fx.algebroid; }
  const PoissonStructure& ps() const { return *fx.poisson; }
  int rank() const;

  // Records a named input for the witness and passes it through.
  const Tensor& in(const std::string& name, const Tensor& t);
  Tensor tensor(const std::string& name, const AlgebroidPtr& owner, Kind kind, int degree) {
    return in(name, gen.tensor(owner, kind, degree));
  }
  Tensor function(const std::string& name, const AlgebroidPtr& owner, Kind kind = Kind::Form) {
    return in(name, gen.function(owner, kind));
  }
  // Degree in [lo, hi], clipped to the rank of `owner`.
  int degree(const AlgebroidPtr& owner, int lo, int hi);

  void eq(const Tensor& a, const Tensor& b, const std::string& check);
  void eq(const Poly& a, const Poly& b, const Chart& chart, const std::string& check);
  void zero(const Tensor& a, const std::string& check);
  void expect(bool ok, const std::string& check, const std::string& residual);
  void note(std::string s) { notes.insert(std::move(s)); }
};

enum class Scope {
  Algebroids,  // every algebroid fixture
  Canonical,   // canonical algebroid fixtures
  Poisson,     // every Poisson fixture
  Once,        // a single run without fixture
};

struct Item {
  std::string id;
  Scope scope = Scope::Algebroids;
  std::function<void(Ctx&)> body;
  bool deterministic = false;  // one trial per fixture
  int min_trials = 0;
  std::function<bool(const Fixture&)> applies;
};

struct Suite {
  std::string name;
  std::vector<Item> items;
};

using Registry = std::vector<Suite>;

void add_calculus_suites(Registry& r);
void add_poisson_suites(Registry& r);
void add_lift_suites(Registry& r);
void add_canonical_suites(Registry& r);

// Shared helpers.
int sgn(int n);  // (-1)^n
Tensor wedge_all(const AlgebroidPtr& owner, Kind kind, const std::vector<Tensor>& factors);
// μ ⊗ X for a form μ and a section X.
Tensor simple(const Tensor& mu, const Tensor& x);
// Q-linear independence of the coefficient vectors of `ts`.
bool linearly_independent(const std::vector<Tensor>& ts);
// Basis elements of Φ_1^k, k <= kmax, times the monomials of degree <= 1.
std::vector<Tensor> mixed_spanning_set(const AlgebroidPtr& a, int kmax);
// Every strictly increasing tuple of size k from 0..m-1.
std::vector<std::vector<int>> increasing_tuples(int m, int k);

}  // namespace lac::suite_detail
