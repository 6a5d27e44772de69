#include "lac/suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "suite_detail.hpp"

namespace lac {

using namespace suite_detail;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

bool SuiteReport::passed() const { return count(Status::Pass) == int(items.size()); }

int SuiteReport::count(Status s) const {
  return int(std::count_if(items.begin(), items.end(), [s](const ItemResult& r) { return r.status == s; }));
}

namespace suite_detail {

int Ctx::rank() const { return fx.algebroid ? int(fx.algebroid->rank()) : int(fx.poisson->chart().size()); }

const Tensor& Ctx::in(const std::string& name, const Tensor& t) {
  inputs.emplace_back(name, to_string(t));
  return t;
}

int Ctx::degree(const AlgebroidPtr& owner, int lo, int hi) {
  hi = std::max(lo, std::min(hi, int(owner->rank())));
  return gen.uniform(lo, hi);
}

void Ctx::eq(const Tensor& a, const Tensor& b, const std::string& check) {
  ++checks;
  if (a == b) return;
  Tensor r = a;
  r -= b;
  throw Mismatch{check, to_string(r)};
}

void Ctx::eq(const Poly& a, const Poly& b, const Chart& chart, const std::string& check) {
  ++checks;
  if (a == b) return;
  throw Mismatch{check, to_string(a - b, chart)};
}

void Ctx::zero(const Tensor& a, const std::string& check) {
  ++checks;
  if (!a.is_zero()) throw Mismatch{check, to_string(a)};
}

void Ctx::expect(bool ok, const std::string& check, const std::string& residual) {
  ++checks;
  if (!ok) throw Mismatch{check, residual};
}

int sgn(int n) { return parity(n); }

Tensor wedge_all(const AlgebroidPtr& owner, Kind kind, const std::vector<Tensor>& factors) {
  Tensor out = Tensor::function(owner, kind, Poly(1));
  for (const auto& f : factors) out = kind == Kind::Sym ? sym_product(out, f) : wedge(out, f);
  return out;
}

Tensor simple(const Tensor& mu, const Tensor& x) {
  Tensor out(mu.owner(), Kind::Mixed, mu.degree());
  for (const auto& [key, f] : x.terms()) out += tensor_with(f * mu, key.idx[0]);
  return out;
}

bool linearly_independent(const std::vector<Tensor>& ts) {
  std::map<std::pair<Key, Monomial>, std::size_t> column;
  std::vector<std::map<std::size_t, Rational>> rows;
  for (const auto& t : ts) {
    std::map<std::size_t, Rational> row;
    for (const auto& [key, f] : t.terms())
      for (const auto& term : f.terms()) {
        auto [it, fresh] = column.try_emplace({key, term.mono}, column.size());
        row[it->second] = term.coef;
      }
    rows.push_back(std::move(row));
  }
  // Elimination on sparse rows: reduce each row by the pivots found so far.
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots;
  for (auto& row : rows) {
    for (auto it = row.begin(); it != row.end();) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      Rational f = it->second;
      for (const auto& [c, v] : p->second) {
        Rational& x = row[c];
        x -= f * v;
      }
      for (auto jt = row.begin(); jt != row.end();) jt = jt->second == 0 ? row.erase(jt) : std::next(jt);
      it = row.begin();
    }
    if (row.empty()) return false;
    Rational lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    pivots[row.begin()->first] = row;
  }
  return true;
}

std::vector<std::vector<int>> increasing_tuples(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Basis elements of Φ_1^k, k <= kmax, times the monomials of degree <= 1.
std::vector<Tensor> mixed_spanning_set(const AlgebroidPtr& a, int kmax) {
  std::vector<Poly> monos{Poly(1)};
  for (std::size_t b = 0; b < a->dim(); ++b) monos.push_back(Poly::variable(b));
  std::vector<Tensor> out;
  for (int k = 0; k <= std::min<int>(kmax, int(a->rank())); ++k)
    for (const auto& I : increasing_tuples(int(a->rank()), k))
      for (int j = 0; j < int(a->rank()); ++j)
        for (const auto& f : monos) out.push_back(Tensor::basis(a, Kind::Mixed, I, j, f));
  return out;
}

}  // namespace suite_detail

namespace {

const Registry& registry() {
  static const Registry r = [] {
    Registry out;
    add_calculus_suites(out);
    add_poisson_suites(out);
    add_lift_suites(out);
    add_canonical_suites(out);
    return out;
  }();
  return r;
}

std::vector<Fixture> fixtures_for(const Item& item, const Corpus& corpus) {
  std::vector<Fixture> out;
  switch (item.scope) {
    case Scope::Once: out.push_back({"none", nullptr, nullptr}); break;
    case Scope::Poisson:
      for (const auto& p : corpus.poisson) out.push_back({p.name, nullptr, p.poisson});
      break;
    case Scope::Algebroids:
    case Scope::Canonical:
      for (const auto& a : corpus.algebroids)
        if (item.scope == Scope::Algebroids || a.algebroid->is_canonical()) out.push_back({a.name, a.algebroid, nullptr});
      break;
  }
  if (item.applies) std::erase_if(out, [&](const Fixture& f) { return !item.applies(f); });
  return out;
}

struct Task {
  std::size_t item;
  std::size_t fixture;
  int trial;
};

struct Outcome {
  long checks = 0;
  double seconds = 0;
  std::set<std::string> notes;
  std::optional<Status> failure;
  Witness witness;
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.name);
  return out;
}

bool has_suite(std::string_view name) {
  return name == "all" || std::any_of(registry().begin(), registry().end(), [&](const Suite& s) { return s.name == name; });
}

SuiteReport run_suite(std::string_view name, const Corpus& corpus, const SuiteOptions& opt) {
  if (!has_suite(name)) throw Error(ErrorCode::UnknownName, "no suite named \"" + std::string(name) + "\"");
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  struct Selected {
    const Suite* suite;
    const Item* item;
    std::vector<Fixture> fixtures;
    int trials;
  };
  std::vector<Selected> selected;
  for (const auto& s : registry()) {
    if (name != "all" && s.name != name) continue;
    for (const auto& it : s.items) {
      if (!opt.item.empty() && it.id != opt.item) continue;
      auto fx = fixtures_for(it, corpus);
      if (!opt.fixture.empty()) std::erase_if(fx, [&](const Fixture& f) { return f.name != opt.fixture; });
      int trials = it.deterministic ? 1 : std::max(opt.trials, it.min_trials);
      selected.push_back({&s, &it, std::move(fx), trials});
    }
  }

  std::vector<Task> tasks;
  for (std::size_t i = 0; i < selected.size(); ++i)
    for (std::size_t f = 0; f < selected[i].fixtures.size(); ++f) {
      if (opt.trial >= 0) {
        tasks.push_back({i, f, opt.trial});
        continue;
      }
      for (int t = 0; t < selected[i].trials; ++t) tasks.push_back({i, f, t});
    }

  GenParams params;
  params.max_degree = opt.max_degree;
  std::vector<Outcome> outcomes(tasks.size());
  for_each_index(
      tasks.size(),
      [&](std::size_t k) {
        const Task& task = tasks[k];
        const Selected& sel = selected[task.item];
        const Fixture& fx = sel.fixtures[task.fixture];
        const std::uint64_t seed = trial_seed(opt.seed, sel.item->id, fx.name, task.trial);
        const auto t0 = clock::now();
        std::optional<ContractionOrderGuard> guard;
        if (opt.order) guard.emplace(*opt.order);
        Ctx ctx(seed, params, fx);
        Outcome& out = outcomes[k];
        auto fail = [&](Status s, std::string check, std::string residual) {
          out.failure = s;
          out.witness.fixture = fx.name;
          out.witness.trial = task.trial;
          out.witness.seed = seed;
          out.witness.inputs = ctx.inputs;
          out.witness.check = std::move(check);
          out.witness.residual = std::move(residual);
        };
        try {
          sel.item->body(ctx);
        } catch (const Mismatch& m) {
          fail(Status::Fail, m.check, m.residual);
        } catch (const Error& e) {
          fail(Status::Error, std::string(to_string(e.code())) + ": " + e.what(), e.residual());
        } catch (const std::exception& e) {
          fail(Status::Error, e.what(), "");
        }
        out.checks = ctx.checks;
        out.notes = std::move(ctx.notes);
        out.seconds = std::chrono::duration<double>(clock::now() - t0).count();
      },
      opt.exec);

  SuiteReport report;
  report.name = std::string(name);
  report.contraction_order = std::string(to_string(opt.order.value_or(contraction_order())));
  std::vector<std::set<std::string>> notes(selected.size());
  for (const auto& s : selected) {
    ItemResult r;
    r.id = s.item->id;
    r.suite = s.suite->name;
    report.items.push_back(std::move(r));
  }
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    ItemResult& r = report.items[tasks[k].item];
    Outcome& o = outcomes[k];
    r.checks += o.checks;
    r.seconds += o.seconds;
    ++r.runs;
    notes[tasks[k].item].insert(o.notes.begin(), o.notes.end());
    if (o.failure && !r.witness) {
      r.status = *o.failure;
      std::ostringstream replay;
      replay << opt.replay_prefix << " suite --name " << r.suite << " --item " << r.id << " --fixture "
             << o.witness.fixture << " --trial " << o.witness.trial << " --seed " << opt.seed << " --max-degree "
             << opt.max_degree;
      if (opt.order) replay << " --contraction-order " << to_string(*opt.order);
      o.witness.replay = replay.str();
      r.witness = std::move(o.witness);
    }
  }
  for (std::size_t i = 0; i < selected.size(); ++i) {
    std::string joined;
    for (const auto& n : notes[i]) joined += (joined.empty() ? "" : "; ") + n;
    report.items[i].note = joined;
  }
  std::sort(report.items.begin(), report.items.end(), [](const ItemResult& a, const ItemResult& b) { return a.id < b.id; });
  report.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return report;
}

nlohmann::json report_json(const SuiteReport& r) {
  using nlohmann::json;
  json items = json::array();
  for (const auto& it : r.items) {
    json j = {{"id", it.id},       {"suite", it.suite}, {"status", to_string(it.status)},
              {"checks", it.checks}, {"runs", it.runs},   {"seconds", it.seconds}};
    if (!it.note.empty()) j["note"] = it.note;
    if (it.witness) {
      const Witness& w = *it.witness;
      json inputs = json::object();
      for (const auto& [k, v] : w.inputs) inputs[k] = v;
      j["witness"] = {{"fixture", w.fixture}, {"trial", w.trial},       {"seed", w.seed},    {"inputs", inputs},
                      {"check", w.check},     {"residual", w.residual}, {"replay", w.replay}};
    }
    items.push_back(std::move(j));
  }
  return {{"suite", r.name},
          {"contraction_order", r.contraction_order},
          {"seconds", r.seconds},
          {"passed", r.count(Status::Pass)},
          {"failed", r.count(Status::Fail)},
          {"errors", r.count(Status::Error)},
          {"items", std::move(items)}};
}

std::string report_summary(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.name << ": " << r.items.size() << " items, " << r.count(Status::Pass) << " pass, "
     << r.count(Status::Fail) << " fail, " << r.count(Status::Error) << " error in " << r.seconds
     << " s (contraction order " << r.contraction_order << ")\n";
  for (const auto& it : r.items) {
    if (it.status == Status::Pass) continue;
    os << "  " << to_string(it.status) << " " << it.id;
    if (it.witness)
      os << " [" << it.witness->fixture << " trial " << it.witness->trial << "] " << it.witness->check << ": "
         << it.witness->residual << "\n    replay: " << it.witness->replay;
    os << "\n";
  }
  return os.str();
}

}  // namespace lac
