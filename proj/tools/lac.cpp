// lac: command-line front end over model files.
//
// Reports go to stdout as JSON, a short summary to stderr. Exit status is 0
// when everything passes, 1 on a failed check and 2 on bad input.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lac/suite.hpp"

using json = nlohmann::json;
using namespace lac;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything the loaded models (or the builtin corpus) provide.
struct Workspace {
  Model model;
  Corpus corpus;
  bool builtin = false;

  AlgebroidPtr algebroid(const std::string& name) const {
    if (builtin) return corpus.algebroid(name);
    return model.owner(name);
  }

  PoissonPtr poisson(const std::string& name) const {
    if (!name.empty()) return builtin ? corpus.poisson_structure(name) : model.poisson_structure(name);
    if (corpus.poisson.size() == 1) return corpus.poisson.front().poisson;
    throw Error(ErrorCode::UnknownName, "several Poisson structures loaded; pick one with --poisson");
  }

  // A model tensor, or the bivector of a Poisson structure ("P" alone means
  // the selected one).
  Tensor tensor(const std::string& name, const std::string& poisson_name) const {
    if (!builtin && model.tensors.count(name)) return model.tensor(name);
    if (name == "P") return poisson(poisson_name)->P;
    for (const auto& p : corpus.poisson)
      if (p.name == name) return p.poisson->P;
    throw Error(ErrorCode::UnknownName, "no tensor named \"" + name + "\"");
  }
};

template <class M>
void merge(M& into, const M& from, const char* what) {
  for (const auto& [k, v] : from)
    if (!into.emplace(k, v).second) throw InputError(std::string("duplicate ") + what + " \"" + k + "\" across models");
}

Workspace load(const std::vector<std::string>& paths) {
  Workspace w;
  if (paths.empty()) {
    w.builtin = true;
    w.corpus = builtin_corpus();
    return w;
  }
  for (const auto& p : paths) {
    Model m = load_model(p);
    merge(w.model.charts, m.charts, "chart");
    merge(w.model.algebroids, m.algebroids, "algebroid");
    merge(w.model.poisson, m.poisson, "Poisson structure");
    merge(w.model.tensors, m.tensors, "tensor");
    if (m.has_suite && !w.model.has_suite) {
      w.model.suite = m.suite;
      w.model.has_suite = true;
    }
  }
  w.corpus = corpus_from_model(w.model);
  return w;
}

json tensor_report(const Tensor& t) {
  return {{"text", to_string(t)},
          {"kind", kind_name(t.kind())},
          {"degree", t.degree()},
          {"chart", t.owner()->chart().names()},
          {"fibers", t.owner()->fibers()},
          {"terms", tensor_json(t)}};
}

json algebroid_report(const AlgebroidPtr& a) {
  Model m;
  m.charts["chart"] = a->chart();
  m.algebroids["result"] = {"chart", a};
  json j = dump_model(m);
  json out = j["algebroids"]["result"];
  out["chart"] = a->chart().names();
  return out;
}

json poisson_report(const PoissonPtr& p) {
  return {{"chart", p->chart().names()}, {"bivector", tensor_json(p->P)}, {"text", to_string(p->P)}};
}

Provenance lift_kind(const std::string& s) {
  static const std::map<std::string, Provenance> kinds{
      {"V", Provenance::V},       {"T", Provenance::T},         {"Vpi", Provenance::Vpi},
      {"Vtau", Provenance::Vtau}, {"G", Provenance::G},         {"J", Provenance::J},
      {"Gmix", Provenance::Gmix}, {"jstar", Provenance::Jstar}, {"hmap", Provenance::H},
      {"iota", Provenance::Iota}};
  auto it = kinds.find(s);
  if (it == kinds.end()) throw InputError("unknown lift kind \"" + s + "\"");
  return it->second;
}

std::map<std::string, Rational, std::less<>> parse_point(const std::string& at) {
  std::map<std::string, Rational, std::less<>> out;
  std::stringstream ss(at);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--at expects coord=value pairs, got \"" + item + "\"");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

std::string shell_quote(const std::string& s) {
  if (s.find_first_of(" \t'\"$\\") == std::string::npos) return s;
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus on Lie algebroids over polynomial charts"};
  app.require_subcommand(1);
  std::vector<std::string> models;
  app.add_option("--model", models, "Model file (repeatable); the builtin corpus is used when absent");
  bool compact = false;
  app.add_flag("--compact", compact, "Print the JSON report on one line");

  std::string kind, a_name, b_name, poisson_name, algebroid_name, of, via = "T", at;
  auto* validate = app.add_subcommand("validate", "Validate every algebroid and Poisson structure");

  auto* bracket = app.add_subcommand("bracket", "Graded brackets of two tensors");
  bracket->add_option("--kind", kind)->required()->check(CLI::IsMember({"schouten", "sym", "nr", "fn", "koszul", "extended"}));
  bracket->add_option("--a", a_name)->required();
  bracket->add_option("--b", b_name)->required();
  bracket->add_option("--poisson", poisson_name);

  auto* d = app.add_subcommand("d", "Algebroid differential of a form");
  d->add_option("--form", a_name)->required();
  d->add_option("--algebroid", algebroid_name);
  d->add_option("--poisson", poisson_name);

  auto* lie = app.add_subcommand("lie", "Lie derivative L_X of a form");
  lie->add_option("--x", a_name)->required();
  lie->add_option("--form", b_name)->required();
  lie->add_option("--poisson", poisson_name);

  auto* contract_cmd = app.add_subcommand("contract", "Contraction i_X t, or i_K t for mixed K");
  contract_cmd->add_option("--x", a_name)->required();
  contract_cmd->add_option("--t", b_name)->required();
  contract_cmd->add_option("--poisson", poisson_name);

  auto* lift_cmd = app.add_subcommand("lift", "Lifts of tensors and structures");
  lift_cmd->add_option("--kind", kind)->required();
  lift_cmd->add_option("--of", of, "Tensor to lift");
  lift_cmd->add_option("--via", via, "V or T lift transported by kappa/alpha")->check(CLI::IsMember({"V", "T"}));
  lift_cmd->add_option("--algebroid", algebroid_name);
  lift_cmd->add_option("--poisson", poisson_name);

  SuiteOptions sopt;
  std::string suite_name;
  bool serial = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials, max_degree;
  auto* suite = app.add_subcommand("suite", "Run identity suites");
  suite->add_option("--name", suite_name)->required();
  suite->add_option("--seed", seed);
  suite->add_option("--trials", trials);
  suite->add_option("--max-degree", max_degree);
  suite->add_option("--item", sopt.item);
  suite->add_option("--fixture", sopt.fixture);
  suite->add_option("--trial", sopt.trial);
  suite->add_flag("--serial", serial, "Run trials on one thread");
  std::string order;
  suite->add_option("--contraction-order", order, "Override the contraction order")
      ->check(CLI::IsMember({"forward", "reversed"}));

  auto* eval = app.add_subcommand("eval", "Evaluate a tensor's coefficients at a point");
  eval->add_option("--tensor", a_name)->required();
  eval->add_option("--at", at)->required();
  eval->add_option("--poisson", poisson_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::vector<std::string> echo(argv + 1, argv + argc);
  json report = {{"command", echo}};
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](int rc, const std::string& summary) {
    report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (compact ? report.dump() : report.dump(2)) << "\n";
    std::cerr << summary << "\n";
    return rc;
  };

  Workspace w;
  try {
    w = load(models);
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    if (!e.witness().empty()) report["error"]["witness"] = e.witness();
    if (!e.residual().empty()) report["error"]["residual"] = e.residual();
    // A model that parses but fails validation is a failed check for `validate`.
    const bool failed_check = validate->parsed() && e.code() == ErrorCode::Validation;
    return finish(failed_check ? 1 : 2, std::string("lac: ") + e.what());
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = {{"code", "Input"}, {"message", e.what()}};
    return finish(2, std::string("lac: ") + e.what());
  }

  try {
    if (validate->parsed()) {
      json items = json::array();
      for (const auto& f : w.corpus.algebroids)
        items.push_back({{"name", f.name}, {"kind", "algebroid"}, {"status", "pass"}, {"rank", f.algebroid->rank()},
                         {"chart", f.algebroid->chart().names()}});
      for (const auto& f : w.corpus.poisson)
        items.push_back({{"name", f.name}, {"kind", "poisson"}, {"status", "pass"}, {"chart", f.poisson->chart().names()}});
      report["status"] = "pass";
      report["items"] = items;
      return finish(0, "validate: " + std::to_string(items.size()) + " structures pass");
    }

    if (suite->parsed()) {
      if (!has_suite(suite_name)) throw InputError("unknown suite \"" + suite_name + "\"");
      if (w.model.has_suite) {
        sopt.seed = w.model.suite.seed;
        sopt.trials = w.model.suite.trials;
        sopt.max_degree = w.model.suite.max_degree;
      }
      if (seed) sopt.seed = *seed;
      if (trials) sopt.trials = *trials;
      if (max_degree) sopt.max_degree = *max_degree;
      sopt.exec = serial ? Exec::Serial : Exec::Parallel;
      if (!order.empty()) sopt.order = order == "forward" ? ContractionOrder::Forward : ContractionOrder::Reversed;
      std::string prefix = "lac";
      for (const auto& m : models) prefix += " --model " + shell_quote(m);
      sopt.replay_prefix = prefix;
      SuiteReport r = run_suite(suite_name, w.corpus, sopt);
      json j = report_json(r);
      for (auto& [k, v] : j.items()) report[k] = v;
      report["status"] = r.passed() ? "pass" : "fail";
      return finish(r.passed() ? 0 : 1, report_summary(r));
    }

    Tensor result;
    std::string what;
    if (bracket->parsed()) {
      Tensor a = w.tensor(a_name, poisson_name), b = w.tensor(b_name, poisson_name);
      if (kind == "schouten") result = schouten(a, b);
      else if (kind == "sym") result = sym_schouten(a, b);
      else if (kind == "nr") result = nr_bracket(a, b);
      else if (kind == "fn") result = fn_bracket(a, b);
      else if (kind == "koszul") result = koszul_schouten(*w.poisson(poisson_name), a, b);
      else result = extended_bracket(*w.poisson(poisson_name), a, b);
      what = kind + " bracket";
    } else if (d->parsed()) {
      Tensor mu = w.tensor(a_name, poisson_name);
      if (!algebroid_name.empty() && !same_owner(w.algebroid(algebroid_name), mu.owner()))
        throw Error(ErrorCode::ChartMismatch, "form \"" + a_name + "\" is not over \"" + algebroid_name + "\"");
      result = d_tau(mu);
      what = "d";
    } else if (lie->parsed()) {
      result = lie_derivative(w.tensor(a_name, poisson_name), w.tensor(b_name, poisson_name));
      what = "Lie derivative";
    } else if (contract_cmd->parsed()) {
      Tensor x = w.tensor(a_name, poisson_name), t = w.tensor(b_name, poisson_name);
      result = x.kind() == Kind::Mixed ? contract_mixed(x, t) : contract(x, t);
      what = "contraction";
    } else if (lift_cmd->parsed()) {
      what = kind + " lift";
      if (kind == "tangent-algebroid" || kind == "cotangent-algebroid" || kind == "linear-poisson" ||
          kind == "tangent-poisson") {
        if (kind == "tangent-poisson") {
          report["result"] = poisson_report(tangent_poisson(*w.poisson(poisson_name)));
        } else if (kind == "cotangent-algebroid" && algebroid_name.empty()) {
          report["result"] = algebroid_report(cotangent_algebroid(*w.poisson(poisson_name)));
        } else {
          if (algebroid_name.empty()) throw InputError("--algebroid is required for " + kind);
          AlgebroidPtr a = w.algebroid(algebroid_name);
          if (kind == "tangent-algebroid") report["result"] = algebroid_report(a->tangent());
          else if (kind == "cotangent-algebroid") report["result"] = algebroid_report(a->cotangent());
          else report["result"] = poisson_report(a->linear_poisson());
        }
        report["status"] = "pass";
        return finish(0, what + " computed");
      }
      if (of.empty()) throw InputError("--of is required for lift --kind " + kind);
      Tensor s = w.tensor(of, poisson_name);
      if (kind == "kappa" || kind == "alpha") {
        LiftedSection l = lift(via == "V" ? Provenance::V : Provenance::T, s);
        result = canonical_transport(kind == "kappa" ? Transport::Kappa : Transport::Alpha, l).value;
      } else {
        result = lift(lift_kind(kind), s).value;
      }
    } else if (eval->parsed()) {
      Tensor t = w.tensor(a_name, poisson_name);
      auto point = parse_point(at);
      const Chart& chart = t.owner()->chart();
      for (const auto& [name, v] : point)
        if (!chart.index_of(name)) throw Error(ErrorCode::UnknownVariable, "no coordinate \"" + name + "\" in the chart");
      result = t.map_coefficients([&](const Poly& f) { return Poly(eval_at(f, chart, point)); });
      what = "value";
    }
    report["status"] = "pass";
    report["result"] = tensor_report(result);
    return finish(0, what + ": " + to_string(result));
  } catch (const InputError& e) {
    report["status"] = "error";
    report["error"] = {{"code", "Input"}, {"message", e.what()}};
    return finish(2, std::string("lac: ") + e.what());
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    if (!e.residual().empty()) report["error"]["residual"] = e.residual();
    return finish(2, std::string("lac: ") + e.what());
  }
}
