// Acceptance run: one line per criterion, then a nonzero exit if any failed.
//
//   lac_acceptance [path/to/lac] [fixture dir]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "lac/suite.hpp"

using namespace lac;
using clock_type = std::chrono::steady_clock;

namespace {

struct Selection {
  std::string suite;
  std::vector<std::string> items;  // empty: the whole suite
};

struct Outcome {
  bool ok = true;
  std::string detail;
};

SuiteOptions base_options() {
  SuiteOptions o;
  o.seed = 7;
  o.trials = 50;
  o.max_degree = 2;
  return o;
}

Outcome run_items(const std::vector<Selection>& sel, const Corpus& corpus, std::string* notes = nullptr) {
  int total = 0, passed = 0;
  long checks = 0;
  std::string failures;
  for (const auto& s : sel) {
    std::vector<std::string> items = s.items.empty() ? std::vector<std::string>{""} : s.items;
    for (const auto& item : items) {
      SuiteOptions o = base_options();
      o.item = item;
      SuiteReport r = run_suite(s.suite, corpus, o);
      if (r.items.empty()) {
        failures += " missing " + item;
        ++total;
        continue;
      }
      for (const auto& it : r.items) {
        ++total;
        checks += it.checks;
        if (it.status == Status::Pass) ++passed;
        else failures += " " + it.id + "(" + (it.witness ? it.witness->check : std::string(to_string(it.status))) + ")";
        if (notes && !it.note.empty()) *notes += (notes->empty() ? "" : "; ") + it.note;
      }
    }
  }
  std::ostringstream d;
  d << passed << "/" << total << " items, " << checks << " checks";
  if (!failures.empty()) d << ", failing:" << failures;
  return {passed == total && total > 0, d.str()};
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int rc = pclose(p);
  status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "lac";
  const std::string fixtures = argc > 2 ? argv[2] : "fixtures";
  const Corpus& corpus = builtin_corpus();

  struct Criterion {
    int id;
    std::string title;
    double bound;  // seconds
    std::function<Outcome()> run;
  };
  std::string convention;
  std::vector<Criterion> criteria{
      {1, "algebroid axioms and designed-invalid fixtures", 1,
       [&] { return run_items({{"algebroid", {}}}, corpus); }},
      {2, "theorem-1 items 1-6", 30,
       [&] {
         return run_items({{"theorem-1",
                            {"theorem-1.1", "theorem-1.2", "theorem-1.3", "theorem-1.4", "theorem-1.5", "theorem-1.6"}}},
                          corpus);
       }},
      {3, "theorem-2 calibration on basis forms up to degree 3", 30,
       [&] {
         Outcome o = run_items({{"theorem-2", {"theorem-2.calibration"}}}, corpus, &convention);
         o.detail += ", " + convention;
         return o;
       }},
      {4, "graded Lie laws (Schouten, N-R, F-N) and operator identities", 180,
       [&] {
         return run_items({{"theorem-2", {"theorem-2.eq-1-3", "theorem-2.eq-1-4"}},
                           {"theorem-3", {"theorem-3.jacobi"}},
                           {"theorem-4", {"theorem-4.jacobi", "theorem-4.eq-1-14"}},
                           {"eq-1-12", {"eq-1-12.operator"}}},
                          corpus);
       }},
      {5, "Poisson calculus suite", 180,
       [&] {
         return run_items({{"eq-2-2", {}}, {"eq-2-6", {}}, {"theorem-5", {}}, {"theorem-6", {}}, {"theorem-7", {}}},
                          corpus);
       }},
      {6, "lift constructors and cotangent lift against the linear Poisson structure", 30,
       [&] { return run_items({{"lifts", {}}, {"algebroid", {"algebroid.lifts-validate"}}}, corpus); }},
      {7, "theorem-10 to theorem-14", 300,
       [&] {
         return run_items(
             {{"theorem-10", {}}, {"theorem-11", {}}, {"theorem-12", {}}, {"theorem-13", {}}, {"theorem-14", {}}},
             corpus);
       }},
      {8, "theorem-15, theorem-17, theorem-18 and injectivity of J", 180,
       [&] { return run_items({{"theorem-15", {}}, {"theorem-17", {}}, {"theorem-18", {}}}, corpus); }},
      {9, "tangent Poisson structure and its coordinate formula", 60,
       [&] { return run_items({{"eq-3-9", {}}}, corpus); }},
      {10, "canonical algebroid suite", 300,
       [&] {
         return run_items({{"theorem-19", {}},
                           {"theorem-20", {}},
                           {"eq-7-12", {}},
                           {"eq-7-13", {}},
                           {"theorem-21", {}},
                           {"theorem-22", {}},
                           {"theorem-23", {}},
                           {"theorem-24", {}}},
                          corpus);
       }},
      {11, "dual complete lift, both paths, 100 trials per fixture", 60,
       [&] { return run_items({{"eq-6-4", {}}}, corpus); }},
      {12, "CLI suite --name all over the shipped models, replayable witnesses", 900,
       [&] {
         std::string models;
         for (const char* f : {"so3", "canonical", "rank2", "poisson"}) models += " --model " + fixtures + "/" + f + ".json";
         int status = 0;
         std::string out = capture(cli + models + " --compact suite --name all 2>/dev/null", status);
         Outcome o;
         o.ok = status == 0;
         auto j = nlohmann::json::parse(out, nullptr, false);
         if (j.is_discarded()) {
           o.ok = false;
           o.detail = "exit " + std::to_string(status) + ", no JSON report";
           return o;
         }
         o.detail = "exit " + std::to_string(status) + ", " + std::to_string(j.value("passed", 0)) + " items pass";

         // A genuine failure (operator identity under the forward order) must replay.
         int rs = 0;
         std::string failing = capture(cli + " --compact suite --name theorem-2 --item theorem-2.identity --contraction-order forward 2>/dev/null", rs);
         auto f = nlohmann::json::parse(failing, nullptr, false);
         if (rs != 1 || f.is_discarded() || !f["items"][0].contains("witness")) {
           o.ok = false;
           o.detail += ", no failing witness to replay";
           return o;
         }
         const auto& w = f["items"][0]["witness"];
         std::string replay = w["replay"].get<std::string>();
         if (replay.rfind("lac ", 0) == 0) replay = cli + replay.substr(3);
         std::string again = capture(replay + " 2>/dev/null", rs);
         auto g = nlohmann::json::parse(again, nullptr, false);
         const bool same = !g.is_discarded() && g["items"][0].contains("witness") &&
                           g["items"][0]["witness"]["residual"] == w["residual"];
         o.ok = o.ok && same;
         o.detail += same ? ", witness replays to the same residual" : ", witness replay differs";
         return o;
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = clock_type::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(clock_type::now() - start).count();
    const bool in_time = secs < c.bound;
    const bool ok = o.ok && in_time;
    all = all && ok;
    std::printf("criterion %2d: %s  %s: %s; %.2f s (bound %.0f s%s)\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(),
                o.detail.c_str(), secs, c.bound, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
