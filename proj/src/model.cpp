#include "lac/model.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lac {

using nlohmann::json;

namespace {

// Runs f, prefixing parse-level failures with the JSON location.
template <class F>
auto at(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::Syntax:
      case ErrorCode::UnknownVariable:
      case ErrorCode::NegativeExponent:
      case ErrorCode::Overflow:
      case ErrorCode::InvalidChart:
      case ErrorCode::Parse:
        throw Error(ErrorCode::Parse, where + ": " + e.what(), e.witness(), e.residual());
      default: throw;
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, where + ": " + e.what());
  }
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, where + ": missing \"" + key + "\"");
  return j.at(key);
}

int parse_index(std::string_view s, const std::string& whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 1)
    throw Error(ErrorCode::Parse, "bad index \"" + std::string(s) + "\" in key \"" + whole + "\"");
  return v - 1;
}

std::string poly_text(const Poly& p, const Chart& c) { return to_string(p, c); }

}  // namespace

Kind parse_kind(std::string_view s) {
  if (s == "mv") return Kind::MultiVector;
  if (s == "form") return Kind::Form;
  if (s == "mixed") return Kind::Mixed;
  if (s == "sym") return Kind::Sym;
  throw Error(ErrorCode::Parse, "unknown tensor kind \"" + std::string(s) + "\"");
}

std::string kind_name(Kind k) { return std::string(to_string(k)); }

std::pair<std::vector<int>, int> parse_key(std::string_view key) {
  const std::string whole(key);
  int fiber = -1;
  if (auto bar = key.find('|'); bar != std::string_view::npos) {
    fiber = parse_index(key.substr(bar + 1), whole);
    key = key.substr(0, bar);
  }
  std::vector<int> idx;
  while (!key.empty()) {
    auto comma = key.find(',');
    idx.push_back(parse_index(key.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    key = key.substr(comma + 1);
    if (key.empty()) throw Error(ErrorCode::Parse, "trailing comma in key \"" + whole + "\"");
  }
  return {idx, fiber};
}

std::string key_string(const Key& key) {
  std::string s;
  for (int i = 0; i < key.n; ++i) {
    if (i) s += ',';
    s += std::to_string(key.idx[i] + 1);
  }
  if (key.fiber >= 0) s += "|" + std::to_string(key.fiber + 1);
  return s;
}

Tensor make_tensor(const AlgebroidPtr& owner, Kind kind, int degree,
                   const std::map<std::string, std::string>& terms) {
  Tensor t(owner, kind, degree);
  for (const auto& [k, v] : terms) {
    auto [idx, fiber] = parse_key(k);
    if (int(idx.size()) != degree)
      throw Error(ErrorCode::Parse, "key \"" + k + "\" has " + std::to_string(idx.size()) + " indices, degree is " +
                                        std::to_string(degree));
    t.add(idx, fiber, parse_poly(v, owner->chart()));
  }
  return t;
}

AlgebroidPtr Model::owner(const std::string& name) const {
  if (auto it = algebroids.find(name); it != algebroids.end()) return it->second.algebroid;
  if (auto it = charts.find(name); it != charts.end()) {
    auto& slot = canonical_cache_[name];
    if (!slot) slot = canonical_algebroid(it->second);
    return slot;
  }
  if (auto it = poisson.find(name); it != poisson.end()) return it->second.poisson->canonical;
  throw Error(ErrorCode::UnknownName, "no algebroid or chart named \"" + name + "\"");
}

const Tensor& Model::tensor(const std::string& name) const {
  auto it = tensors.find(name);
  if (it == tensors.end()) throw Error(ErrorCode::UnknownName, "no tensor named \"" + name + "\"");
  return it->second.tensor;
}

PoissonPtr Model::poisson_structure(const std::string& name) const {
  auto it = poisson.find(name);
  if (it == poisson.end()) throw Error(ErrorCode::UnknownName, "no Poisson structure named \"" + name + "\"");
  return it->second.poisson;
}

Model parse_model(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "model must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (k != "charts" && k != "algebroids" && k != "poisson" && k != "tensors" && k != "suite")
      throw Error(ErrorCode::Parse, "unknown top-level key \"" + k + "\"");
  Model m;
  auto chart_of = [&](const std::string& name, const std::string& where) -> const Chart& {
    auto it = m.charts.find(name);
    if (it == m.charts.end()) throw Error(ErrorCode::UnknownName, where + ": no chart named \"" + name + "\"");
    return it->second;
  };

  if (j.contains("charts"))
    for (const auto& [name, coords] : j.at("charts").items()) {
      const std::string where = "/charts/" + name;
      m.charts.emplace(name, at(where, [&] { return Chart(coords.get<std::vector<std::string>>()); }));
    }

  if (j.contains("algebroids"))
    for (const auto& [name, a] : j.at("algebroids").items()) {
      const std::string where = "/algebroids/" + name;
      const std::string chart_name = at(where, [&] { return member(a, "chart", where).get<std::string>(); });
      const Chart& chart = chart_of(chart_name, where);
      auto fibers = at(where, [&] { return member(a, "fibers", where).get<std::vector<std::string>>(); });
      auto rows = at(where, [&] { return member(a, "anchor", where).get<std::vector<std::vector<std::string>>>(); });
      if (rows.size() != fibers.size())
        throw Error(ErrorCode::Parse, where + ": anchor has " + std::to_string(rows.size()) + " rows for " +
                                          std::to_string(fibers.size()) + " fibers");
      std::vector<std::vector<Poly>> anchor;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != chart.size())
          throw Error(ErrorCode::Parse, where + "/anchor/" + std::to_string(i) + ": expected " +
                                            std::to_string(chart.size()) + " entries");
        std::vector<Poly> row;
        for (std::size_t a2 = 0; a2 < rows[i].size(); ++a2)
          row.push_back(at(where + "/anchor/" + std::to_string(i), [&] { return parse_poly(rows[i][a2], chart); }));
        anchor.push_back(std::move(row));
      }
      StructureMap c;
      if (a.contains("c"))
        for (const auto& [key, inner] : a.at("c").items()) {
          const std::string w = where + "/c/" + key;
          auto [ij, fib] = at(w, [&] { return parse_key(key); });
          if (ij.size() != 2 || fib >= 0) throw Error(ErrorCode::Parse, w + ": structure keys are \"i,j\"");
          for (const auto& [kk, val] : inner.items()) {
            int k = at(w, [&] { return parse_index(kk, kk); });
            c[{ij[0], ij[1], k}] = at(w + "/" + kk, [&] { return parse_poly(val.get<std::string>(), chart); });
          }
        }
      try {
        m.algebroids[name] = {chart_name, build_algebroid(chart, fibers, anchor, c)};
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) throw;
        throw Error(ErrorCode::Validation, "algebroid \"" + name + "\": " + e.what() + " [" +
                                               std::string(to_string(e.code())) + "]",
                    e.witness(), e.residual());
      }
    }

  if (j.contains("poisson"))
    for (const auto& [name, p] : j.at("poisson").items()) {
      const std::string where = "/poisson/" + name;
      const std::string chart_name = at(where, [&] { return member(p, "chart", where).get<std::string>(); });
      const Chart& chart = chart_of(chart_name, where);
      AlgebroidPtr can = m.owner(chart_name);
      std::map<std::string, std::string> terms =
          at(where, [&] { return member(p, "bivector", where).get<std::map<std::string, std::string>>(); });
      Tensor biv = at(where + "/bivector", [&] { return make_tensor(can, Kind::MultiVector, 2, terms); });
      try {
        m.poisson[name] = {chart_name, build_poisson(chart, biv)};
      } catch (const Error& e) {
        throw Error(ErrorCode::Validation, "poisson \"" + name + "\": " + e.what() + " [" +
                                               std::string(to_string(e.code())) + "]",
                    e.witness(), e.residual());
      }
    }

  if (j.contains("tensors"))
    for (const auto& [name, t] : j.at("tensors").items()) {
      const std::string where = "/tensors/" + name;
      const std::string owner = at(where, [&] { return member(t, "owner", where).get<std::string>(); });
      AlgebroidPtr a = m.owner(owner);
      Kind kind = at(where, [&] { return parse_kind(member(t, "kind", where).get<std::string>()); });
      int degree = at(where, [&] { return member(t, "degree", where).get<int>(); });
      std::map<std::string, std::string> terms;
      if (t.contains("terms")) terms = at(where, [&] { return t.at("terms").get<std::map<std::string, std::string>>(); });
      m.tensors[name] = {owner, at(where + "/terms", [&] { return make_tensor(a, kind, degree, terms); })};
    }

  if (j.contains("suite")) {
    const json& s = j.at("suite");
    m.has_suite = true;
    at("/suite", [&] {
      if (s.contains("seed")) m.suite.seed = s.at("seed").get<std::uint64_t>();
      if (s.contains("trials")) m.suite.trials = s.at("trials").get<int>();
      if (s.contains("max_degree")) m.suite.max_degree = s.at("max_degree").get<int>();
      return 0;
    });
  }
  return m;
}

Model parse_model_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("JSON error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_model(j);
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_model_text(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.witness(), e.residual());
  }
}

json tensor_json(const Tensor& t) {
  json terms = json::object();
  for (const auto& [k, c] : t.terms()) terms[key_string(k)] = poly_text(c, t.owner()->chart());
  return terms;
}

json dump_model(const Model& m) {
  json j = json::object();
  json charts = json::object();
  for (const auto& [name, c] : m.charts) charts[name] = c.names();
  j["charts"] = charts;

  json algs = json::object();
  for (const auto& [name, na] : m.algebroids) {
    const Algebroid& A = *na.algebroid;
    json a;
    a["chart"] = na.chart;
    a["fibers"] = A.fibers();
    json anchor = json::array();
    for (std::size_t i = 0; i < A.rank(); ++i) {
      json row = json::array();
      for (std::size_t x = 0; x < A.dim(); ++x) row.push_back(poly_text(A.anchor(i, x), A.chart()));
      anchor.push_back(row);
    }
    a["anchor"] = anchor;
    json c = json::object();
    for (std::size_t i = 0; i < A.rank(); ++i)
      for (std::size_t k = i + 1; k < A.rank(); ++k) {
        json inner = json::object();
        for (const auto& [h, v] : A.bracket(i, k)) inner[std::to_string(h + 1)] = poly_text(v, A.chart());
        if (!inner.empty()) c[std::to_string(i + 1) + "," + std::to_string(k + 1)] = inner;
      }
    a["c"] = c;
    algs[name] = a;
  }
  j["algebroids"] = algs;

  json poisson = json::object();
  for (const auto& [name, np] : m.poisson)
    poisson[name] = {{"chart", np.chart}, {"bivector", tensor_json(np.poisson->P)}};
  j["poisson"] = poisson;

  json tensors = json::object();
  for (const auto& [name, nt] : m.tensors)
    tensors[name] = {{"owner", nt.owner},
                     {"kind", kind_name(nt.tensor.kind())},
                     {"degree", nt.tensor.degree()},
                     {"terms", tensor_json(nt.tensor)}};
  j["tensors"] = tensors;
  if (m.has_suite)
    j["suite"] = {{"seed", m.suite.seed}, {"trials", m.suite.trials}, {"max_degree", m.suite.max_degree}};
  return j;
}

}  // namespace lac
