#include "lac/algebroid.hpp"

#include <algorithm>
#include <unordered_set>

#include "lac/poisson.hpp"

namespace lac {

struct Algebroid::Cache {
  std::once_flag base_once, dual_once, total_once, tangent_once, cotangent_once, tancan_once, poisson_once;
  AlgebroidPtr base, dual, total, tangent, cotangent, tancan;
  PoissonPtr poisson;
};

Algebroid::~Algebroid() = default;

namespace {

bool is_label(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || c == '_')) return false;
  }
  return true;
}

VectorField anchor_field(const Algebroid& a, std::size_t i) {
  VectorField v(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) v[k] = a.anchor(i, k);
  return v;
}

std::string section_string(const Algebroid& a, const std::vector<Poly>& coefs) {
  std::vector<std::pair<std::string, const Poly*>> parts;
  std::vector<std::string> names;
  names.reserve(coefs.size());
  for (std::size_t k = 0; k < coefs.size(); ++k) names.push_back(a.vector_name(k));
  for (std::size_t k = 0; k < coefs.size(); ++k) parts.emplace_back(names[k], &coefs[k]);
  return format_combination(parts, a.chart());
}

std::string fingerprint_of(const Algebroid& a) {
  std::string f = std::to_string(static_cast<int>(a.origin())) + "|";
  for (const auto& n : a.chart().names()) f += n + ",";
  f += "|";
  for (const auto& n : a.fibers()) f += n + ",";
  f += "|";
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (const auto& [k, p] : a.anchor_row(i)) f += std::to_string(i) + ":" + std::to_string(k) + "=" + to_string(p, a.chart()) + ";";
  f += "|";
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i + 1; j < a.rank(); ++j)
      for (const auto& [k, p] : a.bracket(i, j))
        f += std::to_string(i) + "," + std::to_string(j) + ":" + std::to_string(k) + "=" + to_string(p, a.chart()) + ";";
  return f;
}

}  // namespace

Poly Algebroid::act(std::size_t i, const Poly& f) const {
  Poly out;
  for (const auto& [a, d] : anchor_nz_[i]) {
    Poly df = f.partial(a);
    if (!df.is_zero()) out += d * df;
  }
  return out;
}

AlgebroidPtr Algebroid::make(Data data, Origin origin, AlgebroidPtr source) {
  const std::size_t n = data.chart.size(), m = data.fibers.size();
  if (m == 0) throw Error(ErrorCode::EmptyChart, "an algebroid needs rank at least 1");
  if (m > kMaxVars) throw Error(ErrorCode::DimensionMismatch, "rank exceeds " + std::to_string(kMaxVars));
  std::unordered_set<std::string> seen;
  for (const auto& f : data.fibers) {
    if (!is_label(f)) throw Error(ErrorCode::InvalidChart, "invalid fiber label '" + f + "'");
    if (!seen.insert(f).second) throw Error(ErrorCode::InvalidChart, "duplicate fiber label '" + f + "'");
  }
  if (data.anchor.size() != m) throw Error(ErrorCode::DimensionMismatch, "anchor needs one row per fiber");
  for (const auto& row : data.anchor)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "anchor rows need one entry per coordinate");
  if (data.c.size() != m * m * m) throw Error(ErrorCode::DimensionMismatch, "structure table has the wrong size");
  auto check_span = [&](const Poly& p) {
    if (p.var_span() > n) throw Error(ErrorCode::DimensionMismatch, "coefficient uses coordinates outside the chart");
  };
  for (const auto& row : data.anchor)
    for (const auto& p : row) check_span(p);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const auto& a = data.c[(i * m + j) * m + k];
        const auto& b = data.c[(j * m + i) * m + k];
        check_span(a);
        if (!(a == -b)) throw Error(ErrorCode::DimensionMismatch, "structure functions must be antisymmetric");
      }

  std::shared_ptr<Algebroid> a(new Algebroid());
  a->chart_ = std::move(data.chart);
  a->fibers_ = std::move(data.fibers);
  a->anchor_ = std::move(data.anchor);
  a->c_ = std::move(data.c);
  a->origin_ = origin;
  a->source_ = source;
  a->cache_ = std::make_unique<Cache>();
  a->anchor_nz_.resize(m);
  a->c_nz_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!a->anchor_[i][k].is_zero()) a->anchor_nz_[i].emplace_back(int(k), a->anchor_[i][k]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!a->c(i, j, k).is_zero()) a->c_nz_[i * m + j].emplace_back(int(k), a->c(i, j, k));

  bool canon = origin == Origin::Canonical;
  if (!canon && m == n) {
    canon = true;
    for (std::size_t i = 0; i < m && canon; ++i) {
      if (a->fibers_[i] != a->chart_.name(i)) canon = false;
      for (std::size_t k = 0; k < n && canon; ++k)
        if (!(a->anchor_[i][k] == Poly(i == k ? 1 : 0))) canon = false;
      for (std::size_t j = 0; j < m && canon; ++j)
        if (!a->c_nz_[i * m + j].empty()) canon = false;
    }
  }
  a->canonical_ = canon;
  if (canon) a->origin_ = Origin::Canonical;

  // Anchor is a bracket morphism: [α_i, α_j] = c_ij^k α_k.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      VectorField r = vector_field_bracket(anchor_field(*a, i), anchor_field(*a, j));
      for (const auto& [k, c] : a->bracket(i, j))
        for (std::size_t b = 0; b < n; ++b) r[b] -= c * a->anchor(k, b);
      if (std::any_of(r.begin(), r.end(), [](const Poly& p) { return !p.is_zero(); }))
        throw Error(ErrorCode::AnchorNotMorphism,
                    "anchor is not a bracket morphism on (" + a->fibers_[i] + ", " + a->fibers_[j] + ")",
                    {int(i) + 1, int(j) + 1}, to_string(r, a->chart_));
    }

  // Jacobi on basis triples; [[e_i,e_j],e_k] = (c_ij^l c_lk^r - α_k(c_ij^r)) e_r.
  auto double_bracket = [&](std::size_t i, std::size_t j, std::size_t k, std::vector<Poly>& acc) {
    for (const auto& [l, cl] : a->bracket(i, j)) {
      for (const auto& [r, cr] : a->bracket(l, k)) acc[r] += cl * cr;
      acc[l] -= a->act(k, cl);
    }
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        std::vector<Poly> acc(m);
        double_bracket(i, j, k, acc);
        double_bracket(j, k, i, acc);
        double_bracket(k, i, j, acc);
        if (std::any_of(acc.begin(), acc.end(), [](const Poly& p) { return !p.is_zero(); }))
          throw Error(ErrorCode::JacobiViolation,
                      "Jacobi identity fails on (" + a->fibers_[i] + ", " + a->fibers_[j] + ", " + a->fibers_[k] + ")",
                      {int(i) + 1, int(j) + 1, int(k) + 1}, section_string(*a, acc));
      }

  a->fingerprint_ = fingerprint_of(*a);
  a->self_ = a;
  return a;
}

std::string Algebroid::vector_name(std::size_t i) const {
  switch (origin_) {
    case Origin::Canonical: return "∂" + chart_.name(i);
    case Origin::CotangentLift:
    case Origin::PoissonCotangent: return fibers_.at(i);
    default: return "e" + fibers_.at(i);
  }
}

std::string Algebroid::form_name(std::size_t i) const {
  if (origin_ == Origin::Canonical) return "d" + chart_.name(i);
  return "e*" + fibers_.at(i);
}

namespace {

std::vector<std::string> fresh_names(const Chart& chart, const std::vector<std::string>& wants) {
  std::vector<std::string> used = chart.names(), out;
  for (const auto& w : wants) {
    out.push_back(unique_name(w, used));
    used.push_back(out.back());
  }
  return out;
}

}  // namespace

std::string Algebroid::dual_coordinate(std::size_t i) const { return dual_canonical()->chart().name(dim() + i); }

std::string Algebroid::total_coordinate(std::size_t i) const { return total_canonical()->chart().name(dim() + i); }

AlgebroidPtr Algebroid::base_canonical() const {
  std::call_once(cache_->base_once, [&] {
    if (canonical_) cache_->base = self_.lock();
    else if (!chart_.empty()) cache_->base = canonical_algebroid(chart_);
  });
  if (!cache_->base) throw Error(ErrorCode::EmptyChart, "base chart is empty");
  return cache_->base;
}

AlgebroidPtr Algebroid::dual_canonical() const {
  std::call_once(cache_->dual_once, [&] {
    std::vector<std::string> wants;
    for (const auto& f : fibers_) wants.push_back((canonical_ ? "p_" : "xi_") + f);
    cache_->dual = canonical_algebroid(chart_.extended(fresh_names(chart_, wants)));
  });
  return cache_->dual;
}

AlgebroidPtr Algebroid::total_canonical() const {
  std::call_once(cache_->total_once, [&] {
    std::vector<std::string> wants;
    for (const auto& f : fibers_) wants.push_back("y_" + f);
    cache_->total = canonical_algebroid(chart_.extended(fresh_names(chart_, wants)));
  });
  return cache_->total;
}

AlgebroidPtr Algebroid::tangent() const {
  std::call_once(cache_->tangent_once, [&] {
    const std::size_t n = dim(), m = rank();
    std::vector<std::string> wants;
    for (const auto& x : chart_.names()) wants.push_back(x + "_dot");
    Data d{chart_.extended(fresh_names(chart_, wants)), {}, {}, {}};
    std::vector<std::string> labels;
    for (const auto& f : fibers_) labels.push_back(f + "_bar");
    for (const auto& f : fibers_) labels.push_back(unique_name(f + "_dot", labels));
    d.fibers = labels;
    const std::size_t M = 2 * m, N = 2 * n;
    d.anchor.assign(M, std::vector<Poly>(N));
    // ē_i ↦ δ_i^a ∂_{ẋ^a};  ė_i ↦ δ_i^a ∂_{x^a} + (∂_b δ_i^a) ẋ^b ∂_{ẋ^a}
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& [a, delta] : anchor_nz_[i]) {
        d.anchor[i][n + a] = delta;
        d.anchor[m + i][a] = delta;
        for (std::size_t b = 0; b < n; ++b) d.anchor[m + i][n + a] += delta.partial(b) * Poly::variable(n + b);
      }
    d.c.assign(M * M * M, Poly());
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Poly& p) {
      d.c[(i * M + j) * M + k] += p;
      d.c[(j * M + i) * M + k] -= p;
    };
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (const auto& [k, c] : c_nz_[i * m + j]) {
          // [ē_i, ė_j] = c_ij^k ē_k, counted once per ordered pair.
          set(i, m + j, k, c);
          if (i < j) {
            set(m + i, m + j, m + k, c);
            Poly dc;
            for (std::size_t a = 0; a < n; ++a) dc += c.partial(a) * Poly::variable(n + a);
            set(m + i, m + j, k, dc);
          }
        }
    cache_->tangent = make(std::move(d), Origin::TangentLift, self_.lock());
  });
  return cache_->tangent;
}

AlgebroidPtr Algebroid::cotangent() const {
  std::call_once(cache_->cotangent_once, [&] {
    const std::size_t n = dim(), m = rank();
    const Chart& chart = dual_canonical()->chart();
    Data d{chart, {}, {}, {}};
    for (const auto& x : chart.names()) d.fibers.push_back(unique_name("d" + x, d.fibers));
    const std::size_t R = n + m;
    d.anchor.assign(R, std::vector<Poly>(R));
    // dx^a ↦ -δ_i^a ∂_{ξ_i};  dξ_i ↦ δ_i^a ∂_{x^a} + c_ij^k ξ_k ∂_{ξ_j}
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& [a, delta] : anchor_nz_[i]) {
        d.anchor[a][n + i] -= delta;
        d.anchor[n + i][a] += delta;
      }
      for (std::size_t j = 0; j < m; ++j)
        for (const auto& [k, c] : c_nz_[i * m + j]) d.anchor[n + i][n + j] += c * Poly::variable(n + k);
    }
    d.c.assign(R * R * R, Poly());
    auto add = [&](std::size_t i, std::size_t j, std::size_t k, const Poly& p) { d.c[(i * R + j) * R + k] += p; };
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& [a, delta] : anchor_nz_[i])
        for (std::size_t b = 0; b < n; ++b) {
          Poly p = delta.partial(b);
          if (p.is_zero()) continue;
          add(n + i, a, b, p);
          add(a, n + i, b, -p);
        }
      for (std::size_t j = 0; j < m; ++j)
        for (const auto& [k, c] : c_nz_[i * m + j]) {
          add(n + i, n + j, n + k, c);
          for (std::size_t b = 0; b < n; ++b) {
            Poly p = c.partial(b);
            if (!p.is_zero()) add(n + i, n + j, b, p * Poly::variable(n + k));
          }
        }
    }
    cache_->cotangent = make(std::move(d), Origin::CotangentLift, self_.lock());
  });
  return cache_->cotangent;
}

AlgebroidPtr Algebroid::tangent_canonical() const {
  std::call_once(cache_->tancan_once, [&] { cache_->tancan = canonical_algebroid(tangent()->chart()); });
  return cache_->tancan;
}

PoissonPtr Algebroid::linear_poisson() const {
  std::call_once(cache_->poisson_once, [&] { cache_->poisson = make_linear_poisson(self_.lock()); });
  return cache_->poisson;
}

bool same_owner(const Algebroid& a, const Algebroid& b) {
  return &a == &b || a.fingerprint() == b.fingerprint();
}

AlgebroidPtr build_algebroid(const Chart& base, const std::vector<std::string>& fibers,
                             const std::vector<std::vector<Poly>>& anchor, const StructureMap& structure) {
  const std::size_t m = fibers.size();
  Algebroid::Data d{base, fibers, anchor, std::vector<Poly>(m * m * m)};
  for (const auto& [key, p] : structure) {
    auto [i, j, k] = key;
    if (i < 0 || j < 0 || k < 0 || std::size_t(j) >= m || std::size_t(k) >= m || i >= j)
      throw Error(ErrorCode::DimensionMismatch,
                  "structure key (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                      std::to_string(k + 1) + ") must satisfy i < j <= rank");
    d.c[(i * m + j) * m + k] += p;
    d.c[(j * m + i) * m + k] -= p;
  }
  return Algebroid::make(std::move(d));
}

AlgebroidPtr canonical_algebroid(const Chart& chart) {
  if (chart.empty()) throw Error(ErrorCode::EmptyChart, "canonical algebroid of an empty chart has rank 0");
  const std::size_t n = chart.size();
  Algebroid::Data d{chart, chart.names(), std::vector<std::vector<Poly>>(n, std::vector<Poly>(n)),
                    std::vector<Poly>(n * n * n)};
  for (std::size_t i = 0; i < n; ++i) d.anchor[i][i] = Poly(1);
  return Algebroid::make(std::move(d), Origin::Canonical);
}

AlgebroidPtr tangent_lift(const AlgebroidPtr& a) { return a->tangent(); }
AlgebroidPtr cotangent_lift(const AlgebroidPtr& a) { return a->cotangent(); }

VectorField vector_field_bracket(const VectorField& u, const VectorField& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "vector fields over different charts");
  const std::size_t n = u.size();
  VectorField w(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      if (!u[a].is_zero()) w[b] += u[a] * v[b].partial(a);
      if (!v[a].is_zero()) w[b] -= v[a] * u[b].partial(a);
    }
  return w;
}

std::string to_string(const VectorField& v, const Chart& chart) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < v.size(); ++a) names.push_back("∂" + chart.name(a));
  std::vector<std::pair<std::string, const Poly*>> parts;
  for (std::size_t a = 0; a < v.size(); ++a) parts.emplace_back(names[a], &v[a]);
  return format_combination(parts, chart);
}

std::string unique_name(const std::string& want, const std::vector<std::string>& used) {
  auto taken = [&](const std::string& s) { return std::find(used.begin(), used.end(), s) != used.end(); };
  if (!taken(want)) return want;
  for (int k = 2;; ++k) {
    std::string s = want + std::to_string(k);
    if (!taken(s)) return s;
  }
}

}  // namespace lac
