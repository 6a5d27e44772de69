#include "lac/poisson.hpp"

namespace lac {

namespace {

void require_chart_form(const PoissonStructure& ps, const Tensor& t) {
  if (!t.owner() || !same_owner(t.owner(), ps.canonical))
    throw Error(ErrorCode::ChartMismatch, "tensor does not live on the Poisson chart");
}

std::vector<int> witness_of(const Tensor& t) {
  if (t.is_zero()) return {};
  std::vector<int> w;
  for (auto i : t.terms().begin()->first.indices()) w.push_back(int(i) + 1);
  return w;
}

AlgebroidPtr build_cotangent(const PoissonStructure& ps) {
  const AlgebroidPtr& can = ps.canonical;
  const std::size_t n = can->dim();
  Algebroid::Data d{can->chart(), {}, {}, {}};
  for (const auto& x : can->chart().names()) d.fibers.push_back(unique_name("d" + x, d.fibers));
  d.anchor = ps.matrix;
  d.c.assign(n * n * n, Poly());
  // Evaluate [dx^a, dx^b]_P = L_{P̃dx^a} dx^b - L_{P̃dx^b} dx^a - d(i_P(dx^a ∧ dx^b)).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Tensor ea = Tensor::basis(can, Kind::Form, {int(a)});
      Tensor eb = Tensor::basis(can, Kind::Form, {int(b)});
      Tensor v = lie_derivative(ps.sharp[a], eb) - lie_derivative(ps.sharp[b], ea) -
                 d_tau(contract(ps.P, wedge(ea, eb)));
      for (const auto& [key, coef] : v.terms()) {
        d.c[(a * n + b) * n + key.idx[0]] = coef;
        d.c[(b * n + a) * n + key.idx[0]] = -coef;
      }
    }
  return Algebroid::make(std::move(d), Origin::PoissonCotangent, can);
}

// Inverse of a constant matrix over Q; NotInvertible otherwise.
std::vector<std::vector<Rational>> invert(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto v = m[i][j].constant_value();
      if (!v) throw Error(ErrorCode::NotInvertible, "P̃ has non-constant entries");
      a[i][j] = *v;
    }
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::NotInvertible, "P̃ is singular");
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

PoissonPtr build_poisson(const Tensor& p) {
  require_kind(p, Kind::MultiVector, "build_poisson");
  if (!p.owner()->is_canonical())
    throw Error(ErrorCode::ChartMismatch, "a Poisson bivector must live on a canonical algebroid");
  if (p.degree() != 2 && !p.is_zero()) throw Error(ErrorCode::KindMismatch, "a Poisson structure is a bivector");
  Tensor pp = schouten(p, p);
  if (!pp.is_zero())
    throw Error(ErrorCode::NotPoisson, "[P, P] does not vanish", witness_of(pp), to_string(pp));

  auto ps = std::make_shared<PoissonStructure>();
  ps->canonical = p.owner();
  ps->P = p.degree() == 2 ? p : Tensor(p.owner(), Kind::MultiVector, 2);
  const std::size_t n = ps->canonical->dim();
  ps->matrix.assign(n, std::vector<Poly>(n));
  for (const auto& [key, c] : ps->P.terms()) {
    ps->matrix[key.idx[0]][key.idx[1]] += c;
    ps->matrix[key.idx[1]][key.idx[0]] -= c;
  }
  for (std::size_t a = 0; a < n; ++a) {
    Tensor s(ps->canonical, Kind::MultiVector, 1);
    for (std::size_t b = 0; b < n; ++b) s.add(std::vector<int>{int(b)}, -1, ps->matrix[a][b]);
    ps->sharp.push_back(std::move(s));
  }
  ps->cotangent = build_cotangent(*ps);
  return ps;
}

PoissonPtr build_poisson(const Chart& chart, const Tensor& p) {
  if (!(p.owner()->chart() == chart)) throw Error(ErrorCode::ChartMismatch, "bivector is not over the given chart");
  return build_poisson(p);
}

PoissonPtr make_linear_poisson(const AlgebroidPtr& a) {
  const std::size_t n = a->dim(), m = a->rank();
  AlgebroidPtr dual = a->dual_canonical();
  Tensor p(dual, Kind::MultiVector, 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [x, delta] : a->anchor_row(i)) p.add(std::vector<int>{int(n + i), x}, -1, delta);
    for (std::size_t j = i + 1; j < m; ++j)
      for (const auto& [k, c] : a->bracket(i, j))
        p.add(std::vector<int>{int(n + i), int(n + j)}, -1, c * Poly::variable(n + k));
  }
  return build_poisson(p);
}

Poly poisson_bracket(const PoissonStructure& ps, const Poly& f, const Poly& g) {
  const std::size_t n = ps.canonical->dim();
  if (f.var_span() > n || g.var_span() > n) throw Error(ErrorCode::ChartMismatch, "function outside the chart");
  Poly out;
  for (std::size_t a = 0; a < n; ++a) {
    Poly fa = f.partial(a);
    if (fa.is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (!ps.matrix[a][b].is_zero()) out += ps.matrix[a][b] * fa * g.partial(b);
  }
  return out;
}

const AlgebroidPtr& cotangent_algebroid(const PoissonStructure& ps) { return ps.cotangent; }

Tensor to_cotangent(const PoissonStructure& ps, const Tensor& form) {
  require_chart_form(ps, form);
  require_kind(form, Kind::Form, "to_cotangent");
  Tensor out(ps.cotangent, Kind::MultiVector, form.degree());
  for (const auto& [k, c] : form.terms()) out.add(k, c);
  return out;
}

Tensor from_cotangent(const PoissonStructure& ps, const Tensor& mv) {
  if (!same_owner(mv.owner(), ps.cotangent)) throw Error(ErrorCode::ChartMismatch, "not over the cotangent algebroid");
  require_kind(mv, Kind::MultiVector, "from_cotangent");
  Tensor out(ps.canonical, Kind::Form, mv.degree());
  for (const auto& [k, c] : mv.terms()) out.add(k, c);
  return out;
}

Tensor d_pi(const PoissonStructure& ps, const Tensor& x) {
  require_chart_form(ps, x);
  require_kind(x, Kind::MultiVector, "d_π");
  Tensor f(ps.cotangent, Kind::Form, x.degree());
  for (const auto& [k, c] : x.terms()) f.add(k, c);
  Tensor df = d_tau(f);
  Tensor out(ps.canonical, Kind::MultiVector, df.degree());
  for (const auto& [k, c] : df.terms()) out.add(k, c);
  return out;
}

Tensor koszul_schouten(const PoissonStructure& ps, const Tensor& mu, const Tensor& nu) {
  return from_cotangent(ps, schouten(to_cotangent(ps, mu), to_cotangent(ps, nu)));
}

Tensor lambda_P(const PoissonStructure& ps, const Tensor& t, LambdaMode mode) {
  require_chart_form(ps, t);
  if (mode == LambdaMode::Inverse) {
    require_kind(t, Kind::MultiVector, "inverse Λ_P");
    auto inv = invert(ps.matrix);
    const std::size_t n = inv.size();
    std::vector<Tensor> flat;
    for (std::size_t b = 0; b < n; ++b) {
      Tensor f(ps.canonical, Kind::Form, 1);
      for (std::size_t a = 0; a < n; ++a) f.add(std::vector<int>{int(a)}, -1, Poly(inv[b][a]));
      flat.push_back(std::move(f));
    }
    Tensor out(ps.canonical, Kind::Form, t.degree());
    for (const auto& [key, c] : t.terms()) {
      Tensor w = Tensor::function(ps.canonical, Kind::Form, c);
      for (auto i : key.indices()) w = wedge(w, flat[i]);
      out += w;
    }
    return out;
  }
  require_kind(t, Kind::Form, "Λ_P");
  Tensor out(ps.canonical, Kind::MultiVector, t.degree());
  for (const auto& [key, c] : t.terms()) {
    Tensor w = Tensor::function(ps.canonical, Kind::MultiVector, c);
    for (auto i : key.indices()) w = wedge(w, ps.sharp[i]);
    out += w;
  }
  if (mode == LambdaMode::Star && t.degree() % 2) out = -out;
  return out;
}

Tensor R_P(const PoissonStructure& ps, const Tensor& mu) {
  require_chart_form(ps, mu);
  require_kind(mu, Kind::Form, "R_P");
  const int k = mu.degree();
  Tensor out(ps.canonical, Kind::Mixed, std::max(0, k - 1));
  if (k == 0) return out;
  // R_P(f dx^J) = Σ_r (-1)^r f dx^{J∖j_r} ⊗ P̃(dx^{j_r})
  for (const auto& [key, f] : mu.terms())
    for (int r = 0; r < k; ++r) {
      std::vector<int> rest;
      for (int s = 0; s < k; ++s)
        if (s != r) rest.push_back(key.idx[s]);
      Poly c = r % 2 ? -f : f;
      for (const auto& [b, pk] : ps.sharp[key.idx[r]].terms()) out.add(rest, b.idx[0], c * pk);
    }
  return out;
}

Tensor H_P(const PoissonStructure& ps, const Tensor& mu) { return R_P(ps, d_tau(mu)); }

Tensor G_P(const PoissonStructure& ps, const Tensor& mu) { return lambda_P(ps, d_tau(mu)); }

Tensor extended_bracket(const PoissonStructure& ps, const Tensor& mu, const Tensor& nu) {
  require_chart_form(ps, mu);
  require_chart_form(ps, nu);
  Tensor out = lie_derivative(H_P(ps, mu), nu);
  if (mu.degree() > 0) {
    Tensor r = R_P(ps, mu);
    if (!r.is_zero()) out += d_tau(lie_derivative(r, nu));
  }
  return out;
}

}  // namespace lac
