#include "suite_detail.hpp"

namespace lac::suite_detail {

namespace {

using K = Kind;

Tensor pform(Ctx& c, const std::string& name, int lo, int hi) {
  return c.tensor(name, c.ps().canonical, K::Form, c.degree(c.ps().canonical, lo, hi));
}
Poly pfun(Ctx& c, const std::string& name) { return c.function(name, c.ps().canonical).scalar(); }
Tensor fn(const PoissonStructure& ps, const Poly& f) { return Tensor::function(ps.canonical, K::Form, f); }
Tensor dfn(const PoissonStructure& ps, const Poly& f) { return d_tau(fn(ps, f)); }

void add_eq_2(Registry& r) {
  Suite s{"eq-2-2", {}};
  s.items.push_back({"eq-2-2.d-pi", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor x = c.tensor("X", ps.canonical, K::MultiVector, c.degree(ps.canonical, 0, 3));
                       c.eq(d_pi(ps, x), schouten(ps.P, x), "d_π X = [P,X]");
                     }});
  s.items.push_back({"eq-2-2.eq-2-1", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = c.tensor("mu", ps.canonical, K::Form, 1), nu = c.tensor("nu", ps.canonical, K::Form, 1);
                       Tensor rhs = lie_derivative(lambda_P(ps, mu), nu) - lie_derivative(lambda_P(ps, nu), mu) -
                                    d_tau(contract(ps.P, wedge(mu, nu)));
                       c.eq(koszul_schouten(ps, mu, nu), rhs, "[μ,ν]_P on 1-forms");
                     }});
  s.items.push_back({"eq-2-2.hamiltonian", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Poly f = pfun(c, "f");
                       Tensor ham = lambda_P(ps, dfn(ps, f));
                       c.eq(ham, -schouten(ps.P, Tensor::function(ps.canonical, K::MultiVector, f)), "P̃(df) = -[P,f]");
                       c.eq(as_section(H_P(ps, fn(ps, f))), ham, "H_P(f) = P̃(df)");
                       c.eq(G_P(ps, fn(ps, f)), ham, "G_P(f) = P̃(df)");
                     }});
  r.push_back(std::move(s));

  Suite k{"eq-2-6", {}};
  k.items.push_back({"eq-2-6.koszul", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = pform(c, "mu", 0, 3), nu = pform(c, "nu", 0, 3);
                       Tensor rhs = contract_mixed(H_P(ps, mu), nu);
                       if (mu.degree() > 0) rhs -= sgn(mu.degree()) * lie_derivative(R_P(ps, mu), nu);
                       c.eq(koszul_schouten(ps, mu, nu), rhs, "[μ,ν]_P = i_{Hμ}ν - (-1)^k L_{Rμ}ν");
                     }});
  k.items.push_back({"eq-2-6.r-derivation", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = pform(c, "mu", 1, 2), nu = pform(c, "nu", 1, 2);
                       c.eq(R_P(ps, wedge(mu, nu)), wedge(R_P(ps, mu), nu) + sgn(mu.degree()) * wedge(mu, R_P(ps, nu)),
                            "R(μ∧ν) = Rμ∧ν + (-1)^k μ∧Rν");
                     }});
  k.items.push_back({"eq-2-6.lambda-wedge", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = pform(c, "mu", 0, 2), nu = pform(c, "nu", 0, 2);
                       c.eq(lambda_P(ps, wedge(mu, nu)), wedge(lambda_P(ps, mu), lambda_P(ps, nu)), "Λ(μ∧ν) = Λμ∧Λν");
                     }});
  r.push_back(std::move(k));
}

void add_theorem5(Registry& r) {
  Suite s{"theorem-5", {}};
  s.items.push_back({"theorem-5.a", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = pform(c, "mu", 0, 3), nu = pform(c, "nu", 0, 3);
                       c.eq(lambda_P(ps, koszul_schouten(ps, mu, nu)), schouten(lambda_P(ps, mu), lambda_P(ps, nu)),
                            "Λ[μ,ν]_P = [Λμ,Λν]");
                     }});
  r.push_back(std::move(s));
}

// Right-hand side of the expansion of {g0 dg1∧…∧dgk, f0 df1∧…∧dfl}.
Tensor eq_2_8(const PoissonStructure& ps, const std::vector<Poly>& g, const std::vector<Poly>& f) {
  const int k = int(g.size()) - 1, l = int(f.size()) - 1;
  auto br = [&](const Poly& a, const Poly& b) { return poisson_bracket(ps, a, b); };
  auto ds = [&](const std::vector<Poly>& h, int from, int skip) {
    std::vector<Tensor> out;
    for (int i = from; i < int(h.size()); ++i)
      if (i != skip) out.push_back(dfn(ps, h[i]));
    return out;
  };
  auto join = [](std::vector<Tensor> a, const std::vector<Tensor>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  Tensor out(ps.canonical, K::Form, k + l);
  out += br(g[0], f[0]) * wedge_all(ps.canonical, K::Form, join(ds(g, 1, -1), ds(f, 1, -1)));
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j <= l; ++j)
      out -= (Poly(sgn(i + j)) * g[0]) *
             wedge_all(ps.canonical, K::Form, join(join({dfn(ps, br(g[i], f[j]))}, ds(g, 1, i)), ds(f, 0, j)));
  for (int j = 1; j <= l; ++j)
    for (int i = 0; i <= k; ++i)
      out -= (Poly(sgn(k + i + j)) * f[0]) *
             wedge_all(ps.canonical, K::Form, join(join({dfn(ps, br(g[i], f[j]))}, ds(g, 0, i)), ds(f, 1, j)));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j)
      out -= (Poly(sgn(i + j)) * br(g[i], f[j])) * wedge_all(ps.canonical, K::Form, join(ds(g, 0, i), ds(f, 0, j)));
  return out;
}

Tensor decomposable(const PoissonStructure& ps, const std::vector<Poly>& h) {
  std::vector<Tensor> fs{fn(ps, h[0])};
  for (std::size_t i = 1; i < h.size(); ++i) fs.push_back(dfn(ps, h[i]));
  return wedge_all(ps.canonical, K::Form, fs);
}

void add_theorem6(Registry& r) {
  Suite s{"theorem-6", {}};
  s.items.push_back({"theorem-6.functions", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Poly f = pfun(c, "f"), g = pfun(c, "g");
                       c.eq(extended_bracket(ps, fn(ps, f), fn(ps, g)), fn(ps, poisson_bracket(ps, f, g)),
                            "{f,g} is the Poisson bracket");
                     }});
  s.items.push_back({"theorem-6.antisymmetry", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = pform(c, "mu", 0, 3), nu = pform(c, "nu", 0, 3);
                       c.eq(extended_bracket(ps, mu, nu), -(sgn(mu.degree() * nu.degree()) * extended_bracket(ps, nu, mu)),
                            "{μ,ν} = -(-1)^{kl}{ν,μ}");
                     }});
  s.items.push_back({"theorem-6.jacobi", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = pform(c, "mu", 0, 2), nu = pform(c, "nu", 0, 2), th = pform(c, "theta", 0, 2);
                       auto b = [&](const Tensor& a, const Tensor& e) { return extended_bracket(ps, a, e); };
                       c.eq(b(mu, b(nu, th)), b(b(mu, nu), th) + sgn(mu.degree() * nu.degree()) * b(nu, b(mu, th)),
                            "{μ,{ν,θ}} = {{μ,ν},θ} + (-1)^{kl}{ν,{μ,θ}}");
                     }});
  s.items.push_back({"theorem-6.d-compatible", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = pform(c, "mu", 0, 2), nu = pform(c, "nu", 0, 2);
                       c.eq(extended_bracket(ps, d_tau(mu), nu), d_tau(extended_bracket(ps, mu, nu)), "{dμ,ν} = d{μ,ν}");
                     }});
  for (auto [k, l] : {std::pair{0, 1}, std::pair{1, 1}}) {
    const std::string id = "theorem-6.eq-2-8-" + std::to_string(k) + std::to_string(l);
    s.items.push_back({id, Scope::Poisson, [k, l](Ctx& c) {
                         const auto& ps = c.ps();
                         std::vector<Poly> g, f;
                         for (int i = 0; i <= k; ++i) g.push_back(pfun(c, "g" + std::to_string(i)));
                         for (int j = 0; j <= l; ++j) f.push_back(pfun(c, "f" + std::to_string(j)));
                         c.eq(extended_bracket(ps, decomposable(ps, g), decomposable(ps, f)), eq_2_8(ps, g, f),
                              "four-term expansion");
                       }});
  }
  r.push_back(std::move(s));
}

void add_theorem7(Registry& r) {
  Suite s{"theorem-7", {}};
  s.items.push_back({"theorem-7.a", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = pform(c, "mu", 0, 2), nu = pform(c, "nu", 0, 2);
                       c.eq(koszul_schouten(ps, d_tau(mu), d_tau(nu)), d_tau(extended_bracket(ps, mu, nu)),
                            "[dμ,dν]_P = d{μ,ν}");
                     }});
  s.items.push_back({"theorem-7.b", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = pform(c, "mu", 0, 2), nu = pform(c, "nu", 0, 2);
                       c.eq(H_P(ps, extended_bracket(ps, mu, nu)), fn_bracket(H_P(ps, mu), H_P(ps, nu)),
                            "H{μ,ν} = [Hμ,Hν]^{F-N}");
                     }});
  s.items.push_back({"theorem-7.c", Scope::Poisson, [](Ctx& c) {
                       const auto& ps = c.ps();
                       Tensor mu = pform(c, "mu", 0, 2), nu = pform(c, "nu", 0, 2);
                       c.eq(G_P(ps, extended_bracket(ps, mu, nu)), schouten(G_P(ps, mu), G_P(ps, nu)), "G{μ,ν} = [Gμ,Gν]");
                     }});
  r.push_back(std::move(s));
}

// ---- linear Poisson structures and their tangent lift -------------------

// P = ½ c_ij^k ξ_k ∂ξi∧∂ξj + δ_i^a ∂ξi∧∂xa on (x, ξ).
Tensor linear_oracle(const Algebroid& a) {
  const int n = int(a.dim()), m = int(a.rank());
  Tensor p(a.dual_canonical(), K::MultiVector, 2);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j)
      for (int k = 0; k < m; ++k) p.add(std::vector<int>{n + i, n + j}, -1, a.c(i, j, k) * Poly::variable(n + k));
    for (int b = 0; b < n; ++b) p.add(std::vector<int>{n + i, b}, -1, a.anchor(i, b));
  }
  return p;
}

struct TangentChart {
  int n, m, N;
  int x(int a) const { return a; }
  int xi(int i) const { return n + i; }
  int xd(int a) const { return N + a; }
  int xid(int i) const { return N + n + i; }
};

Poly dot(const Poly& f, const TangentChart& t) {
  Poly out;
  for (int b = 0; b < t.n; ++b) out += f.partial(b) * Poly::variable(t.xd(b));
  return out;
}

// d_T P for linear P with dots restored on the lifted factors.
Tensor reconciled_3_9(const Algebroid& a, const AlgebroidPtr& owner) {
  TangentChart t{int(a.dim()), int(a.rank()), int(a.dim() + a.rank())};
  Tensor p(owner, K::MultiVector, 2);
  auto add = [&](int u, int v, const Poly& f) {
    if (!f.is_zero()) p.add(std::vector<int>{u, v}, -1, f);
  };
  for (int i = 0; i < t.m; ++i)
    for (int j = 0; j < t.m; ++j)
      for (int k = 0; k < t.m; ++k) {
        const Poly& c = a.c(i, j, k);
        add(t.xi(i), t.xid(j), c * Poly::variable(t.xi(k)));
        if (i < j) {
          add(t.xid(i), t.xid(j), c * Poly::variable(t.xid(k)));
          add(t.xid(i), t.xid(j), dot(c, t) * Poly::variable(t.xi(k)));
        }
      }
  for (int i = 0; i < t.m; ++i)
    for (int b = 0; b < t.n; ++b) {
      const Poly& d = a.anchor(i, b);
      add(t.xi(i), t.xd(b), d);
      add(t.xid(i), t.x(b), d);
      add(t.xid(i), t.xd(b), dot(d, t));
    }
  return p;
}

// The coordinate formula read literally: no dots on the lifted factors.
Tensor literal_3_9(const Algebroid& a, const AlgebroidPtr& owner) {
  TangentChart t{int(a.dim()), int(a.rank()), int(a.dim() + a.rank())};
  Tensor p(owner, K::MultiVector, 2);
  auto add = [&](int u, int v, const Poly& f) {
    if (!f.is_zero() && u != v) p.add(std::vector<int>{u, v}, -1, f);
  };
  for (int i = 0; i < t.m; ++i)
    for (int j = 0; j < t.m; ++j)
      for (int k = 0; k < t.m; ++k) {
        const Poly& c = a.c(i, j, k);
        add(t.xi(i), t.xi(j), c * Poly::variable(t.xi(k)));
        if (i < j) {
          add(t.xi(i), t.xi(j), c * Poly::variable(t.xid(k)));
          add(t.xi(i), t.xi(j), dot(c, t) * Poly::variable(t.xi(k)));
        }
      }
  for (int i = 0; i < t.m; ++i)
    for (int b = 0; b < t.n; ++b) {
      const Poly& d = a.anchor(i, b);
      add(t.xi(i), t.x(b), d);
      add(t.xi(i), t.x(b), d);
      add(t.xi(i), t.x(b), dot(d, t));
    }
  return p;
}

void add_eq_3(Registry& r) {
  Suite s{"eq-3-9", {}};
  s.items.push_back({"eq-3-9.eq-3-4", Scope::Algebroids, [](Ctx& c) {
                       c.eq(c.A()->linear_poisson()->P, linear_oracle(*c.A()), "linear Poisson structure in coordinates");
                     },
                     true});
  s.items.push_back({"eq-3-9.poisson", Scope::Poisson, [](Ctx& c) {
                       PoissonPtr tp = tangent_poisson(c.ps());
                       c.zero(schouten(tp->P, tp->P), "[d_T P, d_T P] = 0");
                     },
                     true});
  s.items.push_back({"eq-3-9.linear-poisson", Scope::Algebroids, [](Ctx& c) {
                       PoissonPtr tp = tangent_poisson(*c.A()->linear_poisson());
                       c.zero(schouten(tp->P, tp->P), "[d_T P, d_T P] = 0");
                     },
                     true});
  s.items.push_back({"eq-3-9.linear", Scope::Algebroids, [](Ctx& c) {
                       const Algebroid& a = *c.A();
                       PoissonPtr tp = tangent_poisson(*a.linear_poisson());
                       c.eq(tp->P, reconciled_3_9(a, tp->canonical), "d_T P against the reconciled formula");
                       Tensor literal = literal_3_9(a, tp->canonical);
                       if (!(literal == tp->P))
                         c.note("literal coordinate formula differs (undotted lifted factors, doubled anchor term)");
                     },
                     true});
  // The complete lift of P as a bivector through the tangent lift, checked
  // against the coordinate complete lift on the tangent chart.
  s.items.push_back({"eq-3-9.complete-lift", Scope::Algebroids, [](Ctx& c) {
                       const Algebroid& a = *c.A();
                       const PoissonStructure& ps = *a.linear_poisson();
                       PoissonPtr tp = tangent_poisson(ps);
                       Poly f = c.function("f", ps.canonical).scalar(), g = c.function("g", ps.canonical).scalar();
                       // {d_T f, d_T g}_{d_T P} = d_T {f, g}_P
                       auto lift = [&](const Poly& h) {
                         return d_T(Tensor::function(ps.canonical, K::MultiVector, h)).scalar();
                       };
                       c.eq(poisson_bracket(*tp, lift(f), lift(g)), lift(poisson_bracket(ps, f, g)), tp->chart(),
                            "{d_T f, d_T g} = d_T{f,g}");
                     }});
  r.push_back(std::move(s));
}

}  // namespace

void add_poisson_suites(Registry& r) {
  add_eq_2(r);
  add_theorem5(r);
  add_theorem6(r);
  add_theorem7(r);
  add_eq_3(r);
}

}  // namespace lac::suite_detail
