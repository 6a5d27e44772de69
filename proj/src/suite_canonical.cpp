#include "suite_detail.hpp"

namespace lac::suite_detail {

namespace {

using K = Kind;

Tensor rnd(Ctx& c, const std::string& name, const AlgebroidPtr& owner, Kind kind, int lo, int hi) {
  const int d = kind == K::Sym ? c.gen.uniform(lo, hi) : c.degree(owner, lo, hi);
  return c.tensor(name, owner, kind, d);
}
Tensor section(Ctx& c, const std::string& name) { return c.tensor(name, c.A(), K::MultiVector, 1); }

// Classical vertical and complete lifts to the chart (x, x_dot), written out
// in coordinates: v_T(∂a) = ∂ẋa, d_T(∂a) = ∂a, v_T(dx^a) = dx^a,
// d_T(dx^a) = dẋ^a, v_T(f) = f, d_T(f) = ẋ^b ∂_b f, extended by the
// product rule.
struct ClassicalLift {
  Tensor v, d;
};

ClassicalLift classical_lift(const Tensor& s) {
  const AlgebroidPtr& a = s.owner();
  const int n = int(a->dim());
  AlgebroidPtr tc = a->tangent_canonical();
  const bool form = s.kind() == K::Form || s.kind() == K::Mixed;
  auto vslot = [&](int i) { return form ? i : n + i; };
  auto dslot = [&](int i) { return form ? n + i : i; };
  ClassicalLift out{Tensor(tc, s.kind(), s.degree()), Tensor(tc, s.kind(), s.degree())};
  for (const auto& [key, f] : s.terms()) {
    Poly fdot;
    for (int b = 0; b < n; ++b) fdot += f.partial(b) * Poly::variable(n + b);
    // Vector part of a mixed tensor: v_T(∂j) = ∂ẋj, d_T(∂j) = ∂j.
    const int vf = key.fiber >= 0 ? n + key.fiber : -1, df = key.fiber >= 0 ? key.fiber : -1;
    std::vector<int> bar;
    for (auto i : key.indices()) bar.push_back(vslot(i));
    out.v.add(bar, vf, f);
    out.d.add(bar, vf, fdot);
    for (std::size_t r = 0; r < bar.size(); ++r) {
      std::vector<int> idx = bar;
      idx[r] = dslot(key.idx[r]);
      out.d.add(idx, vf, f);
    }
    if (key.fiber >= 0) out.d.add(bar, df, f);
  }
  return out;
}

// d_T P on (x, p, x_dot, p_dot) relabeled into T*(TM) with chart
// (x, x_dot, p_x, p_x_dot).
Tensor alpha_relabel(const Tensor& t, const AlgebroidPtr& target, std::size_t n) {
  std::vector<std::size_t> to(4 * n);
  for (std::size_t a = 0; a < n; ++a) {
    to[a] = a;
    to[n + a] = 3 * n + a;
    to[2 * n + a] = n + a;
    to[3 * n + a] = 2 * n + a;
  }
  Tensor out(target, t.kind(), t.degree());
  for (const auto& [key, f] : t.terms()) {
    std::vector<int> idx;
    for (auto i : key.indices()) idx.push_back(int(to[i]));
    out.add(idx, -1, f.remap(to));
  }
  return out;
}

// Forms on M pulled back to T*M; base coordinates keep their indices.
Tensor pullback(const Tensor& mu) {
  Tensor out(mu.owner()->dual_canonical(), mu.kind(), mu.degree());
  for (const auto& [key, f] : mu.terms()) out.add(key, f);
  return out;
}

Tensor iota_form(const Tensor& x) { return Tensor::function(x.owner()->dual_canonical(), K::Form, iota(x)); }

// H(f dx^A ⊗ ∂a) in coordinates (x, p), with i counted from 1.
Tensor local_h(const Tensor& k) {
  const AlgebroidPtr& a = k.owner();
  const int n = int(a->dim());
  Tensor out(a->dual_canonical(), K::Mixed, k.degree());
  for (const auto& [key, f] : k.terms()) {
    std::vector<int> A(key.idx.begin(), key.idx.begin() + key.n);
    const int e = key.fiber;
    const Poly pe = Poly::variable(n + e);
    out.add(A, e, f);
    for (int b = 0; b < n; ++b) out.add(A, n + b, -(f.partial(b) * pe));
    for (int i = 1; i <= key.n; ++i) {
      std::vector<int> rest = A;
      const int ai = rest[i - 1];
      rest.erase(rest.begin() + (i - 1));
      std::vector<int> idx{n + e};
      idx.insert(idx.end(), rest.begin(), rest.end());
      out.add(idx, n + ai, Poly(-sgn(i)) * f);
      for (int b = 0; b < n; ++b) {
        idx[0] = b;
        out.add(idx, n + ai, Poly(-sgn(i)) * f.partial(b) * pe);
      }
    }
  }
  return out;
}

// Reference local form of G(f dx^A ⊗ ∂a); G itself comes out with the opposite sign.
Tensor local_g(const Tensor& k) {
  const AlgebroidPtr& a = k.owner();
  const int n = int(a->dim());
  Tensor out(a->dual_canonical(), K::MultiVector, k.degree() + 1);
  for (const auto& [key, f] : k.terms()) {
    std::vector<int> idx{key.fiber};
    for (auto i : key.indices()) idx.push_back(n + i);
    out.add(idx, -1, -f);
    for (int b = 0; b < n; ++b) {
      idx[0] = n + b;
      out.add(idx, -1, f.partial(b) * Poly::variable(n + key.fiber));
    }
  }
  return out;
}

bool on_line(const Fixture& f) { return f.algebroid->dim() == 1; }

void add_theorem19_20(Registry& r) {
  Suite s{"theorem-19", {}};
  for (Kind kind : {K::MultiVector, K::Form, K::Sym, K::Mixed}) {
    const std::string id = "theorem-19." + std::string(to_string(kind));
    s.items.push_back({id, Scope::Canonical, [kind](Ctx& c) {
                         const int hi = kind == K::Mixed ? 1 : 2;
                         Tensor x = rnd(c, "X", c.A(), kind, 0, hi);
                         ClassicalLift cl = classical_lift(x);
                         c.eq(kappa(c.A(), cl.v), vertical_lift_V(x), "κ(v_T X) = V X");
                         c.eq(kappa(c.A(), cl.d), complete_lift_T(x), "κ(d_T X) = T X");
                         const Transport dir = kind == K::Form || kind == K::Mixed ? Transport::Alpha : Transport::Kappa;
                         c.eq(canonical_transport(dir, lift(Provenance::V, x)).value, cl.v, "transport of V X");
                         c.eq(canonical_transport(dir, lift(Provenance::T, x)).value, cl.d, "transport of T X");
                       }});
  }
  s.items.push_back({"theorem-19.involution", Scope::Canonical, [](Ctx& c) {
                       AlgebroidPtr ta = c.A()->tangent(), tc = c.A()->tangent_canonical();
                       for (Kind kind : {K::MultiVector, K::Form, K::Sym, K::Mixed}) {
                         Tensor t = rnd(c, "S", ta, kind, 0, 2), u = rnd(c, "U", tc, kind, 0, 2);
                         c.eq(kappa(c.A(), kappa(c.A(), t)), t, "κκ = id on TA");
                         c.eq(kappa(c.A(), kappa(c.A(), u)), u, "κκ = id on T(TM)");
                       }
                     }});
  s.items.push_back({"theorem-19.provenance", Scope::Canonical, [](Ctx& c) {
                       Tensor x = section(c, "X");
                       bool rejected = false;
                       try {
                         canonical_transport(Transport::Kappa, lift(Provenance::G, x));
                       } catch (const Error& e) {
                         rejected = e.code() == ErrorCode::WrongProvenance;
                       }
                       c.expect(rejected, "κ rejects a G-lift", "accepted");
                     },
                     true});
  r.push_back(std::move(s));

  Suite t{"theorem-20", {}};
  t.items.push_back({"theorem-20.iso", Scope::Canonical, [](Ctx& c) {
                       AlgebroidPtr ta = c.A()->tangent();
                       Tensor x = rnd(c, "X", ta, K::MultiVector, 0, 2), y = rnd(c, "Y", ta, K::MultiVector, 0, 2);
                       c.eq(kappa(c.A(), schouten(x, y)), schouten(kappa(c.A(), x), kappa(c.A(), y)), "κ[X,Y] = [κX,κY]");
                     }});
  t.items.push_back({"theorem-20.poisson", Scope::Canonical,
                     [](Ctx& c) {
                       const PoissonStructure& ps = *c.A()->linear_poisson();
                       PoissonPtr tp = tangent_poisson(ps);
                       PoissonPtr target = c.A()->tangent_canonical()->linear_poisson();
                       c.eq(alpha_relabel(tp->P, target->canonical, c.A()->dim()), target->P,
                            "α carries d_T P to the canonical structure of T*(TM)");
                     },
                     true});
  r.push_back(std::move(t));

  Suite e{"eq-7-12", {}};
  e.items.push_back({"eq-7-12.operator", Scope::Canonical, [](Ctx& c) {
                       Tensor w = rnd(c, "omega", c.A()->tangent(), K::Form, 0, 3);
                       c.eq(kappa(c.A(), d_tau(w)), d_tau(kappa(c.A(), w)), "α d = d α");
                     }});
  r.push_back(std::move(e));

  Suite f{"eq-7-13", {}};
  f.items.push_back({"eq-7-13.anchor", Scope::Canonical, [](Ctx& c) {
                       Tensor x = c.tensor("S", c.A()->tangent(), K::MultiVector, 1);
                       Tensor ax = anchor_apply(x);
                       c.eq(kappa(c.A(), ax), x, "κ α_{Tτ} = id");
                       c.eq(ax, kappa(c.A(), x), "α_{Tτ} = κ^{-1}");
                     }});
  r.push_back(std::move(f));
}

void add_theorem21(Registry& r) {
  Suite s{"theorem-21", {}};
  struct Table {
    std::string name;
    Kind kind;
    Tensor (*br)(const Tensor&, const Tensor&);
  };
  for (const Table& tb : {Table{"schouten", K::MultiVector, &schouten}, Table{"nr", K::Mixed, &nr_bracket},
                          Table{"fn", K::Mixed, &fn_bracket}}) {
    s.items.push_back({"theorem-21." + tb.name, Scope::Canonical, [tb](Ctx& c) {
                         const int hi = tb.kind == K::Mixed ? 2 : 3;
                         Tensor x = rnd(c, "X", c.A(), tb.kind, 0, hi), y = rnd(c, "Y", c.A(), tb.kind, 0, hi);
                         auto br = tb.br;
                         c.zero(br(v_T(x), v_T(y)), "[v X, v Y] = 0");
                         Tensor v = v_T(br(x, y));
                         c.eq(br(v_T(x), d_T(y)), v, "[v X, d Y] = v[X,Y]");
                         c.eq(br(d_T(x), v_T(y)), v, "[d X, v Y] = v[X,Y]");
                         c.eq(br(d_T(x), d_T(y)), d_T(br(x, y)), "[d X, d Y] = d[X,Y]");
                       }});
  }
  s.items.push_back({"theorem-21.contraction", Scope::Canonical, [](Ctx& c) {
                       Tensor mu = rnd(c, "mu", c.A(), K::Form, 0, 3), x = section(c, "X");
                       c.zero(contract(v_T(x), v_T(mu)), "i_{vX} vμ = 0");
                       c.eq(contract(v_T(x), d_T(mu)), v_T(contract(x, mu)), "i_{vX} dμ = v(i_Xμ)");
                       c.eq(contract(d_T(x), v_T(mu)), v_T(contract(x, mu)), "i_{dX} vμ = v(i_Xμ)");
                       c.eq(contract(d_T(x), d_T(mu)), d_T(contract(x, mu)), "i_{dX} dμ = d(i_Xμ)");
                     }});
  s.items.push_back({"theorem-21.derivative", Scope::Canonical, [](Ctx& c) {
                       Tensor mu = rnd(c, "mu", c.A(), K::Form, 0, 3);
                       c.eq(d_tau(v_T(mu)), v_T(d_tau(mu)), "d vμ = v dμ");
                       c.eq(d_tau(d_T(mu)), d_T(d_tau(mu)), "d dμ = d dμ");
                     }});
  s.items.push_back({"theorem-21.lie", Scope::Canonical, [](Ctx& c) {
                       Tensor mu = rnd(c, "mu", c.A(), K::Form, 0, 3), x = section(c, "X");
                       c.zero(lie_derivative(v_T(x), v_T(mu)), "L_{vX} vμ = 0");
                       c.eq(lie_derivative(v_T(x), d_T(mu)), v_T(lie_derivative(x, mu)), "L_{vX} dμ = v(L_Xμ)");
                       c.eq(lie_derivative(d_T(x), v_T(mu)), v_T(lie_derivative(x, mu)), "L_{dX} vμ = v(L_Xμ)");
                       c.eq(lie_derivative(d_T(x), d_T(mu)), d_T(lie_derivative(x, mu)), "L_{dX} dμ = d(L_Xμ)");
                     }});
  r.push_back(std::move(s));
}

void add_theorem22_24(Registry& r) {
  Suite s{"theorem-22", {}};
  auto star = [](const PoissonStructure& ps, const Tensor& t) { return lambda_P(ps, t, LambdaMode::Star); };
  s.items.push_back({"theorem-22.1", Scope::Canonical, [star](Ctx& c) {
                       Tensor mu = rnd(c, "mu", c.A(), K::Form, 0, 3);
                       c.eq(star(*c.A()->linear_poisson(), pullback(mu)), vertical_pi(mu), "Λ*(π*μ) = V_π(μ)");
                     }});
  s.items.push_back({"theorem-22.2", Scope::Canonical, [star](Ctx& c) {
                       Tensor mu = rnd(c, "mu", c.A(), K::Form, 0, 3), x = section(c, "X");
                       c.eq(star(*c.A()->linear_poisson(), wedge(iota_form(x), pullback(mu))), -J_map(simple(mu, x)),
                            "Λ*(ι(X)π*μ) = -J(μ⊗X)");
                     }});
  s.items.push_back({"theorem-22.3", Scope::Canonical, [star](Ctx& c) {
                       Tensor mu = rnd(c, "mu", c.A(), K::Form, 0, 2), x = section(c, "X");
                       c.eq(star(*c.A()->linear_poisson(), d_tau(wedge(iota_form(x), pullback(mu)))), -G_map(simple(mu, x)),
                            "Λ*(d(ι(X)π*μ)) = -G(μ⊗X)");
                     }});
  s.items.push_back({"theorem-22.eq-7-15", Scope::Canonical, [star](Ctx& c) {
                       const PoissonStructure& ps = *c.A()->linear_poisson();
                       Tensor mu = rnd(c, "mu", ps.canonical, K::Form, 0, 3);
                       c.eq(star(ps, d_tau(mu)), schouten(ps.P, star(ps, mu)), "Λ*(dμ) = [P, Λ*μ]");
                     }});
  r.push_back(std::move(s));

  Suite t{"theorem-23", {}};
  // μ = dμ_1 ∧ … ∧ dμ_k from random functions.
  auto closed = [](Ctx& c, const std::string& name) {
    const AlgebroidPtr& a = c.A();
    const int k = c.degree(a, 0, 2);
    std::vector<Tensor> fs;
    for (int i = 0; i < k; ++i) fs.push_back(d_tau(c.function(name + std::to_string(i + 1), a)));
    return wedge_all(a, K::Form, fs);
  };
  t.items.push_back({"theorem-23.closed", Scope::Canonical, [closed](Ctx& c) {
                       Tensor mu = closed(c, "mu"), nu = closed(c, "nu"), x = section(c, "X"), y = section(c, "Y");
                       Tensor k = simple(mu, x), l = simple(nu, y);
                       c.eq(Jstar(fn_bracket(k, l)), extended_bracket(*c.A()->linear_poisson(), Jstar(k), Jstar(l)),
                            "J*[K,L]^{F-N} = {J*K, J*L}");
                     }});
  t.items.push_back({"theorem-23.general", Scope::Canonical, [](Ctx& c) {
                       Tensor k = rnd(c, "K", c.A(), K::Mixed, 0, 2), l = rnd(c, "L", c.A(), K::Mixed, 0, 2);
                       c.eq(Jstar(fn_bracket(k, l)), extended_bracket(*c.A()->linear_poisson(), Jstar(k), Jstar(l)),
                            "J*[K,L]^{F-N} = {J*K, J*L}");
                     }});
  t.items.push_back({"theorem-23.eq-7-16", Scope::Canonical, [closed](Ctx& c) {
                       Tensor mu = closed(c, "mu"), nu = closed(c, "nu"), x = section(c, "X"), y = section(c, "Y");
                       c.eq(fn_bracket(simple(mu, x), simple(nu, y)),
                            simple(wedge(mu, nu), section_bracket(x, y)) + simple(wedge(mu, lie_derivative(x, nu)), y) -
                                simple(wedge(lie_derivative(y, mu), nu), x),
                            "F-N bracket of closed simple tensors");
                     }});
  t.items.push_back({"theorem-23.injective", Scope::Canonical,
                     [](Ctx& c) {
                       std::vector<Tensor> images;
                       for (const auto& b : mixed_spanning_set(c.A(), 2)) images.push_back(Jstar(b));
                       c.expect(linearly_independent(images), "J* is injective on a spanning set", "dependent images");
                     },
                     true});
  r.push_back(std::move(t));

  Suite u{"theorem-24", {}};
  u.items.push_back({"theorem-24.h-homomorphism", Scope::Canonical, [](Ctx& c) {
                       Tensor k = rnd(c, "K", c.A(), K::Mixed, 0, 2), l = rnd(c, "L", c.A(), K::Mixed, 0, 2);
                       c.eq(H_map(fn_bracket(k, l)), fn_bracket(H_map(k), H_map(l)), "H[K,L]^{F-N} = [HK, HL]^{F-N}");
                     }});
  u.items.push_back({"theorem-24.g-homomorphism", Scope::Canonical, [](Ctx& c) {
                       Tensor k = rnd(c, "K", c.A(), K::Mixed, 0, 2), l = rnd(c, "L", c.A(), K::Mixed, 0, 2);
                       c.eq(G_map(fn_bracket(k, l)), schouten(G_map(k), G_map(l)), "G[K,L]^{F-N} = [GK, GL]");
                     }});
  u.items.push_back({"theorem-24.eq-7-18", Scope::Canonical, [](Ctx& c) {
                       Tensor k = rnd(c, "K", c.A(), K::Mixed, 0, 2);
                       c.eq(H_map(k), local_h(k), "H against the coordinate formula");
                     }});
  u.items.push_back({"theorem-24.g-local", Scope::Canonical, [](Ctx& c) {
                       Tensor k = rnd(c, "K", c.A(), K::Mixed, 0, 2);
                       Tensor g = G_map(k), f = local_g(k);
                       if (g == f && !g.is_zero()) {
                         c.note("G matches the coordinate formula");
                         ++c.checks;
                         return;
                       }
                       c.eq(g, -f, "G against the coordinate formula up to a global sign");
                       c.note("G equals the negative of the reference coordinate formula");
                     }});
  u.items.push_back({"theorem-24.injective", Scope::Canonical,
                     [](Ctx& c) {
                       std::vector<Tensor> hs, gs;
                       for (const auto& b : mixed_spanning_set(c.A(), 1)) {
                         hs.push_back(H_map(b));
                         gs.push_back(G_map(b));
                       }
                       c.expect(linearly_independent(hs), "H is injective on a spanning set", "dependent images");
                       c.expect(linearly_independent(gs), "G is injective on a spanning set", "dependent images");
                     },
                     true});
  u.items.push_back({"theorem-24.nijenhuis", Scope::Canonical,
                     [](Ctx& c) {
                       Tensor n = Tensor::basis(c.A(), K::Mixed, {0}, 0);
                       c.zero(fn_bracket(n, n), "[N,N]^{F-N} = 0 for N = dx⊗∂x");
                       Tensor g = G_map(n);
                       c.zero(schouten(g, g), "[G(N), G(N)] = 0 for N = dx⊗∂x");
                     },
                     true, 0, on_line});
  u.items.push_back({"theorem-24.nijenhuis-iff", Scope::Canonical, [](Ctx& c) {
                       Tensor n = c.tensor("N", c.A(), K::Mixed, 1);
                       Tensor g = G_map(n);
                       const bool fn0 = fn_bracket(n, n).is_zero(), g0 = schouten(g, g).is_zero();
                       c.expect(fn0 == g0, "[N,N]^{F-N} = 0 iff [G(N), G(N)] = 0",
                                std::string("F-N ") + (fn0 ? "zero" : "nonzero") + ", Schouten " + (g0 ? "zero" : "nonzero"));
                     }});
  r.push_back(std::move(u));
}

}  // namespace

void add_canonical_suites(Registry& r) {
  add_theorem19_20(r);
  add_theorem21(r);
  add_theorem22_24(r);
}

}  // namespace lac::suite_detail
