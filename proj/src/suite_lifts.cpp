#include "suite_detail.hpp"

namespace lac::suite_detail {

namespace {

using K = Kind;

Tensor rnd(Ctx& c, const std::string& name, Kind kind, int lo, int hi) {
  const int d = kind == K::Sym ? c.gen.uniform(lo, hi) : c.degree(c.A(), lo, hi);
  return c.tensor(name, c.A(), kind, d);
}
Tensor section(Ctx& c, const std::string& name) { return c.tensor(name, c.A(), K::MultiVector, 1); }
Tensor V(const Tensor& t) { return vertical_lift_V(t); }
Tensor T(const Tensor& t) { return complete_lift_T(t); }
Tensor iota_mv(const Tensor& x) {
  return Tensor::function(x.owner()->dual_canonical(), K::MultiVector, iota(x));
}
bool has_base(const Fixture& f) { return f.algebroid && f.algebroid->dim() > 0; }

void add_lifts(Registry& r) {
  Suite s{"lifts", {}};
  s.items.push_back({"lifts.shapes", Scope::Algebroids, [](Ctx& c) {
                       const Algebroid& a = *c.A();
                       const std::size_t n = a.dim(), m = a.rank();
                       auto shape = [&](const AlgebroidPtr& l, std::size_t rank, std::size_t dim, const std::string& what) {
                         c.expect(l->rank() == rank && l->dim() == dim, what + " has rank " + std::to_string(rank) + " over " +
                                  std::to_string(dim) + " coordinates",
                                  std::to_string(l->rank()) + " over " + std::to_string(l->dim()));
                       };
                       shape(a.tangent(), 2 * m, 2 * n, "TA");
                       shape(a.cotangent(), n + m, n + m, "T*A");
                     },
                     true});
  s.items.push_back({"lifts.cotangent-vs-poisson", Scope::Algebroids, [](Ctx& c) {
                       const Algebroid& lift = *c.A()->cotangent();
                       const Algebroid& pc = *c.A()->linear_poisson()->cotangent;
                       c.expect(lift.rank() == pc.rank() && lift.dim() == pc.dim(), "same shape", "differs");
                       c.expect(lift.chart() == pc.chart(), "same chart", "differs");
                       for (std::size_t i = 0; i < lift.rank(); ++i) {
                         for (std::size_t b = 0; b < lift.dim(); ++b)
                           c.eq(lift.anchor(i, b), pc.anchor(i, b), lift.chart(), "anchor entry");
                         for (std::size_t j = 0; j < lift.rank(); ++j)
                           for (std::size_t k = 0; k < lift.rank(); ++k)
                             c.eq(lift.c(i, j, k), pc.c(i, j, k), lift.chart(), "structure function");
                       }
                     },
                     true});
  s.items.push_back({"lifts.iterated", Scope::Algebroids, [](Ctx& c) {
                       const Algebroid& a = *c.A();
                       const std::size_t t = 2 * (a.dim() + a.rank());
                       for (auto [l, what] : {std::pair{a.cotangent()->tangent(), "T(T*A)"},
                                              std::pair{a.tangent()->cotangent(), "T*(TA)"},
                                              std::pair{a.cotangent()->cotangent(), "T*(T*A)"}})
                         c.expect(l->rank() == t && l->dim() == t, std::string(what) + " shape",
                                  std::to_string(l->rank()) + " over " + std::to_string(l->dim()));
                     },
                     true});
  r.push_back(std::move(s));
}

// ---- theorem-8 to theorem-14 ---------------------------------------------------

// Function on the dual of TA with chart (x, x_dot, ξ̄, ξ̇) renamed to (x, ξ, ẋ, ξ̇).
Poly to_tangent_dual(const Poly& f, std::size_t n, std::size_t m) {
  std::vector<std::size_t> target;
  for (std::size_t a = 0; a < n; ++a) target.push_back(a);
  for (std::size_t a = 0; a < n; ++a) target.push_back(n + m + a);
  for (std::size_t i = 0; i < m; ++i) target.push_back(n + i);
  for (std::size_t i = 0; i < m; ++i) target.push_back(2 * n + m + i);
  return f.remap(target);
}

void add_theorem8_9(Registry& r) {
  Suite s{"theorem-8", {}};
  s.items.push_back({"theorem-8.iota", Scope::Algebroids, [](Ctx& c) {
                       const Algebroid& a = *c.A();
                       Tensor x = rnd(c, "X", K::Sym, 0, 3);
                       Tensor ix = iota_mv(x);
                       const Chart& chart = a.dual_canonical()->tangent_canonical()->chart();
                       c.eq(to_tangent_dual(iota(V(x)), a.dim(), a.rank()), v_T(ix).scalar(), chart, "ι(V X) = v_T ι(X)");
                       c.eq(to_tangent_dual(iota(T(x)), a.dim(), a.rank()), d_T(ix).scalar(), chart, "ι(T X) = d_T ι(X)");
                     }});
  r.push_back(std::move(s));

  Suite t{"theorem-9", {}};
  for (Kind kind : {K::MultiVector, K::Form, K::Sym}) {
    const std::string id = "theorem-9." + std::string(to_string(kind));
    t.items.push_back({id, Scope::Algebroids, [kind](Ctx& c) {
                         Tensor x = rnd(c, "X", kind, 0, 2), y = rnd(c, "Y", kind, 0, 2);
                         auto prod = [kind](const Tensor& p, const Tensor& q) {
                           return kind == K::Sym ? sym_product(p, q) : wedge(p, q);
                         };
                         c.eq(V(prod(x, y)), prod(V(x), V(y)), "V(X⊗Y) = V X ⊗ V Y");
                         c.eq(T(prod(x, y)), prod(T(x), V(y)) + prod(V(x), T(y)), "T(X⊗Y) = T X ⊗ V Y + V X ⊗ T Y");
                       }});
  }
  t.items.push_back({"theorem-9.mixed", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = rnd(c, "mu", K::Form, 0, 2), k = rnd(c, "K", K::Mixed, 0, 2);
                       c.eq(V(wedge(mu, k)), wedge(V(mu), V(k)), "V(μ∧K) = Vμ∧VK");
                       c.eq(T(wedge(mu, k)), wedge(T(mu), V(k)) + wedge(V(mu), T(k)), "T(μ∧K) = Tμ∧VK + Vμ∧TK");
                     }});
  r.push_back(std::move(t));
}

void add_theorem10_14(Registry& r) {
  Suite s{"theorem-10", {}};
  s.items.push_back({"theorem-10.a", Scope::Algebroids,
                     [](Ctx& c) {
                       Tensor x = section(c, "X");
                       c.eq(anchor_apply(V(x)), v_T(anchor_apply(x)), "α(V X) = v_T α(X)");
                     },
                     false, 0, has_base});
  s.items.push_back({"theorem-10.b", Scope::Algebroids,
                     [](Ctx& c) {
                       Tensor x = section(c, "X");
                       c.eq(anchor_apply(T(x)), d_T(anchor_apply(x)), "α(T X) = d_T α(X)");
                     },
                     false, 0, has_base});
  r.push_back(std::move(s));

  Suite t{"theorem-11", {}};
  t.items.push_back({"theorem-11.a", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = rnd(c, "X", K::MultiVector, 0, 3), y = rnd(c, "Y", K::MultiVector, 0, 3);
                       c.zero(schouten(V(x), V(y)), "[V X, V Y] = 0");
                     }});
  t.items.push_back({"theorem-11.b", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = rnd(c, "X", K::MultiVector, 0, 3), y = rnd(c, "Y", K::MultiVector, 0, 3);
                       Tensor v = V(schouten(x, y));
                       c.eq(schouten(V(x), T(y)), v, "[V X, T Y] = V[X,Y]");
                       c.eq(schouten(T(x), V(y)), v, "[T X, V Y] = V[X,Y]");
                     }});
  t.items.push_back({"theorem-11.c", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = rnd(c, "X", K::MultiVector, 0, 3), y = rnd(c, "Y", K::MultiVector, 0, 3);
                       c.eq(schouten(T(x), T(y)), T(schouten(x, y)), "[T X, T Y] = T[X,Y]");
                     }});
  r.push_back(std::move(t));

  Suite u{"theorem-12", {}};
  auto mu_x = [](Ctx& c) { return std::pair{rnd(c, "mu", K::Form, 0, 3), section(c, "X")}; };
  u.items.push_back({"theorem-12.1a", Scope::Algebroids, [mu_x](Ctx& c) {
                       auto [mu, x] = mu_x(c);
                       c.zero(contract(V(x), V(mu)), "i_{V X} V μ = 0");
                     }});
  u.items.push_back({"theorem-12.1b", Scope::Algebroids, [mu_x](Ctx& c) {
                       auto [mu, x] = mu_x(c);
                       Tensor v = V(contract(x, mu));
                       c.eq(contract(V(x), T(mu)), v, "i_{V X} T μ = V(i_X μ)");
                       c.eq(contract(T(x), V(mu)), v, "i_{T X} V μ = V(i_X μ)");
                     }});
  u.items.push_back({"theorem-12.1c", Scope::Algebroids, [mu_x](Ctx& c) {
                       auto [mu, x] = mu_x(c);
                       c.eq(contract(T(x), T(mu)), T(contract(x, mu)), "i_{T X} T μ = T(i_X μ)");
                     }});
  u.items.push_back({"theorem-12.2a", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = rnd(c, "mu", K::Form, 0, 3);
                       c.eq(d_tau(V(mu)), V(d_tau(mu)), "d V μ = V dμ");
                     }});
  u.items.push_back({"theorem-12.2b", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = rnd(c, "mu", K::Form, 0, 3);
                       c.eq(d_tau(T(mu)), T(d_tau(mu)), "d T μ = T dμ");
                     }});
  u.items.push_back({"theorem-12.3a", Scope::Algebroids, [mu_x](Ctx& c) {
                       auto [mu, x] = mu_x(c);
                       c.zero(lie_derivative(V(x), V(mu)), "L_{V X} V μ = 0");
                     }});
  u.items.push_back({"theorem-12.3b", Scope::Algebroids, [mu_x](Ctx& c) {
                       auto [mu, x] = mu_x(c);
                       Tensor v = V(lie_derivative(x, mu));
                       c.eq(lie_derivative(V(x), T(mu)), v, "L_{V X} T μ = V(L_X μ)");
                       c.eq(lie_derivative(T(x), V(mu)), v, "L_{T X} V μ = V(L_X μ)");
                     }});
  u.items.push_back({"theorem-12.3c", Scope::Algebroids, [mu_x](Ctx& c) {
                       auto [mu, x] = mu_x(c);
                       c.eq(lie_derivative(T(x), T(mu)), T(lie_derivative(x, mu)), "L_{T X} T μ = T(L_X μ)");
                     }});
  r.push_back(std::move(u));

  for (auto [name, fn] : {std::pair{"theorem-13", &nr_bracket}, std::pair{"theorem-14", &fn_bracket}}) {
    Suite w{name, {}};
    auto br = fn;
    w.items.push_back({w.name + ".a", Scope::Algebroids, [br](Ctx& c) {
                         Tensor k = rnd(c, "K", K::Mixed, 0, 2), l = rnd(c, "L", K::Mixed, 0, 2);
                         c.zero(br(V(k), V(l)), "[V K, V L] = 0");
                       }});
    w.items.push_back({w.name + ".b", Scope::Algebroids, [br](Ctx& c) {
                         Tensor k = rnd(c, "K", K::Mixed, 0, 2), l = rnd(c, "L", K::Mixed, 0, 2);
                         Tensor v = V(br(k, l));
                         c.eq(br(V(k), T(l)), v, "[V K, T L] = V[K,L]");
                         c.eq(br(T(k), V(l)), v, "[T K, V L] = V[K,L]");
                       }});
    w.items.push_back({w.name + ".c", Scope::Algebroids, [br](Ctx& c) {
                         Tensor k = rnd(c, "K", K::Mixed, 0, 2), l = rnd(c, "L", K::Mixed, 0, 2);
                         c.eq(br(T(k), T(l)), T(br(k, l)), "[T K, T L] = T[K,L]");
                       }});
    r.push_back(std::move(w));
  }
}

// ---- theorem-15 to theorem-18 --------------------------------------------------

void add_theorem15_18(Registry& r) {
  Suite s{"theorem-15", {}};
  auto P = [](Ctx& c) -> const Tensor& { return c.A()->linear_poisson()->P; };
  auto G = [](const Tensor& x) { return cot_complete_G_vec(x); };
  s.items.push_back({"theorem-15.a", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = rnd(c, "mu", K::Form, 0, 2), nu = rnd(c, "nu", K::Form, 0, 2);
                       c.eq(vertical_pi(wedge(mu, nu)), wedge(vertical_pi(mu), vertical_pi(nu)), "V_π(μ∧ν) = V_πμ∧V_πν");
                     }});
  s.items.push_back({"theorem-15.b", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = rnd(c, "mu", K::Form, 0, 3), nu = rnd(c, "nu", K::Form, 0, 3);
                       c.zero(schouten(vertical_pi(mu), vertical_pi(nu)), "[V_πμ, V_πν] = 0");
                     }});
  s.items.push_back({"theorem-15.c", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = rnd(c, "mu", K::Form, 0, 3), x = section(c, "X");
                       c.eq(schouten(iota_mv(x), vertical_pi(mu)), -vertical_pi(contract(x, mu)), "[ιX, V_πμ] = -V_π(i_Xμ)");
                     }});
  s.items.push_back({"theorem-15.d", Scope::Algebroids, [P](Ctx& c) {
                       Tensor mu = rnd(c, "mu", K::Form, 0, 3);
                       c.eq(schouten(P(c), vertical_pi(mu)), vertical_pi(d_tau(mu)), "[P, V_πμ] = V_π(dμ)");
                     }});
  s.items.push_back({"theorem-15.e", Scope::Algebroids, [G](Ctx& c) {
                       Tensor mu = rnd(c, "mu", K::Form, 0, 3), x = section(c, "X");
                       c.eq(schouten(G(x), vertical_pi(mu)), vertical_pi(lie_derivative(x, mu)), "[G X, V_πμ] = V_π(L_Xμ)");
                     }});
  s.items.push_back({"theorem-15.f", Scope::Algebroids, [G](Ctx& c) {
                       Tensor x = section(c, "X"), y = section(c, "Y");
                       c.eq(schouten(G(x), G(y)), G(section_bracket(x, y)), "[G X, G Y] = G[X,Y]");
                     }});
  s.items.push_back({"theorem-15.g", Scope::Algebroids, [G](Ctx& c) {
                       Tensor x = section(c, "X"), y = section(c, "Y");
                       c.eq(schouten(G(x), iota_mv(y)), iota_mv(section_bracket(x, y)), "[G X, ιY] = ι[X,Y]");
                     }});
  r.push_back(std::move(s));

  Suite t{"theorem-16", {}};
  t.items.push_back({"theorem-16.sections", Scope::Algebroids, [P](Ctx& c) {
                       Tensor x = section(c, "X");
                       c.eq(J_map(as_mixed(x)), -iota_mv(x), "J(X) = -ι(X)");
                       c.eq(G_map(as_mixed(x)), cot_complete_G_vec(x), "G agrees with G on sections");
                       c.eq(cot_complete_G_vec(x), -schouten(P(c), iota_mv(x)), "G(X) = -[P, ιX]");
                     }});
  t.items.push_back({"theorem-16.projectable", Scope::Algebroids,
                     [](Ctx& c) {
                       const AlgebroidPtr& a = c.A();
                       Tensor x = section(c, "X");
                       Poly f = c.function("f", a).scalar();
                       Poly af;
                       for (const auto& [key, g] : x.terms()) af += g * a->act(key.idx[0], f);
                       c.eq(poisson_bracket(*a->linear_poisson(), iota(x), f), af, a->dual_canonical()->chart(),
                            "{ιX, π*f} = π*(α(X)f)");
                     },
                     false, 0, has_base});
  t.items.push_back({"theorem-16.simple", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = rnd(c, "mu", K::Form, 0, 2), x = section(c, "X");
                       Tensor k = simple(mu, x);
                       c.eq(J_map(k), -wedge(iota_mv(x), vertical_pi(mu)), "J(μ⊗X) = -ι(X)V_π(μ)");
                       c.eq(G_map(k),
                            wedge(cot_complete_G_vec(x), vertical_pi(mu)) - wedge(iota_mv(x), vertical_pi(d_tau(mu))),
                            "G(μ⊗X) = G(X)∧V_π(μ) - ι(X)V_π(dμ)");
                     }});
  r.push_back(std::move(t));

  Suite u{"theorem-17", {}};
  u.items.push_back({"theorem-17.homomorphism", Scope::Algebroids, [](Ctx& c) {
                       Tensor k = rnd(c, "K", K::Mixed, 0, 2), l = rnd(c, "L", K::Mixed, 0, 2);
                       c.eq(J_map(nr_bracket(k, l)), schouten(J_map(k), J_map(l)), "J[K,L]^{N-R} = [JK, JL]");
                     }});
  u.items.push_back({"theorem-17.injective", Scope::Algebroids,
                     [](Ctx& c) {
                       std::vector<Tensor> images;
                       for (const auto& b : mixed_spanning_set(c.A(), 2)) images.push_back(J_map(b));
                       c.expect(linearly_independent(images), "J is injective on a spanning set of Φ_1^k, k <= 2",
                                "dependent images");
                     },
                     true});
  r.push_back(std::move(u));

  Suite v{"theorem-18", {}};
  v.items.push_back({"theorem-18.homomorphism", Scope::Algebroids, [](Ctx& c) {
                       Tensor k = rnd(c, "K", K::Mixed, 0, 2), l = rnd(c, "L", K::Mixed, 0, 2);
                       c.eq(G_map(fn_bracket(k, l)), schouten(G_map(k), G_map(l)), "G[K,L]^{F-N} = [GK, GL]");
                     }});
  r.push_back(std::move(v));

  Suite w{"eq-6-4", {}};
  w.items.push_back({"eq-6-4.dual-path", Scope::Algebroids,
                     [](Ctx& c) {
                       Tensor k = rnd(c, "K", K::Mixed, 0, 3);
                       GBranches b = G_map_branches(k);
                       c.eq(b.bracket, b.explicit_, "[P, J(K)] = G(X)∧V_π(μ) - ι(X)V_π(dμ)");
                     },
                     false, 100});
  r.push_back(std::move(w));
}

}  // namespace

void add_lift_suites(Registry& r) {
  add_lifts(r);
  add_theorem8_9(r);
  add_theorem10_14(r);
  add_theorem15_18(r);
}

}  // namespace lac::suite_detail
