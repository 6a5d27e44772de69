#include <algorithm>

#include "suite_detail.hpp"

namespace lac::suite_detail {

namespace {

using K = Kind;

Tensor mv(Ctx& c, const std::string& name, int lo, int hi) {
  return c.tensor(name, c.A(), K::MultiVector, c.degree(c.A(), lo, hi));
}
Tensor form(Ctx& c, const std::string& name, int lo, int hi) {
  return c.tensor(name, c.A(), K::Form, c.degree(c.A(), lo, hi));
}
Tensor mixed(Ctx& c, const std::string& name, int lo, int hi) {
  return c.tensor(name, c.A(), K::Mixed, c.degree(c.A(), lo, hi));
}
Tensor section(Ctx& c, const std::string& name) { return c.tensor(name, c.A(), K::MultiVector, 1); }
Tensor sym(Ctx& c, const std::string& name, int lo, int hi) {
  return c.tensor(name, c.A(), K::Sym, c.gen.uniform(lo, hi));
}

Tensor basis(const AlgebroidPtr& a, Kind kind, std::vector<int> idx) { return Tensor::basis(a, kind, std::move(idx)); }

// ---- algebroid axioms --------------------------------------------------

VectorField anchor_field(const Algebroid& a, const Tensor& s) {
  VectorField v(a.dim());
  for (const auto& [key, f] : s.terms())
    for (const auto& [b, d] : a.anchor_row(key.idx[0])) v[b] += f * d;
  return v;
}

void brute_force_axioms(Ctx& c, const AlgebroidPtr& a) {
  const int m = int(a->rank());
  auto e = [&](int i) { return basis(a, K::MultiVector, {i}); };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      VectorField lhs = anchor_field(*a, section_bracket(e(i), e(j)));
      VectorField rhs = vector_field_bracket(anchor_field(*a, e(i)), anchor_field(*a, e(j)));
      bool same = true;
      for (std::size_t b = 0; b < lhs.size(); ++b) same = same && lhs[b] == rhs[b];
      c.expect(same, "α[e_i,e_j] = [αe_i,αe_j] at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
               "differs");
      for (int k = j + 1; k < m; ++k)
        c.zero(section_bracket(e(i), section_bracket(e(j), e(k))) + section_bracket(e(j), section_bracket(e(k), e(i))) +
                   section_bracket(e(k), section_bracket(e(i), e(j))),
               "Jacobi on basis triple");
    }
}

void expect_rejected(Ctx& c, const std::string& text, ErrorCode code, std::vector<int> witness, const std::string& residual) {
  try {
    parse_model_text(text);
  } catch (const Error& e) {
    const std::string msg = e.what();
    c.expect(msg.find(std::string(to_string(code))) != std::string::npos, "rejected with " + std::string(to_string(code)),
             msg);
    c.expect(e.witness() == witness, "witness", msg);
    if (!residual.empty()) c.expect(e.residual() == residual, "residual " + residual, e.residual());
    else c.expect(!e.residual().empty(), "nonzero residual", "empty");
    c.note("witness " + e.residual());
    return;
  }
  c.expect(false, "model is rejected", "accepted");
}

void add_algebroid(Registry& r) {
  Suite s{"algebroid", {}};
  s.items.push_back({"algebroid.validate", Scope::Algebroids, [](Ctx& c) {
                       const AlgebroidPtr& a = c.A();
                       Algebroid::Data d{a->chart(), a->fibers(), {}, {}};
                       const std::size_t m = a->rank(), n = a->dim();
                       for (std::size_t i = 0; i < m; ++i) {
                         d.anchor.emplace_back();
                         for (std::size_t b = 0; b < n; ++b) d.anchor.back().push_back(a->anchor(i, b));
                       }
                       for (std::size_t i = 0; i < m; ++i)
                         for (std::size_t j = 0; j < m; ++j)
                           for (std::size_t k = 0; k < m; ++k) d.c.push_back(a->c(i, j, k));
                       AlgebroidPtr again = Algebroid::make(std::move(d));
                       c.expect(same_owner(again, a), "rebuilt algebroid has the same fingerprint", again->fingerprint());
                       brute_force_axioms(c, a);
                     },
                     true});
  s.items.push_back({"algebroid.lifts-validate", Scope::Algebroids, [](Ctx& c) {
                       brute_force_axioms(c, c.A()->tangent());
                       brute_force_axioms(c, c.A()->cotangent());
                     },
                     true});
  s.items.push_back({"algebroid.broken-anchor", Scope::Once, [](Ctx& c) {
                       expect_rejected(c, broken_anchor_model(), ErrorCode::AnchorNotMorphism, {1, 2}, "");
                     },
                     true});
  s.items.push_back({"algebroid.broken-jacobi", Scope::Once, [](Ctx& c) {
                       expect_rejected(c, broken_jacobi_model(), ErrorCode::JacobiViolation, {1, 2, 3}, "-e3");
                     },
                     true});
  s.items.push_back({"algebroid.not-poisson", Scope::Once, [](Ctx& c) {
                       expect_rejected(c, not_poisson_model(), ErrorCode::NotPoisson, {1, 2, 3}, "");
                     },
                     true});
  s.items.push_back({"algebroid.anchor-morphism", Scope::Algebroids, [](Ctx& c) {
                       const AlgebroidPtr& a = c.A();
                       if (a->dim() == 0) return;
                       Tensor x = section(c, "X"), y = section(c, "Y");
                       c.eq(anchor_apply(section_bracket(x, y)), schouten(anchor_apply(x), anchor_apply(y)),
                            "α[X,Y] = [αX,αY]");
                     }});
  s.items.push_back({"algebroid.iota-bracket", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = section(c, "X"), y = section(c, "Y");
                       const PoissonStructure& ps = *c.A()->linear_poisson();
                       c.eq(iota(section_bracket(x, y)), poisson_bracket(ps, iota(x), iota(y)), ps.chart(),
                            "ι[X,Y] = {ιX,ιY}");
                     }});
  s.items.push_back({"algebroid.poisson-fixtures", Scope::Poisson, [](Ctx& c) {
                       c.zero(schouten(c.ps().P, c.ps().P), "[P,P] = 0");
                       brute_force_axioms(c, c.ps().cotangent);
                     },
                     true});
  r.push_back(std::move(s));
}

// ---- theorem-1 ----------------------------------------------------------

// μ(X_1, …, X_k) with the determinant pairing.
Poly evaluate(const Tensor& mu, const std::vector<Tensor>& xs) {
  const std::size_t k = xs.size();
  Poly out;
  for (const auto& [key, f] : mu.terms()) {
    std::vector<int> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = int(i);
    Poly det;
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
      Poly t = 1;
      for (std::size_t r = 0; r < k && !t.is_zero(); ++r) t *= xs[perm[r]].coefficient({key.idx[r]});
      det += inversions % 2 ? -t : t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out += f * det;
  }
  return out;
}

void add_theorem1(Registry& r) {
  Suite s{"theorem-1", {}};
  s.items.push_back({"theorem-1.1", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = form(c, "mu", 0, 3);
                       c.zero(d_tau(d_tau(mu)), "d d μ = 0");
                     }});
  s.items.push_back({"theorem-1.2", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = form(c, "mu", 0, 2), nu = form(c, "nu", 0, 2);
                       c.eq(d_tau(wedge(mu, nu)), wedge(d_tau(mu), nu) + sgn(mu.degree()) * wedge(mu, d_tau(nu)),
                            "d(μ∧ν) = dμ∧ν + (-1)^k μ∧dν");
                     }});
  s.items.push_back({"theorem-1.3", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = form(c, "mu", 0, 3), nu = form(c, "nu", 0, 3), x = section(c, "X");
                       c.eq(contract(x, wedge(mu, nu)),
                            wedge(contract(x, mu), nu) + sgn(mu.degree()) * wedge(mu, contract(x, nu)),
                            "i_X(μ∧ν) = i_Xμ∧ν + (-1)^k μ∧i_Xν");
                     }});
  s.items.push_back({"theorem-1.4", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = form(c, "mu", 0, 2), nu = form(c, "nu", 0, 2), x = section(c, "X");
                       c.eq(lie_derivative(x, wedge(mu, nu)),
                            wedge(lie_derivative(x, mu), nu) + wedge(mu, lie_derivative(x, nu)),
                            "L_X(μ∧ν) = L_Xμ∧ν + μ∧L_Xν");
                     }});
  s.items.push_back({"theorem-1.5", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = section(c, "X"), y = section(c, "Y"), mu = form(c, "mu", 0, 3);
                       c.eq(lie_derivative(x, lie_derivative(y, mu)) - lie_derivative(y, lie_derivative(x, mu)),
                            lie_derivative(section_bracket(x, y), mu), "[L_X, L_Y] = L_[X,Y]");
                     }});
  s.items.push_back({"theorem-1.6", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = section(c, "X"), y = section(c, "Y"), mu = form(c, "mu", 0, 3);
                       c.eq(lie_derivative(x, contract(y, mu)) - contract(y, lie_derivative(x, mu)),
                            contract(section_bracket(x, y), mu), "L_X i_Y - i_Y L_X = i_[X,Y]");
                     }});
  // dμ on basis sections against the invariant formula.
  s.items.push_back({"theorem-1.eq-1-1", Scope::Algebroids, [](Ctx& c) {
                       const AlgebroidPtr& a = c.A();
                       Tensor mu = form(c, "mu", 0, 2);
                       const int k = mu.degree();
                       Tensor dmu = d_tau(mu);
                       auto e = [&](int i) { return basis(a, K::MultiVector, {i}); };
                       for (const auto& I : increasing_tuples(int(a->rank()), k + 1)) {
                         Poly rhs;
                         for (int i = 0; i <= k; ++i) {
                           std::vector<Tensor> rest;
                           for (int t = 0; t <= k; ++t)
                             if (t != i) rest.push_back(e(I[t]));
                           Poly v = a->act(I[i], evaluate(mu, rest));
                           rhs += i % 2 ? -v : v;
                         }
                         for (int i = 0; i <= k; ++i)
                           for (int j = i + 1; j <= k; ++j) {
                             std::vector<Tensor> args{section_bracket(e(I[i]), e(I[j]))};
                             for (int t = 0; t <= k; ++t)
                               if (t != i && t != j) args.push_back(e(I[t]));
                             Poly v = evaluate(mu, args);
                             rhs += (i + j) % 2 ? -v : v;
                           }
                         std::vector<Tensor> all;
                         for (int t : I) all.push_back(e(t));
                         c.eq(evaluate(dmu, all), rhs, a->chart(), "dμ(e_I) by the invariant formula");
                       }
                     }});
  r.push_back(std::move(s));
}

// ---- theorem-2 and the generalized Schouten bracket ---------------------

// L_Y i_X - (-1)^{(k+1)l} i_X L_Y + i_[X,Y] applied to μ.
Tensor theorem2_defect(const Tensor& x, const Tensor& y, const Tensor& mu) {
  const int k = x.degree() - 1, l = y.degree() - 1;
  return lie_derivative(y, contract(x, mu)) - sgn((k + 1) * l) * contract(x, lie_derivative(y, mu)) +
         contract(schouten(x, y), mu);
}

void add_theorem2(Registry& r) {
  Suite s{"theorem-2", {}};
  s.items.push_back({"theorem-2.identity", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = mv(c, "X", 1, 3), y = mv(c, "Y", 1, 3), mu = form(c, "mu", 0, 3);
                       c.zero(theorem2_defect(x, y, mu), "L_Y i_X - (-1)^{(k+1)l} i_X L_Y = -i_[X,Y]");
                     }});
  // Full basis of forms up to degree 3, also with a function factor; both
  // contraction orders are tried and the active one must pass.
  s.items.push_back({"theorem-2.calibration", Scope::Algebroids,
                     [](Ctx& c) {
                       const AlgebroidPtr& a = c.A();
                       const int m = int(a->rank());
                       std::vector<Tensor> forms;
                       Tensor f = c.function("f", a);
                       for (int k = 0; k <= std::min(3, m); ++k)
                         for (const auto& I : increasing_tuples(m, k)) {
                           forms.push_back(basis(a, K::Form, I));
                           forms.push_back(wedge(f, forms.back()));
                         }
                       std::vector<std::pair<Tensor, Tensor>> pairs;
                       for (int p = 1; p <= std::min(3, m); ++p)
                         for (int q = 1; q <= std::min(3, m); ++q)
                           pairs.emplace_back(c.tensor("X" + std::to_string(p) + std::to_string(q), a, K::MultiVector, p),
                                              c.tensor("Y" + std::to_string(p) + std::to_string(q), a, K::MultiVector, q));
                       const ContractionOrder active = contraction_order();
                       const ContractionOrder other =
                           active == ContractionOrder::Forward ? ContractionOrder::Reversed : ContractionOrder::Forward;
                       bool other_ok = true;
                       {
                         ContractionOrderGuard guard(other);
                         for (const auto& [x, y] : pairs)
                           for (const auto& mu : forms) other_ok = other_ok && theorem2_defect(x, y, mu).is_zero();
                       }
                       for (const auto& [x, y] : pairs)
                         for (const auto& mu : forms) c.zero(theorem2_defect(x, y, mu), "operator identity on basis forms");
                       c.note("active order " + std::string(to_string(active)));
                       if (!other_ok) c.note(std::string(to_string(other)) + " order fails on " + c.fx.name);
                     },
                     false, 0});
  s.items.push_back({"theorem-2.function", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = section(c, "X"), f = c.function("f", c.A(), K::MultiVector);
                       Tensor expect = Tensor::function(c.A(), K::MultiVector, Poly());
                       for (const auto& [key, g] : x.terms()) expect += Tensor::function(c.A(), K::MultiVector, g * c.A()->act(key.idx[0], f.scalar()));
                       c.eq(schouten(x, f), expect, "[X,f] = α(X)f");
                     }});
  s.items.push_back({"theorem-2.eq-1-2", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = mv(c, "X", 1, 3), y = mv(c, "Y", 0, 2), z = mv(c, "Z", 0, 2);
                       const int k = x.degree() - 1, l = y.degree();
                       c.eq(schouten(x, wedge(y, z)), wedge(schouten(x, y), z) + sgn(k * l) * wedge(y, schouten(x, z)),
                            "[X,Y∧Z] = [X,Y]∧Z + (-1)^{kl} Y∧[X,Z]");
                     }});
  s.items.push_back({"theorem-2.eq-1-3", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = mv(c, "X", 0, 3), y = mv(c, "Y", 0, 3);
                       const int k = x.degree() - 1, l = y.degree() - 1;
                       c.eq(schouten(x, y), -(sgn(k * l) * schouten(y, x)), "[X,Y] = -(-1)^{kl}[Y,X]");
                     }});
  s.items.push_back({"theorem-2.eq-1-4", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = mv(c, "X", 0, 3), y = mv(c, "Y", 0, 3), z = mv(c, "Z", 0, 3);
                       const int k = x.degree() - 1, l = y.degree() - 1, m = z.degree() - 1;
                       c.zero(sgn(k * m) * schouten(schouten(x, y), z) + sgn(l * k) * schouten(schouten(y, z), x) +
                                  sgn(m * l) * schouten(schouten(z, x), y),
                              "graded Jacobi");
                     }});
  s.items.push_back({"theorem-2.eq-1-5", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = mv(c, "X", 0, 3), y = mv(c, "Y", 0, 3), z = mv(c, "Z", 0, 3);
                       const int k = x.degree() - 1, l = y.degree() - 1;
                       c.eq(schouten(x, schouten(y, z)) - sgn(k * l) * schouten(y, schouten(x, z)),
                            schouten(schouten(x, y), z), "[X,[Y,Z]] - (-1)^{kl}[Y,[X,Z]] = [[X,Y],Z]");
                     }});
  s.items.push_back({"theorem-2.eq-1-6", Scope::Algebroids, [](Ctx& c) {
                       const AlgebroidPtr& a = c.A();
                       const int k = c.degree(a, 1, 3), l = c.degree(a, 1, 3);
                       std::vector<Tensor> xs, ys;
                       for (int i = 0; i < k; ++i) xs.push_back(section(c, "X" + std::to_string(i + 1)));
                       for (int j = 0; j < l; ++j) ys.push_back(section(c, "Y" + std::to_string(j + 1)));
                       Tensor rhs(a, K::MultiVector, k + l - 1);
                       for (int i = 0; i < k; ++i)
                         for (int j = 0; j < l; ++j) {
                           std::vector<Tensor> fs{section_bracket(xs[i], ys[j])};
                           for (int t = 0; t < k; ++t)
                             if (t != i) fs.push_back(xs[t]);
                           for (int t = 0; t < l; ++t)
                             if (t != j) fs.push_back(ys[t]);
                           rhs += sgn(i + j) * wedge_all(a, K::MultiVector, fs);
                         }
                       c.eq(schouten(wedge_all(a, K::MultiVector, xs), wedge_all(a, K::MultiVector, ys)), rhs,
                            "bracket of decomposables");
                     }});
  s.items.push_back({"theorem-2.parallel", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = mv(c, "X", 0, 3), y = mv(c, "Y", 0, 3);
                       c.eq(schouten(x, y, Exec::Parallel), schouten(x, y, Exec::Serial), "parallel = serial");
                     }});
  r.push_back(std::move(s));
}

void add_eq_1_7(Registry& r) {
  Suite s{"eq-1-7", {}};
  s.items.push_back({"eq-1-7.symmetry", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = sym(c, "X", 0, 3), y = sym(c, "Y", 0, 3);
                       c.eq(sym_schouten(x, y), -sym_schouten(y, x), "[X,Y] = -[Y,X]");
                     }});
  s.items.push_back({"eq-1-7.jacobi", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = sym(c, "X", 0, 2), y = sym(c, "Y", 0, 2), z = sym(c, "Z", 0, 2);
                       c.eq(sym_schouten(x, sym_schouten(y, z)),
                            sym_schouten(sym_schouten(x, y), z) + sym_schouten(y, sym_schouten(x, z)), "Jacobi");
                     }});
  s.items.push_back({"eq-1-7.leibniz", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = sym(c, "X", 0, 2), y = sym(c, "Y", 0, 2), z = sym(c, "Z", 0, 2);
                       c.eq(sym_schouten(x, sym_product(y, z)),
                            sym_product(sym_schouten(x, y), z) + sym_product(y, sym_schouten(x, z)), "Leibniz");
                     }});
  s.items.push_back({"eq-1-7.low-degree", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = mv(c, "X", 0, 1), y = mv(c, "Y", 0, 1);
                       c.eq(sym_schouten(as_sym(x), as_sym(y)), as_sym(schouten(x, y)), "agrees with [,] on Φ^0 ⊕ Φ^1");
                     }});
  s.items.push_back({"eq-1-7.decomposable", Scope::Algebroids, [](Ctx& c) {
                       const AlgebroidPtr& a = c.A();
                       const int k = c.gen.uniform(1, 3), l = c.gen.uniform(1, 3);
                       std::vector<Tensor> xs, ys;
                       for (int i = 0; i < k; ++i) xs.push_back(as_sym(section(c, "X" + std::to_string(i + 1))));
                       for (int j = 0; j < l; ++j) ys.push_back(as_sym(section(c, "Y" + std::to_string(j + 1))));
                       Tensor rhs(a, K::Sym, k + l - 1);
                       for (int i = 0; i < k; ++i)
                         for (int j = 0; j < l; ++j) {
                           std::vector<Tensor> fs{sym_schouten(xs[i], ys[j])};
                           for (int t = 0; t < k; ++t)
                             if (t != i) fs.push_back(xs[t]);
                           for (int t = 0; t < l; ++t)
                             if (t != j) fs.push_back(ys[t]);
                           rhs += wedge_all(a, K::Sym, fs);
                         }
                       c.eq(sym_schouten(wedge_all(a, K::Sym, xs), wedge_all(a, K::Sym, ys)), rhs,
                            "bracket of decomposables");
                     }});
  s.items.push_back({"eq-1-7.iota", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = sym(c, "X", 0, 3), y = sym(c, "Y", 0, 3);
                       const PoissonStructure& ps = *c.A()->linear_poisson();
                       c.eq(iota(sym_schouten(x, y)), poisson_bracket(ps, iota(x), iota(y)), ps.chart(),
                            "ι[X,Y] = {ιX,ιY}");
                     }});
  r.push_back(std::move(s));
}

// ---- N-R and F-N -------------------------------------------------------

// First line of the F-N formula on simple tensors.
Tensor fn_simple(const Tensor& mu, const Tensor& x, const Tensor& nu, const Tensor& y) {
  const int k = mu.degree();
  return simple(wedge(mu, nu), section_bracket(x, y)) + simple(wedge(mu, lie_derivative(x, nu)), y) -
         simple(wedge(lie_derivative(y, mu), nu), x) +
         sgn(k) * (simple(wedge(d_tau(mu), contract(x, nu)), y) + simple(wedge(contract(y, mu), d_tau(nu)), x));
}

void add_theorem3(Registry& r) {
  Suite s{"theorem-3", {}};
  s.items.push_back({"theorem-3.antisymmetry", Scope::Algebroids, [](Ctx& c) {
                       Tensor k = mixed(c, "K", 0, 3), l = mixed(c, "L", 0, 3);
                       c.eq(nr_bracket(k, l), -(sgn((k.degree() - 1) * (l.degree() - 1)) * nr_bracket(l, k)),
                            "[K,L] = -(-1)^{kl}[L,K]");
                     }});
  s.items.push_back({"theorem-3.jacobi", Scope::Algebroids, [](Ctx& c) {
                       Tensor k = mixed(c, "K", 0, 2), l = mixed(c, "L", 0, 2), n = mixed(c, "N", 0, 2);
                       const int a = k.degree() - 1, b = l.degree() - 1, e = n.degree() - 1;
                       c.zero(sgn(a * e) * nr_bracket(k, nr_bracket(l, n)) + sgn(b * a) * nr_bracket(l, nr_bracket(n, k)) +
                                  sgn(e * b) * nr_bracket(n, nr_bracket(k, l)),
                              "graded Jacobi");
                     }});
  s.items.push_back({"theorem-3.eq-1-11", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = form(c, "mu", 0, 3), x = section(c, "X"), nu = form(c, "nu", 0, 3), y = section(c, "Y");
                       c.eq(nr_bracket(simple(mu, x), simple(nu, y)),
                            simple(wedge(mu, contract(x, nu)), y) + sgn(mu.degree()) * simple(wedge(contract(y, mu), nu), x),
                            "bracket of simple tensors");
                     }});
  r.push_back(std::move(s));

  Suite e{"eq-1-12", {}};
  e.items.push_back({"eq-1-12.operator", Scope::Algebroids, [](Ctx& c) {
                       Tensor k = mixed(c, "K", 0, 3), l = mixed(c, "L", 0, 3), w = form(c, "omega", 0, 3);
                       const int a = k.degree() - 1, b = l.degree() - 1;
                       c.eq(contract_mixed(nr_bracket(k, l), w),
                            contract_mixed(k, contract_mixed(l, w)) - sgn(a * b) * contract_mixed(l, contract_mixed(k, w)),
                            "i_[K,L] = i_K i_L - (-1)^{kl} i_L i_K");
                     }});
  e.items.push_back({"eq-1-12.mixed", Scope::Algebroids, [](Ctx& c) {
                       Tensor k = mixed(c, "K", 0, 2), l = mixed(c, "L", 0, 2), n = mixed(c, "N", 0, 2);
                       const int a = k.degree() - 1, b = l.degree() - 1;
                       c.eq(contract_mixed(nr_bracket(k, l), n),
                            contract_mixed(k, contract_mixed(l, n)) - sgn(a * b) * contract_mixed(l, contract_mixed(k, n)),
                            "i_[K,L] on mixed tensors");
                     }});
  r.push_back(std::move(e));
}

void add_theorem4(Registry& r) {
  Suite s{"theorem-4", {}};
  s.items.push_back({"theorem-4.antisymmetry", Scope::Algebroids, [](Ctx& c) {
                       Tensor k = mixed(c, "K", 0, 3), l = mixed(c, "L", 0, 3);
                       c.eq(fn_bracket(k, l), -(sgn(k.degree() * l.degree()) * fn_bracket(l, k)), "[K,L] = -(-1)^{kl}[L,K]");
                     }});
  s.items.push_back({"theorem-4.jacobi", Scope::Algebroids, [](Ctx& c) {
                       Tensor th = mixed(c, "theta", 0, 2), mu = mixed(c, "mu", 0, 2), nu = mixed(c, "nu", 0, 2);
                       const int m = th.degree(), k = mu.degree(), l = nu.degree();
                       c.zero(sgn(m * l) * fn_bracket(th, fn_bracket(mu, nu)) + sgn(k * m) * fn_bracket(mu, fn_bracket(nu, th)) +
                                  sgn(k * l) * fn_bracket(nu, fn_bracket(th, mu)),
                              "graded Jacobi");
                     }});
  s.items.push_back({"theorem-4.eq-1-14", Scope::Algebroids, [](Ctx& c) {
                       Tensor k = mixed(c, "K", 0, 2), l = mixed(c, "L", 0, 2), w = form(c, "omega", 0, 3);
                       c.eq(lie_derivative(fn_bracket(k, l), w),
                            lie_derivative(k, lie_derivative(l, w)) - sgn(k.degree() * l.degree()) * lie_derivative(l, lie_derivative(k, w)),
                            "L_[K,L] = L_K L_L - (-1)^{kl} L_L L_K");
                     }});
  s.items.push_back({"theorem-4.simple", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = form(c, "mu", 0, 2), x = section(c, "X"), nu = form(c, "nu", 0, 2), y = section(c, "Y");
                       Tensor K = simple(mu, x), L = simple(nu, y);
                       Tensor b = fn_bracket(K, L);
                       c.eq(b, fn_simple(mu, x, nu, y), "first line of the simple-tensor formula");
                       c.eq(b,
                            simple(lie_derivative(K, nu), y) - sgn(mu.degree() * nu.degree()) * simple(lie_derivative(L, mu), x) +
                                simple(wedge(mu, nu), section_bracket(x, y)),
                            "second line of the simple-tensor formula");
                     }});
  s.items.push_back({"theorem-4.well-defined", Scope::Algebroids, [](Ctx& c) {
                       Tensor mu = form(c, "mu", 0, 2), x = section(c, "X"), nu = form(c, "nu", 0, 2), y = section(c, "Y");
                       Poly f = c.function("f", c.A()).scalar();
                       c.eq(fn_simple(f * mu, x, nu, y), fn_simple(mu, f * x, nu, y), "[fμ⊗X, ν⊗Y] = [μ⊗fX, ν⊗Y]");
                       c.eq(fn_simple(mu, x, f * nu, y), fn_simple(mu, x, nu, f * y), "[μ⊗X, fν⊗Y] = [μ⊗X, ν⊗fY]");
                     }});
  s.items.push_back({"theorem-4.sections", Scope::Algebroids, [](Ctx& c) {
                       Tensor x = section(c, "X"), y = section(c, "Y");
                       c.eq(fn_bracket(as_mixed(x), as_mixed(y)), as_mixed(section_bracket(x, y)), "restricts to [X,Y] on Φ_1^0");
                     }});
  r.push_back(std::move(s));
}

}  // namespace

void add_calculus_suites(Registry& r) {
  add_algebroid(r);
  add_theorem1(r);
  add_theorem2(r);
  add_eq_1_7(r);
  add_theorem3(r);
  add_theorem4(r);
}

}  // namespace lac::suite_detail
