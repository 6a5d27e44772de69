#include "lac/lifts.hpp"

namespace lac {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Plain: return "plain";
    case Provenance::V: return "V";
    case Provenance::T: return "T";
    case Provenance::Vpi: return "Vpi";
    case Provenance::Vtau: return "Vtau";
    case Provenance::Iota: return "iota";
    case Provenance::G: return "G";
    case Provenance::J: return "J";
    case Provenance::Gmix: return "Gmix";
    case Provenance::Kappa: return "kappa";
    case Provenance::Alpha: return "alpha";
    case Provenance::Jstar: return "jstar";
    case Provenance::H: return "hmap";
  }
  return "?";
}

namespace {

// Total derivative ẋ^a ∂_a f on the tangent chart.
Poly dot_derivative(const Poly& f, std::size_t n) {
  Poly out;
  for (std::size_t a = 0; a < n && a < f.var_span(); ++a) {
    Poly p = f.partial(a);
    if (!p.is_zero()) out += p * Poly::variable(n + a);
  }
  return out;
}

struct Slots {
  std::vector<int> bar;  // indices of the fully barred key
  std::vector<int> dot;  // index each slot takes when dotted
  int fiber_bar = -1, fiber_dot = -1;
};

Slots slots_of(const Tensor& s, const Key& key) {
  const int m = int(s.owner()->rank());
  const bool form = s.kind() == Kind::Form || s.kind() == Kind::Mixed;
  Slots out;
  for (auto i : key.indices()) {
    out.bar.push_back(form ? m + i : i);
    out.dot.push_back(form ? i : m + i);
  }
  if (key.fiber >= 0) {
    out.fiber_bar = key.fiber;
    out.fiber_dot = m + key.fiber;
  }
  return out;
}

Tensor checked_mv(const Tensor& x, const char* what) {
  Tensor s = x.kind() == Kind::Mixed ? as_section(x) : as_kind(x, Kind::MultiVector);
  if (s.degree() != 1) throw Error(ErrorCode::KindMismatch, std::string(what) + " needs a section");
  return s;
}

}  // namespace

Poly iota(const Tensor& x) {
  if (x.kind() != Kind::Sym && !(x.kind() == Kind::MultiVector && x.degree() <= 1))
    throw Error(ErrorCode::KindMismatch, "ι needs a section or a symmetric multisection");
  const std::size_t n = x.owner()->dim();
  Poly out;
  for (const auto& [key, f] : x.terms()) {
    Poly t = f;
    for (auto i : key.indices()) t *= Poly::variable(n + i);
    out += t;
  }
  return out;
}

Tensor vertical_lift_V(const Tensor& s) {
  AlgebroidPtr ta = s.owner()->tangent();
  Tensor out(ta, s.kind(), s.degree());
  for (const auto& [key, f] : s.terms()) {
    Slots sl = slots_of(s, key);
    out.add(sl.bar, sl.fiber_bar, f);
  }
  return out;
}

Tensor complete_lift_T(const Tensor& s) {
  AlgebroidPtr ta = s.owner()->tangent();
  const std::size_t n = s.owner()->dim();
  Tensor out(ta, s.kind(), s.degree());
  for (const auto& [key, f] : s.terms()) {
    Slots sl = slots_of(s, key);
    out.add(sl.bar, sl.fiber_bar, dot_derivative(f, n));
    for (std::size_t r = 0; r < sl.bar.size(); ++r) {
      std::vector<int> idx = sl.bar;
      idx[r] = sl.dot[r];
      out.add(idx, sl.fiber_bar, f);
    }
    if (key.fiber >= 0) out.add(sl.bar, sl.fiber_dot, f);
  }
  return out;
}

Tensor vertical_pi(const Tensor& mu) {
  require_kind(mu, Kind::Form, "V_π");
  const int n = int(mu.owner()->dim());
  Tensor out(mu.owner()->dual_canonical(), Kind::MultiVector, mu.degree());
  for (const auto& [key, f] : mu.terms()) {
    std::vector<int> idx;
    for (auto i : key.indices()) idx.push_back(n + i);
    out.add(idx, -1, f);
  }
  return out;
}

Tensor vertical_tau(const Tensor& s) {
  if (s.kind() != Kind::MultiVector && s.kind() != Kind::Sym)
    throw Error(ErrorCode::KindMismatch, "V_τ needs a multivector or a symmetric multivector");
  const int n = int(s.owner()->dim());
  Tensor out(s.owner()->total_canonical(), s.kind(), s.degree());
  for (const auto& [key, f] : s.terms()) {
    std::vector<int> idx;
    for (auto i : key.indices()) idx.push_back(n + i);
    out.add(idx, -1, f);
  }
  return out;
}

Tensor cot_complete_G_vec(const Tensor& x) {
  Tensor s = checked_mv(x, "G");
  const Algebroid& A = *s.owner();
  const std::size_t n = A.dim(), m = A.rank();
  Tensor out(A.dual_canonical(), Kind::MultiVector, 1);
  for (const auto& [key, f] : s.terms()) {
    const std::size_t i = key.idx[0];
    // (f^i c_ij^k ξ_k - (∂_a f^i) δ_j^a ξ_i) ∂_{ξ_j} + f^i δ_i^a ∂_{x^a}
    for (std::size_t j = 0; j < m; ++j) {
      Poly c;
      for (const auto& [k, cc] : A.bracket(i, j)) c += cc * Poly::variable(n + k);
      c *= f;
      c -= A.act(j, f) * Poly::variable(n + i);
      out.add(std::vector<int>{int(n + j)}, -1, c);
    }
    for (const auto& [a, d] : A.anchor_row(i)) out.add(std::vector<int>{a}, -1, f * d);
  }
  return out;
}

Tensor J_map(const Tensor& k) {
  Tensor K = as_kind(k, Kind::Mixed);
  const int n = int(K.owner()->dim());
  Tensor out(K.owner()->dual_canonical(), Kind::MultiVector, K.degree());
  // J(f e^{*I} ⊗ e_j) = -f ξ_j ∂_{ξ_I}
  for (const auto& [key, f] : K.terms()) {
    std::vector<int> idx;
    for (auto i : key.indices()) idx.push_back(n + i);
    out.add(idx, -1, -(f * Poly::variable(n + key.fiber)));
  }
  return out;
}

GBranches G_map_branches(const Tensor& k) {
  Tensor K = as_kind(k, Kind::Mixed);
  const AlgebroidPtr& A = K.owner();
  PoissonPtr ps = A->linear_poisson();
  GBranches out{schouten(ps->P, J_map(K)), Tensor(A->dual_canonical(), Kind::MultiVector, K.degree() + 1)};
  const std::size_t n = A->dim();
  for (const auto& [key, f] : K.terms()) {
    Key fk = key;
    fk.fiber = -1;
    Tensor mu(A, Kind::Form, K.degree());
    mu.add(fk, f);
    Tensor x = Tensor::basis(A, Kind::MultiVector, {key.fiber});
    out.explicit_ += wedge(cot_complete_G_vec(x), vertical_pi(mu));
    out.explicit_ -= Poly::variable(n + key.fiber) * vertical_pi(d_tau(mu));
  }
  return out;
}

Tensor G_map(const Tensor& k) {
  GBranches b = G_map_branches(k);
  if (!(b.bracket == b.explicit_))
    throw Error(ErrorCode::Validation, "the two branches of G disagree", {}, to_string(b.bracket - b.explicit_));
  return b.bracket;
}

Tensor kappa(const AlgebroidPtr& base, const Tensor& t) {
  if (!base->is_canonical()) throw Error(ErrorCode::WrongProvenance, "κ is only defined over a canonical algebroid");
  AlgebroidPtr ta = base->tangent(), tc = base->tangent_canonical();
  AlgebroidPtr target;
  if (same_owner(t.owner(), ta)) target = tc;
  else if (same_owner(t.owner(), tc)) target = ta;
  else throw Error(ErrorCode::WrongProvenance, "tensor is neither over TE nor over T(TM) of this chart");
  const int n = int(base->rank());
  auto swap = [n](int i) { return i < n ? i + n : i - n; };
  Tensor out(target, t.kind(), t.degree());
  for (const auto& [key, f] : t.terms()) {
    std::vector<int> idx;
    for (auto i : key.indices()) idx.push_back(swap(i));
    out.add(idx, key.fiber >= 0 ? swap(key.fiber) : -1, f);
  }
  return out;
}

Tensor kappa(const Tensor& t) {
  AlgebroidPtr src = t.owner()->source();
  if (t.owner()->origin() != Origin::TangentLift || !src)
    throw Error(ErrorCode::WrongProvenance, "κ expects a tensor over a tangent lift");
  return kappa(src, t);
}

Tensor v_T(const Tensor& s) { return kappa(s.owner(), vertical_lift_V(s)); }
Tensor d_T(const Tensor& s) { return kappa(s.owner(), complete_lift_T(s)); }

Tensor Jstar(const Tensor& k) {
  Tensor K = as_kind(k, Kind::Mixed);
  const AlgebroidPtr& A = K.owner();
  if (!A->is_canonical()) throw Error(ErrorCode::ChartMismatch, "J* needs a canonical algebroid");
  const std::size_t n = A->dim();
  Tensor out(A->dual_canonical(), Kind::Form, K.degree());
  for (const auto& [key, f] : K.terms()) {
    Key fk = key;
    fk.fiber = -1;
    out.add(fk, f * Poly::variable(n + key.fiber));
  }
  return out;
}

Tensor H_map(const Tensor& k) {
  const AlgebroidPtr& A = k.owner();
  if (!A->is_canonical()) throw Error(ErrorCode::ChartMismatch, "H needs a canonical algebroid");
  return H_P(*A->linear_poisson(), Jstar(k));
}

PoissonPtr tangent_poisson(const PoissonStructure& ps) {
  return build_poisson(kappa(ps.canonical, complete_lift_T(ps.P)));
}

LiftedSection canonical_transport(Transport dir, const LiftedSection& t) {
  switch (t.provenance) {
    case Provenance::V:
    case Provenance::T:
    case Provenance::Kappa:
    case Provenance::Alpha: break;
    default:
      throw Error(ErrorCode::WrongProvenance,
                  "κ/α take V- or T-lifts, got a " + std::string(to_string(t.provenance)) + "-lift");
  }
  if (!t.source || !t.source->is_canonical())
    throw Error(ErrorCode::WrongProvenance, "κ/α need lifts of tensors over a canonical algebroid");
  const Kind k = t.value.kind();
  if (dir == Transport::Kappa && k == Kind::Form)
    throw Error(ErrorCode::WrongProvenance, "κ acts on multivectors; use α for forms");
  if (dir == Transport::Alpha && k != Kind::Form && k != Kind::Mixed)
    throw Error(ErrorCode::WrongProvenance, "α acts on forms; use κ for multivectors");
  return {dir == Transport::Kappa ? Provenance::Kappa : Provenance::Alpha, t.source, kappa(t.source, t.value)};
}

LiftedSection lift(Provenance kind, const Tensor& s) {
  LiftedSection out{kind, s.owner(), {}};
  switch (kind) {
    case Provenance::V: out.value = vertical_lift_V(s); break;
    case Provenance::T: out.value = complete_lift_T(s); break;
    case Provenance::Vpi: out.value = vertical_pi(s); break;
    case Provenance::Vtau: out.value = vertical_tau(s); break;
    case Provenance::Iota:
      out.value = Tensor::function(s.owner()->dual_canonical(), Kind::MultiVector, iota(s));
      break;
    case Provenance::G: out.value = cot_complete_G_vec(s); break;
    case Provenance::J: out.value = J_map(s); break;
    case Provenance::Gmix: out.value = G_map(s); break;
    case Provenance::Jstar: out.value = Jstar(s); break;
    case Provenance::H: out.value = H_map(s); break;
    default: throw Error(ErrorCode::WrongProvenance, "not a lift constructor");
  }
  return out;
}

}  // namespace lac
