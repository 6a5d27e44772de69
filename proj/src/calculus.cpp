#include "lac/calculus.hpp"

#include <vector>

namespace lac {

namespace {

// Index list -> add with sign handled by Tensor::add.
void add_list(Tensor& out, const std::vector<int>& idx, int fiber, const Poly& c) {
  if (!c.is_zero()) out.add(idx, fiber, c);
}

std::vector<int> to_list(const Key& k) { return {k.idx.begin(), k.idx.begin() + k.n}; }

std::vector<int> without(const Key& k, int pos) {
  std::vector<int> v;
  v.reserve(k.n);
  for (int i = 0; i < k.n; ++i)
    if (i != pos) v.push_back(k.idx[i]);
  return v;
}

Tensor as_multivector(const Tensor& t) {
  if (t.kind() == Kind::MultiVector) return t;
  return as_kind(t, Kind::MultiVector);
}

// [f e_I, g] = f Σ_i s_i α_{I_i}(g) e_{I∖i}; s_i = (-1)^{k-i} for the
// skew bracket (1-based i), 1 for the symmetric one.
void bracket_with_function(const Algebroid& A, const Key& I, const Poly& f, const Poly& g, bool skew, int sign,
                           Tensor& out) {
  for (int i = 0; i < I.n; ++i) {
    Poly a = A.act(I.idx[i], g);
    if (a.is_zero()) continue;
    int s = skew && (I.n - 1 - i) % 2 ? -sign : sign;
    Poly c = f * a;
    add_list(out, without(I, i), -1, s < 0 ? -c : c);
  }
}

Tensor generic_schouten(const Tensor& x, const Tensor& y, bool skew) {
  const Kind kind = skew ? Kind::MultiVector : Kind::Sym;
  const Algebroid& A = *x.owner();
  const int k = x.degree(), l = y.degree();
  Tensor out(x.owner(), kind, std::max(0, k + l - 1));
  if (k == 0 && l == 0) return out;
  for (const auto& [I, f] : x.terms())
    for (const auto& [J, g] : y.terms()) {
      if (l == 0) {
        bracket_with_function(A, I, f, g, skew, 1, out);
        continue;
      }
      if (k == 0) {
        // skew: [g, Y] = (-1)^l [Y, g]; symmetric: [g, Y] = -[Y, g]
        int s = skew ? parity(l) : -1;
        bracket_with_function(A, J, g, f, skew, s, out);
        continue;
      }
      const Poly fg = f * g;
      for (int i = 0; i < k; ++i) {
        const int a = I.idx[i];
        std::vector<int> restI = without(I, i);
        for (int j = 0; j < l; ++j) {
          const int b = J.idx[j];
          const int s = skew && (i + j) % 2 ? -1 : 1;
          std::vector<int> restJ = without(J, j);
          auto emit = [&](int head, const Poly& c) {
            if (c.is_zero()) return;
            std::vector<int> idx;
            idx.reserve(k + l - 1);
            idx.push_back(head);
            idx.insert(idx.end(), restI.begin(), restI.end());
            idx.insert(idx.end(), restJ.begin(), restJ.end());
            add_list(out, idx, -1, s < 0 ? -c : c);
          };
          for (const auto& [h, c] : A.bracket(a, b)) emit(h, fg * c);
          // f and g ride on the first factors; outside the bracket they are
          // already part of fg.
          if (j == 0) emit(b, f * A.act(a, g));
          if (i == 0) emit(a, -(g * A.act(b, f)));
        }
      }
    }
  return out;
}

}  // namespace

Tensor d_tau(const Tensor& mu) {
  require_kind(mu, Kind::Form, "d_tau");
  const Algebroid& A = *mu.owner();
  const int k = mu.degree();
  Tensor out(mu.owner(), Kind::Form, k + 1);
  if (k + 1 > int(A.rank())) return out;
  for (const auto& [J, f] : mu.terms()) {
    std::vector<int> base = to_list(J);
    for (std::size_t i = 0; i < A.rank(); ++i) {
      Poly df = A.act(i, f);
      if (df.is_zero()) continue;
      std::vector<int> idx{int(i)};
      idx.insert(idx.end(), base.begin(), base.end());
      add_list(out, idx, -1, df);
    }
    // d e^{*m} = -Σ_{i<j} c_ij^m e^{*i} ∧ e^{*j}, inserted at position r with sign (-1)^r.
    for (int r = 0; r < k; ++r) {
      const int m = J.idx[r];
      for (std::size_t i = 0; i < A.rank(); ++i)
        for (std::size_t j = i + 1; j < A.rank(); ++j) {
          const Poly& c = A.c(i, j, m);
          if (c.is_zero()) continue;
          std::vector<int> idx(base.begin(), base.begin() + r);
          idx.push_back(int(i));
          idx.push_back(int(j));
          idx.insert(idx.end(), base.begin() + r + 1, base.end());
          Poly v = f * c;
          add_list(out, idx, -1, r % 2 ? v : -v);
        }
    }
  }
  return out;
}

Tensor lie_derivative(const Tensor& w, const Tensor& mu) {
  require_same_owner(w, mu);
  require_kind(mu, Kind::Form, "lie_derivative");
  if (w.kind() == Kind::Mixed) {
    const int k = w.degree();
    Tensor a = contract_mixed(w, d_tau(mu));
    Tensor b = d_tau(contract_mixed(w, mu));
    return k % 2 ? a - b : a + b;
  }
  Tensor x = as_multivector(w);
  const int k = x.degree();
  Tensor a = contract(x, d_tau(mu));
  if (mu.degree() < k) return a;
  Tensor b = d_tau(contract(x, mu));
  return k % 2 ? a + b : a - b;
}

Tensor section_bracket(const Tensor& x, const Tensor& y) {
  require_same_owner(x, y);
  Tensor a = as_multivector(x), b = as_multivector(y);
  if (a.degree() != 1 || b.degree() != 1) throw Error(ErrorCode::KindMismatch, "section_bracket needs sections");
  return generic_schouten(a, b, true);
}

Tensor anchor_apply(const Tensor& x) {
  Tensor s = as_multivector(x);
  if (s.degree() != 1) throw Error(ErrorCode::KindMismatch, "anchor_apply needs a section");
  const Algebroid& A = *s.owner();
  Tensor out(A.base_canonical(), Kind::MultiVector, 1);
  for (const auto& [key, f] : s.terms())
    for (const auto& [a, d] : A.anchor_row(key.idx[0])) out.add(std::vector<int>{a}, -1, f * d);
  return out;
}

Tensor schouten(const Tensor& x, const Tensor& y) {
  require_same_owner(x, y);
  return generic_schouten(as_multivector(x), as_multivector(y), true);
}

Tensor schouten(const Tensor& x, const Tensor& y, Exec exec) {
  if (exec == Exec::Serial) return schouten(x, y);
  require_same_owner(x, y);
  Tensor a = as_multivector(x), b = as_multivector(y);
  std::vector<Tensor> pieces;
  pieces.reserve(a.size());
  for (const auto& [key, c] : a.terms()) {
    Tensor t(a.owner(), Kind::MultiVector, a.degree());
    t.add(key, c);
    pieces.push_back(std::move(t));
  }
  std::vector<Tensor> partial(pieces.size());
  for_each_index(pieces.size(), [&](std::size_t i) { partial[i] = generic_schouten(pieces[i], b, true); });
  Tensor out(a.owner(), Kind::MultiVector, std::max(0, a.degree() + b.degree() - 1));
  for (const auto& p : partial) out += p;
  return out;
}

Tensor sym_schouten(const Tensor& x, const Tensor& y) {
  require_same_owner(x, y);
  return generic_schouten(as_kind(x, Kind::Sym), as_kind(y, Kind::Sym), false);
}

Tensor nr_bracket(const Tensor& k, const Tensor& l) {
  require_same_owner(k, l);
  Tensor K = as_kind(k, Kind::Mixed), L = as_kind(l, Kind::Mixed);
  const int sk = K.degree() - 1, sl = L.degree() - 1;
  Tensor a = contract_mixed(K, L), b = contract_mixed(L, K);
  return (sk * sl) % 2 ? a + b : a - b;
}

Tensor fn_bracket(const Tensor& k, const Tensor& l) {
  require_same_owner(k, l);
  Tensor K = as_kind(k, Kind::Mixed), L = as_kind(l, Kind::Mixed);
  const int dk = K.degree(), dl = L.degree();
  const AlgebroidPtr& owner = K.owner();
  const Algebroid& A = *owner;
  std::vector<Tensor> mu = mixed_parts(K), nu = mixed_parts(L);
  std::vector<Tensor> parts(A.rank(), Tensor(owner, Kind::Form, dk + dl));
  for (std::size_t b = 0; b < A.rank(); ++b)
    if (!nu[b].is_zero()) parts[b] += lie_derivative(K, nu[b]);
  for (std::size_t a = 0; a < A.rank(); ++a)
    if (!mu[a].is_zero()) {
      Tensor t = lie_derivative(L, mu[a]);
      parts[a] += (dk * dl) % 2 ? t : -t;
    }
  for (std::size_t a = 0; a < A.rank(); ++a) {
    if (mu[a].is_zero()) continue;
    for (std::size_t b = 0; b < A.rank(); ++b) {
      if (nu[b].is_zero() || A.bracket(a, b).empty()) continue;
      Tensor w = wedge(mu[a], nu[b]);
      for (const auto& [h, c] : A.bracket(a, b)) parts[h] += c * w;
    }
  }
  return mixed_join(owner, dk + dl, parts);
}

}  // namespace lac
