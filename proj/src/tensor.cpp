#include "lac/tensor.hpp"

#include <algorithm>

namespace lac {

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::MultiVector: return "mv";
    case Kind::Form: return "form";
    case Kind::Mixed: return "mixed";
    case Kind::Sym: return "sym";
  }
  return "?";
}

namespace {

thread_local ContractionOrder g_order = ContractionOrder::Reversed;

bool antisymmetric(Kind k) { return k != Kind::Sym; }

// Sorts idx in place; returns the permutation sign, or 0 when an
// antisymmetric key has a repeated index.
int normalize(std::uint8_t* idx, int n, bool anti) {
  int sign = 1;
  for (int i = 1; i < n; ++i)
    for (int j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  if (anti)
    for (int i = 1; i < n; ++i)
      if (idx[i] == idx[i - 1]) return 0;
  return anti ? sign : 1;
}

// Merges two sorted keys; sign of the shuffle, 0 on overlap for antisymmetric kinds.
int merge(const Key& a, const Key& b, bool anti, Key& out) {
  if (a.n + b.n > int(kMaxVars)) throw Error(ErrorCode::Overflow, "tensor degree exceeds " + std::to_string(kMaxVars));
  int i = 0, j = 0, k = 0, inversions = 0;
  while (i < a.n || j < b.n) {
    if (j == b.n || (i < a.n && a.idx[i] < b.idx[j])) {
      out.idx[k++] = a.idx[i++];
    } else if (i == a.n || b.idx[j] < a.idx[i]) {
      inversions += a.n - i;
      out.idx[k++] = b.idx[j++];
    } else {
      if (anti) return 0;
      out.idx[k++] = a.idx[i++];
    }
  }
  out.n = std::uint8_t(k);
  return anti && inversions % 2 ? -1 : 1;
}

// i_{e_I} e^{*J}; returns the sign (0 if some index of I is missing from J).
int contract_key(std::span<const std::uint8_t> I, const Key& j, Key& out) {
  out = j;
  out.fiber = -1;
  int sign = 1;
  auto remove = [&](std::uint8_t v) {
    for (int p = 0; p < out.n; ++p)
      if (out.idx[p] == v) {
        if (p % 2) sign = -sign;
        for (int q = p + 1; q < out.n; ++q) out.idx[q - 1] = out.idx[q];
        --out.n;
        return true;
      }
    return false;
  };
  if (g_order == ContractionOrder::Reversed) {
    for (auto v : I)
      if (!remove(v)) return 0;
  } else {
    for (auto it = I.rbegin(); it != I.rend(); ++it)
      if (!remove(*it)) return 0;
  }
  return sign;
}


}  // namespace

ContractionOrder contraction_order() { return g_order; }

std::string_view to_string(ContractionOrder o) {
  return o == ContractionOrder::Forward ? "forward" : "reversed";
}

ContractionOrderGuard::ContractionOrderGuard(ContractionOrder o) : saved_(g_order) { g_order = o; }
ContractionOrderGuard::~ContractionOrderGuard() { g_order = saved_; }

Tensor::Tensor(AlgebroidPtr owner, Kind kind, int degree) : owner_(std::move(owner)), kind_(kind), degree_(degree) {
  if (!owner_) throw Error(ErrorCode::ChartMismatch, "tensor without an owner");
  if (degree < 0 || degree > int(kMaxVars)) throw Error(ErrorCode::DimensionMismatch, "bad tensor degree");
}

Tensor Tensor::function(AlgebroidPtr owner, Kind kind, const Poly& f) {
  if (kind == Kind::Mixed) throw Error(ErrorCode::KindMismatch, "a function is not a mixed tensor");
  Tensor t(std::move(owner), kind, 0);
  t.add(Key{}, f);
  return t;
}

Tensor Tensor::basis(AlgebroidPtr owner, Kind kind, std::vector<int> idx, int fiber, const Poly& coef) {
  Tensor t(std::move(owner), kind, int(idx.size()));
  t.add(idx, fiber, coef);
  return t;
}

void Tensor::add(std::span<const int> idx, int fiber, const Poly& coef) {
  if (int(idx.size()) != degree_) throw Error(ErrorCode::DimensionMismatch, "key length differs from the degree");
  if ((kind_ == Kind::Mixed) != (fiber >= 0))
    throw Error(ErrorCode::KindMismatch, "mixed keys need exactly one fiber index");
  Key k;
  k.n = std::uint8_t(idx.size());
  const int bound = int(owner_->rank());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= bound) throw Error(ErrorCode::DimensionMismatch, "index out of range");
    k.idx[i] = std::uint8_t(idx[i]);
  }
  if (fiber >= int(owner_->rank())) throw Error(ErrorCode::DimensionMismatch, "fiber index out of range");
  k.fiber = std::int16_t(fiber);
  int s = normalize(k.idx.data(), k.n, antisymmetric(kind_));
  if (s == 0 || coef.is_zero()) return;
  add(k, s < 0 ? -coef : coef);
}

void Tensor::add(const Key& key, const Poly& coef) {
  if (coef.is_zero()) return;
  // Slots past n are not part of the key; clear them so equal keys compare equal.
  Key k = key;
  std::fill(k.idx.begin() + k.n, k.idx.end(), std::uint8_t(0));
  auto [it, fresh] = terms_.try_emplace(k, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Tensor::coefficient(std::vector<int> idx, int fiber) const {
  Tensor probe(owner_, kind_, int(idx.size()));
  probe.add(idx, fiber, Poly(1));
  if (probe.is_zero()) return Poly();
  const auto& [key, sign] = *probe.terms_.begin();
  auto it = terms_.find(key);
  return it == terms_.end() ? Poly() : it->second * sign;
}

Poly Tensor::scalar() const {
  if (degree_ != 0 || kind_ == Kind::Mixed) throw Error(ErrorCode::KindMismatch, "not a function");
  return terms_.empty() ? Poly() : terms_.begin()->second;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_same_owner(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero() && (kind_ != o.kind_ || degree_ != o.degree_)) return *this = o;
  if (kind_ != o.kind_ || degree_ != o.degree_)
    throw Error(ErrorCode::KindMismatch, "cannot add a " + std::string(to_string(o.kind_)) + " of degree " +
                                             std::to_string(o.degree_) + " to a " + std::string(to_string(kind_)) +
                                             " of degree " + std::to_string(degree_));
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) { return *this += -o; }

Tensor& Tensor::operator*=(const Poly& f) {
  if (f.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= f;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const Tensor& a, const Tensor& b) {
  require_same_owner(a, b);
  if (a.is_zero() && b.is_zero()) return true;
  if (a.kind_ != b.kind_ || a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
    if (!(i->first == j->first) || !(i->second == j->second)) return false;
  return true;
}

bool equals(const Tensor& s, const Tensor& t) { return s == t; }

void require_same_owner(const Tensor& a, const Tensor& b) {
  if (!a.owner() || !b.owner() || !same_owner(a.owner(), b.owner()))
    throw Error(ErrorCode::ChartMismatch, "tensors live over different algebroids");
}

void require_kind(const Tensor& t, Kind kind, const char* what) {
  if (t.kind() != kind)
    throw Error(ErrorCode::KindMismatch,
                std::string(what) + " expects a " + std::string(to_string(kind)) + ", got a " +
                    std::string(to_string(t.kind())));
}

Tensor as_kind(const Tensor& t, Kind kind) {
  if (t.kind() == kind) return t;
  if (t.degree() == 0 && t.kind() != Kind::Mixed && kind != Kind::Mixed)
    return Tensor::function(t.owner(), kind, t.scalar());
  if (kind == Kind::Sym && t.kind() == Kind::MultiVector && t.degree() == 1) return as_sym(t);
  if (kind == Kind::Mixed && t.kind() == Kind::MultiVector && t.degree() == 1) return as_mixed(t);
  if (kind == Kind::MultiVector && t.kind() == Kind::Mixed && t.degree() == 0) return as_section(t);
  throw Error(ErrorCode::KindMismatch, "cannot view a " + std::string(to_string(t.kind())) + " of degree " +
                                           std::to_string(t.degree()) + " as a " + std::string(to_string(kind)));
}

Tensor as_section(const Tensor& k) {
  require_kind(k, Kind::Mixed, "as_section");
  if (k.degree() != 0) throw Error(ErrorCode::KindMismatch, "only degree-0 mixed tensors are sections");
  Tensor out(k.owner(), Kind::MultiVector, 1);
  for (const auto& [key, c] : k.terms()) out.add(std::vector<int>{key.fiber}, -1, c);
  return out;
}

Tensor as_mixed(const Tensor& x) {
  require_kind(x, Kind::MultiVector, "as_mixed");
  if (x.degree() != 1) throw Error(ErrorCode::KindMismatch, "only sections embed as degree-0 mixed tensors");
  Tensor out(x.owner(), Kind::Mixed, 0);
  for (const auto& [key, c] : x.terms()) out.add(std::span<const int>{}, key.idx[0], c);
  return out;
}

Tensor as_sym(const Tensor& x) {
  if (x.kind() == Kind::Sym) return x;
  require_kind(x, Kind::MultiVector, "as_sym");
  if (x.degree() > 1) throw Error(ErrorCode::KindMismatch, "only multivectors of degree <= 1 are symmetric");
  Tensor out(x.owner(), Kind::Sym, x.degree());
  for (const auto& [key, c] : x.terms()) out.add(key, c);
  return out;
}

std::vector<Tensor> mixed_parts(const Tensor& k) {
  require_kind(k, Kind::Mixed, "mixed_parts");
  std::vector<Tensor> parts(k.owner()->rank(), Tensor(k.owner(), Kind::Form, k.degree()));
  for (const auto& [key, c] : k.terms()) {
    Key f = key;
    f.fiber = -1;
    parts[key.fiber].add(f, c);
  }
  return parts;
}

Tensor tensor_with(const Tensor& form, int fiber) {
  require_kind(form, Kind::Form, "tensor_with");
  Tensor out(form.owner(), Kind::Mixed, form.degree());
  for (const auto& [key, c] : form.terms()) {
    Key m = key;
    m.fiber = std::int16_t(fiber);
    out.add(m, c);
  }
  return out;
}

Tensor mixed_join(const AlgebroidPtr& owner, int degree, const std::vector<Tensor>& parts) {
  Tensor out(owner, Kind::Mixed, degree);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].is_zero()) continue;
    out += tensor_with(as_kind(parts[j], Kind::Form), int(j));
  }
  return out;
}

namespace {

Tensor product(const Tensor& s, const Tensor& t, Kind kind, bool anti, int fiber_from) {
  Tensor out(s.owner(), kind, s.degree() + t.degree());
  for (const auto& [a, ca] : s.terms())
    for (const auto& [b, cb] : t.terms()) {
      Key k;
      int sign = merge(a, b, anti, k);
      if (!sign) continue;
      k.fiber = fiber_from == 0 ? a.fiber : (fiber_from == 1 ? b.fiber : -1);
      Poly c = ca * cb;
      out.add(k, sign < 0 ? -c : c);
    }
  return out;
}

}  // namespace

Tensor wedge(const Tensor& s, const Tensor& t) {
  require_same_owner(s, t);
  const Kind a = s.kind(), b = t.kind();
  auto scalarish = [](const Tensor& x) { return x.degree() == 0 && x.kind() != Kind::Mixed; };
  if (scalarish(s) && b != Kind::Sym) return s.scalar() * t;
  if (scalarish(t) && a != Kind::Sym) return t.scalar() * s;
  if (a == Kind::MultiVector && b == Kind::MultiVector) return product(s, t, Kind::MultiVector, true, -1);
  if (a == Kind::Form && b == Kind::Form) return product(s, t, Kind::Form, true, -1);
  if (a == Kind::Form && b == Kind::Mixed) return product(s, t, Kind::Mixed, true, 1);
  if (a == Kind::Mixed && b == Kind::Form) return product(s, t, Kind::Mixed, true, 0);
  throw Error(ErrorCode::KindMismatch,
              "wedge of a " + std::string(to_string(a)) + " and a " + std::string(to_string(b)));
}

Tensor sym_product(const Tensor& s, const Tensor& t) {
  require_same_owner(s, t);
  Tensor x = as_kind(s, Kind::Sym), y = as_kind(t, Kind::Sym);
  return product(x, y, Kind::Sym, false, -1);
}

Tensor contract(const Tensor& x, const Tensor& t) {
  require_same_owner(x, t);
  require_kind(x, Kind::MultiVector, "contract");
  if (t.kind() != Kind::Form && t.kind() != Kind::Mixed)
    throw Error(ErrorCode::KindMismatch, "contract needs a form or a mixed tensor");
  const int deg = t.degree() - x.degree();
  if (deg < 0) return Tensor(t.owner(), t.kind(), 0);
  Tensor out(t.owner(), t.kind(), deg);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : t.terms()) {
      Key k;
      int sign = contract_key(a.indices(), b, k);
      if (!sign) continue;
      k.fiber = b.fiber;
      Poly c = ca * cb;
      out.add(k, sign < 0 ? -c : c);
    }
  return out;
}

Tensor contract_mixed(const Tensor& k, const Tensor& t) {
  require_same_owner(k, t);
  Tensor kk = as_kind(k, Kind::Mixed);
  if (t.kind() != Kind::Form && t.kind() != Kind::Mixed)
    throw Error(ErrorCode::KindMismatch, "contract_mixed needs a form or a mixed tensor");
  const int deg = t.degree() + kk.degree() - 1;
  if (deg < 0) return Tensor(t.owner(), t.kind(), 0);
  Tensor out(t.owner(), t.kind(), deg);
  for (const auto& [a, ca] : kk.terms()) {
    // i_{e_j} of each term of t, then μ ∧ (·).
    const std::uint8_t j = std::uint8_t(a.fiber);
    for (const auto& [b, cb] : t.terms()) {
      Key inner;
      int s1 = contract_key(std::span<const std::uint8_t>(&j, 1), b, inner);
      if (!s1) continue;
      Key merged;
      Key mu = a;
      mu.fiber = -1;
      int s2 = merge(mu, inner, true, merged);
      if (!s2) continue;
      merged.fiber = b.fiber;
      Poly c = ca * cb;
      out.add(merged, s1 * s2 < 0 ? -c : c);
    }
  }
  return out;
}

std::string to_string(const Tensor& t) {
  const auto& A = *t.owner();
  std::vector<std::string> names;
  names.reserve(t.size());
  for (const auto& [key, c] : t.terms()) {
    std::string s;
    const char* sep = t.kind() == Kind::Sym ? "∨" : "∧";
    for (int i = 0; i < key.n; ++i) {
      if (i) s += sep;
      s += t.kind() == Kind::Form || t.kind() == Kind::Mixed ? A.form_name(key.idx[i]) : A.vector_name(key.idx[i]);
    }
    if (t.kind() == Kind::Mixed) s = (key.n ? s : std::string("1")) + "⊗" + A.vector_name(key.fiber);
    names.push_back(std::move(s));
  }
  std::vector<std::pair<std::string, const Poly*>> parts;
  std::size_t i = 0;
  for (const auto& [key, c] : t.terms()) parts.emplace_back(names[i++], &c);
  return format_combination(parts, A.chart());
}

}  // namespace lac
