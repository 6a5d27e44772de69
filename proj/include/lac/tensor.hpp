#pragma once

// Sparse graded tensors over an algebroid.
//
// Keys are normalized: strictly increasing index tuples for multivectors and
// forms, nondecreasing ones for symmetric multivectors. A mixed tensor
// μ ⊗ e_j stores the form part in `idx` and j in `fiber`; its degree is the
// form degree.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lac/algebroid.hpp"

namespace lac {

enum class Kind { MultiVector, Form, Mixed, Sym };
std::string_view to_string(Kind k);

struct Key {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxVars> idx{};
  std::int16_t fiber = -1;

  std::span<const std::uint8_t> indices() const { return {idx.data(), n}; }
  friend auto operator<=>(const Key&, const Key&) = default;
};

class Tensor {
 public:
  using Terms = std::map<Key, Poly>;

  Tensor() = default;
  Tensor(AlgebroidPtr owner, Kind kind, int degree);

  static Tensor function(AlgebroidPtr owner, Kind kind, const Poly& f);
  // coef · e_{idx} (⊗ e_fiber); unsorted indices are normalized with their sign.
  static Tensor basis(AlgebroidPtr owner, Kind kind, std::vector<int> idx, int fiber = -1, const Poly& coef = 1);

  const AlgebroidPtr& owner() const { return owner_; }
  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(std::span<const int> idx, int fiber, const Poly& coef);
  void add(const Key& key, const Poly& coef);
  Poly coefficient(std::vector<int> idx, int fiber = -1) const;
  // Value of a degree-0 multivector, form or symmetric tensor.
  Poly scalar() const;

  template <class F>
  Tensor map_coefficients(F&& f) const {
    Tensor out(owner_, kind_, degree_);
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Poly& f);

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator-(Tensor a) { return a *= Poly(-1); }
  friend Tensor operator*(const Poly& f, Tensor a) { return a *= f; }
  friend Tensor operator*(Tensor a, const Poly& f) { return a *= f; }
  // Throws ChartMismatch for tensors over different algebroids.
  friend bool operator==(const Tensor& a, const Tensor& b);

 private:
  AlgebroidPtr owner_;
  Kind kind_ = Kind::Form;
  int degree_ = 0;
  Terms terms_;
};

void require_same_owner(const Tensor& a, const Tensor& b);
void require_kind(const Tensor& t, Kind kind, const char* what);

enum class ContractionOrder {
  Forward,   // i_{X1∧…∧Xk} = i_{X1} ∘ … ∘ i_{Xk}
  Reversed,  // i_{X1∧…∧Xk} = i_{Xk} ∘ … ∘ i_{X1}
};
ContractionOrder contraction_order();
std::string_view to_string(ContractionOrder o);

// Scoped override of the contraction order on the current thread.
class ContractionOrderGuard {
 public:
  explicit ContractionOrderGuard(ContractionOrder o);
  ~ContractionOrderGuard();
  ContractionOrderGuard(const ContractionOrderGuard&) = delete;
  ContractionOrderGuard& operator=(const ContractionOrderGuard&) = delete;

 private:
  ContractionOrder saved_;
};

// Degree-0 reinterpretations and the Φ_1^0 = Φ^1 identification.
Tensor as_kind(const Tensor& t, Kind kind);
Tensor as_section(const Tensor& k);  // mixed of degree 0 -> multivector of degree 1
Tensor as_mixed(const Tensor& x);    // multivector of degree 1 -> mixed of degree 0
Tensor as_sym(const Tensor& x);      // multivector of degree <= 1 -> symmetric

// Splits Σ_j μ_j ⊗ e_j into the forms μ_j, and back.
std::vector<Tensor> mixed_parts(const Tensor& k);
Tensor mixed_join(const AlgebroidPtr& owner, int degree, const std::vector<Tensor>& parts);
Tensor tensor_with(const Tensor& form, int fiber);  // μ ⊗ e_fiber

Tensor wedge(const Tensor& s, const Tensor& t);
Tensor sym_product(const Tensor& s, const Tensor& t);
// i_X t for a multivector X and a form or mixed t.
Tensor contract(const Tensor& x, const Tensor& t);
// i_K t for mixed K: μ ∧ i_X t on simple tensors.
Tensor contract_mixed(const Tensor& k, const Tensor& t);
bool equals(const Tensor& s, const Tensor& t);

std::string to_string(const Tensor& t);

}  // namespace lac
