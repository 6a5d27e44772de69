#pragma once

// Exact coefficient ring: multivariate polynomials over Q.
//
// A Poly does not own its chart. Exponent vectors are indexed by coordinate
// position, so a polynomial over a chart is also a polynomial over every
// chart that extends it by appending coordinates. All lifted charts are
// built that way, which makes pulling back base functions free.

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lac/error.hpp"

namespace lac {

using Rational = mpq_class;

inline constexpr std::size_t kMaxVars = 24;

class Chart {
 public:
  Chart() = default;
  explicit Chart(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // New chart with `more` appended after the existing coordinates.
  Chart extended(const std::vector<std::string>& more) const;

  friend bool operator==(const Chart&, const Chart&) = default;

 private:
  std::vector<std::string> names_;
};

bool is_identifier(std::string_view s);

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  // Lexicographic in chart order: coordinate 0 is most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    int c = std::memcmp(a.exp.data(), b.exp.data(), kMaxVars);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.exp.data(), b.exp.data(), kMaxVars) == 0;
  }

  int total_degree() const;
  bool is_one() const;
};

struct Term {
  Monomial mono;
  Rational coef;
};

class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT: integers are polynomials
  explicit Poly(const Rational& c);

  static Poly variable(std::size_t index);
  static Poly monomial(const Monomial& m, const Rational& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; nullopt otherwise.
  std::optional<Rational> constant_value() const;

  // Terms in strictly decreasing monomial order, no zero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  // 1 + the highest coordinate index that occurs; 0 for constants.
  std::size_t var_span() const;
  int total_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned e) const;
  Poly partial(std::size_t var) const;
  Rational eval(std::span<const Rational> point) const;
  // Renames coordinate i to target[i]; coordinates past target.size() stay.
  Poly remap(std::span<const std::size_t> target) const;

 private:
  static Poly from_sorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

Poly parse_poly(std::string_view src, const Chart& chart);
std::string to_string(const Poly& p, const Chart& chart);

Poly partial(const Poly& p, const Chart& chart, std::string_view var);
Rational eval_at(const Poly& p, const Chart& chart,
                 const std::map<std::string, Rational, std::less<>>& point);

// Pretty-prints Σ coef·basis. An empty basis name denotes the scalar part.
std::string format_combination(const std::vector<std::pair<std::string, const Poly*>>& terms, const Chart& chart);

// Canonical text for a rational: "p" or "p/q".
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);

}  // namespace lac
