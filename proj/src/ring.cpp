#include "lac/ring.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace lac {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::MissingCoordinate: return "MissingCoordinate";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidChart: return "InvalidChart";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyChart: return "EmptyChart";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::AnchorNotMorphism: return "AnchorNotMorphism";
    case ErrorCode::ChartMismatch: return "ChartMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotPoisson: return "NotPoisson";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::WrongProvenance: return "WrongProvenance";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Error";
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || c == '_')) return false;
  }
  return true;
}

Chart::Chart(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    throw Error(ErrorCode::InvalidChart,
                "chart has " + std::to_string(names_.size()) + " coordinates; at most " +
                    std::to_string(kMaxVars) + " are supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw Error(ErrorCode::InvalidChart, "invalid coordinate name '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidChart, "duplicate coordinate '" + n + "'");
  }
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Chart Chart::extended(const std::vector<std::string>& more) const {
  auto all = names_;
  all.insert(all.end(), more.begin(), more.end());
  return Chart(std::move(all));
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exp)
    if (e) return false;
  return true;
}

namespace {

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.exp[i]) + unsigned(b.exp[i]);
    if (s > 255) throw Error(ErrorCode::Overflow, "exponent exceeds 255");
    r.exp[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool desc(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(std::size_t index) {
  if (index >= kMaxVars) throw Error(ErrorCode::Overflow, "variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  return monomial(m, Rational(1));
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  // Input sorted descending, possibly with equal monomials adjacent.
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coef;
  return std::nullopt;
}

std::size_t Poly::var_span() const {
  std::size_t span = 0;
  for (const auto& t : terms_)
    for (std::size_t i = span; i < kMaxVars; ++i)
      if (t.mono.exp[i]) span = i + 1;
  return span;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return terms_.empty() ? -1 : d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (a->mono > b->mono) {
      out.push_back(std::move(*a++));
    } else if (b->mono > a->mono) {
      out.push_back(*b++);
    } else {
      Rational c = a->coef + b->coef;
      if (c != 0) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) out.push_back(std::move(*a));
  for (; b != be; ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly();
  if (b.is_constant()) return a * b.terms_[0].coef;
  if (a.is_constant()) return b * a.terms_[0].coef;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({mul(s.mono, t.mono), s.coef * t.coef});
  std::sort(prod.begin(), prod.end(), desc);
  return Poly::from_sorted(std::move(prod));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::partial(std::size_t var) const {
  if (var >= kMaxVars) return Poly();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.mono.exp[var];
    if (!e) continue;
    Term d{t.mono, t.coef * e};
    d.mono.exp[var] = static_cast<std::uint8_t>(e - 1);
    out.push_back(std::move(d));
  }
  // Decrementing the same slot in every surviving term keeps lex order.
  return from_sorted(std::move(out));
}

Rational Poly::eval(std::span<const Rational> point) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      auto e = t.mono.exp[i];
      if (!e) continue;
      if (i >= point.size()) throw Error(ErrorCode::MissingCoordinate, "no value for coordinate " + std::to_string(i));
      Rational x = point[i];
      for (unsigned k = 0; k < e; ++k) v *= x;
    }
    sum += v;
  }
  return sum;
}

Poly Poly::remap(std::span<const std::size_t> target) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!t.mono.exp[i]) continue;
      std::size_t j = i < target.size() ? target[i] : i;
      if (j >= kMaxVars) throw Error(ErrorCode::Overflow, "variable index out of range");
      unsigned s = unsigned(m.exp[j]) + t.mono.exp[i];
      if (s > 255) throw Error(ErrorCode::Overflow, "exponent exceeds 255");
      m.exp[j] = static_cast<std::uint8_t>(s);
    }
    out.push_back({m, t.coef});
  }
  std::sort(out.begin(), out.end(), desc);
  return from_sorted(std::move(out));
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view s) {
  std::string t(s);
  std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  auto slash = t.find('/');
  auto digits = [&](std::size_t b, std::size_t e) {
    if (b >= e) return false;
    for (std::size_t i = b; i < e; ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  bool ok = slash == std::string::npos ? digits(start, t.size())
                                        : digits(start, slash) && digits(slash + 1, t.size());
  if (!ok) throw Error(ErrorCode::Syntax, "malformed rational '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw Error(ErrorCode::Syntax, "malformed rational '" + t + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::Syntax, "zero denominator in '" + t + "'");
  q.canonicalize();
  return q;
}

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Chart& chart) : s_(src), chart_(chart) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Syntax, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  Poly expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (!eat('^')) return b;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-')
      throw Error(ErrorCode::NegativeExponent, "negative exponent at offset " + std::to_string(pos_) + " in '" +
                                                   std::string(s_) + "'");
    auto d = digits();
    if (d.empty()) fail("expected exponent");
    if (d.size() > 5) throw Error(ErrorCode::Overflow, "exponent " + d + " too large");
    unsigned e = static_cast<unsigned>(std::stoul(d));
    if (!b.is_constant() && e > 255) throw Error(ErrorCode::Overflow, "exponent exceeds 255");
    return b.pow(e);
  }

  Poly base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      Rational q(mpz_class(num, 10));
      if (eat('/')) {
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        mpz_class dz(den, 10);
        if (dz == 0) fail("zero denominator");
        q /= Rational(dz);
      }
      return Poly(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      auto name = s_.substr(b, pos_ - b);
      auto idx = chart_.index_of(name);
      if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
      return Poly::variable(*idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const Chart& chart_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view src, const Chart& chart) { return Parser(src, chart).run(); }

std::string to_string(const Poly& p, const Chart& chart) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      auto e = t.mono.exp[i];
      if (!e) continue;
      if (i >= chart.size())
        throw Error(ErrorCode::ChartMismatch, "polynomial uses coordinate " + std::to_string(i) +
                                                  " outside a chart of size " + std::to_string(chart.size()));
      if (!mono.empty()) mono += '*';
      mono += chart.name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Rational mag = abs(t.coef);
    std::string body;
    if (mono.empty()) body = to_string(mag);
    else if (mag == 1) body = mono;
    else body = to_string(mag) + "*" + mono;
    bool neg = sgn(t.coef) < 0;
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

Poly partial(const Poly& p, const Chart& chart, std::string_view var) {
  auto idx = chart.index_of(var);
  if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(var) + "'");
  return p.partial(*idx);
}

Rational eval_at(const Poly& p, const Chart& chart,
                 const std::map<std::string, Rational, std::less<>>& point) {
  std::vector<Rational> values(chart.size());
  for (const auto& [name, v] : point) {
    auto idx = chart.index_of(name);
    if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
    values[*idx] = v;
  }
  for (std::size_t i = 0; i < chart.size(); ++i)
    if (!point.count(chart.name(i)))
      throw Error(ErrorCode::MissingCoordinate, "no value for coordinate '" + chart.name(i) + "'");
  if (p.var_span() > chart.size())
    throw Error(ErrorCode::ChartMismatch, "polynomial uses coordinates outside the chart");
  return p.eval(values);
}

}  // namespace lac

namespace lac {

std::string format_combination(const std::vector<std::pair<std::string, const Poly*>>& terms, const Chart& chart) {
  std::string out;
  for (const auto& [basis, coef] : terms) {
    if (coef->is_zero()) continue;
    std::string cs = to_string(*coef, chart);
    std::string t;
    if (basis.empty()) t = coef->size() > 1 && !out.empty() ? "(" + cs + ")" : cs;
    else if (cs == "1") t = basis;
    else if (cs == "-1") t = "-" + basis;
    else if (coef->size() == 1) t = cs + "*" + basis;
    else t = "(" + cs + ")*" + basis;
    if (out.empty()) out = t;
    else if (t[0] == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out.empty() ? "0" : out;
}

}  // namespace lac
