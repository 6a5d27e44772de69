#pragma once

#include <doctest.h>

#include "lac/fixtures.hpp"

namespace lac::test {

inline Tensor T(const AlgebroidPtr& owner, Kind kind, int degree, const std::map<std::string, std::string>& terms) {
  return make_tensor(owner, kind, degree, terms);
}

inline Tensor fn(const AlgebroidPtr& owner, const std::string& f, Kind kind = Kind::Form) {
  return Tensor::function(owner, kind, parse_poly(f, owner->chart()));
}

inline Poly P(const AlgebroidPtr& owner, const std::string& f) { return parse_poly(f, owner->chart()); }

inline AlgebroidPtr canon(std::vector<std::string> names) { return canonical_algebroid(Chart(std::move(names))); }

}  // namespace lac::test

namespace doctest {
template <>
struct StringMaker<lac::Tensor> {
  static String convert(const lac::Tensor& t) { return lac::to_string(t).c_str(); }
};
}  // namespace doctest
