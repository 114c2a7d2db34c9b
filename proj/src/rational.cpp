// Copyright 2026 The cavitygates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cavitygates/rational.hpp"

#include <charconv>
#include <numeric>

#include <fmt/format.h>

#include "cavitygates/errors.hpp"

namespace cavitygates {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? fmt::format("{}", num_) : fmt::format("{}/{}", num_, den_);
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError(fmt::format("'{}' is not a rational number", whole));
  return v;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, s));
  const std::string_view view(s);
  const auto den = parse_int(view.substr(slash + 1), s);
  if (den == 0) throw ParseError(fmt::format("'{}' has a zero denominator", s));
  return Rational(parse_int(view.substr(0, slash), s), den);
}

Rational operator+(Rational a, Rational b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return Rational(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

Rational operator*(Rational a, Rational b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

}  // namespace cavitygates
