// SPDX-License-Identifier: Apache-2.0
#include "rootfan/rational.hpp"

#include <charconv>
#include <ostream>

namespace rootfan {

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  std::string_view sv(text);
  std::int64_t d = parse_int(sv.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("malformed rational: zero denominator");
  return Rational(parse_int(sv.substr(0, slash)), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace rootfan
