#include "homakivis/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "homakivis/errors.hpp"

namespace homakivis {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("", "not a rational literal: \"" + std::string(text) + "\"");
  }
  if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
    throw InputError("", "zero denominator in \"" + std::string(text) + "\"");
  }
  Scalar value(std::string(text), 10);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

}  // namespace homakivis
