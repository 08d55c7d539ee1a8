#include "spine/rational.hpp"

#include <cctype>

#include "spine/error.hpp"

namespace spine {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw SyntaxError("malformed rational '" + std::string(text) + "'", 1, 1);
  }
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorKind::semantic, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(negative ? Integer(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_string(RationalVector const& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ",";
    out += v[i].get_str();
  }
  return out + "]";
}

}  // namespace spine
