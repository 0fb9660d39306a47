#include "hofd/rational.hpp"

#include <cctype>

#include "hofd/error.hpp"

namespace hofd {

bool looks_rational(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  bool digits = false, slash = false, denom_digits = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      (slash ? denom_digits : digits) = true;
    } else if (ch == '/' && !slash && digits) {
      slash = true;
    } else {
      return false;
    }
  }
  return digits && (!slash || denom_digits);
}

Rational parse_rational(std::string_view text) {
  if (!looks_rational(text)) {
    throw Error(ErrorKind::Usage,
                "expected an exact rational like \"3/7\" or \"2\", got \"" +
                    std::string(text) + "\"");
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  if (const auto slash = s.find('/'); slash != std::string::npos &&
      s.find_first_not_of('0', slash + 1) == std::string::npos) {
    throw Error(ErrorKind::Usage, "zero denominator in \"" + s + "\"");
  }
  Rational r(s, 10);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace hofd
