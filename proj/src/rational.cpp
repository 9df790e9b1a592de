#include "openbook/rational.hpp"

#include <charconv>

namespace openbook {

Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> Rational {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + text + "'");
  };
  const char* first = text.data();
  const char* last = first + text.size();
  std::int64_t num = 0, den = 1;
  auto r = std::from_chars(first, last, num);
  if (r.ec != std::errc{}) return bad();
  if (r.ptr != last) {
    if (*r.ptr != '/') return bad();
    auto r2 = std::from_chars(r.ptr + 1, last, den);
    if (r2.ec != std::errc{} || r2.ptr != last) return bad();
    if (den == 0) return bad();
  }
  return Rational(num, den);
}

}  // namespace openbook
