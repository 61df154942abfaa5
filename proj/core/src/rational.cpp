#include "densesf/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace densesf {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t n = std::stoll(text.substr(0, slash));
    std::int64_t d = std::stoll(text.substr(slash + 1));
    return Rational(n, d);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
    bool neg = !whole.empty() && whole[0] == '-';
    std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
    std::int64_t den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    std::int64_t n = (neg ? -1 : 1) * ((w < 0 ? -w : w) * den + f);
    return Rational(n, den);
  }
  return Rational(std::stoll(text), 1);
}

}  // namespace densesf
