#include "starea/params.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace starea {

Fraction::Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw BadParameter("fraction denominator must be nonzero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Fraction Fraction::parse(const std::string& text) {
  if (text.empty()) throw BadParameter("empty fraction string");

  const auto to_int = [](const std::string& s) -> std::int64_t {
    if (s.empty() || s == "-" || s == "+") throw BadParameter("malformed number in fraction");
    for (std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw BadParameter("malformed number in fraction: \"" + s + "\"");
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size())
      throw BadParameter("integer out of range in fraction: \"" + s + "\"");
    return v;
  };

  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    return Fraction(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }

  const std::size_t dot = text.find('.');
  if (dot == std::string::npos) return Fraction(to_int(text), 1);

  // decimal string: digits after the point become a power-of-ten denominator
  const std::string head = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.size() > 18) throw BadParameter("decimal too long for exact parsing");
  for (char ch : frac)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw BadParameter("malformed decimal: \"" + text + "\"");

  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const bool negative = !head.empty() && head[0] == '-';
  const std::string whole = (head.empty() || head == "-" || head == "+") ? "0" : head;
  std::int64_t w = to_int(whole);
  if (w < 0) w = -w;
  const std::int64_t digits = frac.empty() ? 0 : to_int(frac);
  // 18-digit cap above keeps w * den + digits inside int64 for sane inputs
  std::int64_t n = w * den + digits;
  if (negative) n = -n;
  return Fraction(n, den);
}

}  // namespace starea
