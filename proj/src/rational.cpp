#include "lfk/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lfk {

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_int(num, true)) throw bad();
  if (slash == std::string_view::npos) return Rational(mpz_class(std::string(num.front() == '+' ? num.substr(1) : num)));
  const std::string_view den = text.substr(slash + 1);
  if (!is_int(den, false)) throw bad();
  mpz_class d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(mpz_class(std::string(num.front() == '+' ? num.substr(1) : num)), d);
  q.canonicalize();
  return q;
}

}  // namespace lfk
