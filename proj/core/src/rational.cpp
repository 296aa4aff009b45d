#include "arens/rational.hpp"

#include "arens/error.hpp"

#include <cctype>

namespace arens {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view part) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::InvalidFormat, "not a rational literal: '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  Rational q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw Error(ErrorCode::InvalidFormat, "zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

Rational pairing(const Vector& functional, const Vector& element) {
  if (functional.size() != element.size())
    throw Error(ErrorCode::DimensionMismatch, "pairing of vectors with dims " +
                                                  std::to_string(functional.size()) + " and " +
                                                  std::to_string(element.size()));
  Rational sum = 0;
  for (std::size_t k = 0; k < element.size(); ++k) sum += functional[k] * element[k];
  return sum;
}

Vector basis_vector(std::size_t dim, std::size_t k) {
  Vector v(dim, Rational(0));
  v.at(k) = 1;
  return v;
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += format_rational(v[k]);
  }
  return out + ")";
}

}  // namespace arens
