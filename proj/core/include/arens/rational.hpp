#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace arens {

using Rational = mpq_class;

/// Coordinates of an element or functional in the chosen basis.
using Vector = std::vector<Rational>;

/// Parses `p/q` or an integer literal; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p/q` in lowest terms, or a bare integer when q = 1.
std::string format_rational(const Rational& value);

/// The dual pairing: dot product in the fixed basis.
Rational pairing(const Vector& functional, const Vector& element);

Vector basis_vector(std::size_t dim, std::size_t k);

std::string format_vector(const Vector& v);

}  // namespace arens
