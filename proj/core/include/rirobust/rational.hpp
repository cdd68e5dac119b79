#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>
#include <vector>

namespace rir {

/// Exact rational number. Unlike mpq_class, the two-argument constructor
/// reduces its result, so Rational(2, 4) == Rational(1, 2).
class Rational : public mpq_class {
 public:
  Rational() = default;
  template <class T>
    requires std::convertible_to<const T&, mpq_class>
  Rational(const T& v) : mpq_class(v) {}
  Rational(const mpz_class& num, const mpz_class& den) : mpq_class(num, den) { canonicalize(); }
};

/// Parses "num/den", a bare integer, or a terminating decimal such as "0.25".
/// Throws rir::Error(SchemaViolation) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced "num/den", or a bare integer when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational sum(const std::vector<Rational>& v);

}  // namespace rir
