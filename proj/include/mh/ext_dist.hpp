#pragma once

#include <compare>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <string_view>

namespace mh {

using Integer = mpz_class;
using Rational = mpq_class;

inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Parses "p/q" or an integer. Returns nullopt on malformed text.
std::optional<Rational> parse_rational(std::string_view text);

/// A distance in [0, inf]: an exact nonnegative rational or the symbol infinity.
///
/// Arithmetic is total: anything plus infinity is infinity, and infinity
/// compares greater than every finite value.
class ExtDist {
 public:
  ExtDist() = default;  // zero
  ExtDist(const Rational& value);
  ExtDist(long value) : ExtDist(Rational(value)) {}

  static ExtDist infinity();

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  /// Precondition: is_finite().
  const Rational& value() const;

  ExtDist operator+(const ExtDist& other) const;
  bool operator==(const ExtDist& other) const;
  std::strong_ordering operator<=>(const ExtDist& other) const;

  /// "inf" or the rational formatted by format_rational.
  std::string to_string() const;
  static std::optional<ExtDist> parse(std::string_view text);

 private:
  bool finite_ = true;
  Rational value_ = 0;
};

}  // namespace mh
