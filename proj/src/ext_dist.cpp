#include "mh/ext_dist.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "mh/error.hpp"

namespace mh {

namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  return std::all_of(text.begin() + start, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

std::string format_rational(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  if (canonical.get_den() == 1) return canonical.get_num().get_str();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

std::optional<Rational> parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) return std::nullopt;
  if (den[0] == '-' || den[0] == '+') return std::nullopt;
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

ExtDist::ExtDist(const Rational& value) : finite_(true), value_(value) {
  value_.canonicalize();
  if (value_ < 0) throw std::invalid_argument("distance must be nonnegative: " + format_rational(value_));
}

ExtDist ExtDist::infinity() {
  ExtDist d;
  d.finite_ = false;
  return d;
}

const Rational& ExtDist::value() const {
  if (!finite_) throw std::logic_error("value() of infinite distance");
  return value_;
}

ExtDist ExtDist::operator+(const ExtDist& other) const {
  if (!finite_ || !other.finite_) return infinity();
  return ExtDist(Rational(value_ + other.value_));
}

bool ExtDist::operator==(const ExtDist& other) const {
  if (finite_ != other.finite_) return false;
  return !finite_ || value_ == other.value_;
}

std::strong_ordering ExtDist::operator<=>(const ExtDist& other) const {
  if (!finite_ && !other.finite_) return std::strong_ordering::equal;
  if (!finite_) return std::strong_ordering::greater;
  if (!other.finite_) return std::strong_ordering::less;
  int c = cmp(value_, other.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtDist::to_string() const { return finite_ ? format_rational(value_) : "inf"; }

std::optional<ExtDist> ExtDist::parse(std::string_view text) {
  text = trim(text);
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "inf" || lower == "infinity" || lower == "∞") return infinity();
  auto r = parse_rational(text);
  if (!r || *r < 0) return std::nullopt;
  return ExtDist(*r);
}

}  // namespace mh
