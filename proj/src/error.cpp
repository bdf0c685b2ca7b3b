#include "mh/error.hpp"

namespace mh {

namespace {

std::string with_position(const std::string& what, std::size_t line, std::size_t column) {
  if (line == 0) return what;
  std::string prefix = "line " + std::to_string(line);
  if (column != 0) prefix += ", column " + std::to_string(column);
  return prefix + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(with_position(what, line, column)), line_(line), column_(column) {}

AxiomViolation::AxiomViolation(AxiomKind kind, std::size_t x, std::size_t y, std::size_t z, const std::string& what)
    : Error(what), kind_(kind), x_(x), y_(y), z_(z) {}

}  // namespace mh
