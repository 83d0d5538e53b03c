#include "qlsa/errors.hpp"

#include <utility>

namespace qlsa {

ParseError::ParseError(int line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

ValidationError::ValidationError(std::string field, const std::string& what)
    : Error(field + ": " + what), field_(std::move(field)) {}

InfeasibleError::InfeasibleError(std::string constraint, const std::string& what)
    : Error(constraint + ": " + what), constraint_(std::move(constraint)) {}

}  // namespace qlsa
