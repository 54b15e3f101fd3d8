#include "neutro/errors.hpp"

namespace neutro {

MalformedRow::MalformedRow(std::size_t line, const std::string& reason)
    : ParseError(line, "malformed row at line " + std::to_string(line) + ": " + reason) {}

OutOfRange::OutOfRange(std::size_t line, std::string field, double value)
    : ParseError(line, "value out of range at line " + std::to_string(line) + ": field '" +
                           field + "' = " + std::to_string(value)),
      field(std::move(field)),
      value(value) {}

EmptyInput::EmptyInput() : Error("input holds no data rows") {}

InvalidStep::InvalidStep(double step)
    : Error("step must evenly divide the unit interval, got " + std::to_string(step)),
      step(step) {}

}  // namespace neutro
