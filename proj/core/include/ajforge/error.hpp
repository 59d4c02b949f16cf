#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ajforge {

// Every library error carries a stable short name so the CLI can surface it.
class Error : public std::runtime_error
{
public:
    Error(std::string name, const std::string &what)
        : std::runtime_error(what), name_(std::move(name))
    {
    }

    const std::string &name() const noexcept { return name_; }

private:
    std::string name_;
};

#define AJFORGE_DEFINE_ERROR(Type, tag)                                        \
    class Type : public Error                                                  \
    {                                                                          \
    public:                                                                    \
        explicit Type(const std::string &what) : Error(tag, what) {}           \
    }

AJFORGE_DEFINE_ERROR(DivisionByZero, "division-by-zero");
AJFORGE_DEFINE_ERROR(ArityMismatch, "arity-mismatch");
AJFORGE_DEFINE_ERROR(ContextMismatch, "context-mismatch");
AJFORGE_DEFINE_ERROR(TruncationMismatch, "truncation-mismatch");
AJFORGE_DEFINE_ERROR(OrderViolation, "order-violation");
AJFORGE_DEFINE_ERROR(NotInvertible, "not-invertible");
AJFORGE_DEFINE_ERROR(RangeError, "range-error");
AJFORGE_DEFINE_ERROR(NoPrimitiveRoot, "no-primitive-root");
AJFORGE_DEFINE_ERROR(ZeroSeries, "zero-series");
AJFORGE_DEFINE_ERROR(DomainError, "domain-error");
AJFORGE_DEFINE_ERROR(ResidualNonzero, "residual-nonzero");
AJFORGE_DEFINE_ERROR(NotASolverSeries, "non-solver-series");

#undef AJFORGE_DEFINE_ERROR

class ParseError : public Error
{
public:
    ParseError(const std::string &what, std::size_t position)
        : Error("parse-error", what + " at position " + std::to_string(position)),
          position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace ajforge
