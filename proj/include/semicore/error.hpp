#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semicore {

enum class Errc {
    NonPrimeModulus,
    FieldMismatch,
    DivisionByZero,
    NonUnitConstantTerm,
    BadConstantTerm,
    GcdNotOne,
    NotInSemigroup,
    ConstantGenerator,
    BoundTooSmall,
    NonMonomialCore,
    SingleGenerator,
    TrivialCore,
    GeneratorNotInR,
    SyntaxError,
    NegativeExponent,
    BadScalar,
    InvalidArgument,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can branch on the kind of error.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace semicore
