#include "semicore/error.hpp"

namespace semicore {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::NonPrimeModulus: return "NonPrimeModulus";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case Errc::BadConstantTerm: return "BadConstantTerm";
        case Errc::GcdNotOne: return "GcdNotOne";
        case Errc::NotInSemigroup: return "NotInSemigroup";
        case Errc::ConstantGenerator: return "ConstantGenerator";
        case Errc::BoundTooSmall: return "BoundTooSmall";
        case Errc::NonMonomialCore: return "NonMonomialCore";
        case Errc::SingleGenerator: return "SingleGenerator";
        case Errc::TrivialCore: return "TrivialCore";
        case Errc::GeneratorNotInR: return "GeneratorNotInR";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::NegativeExponent: return "NegativeExponent";
        case Errc::BadScalar: return "BadScalar";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace semicore
