#pragma once

#include <stdexcept>
#include <string>

namespace gradreg {

struct GradregError : std::runtime_error {
    std::string kind;
    GradregError(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

#define GRADREG_ERROR(Name)                                          \
    struct Name : GradregError {                                     \
        explicit Name(const std::string& msg) : GradregError(#Name, msg) {} \
    }

GRADREG_ERROR(SyntaxError);
GRADREG_ERROR(InhomogeneousRelation);
GRADREG_ERROR(UnknownSymbol);
GRADREG_ERROR(NonComposablePath);

GRADREG_ERROR(Degree0Blowup);
GRADREG_ERROR(CapExceeded);
GRADREG_ERROR(RadicalUnsupported);
GRADREG_ERROR(NotBasic);
GRADREG_ERROR(NotNNGraded);

GRADREG_ERROR(WindowTooSmall);
GRADREG_ERROR(BadInput);
GRADREG_ERROR(NotFiniteDimensional);
GRADREG_ERROR(MissingGorensteinData);

#undef GRADREG_ERROR

}  // namespace gradreg
