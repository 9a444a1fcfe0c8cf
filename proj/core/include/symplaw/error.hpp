#pragma once

#include <stdexcept>
#include <string>

namespace symplaw {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

#define SYMPLAW_DEFINE_ERROR(Name)                                             \
	class Name : public Error                                                  \
	{                                                                          \
	public:                                                                    \
		using Error::Error;                                                    \
	}

SYMPLAW_DEFINE_ERROR(DimensionError);   // shape mismatch
SYMPLAW_DEFINE_ERROR(StructureError);   // matrix lacks the required symmetry
SYMPLAW_DEFINE_ERROR(VariableError);    // unknown indeterminate
SYMPLAW_DEFINE_ERROR(ArgumentError);    // bad scalar argument (n < 1, 1/0, ...)
SYMPLAW_DEFINE_ERROR(NotASimilitudeError);
SYMPLAW_DEFINE_ERROR(SingularError);
SYMPLAW_DEFINE_ERROR(GeneratorError);   // word uses a generator the rep lacks
SYMPLAW_DEFINE_ERROR(SymmetryError);    // element is not fixed by the involution
SYMPLAW_DEFINE_ERROR(SpectrumError);    // Lambda vector is not a square
SYMPLAW_DEFINE_ERROR(CapacityError);
SYMPLAW_DEFINE_ERROR(TypeError);        // invalid GMA type
SYMPLAW_DEFINE_ERROR(MembershipError);  // GMA entry outside its block span
SYMPLAW_DEFINE_ERROR(ArityError);
SYMPLAW_DEFINE_ERROR(UnsupportedKindError);
SYMPLAW_DEFINE_ERROR(ParseError);       // malformed text or JSON input

#undef SYMPLAW_DEFINE_ERROR

} // namespace symplaw
