#pragma once

#include <stdexcept>
#include <string>

namespace aus {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define AUS_ERROR(Name)                        \
  struct Name : Error {                        \
    explicit Name(const std::string& what)     \
        : Error(std::string(#Name ": ") + what) {} \
  }

AUS_ERROR(NotAdmissible);
AUS_ERROR(BadRelation);
AUS_ERROR(FieldTooSmall);
AUS_ERROR(Inconclusive);
AUS_ERROR(ResolutionTruncated);
AUS_ERROR(PreconditionFailed);
AUS_ERROR(IncompleteEnumeration);
AUS_ERROR(NonIntegerMultiplicity);
AUS_ERROR(MissingPowerMaps);
AUS_ERROR(NoSocleElement);
AUS_ERROR(ParseError);

#undef AUS_ERROR

}  // namespace aus
