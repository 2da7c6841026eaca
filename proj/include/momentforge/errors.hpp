#pragma once

#include <stdexcept>
#include <string>

namespace momentforge {

// Base for all library errors; `code` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define MOMENTFORGE_ERROR(Name, Tag)                          \
  class Name : public Error {                                 \
  public:                                                     \
    explicit Name(const std::string& what) : Error(Tag, what) {} \
  }

MOMENTFORGE_ERROR(MixedFieldError, "mixed_field");
MOMENTFORGE_ERROR(TangencyError, "tangency");
MOMENTFORGE_ERROR(TriplePointError, "triple_point");
MOMENTFORGE_ERROR(GenericityError, "genericity");
MOMENTFORGE_ERROR(SeedOutsideError, "seed_outside");
MOMENTFORGE_ERROR(UnboundedRegionError, "unbounded_region");
MOMENTFORGE_ERROR(DegenerateEventError, "degenerate_event");
MOMENTFORGE_ERROR(ValidationError, "validation");
MOMENTFORGE_ERROR(NotSurjectiveError, "not_surjective");
MOMENTFORGE_ERROR(InjectivityViolationError, "injectivity_violation");
MOMENTFORGE_ERROR(OutsideError, "outside");
MOMENTFORGE_ERROR(DisconnectedFiberError, "disconnected_fiber");
MOMENTFORGE_ERROR(NotConnectedError, "not_connected");
MOMENTFORGE_ERROR(ArityError, "arity");
MOMENTFORGE_ERROR(UnknownEdgeError, "unknown_edge");
MOMENTFORGE_ERROR(PlacementFailure, "placement_failure");
MOMENTFORGE_ERROR(DimensionError, "dimension");
MOMENTFORGE_ERROR(NotInteriorError, "not_interior");
MOMENTFORGE_ERROR(ResolutionError, "resolution");
MOMENTFORGE_ERROR(ToleranceError, "tolerance");
MOMENTFORGE_ERROR(ParseError, "parse");
MOMENTFORGE_ERROR(InternalError, "internal");

#undef MOMENTFORGE_ERROR

}  // namespace momentforge
