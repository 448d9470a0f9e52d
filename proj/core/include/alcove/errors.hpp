#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

// Base for all domain errors. `name()` is the stable identifier surfaced by
// the CLI on the diagnostic stream.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define ALCOVE_DEFINE_ERROR(Name)                                        \
    class Name : public DomainError {                                    \
    public:                                                              \
        explicit Name(const std::string& msg) : DomainError(#Name, msg) {} \
    }

ALCOVE_DEFINE_ERROR(InvalidRank);
ALCOVE_DEFINE_ERROR(RankMismatch);
ALCOVE_DEFINE_ERROR(IndexOutOfRange);
ALCOVE_DEFINE_ERROR(EmptySubset);
ALCOVE_DEFINE_ERROR(NotConcave);
ALCOVE_DEFINE_ERROR(NotIntegral);
ALCOVE_DEFINE_ERROR(UnboundedRegularization);
ALCOVE_DEFINE_ERROR(NegativeDepth);
ALCOVE_DEFINE_ERROR(SizeMismatch);
ALCOVE_DEFINE_ERROR(PoleOverflow);
ALCOVE_DEFINE_ERROR(WrongType);
ALCOVE_DEFINE_ERROR(BadTypeVector);
ALCOVE_DEFINE_ERROR(ParseError);

#undef ALCOVE_DEFINE_ERROR

}  // namespace alcove
