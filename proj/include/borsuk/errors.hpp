#pragma once

#include <stdexcept>
#include <string>

namespace borsuk {

// Bad inputs raise std::invalid_argument. A PreconditionViolation means the
// inputs are well-formed but the requested construction carries no guarantee
// for them (e.g. a facet coloring asked for at an eps where it may be improper).
class PreconditionViolation : public std::domain_error {
public:
    explicit PreconditionViolation(const std::string& what) : std::domain_error(what) {}
};

}  // namespace borsuk
