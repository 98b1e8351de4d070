#pragma once

#include <stdexcept>
#include <string>

namespace gct {

// Violation of an internal exactness or termination guarantee (inexact class-sum
// division, tripped straightening guard, failed self-verification). Distinct from
// std::invalid_argument so the CLI can map it to its own exit code.
class defect_error : public std::runtime_error {
public:
    explicit defect_error(const std::string& what) : std::runtime_error(what) {}
};

}
