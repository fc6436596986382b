#pragma once

#include <stdexcept>
#include <string>

namespace qrisk {

// Bad parameter or malformed input file. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// A calibration target that no admissible parameter can reproduce.
// The CLI maps this to exit code 2.
class NoSolutionError : public std::runtime_error {
public:
    explicit NoSolutionError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace qrisk
