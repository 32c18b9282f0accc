#pragma once

#include <stdexcept>
#include <string>

namespace weekfx {

/// Bad input data or violated preconditions (CLI exit code 2).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: singular system, root not bracketed, degenerate sample
/// (CLI exit code 3).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// File system / serialization failure (CLI exit code 4).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace weekfx
