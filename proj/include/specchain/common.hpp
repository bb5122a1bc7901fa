#ifndef SPECCHAIN_COMMON_HPP
#define SPECCHAIN_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace specchain {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the expression parser; carries the byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Raised when a Groebner computation exceeds its step budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace specchain

#endif
