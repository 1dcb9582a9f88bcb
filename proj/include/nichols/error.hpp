#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nichols {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle types, irreps, permutations).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A permutation that was expected to commute with the base element does not.
class MembershipError : public Error {
public:
    MembershipError(const std::string& what, int point) : Error(what), point_(point) {}

    /// 1-based point where g·σ and σ·g differ.
    int point() const { return point_; }

private:
    int point_;
};

}  // namespace nichols
