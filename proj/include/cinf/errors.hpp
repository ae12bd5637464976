#ifndef CINF_ERRORS_HPP
#define CINF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cinf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Run of length >= 3 (the word contains 111 or 222).
struct NotDifferentiable : Error {
    using Error::Error;
};

// Some derivative level fails to be differentiable.
struct NotCInfinity : Error {
    int level;
    explicit NotCInfinity(int level_index)
        : Error("word is not arbitrarily differentiable: derivative fails at level " +
                std::to_string(level_index)),
          level(level_index) {}
};

// A frontier pair that is not the vertical representation of any word.
struct InvalidRep : Error {
    int level;
    InvalidRep(int level_index, const std::string& what_)
        : Error("invalid vertical representation at level " + std::to_string(level_index) +
                ": " + what_),
          level(level_index) {}
};

struct LengthMismatch : Error {
    LengthMismatch(std::size_t left, std::size_t right)
        : Error("vertical representation frontiers differ in length: " +
                std::to_string(left) + " vs " + std::to_string(right)) {}
};

// A non-empty frontier starting with 0.
struct LeadingZero : Error {
    LeadingZero() : Error("frontier starts with 0 at level 0") {}
};

struct CapacityExceeded : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

} // namespace cinf

#endif
