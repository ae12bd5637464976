#ifndef CINF_VERTICAL_HPP
#define CINF_VERTICAL_HPP

#include <string>
#include <string_view>

#include "cinf/word.hpp"

namespace cinf {

// Frontiers are rendered as strings over '0'/'1'/'2'. A valid frontier is
// empty or starts with a non-'0' character.
bool is_valid_frontier(std::string_view f);
bool is_pure_frontier(std::string_view f); // additionally 0-free

std::string complement_frontier(std::string_view f); // swaps 1 and 2, keeps 0

enum class Rooting { Single, Double };

struct VerticalRep {
    std::string left;
    std::string right;

    std::string str() const { return left + "|" + right; }
    bool operator==(const VerticalRep&) const = default;
};

// Sequence of the first symbols of the derivatives, with 2 replaced by 0
// whenever the level above is not left minimal.
std::string left_frontier(const Word& w);
std::string right_frontier(const Word& w);

VerticalRep encode(const Word& w);

// Inverse of encode; throws LengthMismatch / LeadingZero / InvalidRep.
Word decode(const VerticalRep& rep);

// Shortest word of the given rooting whose left frontier is `frontier`.
Word min_word(std::string_view frontier, Rooting rooting);

} // namespace cinf

#endif
