#ifndef CINF_WORD_HPP
#define CINF_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cinf/errors.hpp"

namespace cinf {

// A letter of the two-letter alphabet, stored as the plain integer 1 or 2.
using Letter = int;

inline Letter complement(Letter x) { return 3 - x; }

// A finite word over {1,2}, packed one bit per letter (bit 0 = letter 1).
class Word {
public:
    Word() = default;

    static Word from_string(std::string_view s);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    Letter operator[](std::size_t i) const {
        return 1 + static_cast<int>((bits_[i >> 6] >> (i & 63)) & 1);
    }
    Letter front() const { return (*this)[0]; }
    Letter back() const { return (*this)[size_ - 1]; }

    void push_back(Letter x);
    void truncate(std::size_t n);
    void clear() { bits_.clear(); size_ = 0; }

    Word complemented() const;
    Word reversed() const;
    Word factor(std::size_t pos, std::size_t len) const;

    // Positions of pattern occurrences; npos if absent.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find(const Word& pattern, std::size_t from = 0) const;
    bool contains(const Word& pattern) const { return find(pattern) != npos; }
    std::size_t count_occurrences(const Word& pattern) const;

    std::string str() const;

    bool operator==(const Word& o) const;
    std::strong_ordering operator<=>(const Word& o) const; // lexicographic, 1 < 2

    std::size_t hash() const;

private:
    std::vector<std::uint64_t> bits_;
    std::size_t size_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

// Run lengths of maximal blocks; entries may exceed 2 for arbitrary input.
using RunSequence = std::vector<int>;

struct DerivativeTower {
    std::vector<Word> levels; // input first, last non-empty derivative last; empty for eps
    int height = 0;           // number of derivative steps down to the empty word
    Word root;                // last non-empty derivative; empty word when height == 0

    bool single_rooted() const { return root.size() == 1; }
};

struct Classification {
    bool left_minimal = false;
    bool right_minimal = false;
    bool minimal = false;
    bool left_maximal = false;
    bool right_maximal = false;
    bool maximal = false;
    bool left_doubly_extendable = false;
    bool right_doubly_extendable = false;
    bool fully_extendable = false;
    bool single_rooted = false;
};

struct MinimalPart {
    Word factor;
    std::size_t offset = 0;
    std::optional<std::pair<Word, std::size_t>> second; // present for double-rooted input
};

RunSequence rle(const Word& w);

// Run lengths rendered over {1,2}; throws NotDifferentiable on a run >= 3.
Word derivative(const Word& w);

DerivativeTower tower(const Word& w); // throws NotCInfinity
bool is_cinfty(const Word& w);
int height(const Word& w);

// The unique word whose run-length encoding is `runs` and whose first letter is `start`.
Word word_from_rle(const RunSequence& runs, Letter start);
Word word_from_rle(const Word& runs, Letter start);

// All primitives of v, lexicographically ordered; |result| is 2, 4 or 8.
std::vector<Word> primitives(const Word& v);

Classification classify(const Word& w);

// Unique simple-extension closure: the maximal word containing w, same height and root.
Word extend_to_maximal(const Word& w);

// Leftmost single-rooted minimal factor of full height (and the second one for
// double-rooted input), found by exhaustive factor scan.
MinimalPart minimal_part(const Word& w);

// Length-n prefix of the run-length-encoding fixed point starting with 2.
Word kolakoski(std::size_t n);

} // namespace cinf

#endif
