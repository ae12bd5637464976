#ifndef CINF_ENUMERATE_HPP
#define CINF_ENUMERATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cinf/word.hpp"

namespace cinf {

// Append-only derivative tower for backtracking enumeration. Each level holds
// the committed part of the next derivative: a run contributes upward as soon
// as its final length is known (it reaches 2, or closes at 1 while not being
// the leading run, which is stripped).
class IncrementalTower {
public:
    // Extends the word by one letter; returns false and leaves the state
    // unchanged if the extension stops being arbitrarily differentiable.
    bool push(Letter x);
    void pop(); // undo the last successful push

    std::size_t length() const { return word_.size(); }
    const std::vector<Letter>& word() const { return word_; }
    const std::vector<std::vector<Letter>>& levels() const { return levels_; }
    Word to_word() const;

private:
    std::vector<Letter> word_;
    std::vector<std::vector<Letter>> levels_; // levels_[0] is the word itself
    std::vector<std::vector<std::size_t>> frames_;
};

struct EnumerationConfig {
    int max_length = 30;     // guard against accidental exponential blowups
    bool incremental = true; // false: recompute the full tower at every step
};

// All C-infinity words of length exactly n, lexicographically ordered.
std::vector<Word> enumerate_cinfty(int n, const EnumerationConfig& config = {});

// Counts per length 1..n in one backtracking sweep.
std::vector<std::uint64_t> census_cinfty(int n, const EnumerationConfig& config = {});

// Brute force over all 2^n words; n is capped at 24.
std::vector<Word> naive_cinfty(int n);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample or summary statistics
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

// Cross-checks every module against independent recomputation: codec round
// trips, injectivity, frontier recursions vs direct construction, level
// counts, the backtracking enumerator vs the brute-force filter.
VerificationReport verify_suite(int n_max, int k_max);

} // namespace cinf

#endif
