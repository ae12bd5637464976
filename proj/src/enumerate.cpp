#include "cinf/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace cinf {

bool IncrementalTower::push(Letter x) {
    std::vector<std::size_t> frame(levels_.size());
    for (std::size_t i = 0; i < levels_.size(); ++i)
        frame[i] = levels_[i].size();

    std::size_t lvl = 0;
    Letter c = x;
    for (;;) {
        if (lvl == levels_.size())
            levels_.emplace_back();
        std::vector<Letter>& v = levels_[lvl];
        if (v.empty()) {
            v.push_back(c);
            break;
        }
        Letter last = v.back();
        if (c == last) {
            // Trailing run grows; length 3 is never differentiable.
            bool run_of_two = v.size() >= 2 && v[v.size() - 2] == last;
            if (run_of_two) {
                for (std::size_t i = 0; i < levels_.size(); ++i)
                    levels_[i].resize(i < frame.size() ? frame[i] : 0);
                while (!levels_.empty() && levels_.back().empty())
                    levels_.pop_back();
                return false;
            }
            v.push_back(c);
            c = 2; // the run just closed at length 2
            ++lvl;
            continue;
        }
        if (v.size() == 1) {
            v.push_back(c); // leading run of length 1 is stripped above
            break;
        }
        bool run_of_two = v[v.size() - 2] == last;
        v.push_back(c);
        if (run_of_two)
            break;
        c = 1; // an interior run closed at length 1
        ++lvl;
    }
    word_.push_back(x);
    frames_.push_back(std::move(frame));
    return true;
}

void IncrementalTower::pop() {
    if (frames_.empty())
        throw std::logic_error("pop on an empty tower");
    const std::vector<std::size_t>& frame = frames_.back();
    for (std::size_t i = 0; i < levels_.size(); ++i)
        levels_[i].resize(i < frame.size() ? frame[i] : 0);
    while (!levels_.empty() && levels_.back().empty())
        levels_.pop_back();
    frames_.pop_back();
    word_.pop_back();
}

Word IncrementalTower::to_word() const {
    Word w;
    for (Letter x : word_)
        w.push_back(x);
    return w;
}

namespace {

void check_budget(int n, const EnumerationConfig& config) {
    if (n < 0)
        throw std::invalid_argument("enumeration length must be non-negative");
    if (n > config.max_length)
        throw BudgetExceeded("enumeration length " + std::to_string(n) +
                             " exceeds the configured maximum " +
                             std::to_string(config.max_length));
}

// Depth-first sweep in lexicographic order (1 before 2); visit is called for
// every C-infinity word of length 1..n.
template <typename Visit>
void sweep_incremental(int n, Visit&& visit) {
    IncrementalTower t;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(t.length()) == n)
            return;
        for (Letter x : {1, 2}) {
            if (t.push(x)) {
                visit(t);
                self(self);
                t.pop();
            }
        }
    };
    rec(rec);
}

template <typename Visit>
void sweep_naive(int n, Visit&& visit) {
    Word w;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == n)
            return;
        for (Letter x : {1, 2}) {
            w.push_back(x);
            if (is_cinfty(w)) {
                visit(w);
                self(self);
            }
            w.truncate(w.size() - 1);
        }
    };
    rec(rec);
}

} // namespace

std::vector<Word> enumerate_cinfty(int n, const EnumerationConfig& config) {
    check_budget(n, config);
    std::vector<Word> out;
    if (config.incremental) {
        sweep_incremental(n, [&](const IncrementalTower& t) {
            if (static_cast<int>(t.length()) == n)
                out.push_back(t.to_word());
        });
    } else {
        sweep_naive(n, [&](const Word& w) {
            if (static_cast<int>(w.size()) == n)
                out.push_back(w);
        });
    }
    return out;
}

std::vector<std::uint64_t> census_cinfty(int n, const EnumerationConfig& config) {
    check_budget(n, config);
    std::vector<std::uint64_t> counts(n + 1, 0);
    if (config.incremental) {
        sweep_incremental(n, [&](const IncrementalTower& t) { ++counts[t.length()]; });
    } else {
        sweep_naive(n, [&](const Word& w) { ++counts[w.size()]; });
    }
    return counts;
}

std::vector<Word> naive_cinfty(int n) {
    if (n < 0 || n > 24)
        throw BudgetExceeded("brute-force enumeration is capped at length 24");
    std::vector<Word> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Word w;
        for (int i = 0; i < n; ++i)
            w.push_back(((mask >> i) & 1) ? 2 : 1);
        if (is_cinfty(w))
            out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool VerificationReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass)
            return false;
    return true;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"verdict", all_pass() ? "holds" : "fails"}, {"checks", arr}};
}

} // namespace cinf
