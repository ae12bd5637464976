#include "cinf/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace cinf {

Word Word::from_string(std::string_view s) {
    Word w;
    for (char c : s) {
        if (c != '1' && c != '2')
            throw std::invalid_argument("word may contain only '1' and '2'");
        w.push_back(c - '0');
    }
    return w;
}

void Word::push_back(Letter x) {
    if ((size_ & 63) == 0)
        bits_.push_back(0);
    if (x == 2)
        bits_[size_ >> 6] |= std::uint64_t{1} << (size_ & 63);
    else
        bits_[size_ >> 6] &= ~(std::uint64_t{1} << (size_ & 63));
    ++size_;
}

void Word::truncate(std::size_t n) {
    if (n >= size_)
        return;
    size_ = n;
    bits_.resize((n + 63) / 64);
    if (n & 63)
        bits_.back() &= (std::uint64_t{1} << (n & 63)) - 1;
}

Word Word::complemented() const {
    Word out = *this;
    for (auto& b : out.bits_)
        b = ~b;
    if (size_ & 63)
        out.bits_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    return out;
}

Word Word::reversed() const {
    Word out;
    for (std::size_t i = size_; i-- > 0;)
        out.push_back((*this)[i]);
    return out;
}

Word Word::factor(std::size_t pos, std::size_t len) const {
    Word out;
    for (std::size_t i = 0; i < len; ++i)
        out.push_back((*this)[pos + i]);
    return out;
}

std::size_t Word::find(const Word& pattern, std::size_t from) const {
    if (pattern.size_ > size_)
        return npos;
    for (std::size_t pos = from; pos + pattern.size_ <= size_; ++pos) {
        std::size_t i = 0;
        while (i < pattern.size_ && (*this)[pos + i] == pattern[i])
            ++i;
        if (i == pattern.size_)
            return pos;
    }
    return npos;
}

std::size_t Word::count_occurrences(const Word& pattern) const {
    if (pattern.empty())
        return 0;
    std::size_t n = 0;
    for (std::size_t pos = find(pattern); pos != npos; pos = find(pattern, pos + 1))
        ++n;
    return n;
}

std::string Word::str() const {
    std::string s(size_, '1');
    for (std::size_t i = 0; i < size_; ++i)
        s[i] = static_cast<char>('0' + (*this)[i]);
    return s;
}

bool Word::operator==(const Word& o) const {
    return size_ == o.size_ && bits_ == o.bits_;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    std::size_t n = std::min(size_, o.size_);
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = (*this)[i] <=> o[i]; c != 0)
            return c;
    }
    return size_ <=> o.size_;
}

std::size_t Word::hash() const {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
    for (auto b : bits_)
        h = (h ^ b) * 0x100000001b3ull;
    return h;
}

RunSequence rle(const Word& w) {
    RunSequence runs;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i + 1;
        while (j < w.size() && w[j] == w[i])
            ++j;
        runs.push_back(static_cast<int>(j - i));
        i = j;
    }
    return runs;
}

Word derivative(const Word& w) {
    if (w.empty())
        return {};
    RunSequence runs = rle(w);
    for (int r : runs)
        if (r > 2)
            throw NotDifferentiable("word is not differentiable: it contains 111 or 222");
    std::size_t lo = 0, hi = runs.size();
    if (runs.front() == 1)
        ++lo;
    if (hi > lo && runs.back() == 1)
        --hi;
    Word d;
    for (std::size_t i = lo; i < hi; ++i)
        d.push_back(runs[i]);
    return d;
}

DerivativeTower tower(const Word& w) {
    DerivativeTower t;
    Word cur = w;
    while (!cur.empty()) {
        t.levels.push_back(cur);
        try {
            cur = derivative(cur);
        } catch (const NotDifferentiable&) {
            throw NotCInfinity(static_cast<int>(t.levels.size()) - 1);
        }
    }
    t.height = static_cast<int>(t.levels.size());
    if (t.height > 0)
        t.root = t.levels.back();
    return t;
}

bool is_cinfty(const Word& w) {
    Word cur = w;
    while (!cur.empty()) {
        RunSequence runs = rle(cur);
        for (int r : runs)
            if (r > 2)
                return false;
        std::size_t lo = 0, hi = runs.size();
        if (runs.front() == 1)
            ++lo;
        if (hi > lo && runs.back() == 1)
            --hi;
        Word d;
        for (std::size_t i = lo; i < hi; ++i)
            d.push_back(runs[i]);
        cur = std::move(d);
    }
    return true;
}

int height(const Word& w) {
    return tower(w).height;
}

Word word_from_rle(const RunSequence& runs, Letter start) {
    Word w;
    Letter c = start;
    for (int r : runs) {
        for (int i = 0; i < r; ++i)
            w.push_back(c);
        c = complement(c);
    }
    return w;
}

Word word_from_rle(const Word& runs, Letter start) {
    Word w;
    Letter c = start;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (int j = 0; j < runs[i]; ++j)
            w.push_back(c);
        c = complement(c);
    }
    return w;
}

std::vector<Word> primitives(const Word& v) {
    // Candidate run sequences are v, 1v, v1 and 1v1, each with a free start letter.
    std::vector<Word> out;
    for (int lead = 0; lead < 2; ++lead) {
        for (int trail = 0; trail < 2; ++trail) {
            RunSequence runs;
            if (lead)
                runs.push_back(1);
            for (std::size_t i = 0; i < v.size(); ++i)
                runs.push_back(v[i]);
            if (trail)
                runs.push_back(1);
            for (Letter start : {1, 2}) {
                Word p = word_from_rle(runs, start);
                if (derivative(p) == v)
                    out.push_back(std::move(p));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// 0 would appear at position i of the left frontier: level i starts with 2
// while level i-1's first run has length 1.
bool frontier_has_zero(const std::vector<Word>& levels) {
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (levels[i].front() == 2 && levels[i - 1][0] != levels[i - 1][1])
            return true;
    }
    return false;
}

std::vector<Word> reversed_levels(const std::vector<Word>& levels) {
    std::vector<Word> out;
    out.reserve(levels.size());
    for (const auto& l : levels)
        out.push_back(l.reversed());
    return out;
}

bool begins_distinct(const std::vector<Word>& levels) {
    for (const auto& l : levels)
        if (l.size() > 1 && l[0] == l[1])
            return false;
    return true;
}

Word extended(const Word& w, Letter left, Letter right) {
    Word out;
    if (left)
        out.push_back(left);
    for (std::size_t i = 0; i < w.size(); ++i)
        out.push_back(w[i]);
    if (right)
        out.push_back(right);
    return out;
}

} // namespace

Classification classify(const Word& w) {
    DerivativeTower t = tower(w);
    Classification c;
    c.single_rooted = t.single_rooted();

    c.left_minimal = !frontier_has_zero(t.levels);
    c.right_minimal = !frontier_has_zero(reversed_levels(t.levels));
    c.minimal = c.left_minimal && c.right_minimal;

    c.left_maximal = begins_distinct(t.levels);
    c.right_maximal = begins_distinct(reversed_levels(t.levels));
    c.maximal = c.left_maximal && c.right_maximal;

    c.left_doubly_extendable = is_cinfty(extended(w, 1, 0)) && is_cinfty(extended(w, 2, 0));
    c.right_doubly_extendable = is_cinfty(extended(w, 0, 1)) && is_cinfty(extended(w, 0, 2));
    c.fully_extendable = is_cinfty(extended(w, 1, 1)) && is_cinfty(extended(w, 1, 2)) &&
                         is_cinfty(extended(w, 2, 1)) && is_cinfty(extended(w, 2, 2));
    return c;
}

Word extend_to_maximal(const Word& w) {
    Word cur = w;
    for (;;) {
        bool l1 = is_cinfty(extended(cur, 1, 0));
        bool l2 = is_cinfty(extended(cur, 2, 0));
        if (!(l1 && l2)) {
            cur = extended(cur, l1 ? 1 : 2, 0);
            continue;
        }
        bool r1 = is_cinfty(extended(cur, 0, 1));
        bool r2 = is_cinfty(extended(cur, 0, 2));
        if (!(r1 && r2)) {
            cur = extended(cur, 0, r1 ? 1 : 2);
            continue;
        }
        return cur;
    }
}

MinimalPart minimal_part(const Word& w) {
    DerivativeTower t = tower(w);
    MinimalPart out;
    bool found = false;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (std::size_t len = 1; pos + len <= w.size(); ++len) {
            Word f = w.factor(pos, len);
            DerivativeTower ft;
            try {
                ft = tower(f);
            } catch (const NotCInfinity&) {
                continue;
            }
            if (ft.height != t.height || !ft.single_rooted())
                continue;
            if (frontier_has_zero(ft.levels) || frontier_has_zero(reversed_levels(ft.levels)))
                continue;
            if (!found) {
                out.factor = std::move(f);
                out.offset = pos;
                found = true;
            } else if (!(f == out.factor)) {
                out.second = {std::move(f), pos};
                return out;
            }
        }
    }
    return out;
}

Word kolakoski(std::size_t n) {
    Word w;
    if (n == 0)
        return w;
    w.push_back(2);
    if (n == 1)
        return w;
    w.push_back(2); // run 0: letter 2, length w[0] = 2
    for (std::size_t run = 1; w.size() < n; ++run) {
        Letter letter = (run % 2 == 0) ? 2 : 1;
        int len = w[run];
        for (int i = 0; i < len && w.size() < n; ++i)
            w.push_back(letter);
    }
    return w;
}

} // namespace cinf
