#include "cinf/vertical.hpp"

#include <stdexcept>

namespace cinf {

bool is_valid_frontier(std::string_view f) {
    if (!f.empty() && f.front() == '0')
        return false;
    for (char c : f)
        if (c != '0' && c != '1' && c != '2')
            return false;
    return true;
}

bool is_pure_frontier(std::string_view f) {
    if (!is_valid_frontier(f))
        return false;
    return f.find('0') == std::string_view::npos;
}

std::string complement_frontier(std::string_view f) {
    std::string out(f);
    for (char& c : out) {
        if (c == '1')
            c = '2';
        else if (c == '2')
            c = '1';
    }
    return out;
}

namespace {

// The letter a frontier symbol stands for: 0 codes a 2.
Letter effective(char c) { return c == '0' ? 2 : c - '0'; }

void check_frontier(std::string_view f) {
    for (char c : f)
        if (c != '0' && c != '1' && c != '2')
            throw std::invalid_argument("frontier may contain only '0', '1' and '2'");
    if (!f.empty() && f.front() == '0')
        throw LeadingZero();
}

} // namespace

std::string left_frontier(const Word& w) {
    DerivativeTower t = tower(w);
    std::string f;
    f.reserve(t.height);
    for (int i = 0; i < t.height; ++i) {
        Letter c = t.levels[i].front();
        if (i > 0 && c == 2 && t.levels[i - 1][0] != t.levels[i - 1][1])
            f.push_back('0');
        else
            f.push_back(static_cast<char>('0' + c));
    }
    return f;
}

std::string right_frontier(const Word& w) {
    return left_frontier(w.reversed());
}

VerticalRep encode(const Word& w) {
    return {left_frontier(w), left_frontier(w.reversed())};
}

Word decode(const VerticalRep& rep) {
    if (rep.left.size() != rep.right.size())
        throw LengthMismatch(rep.left.size(), rep.right.size());
    check_frontier(rep.left);
    check_frontier(rep.right);

    const int k = static_cast<int>(rep.left.size());
    if (k == 0)
        return {};

    Letter l = effective(rep.left[k - 1]);
    Letter r = effective(rep.right[k - 1]);
    Word level;
    level.push_back(l);
    if (l != r)
        level.push_back(r); // two-letter root

    for (int i = k - 2; i >= 0; --i) {
        const Word& v = level;
        // A level whose derivative starts (ends) with 1, or whose frontier
        // symbol below is 0, carries a one-letter extension on that side.
        bool prepend = rep.left[i + 1] != '2';
        bool append = rep.right[i + 1] != '2';
        Letter first = effective(rep.left[i]);
        Letter last = effective(rep.right[i]);
        Word core = word_from_rle(v, prepend ? complement(first) : first);
        Letter want = append ? complement(last) : last;
        if (core.back() != want)
            throw InvalidRep(i, "frontier pair forces inconsistent boundary letters");
        Word next;
        if (prepend)
            next.push_back(first);
        for (std::size_t j = 0; j < core.size(); ++j)
            next.push_back(core[j]);
        if (append)
            next.push_back(last);
        level = std::move(next);
    }
    return level;
}

Word min_word(std::string_view frontier, Rooting rooting) {
    check_frontier(frontier);
    if (frontier.empty())
        return {};

    const int k = static_cast<int>(frontier.size());
    Letter root = effective(frontier[k - 1]);
    Word level;
    level.push_back(root);
    if (rooting == Rooting::Double)
        level.push_back(complement(root));

    for (int i = k - 2; i >= 0; --i) {
        const Word& v = level;
        bool prepend = frontier[i + 1] != '2';
        bool append = v.back() == 1; // only forced appends, nothing optional
        Letter first = effective(frontier[i]);
        Word core = word_from_rle(v, prepend ? complement(first) : first);
        Word next;
        if (prepend)
            next.push_back(first);
        for (std::size_t j = 0; j < core.size(); ++j)
            next.push_back(core[j]);
        if (append)
            next.push_back(complement(core.back()));
        level = std::move(next);
    }
    return level;
}

} // namespace cinf
