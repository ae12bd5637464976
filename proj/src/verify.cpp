#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "cinf/enumerate.hpp"
#include "cinf/graph.hpp"
#include "cinf/vertical.hpp"

namespace cinf {

namespace {

Word cat(const Word& w, std::string_view suffix) {
    Word out = w;
    for (char c : suffix)
        out.push_back(c - '0');
    return out;
}

Word wrap(Letter a, const Word& w, Letter b) {
    Word out;
    out.push_back(a);
    for (std::size_t i = 0; i < w.size(); ++i)
        out.push_back(w[i]);
    out.push_back(b);
    return out;
}

// Distinct single-rooted minimal factors of w having the full height of w.
std::size_t count_minimal_factors(const Word& w) {
    int h = height(w);
    std::set<Word> found;
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t len = 1; pos + len <= w.size(); ++len) {
            Word f = w.factor(pos, len);
            if (!is_cinfty(f))
                continue;
            if (height(f) != h)
                continue;
            Classification c = classify(f);
            if (c.single_rooted && c.minimal)
                found.insert(std::move(f));
        }
    return found.size();
}

// All frontiers over {0,1,2} of the given length not starting with 0.
std::vector<std::string> mixed_frontiers(int len) {
    std::vector<std::string> out;
    std::string cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (char c : {'0', '1', '2'}) {
            if (cur.empty() && c == '0')
                continue;
            cur.push_back(c);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<std::string> pure_frontiers(int len) {
    std::vector<std::string> out;
    for (std::uint32_t key = 0; key < (std::uint32_t{1} << len); ++key)
        out.push_back(Frontier{key, len}.str());
    return out;
}

} // namespace

VerificationReport verify_suite(int n_max, int k_max) {
    VerificationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
    };

    EnumerationConfig config;
    config.max_length = std::max(n_max, 16);
    std::vector<std::vector<Word>> words(n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        words[n] = enumerate_cinfty(n, config);

    // Codec round trip and injectivity over every enumerated word.
    {
        bool pass = true;
        std::string detail;
        std::unordered_map<std::string, std::string> seen;
        std::size_t total = 0;
        for (int n = 1; n <= n_max && pass; ++n)
            for (const Word& w : words[n]) {
                ++total;
                VerticalRep r = encode(w);
                if (!(decode(r) == w)) {
                    pass = false;
                    detail = "round trip fails for " + w.str();
                    break;
                }
                auto [it, fresh] = seen.emplace(r.str(), w.str());
                if (!fresh) {
                    pass = false;
                    detail = "representation collision: " + it->second + " and " + w.str();
                    break;
                }
            }
        add("encode-decode-round-trip", pass,
            pass ? std::to_string(total) + " words" : detail);
        add("injectivity", pass, pass ? std::to_string(total) + " distinct reps" : detail);
    }

    // Unique-extension counts; the factor scan is cubic, so cap the length.
    {
        bool pass = true;
        std::string detail;
        int cap = std::min(n_max, 16);
        for (int n = 1; n <= cap && pass; ++n)
            for (const Word& w : words[n]) {
                std::size_t expect = tower(w).single_rooted() ? 1 : 2;
                std::size_t got = count_minimal_factors(w);
                if (got != expect) {
                    pass = false;
                    detail = w.str() + " has " + std::to_string(got) +
                             " single-rooted minimal factors, expected " +
                             std::to_string(expect);
                    break;
                }
            }
        add("unique-extension", pass, pass ? "lengths 1.." + std::to_string(cap) : detail);
    }

    // Weakley equivalence between the four characterisations of maximality.
    {
        bool pass = true;
        std::string detail;
        for (int n = 1; n <= n_max && pass; ++n)
            for (const Word& w : words[n]) {
                Classification c = classify(w);
                bool four = is_cinfty(wrap(1, w, 1)) && is_cinfty(wrap(1, w, 2)) &&
                            is_cinfty(wrap(2, w, 1)) && is_cinfty(wrap(2, w, 2));
                bool structural = c.maximal && !c.single_rooted;
                if (c.fully_extendable != four || four != structural) {
                    pass = false;
                    detail = "equivalence breaks for " + w.str();
                    break;
                }
            }
        add("weakley-equivalence", pass, pass ? "lengths 1.." + std::to_string(n_max) : detail);
    }

    // Min-max lemma: w right maximal iff its one-letter right extensions are
    // right minimal.
    {
        bool pass = true;
        std::string detail;
        for (int n = 1; n < n_max && pass; ++n)
            for (const Word& w : words[n]) {
                bool rmax = classify(w).right_maximal;
                for (Letter x : {1, 2}) {
                    Word wx = cat(w, x == 1 ? "1" : "2");
                    if (!is_cinfty(wx)) {
                        if (rmax) {
                            pass = false;
                            detail = w.str() + " is right maximal but " + wx.str() +
                                     " is not arbitrarily differentiable";
                        }
                        continue;
                    }
                    bool rmin = classify(wx).right_minimal;
                    if (rmax && !rmin) {
                        pass = false;
                        detail = wx.str() + " should be right minimal";
                    }
                    if (!rmax && rmin) {
                        pass = false;
                        detail = wx.str() + " is right minimal but " + w.str() +
                                 " is not right maximal";
                    }
                    if (!pass)
                        break;
                }
                if (!pass)
                    break;
            }
        add("min-max-lemma", pass, pass ? "lengths 1.." + std::to_string(n_max - 1) : detail);
    }

    // Recursive frontier maps against the shortest-word construction, first
    // over 0-free inputs, then over frontiers containing 0.
    FrontierTables tables(std::min(std::max(k_max + 1, 12), 22));
    {
        bool pass = true;
        std::string detail;
        for (int len = 1; len <= k_max && pass; ++len)
            for (const std::string& u : pure_frontiers(len)) {
                if (gamma_s(u, Mode::Recursive, tables) != gamma_s_direct(u) ||
                    gamma_d(u, Mode::Recursive, tables) != gamma_d_direct(u) ||
                    theta(u, Mode::Recursive, tables) != theta_direct(u) ||
                    pi(u, Mode::Recursive, tables) != pi_direct(u)) {
                    pass = false;
                    detail = "mismatch at " + u;
                    break;
                }
            }
        int zcap = std::min(k_max, 8);
        for (int len = 1; len <= zcap && pass; ++len)
            for (const std::string& u : mixed_frontiers(len)) {
                if (gamma_s(u, Mode::Recursive, tables) != gamma_s_direct(u) ||
                    gamma_d(u, Mode::Recursive, tables) != gamma_d_direct(u) ||
                    theta(u, Mode::Recursive, tables) != theta_direct(u) ||
                    pi(u, Mode::Recursive, tables) != pi_direct(u)) {
                    pass = false;
                    detail = "mismatch at " + u;
                    break;
                }
            }
        add("recursive-vs-direct", pass,
            pass ? "pure 1.." + std::to_string(k_max) + ", with 0s 1.." + std::to_string(zcap)
                 : detail);
    }

    Graph graph(std::min(std::max(k_max + 1, 12), 21));
    // DP lengths and path counts against direct construction and explicit
    // path enumeration; plus the double-rooted length identity used by the
    // conjecture probe.
    {
        bool pass = true;
        std::string detail;
        int cap = std::min(k_max, 12);
        int path_cap = std::min(k_max, 10);
        for (int len = 1; len <= cap && pass; ++len)
            for (const std::string& u : pure_frontiers(len)) {
                if (graph.min_word_length(u) != min_word(u, Rooting::Single).size()) {
                    pass = false;
                    detail = "single-rooted length mismatch at " + u;
                    break;
                }
                std::uint64_t dlen = graph.min_word_length(u) +
                                     graph.path_count(gamma_s(u, Mode::Recursive, tables));
                if (dlen != min_word(u, Rooting::Double).size()) {
                    pass = false;
                    detail = "double-rooted length identity fails at " + u;
                    break;
                }
                if (len <= path_cap &&
                    graph.paths_to(u).size() != graph.path_count(u)) {
                    pass = false;
                    detail = "path count mismatch at " + u;
                    break;
                }
            }
        add("dp-vs-direct", pass, pass ? "lengths 1.." + std::to_string(cap) : detail);
    }

    // Right 0-extension theorem: the minimal part of the shortest word with
    // left frontier U0 is the shortest word with left frontier Theta(U)2.
    {
        bool pass = true;
        std::string detail;
        int cap = std::min(k_max, 10);
        int scan_cap = std::min(cap, 6); // full factor scan is cubic
        for (int len = 1; len <= cap && pass; ++len)
            for (const std::string& u : pure_frontiers(len)) {
                Word w0 = min_word(u + "0", Rooting::Single);
                Word m = min_word(theta(u, Mode::Recursive, tables) + "2", Rooting::Single);
                if (len <= scan_cap) {
                    if (!(minimal_part(w0).factor == m)) {
                        pass = false;
                        detail = "minimal part mismatch at " + u;
                        break;
                    }
                } else {
                    Classification c = classify(m);
                    if (!w0.contains(m) || !c.single_rooted || !c.minimal ||
                        height(m) != height(w0)) {
                        pass = false;
                        detail = "0-extension factor check fails at " + u;
                        break;
                    }
                }
            }
        add("right-0-extension", pass, pass ? "lengths 1.." + std::to_string(cap) : detail);
    }

    // Backtracking enumeration against brute force, and against itself with
    // the incremental tower disabled.
    {
        bool pass = true;
        std::string detail;
        int cap = std::min(n_max, 16);
        for (int n = 1; n <= cap && pass; ++n) {
            const std::vector<Word>& inc = words[n];
            if (inc != naive_cinfty(n)) {
                pass = false;
                detail = "incremental vs naive differ at length " + std::to_string(n);
                break;
            }
            EnumerationConfig plain = config;
            plain.incremental = false;
            if (inc != enumerate_cinfty(n, plain)) {
                pass = false;
                detail = "enumeration modes differ at length " + std::to_string(n);
            }
        }
        add("backtracking-vs-naive", pass, pass ? "lengths 1.." + std::to_string(cap) : detail);
    }

    // Census: exactly 2^k single-rooted minimal words at every height whose
    // longest representative fits inside n_max.
    {
        bool pass = true;
        std::string detail;
        std::map<int, std::uint64_t> census;
        for (int n = 1; n <= n_max; ++n)
            for (const Word& w : words[n]) {
                DerivativeTower t = tower(w);
                if (!t.single_rooted())
                    continue;
                Classification c = classify(w);
                if (c.minimal)
                    ++census[t.height];
            }
        int checked = 0;
        for (int k = 1; k <= k_max; ++k) {
            LevelStats s = graph.level_stats(k);
            std::uint64_t longest = std::max(s.root1.max_len, s.root2.max_len);
            if (longest > static_cast<std::uint64_t>(n_max))
                break;
            ++checked;
            if (census[k] != (std::uint64_t{1} << k)) {
                pass = false;
                detail = "height " + std::to_string(k) + " has " +
                         std::to_string(census[k]) + " single-rooted minimal words";
                break;
            }
        }
        add("census-2k", pass,
            pass ? std::to_string(checked) + " fully covered heights" : detail);
    }

    return rep;
}

} // namespace cinf
