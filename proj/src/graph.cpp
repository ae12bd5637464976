#include "cinf/graph.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <stdexcept>
#include <unordered_set>

#include "cinf/enumerate.hpp"
#include "cinf/vertical.hpp"

namespace cinf {

namespace {

nlohmann::json root_json(const RootLevelStats& r, bool with_letters) {
    nlohmann::json lengths = nlohmann::json::object();
    for (const auto& [len, count] : r.length_counts)
        lengths[std::to_string(len)] = count;
    nlohmann::json j{{"min_length", r.min_len},
                     {"max_length", r.max_len},
                     {"length_counts", lengths}};
    if (with_letters) {
        j["ones"] = r.ones;
        j["twos"] = r.twos;
    }
    return j;
}

std::vector<std::string> sorted_frontiers(int len) {
    std::vector<std::string> out;
    out.reserve(std::size_t{1} << len);
    for (std::uint32_t key = 0; key < (std::uint32_t{1} << len); ++key)
        out.push_back(Frontier{key, len}.str());
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t set_key(Frontier f) {
    return (std::uint64_t{static_cast<std::uint32_t>(f.len)} << 32) | f.bits;
}

} // namespace

nlohmann::json LevelStats::to_json() const {
    return {{"height", height},
            {"root_1", root_json(root1, with_letters)},
            {"root_2", root_json(root2, with_letters)}};
}

nlohmann::json ProbeReport::to_json() const {
    return {{"probe", probe},
            {"parameters", parameters},
            {"verdict", verdict},
            {"witnesses", witnesses},
            {"details", details}};
}

Graph::Graph(int max_height)
    : tables_(max_height), max_height_(max_height) {
    pc_.assign(1, {1}); // one empty path to the origin
    ml_.assign(1, {0});
}

Graph::Graph(FrontierTables tables)
    : tables_(std::move(tables)), max_height_(tables_.capacity()) {
    pc_.assign(1, {1});
    ml_.assign(1, {0});
}

void Graph::ensure(int len) {
    tables_.ensure(len);
    while (built_ < len) {
        const int n = ++built_;
        const std::uint32_t m = std::uint32_t{1} << n;
        const std::uint32_t pmask = m >> 1;
        std::vector<std::uint64_t> pc(m), ml(m);
        if (n == 1) {
            pc[0] = pc[1] = 1;
            ml[0] = ml[1] = 1;
        } else {
            const auto& pcp = pc_[n - 1];
            const auto& mlp = ml_[n - 1];
            for (std::uint32_t u = 0; u < pmask; ++u) {
                Frontier f{u, n - 1};
                std::uint32_t th = tables_.theta(f).bits;
                std::uint32_t gd = tables_.gamma_d(f).bits;
                std::uint32_t gs = tables_.gamma_s(f).bits;
                std::uint32_t pi = tables_.pi(f).bits;
                pc[u] = pcp[u];                            // ||U1|| = ||U||
                pc[u | pmask] = pcp[u] + pcp[pi];          // ||U2|| = ||U|| + ||Pi(U)||
                ml[u] = mlp[th] + pcp[th] + pcp[gd];       // |U1| = |Th(U)| + ||Th(U)|| + ||Gd(U)||
                ml[u | pmask] = mlp[u] + pcp[gs];          // |U2| = |U| + ||Gs(U)||
            }
        }
        pc_.push_back(std::move(pc));
        ml_.push_back(std::move(ml));
    }
}

Frontier Graph::node_checked(std::string_view node) const {
    return Frontier::from_string(node);
}

std::vector<std::pair<char, std::string>> Graph::successors(std::string_view node) {
    Frontier u = node_checked(node);
    std::vector<std::pair<char, std::string>> out;
    if (u.len == 0) {
        out.emplace_back('1', "1");
        out.emplace_back('2', "2");
        return out;
    }
    out.emplace_back('0', tables_.theta(u).appended(2).str());
    out.emplace_back('1', u.appended(1).str());
    out.emplace_back('2', u.appended(2).str());
    return out;
}

std::uint64_t Graph::path_count(std::string_view node) {
    Frontier u = node_checked(node);
    if (u.len == 0)
        throw std::invalid_argument("path_count needs a non-empty node");
    ensure(u.len);
    return pc(u);
}

std::uint64_t Graph::min_word_length(std::string_view node) {
    Frontier u = node_checked(node);
    if (u.len == 0)
        throw std::invalid_argument("min_word_length needs a non-empty node");
    ensure(u.len);
    return ml(u);
}

std::vector<std::string> Graph::paths_to(std::string_view node, std::uint64_t budget) {
    Frontier target = node_checked(node);
    if (target.len == 0)
        throw std::invalid_argument("paths_to needs a non-empty node");
    ensure(target.len);
    std::vector<std::string> out;
    std::string suffix;
    // Backward over inverse edges: W1 <- W by 1; W2 <- W by 2 and <- Pi(W) by 0.
    auto rec = [&](auto&& self, Frontier u) -> void {
        if (u.len == 1) {
            if (out.size() >= budget)
                throw BudgetExceeded("more than " + std::to_string(budget) + " paths");
            std::string label(1, static_cast<char>('0' + u.last()));
            std::reverse(suffix.begin(), suffix.end());
            out.push_back(label + suffix);
            std::reverse(suffix.begin(), suffix.end());
            return;
        }
        Frontier w = u.prefix();
        if (u.last() == 1) {
            suffix.push_back('1');
            self(self, w);
            suffix.pop_back();
        } else {
            suffix.push_back('2');
            self(self, w);
            suffix.pop_back();
            suffix.push_back('0');
            self(self, tables_.pi(w));
            suffix.pop_back();
        }
    };
    rec(rec, target);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::uint64_t, std::uint64_t> Graph::letter_counts(std::string_view node) const {
    Frontier u = node_checked(node);
    if (u.len == 0)
        throw std::invalid_argument("letter_counts needs a non-empty node");
    Word w = min_word(node, Rooting::Single);
    std::uint64_t twos = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        twos += (w[i] == 2);
    return {w.size() - twos, twos};
}

LevelStats Graph::level_stats(int k, bool with_letters) {
    if (k < 1)
        throw std::invalid_argument("level statistics need k >= 1");
    ensure(k);
    LevelStats s;
    s.height = k;
    s.with_letters = with_letters;
    const std::uint32_t top = std::uint32_t{1} << (k - 1);
    for (std::uint32_t key = 0; key < (std::uint32_t{1} << k); ++key) {
        Frontier u{key, k};
        RootLevelStats& r = (key & top) ? s.root2 : s.root1;
        std::uint64_t len = ml(u);
        if (r.length_counts.empty()) {
            r.min_len = r.max_len = len;
        } else {
            r.min_len = std::min(r.min_len, len);
            r.max_len = std::max(r.max_len, len);
        }
        ++r.length_counts[len];
        if (with_letters) {
            auto [ones, twos] = letter_counts(u.str());
            r.ones += ones;
            r.twos += twos;
        }
    }
    return s;
}

std::string Graph::dot_export(int max_height) {
    if (max_height < 1)
        throw std::invalid_argument("dot export needs max_height >= 1");
    ensure(max_height);
    std::ostringstream os;
    os << "digraph minimal_classes {\n";
    os << "  rankdir=TB;\n";
    os << "  \"eps\" [shape=circle];\n";
    for (int len = 1; len <= max_height; ++len)
        for (const std::string& u : sorted_frontiers(len))
            os << "  \"" << u << "\";\n";
    os << "  \"eps\" -> \"1\" [label=\"1\"];\n";
    os << "  \"eps\" -> \"2\" [label=\"2\"];\n";
    for (int len = 1; len < max_height; ++len) {
        for (const std::string& u : sorted_frontiers(len)) {
            Frontier f = Frontier::from_string(u);
            os << "  \"" << u << "\" -> \"" << f.appended(1).str() << "\" [label=\"1\"];\n";
            os << "  \"" << u << "\" -> \"" << f.appended(2).str() << "\" [label=\"2\"];\n";
            os << "  \"" << u << "\" -> \"" << tables_.theta(f).appended(2).str()
               << "\" [label=\"0\", style=dashed];\n";
        }
    }
    os << "}\n";
    return os.str();
}

ProbeReport Graph::glueing_search(std::string_view u1, std::string_view u2, int depth_budget) {
    ProbeReport rep;
    rep.probe = "glueing";
    rep.parameters = {{"left", std::string(u1)},
                      {"right", std::string(u2)},
                      {"budget", depth_budget}};
    Frontier a = node_checked(u1);
    Frontier b = node_checked(u2);

    const int limit = std::max(a.len, b.len) + std::max(depth_budget, 0);
    if (limit > tables_.capacity())
        throw CapacityExceeded("glueing depth reaches length " + std::to_string(limit) +
                               " beyond the table capacity");
    ensure(std::min(limit + 1, tables_.capacity()));

    auto advance = [&](const std::vector<Frontier>& layer) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<Frontier> next;
        for (Frontier f : layer) {
            Frontier succ[3] = {f.appended(1), f.appended(2), {0, -1}};
            int n = 2;
            if (f.len > 0)
                succ[n++] = tables_.theta(f).appended(2);
            for (int i = 0; i < n; ++i)
                if (seen.insert(set_key(succ[i])).second)
                    next.push_back(succ[i]);
        }
        return next;
    };

    std::vector<Frontier> ra{a}, rb{b};
    for (int len = std::min(a.len, b.len); len < std::max(a.len, b.len); ++len) {
        if (ra.front().len == len)
            ra = advance(ra);
        else
            rb = advance(rb);
    }

    for (int len = std::max(a.len, b.len); len <= limit; ++len) {
        std::unordered_set<std::uint64_t> in_a;
        for (Frontier f : ra)
            in_a.insert(set_key(f));
        // Ties at the first common length go to the lexicographically least
        // continuation label pair.
        bool found = false;
        std::string best_node, best_v1, best_v2;
        for (Frontier f : rb)
            if (in_a.count(set_key(f))) {
                std::string v1 = continuation(a, f);
                std::string v2 = continuation(b, f);
                if (!found || std::tie(v1, v2) < std::tie(best_v1, best_v2)) {
                    found = true;
                    best_node = f.str();
                    best_v1 = v1;
                    best_v2 = v2;
                }
            }
        if (found) {
            rep.verdict = "holds";
            rep.witnesses.push_back({{"node", best_node},
                                     {"left_continuation", best_v1},
                                     {"right_continuation", best_v2},
                                     {"length", len}});
            return rep;
        }
        if (len == limit)
            break;
        ra = advance(ra);
        rb = advance(rb);
    }
    rep.verdict = "exhausted-budget";
    rep.details = {{"searched_up_to_length", limit}};
    return rep;
}

// Lexicographically least label word continuing from `from` to `target`.
std::string Graph::continuation(Frontier from, Frontier target) {
    std::unordered_set<std::uint64_t> dead;
    std::string out;
    auto rec = [&](auto&& self, Frontier u) -> bool {
        if (u.len == target.len)
            return u == target;
        if (dead.count(set_key(u)))
            return false;
        if (u.len > 0) {
            out.push_back('0');
            if (self(self, tables_.theta(u).appended(2)))
                return true;
            out.pop_back();
        }
        for (Letter x : {1, 2}) {
            out.push_back(static_cast<char>('0' + x));
            if (self(self, u.appended(x)))
                return true;
            out.pop_back();
        }
        dead.insert(set_key(u));
        return false;
    };
    if (!rec(rec, from))
        throw Error("internal: meeting node is not reachable after all");
    return out;
}

ProbeReport Graph::reachability_probe(int k, int m) {
    if (k < 1 || m <= k)
        throw std::invalid_argument("reachability needs 1 <= k < m");
    if (m > 16)
        throw CapacityExceeded("reachability probe is capped at target length 16");
    ProbeReport rep;
    rep.probe = "reachability";
    rep.parameters = {{"k", k}, {"m", m}};
    ensure(m);

    const std::uint32_t full = std::uint32_t{1} << m;
    for (const std::string& us : sorted_frontiers(k)) {
        std::vector<char> cur(std::size_t{1} << k, 0);
        cur[Frontier::from_string(us).bits] = 1;
        for (int len = k; len < m; ++len) {
            std::vector<char> next(std::size_t{1} << (len + 1), 0);
            for (std::uint32_t key = 0; key < (std::uint32_t{1} << len); ++key) {
                if (!cur[key])
                    continue;
                Frontier f{key, len};
                next[f.appended(1).bits] = 1;
                next[f.appended(2).bits] = 1;
                next[tables_.theta(f).appended(2).bits] = 1;
            }
            cur = std::move(next);
        }
        std::uint32_t reached = 0;
        for (std::uint32_t z = 0; z < full; ++z)
            reached += cur[z];
        if (reached != full) {
            std::string worst;
            for (const std::string& zs : sorted_frontiers(m))
                if (!cur[Frontier::from_string(zs).bits]) {
                    worst = zs;
                    break;
                }
            rep.verdict = "fails";
            rep.witnesses.push_back({{"from", us}, {"to", worst}});
            return rep;
        }
    }
    rep.verdict = "holds";
    return rep;
}

ProbeReport Graph::containment_probe(int k, int h_max, std::size_t length_cap) {
    if (k < 1 || h_max < k)
        throw std::invalid_argument("containment needs 1 <= k <= h_max");
    if (length_cap > 64)
        throw CapacityExceeded("containment length cap is limited to 64");
    ProbeReport rep;
    rep.probe = "containment";
    rep.parameters = {{"k", k}, {"h_max", h_max}, {"length_cap", length_cap}};
    ensure(k);

    std::vector<Word> needles;
    for (std::uint32_t key = 0; key < (std::uint32_t{1} << k); ++key)
        needles.push_back(min_word(Frontier{key, k}.str(), Rooting::Single));

    EnumerationConfig config;
    config.max_length = static_cast<int>(length_cap);
    std::vector<std::vector<Word>> by_height(h_max + 2);
    std::vector<bool> truncated(h_max + 2, false);
    for (int n = 1; n <= static_cast<int>(length_cap); ++n)
        for (const Word& w : enumerate_cinfty(n, config)) {
            int h = height(w);
            if (h > h_max + 1)
                continue;
            if (n == static_cast<int>(length_cap))
                truncated[h] = true; // census at this height may be incomplete
            by_height[h].push_back(w);
        }

    for (int h = k; h <= h_max; ++h) {
        bool ok = true;
        for (const Word& w : by_height[h]) {
            for (const Word& m : needles)
                if (!w.contains(m)) {
                    if (ok) {
                        rep.witnesses.push_back({{"height", h},
                                                 {"word", w.str()},
                                                 {"missing_factor", m.str()}});
                        ok = false;
                    }
                    break;
                }
            if (!ok)
                break;
        }
        if (!ok)
            continue;
        if (truncated[h]) {
            rep.verdict = "exhausted-budget";
            rep.details = {{"incomplete_height", h}};
            return rep;
        }
        rep.verdict = "holds";
        rep.details = {{"least_passing_height", h}};
        return rep;
    }
    rep.verdict = "fails";
    return rep;
}

ProbeReport Graph::weakley_check(int k_max) {
    if (k_max < 2)
        throw std::invalid_argument("weakley check needs k_max >= 2");
    ProbeReport rep;
    rep.probe = "weakley";
    rep.parameters = {{"k_max", k_max}};
    ensure(k_max);

    // Per height: root-2 single-rooted lengths, root-1 lengths, and
    // double-rooted lengths via |w_d(U)| = |U| + ||Gs(U)||.
    struct Span {
        std::uint64_t min, max;
    };
    std::vector<Span> root2(k_max + 1), root1(k_max + 1), dr(k_max + 1);
    for (int kk = 1; kk <= k_max; ++kk) {
        Span s2{~0ULL, 0}, s1{~0ULL, 0}, sd{~0ULL, 0};
        const std::uint32_t top = std::uint32_t{1} << (kk - 1);
        for (std::uint32_t key = 0; key < (std::uint32_t{1} << kk); ++key) {
            Frontier u{key, kk};
            std::uint64_t len = ml(u);
            Span& s = (key & top) ? s2 : s1;
            s.min = std::min(s.min, len);
            s.max = std::max(s.max, len);
            std::uint64_t dlen = len + pc(tables_.gamma_s(u));
            sd.min = std::min(sd.min, dlen);
            sd.max = std::max(sd.max, dlen);
        }
        root2[kk] = s2;
        root1[kk] = s1;
        dr[kk] = sd;
    }

    bool ok = true;
    nlohmann::json anomalies = nlohmann::json::array();
    for (int kk = 1; kk < k_max; ++kk) {
        if (root2[kk].max >= root2[kk + 1].min) {
            ok = false;
            rep.witnesses.push_back({{"form", "single-rooted"},
                                     {"height", kk},
                                     {"max_length", root2[kk].max},
                                     {"next_min_length", root2[kk + 1].min}});
        }
        if (dr[kk].max >= dr[kk + 1].min) {
            ok = false;
            rep.witnesses.push_back({{"form", "double-rooted"},
                                     {"height", kk},
                                     {"max_length", dr[kk].max},
                                     {"next_min_length", dr[kk + 1].min}});
        }
        if (root1[kk].max >= root1[kk + 1].min)
            anomalies.push_back({{"height", kk},
                                 {"max_length", root1[kk].max},
                                 {"next_height", kk + 1},
                                 {"next_min_length", root1[kk + 1].min}});
    }
    rep.verdict = ok ? "holds" : "fails";
    rep.details = {{"root_1_anomalies", anomalies}};
    return rep;
}

} // namespace cinf
