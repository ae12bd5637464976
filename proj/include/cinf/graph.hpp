#ifndef CINF_GRAPH_HPP
#define CINF_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cinf/frontier.hpp"

namespace cinf {

struct NodeStats {
    std::uint64_t path_count = 0; // distinct origin-to-U paths
    std::uint64_t min_length = 0; // length of the single-rooted minimal word
    std::uint64_t ones = 0;
    std::uint64_t twos = 0;
};

struct RootLevelStats {
    std::uint64_t min_len = 0;
    std::uint64_t max_len = 0;
    std::map<std::uint64_t, std::uint64_t> length_counts; // multiset of lengths
    std::uint64_t ones = 0; // aggregate, only when letters were requested
    std::uint64_t twos = 0;

    bool contains_length(std::uint64_t len) const { return length_counts.count(len) > 0; }
};

struct LevelStats {
    int height = 0;
    bool with_letters = false;
    RootLevelStats root1, root2;

    nlohmann::json to_json() const;
};

struct ProbeReport {
    std::string probe;
    nlohmann::json parameters = nlohmann::json::object();
    std::string verdict; // "holds" | "fails" | "exhausted-budget"
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json details = nlohmann::json::object();

    bool holds() const { return verdict == "holds"; }
    nlohmann::json to_json() const;
};

// The graph of minimal classes: nodes are 0-free frontiers, each non-empty
// node has out-edges U -> U1, U -> U2 and U -> Theta(U)2; the origin has no
// 0-edge. Path counts and minimal-word lengths are filled level by level.
class Graph {
public:
    explicit Graph(int max_height = 21);
    explicit Graph(FrontierTables tables); // adopt prebuilt (possibly cached) tables

    FrontierTables& tables() { return tables_; }
    void ensure(int len); // throws CapacityExceeded

    std::vector<std::pair<char, std::string>> successors(std::string_view node);

    std::uint64_t path_count(std::string_view node);
    std::vector<std::string> paths_to(std::string_view node, std::uint64_t budget = 1 << 20);
    std::uint64_t min_word_length(std::string_view node);
    std::pair<std::uint64_t, std::uint64_t> letter_counts(std::string_view node) const;

    LevelStats level_stats(int k, bool with_letters = false);
    std::string dot_export(int max_height);

    ProbeReport glueing_search(std::string_view u1, std::string_view u2, int depth_budget);
    ProbeReport reachability_probe(int k, int m);
    ProbeReport containment_probe(int k, int h_max, std::size_t length_cap = 40);
    ProbeReport weakley_check(int k_max);

private:
    std::uint64_t pc(Frontier u) const { return pc_[u.len][u.bits]; }
    std::uint64_t ml(Frontier u) const { return ml_[u.len][u.bits]; }
    Frontier node_checked(std::string_view node) const;
    std::string continuation(Frontier from, Frontier target);

    FrontierTables tables_;
    std::vector<std::vector<std::uint64_t>> pc_, ml_;
    int max_height_;
    int built_ = 0;
};

} // namespace cinf

#endif
