#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "cinf/graph.hpp"
#include "cinf/vertical.hpp"

using namespace cinf;

namespace {

Graph& graph() {
    static Graph g(16);
    return g;
}

std::vector<std::string> pure(int len) {
    std::vector<std::string> out;
    for (std::uint32_t key = 0; key < (1u << len); ++key)
        out.push_back(Frontier{key, len}.str());
    return out;
}

std::map<char, std::string> succ_map(const std::string& u) {
    std::map<char, std::string> out;
    for (auto [label, node] : graph().successors(u))
        out[label] = node;
    return out;
}

} // namespace

TEST_CASE("successors") {
    auto s = succ_map("2122");
    CHECK(s == std::map<char, std::string>{{'0', "12212"}, {'1', "21221"}, {'2', "21222"}});
    CHECK(succ_map("") == std::map<char, std::string>{{'1', "1"}, {'2', "2"}});
    CHECK(succ_map("2") == std::map<char, std::string>{{'0', "12"}, {'1', "21"}, {'2', "22"}});
}

TEST_CASE("path_count") {
    CHECK(graph().path_count("2122") == 4);
    CHECK(graph().path_count("1") == 1);
    CHECK(graph().path_count("2") == 1);
    CHECK(graph().path_count("22") == 2);
}

TEST_CASE("paths_to") {
    CHECK(graph().paths_to("2122") ==
          std::vector<std::string>{"1002", "2110", "2122", "2202"});
    CHECK(graph().paths_to("1") == std::vector<std::string>{"1"});
    CHECK(graph().paths_to("22") == std::vector<std::string>{"10", "22"});
    CHECK_THROWS_AS(graph().paths_to("2122", 2), BudgetExceeded);
}

TEST_CASE("paths decode along edges") {
    for (int len = 1; len <= 8; ++len)
        for (const std::string& u : pure(len)) {
            auto paths = graph().paths_to(u);
            CHECK(paths.size() == graph().path_count(u));
            std::set<std::string> distinct(paths.begin(), paths.end());
            CHECK(distinct.size() == paths.size());
            for (const std::string& label : paths) {
                CHECK(label.front() != '0'); // labels live in Sigma-0++
                std::string node;
                for (char c : label) {
                    auto s = succ_map(node);
                    REQUIRE(s.count(c));
                    node = s[c];
                }
                CHECK(node == u);
            }
        }
}

TEST_CASE("min_word_length") {
    CHECK(graph().min_word_length("2122") == 7);
    CHECK(graph().min_word_length("2") == 1);
    CHECK(graph().min_word_length("111") == 6);
}

TEST_CASE("letter_counts") {
    CHECK(graph().letter_counts("2122") == std::pair<std::uint64_t, std::uint64_t>{3, 4});
    CHECK(graph().letter_counts("2") == std::pair<std::uint64_t, std::uint64_t>{0, 1});
    CHECK(graph().letter_counts("111") == std::pair<std::uint64_t, std::uint64_t>{4, 2});
}

TEST_CASE("dp identities") {
    FrontierTables& t = graph().tables();
    for (int len = 1; len <= 10; ++len)
        for (const std::string& u : pure(len)) {
            Frontier f = Frontier::from_string(u);
            // |U| = |Gs(U)|
            CHECK(graph().min_word_length(u) ==
                  graph().min_word_length(t.gamma_s(f).str()));
            CHECK(graph().min_word_length(t.theta(f).str()) ==
                  graph().min_word_length(t.gamma_d(f).str()));
            // |U2| = |comp(U)2|
            CHECK(graph().min_word_length(u + "2") ==
                  graph().min_word_length(f.complemented().str() + "2"));
            // The 0-variant has the same length and differs in the last letter.
            Word w0 = min_word(u + "0", Rooting::Single);
            Word w1 = min_word(u + "1", Rooting::Single);
            CHECK(w0.size() == graph().min_word_length(u + "1"));
            CHECK(w0.size() == w1.size());
            CHECK(w0.factor(0, w0.size() - 1) == w1.factor(0, w1.size() - 1));
            CHECK(w0.back() != w1.back());
        }
}

TEST_CASE("dp against direct construction") {
    for (int len = 1; len <= 10; ++len)
        for (const std::string& u : pure(len))
            CHECK(graph().min_word_length(u) == min_word(u, Rooting::Single).size());
}

TEST_CASE("level_stats") {
    LevelStats one = graph().level_stats(1);
    CHECK(one.root1.min_len == 1);
    CHECK(one.root1.max_len == 1);
    CHECK(one.root2.min_len == 1);
    CHECK(one.root2.max_len == 1);

    // k = 4 against exhaustive direct construction.
    std::uint64_t mn1 = ~0ull, mx1 = 0, mn2 = ~0ull, mx2 = 0;
    for (const std::string& u : pure(4)) {
        std::uint64_t len = min_word(u, Rooting::Single).size();
        if (u.back() == '1') {
            mn1 = std::min(mn1, len);
            mx1 = std::max(mx1, len);
        } else {
            mn2 = std::min(mn2, len);
            mx2 = std::max(mx2, len);
        }
    }
    LevelStats four = graph().level_stats(4, true);
    CHECK(four.root1.min_len == mn1);
    CHECK(four.root1.max_len == mx1);
    CHECK(four.root2.min_len == mn2);
    CHECK(four.root2.max_len == mx2);
    std::uint64_t count1 = 0;
    for (auto [len, c] : four.root1.length_counts)
        count1 += c;
    CHECK(count1 == 8); // 2^4 frontiers split evenly by root
    CHECK(four.root1.ones + four.root1.twos > 0);
    CHECK(four.to_json().contains("root_1"));
}

TEST_CASE("dot export") {
    std::string one = graph().dot_export(1);
    // 3 nodes and 2 edges at height 1.
    std::size_t one_edges = 0;
    for (std::size_t p = one.find("->"); p != std::string::npos; p = one.find("->", p + 2))
        ++one_edges;
    CHECK(one_edges == 2);
    CHECK(one.find("\"eps\"") != std::string::npos);
    CHECK(one.find("\"1\";") != std::string::npos);
    CHECK(one.find("\"2\";") != std::string::npos);
    CHECK(one.find("digraph") == 0);
    CHECK(one.find("\"eps\" -> \"1\" [label=\"1\"]") != std::string::npos);

    std::string two = graph().dot_export(2);
    std::size_t edges = 0;
    for (std::size_t p = two.find("->"); p != std::string::npos; p = two.find("->", p + 2))
        ++edges;
    CHECK(edges == 8); // 7 nodes, 8 edges
    CHECK(two.find("style=dashed") != std::string::npos);
    // Balanced braces, quoted ids: enough for a standard DOT parser.
    CHECK(std::count(two.begin(), two.end(), '{') == 1);
    CHECK(std::count(two.begin(), two.end(), '}') == 1);
    CHECK(std::count(two.begin(), two.end(), '"') % 2 == 0);
}

TEST_CASE("glueing probe") {
    ProbeReport same = graph().glueing_search("212", "212", 4);
    CHECK(same.verdict == "holds");
    CHECK(same.witnesses[0]["node"] == "212");
    CHECK(same.witnesses[0]["left_continuation"] == "");

    ProbeReport r = graph().glueing_search("1", "2", 6);
    CHECK(r.verdict == "holds");
    CHECK(r.witnesses[0]["node"] == "22");
    CHECK(r.witnesses[0]["left_continuation"] == "0");
    CHECK(r.witnesses[0]["right_continuation"] == "2");

    // All pairs up to length 4 meet within a small budget.
    for (int l1 = 1; l1 <= 4; ++l1)
        for (const std::string& a : pure(l1))
            for (int l2 = 1; l2 <= 4; ++l2)
                for (const std::string& b : pure(l2))
                    CHECK(graph().glueing_search(a, b, 8).verdict == "holds");

    ProbeReport hopeless = graph().glueing_search("1", "2", 0);
    CHECK(hopeless.verdict == "exhausted-budget");
}

TEST_CASE("reachability probe") {
    ProbeReport r12 = graph().reachability_probe(1, 2);
    CHECK(r12.verdict == "fails");
    CHECK(r12.witnesses[0]["from"] == "1");
    CHECK(r12.witnesses[0]["to"] == "21");

    ProbeReport r13 = graph().reachability_probe(1, 3);
    CHECK(r13.verdict == "fails");
    CHECK(r13.witnesses[0]["from"] == "1");
    CHECK(r13.witnesses[0]["to"] == "211");
}

TEST_CASE("containment probe") {
    ProbeReport r = graph().containment_probe(1, 5, 30);
    CHECK(r.verdict == "holds");
    CHECK(r.details["least_passing_height"] == 3);
    // Height 2 fails through the witness 11.
    bool saw_11 = false;
    for (const auto& w : r.witnesses)
        if (w["height"] == 2 && w["word"] == "11")
            saw_11 = true;
    CHECK(saw_11);

    // h = k can never pass: a minimal word does not contain its sibling.
    ProbeReport tight = graph().containment_probe(2, 2, 30);
    CHECK(tight.verdict == "fails");
}

TEST_CASE("weakley probe") {
    ProbeReport two = graph().weakley_check(2);
    CHECK(two.verdict == "holds");
    ProbeReport ten = graph().weakley_check(10);
    CHECK(ten.verdict == "holds");
    CHECK(ten.details["root_1_anomalies"].empty());
}

TEST_CASE("probe report json shape") {
    nlohmann::json j = graph().weakley_check(4).to_json();
    CHECK(j.contains("verdict"));
    CHECK(j.contains("witnesses"));
    CHECK(j.contains("parameters"));
    CHECK(j["witnesses"].is_array());
    CHECK(j["parameters"].is_object());
}

TEST_CASE("node validation") {
    CHECK_THROWS(graph().path_count("210"));
    CHECK_THROWS(graph().path_count(""));
    CHECK_THROWS(graph().min_word_length(""));
    CHECK_THROWS_AS(graph().reachability_probe(2, 2), std::invalid_argument);
}
