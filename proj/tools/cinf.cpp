#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cinf/enumerate.hpp"
#include "cinf/graph.hpp"
#include "cinf/vertical.hpp"

using nlohmann::json;

namespace {

bool g_json = false;

void emit(const std::string& value) {
    if (g_json)
        std::cout << json{{"result", value}}.dump() << "\n";
    else
        std::cout << value << "\n";
}

void emit_list(const std::vector<std::string>& values) {
    if (g_json) {
        std::cout << json(values).dump() << "\n";
    } else {
        for (const auto& v : values)
            std::cout << v << "\n";
    }
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::optional<std::string> cache_path() {
    if (const char* p = std::getenv("CINF_CACHE"); p && *p)
        return std::string(p);
    return std::nullopt;
}

cinf::FrontierTables make_tables() {
    if (auto p = cache_path(); p && std::filesystem::exists(*p))
        return cinf::FrontierTables::load(*p);
    return cinf::FrontierTables();
}

cinf::Graph make_graph() { return cinf::Graph(make_tables()); }

std::string runs_to_string(const cinf::RunSequence& runs) {
    bool wide = false;
    for (int r : runs)
        wide = wide || r > 9;
    std::string out;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (wide && i > 0)
            out += ' ';
        out += std::to_string(runs[i]);
    }
    return out;
}

cinf::Mode parse_mode(const std::string& mode) {
    if (mode == "direct")
        return cinf::Mode::Direct;
    if (mode == "recursive")
        return cinf::Mode::Recursive;
    throw CLI::ValidationError("--mode must be 'direct' or 'recursive'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"C-infinity words: derivatives, vertical representation, "
                 "frontier maps, the graph of minimal classes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json, "emit JSON instead of plain text");

    std::string word, frontier, rep_str, left, right, node, u1, u2, out_path, mode = "recursive";
    int n = 0, k = 0, m = 0, h_max = 0, k_max = 0, max_height = 0, budget = 12;
    int max_length = 30;
    std::uint64_t path_budget = 1 << 20;
    std::size_t length_cap = 40;
    bool use_double = false, letters = false, naive = false, count_only = false;
    int vn_max = 20, vk_max = 10;

    auto* c_derive = app.add_subcommand("derive", "one derivative step");
    c_derive->add_option("word", word)->required();

    auto* c_tower = app.add_subcommand("tower", "all derivatives down to the root");
    c_tower->add_option("word", word)->required();

    auto* c_rle = app.add_subcommand("rle", "run-length encoding");
    c_rle->add_option("word", word)->required();

    auto* c_encode = app.add_subcommand("encode", "vertical representation LEFT|RIGHT");
    c_encode->add_option("word", word)->required();

    auto* c_decode = app.add_subcommand("decode", "word from its vertical representation");
    c_decode->add_option("rep", rep_str, "pair as LEFT|RIGHT (quote the pipe)");
    c_decode->add_option("--left", left);
    c_decode->add_option("--right", right);

    auto* c_minword = app.add_subcommand("minword", "shortest word with the given left frontier");
    c_minword->add_option("frontier", frontier)->required();
    c_minword->add_flag("--double", use_double, "double-rooted instead of single-rooted");

    auto* c_frontier = app.add_subcommand("frontier", "frontier maps");
    c_frontier->require_subcommand(1);
    for (const char* name : {"gamma-s", "gamma-d", "theta", "pi"}) {
        auto* sub = c_frontier->add_subcommand(name);
        sub->add_option("frontier", frontier)->required();
        sub->add_option("--mode", mode, "direct|recursive")->capture_default_str();
    }

    auto* c_graph = app.add_subcommand("graph", "graph of minimal classes");
    c_graph->require_subcommand(1);
    auto* g_succ = c_graph->add_subcommand("succ", "labeled successors of a node");
    g_succ->add_option("node", node);
    auto* g_count = c_graph->add_subcommand("count", "number of origin-to-node paths");
    g_count->add_option("node", node)->required();
    auto* g_paths = c_graph->add_subcommand("paths", "all origin-to-node label words");
    g_paths->add_option("node", node)->required();
    g_paths->add_option("--budget", path_budget)->capture_default_str();
    auto* g_length = c_graph->add_subcommand("length", "single-rooted minimal word length");
    g_length->add_option("node", node)->required();
    auto* g_stats = c_graph->add_subcommand("stats", "per-root length statistics at a height");
    g_stats->add_option("k", k)->required();
    g_stats->add_flag("--letters", letters, "also aggregate letter counts (slow for large k)");
    auto* g_dot = c_graph->add_subcommand("dot", "DOT export up to a height");
    g_dot->add_option("max_height", max_height)->required();

    auto* c_enum = app.add_subcommand("enumerate", "all C-infinity words of a length");
    c_enum->add_option("n", n)->required();
    c_enum->add_option("--max-length", max_length)->capture_default_str();
    c_enum->add_flag("--naive", naive, "recompute the tower at every step");
    c_enum->add_flag("--count", count_only, "print only the number of words");

    auto* c_kol = app.add_subcommand("kolakoski", "prefix of the Kolakoski word");
    c_kol->add_option("n", n)->required();

    auto* c_verify = app.add_subcommand("verify", "cross-module differential suite");
    c_verify->add_option("--n-max", vn_max)->capture_default_str();
    c_verify->add_option("--k-max", vk_max)->capture_default_str();

    auto* c_probe = app.add_subcommand("probe", "conjecture probes");
    c_probe->require_subcommand(1);
    auto* p_glue = c_probe->add_subcommand("glueing", "common descendant of two nodes");
    p_glue->add_option("u1", u1)->required();
    p_glue->add_option("u2", u2)->required();
    p_glue->add_option("--budget", budget)->capture_default_str();
    auto* p_reach = c_probe->add_subcommand("reach", "level-k to level-m reachability");
    p_reach->add_option("k", k)->required();
    p_reach->add_option("m", m)->required();
    auto* p_contain = c_probe->add_subcommand("contain", "minimal words as universal factors");
    p_contain->add_option("k", k)->required();
    p_contain->add_option("h_max", h_max)->required();
    p_contain->add_option("--length-cap", length_cap)->capture_default_str();
    auto* p_weakley = c_probe->add_subcommand("weakley", "length monotonicity across heights");
    p_weakley->add_option("k_max", k_max)->required();

    auto* c_cache = app.add_subcommand("cache", "frontier table cache");
    c_cache->require_subcommand(1);
    auto* cache_build = c_cache->add_subcommand("build", "tabulate and save");
    cache_build->add_option("k", k)->required();
    cache_build->add_option("--out", out_path, "defaults to $CINF_CACHE");
    auto* cache_info = c_cache->add_subcommand("info", "inspect a cache file");
    cache_info->add_option("path", out_path, "defaults to $CINF_CACHE");

    auto* c_classify = app.add_subcommand("classify", "minimality/maximality/extendability");
    c_classify->add_option("word", word)->required();

    auto* c_prim = app.add_subcommand("primitives", "all words whose derivative is the input");
    c_prim->add_option("word", word)->required();

    auto* c_extend = app.add_subcommand("extend", "unique simple-extension closure");
    c_extend->add_option("word", word)->required();

    auto* c_minpart = app.add_subcommand("minpart", "single-rooted minimal factor(s) of full height");
    c_minpart->add_option("word", word)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_derive) {
            emit(cinf::derivative(cinf::Word::from_string(word)).str());
        } else if (*c_tower) {
            cinf::DerivativeTower t = cinf::tower(cinf::Word::from_string(word));
            if (g_json) {
                json levels = json::array();
                for (const auto& l : t.levels)
                    levels.push_back(l.str());
                emit_json({{"levels", levels}, {"height", t.height}, {"root", t.root.str()}});
            } else {
                for (const auto& l : t.levels)
                    std::cout << l.str() << "\n";
            }
        } else if (*c_rle) {
            emit(runs_to_string(cinf::rle(cinf::Word::from_string(word))));
        } else if (*c_encode) {
            emit(cinf::encode(cinf::Word::from_string(word)).str());
        } else if (*c_decode) {
            cinf::VerticalRep rep;
            if (!rep_str.empty()) {
                auto bar = rep_str.find('|');
                if (bar == std::string::npos)
                    throw CLI::ValidationError("decode", "expected LEFT|RIGHT");
                rep = {rep_str.substr(0, bar), rep_str.substr(bar + 1)};
            } else {
                rep = {left, right};
            }
            emit(cinf::decode(rep).str());
        } else if (*c_minword) {
            emit(cinf::min_word(frontier, use_double ? cinf::Rooting::Double
                                                     : cinf::Rooting::Single)
                     .str());
        } else if (*c_frontier) {
            cinf::FrontierTables tables = make_tables();
            cinf::Mode md = parse_mode(mode);
            CLI::App* sub = c_frontier->get_subcommands().front();
            const std::string& name = sub->get_name();
            if (name == "gamma-s")
                emit(cinf::gamma_s(frontier, md, tables));
            else if (name == "gamma-d")
                emit(cinf::gamma_d(frontier, md, tables));
            else if (name == "theta")
                emit(cinf::theta(frontier, md, tables));
            else
                emit(cinf::pi(frontier, md, tables));
        } else if (*c_graph) {
            cinf::Graph graph = make_graph();
            if (*g_succ) {
                std::vector<std::string> rows;
                json arr = json::array();
                for (auto [label, target] : graph.successors(node)) {
                    rows.push_back(std::string(1, label) + " " + target);
                    arr.push_back({{"label", std::string(1, label)}, {"node", target}});
                }
                if (g_json)
                    emit_json(arr);
                else
                    emit_list(rows);
            } else if (*g_count) {
                emit(std::to_string(graph.path_count(node)));
            } else if (*g_paths) {
                emit_list(graph.paths_to(node, path_budget));
            } else if (*g_length) {
                emit(std::to_string(graph.min_word_length(node)));
            } else if (*g_stats) {
                cinf::LevelStats s = graph.level_stats(k, letters);
                if (g_json) {
                    emit_json(s.to_json());
                } else {
                    std::cout << "height " << s.height << "\n"
                              << "root 1: min " << s.root1.min_len << " max "
                              << s.root1.max_len << "\n"
                              << "root 2: min " << s.root2.min_len << " max "
                              << s.root2.max_len << "\n";
                }
            } else if (*g_dot) {
                std::cout << graph.dot_export(max_height);
            }
        } else if (*c_enum) {
            cinf::EnumerationConfig config;
            config.max_length = max_length;
            config.incremental = !naive;
            if (count_only) {
                emit(std::to_string(cinf::enumerate_cinfty(n, config).size()));
            } else {
                std::vector<std::string> rows;
                for (const cinf::Word& w : cinf::enumerate_cinfty(n, config))
                    rows.push_back(w.str());
                emit_list(rows);
            }
        } else if (*c_kol) {
            if (n < 1)
                throw CLI::ValidationError("kolakoski", "n must be positive");
            emit(cinf::kolakoski(static_cast<std::size_t>(n)).str());
        } else if (*c_verify) {
            cinf::VerificationReport rep = cinf::verify_suite(vn_max, vk_max);
            if (g_json) {
                emit_json(rep.to_json());
            } else {
                for (const auto& c : rep.checks)
                    std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << " ("
                              << c.detail << ")\n";
            }
            return rep.all_pass() ? 0 : 1;
        } else if (*c_probe) {
            cinf::Graph graph = make_graph();
            cinf::ProbeReport rep;
            if (*p_glue)
                rep = graph.glueing_search(u1, u2, budget);
            else if (*p_reach)
                rep = graph.reachability_probe(k, m);
            else if (*p_contain)
                rep = graph.containment_probe(k, h_max, length_cap);
            else
                rep = graph.weakley_check(k_max);
            if (g_json)
                emit_json(rep.to_json());
            else
                std::cout << rep.probe << ": " << rep.verdict << "\n"
                          << rep.to_json().dump(2) << "\n";
        } else if (*c_cache) {
            if (*cache_build) {
                std::string path = out_path;
                if (path.empty())
                    path = cache_path().value_or("");
                if (path.empty())
                    throw CLI::ValidationError("cache build",
                                               "pass --out or set CINF_CACHE");
                cinf::tabulate(k).save(path);
                emit("wrote tables up to length " + std::to_string(k) + " to " + path);
            } else {
                std::string path = out_path;
                if (path.empty())
                    path = cache_path().value_or("");
                if (path.empty())
                    throw CLI::ValidationError("cache info",
                                               "pass a path or set CINF_CACHE");
                cinf::FrontierTables t = cinf::FrontierTables::load(path);
                std::uint64_t entries = 0;
                for (int i = 1; i <= t.built(); ++i)
                    entries += 4ull << i;
                if (g_json)
                    emit_json({{"path", path}, {"built", t.built()}, {"entries", entries}});
                else
                    std::cout << path << ": tables for lengths 1.." << t.built() << " ("
                              << entries << " entries)\n";
            }
        } else if (*c_classify) {
            cinf::Classification c = cinf::classify(cinf::Word::from_string(word));
            json j{{"left_minimal", c.left_minimal},
                   {"right_minimal", c.right_minimal},
                   {"minimal", c.minimal},
                   {"left_maximal", c.left_maximal},
                   {"right_maximal", c.right_maximal},
                   {"maximal", c.maximal},
                   {"left_doubly_extendable", c.left_doubly_extendable},
                   {"right_doubly_extendable", c.right_doubly_extendable},
                   {"fully_extendable", c.fully_extendable},
                   {"single_rooted", c.single_rooted}};
            if (g_json) {
                emit_json(j);
            } else {
                for (auto& [key, val] : j.items())
                    std::cout << key << " " << (val.get<bool>() ? "yes" : "no") << "\n";
            }
        } else if (*c_prim) {
            std::vector<std::string> rows;
            for (const cinf::Word& p : cinf::primitives(cinf::Word::from_string(word)))
                rows.push_back(p.str());
            emit_list(rows);
        } else if (*c_extend) {
            emit(cinf::extend_to_maximal(cinf::Word::from_string(word)).str());
        } else if (*c_minpart) {
            cinf::MinimalPart mp = cinf::minimal_part(cinf::Word::from_string(word));
            if (g_json) {
                json j{{"factor", mp.factor.str()}, {"offset", mp.offset}};
                if (mp.second)
                    j["second"] = {{"factor", mp.second->first.str()},
                                   {"offset", mp.second->second}};
                emit_json(j);
            } else {
                std::cout << mp.factor.str() << " at " << mp.offset << "\n";
                if (mp.second)
                    std::cout << mp.second->first.str() << " at " << mp.second->second
                              << "\n";
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const cinf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
