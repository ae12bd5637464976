#ifndef CINF_FRONTIER_HPP
#define CINF_FRONTIER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cinf/errors.hpp"
#include "cinf/vertical.hpp"

namespace cinf {

enum class Mode { Direct, Recursive };

// A 0-free frontier packed into an integer: bit i is set iff position i holds a 2.
struct Frontier {
    std::uint32_t bits = 0;
    int len = 0;

    static Frontier from_string(std::string_view pure);
    std::string str() const;

    std::uint32_t mask() const { return (len == 0) ? 0 : ((std::uint32_t{1} << len) - 1); }
    Frontier complemented() const { return {bits ^ mask(), len}; }
    Frontier appended(Letter x) const {
        return {bits | (x == 2 ? (std::uint32_t{1} << len) : 0), len + 1};
    }
    Frontier prefix() const { return {bits & ((std::uint32_t{1} << (len - 1)) - 1), len - 1}; }
    Letter last() const { return ((bits >> (len - 1)) & 1) ? 2 : 1; }

    bool operator==(const Frontier&) const = default;
};

// Memoized tables of the four frontier maps over 0-free frontiers, filled
// level by level so every recursive reference hits an already-built entry.
class FrontierTables {
public:
    // Memory grows as 4 * 2^(max_len+1) entries; 22 keeps it near 130 MB.
    explicit FrontierTables(int max_len = 22);

    void ensure(int len); // throws CapacityExceeded beyond max_len
    int built() const { return built_; }
    int capacity() const { return max_len_; }

    Frontier gamma_s(Frontier u) { ensure(u.len); return get(gs_, u); }
    Frontier gamma_d(Frontier u) { ensure(u.len); return get(gd_, u); }
    Frontier theta(Frontier u) { ensure(u.len); return get(th_, u); }
    Frontier pi(Frontier u) { ensure(u.len); return get(pi_, u); }

    void save(const std::string& path) const;
    static FrontierTables load(const std::string& path);

private:
    using Table = std::vector<std::vector<std::uint32_t>>; // [len][key] -> image bits

    static Frontier get(const Table& t, Frontier u) {
        return {t[u.len][u.bits], u.len};
    }
    void fill_level(int n);

    int max_len_;
    int built_ = 0;
    Table gs_, gd_, th_, pi_;
};

// Recursive-mode evaluation over arbitrary frontiers (0s allowed); the result
// is always 0-free. Direct mode goes through the shortest-word construction.
std::string gamma_s(std::string_view frontier, Mode mode, FrontierTables& tables);
std::string gamma_d(std::string_view frontier, Mode mode, FrontierTables& tables);
std::string theta(std::string_view frontier, Mode mode, FrontierTables& tables);
std::string pi(std::string_view frontier, Mode mode, FrontierTables& tables);

// Direct mode without a table context.
std::string gamma_s_direct(std::string_view frontier);
std::string gamma_d_direct(std::string_view frontier);
std::string theta_direct(std::string_view frontier);
std::string pi_direct(std::string_view frontier);

// Tables over all pure frontiers of length <= k.
FrontierTables tabulate(int k);

} // namespace cinf

#endif
