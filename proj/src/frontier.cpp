#include "cinf/frontier.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <stdexcept>

namespace cinf {

Frontier Frontier::from_string(std::string_view pure) {
    if (pure.size() > 31)
        throw CapacityExceeded("pure frontier longer than 31 symbols");
    Frontier f;
    f.len = static_cast<int>(pure.size());
    for (int i = 0; i < f.len; ++i) {
        if (pure[i] == '2')
            f.bits |= std::uint32_t{1} << i;
        else if (pure[i] != '1')
            throw std::invalid_argument("pure frontier may contain only '1' and '2'");
    }
    return f;
}

std::string Frontier::str() const {
    std::string s(len, '1');
    for (int i = 0; i < len; ++i)
        if ((bits >> i) & 1)
            s[i] = '2';
    return s;
}

FrontierTables::FrontierTables(int max_len) : max_len_(max_len) {
    if (max_len_ < 0 || max_len_ > 24)
        throw CapacityExceeded("frontier tables limited to length 24 (about 0.5 GB)");
    gs_.assign(1, {0});
    gd_.assign(1, {0});
    th_.assign(1, {0});
    pi_.assign(1, {0});
}

void FrontierTables::ensure(int len) {
    if (len > max_len_)
        throw CapacityExceeded("frontier table capacity exceeded: length " +
                               std::to_string(len) + " > " + std::to_string(max_len_));
    while (built_ < len)
        fill_level(++built_);
}

void FrontierTables::fill_level(int n) {
    const std::uint32_t m = std::uint32_t{1} << n;
    const std::uint32_t pmask = (std::uint32_t{1} << (n - 1)) - 1;
    const std::uint32_t top = std::uint32_t{1} << (n - 1);
    std::vector<std::uint32_t> pi(m), th(m), gs(m), gd(m);
    const auto& pip = pi_[n - 1];
    const auto& thp = th_[n - 1];
    const auto& gsp = gs_[n - 1];
    for (std::uint32_t key = 0; key < m; ++key) {
        std::uint32_t u = key & pmask;
        if (key & top) { // last letter 2
            pi[key] = pip[pip[u]];              // Pi(U2)  = Pi(Pi(U)) 1
            th[key] = thp[u ^ pmask];           // Th(U2)  = Th(comp U) 1
        } else {         // last letter 1
            pi[key] = (pip[u] ^ pmask) | top;   // Pi(U1)  = comp(Pi(U)) 2
            th[key] = thp[thp[u]] | top;        // Th(U1)  = Th(Th(U)) 2
        }
    }
    for (std::uint32_t key = 0; key < m; ++key) {
        std::uint32_t u = key & pmask;
        std::uint32_t x = (key >> (n - 1)) & 1;
        gs[key] = pi[gsp[u] | ((1 - x) << (n - 1))]; // Gs(UX) = Pi(Gs(U) comp(X))
    }
    for (std::uint32_t key = 0; key < m; ++key)
        gd[key] = pi[gs[key]];                       // Gd(U) = Pi(Gs(U))
    pi_.push_back(std::move(pi));
    th_.push_back(std::move(th));
    gs_.push_back(std::move(gs));
    gd_.push_back(std::move(gd));
}

namespace {

// Frontier map values for one prefix, extended letter by letter so that the
// evaluation never recurses deeper than the pure tables.
struct Quad {
    Frontier gs, gd, pi, th;
};

Quad step(FrontierTables& t, const Quad& q, char c) {
    Quad out;
    auto S = [&](Frontier f) { return t.gamma_s(f); };
    auto D = [&](Frontier f) { return t.gamma_d(f); };
    auto P = [&](Frontier f) { return t.pi(f); };
    auto T = [&](Frontier f) { return t.theta(f); };
    switch (c) {
    case '1':
        out.gs = D(S(q.gd)).appended(1);
        out.gd = D(S(D(S(q.gd)))).complemented().appended(2);
        out.pi = q.pi.complemented().appended(2);
        out.th = T(q.th).appended(2);
        break;
    case '2':
        out.gs = q.gd.complemented().appended(2);
        out.gd = D(S(D(S(q.gd.complemented())))).appended(1);
        out.pi = P(q.pi).appended(1);
        out.th = S(q.gd.complemented()).appended(1);
        break;
    case '0':
        out.gs = D(S(q.gd)).complemented().appended(2);
        out.gd = D(S(D(S(D(S(q.gd)).complemented())))).appended(1);
        out.pi = q.pi.appended(1);
        out.th = T(q.th.complemented()).appended(1);
        break;
    default:
        throw std::invalid_argument("frontier may contain only '0', '1' and '2'");
    }
    return out;
}

Quad walk(FrontierTables& t, std::string_view frontier) {
    if (!is_valid_frontier(frontier))
        throw LeadingZero();
    Quad q;
    for (char c : frontier)
        q = step(t, q, c);
    return q;
}

std::string via_word(std::string_view frontier, Rooting rooting) {
    if (frontier.empty())
        return "";
    return left_frontier(min_word(frontier, rooting).reversed());
}

} // namespace

std::string gamma_s_direct(std::string_view frontier) {
    return via_word(frontier, Rooting::Single);
}

std::string gamma_d_direct(std::string_view frontier) {
    return via_word(frontier, Rooting::Double);
}

std::string theta_direct(std::string_view frontier) {
    return gamma_s_direct(gamma_d_direct(frontier));
}

std::string pi_direct(std::string_view frontier) {
    return gamma_d_direct(gamma_s_direct(frontier));
}

std::string gamma_s(std::string_view frontier, Mode mode, FrontierTables& tables) {
    if (mode == Mode::Direct)
        return gamma_s_direct(frontier);
    return walk(tables, frontier).gs.str();
}

std::string gamma_d(std::string_view frontier, Mode mode, FrontierTables& tables) {
    if (mode == Mode::Direct)
        return gamma_d_direct(frontier);
    return walk(tables, frontier).gd.str();
}

std::string theta(std::string_view frontier, Mode mode, FrontierTables& tables) {
    if (mode == Mode::Direct)
        return theta_direct(frontier);
    return walk(tables, frontier).th.str();
}

std::string pi(std::string_view frontier, Mode mode, FrontierTables& tables) {
    if (mode == Mode::Direct)
        return pi_direct(frontier);
    return walk(tables, frontier).pi.str();
}

FrontierTables tabulate(int k) {
    if (k < 1)
        throw std::invalid_argument("tabulate requires k >= 1");
    FrontierTables t(std::max(k, 22));
    t.ensure(k);
    return t;
}

namespace {

constexpr char kMagic[4] = {'C', 'I', 'N', 'F'};
constexpr std::uint32_t kFormatVersion = 1;

void put_u32(std::ofstream& os, std::uint32_t v) {
    std::array<unsigned char, 4> b{static_cast<unsigned char>(v & 0xff),
                                   static_cast<unsigned char>((v >> 8) & 0xff),
                                   static_cast<unsigned char>((v >> 16) & 0xff),
                                   static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b.data()), 4);
}

std::uint32_t get_u32(std::ifstream& is) {
    std::array<unsigned char, 4> b{};
    is.read(reinterpret_cast<char*>(b.data()), 4);
    if (!is)
        throw Error("truncated table cache file");
    return std::uint32_t{b[0]} | (std::uint32_t{b[1]} << 8) | (std::uint32_t{b[2]} << 16) |
           (std::uint32_t{b[3]} << 24);
}

} // namespace

void FrontierTables::save(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error("cannot write table cache: " + path);
    os.write(kMagic, 4);
    put_u32(os, kFormatVersion);
    put_u32(os, static_cast<std::uint32_t>(built_));
    for (const Table* t : {&gs_, &gd_, &th_, &pi_}) {
        for (int n = 1; n <= built_; ++n)
            for (std::uint32_t key = 0; key < (std::uint32_t{1} << n); ++key)
                put_u32(os, (*t)[n][key]);
    }
    if (!os)
        throw Error("failed writing table cache: " + path);
}

FrontierTables FrontierTables::load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw Error("cannot read table cache: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string_view(magic, 4) != std::string_view(kMagic, 4))
        throw Error("not a frontier table cache: " + path);
    std::uint32_t version = get_u32(is);
    if (version != kFormatVersion)
        throw Error("unsupported table cache version " + std::to_string(version));
    int k = static_cast<int>(get_u32(is));
    FrontierTables t(std::max(k, 22));
    for (Table* tab : {&t.gs_, &t.gd_, &t.th_, &t.pi_}) {
        for (int n = 1; n <= k; ++n) {
            std::vector<std::uint32_t> level(std::size_t{1} << n);
            for (auto& v : level)
                v = get_u32(is);
            tab->push_back(std::move(level));
        }
    }
    t.built_ = k;
    return t;
}

} // namespace cinf
