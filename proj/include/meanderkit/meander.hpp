#ifndef MEANDERKIT_MEANDER_HPP
#define MEANDERKIT_MEANDER_HPP

#include <meanderkit/errors.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meanderkit {

/// Ordered block sizes along one side of a meander.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p) : parts(p) {}
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

    [[nodiscard]] int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    [[nodiscard]] std::size_t size() const { return parts.size(); }
    [[nodiscard]] bool empty() const { return parts.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return parts[i]; }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// The type a1|...|al over b1|...|bm. The empty meander has two empty
/// compositions.
struct MeanderType {
    Composition top;
    Composition bottom;

    MeanderType() = default;
    MeanderType(Composition t, Composition b) : top(std::move(t)), bottom(std::move(b)) { validate(); }

    [[nodiscard]] int order() const { return top.total(); }
    [[nodiscard]] bool empty() const { return top.empty() && bottom.empty(); }
    [[nodiscard]] std::size_t block_count() const { return top.size() + bottom.size(); }

    [[nodiscard]] MeanderType flipped() const { return MeanderType(bottom, top); }

    friend bool operator==(const MeanderType&, const MeanderType&) = default;
    friend auto operator<=>(const MeanderType&, const MeanderType&) = default;

private:
    void validate() const
    {
        auto check = [](const Composition& c) {
            for (int p : c.parts) {
                if (p < 1) {
                    throw PreconditionError("block sizes must be positive");
                }
            }
        };
        check(top);
        check(bottom);
        if (top.total() != bottom.total()) {
            throw PreconditionError("top and bottom sums differ: " + std::to_string(top.total()) + " vs " +
                                    std::to_string(bottom.total()));
        }
    }
};

inline std::string to_string(const Composition& c)
{
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) {
            out += '|';
        }
        out += std::to_string(c[i]);
    }
    return out;
}

inline std::string to_string(const MeanderType& m) { return to_string(m.top) + "/" + to_string(m.bottom); }

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

inline Composition parse_composition(std::string_view text, std::string_view whole)
{
    text = trim(text);
    if (text.empty()) {
        throw ParseError("empty composition in '" + std::string(whole) + "'");
    }
    Composition c;
    std::size_t pos = 0;
    while (true) {
        std::size_t bar = text.find('|', pos);
        std::string_view tok = trim(text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw ParseError("malformed block size '" + std::string(tok) + "' in '" + std::string(whole) + "'");
        }
        if (value < 1) {
            throw ParseError("block size must be at least 1 in '" + std::string(whole) + "'");
        }
        c.parts.push_back(value);
        if (bar == std::string_view::npos) {
            break;
        }
        pos = bar + 1;
    }
    return c;
}

} // namespace detail

/// Parses `comp "/" comp` where `comp := int ("|" int)*`.
inline MeanderType parse_type(std::string_view text)
{
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos) {
        throw ParseError("expected exactly one '/' in '" + std::string(text) + "'");
    }
    Composition top = detail::parse_composition(text.substr(0, slash), text);
    Composition bottom = detail::parse_composition(text.substr(slash + 1), text);
    if (top.total() != bottom.total()) {
        throw ParseError("sum mismatch in '" + std::string(text) + "': top " + std::to_string(top.total()) +
                         ", bottom " + std::to_string(bottom.total()));
    }
    return MeanderType(std::move(top), std::move(bottom));
}

enum class Side { Top, Bottom };

struct Edge {
    int u;
    int v;
    Side side;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Arc diagram of a meander. Vertices are 1..n; a partner of 0 means the
/// vertex has no arc on that side.
class MeanderGraph {
public:
    explicit MeanderGraph(const MeanderType& m)
        : n_(m.order()), top_(static_cast<std::size_t>(n_) + 1, 0), bottom_(static_cast<std::size_t>(n_) + 1, 0)
    {
        fill(m.top, top_);
        fill(m.bottom, bottom_);
    }

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] int top_partner(int v) const { return top_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int bottom_partner(int v) const { return bottom_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int degree(int v) const { return (top_partner(v) != 0 ? 1 : 0) + (bottom_partner(v) != 0 ? 1 : 0); }

    /// Edges sorted by side then left endpoint.
    [[nodiscard]] std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int v = 1; v <= n_; ++v) {
            if (top_partner(v) > v) {
                out.push_back({v, top_partner(v), Side::Top});
            }
        }
        for (int v = 1; v <= n_; ++v) {
            if (bottom_partner(v) > v) {
                out.push_back({v, bottom_partner(v), Side::Bottom});
            }
        }
        return out;
    }

private:
    static void fill(const Composition& c, std::vector<int>& partner)
    {
        int start = 1;
        for (int k : c.parts) {
            for (int i = 0; i < k / 2; ++i) {
                partner[static_cast<std::size_t>(start + i)] = start + k - 1 - i;
                partner[static_cast<std::size_t>(start + k - 1 - i)] = start + i;
            }
            start += k;
        }
    }

    int n_;
    std::vector<int> top_;
    std::vector<int> bottom_;
};

inline MeanderGraph build_graph(const MeanderType& m) { return MeanderGraph(m); }

struct ComponentSummary {
    int cycles = 0;
    int paths = 0;

    friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

inline ComponentSummary components(const MeanderGraph& g)
{
    ComponentSummary s;
    std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
    std::vector<int> stack;
    for (int start = 1; start <= g.order(); ++start) {
        if (seen[static_cast<std::size_t>(start)] != 0) {
            continue;
        }
        bool cycle = true;
        stack.assign(1, start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (g.degree(v) != 2) {
                cycle = false;
            }
            for (int w : {g.top_partner(v), g.bottom_partner(v)}) {
                if (w != 0 && seen[static_cast<std::size_t>(w)] == 0) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (cycle) {
            ++s.cycles;
        } else {
            ++s.paths;
        }
    }
    return s;
}

inline ComponentSummary components(const MeanderType& m) { return components(build_graph(m)); }

/// 2 * cycles + paths - 1, straight from the component count. The empty
/// meander gets -1.
inline int index_naive(const MeanderType& m)
{
    ComponentSummary s = components(m);
    return 2 * s.cycles + s.paths - 1;
}

} // namespace meanderkit

#endif // MEANDERKIT_MEANDER_HPP
