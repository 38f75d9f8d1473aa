#ifndef MEANDERKIT_SPECTRUM_HPP
#define MEANDERKIT_SPECTRUM_HPP

#include <meanderkit/errors.hpp>
#include <meanderkit/meander.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace meanderkit {

/// Meander graph with top arcs oriented leftward and bottom arcs rightward.
/// Each path component carries a potential, so the measure of any pair on
/// it (forward minus backward arcs) is a difference of potentials.
class OrientedMeander {
public:
    explicit OrientedMeander(const MeanderType& m)
        : type_(m),
          graph_(m),
          component_(static_cast<std::size_t>(graph_.order()) + 1, -1),
          potential_(static_cast<std::size_t>(graph_.order()) + 1, 0)
    {
        const int n = graph_.order();
        // Paths first, walked from an endpoint; leftovers are cycles.
        for (int v = 1; v <= n; ++v) {
            if (component_[idx(v)] < 0 && graph_.degree(v) < 2) {
                walk_path(v, static_cast<int>(is_cycle_.size()));
                is_cycle_.push_back(false);
            }
        }
        for (int v = 1; v <= n; ++v) {
            if (component_[idx(v)] < 0) {
                mark_cycle(v, static_cast<int>(is_cycle_.size()));
                is_cycle_.push_back(true);
            }
        }
    }

    [[nodiscard]] const MeanderType& type() const { return type_; }
    [[nodiscard]] const MeanderGraph& graph() const { return graph_; }
    [[nodiscard]] int component_count() const { return static_cast<int>(is_cycle_.size()); }
    [[nodiscard]] bool single_path() const { return is_cycle_.size() == 1 && !is_cycle_.front(); }

    /// Forward minus backward arcs along the unique route from v_i to v_j.
    [[nodiscard]] int measure(int i, int j) const
    {
        const int n = graph_.order();
        if (i < 1 || i > n || j < 1 || j > n) {
            throw PreconditionError("vertex out of range");
        }
        const int ci = component_[idx(i)];
        if (ci != component_[idx(j)]) {
            throw PreconditionError("v" + std::to_string(i) + " and v" + std::to_string(j) +
                                    " lie in different components");
        }
        if (is_cycle_[static_cast<std::size_t>(ci)] && i != j) {
            throw PreconditionError("v" + std::to_string(i) + " and v" + std::to_string(j) +
                                    " lie on a cycle; the route is not unique");
        }
        return potential_[idx(j)] - potential_[idx(i)];
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    // Stepping v -> w gains +1 when the arc points from v to w.
    [[nodiscard]] int orientation(int v, int w, Side side) const
    {
        if (side == Side::Top) {
            return v > w ? 1 : -1;
        }
        return v < w ? 1 : -1;
    }

    void walk_path(int start, int id)
    {
        int v = start;
        component_[idx(v)] = id;
        potential_[idx(v)] = 0;
        // Arcs alternate sides along a path; an endpoint has at most one.
        Side side = graph_.top_partner(v) != 0 ? Side::Top : Side::Bottom;
        while (true) {
            const int next = side == Side::Top ? graph_.top_partner(v) : graph_.bottom_partner(v);
            if (next == 0) {
                break;
            }
            component_[idx(next)] = id;
            potential_[idx(next)] = potential_[idx(v)] + orientation(v, next, side);
            v = next;
            side = side == Side::Top ? Side::Bottom : Side::Top;
        }
    }

    void mark_cycle(int start, int id)
    {
        int v = start;
        while (component_[idx(v)] < 0) {
            component_[idx(v)] = id;
            v = component_[idx(graph_.top_partner(v))] < 0 ? graph_.top_partner(v) : graph_.bottom_partner(v);
        }
    }

    MeanderType type_;
    MeanderGraph graph_;
    std::vector<int> component_;
    std::vector<int> potential_;
    std::vector<bool> is_cycle_;
};

struct AdmissiblePair {
    int i;
    int j;

    friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// (i, j) with i < j in a common bottom block, or i >= j in a common top
/// block. The diagonal is counted once, through the top blocks.
inline std::vector<AdmissiblePair> admissible_pairs(const MeanderType& m)
{
    std::vector<AdmissiblePair> out;
    int start = 1;
    for (int a : m.top.parts) {
        for (int i = start; i < start + a; ++i) {
            for (int j = start; j <= i; ++j) {
                out.push_back({i, j});
            }
        }
        start += a;
    }
    start = 1;
    for (int b : m.bottom.parts) {
        for (int i = start; i < start + b; ++i) {
            for (int j = i + 1; j < start + b; ++j) {
                out.push_back({i, j});
            }
        }
        start += b;
    }
    return out;
}

inline std::int64_t admissible_pair_count(const MeanderType& m)
{
    std::int64_t sq = 0;
    for (int a : m.top.parts) {
        sq += static_cast<std::int64_t>(a) * a;
    }
    for (int b : m.bottom.parts) {
        sq += static_cast<std::int64_t>(b) * b;
    }
    return sq / 2;
}

inline int measure(const MeanderType& m, int i, int j) { return OrientedMeander(m).measure(i, j); }

/// Eigenvalue -> dimension. Zero dimensions are never stored.
struct Spectrum {
    std::map<int, std::int64_t> dims;

    [[nodiscard]] std::int64_t total() const
    {
        std::int64_t t = 0;
        for (const auto& [e, d] : dims) {
            t += d;
        }
        return t;
    }
    [[nodiscard]] std::int64_t dim(int e) const
    {
        auto it = dims.find(e);
        return it == dims.end() ? 0 : it->second;
    }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

inline std::string to_string(const Spectrum& s)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [e, d] : s.dims) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += std::to_string(e) + ":" + std::to_string(d);
    }
    return out + "}";
}

/// Builds a spectrum from a multiset of measures, removing one zero.
inline Spectrum spectrum_from_measures(const std::vector<int>& measures)
{
    Spectrum s;
    for (int e : measures) {
        ++s.dims[e];
    }
    auto zero = s.dims.find(0);
    if (zero == s.dims.end()) {
        throw ConsistencyError("no zero measure to remove");
    }
    if (--zero->second == 0) {
        s.dims.erase(zero);
    }
    return s;
}

namespace detail {

inline void require_frobenius(const OrientedMeander& om)
{
    if (!om.single_path()) {
        throw PreconditionError("not Frobenius (index " + std::to_string(index_naive(om.type())) + ")");
    }
}

} // namespace detail

/// Spectrum of ad F^ computed from the meander alone.
inline Spectrum spectrum(const OrientedMeander& om)
{
    detail::require_frobenius(om);
    const MeanderType& m = om.type();
    Spectrum s;
    int start = 1;
    for (int a : m.top.parts) {
        for (int i = start; i < start + a; ++i) {
            for (int j = start; j <= i; ++j) {
                ++s.dims[om.measure(i, j)];
            }
        }
        start += a;
    }
    start = 1;
    for (int b : m.bottom.parts) {
        for (int i = start; i < start + b; ++i) {
            for (int j = i + 1; j < start + b; ++j) {
                ++s.dims[om.measure(i, j)];
            }
        }
        start += b;
    }
    if (--s.dims[0] == 0) {
        s.dims.erase(0);
    }
    return s;
}

inline Spectrum spectrum(const MeanderType& m) { return spectrum(OrientedMeander(m)); }

struct SpectrumFlags {
    bool symmetric = false;
    bool unbroken = false;
    bool unimodal = false;
    bool strictly_unimodal = false;

    friend bool operator==(const SpectrumFlags&, const SpectrumFlags&) = default;
};

/// symmetric: eigenvalues run over -a..a+1 with dim(e) == dim(1 - e).
/// unbroken: eigenvalues form a contiguous run of integers.
/// unimodal: dims non-decreasing up to 0 and non-increasing from 1 on;
/// strictly_unimodal asks for strict steps on both sides.
/// The empty spectrum satisfies all four.
inline SpectrumFlags classify(const Spectrum& s)
{
    SpectrumFlags f;
    if (s.dims.empty()) {
        return {true, true, true, true};
    }
    const int lo = s.dims.begin()->first;
    const int hi = s.dims.rbegin()->first;

    f.unbroken = static_cast<std::int64_t>(hi) - lo + 1 == static_cast<std::int64_t>(s.dims.size());

    f.symmetric = lo + hi == 1;
    for (int e = lo; f.symmetric && e <= hi; ++e) {
        f.symmetric = s.dim(e) == s.dim(1 - e);
    }

    f.unimodal = true;
    f.strictly_unimodal = true;
    for (int e = lo; e < hi; ++e) {
        if (e == 0) {
            continue;
        }
        const std::int64_t here = s.dim(e);
        const std::int64_t next = s.dim(e + 1);
        if (e < 0) {
            f.unimodal = f.unimodal && here <= next;
            f.strictly_unimodal = f.strictly_unimodal && here < next;
        } else {
            f.unimodal = f.unimodal && here >= next;
            f.strictly_unimodal = f.strictly_unimodal && here > next;
        }
    }
    return f;
}

struct BlockRef {
    Side side;
    int index; ///< 1-based
};

/// Measures of admissible pairs inside one block, plus floor(|block|/2)
/// zeros standing in for the block's share of the diagonal. Sorted.
inline std::vector<int> block_measures(const OrientedMeander& om, BlockRef block)
{
    detail::require_frobenius(om);
    const MeanderType& m = om.type();
    const Composition& comp = block.side == Side::Top ? m.top : m.bottom;
    if (block.index < 1 || block.index > static_cast<int>(comp.size())) {
        throw PreconditionError("block index out of range");
    }
    int start = 1;
    for (int k = 1; k < block.index; ++k) {
        start += comp[static_cast<std::size_t>(k - 1)];
    }
    const int size = comp[static_cast<std::size_t>(block.index - 1)];
    std::vector<int> out(static_cast<std::size_t>(size / 2), 0);
    for (int x = start; x < start + size; ++x) {
        for (int y = x + 1; y < start + size; ++y) {
            // Top: right element first. Bottom: left element first.
            out.push_back(block.side == Side::Top ? om.measure(y, x) : om.measure(x, y));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> block_measures(const MeanderType& m, BlockRef block)
{
    return block_measures(OrientedMeander(m), block);
}

/// Symmetric about 0.5 and unbroken, for a plain multiset of measures.
inline bool symmetric_unbroken(const std::vector<int>& measures)
{
    Spectrum s;
    for (int e : measures) {
        ++s.dims[e];
    }
    SpectrumFlags f = classify(s);
    return f.symmetric && f.unbroken;
}

} // namespace meanderkit

#endif // MEANDERKIT_SPECTRUM_HPP
