#pragma once

// Deliberately naive reimplementations used only by the tests. None of
// these call into the library beyond the plain MeanderType container.

#include <meanderkit/meander.hpp>

#include <map>
#include <numeric>
#include <queue>
#include <vector>

namespace oracle {

struct Arc {
    int u;
    int v;
    bool top;
};

inline std::vector<Arc> arcs(const meanderkit::MeanderType& m)
{
    std::vector<Arc> out;
    auto side = [&](const std::vector<int>& parts, bool top) {
        int left = 1;
        for (int k : parts) {
            int l = left;
            int r = left + k - 1;
            while (l < r) {
                out.push_back({l++, r--, top});
            }
            left += k;
        }
    };
    side(m.top.parts, true);
    side(m.bottom.parts, false);
    return out;
}

/// 2 * cycles + paths - 1 by union-find; a component is a cycle when it
/// has as many arcs as vertices.
inline int index(const meanderkit::MeanderType& m)
{
    const int n = m.order();
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    const auto as = arcs(m);
    for (const auto& a : as) {
        parent[static_cast<std::size_t>(find(a.u))] = find(a.v);
    }
    std::map<int, int> verts;
    std::map<int, int> edges;
    for (int v = 1; v <= n; ++v) {
        ++verts[find(v)];
    }
    for (const auto& a : as) {
        ++edges[find(a.u)];
    }
    int total = -1;
    for (const auto& [root, count] : verts) {
        total += edges[root] == count ? 2 : 1;
    }
    return total;
}

/// Forward minus backward arcs on the route from i to j, found by BFS.
/// Top arcs point to the left, bottom arcs to the right. Returns false if
/// j is unreachable.
inline bool measure(const meanderkit::MeanderType& m, int i, int j, int& out)
{
    const int n = m.order();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& a : arcs(m)) {
        // weight seen when stepping from the first to the second vertex
        const int uv = a.top ? -1 : 1;
        adj[static_cast<std::size_t>(a.u)].push_back({a.v, uv});
        adj[static_cast<std::size_t>(a.v)].push_back({a.u, -uv});
    }
    std::vector<int> dist(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::queue<int> q;
    q.push(i);
    seen[static_cast<std::size_t>(i)] = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (auto [w, wt] : adj[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)] == 0) {
                seen[static_cast<std::size_t>(w)] = 1;
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + wt;
                q.push(w);
            }
        }
    }
    if (seen[static_cast<std::size_t>(j)] == 0) {
        return false;
    }
    out = dist[static_cast<std::size_t>(j)];
    return true;
}

/// Eigenvalue -> multiplicity from measures over admissible pairs, written
/// straight from the definition of an admissible pair.
inline std::map<int, long long> spectrum(const meanderkit::MeanderType& m)
{
    const int n = m.order();
    auto block_ids = [n](const std::vector<int>& parts) {
        std::vector<int> id(static_cast<std::size_t>(n) + 1);
        int v = 1;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            for (int t = 0; t < parts[k]; ++t) {
                id[static_cast<std::size_t>(v++)] = static_cast<int>(k);
            }
        }
        return id;
    };
    const auto top = block_ids(m.top.parts);
    const auto bottom = block_ids(m.bottom.parts);
    std::map<int, long long> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const bool in_top = i >= j && top[static_cast<std::size_t>(i)] == top[static_cast<std::size_t>(j)];
            const bool in_bottom = i < j && bottom[static_cast<std::size_t>(i)] == bottom[static_cast<std::size_t>(j)];
            if (in_top || in_bottom) {
                int e = 0;
                measure(m, i, j, e);
                ++out[e];
            }
        }
    }
    if (--out[0] == 0) {
        out.erase(0);
    }
    return out;
}

inline long long gcd_by_subtraction(long long a, long long b)
{
    if (a == 0) {
        return b;
    }
    while (b != 0) {
        if (a > b) {
            a -= b;
        } else {
            b -= a;
        }
    }
    return a;
}

} // namespace oracle
