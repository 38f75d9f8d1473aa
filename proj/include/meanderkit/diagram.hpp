#ifndef MEANDERKIT_DIAGRAM_HPP
#define MEANDERKIT_DIAGRAM_HPP

#include <meanderkit/meander.hpp>
#include <meanderkit/winding.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace meanderkit {

namespace detail {

struct DrawnArc {
    int u;
    int v;
    int height; ///< 1 for the innermost arc of a block
};

inline std::vector<DrawnArc> drawn_arcs(const Composition& c)
{
    std::vector<DrawnArc> out;
    int start = 1;
    for (int k : c.parts) {
        for (int i = 0; i < k / 2; ++i) {
            out.push_back({start + i, start + k - 1 - i, k / 2 - i});
        }
        start += k;
    }
    return out;
}

inline int max_height(const std::vector<DrawnArc>& arcs)
{
    int h = 0;
    for (const auto& a : arcs) {
        h = std::max(h, a.height);
    }
    return h;
}

/// Rows of one side, nearest the vertex line first.
inline std::vector<std::string> arc_rows(const Composition& c, int n, char corner)
{
    const auto arcs = drawn_arcs(c);
    const int height = max_height(arcs);
    const auto width = static_cast<std::size_t>(std::max(1, 2 * n - 1));
    std::vector<std::string> rows(static_cast<std::size_t>(height), std::string(width, ' '));
    for (const auto& a : arcs) {
        const auto xu = static_cast<std::size_t>(2 * (a.u - 1));
        const auto xv = static_cast<std::size_t>(2 * (a.v - 1));
        for (int r = 1; r < a.height; ++r) {
            rows[static_cast<std::size_t>(r - 1)][xu] = '|';
            rows[static_cast<std::size_t>(r - 1)][xv] = '|';
        }
        std::string& top = rows[static_cast<std::size_t>(a.height - 1)];
        for (std::size_t x = xu; x <= xv; ++x) {
            top[x] = '-';
        }
        top[xu] = corner;
        top[xv] = corner;
    }
    for (auto& row : rows) {
        row.erase(row.find_last_not_of(' ') + 1);
    }
    return rows;
}

} // namespace detail

/// Top arcs above the vertex line, bottom arcs below.
inline std::string ascii_diagram(const MeanderType& m)
{
    const int n = m.order();
    std::string out = to_string(m) + "\n";
    const auto top = detail::arc_rows(m.top, n, '.');
    for (auto it = top.rbegin(); it != top.rend(); ++it) {
        out += *it + "\n";
    }
    std::string line;
    for (int v = 1; v <= n; ++v) {
        line += v == 1 ? "o" : " o";
    }
    out += line + "\n";
    for (const auto& row : detail::arc_rows(m.bottom, n, '\'')) {
        out += row + "\n";
    }
    return out;
}

/// One line per winding-down step: the meander, then the move applied to it.
inline std::string signature_trace(const MeanderType& m, bool refined)
{
    std::string out;
    MeanderType cur = m;
    std::size_t width = to_string(m).size();
    std::vector<std::pair<std::string, std::string>> lines;
    while (!cur.empty()) {
        std::string move;
        if (refined) {
            auto step = step_refined(cur);
            move = to_string(step.move);
            lines.emplace_back(to_string(cur), move);
            cur = std::move(step.next);
        } else {
            auto step = step_simplified(cur);
            move = to_string(step.move);
            lines.emplace_back(to_string(cur), move);
            cur = std::move(step.next);
        }
        width = std::max(width, lines.back().first.size());
    }
    for (const auto& [type, move] : lines) {
        out += type + std::string(width - type.size() + 2, ' ') + move + "\n";
    }
    return out;
}

inline std::string svg_diagram(const MeanderType& m)
{
    const int n = m.order();
    const int step = 40;
    const auto top = detail::drawn_arcs(m.top);
    const auto bottom = detail::drawn_arcs(m.bottom);
    const int up = (detail::max_height(top) + 1) * step / 2;
    const int down = (detail::max_height(bottom) + 1) * step / 2;
    const int width = (n + 1) * step;
    const int height = up + down + step / 2;
    const int base = up + step / 4;
    auto x = [&](int v) { return v * step; };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    out += "  <title>" + to_string(m) + "</title>\n";
    out += "  <g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    auto arc = [&](const detail::DrawnArc& a, int sweep) {
        const int rx = (x(a.v) - x(a.u)) / 2;
        const int ry = a.height * step / 2;
        out += "    <path d=\"M " + std::to_string(x(a.u)) + " " + std::to_string(base) + " A " + std::to_string(rx) +
               " " + std::to_string(ry) + " 0 0 " + std::to_string(sweep) + " " + std::to_string(x(a.v)) + " " +
               std::to_string(base) + "\"/>\n";
    };
    for (const auto& a : top) {
        arc(a, 1);
    }
    for (const auto& a : bottom) {
        arc(a, 0);
    }
    out += "  </g>\n  <g fill=\"black\">\n";
    for (int v = 1; v <= n; ++v) {
        out += "    <circle cx=\"" + std::to_string(x(v)) + "\" cy=\"" + std::to_string(base) + "\" r=\"4\"/>\n";
    }
    out += "  </g>\n</svg>\n";
    return out;
}

} // namespace meanderkit

#endif // MEANDERKIT_DIAGRAM_HPP
