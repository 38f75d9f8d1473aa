#ifndef MEANDERKIT_WINDING_HPP
#define MEANDERKIT_WINDING_HPP

#include <meanderkit/enumeration.hpp>
#include <meanderkit/errors.hpp>
#include <meanderkit/meander.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace meanderkit {

// ---------------------------------------------------------------------------
// Move alphabets
// ---------------------------------------------------------------------------

/// Five-case reduction: Flip, Component elimination, Block elimination,
/// Rotation contraction, Pure contraction.
enum class SimplifiedTag { F0, C0, B0, R0, P0 };

struct SimplifiedMove {
    SimplifiedTag tag = SimplifiedTag::F0;
    int c = 0; ///< component size, C0 only

    friend bool operator==(const SimplifiedMove&, const SimplifiedMove&) = default;
};

/// Refined reduction. F, C, B, R mirror the simplified moves; IC, IB, IR are
/// the internal moves that act around the centre of the first top block.
/// P is the pure contraction, kept for the one configuration the internal
/// moves do not cover: the bottom block straddling the centre of A1 reaches
/// past A1.
enum class RefinedTag { F, C, B, R, IC, IB, IR, P };

struct RefinedMove {
    RefinedTag tag = RefinedTag::F;
    int c = 0;     ///< component size, C and IC
    int block = 0; ///< 1-based bottom block index for IC, IB, IR; 0 if unknown

    friend bool operator==(const RefinedMove&, const RefinedMove&) = default;
};

template <class Move>
struct Signature {
    std::vector<Move> moves;

    [[nodiscard]] std::size_t size() const { return moves.size(); }
    [[nodiscard]] bool empty() const { return moves.empty(); }

    friend bool operator==(const Signature&, const Signature&) = default;
};

using SimplifiedSignature = Signature<SimplifiedMove>;
using RefinedSignature = Signature<RefinedMove>;

template <class Move>
struct Step {
    Move move;
    MeanderType next;
};

inline bool eliminates_component(const SimplifiedMove& m) { return m.tag == SimplifiedTag::C0; }
inline bool eliminates_component(const RefinedMove& m) { return m.tag == RefinedTag::C || m.tag == RefinedTag::IC; }

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

inline std::string to_string(const SimplifiedMove& m)
{
    switch (m.tag) {
    case SimplifiedTag::F0: return "F0";
    case SimplifiedTag::C0: return "C0(" + std::to_string(m.c) + ")";
    case SimplifiedTag::B0: return "B0";
    case SimplifiedTag::R0: return "R0";
    case SimplifiedTag::P0: return "P0";
    }
    return "?";
}

inline std::string to_string(const RefinedMove& m)
{
    switch (m.tag) {
    case RefinedTag::F: return "F";
    case RefinedTag::C: return "C(" + std::to_string(m.c) + ")";
    case RefinedTag::B: return "B";
    case RefinedTag::R: return "R";
    case RefinedTag::IC: return "IC(" + std::to_string(m.c) + ")";
    case RefinedTag::IB: return "IB";
    case RefinedTag::IR: return "IR";
    case RefinedTag::P: return "P";
    }
    return "?";
}

template <class Move>
std::string to_string(const Signature<Move>& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.moves.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += to_string(s.moves[i]);
    }
    return out;
}

/// Up-move spelling: `~` prefix; IB and IR carry their bottom block index.
inline std::string to_up_string(const SimplifiedMove& m) { return "~" + to_string(m); }

inline std::string to_up_string(const RefinedMove& m)
{
    if ((m.tag == RefinedTag::IB || m.tag == RefinedTag::IR) && m.block != 0) {
        return "~" + to_string(m) + "(" + std::to_string(m.block) + ")";
    }
    return "~" + to_string(m);
}

template <class Move>
std::string to_up_string(std::span<const Move> seq)
{
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += to_up_string(seq[i]);
    }
    return out;
}

template <class Move>
std::string to_up_string(const std::vector<Move>& seq)
{
    return to_up_string(std::span<const Move>(seq));
}

/// A parsed up-move sequence; the alphabet is fixed by the tokens.
using UpSequence = std::variant<std::vector<SimplifiedMove>, std::vector<RefinedMove>>;

namespace detail {

struct MoveToken {
    bool up = false;
    std::string name;
    bool has_param = false;
    int param = 0;
};

inline std::vector<MoveToken> tokenize_moves(std::string_view text)
{
    std::vector<MoveToken> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        MoveToken t;
        std::string_view rest = tok;
        if (!rest.empty() && rest.front() == '~') {
            t.up = true;
            rest.remove_prefix(1);
        }
        std::size_t open = rest.find('(');
        t.name = std::string(rest.substr(0, open));
        if (open != std::string_view::npos) {
            if (rest.back() != ')') {
                throw ParseError("unterminated parameter in move '" + tok + "'");
            }
            std::string_view num = rest.substr(open + 1, rest.size() - open - 2);
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), t.param);
            if (num.empty() || ec != std::errc() || ptr != num.data() + num.size() || t.param < 1) {
                throw ParseError("malformed parameter in move '" + tok + "'");
            }
            t.has_param = true;
        }
        if (t.name.empty()) {
            throw ParseError("empty move name in '" + tok + "'");
        }
        out.push_back(std::move(t));
    }
    return out;
}

inline bool is_simplified_name(const std::string& name) { return name.size() == 2 && name[1] == '0'; }

inline SimplifiedMove to_simplified(const MoveToken& t)
{
    static constexpr std::pair<std::string_view, SimplifiedTag> names[] = {
        {"F0", SimplifiedTag::F0}, {"C0", SimplifiedTag::C0}, {"B0", SimplifiedTag::B0},
        {"R0", SimplifiedTag::R0}, {"P0", SimplifiedTag::P0}};
    for (auto [name, tag] : names) {
        if (t.name == name) {
            if ((tag == SimplifiedTag::C0) != t.has_param) {
                throw ParseError("move " + t.name + (t.has_param ? " takes no parameter" : " needs a parameter"));
            }
            return {tag, t.param};
        }
    }
    throw ParseError("unknown simplified move '" + t.name + "'");
}

inline RefinedMove to_refined(const MoveToken& t)
{
    static constexpr std::pair<std::string_view, RefinedTag> names[] = {
        {"F", RefinedTag::F},   {"C", RefinedTag::C},   {"B", RefinedTag::B},   {"R", RefinedTag::R},
        {"IC", RefinedTag::IC}, {"IB", RefinedTag::IB}, {"IR", RefinedTag::IR}, {"P", RefinedTag::P}};
    for (auto [name, tag] : names) {
        if (t.name != name) {
            continue;
        }
        const bool counted = tag == RefinedTag::C || tag == RefinedTag::IC;
        if (counted) {
            if (!t.has_param) {
                throw ParseError("move " + t.name + " needs a parameter");
            }
            return {tag, t.param, 0};
        }
        if (tag == RefinedTag::IB || tag == RefinedTag::IR) {
            if (t.has_param && !t.up) {
                throw ParseError("down move " + t.name + " takes no parameter");
            }
            if (tag == RefinedTag::IB && t.up && !t.has_param) {
                throw ParseError("~IB needs its bottom block index, e.g. ~IB(2)");
            }
            return {tag, 0, t.has_param ? t.param : 0};
        }
        if (t.has_param) {
            throw ParseError("move " + t.name + " takes no parameter");
        }
        return {tag, 0, 0};
    }
    throw ParseError("unknown refined move '" + t.name + "'");
}

} // namespace detail

inline SimplifiedSignature parse_simplified_signature(std::string_view text)
{
    SimplifiedSignature s;
    for (const auto& t : detail::tokenize_moves(text)) {
        if (t.up) {
            throw ParseError("signature moves are written without '~'");
        }
        s.moves.push_back(detail::to_simplified(t));
    }
    return s;
}

inline RefinedSignature parse_refined_signature(std::string_view text)
{
    RefinedSignature s;
    for (const auto& t : detail::tokenize_moves(text)) {
        if (t.up) {
            throw ParseError("signature moves are written without '~'");
        }
        s.moves.push_back(detail::to_refined(t));
    }
    return s;
}

inline UpSequence parse_up_sequence(std::string_view text)
{
    auto tokens = detail::tokenize_moves(text);
    if (tokens.empty()) {
        throw ParseError("empty up-move sequence");
    }
    for (const auto& t : tokens) {
        if (!t.up) {
            throw ParseError("up-moves are written with a '~' prefix: '" + t.name + "'");
        }
    }
    const bool simplified = detail::is_simplified_name(tokens.front().name);
    for (const auto& t : tokens) {
        if (detail::is_simplified_name(t.name) != simplified) {
            throw ParseError("up-move sequence mixes the simplified and refined alphabets");
        }
    }
    if (simplified) {
        std::vector<SimplifiedMove> seq;
        for (const auto& t : tokens) {
            seq.push_back(detail::to_simplified(t));
        }
        return seq;
    }
    std::vector<RefinedMove> seq;
    for (const auto& t : tokens) {
        seq.push_back(detail::to_refined(t));
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Winding down
// ---------------------------------------------------------------------------

namespace detail {

/// Both compositions stored back to front so every simplified move is O(1).
class Deck {
public:
    explicit Deck(const MeanderType& m)
        : top_(m.top.parts.rbegin(), m.top.parts.rend()), bottom_(m.bottom.parts.rbegin(), m.bottom.parts.rend())
    {
    }

    [[nodiscard]] bool empty() const { return top_.empty(); }

    [[nodiscard]] MeanderType to_type() const
    {
        return MeanderType(Composition(std::vector<int>(top_.rbegin(), top_.rend())),
                           Composition(std::vector<int>(bottom_.rbegin(), bottom_.rend())));
    }

    SimplifiedMove step()
    {
        const int a = top_.back();
        const int b = bottom_.back();
        if (a < b) {
            top_.swap(bottom_);
            return {SimplifiedTag::F0, 0};
        }
        if (a == b) {
            top_.pop_back();
            bottom_.pop_back();
            return {SimplifiedTag::C0, a};
        }
        if (a == 2 * b) {
            top_.back() = b;
            bottom_.pop_back();
            return {SimplifiedTag::B0, 0};
        }
        if (a < 2 * b) {
            top_.back() = b;
            bottom_.back() = 2 * b - a;
            return {SimplifiedTag::R0, 0};
        }
        top_.back() = b;
        top_.push_back(a - 2 * b);
        bottom_.pop_back();
        return {SimplifiedTag::P0, 0};
    }

private:
    std::vector<int> top_;
    std::vector<int> bottom_;
};

} // namespace detail

inline Step<SimplifiedMove> step_simplified(const MeanderType& m)
{
    if (m.empty()) {
        throw PreconditionError("cannot wind down the empty meander");
    }
    detail::Deck deck(m);
    SimplifiedMove move = deck.step();
    return {move, deck.to_type()};
}

/// Runs in time linear in the order of the meander.
inline SimplifiedSignature signature_simplified(const MeanderType& m)
{
    SimplifiedSignature s;
    detail::Deck deck(m);
    while (!deck.empty()) {
        s.moves.push_back(deck.step());
    }
    return s;
}

inline Step<RefinedMove> step_refined(const MeanderType& m)
{
    if (m.empty()) {
        throw PreconditionError("cannot wind down the empty meander");
    }
    std::vector<int> top = m.top.parts;
    std::vector<int> bottom = m.bottom.parts;
    const int a1 = top.front();
    const int b1 = bottom.front();
    auto done = [&](RefinedMove move) {
        return Step<RefinedMove>{move, MeanderType(Composition(std::move(top)), Composition(std::move(bottom)))};
    };

    if (a1 < b1) {
        top.swap(bottom);
        return done({RefinedTag::F, 0, 0});
    }
    if (a1 == b1) {
        top.erase(top.begin());
        bottom.erase(bottom.begin());
        return done({RefinedTag::C, a1, 0});
    }
    if (a1 == 2 * b1) {
        top.front() = b1;
        bottom.erase(bottom.begin());
        return done({RefinedTag::B, 0, 0});
    }
    if (a1 < 2 * b1) {
        top.front() = b1;
        bottom.front() = 2 * b1 - a1;
        return done({RefinedTag::R, 0, 0});
    }

    // a1 > 2 b1. Positions are doubled so the centre of A1 is the integer a1 + 1.
    const int center2 = a1 + 1;
    int start = 1;
    for (std::size_t i = 0; i < bottom.size(); ++i) {
        const int p = start;
        const int q = start + bottom[i] - 1;
        const int block = static_cast<int>(i) + 1;
        if (a1 % 2 == 0 && q == a1 / 2) {
            // v_{a1/2} closes B_i and v_{a1/2+1} opens B_{i+1}.
            const int bi = bottom[i];
            top.front() = a1 - bi;
            bottom.erase(bottom.begin() + static_cast<std::ptrdiff_t>(i));
            return done({RefinedTag::IB, 0, block});
        }
        if (2 * p <= center2 && center2 <= 2 * q) {
            const int bi = bottom[i];
            if (p + q == center2) {
                top.front() = a1 - bi;
                bottom.erase(bottom.begin() + static_cast<std::ptrdiff_t>(i));
                return done({RefinedTag::IC, bi, block});
            }
            if (q > a1) {
                top.front() = b1;
                top.insert(top.begin(), a1 - 2 * b1);
                bottom.erase(bottom.begin());
                return done({RefinedTag::P, 0, 0});
            }
            const int near2 = std::min(center2 - 2 * p, 2 * q - center2);
            const int s = near2 + 1;
            top.front() = a1 - bi + s;
            bottom[i] = s;
            return done({RefinedTag::IR, 0, block});
        }
        start = q + 1;
    }
    throw ConsistencyError("no bottom block covers the centre of A1 in " + to_string(m));
}

inline RefinedSignature signature_refined(const MeanderType& m)
{
    RefinedSignature s;
    MeanderType cur = m;
    while (!cur.empty()) {
        auto step = step_refined(cur);
        s.moves.push_back(step.move);
        cur = std::move(step.next);
    }
    return s;
}

/// Sum of the component-elimination parameters minus one.
template <class Move>
int index_from_signature(const Signature<Move>& s)
{
    int total = 0;
    for (const auto& m : s.moves) {
        if (eliminates_component(m)) {
            total += m.c;
        }
    }
    return total - 1;
}

/// Frobenius iff the only component elimination is the last move, with
/// parameter 1.
template <class Move>
bool is_frobenius(const Signature<Move>& s)
{
    if (s.moves.empty()) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < s.moves.size(); ++i) {
        if (eliminates_component(s.moves[i])) {
            return false;
        }
    }
    const auto& last = s.moves.back();
    return eliminates_component(last) && last.c == 1;
}

// ---------------------------------------------------------------------------
// Plane homotopy type
// ---------------------------------------------------------------------------

/// Picture of a component at the moment it is eliminated: c/2 nested
/// circles, plus a centre point when c is odd.
struct HomotopySymbol {
    int c = 0;

    [[nodiscard]] int nested_cycles() const { return c / 2; }
    [[nodiscard]] bool has_center_path() const { return c % 2 == 1; }

    friend bool operator==(const HomotopySymbol&, const HomotopySymbol&) = default;
};

/// Multiset of symbols, kept sorted by decreasing c.
struct PlaneHomotopyType {
    std::vector<HomotopySymbol> symbols;

    friend bool operator==(const PlaneHomotopyType&, const PlaneHomotopyType&) = default;
};

inline PlaneHomotopyType homotopy_type(const SimplifiedSignature& s)
{
    PlaneHomotopyType h;
    for (const auto& m : s.moves) {
        if (eliminates_component(m)) {
            h.symbols.push_back({m.c});
        }
    }
    std::sort(h.symbols.begin(), h.symbols.end(), [](auto x, auto y) { return x.c > y.c; });
    return h;
}

inline PlaneHomotopyType homotopy_type(const MeanderType& m) { return homotopy_type(signature_simplified(m)); }

inline std::string to_string(const HomotopySymbol& s)
{
    std::string out = std::to_string(s.nested_cycles()) + (s.nested_cycles() == 1 ? " circle" : " circles");
    if (s.has_center_path()) {
        out += " + point";
    }
    return out;
}

inline std::string to_string(const PlaneHomotopyType& h)
{
    std::string out = "{";
    for (std::size_t i = 0; i < h.symbols.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += "C(" + std::to_string(h.symbols[i].c) + "): " + to_string(h.symbols[i]);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Winding up
// ---------------------------------------------------------------------------

namespace detail {

inline int checked_size(long long v)
{
    if (v > INT_MAX) {
        throw PreconditionError("block size overflow");
    }
    return static_cast<int>(v);
}

inline MeanderType make_type(std::vector<int> top, std::vector<int> bottom)
{
    return MeanderType(Composition(std::move(top)), Composition(std::move(bottom)));
}

struct BlockSpan {
    int first;
    int last;
};

inline std::vector<BlockSpan> block_spans(const Composition& c)
{
    std::vector<BlockSpan> out;
    int start = 1;
    for (int k : c.parts) {
        out.push_back({start, start + k - 1});
        start += k;
    }
    return out;
}

inline void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw PreconditionError(what);
    }
}

} // namespace detail

/// Inverse of the simplified move `move` applied to m.
inline MeanderType apply_up(const MeanderType& m, const SimplifiedMove& move)
{
    using detail::require;
    if (move.tag == SimplifiedTag::C0) {
        require(move.c >= 1, "~C0 needs c >= 1");
        std::vector<int> top{move.c};
        std::vector<int> bottom{move.c};
        top.insert(top.end(), m.top.parts.begin(), m.top.parts.end());
        bottom.insert(bottom.end(), m.bottom.parts.begin(), m.bottom.parts.end());
        return detail::make_type(std::move(top), std::move(bottom));
    }
    require(!m.empty(), "the first move must be a component creation ~C0(c)");
    std::vector<int> top = m.top.parts;
    std::vector<int> bottom = m.bottom.parts;
    const int a1 = top.front();
    const int b1 = bottom.front();
    switch (move.tag) {
    case SimplifiedTag::F0:
        require(a1 > b1, "~F0 needs a1 > b1");
        return detail::make_type(std::move(bottom), std::move(top));
    case SimplifiedTag::B0:
        top.front() = detail::checked_size(2LL * a1);
        bottom.insert(bottom.begin(), a1);
        return detail::make_type(std::move(top), std::move(bottom));
    case SimplifiedTag::R0:
        require(a1 > b1, "~R0 needs a1 > b1");
        top.front() = detail::checked_size(2LL * a1 - b1);
        bottom.front() = a1;
        return detail::make_type(std::move(top), std::move(bottom));
    case SimplifiedTag::P0: {
        require(top.size() >= 2, "~P0 needs at least two top blocks");
        const int y = top[1];
        top.erase(top.begin() + 1);
        top.front() = detail::checked_size(static_cast<long long>(a1) + 2LL * y);
        bottom.insert(bottom.begin(), y);
        return detail::make_type(std::move(top), std::move(bottom));
    }
    case SimplifiedTag::C0: break;
    }
    throw ConsistencyError("unreachable simplified up-move");
}

namespace detail {

inline MeanderType raw_up_refined(const MeanderType& m, const RefinedMove& move, int& resolved_block)
{
    resolved_block = move.block;
    if (move.tag == RefinedTag::C) {
        return apply_up(m, SimplifiedMove{SimplifiedTag::C0, move.c});
    }
    require(!m.empty(), "the first move must be a component creation ~C(c)");
    std::vector<int> top = m.top.parts;
    std::vector<int> bottom = m.bottom.parts;
    const int a1 = top.front();
    const int b1 = bottom.front();
    const auto spans = block_spans(m.bottom);
    switch (move.tag) {
    case RefinedTag::F: return apply_up(m, SimplifiedMove{SimplifiedTag::F0, 0});
    case RefinedTag::B: return apply_up(m, SimplifiedMove{SimplifiedTag::B0, 0});
    case RefinedTag::R: return apply_up(m, SimplifiedMove{SimplifiedTag::R0, 0});
    case RefinedTag::P: return apply_up(m, SimplifiedMove{SimplifiedTag::P0, 0});
    case RefinedTag::IC: {
        require(move.c >= 1, "~IC needs c >= 1");
        require(a1 % 2 == 0, "~IC needs a1 even");
        auto it = std::find_if(spans.begin(), spans.end(), [&](const BlockSpan& s) { return s.last == a1 / 2; });
        require(it != spans.end(), "~IC needs v_{a1/2} to be the right-most vertex of a bottom block");
        const auto j = static_cast<std::ptrdiff_t>(it - spans.begin());
        resolved_block = static_cast<int>(j) + 2;
        top.front() = checked_size(static_cast<long long>(a1) + move.c);
        bottom.insert(bottom.begin() + j + 1, move.c);
        return make_type(std::move(top), std::move(bottom));
    }
    case RefinedTag::IB: {
        const int b = move.block;
        require(b >= 2 && b <= static_cast<int>(bottom.size()), "~IB(b) needs 2 <= b <= number of bottom blocks");
        require(a1 > 2 * b1, "~IB needs a1 > 2 b1");
        const int k = spans[static_cast<std::size_t>(b - 1)].first;
        require(2 * k <= a1 + 1, "~IB(b) needs B_b to start at or before the centre of A1");
        const int s = a1 - 2 * (k - 1);
        top.front() = checked_size(static_cast<long long>(a1) + s);
        bottom.insert(bottom.begin() + (b - 1), s);
        return make_type(std::move(top), std::move(bottom));
    }
    case RefinedTag::IR: {
        const int center2 = a1 + 1;
        int j = move.block;
        if (j == 0) {
            for (const auto& s : spans) {
                require(s.first + s.last != center2, "~IR needs the centre of A1 not to be the centre of a bottom block");
                require(a1 % 2 != 0 || s.last != a1 / 2,
                        "~IR needs v_{a1/2} not to be the right-most vertex of a bottom block");
            }
            auto it = std::find_if(spans.begin(), spans.end(),
                                   [&](const BlockSpan& s) { return 2 * s.first <= center2 && center2 <= 2 * s.last; });
            j = static_cast<int>(it - spans.begin()) + 1;
            resolved_block = j;
        }
        require(j >= 1 && j <= static_cast<int>(bottom.size()), "~IR(j) block index out of range");
        const auto& span = spans[static_cast<std::size_t>(j - 1)];
        require(span.last <= a1, "~IR needs B_j inside A1");
        const int r = std::abs(center2 - (span.first + span.last));
        require(r > 0, "~IR needs B_j off-centre in A1");
        top.front() = checked_size(static_cast<long long>(a1) + r);
        bottom[static_cast<std::size_t>(j - 1)] += r;
        return make_type(std::move(top), std::move(bottom));
    }
    case RefinedTag::C: break;
    }
    throw ConsistencyError("unreachable refined up-move");
}

} // namespace detail

/// Inverse of the refined move `move` applied to m. Beyond the listed
/// preconditions of each move, the result is accepted only if one refined
/// winding-down step takes it back to m with the same move.
inline MeanderType apply_up(const MeanderType& m, const RefinedMove& move)
{
    int block = 0;
    MeanderType result = detail::raw_up_refined(m, move, block);
    auto back = step_refined(result);
    const bool same = back.move.tag == move.tag && back.next == m &&
                      (!eliminates_component(move) || back.move.c == move.c) &&
                      (move.tag != RefinedTag::IB && move.tag != RefinedTag::IR ? true : back.move.block == block);
    if (!same) {
        throw PreconditionError(to_up_string(move) + " on " + to_string(m) + " gives " + to_string(result) +
                                ", which winds down by " + to_string(back.move) + " instead");
    }
    return result;
}

template <class Move>
MeanderType wind_up(std::span<const Move> seq)
{
    MeanderType m;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        try {
            m = apply_up(m, seq[k]);
        } catch (const PreconditionError& e) {
            throw PreconditionError("up-move " + std::to_string(k + 1) + " (" + to_up_string(seq[k]) + "): " + e.what());
        }
    }
    return m;
}

template <class Move>
MeanderType wind_up(const std::vector<Move>& seq)
{
    return wind_up(std::span<const Move>(seq));
}

inline MeanderType wind_up(const UpSequence& seq)
{
    return std::visit([](const auto& v) { return wind_up(v); }, seq);
}

/// Up-moves that rebuild a meander from nothing: the signature reversed.
template <class Move>
std::vector<Move> up_sequence(const Signature<Move>& s)
{
    return {s.moves.rbegin(), s.moves.rend()};
}

// ---------------------------------------------------------------------------
// Frobenius generation
// ---------------------------------------------------------------------------

/// ~C(1) followed by `moves` random applicable up-moves drawn from
/// {~F, ~B, ~R, ~IB, ~IR}. Draws whose preconditions fail are skipped.
inline std::vector<RefinedMove> generate_frobenius_sequence(int moves, std::uint64_t seed)
{
    if (moves < 0) {
        throw PreconditionError("moves must be non-negative");
    }
    std::mt19937_64 rng(seed);
    std::vector<RefinedMove> seq{{RefinedTag::C, 1, 0}};
    MeanderType m = apply_up(MeanderType{}, seq.front());
    static constexpr RefinedTag tags[] = {RefinedTag::F, RefinedTag::B, RefinedTag::R, RefinedTag::IB, RefinedTag::IR};
    const long long max_draws = 1000LL * moves + 1000;
    long long draws = 0;
    while (static_cast<int>(seq.size()) - 1 < moves) {
        if (++draws > max_draws) {
            throw PreconditionError("could not extend the sequence; sizes have outgrown int");
        }
        RefinedMove move{tags[std::uniform_int_distribution<int>(0, 4)(rng)], 0, 0};
        const int blocks = static_cast<int>(m.bottom.size());
        if (move.tag == RefinedTag::IB) {
            if (blocks < 2) {
                continue;
            }
            move.block = std::uniform_int_distribution<int>(2, blocks)(rng);
        } else if (move.tag == RefinedTag::IR) {
            move.block = std::uniform_int_distribution<int>(1, blocks)(rng);
        }
        try {
            m = apply_up(m, move);
        } catch (const PreconditionError&) {
            continue;
        }
        seq.push_back(move);
    }
    return seq;
}

inline MeanderType generate_frobenius(int moves, std::uint64_t seed)
{
    return wind_up(generate_frobenius_sequence(moves, seed));
}

} // namespace meanderkit

#endif // MEANDERKIT_WINDING_HPP
