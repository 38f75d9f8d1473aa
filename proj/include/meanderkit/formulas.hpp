#ifndef MEANDERKIT_FORMULAS_HPP
#define MEANDERKIT_FORMULAS_HPP

#include <meanderkit/errors.hpp>
#include <meanderkit/meander.hpp>

#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace meanderkit {

namespace detail {

inline void require_positive(std::initializer_list<int> values, const char* what)
{
    for (int v : values) {
        if (v < 1) {
            throw PreconditionError(std::string(what) + ": block sizes must be positive");
        }
    }
}

} // namespace detail

/// Index of a|b over a+b.
inline int index_two_block(int a, int b)
{
    detail::require_positive({a, b}, "index_two_block");
    return std::gcd(a, b) - 1;
}

/// Four-block meanders. TopThree is the flip of BottomThree and is only
/// produced by flip().
enum class FourBlockShape { TopTwo, BottomThree, TopThree };

struct FourBlockType {
    FourBlockShape shape;
    int a;
    int b;
    int c;
    int d;

    friend bool operator==(const FourBlockType&, const FourBlockType&) = default;
};

/// TopTwo: a|b over c|d. BottomThree: d over a|b|c. TopThree: a|b|c over d.
inline FourBlockType make_four_block(FourBlockShape shape, int a, int b, int c, int d)
{
    detail::require_positive({a, b, c, d}, "four-block type");
    const bool ok = shape == FourBlockShape::TopTwo ? a + b == c + d : d == a + b + c;
    if (!ok) {
        throw PreconditionError("four-block type with unequal sides");
    }
    return {shape, a, b, c, d};
}

inline MeanderType to_meander(const FourBlockType& t)
{
    switch (t.shape) {
    case FourBlockShape::TopTwo:
        return MeanderType({t.a, t.b}, {t.c, t.d});
    case FourBlockShape::BottomThree:
        return MeanderType({t.d}, {t.a, t.b, t.c});
    case FourBlockShape::TopThree:
        return MeanderType({t.a, t.b, t.c}, {t.d});
    }
    throw ConsistencyError("unknown four-block shape");
}

/// Swaps top and bottom. a|b over c|d becomes c|d over a|b.
inline FourBlockType flip(const FourBlockType& t)
{
    switch (t.shape) {
    case FourBlockShape::TopTwo:
        return {FourBlockShape::TopTwo, t.c, t.d, t.a, t.b};
    case FourBlockShape::BottomThree:
        return {FourBlockShape::TopThree, t.a, t.b, t.c, t.d};
    case FourBlockShape::TopThree:
        return {FourBlockShape::BottomThree, t.a, t.b, t.c, t.d};
    }
    throw ConsistencyError("unknown four-block shape");
}

inline int index_four_block(const FourBlockType& t)
{
    const FourBlockType v = make_four_block(t.shape, t.a, t.b, t.c, t.d);
    return std::gcd(v.a + v.b, v.b + v.c) - 1;
}

/// a|...|a|b over ka+b, with k copies of a.
inline MeanderType family_parabolic(int a, int k, int b)
{
    if (a < 2 || a % 2 != 0) {
        throw PreconditionError("family_parabolic: a must be even and at least 2, got " + std::to_string(a));
    }
    if (k < 1 || b < 1) {
        throw PreconditionError("family_parabolic: need k >= 1 and b >= 1");
    }
    if (std::gcd(a, b) != 1) {
        throw PreconditionError("family_parabolic: gcd(a, b) = " + std::to_string(std::gcd(a, b)) + ", expected 1");
    }
    std::vector<int> top(static_cast<std::size_t>(k), a);
    top.push_back(b);
    return MeanderType(Composition(std::move(top)), Composition{k * a + b});
}

/// a|...|a|b over c|a|...|a with c = b + ka, bottom_copies copies of a
/// below and k + bottom_copies above.
inline MeanderType family_biparabolic(int a, int b, int k, int bottom_copies)
{
    if (a < 2 || a % 2 != 0) {
        throw PreconditionError("family_biparabolic: a must be even and at least 2, got " + std::to_string(a));
    }
    if (b < 1 || k < 0 || bottom_copies < 0) {
        throw PreconditionError("family_biparabolic: need b >= 1, k >= 0, bottom_copies >= 0");
    }
    if (std::gcd(a, b) != 1) {
        throw PreconditionError("family_biparabolic: gcd(a, b) = " + std::to_string(std::gcd(a, b)) + ", expected 1");
    }
    const int top_copies = k + bottom_copies;
    if (top_copies < 1) {
        throw PreconditionError("family_biparabolic: need at least one copy of a on top");
    }
    std::vector<int> top(static_cast<std::size_t>(top_copies), a);
    top.push_back(b);
    std::vector<int> bottom{b + k * a};
    bottom.insert(bottom.end(), static_cast<std::size_t>(bottom_copies), a);
    return MeanderType(Composition(std::move(top)), Composition(std::move(bottom)));
}

/// Same, with top_copies stated and checked against k + bottom_copies.
inline MeanderType family_biparabolic(int a, int b, int top_copies, int bottom_copies, int k)
{
    if (top_copies != k + bottom_copies) {
        throw PreconditionError("family_biparabolic: sides do not balance; top_copies must equal k + bottom_copies = " +
                                std::to_string(k + bottom_copies));
    }
    return family_biparabolic(a, b, k, bottom_copies);
}

} // namespace meanderkit

#endif // MEANDERKIT_FORMULAS_HPP
