#ifndef MEANDERKIT_ENUMERATION_HPP
#define MEANDERKIT_ENUMERATION_HPP

#include <meanderkit/errors.hpp>
#include <meanderkit/meander.hpp>

#include <cstdint>
#include <iterator>
#include <random>
#include <string>
#include <vector>

namespace meanderkit {

/// Composition of n encoded as n-1 gap bits, most significant bit first;
/// a set bit cuts between two neighbouring vertices.
inline Composition composition_from_bits(int n, std::uint64_t bits)
{
    Composition c;
    int run = 1;
    for (int gap = 1; gap < n; ++gap) {
        if (((bits >> (n - 1 - gap)) & 1U) != 0) {
            c.parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    c.parts.push_back(run);
    return c;
}

inline std::uint64_t meander_count(int n)
{
    if (n < 1 || n > 32) {
        throw PreconditionError("meander enumeration needs 1 <= n <= 32, got " + std::to_string(n));
    }
    return std::uint64_t{1} << (2 * (n - 1));
}

/// The index-th meander of order n in enumeration order: the top
/// composition's bits are the high half of the index.
inline MeanderType meander_at(int n, std::uint64_t index)
{
    const std::uint64_t per_side = std::uint64_t{1} << (n - 1);
    return MeanderType(composition_from_bits(n, index / per_side), composition_from_bits(n, index % per_side));
}

/// Lazily decoded slice [first, last) of the 4^(n-1) meanders of order n.
/// Disjoint slices can be handed to independent workers.
class MeanderRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = MeanderType;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(int n, std::uint64_t at) : n_(n), at_(at) {}

        MeanderType operator*() const { return meander_at(n_, at_); }
        iterator& operator++()
        {
            ++at_;
            return *this;
        }
        iterator operator++(int)
        {
            iterator old = *this;
            ++at_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.at_ == b.at_; }

    private:
        int n_ = 0;
        std::uint64_t at_ = 0;
    };

    MeanderRange(int n, std::uint64_t first, std::uint64_t last) : n_(n), first_(first), last_(last) {}

    [[nodiscard]] iterator begin() const { return {n_, first_}; }
    [[nodiscard]] iterator end() const { return {n_, last_}; }
    [[nodiscard]] std::uint64_t size() const { return last_ - first_; }

private:
    int n_;
    std::uint64_t first_;
    std::uint64_t last_;
};

inline MeanderRange enumerate_meanders(int n) { return {n, 0, meander_count(n)}; }

inline MeanderRange enumerate_meanders(int n, std::uint64_t first, std::uint64_t last)
{
    const std::uint64_t total = meander_count(n);
    if (first > last || last > total) {
        throw PreconditionError("enumeration slice out of range");
    }
    return {n, first, last};
}

/// Uniform over the 4^(n-1) meanders of order n, for n <= 64.
template <class Rng>
MeanderType random_meander(int n, Rng& rng)
{
    if (n < 1 || n > 64) {
        throw PreconditionError("random meanders need 1 <= n <= 64, got " + std::to_string(n));
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 1)) - 1);
    Composition top = composition_from_bits(n, pick(rng));
    Composition bottom = composition_from_bits(n, pick(rng));
    return MeanderType(std::move(top), std::move(bottom));
}

namespace detail {

template <class Fn>
void compositions_with_parts(int remaining, int parts, std::vector<int>& acc, Fn& fn)
{
    if (parts == 0) {
        if (remaining == 0) {
            fn(Composition(acc));
        }
        return;
    }
    for (int p = 1; p <= remaining - (parts - 1); ++p) {
        acc.push_back(p);
        compositions_with_parts(remaining - p, parts - 1, acc, fn);
        acc.pop_back();
    }
}

} // namespace detail

/// Calls fn for every composition of n into exactly `parts` positive parts,
/// in lexicographic order.
template <class Fn>
void for_each_composition(int n, int parts, Fn fn)
{
    if (parts < 1 || n < parts) {
        return;
    }
    std::vector<int> acc;
    detail::compositions_with_parts(n, parts, acc, fn);
}

} // namespace meanderkit

#endif // MEANDERKIT_ENUMERATION_HPP
