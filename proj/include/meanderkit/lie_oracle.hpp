#ifndef MEANDERKIT_LIE_ORACLE_HPP
#define MEANDERKIT_LIE_ORACLE_HPP

// Independent checks against the seaweed subalgebra itself. Everything here
// works on matrix coordinates and never looks at the meander graph.

#include <meanderkit/errors.hpp>
#include <meanderkit/linalg.hpp>
#include <meanderkit/meander.hpp>
#include <meanderkit/spectrum.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace meanderkit {

using linalg::Rational;

/// Matrix unit e_{i,j}, 1-based.
struct Position {
    int i;
    int j;

    friend bool operator==(const Position&, const Position&) = default;
    friend auto operator<=>(const Position&, const Position&) = default;
};

/// Positions (r, c) allowed by a seaweed of type top/bottom: the top blocks
/// give the lower-triangular part, the bottom blocks the upper part.
class SeaweedPattern {
public:
    explicit SeaweedPattern(const MeanderType& m) : n_(m.order()), slot_(static_cast<std::size_t>(n_ * n_), -1)
    {
        auto block_of = [this](const Composition& c) {
            std::vector<int> out(static_cast<std::size_t>(n_) + 1, 0);
            int v = 1;
            for (std::size_t k = 0; k < c.size(); ++k) {
                for (int t = 0; t < c[k]; ++t) {
                    out[static_cast<std::size_t>(v++)] = static_cast<int>(k);
                }
            }
            return out;
        };
        const auto top = block_of(m.top);
        const auto bottom = block_of(m.bottom);
        for (int r = 1; r <= n_; ++r) {
            for (int c = 1; c <= n_; ++c) {
                const auto ur = static_cast<std::size_t>(r);
                const auto uc = static_cast<std::size_t>(c);
                if (top[ur] <= top[uc] && bottom[ur] >= bottom[uc]) {
                    slot_[flat(r, c)] = static_cast<int>(positions_.size());
                    positions_.push_back({r, c});
                }
            }
        }
    }

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] std::size_t size() const { return positions_.size(); }
    [[nodiscard]] const std::vector<Position>& positions() const { return positions_; }
    [[nodiscard]] const Position& operator[](std::size_t k) const { return positions_[k]; }

    [[nodiscard]] bool contains(int i, int j) const { return index(i, j) >= 0; }
    /// Slot of e_{i,j}, or -1 when it is outside the pattern.
    [[nodiscard]] int index(int i, int j) const
    {
        if (i < 1 || i > n_ || j < 1 || j > n_) {
            return -1;
        }
        return slot_[flat(i, j)];
    }

private:
    [[nodiscard]] std::size_t flat(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }

    int n_;
    std::vector<Position> positions_;
    std::vector<int> slot_;
};

inline SeaweedPattern seaweed_positions(const MeanderType& m) { return SeaweedPattern(m); }

/// A linear functional on matrices, F(e_{i,j}) = coefficient at (i, j).
struct Functional {
    std::map<Position, Rational> coefficients;

    [[nodiscard]] Rational operator()(int i, int j) const
    {
        auto it = coefficients.find({i, j});
        return it == coefficients.end() ? Rational(0) : it->second;
    }
};

/// Each top arc u < v contributes e*_{v,u}; each bottom arc u < v contributes
/// e*_{u,v}. Both land inside the pattern; that is checked, not assumed.
inline Functional canonical_functional(const MeanderType& m)
{
    const SeaweedPattern pat(m);
    Functional f;
    for (const Edge& e : build_graph(m).edges()) {
        const Position p = e.side == Side::Top ? Position{e.v, e.u} : Position{e.u, e.v};
        if (!pat.contains(p.i, p.j)) {
            throw ConsistencyError("arc (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") of " + to_string(m) +
                                   " falls outside the seaweed");
        }
        f.coefficients[p] = 1;
    }
    return f;
}

/// K[p][q] = F([e_p, e_q]) over the pattern basis.
inline linalg::Matrix kirillov_matrix(const SeaweedPattern& pat, const Functional& f)
{
    const std::size_t dim = pat.size();
    linalg::Matrix k(dim, dim);
    for (std::size_t p = 0; p < dim; ++p) {
        const auto [i, j] = pat[p];
        for (std::size_t q = 0; q < dim; ++q) {
            const auto [a, b] = pat[q];
            // [e_ij, e_ab] = d_ja e_ib - d_bi e_aj
            Rational v = 0;
            if (j == a) {
                v += f(i, b);
            }
            if (b == i) {
                v -= f(a, j);
            }
            k(p, q) = v;
        }
    }
    return k;
}

constexpr int kOracleMaxOrder = 12;

namespace detail {

inline void require_desk_scale(const MeanderType& m)
{
    if (m.order() > kOracleMaxOrder) {
        throw PreconditionError("oracle is limited to n <= " + std::to_string(kOracleMaxOrder) + ", got n = " +
                                std::to_string(m.order()));
    }
}

} // namespace detail

/// Index of the gl-seaweed minus one (the sl index), as the smallest
/// Kirillov nullity seen over random integer functionals.
inline int index_oracle(const MeanderType& m, int trials = 5, std::uint64_t seed = 0x5eaeedULL)
{
    detail::require_desk_scale(m);
    if (m.empty()) {
        return -1;
    }
    const SeaweedPattern pat(m);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-100, 100);
    std::size_t best = pat.size();
    for (int t = 0; t < trials && best > 1; ++t) {
        Functional f;
        for (const Position& p : pat.positions()) {
            f.coefficients[p] = coef(rng);
        }
        best = std::min(best, linalg::nullity(kirillov_matrix(pat, f)));
    }
    return static_cast<int>(best) - 1;
}

/// n x n matrix with zeros outside the pattern.
struct PrincipalElement {
    int n = 0;
    linalg::Matrix matrix;

    [[nodiscard]] bool is_diagonal() const
    {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i != j && sgn(at(i, j)) != 0) {
                    return false;
                }
            }
        }
        return true;
    }
    [[nodiscard]] const Rational& at(int i, int j) const
    {
        return matrix(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }
    [[nodiscard]] std::vector<Rational> diagonal() const
    {
        std::vector<Rational> d;
        for (int i = 1; i <= n; ++i) {
            d.push_back(at(i, i));
        }
        return d;
    }
};

/// The trace-zero X in the seaweed with F([X, Y]) = F(Y) for every Y.
inline PrincipalElement principal_element(const MeanderType& m)
{
    detail::require_desk_scale(m);
    if (const int k = index_naive(m); k != 0) {
        throw PreconditionError("not Frobenius (index " + std::to_string(k) + ")");
    }
    const SeaweedPattern pat(m);
    const Functional f = canonical_functional(m);
    const linalg::Matrix k = kirillov_matrix(pat, f);
    const std::size_t dim = pat.size();

    linalg::Matrix a(dim + 1, dim);
    std::vector<Rational> rhs(dim + 1);
    for (std::size_t q = 0; q < dim; ++q) {
        for (std::size_t p = 0; p < dim; ++p) {
            a(q, p) = k(p, q);
        }
        rhs[q] = f(pat[q].i, pat[q].j);
    }
    for (std::size_t p = 0; p < dim; ++p) {
        if (pat[p].i == pat[p].j) {
            a(dim, p) = 1;
        }
    }

    const linalg::Solution sol = linalg::solve(a, rhs);
    if (sol.status == linalg::SolveStatus::Inconsistent) {
        throw ConsistencyError("no principal element for " + to_string(m));
    }
    if (sol.status == linalg::SolveStatus::Underdetermined) {
        throw PreconditionError("principal element not unique for " + to_string(m) + "; the canonical functional is not regular");
    }
    PrincipalElement out;
    out.n = m.order();
    out.matrix = linalg::Matrix(dim == 0 ? 0 : static_cast<std::size_t>(out.n), static_cast<std::size_t>(out.n));
    for (std::size_t p = 0; p < dim; ++p) {
        out.matrix(static_cast<std::size_t>(pat[p].i - 1), static_cast<std::size_t>(pat[p].j - 1)) = sol.x[p];
    }
    return out;
}

/// ad F^ on the seaweed: e_{i,j} has eigenvalue F^_ii - F^_jj; one zero is
/// dropped for the sl quotient.
inline Spectrum ad_spectrum_oracle(const MeanderType& m)
{
    const PrincipalElement x = principal_element(m);
    if (!x.is_diagonal()) {
        throw ConsistencyError("principal element of " + to_string(m) + " is not diagonal");
    }
    const SeaweedPattern pat(m);
    std::vector<int> values;
    for (const Position& p : pat.positions()) {
        const Rational e = x.at(p.i, p.i) - x.at(p.j, p.j);
        if (e.get_den() != 1 || !e.get_num().fits_sint_p()) {
            throw ConsistencyError("non-integral eigenvalue " + e.get_str() + " for " + to_string(m));
        }
        values.push_back(static_cast<int>(e.get_num().get_si()));
    }
    return spectrum_from_measures(values);
}

/// Sparse element of gl(n) in pattern coordinates.
using SparseElement = std::vector<std::pair<int, Rational>>;

/// Basis of the sl-seaweed: off-diagonal units, then e_kk - e_{k+1,k+1}.
inline std::vector<SparseElement> sl_basis(const SeaweedPattern& pat)
{
    std::vector<SparseElement> basis;
    for (std::size_t p = 0; p < pat.size(); ++p) {
        if (pat[p].i != pat[p].j) {
            basis.push_back({{static_cast<int>(p), Rational(1)}});
        }
    }
    for (int k = 1; k < pat.order(); ++k) {
        basis.push_back({{pat.index(k, k), Rational(1)}, {pat.index(k + 1, k + 1), Rational(-1)}});
    }
    return basis;
}

inline SparseElement bracket(const SeaweedPattern& pat, const SparseElement& x, const SparseElement& y)
{
    std::map<int, Rational> acc;
    for (const auto& [p, cp] : x) {
        const auto [i, j] = pat[static_cast<std::size_t>(p)];
        for (const auto& [q, cq] : y) {
            const auto [a, b] = pat[static_cast<std::size_t>(q)];
            if (j == a) {
                acc[pat.index(i, b)] += cp * cq;
            }
            if (b == i) {
                acc[pat.index(a, j)] -= cp * cq;
            }
        }
    }
    SparseElement out;
    for (auto& [k, v] : acc) {
        if (k < 0) {
            throw ConsistencyError("bracket left the seaweed");
        }
        if (sgn(v) != 0) {
            out.emplace_back(k, v);
        }
    }
    return out;
}

/// The Frobenius form M_ab = F([x_a, x_b]) on the sl basis.
inline linalg::Matrix frobenius_form(const SeaweedPattern& pat, const Functional& f,
                                     const std::vector<SparseElement>& basis)
{
    const std::size_t d = basis.size();
    linalg::Matrix mat(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            for (const auto& [k, v] : bracket(pat, basis[a], basis[b])) {
                mat(a, b) += v * f(pat[static_cast<std::size_t>(k)].i, pat[static_cast<std::size_t>(k)].j);
            }
        }
    }
    return mat;
}

/// Number of nonzero entries of [r12, r13] + [r12, r23] + [r13, r23] for
/// r = sum r_ab x_a (x) x_b, as a dense tensor in pattern coordinates.
inline std::size_t cybe_defect(const SeaweedPattern& pat, const std::vector<SparseElement>& basis,
                               const linalg::Matrix& r)
{
    const std::size_t d = basis.size();
    const std::size_t dim = pat.size();
    if (r.rows() != d || r.cols() != d) {
        throw PreconditionError("r-matrix does not match the basis");
    }
    // u_a = sum_b r_ab x_b, densely.
    std::vector<std::vector<Rational>> u(d, std::vector<Rational>(dim));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            if (sgn(r(a, b)) == 0) {
                continue;
            }
            for (const auto& [k, v] : basis[b]) {
                u[a][static_cast<std::size_t>(k)] += r(a, b) * v;
            }
        }
    }
    std::vector<std::vector<SparseElement>> br(d, std::vector<SparseElement>(d));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            br[a][b] = bracket(pat, basis[a], basis[b]);
        }
    }

    std::vector<Rational> t(dim * dim * dim);
    auto at = [&](std::size_t x, std::size_t y, std::size_t z) -> Rational& { return t[(x * dim + y) * dim + z]; };

    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t c = 0; c < d; ++c) {
            for (const auto& [k, v] : br[a][c]) {
                const auto kk = static_cast<std::size_t>(k);
                // [r12, r13]: [x_a, x_c] (x) u_a (x) u_c
                for (std::size_t s = 0; s < dim; ++s) {
                    if (sgn(u[a][s]) == 0) {
                        continue;
                    }
                    const Rational vs = v * u[a][s];
                    for (std::size_t w = 0; w < dim; ++w) {
                        if (sgn(u[c][w]) != 0) {
                            at(kk, s, w) += vs * u[c][w];
                        }
                    }
                }
                // r is antisymmetric, so [r12, r23] = -u_a (x) [x_a, x_c] (x) u_c
                // and [r13, r23] = u_a (x) u_c (x) [x_a, x_c].
                for (std::size_t s = 0; s < dim; ++s) {
                    if (sgn(u[a][s]) == 0) {
                        continue;
                    }
                    const Rational vs = v * u[a][s];
                    for (std::size_t w = 0; w < dim; ++w) {
                        if (sgn(u[c][w]) != 0) {
                            const Rational term = vs * u[c][w];
                            at(s, kk, w) -= term;
                            at(s, w, kk) += term;
                        }
                    }
                }
            }
        }
    }
    std::size_t nonzero = 0;
    for (const Rational& x : t) {
        if (sgn(x) != 0) {
            ++nonzero;
        }
    }
    return nonzero;
}

/// The inverse of the Frobenius form as an r-matrix on the sl basis.
inline linalg::Matrix canonical_r_matrix(const SeaweedPattern& pat, const Functional& f,
                                         const std::vector<SparseElement>& basis)
{
    auto inv = linalg::inverse(frobenius_form(pat, f, basis));
    if (!inv) {
        throw PreconditionError("the canonical functional is not Frobenius on this seaweed");
    }
    return *std::move(inv);
}

/// True when the r-matrix built from the canonical functional solves the
/// classical Yang-Baxter equation exactly.
inline bool cybe_residual(const MeanderType& m)
{
    detail::require_desk_scale(m);
    const SeaweedPattern pat(m);
    const Functional f = canonical_functional(m);
    const auto basis = sl_basis(pat);
    return cybe_defect(pat, basis, canonical_r_matrix(pat, f, basis)) == 0;
}

} // namespace meanderkit

#endif // MEANDERKIT_LIE_ORACLE_HPP
