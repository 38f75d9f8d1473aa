#ifndef MEANDERKIT_CONJECTURE_LAB_HPP
#define MEANDERKIT_CONJECTURE_LAB_HPP

#include <meanderkit/enumeration.hpp>
#include <meanderkit/errors.hpp>
#include <meanderkit/meander.hpp>
#include <meanderkit/spectrum.hpp>
#include <meanderkit/winding.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace meanderkit {

/// gcd(alpha . v, beta . v) == 1 over the five block sizes v, listed top
/// blocks first, then bottom blocks.
struct GcdCondition {
    std::array<int, 5> alpha{};
    std::array<int, 5> beta{};

    [[nodiscard]] bool degenerate() const
    {
        auto zero = [](const std::array<int, 5>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }); };
        return zero(alpha) && zero(beta);
    }

    friend bool operator==(const GcdCondition&, const GcdCondition&) = default;
    friend auto operator<=>(const GcdCondition&, const GcdCondition&) = default;
};

inline std::array<int, 5> block_vector(const MeanderType& m)
{
    if (m.block_count() != 5) {
        throw PreconditionError(to_string(m) + " does not have five blocks");
    }
    std::array<int, 5> v{};
    std::size_t k = 0;
    for (int p : m.top.parts) {
        v[k++] = p;
    }
    for (int p : m.bottom.parts) {
        v[k++] = p;
    }
    return v;
}

inline long long evaluate(const GcdCondition& c, const std::array<int, 5>& v)
{
    long long x = 0;
    long long y = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        x += static_cast<long long>(c.alpha[i]) * v[i];
        y += static_cast<long long>(c.beta[i]) * v[i];
    }
    return std::gcd(x, y);
}

inline std::string to_string(const GcdCondition& c)
{
    static constexpr const char* names[] = {"x1", "x2", "x3", "x4", "x5"};
    auto form = [](const std::array<int, 5>& v) {
        std::string out;
        for (std::size_t i = 0; i < 5; ++i) {
            if (v[i] == 0) {
                continue;
            }
            const int mag = std::abs(v[i]);
            if (out.empty()) {
                out += v[i] < 0 ? "-" : "";
            } else {
                out += v[i] < 0 ? " - " : " + ";
            }
            out += (mag == 1 ? std::string() : std::to_string(mag)) + names[i];
        }
        return out.empty() ? std::string("0") : out;
    };
    return "gcd(" + form(c.alpha) + ", " + form(c.beta) + ") = 1";
}

/// A condition that held on one shape (number of top blocks).
struct GcdSurvivor {
    int top_blocks;
    GcdCondition condition;

    friend bool operator==(const GcdSurvivor&, const GcdSurvivor&) = default;
    friend auto operator<=>(const GcdSurvivor&, const GcdSurvivor&) = default;
};

struct FiveBlockSamples {
    std::vector<MeanderType> frobenius;
    std::vector<MeanderType> non_frobenius;
};

/// Every meander with exactly five blocks and n <= n_max, split by index.
inline FiveBlockSamples five_block_samples(int n_max)
{
    FiveBlockSamples out;
    for (int n = 2; n <= n_max; ++n) {
        for (int top = 1; top <= 4; ++top) {
            for_each_composition(n, top, [&](const Composition& t) {
                for_each_composition(n, 5 - top, [&](const Composition& b) {
                    MeanderType m(t, b);
                    (index_naive(m) == 0 ? out.frobenius : out.non_frobenius).push_back(std::move(m));
                });
            });
        }
    }
    return out;
}

/// Adds up to `count` distinct five-block Frobenius meanders built by random
/// winding up. Returns how many were added.
inline int add_generated_samples(FiveBlockSamples& samples, int count, std::uint64_t seed)
{
    std::set<MeanderType> seen(samples.frobenius.begin(), samples.frobenius.end());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> moves(1, 16);
    int added = 0;
    for (long long attempt = 0; added < count && attempt < 200LL * count + 1000; ++attempt) {
        MeanderType m = generate_frobenius(moves(rng), rng());
        if (m.block_count() == 5 && seen.insert(m).second) {
            samples.frobenius.push_back(std::move(m));
            ++added;
        }
    }
    return added;
}

struct ScanReport {
    std::string scan;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
    std::uint64_t examined = 0;
    std::vector<std::string> findings; ///< survivors or counterexamples
    double elapsed_ms = 0;

    /// Equal in everything except timing.
    [[nodiscard]] bool same_outcome(const ScanReport& o) const
    {
        return scan == o.scan && parameters == o.parameters && examined == o.examined && findings == o.findings;
    }
};

namespace detail {

inline int clamp_workers(int workers) { return std::max(1, workers); }

/// Runs fn(w) for w in [0, workers) on separate threads.
template <class Fn>
void run_workers(int workers, Fn fn)
{
    workers = clamp_workers(workers);
    if (workers == 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(fn, w);
    }
    for (auto& t : pool) {
        t.join();
    }
}

inline std::array<int, 5> decode_coefficients(int code, int max_coef)
{
    const int base = 2 * max_coef + 1;
    std::array<int, 5> v{};
    for (int i = 4; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = code % base - max_coef;
        code /= base;
    }
    return v;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

} // namespace detail

/// All conditions with coefficients in [-max_coef, max_coef] that separate
/// the Frobenius samples from the others, shape by shape. Negating either
/// form or swapping the two leaves the gcd unchanged, so only one
/// representative of each such orbit is tried.
inline std::vector<GcdSurvivor> gcd_survivors(int max_coef, const FiveBlockSamples& samples, int workers = 1)
{
    if (max_coef < 1) {
        throw PreconditionError("max_coef must be at least 1");
    }
    if (max_coef > 20) {
        throw PreconditionError("max_coef above 20 is out of reach");
    }
    struct Shape {
        std::vector<std::array<int, 5>> yes;
        std::vector<std::array<int, 5>> no;
    };
    std::array<Shape, 5> shapes{};
    for (const auto& m : samples.frobenius) {
        shapes[m.top.size()].yes.push_back(block_vector(m));
    }
    for (const auto& m : samples.non_frobenius) {
        shapes[m.top.size()].no.push_back(block_vector(m));
    }

    int codes = 1;
    for (int i = 0; i < 5; ++i) {
        codes *= 2 * max_coef + 1;
    }
    // A code and its negation sum to codes - 1, so canonical codes are the
    // lower half plus the zero vector in the middle.
    const int half = (codes - 1) / 2;

    std::vector<std::vector<GcdSurvivor>> found(static_cast<std::size_t>(detail::clamp_workers(workers)));
    detail::run_workers(workers, [&](int w) {
        const int stride = detail::clamp_workers(workers);
        std::vector<long long> ax;
        for (int a = w; a <= half; a += stride) {
            const auto alpha = detail::decode_coefficients(a, max_coef);
            for (int top = 1; top <= 4; ++top) {
                const Shape& s = shapes[static_cast<std::size_t>(top)];
                if (s.yes.empty()) {
                    continue;
                }
                ax.clear();
                for (const auto& v : s.yes) {
                    ax.push_back(std::inner_product(v.begin(), v.end(), alpha.begin(), 0LL));
                }
                for (int b = a; b <= half; ++b) {
                    if (a == half && b == half) {
                        continue;
                    }
                    const auto beta = detail::decode_coefficients(b, max_coef);
                    bool alive = true;
                    for (std::size_t i = 0; alive && i < s.yes.size(); ++i) {
                        const auto& v = s.yes[i];
                        alive = std::gcd(ax[i], std::inner_product(v.begin(), v.end(), beta.begin(), 0LL)) == 1;
                    }
                    const GcdCondition cond{alpha, beta};
                    for (std::size_t i = 0; alive && i < s.no.size(); ++i) {
                        alive = evaluate(cond, s.no[i]) != 1;
                    }
                    if (alive) {
                        found[static_cast<std::size_t>(w)].push_back({top, cond});
                    }
                }
            }
        }
    });
    std::vector<GcdSurvivor> out;
    for (auto& part : found) {
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline ScanReport search_gcd_conditions(int max_coef, const std::vector<MeanderType>& sample,
                                        const std::vector<MeanderType>& non_sample, int workers = 1)
{
    const auto start = std::chrono::steady_clock::now();
    if (sample.empty() || non_sample.empty()) {
        throw PreconditionError("both sample sets must be nonempty");
    }
    FiveBlockSamples s{sample, non_sample};
    for (const auto& m : s.frobenius) {
        block_vector(m);
        if (index_naive(m) != 0) {
            throw PreconditionError(to_string(m) + " is in the Frobenius sample but has index " +
                                    std::to_string(index_naive(m)));
        }
    }
    for (const auto& m : s.non_frobenius) {
        block_vector(m);
        if (index_naive(m) == 0) {
            throw PreconditionError(to_string(m) + " is in the non-Frobenius sample but is Frobenius");
        }
    }
    ScanReport r;
    r.scan = "gcd_conditions";
    r.parameters = {{"max_coef", max_coef},
                    {"frobenius_samples", static_cast<std::int64_t>(sample.size())},
                    {"non_frobenius_samples", static_cast<std::int64_t>(non_sample.size())}};
    for (const auto& sv : gcd_survivors(max_coef, s, workers)) {
        r.findings.push_back(std::to_string(sv.top_blocks) + " top blocks: " + to_string(sv.condition));
    }
    const std::int64_t base = 2 * max_coef + 1;
    const std::int64_t codes = base * base * base * base * base;
    const std::int64_t half = (codes - 1) / 2 + 1;
    r.examined = static_cast<std::uint64_t>(half * (half + 1) / 2 - 1);
    r.elapsed_ms = detail::elapsed_ms(start);
    return r;
}

/// Per-meander outcome of one pass over all Frobenius spectra up to n_max.
struct SpectrumCensus {
    std::uint64_t meanders = 0;
    std::uint64_t frobenius = 0;
    std::uint64_t blocks = 0;
    std::vector<std::string> not_symmetric_unbroken;
    std::vector<std::string> not_unimodal;
    std::vector<std::string> not_strictly_unimodal;
    std::vector<std::string> block_failures;
};

/// Walks every meander with n <= n_max once, splitting each order into
/// contiguous slices across workers.
inline SpectrumCensus spectrum_census(int n_max, int workers = 1, bool with_blocks = true)
{
    if (n_max < 1) {
        throw PreconditionError("n_max must be at least 1");
    }
    const int wk = detail::clamp_workers(workers);
    std::vector<SpectrumCensus> parts(static_cast<std::size_t>(wk));
    detail::run_workers(wk, [&](int w) {
        SpectrumCensus& c = parts[static_cast<std::size_t>(w)];
        for (int n = 1; n <= n_max; ++n) {
            const std::uint64_t total = meander_count(n);
            const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(wk);
            const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(wk);
            for (const MeanderType& m : enumerate_meanders(n, lo, hi)) {
                ++c.meanders;
                const OrientedMeander om(m);
                if (!om.single_path()) {
                    continue;
                }
                ++c.frobenius;
                const Spectrum s = spectrum(om);
                const SpectrumFlags f = classify(s);
                const std::string text = to_string(m) + " " + to_string(s);
                if (!(f.symmetric && f.unbroken)) {
                    c.not_symmetric_unbroken.push_back(text);
                }
                if (!f.unimodal) {
                    c.not_unimodal.push_back(text);
                }
                if (!f.strictly_unimodal) {
                    c.not_strictly_unimodal.push_back(text);
                }
                if (!with_blocks) {
                    continue;
                }
                for (Side side : {Side::Top, Side::Bottom}) {
                    const auto& comp = side == Side::Top ? m.top : m.bottom;
                    for (std::size_t k = 1; k <= comp.size(); ++k) {
                        ++c.blocks;
                        if (!symmetric_unbroken(block_measures(om, {side, static_cast<int>(k)}))) {
                            c.block_failures.push_back(to_string(m) + (side == Side::Top ? " A" : " B") +
                                                       std::to_string(k));
                        }
                    }
                }
            }
        }
    });
    SpectrumCensus out;
    for (auto& p : parts) {
        out.meanders += p.meanders;
        out.frobenius += p.frobenius;
        out.blocks += p.blocks;
        auto append = [](std::vector<std::string>& to, std::vector<std::string>& from) {
            to.insert(to.end(), from.begin(), from.end());
        };
        append(out.not_symmetric_unbroken, p.not_symmetric_unbroken);
        append(out.not_unimodal, p.not_unimodal);
        append(out.not_strictly_unimodal, p.not_strictly_unimodal);
        append(out.block_failures, p.block_failures);
    }
    return out;
}

inline ScanReport scan_unimodality(int n_max, int workers = 1)
{
    const auto start = std::chrono::steady_clock::now();
    SpectrumCensus c = spectrum_census(n_max, workers, false);
    ScanReport r;
    r.scan = "unimodality";
    r.parameters = {{"n_max", n_max}};
    r.examined = c.frobenius;
    for (const auto& s : c.not_unimodal) {
        r.findings.push_back("not unimodal: " + s);
    }
    for (const auto& s : c.not_strictly_unimodal) {
        r.findings.push_back("not strictly unimodal: " + s);
    }
    r.elapsed_ms = detail::elapsed_ms(start);
    return r;
}

inline ScanReport scan_block_measures(int n_max, int workers = 1)
{
    const auto start = std::chrono::steady_clock::now();
    SpectrumCensus c = spectrum_census(n_max, workers, true);
    ScanReport r;
    r.scan = "block_measures";
    r.parameters = {{"n_max", n_max}};
    r.examined = c.blocks;
    r.findings = std::move(c.block_failures);
    r.elapsed_ms = detail::elapsed_ms(start);
    return r;
}

struct LabConfig {
    int max_coef = 2;
    int n_max = 18;
    int sample_size = 0;
    std::uint64_t seed = 1;
};

/// key = value lines; '#' starts a comment.
inline LabConfig parse_lab_config(std::istream& in)
{
    LabConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string_view body = detail::trim(line);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key(detail::trim(body.substr(0, eq)));
        const std::string value(detail::trim(body.substr(eq + 1)));
        long long v = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (value.empty() || ec != std::errc() || ptr != value.data() + value.size() || v < 0) {
            throw ParseError("config line " + std::to_string(lineno) + ": bad value '" + value + "'");
        }
        if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(v);
            continue;
        }
        if (v > 1'000'000) {
            throw ParseError("config line " + std::to_string(lineno) + ": value too large");
        }
        if (key == "max_coef") {
            cfg.max_coef = static_cast<int>(v);
        } else if (key == "n_max") {
            cfg.n_max = static_cast<int>(v);
        } else if (key == "sample_size") {
            cfg.sample_size = static_cast<int>(v);
        } else {
            throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

inline LabConfig parse_lab_config(const std::string& text)
{
    std::istringstream in(text);
    return parse_lab_config(in);
}

} // namespace meanderkit

#endif // MEANDERKIT_CONJECTURE_LAB_HPP
