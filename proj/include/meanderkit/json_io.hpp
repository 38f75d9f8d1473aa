#ifndef MEANDERKIT_JSON_IO_HPP
#define MEANDERKIT_JSON_IO_HPP

#include <meanderkit/conjecture_lab.hpp>
#include <meanderkit/errors.hpp>
#include <meanderkit/lie_oracle.hpp>
#include <meanderkit/meander.hpp>
#include <meanderkit/spectrum.hpp>
#include <meanderkit/winding.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

namespace meanderkit::io {

using json = nlohmann::ordered_json;

inline json meander(const MeanderType& m)
{
    return {{"type", to_string(m)}, {"n", m.order()}, {"top", m.top.parts}, {"bottom", m.bottom.parts}};
}

inline MeanderType meander_from(const json& j)
{
    try {
        return MeanderType(Composition(j.at("top").get<std::vector<int>>()),
                           Composition(j.at("bottom").get<std::vector<int>>()));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad meander JSON: ") + e.what());
    }
}

template <class Move>
json signature(const MeanderType& m, const Signature<Move>& s)
{
    std::vector<std::string> moves;
    for (const auto& mv : s.moves) {
        moves.push_back(to_string(mv));
    }
    const bool refined = std::is_same_v<Move, RefinedMove>;
    return {{"type", to_string(m)},
            {"alphabet", refined ? "refined" : "simplified"},
            {"moves", moves},
            {"index", index_from_signature(s)}};
}

inline json homotopy(const MeanderType& m, const PlaneHomotopyType& h)
{
    json symbols = json::array();
    for (const auto& s : h.symbols) {
        symbols.push_back({{"c", s.c}, {"circles", s.nested_cycles()}, {"center_path", s.has_center_path()}});
    }
    return {{"type", to_string(m)}, {"symbols", symbols}, {"text", to_string(h)}};
}

inline json spectrum(const Spectrum& s)
{
    std::vector<int> eigenvalues;
    std::vector<std::int64_t> dimensions;
    for (const auto& [e, d] : s.dims) {
        eigenvalues.push_back(e);
        dimensions.push_back(d);
    }
    return {{"eigenvalues", eigenvalues}, {"dimensions", dimensions}};
}

inline Spectrum spectrum_from(const json& j)
{
    try {
        const auto e = j.at("eigenvalues").get<std::vector<int>>();
        const auto d = j.at("dimensions").get<std::vector<std::int64_t>>();
        if (e.size() != d.size()) {
            throw ParseError("spectrum JSON: eigenvalues and dimensions differ in length");
        }
        Spectrum s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (d[i] <= 0 || !s.dims.emplace(e[i], d[i]).second) {
                throw ParseError("spectrum JSON: repeated eigenvalue or non-positive dimension");
            }
        }
        return s;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("bad spectrum JSON: ") + ex.what());
    }
}

inline json flags(const SpectrumFlags& f)
{
    return {{"symmetric", f.symmetric},
            {"unbroken", f.unbroken},
            {"unimodal", f.unimodal},
            {"strictly_unimodal", f.strictly_unimodal}};
}

/// Integers stay numbers; proper fractions become "p/q" strings.
inline json rational(const Rational& q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
        return q.get_num().get_si();
    }
    return q.get_str();
}

inline json principal(const PrincipalElement& x)
{
    json diag = json::array();
    for (const auto& d : x.diagonal()) {
        diag.push_back(rational(d));
    }
    json out{{"diag", diag}};
    if (!x.is_diagonal()) {
        json rows = json::array();
        for (int i = 1; i <= x.n; ++i) {
            json row = json::array();
            for (int j = 1; j <= x.n; ++j) {
                row.push_back(rational(x.at(i, j)));
            }
            rows.push_back(row);
        }
        out["matrix"] = rows;
    }
    return out;
}

inline json scan_report(const ScanReport& r)
{
    json params = json::object();
    for (const auto& [k, v] : r.parameters) {
        params[k] = v;
    }
    return {{"scan", r.scan},
            {"parameters", params},
            {"examined", r.examined},
            {"findings", r.findings},
            {"elapsed_ms", r.elapsed_ms}};
}

inline ScanReport scan_report_from(const json& j)
{
    try {
        ScanReport r;
        r.scan = j.at("scan").get<std::string>();
        for (const auto& [k, v] : j.at("parameters").items()) {
            r.parameters.emplace_back(k, v.get<std::int64_t>());
        }
        r.examined = j.at("examined").get<std::uint64_t>();
        r.findings = j.at("findings").get<std::vector<std::string>>();
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad scan report JSON: ") + e.what());
    }
}

} // namespace meanderkit::io

#endif // MEANDERKIT_JSON_IO_HPP
