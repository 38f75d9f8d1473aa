#ifndef MEANDERKIT_TOOLS_CLI_HPP
#define MEANDERKIT_TOOLS_CLI_HPP

#include <meanderkit/meanderkit.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace meanderkit::cli {

using io::json;

namespace detail {

struct Context {
    std::ostream& out;
    bool as_json = false;

    void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

inline void ensure(bool ok, const std::string& what)
{
    if (!ok) {
        throw ConsistencyError(what);
    }
}

inline std::string join(const std::vector<Rational>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i == 0 ? "" : ", ") + xs[i].get_str();
    }
    return s;
}

/// Two- and four-block shapes that have a closed-form index.
inline std::optional<int> formula_index(const MeanderType& m)
{
    const auto& t = m.top.parts;
    const auto& b = m.bottom.parts;
    if (t.size() == 2 && b.size() == 1) {
        return index_two_block(t[0], t[1]);
    }
    if (t.size() == 1 && b.size() == 2) {
        return index_two_block(b[0], b[1]);
    }
    if (t.size() == 2 && b.size() == 2) {
        return index_four_block(make_four_block(FourBlockShape::TopTwo, t[0], t[1], b[0], b[1]));
    }
    if (t.size() == 1 && b.size() == 3) {
        return index_four_block(make_four_block(FourBlockShape::BottomThree, b[0], b[1], b[2], t[0]));
    }
    if (t.size() == 3 && b.size() == 1) {
        return index_four_block(make_four_block(FourBlockShape::TopThree, t[0], t[1], t[2], b[0]));
    }
    return std::nullopt;
}

/// Signature indices against the component count; throws on disagreement.
inline int verified_index(const MeanderType& m)
{
    const int naive = index_naive(m);
    const int simple = index_from_signature(signature_simplified(m));
    const int refined = index_from_signature(signature_refined(m));
    ensure(naive == simple && naive == refined, "index mismatch for " + to_string(m) + ": components " +
                                                    std::to_string(naive) + ", simplified " + std::to_string(simple) +
                                                    ", refined " + std::to_string(refined));
    return naive;
}

inline std::size_t sl_dimension(const MeanderType& m) { return seaweed_positions(m).size() - 1; }

struct CheckLine {
    std::string name;
    bool ok;
    std::string detail;
};

inline std::vector<CheckLine> run_checks(const MeanderType& m)
{
    std::vector<CheckLine> lines;
    auto add = [&](std::string name, bool ok, std::string detail) {
        lines.push_back({std::move(name), ok, std::move(detail)});
    };
    const auto ss = signature_simplified(m);
    const auto rs = signature_refined(m);
    const int naive = index_naive(m);
    const int si = index_from_signature(ss);
    const int ri = index_from_signature(rs);
    add("index", naive == si && naive == ri,
        "components " + std::to_string(naive) + ", simplified " + std::to_string(si) + ", refined " +
            std::to_string(ri));
    if (auto f = formula_index(m)) {
        add("gcd formula", *f == naive, std::to_string(*f));
    }
    int hsum = 0;
    for (const auto& s : homotopy_type(ss).symbols) {
        hsum += s.c;
    }
    add("homotopy", hsum == naive + 1, "parameters sum to " + std::to_string(hsum));
    add("wind up (simplified)", wind_up(up_sequence(ss)) == m, to_up_string(up_sequence(ss)));
    add("wind up (refined)", wind_up(up_sequence(rs)) == m, to_up_string(up_sequence(rs)));
    if (m.order() <= kOracleMaxOrder) {
        const int oi = index_oracle(m);
        add("oracle index", oi == naive, std::to_string(oi));
    }
    if (naive == 0) {
        const Spectrum s = spectrum(m);
        const SpectrumFlags f = classify(s);
        add("spectrum shape", f.symmetric && f.unbroken, to_string(s));
        if (m.order() <= kOracleMaxOrder) {
            const Spectrum o = ad_spectrum_oracle(m);
            add("oracle spectrum", o == s, to_string(o));
            if (sl_dimension(m) <= 20) {
                add("cybe", cybe_residual(m), "sl dimension " + std::to_string(sl_dimension(m)));
            }
        }
    }
    return lines;
}

} // namespace detail

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"meanderkit: meanders, signatures, spectra and seaweed oracles", "meanderkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    detail::Context ctx{out};
    bool as_json = false;
    std::function<void()> action;

    std::string text;
    bool refined = false;
    bool verify = false;
    bool formula = false;
    auto add_common = [&](CLI::App* sub, bool needs_meander = true) {
        sub->add_flag("--json", as_json, "Emit JSON");
        if (needs_meander) {
            sub->add_option("meander", text, "Meander type, e.g. 6|1/2|3|2")->required();
        }
    };

    // index
    auto* index_cmd = app.add_subcommand("index", "Index via the signature");
    add_common(index_cmd);
    index_cmd->add_flag("--verify", verify, "Cross-check against the component count and the refined signature");
    index_cmd->add_flag("--formula", formula, "Also evaluate the gcd formula (two or four blocks)");
    index_cmd->callback([&] {
        action = [&] {
            const MeanderType m = parse_type(text);
            const int k = verify ? detail::verified_index(m) : index_from_signature(signature_simplified(m));
            std::optional<int> f;
            if (formula) {
                f = detail::formula_index(m);
                if (!f) {
                    throw PreconditionError("no gcd formula for the shape of " + to_string(m));
                }
                detail::ensure(*f == k, "gcd formula gives " + std::to_string(*f) + " but the signature gives " +
                                            std::to_string(k));
            }
            if (ctx.as_json) {
                json j{{"type", to_string(m)}, {"index", k}, {"frobenius", k == 0}};
                if (f) {
                    j["formula"] = *f;
                }
                ctx.emit(j);
            } else {
                out << k << "\n";
            }
        };
    });

    // signature
    auto* sig_cmd = app.add_subcommand("signature", "Winding-down signature");
    add_common(sig_cmd);
    sig_cmd->add_flag("--refined", refined, "Use the refined alphabet");
    sig_cmd->add_flag("--verify", verify, "Check the index and that winding up restores the meander");
    sig_cmd->callback([&] {
        action = [&] {
            const MeanderType m = parse_type(text);
            auto show = [&](const auto& sig) {
                if (verify) {
                    detail::ensure(index_from_signature(sig) == index_naive(m), "signature index disagrees with the component count");
                    detail::ensure(wind_up(up_sequence(sig)) == m, "winding up the signature does not restore " + to_string(m));
                }
                if (ctx.as_json) {
                    ctx.emit(io::signature(m, sig));
                } else {
                    out << to_string(sig) << "\n";
                }
            };
            if (refined) {
                show(signature_refined(m));
            } else {
                show(signature_simplified(m));
            }
        };
    });

    // homotopy
    auto* hom_cmd = app.add_subcommand("homotopy", "Plane homotopy type");
    add_common(hom_cmd);
    hom_cmd->callback([&] {
        action = [&] {
            const MeanderType m = parse_type(text);
            const auto h = homotopy_type(m);
            if (ctx.as_json) {
                ctx.emit(io::homotopy(m, h));
            } else {
                out << to_string(h) << "\n";
            }
        };
    });

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "Spectrum of the principal element (Frobenius only)");
    add_common(spec_cmd);
    spec_cmd->add_flag("--verify", verify, "Compare with the matrix oracle (n <= 12) and check the index");
    spec_cmd->callback([&] {
        action = [&] {
            const MeanderType m = parse_type(text);
            const Spectrum s = spectrum(m);
            if (verify) {
                detail::ensure(detail::verified_index(m) == 0, "spectrum computed for a meander of nonzero index");
                if (m.order() <= kOracleMaxOrder) {
                    const Spectrum o = ad_spectrum_oracle(m);
                    detail::ensure(o == s, "oracle spectrum " + to_string(o) + " differs from " + to_string(s));
                }
            }
            if (ctx.as_json) {
                json j{{"type", to_string(m)}};
                j["spectrum"] = io::spectrum(s);
                j["flags"] = io::flags(classify(s));
                ctx.emit(j);
            } else {
                out << to_string(s) << "\n";
            }
        };
    });

    // check
    auto* check_cmd = app.add_subcommand("check", "Run every available cross-check on one meander");
    add_common(check_cmd);
    check_cmd->callback([&] {
        action = [&] {
            const MeanderType m = parse_type(text);
            const auto lines = detail::run_checks(m);
            bool all = true;
            json arr = json::array();
            for (const auto& l : lines) {
                all = all && l.ok;
                if (ctx.as_json) {
                    arr.push_back({{"check", l.name}, {"ok", l.ok}, {"detail", l.detail}});
                } else {
                    out << (l.ok ? "ok    " : "FAIL  ") << l.name << ": " << l.detail << "\n";
                }
            }
            if (ctx.as_json) {
                ctx.emit({{"type", to_string(m)}, {"checks", arr}, {"ok", all}});
            }
            detail::ensure(all, "cross-check failed for " + to_string(m));
        };
    });

    // generate
    int moves = 10;
    std::uint64_t seed = 1;
    std::string sequence;
    auto* gen_cmd = app.add_subcommand("generate", "Wind up a meander from moves or at random");
    add_common(gen_cmd, false);
    gen_cmd->add_option("sequence", sequence, "Explicit up-moves, e.g. \"~C0(2) ~B0 ~F0\"");
    auto* moves_opt = gen_cmd->add_option("--moves", moves, "Number of random up-moves after ~C(1)")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--seed", seed, "Random seed");
    gen_cmd->callback([&] {
        action = [&] {
            if (!sequence.empty()) {
                if (moves_opt->count() > 0) {
                    throw ParseError("give either an up-move sequence or --moves, not both");
                }
                const MeanderType m = wind_up(parse_up_sequence(sequence));
                if (ctx.as_json) {
                    json j = io::meander(m);
                    j["sequence"] = sequence;
                    ctx.emit(j);
                } else {
                    out << to_string(m) << "\n";
                }
                return;
            }
            const auto seq = generate_frobenius_sequence(moves, seed);
            const MeanderType m = wind_up(seq);
            if (ctx.as_json) {
                json j = io::meander(m);
                j["moves"] = moves;
                j["seed"] = seed;
                j["sequence"] = to_up_string(seq);
                ctx.emit(j);
            } else {
                out << to_string(m) << "\n" << "seed " << seed << "\n";
            }
        };
    });

    // enumerate
    int order = 0;
    bool only_frobenius = false;
    bool count_only = false;
    int workers = 1;
    auto* enum_cmd = app.add_subcommand("enumerate", "List or count the meanders of order n");
    add_common(enum_cmd, false);
    enum_cmd->add_option("n", order, "Order")->required()->check(CLI::Range(1, 32));
    enum_cmd->add_flag("--frobenius", only_frobenius, "Only index-zero meanders");
    enum_cmd->add_flag("--count", count_only, "Print counts instead of the list");
    enum_cmd->add_option("--workers", workers, "Threads for counting")->check(CLI::Range(1, 256));
    enum_cmd->callback([&] {
        action = [&] {
            if (count_only) {
                const std::uint64_t total = meander_count(order);
                std::vector<std::uint64_t> part(static_cast<std::size_t>(workers), 0);
                meanderkit::detail::run_workers(workers, [&](int w) {
                    const auto uw = static_cast<std::uint64_t>(w);
                    const auto uk = static_cast<std::uint64_t>(workers);
                    for (const auto& m : enumerate_meanders(order, total * uw / uk, total * (uw + 1) / uk)) {
                        if (index_naive(m) == 0) {
                            ++part[static_cast<std::size_t>(w)];
                        }
                    }
                });
                std::uint64_t frob = 0;
                for (auto p : part) {
                    frob += p;
                }
                if (ctx.as_json) {
                    ctx.emit({{"n", order}, {"total", total}, {"frobenius", frob}});
                } else {
                    out << "total " << total << "\nfrobenius " << frob << "\n";
                }
                return;
            }
            json arr = json::array();
            for (const auto& m : enumerate_meanders(order)) {
                if (only_frobenius && index_naive(m) != 0) {
                    continue;
                }
                if (ctx.as_json) {
                    arr.push_back(to_string(m));
                } else {
                    out << to_string(m) << "\n";
                }
            }
            if (ctx.as_json) {
                ctx.emit(arr);
            }
        };
    });

    // oracle
    int trials = 5;
    std::uint64_t oracle_seed = 0x5eaeedULL;
    auto* oracle_cmd = app.add_subcommand("oracle", "Matrix-level checks on the seaweed (n <= 12)");
    oracle_cmd->require_subcommand(1);
    auto* o_index = oracle_cmd->add_subcommand("index", "Index from random Kirillov forms");
    add_common(o_index);
    o_index->add_option("--trials", trials, "Random functionals to try")->check(CLI::Range(1, 1000));
    o_index->add_option("--seed", oracle_seed, "Random seed");
    o_index->callback([&] {
        action = [&] {
            const MeanderType m = parse_type(text);
            const int k = index_oracle(m, trials, oracle_seed);
            if (ctx.as_json) {
                ctx.emit({{"type", to_string(m)}, {"index", k}, {"trials", trials}, {"seed", oracle_seed}});
            } else {
                out << k << "\n";
            }
        };
    });
    auto* o_principal = oracle_cmd->add_subcommand("principal", "Principal element of the canonical functional");
    add_common(o_principal);
    o_principal->callback([&] {
        action = [&] {
            const MeanderType m = parse_type(text);
            const PrincipalElement x = principal_element(m);
            if (ctx.as_json) {
                json j{{"type", to_string(m)}};
                const json body = io::principal(x);
                for (const auto& [k, v] : body.items()) {
                    j[k] = v;
                }
                ctx.emit(j);
            } else if (x.is_diagonal()) {
                out << "diag(" << detail::join(x.diagonal()) << ")\n";
            } else {
                for (int i = 1; i <= x.n; ++i) {
                    std::vector<Rational> row;
                    for (int j = 1; j <= x.n; ++j) {
                        row.push_back(x.at(i, j));
                    }
                    out << detail::join(row) << "\n";
                }
            }
        };
    });
    auto* o_spectrum = oracle_cmd->add_subcommand("spectrum", "Spectrum of ad of the principal element");
    add_common(o_spectrum);
    o_spectrum->callback([&] {
        action = [&] {
            const MeanderType m = parse_type(text);
            const Spectrum s = ad_spectrum_oracle(m);
            if (ctx.as_json) {
                json j{{"type", to_string(m)}};
                j["spectrum"] = io::spectrum(s);
                ctx.emit(j);
            } else {
                out << to_string(s) << "\n";
            }
        };
    });
    auto* o_cybe = oracle_cmd->add_subcommand("cybe", "Check the r-matrix against the classical Yang-Baxter equation");
    add_common(o_cybe);
    o_cybe->callback([&] {
        action = [&] {
            const MeanderType m = parse_type(text);
            const bool ok = cybe_residual(m);
            if (ctx.as_json) {
                ctx.emit({{"type", to_string(m)}, {"cybe", ok}});
            } else {
                out << (ok ? "true" : "false") << "\n";
            }
            detail::ensure(ok, "r-matrix of " + to_string(m) + " does not solve the Yang-Baxter equation");
        };
    });

    // family
    int fa = 0;
    int fb = 0;
    int fk = 0;
    int bottom_copies = 0;
    int top_copies = -1;
    auto* fam_cmd = app.add_subcommand("family", "Members of the infinite Frobenius families");
    fam_cmd->require_subcommand(1);
    auto emit_family = [&](const MeanderType& m) {
        if (ctx.as_json) {
            json j = io::meander(m);
            j["index"] = index_naive(m);
            ctx.emit(j);
        } else {
            out << to_string(m) << "\n";
        }
    };
    auto* parabolic = fam_cmd->add_subcommand("parabolic", "a|...|a|b over ka+b");
    add_common(parabolic, false);
    parabolic->add_option("--a", fa, "Even block size")->required();
    parabolic->add_option("--k", fk, "Copies of a")->required();
    parabolic->add_option("--b", fb, "Last top block")->required();
    parabolic->callback([&] { action = [&] { emit_family(family_parabolic(fa, fk, fb)); }; });
    auto* biparabolic = fam_cmd->add_subcommand("biparabolic", "a|...|a|b over b+ka|a|...|a");
    add_common(biparabolic, false);
    biparabolic->add_option("--a", fa, "Even block size")->required();
    biparabolic->add_option("--b", fb, "Last top block")->required();
    biparabolic->add_option("--k", fk, "Extra copies of a on top")->required();
    biparabolic->add_option("--bottom-copies", bottom_copies, "Copies of a below")->required();
    auto* top_opt = biparabolic->add_option("--top-copies", top_copies, "Copies of a above (checked)");
    biparabolic->callback([&] {
        action = [&] {
            emit_family(top_opt->count() > 0 ? family_biparabolic(fa, fb, top_copies, bottom_copies, fk)
                                             : family_biparabolic(fa, fb, fk, bottom_copies));
        };
    });

    // search
    std::string config_path;
    std::string scan = "gcd";
    LabConfig cfg;
    auto* search_cmd = app.add_subcommand("search", "Desk-scale scans behind the open conjectures");
    add_common(search_cmd, false);
    search_cmd->add_option("--scan", scan, "gcd, unimodality or blocks")
        ->check(CLI::IsMember({"gcd", "unimodality", "blocks"}));
    search_cmd->add_option("--config", config_path, "key = value file (max_coef, n_max, sample_size, seed)");
    auto* coef_opt = search_cmd->add_option("--max-coef", cfg.max_coef, "Coefficient bound")->check(CLI::Range(1, 20));
    auto* nmax_opt = search_cmd->add_option("--n-max", cfg.n_max, "Largest order scanned")->check(CLI::Range(1, 32));
    auto* size_opt = search_cmd->add_option("--sample-size", cfg.sample_size, "Extra generated Frobenius samples")
                         ->check(CLI::NonNegativeNumber);
    auto* seed_opt = search_cmd->add_option("--seed", cfg.seed, "Seed for generated samples");
    search_cmd->add_option("--workers", workers, "Threads")->check(CLI::Range(1, 256));
    search_cmd->callback([&] {
        action = [&] {
            LabConfig c;
            bool n_max_given = nmax_opt->count() > 0;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) {
                    throw ParseError("cannot read config file '" + config_path + "'");
                }
                std::stringstream buf;
                buf << in.rdbuf();
                c = parse_lab_config(buf.str());
                n_max_given = n_max_given || buf.str().find("n_max") != std::string::npos;
            }
            if (coef_opt->count() > 0) {
                c.max_coef = cfg.max_coef;
            }
            if (nmax_opt->count() > 0) {
                c.n_max = cfg.n_max;
            }
            if (size_opt->count() > 0) {
                c.sample_size = cfg.sample_size;
            }
            if (seed_opt->count() > 0) {
                c.seed = cfg.seed;
            }
            if (scan != "gcd" && !n_max_given) {
                c.n_max = 10;
            }
            ScanReport r;
            if (scan == "gcd") {
                FiveBlockSamples s = five_block_samples(c.n_max);
                if (c.sample_size > 0) {
                    add_generated_samples(s, c.sample_size, c.seed);
                }
                r = search_gcd_conditions(c.max_coef, s.frobenius, s.non_frobenius, workers);
                r.parameters.emplace_back("n_max", c.n_max);
                r.parameters.emplace_back("sample_size", c.sample_size);
                r.parameters.emplace_back("seed", static_cast<std::int64_t>(c.seed));
            } else if (scan == "unimodality") {
                r = scan_unimodality(c.n_max, workers);
            } else {
                r = scan_block_measures(c.n_max, workers);
            }
            if (ctx.as_json) {
                ctx.emit(io::scan_report(r));
            } else {
                out << r.scan << ": examined " << r.examined << ", findings " << r.findings.size() << "\n";
                for (const auto& f : r.findings) {
                    out << "  " << f << "\n";
                }
            }
            // Block measures are a theorem; anything found there is a bug.
            detail::ensure(scan != "blocks" || r.findings.empty(), "block-measure counterexample found");
        };
    });

    // diagram
    bool svg = false;
    bool trace = false;
    std::string output;
    auto* diag_cmd = app.add_subcommand("diagram", "Static arc diagram (ASCII or SVG)");
    diag_cmd->add_option("meander", text, "Meander type")->required();
    diag_cmd->add_flag("--svg", svg, "SVG 1.1 instead of ASCII");
    diag_cmd->add_flag("--signature", trace, "Show each winding-down step instead of the arcs");
    diag_cmd->add_flag("--refined", refined, "Refined alphabet for --signature");
    diag_cmd->add_option("-o,--output", output, "Write to a file");
    diag_cmd->callback([&] {
        action = [&] {
            const MeanderType m = parse_type(text);
            if (svg && trace) {
                throw ParseError("--svg and --signature cannot be combined");
            }
            const std::string body = trace ? signature_trace(m, refined) : svg ? svg_diagram(m) : ascii_diagram(m);
            if (output.empty()) {
                out << body;
                return;
            }
            std::ofstream f(output);
            if (!f || !(f << body)) {
                throw PreconditionError("cannot write '" + output + "'");
            }
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    ctx.as_json = as_json;
    try {
        action();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace meanderkit::cli

#endif // MEANDERKIT_TOOLS_CLI_HPP
