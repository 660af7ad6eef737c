#include "zncomb/cli.hpp"

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"
#include "zncomb/additive_stats.hpp"
#include "zncomb/bounds.hpp"
#include "zncomb/dichotomy.hpp"
#include "zncomb/family_a.hpp"
#include "zncomb/fourier.hpp"
#include "zncomb/serialize.hpp"
#include "zncomb/zn_core.hpp"

namespace zn::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Format { kText, kJson, kCsv };

struct Options {
    std::string format = "text";
    std::string k;
    std::size_t mod = 0;
    std::string a;
    std::string b;
    std::string v = "all";
    std::size_t jobs = 1;

    Format parsed_format() const {
        if (format == "text") return Format::kText;
        if (format == "json") return Format::kJson;
        if (format == "csv") return Format::kCsv;
        throw UsageError(fmt::format("unknown format '{}'", format));
    }
};

std::size_t parse_size(std::string_view text) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError(fmt::format("'{}' is not a non-negative integer", text));
    }
    return value;
}

const char* boolstr(bool b) { return b ? "true" : "false"; }

ResidueSet set_operand(const Options& o, const std::string& literal, const char* flag) {
    if (o.mod == 0) throw UsageError("--mod N is required with set operands");
    try {
        return parse_set(literal, o.mod);
    } catch (const std::invalid_argument& e) {
        throw UsageError(fmt::format("{}: {}", flag, e.what()));
    }
}

std::vector<std::size_t> family_ks(const Options& o, std::size_t min_k) {
    auto ks = parse_k_list(o.k);
    for (std::size_t k : ks) {
        if (k < min_k) throw UsageError(fmt::format("--k values must be at least {}", min_k));
    }
    return ks;
}

void report_findings(const std::vector<Finding>& findings, std::ostream& err) {
    for (const Finding& f : findings) {
        err << fmt::format("FINDING k={} {}: {}\n", f.k, f.claim, f.witness);
    }
}

// ------------------------------------------------------------------ commands

int cmd_table1(const Options& o, std::ostream& out) {
    const auto rows = table1(family_ks(o, 3));
    switch (o.parsed_format()) {
        case Format::kCsv:
            write_table1_csv(out, rows);
            break;
        case Format::kJson:
            for (const auto& r : rows) out << to_json(r).dump() << '\n';
            break;
        case Format::kText:
            out << fmt::format("{:>6} {:>12} {:>14} {:>18}\n", "k", "energy", "energy_bound",
                               "coverage_fraction");
            for (const auto& r : rows) {
                out << fmt::format("{:>6} {:>12} {:>14} {:>18}\n", r.k, r.energy,
                                   format_fixed(r.energy_bound), format_fixed(r.coverage_fraction));
            }
            break;
    }
    return kOk;
}

int cmd_energy(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt_ = o.parsed_format();
    if (o.k.empty()) {
        const ResidueSet u = set_operand(o, o.a, "--a");
        const ResidueSet v = o.b.empty() ? u : set_operand(o, o.b, "--b");
        const auto e = additive_energy(u, v);
        if (fmt_ == Format::kJson) {
            out << Json{{"modulus", o.mod}, {"energy", e}}.dump() << '\n';
        } else if (fmt_ == Format::kCsv) {
            out << "modulus,energy\n" << o.mod << ',' << e << '\n';
        } else {
            out << e << '\n';
        }
        return kOk;
    }
    std::vector<Finding> findings;
    if (fmt_ == Format::kCsv) out << "k,energy,closed_form,match\n";
    for (std::size_t k : family_ks(o, 3)) {
        const ResidueSet a = build_family_a(k);
        const auto e = additive_energy(a, a);
        const auto poly = energy_closed_form(k);
        const bool match = poly >= 0 && e == static_cast<std::uint64_t>(poly);
        if (!match) {
            findings.push_back({"energy_closed_form", k,
                                fmt::format("E(A,A) = {} but polynomial gives {}", e, poly)});
        }
        switch (fmt_) {
            case Format::kJson:
                out << Json{{"k", k}, {"energy", e}, {"closed_form", poly}, {"match", match}}.dump()
                    << '\n';
                break;
            case Format::kCsv:
                out << fmt::format("{},{},{},{}\n", k, e, poly, boolstr(match));
                break;
            case Format::kText:
                out << fmt::format("k={} energy={} closed_form={} match={}\n", k, e, poly,
                                   boolstr(match));
                break;
        }
    }
    report_findings(findings, err);
    return findings.empty() ? kOk : kFinding;
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt_ = o.parsed_format();
    if (fmt_ == Format::kCsv) {
        out << "k,v,actual,ruzsa,energy,olson,olson_applicable,mann,mann_applicable,fourier,full\n";
    }
    std::vector<Finding> findings;
    for (std::size_t k : family_ks(o, 3)) {
        std::vector<Residue> vs;
        if (o.v == "all") {
            vs = units(2 * k);
        } else {
            Residue v = 0;
            auto [ptr, ec] = std::from_chars(o.v.data(), o.v.data() + o.v.size(), v);
            if (o.v.empty() || ec != std::errc{} || ptr != o.v.data() + o.v.size()) {
                throw UsageError(fmt::format("--v expects an integer or 'all' (got '{}')", o.v));
            }
            if (!is_unit(v, 2 * k)) throw UsageError(fmt::format("{} is not a unit of Z_{}", v, 2 * k));
            vs.push_back(v);
        }
        for (Residue v : vs) {
            const BoundReport r = bound_report(k, v);
            for (const auto& name : r.violations()) {
                findings.push_back({"bound_" + name, k, fmt::format("v={} actual={}", r.v, r.actual)});
            }
            switch (fmt_) {
                case Format::kJson:
                    out << to_json(r).dump() << '\n';
                    break;
                case Format::kCsv:
                    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", r.k, r.v, r.actual,
                                       format_real(r.ruzsa), format_real(r.energy),
                                       format_real(r.olson), boolstr(r.olson_applicable), r.mann,
                                       boolstr(r.mann_applicable), format_real(r.fourier),
                                       boolstr(r.full));
                    break;
                case Format::kText:
                    out << fmt::format(
                        "k={} v={} actual={} ruzsa={} energy={} olson={}{} mann={}{} fourier={} "
                        "full={}\n",
                        r.k, r.v, r.actual, format_fixed(r.ruzsa), format_fixed(r.energy),
                        format_fixed(r.olson), r.olson_applicable ? "" : "(n/a)", r.mann,
                        r.mann_applicable ? "" : "(n/a)", format_fixed(r.fourier), boolstr(r.full));
                    break;
            }
        }
    }
    report_findings(findings, err);
    return findings.empty() ? kOk : kFinding;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt_ = o.parsed_format();
    const auto ks = family_ks(o, 3);
    for (std::size_t i = 1; i < ks.size(); ++i) {
        if (ks[i] != ks[i - 1] + 1) throw UsageError("scan expects --k as a single value or lo..hi");
    }
    if (ks.empty()) throw UsageError("scan needs a non-empty --k range");
    if (o.jobs == 0) throw UsageError("--jobs must be at least 1");
    const auto records = scan(ks.front(), ks.back(), o.jobs);
    if (fmt_ == Format::kCsv) {
        out << "k,condf_overall,failing_units,min_sumset_size,mann_empty,dichotomy_verdict,"
               "stabilizer_size,polarity_count,energy,energy_matches_poly,findings\n";
    }
    std::size_t total = 0;
    for (const ScanRecord& r : records) {
        total += r.findings.size();
        report_findings(r.findings, err);
        switch (fmt_) {
            case Format::kJson:
                out << to_json(r).dump() << '\n';
                break;
            case Format::kCsv:
                out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", r.k, boolstr(r.condf_overall),
                                   fmt::join(r.failing_units, ";"), r.min_sumset_size,
                                   boolstr(r.mann_empty), boolstr(r.dichotomy_verdict),
                                   r.stabilizer_size, r.polarity_count, r.energy,
                                   boolstr(r.energy_matches_poly), r.findings.size());
                break;
            case Format::kText:
                out << fmt::format(
                    "k={} condf={} failing_units={} min_sumset={} mann_empty={} dichotomy={} "
                    "stabilizer={} polarities={} energy={} energy_poly={} findings={}\n",
                    r.k, boolstr(r.condf_overall), r.failing_units.size(), r.min_sumset_size,
                    boolstr(r.mann_empty), boolstr(r.dichotomy_verdict), r.stabilizer_size,
                    r.polarity_count, r.energy, boolstr(r.energy_matches_poly), r.findings.size());
                break;
        }
    }
    if (total > 0) err << fmt::format("{} FINDING record(s) over {} k value(s)\n", total, records.size());
    return total == 0 ? kOk : kFinding;
}

int cmd_dichotomy(const Options& o, std::ostream& out) {
    const Format fmt_ = o.parsed_format();
    std::vector<std::pair<std::string, ResidueSet>> inputs;
    if (o.k.empty()) {
        inputs.emplace_back(o.a, set_operand(o, o.a, "--a"));
    } else {
        for (std::size_t k : family_ks(o, 3)) {
            inputs.emplace_back(fmt::format("A({})", k), build_family_a(k));
        }
    }
    if (fmt_ == Format::kCsv) out << "set,modulus,verdict,polarity,stabilizer_size,polarity_count\n";
    for (const auto& [label, s] : inputs) {
        const DichotomyVerdict d = is_counterpoint_dichotomy(s);
        const std::string pol = d.polarity ? d.polarity->to_string() : "";
        switch (fmt_) {
            case Format::kJson: {
                Json j{{"set", format_set(s)}, {"modulus", s.modulus()}};
                j.update(to_json(d));
                out << j.dump() << '\n';
                break;
            }
            case Format::kCsv:
                out << fmt::format("\"{}\",{},{},{},{},{}\n", format_set(s), s.modulus(),
                                   boolstr(d.verdict), pol, d.stabilizer_size, d.polarity_count);
                break;
            case Format::kText:
                out << fmt::format("{} in Z_{}: verdict={} polarity={} stabilizer_size={} "
                                   "polarity_count={}{}\n",
                                   label, s.modulus(), boolstr(d.verdict), pol.empty() ? "-" : pol,
                                   d.stabilizer_size, d.polarity_count,
                                   d.reason.empty() ? "" : " (" + d.reason + ")");
                break;
        }
    }
    return kOk;
}

int cmd_dft(const Options& o, std::ostream& out) {
    const Format fmt_ = o.parsed_format();
    const ResidueSet s = set_operand(o, o.a, "--a");
    const Spectrum sp = dft_indicator(s);
    const double tail = tail_energy(s);
    switch (fmt_) {
        case Format::kJson: {
            Json coeffs = Json::array();
            for (std::size_t xi = 0; xi < sp.modulus; ++xi) {
                const auto c = sp.coefficients[xi];
                coeffs.push_back(Json{{"xi", xi}, {"re", c.real()}, {"im", c.imag()}, {"abs", std::abs(c)}});
            }
            out << Json{{"modulus", sp.modulus}, {"coefficients", std::move(coeffs)},
                        {"tail_energy", tail}}
                       .dump()
                << '\n';
            break;
        }
        case Format::kCsv:
            out << "xi,re,im,abs\n";
            for (std::size_t xi = 0; xi < sp.modulus; ++xi) {
                const auto c = sp.coefficients[xi];
                out << fmt::format("{},{},{},{}\n", xi, format_real(c.real()), format_real(c.imag()),
                                   format_real(std::abs(c)));
            }
            break;
        case Format::kText:
            for (std::size_t xi = 0; xi < sp.modulus; ++xi) {
                const auto c = sp.coefficients[xi];
                // Print -0.0000 as 0.0000.
                auto fixed = [](double x) { return format_fixed(std::abs(x) < 5e-5 ? 0.0 : x); };
                out << fmt::format("xi={} re={} im={} abs={}\n", xi, fixed(c.real()), fixed(c.imag()),
                                   fixed(std::abs(c)));
            }
            out << "tail_energy=" << format_fixed(tail) << '\n';
            break;
    }
    return kOk;
}

int cmd_sumset(const Options& o, std::ostream& out) {
    const Format fmt_ = o.parsed_format();
    if (fmt_ == Format::kCsv) throw UsageError("sumset has no csv output");
    const ResidueSet s = sumset(set_operand(o, o.a, "--a"), set_operand(o, o.b, "--b"));
    if (fmt_ == Format::kJson) {
        out << Json{{"modulus", o.mod}, {"sumset", format_set(s)}, {"size", s.size()}}.dump() << '\n';
    } else {
        out << format_set(s) << '\n';
    }
    return kOk;
}

int cmd_condf(const Options& o, std::ostream& out) {
    const Format fmt_ = o.parsed_format();
    std::vector<ResidueSet> inputs;
    if (o.k.empty()) {
        inputs.push_back(set_operand(o, o.a, "--a"));
        const auto& s = inputs.back();
        if (s.modulus() % 2 != 0 || 2 * s.size() != s.modulus()) {
            throw UsageError("condf needs an even modulus and |A| = n/2");
        }
    } else {
        for (std::size_t k : family_ks(o, 3)) inputs.push_back(build_family_a(k));
    }
    if (fmt_ == Format::kCsv) out << "k,v,covers,sumset_size,missing_count\n";
    for (const ResidueSet& a : inputs) {
        const CondfStatus st = condf_status(a);
        switch (fmt_) {
            case Format::kJson:
                out << to_json(st).dump() << '\n';
                break;
            case Format::kCsv:
                for (const auto& u : st.units) {
                    out << fmt::format("{},{},{},{},{}\n", st.k, u.v, boolstr(u.covers),
                                       u.sumset_size, u.missing.size());
                }
                break;
            case Format::kText:
                out << fmt::format("k={} overall={}\n", st.k, boolstr(st.overall));
                for (const auto& u : st.units) {
                    const auto shown = std::min(u.missing.size(), kMissingCap);
                    out << fmt::format(
                        "  v={} covers={} sumset_size={} missing={}{}\n", u.v, boolstr(u.covers),
                        u.sumset_size,
                        fmt::join(u.missing.begin(), u.missing.begin() + static_cast<std::ptrdiff_t>(shown), ","),
                        u.missing.size() > shown ? fmt::format(" (+{} more)", u.missing.size() - shown) : "");
                }
                break;
        }
    }
    return kOk;
}

}  // namespace

std::vector<std::size_t> parse_k_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::string_view rest = text;
    if (rest.empty()) throw UsageError("--k is required");
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        if (const auto dots = item.find(".."); dots != std::string_view::npos) {
            const std::size_t lo = parse_size(item.substr(0, dots));
            const std::size_t hi = parse_size(item.substr(dots + 2));
            if (lo > hi) throw UsageError(fmt::format("descending range '{}'", item));
            for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
        } else {
            out.push_back(parse_size(item));
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact additive combinatorics over Z_n", "zncomb"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_set_flags = [&](CLI::App* sub, bool with_b) {
        sub->add_option("--mod", o.mod, "modulus n");
        sub->add_option("--a", o.a, "set literal, e.g. 0,1,3-7");
        if (with_b) sub->add_option("--b", o.b, "second set literal");
    };

    auto* t1 = app.add_subcommand("table1", "energy table for the family A(k)");
    t1->add_option("--k", o.k, "k values: LIST or lo..hi")->default_str("8,9,10,11,12,100,1000");
    add_format(t1);

    auto* en = app.add_subcommand("energy", "additive energy E(U,V), or E(A(k),A(k)) with --k");
    en->add_option("--k", o.k, "k values: LIST or lo..hi");
    add_set_flags(en, true);
    add_format(en);

    auto* bd = app.add_subcommand("bounds", "lower bounds for |A + v.C(A)| against the actual size");
    bd->add_option("--k", o.k, "k values: LIST or lo..hi")->required();
    bd->add_option("--v", o.v, "unit of Z_2k or 'all'");
    add_format(bd);

    auto* sc = app.add_subcommand("scan", "verify every property of A(k) over a k range");
    sc->add_option("--k", o.k, "k range lo..hi")->default_str("6..1024");
    sc->add_option("--jobs", o.jobs, "worker threads");
    add_format(sc);

    auto* di = app.add_subcommand("dichotomy", "counterpoint dichotomy verdict");
    di->add_option("--k", o.k, "family A(k) values");
    add_set_flags(di, false);
    add_format(di);

    auto* df = app.add_subcommand("dft", "Fourier coefficients of an indicator function");
    add_set_flags(df, false);
    add_format(df);

    auto* ss = app.add_subcommand("sumset", "U + V");
    add_set_flags(ss, true);
    ss->get_option("--a")->required();
    ss->get_option("--b")->required();
    ss->get_option("--mod")->required();
    add_format(ss);

    auto* cf = app.add_subcommand("condf", "coverage of A + v.C(A) for every unit v");
    cf->add_option("--k", o.k, "family A(k) values");
    add_set_flags(cf, false);
    add_format(cf);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    if (o.k.empty() && t1->parsed()) o.k = "8,9,10,11,12,100,1000";
    if (o.k.empty() && sc->parsed()) o.k = "6..1024";

    try {
        if (t1->parsed()) return cmd_table1(o, out);
        if (en->parsed()) return cmd_energy(o, out, err);
        if (bd->parsed()) return cmd_bounds(o, out, err);
        if (sc->parsed()) return cmd_scan(o, out, err);
        if (di->parsed()) return cmd_dichotomy(o, out);
        if (df->parsed()) return cmd_dft(o, out);
        if (ss->parsed()) return cmd_sumset(o, out);
        if (cf->parsed()) return cmd_condf(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace zn::cli
