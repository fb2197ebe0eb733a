// ccseq: generate mutually uncorrelated complementary sequence sets, extend
// them with CDOS doubling or nested Barker envelopes, and report correlation
// quality. Exit codes: 0 ok, 1 property violation, 2 usage/parse error,
// 3 infeasible length, 4 shape mismatch.

#include "ccseq/analysis.hpp"
#include "ccseq/barker.hpp"
#include "ccseq/ccc.hpp"
#include "ccseq/config.hpp"
#include "ccseq/error.hpp"
#include "ccseq/extend.hpp"
#include "ccseq/io.hpp"
#include "ccseq/ratio.hpp"
#include "ccseq/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace ccseq;

namespace {

std::string ratio_line(const Ratio& r) {
    return format_ratio(r) + " (" + format_ratio_decimal(r) + ")";
}

SetFileFormat choose_format(const std::string& requested, const fs::path& out) {
    if (requested == "json") {
        return SetFileFormat::Json;
    }
    if (requested == "text") {
        return SetFileFormat::Text;
    }
    return out.extension() == ".txt" ? SetFileFormat::Text
                                     : SetFileFormat::Json;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    return out;
}

std::string describe_base(const ConstructionDescriptor& d, int set_index) {
    std::ostringstream out;
    out << "base: m=" << d.m << " n_stages=" << d.n_stages
        << " set=" << set_index << " (M=" << d.mate_count()
        << " L=" << d.length() << ")";
    return out.str();
}

std::string factor_product(const NestingPlan& plan) {
    if (plan.factors.empty()) {
        return "identity";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < plan.factors.size(); ++i) {
        if (i > 0) {
            out << "·";
        }
        out << plan.factors[i].length;
    }
    return out.str();
}

std::string factor_variants(const NestingPlan& plan) {
    std::ostringstream out;
    for (std::size_t i = 0; i < plan.factors.size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        out << plan.factors[i].length << ":" << plan.factors[i].variant;
    }
    return out.str();
}

void report_nesting_plan(const NestingPlan& plan) {
    std::cout << "plan: " << plan.multiplier << " = " << factor_product(plan);
    if (!plan.factors.empty()) {
        std::cout << " (outermost first)\n";
        std::cout << "variants: " << factor_variants(plan) << "\n";
    } else {
        std::cout << "\n";
    }
    std::cout << "predicted_smr = " << ratio_line(plan.predicted_smr) << "\n";
}

long long parse_long(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != text.size()) {
            throw Error("trailing characters in " + what + " '" + text + "'");
        }
        return value;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("cannot parse " + what + " '" + text + "'");
    }
}

Ratio parse_gain(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const long long num = parse_long(text.substr(0, slash), "gain");
        const long long den = parse_long(text.substr(slash + 1), "gain");
        if (den <= 0) {
            throw Error("gain denominator must be positive");
        }
        return Ratio(num, den);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 9) {
            throw Error("cannot parse gain '" + text + "'");
        }
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            den *= 10;
        }
        const long long num =
            parse_long(whole, "gain") * den + parse_long(frac, "gain");
        return Ratio(num, den);
    }
    return Ratio(parse_long(text, "gain"));
}

std::vector<BarkerId> parse_factor_list(const std::string& text) {
    std::vector<BarkerId> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) {
            throw Error("empty factor in list '" + text + "'");
        }
        const auto colon = token.find(':');
        BarkerId id;
        if (colon == std::string::npos) {
            id.length = static_cast<int>(parse_long(token, "factor"));
        } else {
            id.length =
                static_cast<int>(parse_long(token.substr(0, colon), "factor"));
            id.variant = static_cast<int>(
                parse_long(token.substr(colon + 1), "variant"));
        }
        out.push_back(id);
    }
    if (out.empty()) {
        throw Error("empty factor list");
    }
    return out;
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
    int m = 1;
    int n_stages = 0;
    std::string output;
    std::string format = "json";
};

int run_generate(const GenerateOpts& opts) {
    const CompleteComplementaryCode family =
        generate_ccc(opts.m, opts.n_stages);
    const SetFileFormat format = choose_format(opts.format, "");
    const char* ext = format == SetFileFormat::Json ? ".json" : ".txt";

    fs::create_directories(opts.output);
    std::cout << "M = " << family.mate_count() << " sets, L = "
              << family.length() << " chips, SAC mainlobe = "
              << family.mate_count() * family.length() << "\n";
    for (const ComplementarySet& set : family.sets) {
        const fs::path path =
            fs::path(opts.output) /
            ("set" + std::to_string(set.set_index) + ext);
        write_set_file(to_document(set), path, format);
        std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ extend

struct ExtendOpts {
    std::string input;
    std::string output;
    int cdos = 0;
    std::string factors;
    long long multiplier = 0;
    bool exhaustive = false;
    std::string format;
    bool have_cdos = false;
    bool have_factors = false;
    bool have_multiplier = false;
};

int run_extend(const ExtendOpts& opts) {
    const SetDocument doc = read_set_file(opts.input);
    if (doc.extension) {
        throw Error("input " + opts.input +
                    " is already extended; extend a base set");
    }
    const ComplementarySet base = as_complementary_set(doc);

    ExtendedSet extended;
    if (opts.have_cdos) {
        extended = cdos_extend(base, opts.cdos);
        std::cout << "plan: cdos depth=" << opts.cdos << ", multiplier "
                  << plan_multiplier(extended.plan) << "\n";
        Ratio smr(0);
        if (opts.cdos >= 1) {
            const BinarySequence env = plan_envelope(extended.plan);
            smr = metrics(fast_xcorr(env, env)).smr;
        }
        std::cout << "predicted_smr = " << ratio_line(smr) << "\n";
    } else if (opts.have_factors) {
        const NestingPlan plan =
            make_nesting_plan(parse_factor_list(opts.factors));
        extended = barker_extend(base, plan);
        report_nesting_plan(plan);
    } else {
        const NestingPlan plan = plan_length(
            opts.multiplier, opts.exhaustive ? SearchMode::Exhaustive
                                             : SearchMode::Default);
        extended = barker_extend(base, plan);
        report_nesting_plan(plan);
    }

    const fs::path out(opts.output);
    write_set_file(to_document(extended), out,
                   choose_format(opts.format, out));
    std::cout << "wrote " << out.string() << "\n";
    return 0;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeOpts {
    std::string metric;
    std::vector<std::string> files;
    std::string csv;
};

CorrelationProfile profile_for(const SetDocument& doc) {
    return doc.extension ? sac(as_extended_set(doc))
                         : sac(as_complementary_set(doc));
}

CorrelationProfile scc_for(const SetDocument& a, const SetDocument& b) {
    if (a.extension && b.extension) {
        return scc(as_extended_set(a), as_extended_set(b));
    }
    if (a.extension) {
        return scc(as_extended_set(a), as_complementary_set(b));
    }
    if (b.extension) {
        return scc(as_complementary_set(a), as_extended_set(b));
    }
    return scc(as_complementary_set(a), as_complementary_set(b));
}

int run_analyze(const AnalyzeOpts& opts) {
    std::vector<std::string> comments;
    CorrelationProfile profile(0, {0}, ProfileKind::Sac);

    if (opts.metric == "sac") {
        if (opts.files.size() != 1) {
            throw Error("sac takes exactly one set file");
        }
        const SetDocument doc = read_set_file(opts.files[0]);
        profile = profile_for(doc);
        const SidelobeMetrics m = metrics(profile);
        std::cout << "kind: sac\n";
        std::cout << "mates = " << doc.mate_count() << ", length = "
                  << doc.length() << "\n";
        std::cout << "mainlobe = " << profile.mainlobe() << "\n";
        std::cout << "smr = " << ratio_line(m.smr) << "\n";
        std::cout << "signed_sum_ratio = " << ratio_line(m.signed_sum_ratio)
                  << "\n";
        std::cout << "abs_sum_ratio = " << ratio_line(m.abs_sum_ratio)
                  << "\n";
        comments.push_back("source: " + opts.files[0]);
        comments.push_back(describe_base(doc.descriptor, doc.set_index));
    } else {
        if (opts.files.size() != 2) {
            throw Error("scc takes exactly two set files");
        }
        const SetDocument a = read_set_file(opts.files[0]);
        const SetDocument b = read_set_file(opts.files[1]);
        profile = scc_for(a, b);
        long long peak = 0;
        for (const long long v : profile.values()) {
            peak = std::max(peak, v < 0 ? -v : v);
        }
        std::cout << "kind: scc\n";
        std::cout << "uncorrelated: " << (peak == 0 ? "true" : "false")
                  << "\n";
        std::cout << "max_abs = " << peak << "\n";
        comments.push_back("source: " + opts.files[0] + " vs " +
                           opts.files[1]);
    }

    if (!opts.csv.empty()) {
        auto out = open_output(opts.csv);
        write_profile_csv(profile, out, comments);
        std::cout << "wrote " << opts.csv << "\n";
    }
    return 0;
}

// -------------------------------------------------------------------- plan

struct PlanOpts {
    std::string gain;
    bool compare_pow2 = false;
    std::string count;
};

int run_plan(const PlanOpts& opts) {
    if (opts.gain.empty() && opts.count.empty()) {
        throw Error("plan needs --gain or --count");
    }
    if (!opts.gain.empty()) {
        const Ratio gain = parse_gain(opts.gain);
        const long long n = min_multiplier(gain);
        const NestingPlan plan = plan_length(n, SearchMode::Default);
        std::cout << n << " (" << factor_product(plan) << ")";
        if (opts.compare_pow2) {
            long long pow2 = 1;
            while (Ratio(pow2) < gain) {
                pow2 <<= 1;
            }
            std::ostringstream pct;
            pct.precision(10);
            pct << 100.0 * static_cast<double>(pow2 - n) /
                       static_cast<double>(pow2);
            std::cout << " vs " << pow2 << "; " << pct.str() << "% shorter";
        }
        std::cout << "\n";
        std::cout << "predicted_smr = " << ratio_line(plan.predicted_smr)
                  << "\n";
    }
    if (!opts.count.empty()) {
        const auto sep = opts.count.find("..");
        if (sep == std::string::npos) {
            throw Error("--count wants lo..hi, got '" + opts.count + "'");
        }
        const long long lo = parse_long(opts.count.substr(0, sep), "count");
        const long long hi = parse_long(opts.count.substr(sep + 2), "count");
        std::cout << "feasible in [" << lo << ".." << hi
                  << "]: " << count_feasible(lo, hi) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- figures

struct FiguresOpts {
    std::string figure;
    std::string output = ".";
};

void write_profile_file(const fs::path& path,
                        const CorrelationProfile& profile,
                        const std::vector<std::string>& comments) {
    auto out = open_output(path);
    write_profile_csv(profile, out, comments);
    std::cout << "wrote " << path.string() << "\n";
}

int run_figures(const FiguresOpts& opts) {
    const fs::path dir(opts.output);
    fs::create_directories(dir);

    if (opts.figure == "fig1") {
        const auto family = generate_ccc(1, 1);
        const ComplementarySet& base = family.sets[0];
        const std::string base_note = describe_base(base.descriptor, 0);

        const NestingPlan plan = plan_length(4, SearchMode::Default);
        const ExtendedSet barker4 = barker_extend(base, plan);
        const ExtendedSet cdos4 = cdos_extend(base, 2);
        write_profile_file(dir / "fig1_barker.csv", sac(barker4),
                           {base_note, "extension: barker " +
                                           factor_variants(plan)});
        write_profile_file(dir / "fig1_cdos.csv", sac(cdos4),
                           {base_note, "extension: cdos depth=2"});
        std::cout << "barker multiplier 4: smr = "
                  << ratio_line(metrics(sac(barker4)).smr) << "\n";
        std::cout << "cdos multiplier 4: smr = "
                  << ratio_line(metrics(sac(cdos4)).smr) << "\n";
        return 0;
    }

    if (opts.figure == "fig2") {
        const auto family = generate_ccc(1, 1);
        const ComplementarySet& base = family.sets[0];
        std::vector<MetricRow> rows;
        for (long long n = 2; n <= 128; ++n) {
            if (count_feasible(n, n) != 1) {
                continue;
            }
            const ExtendedSet ext =
                barker_extend(base, plan_length(n, SearchMode::Default));
            rows.push_back({n, "smr_barker", metrics(sac(ext)).smr});
        }
        for (int q = 1; q <= 7; ++q) {
            const ExtendedSet ext = cdos_extend(base, q);
            rows.push_back({1LL << q, "smr_cdos", metrics(sac(ext)).smr});
        }
        auto out = open_output(dir / "fig2.csv");
        write_metric_csv(rows, out, {describe_base(base.descriptor, 0)});
        std::cout << "wrote " << (dir / "fig2.csv").string() << "\n";
        std::cout << "rows = " << rows.size() << "\n";
        return 0;
    }

    if (opts.figure == "fig3") {
        const auto family = generate_ccc(2, 1);
        const ComplementarySet& base = family.sets[0];
        const std::string base_note = describe_base(base.descriptor, 0);
        for (const int depth : {3, 4}) {
            const ExtendedSet ext = cdos_extend(base, depth);
            write_profile_file(
                dir / ("fig3_cdos" + std::to_string(1 << depth) + ".csv"),
                sac(ext),
                {base_note, "extension: cdos depth=" + std::to_string(depth)});
        }
        for (const long long n : {6LL, 10LL}) {
            const NestingPlan plan = plan_length(n, SearchMode::Default);
            const ExtendedSet ext = barker_extend(base, plan);
            write_profile_file(
                dir / ("fig3_barker" + std::to_string(n) + ".csv"), sac(ext),
                {base_note, "extension: barker " + factor_variants(plan)});
        }
        return 0;
    }

    if (opts.figure == "fig4") {
        const auto family = generate_ccc(1, 1);
        const ComplementarySet& base = family.sets[0];
        const std::string base_note = describe_base(base.descriptor, 0);
        for (const long long n : {7LL, 11LL}) {
            const NestingPlan plan = plan_length(n, SearchMode::Default);
            const ExtendedSet ext = barker_extend(base, plan);
            write_profile_file(
                dir / ("fig4_barker" + std::to_string(n) + ".csv"), sac(ext),
                {base_note, "extension: barker " + factor_variants(plan)});
            std::cout << "multiplier " << n << ": smr = "
                      << ratio_line(metrics(sac(ext)).smr) << "\n";
        }
        return 0;
    }

    if (opts.figure == "fig5") {
        const auto family = generate_ccc(1, 1);
        const ComplementarySet& base = family.sets[0];
        std::vector<MetricRow> rows;
        for (int q = 1; q <= 7; ++q) {
            const long long n = 1LL << q;
            const SidelobeMetrics cd = metrics(sac(cdos_extend(base, q)));
            const SidelobeMetrics bk = metrics(
                sac(barker_extend(base, plan_length(n, SearchMode::Default))));
            rows.push_back({n, "cdos_signed", cd.signed_sum_ratio});
            rows.push_back({n, "cdos_abs", cd.abs_sum_ratio});
            rows.push_back({n, "barker_signed", bk.signed_sum_ratio});
            rows.push_back({n, "barker_abs", bk.abs_sum_ratio});
        }
        auto out = open_output(dir / "fig5.csv");
        write_metric_csv(rows, out, {describe_base(base.descriptor, 0)});
        std::cout << "wrote " << (dir / "fig5.csv").string() << "\n";
        return 0;
    }

    throw Error("unknown figure id '" + opts.figure + "'");
}

// ------------------------------------------------------------------ verify

struct VerifyOpts {
    std::vector<std::string> files;
    bool extended = false;
};

void print_witness(const VerifyResult& result) {
    if (result.witness) {
        std::cout << "  witness: lag " << result.witness->lag << ", value "
                  << result.witness->value << "\n";
    }
}

int run_verify(const VerifyOpts& opts) {
    bool all_ok = true;

    if (!opts.extended) {
        std::vector<ComplementarySet> sets;
        for (const std::string& file : opts.files) {
            const SetDocument doc = read_set_file(file);
            if (doc.extension) {
                throw Error("input " + file +
                            " is an extended set; pass --extended");
            }
            sets.push_back(as_complementary_set(doc));
            const VerifyResult r = is_complementary(sets.back());
            std::cout << file << " complementary: "
                      << (r.ok ? "true" : "false") << "\n";
            print_witness(r);
            all_ok = all_ok && r.ok;
        }
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                if (sets[i].set_index == sets[j].set_index) {
                    std::cout << "pair (" << opts.files[i] << ", "
                              << opts.files[j]
                              << "): same mate, no expectation\n";
                    continue;
                }
                const VerifyResult r = are_uncorrelated(sets[i], sets[j]);
                std::cout << "pair (" << opts.files[i] << ", "
                          << opts.files[j] << "): uncorrelated: "
                          << (r.ok ? "true" : "false") << "\n";
                print_witness(r);
                all_ok = all_ok && r.ok;
            }
        }
    } else {
        std::vector<ExtendedSet> sets;
        for (const std::string& file : opts.files) {
            const SetDocument doc = read_set_file(file);
            if (!doc.extension) {
                throw Error("input " + file +
                            " is a base set; drop --extended");
            }
            sets.push_back(as_extended_set(doc));
            const VerifyResult r = is_complementary(sets.back());
            std::cout << file << " complementary: "
                      << (r.ok ? "true" : "false (expected after extension)")
                      << "\n";
        }
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                if (sets[i].set_index == sets[j].set_index) {
                    std::cout << "pair (" << opts.files[i] << ", "
                              << opts.files[j]
                              << "): same mate, no expectation\n";
                    continue;
                }
                const VerifyResult r = are_uncorrelated(sets[i], sets[j]);
                std::cout << "pair (" << opts.files[i] << ", "
                          << opts.files[j] << "): uncorrelated: "
                          << (r.ok ? "true" : "false") << "\n";
                print_witness(r);
                all_ok = all_ok && r.ok;
            }
        }
    }

    std::cout << (all_ok ? "ok" : "violations found") << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complementary sequence sets: generation, extension, "
                 "correlation analysis"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    GenerateOpts gen_opts;
    CLI::App* gen = app.add_subcommand(
        "generate", "generate all mates of a code family");
    gen->add_option("-m,--m", gen_opts.m, "mate-count exponent, M = 2^m")
        ->required()
        ->check(CLI::Range(1, 10));
    gen->add_option("-n,--n-stages", gen_opts.n_stages,
                    "construction stages, L = M^n")
        ->required()
        ->check(CLI::Range(0, 30));
    gen->add_option("-o,--output", gen_opts.output, "output directory")
        ->required();
    gen->add_option("--format", gen_opts.format, "file format")
        ->check(CLI::IsMember({"json", "text"}));

    ExtendOpts ext_opts;
    CLI::App* ext = app.add_subcommand(
        "extend", "extend a base set by a sign envelope");
    ext->add_option("-i,--input", ext_opts.input, "base set file")
        ->required();
    ext->add_option("-o,--output", ext_opts.output, "extended set file")
        ->required();
    CLI::Option* o_cdos =
        ext->add_option("--cdos", ext_opts.cdos, "CDOS doubling depth")
            ->check(CLI::Range(0, 40));
    CLI::Option* o_factors = ext->add_option(
        "--factors", ext_opts.factors,
        "explicit factor list, outermost first, e.g. 4:0,5:0 or 4,5");
    CLI::Option* o_mult = ext->add_option(
        "--multiplier", ext_opts.multiplier, "length multiplier to plan");
    o_cdos->excludes(o_factors)->excludes(o_mult);
    o_factors->excludes(o_mult);
    ext->add_flag("--exhaustive", ext_opts.exhaustive,
                  "search all factor orders and variants")
        ->needs(o_mult);
    ext->add_option("--format", ext_opts.format, "file format")
        ->check(CLI::IsMember({"json", "text"}));

    AnalyzeOpts ana_opts;
    CLI::App* ana = app.add_subcommand(
        "analyze", "correlation profile and sidelobe metrics");
    ana->add_option("metric", ana_opts.metric, "sac or scc")
        ->required()
        ->check(CLI::IsMember({"sac", "scc"}));
    ana->add_option("files", ana_opts.files, "set file(s)")
        ->required()
        ->expected(1, 2);
    ana->add_option("--csv", ana_opts.csv, "write lag,value CSV here");

    PlanOpts plan_opts;
    CLI::App* plan = app.add_subcommand(
        "plan", "length planning and feasibility counts");
    plan->add_option("--gain", plan_opts.gain,
                     "target processing gain (integer, fraction, or decimal)");
    plan->add_flag("--compare-pow2", plan_opts.compare_pow2,
                   "compare against the smallest power of two >= gain");
    plan->add_option("--count", plan_opts.count,
                     "count feasible multipliers in lo..hi");

    FiguresOpts fig_opts;
    CLI::App* fig = app.add_subcommand(
        "figures", "emit figure data as CSV");
    fig->add_option("figure", fig_opts.figure, "fig1..fig5")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5"}));
    fig->add_option("-o,--output", fig_opts.output, "output directory");

    VerifyOpts ver_opts;
    CLI::App* ver = app.add_subcommand(
        "verify", "check complementarity and cross-correlation");
    ver->add_option("files", ver_opts.files, "set files")
        ->required()
        ->expected(1, -1);
    ver->add_flag("--extended", ver_opts.extended,
                  "inputs are extended sets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            return run_generate(gen_opts);
        }
        if (ext->parsed()) {
            ext_opts.have_cdos = o_cdos->count() > 0;
            ext_opts.have_factors = o_factors->count() > 0;
            ext_opts.have_multiplier = o_mult->count() > 0;
            if (!ext_opts.have_cdos && !ext_opts.have_factors &&
                !ext_opts.have_multiplier) {
                throw Error("extend needs --cdos, --factors, or --multiplier");
            }
            return run_extend(ext_opts);
        }
        if (ana->parsed()) {
            return run_analyze(ana_opts);
        }
        if (plan->parsed()) {
            return run_plan(plan_opts);
        }
        if (fig->parsed()) {
            return run_figures(fig_opts);
        }
        if (ver->parsed()) {
            return run_verify(ver_opts);
        }
    } catch (const NotFeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const MateCountMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
