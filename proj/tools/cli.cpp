#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curveh/analysis.hpp"
#include "curveh/arrangement.hpp"
#include "curveh/catalog.hpp"
#include "curveh/hierarchy.hpp"
#include "curveh/parser.hpp"
#include "curveh/report.hpp"
#include "curveh/verify.hpp"

namespace curveh::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ArithmeticFlags {
    bool rational = false;
    bool prime_fast = false;
    int kmax = -1;
    bool no_saturation = false;

    void attach(CLI::App* app)
    {
        auto* r = app->add_flag("--rational", rational, "exact arithmetic over QQ (slower)");
        auto* p = app->add_flag("--prime-fast", prime_fast, "a single prime, no cross-check");
        r->excludes(p);
        app->add_option("--kmax", kmax, "generator scan bound (default 2d-2, or CURVEH_KMAX)")->check(CLI::NonNegativeNumber);
        app->add_flag("--no-saturation", no_saturation, "skip the Jacobian module N(f)");
    }

    AnalysisOptions options() const
    {
        AnalysisOptions o;
        o.arithmetic = rational ? Arithmetic::Rational : prime_fast ? Arithmetic::SinglePrime : Arithmetic::TwoPrimes;
        o.saturation = !no_saturation;
        o.kmax = kmax;
        if (o.kmax < 0) {
            if (const char* env = std::getenv("CURVEH_KMAX"); env && *env) {
                try {
                    std::size_t used = 0;
                    o.kmax = std::stoi(env, &used);
                    if (used != std::string(env).size() || o.kmax < 0) throw std::invalid_argument(env);
                } catch (const std::exception&) {
                    throw UsageError(std::string("CURVEH_KMAX must be a nonnegative integer, got '") + env + "'");
                }
            }
        }
        return o;
    }
};

struct OutputFlags {
    bool json_out = false;
    bool table = false;
    bool timings = false;

    void attach(CLI::App* app, bool with_timings)
    {
        auto* j = app->add_flag("--json", json_out, "JSON output (default)");
        auto* t = app->add_flag("--table", table, "aligned table output");
        j->excludes(t);
        if (with_timings) app->add_flag("--timings", timings, "include wall-clock timings (breaks byte-identical output)");
    }
};

struct Analyzed {
    Analysis analysis;
    CurveReport report;
    double seconds = 0;
};

Analyzed analyze_certified(const Poly& f, const AnalysisOptions& opts)
{
    auto t0 = std::chrono::steady_clock::now();
    Analysis a = analyze(f, opts);
    require_certified(a);
    CurveReport r = make_report(a);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(a), std::move(r), s};
}

Arrangement read_arrangement_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open arrangement file '" + path + "'");
    return read_arrangement(in);
}

void emit(std::ostream& out, const json& doc, const OutputFlags& flags)
{
    if (flags.table) {
        out << render_table(doc);
    } else {
        out << doc.dump(2) << '\n';
    }
}

json document_for(const Analyzed& x, const std::optional<Arrangement>& arr, json input, const OutputFlags& flags)
{
    json doc = analysis_document(x.analysis, x.report, arr);
    doc["input"] = std::move(input);
    if (flags.timings) doc["timings"]["analysis"] = x.seconds;
    return doc;
}

/// Single input resolution shared by analyze and batch.
json analyze_input(const std::string& kind, const std::string& text, const AnalysisOptions& opts, const OutputFlags& flags)
{
    std::optional<Arrangement> arr;
    std::optional<CatalogEntry> entry;
    Poly f = parse_poly("x");
    if (kind == "catalog") {
        entry = catalog(text);
        arr = entry->arrangement;
        f = entry->poly();
    } else if (kind == "file") {
        arr = read_arrangement_file(text);
        f = arr->defining_poly();
    } else {
        f = parse_poly(text);
    }
    Analyzed x = analyze_certified(f, opts);
    json doc = document_for(x, arr, json{{"kind", kind}, {"text", entry ? entry->name : text}}, flags);
    if (entry) doc["catalog"] = catalog_comparison(*entry, x.report);
    return doc;
}

int exit_code_for(const std::exception_ptr& e, std::ostream& err)
{
    try {
        std::rethrow_exception(e);
    } catch (const NonReducedError& ex) {
        err << "error: " << ex.what() << '\n';
        return kNonReduced;
    } catch (const UncertifiedError& ex) {
        err << "error: " << ex.what() << '\n';
        return kUncertified;
    } catch (const CertificationError& ex) {
        err << "error: " << ex.what() << '\n';
        return kCertification;
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << '\n';
        return kVerifyFailed;
    }
}

int cmd_analyze(const std::string& poly, const std::string& file, const std::string& name, const ArithmeticFlags& af,
                const OutputFlags& of, std::ostream& out)
{
    int given = !poly.empty() + !file.empty() + !name.empty();
    if (given != 1) throw UsageError("analyze needs exactly one of POLYNOMIAL, --file or --catalog");
    std::string kind = !poly.empty() ? "polynomial" : !file.empty() ? "file" : "catalog";
    const std::string& text = !poly.empty() ? poly : !file.empty() ? file : name;
    emit(out, analyze_input(kind, text, af.options(), of), of);
    return kOk;
}

struct ConstructFlags {
    std::vector<std::string> spec;
    bool node_line = false;
    int generic_lines = 0;
    int generic_conics = 0;
    std::uint64_t seed = 1;
    std::string out_file;
    int box = 12;
};

int cmd_construct(const ConstructFlags& cf, const ArithmeticFlags& af, const OutputFlags& of, std::ostream& out)
{
    if (cf.spec.empty()) throw UsageError("construct needs a specification: double-pencil N1 N2 | catalog NAME");
    Sampler rng(cf.seed);
    SamplingOptions so;
    so.box = cf.box;
    json certs = json::array();
    Arrangement arr;
    std::optional<DoublePencil> dp;
    std::string described;
    if (cf.spec[0] == "double-pencil") {
        if (cf.spec.size() != 3) throw UsageError("usage: construct double-pencil N1 N2");
        int n1 = 0, n2 = 0;
        try {
            n1 = std::stoi(cf.spec[1]);
            n2 = std::stoi(cf.spec[2]);
        } catch (const std::exception&) {
            throw UsageError("pencil sizes must be integers");
        }
        if (n1 < 1 || n2 < n1 || n1 + n2 <= 2) throw UsageError("double pencil needs 1 <= N1 <= N2 and N1 + N2 > 2");
        dp = random_double_pencil(n1, n2, rng, cf.box);
        arr = dp->arrangement;
        described = "double-pencil " + cf.spec[1] + " " + cf.spec[2];
    } else if (cf.spec[0] == "catalog") {
        if (cf.spec.size() != 2) throw UsageError("usage: construct catalog NAME");
        CatalogEntry e = catalog(cf.spec[1]);
        arr = e.arrangement;
        described = "catalog " + e.name;
    } else {
        throw UsageError("unknown construction '" + cf.spec[0] + "'");
    }

    if (cf.node_line) {
        if (!dp) throw UsageError("--add-node-line needs a double pencil");
        if (dp->n1 < 3) throw UsageError("--add-node-line needs 3 <= N1 <= N2");
        auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dp->nodes.size()) - 1));
        Extension ext = add_line_through_one_double_point(*dp, dp->nodes[k], rng, so);
        certs.push_back(certificate_json(ext.certificate));
        arr = std::move(ext.arrangement);
        described += " +node-line";
    }
    for (int i = 0; i < cf.generic_lines; ++i) {
        Extension ext = add_generic_line(arr, rng, so);
        certs.push_back(certificate_json(ext.certificate));
        arr = std::move(ext.arrangement);
        described += " +generic-line";
    }
    for (int i = 0; i < cf.generic_conics; ++i) {
        Extension ext = add_generic_conic(arr, rng, so);
        certs.push_back(certificate_json(ext.certificate));
        arr = std::move(ext.arrangement);
        described += " +generic-conic";
    }

    if (!cf.out_file.empty()) {
        std::ofstream f(cf.out_file);
        if (!f) throw UsageError("cannot write '" + cf.out_file + "'");
        f << "# " << described << ", seed " << cf.seed << '\n' << write_arrangement(arr);
    }
    Analyzed x = analyze_certified(arr.defining_poly(), af.options());
    json doc = document_for(x, arr, json{{"kind", "construction"}, {"text", described}}, of);
    doc["seed"] = cf.seed;
    doc["certificates"]["genericity"] = certs;
    emit(out, doc, of);
    return kOk;
}

struct VerifyFlags {
    std::string id;
    int trials = 20;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string catalog_name;
    std::string example;
};

int cmd_verify(const VerifyFlags& vf, const ArithmeticFlags& af, const OutputFlags& of, std::ostream& out)
{
    AnalysisOptions ao = af.options();
    std::vector<json> lines;
    std::vector<json> summaries;
    bool ok = true;

    auto single = [&](const TheoremCheck& c) {
        lines.push_back(c.to_json());
        json s{{"theorem", c.theorem}, {"trials", 1}, {"pass", 0}, {"fail", 0}, {"hypothesis_not_met", 0}, {"error", 0}};
        switch (c.verdict) {
        case Verdict::Pass: s["pass"] = 1; break;
        case Verdict::Fail: s["fail"] = 1; break;
        case Verdict::HypothesisNotMet: s["hypothesis_not_met"] = 1; break;
        case Verdict::Error: s["error"] = 1; break;
        }
        s["ok"] = c.verdict == Verdict::Pass || c.verdict == Verdict::HypothesisNotMet;
        ok = ok && s["ok"].get<bool>();
        summaries.push_back(s);
    };

    if (!vf.catalog_name.empty() || !vf.example.empty()) {
        if (!vf.catalog_name.empty() && !vf.example.empty()) throw UsageError("--catalog and --example are exclusive");
        const std::string id = canonical_theorem_id(vf.id);
        if (!vf.catalog_name.empty()) {
            if (id != "ll") throw UsageError("--catalog applies to the ll check");
            single(check_line_bounds(catalog(vf.catalog_name).arrangement, ao));
        } else {
            if (id != "thm10" || vf.example != "ex10") throw UsageError("--example supports 'thm10 --example ex10'");
            CatalogEntry e = catalog("ex10");
            Arrangement conic;
            conic.add(e.arrangement.components()[0]);
            single(check_generic_union(conic, e.arrangement.components()[1], ao));
        }
    } else {
        std::vector<std::string> ids = vf.id == "all" ? theorem_ids() : std::vector<std::string>{canonical_theorem_id(vf.id)};
        VerifyOptions vo;
        vo.trials = vf.trials;
        vo.seed = vf.seed;
        vo.workers = vf.workers;
        vo.analysis = ao;
        for (const auto& id : ids) {
            CampaignSummary s = run_campaign(id, vo);
            for (const auto& c : s.checks) lines.push_back(c.to_json());
            summaries.push_back(s.to_json());
            ok = ok && s.ok();
        }
    }

    json total{{"theorem", vf.id}, {"seed", vf.seed}, {"ok", ok}};
    for (const char* k : {"trials", "pass", "fail", "hypothesis_not_met", "error"}) {
        long n = 0;
        for (const auto& s : summaries) n += s[k].get<long>();
        total[k] = n;
    }
    if (of.table) {
        out << render_verify_table(lines, total);
    } else {
        for (const auto& l : lines) out << l.dump() << '\n';
        for (const auto& s : summaries) out << json{{"summary", s}}.dump() << '\n';
        if (summaries.size() > 1) out << json{{"summary", total}}.dump() << '\n';
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_batch(const std::string& path, const ArithmeticFlags& af, const OutputFlags& of, std::ostream& out, std::ostream& err)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open batch file '" + path + "'");
    AnalysisOptions ao = af.options();
    int first_failure = kOk;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        auto e = line.find_last_not_of(" \t\r");
        std::string item = line.substr(b, e - b + 1);
        std::string kind = "polynomial", text = item;
        for (const char* prefix : {"catalog ", "file "}) {
            if (item.rfind(prefix, 0) == 0) {
                kind = std::string(prefix, std::string(prefix).size() - 1);
                text = item.substr(std::string(prefix).size());
            }
        }
        json record;
        try {
            record = analyze_input(kind, text, ao, of);
        } catch (...) {
            std::ostringstream msg;
            int code = exit_code_for(std::current_exception(), msg);
            std::string m = msg.str();
            if (!m.empty() && m.back() == '\n') m.pop_back();
            record = {{"schema", kReportSchema}, {"input", {{"kind", kind}, {"text", text}}}, {"error", m}, {"exit_code", code}};
            err << "line " << line_no << ": " << m << '\n';
            if (first_failure == kOk) first_failure = code;
        }
        record["line"] = line_no;
        if (of.table) {
            out << "== line " << line_no << ": " << item << '\n';
            out << (record.contains("error") ? record["error"].get<std::string>() + "\n" : render_table(record));
        } else {
            out << record.dump() << '\n';
        }
    }
    return first_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Jacobian syzygies, type and freeness defect of plane curves and arrangements", "curveh"};
    app.require_subcommand(1);

    ArithmeticFlags af;
    OutputFlags of;

    std::string poly, file, name;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a polynomial, an arrangement file or a catalog entry");
    analyze_cmd->add_option("polynomial", poly, "homogeneous polynomial in x, y, z");
    analyze_cmd->add_option("--file", file, "arrangement file");
    analyze_cmd->add_option("--catalog", name, "catalog name, e.g. bolza or cor11-family:5");
    af.attach(analyze_cmd);
    of.attach(analyze_cmd, true);

    ConstructFlags cf;
    auto* construct_cmd = app.add_subcommand("construct", "build a certified arrangement and analyze it");
    construct_cmd->add_option("spec", cf.spec, "double-pencil N1 N2 | catalog NAME")->required();
    construct_cmd->add_flag("--add-node-line", cf.node_line, "add a line through exactly one double point");
    construct_cmd->add_flag("--add-generic-line", cf.generic_lines, "add a generic line (repeatable)");
    construct_cmd->add_flag("--add-generic-conic", cf.generic_conics, "add a generic smooth conic (repeatable)");
    construct_cmd->add_option("--seed", cf.seed, "sampling seed");
    construct_cmd->add_option("--box", cf.box, "coefficient box for sampling")->check(CLI::PositiveNumber);
    construct_cmd->add_option("--out", cf.out_file, "write the arrangement file here");
    af.attach(construct_cmd);
    of.attach(construct_cmd, true);

    VerifyFlags vf;
    auto* verify_cmd = app.add_subcommand("verify", "run theorem checks");
    verify_cmd->add_option("theorem", vf.id, "theorem id or 'all'")->required();
    verify_cmd->add_option("--trials", vf.trials, "seeded trials per theorem")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", vf.seed, "campaign seed");
    verify_cmd->add_option("--workers", vf.workers, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--catalog", vf.catalog_name, "check one catalog arrangement (ll)");
    verify_cmd->add_option("--example", vf.example, "check one worked example (thm10: ex10)");
    af.attach(verify_cmd);
    of.attach(verify_cmd, false);

    std::string batch_file;
    auto* batch_cmd = app.add_subcommand("batch", "analyze one input per line");
    batch_cmd->add_option("file", batch_file, "lines: a polynomial, 'catalog NAME' or 'file PATH'")->required();
    af.attach(batch_cmd);
    of.attach(batch_cmd, true);

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
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(poly, file, name, af, of, out);
        if (construct_cmd->parsed()) return cmd_construct(cf, af, of, out);
        if (verify_cmd->parsed()) return cmd_verify(vf, af, of, out);
        if (batch_cmd->parsed()) return cmd_batch(batch_file, af, of, out, err);
    } catch (...) {
        return exit_code_for(std::current_exception(), err);
    }
    return kUsage;
}

}  // namespace curveh::cli
