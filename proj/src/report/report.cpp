#include "curveh/report.hpp"

#include <iomanip>
#include <sstream>

namespace curveh {

using nlohmann::json;

json analysis_document(const Analysis& a, const CurveReport& r, const std::optional<Arrangement>& arrangement)
{
    json doc;
    doc["schema"] = kReportSchema;

    json curve;
    curve["polynomial"] = a.polynomial;
    curve["degree"] = r.d;
    curve["arithmetic"] = to_string(a.arithmetic);
    curve["primes"] = a.primes;
    curve["kmax"] = a.kmax;
    curve["certified"] = a.certified;
    curve["m"] = r.m;
    curve["exponents"] = r.exponents;
    curve["mdr"] = r.exponents.at(0);
    curve["relation_degrees"] = r.relation_degrees;
    curve["shifts"] = r.shifts;
    curve["type"] = r.type_t;
    curve["class"] = r.cls.name();
    curve["tau"] = r.tau;
    curve["nu"] = r.nu ? json(*r.nu) : json(nullptr);
    curve["sigma"] = r.sigma ? json(*r.sigma) : json(nullptr);
    curve["free"] = r.m == 2;
    json gens = json::array();
    for (const auto& g : a.generators) gens.push_back({{"degree", g.degree}, {"components", g.components}});
    curve["generators"] = gens;
    curve["generators_exact"] = a.generators_exact;
    doc["curve"] = curve;

    json profile;
    profile["hf"] = a.milnor.hf;
    profile["stabilization_degree"] = a.milnor.stabilization_degree;
    if (a.module) {
        profile["n"] = a.module->n;
        profile["T"] = a.module->T;
    } else {
        profile["n"] = nullptr;
    }
    doc["profile"] = profile;

    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"computed", c.computed},
                          {"expected", c.expected},
                          {"relation", c.at_most ? "<=" : "="},
                          {"ok", c.ok()}});
    }
    doc["checks"] = checks;
    doc["consistent"] = r.consistent();

    doc["certificates"]["hilbert_series"] = {
        {"ok", a.certified},
        {"checked_degrees", a.milnor.hf.empty() ? 0 : static_cast<int>(a.milnor.hf.size()) - 1},
    };

    if (arrangement) {
        json arr;
        arr["lines"] = arrangement->line_count();
        arr["conics"] = arrangement->conic_count();
        arr["other_components"] =
            static_cast<int>(arrangement->components().size()) - arrangement->line_count() - arrangement->conic_count();
        arr["text"] = write_arrangement(*arrangement);
        if (arrangement->lines_only() && arrangement->line_count() >= 2) {
            IntersectionProfile p = intersection_profile(arrangement->lines());
            json t = json::object();
            for (const auto& [k, n] : p.t) t[std::to_string(k)] = n;
            arr["t"] = t;
            arr["max_multiplicity"] = p.max_multiplicity;
            arr["tau_from_profile"] = p.tau_sum();
        }
        doc["arrangement"] = arr;
    }
    return doc;
}

json catalog_comparison(const CatalogEntry& e, const CurveReport& r)
{
    json j;
    j["name"] = e.name;
    j["description"] = e.description;
    json stated = json::object();
    json agrees = json::object();
    if (e.stated_exponents) {
        stated["exponents"] = *e.stated_exponents;
        agrees["exponents"] = *e.stated_exponents == r.exponents;
    }
    if (e.stated_class) {
        stated["class"] = *e.stated_class;
        agrees["class"] = *e.stated_class == r.cls.name();
    }
    if (e.stated_tau) {
        stated["tau"] = *e.stated_tau;
        agrees["tau"] = *e.stated_tau == r.tau;
    }
    if (e.stated_type) {
        stated["type"] = *e.stated_type;
        agrees["type"] = *e.stated_type == r.type_t;
    }
    j["stated"] = stated;
    j["agrees"] = agrees;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

json certificate_json(const GenericityCertificate& c)
{
    return {{"kind", c.kind}, {"count", c.count}, {"expected", c.expected}, {"attempts", c.attempts}, {"ok", c.ok()}};
}

namespace {

std::string scalar(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) {
            if (!s.empty()) s += ",";
            s += scalar(x);
        }
        return "(" + s + ")";
    }
    return v.dump();
}

void row(std::ostringstream& out, const std::string& key, const std::string& value)
{
    out << "  " << std::left << std::setw(32) << key << ' ' << value << '\n';
}

void series(std::ostringstream& out, const std::string& label, const json& values)
{
    if (!values.is_array()) return;
    out << "  " << std::left << std::setw(32) << label << ' ';
    for (std::size_t k = 0; k < values.size(); ++k) out << std::right << std::setw(5) << values[k].dump();
    out << '\n';
}

}  // namespace

std::string render_table(const json& doc)
{
    std::ostringstream out;
    if (doc.contains("input")) {
        out << "input\n";
        for (const auto& [k, v] : doc["input"].items()) row(out, k, scalar(v));
    }
    out << "curve\n";
    for (const char* k : {"polynomial", "degree", "arithmetic", "certified", "m", "exponents", "relation_degrees", "shifts",
                          "type", "class", "tau", "nu", "sigma", "free"}) {
        if (doc["curve"].contains(k)) row(out, k, scalar(doc["curve"][k]));
    }
    out << "generators\n";
    for (const auto& g : doc["curve"]["generators"]) {
        row(out, "degree " + g["degree"].dump(), scalar(g["components"]));
    }
    out << "profile\n";
    const auto& hf = doc["profile"]["hf"];
    json ks = json::array();
    for (std::size_t k = 0; k < hf.size(); ++k) ks.push_back(k);
    series(out, "k", ks);
    series(out, "hf(k)", hf);
    series(out, "n(f)_k", doc["profile"]["n"]);
    if (doc.contains("arrangement")) {
        out << "arrangement\n";
        for (const char* k : {"lines", "conics", "other_components", "max_multiplicity", "tau_from_profile"}) {
            if (doc["arrangement"].contains(k)) row(out, k, scalar(doc["arrangement"][k]));
        }
        if (doc["arrangement"].contains("t")) {
            for (const auto& [r, n] : doc["arrangement"]["t"].items()) row(out, "t_" + r, n.dump());
        }
    }
    out << "checks\n";
    for (const auto& c : doc["checks"]) {
        row(out, c["name"].get<std::string>(),
            c["computed"].dump() + " " + c["relation"].get<std::string>() + " " + c["expected"].dump() +
                (c["ok"].get<bool>() ? "  ok" : "  VIOLATED"));
    }
    out << "certificates\n";
    row(out, "hilbert_series", doc["certificates"]["hilbert_series"]["ok"].get<bool>() ? "ok" : "not certified");
    if (doc["certificates"].contains("genericity")) {
        for (const auto& g : doc["certificates"]["genericity"]) {
            row(out, g["kind"].get<std::string>(),
                g["count"].dump() + " of " + g["expected"].dump() + (g["ok"].get<bool>() ? "  ok" : "  FAILED"));
        }
    }
    if (doc.contains("catalog")) {
        out << "catalog\n";
        for (const auto& [k, v] : doc["catalog"]["stated"].items()) {
            bool ok = doc["catalog"]["agrees"][k].get<bool>();
            row(out, "stated " + k, scalar(v) + (ok ? "  agrees" : "  DIFFERS"));
        }
        if (doc["catalog"].contains("note")) row(out, "note", doc["catalog"]["note"].get<std::string>());
    }
    if (doc.contains("seed")) row(out, "seed", doc["seed"].dump());
    if (doc.contains("timings")) {
        for (const auto& [k, v] : doc["timings"].items()) row(out, "time " + k, v.dump() + " s");
    }
    return out.str();
}

std::string render_verify_table(const std::vector<json>& checks, const json& summary)
{
    std::ostringstream out;
    out << std::left << std::setw(8) << "theorem" << std::setw(7) << "trial" << std::setw(21) << "seed" << std::setw(20)
        << "verdict"
        << "detail\n";
    for (const auto& c : checks) {
        out << std::left << std::setw(8) << c["theorem"].get<std::string>() << std::setw(7) << c["trial"].dump()
            << std::setw(21) << c["seed"].dump() << std::setw(20) << c["verdict"].get<std::string>()
            << c.value("detail", "") << '\n';
    }
    out << "summary";
    for (const char* k : {"pass", "fail", "hypothesis_not_met", "error"}) out << "  " << k << "=" << summary[k].dump();
    out << '\n';
    return out.str();
}

}  // namespace curveh
