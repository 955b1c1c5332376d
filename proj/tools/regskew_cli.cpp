// Command-line front end: bound evaluation, table reproduction, nonvanishing
// certificates, Dickson invariants and map verification, with deterministic
// text/CSV/JSON output. Exit codes: 0 success, 1 when a certification comes
// back NOT_CERTIFIED or a verify-map run violates --expect clean, 2 on
// invalid arguments.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "regskew/bounds.hpp"
#include "regskew/charclass.hpp"
#include "regskew/dickson.hpp"
#include "regskew/dyadic.hpp"
#include "regskew/gf2poly.hpp"
#include "regskew/regcheck.hpp"

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

json problem_json(const regskew::bounds::Problem& p) {
    using regskew::bounds::ProblemKind;
    json j;
    switch (p.kind) {
    case ProblemKind::Regular:
        j["type"] = "regular";
        j["k"] = p.k;
        break;
    case ProblemKind::Skew:
        j["type"] = "skew";
        j["l"] = p.l;
        break;
    case ProblemKind::RegularSkew:
        j["type"] = "regular-skew";
        j["k"] = p.k;
        j["l"] = p.l;
        break;
    }
    return j;
}

json bound_json(const regskew::bounds::BoundReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "bound_report";
    j["problem"] = problem_json(r.problem);
    j["d"] = r.d;
    j["entries"] = json::array();
    for (const auto& e : r.entries)
        j["entries"].push_back(
            {{"formula", e.formula}, {"min_admissible_n", e.min_admissible_n}, {"source", e.source}});
    j["best_lower"] = r.best_lower;
    if (r.tight == regskew::bounds::Tightness::Exact)
        j["tight"] = {{"status", "EXACT"},
                      {"n", *r.tight_n},
                      {"family", r.tight_family},
                      {"source", r.tight_source}};
    else
        j["tight"] = {{"status", "UNKNOWN"}};
    j["notes"] = r.notes;
    return j;
}

json table_json(const regskew::bounds::ComparisonTable& t) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "table";
    j["csv_header"] = "l,d,main2,stojanovic";
    j["cells"] = json::array();
    for (const auto& c : t.cells) {
        json cell = {{"l", c.l}, {"d", c.d}, {"main2", c.main2}, {"stojanovic", c.stojanovic}};
        if (c.published_main2)
            cell["paper_discrepancy"] = {{"column", "main2"}, {"published", *c.published_main2}};
        if (c.published_stojanovic)
            cell["paper_discrepancy"] = {{"column", "stojanovic"},
                                         {"published", *c.published_stojanovic}};
        j["cells"].push_back(cell);
    }
    return j;
}

std::string table_text(const regskew::bounds::ComparisonTable& t,
                       const std::vector<std::int64_t>& ds) {
    std::string out = "d          ";
    for (std::int64_t d : ds) {
        std::string v = std::to_string(d);
        out += std::string(v.size() < 6 ? 6 - v.size() : 1, ' ') + v;
    }
    out += '\n';
    std::vector<std::string> footnotes;
    for (std::size_t base = 0; base + ds.size() <= t.cells.size(); base += ds.size()) {
        const std::int64_t l = t.cells[base].l;
        for (int row = 0; row < 2; ++row) {
            std::string label = "l=" + std::to_string(l) + (row == 0 ? " MAIN2" : " STOJ ");
            out += label + std::string(label.size() < 11 ? 11 - label.size() : 1, ' ');
            for (std::size_t i = 0; i < ds.size(); ++i) {
                const auto& c = t.cells[base + i];
                std::int64_t v = row == 0 ? c.main2 : c.stojanovic;
                bool flagged = row == 0 ? c.published_main2.has_value()
                                        : c.published_stojanovic.has_value();
                std::string s = std::to_string(v) + (flagged ? "*" : "");
                out += std::string(s.size() < 6 ? 6 - s.size() : 1, ' ') + s;
                if (flagged)
                    footnotes.push_back("* paper_discrepancy at l=" + std::to_string(c.l) +
                                        " d=" + std::to_string(c.d) + ": published value " +
                                        std::to_string(row == 0 ? *c.published_main2
                                                                : *c.published_stojanovic) +
                                        ", formula value " + std::to_string(v) + " kept");
            }
            out += '\n';
        }
    }
    for (const std::string& f : footnotes)
        out += f + '\n';
    return out;
}

json certificate_json(const regskew::Certificate& c, bool with_trace);

json trace_json(const std::vector<regskew::FactorCertificate>& trace) {
    json arr = json::array();
    for (const auto& f : trace) {
        json jf = {{"factor", f.count},
                   {"target_degree", f.target_degree},
                   {"witness_exponent", f.witness_exponent},
                   {"witness", f.witness.str()},
                   {"certified", f.certified}};
        if (f.lucas_coefficient)
            jf["lucas_coefficient"] = *f.lucas_coefficient;
        arr.push_back(jf);
    }
    return arr;
}

json certificate_json(const regskew::Certificate& c, bool with_trace) {
    json j;
    j["verdict"] = regskew::to_string(c.verdict);
    j["witness"] = c.witness;
    if (c.r)
        j["r"] = *c.r;
    if (c.s)
        j["s"] = *c.s;
    if (with_trace) {
        j["trace"] = trace_json(c.trace);
        if (!c.parts.empty()) {
            json parts;
            for (const auto& [label, part] : c.parts)
                parts[label] = certificate_json(part, true);
            j["parts"] = parts;
        }
    }
    return j;
}

std::string rational_str(const regskew::regcheck::Rational& r) { return r.str(); }

json report_json(const regskew::regcheck::RegularityReport& r, const std::string& family) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "regularity_report";
    j["family"] = family;
    j["k"] = r.k;
    j["arithmetic"] = r.arithmetic;
    j["rng"] = r.rng;
    if (r.seed)
        j["seed"] = *r.seed;
    j["trials"] = r.trials;
    j["verdict"] = regskew::regcheck::to_string(r.verdict);
    j["failure_count"] = r.failures.size();
    j["failures"] = json::array();
    const std::size_t shown = std::min<std::size_t>(r.failures.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& f = r.failures[i];
        json pts = json::array();
        for (const auto& p : f.points) {
            json pt = json::array();
            for (const auto& x : p)
                pt.push_back(rational_str(x));
            pts.push_back(pt);
        }
        j["failures"].push_back({{"points", pts}, {"rank", f.rank}, {"defect", f.defect}});
    }
    if (r.min_separation_sq)
        j["min_separation_sq"] = rational_str(*r.min_separation_sq);
    j["notes"] = r.notes;
    return j;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        out.push_back(std::stoll(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty())
        throw CLI::ValidationError("empty list");
    return out;
}

// "a..b" (inclusive on both ends) or a comma list
std::vector<std::int64_t> parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        return parse_int_list(text);
    std::int64_t a = std::stoll(text.substr(0, dots));
    std::int64_t b = std::stoll(text.substr(dots + 2));
    if (b < a)
        throw CLI::ValidationError("range upper end below lower end");
    std::vector<std::int64_t> out;
    for (std::int64_t v = a; v <= b; ++v)
        out.push_back(v);
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("HRE_MAX_TERMS")) {
        try {
            regskew::gf2::set_term_limit(std::stoull(env));
        } catch (const std::exception&) {
            std::cerr << "invalid HRE_MAX_TERMS value: " << env << "\n";
            return 2;
        }
    }

    CLI::App app{"obstruction bounds and certificates for regular/skew embedding problems"};
    app.require_subcommand(1);

    // ---- bound ----
    auto* bound = app.add_subcommand("bound", "evaluate a lower-bound report");
    bound->require_subcommand(1);
    std::int64_t bd = 2, bk = 2, bl = 2;
    std::string bound_format = "text";
    auto add_format = [](CLI::App* cmd, std::string& target, bool with_csv) {
        std::vector<std::string> allowed = with_csv
                                               ? std::vector<std::string>{"text", "csv", "json"}
                                               : std::vector<std::string>{"text", "json"};
        cmd->add_option("--format", target, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };
    auto* bound_regular = bound->add_subcommand("regular", "k-regular maps");
    bound_regular->add_option("--d", bd, "dimension d")->required();
    bound_regular->add_option("--k", bk, "number of points k")->required();
    add_format(bound_regular, bound_format, false);
    auto* bound_skew = bound->add_subcommand("skew", "l-skew embeddings");
    bound_skew->add_option("--d", bd, "dimension d")->required();
    bound_skew->add_option("--l", bl, "number of tangent spaces l")->required();
    add_format(bound_skew, bound_format, false);
    auto* bound_rs = bound->add_subcommand("regular-skew", "k-regular-l-skew embeddings");
    bound_rs->add_option("--d", bd, "dimension d")->required();
    bound_rs->add_option("--k", bk, "number of points k")->required();
    bound_rs->add_option("--l", bl, "number of tangent spaces l")->required();
    add_format(bound_rs, bound_format, false);

    // ---- table ----
    auto* table = app.add_subcommand("table", "MAIN2 vs Stojanovic comparison table");
    std::string table_l = "3,4,5", table_d = "2..8", table_format = "text";
    table->add_option("--l", table_l, "comma list of l values")->capture_default_str();
    table->add_option("--d", table_d, "d range a..b or comma list")->capture_default_str();
    add_format(table, table_format, true);

    // ---- certify ----
    auto* certify = app.add_subcommand("certify", "nonvanishing certificates");
    certify->require_subcommand(1);
    std::int64_t cd = 2, ck = 2, cl = 2;
    bool with_trace = false;
    std::string cert_format = "text";
    auto* cert_regular = certify->add_subcommand("regular", "dual class of the bundle");
    cert_regular->add_option("--d", cd)->required();
    cert_regular->add_option("--k", ck)->required();
    cert_regular->add_flag("--trace", with_trace, "include the per-factor trace");
    add_format(cert_regular, cert_format, false);
    auto* cert_skew = certify->add_subcommand("skew", "dual class of (d+1) copies");
    cert_skew->add_option("--d", cd)->required();
    cert_skew->add_option("--l", cl)->required();
    cert_skew->add_flag("--trace", with_trace, "include the per-factor trace");
    add_format(cert_skew, cert_format, false);
    auto* cert_rs = certify->add_subcommand("regular-skew", "product certification");
    cert_rs->add_option("--d", cd)->required();
    cert_rs->add_option("--k", ck)->required();
    cert_rs->add_option("--l", cl)->required();
    cert_rs->add_flag("--trace", with_trace, "include the per-factor trace");
    add_format(cert_rs, cert_format, false);

    // ---- dickson ----
    auto* dickson_cmd = app.add_subcommand("dickson", "Dickson invariants q_{m,s}");
    std::uint32_t dm = 2;
    bool dverify = false, dlong = false;
    std::string dickson_format = "text";
    dickson_cmd->add_option("--m", dm, "number of variables (1..4)")->required();
    dickson_cmd->add_flag("--verify", dverify, "exhaustive GL-invariance check");
    dickson_cmd->add_flag("--long", dlong, "allow the m = 4 long run (20160 matrices)");
    add_format(dickson_cmd, dickson_format, false);

    // ---- verify-map ----
    auto* vmap = app.add_subcommand("verify-map", "sample a map family for regularity");
    std::string family_text;
    std::int64_t vk = 3, vtrials = 1000;
    std::uint64_t vseed = 42;
    std::string varith = "exact", vexpect, vmap_format = "text";
    double vtol = 1e-9;
    vmap->add_option("--family", family_text, "family, e.g. sphere_lift(2)")->required();
    vmap->add_option("--k", vk, "number of points")->required();
    vmap->add_option("--trials", vtrials)->capture_default_str();
    vmap->add_option("--seed", vseed)->capture_default_str();
    vmap->add_option("--arithmetic", varith)->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    vmap->add_option("--tolerance", vtol, "float-mode singular value threshold")
        ->capture_default_str();
    vmap->add_option("--expect", vexpect, "'clean' makes counterexamples an error")
        ->check(CLI::IsMember({"clean"}));
    add_format(vmap, vmap_format, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message and usage hint
        return 2;
    }

    try {
        if (bound->parsed()) {
            regskew::bounds::BoundReport r;
            if (bound_regular->parsed())
                r = regskew::bounds::regular_bound(bd, bk);
            else if (bound_skew->parsed())
                r = regskew::bounds::skew_bound(bd, bl);
            else
                r = regskew::bounds::regular_skew_bound(bd, bk, bl);
            if (bound_format == "json")
                emit(bound_json(r));
            else
                std::cout << r.to_text();
            return 0;
        }

        if (table->parsed()) {
            auto ls = parse_int_list(table_l);
            auto ds = parse_range(table_d);
            auto t = regskew::bounds::comparison_table(ls, ds);
            if (table_format == "csv")
                std::cout << regskew::bounds::to_csv(t);
            else if (table_format == "json")
                emit(table_json(t));
            else
                std::cout << table_text(t, ds);
            return 0;
        }

        if (certify->parsed()) {
            regskew::Certificate c;
            regskew::bounds::Problem prob;
            if (cert_regular->parsed()) {
                c = regskew::certify_regular(cd, ck);
                prob = {regskew::bounds::ProblemKind::Regular, ck, 0};
            } else if (cert_skew->parsed()) {
                c = regskew::certify_skew(cd, cl);
                prob = {regskew::bounds::ProblemKind::Skew, 0, cl};
            } else {
                c = regskew::certify_regular_skew(cd, ck, cl);
                prob = {regskew::bounds::ProblemKind::RegularSkew, ck, cl};
            }
            if (cert_format == "json") {
                json j = certificate_json(c, with_trace);
                j["schema_version"] = kSchemaVersion;
                j["kind"] = "certificate";
                j["problem"] = problem_json(prob);
                j["d"] = cd;
                emit(j);
            } else {
                if (with_trace) {
                    std::cout << c.to_text();
                } else {
                    std::cout << "verdict: " << regskew::to_string(c.verdict) << "\n"
                              << "witness: " << c.witness << "\n";
                    if (c.r)
                        std::cout << "r: " << *c.r << "\n";
                    if (c.s)
                        std::cout << "s: " << *c.s << "\n";
                }
            }
            return c.certified() ? 0 : 1;
        }

        if (dickson_cmd->parsed()) {
            auto alg = regskew::dickson::dickson_invariants(dm);
            std::optional<bool> holds;
            if (dverify)
                holds = regskew::dickson::verify_gl_invariance(alg, dlong);
            if (dickson_format == "json") {
                json j;
                j["schema_version"] = kSchemaVersion;
                j["kind"] = "dickson";
                j["m"] = dm;
                j["invariants"] = json::array();
                for (std::uint32_t i = 0; i < dm; ++i) {
                    std::uint32_t s = dm - 1 - i;
                    j["invariants"].push_back({{"s", s},
                                               {"degree", alg.invariants[i].degree()},
                                               {"polynomial", alg.invariants[i].str()}});
                }
                if (holds)
                    j["verified_gl_invariance"] = *holds;
                emit(j);
            } else {
                for (std::uint32_t i = 0; i < dm; ++i) {
                    std::uint32_t s = dm - 1 - i;
                    std::cout << "q_{" << dm << "," << s << "} (degree "
                              << alg.invariants[i].degree() << ") = " << alg.invariants[i].str()
                              << "\n";
                }
                if (holds)
                    std::cout << "GL-invariance: " << (*holds ? "verified" : "FAILED") << "\n";
            }
            return (holds && !*holds) ? 1 : 0;
        }

        if (vmap->parsed()) {
            auto family = regskew::regcheck::MapFamily::parse(family_text);
            regskew::regcheck::Sampler sampler =
                regskew::regcheck::RandomSampler{vseed, vtrials, 1000, 1000};
            regskew::regcheck::Arithmetic arith;
            if (varith == "float")
                arith = regskew::regcheck::FloatArithmetic{vtol};
            else
                arith = regskew::regcheck::ExactArithmetic{};
            auto report = regskew::regcheck::check_k_regular(family, vk, sampler, arith);
            if (vmap_format == "json") {
                emit(report_json(report, family.name()));
            } else {
                std::cout << "family: " << family.name() << "\n"
                          << "k: " << report.k << "\n"
                          << "arithmetic: " << report.arithmetic << "\n"
                          << "rng: " << report.rng << " seed: " << vseed << "\n"
                          << "trials: " << report.trials << "\n"
                          << "failures: " << report.failures.size() << "\n"
                          << "verdict: " << regskew::regcheck::to_string(report.verdict) << "\n";
                if (report.min_separation_sq)
                    std::cout << "min_separation_sq: " << report.min_separation_sq->str() << "\n";
                for (const auto& note : report.notes)
                    std::cout << "note: " << note << "\n";
            }
            bool dirty = report.verdict != regskew::regcheck::RegVerdict::NoCounterexampleFound;
            return (vexpect == "clean" && dirty) ? 1 : 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
