#include "closurelab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "closurelab/aggregation.hpp"
#include "closurelab/cone.hpp"
#include "closurelab/errors.hpp"
#include "closurelab/io.hpp"
#include "closurelab/verify.hpp"

namespace closurelab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options
{
    std::string format = "text";
    std::string out_path;
    bool timings = false;
    std::uint64_t seed = 1;
    std::size_t k = 1;
    std::size_t density = 4;
    std::string file;
    std::string query;
    std::string inequality;
    std::string suite;
};

// Text and structured renderings of one command, plus its exit code.
struct Report
{
    std::string text;
    Json result = Json::object();
    int code = Ok;
};

Json to_json(const QVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

Json to_json(const LatticePoint& p)
{
    Json a = Json::array();
    for (auto x : p)
        a.push_back(x);
    return a;
}

Json le_json(const Inequality& f)
{
    return Json{{"text", format_le(f)}, {"normal", to_json(f.normal())}, {"rhs", to_string(f.rhs())}};
}

Json ge_json(const Inequality& f)
{
    return Json{{"text", format_ge(f)}, {"coefficients", to_json(-f.normal())}, {"rhs", to_string(Rational(-f.rhs()))}};
}

std::string join(const QVector& v)
{
    return to_string(v, ", ");
}

CoveringInstance load_covering(const std::string& path)
{
    InstanceFile f = read_instance_file(path);
    if (f.kind != InstanceKind::Covering)
        throw ContractViolation("expected a covering instance, got kind " + to_string(f.kind));
    return *f.covering;
}

GeneratedCone load_cone(const std::string& path)
{
    InstanceFile f = read_instance_file(path);
    if (f.kind != InstanceKind::Cone)
        throw ContractViolation("expected a cone instance, got kind " + to_string(f.kind));
    return GeneratedCone(f.n, f.generators);
}

Report cmd_hull(const Options& o)
{
    CoveringInstance Q = load_covering(o.file);
    auto points = minimal_integer_points(Q).points;
    auto facets = covering_display_order(integer_hull(Q).inequalities());
    Report r;
    std::ostringstream text;
    text << "minimal points: " << points.size() << "\n";
    Json pts = Json::array();
    for (const auto& p : points) {
        text << format_point(p) << "\n";
        pts.push_back(to_json(p));
    }
    text << "facets: " << facets.size() << "\n";
    Json fs = Json::array();
    for (const auto& f : facets) {
        text << format_ge(f) << "\n";
        fs.push_back(ge_json(f));
    }
    r.text = text.str();
    r.result = Json{{"n", Q.cols()}, {"m", Q.rows()}, {"minimal_points", pts}, {"facets", fs}};
    return r;
}

Report cmd_closure(const Options& o)
{
    CoveringInstance Q = load_covering(o.file);
    ClosureApprox ca = closure_approx(Q, o.k, o.density);
    std::vector<CutLabel> labels = classify_cuts(ca);
    auto order = covering_display_order(ca.polyhedron.inequalities());

    Report r;
    std::ostringstream text;
    text << "closure k=" << o.k << " density=" << o.density << " samples=" << ca.hulls.size()
         << " stabilized=" << (ca.stabilized ? "yes" : "no") << "\n";
    text << "facets: " << order.size() << "\n";
    Json fs = Json::array();
    for (const auto& f : order) {
        const CutLabel& l = *std::find_if(labels.begin(), labels.end(), [&](const CutLabel& c) { return c.facet == f; });
        text << format_ge(f) << "  [" << to_string(l.kind);
        Json entry = ge_json(f);
        entry["classification"] = to_string(l.kind);
        if (l.kind == CutKind::HullFacet) {
            const AggregationSample& s = ca.hulls[l.hull_index].sample;
            text << " " << to_string(s);
            Json mult = Json::array();
            for (const auto& row : s.multipliers)
                mult.push_back(to_json(row));
            entry["sample"] = mult;
        }
        text << "]\n";
        fs.push_back(entry);
    }
    r.text = text.str();
    r.result = Json{{"n", Q.cols()},       {"m", Q.rows()},
                    {"k", o.k},            {"density", o.density},
                    {"samples", ca.hulls.size()}, {"stabilized", ca.stabilized},
                    {"facets", fs}};
    r.code = ca.stabilized ? Ok : NotStabilized;
    return r;
}

Report cmd_cone(const Options& o)
{
    GeneratedCone K = load_cone(o.file);
    Report r;
    std::ostringstream text;
    r.result["query"] = o.query;
    if (o.query == "rays") {
        RaySet rays = extreme_rays(K);
        Json a = Json::array();
        for (const auto& ray : rays.rays) {
            text << format_point(ray) << "\n";
            a.push_back(to_json(ray));
        }
        r.result["rays"] = a;
    } else if (o.query == "pointed") {
        PointednessResult p = is_pointed(K);
        if (p.pointed)
            text << "POINTED (support: " << join(p.support) << ")\n";
        else
            text << "NOT POINTED (line: " << join(p.line) << ")\n";
        r.result["pointed"] = p.pointed;
        r.result[p.pointed ? "support" : "line"] = to_json(p.pointed ? p.support : p.line);
    } else if (o.query == "closure") {
        ClosureResult c = closure_of(K);
        Json a = Json::array();
        if (c.empty) {
            text << "EMPTY\n";
        } else {
            for (const auto& f : c.polyhedron.inequalities()) {
                text << format_le(f) << "\n";
                a.push_back(le_json(f));
            }
        }
        r.result["empty"] = c.empty;
        r.result["unit_appended"] = c.unit_last_appended;
        r.result["inequalities"] = a;
    } else if (o.query == "theorem1") {
        Theorem1Report t = check_theorem1(K);
        text << (t.pass ? "PASS" : "FAIL") << "\n";
        if (!t.pass)
            text << t.counterexample << "\n";
        Json rays = Json::array();
        for (const auto& ray : t.extreme.rays)
            rays.push_back(to_json(ray));
        r.result["pass"] = t.pass;
        r.result["extreme_rays"] = rays;
        r.result["non_extreme"] = t.non_extreme.size();
        r.code = t.pass ? Ok : Internal;
    } else {
        if (o.inequality.empty())
            throw ContractViolation("fii needs an inequality such as \"x1 + x2 <= 2\"");
        Inequality ineq = parse_inequality(o.inequality, K.space_dim());
        FiiResult f = is_fii(K, ineq);
        if (f.fii)
            text << "FII\n";
        else
            text << "NOT FII (multipliers: " << join(f.multipliers) << ")\n";
        r.result["inequality"] = le_json(ineq);
        r.result["fii"] = f.fii;
        if (!f.fii)
            r.result["multipliers"] = to_json(f.multipliers);
    }
    r.text = text.str();
    return r;
}

Report cmd_verify(const Options& o)
{
    Report r;
    std::ostringstream text;
    Json suites = Json::array();
    for (const auto& s : run_suites(o.suite, o.seed)) {
        text << s.name << ": " << (s.passed() ? "PASS" : "FAIL") << " cases=" << s.cases << " checks=" << s.checks
             << " failures=" << s.failures << " seed=" << s.seed << "\n";
        if (!s.passed()) {
            text << "counterexample:\n" << s.counterexample;
            r.code = Internal;
        }
        Json entry{{"suite", s.name}, {"pass", s.passed()}, {"cases", s.cases}, {"checks", s.checks},
                   {"failures", s.failures}};
        if (!s.passed())
            entry["counterexample"] = s.counterexample;
        suites.push_back(entry);
    }
    r.text = text.str();
    r.result = Json{{"suites", suites}};
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact rational polyhedral toolkit for covering and aggregation closures", "closurelab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--out", o.out_path, "Write the report to this file");
    app.add_option("--seed", o.seed, "Seed for randomized commands");
    app.add_flag("--timings", o.timings, "Include wall-clock timings in the output");

    auto* hull = app.add_subcommand("hull", "Minimal points and integer hull of a covering instance");
    hull->add_option("file", o.file, "Covering instance file")->required();

    auto* closure = app.add_subcommand("closure", "Sampled k-aggregation closure of a covering instance");
    closure->add_option("file", o.file, "Covering instance file")->required();
    closure->add_option("--k", o.k, "Rows aggregated per sample")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    closure->add_option("--density", o.density, "Multiplier grid density D")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));

    auto* cone = app.add_subcommand("cone", "Queries on a finitely generated cone of inequalities");
    cone->add_option("file", o.file, "Cone instance file")->required();
    cone->add_option("query", o.query, "rays | pointed | closure | theorem1 | fii")
        ->required()
        ->check(CLI::IsMember({"rays", "pointed", "closure", "theorem1", "fii"}));
    cone->add_option("inequality", o.inequality, "Inequality for fii, e.g. \"x1 + x2 <= 2\"");

    auto* verify = app.add_subcommand("verify", "Run the seeded invariant suites");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", o.suite, "farkas | cone | covering | aggregation | all")
        ->required()
        ->check(CLI::IsMember(suites));

    std::vector<const char*> argv{"closurelab"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    std::string command = app.get_subcommands().front()->get_name();
    auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        if (command == "hull")
            report = cmd_hull(o);
        else if (command == "closure")
            report = cmd_closure(o);
        else if (command == "cone")
            report = cmd_cone(o);
        else
            report = cmd_verify(o);
    } catch (const NotPointedError& e) {
        err << "error: " << e.what() << " (line: " << join(e.line()) << ")\n";
        return Hypothesis;
    } catch (const InvalidInequalityError& e) {
        err << "error: " << e.what() << " (witness: " << join(e.witness()) << ")\n";
        return Hypothesis;
    } catch (const HypothesisViolation& e) {
        err << "error: " << e.what() << "\n";
        return Hypothesis;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return Internal;
    }
    double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::string rendered;
    if (o.format == "structured") {
        Json config = Json::object();
        if (!o.file.empty())
            config["input"] = o.file;
        if (command == "closure") {
            config["k"] = o.k;
            config["density"] = o.density;
        }
        if (command == "cone")
            config["query"] = o.query;
        if (command == "verify")
            config["suite"] = o.suite;
        Json doc{{"tool", "closurelab"}, {"version", version}, {"command", command}, {"seed", o.seed},
                 {"config", config},     {"result", report.result}, {"exit_code", report.code}};
        if (o.timings)
            doc["timings"] = Json{{"total_ms", elapsed_ms}};
        rendered = doc.dump(2) + "\n";
    } else {
        rendered = report.text;
        if (o.timings)
            rendered += "elapsed_ms=" + std::to_string(elapsed_ms) + "\n";
    }

    if (o.out_path.empty()) {
        out << rendered;
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << o.out_path << "'\n";
            return Usage;
        }
        file << rendered;
    }
    return report.code;
}

} // namespace closurelab::cli
