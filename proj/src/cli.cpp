#include "lgtoric/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lgtoric/delpezzo.hpp"
#include "lgtoric/fixtures.hpp"
#include "lgtoric/periods.hpp"
#include "lgtoric/threefold.hpp"

namespace lgtoric::cli {

namespace {

using json = nlohmann::ordered_json;

// Exit code 1 with a JSON body: a check ran and failed.
struct Outcome
{
    json body;
    int code = kSuccess;
};

json jint(const Integer& v)
{
    if (v >= Integer(INT64_MIN) && v <= Integer(INT64_MAX))
        return v.convert_to<std::int64_t>();
    return v.str();
}

json jvec(const IntVector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(jint(x));
    return a;
}

json jpoint(const LatticePoint& p) { return jvec(p.coords); }

json jpoints(const std::vector<LatticePoint>& pts)
{
    json a = json::array();
    for (const auto& p : pts)
        a.push_back(jpoint(p));
    return a;
}

json jmatrix(const IntMatrix& m)
{
    json a = json::array();
    for (const auto& r : m)
        a.push_back(jvec(r));
    return a;
}

json jseries(const Series& s)
{
    json a = json::array();
    for (std::size_t j = 0; j < s.size(); ++j)
        a.push_back({{"j", j}, {"value", to_string(s[j])}});
    return a;
}

std::string read_source(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Prefixes diagnostics with the input they came from.
template <class F>
auto with_source(const std::string& source, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw DomainError(source + ": " + e.what());
    }
}

LatticePolytope load_polytope(const std::string& path)
{
    const std::string text = read_source(path);
    return with_source(path, [&] { return parse_polytope(text); });
}

LaurentPolynomial load_polynomial(const std::string& text, std::optional<std::size_t> nvars = std::nullopt)
{
    return with_source("--f", [&] { return parse_laurent(text, {}, nvars); });
}

std::map<std::size_t, Rational> parse_params(const std::string& text)
{
    std::map<std::size_t, Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq < 2 || item[0] != 'q')
            throw DomainError("expected q<i>=<rational> in --params, got '" + item + "'");
        const std::string index = item.substr(1, eq - 1);
        if (!std::all_of(index.begin(), index.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw DomainError("bad parameter name in '" + item + "'");
        try {
            out[std::stoul(index)] = Rational(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw DomainError("bad rational value in '" + item + "'");
        }
    }
    return out;
}

std::set<std::size_t> parameter_indices(const LaurentPolynomial& f)
{
    std::set<std::size_t> out;
    for (const auto& [e, c] : f.terms())
        for (const auto& [m, r] : c.terms())
            for (std::size_t i = 0; i < m.exps.size(); ++i)
                if (m.exps[i] != 0)
                    out.insert(i);
    return out;
}

Series evaluate_series(const Series& s, const std::map<std::size_t, Rational>& at)
{
    Series out;
    for (const auto& c : s.coeffs)
        out.coeffs.push_back(c.evaluate(at));
    return out;
}

ToricData toric_preset(const std::string& name)
{
    if (name == "p2")
        return fixtures::toric_p2();
    if (name == "p1xp1")
        return fixtures::toric_p1xp1();
    if (name == "p3")
        return fixtures::toric_p3();
    if (name == "s7")
        return fixtures::toric_s7();
    throw DomainError("unknown toric preset '" + name + "' (expected p2, p1xp1, p3 or s7)");
}

// {"rays": [[..]], "relations": [[..]], "parameters": ["q0*q1", ...]}
ToricData toric_from_json(const std::string& path)
{
    json j;
    try {
        j = json::parse(read_source(path));
    } catch (const json::parse_error& e) {
        throw DomainError(path + ": " + e.what());
    }
    ToricData d;
    try {
        for (const auto& r : j.at("rays")) {
            LatticePoint p;
            for (const auto& x : r)
                p.coords.emplace_back(x.get<long long>());
            d.rays.push_back(p);
        }
        for (const auto& r : j.at("relations")) {
            IntVector row;
            for (const auto& x : r)
                row.emplace_back(x.get<long long>());
            d.relations.push_back(row);
        }
        for (const auto& p : j.at("parameters")) {
            const auto poly = parse_laurent(p.get<std::string>());
            const auto c = poly.coefficient({0, 0, 0});
            if (poly.size() != 1 || !c.is_monomial() || c.terms().front().second != 1)
                throw DomainError("parameter '" + p.get<std::string>() + "' is not a monomial");
            d.parameters.push_back(c.terms().front().first);
        }
    } catch (const json::exception& e) {
        throw DomainError(path + ": " + e.what());
    }
    return d;
}

json decomposition_json(const MinkowskiDecomposition& d)
{
    json parts = json::array();
    for (const auto& p : d.parts)
        parts.push_back({{"type", "An"}, {"n", p.n}, {"points", jpoints(p.vertices())}});
    return {{"offset", jpoint(d.offset)},
            {"parts", parts},
            {"admissible", d.admissible},
            {"witness", {{"polygon_lattice", jmatrix(d.polygon_lattice)}, {"parts_lattice", jmatrix(d.parts_lattice)}}},
            {"polynomial", to_string(decomposition_polynomial(d))}};
}

// ---------------------------------------------------------------------------

Outcome polytope_analyze(const std::string& path)
{
    const LatticePolytope p = load_polytope(path);
    json j;
    j["dim"] = p.dim();
    j["vertices"] = jpoints(p.vertices());
    json facets = json::array();
    for (const auto& f : p.facets())
        facets.push_back({{"normal", jvec(f.inequality.normal)}, {"offset", jint(f.inequality.offset)}, {"vertices", f.vertices}});
    j["facets"] = facets;
    const auto pts = integral_points(p);
    const auto bnd = boundary_points(p);
    j["lattice_points"] = pts.size();
    j["boundary_points"] = bnd.size();
    j["interior_points"] = pts.size() - bnd.size();
    j["volume"] = jint(normalized_volume(p));
    const LatticePoint origin(IntVector(p.ambient_dim(), Integer(0)));
    const bool interior = p.relative_interior_contains(origin);
    j["origin_interior"] = interior;
    const bool reflexive = interior && is_reflexive(p);
    j["reflexive"] = reflexive;
    if (interior) {
        const RationalPolytope dual = dual_polytope(p);
        j["dual_integral"] = dual.is_integral();
        if (dual.is_integral()) {
            const LatticePolytope nabla = dual.to_lattice();
            j["dual_volume"] = jint(normalized_volume(nabla));
            j["dual_boundary_points"] = boundary_points(nabla).size();
            if (reflexive && p.dim() == 2)
                j["boundary_sum"] = bnd.size() + boundary_points(nabla).size();
            if (reflexive && p.dim() == 3)
                j["dual_smooth_resolution"] = smooth_resolution_check(nabla);
        }
    }
    return {j};
}

Outcome polytope_dual(const std::string& path)
{
    const LatticePolytope p = load_polytope(path);
    const LatticePoint origin(IntVector(p.ambient_dim(), Integer(0)));
    if (!p.relative_interior_contains(origin))
        throw DomainError("the origin is not an interior point; the dual is unbounded");
    const RationalPolytope dual = dual_polytope(p);
    json verts = json::array();
    for (const auto& v : dual.vertices()) {
        json a = json::array();
        for (const auto& c : v.coords)
            a.push_back(to_string(c));
        verts.push_back(a);
    }
    json j{{"reflexive", is_reflexive(p)}, {"integral", dual.is_integral()}, {"vertices", verts}};
    if (dual.is_integral())
        j["text"] = format_polytope(dual.to_lattice());
    return {j};
}

Outcome minkowski_decompose(const std::string& path, bool all)
{
    const LatticePolytope p = load_polytope(path);
    if (p.ambient_dim() != 2)
        throw DomainError("expected a polygon (dim 2)");
    json list = json::array();
    for (const auto& d : all ? minkowski_decompositions(p) : decompose_admissible(p))
        list.push_back(decomposition_json(d));
    json j{{"polygon", jpoints(p.vertices())}};
    if (const auto n = classify_An(p))
        j["An"] = *n;
    j["decompositions"] = list;
    return {j};
}

Outcome minkowski_enumerate(const std::string& path)
{
    const LatticePolytope p = load_polytope(path);
    const auto report = is_minkowski_polytope(p);
    const auto en = enumerate_minkowski_polynomials(p);
    json polys = json::array();
    for (const auto& f : en.polynomials)
        polys.push_back(to_string(f));
    json per_facet = json::array();
    for (const auto& d : report.decompositions)
        per_facet.push_back(d.size());
    return {{{"minkowski", report.minkowski},
             {"facet_decomposition_counts", per_facet},
             {"count", en.polynomials.size()},
             {"polynomials", polys}}};
}

Outcome periods_compute(const std::string& f_text, unsigned n, bool unpruned, unsigned threads)
{
    const auto f = load_polynomial(f_text);
    const Series s = unpruned ? period_sequence(f, n, threads) : period_sequence_pruned(f, n, threads);
    return {{{"f", to_string(f)}, {"N", n}, {"coeffs", jseries(s)}}};
}

Outcome periods_match(const std::string& f_text, unsigned n, const std::string& preset, const std::string& toric_json,
                      const std::string& params, unsigned threads)
{
    auto f = load_polynomial(f_text);
    if (preset.empty() == toric_json.empty())
        throw DomainError("give exactly one of --toric and --toric-json");
    const ToricData data = preset.empty() ? toric_from_json(toric_json) : toric_preset(preset);
    Series series = givental_series(data, n);
    if (!params.empty()) {
        const auto at = parse_params(params);
        f = evaluate_parameters(f, at);
        series = evaluate_series(series, at);
    }
    const Series period = period_sequence_pruned(f, n, threads);
    const auto cmp = compare_series(period, series, n);
    json j{{"f", to_string(f)}, {"N", n}, {"equal", cmp.equal}};
    j["first_mismatch"] = cmp.first_mismatch ? json(*cmp.first_mismatch) : json(nullptr);
    j["period"] = jseries(period);
    j["series"] = jseries(series);
    return {j, cmp.equal ? kSuccess : kVerificationFailed};
}

Outcome periods_recurrence(const std::string& f_text, const std::string& sequence, unsigned n, const std::string& params,
                           unsigned max_order, unsigned max_degree, unsigned threads)
{
    std::vector<Rational> seq;
    json j;
    if (!sequence.empty()) {
        if (!f_text.empty())
            throw DomainError("give either --f or --sequence");
        std::stringstream ss(sequence);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                seq.emplace_back(item);
            } catch (const std::exception&) {
                throw DomainError("bad sequence entry '" + item + "'");
            }
        }
    } else {
        if (f_text.empty())
            throw DomainError("give --f or --sequence");
        auto f = load_polynomial(f_text);
        std::map<std::size_t, Rational> at = parse_params(params);
        for (auto i : parameter_indices(f))
            at.try_emplace(i, Rational(1));
        f = evaluate_parameters(f, at);
        j["f"] = to_string(f);
        seq = numeric_values(period_sequence_pruned(f, n, threads));
    }
    json terms = json::array();
    for (const auto& c : seq)
        terms.push_back(to_string(c));
    j["terms"] = terms;
    const auto rec = find_recurrence(seq, max_order, max_degree);
    j["found"] = rec.has_value();
    if (rec) {
        j["order"] = rec->order;
        j["degree"] = rec->degree;
        json coeffs = json::array();
        for (const auto& p : rec->coefficients)
            coeffs.push_back(jvec(p));
        j["coefficients"] = coeffs;
        j["text"] = to_string(*rec);
    }
    return {j};
}

LGModelPair load_construction(const std::string& path, const std::string& inline_script)
{
    if (path.empty() == inline_script.empty())
        throw DomainError("give a script file or --script");
    const std::string text = inline_script.empty() ? read_source(path) : inline_script;
    const auto script = with_source(inline_script.empty() ? path : "--script",
                                    [&] { return parse_construction_script(text); });
    return run_construction(script);
}

Integer surface_degree(const LatticePolytope& delta) { return normalized_volume(dual_polytope(delta).to_lattice()); }

Outcome delpezzo_build(const std::string& path, const std::string& inline_script)
{
    const auto pair = load_construction(path, inline_script);
    json marks = json::array();
    for (const auto& [k, m] : pair.marked.markings)
        marks.push_back({{"point", jpoint(k)},
                         {"marking", to_string(m)},
                         {"surface", to_string(pair.f_surface.coefficient(to_exponent(k)))}});
    return {{{"polygon", jpoints(pair.marked.polygon.vertices())},
             {"degree", jint(surface_degree(pair.marked.polygon))},
             {"f_toric", to_string(pair.f_toric)},
             {"f_surface", to_string(pair.f_surface)},
             {"markings", marks}}};
}

Outcome delpezzo_basepoints(const std::string& f_text, const std::string& path, const std::string& inline_script,
                            const std::string& params)
{
    LaurentPolynomial f(2);
    if (!f_text.empty()) {
        if (!path.empty() || !inline_script.empty())
            throw DomainError("give either --f or a construction script");
        f = load_polynomial(f_text, 2);
    } else {
        f = load_construction(path, inline_script).f_surface;
    }
    std::map<std::size_t, Rational> at = parse_params(params);
    for (auto i : parameter_indices(f))
        at.try_emplace(i, Rational(1));
    f = evaluate_parameters(f, at);
    const LatticePolytope delta = newton_polytope(f);
    const auto report = base_points_on_boundary(f, delta);
    json edges = json::array();
    for (const auto& e : report.edges) {
        json r = json::array();
        for (const auto& c : e.restriction)
            r.push_back(to_string(c));
        edges.push_back({{"from", jpoint(e.from)}, {"to", jpoint(e.to)}, {"restriction", r}, {"multiplicities", e.multiplicities}});
    }
    const Integer d = surface_degree(delta);
    const bool ok = Integer(report.total) == 12 - d;
    return {{{"f", to_string(f)},
             {"edges", edges},
             {"total", report.total},
             {"degree", jint(d)},
             {"expected", jint(12 - d)},
             {"ok", ok}},
            ok ? kSuccess : kVerificationFailed};
}

Outcome threefold_facets(const std::string& path, const std::string& f_text)
{
    const LatticePolytope delta = load_polytope(path);
    if (delta.ambient_dim() != 3)
        throw DomainError("expected a 3-polytope");
    LaurentPolynomial f(3);
    if (f_text.empty()) {
        const auto en = enumerate_minkowski_polynomials(delta);
        if (en.polynomials.empty())
            throw DomainError("the polytope carries no Minkowski polynomial; pass --f");
        f = en.polynomials.front();
    } else {
        f = load_polynomial(f_text, 3);
    }
    const auto charts = facet_charts(delta);
    json facets = json::array();
    bool ok = true;
    for (std::size_t i = 0; i < charts.size(); ++i) {
        json fj{{"facet", i}, {"normal", jvec(charts[i].inequality.normal)}, {"offset", jint(charts[i].inequality.offset)}};
        try {
            const auto r = facet_components(f, delta, i);
            fj["decomposition"] = decomposition_json(r.decomposition);
            json comps = json::array();
            for (const auto& c : r.components)
                comps.push_back({{"descriptor", c.descriptor}, {"n", c.part.n}, {"multiplicity", c.multiplicity}, {"points", jpoints(c.part.vertices())}});
            fj["components"] = comps;
        } catch (const DomainError& e) {
            ok = false;
            fj["error"] = e.what();
        }
        facets.push_back(fj);
    }
    const bool avoid = vertex_avoidance_check(f, delta);
    return {{{"f", to_string(f)}, {"vertex_avoidance", avoid}, {"facets", facets}, {"ok", ok && avoid}},
            ok && avoid ? kSuccess : kVerificationFailed};
}

Outcome threefold_infinity(const std::string& path)
{
    const LatticePolytope delta = load_polytope(path);
    const auto r = infinity_fiber_report(delta);
    json adj = json::array(), tri = json::array();
    for (const auto& e : r.adjacency)
        adj.push_back(e);
    for (const auto& t : r.triple_points)
        tri.push_back(t);
    const bool smooth = smooth_resolution_check(dual_polytope(delta).to_lattice());
    return {{{"degree", jint(r.degree)},
             {"genus", jint(r.genus)},
             {"components", r.components},
             {"edges", r.edges},
             {"triangles", r.triangles},
             {"euler_characteristic", static_cast<long long>(r.components) - static_cast<long long>(r.edges) +
                                          static_cast<long long>(r.triangles)},
             {"smooth_resolution", smooth},
             {"points", jpoints(r.points)},
             {"adjacency", adj},
             {"triple_points", tri}},
            smooth ? kSuccess : kVerificationFailed};
}

// ---------------------------------------------------------------------------
// Fixture suite

struct Check
{
    std::string name;
    bool passed = false;
    std::string detail;
};

Check check_s7_period(unsigned threads)
{
    const auto series = givental_series(fixtures::toric_s7(), 8);
    const auto a = check_period_condition(s7_surface_model(), series, 8, threads);
    const auto b = check_period_condition(s7_mutated_model(), series, 8, threads);
    return {"s7-period", a.equal && b.equal,
            std::string("f_S ") + (a.equal ? "matches" : "differs") + ", f'_S " + (b.equal ? "matches" : "differs") +
                " the Givental series to N=8"};
}

Check check_s7_mutation()
{
    const auto m = mutation_check_s7();
    return {"s7-mutation", m.holds(),
            m.holds() ? "y -> y/(1+q2*x) sends f_S to f'_S"
                      : "difference: " + (m.laurent ? to_string(m.difference) : std::string("image is not Laurent"))};
}

Check check_identity(const std::string& name)
{
    const auto r = prop44_fixture(name);
    return {"identity-" + name, r.holds, r.holds ? "holds with symbolic lambda" : "difference: " + to_string(r.difference)};
}

std::vector<Check> seed_corpus(unsigned threads)
{
    std::vector<Check> out;
    {
        const auto polys = enumerate_reflexive_polygons(4);
        bool ok = polys.size() == 16;
        for (const auto& p : polys)
            ok = ok && boundary_points(p).size() + boundary_points(dual_polytope(p).to_lattice()).size() == 12;
        out.push_back({"reflexive-polygons", ok, std::to_string(polys.size()) + " classes, boundary sums 12"});
    }
    {
        const auto delta = fixtures::delta_p3();
        const auto en = enumerate_minkowski_polynomials(delta);
        const auto expect = parse_laurent("x+y+z+1/(x*y*z)");
        const bool unique = en.polynomials.size() == 1 && en.polynomials[0] == expect;
        const auto series = evaluate_series(givental_series(fixtures::toric_p3(), 12), {{0, 1}});
        const bool periods = compare_series(period_sequence_pruned(expect, 12, threads), series, 12).equal;
        out.push_back({"p3-minkowski", unique && periods, "unique Minkowski polynomial, periods match to N=12"});
    }
    for (const auto& [name, delta, expect] :
         {std::tuple{"infinity-p3", fixtures::delta_p3(), 34}, std::tuple{"infinity-octahedron", fixtures::octahedron(), 26}}) {
        const auto r = infinity_fiber_report(delta);
        out.push_back({name, r.components == static_cast<std::size_t>(expect),
                       std::to_string(r.components) + " components, (-K)^3 = " + r.degree.str()});
    }
    {
        LGModelPair p = base_lg(BaseKind::P2, {0});
        const std::vector<LatticePoint> steps{{0, -1}, {1, 1}, {-1, 0}};
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i <= steps.size(); ++i) {
            if (i > 0)
                p = blowup_step(p, steps[i - 1], i);
            std::map<std::size_t, Rational> ones;
            for (std::size_t k = 0; k <= i; ++k)
                ones[k] = 1;
            const auto f = evaluate_parameters(p.f_surface, ones);
            const auto delta = newton_polytope(f);
            const auto r = base_points_on_boundary(f, delta);
            const Integer d = surface_degree(delta);
            ok = ok && Integer(r.total) == 12 - d;
            detail += (detail.empty() ? "" : ", ") + std::string("d=") + d.str() + ": " + std::to_string(r.total);
        }
        out.push_back({"delpezzo-base-points", ok, detail});
    }
    return out;
}

Outcome fixtures_verify(const std::vector<std::string>& names, bool seed, unsigned threads)
{
    std::vector<std::string> wanted = names;
    if (wanted.empty() || std::find(wanted.begin(), wanted.end(), "all") != wanted.end()) {
        wanted = {"s7-period", "s7-mutation"};
        for (const auto& fx : fixtures::family_identities())
            wanted.push_back(fx.name);
    }
    std::vector<Check> checks;
    for (const auto& n : wanted) {
        if (n == "s7-period")
            checks.push_back(check_s7_period(threads));
        else if (n == "s7-mutation")
            checks.push_back(check_s7_mutation());
        else
            checks.push_back(check_identity(n));
    }
    if (seed)
        for (auto& c : seed_corpus(threads))
            checks.push_back(std::move(c));
    json list = json::array();
    bool all = true;
    for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        all = all && c.passed;
    }
    return {{{"checks", list}, {"passed", all}}, all ? kSuccess : kVerificationFailed};
}

// ---------------------------------------------------------------------------

void render(const json& j, std::ostream& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    auto flat = [](const json& v) {
        if (!v.is_array())
            return false;
        for (const auto& x : v)
            if (x.is_object() || (x.is_array() && !x.empty() && x.front().is_structured()))
                return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !flat(v)) {
                out << pad << k << ":\n";
                render(v, out, indent + 2);
            } else {
                out << pad << k << ": " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                out << pad << "-\n";
                render(v, out, indent + 2);
            } else {
                out << pad << "- " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else {
        out << pad << scalar(j) << "\n";
    }
}

unsigned default_threads()
{
    if (const char* env = std::getenv("LGTORIC_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact toolkit for toric Landau-Ginzburg models of del Pezzo surfaces and Fano threefolds", "lgtoric"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    unsigned threads = default_threads();
    app.add_flag("--pretty", pretty, "Human-readable summary instead of JSON");
    app.add_option("--threads", threads, "Worker threads (default: LGTORIC_THREADS or 1)")->check(CLI::PositiveNumber);

    std::string file, f_text, script, params, toric, toric_json, sequence;
    unsigned n = 10, max_order = 2, max_degree = 3;
    bool all = false, unpruned = false, seed = false;
    std::vector<std::string> names;

    auto* polytope = app.add_subcommand("polytope", "Lattice polytope geometry")->require_subcommand(1);
    auto* analyze = polytope->add_subcommand("analyze", "Vertices, facets, lattice points, volumes, duality");
    analyze->add_option("file", file, "Polytope file ('-' for stdin)")->required();
    auto* dual = polytope->add_subcommand("dual", "Dual polytope");
    dual->add_option("file", file, "Polytope file ('-' for stdin)")->required();

    auto* minkowski = app.add_subcommand("minkowski", "Minkowski decompositions and polynomials")->require_subcommand(1);
    auto* decompose = minkowski->add_subcommand("decompose", "A_n decompositions of a polygon");
    decompose->add_option("file", file, "Polygon file")->required();
    decompose->add_flag("--all", all, "Include non-admissible decompositions");
    auto* enumerate = minkowski->add_subcommand("enumerate", "Minkowski polynomials of a reflexive 3-polytope");
    enumerate->add_option("file", file, "Polytope file")->required();

    auto* periods = app.add_subcommand("periods", "Period sequences, Givental series, recurrences")->require_subcommand(1);
    auto* compute = periods->add_subcommand("compute", "Constant terms of f^j");
    compute->add_option("--f", f_text, "Laurent polynomial")->required();
    compute->add_option("--N", n, "Last index")->check(CLI::NonNegativeNumber);
    compute->add_flag("--unpruned", unpruned, "Skip Newton polytope pruning");
    auto* match = periods->add_subcommand("match", "Compare a period sequence with a toric Givental series");
    match->add_option("--f", f_text, "Laurent polynomial")->required();
    match->add_option("--N", n, "Last index");
    match->add_option("--toric", toric, "Preset: p2, p1xp1, p3, s7");
    match->add_option("--toric-json", toric_json, "File with rays, relations and parameters");
    match->add_option("--params", params, "Specialize parameters, e.g. q0=1,q1=1/2");
    auto* recurrence = periods->add_subcommand("recurrence", "Minimal linear recurrence of a sequence");
    recurrence->add_option("--f", f_text, "Laurent polynomial (parameters default to 1)");
    recurrence->add_option("--sequence", sequence, "Comma-separated rationals");
    recurrence->add_option("--N", n, "Last index of the period sequence")->default_val(30);
    recurrence->add_option("--params", params, "Parameter values, e.g. q0=2");
    recurrence->add_option("--max-order", max_order, "Largest order tried");
    recurrence->add_option("--max-degree", max_degree, "Largest coefficient degree tried");

    auto* delpezzo = app.add_subcommand("delpezzo", "Inductive del Pezzo LG models")->require_subcommand(1);
    auto* build = delpezzo->add_subcommand("build", "Run a construction script");
    build->add_option("file", file, "Script file ('-' for stdin)");
    build->add_option("--script", script, "Inline script; use ';' or newlines between lines");
    auto* basepoints = delpezzo->add_subcommand("basepoints", "Base points on the boundary");
    basepoints->add_option("file", file, "Script file");
    basepoints->add_option("--script", script, "Inline construction script");
    basepoints->add_option("--f", f_text, "Laurent polynomial in x, y");
    basepoints->add_option("--params", params, "Parameter values (others are set to 1)");

    auto* threefold = app.add_subcommand("threefold", "Fano threefold combinatorics")->require_subcommand(1);
    auto* facets = threefold->add_subcommand("facets", "Facet components of the base locus");
    facets->add_option("file", file, "Polytope file")->required();
    facets->add_option("--f", f_text, "Laurent polynomial (default: first Minkowski polynomial)");
    auto* infinity = threefold->add_subcommand("infinity", "Fiber over infinity");
    infinity->add_option("file", file, "Polytope file")->required();

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in fixture suite")->require_subcommand(1);
    auto* verify = fixtures_cmd->add_subcommand("verify", "Run fixture checks");
    verify->add_flag("--all", all, "Every named fixture (default)");
    verify->add_option("--name", names, "s7-period, s7-mutation, 2-1, 2-2, 2-3, 9-1, 10-1");
    verify->add_flag("--seed-corpus", seed, "Also run the polytope corpus checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    for (char& c : script)
        if (c == ';')
            c = '\n';

    try {
        Outcome o;
        if (analyze->parsed())
            o = polytope_analyze(file);
        else if (dual->parsed())
            o = polytope_dual(file);
        else if (decompose->parsed())
            o = minkowski_decompose(file, all);
        else if (enumerate->parsed())
            o = minkowski_enumerate(file);
        else if (compute->parsed())
            o = periods_compute(f_text, n, unpruned, threads);
        else if (match->parsed())
            o = periods_match(f_text, n, toric, toric_json, params, threads);
        else if (recurrence->parsed())
            o = periods_recurrence(f_text, sequence, n, params, max_order, max_degree, threads);
        else if (build->parsed())
            o = delpezzo_build(file, script);
        else if (basepoints->parsed())
            o = delpezzo_basepoints(f_text, file, script, params);
        else if (facets->parsed())
            o = threefold_facets(file, f_text);
        else if (infinity->parsed())
            o = threefold_infinity(file);
        else if (verify->parsed())
            o = fixtures_verify(names, seed, threads);
        else
            throw DomainError("no subcommand");
        if (pretty)
            render(o.body, out, 0);
        else
            out << o.body.dump() << "\n";
        return o.code;
    } catch (const ParseError& e) {
        err << "lgtoric: parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        err << "lgtoric: " << e.what() << "\n";
        return kInputError;
    } catch (const InternalError& e) {
        err << "lgtoric: internal check failed: " << e.what() << "\n";
        return kVerificationFailed;
    }
}

} // namespace lgtoric::cli
