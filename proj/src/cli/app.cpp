#include "gogmagog/cli/app.hpp"

#include "gogmagog/cli/registry.hpp"
#include "gogmagog/cli/serialize.hpp"
#include "gogmagog/cli/suites.hpp"
#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/triangles/asm.hpp"
#include "gogmagog/triangles/enumerate.hpp"
#include "gogmagog/triangles/sttree.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace gogmagog::cli {

namespace {

struct Globals {
    std::string format = "json";
    std::string out_path;
    int max_vars = CTBudget{}.max_vars;
    uint64_t max_objects = EnumBudget{}.max_objects;
    uint64_t max_box = CTBudget{}.max_box_volume;
    int max_n = SuiteBounds{}.max_n;
    int max_m = SuiteBounds{}.max_m;
    bool timings = false;
    bool count_only = false;

    Budgets budgets() const {
        Budgets b;
        b.ct.max_vars = max_vars;
        b.ct.max_box_volume = max_box;
        b.enumeration.max_objects = max_objects;
        return b;
    }
    bool csv() const { return format == "csv"; }
};

std::string join(const std::vector<int>& v, char sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

void add_object_options(CLI::App* sub, FormulaArgs& a) {
    sub->add_option("--m", a.m, "upper bound parameter m");
    sub->add_option("--n", a.n, "number of rows n");
    sub->add_option("--k", a.k, "number of diagonals k");
    sub->add_option("--kl", a.kl, "left diagonals of a pentagon");
    sub->add_option("--kr", a.kr, "right diagonals of a pentagon");
    sub->add_option("--bottom", a.bottom, "bottom row, comma separated")->delimiter(',');
    sub->add_option("--s", a.s, "(s,t)-tree left deletions, weakly decreasing")->delimiter(',');
    sub->add_option("--t", a.t, "(s,t)-tree right deletions, weakly increasing")->delimiter(',');
    sub->add_option("--ne-exceptions", a.ne_exc, "exceptional NE-diagonals I")->delimiter(',');
    sub->add_option("--se-exceptions", a.se_exc, "exceptional SE-diagonals J")->delimiter(',');
    sub->add_option("--top", a.top, "apex value");
    sub->add_option("--lo", a.lo, "lower entry bound for apex restrictions");
    sub->add_option("--hi", a.hi, "upper entry bound for apex restrictions");
}

// ---- enumerate ----

struct Collected {
    json objects = json::array();
    uint64_t count = 0;
};

Visitor collector(Collected& c, const Globals& g) {
    return [&c, &g](const TriangularArray& t, const StatVector& s) {
        if (++c.count > g.max_objects) throw ResourceError("enumeration exceeds the object budget (--max-objects)");
        if (!g.count_only) c.objects.push_back({{"triangle", triangle_json(t)}, {"stats", stats_json(s)}});
    };
}

int need(const std::optional<int>& v, const char* flag) {
    if (!v) throw PreconditionError(std::string("enumerate: ") + flag + " is required");
    return *v;
}

json run_enumerate(const std::string& kind, const FormulaArgs& a, const Globals& g) {
    Collected c;
    json params = json::object();
    const EnumBudget budget{g.max_objects};
    auto visit = collector(c, g);
    if (kind == "mt" || kind == "gt") {
        if (!a.bottom || a.bottom->empty()) throw PreconditionError("enumerate: --bottom is required");
        params["bottom"] = *a.bottom;
        if (kind == "mt")
            enumerate_monotone_triangles(*a.bottom, visit, budget);
        else
            enumerate_gt_patterns(*a.bottom, visit, budget);
    } else if (kind == "gog") {
        int m = need(a.m, "--m"), n = need(a.n, "--n"), k = need(a.k, "--k");
        params = {{"m", m}, {"n", n}, {"k", k}};
        if (a.bottom) params["bottom"] = *a.bottom;
        enumerate_gog_trapezoids(m, n, k, a.bottom, visit, budget);
    } else if (kind == "magog") {
        int m = need(a.m, "--m"), n = need(a.n, "--n"), k = need(a.k, "--k");
        params = {{"m", m}, {"n", n}, {"k", k}};
        enumerate_magog_trapezoids(m, n, k, visit, budget);
    } else if (kind == "pentagon") {
        int m = need(a.m, "--m"), n = need(a.n, "--n"), kl = need(a.kl, "--kl"), kr = need(a.kr, "--kr");
        params = {{"m", m}, {"n", n}, {"kL", kl}, {"kR", kr}};
        enumerate_gog_pentagons(m, n, kl, kr, visit, budget);
    } else if (kind == "sttree") {
        STTreeShape sh{need(a.n, "--n"), a.s, a.t};
        if (!a.bottom || a.bottom->empty()) throw PreconditionError("enumerate: --bottom is required");
        std::optional<TopRestriction> top;
        if (a.top) top = TopRestriction{*a.top, a.lo.value_or(a.bottom->front()), a.hi.value_or(a.bottom->back())};
        params = {{"n", sh.n}, {"s", sh.s}, {"t", sh.t}, {"bottom", *a.bottom}, {"I", a.ne_exc}, {"J", a.se_exc}};
        if (top) params["top"] = top->a;
        enumerate_st_trees(sh, *a.bottom, a.ne_exc, a.se_exc, top, visit);
    } else if (kind == "asm") {
        int n = need(a.n, "--n");
        if (n < 1) throw PreconditionError("enumerate: --n must be positive");
        params = {{"n", n}};
        if (asm_count_formula(n) > BigInt(static_cast<unsigned long>(g.max_objects)))
            throw ResourceError("enumeration exceeds the object budget (--max-objects)");
        for (const auto& A : all_asms(n)) {
            ++c.count;
            if (g.count_only) continue;
            auto s = asm_statistics(A);
            c.objects.push_back({{"matrix", matrix_json(A)},
                                 {"stats", {{"inv", s.inv}, {"inv_prime", s.inv_prime}, {"minus_count", s.minus_count}}}});
        }
    } else {
        throw PreconditionError("enumerate: unknown object kind '" + kind + "' (mt, gt, gog, magog, pentagon, sttree, asm)");
    }
    json out = {{"kind", kind}, {"params", params}, {"count", c.count}};
    if (!g.count_only) out["objects"] = c.objects;
    return out;
}

std::string enumerate_csv(const json& r) {
    std::ostringstream os;
    const auto& objs = r.contains("objects") ? r["objects"] : json::array();
    if (objs.empty()) {
        os << "kind,count\n" << r["kind"].get<std::string>() << "," << r["count"].get<uint64_t>() << "\n";
        return os.str();
    }
    const json& first = objs.front()["stats"];
    const bool is_matrix = objs.front().contains("matrix");
    os << "index," << (is_matrix ? "matrix" : "rows,columns");
    for (const auto& [k, v] : first.items()) os << "," << k;
    os << "\n";
    size_t idx = 0;
    for (const auto& o : objs) {
        auto rows_str = [](const json& rows) {
            std::string s;
            for (size_t i = 0; i < rows.size(); ++i) s += (i ? ";" : "") + join(rows[i].get<std::vector<int>>(), ' ');
            return s;
        };
        os << idx++ << ",";
        if (is_matrix)
            os << csv_escape(rows_str(o["matrix"]));
        else
            os << csv_escape(rows_str(o["triangle"]["rows"])) << "," << csv_escape(rows_str(o["triangle"]["columns"]));
        for (const auto& [k, v] : o["stats"].items())
            os << "," << (v.is_array() ? csv_escape(join(v.get<std::vector<int>>(), ' ')) : v.dump());
        os << "\n";
    }
    return os.str();
}

// ---- conjecture ----

json conjecture_json(const ConjectureTable& t) {
    json gog = json::array(), magog = json::array();
    for (const auto& [pq, c] : t.gog) gog.push_back({{"minima", pq.first}, {"maxima", pq.second}, {"count", c}});
    for (const auto& [pq, c] : t.magog) magog.push_back({{"maxima", pq.first}, {"minima", pq.second}, {"count", c}});
    return {{"m", t.m}, {"n", t.n}, {"k", t.k}, {"gog", gog}, {"magog", magog}, {"verdict", t.match}};
}

std::string conjecture_csv(const std::vector<ConjectureTable>& ts) {
    std::ostringstream os;
    os << "m,n,k,object,minima,maxima,count,verdict\n";
    for (const auto& t : ts) {
        for (const auto& [pq, c] : t.gog)
            os << t.m << "," << t.n << "," << t.k << ",gog," << pq.first << "," << pq.second << "," << c << "," << t.match << "\n";
        for (const auto& [pq, c] : t.magog)
            os << t.m << "," << t.n << "," << t.k << ",magog," << pq.second << "," << pq.first << "," << c << "," << t.match << "\n";
    }
    return os.str();
}

void emit(const std::string& text, const Globals& g, std::ostream& out) {
    if (g.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) throw PreconditionError("cannot open --out file " + g.out_path);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration and constant-term formulas for Gog and Magog trapezoids", "gogmagog"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out_path, "write the result to this file instead of stdout");
    app.add_option("--max-vars", g.max_vars, "constant-term variable budget");
    app.add_option("--max-objects", g.max_objects, "enumeration object budget");
    app.add_option("--max-box", g.max_box, "constant-term truncation box budget");
    app.add_option("--max-n", g.max_n, "largest n for verify and conjecture");
    app.add_option("--max-m", g.max_m, "largest m for verify and conjecture");
    app.add_flag("--timings", g.timings, "include per-case runtimes in verify reports");

    FormulaArgs ea, fa;
    std::string kind, formula_id, suite = "all";
    std::optional<int> cm, cn, ck;

    auto* en = app.add_subcommand("enumerate", "stream objects with their statistics");
    en->fallthrough();
    en->add_option("kind", kind, "mt, gt, gog, magog, pentagon, sttree or asm")->required();
    add_object_options(en, ea);
    en->add_flag("--count-only", g.count_only, "report the count without the objects");

    auto* fo = app.add_subcommand("formula", "evaluate a registered formula exactly");
    fo->fallthrough();
    fo->add_option("id", formula_id, "formula id; 'list' prints the registry")->required();
    add_object_options(fo, fa);
    fo->add_option("--q", fa.q, "number of minima for Magog slices");
    fo->add_option("--mode", fa.mode, "mt-count mode: standard, alternative or antisym");
    fo->add_option("--r", fa.r, "number of variables for identities");
    fo->add_option("--base", fa.base, "lower summation bound b");
    fo->add_option("--cap", fa.cap, "total degree cap");
    fo->add_option("--input", fa.input, "symmetric weight: 1, e1, e2 or e1^2");
    fo->add_option("--t-value", fa.t_value, "rational value for the parameter t");
    fo->add_option("--variant", fa.variant, "general or linear");
    fo->add_option("--family", fa.family, "coinciding-point limit family");
    fo->add_option("--source", fa.source, "symmetrizer source");
    fo->add_option("--x-shift", fa.x_shift, "determinant shift x");
    fo->add_flag("--conjugate", fa.conjugate, "use omega-bar instead of omega");
    fo->add_option("--from", fa.from, "extended-sum lower bound");
    fo->add_option("--to", fa.to, "extended-sum upper bound");
    fo->add_option("--power", fa.power, "extended-sum summand exponent");
    fo->add_option("--seed", fa.seed, "seed for rational test points");

    auto* ve = app.add_subcommand("verify", "run a cross-validation suite");
    ve->fallthrough();
    ve->add_option("suite", suite, "gog, magog, pentagon, sttree, operator, identities, appendix or all");

    auto* co = app.add_subcommand("conjecture", "compare refined Gog and Magog distributions");
    co->fallthrough();
    co->add_option("--m", cm, "fix m");
    co->add_option("--n", cn, "fix n");
    co->add_option("--k", ck, "fix k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }

    try {
        if (g.max_vars < 1 || g.max_vars > kMaxVars) throw PreconditionError("--max-vars must lie in [1, " + std::to_string(kMaxVars) + "]");
        const Budgets budgets = g.budgets();
        if (en->parsed()) {
            json r = run_enumerate(kind, ea, g);
            emit(g.csv() ? enumerate_csv(r) : dump(r), g, out);
            return kExitOk;
        }
        if (fo->parsed()) {
            if (formula_id == "list") {
                json l = json::array();
                for (const auto& f : formula_registry()) l.push_back({{"id", f.id}, {"provenance", f.provenance}, {"summary", f.summary}});
                emit(dump(l), g, out);
                return kExitOk;
            }
            auto r = evaluate_formula(formula_id, fa, budgets);
            emit(g.csv() ? formula_csv(r) : dump(formula_json(r)), g, out);
            return kExitOk;
        }
        if (ve->parsed()) {
            auto rep = run_suite(suite, {g.max_n, g.max_m}, budgets, worker_threads());
            emit(g.csv() ? report_csv(rep) : dump(report_json(rep, g.timings)), g, out);
            if (!rep.ok()) {
                err << "verify " << suite << ": " << rep.failed() << " of " << rep.cases.size() << " cases failed\n";
                return kExitMismatch;
            }
            return kExitOk;
        }
        if (co->parsed()) {
            std::vector<ConjectureTable> tables;
            const int m_lo = cm.value_or(0), m_hi = cm.value_or(g.max_m);
            const int n_lo = cn.value_or(1), n_hi = cn.value_or(g.max_n);
            for (int m = m_lo; m <= m_hi; ++m)
                for (int n = n_lo; n <= n_hi; ++n)
                    for (int k = ck.value_or(1); k <= ck.value_or(n); ++k) tables.push_back(conjecture_check(m, n, k, budgets.enumeration));
            bool all = true;
            json arr = json::array();
            for (const auto& t : tables) {
                all = all && t.match;
                arr.push_back(conjecture_json(t));
            }
            emit(g.csv() ? conjecture_csv(tables) : dump(json{{"tables", arr}, {"all_verdicts", all}}), g, out);
            return all ? kExitOk : kExitMismatch;
        }
    } catch (const ResourceError& e) {
        err << "resource budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const DomainError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const MalformedExpression& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace gogmagog::cli
