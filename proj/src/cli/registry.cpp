#include "gogmagog/cli/registry.hpp"

#include "gogmagog/diffop/operators.hpp"
#include "gogmagog/formulas/constant_terms.hpp"
#include "gogmagog/formulas/identities.hpp"
#include "gogmagog/formulas/magog.hpp"
#include "gogmagog/polyring/errors.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace gogmagog::cli {

namespace {

int need(const std::optional<int>& v, const char* flag, const std::string& id) {
    if (!v) throw PreconditionError("formula " + id + ": " + flag + " is required");
    return *v;
}

const std::vector<int>& need_bottom(const FormulaArgs& a, const std::string& id) {
    if (!a.bottom || a.bottom->empty()) throw PreconditionError("formula " + id + ": --bottom is required and non-empty");
    return *a.bottom;
}

std::optional<TopRestriction> top_of(const FormulaArgs& a, const std::vector<int>& b) {
    if (!a.top) return std::nullopt;
    return TopRestriction{*a.top, a.lo.value_or(b.front()), a.hi.value_or(b.back())};
}

BigRat parse_rational(const std::string& s) {
    BigRat r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw PreconditionError("cannot parse rational '" + s + "'");
    r.canonicalize();
    return r;
}

SymmetricInput parse_input(const std::string& s) {
    if (s == "1") return SymmetricInput::one;
    if (s == "e1") return SymmetricInput::e1;
    if (s == "e2") return SymmetricInput::e2;
    if (s == "e1^2" || s == "e1sq") return SymmetricInput::e1_squared;
    throw PreconditionError("--input must be one of 1, e1, e2, e1^2");
}

MTMode parse_mode(const std::string& s) {
    if (s == "standard") return MTMode::standard;
    if (s == "alternative") return MTMode::alternative;
    if (s == "antisym") return MTMode::antisym;
    throw PreconditionError("--mode must be standard, alternative or antisym");
}

STTreeShape shape_of(const FormulaArgs& a, const std::string& id) { return STTreeShape{need(a.n, "--n", id), a.s, a.t}; }

json truth(bool v) { return {{"holds", v}}; }

struct Entry {
    FormulaInfo info;
    std::function<FormulaResult(const FormulaArgs&, const Budgets&)> eval;
};

FormulaResult poly_result(const ParamPoly& p, std::string route, json params) {
    FormulaResult r;
    r.route = std::move(route);
    r.params = std::move(params);
    r.value = poly_json(p);
    r.poly = p;
    return r;
}

FormulaResult object_result(json value, std::string route, json params) {
    FormulaResult r;
    r.route = std::move(route);
    r.params = std::move(params);
    r.value = std::move(value);
    return r;
}

json gog_params(const FormulaArgs& a) {
    json p = {{"m", a.m.value_or(-1)}, {"n", a.n.value_or(-1)}, {"k", a.k.value_or(-1)}};
    if (a.bottom) p["bottom"] = *a.bottom;
    return p;
}

FormulaResult gog_formula(const std::string& id, const FormulaArgs& a, const Budgets& bg, WeightMode w) {
    GogCTSpec spec{need(a.m, "--m", id), need(a.n, "--n", id), need(a.k, "--k", id), a.bottom, w, std::nullopt};
    json p = gog_params(a);
    if (id == "gog-top") {
        spec.top = TopRestriction{need(a.top, "--top", id), a.lo.value_or(1), a.hi.value_or(spec.m + spec.n)};
        p["top"] = spec.top->a;
        p["lo"] = spec.top->lo;
        p["hi"] = spec.top->hi;
    }
    return poly_result(gog_ct(spec, bg.ct), "constant-term", p);
}

FormulaResult pentagon_formula(const std::string& id, const FormulaArgs& a, const Budgets& bg, WeightMode w) {
    PentagonCTSpec spec{need(a.m, "--m", id), need(a.n, "--n", id), need(a.kl, "--kl", id), need(a.kr, "--kr", id), a.bottom, w};
    json p = {{"m", spec.m}, {"n", spec.n}, {"kL", spec.kL}, {"kR", spec.kR}};
    if (a.bottom) p["bottom"] = *a.bottom;
    return poly_result(pentagon_ct(spec, bg.ct), "constant-term", p);
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"mt-uv", "monotone-triangle-constant-term", "monotone triangles with bottom row b by u^inv v^inv'"},
         [](const FormulaArgs& a, const Budgets& bg) {
             const auto& b = need_bottom(a, "mt-uv");
             return poly_result(ct_mt(b, MTMode::standard, bg.ct), "constant-term", {{"bottom", b}});
         }},
        {{"mt-count", "monotone-triangle-count-constant-term", "monotone triangle count, weak bottom rows allowed (--mode)"},
         [](const FormulaArgs& a, const Budgets& bg) {
             const auto& b = need_bottom(a, "mt-count");
             return poly_result(ct_mt(b, parse_mode(a.mode), bg.ct), a.mode + " constant-term", {{"bottom", b}, {"mode", a.mode}});
         }},
        {{"mt-top", "monotone-triangle-apex-constant-term", "monotone triangles with apex --top and entries in [--lo, --hi]"},
         [](const FormulaArgs& a, const Budgets& bg) {
             const auto& b = need_bottom(a, "mt-top");
             if (!a.top) throw PreconditionError("formula mt-top: --top is required");
             auto t = *top_of(a, b);
             return poly_result(ct_mt_top(b, t.a, t.lo, t.hi, bg.ct), "constant-term",
                                {{"bottom", b}, {"top", t.a}, {"lo", t.lo}, {"hi", t.hi}});
         }},
        {{"mt-operator", "monotone-triangle-operator-formula", "strict operators applied to the Gelfand-Tsetlin polynomial"},
         [](const FormulaArgs& a, const Budgets&) {
             const auto& b = need_bottom(a, "mt-operator");
             return poly_result(mn_evaluate(b), "operator", {{"bottom", b}});
         }},
        {{"gt-top", "gelfand-tsetlin-apex-determinant", "Gelfand-Tsetlin patterns with a given apex, signed binomial determinant"},
         [](const FormulaArgs& a, const Budgets&) {
             const auto& b = need_bottom(a, "gt-top");
             if (!a.top) throw PreconditionError("formula gt-top: --top is required");
             auto t = *top_of(a, b);
             return poly_result(ParamPoly::constant(gt_top_restricted(t.a, t.lo, t.hi, b)), "signed-binomial-determinant",
                                {{"bottom", b}, {"top", t.a}, {"lo", t.lo}, {"hi", t.hi}});
         }},
        {{"mn-top", "monotone-triangle-apex-operator", "operator formula for monotone triangles with a given apex"},
         [](const FormulaArgs& a, const Budgets&) {
             const auto& b = need_bottom(a, "mn-top");
             if (!a.top) throw PreconditionError("formula mn-top: --top is required");
             auto t = *top_of(a, b);
             return poly_result(mn_top_evaluate(t.a, t.lo, t.hi, b), "operator",
                                {{"bottom", b}, {"top", t.a}, {"lo", t.lo}, {"hi", t.hi}});
         }},
        {{"st-tree-ct", "st-tree-constant-term", "(s,t)-trees by u^inv_J v^inv'_I"},
         [](const FormulaArgs& a, const Budgets& bg) {
             const auto& b = need_bottom(a, "st-tree-ct");
             auto sh = shape_of(a, "st-tree-ct");
             json p = {{"n", sh.n}, {"s", sh.s}, {"t", sh.t}, {"bottom", b}, {"I", a.ne_exc}, {"J", a.se_exc}};
             if (a.top) p["top"] = *a.top;
             return poly_result(ct_st_tree(sh, b, a.ne_exc, a.se_exc, top_of(a, b), bg.ct), "constant-term", p);
         }},
        {{"st-tree-operator", "st-tree-operator-formula", "(s,t)-trees by the truncated-triangle operator formula"},
         [](const FormulaArgs& a, const Budgets&) {
             const auto& b = need_bottom(a, "st-tree-operator");
             auto sh = shape_of(a, "st-tree-operator");
             json p = {{"n", sh.n}, {"s", sh.s}, {"t", sh.t}, {"bottom", b}, {"I", a.ne_exc}, {"J", a.se_exc}};
             if (a.top) p["top"] = *a.top;
             return poly_result(st_operator_evaluate(sh, b, a.ne_exc, a.se_exc, top_of(a, b)), "operator", p);
         }},
        {{"gog-count", "gog-count-constant-term", "number of Gog trapezoids, optionally per bottom row"},
         [](const FormulaArgs& a, const Budgets& bg) { return gog_formula("gog-count", a, bg, WeightMode::count); }},
        {{"gog-uv", "gog-inversion-constant-term", "Gog trapezoids by u^inv v^inv'"},
         [](const FormulaArgs& a, const Budgets& bg) { return gog_formula("gog-uv", a, bg, WeightMode::inv_pair); }},
        {{"gog-minmax", "gog-min-max-constant-term",
          "Gog trapezoids by P^minima Q^maxima; per bottom row the maximum b_k is left out"},
         [](const FormulaArgs& a, const Budgets& bg) { return gog_formula("gog-minmax", a, bg, WeightMode::min_max); }},
        {{"gog-top", "gog-apex-constant-term", "Gog trapezoids with apex --top"},
         [](const FormulaArgs& a, const Budgets& bg) { return gog_formula("gog-top", a, bg, WeightMode::count); }},
        {{"pentagon-count", "pentagon-count-constant-term", "number of Gog pentagons"},
         [](const FormulaArgs& a, const Budgets& bg) { return pentagon_formula("pentagon-count", a, bg, WeightMode::count); }},
        {{"pentagon-uv", "pentagon-inversion-constant-term", "Gog pentagons by u^inv v^inv'"},
         [](const FormulaArgs& a, const Budgets& bg) { return pentagon_formula("pentagon-uv", a, bg, WeightMode::inv_pair); }},
        {{"pentagon-minmax", "pentagon-min-max-constant-term", "Gog pentagons by QL^bottom-minima QR^bottom-maxima"},
         [](const FormulaArgs& a, const Budgets& bg) { return pentagon_formula("pentagon-minmax", a, bg, WeightMode::min_max); }},
        {{"pentagon-four", "pentagon-four-weight-constant-term",
          "Gog pentagons with a top minimum and a top maximum by PL, PR, QL, QR"},
         [](const FormulaArgs& a, const Budgets& bg) { return pentagon_formula("pentagon-four", a, bg, WeightMode::top_min_max); }},
        {{"magog-lgv", "magog-lgv-determinant", "Magog trapezoids with bottom row b by P^maxima Q^minima"},
         [](const FormulaArgs& a, const Budgets&) {
             int m = need(a.m, "--m", "magog-lgv"), n = need(a.n, "--n", "magog-lgv"), k = need(a.k, "--k", "magog-lgv");
             const auto& b = need_bottom(a, "magog-lgv");
             return poly_result(magog_lgv_det(m, n, k, b), "lgv-determinant", {{"m", m}, {"n", n}, {"k", k}, {"bottom", b}});
         }},
        {{"magog-lgv-reflected", "magog-reflected-lgv-determinant", "as magog-lgv from the reflected binomial matrix"},
         [](const FormulaArgs& a, const Budgets&) {
             const std::string id = "magog-lgv-reflected";
             int m = need(a.m, "--m", id), n = need(a.n, "--n", id), k = need(a.k, "--k", id);
             const auto& b = need_bottom(a, id);
             return poly_result(magog_lgv_reflected(m, n, k, b), "reflected-lgv-determinant",
                                {{"m", m}, {"n", n}, {"k", k}, {"bottom", b}});
         }},
        {{"magog-v1", "magog-bottom-row-constant-term", "Magog trapezoids with bottom row b, constant-term route"},
         [](const FormulaArgs& a, const Budgets& bg) {
             int m = need(a.m, "--m", "magog-v1"), n = need(a.n, "--n", "magog-v1"), k = need(a.k, "--k", "magog-v1");
             const auto& b = need_bottom(a, "magog-v1");
             return poly_result(magog_ct({m, n, k, MagogVersion::v1_bottom, b}, bg.ct), "constant-term",
                                {{"m", m}, {"n", n}, {"k", k}, {"bottom", b}});
         }},
        {{"magog-total", "magog-total-constant-term", "all Magog trapezoids by P^maxima Q^minima"},
         [](const FormulaArgs& a, const Budgets& bg) {
             int m = need(a.m, "--m", "magog-total"), n = need(a.n, "--n", "magog-total"), k = need(a.k, "--k", "magog-total");
             return poly_result(magog_ct({m, n, k, MagogVersion::v1_total}, bg.ct), "constant-term", {{"m", m}, {"n", n}, {"k", k}});
         }},
        {{"magog-v2", "magog-minima-slice-constant-term", "Magog trapezoids with exactly --q minima by P^maxima"},
         [](const FormulaArgs& a, const Budgets& bg) {
             const std::string id = "magog-v2";
             int m = need(a.m, "--m", id), n = need(a.n, "--n", id), k = need(a.k, "--k", id), q = need(a.q, "--q", id);
             json p = {{"m", m}, {"n", n}, {"k", k}, {"q", q}};
             if (q < 0) throw PreconditionError("formula magog-v2: --q must be non-negative");
             if (q == 0)
                 return poly_result(specialize(magog_ct({m, n, k, MagogVersion::v1_total}, bg.ct), Param::Q, 0),
                                    "total constant-term at Q=0", p);
             if (magog_v2_excluded(m, k, q)) return poly_result(magog_slice_via_lgv(m, n, k, q), "lgv-slice (excluded case)", p);
             return poly_result(magog_ct({m, n, k, MagogVersion::v2, std::nullopt, q}, bg.ct), "constant-term", p);
         }},
        {{"magog-v2-det", "magog-minima-slice-determinant", "Magog trapezoids with exactly --q minima, determinant route"},
         [](const FormulaArgs& a, const Budgets&) {
             const std::string id = "magog-v2-det";
             int m = need(a.m, "--m", id), n = need(a.n, "--n", id), k = need(a.k, "--k", id), q = need(a.q, "--q", id);
             return poly_result(magog_v2_det(m, n, k, q), "determinant", {{"m", m}, {"n", n}, {"k", k}, {"q", q}});
         }},
        {{"asm-det", "asm-eisenstein-determinant", "ASM determinants over the Eisenstein integers"},
         [](const FormulaArgs& a, const Budgets&) {
             int n = need(a.n, "--n", "asm-det");
             auto r = asm_determinants(n, a.x_shift, a.conjugate);
             json v = {{"q", eisenstein_json(r.q)},
                       {"d1", eisenstein_json(r.d1)},
                       {"d2", eisenstein_json(r.d2)},
                       {"d3", eisenstein_json(r.d3)},
                       {"quotient_pos", r.quotient_pos},
                       {"quotient_neg", r.quotient_neg},
                       {"d3_is_asm", r.d3_is_asm}};
             if (r.d1_is_asm) v["d1_is_asm"] = *r.d1_is_asm;
             return object_result(v, "eisenstein determinant",
                                  {{"n", n}, {"x_shift", a.x_shift}, {"root", a.conjugate ? "omega-bar" : "omega"}});
         }},
        {{"lemma-zeil", "antisymmetrizer-product-lemma", "antisymmetrized product identity in r variables"},
         [](const FormulaArgs& a, const Budgets&) {
             int r = need(a.r, "--r", "lemma-zeil");
             return object_result(truth(verify_lemma_zeilberger(r, a.seed)), "seeded rational points", {{"r", r}, {"seed", a.seed}});
         }},
        {{"sum-identity", "bounded-strict-sum-identity", "sum over b <= b_1 < ... < b_r of det(x_i^b_j), to a degree cap"},
         [](const FormulaArgs& a, const Budgets&) {
             int r = need(a.r, "--r", "sum-identity"), b = need(a.base, "--base", "sum-identity"), cap = a.cap.value_or(8);
             return object_result(truth(verify_summation_identity(r, b, cap)), "truncated series", {{"r", r}, {"base", b}, {"cap", cap}});
         }},
        {{"thm-zeil", "gog-magog-constant-term-identity", "Gog-type and Magog-type constant terms with a symmetric weight"},
         [](const FormulaArgs& a, const Budgets&) {
             int n = need(a.n, "--n", "thm-zeil");
             std::optional<BigRat> t;
             if (a.t_value) t = parse_rational(*a.t_value);
             json p = {{"n", n}, {"input", a.input}};
             if (t) p["t"] = t->get_str();
             return object_result(truth(verify_theorem_zeil(n, symmetric_input(parse_input(a.input), n), t)),
                                  t ? "exact at t" : "exact in t", p);
         }},
        {{"antisym-identity", "antisymmetrizer-kernel-identity", "antisymmetrizer identities with a quadratic or linear kernel"},
         [](const FormulaArgs& a, const Budgets&) {
             int n = need(a.n, "--n", "antisym-identity");
             AntisymVariant v;
             if (a.variant == "general")
                 v = AntisymVariant::general;
             else if (a.variant == "linear")
                 v = AntisymVariant::linear;
             else
                 throw PreconditionError("--variant must be general or linear");
             return object_result(truth(verify_antisymmetrizer_identities(n, v, a.seed)), "seeded rational points",
                                  {{"n", n}, {"variant", a.variant}, {"seed", a.seed}});
         }},
        {{"behrend", "coinciding-point-determinant-limit", "determinant limits at coinciding points for a named --family"},
         [](const FormulaArgs& a, const Budgets&) {
             int n = need(a.n, "--n", "behrend");
             for (const auto& [name, f] : behrend_bivariate_families())
                 if (name == a.family)
                     return object_result(truth(verify_behrend_limits(n, f())), "bivariate", {{"n", n}, {"family", name}});
             for (const auto& [name, f] : behrend_univariate_families())
                 if (name == a.family)
                     return object_result(truth(verify_behrend_limits(n, f(n))), "univariate", {{"n", n}, {"family", name}});
             std::string known;
             for (const auto& e : behrend_bivariate_families()) known += " " + e.first;
             for (const auto& e : behrend_univariate_families()) known += " " + e.first;
             throw PreconditionError("--family must be one of:" + known);
         }},
        {{"symmetrizer", "symmetrizer-closed-form", "symmetrizer closed forms for the monotone triangle count"},
         [](const FormulaArgs& a, const Budgets&) {
             int n = need(a.n, "--n", "symmetrizer");
             SymmetrizerSource s;
             if (a.source == "cube-root-constant-term")
                 s = SymmetrizerSource::cube_root_ct;
             else if (a.source == "sixth-root-alternative")
                 s = SymmetrizerSource::sixth_root_alternative;
             else if (a.source == "cube-root-alternative")
                 s = SymmetrizerSource::cube_root_alternative;
             else
                 throw PreconditionError("--source must be cube-root-constant-term, sixth-root-alternative or cube-root-alternative");
             return object_result(truth(verify_symmetrizer_mt(n, s, a.seed)), "seeded rational points",
                                  {{"n", n}, {"source", a.source}, {"seed", a.seed}});
         }},
        {{"extended-sum", "extended-summation", "extended sum of i^power from --from to --to"},
         [](const FormulaArgs& a, const Budgets&) {
             int lo = need(a.from, "--from", "extended-sum"), hi = need(a.to, "--to", "extended-sum");
             if (a.power < 0) throw PreconditionError("formula extended-sum: --power must be non-negative");
             const int e = a.power;
             BigInt v = extended_sum<BigInt>(
                 [e](long i) {
                     BigInt r;
                     mpz_pow_ui(r.get_mpz_t(), BigInt(i).get_mpz_t(), e);
                     return r;
                 },
                 lo, hi);
             return poly_result(ParamPoly::constant(v), "direct", {{"from", lo}, {"to", hi}, {"power", e}});
         }},
    };
    return table;
}

}  // namespace

const std::vector<FormulaInfo>& formula_registry() {
    static const std::vector<FormulaInfo> infos = [] {
        std::vector<FormulaInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

FormulaResult evaluate_formula(const std::string& id, const FormulaArgs& args, const Budgets& budgets) {
    for (const auto& e : entries())
        if (e.info.id == id) {
            FormulaResult r = e.eval(args, budgets);
            r.id = e.info.id;
            r.provenance = e.info.provenance;
            return r;
        }
    throw PreconditionError("unknown formula id '" + id + "'");
}

json formula_json(const FormulaResult& r) {
    json j = {{"formula", r.id}, {"provenance", r.provenance}, {"route", r.route}, {"params", r.params}, {"value", r.value}};
    if (r.poly) j["text"] = to_string(*r.poly);
    return j;
}

std::string formula_csv(const FormulaResult& r) {
    if (r.poly) return poly_csv(*r.poly);
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [k, v] : r.value.items()) os << csv_escape(k) << "," << csv_escape(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return os.str();
}

}  // namespace gogmagog::cli
