#include "gogmagog/cli/suites.hpp"

#include "gogmagog/diffop/operators.hpp"
#include "gogmagog/formulas/constant_terms.hpp"
#include "gogmagog/formulas/identities.hpp"
#include "gogmagog/formulas/magog.hpp"
#include "gogmagog/laurent/symmetric.hpp"
#include "gogmagog/matchings/ar_graph.hpp"
#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/triangles/asm.hpp"
#include "gogmagog/triangles/enumerate.hpp"
#include "gogmagog/triangles/sttree.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace gogmagog::cli {

namespace {

using Job = std::function<std::vector<SuiteCase>()>;

ParamPoly mono(std::initializer_list<std::pair<Param, int>> ps) {
    Key k;
    for (auto [p, e] : ps) k.add(param_slot(p), e);
    return ParamPoly::monomial(k, BigInt(1));
}

ParamPoly constant(const BigInt& c) { return ParamPoly::constant(c); }

BigInt integral(const BigRat& r) {
    if (r.get_den() != 1) throw DomainError("expected an integer, got " + r.get_str());
    return r.get_num();
}

// Evaluates both routes, recording failures of either as an error.
template <class F>
SuiteCase make_case(const std::string& suite, const std::string& name, json params, const std::string& ra, const std::string& rb,
                    F&& compute) {
    SuiteCase c;
    c.suite = suite;
    c.name = name;
    c.params = std::move(params);
    c.route_a = ra;
    c.route_b = rb;
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto [a, b] = compute();
        c.value_a = a;
        c.value_b = b;
        c.equal = a == b;
    } catch (const std::exception& e) {
        c.error = e.what();
        c.equal = false;
    }
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

std::pair<json, json> polys(const ParamPoly& a, const ParamPoly& b) { return {poly_json(a), poly_json(b)}; }

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

std::string mnk(int m, int n, int k) {
    return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

void strict_subsets(int n, int hi, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> b;
    std::function<void(int)> rec = [&](int s) {
        if (static_cast<int>(b.size()) == n) {
            f(b);
            return;
        }
        for (int v = s; v <= hi; ++v) {
            b.push_back(v);
            rec(v + 1);
            b.pop_back();
        }
    };
    rec(1);
}

void weak_sequences(int n, int hi, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> b;
    std::function<void(int)> rec = [&](int s) {
        if (static_cast<int>(b.size()) == n) {
            f(b);
            return;
        }
        for (int v = s; v <= hi; ++v) {
            b.push_back(v);
            rec(v);
            b.pop_back();
        }
    };
    rec(1);
}

// ---- gog ----

std::vector<Job> gog_jobs(const SuiteBounds& bd, const Budgets& bg) {
    std::vector<Job> jobs;
    for (int m = 0; m <= bd.max_m; ++m)
        for (int n = 1; n <= bd.max_n; ++n)
            for (int k = 1; k <= n; ++k)
                jobs.push_back([=]() {
                    const std::string S = "gog";
                    std::map<std::vector<int>, std::array<ParamPoly, 3>> per;
                    std::map<int, ParamPoly> tops;
                    ParamPoly total_count, total_pq;
                    enumerate_gog_trapezoids(
                        m, n, k, std::nullopt,
                        [&](const TriangularArray& T, const StatVector& s) {
                            auto& a = per[s.bottom_row];
                            a[0] += ParamPoly(1);
                            a[1] += mono({{Param::u, s.inv}, {Param::v, s.inv_prime}});
                            a[2] += mono({{Param::P, s.minima}, {Param::Q, s.maxima - (s.bottom_right_is_max ? 1 : 0)}});
                            tops[T.at(1, 1)] += ParamPoly(1);
                            total_count += ParamPoly(1);
                            total_pq += mono({{Param::P, s.minima}, {Param::Q, s.maxima}});
                        },
                        bg.enumeration);
                    std::vector<SuiteCase> out;
                    const std::pair<WeightMode, const char*> modes[3] = {
                        {WeightMode::count, "count"}, {WeightMode::inv_pair, "uv"}, {WeightMode::min_max, "minmax"}};
                    for (const auto& [b, vals] : per)
                        for (int w = 0; w < 3; ++w) {
                            json p = {{"m", m}, {"n", n}, {"k", k}, {"bottom", b}, {"weights", modes[w].second}};
                            out.push_back(make_case(S, mnk(m, n, k) + " b=" + vec_str(b) + " " + modes[w].second, p, "brute-force",
                                                    "constant-term", [&, w, b = b] {
                                                        return polys(vals[w], gog_ct({m, n, k, b, modes[w].first}, bg.ct));
                                                    }));
                        }
                    out.push_back(make_case(S, mnk(m, n, k) + " total count", {{"m", m}, {"n", n}, {"k", k}}, "brute-force",
                                            "constant-term",
                                            [&] { return polys(total_count, gog_ct({m, n, k, std::nullopt, WeightMode::count}, bg.ct)); }));
                    out.push_back(make_case(S, mnk(m, n, k) + " total minmax", {{"m", m}, {"n", n}, {"k", k}}, "brute-force",
                                            "constant-term with bottom-maximum splice", [&] {
                                                return polys(total_pq, gog_ct({m, n, k, std::nullopt, WeightMode::min_max}, bg.ct));
                                            }));
                    if (n <= 3)
                        for (const auto& [a, c] : tops) {
                            TopRestriction tr{a, 1, m + n};
                            json p = {{"m", m}, {"n", n}, {"k", k}, {"top", a}, {"lo", 1}, {"hi", m + n}};
                            out.push_back(make_case(S, mnk(m, n, k) + " top=" + std::to_string(a), p, "brute-force",
                                                    "constant-term apex-restricted", [&, tr, c = c] {
                                                        return polys(c, gog_ct({m, n, k, std::nullopt, WeightMode::count, tr}, bg.ct));
                                                    }));
                        }
                    return out;
                });
    return jobs;
}

// ---- pentagons ----

std::vector<Job> pentagon_jobs(const SuiteBounds& bd, const Budgets& bg) {
    std::vector<Job> jobs;
    for (int m = 0; m <= bd.max_m; ++m)
        for (int n = 1; n <= bd.max_n; ++n)
            for (int kL = 1; kL <= n; ++kL)
                for (int kR = 1; kR <= n; ++kR) {
                    if (kL + kR < n + 1) continue;
                    jobs.push_back([=]() {
                        const std::string S = "pentagon";
                        const std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " kL=" + std::to_string(kL) +
                                                " kR=" + std::to_string(kR);
                        std::vector<SuiteCase> out;
                        std::map<std::vector<int>, std::array<ParamPoly, 4>> per;
                        BigInt total = 0;
                        try {
                            enumerate_gog_pentagons(
                                m, n, kL, kR,
                                [&](const TriangularArray&, const StatVector& s) {
                                    auto& a = per[s.bottom_row];
                                    const int bl = s.bottom_left_is_min, br = s.bottom_right_is_max;
                                    a[0] += ParamPoly(1);
                                    a[1] += mono({{Param::u, s.inv}, {Param::v, s.inv_prime}});
                                    a[2] += mono({{Param::QL, s.bottom_minima - bl}, {Param::QR, s.bottom_maxima - br}});
                                    if (s.top_minima >= 1 && s.top_maxima >= 1)
                                        a[3] += mono({{Param::PL, s.top_minima},
                                                      {Param::PR, s.top_maxima},
                                                      {Param::QL, s.bottom_minima - bl},
                                                      {Param::QR, s.bottom_maxima - br}});
                                    total += 1;
                                },
                                bg.enumeration);
                        } catch (const std::logic_error& e) {
                            // a violated structural assertion is a reading discrepancy, reported as a failing case
                            SuiteCase c;
                            c.suite = S;
                            c.name = tag + " enumeration";
                            c.error = e.what();
                            out.push_back(c);
                            return out;
                        }
                        const std::pair<WeightMode, const char*> modes[4] = {{WeightMode::count, "count"},
                                                                             {WeightMode::inv_pair, "uv"},
                                                                             {WeightMode::min_max, "minmax"},
                                                                             {WeightMode::top_min_max, "four-weight"}};
                        for (const auto& [b, vals] : per)
                            for (int w = 0; w < 4; ++w) {
                                json p = {{"m", m}, {"n", n}, {"kL", kL}, {"kR", kR}, {"bottom", b}, {"weights", modes[w].second}};
                                out.push_back(make_case(S, tag + " b=" + vec_str(b) + " " + modes[w].second, p, "brute-force",
                                                        "constant-term", [&, w, b = b] {
                                                            return polys(vals[w], pentagon_ct({m, n, kL, kR, b, modes[w].first}, bg.ct));
                                                        }));
                            }
                        out.push_back(make_case(S, tag + " total count", {{"m", m}, {"n", n}, {"kL", kL}, {"kR", kR}}, "brute-force",
                                                "constant-term summed over candidate bottom rows", [&] {
                                                    ParamPoly sum;
                                                    for (const auto& b : pentagon_bottom_rows(m, n, kL, kR))
                                                        sum += pentagon_ct({m, n, kL, kR, b, WeightMode::count}, bg.ct);
                                                    return polys(constant(total), sum);
                                                }));
                        return out;
                    });
                }
    return jobs;
}

// ---- magog ----

std::vector<Job> magog_jobs(const SuiteBounds& bd, const Budgets& bg) {
    std::vector<Job> jobs;
    for (int m = 0; m <= bd.max_m; ++m)
        for (int n = 1; n <= bd.max_n; ++n)
            for (int k = 1; k <= n; ++k)
                jobs.push_back([=]() {
                    const std::string S = "magog";
                    std::map<std::vector<int>, ParamPoly> per;
                    std::map<int, ParamPoly> slices;
                    ParamPoly total;
                    enumerate_magog_trapezoids(
                        m, n, k,
                        [&](const TriangularArray&, const StatVector& s) {
                            per[s.bottom_row] += mono({{Param::P, s.maxima}, {Param::Q, s.minima - (s.bottom_row[0] == 1 ? 1 : 0)}});
                            total += mono({{Param::P, s.maxima}, {Param::Q, s.minima}});
                            slices[s.minima] += mono({{Param::P, s.maxima}});
                        },
                        bg.enumeration);
                    std::vector<SuiteCase> out;
                    for (const auto& [b, v] : per) {
                        json p = {{"m", m}, {"n", n}, {"k", k}, {"bottom", b}};
                        const std::string nm = mnk(m, n, k) + " b=" + vec_str(b);
                        out.push_back(make_case(S, nm + " lgv", p, "brute-force", "lgv-determinant",
                                                [&, b = b, v = v] { return polys(v, magog_lgv_det(m, n, k, b)); }));
                        out.push_back(make_case(S, nm + " lgv-reflected", p, "brute-force", "reflected-lgv-determinant",
                                                [&, b = b, v = v] { return polys(v, magog_lgv_reflected(m, n, k, b)); }));
                        out.push_back(make_case(S, nm + " constant-term", p, "brute-force", "constant-term", [&, b = b, v = v] {
                            return polys(v, magog_ct({m, n, k, MagogVersion::v1_bottom, b}, bg.ct));
                        }));
                    }
                    out.push_back(make_case(S, mnk(m, n, k) + " total", {{"m", m}, {"n", n}, {"k", k}}, "brute-force", "constant-term",
                                            [&] { return polys(total, magog_ct({m, n, k, MagogVersion::v1_total}, bg.ct)); }));
                    for (int q = 1; q <= n - k + 1; ++q) {
                        json p = {{"m", m}, {"n", n}, {"k", k}, {"q", q}};
                        const std::string nm = mnk(m, n, k) + " q=" + std::to_string(q);
                        const ParamPoly want = slices.count(q) ? slices[q] : ParamPoly();
                        if (magog_v2_excluded(m, k, q)) {
                            out.push_back(make_case(S, nm + " slice", p, "brute-force", "lgv-slice",
                                                    [&] { return polys(want, magog_slice_via_lgv(m, n, k, q)); }));
                            continue;
                        }
                        out.push_back(make_case(S, nm + " slice", p, "brute-force", "constant-term", [&] {
                            return polys(want, magog_ct({m, n, k, MagogVersion::v2, std::nullopt, q}, bg.ct));
                        }));
                        out.push_back(make_case(S, nm + " slice-det", p, "brute-force", "determinant",
                                                [&] { return polys(want, magog_v2_det(m, n, k, q)); }));
                    }
                    return out;
                });
    return jobs;
}

// ---- monotone triangles: brute force, operator formula, constant term ----

std::vector<Job> operator_jobs(const SuiteBounds& bd, const Budgets& bg) {
    std::vector<Job> jobs;
    const int hi = bd.max_n + 2;
    for (int n = 1; n <= bd.max_n; ++n)
        strict_subsets(n, hi, [&](const std::vector<int>& b) {
            jobs.push_back([=]() {
                const std::string S = "operator";
                json p = {{"bottom", b}};
                const ParamPoly brute = mt_generating_function(b);
                std::vector<SuiteCase> out;
                out.push_back(make_case(S, "b=" + vec_str(b) + " uv operator", p, "brute-force", "operator",
                                        [&] { return polys(brute, mn_evaluate(b)); }));
                out.push_back(make_case(S, "b=" + vec_str(b) + " uv constant-term", p, "brute-force", "constant-term",
                                        [&] { return polys(brute, ct_mt(b, MTMode::standard, bg.ct)); }));
                if (n <= 3) {
                    std::map<int, ParamPoly> by_top;
                    std::map<int, BigInt> gt_by_top;
                    enumerate_monotone_triangles(b, [&](const TriangularArray&, const StatVector& s) {
                        by_top[s.top_entry] += mono({{Param::u, s.inv}, {Param::v, s.inv_prime}});
                    });
                    enumerate_gt_patterns(b, [&](const TriangularArray& t, const StatVector&) { gt_by_top[t.at(1, 1)] += 1; });
                    const int lo = b.front(), top_hi = b.back();
                    for (int a = lo; a <= top_hi; ++a) {
                        json pa = {{"bottom", b}, {"top", a}, {"lo", lo}, {"hi", top_hi}};
                        const std::string nm = "b=" + vec_str(b) + " top=" + std::to_string(a);
                        const ParamPoly want = by_top.count(a) ? by_top[a] : ParamPoly();
                        const BigInt gt_want = gt_by_top.count(a) ? gt_by_top[a] : BigInt(0);
                        out.push_back(make_case(S, nm + " operator", pa, "brute-force", "operator",
                                                [&] { return polys(want, mn_top_evaluate(a, lo, top_hi, b)); }));
                        out.push_back(make_case(S, nm + " constant-term", pa, "brute-force", "constant-term",
                                                [&] { return polys(want, ct_mt_top(b, a, lo, top_hi, bg.ct)); }));
                        out.push_back(make_case(S, nm + " gelfand-tsetlin", pa, "brute-force", "signed-binomial-determinant",
                                                [&] { return polys(constant(gt_want), constant(gt_top_restricted(a, lo, top_hi, b))); }));
                    }
                }
                return out;
            });
        });
    // weakly increasing bottom rows, plain counts
    for (int n = 1; n <= std::min(bd.max_n, 3); ++n)
        weak_sequences(n, n + 1, [&](const std::vector<int>& b) {
            jobs.push_back([=]() {
                const std::string S = "operator";
                json p = {{"bottom", b}};
                const BigInt count = enumerate_monotone_triangles(b, [](const TriangularArray&, const StatVector&) {});
                const std::string nm = "weak b=" + vec_str(b);
                std::vector<SuiteCase> out;
                out.push_back(make_case(S, nm + " operator", p, "brute-force", "operator at u=v=1",
                                        [&] { return polys(constant(count), constant(mn_evaluate_at_one(b))); }));
                out.push_back(make_case(S, nm + " alternative", p, "brute-force", "alternative constant-term",
                                        [&] { return polys(constant(count), ct_mt(b, MTMode::alternative, bg.ct)); }));
                out.push_back(make_case(S, nm + " antisymmetrized", p, "brute-force", "antisymmetrized constant-term",
                                        [&] { return polys(constant(count), ct_mt(b, MTMode::antisym, bg.ct)); }));
                return out;
            });
        });
    return jobs;
}

// ---- (s,t)-trees ----

std::vector<Job> sttree_jobs(const SuiteBounds& bd, const Budgets& bg) {
    const std::vector<STTreeShape> catalogue = {
        {1, {}, {}},     {2, {}, {}},     {2, {1}, {}},     {2, {}, {1}},     {3, {}, {}},      {3, {1}, {}},     {3, {}, {1}},
        {3, {1}, {1}},   {3, {2}, {}},    {3, {}, {2}},     {3, {1, 1}, {}},  {4, {}, {}},      {4, {1}, {1}},    {4, {2}, {}},
        {4, {}, {2}},    {4, {1, 1}, {}}, {4, {}, {1, 1}},  {4, {2, 1}, {}},  {4, {}, {1, 2}},  {5, {2, 1}, {1}}, {5, {1}, {1, 2}},
        {5, {2}, {2}}};
    std::vector<Job> jobs;
    for (const auto& sh : catalogue) {
        if (sh.n > bd.max_n) continue;
        try {
            st_tree_layout(sh);
        } catch (const PreconditionError&) {
            continue;
        }
        std::vector<int> b;
        for (int i = 1; i <= sh.n; ++i) b.push_back(2 * i - 1 + (i % 2));
        const auto AI = admissible_I(sh), AJ = admissible_J(sh);
        std::string shape = "n=" + std::to_string(sh.n) + " s=" + vec_str(sh.s) + " t=" + vec_str(sh.t);
        for (unsigned mi = 0; mi < (1u << AI.size()); ++mi)
            for (unsigned mj = 0; mj < (1u << AJ.size()); ++mj) {
                std::vector<int> I, J;
                for (size_t q = 0; q < AI.size(); ++q)
                    if (mi >> q & 1) I.push_back(AI[q]);
                for (size_t q = 0; q < AJ.size(); ++q)
                    if (mj >> q & 1) J.push_back(AJ[q]);
                jobs.push_back([=]() {
                    const std::string S = "sttree";
                    json p = {{"n", sh.n}, {"s", sh.s}, {"t", sh.t}, {"bottom", b}, {"I", I}, {"J", J}};
                    const std::string nm = shape + " I=" + vec_str(I) + " J=" + vec_str(J);
                    const ParamPoly brute = st_tree_generating_function(sh, b, I, J);
                    std::vector<SuiteCase> out;
                    out.push_back(make_case(S, nm + " operator", p, "brute-force", "operator",
                                            [&] { return polys(brute, st_operator_evaluate(sh, b, I, J)); }));
                    out.push_back(make_case(S, nm + " constant-term", p, "brute-force", "constant-term",
                                            [&] { return polys(brute, ct_st_tree(sh, b, I, J, std::nullopt, bg.ct)); }));
                    return out;
                });
            }
        if (sh.n <= 3)
            for (int a = b.front(); a <= b.back(); ++a)
                jobs.push_back([=]() {
                    const std::string S = "sttree";
                    TopRestriction tr{a, b.front(), b.back()};
                    json p = {{"n", sh.n}, {"s", sh.s}, {"t", sh.t}, {"bottom", b}, {"top", a}};
                    const std::string nm = shape + " top=" + std::to_string(a);
                    const ParamPoly brute = st_tree_generating_function(sh, b, {}, {}, tr);
                    std::vector<SuiteCase> out;
                    out.push_back(make_case(S, nm + " operator", p, "brute-force", "operator",
                                            [&] { return polys(brute, st_operator_evaluate(sh, b, {}, {}, tr)); }));
                    out.push_back(make_case(S, nm + " constant-term", p, "brute-force", "constant-term",
                                            [&] { return polys(brute, ct_st_tree(sh, b, {}, {}, tr, bg.ct)); }));
                    return out;
                });
    }
    return jobs;
}

// ---- identities ----

const char* input_name(SymmetricInput s) {
    switch (s) {
        case SymmetricInput::one: return "1";
        case SymmetricInput::e1: return "e1";
        case SymmetricInput::e2: return "e2";
        case SymmetricInput::e1_squared: return "e1^2";
    }
    return "?";
}

Job identity_job(const std::string& name, json params, std::function<bool()> check) {
    return [=]() {
        return std::vector<SuiteCase>{make_case("identities", name, params, "exact identity check", "expected",
                                                [&] { return std::pair<json, json>{json(check()), json(true)}; })};
    };
}

std::vector<Job> identity_jobs(const SuiteBounds& bd) {
    std::vector<Job> jobs;
    for (int r = 1; r <= std::min(bd.max_n, 4); ++r)
        jobs.push_back(identity_job("zeilberger lemma r=" + std::to_string(r), {{"r", r}}, [r] { return verify_lemma_zeilberger(r); }));
    for (int r = 1; r <= std::min(bd.max_n, 3); ++r)
        for (int b : {0, 1, 2})
            jobs.push_back(identity_job("summation identity r=" + std::to_string(r) + " b=" + std::to_string(b),
                                        {{"r", r}, {"b", b}, {"cap", 8}}, [r, b] { return verify_summation_identity(r, b, 8); }));
    for (int n = 1; n <= std::min(bd.max_n, 3); ++n) {
        for (auto s : {SymmetricInput::one, SymmetricInput::e1, SymmetricInput::e2, SymmetricInput::e1_squared}) {
            const std::string sn = input_name(s);
            jobs.push_back(identity_job("gog-magog constant terms n=" + std::to_string(n) + " S=" + sn + " t symbolic",
                                        {{"n", n}, {"S", sn}},
                                        [n, s] { return verify_theorem_zeil(n, symmetric_input(s, n)); }));
            jobs.push_back(identity_job("gog-magog constant terms n=" + std::to_string(n) + " S=" + sn + " t=3/2",
                                        {{"n", n}, {"S", sn}, {"t", "3/2"}},
                                        [n, s] { return verify_theorem_zeil(n, symmetric_input(s, n), BigRat(3, 2)); }));
        }
        jobs.push_back(identity_job("antisymmetrizer quadratic kernel n=" + std::to_string(n), {{"n", n}, {"variant", "general"}},
                                    [n] { return verify_antisymmetrizer_identities(n, AntisymVariant::general); }));
        jobs.push_back(identity_job("antisymmetrizer linear kernel n=" + std::to_string(n), {{"n", n}, {"variant", "linear"}},
                                    [n] { return verify_antisymmetrizer_identities(n, AntisymVariant::linear); }));
        for (const auto& [name, f] : behrend_bivariate_families())
            jobs.push_back(identity_job("coinciding-point limit bivariate " + name + " n=" + std::to_string(n),
                                        {{"n", n}, {"family", name}}, [n, f = f] { return verify_behrend_limits(n, f()); }));
        for (const auto& [name, f] : behrend_univariate_families())
            jobs.push_back(identity_job("coinciding-point limit univariate " + name + " n=" + std::to_string(n),
                                        {{"n", n}, {"family", name}}, [n, f = f] { return verify_behrend_limits(n, f(n)); }));
        const std::pair<SymmetrizerSource, const char*> sources[3] = {{SymmetrizerSource::cube_root_ct, "cube-root-constant-term"},
                                                                       {SymmetrizerSource::sixth_root_alternative, "sixth-root-alternative"},
                                                                       {SymmetrizerSource::cube_root_alternative, "cube-root-alternative"}};
        for (const auto& [src, sname] : sources)
            jobs.push_back(identity_job("symmetrizer closed form " + std::string(sname) + " n=" + std::to_string(n),
                                        {{"n", n}, {"source", sname}}, [n, src = src] { return verify_symmetrizer_mt(n, src); }));
    }
    for (int n = 1; n <= std::min(bd.max_n + 2, 6); ++n)
        jobs.push_back([n]() {
            const std::string S = "identities";
            json p = {{"n", n}};
            std::vector<SuiteCase> out;
            AsmDeterminantReport r;
            out.push_back(make_case(S, "asm determinant at omega n=" + std::to_string(n), p, "eisenstein determinant",
                                    "asm product formula", [&] {
                                        r = asm_determinants(n);
                                        return std::pair<json, json>{eisenstein_json(r.d1),
                                                                     eisenstein_json(Eisenstein::from(asm_count_formula(n)))};
                                    }));
            out.push_back(make_case(S, "asm determinant quotient (-q)^n n=" + std::to_string(n), p, "determinant quotient",
                                    "expected", [&] { return std::pair<json, json>{json(asm_determinants(n).quotient_pos), json(true)}; }));
            out.push_back(make_case(S, "asm determinant binomial form n=" + std::to_string(n), p, "eisenstein determinant",
                                    "asm product formula", [&] {
                                        auto rr = asm_determinants(n);
                                        return std::pair<json, json>{eisenstein_json(rr.d3),
                                                                     eisenstein_json(Eisenstein::from(asm_count_formula(n)))};
                                    }));
            return out;
        });
    return jobs;
}

// ---- appendix: matchings, 2-enumeration, statistics ----

std::vector<Job> appendix_jobs(const SuiteBounds& bd, const Budgets& bg) {
    std::vector<Job> jobs;
    const int m_hi = bd.max_m + 3;
    for (int n = 1; n <= std::min(bd.max_n, 3); ++n)
        for (int m = n; m <= m_hi; ++m)
            strict_subsets(n, m, [&](const std::vector<int>& b) {
                jobs.push_back([=]() {
                    const std::string S = "appendix";
                    json p = {{"n", n}, {"m", m}, {"bottom", b}};
                    const std::string nm = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " b=" + vec_str(b);
                    std::vector<SuiteCase> out;
                    const ARGraph g = ar_graph(n, m, b);
                    out.push_back(make_case(S, nm + " matchings", p, "weighted perfect matchings", "monotone triangles at v=1-u", [&] {
                        auto mt = mt_generating_function(b).substitute(param_slot(Param::v), ParamPoly(1) - ParamPoly::param(Param::u));
                        return polys(weighted_matching_sum(g).value, mt);
                    }));
                    if (n <= 2) {
                        std::map<std::vector<int>, std::pair<uint64_t, int>> classes;
                        uint64_t matchings = 0;
                        auto compute = [&] {
                            if (!classes.empty() || matchings) return;
                            for (const auto& M : perfect_matchings(g)) {
                                auto c = matching_class(g, M);
                                auto& x = classes[c.triangle.cells];
                                ++x.first;
                                x.second = c.exponent;
                                ++matchings;
                            }
                        };
                        out.push_back(make_case(S, nm + " class count", p, "matching classes", "monotone triangles", [&] {
                            compute();
                            uint64_t cnt = enumerate_monotone_triangles(b, [](const TriangularArray&, const StatVector&) {});
                            return std::pair<json, json>{json(classes.size()), json(cnt)};
                        }));
                        out.push_back(make_case(S, nm + " class sizes", p, "class sizes", "powers of two", [&] {
                            compute();
                            json got = json::array(), want = json::array();
                            for (const auto& [k, v] : classes) {
                                got.push_back(v.first);
                                want.push_back(uint64_t(1) << v.second);
                            }
                            return std::pair<json, json>{got, want};
                        }));
                    }
                    return out;
                });
            });
    for (int n = 1; n <= bd.max_n; ++n)
        strict_subsets(n, bd.max_n + 2, [&](const std::vector<int>& b) {
            jobs.push_back([=]() {
                const std::string S = "appendix";
                json p = {{"bottom", b}};
                const std::string nm = "b=" + vec_str(b) + " 2-enumeration";
                BigInt brute = 0;
                enumerate_monotone_triangles(b, [&](const TriangularArray&, const StatVector& s) {
                    BigInt w;
                    mpz_ui_pow_ui(w.get_mpz_t(), 2, s.minus_ones);
                    brute += w;
                });
                BigInt scale;
                mpz_ui_pow_ui(scale.get_mpz_t(), 2, n * (n - 1) / 2);
                std::vector<SuiteCase> out;
                out.push_back(make_case(S, nm + " product", p, "brute-force", "2^C(n,2) prod (b_j-b_i)/(j-i)", [&] {
                    return polys(constant(brute), constant(integral(BigRat(scale) * strict_gt_count_formula(b))));
                }));
                out.push_back(make_case(S, nm + " constant-term", p, "brute-force", "2^C(n,2) constant-term at u=v=1/2", [&] {
                    auto v = evaluate_params(ct_mt(b, MTMode::standard, bg.ct), {{Param::u, BigRat(1, 2)}, {Param::v, BigRat(1, 2)}});
                    return polys(constant(brute), constant(integral(BigRat(scale) * v)));
                }));
                return out;
            });
        });
    for (int n = 1; n <= bd.max_n; ++n)
        jobs.push_back([n]() {
            const std::string S = "appendix";
            json p = {{"n", n}};
            const std::string nm = "asm n=" + std::to_string(n);
            std::vector<SuiteCase> out;
            const auto asms = all_asms(n);
            out.push_back(make_case(S, nm + " count", p, "enumeration", "asm product formula", [&] {
                return polys(constant(BigInt(static_cast<unsigned long>(asms.size()))), constant(asm_count_formula(n)));
            }));
            out.push_back(make_case(S, nm + " inversions", p, "inv + inv' + #(-1) per asm", "C(n,2)", [&] {
                json got = json::array(), want = json::array();
                for (const auto& A : asms) {
                    auto s = asm_statistics(A);
                    got.push_back(s.inv + s.inv_prime + s.minus_count);
                    want.push_back(n * (n - 1) / 2);
                }
                return std::pair<json, json>{got, want};
            }));
            out.push_back(make_case(S, nm + " round trip", p, "asm statistics", "monotone triangle statistics after round trip", [&] {
                json got = json::array(), want = json::array();
                for (const auto& A : asms) {
                    auto s = asm_statistics(A);
                    auto T = asm_to_monotone_triangle(A);
                    auto ts = monotone_triangle_stats(T);
                    got.push_back({s.inv, s.inv_prime, s.minus_count, true});
                    want.push_back({ts.inv, ts.inv_prime, ts.minus_ones, monotone_triangle_to_asm(T) == A});
                }
                return std::pair<json, json>{got, want};
            }));
            return out;
        });
    return jobs;
}

}  // namespace

const std::vector<std::pair<std::string, std::function<LaurentPoly()>>>& behrend_bivariate_families() {
    static const std::vector<std::pair<std::string, std::function<LaurentPoly()>>> f = {
        {"linear-product", [] { return (LaurentPoly(1) + LaurentPoly::x(0)) * (LaurentPoly(1) + LaurentPoly::x(1)); }},
        {"cubic", [] { return (LaurentPoly(1) + LaurentPoly::x(0) * LaurentPoly::x(1)).pow(3) + LaurentPoly::x(0, 2) * LaurentPoly::x(1); }},
        {"quartic", [] { return (LaurentPoly::x(0) + LaurentPoly::x(1) * LaurentPoly(2) + LaurentPoly(1)).pow(4); }}};
    return f;
}

const std::vector<std::pair<std::string, std::function<std::vector<LaurentPoly>(int)>>>& behrend_univariate_families() {
    static const std::vector<std::pair<std::string, std::function<std::vector<LaurentPoly>(int)>>> f = {
        {"shifted-squares",
         [](int n) {
             std::vector<LaurentPoly> fs;
             for (int j = 0; j < n; ++j) fs.push_back((LaurentPoly::x(0) + LaurentPoly(j + 1)).pow(2));
             return fs;
         }},
        {"mixed-powers", [](int n) {
             std::vector<LaurentPoly> fs;
             for (int j = 0; j < n; ++j) fs.push_back(LaurentPoly::x(0, j + 2) + LaurentPoly::x(0) * LaurentPoly(j));
             return fs;
         }}};
    return f;
}

size_t SuiteReport::passed() const {
    size_t r = 0;
    for (const auto& c : cases) r += c.equal && c.error.empty();
    return r;
}

size_t SuiteReport::failed() const { return cases.size() - passed(); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"gog", "magog", "pentagon", "sttree", "operator", "identities", "appendix", "all"};
    return names;
}

int worker_threads() {
    const char* env = std::getenv("GOGMAGOG_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 256) throw PreconditionError("GOGMAGOG_THREADS must be an integer in [1, 256]");
    return static_cast<int>(v);
}

std::vector<std::vector<SuiteCase>> run_jobs(const std::vector<Job>& jobs, int threads) {
    std::vector<std::vector<SuiteCase>> results(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < jobs.size(); i = next++) results[i] = jobs[i]();
    };
    threads = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    if (threads == 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

SuiteReport run_suite(const std::string& name, const SuiteBounds& bounds, const Budgets& budgets, int threads) {
    if (bounds.max_n < 1 || bounds.max_m < 0) throw PreconditionError("verify: need max-n >= 1 and max-m >= 0");
    std::vector<Job> jobs;
    auto add = [&](std::vector<Job> more) { jobs.insert(jobs.end(), more.begin(), more.end()); };
    const bool all = name == "all";
    bool known = all;
    if (all || name == "gog") known = true, add(gog_jobs(bounds, budgets));
    if (all || name == "magog") known = true, add(magog_jobs(bounds, budgets));
    if (all || name == "pentagon") known = true, add(pentagon_jobs(bounds, budgets));
    if (all || name == "sttree") known = true, add(sttree_jobs(bounds, budgets));
    if (all || name == "operator") known = true, add(operator_jobs(bounds, budgets));
    if (all || name == "identities") known = true, add(identity_jobs(bounds));
    if (all || name == "appendix") known = true, add(appendix_jobs(bounds, budgets));
    if (!known) throw PreconditionError("verify: unknown suite '" + name + "'");
    SuiteReport r;
    r.suite = name;
    r.bounds = bounds;
    for (auto& group : run_jobs(jobs, threads))
        for (auto& c : group) r.cases.push_back(std::move(c));
    return r;
}

json report_json(const SuiteReport& r, bool with_timings) {
    json cases = json::array();
    for (const auto& c : r.cases) {
        json j = {{"suite", c.suite}, {"name", c.name},       {"params", c.params}, {"route_a", c.route_a},
                  {"route_b", c.route_b}, {"value_a", c.value_a}, {"value_b", c.value_b}, {"equal", c.equal && c.error.empty()}};
        if (!c.error.empty()) j["error"] = c.error;
        if (with_timings) j["runtime_ms"] = c.runtime_ms;
        cases.push_back(j);
    }
    return {{"suite", r.suite},
            {"bounds", {{"max_n", r.bounds.max_n}, {"max_m", r.bounds.max_m}}},
            {"summary", {{"cases", r.cases.size()}, {"passed", r.passed()}, {"failed", r.failed()}}},
            {"cases", cases}};
}

std::string report_csv(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite,name,route_a,route_b,equal,value_a,value_b,error\n";
    for (const auto& c : r.cases)
        os << csv_escape(c.suite) << "," << csv_escape(c.name) << "," << csv_escape(c.route_a) << "," << csv_escape(c.route_b) << ","
           << (c.equal && c.error.empty() ? "true" : "false") << "," << csv_escape(c.value_a.dump()) << ","
           << csv_escape(c.value_b.dump()) << "," << csv_escape(c.error) << "\n";
    return os.str();
}

}  // namespace gogmagog::cli
