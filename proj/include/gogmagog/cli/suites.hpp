#pragma once

#include "gogmagog/cli/serialize.hpp"
#include "gogmagog/laurent/ct.hpp"
#include "gogmagog/triangles/array.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gogmagog::cli {

struct SuiteBounds {
    int max_n = 3;
    int max_m = 2;
};

struct Budgets {
    CTBudget ct;
    EnumBudget enumeration;
};

// One comparison between two independent routes. Values are kept in full.
struct SuiteCase {
    std::string suite;
    std::string name;
    json params = json::object();
    std::string route_a, route_b;
    json value_a, value_b;
    bool equal = false;
    double runtime_ms = 0;
    std::string error;  // non-empty when a route threw
};

struct SuiteReport {
    std::string suite;
    SuiteBounds bounds;
    std::vector<SuiteCase> cases;

    size_t passed() const;
    size_t failed() const;
    bool ok() const { return failed() == 0; }
};

const std::vector<std::string>& suite_names();  // gog, magog, ..., all

// Worker count from GOGMAGOG_THREADS, default 1.
int worker_threads();

// Runs jobs on `threads` workers; the result order follows the job order.
std::vector<std::vector<SuiteCase>> run_jobs(const std::vector<std::function<std::vector<SuiteCase>()>>& jobs, int threads);

SuiteReport run_suite(const std::string& name, const SuiteBounds& bounds, const Budgets& budgets = {}, int threads = 1);

// Named test inputs for the coinciding-point determinant limits: bivariate f(x, y)
// in slots x_1, x_2 and families f_1..f_n of univariate polynomials in slot x_1.
const std::vector<std::pair<std::string, std::function<LaurentPoly()>>>& behrend_bivariate_families();
const std::vector<std::pair<std::string, std::function<std::vector<LaurentPoly>(int)>>>& behrend_univariate_families();

// timings are left out unless asked for so that reports are byte-deterministic
json report_json(const SuiteReport& r, bool with_timings = false);
std::string report_csv(const SuiteReport& r);

}  // namespace gogmagog::cli
