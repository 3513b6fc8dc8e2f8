#pragma once

#include "gogmagog/cli/serialize.hpp"
#include "gogmagog/cli/suites.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gogmagog::cli {

// Every parameter any formula may read; each formula checks what it needs.
struct FormulaArgs {
    std::optional<int> m, n, k, kl, kr, q;
    std::optional<std::vector<int>> bottom;
    std::vector<int> s, t;                // (s,t)-tree shape
    std::vector<int> ne_exc, se_exc;      // exception sets I, J
    std::optional<int> top, lo, hi;       // apex restriction
    std::string mode = "standard";        // mt-count: alternative | antisym
    std::optional<int> r, base, cap;      // identity parameters
    std::string input = "1";              // 1 | e1 | e2 | e1^2
    std::optional<std::string> t_value;   // rational value for the Qt parameter
    std::string variant = "general";      // general | linear
    std::string family;                   // coinciding-point limit family
    std::string source = "cube-root-constant-term";
    long x_shift = 0;
    bool conjugate = false;
    std::optional<int> from, to;          // extended-sum bounds
    int power = 1;                        // extended-sum summand i^power
    uint64_t seed = 20240917;
};

struct FormulaInfo {
    std::string id;
    std::string provenance;  // descriptive id of the result being evaluated
    std::string summary;
};

struct FormulaResult {
    std::string id, provenance, route;
    json params = json::object();
    json value;                      // term list for polynomials, an object otherwise
    std::optional<ParamPoly> poly;   // set for polynomial values
};

const std::vector<FormulaInfo>& formula_registry();

FormulaResult evaluate_formula(const std::string& id, const FormulaArgs& args, const Budgets& budgets = {});

json formula_json(const FormulaResult& r);
std::string formula_csv(const FormulaResult& r);

}  // namespace gogmagog::cli
