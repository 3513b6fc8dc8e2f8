#pragma once

#include "gogmagog/laurent/ct.hpp"
#include "gogmagog/triangles/sttree.hpp"

#include <optional>
#include <vector>

namespace gogmagog {

// ---- monotone triangles ----

enum class MTMode { standard, alternative, antisym };

// standard: u,v generating function (b strictly increasing).
// alternative, antisym: count at u = v = 1 (b weakly increasing, b_i >= 0).
ParamPoly ct_mt(const std::vector<int>& b, MTMode mode = MTMode::standard, const CTBudget& budget = {});

// monotone triangles with apex a and all entries in [lo, hi]
ParamPoly ct_mt_top(const std::vector<int>& b, int a, int lo, int hi, const CTBudget& budget = {});

// (s,t)-trees by inv_J and inv'_I, optionally restricted to apex a
ParamPoly ct_st_tree(const STTreeShape& shape, const std::vector<int>& b, const std::vector<int>& I = {},
                     const std::vector<int>& J = {}, const std::optional<TopRestriction>& top = std::nullopt,
                     const CTBudget& budget = {});

// ---- Gog trapezoids and pentagons ----

// count: plain count; inv_pair: u^inv v^inv'; min_max: P^minima Q^maxima (bottom-row
// maximum b_k excluded per bottom row, spliced back in for totals);
// top_min_max (pentagons only): PL^top-min PR^top-max QL^bottom-min QR^bottom-max,
// restricted to objects with at least one top minimum and one top maximum.
enum class WeightMode { count, inv_pair, min_max, top_min_max };

struct GogCTSpec {
    int m = 0, n = 0, k = 0;
    std::optional<std::vector<int>> bottom;  // absent: sum over all bottom rows
    WeightMode weights = WeightMode::count;
    std::optional<TopRestriction> top;       // apex restriction, count and inv_pair only
};

struct PentagonCTSpec {
    int m = 0, n = 0, kL = 0, kR = 0;
    std::optional<std::vector<int>> bottom;
    WeightMode weights = WeightMode::count;
};

ParamPoly gog_ct(const GogCTSpec& spec, const CTBudget& budget = {});
ParamPoly pentagon_ct(const PentagonCTSpec& spec, const CTBudget& budget = {});

// valid pentagon bottom rows b_{n-kR+1..kL}
std::vector<std::vector<int>> pentagon_bottom_rows(int m, int n, int kL, int kR);

}  // namespace gogmagog
