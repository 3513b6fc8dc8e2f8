#pragma once

#include "gogmagog/laurent/ct.hpp"

#include <optional>
#include <vector>

namespace gogmagog {

// Weight P^maxima Q^(minima not in the bottom row), per bottom row b_{n-k+1..n}.
ParamPoly magog_lgv_det(int m, int n, int k, const std::vector<int>& bottom);
// Same value from the reflected binomial matrix with its global sign.
ParamPoly magog_lgv_reflected(int m, int n, int k, const std::vector<int>& bottom);

enum class MagogVersion { v1_bottom, v1_total, v2 };

struct MagogCTSpec {
    int m = 0, n = 0, k = 0;
    MagogVersion version = MagogVersion::v1_total;
    std::optional<std::vector<int>> bottom;  // v1_bottom
    int q = 0;                               // v2: number of minima
};

// v1_bottom: as magog_lgv_det; v1_total: P^maxima Q^minima over all trapezoids;
// v2: P^maxima over trapezoids with exactly q minima. Throws NotApplicable for k = 1, m + q = 1.
ParamPoly magog_ct(const MagogCTSpec& spec, const CTBudget& budget = {});

// Determinant route for the per-q slices, valid on every case with 1 <= q <= n-k+1
// except k = 1, m + q = 1.
ParamPoly magog_v2_det(int m, int n, int k, int q);

bool magog_v2_excluded(int m, int k, int q);

// P^maxima over trapezoids with exactly q minima, read off the per-bottom-row
// determinants; covers every q including the excluded case and q = 0.
ParamPoly magog_slice_via_lgv(int m, int n, int k, int q);

}  // namespace gogmagog
