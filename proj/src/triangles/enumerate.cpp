#include "gogmagog/triangles/enumerate.hpp"

#include "gogmagog/polyring/errors.hpp"

#include <algorithm>
#include <string>

namespace gogmagog {

std::vector<int> TriangularArray::row(int i) const {
    std::vector<int> r;
    for (int j = 1; j <= i; ++j)
        if (has(i, j)) r.push_back(at(i, j));
    return r;
}

std::vector<int> TriangularArray::row_columns(int i) const {
    std::vector<int> r;
    for (int j = 1; j <= i; ++j)
        if (has(i, j)) r.push_back(j);
    return r;
}

size_t TriangularArray::entry_count() const {
    return static_cast<size_t>(std::count_if(cells.begin(), cells.end(), [](int v) { return v != kAbsent; }));
}

TriangularArray from_rows(int n, const std::vector<std::vector<int>>& rows, const std::vector<int>& first_col) {
    if (static_cast<int>(rows.size()) != n || static_cast<int>(first_col.size()) != n)
        throw PreconditionError("from_rows: need one row and one start column per row");
    TriangularArray t(n);
    for (int i = 1; i <= n; ++i) {
        for (size_t c = 0; c < rows[i - 1].size(); ++c) {
            int j = first_col[i - 1] + static_cast<int>(c);
            if (!t.inside(i, j)) throw PreconditionError("from_rows: entry outside the triangle");
            t.set(i, j, rows[i - 1][c]);
        }
    }
    return t;
}

namespace {

// Fills rows n-1..1 of a partially specified array, left to right in each row.
// lo/hi give the admissible interval of an entry from the entries already placed.
template <class Lo, class Hi, class Emit>
class RowFiller {
  public:
    RowFiller(std::vector<std::vector<int>> cols, Lo lo, Hi hi, bool strict, Emit emit, const EnumBudget& budget)
        : cols_(std::move(cols)), lo_(lo), hi_(hi), strict_(strict), emit_(emit), budget_(budget) {}

    uint64_t run(TriangularArray& t) {
        row(t, t.n - 1, 0, 0, false);
        return count_;
    }

  private:
    void row(TriangularArray& t, int i, size_t idx, int prev, bool has_prev) {
        if (i <= 0) {
            if (++count_ > budget_.max_objects) throw ResourceError("enumeration exceeds the object budget");
            emit_(t);
            return;
        }
        const auto& cs = cols_[i];
        if (idx == cs.size()) {
            row(t, i - 1, 0, 0, false);
            return;
        }
        int j = cs[idx];
        int lo = lo_(t, i, j), hi = hi_(t, i, j);
        if (strict_ && has_prev) lo = std::max(lo, prev + 1);
        for (int v = lo; v <= hi; ++v) {
            t.set(i, j, v);
            row(t, i, idx + 1, v, true);
        }
        t.clear(i, j);
    }

    std::vector<std::vector<int>> cols_;
    Lo lo_;
    Hi hi_;
    bool strict_;
    Emit emit_;
    const EnumBudget& budget_;
    uint64_t count_ = 0;
};

template <class Lo, class Hi, class Emit>
uint64_t fill_rows(TriangularArray& t, std::vector<std::vector<int>> cols, Lo lo, Hi hi, bool strict, Emit emit,
                   const EnumBudget& budget) {
    RowFiller<Lo, Hi, Emit> f(std::move(cols), lo, hi, strict, emit, budget);
    return f.run(t);
}

bool weakly_increasing(const std::vector<int>& b) {
    for (size_t i = 1; i < b.size(); ++i)
        if (b[i] < b[i - 1]) return false;
    return true;
}

void add_inversions(const TriangularArray& t, StatVector& s) {
    for (int i = 1; i < t.n; ++i)
        for (int j = 1; j <= i; ++j) {
            if (!t.has(i, j)) continue;
            int v = t.at(i, j);
            bool se = t.has(i + 1, j + 1), sw = t.has(i + 1, j);
            if (se && t.at(i + 1, j + 1) == v) ++s.inv;
            if (sw && t.at(i + 1, j) == v) ++s.inv_prime;
            if (se && sw && t.at(i + 1, j) < v && v < t.at(i + 1, j + 1)) ++s.minus_ones;
        }
    s.inv_J = s.inv;
    s.inv_prime_I = s.inv_prime;
}

// all increasing tuples over given columns with per-column bounds [lo(j), hi(j)]
template <class LoF, class HiF>
void bottom_rows(const std::vector<int>& cols, LoF lo, HiF hi, bool strict, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    size_t idx = cur.size();
    if (idx == cols.size()) {
        out.push_back(cur);
        return;
    }
    int j = cols[idx];
    int a = lo(j);
    if (idx > 0) a = std::max(a, cur.back() + (strict ? 1 : 0));
    for (int v = a; v <= hi(j); ++v) {
        cur.push_back(v);
        bottom_rows(cols, lo, hi, strict, cur, out);
        cur.pop_back();
    }
}

}  // namespace

// ---------------- monotone triangles ----------------

StatVector monotone_triangle_stats(const TriangularArray& m) {
    StatVector s;
    add_inversions(m, s);
    if (m.n > 0) {
        s.top_entry = m.at(1, 1);
        s.bottom_row = m.row(m.n);
    }
    return s;
}

bool is_monotone_triangle(const TriangularArray& m) {
    for (int i = 1; i <= m.n; ++i)
        for (int j = 1; j <= i; ++j)
            if (!m.has(i, j)) return false;
    for (int i = 1; i < m.n; ++i)
        for (int j = 1; j <= i; ++j) {
            if (m.at(i + 1, j) > m.at(i, j) || m.at(i, j) > m.at(i + 1, j + 1)) return false;
            if (j < i && m.at(i, j) >= m.at(i, j + 1)) return false;
        }
    for (int j = 1; j < m.n; ++j)
        if (m.at(m.n, j) > m.at(m.n, j + 1)) return false;
    return true;
}

namespace {

uint64_t enumerate_interlacing(const std::vector<int>& bottom, bool strict, const Visitor& visit, const EnumBudget& budget) {
    if (!weakly_increasing(bottom)) throw PreconditionError("bottom row must be weakly increasing");
    const int n = static_cast<int>(bottom.size());
    if (n == 0) return 0;
    TriangularArray t(n);
    for (int j = 1; j <= n; ++j) t.set(n, j, bottom[j - 1]);
    std::vector<std::vector<int>> cols(n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) cols[i].push_back(j);
    auto lo = [](const TriangularArray& a, int i, int j) { return a.at(i + 1, j); };
    auto hi = [](const TriangularArray& a, int i, int j) { return a.at(i + 1, j + 1); };
    auto emit = [&](const TriangularArray& a) { visit(a, monotone_triangle_stats(a)); };
    return fill_rows(t, cols, lo, hi, strict, emit, budget);
}

}  // namespace

uint64_t enumerate_monotone_triangles(const std::vector<int>& bottom, const Visitor& visit, const EnumBudget& budget) {
    return enumerate_interlacing(bottom, true, visit, budget);
}

uint64_t enumerate_gt_patterns(const std::vector<int>& bottom, const Visitor& visit, const EnumBudget& budget) {
    return enumerate_interlacing(bottom, false, visit, budget);
}

ParamPoly mt_generating_function(const std::vector<int>& bottom) {
    std::map<std::pair<int, int>, uint64_t> tally;
    enumerate_monotone_triangles(bottom, [&](const TriangularArray&, const StatVector& s) { ++tally[{s.inv, s.inv_prime}]; });
    ParamPoly r;
    for (const auto& [e, c] : tally) {
        Key k;
        k.set(param_slot(Param::u), e.first);
        k.set(param_slot(Param::v), e.second);
        r.add_term(k, BigInt(static_cast<unsigned long>(c)));
    }
    return r;
}

std::map<int, uint64_t> mt_counts_by_top(const std::vector<int>& bottom) {
    std::map<int, uint64_t> r;
    enumerate_monotone_triangles(bottom, [&](const TriangularArray&, const StatVector& s) { ++r[s.top_entry]; });
    return r;
}

BigRat gt_count_formula(const std::vector<int>& b) {
    BigRat r = 1;
    const int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r *= make_rat(b[j] - b[i] + j - i, j - i);
    return r;
}

BigRat strict_gt_count_formula(const std::vector<int>& b) {
    BigRat r = 1;
    const int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r *= make_rat(b[j] - b[i], j - i);
    return r;
}

// ---------------- Gog trapezoids ----------------

namespace {
inline int gog_bound(int m, int n, int i, int j) { return m + n - (i - j); }
}

bool is_gog_trapezoid(int m, int n, int k, const TriangularArray& t) {
    if (t.n != n || k < 0 || k > n) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            bool want = j <= k;
            if (t.has(i, j) != want) return false;
            if (!want) continue;
            int v = t.at(i, j);
            if (v < 1 || v > gog_bound(m, n, i, j)) return false;
            if (j > 1 && t.at(i, j - 1) >= v) return false;
            if (i < n) {
                if (t.at(i + 1, j) > v) return false;
                if (t.has(i + 1, j + 1) && v > t.at(i + 1, j + 1)) return false;
            }
        }
    return true;
}

StatVector gog_stats(int m, int n, int k, const TriangularArray& t) {
    StatVector s;
    add_inversions(t, s);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            if (t.at(i, j) == 1) ++s.minima;
    for (int i = k; i <= n; ++i)
        if (k >= 1 && t.at(i, k) == gog_bound(m, n, i, k)) ++s.maxima;
    if (k >= 1) {
        s.top_entry = t.at(1, 1);
        s.bottom_row = t.row(n);
        s.bottom_right_is_max = t.at(n, k) == m + k;
    }
    s.top_minima = s.minima;
    s.bottom_maxima = s.maxima;
    return s;
}

std::vector<std::vector<int>> gog_bottom_rows(int m, int k) {
    std::vector<int> cols;
    for (int j = 1; j <= k; ++j) cols.push_back(j);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    bottom_rows(
        cols, [](int) { return 1; }, [&](int j) { return m + j; }, true, cur, out);
    return out;
}

uint64_t enumerate_gog_trapezoids(int m, int n, int k, const std::optional<std::vector<int>>& bottom, const Visitor& visit,
                                  const EnumBudget& budget) {
    if (m < 0 || n < 1 || k < 0 || k > n) throw PreconditionError("gog trapezoid: need m >= 0, n >= 1, 0 <= k <= n");
    std::vector<std::vector<int>> cols(n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j) cols[i].push_back(j);
    if (k == 0) {
        TriangularArray t(n);
        visit(t, gog_stats(m, n, k, t));
        return 1;
    }
    std::vector<std::vector<int>> bots;
    if (bottom) {
        if (static_cast<int>(bottom->size()) != k) throw PreconditionError("gog trapezoid: bottom row must have k entries");
        bots.push_back(*bottom);
    } else {
        bots = gog_bottom_rows(m, k);
    }
    auto lo = [](const TriangularArray& a, int i, int j) { return std::max(1, a.at(i + 1, j)); };
    auto hi = [&](const TriangularArray& a, int i, int j) {
        int h = gog_bound(m, n, i, j);
        if (a.has(i + 1, j + 1)) h = std::min(h, a.at(i + 1, j + 1));
        return h;
    };
    uint64_t total = 0;
    for (const auto& b : bots) {
        bool ok = true;
        for (int j = 1; j <= k; ++j) {
            if (b[j - 1] < 1 || b[j - 1] > m + j) ok = false;
            if (j > 1 && b[j - 1] <= b[j - 2]) ok = false;
        }
        if (!ok) {
            if (bottom) throw PreconditionError("gog trapezoid: bottom row violates the bounds");
            continue;
        }
        TriangularArray t(n);
        for (int j = 1; j <= k; ++j) t.set(n, j, b[j - 1]);
        EnumBudget left{budget.max_objects - total};
        total += fill_rows(
            t, cols, lo, hi, true, [&](const TriangularArray& a) { visit(a, gog_stats(m, n, k, a)); }, left);
    }
    return total;
}

// ---------------- Magog trapezoids ----------------

bool is_magog_trapezoid(int m, int n, int k, const TriangularArray& t) {
    if (t.n != n || k < 0 || k > n) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            bool want = j >= std::max(1, i - k + 1);
            if (k == 0) want = false;
            if (t.has(i, j) != want) return false;
            if (!want) continue;
            int v = t.at(i, j);
            if (v < 1 || v > m + j) return false;
            if (i < n) {
                if (t.has(i + 1, j) && t.at(i + 1, j) > v) return false;
                if (v > t.at(i + 1, j + 1)) return false;
            }
        }
    return true;
}

StatVector magog_stats(int m, int n, int k, const TriangularArray& t) {
    StatVector s;
    add_inversions(t, s);
    for (int i = 1; i <= n; ++i)
        for (int j = std::max(1, i - k + 1); j <= i; ++j) {
            if (!t.has(i, j)) continue;
            int v = t.at(i, j);
            if (i - j == k - 1 && v == 1) ++s.minima;
            if (i == j && v == m + j) ++s.maxima;
        }
    if (k >= 1) {
        s.top_entry = t.at(1, 1);
        s.bottom_row = t.row(n);
    }
    return s;
}

std::vector<std::vector<int>> magog_bottom_rows(int m, int n, int k) {
    if (m < 0 || n < 1 || k < 1 || k > n) throw PreconditionError("magog bottom rows: need m >= 0, 1 <= k <= n");
    std::vector<int> cols;
    for (int j = n - k + 1; j <= n; ++j) cols.push_back(j);
    std::vector<std::vector<int>> bots;
    std::vector<int> cur;
    bottom_rows(
        cols, [](int) { return 1; }, [&](int j) { return m + j; }, false, cur, bots);
    return bots;
}

uint64_t enumerate_magog_trapezoids(int m, int n, int k, const Visitor& visit, const EnumBudget& budget) {
    if (m < 0 || n < 1 || k < 0 || k > n) throw PreconditionError("magog trapezoid: need m >= 0, n >= 1, 0 <= k <= n");
    if (k == 0) {
        TriangularArray t(n);
        visit(t, magog_stats(m, n, k, t));
        return 1;
    }
    std::vector<std::vector<int>> cols(n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = std::max(1, i - k + 1); j <= i; ++j) cols[i].push_back(j);
    std::vector<std::vector<int>> bots;
    std::vector<int> cur;
    bottom_rows(
        cols[n], [](int) { return 1; }, [&](int j) { return m + j; }, false, cur, bots);
    auto lo = [](const TriangularArray& a, int i, int j) { return a.has(i + 1, j) ? std::max(1, a.at(i + 1, j)) : 1; };
    auto hi = [&](const TriangularArray& a, int i, int j) { return std::min(m + j, a.at(i + 1, j + 1)); };
    uint64_t total = 0;
    for (const auto& b : bots) {
        TriangularArray t(n);
        for (size_t c = 0; c < b.size(); ++c) t.set(n, cols[n][c], b[c]);
        EnumBudget left{budget.max_objects - total};
        total += fill_rows(
            t, cols, lo, hi, false, [&](const TriangularArray& a) { visit(a, magog_stats(m, n, k, a)); }, left);
    }
    return total;
}

// ---------------- Gog pentagons ----------------

namespace {

bool pentagon_cell(int n, int kL, int kR, int i, int j) {
    (void)n;
    return j >= 1 && j <= std::min(i, kL) && i - j <= kR - 1;
}

void check_pentagon_params(int m, int n, int kL, int kR) {
    if (m < 0 || n < 1 || kL < 0 || kR < 0 || kL > n || kR > n || kL + kR < n + 1)
        throw PreconditionError("gog pentagon: need n+1 <= kL+kR, kL <= n, kR <= n");
}

}  // namespace

bool is_gog_pentagon(int m, int n, int kL, int kR, const TriangularArray& t) {
    if (t.n != n) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            bool want = pentagon_cell(n, kL, kR, i, j);
            if (t.has(i, j) != want) return false;
            if (!want) continue;
            int v = t.at(i, j);
            if (v < j || v > m + n - (i - j)) return false;
            if (t.has(i, j - 1) && t.at(i, j - 1) >= v) return false;
            if (t.has(i + 1, j) && t.at(i + 1, j) > v) return false;
            if (t.has(i + 1, j + 1) && v > t.at(i + 1, j + 1)) return false;
        }
    return true;
}

StatVector pentagon_stats(int m, int n, int kL, int kR, const TriangularArray& t) {
    StatVector s;
    add_inversions(t, s);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            if (!t.has(i, j)) continue;
            int v = t.at(i, j);
            if (v == 1) {
                ++s.top_minima;
                if (j != 1) throw std::logic_error("pentagon: top-minimum outside the leftmost NE-diagonal");
            }
            if (v == m + n) {
                ++s.top_maxima;
                if (i != j) throw std::logic_error("pentagon: top-maximum outside the rightmost SE-diagonal");
            }
            if (i - j == kR - 1 && v == j) ++s.bottom_minima;
            if (j == kL && v == m + n - (i - j)) ++s.bottom_maxima;
        }
    s.minima = s.top_minima;
    s.maxima = s.bottom_maxima;
    s.top_entry = t.at(1, 1);
    s.bottom_row = t.row(n);
    if (!s.bottom_row.empty()) {
        s.bottom_left_is_min = s.bottom_row.front() == n - kR + 1;
        s.bottom_right_is_max = s.bottom_row.back() == m + kL;
    }
    return s;
}

uint64_t enumerate_gog_pentagons(int m, int n, int kL, int kR, const Visitor& visit, const EnumBudget& budget) {
    check_pentagon_params(m, n, kL, kR);
    std::vector<std::vector<int>> cols(n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            if (pentagon_cell(n, kL, kR, i, j)) cols[i].push_back(j);
    std::vector<std::vector<int>> bots;
    std::vector<int> cur;
    bottom_rows(
        cols[n], [](int j) { return j; }, [&](int j) { return m + j; }, true, cur, bots);
    auto lo = [](const TriangularArray& a, int i, int j) { return a.has(i + 1, j) ? std::max(j, a.at(i + 1, j)) : j; };
    auto hi = [&](const TriangularArray& a, int i, int j) {
        int h = m + n - (i - j);
        if (a.has(i + 1, j + 1)) h = std::min(h, a.at(i + 1, j + 1));
        return h;
    };
    uint64_t total = 0;
    for (const auto& b : bots) {
        TriangularArray t(n);
        for (size_t c = 0; c < b.size(); ++c) t.set(n, cols[n][c], b[c]);
        EnumBudget left{budget.max_objects - total};
        total += fill_rows(
            t, cols, lo, hi, true, [&](const TriangularArray& a) { visit(a, pentagon_stats(m, n, kL, kR, a)); }, left);
    }
    return total;
}

// ---------------- Conjecture 1 ----------------

ConjectureTable conjecture_check(int m, int n, int k, const EnumBudget& budget) {
    ConjectureTable c;
    c.m = m;
    c.n = n;
    c.k = k;
    enumerate_gog_trapezoids(
        m, n, k, std::nullopt, [&](const TriangularArray&, const StatVector& s) { ++c.gog[{s.minima, s.maxima}]; }, budget);
    enumerate_magog_trapezoids(
        m, n, k, [&](const TriangularArray&, const StatVector& s) { ++c.magog[{s.maxima, s.minima}]; }, budget);
    c.match = c.gog == c.magog;
    return c;
}

}  // namespace gogmagog
