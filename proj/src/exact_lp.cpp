#include "nonlin/exact_lp.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace nonlin {

namespace {

void check_dimensions(const LinearProgram& lp) {
    if (lp.num_vars < 0) throw DimensionError("num_vars must be non-negative");
    if (static_cast<int>(lp.objective.size()) != lp.num_vars) {
        throw DimensionError("objective has " + std::to_string(lp.objective.size()) +
                             " coefficients, expected " + std::to_string(lp.num_vars));
    }
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        if (static_cast<int>(lp.rows[i].coeffs.size()) != lp.num_vars) {
            throw DimensionError("row " + std::to_string(i) + " has " +
                                 std::to_string(lp.rows[i].coeffs.size()) +
                                 " coefficients, expected " + std::to_string(lp.num_vars));
        }
    }
}

// Maximization tableau. Invariant: basis columns are unit columns and
// z[j] = c_B * T[.][j] - c_j for j < ncols, z[ncols] = c_B * rhs.
struct Tableau {
    int ncols = 0;
    std::vector<std::vector<Rational>> rows;  // each of size ncols + 1, last entry = rhs
    std::vector<int> basis;                   // variable index per row

    std::vector<Rational> z;  // size ncols + 1

    void price(const std::vector<Rational>& costs) {
        z.assign(ncols + 1, Rational(0));
        for (int j = 0; j < ncols; ++j) z[j] = -costs[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& cb = costs[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j <= ncols; ++j) z[j] += cb * rows[i][j];
        }
    }

    void pivot(int pr, int pc) {
        auto& prow = rows[pr];
        const Rational inv = 1 / prow[pc];
        for (auto& v : prow) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == pr) continue;
            const Rational factor = rows[i][pc];
            if (factor == 0) continue;
            for (int j = 0; j <= ncols; ++j) rows[i][j] -= factor * prow[j];
        }
        const Rational zf = z[pc];
        if (zf != 0) {
            for (int j = 0; j <= ncols; ++j) z[j] -= zf * prow[j];
        }
        basis[pr] = pc;
    }

    // Runs simplex to optimality. Returns false when unbounded.
    bool optimize() {
        for (;;) {
            int entering = -1;
            for (int j = 0; j < ncols; ++j) {
                if (z[j] < 0) {  // Bland: first improving column
                    entering = j;
                    break;
                }
            }
            if (entering < 0) return true;

            int leaving = -1;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const Rational& a = rows[i][entering];
                if (a <= 0) continue;
                Rational ratio = rows[i][ncols] / a;
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leaving])) {
                    leaving = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return false;
            pivot(leaving, entering);
        }
    }
};

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
    check_dimensions(lp);

    const int m = lp.num_vars;
    const int r = static_cast<int>(lp.rows.size());

    std::vector<Rational> costs(m);
    for (int j = 0; j < m; ++j) {
        costs[j] = lp.sense == Sense::Maximize ? lp.objective[j] : -lp.objective[j];
    }

    // columns: structural [0, m), slack/surplus [m, m+r), artificials appended
    Tableau t;
    std::vector<int> artificial_rows;
    int n_art = 0;
    for (int i = 0; i < r; ++i) {
        Relation rel = lp.rows[i].rel;
        bool negate = lp.rows[i].rhs < 0;
        if (negate) rel = rel == Relation::Le ? Relation::Ge : Relation::Le;
        if (rel == Relation::Ge) {
            artificial_rows.push_back(i);
            ++n_art;
        }
    }
    t.ncols = m + r + n_art;
    t.rows.assign(r, std::vector<Rational>(t.ncols + 1, Rational(0)));
    t.basis.assign(r, -1);

    int art = m + r;
    for (int i = 0; i < r; ++i) {
        const auto& row = lp.rows[i];
        const bool negate = row.rhs < 0;
        Relation rel = row.rel;
        if (negate) rel = rel == Relation::Le ? Relation::Ge : Relation::Le;
        for (int j = 0; j < m; ++j) {
            t.rows[i][j] = negate ? Rational(-row.coeffs[j]) : row.coeffs[j];
        }
        t.rows[i][t.ncols] = negate ? Rational(-row.rhs) : row.rhs;
        if (rel == Relation::Le) {
            t.rows[i][m + i] = 1;
            t.basis[i] = m + i;
        } else {
            t.rows[i][m + i] = -1;
            t.rows[i][art] = 1;
            t.basis[i] = art;
            ++art;
        }
    }

    if (n_art > 0) {
        // phase 1: maximize minus the sum of artificials
        std::vector<Rational> phase1(t.ncols, Rational(0));
        for (int j = m + r; j < t.ncols; ++j) phase1[j] = -1;
        t.price(phase1);
        t.optimize();  // bounded above by 0, cannot be unbounded
        if (t.z[t.ncols] != 0) {
            return LpOutcome{LpStatus::Infeasible, Rational(0), {}};
        }
        // drive remaining artificials out of the basis
        for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
            if (t.basis[i] < m + r) continue;
            int pc = -1;
            for (int j = 0; j < m + r; ++j) {
                if (t.rows[i][j] != 0) {
                    pc = j;
                    break;
                }
            }
            if (pc >= 0) {
                t.pivot(i, pc);
            } else {
                // redundant row (all zeros over real columns, rhs 0)
                t.rows.erase(t.rows.begin() + i);
                t.basis.erase(t.basis.begin() + i);
            }
        }
        // drop artificial columns
        for (auto& row : t.rows) {
            row[m + r] = row[t.ncols];
            row.resize(m + r + 1);
        }
        t.ncols = m + r;
    }

    std::vector<Rational> phase2(t.ncols, Rational(0));
    for (int j = 0; j < m; ++j) phase2[j] = costs[j];
    t.price(phase2);
    if (!t.optimize()) {
        return LpOutcome{LpStatus::Unbounded, Rational(0), {}};
    }

    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.solution.assign(m, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.basis[i] < m) out.solution[t.basis[i]] = t.rows[i][t.ncols];
    }
    out.value = lp.sense == Sense::Maximize ? t.z[t.ncols] : Rational(-t.z[t.ncols]);
    return out;
}

namespace {

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (result > cap) return cap + 1;
    }
    return result;
}

// Exact Gaussian solve of square ax = b; returns false when singular.
bool solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& x) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i) {
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Rational inv = 1 / a[col][col];
        for (int j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const Rational f = a[i][col];
            if (f == 0) continue;
            for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    x = std::move(b);
    return true;
}

}  // namespace

std::vector<BasicSolution> enumerate_basic_solutions(const LinearProgram& lp, int max_columns) {
    check_dimensions(lp);

    const int m = lp.num_vars;
    const int r = static_cast<int>(lp.rows.size());
    const int cols = m + r;  // structural + one slack/surplus per row
    if (cols > max_columns) {
        throw CapError("oracle too large: " + std::to_string(cols) + " columns exceed the cap of " +
                       std::to_string(max_columns));
    }
    constexpr std::uint64_t kMaxBases = 200000;
    if (binomial_capped(cols, r, kMaxBases) > kMaxBases) {
        throw CapError("oracle too large: more than " + std::to_string(kMaxBases) + " bases");
    }

    // equality form: [A | S] y = b with y >= 0; S has +1 for <=, -1 for >=
    auto column_entry = [&](int row, int col) -> Rational {
        if (col < m) return lp.rows[row].coeffs[col];
        if (col - m == row) return lp.rows[row].rel == Relation::Le ? Rational(1) : Rational(-1);
        return Rational(0);
    };

    std::vector<BasicSolution> result;
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i;

    for (;;) {
        std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r));
        std::vector<Rational> b(r);
        for (int i = 0; i < r; ++i) {
            b[i] = lp.rows[i].rhs;
            for (int k = 0; k < r; ++k) a[i][k] = column_entry(i, pick[k]);
        }
        std::vector<Rational> y;
        if (solve_square(std::move(a), std::move(b), y)) {
            bool feasible = true;
            for (const auto& v : y) {
                if (v < 0) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                BasicSolution sol;
                sol.solution.assign(m, Rational(0));
                for (int k = 0; k < r; ++k) {
                    if (pick[k] < m) sol.solution[pick[k]] = y[k];
                }
                sol.value = 0;
                for (int j = 0; j < m; ++j) sol.value += lp.objective[j] * sol.solution[j];
                result.push_back(std::move(sol));
            }
        }

        // next lexicographic r-combination of [0, cols)
        if (r == 0) break;  // the empty basis was just handled
        int i = r - 1;
        while (i >= 0 && pick[i] == cols - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int k = i + 1; k < r; ++k) pick[k] = pick[k - 1] + 1;
    }

    return result;
}

}  // namespace nonlin
