#pragma once

#include <vector>

#include "nonlin/errors.hpp"
#include "nonlin/rational.hpp"

namespace nonlin {

enum class Relation { Le, Ge };
enum class Sense { Maximize, Minimize };

/// Dense LP over exact rationals. All variables are implicitly >= 0.
struct LinearProgram {
    Sense sense = Sense::Maximize;
    int num_vars = 0;
    std::vector<Rational> objective;  // size num_vars

    struct Row {
        std::vector<Rational> coeffs;  // size num_vars
        Relation rel = Relation::Le;
        Rational rhs;
    };
    std::vector<Row> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Optimal;
    Rational value;                  // set when Optimal
    std::vector<Rational> solution;  // set when Optimal; a basic feasible solution
};

/// Two-phase primal simplex on rationals, Bland's rule (entering: lowest
/// improving column; leaving: lowest basic variable index among ratio-test
/// ties). Deterministic and terminating on every input; no floating-point
/// phase. Throws DimensionError on inconsistent sizes.
LpOutcome solve(const LinearProgram& lp);

struct BasicSolution {
    Rational value;
    std::vector<Rational> solution;  // structural variables only
};

/// Independent oracle for tiny instances: converts to equality form with one
/// slack/surplus column per row, solves every row-basis linear system
/// exactly, and returns all basic feasible solutions (duplicates possible
/// under degeneracy). The optimum of `solve` must equal the best entry.
/// Throws CapError when the instance exceeds max_columns or the basis count
/// is unreasonable.
std::vector<BasicSolution> enumerate_basic_solutions(const LinearProgram& lp,
                                                     int max_columns = 24);

}  // namespace nonlin
