#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "treepart/rational.hpp"

namespace treepart {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };

struct LinearRow {
    std::vector<std::pair<int, Rational>> coeffs;  // sparse (variable, coefficient)
    Relation rel = Relation::less_equal;
    Rational rhs = 0;
    std::string label;
};

/// A linear program over free variables: optimize c'x subject to rows
/// a_i'x {<=,=,>=} b_i. Bounds, when needed, are ordinary rows. All data is
/// exact rational.
class LinearProgram {
public:
    LinearProgram(int num_vars, Sense sense) : sense_(sense), objective_(num_vars, Rational(0)) {}

    int num_vars() const { return static_cast<int>(objective_.size()); }
    Sense sense() const { return sense_; }

    void set_objective(std::vector<Rational> c);
    void set_objective_coeff(int var, Rational c);
    const std::vector<Rational>& objective() const { return objective_; }

    int add_row(LinearRow row);
    int add_row(std::vector<std::pair<int, Rational>> coeffs, Relation rel, Rational rhs,
                std::string label = "");
    int num_rows() const { return static_cast<int>(rows_.size()); }
    const LinearRow& row(int i) const { return rows_[i]; }
    const std::vector<LinearRow>& rows() const { return rows_; }

    void set_var_name(int var, std::string name);
    std::string var_name(int var) const;

    /// Debug dump in the usual LP interchange text format. Coefficients with
    /// terminating decimal expansions are written exactly; anything else is
    /// rounded and flagged in a comment.
    void write_lp_format(std::ostream& out) const;

private:
    Sense sense_;
    std::vector<Rational> objective_;
    std::vector<LinearRow> rows_;
    std::vector<std::string> var_names_;
};

enum class LpStatus { optimal, infeasible, unbounded };

/// Solver output. For optimal solves, `x` is a basic solution (a vertex
/// whenever the feasible region is pointed) and `duals` carries one value per
/// input row with the usual sign conventions: maximization gives duals >= 0
/// on <= rows and <= 0 on >= rows, minimization the opposite; equality rows
/// are unconstrained in sign. Strong duality and complementary slackness are
/// exact, not approximate.
struct LpSolution {
    LpStatus status = LpStatus::optimal;
    Rational objective = 0;
    std::vector<Rational> x;
    std::vector<Rational> duals;
    /// Basic column per tableau row: structural j as j, slack of row i as
    /// num_vars + i. Deterministic across runs for identical input.
    std::vector<int> basis;
};

struct LpOptions {
    /// Re-verify every optimal solution against the input before returning.
    bool self_certify = true;
};

/// Exact two-phase primal simplex. Deterministic pivoting: largest reduced
/// cost with index tie-break, with an automatic switch to Bland's rule under
/// degeneracy, which guarantees termination.
LpSolution solve(const LinearProgram& lp, const LpOptions& options = {});

/// Fully independent exactness check of an optimal solution: primal
/// feasibility, dual feasibility and signs, complementary slackness and
/// objective equality.
bool certify(const LinearProgram& lp, const LpSolution& sol);

struct LpCounters {
    long long solves = 0;
    long long certified = 0;
    long long certify_failures = 0;
};

/// Process-wide counters of solver activity (used by the acceptance suite).
LpCounters lp_counters();
void reset_lp_counters();

}  // namespace treepart
