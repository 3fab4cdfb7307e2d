#include "treepart/lp.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <ostream>

#include "treepart/errors.hpp"

namespace treepart {

namespace {
std::mutex counter_mutex;
LpCounters counters;

void count_solve() {
    std::lock_guard<std::mutex> lock(counter_mutex);
    ++counters.solves;
}
void count_certify(bool ok) {
    std::lock_guard<std::mutex> lock(counter_mutex);
    ++counters.certified;
    if (!ok) ++counters.certify_failures;
}
}  // namespace

LpCounters lp_counters() {
    std::lock_guard<std::mutex> lock(counter_mutex);
    return counters;
}

void reset_lp_counters() {
    std::lock_guard<std::mutex> lock(counter_mutex);
    counters = {};
}

void LinearProgram::set_objective(std::vector<Rational> c) {
    if (static_cast<int>(c.size()) != num_vars()) throw InputError("objective length mismatch");
    objective_ = std::move(c);
}

void LinearProgram::set_objective_coeff(int var, Rational c) {
    if (var < 0 || var >= num_vars()) throw InputError("objective variable out of range");
    objective_[var] = std::move(c);
}

int LinearProgram::add_row(LinearRow row) {
    for (auto& [var, coeff] : row.coeffs)
        if (var < 0 || var >= num_vars()) throw InputError("row references undeclared variable");
    rows_.push_back(std::move(row));
    return num_rows() - 1;
}

int LinearProgram::add_row(std::vector<std::pair<int, Rational>> coeffs, Relation rel, Rational rhs,
                           std::string label) {
    LinearRow row;
    row.coeffs = std::move(coeffs);
    row.rel = rel;
    row.rhs = std::move(rhs);
    row.label = std::move(label);
    return add_row(std::move(row));
}

void LinearProgram::set_var_name(int var, std::string name) {
    if (var < 0 || var >= num_vars()) throw InputError("variable out of range");
    if (static_cast<int>(var_names_.size()) <= var) var_names_.resize(num_vars());
    var_names_[var] = std::move(name);
}

std::string LinearProgram::var_name(int var) const {
    if (var < static_cast<int>(var_names_.size()) && !var_names_[var].empty()) return var_names_[var];
    return "x" + std::to_string(var);
}

namespace {

// Exact decimal expansion when the denominator divides a power of ten.
bool decimal_form(const Rational& q, std::string& out) {
    mpz_class den = q.get_den();
    int twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return false;
    int digits = std::max(twos, fives);
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class scaled = q.get_num() * scale / q.get_den();
    std::string s = scaled.get_str();
    bool negative = !s.empty() && s[0] == '-';
    if (negative) s = s.substr(1);
    while (static_cast<int>(s.size()) <= digits) s = "0" + s;
    if (digits > 0) s.insert(s.size() - digits, ".");
    out = (negative ? "-" : "") + s;
    return true;
}

std::string lp_coeff(const Rational& q, bool& approx) {
    std::string s;
    if (decimal_form(q, s)) return s;
    approx = true;
    double value = q.get_d();
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

}  // namespace

void LinearProgram::write_lp_format(std::ostream& out) const {
    bool approx = false;
    out << (sense_ == Sense::maximize ? "Maximize\n" : "Minimize\n") << " obj:";
    bool first = true;
    for (int j = 0; j < num_vars(); ++j) {
        if (objective_[j] == 0) continue;
        Rational c = objective_[j];
        out << (c >= 0 && !first ? " + " : " ");
        if (c < 0) out << "- ";
        out << lp_coeff(abs(c), approx) << " " << var_name(j);
        first = false;
    }
    if (first) out << " 0 " << var_name(0);
    out << "\nSubject To\n";
    for (int i = 0; i < num_rows(); ++i) {
        const LinearRow& row = rows_[i];
        out << " " << (row.label.empty() ? "c" + std::to_string(i) : row.label) << ":";
        bool lead = true;
        for (const auto& [var, coeff] : row.coeffs) {
            if (coeff == 0) continue;
            out << (coeff >= 0 && !lead ? " + " : " ");
            if (coeff < 0) out << "- ";
            out << lp_coeff(abs(coeff), approx) << " " << var_name(var);
            lead = false;
        }
        if (lead) out << " 0 " << var_name(0);
        const char* rel = row.rel == Relation::less_equal ? "<=" : row.rel == Relation::equal ? "=" : ">=";
        out << " " << rel << " " << lp_coeff(row.rhs, approx) << "\n";
    }
    out << "Bounds\n";
    for (int j = 0; j < num_vars(); ++j) out << " " << var_name(j) << " free\n";
    out << "End\n";
    if (approx) out << "\\ some coefficients were rounded to double precision\n";
}

namespace {

// Dense exact tableau simplex.
//
// Internal form: minimize ctilde'v over rows A v = b with b >= 0, where v
// stacks the structural variables (free), one slack per inequality row
// (nonnegative) and phase-one artificials (nonnegative). Free variables may
// enter in either direction and never leave the basis; once phase two stops,
// an extra pass pivots zero-reduced-cost free variables into the basis so the
// returned point is basic with respect to the original system.
class Simplex {
public:
    Simplex(const LinearProgram& lp) : lp_(lp), n_(lp.num_vars()) { build(); }

    LpSolution run() {
        LpSolution sol;
        if (!phase_one()) {
            sol.status = LpStatus::infeasible;
            return sol;
        }
        if (!phase_two()) {
            sol.status = LpStatus::unbounded;
            return sol;
        }
        vertex_pass();
        extract(sol);
        return sol;
    }

private:
    static constexpr int kStallLimit = 32;

    const LinearProgram& lp_;
    int n_;                 // structural variables
    int num_slacks_ = 0;
    int cols_ = 0;          // total columns excluding rhs
    std::vector<std::vector<Rational>> tab_;  // rows x (cols_ + 1), last = rhs
    std::vector<Rational> obj_;               // cols_ + 1 entries
    std::vector<int> basis_;                  // per tableau row
    std::vector<char> banned_;                // per column (artificials in phase 2)
    std::vector<char> is_free_;               // per column
    std::vector<char> in_basis_;              // per column
    std::vector<int> ident_col_;              // per tableau row: its initial identity column
    std::vector<int> user_row_;               // per tableau row: original row index
    std::vector<Rational> row_mult_;          // per tableau row: factor applied to user row
    std::vector<int> slack_user_row_;         // per column: user row of this slack, or -1
    std::vector<Rational> ctilde_;            // internal objective over columns

    void build() {
        const int k = lp_.num_rows();
        // column layout: structural | slacks | artificials
        num_slacks_ = 0;
        for (const auto& row : lp_.rows())
            if (row.rel != Relation::equal) ++num_slacks_;

        std::vector<std::vector<Rational>> dense(k, std::vector<Rational>(n_, Rational(0)));
        std::vector<Rational> rhs(k);
        std::vector<Rational> mult(k, Rational(1));
        std::vector<int> slack_col(k, -1);
        int next_slack = n_;
        for (int i = 0; i < k; ++i) {
            const LinearRow& row = lp_.row(i);
            Rational sign = row.rel == Relation::greater_equal ? Rational(-1) : Rational(1);
            for (const auto& [var, coeff] : row.coeffs) dense[i][var] += sign * coeff;
            rhs[i] = sign * row.rhs;
            mult[i] = sign;
            if (row.rel != Relation::equal) slack_col[i] = next_slack++;
        }

        // normalize to rhs >= 0; the slack coefficient flips with the row
        std::vector<Rational> slack_coeff(k, Rational(1));
        for (int i = 0; i < k; ++i) {
            if (rhs[i] < 0) {
                for (auto& c : dense[i]) c = -c;
                rhs[i] = -rhs[i];
                mult[i] = -mult[i];
                slack_coeff[i] = -1;
            }
        }

        // artificials for rows without a usable identity slack
        int num_art = 0;
        std::vector<int> art_col(k, -1);
        for (int i = 0; i < k; ++i)
            if (slack_col[i] < 0 || slack_coeff[i] < 0) art_col[i] = n_ + num_slacks_ + num_art++;

        cols_ = n_ + num_slacks_ + num_art;
        tab_.assign(k, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.assign(k, -1);
        banned_.assign(cols_, 0);
        in_basis_.assign(cols_, 0);
        is_free_.assign(cols_, 0);
        for (int j = 0; j < n_; ++j) is_free_[j] = 1;
        ident_col_.assign(k, -1);
        user_row_.assign(k, -1);
        row_mult_ = mult;
        slack_user_row_.assign(cols_, -1);
        for (int i = 0; i < k; ++i)
            if (slack_col[i] >= 0) slack_user_row_[slack_col[i]] = i;

        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < n_; ++j) tab_[i][j] = dense[i][j];
            if (slack_col[i] >= 0) tab_[i][slack_col[i]] = slack_coeff[i];
            tab_[i][cols_] = rhs[i];
            user_row_[i] = i;
            if (art_col[i] >= 0) {
                tab_[i][art_col[i]] = 1;
                basis_[i] = art_col[i];
                ident_col_[i] = art_col[i];
            } else {
                basis_[i] = slack_col[i];
                ident_col_[i] = slack_col[i];
            }
            in_basis_[basis_[i]] = 1;
        }
        // phase-two internal objective: minimize; maximization flips sign
        ctilde_.assign(cols_, Rational(0));
        const Rational sense_mult = lp_.sense() == Sense::maximize ? Rational(-1) : Rational(1);
        for (int j = 0; j < n_; ++j) ctilde_[j] = sense_mult * lp_.objective()[j];
    }

    void set_objective_from(const std::vector<Rational>& cost) {
        obj_.assign(cols_ + 1, Rational(0));
        for (int j = 0; j < cols_; ++j) obj_[j] = cost[j];
        for (std::size_t r = 0; r < tab_.size(); ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb == 0) continue;
            for (int j = 0; j <= cols_; ++j)
                if (tab_[r][j] != 0) obj_[j] -= cb * tab_[r][j];
        }
    }

    void pivot(int row, int col) {
        std::vector<Rational>& prow = tab_[row];
        const Rational inv = 1 / prow[col];
        if (inv != 1)
            for (int j = 0; j <= cols_; ++j)
                if (prow[j] != 0) prow[j] *= inv;
        std::vector<int> support;
        support.reserve(16);
        for (int j = 0; j <= cols_; ++j)
            if (prow[j] != 0) support.push_back(j);
        for (std::size_t r = 0; r <= tab_.size(); ++r) {
            std::vector<Rational>& target = r == tab_.size() ? obj_ : tab_[r];
            if (&target == &prow) continue;
            const Rational factor = target[col];
            if (factor == 0) continue;
            for (int j : support) target[j] -= factor * prow[j];
            target[col] = 0;  // guard against residue from exact cancellation
        }
        in_basis_[basis_[row]] = 0;
        basis_[row] = col;
        in_basis_[col] = 1;
    }

    // Entering column under the current rule; -1 when optimal.
    int choose_entering(bool bland, int& direction) const {
        int best = -1, best_dir = 1;
        Rational best_score;
        for (int j = 0; j < cols_; ++j) {
            if (banned_[j] || in_basis_[j]) continue;
            const Rational& rc = obj_[j];
            int dir;
            Rational score;
            if (is_free_[j]) {
                if (rc == 0) continue;
                dir = rc > 0 ? -1 : 1;
                score = abs(rc);
            } else {
                if (rc >= 0) continue;
                dir = 1;
                score = -rc;
            }
            if (bland) {
                direction = dir;
                return j;
            }
            if (best < 0 || score > best_score) {
                best = j;
                best_dir = dir;
                best_score = score;
            }
        }
        direction = best_dir;
        return best;
    }

    // Smallest-ratio blocking row for entering column/direction; -1 if none.
    int choose_leaving(int col, int direction) const {
        int best = -1;
        Rational best_ratio;
        for (std::size_t r = 0; r < tab_.size(); ++r) {
            if (is_free_[basis_[r]]) continue;  // free basics never block
            Rational step = Rational(direction) * tab_[r][col];
            if (step <= 0) continue;
            Rational ratio = tab_[r][cols_] / step;
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[r] < basis_[best])) {
                best = static_cast<int>(r);
                best_ratio = ratio;
            }
        }
        return best;
    }

    // Returns false on unboundedness (phase two only).
    bool iterate() {
        bool bland = false;
        int stall = 0;
        Rational last_value = obj_[cols_];
        while (true) {
            int direction = 1;
            int col = choose_entering(bland, direction);
            if (col < 0) return true;
            int row = choose_leaving(col, direction);
            if (row < 0) return false;
            pivot(row, col);
            if (obj_[cols_] != last_value) {
                last_value = obj_[cols_];
                stall = 0;
                bland = false;
            } else if (++stall >= kStallLimit) {
                bland = true;
            }
        }
    }

    bool phase_one() {
        std::vector<Rational> cost(cols_, Rational(0));
        bool any_artificial = false;
        for (int j = n_ + num_slacks_; j < cols_; ++j) {
            cost[j] = 1;
            any_artificial = true;
        }
        if (any_artificial) {
            set_objective_from(cost);
            if (!iterate()) throw InternalError("phase one cannot be unbounded");
            if (obj_[cols_] != 0) return false;  // value = -sum of artificials
            // pivot zero-valued artificials out; rows that cannot pivot are redundant
            for (std::size_t r = 0; r < tab_.size();) {
                if (basis_[r] < n_ + num_slacks_) {
                    ++r;
                    continue;
                }
                int col = -1;
                for (int j = 0; j < n_ + num_slacks_; ++j)
                    if (tab_[r][j] != 0) {
                        col = j;
                        break;
                    }
                if (col >= 0) {
                    pivot(static_cast<int>(r), col);
                    ++r;
                } else {
                    drop_row(r);
                }
            }
        }
        for (int j = n_ + num_slacks_; j < cols_; ++j) banned_[j] = 1;
        return true;
    }

    void drop_row(std::size_t r) {
        in_basis_[basis_[r]] = 0;
        tab_.erase(tab_.begin() + static_cast<long>(r));
        basis_.erase(basis_.begin() + static_cast<long>(r));
        ident_col_.erase(ident_col_.begin() + static_cast<long>(r));
        user_row_.erase(user_row_.begin() + static_cast<long>(r));
        row_mult_.erase(row_mult_.begin() + static_cast<long>(r));
    }

    bool phase_two() {
        set_objective_from(ctilde_);
        return iterate();
    }

    // Make every free variable basic when a blocking pivot exists in some
    // direction; afterwards the point is a vertex whenever the region is
    // pointed. Pivoting on zero-reduced-cost columns keeps optimality.
    void vertex_pass() {
        for (int j = 0; j < n_; ++j) {
            if (in_basis_[j]) continue;
            if (obj_[j] != 0) throw InternalError("free variable with nonzero reduced cost at optimum");
            int row = choose_leaving(j, 1);
            if (row < 0) row = choose_leaving(j, -1);
            if (row >= 0) pivot(row, j);
        }
    }

    void extract(LpSolution& sol) {
        sol.status = LpStatus::optimal;
        sol.x.assign(n_, Rational(0));
        for (std::size_t r = 0; r < tab_.size(); ++r)
            if (basis_[r] < n_) sol.x[basis_[r]] = tab_[r][cols_];

        const Rational sense_mult = lp_.sense() == Sense::maximize ? Rational(-1) : Rational(1);
        sol.objective = sense_mult * -obj_[cols_];  // obj_ stores the negated value

        sol.duals.assign(lp_.num_rows(), Rational(0));
        for (std::size_t r = 0; r < tab_.size(); ++r) {
            // y_internal[i] = -reduced cost of row i's initial identity column
            Rational y_int = -obj_[ident_col_[r]];
            sol.duals[user_row_[r]] = sense_mult * row_mult_[r] * y_int;
        }

        sol.basis.reserve(tab_.size());
        for (std::size_t r = 0; r < tab_.size(); ++r) {
            int col = basis_[r];
            // slack columns are labeled num_vars + user row id
            sol.basis.push_back(col < n_ ? col : n_ + slack_user_row_[col]);
        }
    }
};

}  // namespace

LpSolution solve(const LinearProgram& lp, const LpOptions& options) {
    count_solve();
    Simplex simplex(lp);
    LpSolution sol = simplex.run();
    if (options.self_certify && sol.status == LpStatus::optimal) {
        bool ok = certify(lp, sol);
        count_certify(ok);
        if (!ok) throw InternalError("simplex produced an uncertifiable solution");
    }
    return sol;
}

bool certify(const LinearProgram& lp, const LpSolution& sol) {
    if (sol.status != LpStatus::optimal) return false;
    if (static_cast<int>(sol.x.size()) != lp.num_vars()) return false;
    if (static_cast<int>(sol.duals.size()) != lp.num_rows()) return false;

    const bool maximize = lp.sense() == Sense::maximize;

    // primal feasibility, complementary slackness and dual signs
    for (int i = 0; i < lp.num_rows(); ++i) {
        const LinearRow& row = lp.row(i);
        Rational activity = 0;
        for (const auto& [var, coeff] : row.coeffs) activity += coeff * sol.x[var];
        const Rational& y = sol.duals[i];
        switch (row.rel) {
            case Relation::less_equal:
                if (activity > row.rhs) return false;
                if (maximize ? y < 0 : y > 0) return false;
                if (y != 0 && activity != row.rhs) return false;
                break;
            case Relation::greater_equal:
                if (activity < row.rhs) return false;
                if (maximize ? y > 0 : y < 0) return false;
                if (y != 0 && activity != row.rhs) return false;
                break;
            case Relation::equal:
                if (activity != row.rhs) return false;
                break;
        }
    }

    // dual feasibility: A'y = c over the free primal variables
    std::vector<Rational> aty(lp.num_vars(), Rational(0));
    for (int i = 0; i < lp.num_rows(); ++i) {
        if (sol.duals[i] == 0) continue;
        for (const auto& [var, coeff] : lp.row(i).coeffs) aty[var] += coeff * sol.duals[i];
    }
    for (int j = 0; j < lp.num_vars(); ++j)
        if (aty[j] != lp.objective()[j]) return false;

    // objective equality on both sides
    Rational primal = 0;
    for (int j = 0; j < lp.num_vars(); ++j) primal += lp.objective()[j] * sol.x[j];
    if (primal != sol.objective) return false;
    Rational dual = 0;
    for (int i = 0; i < lp.num_rows(); ++i) dual += lp.row(i).rhs * sol.duals[i];
    if (dual != sol.objective) return false;
    return true;
}

}  // namespace treepart
