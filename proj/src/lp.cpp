#include "locpos/lp.hpp"

#include <stdexcept>

namespace locpos {

namespace {

// Dense simplex tableau over mpq. Columns: structural (shifted/split)
// variables, then one artificial per row, then the rhs.
class Tableau {
public:
    Tableau(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs,
            std::size_t num_structural)
        : rows_(std::move(rows)), rhs_(std::move(rhs)), structural_(num_structural) {
        std::size_t m = rows_.size();
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (rhs_[i] < 0) {
                for (auto& v : rows_[i]) v = -v;
                rhs_[i] = -rhs_[i];
            }
            rows_[i].resize(structural_ + m, Rat(0));
            rows_[i][structural_ + i] = 1;
            basis_[i] = structural_ + i;
        }
        total_cols_ = structural_ + m;
    }

    // Minimizes cost over the current feasible region. Returns false on
    // unboundedness. allow_artificial gates artificial columns entering.
    bool minimize(const std::vector<Rat>& cost, bool allow_artificial) {
        for (;;) {
            std::size_t entering = total_cols_;
            for (std::size_t j = 0; j < total_cols_; ++j) {
                if (!allow_artificial && j >= structural_) break;
                if (is_basic(j)) continue;
                if (reduced_cost(cost, j) < 0) {
                    entering = j;
                    break;  // Bland: smallest eligible index
                }
            }
            if (entering == total_cols_) return true;

            std::size_t leaving = rows_.size();
            Rat best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rat& a = rows_[i][entering];
                if (a <= 0) continue;
                Rat ratio = rhs_[i] / a;
                if (leaving == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows_.size()) return false;
            pivot(leaving, entering);
        }
    }

    Rat objective_value(const std::vector<Rat>& cost) const {
        Rat value(0);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < cost.size()) value += cost[basis_[i]] * rhs_[i];
        return value;
    }

    // Pivots basic artificials onto structural columns; drops redundant rows.
    void eliminate_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < structural_) {
                ++i;
                continue;
            }
            std::size_t j = 0;
            while (j < structural_ && (is_basic(j) || rows_[i][j] == 0)) ++j;
            if (j < structural_) {
                pivot(i, j);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    std::vector<Rat> basic_solution() const {
        std::vector<Rat> x(structural_, Rat(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < structural_) x[basis_[i]] = rhs_[i];
        return x;
    }

private:
    bool is_basic(std::size_t j) const {
        for (std::size_t b : basis_)
            if (b == j) return true;
        return false;
    }

    Rat reduced_cost(const std::vector<Rat>& cost, std::size_t j) const {
        Rat rc = j < cost.size() ? cost[j] : Rat(0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rat cb = basis_[i] < cost.size() ? cost[basis_[i]] : Rat(0);
            if (cb != 0) rc -= cb * rows_[i][j];
        }
        return rc;
    }

    void pivot(std::size_t row, std::size_t col) {
        Rat inv = Rat(1) / rows_[row][col];
        for (auto& v : rows_[row]) v *= inv;
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row) continue;
            Rat factor = rows_[i][col];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < total_cols_; ++j)
                rows_[i][j] -= factor * rows_[row][j];
            rhs_[i] -= factor * rhs_[row];
        }
        basis_[row] = col;
    }

    std::vector<std::vector<Rat>> rows_;
    std::vector<Rat> rhs_;
    std::vector<std::size_t> basis_;
    std::size_t structural_;
    std::size_t total_cols_ = 0;
};

}  // namespace

LPResult solve_lp(const LPProblem& problem) {
    const unsigned n = problem.num_vars;
    if (problem.objective.size() != n)
        throw std::invalid_argument("objective length does not match variable count");
    for (const auto& c : problem.constraints)
        if (c.row.size() != n)
            throw std::invalid_argument("constraint row length does not match variable count");
    std::vector<std::optional<Rat>> lower = problem.lower_bounds;
    if (lower.empty()) lower.assign(n, Rat(0));
    if (lower.size() != n)
        throw std::invalid_argument("lower bound count does not match variable count");

    // Shifted/split variables: bounded x_j = y_j + L_j; free x_j = y+ - y-.
    struct VarMap {
        std::size_t pos;
        std::size_t neg;  // == npos when bounded
        Rat shift;
    };
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<VarMap> vmap(n);
    std::size_t cols = 0;
    for (unsigned j = 0; j < n; ++j) {
        if (lower[j]) {
            vmap[j] = {cols++, npos, *lower[j]};
        } else {
            vmap[j] = {cols, cols + 1, Rat(0)};
            cols += 2;
        }
    }

    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    std::size_t num_slacks = 0;
    for (const auto& c : problem.constraints)
        if (c.rel != Relation::Eq) ++num_slacks;
    std::size_t structural = cols + num_slacks;

    std::size_t slack_at = cols;
    for (const auto& c : problem.constraints) {
        std::vector<Rat> row(structural, Rat(0));
        Rat b = c.rhs;
        for (unsigned j = 0; j < n; ++j) {
            if (c.row[j] == 0) continue;
            row[vmap[j].pos] += c.row[j];
            if (vmap[j].neg != npos) row[vmap[j].neg] -= c.row[j];
            b -= c.row[j] * vmap[j].shift;
        }
        if (c.rel == Relation::LessEq) row[slack_at++] = 1;
        else if (c.rel == Relation::GreaterEq) row[slack_at++] = -1;
        rows.push_back(std::move(row));
        rhs.push_back(b);
    }

    Tableau tab(std::move(rows), std::move(rhs), structural);

    // Phase 1: minimize the sum of artificials.
    std::vector<Rat> phase1_cost(structural + problem.constraints.size(), Rat(0));
    for (std::size_t j = structural; j < phase1_cost.size(); ++j) phase1_cost[j] = 1;
    tab.minimize(phase1_cost, true);
    if (tab.objective_value(phase1_cost) > 0) return {LPStatus::Infeasible, {}, Rat(0)};
    tab.eliminate_artificials();

    // Phase 2.
    std::vector<Rat> cost(structural, Rat(0));
    Rat constant(0);
    for (unsigned j = 0; j < n; ++j) {
        Rat cj = problem.objective[j];
        if (problem.maximize) cj = -cj;
        cost[vmap[j].pos] += cj;
        if (vmap[j].neg != npos) cost[vmap[j].neg] -= cj;
        constant += cj * vmap[j].shift;
    }
    if (!tab.minimize(cost, false)) return {LPStatus::Unbounded, {}, Rat(0)};

    std::vector<Rat> y = tab.basic_solution();
    std::vector<Rat> x(n);
    for (unsigned j = 0; j < n; ++j) {
        x[j] = y[vmap[j].pos] + vmap[j].shift;
        if (vmap[j].neg != npos) x[j] -= y[vmap[j].neg];
    }
    Rat value(0);
    for (unsigned j = 0; j < n; ++j) value += problem.objective[j] * x[j];
    return {LPStatus::Optimal, std::move(x), std::move(value)};
}

}  // namespace locpos
