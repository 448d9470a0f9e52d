#include "alcove/linear.hpp"

#include <cassert>
#include <utility>

namespace alcove {

namespace {

// x_v  <=  bound - coeffs . (x_0..x_{v-1})   (or >= for a lower bound)
struct Bound {
    std::vector<Rat> coeffs;
    EpsRat bound;

    EpsRat eval(const std::vector<EpsRat>& x) const {
        EpsRat v = bound;
        for (size_t j = 0; j < coeffs.size(); ++j)
            if (coeffs[j] != 0) v = v - x[j] * coeffs[j];
        return v;
    }
};

bool all_zero(const std::vector<Rat>& v) {
    for (const Rat& c : v)
        if (c != 0) return false;
    return true;
}

}  // namespace

FeasibilityResult fourier_motzkin(int nvars, std::vector<LinearConstraint> cons) {
    std::vector<std::vector<Bound>> lowers(nvars), uppers(nvars);
    for (int v = nvars - 1; v >= 0; --v) {
        std::vector<LinearConstraint> next;
        for (auto& c : cons) {
            const Rat& cv = c.coeffs[v];
            if (cv == 0) {
                c.coeffs.resize(v);
                if (all_zero(c.coeffs)) {
                    if (c.bound < EpsRat(Rat(0))) return {false, {}};
                } else {
                    next.push_back(std::move(c));
                }
                continue;
            }
            Bound nb;
            nb.coeffs.assign(c.coeffs.begin(), c.coeffs.begin() + v);
            for (Rat& q : nb.coeffs) q /= cv;
            nb.bound = c.bound / cv;
            (cv > 0 ? uppers : lowers)[v].push_back(std::move(nb));
        }
        for (const Bound& lo : lowers[v]) {
            for (const Bound& up : uppers[v]) {
                LinearConstraint combo;
                combo.coeffs.resize(v);
                for (int j = 0; j < v; ++j)
                    combo.coeffs[j] = up.coeffs[j] - lo.coeffs[j];
                combo.bound = up.bound - lo.bound;
                if (all_zero(combo.coeffs)) {
                    if (combo.bound < EpsRat(Rat(0))) return {false, {}};
                } else {
                    next.push_back(std::move(combo));
                }
            }
        }
        cons = std::move(next);
    }

    std::vector<EpsRat> x(nvars, EpsRat(Rat(0)));
    for (int v = 0; v < nvars; ++v) {
        bool has_lo = !lowers[v].empty(), has_up = !uppers[v].empty();
        EpsRat lo, up;
        if (has_lo) {
            lo = lowers[v].front().eval(x);
            for (size_t i = 1; i < lowers[v].size(); ++i) {
                EpsRat e = lowers[v][i].eval(x);
                if (e > lo) lo = e;
            }
        }
        if (has_up) {
            up = uppers[v].front().eval(x);
            for (size_t i = 1; i < uppers[v].size(); ++i) {
                EpsRat e = uppers[v][i].eval(x);
                if (e < up) up = e;
            }
        }
        if (has_lo && has_up)
            x[v] = (lo + up) / Rat(2);
        else if (has_lo)
            x[v] = lo;
        else if (has_up)
            x[v] = up;
        // neither: x_v stays 0
    }
    return {true, std::move(x)};
}

namespace {

class Tableau {
public:
    Tableau(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b)
        : m_(static_cast<int>(a.size())),
          n_(m_ ? static_cast<int>(a[0].size()) : 0) {
        t_.assign(m_, std::vector<Rat>(n_ + m_ + 1, Rat(0)));
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            Rat sign = (b[i] < 0) ? Rat(-1) : Rat(1);
            for (int j = 0; j < n_; ++j) t_[i][j] = a[i][j] * sign;
            t_[i][n_ + i] = 1;  // artificial
            t_[i].back() = b[i] * sign;
            basis_[i] = n_ + i;
        }
    }

    int rows() const { return m_; }
    int structural() const { return n_; }
    int basis(int i) const { return basis_[i]; }
    const Rat& rhs(int i) const { return t_[i].back(); }
    const Rat& at(int i, int j) const { return t_[i][j]; }

    void pivot(int row, int col) {
        Rat p = t_[row][col];
        for (auto& v : t_[row]) v /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == row || t_[i][col] == 0) continue;
            Rat f = t_[i][col];
            for (size_t j = 0; j < t_[i].size(); ++j)
                t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    // Minimizes cost (length n_ + m_) over the current feasible basis.
    // Returns false when unbounded below.
    bool optimize(const std::vector<Rat>& cost, bool allow_artificial) {
        int ncols = n_ + (allow_artificial ? m_ : 0);
        for (;;) {
            std::vector<Rat> red = cost;
            for (int i = 0; i < m_; ++i) {
                Rat cb = cost[basis_[i]];
                if (cb == 0) continue;
                for (int j = 0; j < ncols; ++j) red[j] -= cb * t_[i][j];
            }
            int enter = -1;
            for (int j = 0; j < ncols; ++j) {
                if (red[j] < 0) { enter = j; break; }  // Bland: lowest index
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rat ratio = t_[i].back() / t_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    // Pivots artificial variables out of the basis; drops redundant rows.
    void purge_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            int col = -1;
            for (int j = 0; j < n_; ++j)
                if (t_[i][j] != 0) { col = j; break; }
            if (col >= 0) {
                pivot(i, col);
            } else {
                // redundant equality: delete the row
                t_.erase(t_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
                --i;
            }
        }
    }

private:
    int m_, n_;
    std::vector<std::vector<Rat>> t_;
    std::vector<int> basis_;
};

}  // namespace

LPResult simplex_min(const std::vector<Rat>& c,
                     const std::vector<std::vector<Rat>>& a,
                     const std::vector<Rat>& b) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    Tableau tab(a, b);

    std::vector<Rat> phase1(n + m, Rat(0));
    for (int i = 0; i < m; ++i) phase1[n + i] = 1;
    bool ok = tab.optimize(phase1, true);
    assert(ok);  // phase 1 is bounded below by 0
    Rat infeas = 0;
    for (int i = 0; i < tab.rows(); ++i)
        if (tab.basis(i) >= n) infeas += tab.rhs(i);
    if (infeas != 0) return {LPStatus::Infeasible, Rat(0), {}};
    tab.purge_artificials();

    std::vector<Rat> phase2(n + m, Rat(0));
    for (int j = 0; j < n; ++j) phase2[j] = c[j];
    if (!tab.optimize(phase2, false)) return {LPStatus::Unbounded, Rat(0), {}};

    LPResult res;
    res.status = LPStatus::Optimal;
    res.solution.assign(n, Rat(0));
    for (int i = 0; i < tab.rows(); ++i)
        if (tab.basis(i) < n) res.solution[tab.basis(i)] = tab.rhs(i);
    res.value = 0;
    for (int j = 0; j < n; ++j) res.value += c[j] * res.solution[j];
    return res;
}

}  // namespace alcove
