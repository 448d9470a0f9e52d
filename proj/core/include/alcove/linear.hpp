#pragma once

#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

// Element a + b*eps of the ordered field Q[eps], eps a positive infinitesimal.
// Strict rational bounds are encoded as weak bounds with an eps of slack.
struct EpsRat {
    Rat a;
    Rat b;

    EpsRat() = default;
    EpsRat(Rat a_, Rat b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

    EpsRat operator+(const EpsRat& o) const { return {a + o.a, b + o.b}; }
    EpsRat operator-(const EpsRat& o) const { return {a - o.a, b - o.b}; }
    EpsRat operator-() const { return {-a, -b}; }
    EpsRat operator*(const Rat& s) const { return {a * s, b * s}; }
    EpsRat operator/(const Rat& s) const { return {a / s, b / s}; }

    bool operator<(const EpsRat& o) const { return a != o.a ? a < o.a : b < o.b; }
    bool operator>(const EpsRat& o) const { return o < *this; }
    bool operator<=(const EpsRat& o) const { return !(o < *this); }
    bool operator>=(const EpsRat& o) const { return !(*this < o); }
    bool operator==(const EpsRat& o) const { return a == o.a && b == o.b; }

    // Evaluation at eps = val (val > 0 small).
    Rat at(const Rat& val) const { return a + b * val; }
};

// coeffs . x <= bound
struct LinearConstraint {
    std::vector<Rat> coeffs;
    EpsRat bound;
};

struct FeasibilityResult {
    bool feasible = false;
    std::vector<EpsRat> witness;  // only when feasible
};

// Decides feasibility of a system of weak inequalities over Q[eps] by exact
// Fourier-Motzkin elimination; on success returns one solution obtained by
// midpoint back-substitution.
FeasibilityResult fourier_motzkin(int nvars, std::vector<LinearConstraint> cons);

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rat value;
    std::vector<Rat> solution;
};

// min c.x  subject to  A x = b, x >= 0, by exact-rational two-phase simplex
// with Bland's rule.
LPResult simplex_min(const std::vector<Rat>& c,
                     const std::vector<std::vector<Rat>>& a,
                     const std::vector<Rat>& b);

}  // namespace alcove
