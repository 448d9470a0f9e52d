#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "alcove/concave.hpp"
#include "alcove/rational.hpp"

namespace alcove {

// Truncated n-variable Laurent series: terms with any exponent above `cap`
// are silently discarded, terms with any exponent below `-pole_cap` raise
// PoleOverflow (poles carry information, high-order tails do not).
struct TruncatedSeries {
    int nvars = 1;
    int cap = 1;
    int pole_cap = 0;
    std::map<std::vector<int>, Rat> terms;  // nonzero coefficients only

    static TruncatedSeries zero(int nvars, int cap, int pole_cap);
    static TruncatedSeries constant(const Rat& c, int nvars, int cap, int pole_cap);
    static TruncatedSeries monomial(const Rat& c, const std::vector<int>& exp,
                                    int cap, int pole_cap);

    // Adds c * z^exp, truncating / raising PoleOverflow per the caps.
    void add_term(const std::vector<int>& exp, const Rat& c);

    Rat coeff(const std::vector<int>& exp) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const TruncatedSeries& o) const { return terms == o.terms; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries negated() const;

    // Multiplicative inverse; requires a nonzero constant term and no
    // negative exponents (unit of the power-series ring).
    TruncatedSeries inverse() const;
};

struct TruncatedLaurentMatrix {
    int m = 1;
    std::vector<std::vector<TruncatedSeries>> entries;  // m x m, shared caps

    static TruncatedLaurentMatrix identity(int m, int nvars, int cap, int pole_cap);
    int nvars() const { return entries[0][0].nvars; }
    int cap() const { return entries[0][0].cap; }
    int pole_cap() const { return entries[0][0].pole_cap; }
    bool operator==(const TruncatedLaurentMatrix& o) const {
        return m == o.m && entries == o.entries;
    }
};

// Per-variable minimal orders for each off-diagonal entry; entry (i,j)
// carries the root eps_i - eps_j of A_{m-1}.
struct ValuationPattern {
    int m = 1;
    int nvars = 1;
    std::vector<std::vector<std::vector<int>>> bounds;  // m x m, diagonal unused
    int diag_unit_level = 0;  // congruence level for diagonal units
};

// Root eps_i - eps_j (1-based, i != j) of A_{m-1} in simple-root coefficients.
Root eps_diff(int m, int i, int j);

ValuationPattern pattern(const ConcaveTuple& fs);

bool is_member(const TruncatedLaurentMatrix& mat, const ValuationPattern& pat);

TruncatedLaurentMatrix multiply(const TruncatedLaurentMatrix& lhs,
                                const TruncatedLaurentMatrix& rhs);

TruncatedSeries determinant(const TruncatedLaurentMatrix& mat);
TruncatedLaurentMatrix adjugate(const TruncatedLaurentMatrix& mat);

// Deterministic pseudo-random product of `generators` torus units and root
// elements, each individually satisfying the pattern.
TruncatedLaurentMatrix sample_member(const ValuationPattern& pat, std::uint64_t seed,
                                     int cap, int pole_cap, int generators = 4);

// Substitutes z_1 = ... = z_n = t.
TruncatedLaurentMatrix specialize_diag(const TruncatedLaurentMatrix& mat);

// Substitutes t = z_1 * ... * z_n into a one-variable matrix.
TruncatedLaurentMatrix embed_uniformizer(const TruncatedLaurentMatrix& mat, int n);

}  // namespace alcove
