#include "alcove/series.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "alcove/errors.hpp"

namespace alcove {

TruncatedSeries TruncatedSeries::zero(int nvars, int cap, int pole_cap) {
    return TruncatedSeries{nvars, cap, pole_cap, {}};
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, int nvars, int cap,
                                          int pole_cap) {
    TruncatedSeries s = zero(nvars, cap, pole_cap);
    if (c != 0) s.terms[std::vector<int>(nvars, 0)] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rat& c, const std::vector<int>& exp,
                                          int cap, int pole_cap) {
    TruncatedSeries s = zero(static_cast<int>(exp.size()), cap, pole_cap);
    s.add_term(exp, c);
    return s;
}

void TruncatedSeries::add_term(const std::vector<int>& exp, const Rat& c) {
    if (c == 0) return;
    for (int e : exp) {
        if (e < -pole_cap)
            throw PoleOverflow("exponent " + std::to_string(e) +
                               " below pole cap " + std::to_string(-pole_cap));
        if (e > cap) return;  // beyond the window: discard
    }
    auto it = terms.find(exp);
    if (it == terms.end()) {
        terms.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rat TruncatedSeries::coeff(const std::vector<int>& exp) const {
    auto it = terms.find(exp);
    return it == terms.end() ? Rat(0) : it->second;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries out = *this;
    for (const auto& [e, c] : o.terms) out.add_term(e, c);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries out = *this;
    for (const auto& [e, c] : o.terms) out.add_term(e, -c);
    return out;
}

TruncatedSeries TruncatedSeries::negated() const {
    TruncatedSeries out = *this;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries out = zero(nvars, cap, pole_cap);
    std::vector<int> e(nvars);
    for (const auto& [e1, c1] : terms) {
        for (const auto& [e2, c2] : o.terms) {
            for (int k = 0; k < nvars; ++k) e[k] = e1[k] + e2[k];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    std::vector<int> zero_exp(nvars, 0);
    Rat c0 = coeff(zero_exp);
    if (c0 == 0) throw PoleOverflow("inverse of a non-unit series");
    for (const auto& [e, c] : terms)
        for (int k : e)
            if (k < 0) throw PoleOverflow("inverse of a series with poles");
    // u = c0 (1 + h), total degree of h >= 1: geometric series terminates.
    TruncatedSeries h = *this;
    h.terms.erase(zero_exp);
    for (auto& [e, c] : h.terms) c /= c0;
    TruncatedSeries acc = constant(Rat(1) / c0, nvars, cap, pole_cap);
    TruncatedSeries pow = constant(Rat(1) / c0, nvars, cap, pole_cap);
    for (int k = 1; k <= nvars * cap && !pow.is_zero(); ++k) {
        pow = pow * h.negated();
        acc = acc + pow;
    }
    return acc;
}

TruncatedLaurentMatrix TruncatedLaurentMatrix::identity(int m, int nvars, int cap,
                                                        int pole_cap) {
    TruncatedLaurentMatrix out;
    out.m = m;
    out.entries.assign(m, std::vector<TruncatedSeries>(
                              m, TruncatedSeries::zero(nvars, cap, pole_cap)));
    for (int i = 0; i < m; ++i)
        out.entries[i][i] = TruncatedSeries::constant(Rat(1), nvars, cap, pole_cap);
    return out;
}

Root eps_diff(int m, int i, int j) {
    Root r(m - 1, 0);
    for (int k = std::min(i, j); k < std::max(i, j); ++k) r[k - 1] = (i < j) ? 1 : -1;
    return r;
}

ValuationPattern pattern(const ConcaveTuple& fs) {
    fs.validate();
    DynkinType t = fs.entries.front().dynkin;
    if (t.family != 'A') throw WrongType("matrix patterns require type A, got " + t.str());
    const int m = t.rank + 1;
    const int n = static_cast<int>(fs.entries.size());
    ValuationPattern pat;
    pat.m = m;
    pat.nvars = n;
    pat.bounds.assign(m, std::vector<std::vector<int>>(m, std::vector<int>(n, 0)));
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (i == j) continue;
            Root r = eps_diff(m, i, j);
            for (int k = 0; k < n; ++k) {
                const Rat& v = fs.entries[k].at(r);
                if (!is_integer(v))
                    throw NotIntegral("pattern requires integer-valued maps");
                pat.bounds[i - 1][j - 1][k] =
                    static_cast<int>(numerator(v).convert_to<long>());
            }
        }
    }
    return pat;
}

namespace {

bool exp_at_least(const std::vector<int>& e, const std::vector<int>& bound) {
    for (size_t k = 0; k < e.size(); ++k)
        if (e[k] < bound[k]) return false;
    return true;
}

int total_degree(const std::vector<int>& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

bool is_member(const TruncatedLaurentMatrix& mat, const ValuationPattern& pat) {
    if (mat.m != pat.m || mat.nvars() != pat.nvars)
        throw SizeMismatch("matrix and pattern shapes disagree");
    const int m = mat.m;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const TruncatedSeries& s = mat.entries[i][j];
            if (i == j) {
                std::vector<int> zero_exp(pat.nvars, 0);
                for (const auto& [e, c] : s.terms) {
                    for (int k : e)
                        if (k < 0) return false;
                    if (pat.diag_unit_level > 0 && total_degree(e) < pat.diag_unit_level) {
                        // unit congruent to 1 below the congruence level
                        if (e == zero_exp ? c != 1 : c != 0) return false;
                    }
                }
                if (pat.diag_unit_level > 0 && s.coeff(zero_exp) != 1) return false;
            } else {
                for (const auto& [e, c] : s.terms)
                    if (!exp_at_least(e, pat.bounds[i][j])) return false;
            }
        }
    }
    TruncatedSeries det = determinant(mat);
    return det == TruncatedSeries::constant(Rat(1), mat.nvars(), mat.cap(),
                                            mat.pole_cap());
}

TruncatedLaurentMatrix multiply(const TruncatedLaurentMatrix& lhs,
                                const TruncatedLaurentMatrix& rhs) {
    if (lhs.m != rhs.m || lhs.nvars() != rhs.nvars())
        throw SizeMismatch("matrix shapes disagree");
    const int m = lhs.m;
    TruncatedLaurentMatrix out;
    out.m = m;
    out.entries.assign(m, std::vector<TruncatedSeries>(
                              m, TruncatedSeries::zero(lhs.nvars(), lhs.cap(),
                                                       lhs.pole_cap())));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                out.entries[i][j] =
                    out.entries[i][j] + lhs.entries[i][k] * rhs.entries[k][j];
    return out;
}

namespace {

TruncatedSeries det_on(const TruncatedLaurentMatrix& mat,
                       const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() == 1) return mat.entries[rows[0]][cols[0]];
    TruncatedSeries acc =
        TruncatedSeries::zero(mat.nvars(), mat.cap(), mat.pole_cap());
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> sub_cols;
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != c) sub_cols.push_back(cols[k]);
        TruncatedSeries term = mat.entries[rows[0]][cols[c]] * det_on(mat, sub_rows, sub_cols);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TruncatedSeries determinant(const TruncatedLaurentMatrix& mat) {
    std::vector<int> idx(mat.m);
    std::iota(idx.begin(), idx.end(), 0);
    return det_on(mat, idx, idx);
}

TruncatedLaurentMatrix adjugate(const TruncatedLaurentMatrix& mat) {
    const int m = mat.m;
    TruncatedLaurentMatrix out;
    out.m = m;
    out.entries.assign(m, std::vector<TruncatedSeries>(
                              m, TruncatedSeries::zero(mat.nvars(), mat.cap(),
                                                       mat.pole_cap())));
    if (m == 1) {
        out.entries[0][0] =
            TruncatedSeries::constant(Rat(1), mat.nvars(), mat.cap(), mat.pole_cap());
        return out;
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < m; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            TruncatedSeries c = det_on(mat, rows, cols);
            out.entries[j][i] = ((i + j) % 2 == 0) ? c : c.negated();  // transpose
        }
    }
    return out;
}

TruncatedLaurentMatrix sample_member(const ValuationPattern& pat, std::uint64_t seed,
                                     int cap, int pole_cap, int generators) {
    std::mt19937_64 rng(seed);
    const int m = pat.m;
    const int n = pat.nvars;
    TruncatedLaurentMatrix acc = TruncatedLaurentMatrix::identity(m, n, cap, pole_cap);
    std::uniform_int_distribution<int> coef_dist(1, 3);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::uniform_int_distribution<int> extra_dist(0, 1);
    for (int g = 0; g < generators; ++g) {
        TruncatedLaurentMatrix gen = TruncatedLaurentMatrix::identity(m, n, cap, pole_cap);
        Rat coef(coef_dist(rng) * (sign_dist(rng) ? 1 : -1));
        bool torus = m > 1 && std::uniform_int_distribution<int>(0, 3)(rng) == 0;
        if (torus) {
            // diag(.., u, u^{-1}, ..) with u a unit congruent to 1 at the
            // required level
            int i = std::uniform_int_distribution<int>(0, m - 2)(rng);
            std::vector<int> e(n, 0);
            int lvl = std::max(1, pat.diag_unit_level);
            for (int k = 0; k < lvl; ++k)
                e[std::uniform_int_distribution<int>(0, n - 1)(rng)] += 1;
            TruncatedSeries u = TruncatedSeries::constant(Rat(1), n, cap, pole_cap);
            u.add_term(e, coef);
            gen.entries[i][i] = u;
            gen.entries[i + 1][i + 1] = u.inverse();
        } else {
            // I + x E_ij with x a monomial meeting the (i,j) bound
            int i = 0, j = 0;
            while (i == j) {
                i = std::uniform_int_distribution<int>(0, m - 1)(rng);
                j = std::uniform_int_distribution<int>(0, m - 1)(rng);
            }
            std::vector<int> e = pat.bounds[i][j];
            for (int k = 0; k < n; ++k) e[k] += extra_dist(rng);
            gen.entries[i][j] = TruncatedSeries::monomial(coef, e, cap, pole_cap);
        }
        acc = multiply(acc, gen);
    }
    return acc;
}

TruncatedLaurentMatrix specialize_diag(const TruncatedLaurentMatrix& mat) {
    const int m = mat.m;
    TruncatedLaurentMatrix out;
    out.m = m;
    out.entries.assign(m, std::vector<TruncatedSeries>(
                              m, TruncatedSeries::zero(1, mat.cap(), mat.pole_cap())));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            for (const auto& [e, c] : mat.entries[i][j].terms)
                out.entries[i][j].add_term({total_degree(e)}, c);
        }
    }
    return out;
}

TruncatedLaurentMatrix embed_uniformizer(const TruncatedLaurentMatrix& mat, int n) {
    if (mat.nvars() != 1) throw SizeMismatch("embedding expects a one-variable matrix");
    if (n < 1) throw SizeMismatch("need at least one variable");
    const int m = mat.m;
    TruncatedLaurentMatrix out;
    out.m = m;
    out.entries.assign(m, std::vector<TruncatedSeries>(
                              m, TruncatedSeries::zero(n, mat.cap(), mat.pole_cap())));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (const auto& [e, c] : mat.entries[i][j].terms)
                out.entries[i][j].add_term(std::vector<int>(n, e[0]), c);
    return out;
}

}  // namespace alcove
