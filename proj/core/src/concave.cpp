#include "alcove/concave.hpp"

#include <algorithm>
#include <functional>

#include "alcove/errors.hpp"
#include "alcove/linear.hpp"

namespace alcove {

void ConcaveMap::validate() const {
    dynkin.validate();
    const RootSystem& rs = RootSystem::get(dynkin);
    if (values.size() != rs.roots().size())
        throw RankMismatch("map has " + std::to_string(values.size()) +
                           " root values for " + dynkin.str());
}

const Rat& ConcaveMap::at(const Root& r) const {
    if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return zero;
    int idx = RootSystem::get(dynkin).index_of(r);
    if (idx < 0) throw IndexOutOfRange("not a root of " + dynkin.str());
    return values[idx];
}

void ConcaveTuple::validate() const {
    if (entries.empty()) throw EmptySubset("empty tuple");
    for (const auto& f : entries) {
        f.validate();
        if (f.dynkin != entries.front().dynkin)
            throw RankMismatch("mixed types in tuple");
    }
}

ConcavityCheck is_concave(const ConcaveMap& f) {
    f.validate();
    const RootSystem& rs = RootSystem::get(f.dynkin);
    const auto& roots = rs.roots();
    if (f.zero < 0) return {false, {Root(rs.rank(), 0)}};
    const int n = static_cast<int>(roots.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Root sum = roots[i];
            for (int k = 0; k < rs.rank(); ++k) sum[k] += roots[j][k];
            bool zero = std::all_of(sum.begin(), sum.end(),
                                    [](int c) { return c == 0; });
            const Rat* target = nullptr;
            if (zero) {
                target = &f.zero;
            } else {
                int idx = rs.index_of(sum);
                if (idx >= 0) target = &f.values[idx];
            }
            if (target && *target > f.values[i] + f.values[j])
                return {false, {roots[i], roots[j]}};
        }
    }
    return {true, {}};
}

ConcaveMap from_point(const ApartmentPoint& theta) {
    theta.validate();
    const RootSystem& rs = RootSystem::get(theta.dynkin);
    ConcaveMap f = zero_map(theta.dynkin);
    for (size_t i = 0; i < rs.roots().size(); ++i)
        f.values[i] = Rat(m_point(rs.roots()[i], theta));
    return f;
}

ConcaveMap from_set(const BoundedSet& omega) {
    omega.validate();
    const RootSystem& rs = RootSystem::get(omega.points.front().dynkin);
    ConcaveMap f = zero_map(rs.dynkin());
    for (size_t i = 0; i < rs.roots().size(); ++i)
        f.values[i] = Rat(m_set(rs.roots()[i], omega));
    return f;
}

ConcaveMap combine(const ConcaveTuple& fs, const std::vector<int>& subset) {
    fs.validate();
    if (subset.empty()) throw EmptySubset("combine over empty index set");
    ConcaveMap out = zero_map(fs.entries.front().dynkin);
    for (int idx : subset) {
        if (idx < 1 || idx > static_cast<int>(fs.entries.size()))
            throw IndexOutOfRange("tuple index " + std::to_string(idx));
        const ConcaveMap& f = fs.entries[idx - 1];
        for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += f.values[i];
        out.zero += f.zero;
    }
    return out;
}

ConcaveMap pointwise_sup(const ConcaveTuple& fs) {
    fs.validate();
    ConcaveMap out = fs.entries.front();
    for (size_t k = 1; k < fs.entries.size(); ++k) {
        const ConcaveMap& f = fs.entries[k];
        for (size_t i = 0; i < out.values.size(); ++i)
            if (f.values[i] > out.values[i]) out.values[i] = f.values[i];
        if (f.zero > out.zero) out.zero = f.zero;
    }
    return out;
}

ConcaveMap ceiling(const ConcaveMap& f) {
    ConcavityCheck c = is_concave(f);
    if (!c.ok) throw NotConcave("ceiling requires a concave map");
    ConcaveMap out = f;
    for (auto& v : out.values) v = Rat(ceil_rat(v));
    out.zero = Rat(ceil_rat(out.zero));
    return out;
}

namespace {

// r(theta) >= -f(r) for every root, as coeffs.theta <= f(r).
std::vector<LinearConstraint> lower_bounds(const RootSystem& rs,
                                           const ConcaveMap& f) {
    std::vector<LinearConstraint> cons;
    cons.reserve(rs.roots().size());
    for (size_t i = 0; i < rs.roots().size(); ++i) {
        LinearConstraint c;
        c.coeffs.reserve(rs.rank());
        for (int k = 0; k < rs.rank(); ++k) c.coeffs.push_back(Rat(-rs.roots()[i][k]));
        c.bound = EpsRat(f.values[i]);
        cons.push_back(std::move(c));
    }
    return cons;
}

// r(theta) < -f(r) + 1, as coeffs.theta <= -f(r) + 1 - eps.
LinearConstraint strict_upper(const RootSystem& rs, const Root& r, const Rat& fr) {
    LinearConstraint c;
    c.coeffs.reserve(rs.rank());
    for (int k = 0; k < rs.rank(); ++k) c.coeffs.push_back(Rat(r[k]));
    c.bound = EpsRat(-fr + 1, Rat(-1));
    return c;
}

// Instantiates an eps-witness at eps = 1/2^k, increasing k until `accept`
// holds on the exact rational point; the witness satisfies the system for all
// sufficiently small eps, so this terminates.
ApartmentPoint realize(DynkinType t, const std::vector<EpsRat>& w,
                       const std::function<bool(const ApartmentPoint&)>& accept) {
    Rat eps(1, 2);
    for (int k = 0; k < 256; ++k) {
        ApartmentPoint p{t, {}};
        p.coords.reserve(w.size());
        for (const auto& e : w) p.coords.push_back(e.at(eps));
        if (accept(p)) return p;
        eps /= 2;
    }
    throw UnboundedRegularization("failed to realize feasibility witness");
}

}  // namespace

TypeWitness classify(const ConcaveMap& f) {
    f.validate();
    ConcavityCheck cc = is_concave(f);
    if (!cc.ok) throw NotConcave("classify requires a concave map");
    for (const Rat& v : f.values)
        if (!is_integer(v)) throw NotIntegral("classify requires integer values");
    if (!is_integer(f.zero)) throw NotIntegral("classify requires integer values");

    const RootSystem& rs = RootSystem::get(f.dynkin);
    const auto& roots = rs.roots();
    const int n = rs.rank();

    // Type I: one theta with -f(r) <= r(theta) < -f(r)+1 for every root.
    {
        std::vector<LinearConstraint> cons = lower_bounds(rs, f);
        for (size_t i = 0; i < roots.size(); ++i)
            cons.push_back(strict_upper(rs, roots[i], f.values[i]));
        FeasibilityResult fr = fourier_motzkin(n, std::move(cons));
        if (fr.feasible) {
            ApartmentPoint theta = realize(f.dynkin, fr.witness,
                [&](const ApartmentPoint& p) {
                    ConcaveMap g = from_point(p);
                    return g.values == f.values;
                });
            TypeWitness w;
            w.type = ConcaveType::I;
            w.theta = std::move(theta);
            return w;
        }
    }

    // Type II: per root, a point attaining f at that root while staying
    // above -f everywhere.
    BoundedSet omega;
    for (size_t i = 0; i < roots.size(); ++i) {
        std::vector<LinearConstraint> cons = lower_bounds(rs, f);
        cons.push_back(strict_upper(rs, roots[i], f.values[i]));
        FeasibilityResult fr = fourier_motzkin(n, std::move(cons));
        if (!fr.feasible) {
            TypeWitness w;
            w.type = ConcaveType::III;
            w.certificate = roots[i];
            return w;
        }
        const Root& r = roots[i];
        const Rat& fi = f.values[i];
        ApartmentPoint p = realize(f.dynkin, fr.witness,
            [&](const ApartmentPoint& q) {
                for (size_t s = 0; s < roots.size(); ++s)
                    if (rs.pairing(roots[s], q.coords) < -f.values[s]) return false;
                Rat v = rs.pairing(r, q.coords);
                return -fi <= v && v < -fi + 1;
            });
        omega.points.push_back(std::move(p));
    }
    TypeWitness w;
    w.type = ConcaveType::II;
    w.omega = std::move(omega);
    return w;
}

ConcaveMap regularize(const ConcaveMap& f) {
    f.validate();
    ConcavityCheck cc = is_concave(f);
    if (!cc.ok) throw NotConcave("regularize requires a concave map");
    const RootSystem& rs = RootSystem::get(f.dynkin);
    const auto& roots = rs.roots();
    const int nvars = static_cast<int>(roots.size());

    std::vector<Rat> cost(f.values.begin(), f.values.end());
    std::vector<std::vector<Rat>> a(rs.rank(), std::vector<Rat>(nvars));
    for (int k = 0; k < rs.rank(); ++k)
        for (int j = 0; j < nvars; ++j) a[k][j] = Rat(roots[j][k]);

    ConcaveMap out = f;
    for (int i = 0; i < nvars; ++i) {
        std::vector<Rat> b(rs.rank());
        for (int k = 0; k < rs.rank(); ++k) b[k] = Rat(roots[i][k]);
        LPResult lp = simplex_min(cost, a, b);
        if (lp.status == LPStatus::Unbounded)
            throw UnboundedRegularization("combination cost for a root is unbounded below");
        // feasible: lambda = e_i expresses the root by itself
        out.values[i] = Rat(ceil_rat(lp.value));
    }
    return out;
}

MoyPrasadDatum moy_prasad(const ApartmentPoint& theta, const Rat& depth) {
    theta.validate();
    if (depth < 0) throw NegativeDepth("depth must be >= 0");
    const RootSystem& rs = RootSystem::get(theta.dynkin);
    MoyPrasadDatum d{theta, depth, zero_map(theta.dynkin), ceil_rat(depth)};
    for (size_t i = 0; i < rs.roots().size(); ++i) {
        Rat v = rs.pairing(rs.roots()[i], theta.coords) - depth;
        d.root_values.values[i] = Rat(-floor_rat(v));
    }
    return d;
}

}  // namespace alcove
