#include "alcove/fibre.hpp"

#include <algorithm>
#include <set>

#include "alcove/errors.hpp"

namespace alcove {

bool FibreRootDatum::contains(const Root& r) const {
    return std::find(roots.begin(), roots.end(), r) != roots.end();
}

FibreRootDatum fibre_roots(const ConcaveMap& f) {
    ConcaveMap g = ceiling(f);  // throws NotConcave
    const RootSystem& rs = RootSystem::get(f.dynkin);
    FibreRootDatum out{f.dynkin, {}};
    for (size_t i = 0; i < rs.roots().size(); ++i) {
        int neg = rs.index_of(negate(rs.roots()[i]));
        if (g.values[neg] == -g.values[i]) out.roots.push_back(rs.roots()[i]);
    }
    return out;
}

FibreRootDatum phi_theta(const ApartmentPoint& theta) {
    theta.validate();
    const RootSystem& rs = RootSystem::get(theta.dynkin);
    FibreRootDatum out{theta.dynkin, {}};
    for (const Root& r : rs.roots())
        if (is_integer(rs.pairing(r, theta.coords))) out.roots.push_back(r);
    return out;
}

FibreRootDatum generated_subsystem(DynkinType dynkin, const std::vector<Root>& gens) {
    const RootSystem& rs = RootSystem::get(dynkin);
    std::set<Root> closure;
    for (const Root& g : gens) {
        if (!rs.is_root(g)) throw IndexOutOfRange("generator is not a root");
        closure.insert(g);
        closure.insert(negate(g));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Root> cur(closure.begin(), closure.end());
        for (size_t i = 0; i < cur.size(); ++i) {
            for (size_t j = i; j < cur.size(); ++j) {
                Root sum = cur[i];
                for (int k = 0; k < rs.rank(); ++k) sum[k] += cur[j][k];
                if (rs.is_root(sum) && closure.insert(sum).second) grew = true;
            }
        }
    }
    FibreRootDatum out{dynkin, {}};
    for (const Root& r : rs.roots())
        if (closure.count(r)) out.roots.push_back(r);
    return out;
}

FibreRootDatum facet_fibre(DynkinType dynkin, FacetScaling scaling,
                           const std::vector<int>& subset) {
    const RootSystem& rs = RootSystem::get(dynkin);
    if (subset.empty()) throw EmptySubset("facet needs at least one simple root");
    std::vector<ApartmentPoint> verts = alcove_vertices(dynkin);
    Rat factor(1);
    if (scaling == FacetScaling::Shrunk) {
        factor = Rat(1, rs.rank() + 1);
    } else if (scaling == FacetScaling::Lattice) {
        Int l = 1;
        for (int k = 0; k < rs.rank(); ++k) l = lcm(l, Int(rs.highest()[k]));
        factor = Rat(l);
    }
    ConcaveTuple fs;
    for (int idx : subset) {
        if (idx < 1 || idx > rs.rank())
            throw IndexOutOfRange("simple index " + std::to_string(idx));
        ApartmentPoint p = verts[idx - 1];
        for (auto& c : p.coords) c *= factor;
        fs.entries.push_back(from_point(p));
    }
    std::vector<int> all(fs.entries.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i) + 1;
    return fibre_roots(combine(fs, all));
}

FibreRootDatum subdiagonal_fibre(const ConcaveTuple& fs, const std::vector<int>& subset) {
    if (subset.empty()) throw EmptySubset("empty index set");
    return fibre_roots(combine(fs, subset));
}

McKayData mckay_ad(int d, const std::vector<int>& tau, DynkinType dynkin) {
    const RootSystem& rs = RootSystem::get(dynkin);
    if (d < 2) throw BadTypeVector("order must be >= 2");
    if (static_cast<int>(tau.size()) != rs.rank())
        throw BadTypeVector("type vector length != rank");
    auto mod_d = [d](long v) { return static_cast<int>(((v % d) + d) % d); };

    McKayData out;
    out.d = d;
    out.tau.resize(tau.size());
    out.tau_bar.resize(tau.size());
    for (size_t i = 0; i < tau.size(); ++i) {
        out.tau[i] = mod_d(tau[i]);
        out.tau_bar[i] = mod_d(-tau[i]);
    }
    for (int s = 1; s <= d - 1; ++s) {
        McKayComponent comp;
        comp.tau_s.resize(tau.size());
        ApartmentPoint p = zero_point(dynkin);
        for (size_t i = 0; i < tau.size(); ++i) {
            comp.tau_s[i] = mod_d(static_cast<long>(s) * out.tau[i]);
            p.coords[i] = Rat(comp.tau_s[i], d);
        }
        comp.theta_s = alcove_reduce(p);
        out.components.push_back(std::move(comp));
    }
    for (int s = 1; s <= d - 2; ++s) {
        ConcaveTuple pair;
        pair.entries.push_back(from_point(out.components[s - 1].theta_s));
        pair.entries.push_back(from_point(out.components[s].theta_s));
        ConcaveMap f = combine(pair, {1, 2});
        out.node_fibres.push_back(fibre_roots(f));
        out.node_functions.push_back(std::move(f));
    }
    return out;
}

}  // namespace alcove
