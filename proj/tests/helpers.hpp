// Shared test-only helpers: a brute-force concavity oracle over bounded sum
// lengths and a seeded generator of random integer concave maps.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "alcove/concave.hpp"
#include "alcove/rootsystem.hpp"

namespace alcove_test {

using namespace alcove;

// All multisets of 2..maxlen roots whose sum is a root or zero, as index
// multisets into RootSystem::roots() (zero sum marked by in_phi = false).
struct SumDecomposition {
    std::vector<int> parts;
    Root sum;
    bool sum_is_zero;
};

inline const std::vector<SumDecomposition>& decompositions(DynkinType t, int maxlen) {
    static std::map<std::pair<std::pair<char, int>, int>, std::vector<SumDecomposition>> cache;
    auto key = std::make_pair(std::make_pair(t.family, t.rank), maxlen);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const RootSystem& rs = RootSystem::get(t);
    const int n = static_cast<int>(rs.roots().size());
    std::vector<SumDecomposition> out;
    std::vector<int> parts;
    Root acc(rs.rank(), 0);
    auto rec = [&](auto&& self, int start) -> void {
        if (parts.size() >= 2) {
            bool zero = true;
            for (int c : acc)
                if (c) zero = false;
            if (zero || rs.is_root(acc)) out.push_back({parts, acc, zero});
        }
        if (static_cast<int>(parts.size()) == maxlen) return;
        for (int i = start; i < n; ++i) {
            parts.push_back(i);
            for (int k = 0; k < rs.rank(); ++k) acc[k] += rs.roots()[i][k];
            self(self, i);
            for (int k = 0; k < rs.rank(); ++k) acc[k] -= rs.roots()[i][k];
            parts.pop_back();
        }
    };
    rec(rec, 0);
    return cache.emplace(key, std::move(out)).first->second;
}

// Exhaustive concavity over sums of length <= maxlen (plus the f(0) >= 0
// condition); the pairwise checker must agree with this on small systems.
inline bool exhaustive_concave(const ConcaveMap& f, int maxlen) {
    if (f.zero < 0) return false;
    for (const auto& d : decompositions(f.dynkin, maxlen)) {
        Rat rhs = 0;
        for (int idx : d.parts) rhs += f.values[idx];
        const Rat& lhs = d.sum_is_zero ? f.zero : f.at(d.sum);
        if (lhs > rhs) return false;
    }
    return true;
}

// Random integer-valued concave map with values in [lo, hi] and f(0) = 0:
// a random m-function perturbed by accepted +-1 moves.
inline ConcaveMap random_concave_int(std::mt19937& rng, DynkinType t, int lo, int hi) {
    const RootSystem& rs = RootSystem::get(t);
    std::uniform_int_distribution<int> den_dist(1, 4);
    for (;;) {
        int den = den_dist(rng);
        std::uniform_int_distribution<int> num_dist(-den, den);
        ApartmentPoint p = zero_point(t);
        for (auto& c : p.coords) c = Rat(num_dist(rng), den);
        ConcaveMap f = from_point(p);
        bool in_range = true;
        for (const Rat& v : f.values)
            if (v < lo || v > hi) in_range = false;
        if (!in_range) continue;
        std::uniform_int_distribution<int> idx_dist(0, static_cast<int>(f.values.size()) - 1);
        std::uniform_int_distribution<int> delta_dist(0, 1);
        for (int moves = 0; moves < 24; ++moves) {
            ConcaveMap g = f;
            int i = idx_dist(rng);
            g.values[i] += delta_dist(rng) ? 1 : -1;
            if (g.values[i] < lo || g.values[i] > hi) continue;
            if (is_concave(g).ok) f = std::move(g);
        }
        return f;
    }
}

}  // namespace alcove_test
