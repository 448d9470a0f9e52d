#pragma once

#include <optional>
#include <vector>

#include "alcove/apartment.hpp"
#include "alcove/rational.hpp"
#include "alcove/rootsystem.hpp"

namespace alcove {

// Total map from the roots and 0 to exact rationals; `values` is parallel to
// RootSystem::roots() canonical order, `zero` is the value at 0.
struct ConcaveMap {
    DynkinType dynkin;
    std::vector<Rat> values;
    Rat zero = 0;

    void validate() const;  // RankMismatch when values length != |roots|

    const Rat& at_index(int idx) const { return values[idx]; }
    // Value at a root or at 0 (the zero vector); IndexOutOfRange otherwise.
    const Rat& at(const Root& r) const;

    bool operator==(const ConcaveMap& o) const {
        return dynkin == o.dynkin && values == o.values && zero == o.zero;
    }
};

inline ConcaveMap zero_map(DynkinType t) {
    return ConcaveMap{t, std::vector<Rat>(RootSystem::get(t).roots().size(), Rat(0)), Rat(0)};
}

struct ConcaveTuple {
    std::vector<ConcaveMap> entries;

    void validate() const;  // EmptySubset / RankMismatch
};

struct ConcavityCheck {
    bool ok = true;
    // First violating tuple: {0} for f(0) < 0, else the pair {r, s} with
    // f(r+s) > f(r) + f(s) (s = -r covers the f(0) bound).
    std::vector<Root> violation;
};

ConcavityCheck is_concave(const ConcaveMap& f);

ConcaveMap from_point(const ApartmentPoint& theta);
ConcaveMap from_set(const BoundedSet& omega);

// Pointwise sum of the selected entries (1-based indices).
ConcaveMap combine(const ConcaveTuple& fs, const std::vector<int>& subset);

// Pointwise supremum over all entries of the tuple.
ConcaveMap pointwise_sup(const ConcaveTuple& fs);

// Pointwise ceiling; input must be concave.
ConcaveMap ceiling(const ConcaveMap& f);

enum class ConcaveType { I, II, III };

struct TypeWitness {
    ConcaveType type = ConcaveType::III;
    std::optional<ApartmentPoint> theta;  // type I
    std::optional<BoundedSet> omega;      // type II
    std::optional<Root> certificate;      // type III: root with infeasible system
};

// Classifies an integer-valued concave map: type I when f = from_point(theta)
// for some theta, else type II when f = from_set(Omega) for some Omega, else
// type III. Decided by exact Fourier-Motzkin feasibility.
TypeWitness classify(const ConcaveMap& f);

// f'(alpha) = ceil(min sum lambda_beta f(beta)) over nonnegative combinations
// of roots expressing alpha; exact LP per root. f'(0) = f(0).
ConcaveMap regularize(const ConcaveMap& f);

struct MoyPrasadDatum {
    ApartmentPoint theta;
    Rat depth;
    ConcaveMap root_values;  // r -> -floor(r(theta) - depth); zero slot is 0
    Int torus_level;
};

MoyPrasadDatum moy_prasad(const ApartmentPoint& theta, const Rat& depth);

}  // namespace alcove
