#pragma once

#include <vector>

#include "alcove/rational.hpp"
#include "alcove/rootsystem.hpp"

namespace alcove {

// Rational point of the affine apartment, coordinates in the
// fundamental-coweight basis: theta = sum coords[i] * omega_i^vee.
struct ApartmentPoint {
    DynkinType dynkin;
    std::vector<Rat> coords;

    void validate() const;  // RankMismatch when coords length != rank
};

inline ApartmentPoint zero_point(DynkinType t) {
    return ApartmentPoint{t, std::vector<Rat>(t.rank, Rat(0))};
}

// Finite vertex list standing for a close bounded subset; every linear
// functional attains its inf over the hull at a vertex.
struct BoundedSet {
    std::vector<ApartmentPoint> points;

    void validate() const;  // EmptySubset / RankMismatch
};

Rat pairing(const Root& r, const ApartmentPoint& theta);

// m_r(theta) = -floor(r(theta))
Int m_point(const Root& r, const ApartmentPoint& theta);

// m_r(Omega) = -floor(min over vertices of r(theta))
Int m_set(const Root& r, const BoundedSet& omega);

// Nonzero alcove vertices theta_alpha = omega_alpha^vee / c_alpha, one per
// simple root; the origin is the remaining vertex.
std::vector<ApartmentPoint> alcove_vertices(DynkinType dynkin);

// Least d >= 1 with d*theta in the coroot lattice.
Int denominator_of(const ApartmentPoint& theta);

// d_alpha = e_alpha * c_alpha for the 0-based simple index.
Int d_alpha(DynkinType dynkin, int alpha);

// Barycenter of the facet named by a subset of affine simple-root indices
// (0 = affine node alpha_0 with vertex 0, i = simple alpha_i for 1..rank).
ApartmentPoint barycenter(DynkinType dynkin, const std::vector<int>& subset);

// Representative of theta's affine-Weyl orbit inside the closed fundamental
// alcove (all simple values >= 0, highest-root value <= 1).
ApartmentPoint alcove_reduce(const ApartmentPoint& theta);

bool in_closed_alcove(const ApartmentPoint& theta);

}  // namespace alcove
