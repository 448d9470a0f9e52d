#pragma once

#include <vector>

#include "alcove/apartment.hpp"
#include "alcove/concave.hpp"
#include "alcove/rootsystem.hpp"

namespace alcove {

// Root subsystem attached to a closed fibre: closed under negation and under
// addition within the ambient system. Roots kept in canonical order.
struct FibreRootDatum {
    DynkinType dynkin;
    std::vector<Root> roots;

    bool contains(const Root& r) const;
    bool operator==(const FibreRootDatum& o) const {
        return dynkin == o.dynkin && roots == o.roots;
    }
};

// {r : ceil(f)(-r) = -ceil(f)(r)}
FibreRootDatum fibre_roots(const ConcaveMap& f);

// {r : r(theta) integral}
FibreRootDatum phi_theta(const ApartmentPoint& theta);

// Addition-closure of the generator set inside the ambient root system.
FibreRootDatum generated_subsystem(DynkinType dynkin, const std::vector<Root>& gens);

enum class FacetScaling { Vertex, Shrunk, Lattice };

// Fibre of the facet named by a nonempty set of simple indices (1-based),
// with the vertex set scaled per `scaling`: theta_alpha itself, shrunk by
// 1/(rank+1), or dilated into the coroot lattice by lcm of the highest-root
// coefficients.
FibreRootDatum facet_fibre(DynkinType dynkin, FacetScaling scaling,
                           const std::vector<int>& subset);

FibreRootDatum subdiagonal_fibre(const ConcaveTuple& fs, const std::vector<int>& subset);

struct McKayComponent {
    std::vector<int> tau_s;
    ApartmentPoint theta_s;  // reduced to the closed alcove
};

struct McKayData {
    int d = 2;
    std::vector<int> tau;
    std::vector<int> tau_bar;                 // (-tau) mod d
    std::vector<McKayComponent> components;   // s = 1..d-1
    std::vector<ConcaveMap> node_functions;   // s = 1..d-2
    std::vector<FibreRootDatum> node_fibres;  // parallel to node_functions
};

McKayData mckay_ad(int d, const std::vector<int>& tau, DynkinType dynkin);

}  // namespace alcove
