#include "alcove/apartment.hpp"

#include <numeric>

#include "alcove/errors.hpp"

namespace alcove {

void ApartmentPoint::validate() const {
    dynkin.validate();
    if (static_cast<int>(coords.size()) != dynkin.rank)
        throw RankMismatch("point has " + std::to_string(coords.size()) +
                           " coordinates for " + dynkin.str());
}

void BoundedSet::validate() const {
    if (points.empty()) throw EmptySubset("bounded set has no vertices");
    points.front().validate();
    for (const auto& p : points) {
        p.validate();
        if (p.dynkin != points.front().dynkin)
            throw RankMismatch("mixed types in bounded set");
    }
}

Rat pairing(const Root& r, const ApartmentPoint& theta) {
    theta.validate();
    return RootSystem::get(theta.dynkin).pairing(r, theta.coords);
}

Int m_point(const Root& r, const ApartmentPoint& theta) {
    return -floor_rat(pairing(r, theta));
}

Int m_set(const Root& r, const BoundedSet& omega) {
    omega.validate();
    Rat lo = pairing(r, omega.points.front());
    for (size_t i = 1; i < omega.points.size(); ++i) {
        Rat v = pairing(r, omega.points[i]);
        if (v < lo) lo = v;
    }
    return -floor_rat(lo);
}

std::vector<ApartmentPoint> alcove_vertices(DynkinType dynkin) {
    const RootSystem& rs = RootSystem::get(dynkin);
    const Root& hi = rs.highest();
    std::vector<ApartmentPoint> out;
    out.reserve(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
        ApartmentPoint p = zero_point(dynkin);
        p.coords[i] = Rat(1, hi[i]);
        out.push_back(std::move(p));
    }
    return out;
}

// Solves C^T x = b exactly (C is the Cartan matrix, invertible).
static std::vector<Rat> coroot_coordinates(const RootSystem& rs,
                                           const std::vector<Rat>& b) {
    const int n = rs.rank();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(rs.cartan()[j][i]);
        m[i][n] = b[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (m[piv][col] == 0) ++piv;  // invertible, pivot exists
        std::swap(m[piv], m[col]);
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (int j = col; j <= n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

Int denominator_of(const ApartmentPoint& theta) {
    theta.validate();
    const RootSystem& rs = RootSystem::get(theta.dynkin);
    std::vector<Rat> x = coroot_coordinates(rs, theta.coords);
    Int d = 1;
    for (const Rat& xi : x) d = lcm(d, Int(denominator(xi)));
    return d;
}

Int d_alpha(DynkinType dynkin, int alpha) {
    const RootSystem& rs = RootSystem::get(dynkin);
    if (alpha < 0 || alpha >= rs.rank())
        throw IndexOutOfRange("simple index " + std::to_string(alpha));
    ApartmentPoint omega = zero_point(dynkin);
    omega.coords[alpha] = 1;
    return denominator_of(omega) * rs.highest()[alpha];
}

ApartmentPoint barycenter(DynkinType dynkin, const std::vector<int>& subset) {
    const RootSystem& rs = RootSystem::get(dynkin);
    if (subset.empty()) throw EmptySubset("barycenter of empty facet");
    std::vector<ApartmentPoint> verts = alcove_vertices(dynkin);
    ApartmentPoint acc = zero_point(dynkin);
    for (int idx : subset) {
        if (idx < 0 || idx > rs.rank())
            throw IndexOutOfRange("affine node " + std::to_string(idx));
        if (idx == 0) continue;  // the affine vertex is the origin
        for (int j = 0; j < rs.rank(); ++j)
            acc.coords[j] += verts[idx - 1].coords[j];
    }
    Rat inv(1, static_cast<long>(subset.size()));
    for (auto& c : acc.coords) c *= inv;
    return acc;
}

bool in_closed_alcove(const ApartmentPoint& theta) {
    theta.validate();
    const RootSystem& rs = RootSystem::get(theta.dynkin);
    for (int i = 0; i < rs.rank(); ++i)
        if (theta.coords[i] < 0) return false;
    return rs.pairing(rs.highest(), theta.coords) <= 1;
}

ApartmentPoint alcove_reduce(const ApartmentPoint& theta) {
    theta.validate();
    const RootSystem& rs = RootSystem::get(theta.dynkin);
    const int n = rs.rank();
    std::vector<int> hi_coweight = rs.highest_coroot_coweight();
    ApartmentPoint p = theta;
    for (;;) {
        bool acted = false;
        for (int i = 0; i < n; ++i) {
            // alpha_i(p) is the i-th coweight coordinate.
            if (p.coords[i] < 0) {
                Rat v = p.coords[i];
                const auto& covee = rs.cartan()[i];  // alpha_i^vee
                for (int j = 0; j < n; ++j) p.coords[j] -= v * covee[j];
                acted = true;
            }
        }
        Rat h = rs.pairing(rs.highest(), p.coords);
        if (h > 1) {
            // affine reflection through {highest = 1}
            Rat v = h - 1;
            for (int j = 0; j < n; ++j) p.coords[j] -= v * hi_coweight[j];
            acted = true;
        }
        if (!acted) return p;
    }
}

}  // namespace alcove
