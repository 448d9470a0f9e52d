#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alcove/apartment.hpp"
#include "alcove/errors.hpp"

using namespace alcove;

namespace {

ApartmentPoint pt(const char* type, std::vector<Rat> coords) {
    return ApartmentPoint{DynkinType::parse(type), std::move(coords)};
}

}  // namespace

TEST_CASE("floor semantics toward minus infinity") {
    CHECK(floor_rat(Rat(-1, 3)) == -1);
    CHECK(floor_rat(Rat(1, 3)) == 0);
    CHECK(floor_rat(Rat(-1)) == -1);
    CHECK(floor_rat(Rat(7, 2)) == 3);
    CHECK(ceil_rat(Rat(1, 2)) == 1);
    CHECK(ceil_rat(Rat(-1, 2)) == 0);
}

TEST_CASE("floor superadditivity on random rationals") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
    for (int iter = 0; iter < 500; ++iter) {
        Rat sum = 0;
        Int floors = 0;
        for (int i = 0; i < 4; ++i) {
            Rat a(num(rng), den(rng));
            sum += a;
            floors += floor_rat(a);
        }
        CHECK(floor_rat(sum) >= floors);
    }
}

TEST_CASE("m_point examples") {
    CHECK(m_point(Root{-1, 0}, pt("G2", {Rat(1, 9), Rat(0)})) == 1);
    CHECK(m_point(Root{1, 0}, pt("G2", {Rat(0), Rat(0)})) == 0);
    CHECK(m_point(Root{-1, -1}, pt("A2", {Rat(1, 3), Rat(1, 3)})) == 1);
    CHECK_THROWS_AS(m_point(Root{1}, pt("A2", {Rat(0), Rat(0)})), RankMismatch);
}

TEST_CASE("m_set examples and max identity") {
    ApartmentPoint b = pt("A2", {Rat(1, 3), Rat(1, 3)});
    ApartmentPoint b2 = pt("A2", {Rat(2, 3), Rat(2, 3)});
    BoundedSet omega{{b, b2}};
    CHECK(m_set(Root{-1, -1}, omega) == 2);
    CHECK(m_set(Root{1, 1}, omega) == 0);

    BoundedSet single{{b}};
    for (const Root& r : RootSystem::get({'A', 2}).roots())
        CHECK(m_set(r, single) == m_point(r, b));

    BoundedSet g2set{{pt("G2", {Rat(0), Rat(0)}), pt("G2", {Rat(2, 3), Rat(0)}),
                      pt("G2", {Rat(0), Rat(1)})}};
    CHECK(m_set(Root{-1, -1}, g2set) == 1);

    CHECK_THROWS_AS(m_set(Root{1, 1}, BoundedSet{}), EmptySubset);
}

TEST_CASE("m_set equals max of m_point on random vertex sets") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-8, 8), den(1, 6);
    for (const char* type : {"A2", "B2", "G2", "A3"}) {
        const RootSystem& rs = RootSystem::get(DynkinType::parse(type));
        for (int iter = 0; iter < 40; ++iter) {
            BoundedSet omega;
            int npts = 1 + iter % 4;
            for (int p = 0; p < npts; ++p) {
                ApartmentPoint q = zero_point(rs.dynkin());
                for (auto& c : q.coords) c = Rat(num(rng), den(rng));
                omega.points.push_back(q);
            }
            for (const Root& r : rs.roots()) {
                Int best = m_point(r, omega.points[0]);
                for (const auto& q : omega.points)
                    best = std::max(best, m_point(r, q));
                CHECK(m_set(r, omega) == best);
            }
        }
    }
}

TEST_CASE("alcove vertices") {
    auto g2 = alcove_vertices({'G', 2});
    CHECK(g2[0].coords == std::vector<Rat>{Rat(1, 3), Rat(0)});
    CHECK(g2[1].coords == std::vector<Rat>{Rat(0), Rat(1, 2)});
    auto a2 = alcove_vertices({'A', 2});
    CHECK(a2[0].coords == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(a2[1].coords == std::vector<Rat>{Rat(0), Rat(1)});
    auto b2 = alcove_vertices({'B', 2});
    CHECK(b2[0].coords == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(b2[1].coords == std::vector<Rat>{Rat(0), Rat(1, 2)});
}

TEST_CASE("denominators") {
    const auto& c = RootSystem::get({'A', 2}).cartan();
    ApartmentPoint coroot = pt("A2", {Rat(c[0][0]), Rat(c[0][1])});
    CHECK(denominator_of(coroot) == 1);
    CHECK(denominator_of(pt("A2", {Rat(1), Rat(0)})) == 3);
    CHECK(denominator_of(pt("G2", {Rat(1, 3), Rat(0)})) == 3);
}

TEST_CASE("d_alpha") {
    CHECK(d_alpha({'G', 2}, 0) == 3);
    CHECK(d_alpha({'A', 1}, 0) == 2);
    CHECK(d_alpha({'A', 2}, 0) == 3);
    CHECK_THROWS_AS(d_alpha({'A', 2}, 5), IndexOutOfRange);
    for (const char* type : {"A2", "B2", "B3", "G2", "F4", "C3", "D4"}) {
        DynkinType t = DynkinType::parse(type);
        auto verts = alcove_vertices(t);
        for (int i = 0; i < t.rank; ++i)
            CHECK(denominator_of(verts[i]) == d_alpha(t, i));
    }
}

TEST_CASE("barycenters") {
    CHECK(barycenter({'A', 1}, {0, 1}).coords == std::vector<Rat>{Rat(1, 2)});
    CHECK(barycenter({'G', 2}, {1}).coords == std::vector<Rat>{Rat(1, 3), Rat(0)});
    CHECK(barycenter({'G', 2}, {1, 2}).coords ==
          std::vector<Rat>{Rat(1, 6), Rat(1, 4)});
    CHECK_THROWS_AS(barycenter({'A', 2}, {}), EmptySubset);
    CHECK_THROWS_AS(barycenter({'A', 2}, {3}), IndexOutOfRange);
}

TEST_CASE("alcove reduction") {
    CHECK(alcove_reduce(pt("A1", {Rat(5, 2)})).coords == std::vector<Rat>{Rat(1, 2)});
    CHECK(alcove_reduce(pt("A1", {Rat(-1, 3)})).coords == std::vector<Rat>{Rat(1, 3)});
    ApartmentPoint inside = pt("G2", {Rat(1, 9), Rat(1, 12)});
    CHECK(alcove_reduce(inside).coords == inside.coords);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    for (const char* type : {"A2", "B2", "G2", "A3", "C3"}) {
        DynkinType t = DynkinType::parse(type);
        for (int iter = 0; iter < 30; ++iter) {
            ApartmentPoint q = zero_point(t);
            for (auto& c : q.coords) c = Rat(num(rng), den(rng));
            ApartmentPoint r = alcove_reduce(q);
            CHECK(in_closed_alcove(r));
            CHECK(alcove_reduce(r).coords == r.coords);  // idempotent
        }
    }
}
