#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alcove/errors.hpp"
#include "alcove/rootsystem.hpp"

using namespace alcove;

TEST_CASE("type parsing and validation") {
    CHECK(DynkinType::parse("A2").family == 'A');
    CHECK(DynkinType::parse("g2").rank == 2);
    CHECK_THROWS_AS(DynkinType::parse("H3"), InvalidRank);
    CHECK_THROWS_AS(DynkinType::parse("A"), ParseError);
    CHECK_THROWS_AS(DynkinType::parse("E9"), InvalidRank);
    CHECK_THROWS_AS((DynkinType{'A', 0}).validate(), InvalidRank);
    CHECK_THROWS_AS((DynkinType{'D', 2}).validate(), InvalidRank);
    CHECK_THROWS_AS((DynkinType{'F', 3}).validate(), InvalidRank);
}

TEST_CASE("root counts") {
    auto count = [](const char* s) {
        return RootSystem::get(DynkinType::parse(s)).roots().size();
    };
    CHECK(count("A1") == 2);
    CHECK(count("A2") == 6);
    CHECK(count("A3") == 12);
    CHECK(count("B2") == 8);
    CHECK(count("B3") == 18);
    CHECK(count("C3") == 18);
    CHECK(count("D4") == 24);
    CHECK(count("G2") == 12);
    CHECK(count("F4") == 48);
    CHECK(count("E6") == 72);
    CHECK(count("E7") == 126);
    CHECK(count("E8") == 240);
}

TEST_CASE("highest roots") {
    CHECK(RootSystem::get({'A', 2}).highest() == Root{1, 1});
    CHECK(RootSystem::get({'B', 2}).highest() == Root{1, 2});
    CHECK(RootSystem::get({'G', 2}).highest() == Root{3, 2});
    CHECK(RootSystem::get({'F', 4}).highest() == Root{2, 3, 4, 2});
    CHECK(RootSystem::get({'B', 3}).highest() == Root{1, 2, 2});
    CHECK(RootSystem::get({'C', 3}).highest() == Root{2, 2, 1});
    CHECK(RootSystem::get({'D', 4}).highest() == Root{1, 2, 1, 1});
}

TEST_CASE("canonical ordering: height then reverse-lex, negatives mirrored") {
    const RootSystem& g2 = RootSystem::get({'G', 2});
    std::vector<Root> expect = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    for (int i = 0; i < 6; ++i) {
        CHECK(g2.roots()[i] == expect[i]);
        CHECK(g2.roots()[i + 6] == negate(expect[i]));
    }
    const RootSystem& a2 = RootSystem::get({'A', 2});
    CHECK(a2.roots()[0] == Root{1, 0});
    CHECK(a2.roots()[1] == Root{0, 1});
    CHECK(a2.roots()[2] == Root{1, 1});
}

TEST_CASE("cartan matrix conventions") {
    auto c = cartan_matrix({'G', 2});
    CHECK(c[0][1] == -3);
    CHECK(c[1][0] == -1);
    auto b3 = cartan_matrix({'B', 3});
    CHECK(b3[2][1] == -2);
    CHECK(b3[1][2] == -1);
    auto c3 = cartan_matrix({'C', 3});
    CHECK(c3[1][2] == -2);
    CHECK(c3[2][1] == -1);
    auto f4 = cartan_matrix({'F', 4});
    CHECK(f4[2][1] == -2);
    CHECK(f4[1][2] == -1);
}

TEST_CASE("pairing against fundamental coweights") {
    const RootSystem& g2 = RootSystem::get({'G', 2});
    std::vector<Rat> theta = {Rat(1, 9), Rat(0)};
    CHECK(g2.pairing(Root{3, 2}, theta) == Rat(1, 3));
    CHECK(g2.pairing(Root{-1, 0}, theta) == Rat(-1, 9));
    CHECK_THROWS_AS(g2.pairing(Root{1}, theta), RankMismatch);
}

TEST_CASE("coxeter numbers cross-check") {
    auto h = [](const char* s) {
        return group_constants(DynkinType::parse(s)).coxeter;
    };
    CHECK(h("A1") == 2);
    CHECK(h("A5") == 6);
    CHECK(h("B4") == 8);
    CHECK(h("C4") == 8);
    CHECK(h("D5") == 8);
    CHECK(h("G2") == 6);
    CHECK(h("F4") == 12);
    CHECK(h("E6") == 12);
    CHECK(h("E7") == 18);
    CHECK(h("E8") == 30);
}

TEST_CASE("mixed-characteristic bounds and minimal faithful dimensions") {
    auto gc = [](const char* s) { return group_constants(DynkinType::parse(s)); };
    CHECK(gc("E6").mixed_char_bound == 27);
    CHECK(gc("E7").mixed_char_bound == 56);
    CHECK(gc("B3").mixed_char_bound == 7);
    CHECK(gc("C5").mixed_char_bound == 11);
    CHECK(gc("D6").mixed_char_bound == 13);
    CHECK(gc("A3").mixed_char_bound == 4);
    CHECK(gc("G2").mixed_char_bound == 6);
    CHECK(gc("F4").mixed_char_bound == 12);
    CHECK(gc("E8").mixed_char_bound == 30);

    CHECK(gc("A3").min_faithful_dim == 4);
    CHECK(gc("B3").min_faithful_dim == 7);
    CHECK(gc("C4").min_faithful_dim == 8);
    CHECK(gc("D5").min_faithful_dim == 10);
    CHECK(gc("G2").min_faithful_dim == 7);
    CHECK(gc("F4").min_faithful_dim == 26);
    CHECK(gc("E6").min_faithful_dim == 27);
    CHECK(gc("E7").min_faithful_dim == 56);
    CHECK(gc("E8").min_faithful_dim == 248);
}

TEST_CASE("coroot bookkeeping: highest coroot pairs to 2 with highest root") {
    for (const char* s : {"A2", "B2", "G2", "F4", "B3", "C3", "D4"}) {
        const RootSystem& rs = RootSystem::get(DynkinType::parse(s));
        std::vector<int> hc = rs.highest_coroot_coweight();
        long v = 0;
        for (int i = 0; i < rs.rank(); ++i) v += hc[i] * rs.highest()[i];
        CHECK(v == 2);
    }
}
