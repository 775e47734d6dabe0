#include <doctest.h>

#include "fixtures.hpp"
#include "hyperhall/lattice.hpp"
#include "oracle/groups.hpp"

using namespace hyperhall;

namespace {

FiniteHypergroup k2()
{
    return fixtures::hypergroup("k2.hg");
}

// e, r, r^2, s, rs, r^2s
FiniteHypergroup s3()
{
    return fixtures::hypergroup("groups/s3.cayley");
}

// rotations 0..3, reflections 4..7; centre {0,2}
FiniteHypergroup d4()
{
    return fixtures::hypergroup("groups/d4.cayley");
}

const ElementSet kA3{0, 1, 2};
const ElementSet kT{0, 3};

} // namespace

TEST_CASE("closed_subsets: K2 and C2")
{
    auto lk = closed_subsets(k2());
    CHECK(lk.subsets() == std::vector<ElementSet>{{0}, {0, 1}});
    auto lc = closed_subsets(fixtures::hypergroup("groups/c2.cayley"));
    CHECK(lc.subsets() == std::vector<ElementSet>{{0}, {0, 1}});
}

TEST_CASE("closed_subsets: S3 has the six subgroups in canonical order")
{
    auto l = closed_subsets(s3());
    REQUIRE(l.size() == 6);
    CHECK(l.subsets() == std::vector<ElementSet>{{0}, {0, 3}, {0, 4}, {0, 5}, kA3, ElementSet::full(6)});
    CHECK(l.bottom() == 0);
    CHECK(l.subset(l.top()) == ElementSet::full(6));
    CHECK(l.find({0, 1}) == std::nullopt);
    CHECK(l.index_of(kA3) == 4);
    CHECK_THROWS_AS(l.index_of({0, 1}), PreconditionError);
}

TEST_CASE("closed_subsets agrees with the oracle's subgroup scan on every group fixture")
{
    for (const auto& g : oracle::small_groups()) {
        CAPTURE(g.name);
        auto h = fixtures::hypergroup("groups/" + g.name + ".cayley");
        std::vector<ElementSet> expected;
        for (auto m : oracle::subgroups(g))
            expected.push_back(ElementSet(m));
        CHECK(closed_subsets(h).subsets() == expected);
    }
}

TEST_CASE("closed_subsets: rank cap")
{
    auto a5 = fixtures::hypergroup("groups/a5.cayley");
    CHECK_THROWS_AS(closed_subsets(a5), RankCapError);
    CHECK(closed_subsets(a5, {60}).size() == 59);
    try {
        closed_subsets(a5);
    } catch (const RankCapError& e) {
        CHECK(e.rank == 60);
        CHECK(e.cap == kDefaultRankCap);
    }
}

TEST_CASE("is_normal")
{
    auto g = s3();
    auto all = g.elements();
    CHECK(is_normal(g, {0}, all));
    CHECK(is_normal(g, kA3, all));
    CHECK_FALSE(is_normal(g, kT, all));
    CHECK(is_normal(g, kT, kT));
    CHECK_THROWS_AS(is_normal(g, kT, kA3), PreconditionError);
    CHECK_THROWS_AS(is_normal(g, {0, 1}, all), PreconditionError);
}

TEST_CASE("is_strongly_normal")
{
    auto g = s3();
    auto all = g.elements();
    CHECK(is_strongly_normal(g, all, all));
    CHECK(is_strongly_normal(g, kA3, all));
    CHECK_FALSE(is_strongly_normal(g, kT, all));
    auto k = k2();
    CHECK_FALSE(is_strongly_normal(k, {0}, k.elements()));
    CHECK(is_normal(k, {0}, k.elements()));
}

TEST_CASE("lattice relations")
{
    auto l = closed_subsets(s3());
    const int a3 = l.index_of(kA3);
    const int t = l.index_of(kT);
    CHECK(l.normal_in(a3, l.top()));
    CHECK(l.strongly_normal_in(a3, l.top()));
    CHECK_FALSE(l.normal_in(t, l.top()));
    CHECK_FALSE(l.normal_in(t, a3)); // incomparable
    CHECK(l.subnormal(a3));
    CHECK_FALSE(l.subnormal(t));
    CHECK(l.subnormal(0));
    for (int i = 0; i < l.size(); ++i)
        for (int j = 0; j < l.size(); ++j) {
            if (l.strongly_normal_in(i, j))
                CHECK(l.normal_in(i, j));
            if (l.normal_in(i, j))
                CHECK(l.includes(i, j));
        }
    // {0} in all six, each order-2 subgroup in itself, A3 in A3 and S3, S3 in itself.
    CHECK(l.normal_pair_count() == 12);
    CHECK(l.strongly_normal_pair_count() == 12);
}

TEST_CASE("is_subnormal")
{
    auto g = s3();
    auto l = closed_subsets(g);
    auto same = is_subnormal(l, kA3, kA3);
    REQUIRE(same);
    CHECK(*same == std::vector<ElementSet>{kA3});
    CHECK_FALSE(is_subnormal(l, kT, g.elements()));
    CHECK(is_subnormal(l, {0}, kT));

    auto h = d4();
    auto ld = closed_subsets(h);
    for (ElementSet e : {ElementSet{0, 4}, ElementSet{0, 6}, ElementSet{0, 5}, ElementSet{0, 7}}) {
        CAPTURE(e);
        auto chain = is_subnormal(ld, e, h.elements());
        REQUIRE(chain);
        CHECK(chain->size() == 3);
        CHECK(chain->front() == e);
        CHECK(chain->back() == h.elements());
        for (std::size_t i = 1; i < chain->size(); ++i)
            CHECK(is_normal(h, (*chain)[i - 1], (*chain)[i]));
    }
    // The centre is normal, so the shortest chain has a single step.
    auto centre = is_subnormal(ld, {0, 2}, h.elements());
    REQUIRE(centre);
    CHECK(centre->size() == 2);
    CHECK_THROWS_AS(is_subnormal(ld, {0, 4}, {0, 5, 2, 7}), PreconditionError);
}

TEST_CASE("product_closed")
{
    auto g = s3();
    CHECK(product_closed(g, {0}, kT) == kT);
    CHECK(product_closed(g, kA3, kT) == g.elements());
    CHECK(product_closed(g, kT, kT) == kT);
    CHECK_THROWS_AS(product_closed(g, kT, ElementSet{0, 4}), PreconditionError);
}

TEST_CASE("intersect")
{
    auto g = s3();
    CHECK(intersect(g, kA3, kA3) == kA3);
    CHECK(intersect(g, kA3, kT) == ElementSet{0});
    CHECK(intersect(g, kT, {0}) == ElementSet{0});
}
