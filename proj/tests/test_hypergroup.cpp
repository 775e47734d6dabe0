#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "hyperhall/hypergroup.hpp"

using namespace hyperhall;

namespace {

RawHypergroup k2_raw()
{
    return {2, {0, 1}, {{0}, {1}, {1}, {0, 1}}};
}

RawHypergroup c2_raw()
{
    return {2, {0, 1}, {{0}, {1}, {1}, {0}}};
}

// S3 fixture order: e, r, r^2, s, rs, r^2s. Index 3 is a transposition, {0,1,2} is A3.
FiniteHypergroup s3()
{
    return fixtures::hypergroup("groups/s3.cayley");
}

} // namespace

TEST_CASE("ElementSet basics")
{
    ElementSet s{3, 0, 5};
    CHECK(s.size() == 3);
    CHECK(s.first() == 0);
    CHECK(s.last() == 5);
    CHECK(s.members() == std::vector<int>{0, 3, 5});
    CHECK(s.to_string() == "{0,3,5}");
    CHECK(ElementSet{}.to_string() == "{}");
    CHECK(ElementSet{}.first() == -1);
    CHECK(ElementSet::full(64).size() == 64);
    CHECK(ElementSet::full(3) == ElementSet{0, 1, 2});
    CHECK((s - ElementSet{0}) == ElementSet{3, 5});
    CHECK(ElementSet{0, 3}.subset_of(s));
    CHECK_FALSE(ElementSet{1}.intersects(s));
    ElementSet big{63};
    CHECK(big.contains(63));
    std::ostringstream out;
    out << ElementSet{1, 2};
    CHECK(out.str() == "{1,2}");
}

TEST_CASE("canonical order: size, then members lexicographically")
{
    CHECK(canonical_less(ElementSet{5}, ElementSet{0, 1}));
    CHECK(canonical_less(ElementSet{0, 1}, ElementSet{0, 2}));
    CHECK(canonical_less(ElementSet{0, 2, 9}, ElementSet{0, 3, 4}));
    CHECK_FALSE(canonical_less(ElementSet{0, 3}, ElementSet{0, 3}));
    CHECK(canonical_less(ElementSet{1, 63}, ElementSet{2, 3}));
}

TEST_CASE("validate accepts C2 and K2")
{
    CHECK(validate(c2_raw()).valid);
    auto report = validate(k2_raw());
    CHECK(report.valid);
    CHECK(report.violations.empty());
}

TEST_CASE("validate: K2 with 1.1 = {1} breaks H3 at 1 not in s*s")
{
    auto raw = k2_raw();
    raw.products[3] = {1};
    auto report = validate(raw);
    CHECK_FALSE(report.valid);
    REQUIRE(report.violates(Axiom::H3));
    CHECK_FALSE(report.violates(Axiom::H2));
    CHECK_THROWS_AS(FiniteHypergroup::create(raw), ValidationError);
}

TEST_CASE("validate: every single-entry mutation of K2")
{
    // Each cell of the rank-2 table has three possible values; the two non-original ones
    // are the mutations. Only 1.1 = {0} (giving C2) is again a hypergroup.
    const std::vector<std::vector<int>> values{{0}, {1}, {0, 1}};
    const Axiom expected_by_cell[4] = {Axiom::H2, Axiom::Unit, Axiom::H2, Axiom::H3};
    int rejected = 0;
    for (int cell = 0; cell < 4; ++cell)
        for (const auto& v : values) {
            auto raw = k2_raw();
            if (raw.products[cell] == v)
                continue;
            raw.products[cell] = v;
            auto report = validate(raw);
            CAPTURE(cell);
            CAPTURE(v.size());
            if (cell == 3 && v == std::vector<int>{0}) {
                CHECK(report.valid);
                continue;
            }
            CHECK_FALSE(report.valid);
            CHECK(report.violates(expected_by_cell[cell]));
            ++rejected;
        }
    CHECK(rejected == 7);
}

TEST_CASE("validate: violations carry the first witness, unused slots -1")
{
    auto raw = k2_raw();
    raw.products[1] = {0}; // 0.1 = {0}
    auto report = validate(raw);
    REQUIRE(report.violates(Axiom::Unit));
    for (const auto& v : report.violations)
        if (v.axiom == Axiom::Unit) {
            CHECK(v.witness[0] == 0);
            CHECK(v.witness[1] == 1);
            CHECK(v.witness[2] == -1);
        }
}

TEST_CASE("validate: star must be an involution fixing 0")
{
    RawHypergroup raw{3, {0, 1, 1}, {{0}, {1}, {2}, {1}, {2}, {0}, {2}, {0}, {1}}};
    CHECK(validate(raw).violates(Axiom::Star));
    raw.star = {1, 0, 2};
    CHECK(validate(raw).violates(Axiom::Star));
}

TEST_CASE("validate: H1 failure")
{
    // 1.1 = {2}, 2.2 = {0}, 1.2 = 2.1 = {1}: (1.1).2 = {0} but 1.(1.2) = {2}.
    RawHypergroup raw{3, {0, 1, 2}, {{0}, {1}, {2}, {1}, {2}, {1}, {2}, {1}, {0}}};
    auto report = validate(raw);
    CHECK_FALSE(report.valid);
    CHECK(report.violates(Axiom::H1));
}

TEST_CASE("validate: malformed input is a structural error")
{
    auto raw = k2_raw();
    raw.products[2] = {};
    CHECK_THROWS_AS(validate(raw), StructuralError);
    raw = k2_raw();
    raw.products[2] = {2};
    CHECK_THROWS_AS(validate(raw), StructuralError);
    raw = k2_raw();
    raw.star = {0, 2};
    CHECK_THROWS_AS(validate(raw), StructuralError);
    raw = k2_raw();
    raw.products.pop_back();
    CHECK_THROWS_AS(validate(raw), StructuralError);
    CHECK_THROWS_AS(validate(RawHypergroup{0, {}, {}}), StructuralError);
    CHECK_THROWS_AS(validate(RawHypergroup{65, {}, {}}), StructuralError);
}

TEST_CASE("every converted Cayley table validates")
{
    for (const auto& f : fixtures::corpus(64)) {
        if (!f.group)
            continue;
        CAPTURE(f.path);
        CHECK(validate(f.doc.hypergroup).valid);
    }
}

TEST_CASE("complex_product")
{
    auto k2 = FiniteHypergroup::create(k2_raw());
    CHECK(complex_product(k2, {1}, {1}) == ElementSet{0, 1});
    CHECK(complex_product(k2, {}, {1}).empty());
    auto g = s3();
    for (int s = 0; s < 64; ++s) {
        ElementSet set(static_cast<std::uint64_t>(s));
        CHECK(complex_product(g, {0}, set) == set);
    }
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(complex_product(g, ElementSet{a}, ElementSet{b}).size() == 1);
    CHECK(complex_product(g, {1}, {1}) == ElementSet{2});
}

TEST_CASE("star_set")
{
    auto k2 = FiniteHypergroup::create(k2_raw());
    CHECK(star_set(k2, {0}) == ElementSet{0});
    CHECK(star_set(k2, {0, 1}) == ElementSet{0, 1});
    auto g = s3();
    CHECK(star_set(g, {3}) == ElementSet{3});
    CHECK(star_set(g, {1}) == ElementSet{2});
}

TEST_CASE("closure and is_closed")
{
    auto k2 = FiniteHypergroup::create(k2_raw());
    CHECK(closure(k2, {}) == ElementSet{0});
    CHECK(closure(k2, {1}) == ElementSet{0, 1});
    auto g = s3();
    CHECK(closure(g, {3}) == ElementSet{0, 3});
    CHECK(closure(g, {1}) == ElementSet{0, 1, 2});
    CHECK(closure(g, {1, 3}) == g.elements());
    CHECK(is_closed(g, {0}));
    CHECK(is_closed(g, {0, 1, 2}));
    CHECK_FALSE(is_closed(g, {0, 1}));
    CHECK_FALSE(is_closed(g, {}));
    CHECK_FALSE(is_closed(k2, {1}));
    CHECK_THROWS_AS(require_closed(g, {0, 1}, "test"), PreconditionError);
}

TEST_CASE("sub_hypergroup")
{
    auto g = s3();
    auto trivial = sub_hypergroup(g, {0});
    CHECK(trivial.hypergroup.rank() == 1);
    auto whole = sub_hypergroup(g, g.elements());
    CHECK(whole.hypergroup == g);
    auto a3 = sub_hypergroup(g, {0, 1, 2});
    CHECK(a3.hypergroup.rank() == 3);
    CHECK(a3.members == std::vector<int>{0, 1, 2});
    CHECK(a3.hypergroup.product(1, 1) == ElementSet{2});
    auto t = sub_hypergroup(g, {0, 4});
    CHECK(t.members == std::vector<int>{0, 4});
    CHECK(t.local_index[4] == 1);
    CHECK(t.local_index[3] == -1);
    CHECK(t.to_ambient({1}) == ElementSet{4});
    CHECK(t.to_local({0, 4}) == ElementSet{0, 1});
    CHECK_THROWS_AS(sub_hypergroup(g, {0, 1}), PreconditionError);
}

TEST_CASE("hypergroup value semantics")
{
    auto a = FiniteHypergroup::create(k2_raw());
    auto b = FiniteHypergroup::create(k2_raw());
    CHECK(a == b);
    CHECK_FALSE(a == FiniteHypergroup::create(c2_raw()));
    auto raw = a.to_raw();
    CHECK(raw.products[3] == std::vector<int>{0, 1});
    CHECK(raw.star == std::vector<int>{0, 1});
    CHECK(std::string(to_string(Axiom::Star)) == "STAR");
    CHECK(std::string(to_string(Axiom::Unit)) == "UNIT");
}
