#include "eyd/excited.hpp"
#include "eyd/partition.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace eyd;

namespace {

std::multiset<int> complement_contents(const SkewShape& s, const Diagram& D) {
    std::multiset<int> out;
    for (Cell d : s.outer().cells())
        if (!D.contains(d)) out.insert(content(d));
    return out;
}

}  // namespace

TEST_CASE("diagram canonical form") {
    Diagram d({{2, 1}, {1, 1}, {1, 2}});
    CHECK(d.cells() == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(d.str() == "(1,1) (1,2) (2,1)");
    CHECK(d.contains({2, 1}));
    CHECK_FALSE(d.contains({2, 2}));
    CHECK(Diagram::of(Partition({2, 1})) == d);
    CHECK_THROWS(Diagram({{1, 1}, {1, 1}}));
}

TEST_CASE("elementary excitation conditions") {
    const Partition la({3, 3, 2, 1});
    const Diagram D = Diagram::of(Partition({2, 1}));  // (1,1) (1,2) (2,1)

    // (1,2) -> (2,3): (2,2), (1,3), (2,3) are free and (2,3) is in lambda.
    CHECK(can_excite(D, {1, 2}, la));
    // (1,1) -> (2,2) blocked by (1,2) in D.
    CHECK_FALSE(can_excite(D, {1, 1}, la));
    // (2,1) -> (3,2): free cells, inside lambda.
    CHECK(can_excite(D, {2, 1}, la));
    CHECK_THROWS_AS(can_excite(D, Cell{3, 3}, la), CellNotInDiagram);

    const Diagram D2 = excite(D, {1, 2}, la);
    CHECK(D2 == Diagram({{1, 1}, {2, 1}, {2, 3}}));
    CHECK_THROWS_AS(excite(D, Cell{1, 1}, la), ExcitationNotApplicable);

    // (4,1) exists in lambda but (3,2) -> (4,2) does not: (4,2) outside lambda.
    const Diagram D3({{1, 1}, {2, 1}, {3, 2}});
    CHECK_FALSE(can_excite(D3, {3, 2}, la));
}

TEST_CASE("excited diagram counts from worked examples") {
    CHECK(enumerate_eyd(SkewShape::parse("3,3,2,1/2,1")).size() == 5);
    CHECK(enumerate_eyd(SkewShape::parse("5,5,3/3,2,1")).size() == 5);
}

TEST_CASE("excited diagrams of 3,3,2,1/2,1 are the expected five") {
    const auto eyds = enumerate_eyd(SkewShape::parse("3,3,2,1/2,1"));
    const std::set<Diagram> got(eyds.begin(), eyds.end());
    const std::set<Diagram> expect{
        Diagram({{1, 1}, {1, 2}, {2, 1}}), Diagram({{1, 1}, {2, 1}, {2, 3}}),
        Diagram({{1, 1}, {1, 2}, {3, 2}}), Diagram({{1, 1}, {2, 3}, {3, 2}}),
        Diagram({{2, 2}, {2, 3}, {3, 2}})};
    CHECK(got == expect);
}

TEST_CASE("trivial closures") {
    CHECK(enumerate_eyd(SkewShape(Partition({3, 2}))).size() == 1);  // empty diagram
    CHECK(enumerate_eyd(SkewShape(Partition())).size() == 1);
    // mu = lambda cannot move anywhere.
    CHECK(enumerate_eyd(SkewShape(Partition({3, 2}), Partition({3, 2}))).size() == 1);
    // A full-width first row cannot be excited.
    CHECK(enumerate_eyd(SkewShape(Partition({2, 2}), Partition({2}))).size() == 1);
}

TEST_CASE("every excited diagram keeps the size of mu") {
    for (const Partition& la : partitions_up_to(7)) {
        for (const Partition& mu : subpartitions(la)) {
            const SkewShape s(la, mu);
            for (const Diagram& D : enumerate_eyd(s)) CHECK(D.size() == mu.size());
        }
    }
}

TEST_CASE("complement content multiset is excitation-invariant") {
    for (const Partition& la : partitions_up_to(7)) {
        for (const Partition& mu : subpartitions(la)) {
            const SkewShape s(la, mu);
            const auto eyds = enumerate_eyd(s);
            const auto reference = complement_contents(s, eyds.front());
            for (const Diagram& D : eyds) {
                CAPTURE(s.str());
                CAPTURE(D.str());
                CHECK(complement_contents(s, D) == reference);
            }
        }
    }
}

TEST_CASE("closure is independent of exploration order") {
    for (const Partition& la : partitions_up_to(8)) {
        for (const Partition& mu : subpartitions(la)) {
            const SkewShape s(la, mu);
            CHECK(enumerate_eyd(s, ClosureOrder::Bfs) == enumerate_eyd(s, ClosureOrder::Dfs));
        }
    }
}

TEST_CASE("excited diagrams stay inside lambda and above the skew cells") {
    // Cells of an excited diagram always lie in lambda; the original diagram
    // of mu is among the results; all diagrams are distinct.
    for (const Partition& la : partitions_up_to(6)) {
        for (const Partition& mu : subpartitions(la)) {
            const SkewShape s(la, mu);
            const auto eyds = enumerate_eyd(s);
            std::set<Diagram> uniq(eyds.begin(), eyds.end());
            CHECK(uniq.size() == eyds.size());
            CHECK(uniq.count(Diagram::of(mu)) == 1);
            for (const Diagram& D : eyds)
                for (Cell d : D.cells()) CHECK(la.has_cell(d));
        }
    }
}
