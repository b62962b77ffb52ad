#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "jetgroups/errors.hpp"
#include "jetgroups/numbers.hpp"
#include "jetgroups/partitions.hpp"
#include "test_support.hpp"

using namespace jetgroups;

namespace {

std::set<std::string> str_set(const std::vector<Partition>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(p.str());
    return out;
}

} // namespace

TEST_CASE("P_3 matches the explicit listing") {
    const auto p3 = enumerate_partitions(3);
    CHECK(p3.size() == 5);
    CHECK(str_set(p3) == std::set<std::string>{"1|2|3", "12|3", "2|13", "1|23", "123"});
}

TEST_CASE("P_1 and P_4 sizes") {
    const auto p1 = enumerate_partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].str() == "1");
    CHECK(enumerate_partitions(4).size() == 15);
}

TEST_CASE("enumeration matches brute-force set partitions up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<std::vector<std::vector<int>>> brute;
        test_support::brute_force_partitions(n, brute);
        std::set<std::string> expected;
        for (const auto& blocks : brute) expected.insert(Partition::from_blocks(n, blocks).str());
        CHECK(str_set(enumerate_partitions(n)) == expected);
        CHECK(Integer(static_cast<long>(expected.size())) == bell_number(n));
    }
}

TEST_CASE("enumeration order is deterministic and string-sorted") {
    const auto a = enumerate_partitions(5);
    const auto b = enumerate_partitions(5);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].str() < a[i].str());
}

TEST_CASE("enumeration bounds") {
    CHECK_THROWS_AS(enumerate_partitions(0), InputError);
    CHECK_THROWS_AS(enumerate_partitions(13), InputError);
}

TEST_CASE("partitions with a fixed size profile") {
    const auto two = partitions_with_sizes(3, Composition({1, 2}));
    CHECK(str_set(two) == std::set<std::string>{"2|13", "1|23"});

    const auto one = partitions_with_sizes(3, Composition({3}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].str() == "123");

    // brute-force filter of the full enumeration
    const auto three = partitions_with_sizes(4, Composition({1, 1, 2}));
    CHECK(three.size() == 3);
    std::set<std::string> filtered;
    for (const auto& p : enumerate_partitions(4))
        if (p.sizes().parts == std::vector<int>{1, 1, 2}) filtered.insert(p.str());
    CHECK(str_set(three) == filtered);

    CHECK_THROWS_AS(partitions_with_sizes(4, Composition({1, 2})), InputError);
}

TEST_CASE("count formula equals exhaustive enumeration for every profile, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        Integer total = 0;
        for (const auto& c : compositions_of(n)) {
            const Integer formula = count_with_sizes(c);
            total += formula;
            CHECK(formula == Integer(static_cast<long>(partitions_with_sizes(n, c).size())));
        }
        CHECK(total == bell_number(n));
    }
}

TEST_CASE("count formula examples") {
    CHECK(count_with_sizes(Composition({1, 2})) == 2);
    for (int n = 1; n <= 9; ++n) CHECK(count_with_sizes(Composition({n})) == 1);
    CHECK_THROWS_AS(count_with_sizes(Composition({})), InputError);

    // profiles (i,...,i,j) with m copies of i: (mi+j-1)!/(m!(i!)^m(j-1)!)
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int m = 1; m <= 3; ++m) {
                std::vector<int> parts(static_cast<std::size_t>(m), i);
                parts.push_back(j);
                Integer denom = factorial(m) * factorial(j - 1);
                for (int t = 0; t < m; ++t) denom *= factorial(i);
                Integer expected = factorial(m * i + j - 1);
                mpz_divexact(expected.get_mpz_t(), expected.get_mpz_t(), denom.get_mpz_t());
                CHECK(count_with_sizes(Composition(parts)) == expected);
            }
}

TEST_CASE("derived partitions of 2|13") {
    const Partition p = Partition::from_blocks(3, {{2}, {1, 3}});
    const auto derived = derived_partitions(p);
    REQUIRE(derived.size() == 3);
    CHECK(derived[0].str() == "1|3|24");
    CHECK(derived[1].str() == "3|124");
    CHECK(derived[2].str() == "13|24");
}

TEST_CASE("derived partitions of the singleton give P_2") {
    const auto derived = derived_partitions(Partition::from_blocks(1, {{1}}));
    CHECK(str_set({derived.begin(), derived.end()}) == str_set(enumerate_partitions(2)));
}

TEST_CASE("derivation from P_n tiles P_{n+1} exactly once, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::multiset<std::string> derived;
        for (const auto& p : enumerate_partitions(n))
            for (const auto& d : derived_partitions(p)) derived.insert(d.str());
        std::multiset<std::string> next;
        for (const auto& p : enumerate_partitions(n + 1)) next.insert(p.str());
        CHECK(derived == next);
    }
}

TEST_CASE("parent partition undoes derivation") {
    CHECK(parent_partition(Partition::from_blocks(3, {{2}, {1, 3}})).str() == "1|2");

    const Partition chain =
        Partition::from_blocks(5, {{1}, {2}, {3}, {4}, {5}});
    CHECK(parent_partition(chain).str() == "1|2|3|4");

    for (const auto& p : enumerate_partitions(5))
        for (const auto& d : derived_partitions(p)) CHECK(parent_partition(d) == p);
}

TEST_CASE("canonical form sorts blocks by ascending maximum") {
    const Partition p = Partition::from_blocks(4, {{2, 4}, {1}, {3}});
    CHECK(p.str() == "1|3|24");
    for (int n = 1; n <= 7; ++n)
        for (const auto& q : enumerate_partitions(n)) {
            int last = 0;
            for (int r = 0; r < q.length(); ++r) {
                CHECK(q.block(r).back() > last);
                last = q.block(r).back();
            }
        }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition::from_blocks(3, {{1, 2}}), InputError);          // missing 3
    CHECK_THROWS_AS(Partition::from_blocks(3, {{1, 2}, {2, 3}}), InputError);  // overlap
    CHECK_THROWS_AS(Partition::from_blocks(3, {{1, 2, 3}, {}}), InputError);   // empty block
    CHECK_THROWS_AS(Partition::from_blocks(2, {{1, 2, 3}}), InputError);       // out of range
}

TEST_CASE("serialization uses comma form beyond nine elements") {
    std::vector<std::vector<int>> blocks{{2}, {1, 10}};
    for (int e = 3; e <= 9; ++e) blocks.push_back({e});
    const Partition p = Partition::from_blocks(10, blocks);
    CHECK(p.str() == "2|3|4|5|6|7|8|9|1,10");

    const Partition q = Partition::from_blocks(3, {{2}, {1, 3}});
    CHECK(q.str() == "2|13");
}

TEST_CASE("compositions of n") {
    CHECK(compositions_of(1).size() == 1);
    CHECK(compositions_of(4).size() == 8);
    for (const auto& c : compositions_of(5)) CHECK(c.sum() == 5);
    CHECK_THROWS_AS(Composition({1, 0}), InputError);
}
