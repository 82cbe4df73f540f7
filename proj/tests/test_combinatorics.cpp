#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symdecomp/combinatorics.hpp"
#include "symdecomp/oracle.hpp"

using namespace symdecomp;

TEST_CASE("partitions_of enumerates in reverse-lexicographic order") {
    auto p1 = partitions_of(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].parts() == std::vector<int>{1});

    auto p4 = partitions_of(4);
    std::vector<std::vector<int>> expect{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    REQUIRE(p4.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(p4[i].parts() == expect[i]);

    auto p7 = partitions_of(7);
    Partition target({3, 2, 1, 1});
    CHECK(std::find(p7.begin(), p7.end(), target) != p7.end());

    CHECK_THROWS_AS(partitions_of(0), std::invalid_argument);
    CHECK_THROWS_AS(partitions_of(-3), std::invalid_argument);
}

TEST_CASE("enumerate_tableaux counts and canonical order") {
    auto row = enumerate_tableaux(Partition({5}));
    REQUIRE(row.size() == 1);
    CHECK(row[0].rows()[0] == std::vector<int>{1, 2, 3, 4, 5});

    CHECK(enumerate_tableaux(Partition({3, 1})).size() == 3);
    CHECK(enumerate_tableaux(Partition({2, 2})).size() == 2);

    // canonical order is lexicographic on content vectors
    auto tabs = enumerate_tableaux(Partition({3, 1}));
    for (std::size_t i = 0; i + 1 < tabs.size(); ++i)
        CHECK(content_of(tabs[i]) < content_of(tabs[i + 1]));
}

TEST_CASE("tableau_count matches enumeration and the regular-representation identity") {
    CHECK(tableau_count(Partition({4})) == 1);
    CHECK(tableau_count(Partition({3, 1})) == 3);
    CHECK(tableau_count(Partition({3, 2, 1})) == 16);

    for (int n = 1; n <= 8; ++n) {
        std::uint64_t sum = 0;
        for (const auto& lam : partitions_of(n)) {
            std::uint64_t d = tableau_count(lam);
            if (n <= 7) CHECK(enumerate_tableaux(lam).size() == d);
            sum += d * d;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("content_of on the worked example and extreme shapes") {
    StandardTableau t(Partition({3, 2, 1, 1}), {{1, 2, 6}, {3, 5}, {4}, {7}});
    CHECK(content_of(t).entries == std::vector<int>{0, 1, -1, -2, 0, 2, -3});

    auto rowt = enumerate_tableaux(Partition({6}))[0];
    CHECK(content_of(rowt).entries == std::vector<int>{0, 1, 2, 3, 4, 5});

    auto colt = enumerate_tableaux(Partition({1, 1, 1, 1}))[0];
    CHECK(content_of(colt).entries == std::vector<int>{0, -1, -2, -3});
}

TEST_CASE("is_valid_content") {
    CHECK(is_valid_content({0}).ok);
    CHECK_FALSE(is_valid_content({1, 0}).ok);
    CHECK_FALSE(is_valid_content({0, 0}).ok);
    CHECK(is_valid_content({0, 1, -1, -2, 0, 2, -3}).ok);
}

TEST_CASE("tableau_of inverts content_of") {
    ContentVector c{{0, 1, -1, -2, 0, 2, -3}};
    StandardTableau expect(Partition({3, 2, 1, 1}), {{1, 2, 6}, {3, 5}, {4}, {7}});
    CHECK(tableau_of(c) == expect);

    CHECK(tableau_of(ContentVector{{0, 1, 2}}).rows()[0] == std::vector<int>{1, 2, 3});

    ContentVector bad{{0, 5}};
    CHECK_THROWS_AS(tableau_of(bad), validation_error);

    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& t : enumerate_tableaux(lam)) {
                auto c2 = content_of(t);
                CHECK(is_valid_content(c2.entries).ok);
                CHECK(tableau_of(c2) == t);
                CHECK(partition_of_content(c2) == lam);
            }
}

TEST_CASE("partition_of_content implements the content-to-partition conversion") {
    CHECK(partition_of_content(ContentVector{{0, 1, -1, -2, 0, 2, -3}}).parts() ==
          std::vector<int>({3, 2, 1, 1}));
    CHECK(partition_of_content(ContentVector{{0, 1, 2, 3}}).parts() == std::vector<int>({4}));
    CHECK(partition_of_content(ContentVector{{0, -1, 1, 2}}).parts() == std::vector<int>({3, 1}));
}
