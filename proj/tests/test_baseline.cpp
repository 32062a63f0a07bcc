#include <cbfs/baseline.hpp>
#include <cbfs/oracle.hpp>

#include "support/brute.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>
#include <vector>

using cbfs::Word;
using cbfs::testing::strs;

TEST(ZeroRunTable, SmallValues) {
    EXPECT_EQ(cbfs::f_count(2, 3, 1), 3);
    EXPECT_EQ(cbfs::f_count(2, 3, 2), 8);
    EXPECT_EQ(cbfs::f_count(2, 3, 0), 1);
    EXPECT_THROW(cbfs::ZeroRunAvoidanceTable(0, 3, 4), std::domain_error);
    EXPECT_THROW(cbfs::ZeroRunAvoidanceTable(2, 3, 4)(5), std::out_of_range);
}

TEST(ZeroRunTable, RunOfOneMeansNoZeros) {
    for (std::size_t n = 0; n <= 10; ++n) {
        cbfs::count_t expected = 1;
        for (std::size_t i = 0; i < n; ++i) expected *= 4;
        EXPECT_EQ(cbfs::f_count(1, 5, n), expected);
    }
}

TEST(ZeroRunTable, AgreesWithSubstringFilter) {
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::uint32_t q = 2; q <= 3; ++q) {
            for (std::size_t n = 0; n <= 10; ++n) {
                const std::string forbidden(k, '0');
                cbfs::count_t hits = 0;
                for (const auto& w : cbfs::testing::all_words(q, n)) {
                    if (w.str().find(forbidden) == std::string::npos) ++hits;
                }
                ASSERT_EQ(cbfs::f_count(k, q, n), hits) << k << "," << q << "," << n;
            }
        }
    }
}

TEST(ZeroRunTable, OverflowIsAnError) {
    EXPECT_THROW(cbfs::f_count(3, 65536, 20), std::overflow_error);
}

TEST(BaselineSet, SmallListing) {
    const auto s = cbfs::construct_baseline_set(2, 3, 4);
    EXPECT_EQ(strs(s.words()), (std::vector<std::string>{"0011", "0012", "0021", "0022"}));
    EXPECT_EQ(s.count(cbfs::origin::baseline), 4u);
    EXPECT_EQ(cbfs::construct_baseline_set(2, 3, 5).size(), 12u);
}

TEST(BaselineSet, DomainErrors) {
    EXPECT_THROW(cbfs::construct_baseline_set(0, 3, 5), std::domain_error);
    EXPECT_THROW(cbfs::construct_baseline_set(4, 3, 5), std::domain_error);
    EXPECT_THROW(cbfs::construct_baseline_set(1, 3, 2), std::domain_error);
    EXPECT_NO_THROW(cbfs::construct_baseline_set(1, 3, 3));
}

TEST(BaselineSet, MatchesPropertiesAndSizeFormula) {
    for (std::uint32_t q = 3; q <= 4; ++q) {
        for (std::size_t n = 3; n <= 8; ++n) {
            for (std::size_t k = 1; k + 2 <= n; ++k) {
                std::vector<std::string> filtered;
                const std::string forbidden(k, '0');
                for (const auto& w : cbfs::testing::all_words(q, n)) {
                    const std::string s = w.str();
                    const bool head = s.substr(0, k) == forbidden && s[k] != '0' && s.back() != '0';
                    const bool middle = s.substr(k + 1, n - k - 2).find(forbidden) == std::string::npos;
                    if (head && middle) filtered.push_back(s);
                }
                const auto built = cbfs::construct_baseline_set(k, q, n);
                ASSERT_EQ(strs(built.words()), filtered) << k << "," << q << "," << n;
                ASSERT_EQ(cbfs::baseline_size(k, q, n), built.size());
            }
        }
    }
}

TEST(BaselineSet, CrossBifixFreeForTernary) {
    for (std::size_t n = 3; n <= 7; ++n) {
        for (std::size_t k = 1; k + 2 <= n; ++k) {
            const auto s = cbfs::construct_baseline_set(k, 3, n);
            for (std::size_t i = 0; i < s.size(); ++i) {
                ASSERT_TRUE(cbfs::testing::naive_is_bifix_free(s[i])) << s[i].str();
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    ASSERT_TRUE(cbfs::testing::naive_cross_bifix_free(s[i], s[j]));
                }
            }
        }
    }
}

TEST(BaselineOptimum, TableValues) {
    EXPECT_EQ(cbfs::s_max(7, 3).size, 88);
    EXPECT_EQ(cbfs::s_max(16, 6).size, cbfs::count_t(41381640625ULL));
    EXPECT_EQ(cbfs::s_star(4, 3).size, 8);
    EXPECT_EQ(cbfs::s_star(5, 4).size, 81);
    EXPECT_EQ(cbfs::s_star(4, 3).run, 1u);
}

TEST(BaselineOptimum, EmptyRangeIsAnError) {
    EXPECT_THROW(cbfs::s_max(3, 3), std::domain_error);
    EXPECT_THROW(cbfs::s_star(2, 3), std::domain_error);
    EXPECT_EQ(cbfs::s_star(3, 3).size, 4);
}

TEST(BaselineOptimum, SmallestMaximizerAndDominance) {
    for (std::uint32_t q = 2; q <= 7; ++q) {
        for (std::size_t n = 4; n <= 20; ++n) {
            const auto s = cbfs::s_max(n, q);
            const auto star = cbfs::s_star(n, q);
            ASSERT_GE(star.size, s.size);
            for (std::size_t k = 2; k < s.run; ++k) ASSERT_LT(cbfs::baseline_size(k, q, n), s.size);
            for (std::size_t k = 2; k + 2 <= n; ++k) ASSERT_LE(cbfs::baseline_size(k, q, n), s.size);
            ASSERT_EQ(cbfs::baseline_size(s.run, q, n), s.size);
        }
    }
}
