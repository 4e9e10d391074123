#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "sqdyn/scan.hpp"

using namespace sqdyn;
using namespace sqdyn::scan;

namespace {

std::size_t lines_with(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
    return n;
}

}  // namespace

TEST(Scan, MonicQuadraticsOverF7) {
    ScanConfig cfg;
    cfg.field = "7";
    const auto out = run_scan(cfg);
    EXPECT_EQ(out.summary.at("items"), 49);
    EXPECT_EQ(lines_with(out.jsonl, "\"check\":\"classify\""), 49u);
}

TEST(Scan, SampleIsReproducible) {
    const auto a = sample_indices(343, 100, 1), b = sample_indices(343, 100, 1);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.size(), 100u);
    EXPECT_EQ(std::set<std::uint64_t>(a.begin(), a.end()).size(), 100u);
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
    EXPECT_LT(a.back(), 343u);
    EXPECT_NE(a, sample_indices(343, 100, 2));
}

TEST(Scan, SampleCoversSmallSpaces) {
    EXPECT_EQ(sample_indices(5, 9, 3), (std::vector<std::uint64_t>{0, 1, 2, 3, 4}));
}

TEST(Scan, WorkerCountDoesNotChangeBytes) {
    ScanConfig cfg;
    cfg.field = "11";
    cfg.checks = parse_checks("all");
    cfg.depth = 4;
    const auto one = run_scan(cfg);
    cfg.workers = 4;
    const auto four = run_scan(cfg);
    EXPECT_EQ(one.jsonl, four.jsonl);
    EXPECT_EQ(one.csv, four.csv);
    EXPECT_EQ(one.summary.dump(), four.summary.dump());
    EXPECT_FALSE(one.internal_failure);
}

TEST(Scan, PolyAtEnumeratesLeadingCoefficients) {
    const auto F = ff::Field::make(5);
    EXPECT_EQ(poly_at(F, 2, Space::Monic, 7).to_string(), "2,1,1");
    EXPECT_EQ(poly_at(F, 2, Space::All, 25 * 3 + 7).to_string(), "2,1,4");
    EXPECT_EQ(space_size(5, 2, Space::All), 100u);
}

TEST(Scan, ParseChecks) {
    const auto c = parse_checks("weil,ratios");
    EXPECT_FALSE(c.classification);
    EXPECT_TRUE(c.weil);
    EXPECT_TRUE(c.ratios);
    EXPECT_THROW(parse_checks("bogus"), Error);
    EXPECT_THROW(parse_space("half"), Error);
}

TEST(Scan, RatioRowsOnlyForTwoOrdinary) {
    ScanConfig cfg;
    cfg.field = "7";
    cfg.checks = parse_checks("ratios");
    const auto out = run_scan(cfg);
    EXPECT_EQ(lines_with(out.jsonl, "\"check\":\"ratios\""),
              out.summary.at("classification").at("two_ordinary").get<std::size_t>());
    EXPECT_GT(out.summary.at("ratios").at("exponent_5_6").at("run").at("value").get<double>(), 0.0);
}
