#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "circulant/dot.hpp"
#include "circulant/io.hpp"

namespace circulant {
namespace {

std::size_t edge_lines(const std::string& dot) {
    std::istringstream in(dot);
    std::size_t count = 0;
    for (std::string line; std::getline(in, line);) {
        count += line.find(" -- ") != std::string::npos;
    }
    return count;
}

TEST(Dot, EdgeMultisetLines) {
    const DistanceSet d({1, 3});
    EXPECT_EQ(edge_lines(export_dot(FiniteCirculant(6, d), FiniteColoring(2, {1, 2, 1, 1, 2, 1}))), 12u);
    EXPECT_EQ(edge_lines(export_dot(FiniteCirculant(8, d), FiniteColoring(2, {1, 2, 1, 2, 1, 2, 1, 2}))), 16u);
    EXPECT_EQ(edge_lines(export_dot(FiniteCirculant(2, DistanceSet({1})), FiniteColoring(2, {1, 2}))), 2u);
}

TEST(Dot, ColorsAndLoops) {
    const auto dot = export_dot(FiniteCirculant(2, DistanceSet({2})), FiniteColoring(2, {1, 2}));
    EXPECT_NE(dot.find("0 -- 0;"), std::string::npos);
    EXPECT_NE(dot.find("fillcolor=\"gold\""), std::string::npos);
    EXPECT_NE(dot.find("fillcolor=\"royalblue\""), std::string::npos);
    EXPECT_EQ(dot.rfind("graph ", 0), 0u);
}

TEST(Dot, Limits) {
    const DistanceSet d({1});
    ColorWord w(50, 1);
    EXPECT_THROW(export_dot(FiniteCirculant(50, d), FiniteColoring(1, w), 10), resource_limit_error);
    EXPECT_THROW(export_dot(FiniteCirculant(4, d), FiniteColoring(1, {1, 1})), std::invalid_argument);
}

TEST(Json, FiniteRoundTrip) {
    const FiniteColoring c(4, {1, 2, 3, 1, 4, 1, 2, 4, 1, 3});
    const DistanceSet d({1, 3});
    const auto m = check_perfect(c, d).matrix;
    const auto j = to_json(c, d, m);
    EXPECT_EQ(j["kind"], "finite");
    EXPECT_EQ(j["t_or_period"], 10);
    EXPECT_EQ(j["matrix"][1], json({2, 0, 1, 1}));
    const auto doc = coloring_from_json(json::parse(j.dump()));
    ASSERT_TRUE(doc.is_finite());
    EXPECT_EQ(std::get<FiniteColoring>(doc.coloring), c);
    EXPECT_EQ(doc.distances, d);
    EXPECT_EQ(doc.matrix, m);
    EXPECT_EQ(to_json(doc), j);
}

TEST(Json, PeriodicRoundTrip) {
    const PeriodicColoring p(2, {2, 1, 1});
    const auto j = to_json(p, make_odd_distance_set(1));
    EXPECT_EQ(j["word"], json({1, 1, 2}));
    EXPECT_FALSE(j.contains("matrix"));
    const auto doc = coloring_from_json(j);
    EXPECT_FALSE(doc.is_finite());
    EXPECT_EQ(std::get<PeriodicColoring>(doc.coloring), p);
}

TEST(Json, PeriodicInputIsCanonicalized) {
    const auto doc = coloring_from_json(
        json{{"kind", "periodic"}, {"t_or_period", 4}, {"k", 2}, {"word", {2, 1, 2, 1}}, {"distances", {1}}});
    EXPECT_EQ(std::get<PeriodicColoring>(doc.coloring).period(), 2u);
}

TEST(Json, MalformedInput) {
    const json good{{"kind", "finite"}, {"t_or_period", 2}, {"k", 2}, {"word", {1, 2}}, {"distances", {1}}};
    EXPECT_NO_THROW(coloring_from_json(good));
    for (const char* key : {"kind", "t_or_period", "k", "word", "distances"}) {
        json j = good;
        j.erase(key);
        EXPECT_THROW(coloring_from_json(j), std::invalid_argument) << key;
    }
    auto with = [&](const char* key, json v) {
        json j = good;
        j[key] = std::move(v);
        return j;
    };
    EXPECT_THROW(coloring_from_json(with("kind", "cyclic")), std::invalid_argument);
    EXPECT_THROW(coloring_from_json(with("t_or_period", 3)), std::invalid_argument);
    EXPECT_THROW(coloring_from_json(with("word", {1, 0})), std::invalid_argument);
    EXPECT_THROW(coloring_from_json(with("word", "12")), std::invalid_argument);
    EXPECT_THROW(coloring_from_json(with("k", 3)), std::invalid_argument);
    EXPECT_THROW(coloring_from_json(with("distances", {3, 1})), std::invalid_argument);
    EXPECT_THROW(coloring_from_json(with("matrix", {{1, 2}})), std::invalid_argument);
}

TEST(Json, ConstructFamilies) {
    const auto four_colors = construct_from_json(json::parse(R"({
        "family": "4n+2", "n": 2,
        "split": {"kind": "mixed", "monochrome": [1, 2], "pairs": [[3, 4]]},
        "matching": {"monochrome": [[0, 1], [1, 2], [3, 1]], "swaps": [[2, 4, 0]]}})"));
    ASSERT_EQ(four_colors.size(), 1u);
    EXPECT_EQ(std::get<FiniteColoring>(four_colors[0].coloring), FiniteColoring(4, {1, 2, 3, 1, 4, 1, 2, 4, 1, 3}));
    ASSERT_TRUE(four_colors[0].matrix);

    const auto k22 = construct_from_json(json::parse(R"({"family": "4n", "n": 1, "k": 2, "even": [1, 2], "odd": [2, 1]})"));
    EXPECT_EQ(std::get<FiniteColoring>(k22[0].coloring), FiniteColoring(2, {1, 2, 2, 1}));

    const auto bip = construct_from_json(json::parse(R"({
        "family": "4n-2", "n": 1, "split": {"kind": "bipartite", "pairs": [[2, 1]]},
        "matching": {"bipartite": [[0, 0]]}})"));
    EXPECT_EQ(std::get<FiniteColoring>(bip[0].coloring), FiniteColoring(2, {2, 1}));

    const auto paths = construct_from_json(json::parse(R"({"family": "path", "k": 3, "n": 2})"));
    EXPECT_EQ(paths.size(), 4u);
    for (const auto& p : paths) {
        EXPECT_FALSE(p.is_finite());
        EXPECT_TRUE(p.matrix);
        EXPECT_EQ(p.distances, make_odd_distance_set(2));
    }
}

TEST(Json, ConstructRejections) {
    EXPECT_THROW(construct_from_json(json::parse(R"({"family": "5n", "n": 1})")), std::invalid_argument);
    EXPECT_THROW(construct_from_json(json::parse(R"({"n": 1})")), std::invalid_argument);
    EXPECT_THROW(construct_from_json(json::parse(R"({"family": "4n", "n": 1, "k": 2, "even": [1, 1], "odd": [1, 2]})")),
                 std::invalid_argument);
    EXPECT_THROW(construct_from_json(json::parse(R"({"family": "4n+2", "n": 1, "split": {"kind": "odd"}, "matching": {}})")),
                 std::invalid_argument);
    EXPECT_THROW(construct_from_json(json::parse(R"({"family": "4n+2", "n": 0, "split": {}, "matching": {}})")),
                 std::invalid_argument);
}

TEST(Json, Reports) {
    const auto j = to_json(check_theorem_k2(1));
    EXPECT_EQ(j["verdict"], "confirmed");
    EXPECT_EQ(j["enumerated_count"], 4);
    EXPECT_TRUE(j["missing"].empty());
    EXPECT_FALSE(j.contains("enumeration_seconds"));
    const auto l = to_json(lemma_regression_suite(1));
    EXPECT_EQ(l["passed"], true);
    EXPECT_EQ(l["checks"].size(), 4u);
    EXPECT_EQ(l["realized_sums"], json({2, 3, 4}));
}

} // namespace
} // namespace circulant
