#include "cwset/catalog.hpp"
#include "cwset/io.hpp"
#include "cwset/svg.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <regex>

using namespace cwset;
using cwset::support::q;

TEST(RegionIo, RoundTripIsByteIdentical) {
    for (const auto& key : catalog::keys()) {
        Region r = catalog::build(key).region;
        std::string text = write_region(r);
        Region back = read_region(text);
        EXPECT_EQ(write_region(back), text) << key;
        EXPECT_EQ(back.area(), r.area()) << key;
    }
}

TEST(RegionIo, WpmAreaSurvives) {
    Region back = read_region(write_region(catalog::build("W_pm").region));
    EXPECT_EQ(back.area(), Scalar(1));
}

TEST(RegionIo, SchemaField) {
    Json j = region_to_json(Region{ConvexPolygon::box(0, 0, 1, 1)});
    EXPECT_EQ(j["schema"], kRegionSchema);
    EXPECT_EQ(j["pieces"][0][0][0], "0");
}

TEST(RegionIo, Diagnostics) {
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        try {
            read_region(text);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const FormatError& e) {
            EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
        }
    };
    expect_error(R"({"schema":"cwset.region/1","pieces":[[["1/0+0/1√3","0"],["1","0"],["1","1"]]]})",
                 "pieces[0][0][0]");
    expect_error("{\n\"schema\": \"cwset.region/1\",\n\"pieces\": [\n", "line");
    expect_error(R"({"pieces":[]})", "schema");
    expect_error(R"({"schema":"cwset.region/2","pieces":[]})", "schema");
    expect_error(R"({"schema":"cwset.region/1"})", "pieces");
    expect_error(R"({"schema":"cwset.region/1","pieces":[[["0","0"],["1","0"],["2","0"]]]})", "pieces[0]");
    expect_error(R"({"schema":"cwset.region/1","pieces":[[[0,0],["1","0"],["1","1"]]]})", "pieces[0][0][0]");
    expect_error(R"({"schema":"cwset.region/1","pieces":[[["0"],["1","0"],["1","1"]]]})", "pieces[0][0]");
}

TEST(RegionIo, EmptyRegion) {
    Region back = read_region(write_region(Region{}));
    EXPECT_TRUE(back.empty());
}

TEST(MultisetIo, RoundTrip) {
    auto sets = catalog::build_multiset("fig2_right_split");
    auto back = read_multiset(multiset_to_json(sets).dump());
    ASSERT_EQ(back.size(), sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) EXPECT_EQ(symmetric_difference_area(back[i], sets[i]), Scalar(0));
}

TEST(ReportIo, VerdictJson) {
    auto v = verify_wavelet_set(build_group("p3"), transform(lattice_matrix_L_prime(), catalog::build("W_pmm").region), 2);
    Json j = verdict_to_json(v);
    EXPECT_EQ(j["schema"], kVerdictSchema);
    EXPECT_FALSE(j["passed"].get<bool>());
    EXPECT_EQ(j["condition_ii"]["schema"], kTilingSchema);
    EXPECT_FALSE(j["condition_ii"]["defect_regions"].empty());
    EXPECT_EQ(j["condition_ii"]["defect_regions"][0]["multiplicity"], 2);
    // Deterministic output.
    EXPECT_EQ(j.dump(), verdict_to_json(v).dump());
}

TEST(ReportIo, GroupJson) {
    Json j = group_to_json(build_group("pg"));
    EXPECT_EQ(j["schema"], kGroupSchema);
    ASSERT_EQ(j["point_group"].size(), 2u);
    EXPECT_EQ(j["point_group"][1]["coset"][1], "1/2");
    EXPECT_FALSE(j["compatible"]["2"].get<bool>());
    EXPECT_TRUE(j["compatible"]["3"].get<bool>());
}

TEST(Svg, OnePathPerPieceWithExactVertices) {
    RenderSpec spec;
    spec.layers.push_back({catalog::build("W_pm").region, "set"});
    std::string svg = render_svg(std::span<const RenderSpec>(&spec, 1));
    std::regex path_re("<path class=\"set\"[^>]*data-exact=\"([^\"]*)\"");
    std::vector<std::string> exact;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path_re); it != std::sregex_iterator(); ++it)
        exact.push_back((*it)[1]);
    ASSERT_EQ(exact.size(), 3u);
    EXPECT_EQ(exact[0].find("0,1/3"), 0u);
    EXPECT_NE(svg.find("M 0 -0.333333333333 L"), std::string::npos);
}

TEST(Svg, EmptyRegionIsValid) {
    RenderSpec spec;
    std::string svg = render_svg(std::span<const RenderSpec>(&spec, 1));
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("</svg>\n</svg>"), std::string::npos);
    EXPECT_EQ(svg.find("data-exact"), std::string::npos);
    EXPECT_NE(render_svg({}).find("<svg"), std::string::npos);
}

TEST(Svg, OrbitColouring) {
    RenderSpec spec = orbit_panel("p6", build_group("p6"), catalog::build("W_p6").region);
    EXPECT_TRUE(spec.orbit_coloring);
    ASSERT_EQ(spec.layers.size(), 6u);
    std::string svg = render_svg(std::span<const RenderSpec>(&spec, 1));
    for (int i = 0; i < 6; ++i) EXPECT_NE(svg.find("class=\"orbit-" + std::to_string(i) + "\""), std::string::npos);
}

TEST(Svg, ViewportMustContainRegions) {
    RenderSpec spec;
    spec.layers.push_back({catalog::build("W_pm").region, "set"});
    spec.viewport = std::array<Scalar, 4>{0, 0, 1, 1};
    EXPECT_THROW(render_svg(std::span<const RenderSpec>(&spec, 1)), std::invalid_argument);
}

TEST(Svg, FiguresAreDeterministic) {
    for (int n = 1; n <= kFigureCount; ++n) {
        Figure f = figure(n);
        EXPECT_EQ(f.number, n);
        EXPECT_FALSE(f.panels.empty());
        EXPECT_EQ(render_svg(f.panels), render_svg(figure(n).panels)) << n;
    }
    EXPECT_THROW(figure(0), std::invalid_argument);
    EXPECT_THROW(figure(10), std::invalid_argument);
}
