#include "curvlab/commands.hpp"
#include "curvlab/scene.hpp"
#include "curvlab/svg.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace curvlab;

namespace {

const std::filesystem::path kFixtures = CURVLAB_FIXTURES;

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::filesystem::path> valid_scenes() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(kFixtures))
        if (e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

CommandOutput run(const std::string& scene, const std::string& command, CommandOptions o = {}) {
    SceneContext ctx(parse_scene(slurp(kFixtures / scene)));
    return run_command(command, ctx, o);
}

}  // namespace

TEST(Scene, RoundTripIsStable) {
    auto scenes = valid_scenes();
    ASSERT_GE(scenes.size(), 10u);
    for (const auto& p : scenes) {
        SCOPED_TRACE(p.filename().string());
        Scene a = parse_scene(slurp(p));
        std::string once = serialize_scene(a);
        Scene b = parse_scene(once);
        EXPECT_EQ(a, b);
        EXPECT_EQ(once, serialize_scene(b));
    }
}

TEST(Scene, InvalidFilesAreRejected) {
    for (const auto& e : std::filesystem::directory_iterator(kFixtures / "invalid")) {
        SCOPED_TRACE(e.path().filename().string());
        EXPECT_ANY_THROW({
            SceneContext ctx(parse_scene(slurp(e.path())));
            for (const char* cmd : {"kernel", "exactness"}) run_command(cmd, ctx, {});
        });
    }
}

TEST(Scene, StructuralErrors) {
    EXPECT_THROW(parse_scene("{"), std::exception);
    EXPECT_THROW(parse_scene(R"({"colours": {}})"), SceneError);
    EXPECT_THROW(parse_scene(R"({"epsilon": 0.25})"), SceneError);
    EXPECT_THROW(SceneContext(parse_scene(R"({"epsilon": "1"})")), SceneError);
    EXPECT_THROW(SceneContext(parse_scene(R"({"epsilon": "0"})")), SceneError);
    SceneContext ok(parse_scene(R"({"epsilon": "1/3"})"));
    EXPECT_EQ(ok.norm().epsilon(), Rational(1, 3));
    SceneContext overridden(parse_scene(R"({"epsilon": "1/3"})"), Rational(1, 10));
    EXPECT_EQ(overridden.norm().epsilon(), Rational(1, 10));
    EXPECT_THROW(ok.space("nowhere"), SceneError);
}

TEST(Report, TextAndStructuredAgree) {
    CommandOptions o;
    o.ref = "half";
    for (const auto& out : {run("half.json", "kernel", o), run("z4_doubling.json", "les"), run("broken_ses.json", "les"),
                            run_command("counterexample-modularity", SceneContext(Scene{}), {})}) {
        const Report& r = out.report;
        auto j = r.structured();
        std::string text = r.text();
        ASSERT_EQ(j["items"].size(), r.items.size());
        for (std::size_t k = 0; k < r.items.size(); ++k) {
            const auto& it = r.items[k];
            EXPECT_EQ(j["items"][k]["key"], it.key);
            EXPECT_NE(text.find("  " + it.key), std::string::npos);
            if (!it.value.empty()) {
                EXPECT_NE(text.find(it.value), std::string::npos);
            }
        }
        EXPECT_EQ(j["status"] == "defect", r.defect());
        EXPECT_NE(text.find(r.defect() ? "status: defect" : "status: pass"), std::string::npos);
        // every number is an exact rational
        EXPECT_FALSE(std::regex_search(j.dump(), std::regex(R"(\d\.\d)"))) << j.dump();
    }
}

TEST(Report, ExpectedFailureIsNotADefect) {
    Report r;
    r.expected("modular", false);
    EXPECT_EQ(r.exit_code(), 0);
    r.check("holds", false);
    EXPECT_EQ(r.exit_code(), 1);
}

TEST(Svg, NumbersAreExactlyRounded) {
    EXPECT_EQ(svg_number(Rational(7, 3)), "2.333");
    EXPECT_EQ(svg_number(Rational(-5, 3)), "-1.667");
    EXPECT_EQ(svg_number(Rational(1, 2000)), "0.001");
    EXPECT_EQ(svg_number(Rational(-1, 3000)), "0");
    EXPECT_EQ(svg_number(Rational(4)), "4");
}

TEST(Svg, CounterexampleFigure) {
    CommandOptions o;
    o.want_svg = true;
    auto a = run_command("counterexample-modularity", SceneContext(Scene{}), o);
    auto b = run_command("counterexample-modularity", SceneContext(Scene{}), o);
    ASSERT_FALSE(a.svg.empty());
    EXPECT_EQ(a.svg, b.svg);
    // y is flipped in SVG coordinates
    for (const char* frag : {"3,-3 -3,-3", "4,0 0,-4", "5,0 0,-5",                // the three balls
                             "x1=\"5\" y1=\"3\" x2=\"2.333\" y2=\"-5\" stroke=\"red\"",  // evaluation line
                             "cx=\"3.5\" cy=\"-1.5\"", "x2=\"3.5\" y2=\"-1.5\""})
        EXPECT_NE(a.svg.find(frag), std::string::npos) << frag;
    EXPECT_EQ(std::count(a.svg.begin(), a.svg.end(), '\n'), 12);
}

TEST(Svg, UnboundedBallIsRejected) {
    EXPECT_THROW(ball_polygon(PolyhedralSeminorm(2, {{1, 0}})), GeometryError);
    EXPECT_THROW(ball_polygon(PolyhedralSeminorm(1, {{1}})), DimensionError);
}

TEST(Commands, KernelOfHalving) {
    CommandOptions o;
    o.ref = "half";
    auto out = run("half.json", "kernel", o);
    EXPECT_EQ(out.report.exit_code(), 0);
    EXPECT_NE(out.report.text().find("[(2)]"), std::string::npos) << out.report.text();
}

TEST(Commands, KernelOfSign) {
    CommandOptions o;
    o.ref = "sign";
    auto out = run("groups.json", "kernel", o);
    EXPECT_EQ(out.report.exit_code(), 0);
    EXPECT_NE(out.report.text().find("{e, (123), (132)}"), std::string::npos) << out.report.text();
}

TEST(Commands, CounterexampleValues) {
    auto out = run_command("counterexample-modularity", SceneContext(Scene{}), {});
    std::string text = out.report.text();
    EXPECT_EQ(out.report.exit_code(), 0);
    EXPECT_NE(text.find("17/16"), std::string::npos);
    EXPECT_NE(text.find("[expected failure]"), std::string::npos);
}

TEST(Commands, DoublingSequence) {
    auto out = run("z4_doubling.json", "les");
    EXPECT_EQ(out.report.exit_code(), 0);
    EXPECT_EQ(out.report.text().find("[FAIL]"), std::string::npos);
    EXPECT_EQ(run("broken_ses.json", "les").report.exit_code(), 1);
}

TEST(Commands, MissingReferenceIsAnInputError) {
    CommandOptions o;
    o.ref = "nothing";
    EXPECT_THROW(run("half.json", "kernel", o), SceneError);
    EXPECT_THROW(run("half.json", "kazhdan"), SceneError);
}
