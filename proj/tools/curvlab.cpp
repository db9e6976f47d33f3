// curvlab: batch front end over scene files.
//
//   curvlab <command> --scene FILE [--epsilon p/q] [--degree n] [--svg PATH]
//                     [--budget N] [--format text|structured]
//
// Exit codes: 0 all hard assertions pass, 1 defect found, 2 input error.

#include "curvlab/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

const std::vector<std::string> kCommands = {"kernel",  "cokernel", "image",     "coimage", "factorize",
                                            "lattice", "counterexample-modularity", "check",   "homology",
                                            "exactness", "les",    "kazhdan"};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw curvlab::SceneError("cannot read scene file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homological algebra with null ideals: seminormed spaces and finite groups"};
    std::string command, scene_path, epsilon, svg_path, format = "text";
    int degree = 0;
    curvlab::CommandOptions opts;
    app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(kCommands));
    app.add_option("--scene", scene_path, "Scene file (JSON)");
    app.add_option("--epsilon", epsilon, "Null-ideal parameter p/q in (0, 1); overrides the scene");
    auto* degree_opt = app.add_option("--degree", degree, "Degree for homology and kazhdan");
    app.add_option("--svg", svg_path, "Write an SVG rendering here (lattice on 2-d spaces, counterexample-modularity)");
    app.add_option("--budget", opts.budget, "Sample count per property for check")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--ref", opts.ref, "Scene entry to act on (map, hom, complex or sequence)");
    app.add_option("--op", opts.op, "Lattice operation: meet, join or leq");
    app.add_option("--left", opts.left, "Left lattice operand (space or subgroup)");
    app.add_option("--right", opts.right, "Right lattice operand (space or subgroup)");
    app.add_option("--point", opts.point, "Vector at which to evaluate a lattice result");
    app.add_option("--suite", opts.suite, "Property suite for check")
        ->check(CLI::IsMember({"axioms", "galois", "fstar", "modularity", "two-of-three"}));
    app.add_option("--vector", opts.vectors, "Test vector for kazhdan (repeatable)");
    app.add_option("--seed", opts.seed, "Generator seed for check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*degree_opt) opts.degree = degree;
        opts.want_svg = !svg_path.empty();
        if (command == "check" && opts.suite.empty()) throw curvlab::SceneError("check needs --suite");
        curvlab::Scene scene;
        bool needs_scene = command != "counterexample-modularity" && command != "check";
        if (!scene_path.empty())
            scene = curvlab::parse_scene(read_file(scene_path));
        else if (needs_scene)
            throw curvlab::SceneError(command + " needs --scene");
        std::optional<curvlab::Rational> eps;
        if (!epsilon.empty()) eps = curvlab::parse_rational(epsilon);
        curvlab::SceneContext ctx(std::move(scene), eps);

        auto out = curvlab::run_command(command, ctx, opts);
        if (opts.want_svg) {
            if (out.svg.empty()) throw curvlab::SceneError(command + " has no SVG rendering");
            std::ofstream svg(svg_path, std::ios::binary);
            if (!svg) throw curvlab::SceneError("cannot write '" + svg_path + "'");
            svg << out.svg;
        }
        if (format == "structured")
            std::cout << out.report.structured().dump(2) << "\n";
        else
            std::cout << out.report.text();
        return out.report.exit_code();
    } catch (const std::exception& e) {
        // scene, parse, dimension and capability errors all land here
        std::cerr << "input error: " << e.what() << "\n";
    }
    return 2;
}
