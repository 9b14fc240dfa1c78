#include "lefzeta/endomorphism.hpp"
#include "lefzeta/errors.hpp"
#include "lefzeta/report.hpp"
#include "lefzeta/space_io.hpp"
#include "lefzeta/spaces.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace lefzeta;

std::optional<ShapeKind> branch_for_mode(const std::string& mode) {
    if (mode == "exterior") return ShapeKind::RationalExterior;
    if (mode == "extended") return ShapeKind::ExtendedRationalExterior;
    if (mode == "even") return ShapeKind::EvenOnly;
    if (mode == "general") return ShapeKind::GeneralTensor;
    return std::nullopt; // auto
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
}

int run_analyze(const std::string& space_path, const std::string& map_path,
                std::optional<int> max_power, const std::string& mode,
                const std::string& format) {
    SpaceFile file = parse_space_file(space_path);
    if (!file.presentation) {
        throw shape_error(
            "a Betti profile alone cannot be analyzed; the ring structure is required");
    }
    ModelPtr model = make_model(*file.presentation);
    auto images = parse_map_file(map_path, model);
    RingEndomorphism f = from_generator_images(model, images);

    AnalysisOptions options;
    options.max_power = max_power;
    options.forced_mode = branch_for_mode(mode);
    AnalysisReport report = analyze(f, options);
    std::cout << (format == "json" ? render_json(report) : render_text(report));
    return 0;
}

int run_recognize(const std::string& space_path, const std::string& format) {
    RecognizeReport report = recognize_space(parse_space_file(space_path));
    std::cout << (format == "json" ? render_json(report) : render_text(report));
    return 0;
}

int run_fixtures_list() {
    for (const auto& fx : fixtures()) {
        std::printf("%-24s %s\n", fx.name.c_str(), fx.description.c_str());
    }
    return 0;
}

int run_fixtures_emit(const std::string& name, const std::string& path) {
    const Fixture* fx = find_fixture(name);
    if (!fx) throw parse_error("unknown fixture '" + name + "'");
    std::string text = fx->presentation ? space_file_text(*fx->presentation)
                                        : betti_file_text(fx->name, *fx->betti);
    write_output(path, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lefschetz numbers, zeta functions, and periodic-point "
                 "criteria for finitely presented rational cohomology rings"};
    app.require_subcommand(1);

    std::string space_path, map_path;
    std::string format = "text";
    std::string mode = "auto";
    int max_power = 0;

    auto* analyze_cmd =
        app.add_subcommand("analyze", "analyze a self-map given by generator images");
    analyze_cmd->add_option("--space", space_path, "space file (JSON)")->required();
    analyze_cmd->add_option("--map", map_path, "map file (JSON)")->required();
    auto* max_power_opt =
        analyze_cmd->add_option("--max-power", max_power, "how many iterates L(f^k) to report")
            ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    analyze_cmd
        ->add_option("--mode", mode,
                     "criterion branch: auto, exterior, extended, even, or general")
        ->check(CLI::IsMember({"auto", "exterior", "extended", "even", "general"}));

    std::string rec_space;
    std::string rec_format = "text";
    auto* recognize_cmd =
        app.add_subcommand("recognize", "classify the ring shape of a space file");
    recognize_cmd->add_option("--space", rec_space, "space file (JSON)")->required();
    recognize_cmd->add_option("--format", rec_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* fixtures_cmd = app.add_subcommand("fixtures", "built-in example spaces");
    fixtures_cmd->require_subcommand(1);
    auto* list_cmd = fixtures_cmd->add_subcommand("list", "list the built-in fixtures");
    auto* emit_cmd = fixtures_cmd->add_subcommand("emit", "write a fixture as a space file");
    std::string fixture_name, out_path;
    emit_cmd->add_option("name", fixture_name, "fixture name")->required();
    emit_cmd->add_option("path", out_path, "output path, or - for stdout")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            std::optional<int> mp;
            if (max_power_opt->count()) mp = max_power;
            return run_analyze(space_path, map_path, mp, mode, format);
        }
        if (*recognize_cmd) return run_recognize(rec_space, rec_format);
        if (*list_cmd) return run_fixtures_list();
        if (*emit_cmd) return run_fixtures_emit(fixture_name, out_path);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const shape_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
