#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "girylab/json_io.hpp"
#include "girylab/suites.hpp"

using namespace girylab;

namespace {

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
    }
    out << text;
    return 0;
}

std::string space_name_of(const ModelFile& model, const FinMeasSpace& sp) {
    for (const auto& [name, s] : model.spaces)
        if (s == sp) return name;
    return "";
}

int cmd_check(const std::string& file, const std::string& suite, std::uint64_t seed,
              const std::string& out_path, bool list_suites, std::size_t max_enum) {
    if (list_suites) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& info : suite_registry())
            j.push_back({{"name", info.name}, {"covers", info.covers}});
        return emit(canonical_dump(j), out_path);
    }
    ModelFile model;
    if (!file.empty()) model = load_model(file);
    SuiteContext ctx;
    ctx.model = file.empty() ? nullptr : &model;
    ctx.seed = seed;
    ctx.max_enum = max_enum;
    std::vector<std::string> names;
    if (suite != "all") names.push_back(suite);
    auto reports = run_suites(names, ctx);
    bool ok = true;
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok();
        suites.push_back(r.to_json());
    }
    nlohmann::json j{{"seed", seed}, {"status", ok ? "pass" : "fail"}, {"suites", suites}};
    int rc = emit(canonical_dump(j), out_path);
    if (rc != 0) return rc;
    return ok ? 0 : 1;
}

int cmd_compose(const std::string& file, const std::string& k1, const std::string& k2,
                const std::string& out_path) {
    ModelFile model = load_model(file);
    auto i1 = model.kernels.find(k1);
    auto i2 = model.kernels.find(k2);
    if (i1 == model.kernels.end()) throw input_error("unknown kernel '" + k1 + "'");
    if (i2 == model.kernels.end()) throw input_error("unknown kernel '" + k2 + "'");
    Kernel k = kleisli_compose(i1->second, i2->second);
    return emit(canonical_dump(kernel_json(k, space_name_of(model, k.dom),
                                           space_name_of(model, k.cod))),
                out_path);
}

int cmd_barycenter(const std::string& file, const std::string& convex,
                   const std::string& measure, const std::string& out_path) {
    ModelFile model = load_model(file);
    auto ia = model.convex.find(convex);
    if (ia == model.convex.end()) throw input_error("unknown convex space '" + convex + "'");
    auto ip = model.cmeasures.find(measure);
    if (ip == model.cmeasures.end()) throw input_error("unknown cmeasure '" + measure + "'");
    if (!(ip->second.space == ia->second))
        throw input_error("cmeasure '" + measure + "' lives on a different space");
    Elem b = counit(ia->second, ip->second);
    nlohmann::json j{{"space", convex}, {"barycenter", elem_json(b)}};
    return emit(canonical_dump(j), out_path);
}

int cmd_separate(const std::string& file, const std::string& space,
                 const std::string& out_path) {
    ModelFile model = load_model(file);
    auto it = model.spaces.find(space);
    if (it == model.spaces.end()) throw input_error("unknown space '" + space + "'");
    Separation s = separate(it->second);
    nlohmann::json j{{"quotient", space_json(s.quotient)}, {"q", s.q.graph}};
    return emit(canonical_dump(j), out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for finite measurable spaces, measures and convex structures"};
    app.require_subcommand(1);

    std::string file, out_path, suite = "all", k1, k2, convex, measure, space;
    std::uint64_t seed = 0;
    std::size_t max_enum = 1000000;
    bool list_suites = false;

    auto* check = app.add_subcommand("check", "run law and lemma suites");
    check->add_option("file", file, "model file (JSON)");
    check->add_option("--suite", suite, "suite name or 'all'");
    check->add_option("--seed", seed, "seed for randomized probes");
    check->add_option("--out", out_path, "write the report here instead of stdout");
    check->add_flag("--list-suites", list_suites, "list suite names and what they cover");
    check->add_option("--max-enum", max_enum, "enumeration cap")
        ->envname("GIRYLAB_MAX_ENUM");

    auto* compose = app.add_subcommand("compose", "compose two kernels");
    compose->add_option("file", file)->required();
    compose->add_option("k1", k1)->required();
    compose->add_option("k2", k2)->required();
    compose->add_option("--out", out_path);

    auto* bary = app.add_subcommand("barycenter", "barycenter of a convex measure");
    bary->add_option("file", file)->required();
    bary->add_option("convex", convex)->required();
    bary->add_option("measure", measure)->required();
    bary->add_option("--out", out_path);

    auto* sep = app.add_subcommand("separate", "separation quotient of a space");
    sep->add_option("file", file)->required();
    sep->add_option("space", space)->required();
    sep->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (check->parsed())
            return cmd_check(file, suite, seed, out_path, list_suites, max_enum);
        if (compose->parsed()) return cmd_compose(file, k1, k2, out_path);
        if (bary->parsed()) return cmd_barycenter(file, convex, measure, out_path);
        if (sep->parsed()) return cmd_separate(file, space, out_path);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
