#include "affolab/checks.hpp"

#include <CLI11.hpp>
#include <iostream>

namespace {

using affolab::CheckOptions;
using affolab::Manifest;

struct CommonArgs {
    std::string manifest_path;
    std::string example;
    bool json = false;
    CheckOptions opts;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_radius = false, bool with_len = false,
                bool with_jet = false) {
    auto* mopt = cmd->add_option("--manifest", args.manifest_path, "path to a manifest JSON file");
    auto* eopt = cmd->add_option("--example", args.example, "built-in catalog example name");
    mopt->excludes(eopt);
    cmd->add_flag("--json", args.json, "emit a machine-readable JSON report");
    if (with_radius) cmd->add_option("--radius", args.opts.radius, "ball radius");
    if (with_len) cmd->add_option("--max-len", args.opts.max_len, "maximal word length searched");
    if (with_jet) cmd->add_option("--jet-degree", args.opts.jet_degree, "jet truncation degree");
    cmd->add_option("--cap", args.opts.cap, "ball element cap");
}

Manifest resolve(const CommonArgs& args) {
    if (!args.manifest_path.empty()) return affolab::load_manifest(args.manifest_path);
    if (!args.example.empty()) return affolab::catalog_example(args.example);
    throw affolab::ManifestError(affolab::ManifestError::Kind::invalid,
                                 "either --manifest or --example is required");
}

int emit(const affolab::Report& report, bool json) {
    if (json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affolab: exact invariants of affine holonomy groups and lagrangian-foliation data"};
    app.require_subcommand(1);

    std::map<std::string, CommonArgs> cmd_args;
    for (const auto& name : affolab::known_checks()) {
        bool radius = name == "growth";
        bool len = name == "translation";
        bool jet = name == "cohomology" || name == "classify";
        auto* cmd = app.add_subcommand(name, "run the '" + name + "' check");
        add_common(cmd, cmd_args[name], radius, len, jet);
    }

    auto* cat = app.add_subcommand("catalog", "list the built-in examples");
    bool cat_json = false;
    cat->add_flag("--json", cat_json, "emit JSON");

    CommonArgs susp_args;
    auto* susp = app.add_subcommand("suspend", "emit the cotangent suspension of a manifest");
    add_common(susp, susp_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat->parsed()) {
            if (cat_json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& name : affolab::catalog_names()) {
                    Manifest m = affolab::catalog_example(name);
                    out.push_back({{"name", name},
                                   {"dimension", m.dimension},
                                   {"field", m.field_d},
                                   {"description", m.description},
                                   {"declared_checks", m.declared_checks}});
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& name : affolab::catalog_names()) {
                    Manifest m = affolab::catalog_example(name);
                    std::cout << name << " (dim " << m.dimension;
                    if (m.field_d != 1) std::cout << ", field sqrt(" << m.field_d << ")";
                    std::cout << "): " << m.description << "\n";
                }
            }
            return 0;
        }
        if (susp->parsed()) {
            Manifest m = resolve(susp_args);
            std::cout << affolab::manifest_to_json(affolab::build_suspension(m)).dump(2) << "\n";
            return 0;
        }
        for (const auto& name : affolab::known_checks()) {
            auto* cmd = app.get_subcommand(name);
            if (cmd->parsed()) {
                const CommonArgs& args = cmd_args[name];
                Manifest m = resolve(args);
                return emit(affolab::run_check(m, name, args.opts), args.json);
            }
        }
    } catch (const affolab::ManifestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
