// semdiff — semantic differencing of class diagrams.
//
//   semdiff diff LEFT.cd RIGHT.cd [--scope K] [--max N]
//           [--filter none|nnc|nna|nnca|static] [--abstract-attributes]
//           [--switch] [--format od|json] [--no-strip-common]
//   semdiff compare A.cd B.cd [--scope K]
//   semdiff evolution V1.cd V2.cd ... [--scope K]
//
// Exit codes: diff — 1 if witnesses exist, 0 if none, 2 on input error;
// compare/evolution — 0 on successful analysis, 2 on input error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "semdiff/semdiff.hpp"

namespace {

constexpr int kFormatVersion = 1;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

semdiff::ClassDiagram load_cd(const std::string& path) {
    semdiff::ClassDiagram cd;
    try {
        cd = semdiff::parse_cd(read_file(path));
    } catch (const semdiff::SyntaxError& e) {
        throw InputError(path + ":" + e.what());
    }
    auto violations = semdiff::check_context_conditions(cd);
    if (!violations.empty()) {
        std::string msg = path + ": context-condition violations:";
        for (const auto& v : violations)
            msg += "\n  [" + v.rule + "] " + v.subject + ": " + v.message;
        throw InputError(msg);
    }
    return cd;
}

semdiff::FilterKind parse_filter(const std::string& name) {
    static const std::map<std::string, semdiff::FilterKind> table = {
        {"none", semdiff::FilterKind::None},
        {"nnc", semdiff::FilterKind::NNC},
        {"nna", semdiff::FilterKind::NNA},
        {"nnca", semdiff::FilterKind::NNCA},
        {"static", semdiff::FilterKind::Static},
    };
    auto it = table.find(name);
    if (it == table.end()) throw InputError("unknown filter: " + name);
    return it->second;
}

int run_diff(const std::string& left_path, const std::string& right_path,
             const semdiff::DiffConfig& cfg, bool switch_direction,
             const std::string& format) {
    std::string lp = left_path, rp = right_path;
    if (switch_direction) std::swap(lp, rp);
    semdiff::ClassDiagram left = load_cd(lp);
    semdiff::ClassDiagram right = load_cd(rp);

    std::vector<semdiff::Witness> witnesses;
    try {
        witnesses = semdiff::diff(left, right, cfg);
    } catch (const semdiff::TypeKindClash& e) {
        throw InputError(e.what());
    }

    if (format == "json") {
        nlohmann::json out = {
            {"format_version", kFormatVersion},
            {"command", "diff"},
            {"left", left.name},
            {"right", right.name},
            {"scope", cfg.scope},
            {"witness_count", witnesses.size()},
            {"witnesses", nlohmann::json::array()},
        };
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            nlohmann::json w = semdiff::om_to_json(witnesses[i].om);
            w["index"] = i + 1;
            out["witnesses"].push_back(std::move(w));
        }
        std::cout << out.dump(2) << "\n";
    } else if (witnesses.empty()) {
        std::cout << "no diff witnesses up to scope " << cfg.scope << "\n";
    } else {
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << "witness " << (i + 1) << " of " << witnesses.size()
                      << " (scope " << cfg.scope << ")\n";
            std::cout << semdiff::render_od(witnesses[i].om);
        }
    }
    return witnesses.empty() ? 0 : 1;
}

int run_compare(const std::string& a_path, const std::string& b_path,
                unsigned scope) {
    semdiff::ClassDiagram a = load_cd(a_path);
    semdiff::ClassDiagram b = load_cd(b_path);
    semdiff::CompareResult r;
    try {
        r = semdiff::compare(a, b, scope);
    } catch (const semdiff::TypeKindClash& e) {
        throw InputError(e.what());
    }
    std::cout << a.name << " " << semdiff::verdict_symbol(r.verdict) << "_"
              << scope << " " << b.name << "\n";
    return 0;
}

int run_evolution(const std::vector<std::string>& paths, unsigned scope) {
    if (paths.size() < 2)
        throw InputError("evolution needs at least two versions");
    std::vector<semdiff::ClassDiagram> versions;
    for (const auto& p : paths) versions.push_back(load_cd(p));
    std::vector<semdiff::CompareResult> steps;
    try {
        steps = semdiff::evolution(versions, scope);
    } catch (const semdiff::TypeKindClash& e) {
        throw InputError(e.what());
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::cout << versions[i].name << " "
                  << semdiff::verdict_symbol(steps[i].verdict) << "_" << scope
                  << " " << versions[i + 1].name << ": "
                  << semdiff::evolution_label(steps[i].verdict) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semantic differencing of class diagrams"};
    app.require_subcommand(1);

    unsigned scope = 5;
    unsigned max_witnesses = 20;
    std::string filter = "none";
    std::string format = "od";
    bool abstract_attrs = false;
    bool switch_direction = false;
    bool no_strip = false;
    std::string left, right;
    std::vector<std::string> versions;

    CLI::App* diff_cmd =
        app.add_subcommand("diff", "compute bounded diff witnesses");
    diff_cmd->add_option("left", left, "left class diagram file")->required();
    diff_cmd->add_option("right", right, "right class diagram file")
        ->required();
    diff_cmd->add_option("--scope", scope, "maximum total object count");
    diff_cmd->add_option("--max", max_witnesses,
                         "maximum number of reported witnesses");
    diff_cmd->add_option("--filter", filter,
                         "witness filter: none|nnc|nna|nnca|static");
    diff_cmd->add_flag("--abstract-attributes", abstract_attrs,
                       "drop primitive-typed attributes before diffing");
    diff_cmd->add_flag("--switch", switch_direction,
                       "swap the operand order before diffing");
    diff_cmd->add_option("--format", format, "output format: od|json");
    diff_cmd->add_flag("--no-strip-common", no_strip,
                       "keep attributes shared by both diagrams");

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "classify a diagram pair");
    compare_cmd->add_option("a", left, "first class diagram file")->required();
    compare_cmd->add_option("b", right, "second class diagram file")
        ->required();
    compare_cmd->add_option("--scope", scope, "maximum total object count");

    CLI::App* evolution_cmd =
        app.add_subcommand("evolution", "analyze a version history");
    evolution_cmd->add_option("versions", versions, "class diagram files")
        ->required();
    evolution_cmd->add_option("--scope", scope,
                              "maximum total object count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (max_witnesses < 1) throw InputError("--max must be at least 1");
        if (format != "od" && format != "json")
            throw InputError("unknown format: " + format);
        if (diff_cmd->parsed()) {
            semdiff::DiffConfig cfg;
            cfg.scope = scope;
            cfg.max_witnesses = max_witnesses;
            cfg.filter = parse_filter(filter);
            cfg.abstract_attributes = abstract_attrs;
            cfg.strip_common = !no_strip;
            return run_diff(left, right, cfg, switch_direction, format);
        }
        if (compare_cmd->parsed()) return run_compare(left, right, scope);
        return run_evolution(versions, scope);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
