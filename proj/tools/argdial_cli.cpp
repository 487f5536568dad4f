// Command-line front end. Deliberately uses only the public C API plus
// header-only helpers for argument parsing and JSON formatting; everything
// domain-specific happens behind argdial.h.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "argdial.h"
#include "json.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 parse/domain errors, 2 capacity/budget errors,
// 3 check-suite violation.
int exit_code_for(int status) {
    switch (status) {
        case ARGDIAL_OK: return 0;
        case ARGDIAL_ERR_CAPACITY:
        case ARGDIAL_ERR_BUDGET: return 2;
        case ARGDIAL_ERR_CHECK_FAILED: return 3;
        default: return 1;
    }
}

int fail(int status) {
    const char* message = argdial_last_error();
    // File-read failures report at the point of failure and leave this empty.
    if (message != nullptr && *message != '\0') std::cerr << "error: " << message << "\n";
    return exit_code_for(status);
}

struct OwnedString {
    char* value = nullptr;
    ~OwnedString() { argdial_string_free(value); }
    std::string str() const { return value ? std::string(value) : std::string(); }
};

struct AafHandle {
    argdial_aaf* value = nullptr;
    ~AafHandle() { argdial_aaf_free(value); }
};

struct DialogueHandle {
    argdial_dialogue* value = nullptr;
    ~DialogueHandle() { argdial_dialogue_free(value); }
};

struct TraceHandle {
    argdial_trace* value = nullptr;
    ~TraceHandle() { argdial_trace_free(value); }
};

struct SessionHandle {
    argdial_session* value = nullptr;
    ~SessionHandle() { argdial_session_free(value); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read file '" << path << "'\n";
        return false;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write file '" << path << "'\n";
        return false;
    }
    out << content;
    return static_cast<bool>(out);
}

bool has_extension(const std::string& path, const std::string& ext) {
    return path.size() >= ext.size() &&
           path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
}

int load_aaf(const std::string& path, AafHandle& handle) {
    std::string text;
    if (!read_file(path, text)) return ARGDIAL_ERR_PARSE;
    if (has_extension(path, ".json")) return argdial_aaf_from_json(text.c_str(), &handle.value);
    if (has_extension(path, ".tgf")) return argdial_aaf_from_tgf(text.c_str(), &handle.value);
    return argdial_aaf_from_apx(text.c_str(), &handle.value);
}

int load_dialogue(const std::string& path, DialogueHandle& handle) {
    std::string text;
    if (!read_file(path, text)) return ARGDIAL_ERR_PARSE;
    if (has_extension(path, ".json")) {
        return argdial_dialogue_from_json(text.c_str(), &handle.value);
    }
    return argdial_dialogue_from_text(text.c_str(), &handle.value);
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += items[i];
    }
    return out;
}

std::vector<std::string> names(const json& j, const char* key) {
    std::vector<std::string> out;
    if (j.contains(key)) {
        for (const json& item : j[key]) out.push_back(item.get<std::string>());
    }
    return out;
}

void print_class_line(const char* label, const std::vector<std::string>& items) {
    std::cout << label << ":";
    if (!items.empty()) std::cout << " " << join(items);
    std::cout << "\n";
}

void print_labelling(const json& j) {
    print_class_line("IN", names(j, "in"));
    print_class_line("OUT", names(j, "out"));
    print_class_line("UNDEC", names(j, "undec"));
}

int transform_code(const std::string& name) {
    return name == "lelu" ? ARGDIAL_TRANSFORM_LELU : ARGDIAL_TRANSFORM_BASE;
}

// ---- run -------------------------------------------------------------------

struct RunArgs {
    std::string aaf_path, dialogue_path, transform = "base", trace_out, dot_dir;
    int horizon = 0;
};

int cmd_run(const RunArgs& args) {
    AafHandle af;
    int status = load_aaf(args.aaf_path, af);
    if (status != ARGDIAL_OK) return fail(status);
    DialogueHandle dialogue;
    status = load_dialogue(args.dialogue_path, dialogue);
    if (status != ARGDIAL_OK) return fail(status);

    TraceHandle trace;
    status = argdial_run(af.value, dialogue.value, transform_code(args.transform),
                         args.horizon, &trace.value);
    if (status != ARGDIAL_OK) return fail(status);

    if (!args.trace_out.empty()) {
        OwnedString text;
        status = argdial_trace_to_json(trace.value, &text.value);
        if (status != ARGDIAL_OK) return fail(status);
        if (!write_file(args.trace_out, text.str())) return 1;
    }

    if (!args.dot_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(args.dot_dir, ec);
        if (ec) {
            std::cerr << "error: cannot create directory '" << args.dot_dir << "'\n";
            return 1;
        }
        size_t marks = 0;
        argdial_trace_mark_count(trace.value, &marks);
        for (size_t m = 0; m < marks; ++m) {
            size_t t = 0;
            argdial_trace_mark_at(trace.value, m, &t);
            OwnedString dot;
            status = argdial_trace_state_dot(trace.value, t, &dot.value);
            if (status != ARGDIAL_OK) return fail(status);
            std::string name = std::to_string(t);
            name.insert(0, name.size() < 5 ? 5 - name.size() : 0, '0');
            if (!write_file(args.dot_dir + "/state_" + name + ".dot", dot.str())) return 1;
        }
    }

    OwnedString labelling;
    status = argdial_trace_final_labelling(trace.value, &labelling.value);
    if (status != ARGDIAL_OK) return fail(status);
    print_labelling(json::parse(labelling.str()));
    return 0;
}

// ---- oracle ----------------------------------------------------------------

struct OracleArgs {
    std::string aaf_path, semantics = "complete";
    int oracle_limit = 0;
};

int cmd_oracle(const OracleArgs& args) {
    AafHandle af;
    int status = load_aaf(args.aaf_path, af);
    if (status != ARGDIAL_OK) return fail(status);

    int code = ARGDIAL_SEMANTICS_COMPLETE;
    if (args.semantics == "grounded") code = ARGDIAL_SEMANTICS_GROUNDED;
    if (args.semantics == "preferred") code = ARGDIAL_SEMANTICS_PREFERRED;
    if (args.semantics == "stable") code = ARGDIAL_SEMANTICS_STABLE;

    OwnedString labellings;
    status = argdial_oracle(af.value, code, args.oracle_limit, &labellings.value);
    if (status != ARGDIAL_OK) return fail(status);

    json j = json::parse(labellings.str());
    for (const json& labelling : j) {
        std::cout << "in={" << join(names(labelling, "in")) << "} out={"
                  << join(names(labelling, "out")) << "} undec={"
                  << join(names(labelling, "undec")) << "}\n";
    }
    std::cout << j.size() << " labelling" << (j.size() == 1 ? "" : "s") << "\n";
    return 0;
}

// ---- synth -----------------------------------------------------------------

struct SynthArgs {
    std::string aaf_path, target_path;
};

int cmd_synth(const SynthArgs& args) {
    AafHandle af;
    int status = load_aaf(args.aaf_path, af);
    if (status != ARGDIAL_OK) return fail(status);
    std::string target_text;
    if (!read_file(args.target_path, target_text)) return 1;

    DialogueHandle dialogue;
    status = argdial_synthesize(af.value, target_text.c_str(), &dialogue.value);
    if (status != ARGDIAL_OK) return fail(status);

    OwnedString text;
    status = argdial_dialogue_to_text(dialogue.value, &text.value);
    if (status != ARGDIAL_OK) return fail(status);
    std::cout << text.str();
    return 0;
}

// ---- atlas -----------------------------------------------------------------

struct AtlasArgs {
    std::string aaf_path, transform = "base", out_path;
    bool all_orders = false;
    int sample = 0;
    std::uint64_t seed = 0;
};

int cmd_atlas(const AtlasArgs& args) {
    AafHandle af;
    int status = load_aaf(args.aaf_path, af);
    if (status != ARGDIAL_OK) return fail(status);

    OwnedString out;
    if (args.all_orders) {
        status = argdial_atlas_all_orders(af.value, transform_code(args.transform),
                                          &out.value);
    } else {
        status = argdial_atlas_sampled(af.value, transform_code(args.transform),
                                       args.sample, args.seed, &out.value);
    }
    if (status != ARGDIAL_OK) return fail(status);

    if (args.out_path.empty()) {
        std::cout << out.str();
    } else if (!write_file(args.out_path, out.str())) {
        return 1;
    }
    return 0;
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
    std::string aaf_path, transform = "base";
    int random_instances = 0;
    int sequences = 50;
    std::uint64_t seed = 0;
    bool drop_r3 = false;
};

int cmd_check(const CheckArgs& args) {
    OwnedString report_text;
    int status;
    if (!args.aaf_path.empty()) {
        AafHandle af;
        status = load_aaf(args.aaf_path, af);
        if (status != ARGDIAL_OK) return fail(status);
        status = argdial_check_aaf(af.value, transform_code(args.transform), args.sequences,
                                   args.seed, args.drop_r3 ? 1 : 0, &report_text.value);
    } else {
        status = argdial_check_random(transform_code(args.transform), args.random_instances,
                                      args.seed, args.drop_r3 ? 1 : 0, &report_text.value);
    }
    if (status != ARGDIAL_OK && status != ARGDIAL_ERR_CHECK_FAILED) return fail(status);

    json report = json::parse(report_text.str());
    std::cout << "instances: " << report["instances"].get<int>() << "\n"
              << "runs: " << report["runs"].get<int>() << "\n"
              << "states checked: " << report["states_checked"].get<long>() << "\n";
    if (report["violations"].empty()) {
        std::cout << "all checks passed\n";
        return 0;
    }
    const json& v = report["violations"][0];
    std::cout << "violated check: " << v["check"].get<std::string>() << "\n"
              << "message: " << v["message"].get<std::string>() << "\n"
              << "step: " << v["time"].get<int>() << "\n"
              << "counterexample AAF:\n" << v["aaf_apx"].get<std::string>()
              << "counterexample dialogue:\n" << v["dialogue"].get<std::string>();
    return 3;
}

// ---- step (interactive) ------------------------------------------------------

struct StepArgs {
    std::string aaf_path, transform = "base";
    int horizon = 0;
};

void print_session_state(argdial_session* session) {
    OwnedString state;
    if (argdial_session_state_json(session, &state.value) != ARGDIAL_OK) {
        std::cerr << "error: " << argdial_last_error() << "\n";
        return;
    }
    json j = json::parse(state.str());
    print_class_line("present", names(j, "present"));
    print_labelling(j);
}

int cmd_step(const StepArgs& args) {
    AafHandle af;
    int status = load_aaf(args.aaf_path, af);
    if (status != ARGDIAL_OK) return fail(status);

    SessionHandle session;
    status = argdial_session_new(af.value, transform_code(args.transform), args.horizon,
                                 &session.value);
    if (status != ARGDIAL_OK) return fail(status);

    std::string line;
    while (std::getline(std::cin, line)) {
        std::istringstream words(line);
        std::string command;
        words >> command;
        if (command.empty()) continue;
        if (command == "quit") break;
        if (command == "say") {
            std::string argument;
            words >> argument;
            if (argument.empty()) {
                std::cerr << "error: say needs an argument name\n";
                continue;
            }
            if (argdial_session_say(session.value, argument.c_str()) != ARGDIAL_OK) {
                std::cerr << "error: " << argdial_last_error() << "\n";
                continue;
            }
            print_session_state(session.value);
        } else if (command == "show") {
            print_session_state(session.value);
        } else if (command == "trace") {
            OwnedString trace;
            if (argdial_session_trace_json(session.value, &trace.value) != ARGDIAL_OK) {
                std::cerr << "error: " << argdial_last_error() << "\n";
                continue;
            }
            std::cout << trace.str();
        } else if (command == "graph") {
            std::string path;
            words >> path;
            if (path.empty()) {
                std::cerr << "error: graph needs an output path\n";
                continue;
            }
            OwnedString dot;
            if (argdial_session_dot(session.value, &dot.value) != ARGDIAL_OK) {
                std::cerr << "error: " << argdial_last_error() << "\n";
                continue;
            }
            if (write_file(path, dot.str())) std::cout << "wrote " << path << "\n";
        } else {
            std::cerr << "error: unknown command '" << command
                      << "' (say/show/graph/trace/quit)\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Argumentative dialogues as transition systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", argdial_version());

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Run one enunciation order to quiescence");
    run->add_option("--aaf", run_args.aaf_path, "AAF file (.apx/.tgf/.json)")->required();
    run->add_option("--dialogue", run_args.dialogue_path, "dialogue file")->required();
    run->add_option("--transform", run_args.transform, "transformation")
        ->check(CLI::IsMember({"base", "lelu"}));
    run->add_option("--horizon", run_args.horizon, "per-cascade step budget");
    run->add_option("--trace-out", run_args.trace_out, "write the trace document here");
    run->add_option("--dot-dir", run_args.dot_dir,
                    "write one DOT snapshot per argumentative state");

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "Enumerate acceptability labellings");
    oracle->add_option("--aaf", oracle_args.aaf_path, "AAF file")->required();
    oracle->add_option("--semantics", oracle_args.semantics, "labelling family")
        ->check(CLI::IsMember({"complete", "grounded", "preferred", "stable"}));
    oracle->add_option("--oracle-limit", oracle_args.oracle_limit,
                       "argument-count cutoff for enumeration");

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand(
        "synth", "Synthesize an enunciation order reaching a target labelling");
    synth->add_option("--aaf", synth_args.aaf_path, "AAF file")->required();
    synth->add_option("--target", synth_args.target_path, "target labelling JSON")
        ->required();

    AtlasArgs atlas_args;
    CLI::App* atlas = app.add_subcommand("atlas", "Map enunciation orders to outcomes");
    atlas->add_option("--aaf", atlas_args.aaf_path, "AAF file")->required();
    atlas->add_option("--transform", atlas_args.transform, "transformation")
        ->check(CLI::IsMember({"base", "lelu"}));
    CLI::Option* all_orders =
        atlas->add_flag("--all-orders", atlas_args.all_orders, "every enunciation order");
    atlas->add_option("--sample", atlas_args.sample, "number of sampled orders")
        ->excludes(all_orders);
    atlas->add_option("--seed", atlas_args.seed, "sampling seed");
    atlas->add_option("--out", atlas_args.out_path, "output file (default stdout)");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "Run the randomized property checks");
    CLI::Option* check_aaf = check->add_option("--aaf", check_args.aaf_path, "fixed AAF file");
    check->add_option("--random", check_args.random_instances,
                      "number of random instances")
        ->excludes(check_aaf);
    check->add_option("--sequences", check_args.sequences,
                      "dialogues to generate for a fixed AAF");
    check->add_option("--seed", check_args.seed, "generator seed");
    check->add_flag("--inject-drop-r3", check_args.drop_r3,
                    "fault injection: drop cross-pair priority edges");
    check->add_option("--transform", check_args.transform, "transformation")
        ->check(CLI::IsMember({"base", "lelu"}));

    StepArgs step_args;
    CLI::App* step = app.add_subcommand("step", "Interactive enunciation session");
    step->add_option("--aaf", step_args.aaf_path, "AAF file")->required();
    step->add_option("--transform", step_args.transform, "transformation")
        ->check(CLI::IsMember({"base", "lelu"}));
    step->add_option("--horizon", step_args.horizon, "per-cascade step budget");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cmd_run(run_args);
    if (oracle->parsed()) return cmd_oracle(oracle_args);
    if (synth->parsed()) return cmd_synth(synth_args);
    if (atlas->parsed()) return cmd_atlas(atlas_args);
    if (check->parsed()) {
        if (check_args.aaf_path.empty() && check_args.random_instances <= 0) {
            std::cerr << "error: check needs --aaf or --random N\n";
            return 1;
        }
        return cmd_check(check_args);
    }
    if (step->parsed()) return cmd_step(step_args);
    return 1;
}
