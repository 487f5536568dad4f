#include "argdial.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <string>

#include "argdial/aaf.hpp"
#include "argdial/adl.hpp"
#include "argdial/analysis.hpp"
#include "argdial/check.hpp"
#include "argdial/errors.hpp"
#include "argdial/io.hpp"
#include "argdial/transform.hpp"
#include "argdial/version.hpp"
#include "json.hpp"

using namespace argdial;

struct argdial_aaf {
    aaf::Aaf af;
};

struct argdial_dialogue {
    aaf::Dialogue dialogue;
};

struct argdial_trace {
    adl::Trace trace;
};

struct argdial_session {
    aaf::Aaf af;
    TransformKind kind = TransformKind::Base;
    std::shared_ptr<const adl::Context> context;
    std::vector<std::string> says;
    adl::Trace trace;

    void rerun() {
        aaf::Dialogue dialogue;
        for (std::size_t i = 0; i < says.size(); ++i) {
            dialogue.add(says[i], static_cast<std::uint32_t>(i));
        }
        trace = adl::run(context, dialogue);
    }
};

namespace {

thread_local std::string t_last_error;

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
int wrap(Fn&& fn) {
    try {
        int code = fn();
        if (code == ARGDIAL_OK) t_last_error.clear();
        return code;
    } catch (const ParseError& e) {
        t_last_error = e.what();
        return ARGDIAL_ERR_PARSE;
    } catch (const DomainError& e) {
        t_last_error = e.what();
        return ARGDIAL_ERR_DOMAIN;
    } catch (const CapacityError& e) {
        t_last_error = e.what();
        return ARGDIAL_ERR_CAPACITY;
    } catch (const BudgetError& e) {
        t_last_error = e.what();
        return ARGDIAL_ERR_BUDGET;
    } catch (const ConflictError& e) {
        t_last_error = e.what();
        return ARGDIAL_ERR_CONFLICT;
    } catch (const IntegrityError& e) {
        t_last_error = e.what();
        return ARGDIAL_ERR_INTEGRITY;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return ARGDIAL_ERR_INTERNAL;
    }
}

int invalid(const char* message) {
    t_last_error = message;
    return ARGDIAL_ERR_INVALID;
}

bool decode_transform(int transform, TransformKind& kind) {
    if (transform == ARGDIAL_TRANSFORM_BASE) {
        kind = TransformKind::Base;
        return true;
    }
    if (transform == ARGDIAL_TRANSFORM_LELU) {
        kind = TransformKind::Lelu;
        return true;
    }
    return false;
}

std::string check_report_json(const check::CheckReport& report) {
    nlohmann::json j;
    j["instances"] = report.instances;
    j["runs"] = report.runs;
    j["states_checked"] = report.states_checked;
    j["checks"] = report.checks_run;
    j["violations"] = nlohmann::json::array();
    for (const check::Violation& v : report.violations) {
        nlohmann::json vj;
        vj["check"] = v.check;
        vj["aaf_apx"] = v.aaf_apx;
        vj["dialogue"] = v.dialogue;
        vj["time"] = v.time;
        vj["message"] = v.message;
        j["violations"].push_back(std::move(vj));
    }
    return j.dump(2) + "\n";
}

int finish_check(const check::CheckReport& report, char** report_json) {
    *report_json = copy_string(check_report_json(report));
    if (!report.ok()) {
        t_last_error = "check suite found a violation: " + report.violations.front().check;
        return ARGDIAL_ERR_CHECK_FAILED;
    }
    return ARGDIAL_OK;
}

std::string state_json(const adl::Context& context, const adl::State& state) {
    nlohmann::json j;
    const aaf::Aaf& af = context.info().af;
    const adl::FluentTable& table = context.fluents();
    std::vector<std::string> present, in, out, undec, last;
    for (int x = 0; x < af.size(); ++x) {
        const std::string& name = af.argument(x);
        if (context.info().kind == TransformKind::Lelu &&
            state.value(table.require(adl::last(x)))) {
            last.push_back(name);
        }
        if (!state.value(table.require(adl::present(x)))) continue;
        present.push_back(name);
        bool i = state.value(table.require(adl::in(x)));
        bool o = state.value(table.require(adl::out(x)));
        if (i && !o) in.push_back(name);
        if (!i && o) out.push_back(name);
        if (!i && !o) undec.push_back(name);
    }
    for (auto* v : {&present, &in, &out, &undec, &last}) std::sort(v->begin(), v->end());
    j["present"] = present;
    j["in"] = in;
    j["out"] = out;
    j["undec"] = undec;
    j["last"] = last;
    return j.dump(2) + "\n";
}

}  // namespace

extern "C" {

const char* argdial_version(void) { return kToolVersion; }

const char* argdial_last_error(void) { return t_last_error.c_str(); }

void argdial_string_free(char* s) { delete[] s; }

int argdial_aaf_from_apx(const char* text, argdial_aaf** out) {
    if (!text || !out) return invalid("null argument");
    return wrap([&] {
        *out = new argdial_aaf{io::parse_apx(text)};
        return ARGDIAL_OK;
    });
}

int argdial_aaf_from_tgf(const char* text, argdial_aaf** out) {
    if (!text || !out) return invalid("null argument");
    return wrap([&] {
        *out = new argdial_aaf{io::parse_tgf(text)};
        return ARGDIAL_OK;
    });
}

int argdial_aaf_from_json(const char* text, argdial_aaf** out) {
    if (!text || !out) return invalid("null argument");
    return wrap([&] {
        *out = new argdial_aaf{io::parse_aaf_json(text)};
        return ARGDIAL_OK;
    });
}

int argdial_aaf_to_apx(const argdial_aaf* af, char** out) {
    if (!af || !out) return invalid("null argument");
    return wrap([&] {
        *out = copy_string(io::emit_apx(af->af));
        return ARGDIAL_OK;
    });
}

int argdial_aaf_digest_hex(const argdial_aaf* af, char** out) {
    if (!af || !out) return invalid("null argument");
    return wrap([&] {
        *out = copy_string(io::aaf_digest_hex(af->af));
        return ARGDIAL_OK;
    });
}

int argdial_aaf_argument_count(const argdial_aaf* af, size_t* out) {
    if (!af || !out) return invalid("null argument");
    *out = static_cast<size_t>(af->af.size());
    return ARGDIAL_OK;
}

void argdial_aaf_free(argdial_aaf* af) { delete af; }

int argdial_dialogue_from_text(const char* text, argdial_dialogue** out) {
    if (!text || !out) return invalid("null argument");
    return wrap([&] {
        *out = new argdial_dialogue{io::parse_dialogue(text)};
        return ARGDIAL_OK;
    });
}

int argdial_dialogue_from_json(const char* text, argdial_dialogue** out) {
    if (!text || !out) return invalid("null argument");
    return wrap([&] {
        *out = new argdial_dialogue{io::parse_dialogue_json(text)};
        return ARGDIAL_OK;
    });
}

int argdial_dialogue_to_text(const argdial_dialogue* dialogue, char** out) {
    if (!dialogue || !out) return invalid("null argument");
    return wrap([&] {
        *out = copy_string(io::emit_dialogue(dialogue->dialogue));
        return ARGDIAL_OK;
    });
}

void argdial_dialogue_free(argdial_dialogue* dialogue) { delete dialogue; }

int argdial_oracle(const argdial_aaf* af, int semantics, int oracle_limit,
                   char** labellings_json) {
    if (!af || !labellings_json) return invalid("null argument");
    aaf::Semantics sem;
    switch (semantics) {
        case ARGDIAL_SEMANTICS_COMPLETE: sem = aaf::Semantics::Complete; break;
        case ARGDIAL_SEMANTICS_GROUNDED: sem = aaf::Semantics::Grounded; break;
        case ARGDIAL_SEMANTICS_PREFERRED: sem = aaf::Semantics::Preferred; break;
        case ARGDIAL_SEMANTICS_STABLE: sem = aaf::Semantics::Stable; break;
        default: return invalid("unknown semantics");
    }
    return wrap([&] {
        int limit = oracle_limit > 0 ? oracle_limit : aaf::kDefaultOracleLimit;
        std::vector<aaf::Labelling> all = aaf::enumerate_complete_labellings(af->af, limit);
        *labellings_json = copy_string(io::emit_labellings_json(
            aaf::filter_semantics(all, sem)));
        return ARGDIAL_OK;
    });
}

int argdial_run(const argdial_aaf* af, const argdial_dialogue* dialogue, int transform,
                int horizon, argdial_trace** out) {
    if (!af || !dialogue || !out) return invalid("null argument");
    TransformKind kind;
    if (!decode_transform(transform, kind)) return invalid("unknown transform");
    return wrap([&] {
        transform::BuildOptions options;
        options.horizon = horizon;
        *out = new argdial_trace{
            adl::run(transform::build_context(af->af, kind, options), dialogue->dialogue)};
        return ARGDIAL_OK;
    });
}

int argdial_trace_to_json(const argdial_trace* trace, char** out) {
    if (!trace || !out) return invalid("null argument");
    return wrap([&] {
        *out = copy_string(io::emit_trace(trace->trace));
        return ARGDIAL_OK;
    });
}

int argdial_trace_final_labelling(const argdial_trace* trace, char** out) {
    if (!trace || !out) return invalid("null argument");
    return wrap([&] {
        *out = copy_string(io::emit_labelling_json(
            analysis::associated_labelling(*trace->trace.context,
                                           trace->trace.final_state())));
        return ARGDIAL_OK;
    });
}

int argdial_trace_state_count(const argdial_trace* trace, size_t* out) {
    if (!trace || !out) return invalid("null argument");
    *out = trace->trace.states.size();
    return ARGDIAL_OK;
}

int argdial_trace_mark_count(const argdial_trace* trace, size_t* out) {
    if (!trace || !out) return invalid("null argument");
    *out = trace->trace.argumentative_marks.size();
    return ARGDIAL_OK;
}

int argdial_trace_mark_at(const argdial_trace* trace, size_t index, size_t* out) {
    if (!trace || !out) return invalid("null argument");
    if (index >= trace->trace.argumentative_marks.size()) {
        return invalid("mark index out of range");
    }
    *out = static_cast<size_t>(trace->trace.argumentative_marks[index]);
    return ARGDIAL_OK;
}

int argdial_trace_state_dot(const argdial_trace* trace, size_t state_index, char** out) {
    if (!trace || !out) return invalid("null argument");
    if (state_index >= trace->trace.states.size()) return invalid("state index out of range");
    return wrap([&] {
        *out = copy_string(
            io::emit_dot(*trace->trace.context, trace->trace.states[state_index]));
        return ARGDIAL_OK;
    });
}

void argdial_trace_free(argdial_trace* trace) { delete trace; }

int argdial_synthesize(const argdial_aaf* af, const char* target_labelling_json,
                       argdial_dialogue** out) {
    if (!af || !target_labelling_json || !out) return invalid("null argument");
    return wrap([&] {
        aaf::Labelling target = io::parse_labelling_json(target_labelling_json, af->af);
        *out = new argdial_dialogue{analysis::synthesize_sequence(af->af, target)};
        return ARGDIAL_OK;
    });
}

int argdial_atlas_all_orders(const argdial_aaf* af, int transform, char** json_out) {
    if (!af || !json_out) return invalid("null argument");
    TransformKind kind;
    if (!decode_transform(transform, kind)) return invalid("unknown transform");
    return wrap([&] {
        *json_out = copy_string(
            io::emit_atlas_json(analysis::atlas_all_orders(af->af, kind), af->af));
        return ARGDIAL_OK;
    });
}

int argdial_atlas_sampled(const argdial_aaf* af, int transform, int samples, uint64_t seed,
                          char** json_out) {
    if (!af || !json_out) return invalid("null argument");
    TransformKind kind;
    if (!decode_transform(transform, kind)) return invalid("unknown transform");
    return wrap([&] {
        *json_out = copy_string(io::emit_atlas_json(
            analysis::atlas_sampled(af->af, kind, samples, seed), af->af));
        return ARGDIAL_OK;
    });
}

int argdial_check_random(int transform, int instances, uint64_t seed, int drop_r3,
                         char** report_json) {
    if (!report_json) return invalid("null argument");
    if (instances <= 0) return invalid("instance count must be positive");
    TransformKind kind;
    if (!decode_transform(transform, kind)) return invalid("unknown transform");
    return wrap([&] {
        check::CheckOptions options;
        options.kind = kind;
        options.random_instances = instances;
        options.seed = seed;
        options.drop_r3 = drop_r3 != 0;
        return finish_check(check::run_checks(std::nullopt, options), report_json);
    });
}

int argdial_check_aaf(const argdial_aaf* af, int transform, int sequences, uint64_t seed,
                      int drop_r3, char** report_json) {
    if (!af || !report_json) return invalid("null argument");
    if (sequences <= 0) return invalid("sequence count must be positive");
    TransformKind kind;
    if (!decode_transform(transform, kind)) return invalid("unknown transform");
    return wrap([&] {
        check::CheckOptions options;
        options.kind = kind;
        options.sequences_per_aaf = sequences;
        options.seed = seed;
        options.drop_r3 = drop_r3 != 0;
        return finish_check(check::run_checks(af->af, options), report_json);
    });
}

int argdial_session_new(const argdial_aaf* af, int transform, int horizon,
                        argdial_session** out) {
    if (!af || !out) return invalid("null argument");
    TransformKind kind;
    if (!decode_transform(transform, kind)) return invalid("unknown transform");
    return wrap([&] {
        auto session = std::make_unique<argdial_session>();
        session->af = af->af;
        session->kind = kind;
        transform::BuildOptions options;
        options.horizon = horizon;
        session->context = transform::build_context(session->af, kind, options);
        session->rerun();
        *out = session.release();
        return ARGDIAL_OK;
    });
}

int argdial_session_say(argdial_session* session, const char* argument) {
    if (!session || !argument) return invalid("null argument");
    return wrap([&] {
        if (!session->af.index_of(argument)) {
            throw DomainError("unknown argument '" + std::string(argument) + "'");
        }
        session->says.emplace_back(argument);
        try {
            session->rerun();
        } catch (...) {
            session->says.pop_back();
            session->rerun();
            throw;
        }
        return ARGDIAL_OK;
    });
}

int argdial_session_state_json(const argdial_session* session, char** out) {
    if (!session || !out) return invalid("null argument");
    return wrap([&] {
        *out = copy_string(state_json(*session->context, session->trace.final_state()));
        return ARGDIAL_OK;
    });
}

int argdial_session_trace_json(const argdial_session* session, char** out) {
    if (!session || !out) return invalid("null argument");
    return wrap([&] {
        *out = copy_string(io::emit_trace(session->trace));
        return ARGDIAL_OK;
    });
}

int argdial_session_dot(const argdial_session* session, char** out) {
    if (!session || !out) return invalid("null argument");
    return wrap([&] {
        *out = copy_string(io::emit_dot(*session->context, session->trace.final_state()));
        return ARGDIAL_OK;
    });
}

void argdial_session_free(argdial_session* session) { delete session; }

}  // extern "C"
