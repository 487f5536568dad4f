#include "argdial/check.hpp"

#include <algorithm>

#include "argdial/analysis.hpp"
#include "argdial/io.hpp"

namespace argdial::check {

aaf::Aaf random_aaf(Rng& rng, const GeneratorOptions& options) {
    if (options.min_args < 0 || options.max_args < options.min_args) {
        throw DomainError("invalid generator bounds");
    }
    int n = options.min_args + rng.uniform_int(options.max_args - options.min_args + 1);
    aaf::Aaf af;
    for (int i = 0; i < n; ++i) {
        af.add_argument(std::string(1, static_cast<char>('a' + i)));
    }
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            if (rng.bernoulli(options.attack_prob)) af.add_attack(y, x);
        }
    }
    return af;
}

aaf::Dialogue random_dialogue(Rng& rng, const aaf::Aaf& af) {
    std::vector<std::string> order = af.arguments();
    rng.shuffle(order);
    aaf::Dialogue dialogue;
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && rng.bernoulli(0.5)) ++rank;
        dialogue.add(order[i], rank);
    }
    return dialogue;
}

namespace {

struct Checker {
    const CheckOptions& options;
    CheckReport report;

    bool record(const std::string& check, const aaf::Aaf& af, const aaf::Dialogue& dialogue,
                int time, const std::string& message) {
        report.violations.push_back(Violation{check, io::emit_apx(af),
                                              io::emit_dialogue(dialogue), time, message});
        return false;
    }

    // All trace-level checks for one (AAF, dialogue) instance. Returns false
    // as soon as a violation is recorded.
    bool check_instance(const aaf::Aaf& af, const aaf::Dialogue& dialogue) {
        transform::BuildOptions build;
        build.omit_r3 = options.drop_r3;
        build.horizon = options.horizon;
        std::shared_ptr<const adl::Context> context =
            transform::build_context(af, options.kind, build);

        adl::Trace trace;
        try {
            trace = adl::run(context, dialogue);
        } catch (const BudgetError& e) {
            return record("termination-budget", af, dialogue, -1, e.what());
        }
        ++report.runs;

        const adl::FluentTable& table = context->fluents();
        for (std::size_t t = 0; t < trace.states.size(); ++t) {
            const adl::State& state = trace.states[t];
            ++report.states_checked;

            // No argument is ever both accepted and rejected.
            for (int x = 0; x < af.size(); ++x) {
                if (state.value(table.require(adl::in(x))) &&
                    state.value(table.require(adl::out(x)))) {
                    return record("no-accept-and-reject", af, dialogue, static_cast<int>(t),
                                  "argument '" + af.argument(x) +
                                      "' is both accepted and rejected");
                }
            }

            // Quiescence coincides with the settled-state predicate.
            bool quiescent = adl::triggered_exogenous(*context, state).empty();
            bool settled = analysis::is_sigma_c_state(*context, state);
            if (quiescent != settled) {
                return record("quiescence-is-settled", af, dialogue, static_cast<int>(t),
                              quiescent ? "quiescent state is not settled"
                                        : "settled state still triggers events");
            }
        }

        // Cascades stay within the linear bound for the unsplit
        // transformation: consecutive marks at most 4|A|+1 steps apart.
        if (options.kind == TransformKind::Base) {
            for (std::size_t m = 1; m < trace.argumentative_marks.size(); ++m) {
                int gap = trace.argumentative_marks[m] - trace.argumentative_marks[m - 1];
                if (gap - 1 > 4 * af.size()) {
                    return record("cascade-linear-bound", af, dialogue,
                                  trace.argumentative_marks[m],
                                  "cascade of " + std::to_string(gap - 1) +
                                      " steps exceeds 4*" + std::to_string(af.size()));
                }
            }
        }

        // Read-off labellings at argumentative marks are complete for the
        // associated graph.
        analysis::CorrectnessReport correctness = analysis::check_correctness(trace);
        if (!correctness.ok) {
            return record("labelling-complete", af, dialogue, correctness.violation_time,
                          correctness.message);
        }

        // Repeated runs serialize identically.
        adl::Trace again = adl::run(context, dialogue);
        if (io::emit_trace(trace) != io::emit_trace(again)) {
            return record("deterministic-serialization", af, dialogue, -1,
                          "two runs of the same setting emitted different bytes");
        }
        return true;
    }
};

}  // namespace

CheckReport run_checks(const std::optional<aaf::Aaf>& fixed, const CheckOptions& options) {
    Checker checker{options, {}};
    checker.report.checks_run = {"termination-budget", "no-accept-and-reject",
                                 "quiescence-is-settled", "cascade-linear-bound",
                                 "labelling-complete", "deterministic-serialization"};
    Rng rng(options.seed);

    if (fixed) {
        ++checker.report.instances;
        // Two canonical orders first (declaration order one by one, then all
        // at once), then seeded random ones.
        aaf::Dialogue sequential, simultaneous;
        for (int x = 0; x < fixed->size(); ++x) {
            sequential.add(fixed->argument(x), static_cast<std::uint32_t>(x));
            simultaneous.add(fixed->argument(x), 0);
        }
        if (!checker.check_instance(*fixed, sequential)) return checker.report;
        if (!checker.check_instance(*fixed, simultaneous)) return checker.report;
        for (int s = 0; s + 2 < options.sequences_per_aaf; ++s) {
            if (!checker.check_instance(*fixed, random_dialogue(rng, *fixed))) {
                return checker.report;
            }
        }
        return checker.report;
    }

    for (int i = 0; i < options.random_instances; ++i) {
        ++checker.report.instances;
        aaf::Aaf af = random_aaf(rng, options.generator);
        aaf::Dialogue dialogue = random_dialogue(rng, af);
        if (!checker.check_instance(af, dialogue)) return checker.report;
    }
    return checker.report;
}

}  // namespace argdial::check
