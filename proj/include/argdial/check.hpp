#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "argdial/adl.hpp"
#include "argdial/rng.hpp"
#include "argdial/transform.hpp"

namespace argdial::check {

struct GeneratorOptions {
    int min_args = 1;
    int max_args = 7;
    double attack_prob = 0.3;  // each ordered pair, independently
};

// Random AAF with single-letter argument names starting at 'a'.
aaf::Aaf random_aaf(Rng& rng, const GeneratorOptions& options = {});

// Random enunciation order: a shuffle of all arguments broken into rank
// groups at random gaps.
aaf::Dialogue random_dialogue(Rng& rng, const aaf::Aaf& af);

struct CheckOptions {
    TransformKind kind = TransformKind::Base;
    // Number of random (AAF, dialogue) instances; 0 means a fixed AAF was
    // supplied and `sequences_per_aaf` dialogues are generated for it.
    int random_instances = 0;
    int sequences_per_aaf = 50;
    std::uint64_t seed = 0;
    // Fault injection: build contexts without the cross-pair loss-beats-
    // rejection priority edges and let the checks catch the damage.
    bool drop_r3 = false;
    int horizon = 0;
    GeneratorOptions generator;
};

struct Violation {
    std::string check;
    std::string aaf_apx;   // counterexample AAF, canonical APX text
    std::string dialogue;  // counterexample enunciation order, dialogue text
    int time = -1;         // offending step, -1 when not step-specific
    std::string message;
};

struct CheckReport {
    int instances = 0;
    int runs = 0;
    long states_checked = 0;
    std::vector<std::string> checks_run;
    std::vector<Violation> violations;  // at most one; checking stops early
    bool ok() const { return violations.empty(); }
};

// Runs every trace-level check over random instances (or over generated
// dialogues for `fixed`): no argument ever both accepted and rejected,
// quiescence coincides with the settled-state predicate, cascades respect
// the step budget (and the linear bound for the unsplit transformation),
// read-off labellings are complete for the associated graph, and repeated
// runs serialize identically.
CheckReport run_checks(const std::optional<aaf::Aaf>& fixed, const CheckOptions& options);

}  // namespace argdial::check
