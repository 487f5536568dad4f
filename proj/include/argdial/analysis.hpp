#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "argdial/adl.hpp"
#include "argdial/transform.hpp"

namespace argdial::analysis {

// True when the state is argumentatively settled: an argument is accepted
// exactly when it is present with every present attacker rejected, and
// rejected exactly when some present attacker is accepted. For the
// freshness-split transformation the state must also carry no pending
// freshness marks. Equivalent to quiescence for states reached by runs.
bool is_sigma_c_state(const adl::Context& context, const adl::State& state);

// Settled and with no undecided present argument.
bool is_sigma_s_state(const adl::Context& context, const adl::State& state);

// IN/OUT/UNDEC read-off over the present arguments. IntegrityError if some
// present argument is marked both accepted and rejected.
aaf::Labelling associated_labelling(const adl::Context& context, const adl::State& state);

// Sub-AAF induced by the present arguments.
aaf::Aaf associated_graph(const adl::Context& context, const adl::State& state);

struct CorrectnessReport {
    bool ok = true;
    int violation_time = -1;  // -1 when ok
    std::string message;
};

// Replays every argumentative mark of the trace and checks the read-off
// labelling against the brute-force completeness oracle on the associated
// graph. Reports the first violation.
CorrectnessReport check_correctness(const adl::Trace& trace);

// Enunciation order whose freshness-split run ends in `target`: rejected
// arguments first, then accepted, then undecided, empty groups skipped.
// DomainError if the target is not a complete labelling of `af`; the result
// is verified by running it before it is returned.
aaf::Dialogue synthesize_sequence(const aaf::Aaf& af, const aaf::Labelling& target);

struct AtlasEntry {
    std::vector<std::vector<std::string>> groups;  // rank groups, members sorted
    aaf::Labelling final_labelling;
};

struct Atlas {
    TransformKind kind = TransformKind::Base;
    std::vector<AtlasEntry> entries;  // sorted by atlas_key of the groups
};

// Canonical key: groups joined with '|', members joined with ','.
std::string atlas_key(const std::vector<std::vector<std::string>>& groups);

inline constexpr int kAllOrdersLimit = 6;

// Final labelling of every enunciation order (every ordered set partition of
// the arguments, each argument exactly once). CapacityError above `limit`.
Atlas atlas_all_orders(const aaf::Aaf& af, TransformKind kind, int limit = kAllOrdersLimit);

// Same map over `samples` seeded random orders (duplicates collapse).
Atlas atlas_sampled(const aaf::Aaf& af, TransformKind kind, int samples, std::uint64_t seed);

}  // namespace argdial::analysis
