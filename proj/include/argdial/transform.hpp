#pragma once

#include <memory>

#include "argdial/adl.hpp"

namespace argdial::transform {

using argdial::TransformKind;

struct BuildOptions {
    // Instantiate attack-propagation events for every ordered pair of
    // distinct arguments (plus declared self-attacks); pairs without an
    // attack get a constant-false trigger and can never fire. When false,
    // only declared attacks are instantiated. Both settings produce
    // identical traces.
    bool all_pairs = true;
    // Drops the cross-pair "loss before rejection" priority edges. Only the
    // check suite should ever set this; it exists to prove the checks can
    // detect a broken priority table.
    bool omit_r3 = false;
    // Per-cascade step budget; 0 selects the default.
    int horizon = 0;
};

int default_horizon(int fluent_count);

// Canonical fluent table for an AAF: presence/acceptance/rejection per
// argument (plus a freshness mark for the split transformation), then one
// capability fluent per declared attack.
adl::FluentTable make_fluents(const aaf::Aaf& af, TransformKind kind);

// No argument present; every argument unaccepted and rejected; capability
// fluents true; freshness marks clear.
adl::State initial_state(const aaf::Aaf& af, TransformKind kind);

std::shared_ptr<const adl::Context> build_base_context(const aaf::Aaf& af,
                                                       const BuildOptions& options = {});
std::shared_ptr<const adl::Context> build_lelu_context(const aaf::Aaf& af,
                                                       const BuildOptions& options = {});
std::shared_ptr<const adl::Context> build_context(const aaf::Aaf& af, TransformKind kind,
                                                  const BuildOptions& options = {});

}  // namespace argdial::transform
