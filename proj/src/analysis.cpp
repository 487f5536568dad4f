#include "argdial/analysis.hpp"

#include <algorithm>
#include <map>

#include "argdial/rng.hpp"

namespace argdial::analysis {

namespace {

struct StateView {
    const adl::Context& context;
    const adl::State& state;

    bool get(const adl::Fluent& f) const { return state.value(context.fluents().require(f)); }
    bool present(int x) const { return get(adl::present(x)); }
    bool accepted(int x) const { return get(adl::in(x)); }
    bool rejected(int x) const { return get(adl::out(x)); }
    bool marked(int x) const { return get(adl::last(x)); }
};

}  // namespace

bool is_sigma_c_state(const adl::Context& context, const adl::State& state) {
    const aaf::Aaf& af = context.info().af;
    StateView v{context, state};
    if (context.info().kind == TransformKind::Lelu) {
        for (int x = 0; x < af.size(); ++x) {
            if (v.marked(x)) return false;
        }
    }
    for (int x = 0; x < af.size(); ++x) {
        bool accepted_now = v.present(x) && v.accepted(x) && !v.rejected(x);
        bool every_attacker_rejected = true;
        for (int y : af.attackers_of(x)) {
            if (!(!v.accepted(y) && v.rejected(y))) {
                every_attacker_rejected = false;
                break;
            }
        }
        if (accepted_now != (v.present(x) && every_attacker_rejected)) return false;

        bool rejected_now = v.present(x) && !v.accepted(x) && v.rejected(x);
        bool some_attacker_accepted = false;
        for (int y : af.attackers_of(x)) {
            if (v.present(x) && v.present(y) && v.accepted(y) && !v.rejected(y)) {
                some_attacker_accepted = true;
                break;
            }
        }
        if (rejected_now != some_attacker_accepted) return false;
    }
    return true;
}

bool is_sigma_s_state(const adl::Context& context, const adl::State& state) {
    if (!is_sigma_c_state(context, state)) return false;
    const aaf::Aaf& af = context.info().af;
    StateView v{context, state};
    for (int x = 0; x < af.size(); ++x) {
        if (v.present(x) && v.accepted(x) == v.rejected(x)) return false;
    }
    return true;
}

aaf::Labelling associated_labelling(const adl::Context& context, const adl::State& state) {
    const aaf::Aaf& af = context.info().af;
    StateView v{context, state};
    std::vector<std::string> universe, in, out, undec;
    for (int x = 0; x < af.size(); ++x) {
        if (!v.present(x)) continue;
        universe.push_back(af.argument(x));
        bool i = v.accepted(x), o = v.rejected(x);
        if (i && o) {
            throw IntegrityError("argument '" + af.argument(x) +
                                 "' is marked both accepted and rejected");
        }
        if (i) in.push_back(af.argument(x));
        else if (o) out.push_back(af.argument(x));
        else undec.push_back(af.argument(x));
    }
    return aaf::Labelling(std::move(universe), std::move(in), std::move(out), std::move(undec));
}

aaf::Aaf associated_graph(const adl::Context& context, const adl::State& state) {
    const aaf::Aaf& af = context.info().af;
    StateView v{context, state};
    aaf::Aaf g;
    for (int x = 0; x < af.size(); ++x) {
        if (v.present(x)) g.add_argument(af.argument(x));
    }
    for (auto [y, x] : af.attacks()) {
        if (v.present(y) && v.present(x)) g.add_attack(af.argument(y), af.argument(x));
    }
    return g;
}

CorrectnessReport check_correctness(const adl::Trace& trace) {
    if (!trace.context) return {false, -1, "trace has no context"};
    for (int t : trace.argumentative_marks) {
        const adl::State& state = trace.states.at(static_cast<std::size_t>(t));
        try {
            aaf::Aaf graph = associated_graph(*trace.context, state);
            aaf::Labelling labelling = associated_labelling(*trace.context, state);
            if (!aaf::is_complete_labelling(graph, labelling)) {
                return {false, t,
                        "labelling at time " + std::to_string(t) +
                            " is not complete for the associated graph"};
            }
        } catch (const Error& e) {
            return {false, t, e.what()};
        }
    }
    return {};
}

aaf::Dialogue synthesize_sequence(const aaf::Aaf& af, const aaf::Labelling& target) {
    if (!aaf::is_complete_labelling(af, target)) {
        throw DomainError("target is not a complete labelling of the AAF");
    }
    aaf::Dialogue dialogue;
    std::uint32_t rank = 0;
    for (const auto* group : {&target.out_set(), &target.in_set(), &target.undec_set()}) {
        if (group->empty()) continue;
        for (const std::string& name : *group) dialogue.add(name, rank);
        ++rank;
    }
    adl::Trace trace = adl::run(transform::build_lelu_context(af), dialogue);
    aaf::Labelling reached = associated_labelling(*trace.context, trace.final_state());
    if (!(reached == target)) {
        throw IntegrityError("synthesized sequence does not reproduce the target labelling");
    }
    return dialogue;
}

std::string atlas_key(const std::vector<std::vector<std::string>>& groups) {
    std::string key;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (g > 0) key.push_back('|');
        for (std::size_t i = 0; i < groups[g].size(); ++i) {
            if (i > 0) key.push_back(',');
            key += groups[g][i];
        }
    }
    return key;
}

namespace {

AtlasEntry atlas_entry(std::shared_ptr<const adl::Context> context,
                       std::vector<std::vector<std::string>> groups) {
    aaf::Dialogue dialogue;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::sort(groups[g].begin(), groups[g].end());
        for (const std::string& name : groups[g]) {
            dialogue.add(name, static_cast<std::uint32_t>(g));
        }
    }
    adl::Trace trace = adl::run(std::move(context), dialogue);
    aaf::Labelling final = associated_labelling(*trace.context, trace.final_state());
    return AtlasEntry{std::move(groups), std::move(final)};
}

Atlas finish_atlas(TransformKind kind, std::map<std::string, AtlasEntry>&& by_key) {
    Atlas atlas;
    atlas.kind = kind;
    for (auto& [key, entry] : by_key) atlas.entries.push_back(std::move(entry));
    return atlas;
}

}  // namespace

Atlas atlas_all_orders(const aaf::Aaf& af, TransformKind kind, int limit) {
    if (af.size() > limit) {
        throw CapacityError("all-orders atlas limited to " + std::to_string(limit) +
                            " arguments, got " + std::to_string(af.size()));
    }
    std::shared_ptr<const adl::Context> context = transform::build_context(af, kind);
    std::map<std::string, AtlasEntry> by_key;

    const int n = af.size();
    if (n == 0) {
        AtlasEntry entry = atlas_entry(context, {});
        by_key.emplace(atlas_key(entry.groups), std::move(entry));
        return finish_atlas(kind, std::move(by_key));
    }

    // Ordered set partitions: surjections onto {0..k-1} for each group count
    // k, enumerated lexicographically.
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        while (true) {
            std::vector<bool> seen(static_cast<std::size_t>(k), false);
            for (int a : assign) seen[static_cast<std::size_t>(a)] = true;
            if (std::find(seen.begin(), seen.end(), false) == seen.end()) {
                std::vector<std::vector<std::string>> groups(static_cast<std::size_t>(k));
                for (int x = 0; x < n; ++x) {
                    groups[static_cast<std::size_t>(assign[static_cast<std::size_t>(x)])]
                        .push_back(af.argument(x));
                }
                AtlasEntry entry = atlas_entry(context, std::move(groups));
                by_key.emplace(atlas_key(entry.groups), std::move(entry));
            }
            int pos = n - 1;
            while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == k - 1) {
                assign[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++assign[static_cast<std::size_t>(pos)];
        }
    }
    return finish_atlas(kind, std::move(by_key));
}

Atlas atlas_sampled(const aaf::Aaf& af, TransformKind kind, int samples, std::uint64_t seed) {
    if (samples < 0) throw DomainError("sample count must be non-negative");
    std::shared_ptr<const adl::Context> context = transform::build_context(af, kind);
    std::map<std::string, AtlasEntry> by_key;
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<std::string> order = af.arguments();
        rng.shuffle(order);
        std::vector<std::vector<std::string>> groups;
        for (const std::string& name : order) {
            if (groups.empty() || rng.bernoulli(0.5)) groups.emplace_back();
            groups.back().push_back(name);
        }
        AtlasEntry entry = atlas_entry(context, std::move(groups));
        by_key.emplace(atlas_key(entry.groups), std::move(entry));
    }
    return finish_atlas(kind, std::move(by_key));
}

}  // namespace argdial::analysis
