#include "argdial/transform.hpp"

#include <utility>

namespace argdial::transform {

using adl::Event;
using adl::EventFamily;
using adl::EventKind;
using adl::EventLabel;
using adl::FluentTable;
using adl::Formula;
using adl::Literal;
using adl::State;

int default_horizon(int fluent_count) { return 16 * (fluent_count + 1); }

adl::FluentTable make_fluents(const aaf::Aaf& af, TransformKind kind) {
    FluentTable table;
    for (int x = 0; x < af.size(); ++x) {
        table.add(adl::present(x));
        table.add(adl::in(x));
        table.add(adl::out(x));
        if (kind == TransformKind::Lelu) table.add(adl::last(x));
    }
    for (auto [y, x] : af.attacks()) table.add(adl::can_attack(y, x));
    return table;
}

adl::State initial_state(const aaf::Aaf& af, TransformKind kind) {
    FluentTable table = make_fluents(af, kind);
    State s(table.size());
    for (int f = 0; f < table.size(); ++f) {
        switch (table.at(f).kind) {
            case adl::FluentKind::Out:
            case adl::FluentKind::CanAttack:
                s.set(f, true);
                break;
            default:
                break;
        }
    }
    return s;
}

namespace {

// Builds every event of one transformation. The freshness-split
// transformation instantiates each exogenous family twice (guarded on a
// clear or set freshness mark) plus one cleanup event per argument.
struct Builder {
    const aaf::Aaf& af;
    const BuildOptions& options;
    TransformKind kind;
    FluentTable table;

    std::vector<Event> events;
    std::vector<std::pair<int, int>> priority;

    // Pairs (attacker, target) that get attack-propagation events.
    std::vector<std::pair<int, int>> pairs;

    explicit Builder(const aaf::Aaf& af_, TransformKind kind_, const BuildOptions& options_)
        : af(af_), options(options_), kind(kind_), table(make_fluents(af_, kind_)) {
        for (int x = 0; x < af.size(); ++x) {
            for (int y = 0; y < af.size(); ++y) {
                bool attacked = af.has_attack(y, x);
                if (options.all_pairs ? (y != x || attacked) : attacked) {
                    pairs.emplace_back(y, x);
                }
            }
        }
    }

    Formula lit(const adl::Fluent& f, bool positive = true) {
        return Formula::lit(table.require(f), positive);
    }

    // Positive capability literal; a constant-false stand-in keeps events of
    // undeclared pairs well-formed but permanently untriggered.
    Formula capability(int y, int x) {
        auto idx = table.find(adl::can_attack(y, x));
        if (!idx) return Formula::constant(false);
        return Formula::lit(*idx, true);
    }

    // Freshness guard right after the presence literal; base events have none.
    enum class Guard { None, Clear, Set };

    void push_guard(std::vector<Formula>& conj, Guard guard, int x) {
        if (guard == Guard::Clear) conj.push_back(lit(adl::last(x), false));
        if (guard == Guard::Set) conj.push_back(lit(adl::last(x), true));
    }

    std::vector<Literal> with_mark_drop(std::vector<Literal> eff, Guard guard, int x) {
        if (guard == Guard::Set) eff.push_back({table.require(adl::last(x)), false});
        return eff;
    }

    int add_exogenous(EventLabel label, Formula tri, std::vector<Literal> eff) {
        int idx = static_cast<int>(events.size());
        events.push_back(Event{label, EventKind::Exogenous, tri, tri, std::move(eff)});
        return idx;
    }

    void add_actions() {
        for (int x = 0; x < af.size(); ++x) {
            std::vector<Literal> eff{{table.require(adl::present(x)), true},
                                     {table.require(adl::in(x)), true},
                                     {table.require(adl::out(x)), false}};
            if (kind == TransformKind::Lelu) eff.push_back({table.require(adl::last(x)), true});
            events.push_back(Event{EventLabel{EventFamily::Enunciate, x, -1},
                                   EventKind::Action, Formula::constant(true),
                                   Formula::constant(true), std::move(eff)});
        }
    }

    int add_d1(EventFamily family, int y, int x, Guard guard) {
        std::vector<Formula> tri{lit(adl::present(x))};
        push_guard(tri, guard, x);
        tri.push_back(lit(adl::in(x)));
        tri.push_back(lit(adl::present(y)));
        tri.push_back(capability(y, x));
        tri.push_back(lit(adl::out(y), false));
        return add_exogenous(
            {family, x, y}, Formula::conj(std::move(tri)),
            with_mark_drop({{table.require(adl::in(x)), false}}, guard, x));
    }

    int add_d2(EventFamily family, int y, int x, Guard guard) {
        std::vector<Formula> tri{lit(adl::present(x))};
        push_guard(tri, guard, x);
        tri.push_back(lit(adl::out(x), false));
        tri.push_back(lit(adl::present(y)));
        tri.push_back(capability(y, x));
        tri.push_back(lit(adl::in(y)));
        return add_exogenous(
            {family, x, y}, Formula::conj(std::move(tri)),
            with_mark_drop({{table.require(adl::out(x)), true}}, guard, x));
    }

    // Every attacker y with a capability fluent contributes one conjunct
    // "(cA(y,x) and <literal about y>) or not cA(y,x)"; arguments without
    // attackers get an empty conjunction, which is true.
    Formula attacker_sweep(int x, adl::FluentKind about_attacker, bool positive) {
        std::vector<Formula> conj;
        for (int y : af.attackers_of(x)) {
            Formula about = lit(adl::Fluent{about_attacker, y, -1}, positive);
            conj.push_back(Formula::disj({Formula::conj({capability(y, x), about}),
                                          Formula::negate(capability(y, x))}));
        }
        return Formula::conj(std::move(conj));
    }

    int add_i1(EventFamily family, int x, Guard guard) {
        std::vector<Formula> tri{lit(adl::present(x))};
        push_guard(tri, guard, x);
        tri.push_back(lit(adl::out(x)));
        tri.push_back(attacker_sweep(x, adl::FluentKind::In, false));
        return add_exogenous(
            {family, x, -1}, Formula::conj(std::move(tri)),
            with_mark_drop({{table.require(adl::out(x)), false}}, guard, x));
    }

    int add_i2(EventFamily family, int x, Guard guard) {
        std::vector<Formula> tri{lit(adl::present(x))};
        push_guard(tri, guard, x);
        tri.push_back(lit(adl::in(x), false));
        tri.push_back(attacker_sweep(x, adl::FluentKind::Out, true));
        return add_exogenous(
            {family, x, -1}, Formula::conj(std::move(tri)),
            with_mark_drop({{table.require(adl::in(x)), true}}, guard, x));
    }

    // One full exogenous family set (the four event schemas over all
    // arguments and instantiated pairs). Returns the added indices grouped
    // for priority wiring.
    struct FamilyIndices {
        std::vector<int> i1, i2, d1, d2;
        std::vector<int> all() const {
            std::vector<int> v;
            v.insert(v.end(), i1.begin(), i1.end());
            v.insert(v.end(), i2.begin(), i2.end());
            v.insert(v.end(), d1.begin(), d1.end());
            v.insert(v.end(), d2.begin(), d2.end());
            return v;
        }
    };

    FamilyIndices add_family_set(EventFamily i1f, EventFamily i2f, EventFamily d1f,
                                 EventFamily d2f, Guard guard) {
        FamilyIndices ix;
        for (int x = 0; x < af.size(); ++x) {
            ix.i1.push_back(add_i1(i1f, x, guard));
            ix.i2.push_back(add_i2(i2f, x, guard));
        }
        for (auto [y, x] : pairs) {
            ix.d1.push_back(add_d1(d1f, y, x, guard));
            ix.d2.push_back(add_d2(d2f, y, x, guard));
        }
        return ix;
    }

    // Rule set within one family set: acceptance retraction beats acceptance
    // (same argument), every loss event beats every rejection event, and
    // every retraction beats every rejection.
    void wire_rules(const FamilyIndices& ix) {
        for (std::size_t x = 0; x < ix.i1.size(); ++x) priority.emplace_back(ix.i1[x], ix.i2[x]);
        for (int i1 : ix.i1) {
            for (int d2 : ix.d2) priority.emplace_back(i1, d2);
        }
        if (options.omit_r3) {
            for (std::size_t p = 0; p < ix.d1.size(); ++p) {
                priority.emplace_back(ix.d1[p], ix.d2[p]);
            }
        } else {
            for (int d1 : ix.d1) {
                for (int d2 : ix.d2) priority.emplace_back(d1, d2);
            }
        }
    }

    std::shared_ptr<const adl::Context> build() {
        add_actions();
        if (kind == TransformKind::Base) {
            FamilyIndices base = add_family_set(EventFamily::I1, EventFamily::I2,
                                                EventFamily::D1, EventFamily::D2, Guard::None);
            wire_rules(base);
        } else {
            FamilyIndices fresh = add_family_set(EventFamily::I1f, EventFamily::I2f,
                                                 EventFamily::D1f, EventFamily::D2f,
                                                 Guard::Clear);
            FamilyIndices marked = add_family_set(EventFamily::I1l, EventFamily::I2l,
                                                  EventFamily::D1l, EventFamily::D2l,
                                                  Guard::Set);
            wire_rules(fresh);
            wire_rules(marked);
            // Everything guarded on a clear mark beats everything guarded on
            // a set mark, so a fresh wave finishes before stale updates run.
            std::vector<int> fresh_all = fresh.all();
            std::vector<int> marked_all = marked.all();
            for (int f : fresh_all) {
                for (int m : marked_all) priority.emplace_back(f, m);
            }
            std::vector<int> cleanups;
            for (int x = 0; x < af.size(); ++x) {
                cleanups.push_back(add_exogenous({EventFamily::Cleanup, x, -1},
                                                 lit(adl::last(x)),
                                                 {{table.require(adl::last(x)), false}}));
            }
            // Cleanups run only when nothing else can; they never dominate
            // each other, so pending marks drop in one simultaneous set.
            for (int e : fresh_all) {
                for (int c : cleanups) priority.emplace_back(e, c);
            }
            for (int e : marked_all) {
                for (int c : cleanups) priority.emplace_back(e, c);
            }
        }

        int horizon = options.horizon > 0 ? options.horizon : default_horizon(table.size());
        adl::ContextInfo info{kind, af, options.all_pairs, options.omit_r3};
        State initial = initial_state(af, kind);
        return std::make_shared<adl::Context>(std::move(table), std::move(events),
                                              std::move(initial), std::move(priority),
                                              horizon, std::move(info));
    }
};

}  // namespace

std::shared_ptr<const adl::Context> build_base_context(const aaf::Aaf& af,
                                                       const BuildOptions& options) {
    return Builder(af, TransformKind::Base, options).build();
}

std::shared_ptr<const adl::Context> build_lelu_context(const aaf::Aaf& af,
                                                       const BuildOptions& options) {
    return Builder(af, TransformKind::Lelu, options).build();
}

std::shared_ptr<const adl::Context> build_context(const aaf::Aaf& af, TransformKind kind,
                                                  const BuildOptions& options) {
    return kind == TransformKind::Base ? build_base_context(af, options)
                                       : build_lelu_context(af, options);
}

}  // namespace argdial::transform
