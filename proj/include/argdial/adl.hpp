#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "argdial/aaf.hpp"
#include "argdial/errors.hpp"

namespace argdial {

enum class TransformKind : unsigned char { Base, Lelu };

namespace adl {

// -------------------------------------------------------------------------
// Fluents
// -------------------------------------------------------------------------

enum class FluentKind : unsigned char { Present, In, Out, CanAttack, Last };

// Propositional atom about one argument (or one attacker/target pair for
// CanAttack). `y` is the attacker and is -1 for every other kind.
struct Fluent {
    FluentKind kind = FluentKind::Present;
    int x = -1;
    int y = -1;
    auto operator<=>(const Fluent&) const = default;
};

inline Fluent present(int x) { return {FluentKind::Present, x, -1}; }
inline Fluent in(int x) { return {FluentKind::In, x, -1}; }
inline Fluent out(int x) { return {FluentKind::Out, x, -1}; }
inline Fluent can_attack(int y, int x) { return {FluentKind::CanAttack, x, y}; }
inline Fluent last(int x) { return {FluentKind::Last, x, -1}; }

std::string to_string(const Fluent& f, const aaf::Aaf& af);

// Dense fluent index. Insertion order is the canonical order.
class FluentTable {
public:
    int add(const Fluent& f);  // DomainError on duplicates
    std::optional<int> find(const Fluent& f) const;
    int require(const Fluent& f) const;  // DomainError if absent
    int size() const { return static_cast<int>(fluents_.size()); }
    const Fluent& at(int index) const;
    const std::vector<Fluent>& fluents() const { return fluents_; }

private:
    std::vector<Fluent> fluents_;
    std::map<Fluent, int> index_;
};

struct Literal {
    int fluent = -1;
    bool positive = true;
    auto operator<=>(const Literal&) const = default;
    Literal complement() const { return {fluent, !positive}; }
};

// -------------------------------------------------------------------------
// States and formulas
// -------------------------------------------------------------------------

// Complete truth assignment over a fluent table: one bit per fluent.
class State {
public:
    State() = default;
    explicit State(int fluent_count) : bits_(static_cast<std::size_t>(fluent_count), false) {}
    State(std::initializer_list<bool> bits) : bits_(bits) {}

    int size() const { return static_cast<int>(bits_.size()); }
    bool value(int fluent) const;  // DomainError when out of range
    void set(int fluent, bool v);
    bool holds(const Literal& l) const { return value(l.fluent) == l.positive; }
    bool operator==(const State&) const = default;

private:
    std::vector<bool> bits_;
};

// Immutable propositional formula over fluent indices. An empty conjunction
// is true and an empty disjunction is false; triggers of events whose
// enabling fluent does not exist rely on the latter.
class Formula {
public:
    enum class Kind : unsigned char { Lit, And, Or, Not };

    Formula() : Formula(constant(true)) {}

    static Formula lit(Literal l);
    static Formula lit(int fluent, bool positive = true) { return lit(Literal{fluent, positive}); }
    static Formula constant(bool value);
    static Formula conj(std::vector<Formula> children);
    static Formula disj(std::vector<Formula> children);
    static Formula negate(Formula f);

    Kind kind() const;
    const Literal& literal() const;              // Lit only
    const std::vector<Formula>& children() const;  // And/Or/Not
    bool is_constant_true() const;               // empty conjunction
    void collect_fluents(std::vector<int>& into) const;
    bool structurally_equal(const Formula& other) const;

private:
    struct Node {
        Kind kind;
        Literal lit{};
        std::vector<Formula> children;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

bool evaluate(const State& state, const Formula& formula);

// -------------------------------------------------------------------------
// Events and contexts
// -------------------------------------------------------------------------

enum class EventKind : unsigned char { Action, Exogenous };

enum class EventFamily : unsigned char {
    Enunciate,
    D1,   // attacked argument loses IN
    D2,   // attacked argument gains OUT
    I1,   // argument with no accepted attacker loses OUT
    I2,   // argument with all attackers rejected gains IN
    D1f, D1l, D2f, D2l, I1f, I1l, I2f, I2l,  // freshness-split variants
    Cleanup,  // drops the freshness mark
};

bool is_f_variant(EventFamily family);
bool is_l_variant(EventFamily family);

// `x` is the argument whose status the event updates; `y` is the attacker
// for the D families and -1 elsewhere.
struct EventLabel {
    EventFamily family = EventFamily::Enunciate;
    int x = -1;
    int y = -1;
    auto operator<=>(const EventLabel&) const = default;
};

std::string to_string(const EventLabel& label, const aaf::Aaf& af);

struct Event {
    EventLabel label;
    EventKind kind = EventKind::Exogenous;
    Formula pre;               // actions: constant true; exogenous: equal to tri
    Formula tri;
    std::vector<Literal> eff;  // coherent: no fluent appears with both signs
};

// Provenance carried by a compiled context, mostly for serialization and for
// reading labellings back out of states.
struct ContextInfo {
    TransformKind kind = TransformKind::Base;
    aaf::Aaf af;
    bool all_pairs = true;
    bool omit_r3 = false;  // fault-injection knob used by the check suite
};

// Immutable compiled transition system: fluents, events, the initial state,
// a strict partial order on events (given as pairs, closed internally), and
// a per-cascade step budget.
class Context {
public:
    Context(FluentTable fluents, std::vector<Event> events, State initial,
            std::vector<std::pair<int, int>> priority, int horizon, ContextInfo info);

    const FluentTable& fluents() const { return fluents_; }
    const std::vector<Event>& events() const { return events_; }
    const Event& event(int index) const;
    const State& initial_state() const { return initial_; }
    const std::vector<std::pair<int, int>>& priority() const { return priority_; }
    int horizon() const { return horizon_; }
    const ContextInfo& info() const { return info_; }

    const std::vector<int>& exogenous() const { return exogenous_; }
    const std::vector<int>& actions() const { return actions_; }

    // Transitive closure of the priority pairs.
    bool dominates(int winner, int loser) const;

    std::optional<int> find_event(const EventLabel& label) const;
    int require_event(const EventLabel& label) const;  // DomainError if absent

private:
    void validate_and_close();

    FluentTable fluents_;
    std::vector<Event> events_;
    State initial_;
    std::vector<std::pair<int, int>> priority_;
    int horizon_;
    ContextInfo info_;

    std::vector<int> exogenous_;
    std::vector<int> actions_;
    std::map<EventLabel, int> by_label_;
    std::vector<std::vector<bool>> closure_;
};

// -------------------------------------------------------------------------
// Execution
// -------------------------------------------------------------------------

// Ranked action schedule: (event index, rank), sorted by (rank, index),
// deduplicated. Ranks need not be contiguous.
struct Sequence {
    std::vector<std::pair<int, std::uint32_t>> ranked_actions;
};

// DomainError when a dialogue names an argument the context's AAF lacks.
Sequence make_sequence(const Context& context, const aaf::Dialogue& dialogue);

struct Setting {
    std::shared_ptr<const Context> context;
    Sequence sequence;
};

struct Trace {
    std::shared_ptr<const Context> context;
    aaf::Dialogue dialogue;                        // names + ranks behind `sequence`
    std::vector<State> states;                     // S(0) .. S(N)
    std::vector<std::vector<int>> event_sets;      // E(0) .. E(N-1), ascending indices
    std::vector<int> argumentative_marks;          // quiescent time indices

    const State& final_state() const;
};

// Exogenous events whose trigger holds in `state`, ascending indices.
std::vector<int> triggered_exogenous(const Context& context, const State& state);

// One scheduling step: the maximal (undominated) triggered exogenous events,
// or `due_actions` when none is triggered. Empty only when both sources are
// empty. ConflictError if the chosen set carries contradictory effects.
std::vector<int> select_events(const Context& context, const State& state,
                               const std::vector<int>& due_actions);

// Successor state: persistence plus the combined effects of `events`.
State apply_effects(const Context& context, const State& state,
                    const std::vector<int>& events);

// Deterministic executor. Fires each rank group from a quiescent state, then
// lets exogenous events cascade to quiescence; BudgetError when one cascade
// exceeds the context horizon.
Trace run(const Setting& setting);
Trace run(std::shared_ptr<const Context> context, const aaf::Dialogue& dialogue);

}  // namespace adl
}  // namespace argdial
