#include "argdial/adl.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace argdial::adl {

std::string to_string(const Fluent& f, const aaf::Aaf& af) {
    switch (f.kind) {
        case FluentKind::Present: return "p(" + af.argument(f.x) + ")";
        case FluentKind::In: return "i(" + af.argument(f.x) + ")";
        case FluentKind::Out: return "o(" + af.argument(f.x) + ")";
        case FluentKind::CanAttack:
            return "cA(" + af.argument(f.y) + "," + af.argument(f.x) + ")";
        case FluentKind::Last: return "l(" + af.argument(f.x) + ")";
    }
    throw IntegrityError("unknown fluent kind");
}

int FluentTable::add(const Fluent& f) {
    if (index_.count(f)) throw DomainError("duplicate fluent");
    int idx = size();
    fluents_.push_back(f);
    index_.emplace(f, idx);
    return idx;
}

std::optional<int> FluentTable::find(const Fluent& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FluentTable::require(const Fluent& f) const {
    auto idx = find(f);
    if (!idx) throw DomainError("fluent not in table");
    return *idx;
}

const Fluent& FluentTable::at(int index) const {
    if (index < 0 || index >= size()) throw DomainError("fluent index out of range");
    return fluents_[static_cast<std::size_t>(index)];
}

bool State::value(int fluent) const {
    if (fluent < 0 || fluent >= size()) {
        throw DomainError("unknown fluent index " + std::to_string(fluent));
    }
    return bits_[static_cast<std::size_t>(fluent)];
}

void State::set(int fluent, bool v) {
    if (fluent < 0 || fluent >= size()) {
        throw DomainError("unknown fluent index " + std::to_string(fluent));
    }
    bits_[static_cast<std::size_t>(fluent)] = v;
}

Formula Formula::lit(Literal l) {
    return Formula(std::make_shared<Node>(Node{Kind::Lit, l, {}}));
}

Formula Formula::constant(bool value) {
    return Formula(std::make_shared<Node>(
        Node{value ? Kind::And : Kind::Or, Literal{}, {}}));
}

Formula Formula::conj(std::vector<Formula> children) {
    return Formula(std::make_shared<Node>(Node{Kind::And, Literal{}, std::move(children)}));
}

Formula Formula::disj(std::vector<Formula> children) {
    return Formula(std::make_shared<Node>(Node{Kind::Or, Literal{}, std::move(children)}));
}

Formula Formula::negate(Formula f) {
    return Formula(std::make_shared<Node>(Node{Kind::Not, Literal{}, {std::move(f)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Literal& Formula::literal() const {
    if (node_->kind != Kind::Lit) throw DomainError("formula node is not a literal");
    return node_->lit;
}

const std::vector<Formula>& Formula::children() const { return node_->children; }

bool Formula::is_constant_true() const {
    return node_->kind == Kind::And && node_->children.empty();
}

void Formula::collect_fluents(std::vector<int>& into) const {
    if (node_->kind == Kind::Lit) {
        into.push_back(node_->lit.fluent);
        return;
    }
    for (const Formula& child : node_->children) child.collect_fluents(into);
}

bool Formula::structurally_equal(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (node_->kind != other.node_->kind) return false;
    if (node_->kind == Kind::Lit) return node_->lit == other.node_->lit;
    if (node_->children.size() != other.node_->children.size()) return false;
    for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (!node_->children[i].structurally_equal(other.node_->children[i])) return false;
    }
    return true;
}

bool evaluate(const State& state, const Formula& formula) {
    switch (formula.kind()) {
        case Formula::Kind::Lit:
            return state.holds(formula.literal());
        case Formula::Kind::And:
            for (const Formula& child : formula.children()) {
                if (!evaluate(state, child)) return false;
            }
            return true;
        case Formula::Kind::Or:
            for (const Formula& child : formula.children()) {
                if (evaluate(state, child)) return true;
            }
            return false;
        case Formula::Kind::Not:
            return !evaluate(state, formula.children().front());
    }
    throw IntegrityError("unknown formula kind");
}

bool is_f_variant(EventFamily family) {
    switch (family) {
        case EventFamily::D1f:
        case EventFamily::D2f:
        case EventFamily::I1f:
        case EventFamily::I2f:
            return true;
        default:
            return false;
    }
}

bool is_l_variant(EventFamily family) {
    switch (family) {
        case EventFamily::D1l:
        case EventFamily::D2l:
        case EventFamily::I1l:
        case EventFamily::I2l:
            return true;
        default:
            return false;
    }
}

std::string to_string(const EventLabel& label, const aaf::Aaf& af) {
    switch (label.family) {
        case EventFamily::Enunciate: return "enunciate(" + af.argument(label.x) + ")";
        case EventFamily::D1:
            return "delta1(" + af.argument(label.y) + "," + af.argument(label.x) + ")";
        case EventFamily::D2:
            return "delta2(" + af.argument(label.y) + "," + af.argument(label.x) + ")";
        case EventFamily::I1: return "iota1(" + af.argument(label.x) + ")";
        case EventFamily::I2: return "iota2(" + af.argument(label.x) + ")";
        case EventFamily::D1f:
            return "delta1f(" + af.argument(label.y) + "," + af.argument(label.x) + ")";
        case EventFamily::D1l:
            return "delta1l(" + af.argument(label.y) + "," + af.argument(label.x) + ")";
        case EventFamily::D2f:
            return "delta2f(" + af.argument(label.y) + "," + af.argument(label.x) + ")";
        case EventFamily::D2l:
            return "delta2l(" + af.argument(label.y) + "," + af.argument(label.x) + ")";
        case EventFamily::I1f: return "iota1f(" + af.argument(label.x) + ")";
        case EventFamily::I1l: return "iota1l(" + af.argument(label.x) + ")";
        case EventFamily::I2f: return "iota2f(" + af.argument(label.x) + ")";
        case EventFamily::I2l: return "iota2l(" + af.argument(label.x) + ")";
        case EventFamily::Cleanup: return "cleanup(" + af.argument(label.x) + ")";
    }
    throw IntegrityError("unknown event family");
}

Context::Context(FluentTable fluents, std::vector<Event> events, State initial,
                 std::vector<std::pair<int, int>> priority, int horizon, ContextInfo info)
    : fluents_(std::move(fluents)),
      events_(std::move(events)),
      initial_(std::move(initial)),
      priority_(std::move(priority)),
      horizon_(horizon),
      info_(std::move(info)) {
    validate_and_close();
}

const Event& Context::event(int index) const {
    if (index < 0 || index >= static_cast<int>(events_.size())) {
        throw DomainError("event index out of range");
    }
    return events_[static_cast<std::size_t>(index)];
}

bool Context::dominates(int winner, int loser) const {
    if (winner < 0 || winner >= static_cast<int>(events_.size()) || loser < 0 ||
        loser >= static_cast<int>(events_.size())) {
        throw DomainError("event index out of range");
    }
    return closure_[static_cast<std::size_t>(winner)][static_cast<std::size_t>(loser)];
}

std::optional<int> Context::find_event(const EventLabel& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

int Context::require_event(const EventLabel& label) const {
    auto idx = find_event(label);
    if (!idx) throw DomainError("event '" + to_string(label, info_.af) + "' not in context");
    return *idx;
}

void Context::validate_and_close() {
    const int nf = fluents_.size();
    const int ne = static_cast<int>(events_.size());
    if (initial_.size() != nf) {
        throw DomainError("initial state size does not match fluent count");
    }
    if (horizon_ <= 0) throw DomainError("horizon must be positive");

    std::vector<int> used;
    for (int e = 0; e < ne; ++e) {
        const Event& ev = events_[static_cast<std::size_t>(e)];
        if (!by_label_.emplace(ev.label, e).second) {
            throw DomainError("duplicate event label '" + to_string(ev.label, info_.af) + "'");
        }
        used.clear();
        ev.pre.collect_fluents(used);
        ev.tri.collect_fluents(used);
        for (const Literal& l : ev.eff) used.push_back(l.fluent);
        for (int f : used) {
            if (f < 0 || f >= nf) {
                throw DomainError("event '" + to_string(ev.label, info_.af) +
                                  "' mentions an unknown fluent");
            }
        }
        std::set<int> positive, negative;
        for (const Literal& l : ev.eff) (l.positive ? positive : negative).insert(l.fluent);
        for (int f : positive) {
            if (negative.count(f)) {
                throw DomainError("event '" + to_string(ev.label, info_.af) +
                                  "' has incoherent effects");
            }
        }
        if (ev.kind == EventKind::Exogenous) {
            if (!ev.pre.structurally_equal(ev.tri)) {
                throw DomainError("exogenous event '" + to_string(ev.label, info_.af) +
                                  "' must have identical precondition and trigger");
            }
            exogenous_.push_back(e);
        } else {
            if (!ev.pre.is_constant_true()) {
                throw DomainError("action '" + to_string(ev.label, info_.af) +
                                  "' must have a trivially true precondition");
            }
            actions_.push_back(e);
        }
    }

    // Close the priority pairs; a cycle would make some node reach itself.
    std::vector<std::vector<int>> beats(static_cast<std::size_t>(ne));
    for (auto [winner, loser] : priority_) {
        if (winner < 0 || winner >= ne || loser < 0 || loser >= ne) {
            throw DomainError("priority pair mentions an unknown event");
        }
        beats[static_cast<std::size_t>(winner)].push_back(loser);
    }
    closure_.assign(static_cast<std::size_t>(ne),
                    std::vector<bool>(static_cast<std::size_t>(ne), false));
    std::deque<int> queue;
    for (int s = 0; s < ne; ++s) {
        auto& row = closure_[static_cast<std::size_t>(s)];
        queue.assign(beats[static_cast<std::size_t>(s)].begin(),
                     beats[static_cast<std::size_t>(s)].end());
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (row[static_cast<std::size_t>(v)]) continue;
            row[static_cast<std::size_t>(v)] = true;
            for (int w : beats[static_cast<std::size_t>(v)]) {
                if (!row[static_cast<std::size_t>(w)]) queue.push_back(w);
            }
        }
        if (row[static_cast<std::size_t>(s)]) {
            throw DomainError("priority relation has a cycle through event '" +
                              to_string(events_[static_cast<std::size_t>(s)].label, info_.af) +
                              "'");
        }
    }
}

Sequence make_sequence(const Context& context, const aaf::Dialogue& dialogue) {
    Sequence seq;
    for (const auto& [name, rank] : dialogue.entries()) {
        auto arg = context.info().af.index_of(name);
        if (!arg) throw DomainError("dialogue names unknown argument '" + name + "'");
        int ev = context.require_event({EventFamily::Enunciate, *arg, -1});
        seq.ranked_actions.emplace_back(ev, rank);
    }
    auto less = [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    };
    std::sort(seq.ranked_actions.begin(), seq.ranked_actions.end(), less);
    seq.ranked_actions.erase(
        std::unique(seq.ranked_actions.begin(), seq.ranked_actions.end()),
        seq.ranked_actions.end());
    return seq;
}

const State& Trace::final_state() const {
    if (states.empty()) throw IntegrityError("trace has no states");
    return states.back();
}

std::vector<int> triggered_exogenous(const Context& context, const State& state) {
    std::vector<int> triggered;
    for (int e : context.exogenous()) {
        if (evaluate(state, context.event(e).tri)) triggered.push_back(e);
    }
    return triggered;
}

namespace {

// Combined effect map of a simultaneous event set; ConflictError on a
// complementary pair.
std::map<int, bool> combined_effects(const Context& context, const std::vector<int>& events) {
    std::map<int, bool> effects;
    for (int e : events) {
        for (const Literal& l : context.event(e).eff) {
            auto [it, inserted] = effects.emplace(l.fluent, l.positive);
            if (!inserted && it->second != l.positive) {
                throw ConflictError("simultaneous events disagree on fluent " +
                                    to_string(context.fluents().at(l.fluent),
                                              context.info().af));
            }
        }
    }
    return effects;
}

}  // namespace

std::vector<int> select_events(const Context& context, const State& state,
                               const std::vector<int>& due_actions) {
    std::vector<int> triggered = triggered_exogenous(context, state);
    std::vector<int> selected;
    if (!triggered.empty()) {
        for (int e : triggered) {
            bool dominated = false;
            for (int other : triggered) {
                if (other != e && context.dominates(other, e)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) selected.push_back(e);
        }
    } else {
        selected = due_actions;
    }
    combined_effects(context, selected);  // conflict check only
    return selected;
}

State apply_effects(const Context& context, const State& state,
                    const std::vector<int>& events) {
    std::map<int, bool> effects = combined_effects(context, events);
    State next = state;
    for (auto [fluent, value] : effects) next.set(fluent, value);
    return next;
}

namespace {

// Runs exogenous events to quiescence, appending to the trace in progress.
void cascade(const Context& context, std::vector<State>& states,
             std::vector<std::vector<int>>& event_sets) {
    int steps = 0;
    while (true) {
        std::vector<int> selected = select_events(context, states.back(), {});
        if (selected.empty()) return;
        if (++steps > context.horizon()) {
            throw BudgetError("cascade exceeded the step budget of " +
                              std::to_string(context.horizon()));
        }
        states.push_back(apply_effects(context, states.back(), selected));
        event_sets.push_back(std::move(selected));
    }
}

}  // namespace

Trace run(const Setting& setting) {
    if (!setting.context) throw DomainError("setting has no context");
    const Context& context = *setting.context;

    // Group the schedule by rank; each group fires as one simultaneous set.
    std::map<std::uint32_t, std::vector<int>> groups;
    for (auto [ev, rank] : setting.sequence.ranked_actions) {
        const Event& e = context.event(ev);
        if (e.kind != EventKind::Action) {
            throw DomainError("sequence entry '" + to_string(e.label, context.info().af) +
                              "' is not an action");
        }
        auto& group = groups[rank];
        if (std::find(group.begin(), group.end(), ev) == group.end()) group.push_back(ev);
    }

    Trace trace;
    trace.context = setting.context;
    for (auto [ev, rank] : setting.sequence.ranked_actions) {
        trace.dialogue.add(context.info().af.argument(context.event(ev).label.x), rank);
    }
    trace.states.push_back(context.initial_state());
    cascade(context, trace.states, trace.event_sets);

    for (auto& [rank, due] : groups) {
        std::sort(due.begin(), due.end());
        for (int ev : due) {
            if (!evaluate(trace.states.back(), context.event(ev).pre)) {
                throw DomainError("action precondition violated at rank " +
                                  std::to_string(rank));
            }
        }
        std::vector<int> selected = select_events(context, trace.states.back(), due);
        trace.states.push_back(apply_effects(context, trace.states.back(), selected));
        trace.event_sets.push_back(std::move(selected));
        cascade(context, trace.states, trace.event_sets);
    }

    for (int t = 0; t < static_cast<int>(trace.states.size()); ++t) {
        if (triggered_exogenous(context, trace.states[static_cast<std::size_t>(t)]).empty()) {
            trace.argumentative_marks.push_back(t);
        }
    }
    return trace;
}

Trace run(std::shared_ptr<const Context> context, const aaf::Dialogue& dialogue) {
    if (!context) throw DomainError("null context");
    Sequence seq = make_sequence(*context, dialogue);
    return run(Setting{std::move(context), std::move(seq)});
}

}  // namespace argdial::adl
