#include "argdial/aaf.hpp"

#include <algorithm>
#include <cctype>

namespace argdial::aaf {

bool is_valid_argument_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

int Aaf::add_argument(const std::string& name) {
    if (!is_valid_argument_name(name)) {
        throw DomainError("invalid argument name '" + name + "'");
    }
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(arguments_.size());
    arguments_.push_back(name);
    attackers_.emplace_back();
    index_.emplace(name, idx);
    return idx;
}

void Aaf::add_attack(const std::string& attacker, const std::string& target) {
    add_attack(require_index(attacker), require_index(target));
}

void Aaf::add_attack(int attacker, int target) {
    if (attacker < 0 || attacker >= size() || target < 0 || target >= size()) {
        throw DomainError("attack endpoint out of range");
    }
    if (attacks_.emplace(attacker, target).second) {
        auto& v = attackers_[static_cast<std::size_t>(target)];
        v.insert(std::lower_bound(v.begin(), v.end(), attacker), attacker);
    }
}

const std::string& Aaf::argument(int index) const {
    if (index < 0 || index >= size()) throw DomainError("argument index out of range");
    return arguments_[static_cast<std::size_t>(index)];
}

std::optional<int> Aaf::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Aaf::require_index(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx) throw DomainError("unknown argument '" + std::string(name) + "'");
    return *idx;
}

bool Aaf::has_attack(int attacker, int target) const {
    return attacks_.count({attacker, target}) != 0;
}

const std::vector<int>& Aaf::attackers_of(int target) const {
    if (target < 0 || target >= size()) throw DomainError("argument index out of range");
    return attackers_[static_cast<std::size_t>(target)];
}

namespace {

void sort_unique(std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Labelling::Labelling(std::vector<std::string> universe, std::vector<std::string> in_set,
                     std::vector<std::string> out_set, std::vector<std::string> undec_set)
    : universe_(std::move(universe)),
      in_(std::move(in_set)),
      out_(std::move(out_set)),
      undec_(std::move(undec_set)) {
    std::size_t in_n = in_.size(), out_n = out_.size(), undec_n = undec_.size();
    sort_unique(universe_);
    sort_unique(in_);
    sort_unique(out_);
    sort_unique(undec_);
    if (in_.size() != in_n || out_.size() != out_n || undec_.size() != undec_n) {
        throw DomainError("labelling class contains a duplicate argument");
    }
    std::vector<std::string> all;
    all.reserve(in_.size() + out_.size() + undec_.size());
    all.insert(all.end(), in_.begin(), in_.end());
    all.insert(all.end(), out_.begin(), out_.end());
    all.insert(all.end(), undec_.begin(), undec_.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw DomainError("labelling classes overlap");
    }
    if (all != universe_) {
        throw DomainError("labelling classes do not partition the universe");
    }
}

Labelling Labelling::of(const Aaf& af, const std::vector<Label>& labels) {
    if (static_cast<int>(labels.size()) != af.size()) {
        throw DomainError("label vector length does not match argument count");
    }
    std::vector<std::string> in, out, undec;
    for (int i = 0; i < af.size(); ++i) {
        switch (labels[static_cast<std::size_t>(i)]) {
            case Label::In: in.push_back(af.argument(i)); break;
            case Label::Out: out.push_back(af.argument(i)); break;
            case Label::Undec: undec.push_back(af.argument(i)); break;
        }
    }
    return Labelling(af.arguments(), std::move(in), std::move(out), std::move(undec));
}

bool Labelling::contains(std::string_view name) const {
    return std::binary_search(universe_.begin(), universe_.end(), name);
}

Label Labelling::label_of(std::string_view name) const {
    if (std::binary_search(in_.begin(), in_.end(), name)) return Label::In;
    if (std::binary_search(out_.begin(), out_.end(), name)) return Label::Out;
    if (std::binary_search(undec_.begin(), undec_.end(), name)) return Label::Undec;
    throw DomainError("argument '" + std::string(name) + "' not in labelling universe");
}

bool Labelling::operator<(const Labelling& other) const {
    if (in_ != other.in_) return in_ < other.in_;
    if (out_ != other.out_) return out_ < other.out_;
    return undec_ < other.undec_;
}

bool is_complete_labelling(const Aaf& af, const Labelling& labelling) {
    std::vector<std::string> args = af.arguments();
    std::sort(args.begin(), args.end());
    if (args != labelling.universe()) {
        throw DomainError("labelling universe does not match the AAF's arguments");
    }
    std::vector<Label> lab(static_cast<std::size_t>(af.size()));
    for (int i = 0; i < af.size(); ++i) {
        lab[static_cast<std::size_t>(i)] = labelling.label_of(af.argument(i));
    }
    for (int x = 0; x < af.size(); ++x) {
        bool all_attackers_out = true;
        bool some_attacker_in = false;
        for (int y : af.attackers_of(x)) {
            Label ly = lab[static_cast<std::size_t>(y)];
            if (ly != Label::Out) all_attackers_out = false;
            if (ly == Label::In) some_attacker_in = true;
        }
        Label lx = lab[static_cast<std::size_t>(x)];
        if ((lx == Label::In) != all_attackers_out) return false;
        if ((lx == Label::Out) != some_attacker_in) return false;
    }
    return true;
}

std::vector<Labelling> enumerate_complete_labellings(const Aaf& af, int oracle_limit) {
    if (af.size() > oracle_limit) {
        throw CapacityError("argument count " + std::to_string(af.size()) +
                            " exceeds the oracle limit " + std::to_string(oracle_limit));
    }
    std::vector<Labelling> found;
    std::vector<Label> lab(static_cast<std::size_t>(af.size()), Label::In);
    std::uint64_t total = 1;
    for (int i = 0; i < af.size(); ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < af.size(); ++i) {
            lab[static_cast<std::size_t>(i)] = static_cast<Label>(c % 3);
            c /= 3;
        }
        Labelling candidate = Labelling::of(af, lab);
        if (is_complete_labelling(af, candidate)) found.push_back(std::move(candidate));
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<Labelling> filter_semantics(const std::vector<Labelling>& labellings,
                                        Semantics semantics) {
    if (semantics == Semantics::Complete) return labellings;
    if (labellings.empty()) throw DomainError("cannot filter an empty labelling set");

    auto in_subset = [](const Labelling& a, const Labelling& b) {
        return std::includes(b.in_set().begin(), b.in_set().end(), a.in_set().begin(),
                             a.in_set().end());
    };

    std::vector<Labelling> result;
    switch (semantics) {
        case Semantics::Grounded: {
            for (const Labelling& cand : labellings) {
                bool minimum = true;
                for (const Labelling& other : labellings) {
                    if (!in_subset(cand, other)) {
                        minimum = false;
                        break;
                    }
                }
                if (minimum) {
                    result.push_back(cand);
                    break;
                }
            }
            if (result.empty()) {
                throw DomainError("input has no inclusion-minimum IN set; "
                                  "not the complete labellings of one AAF");
            }
            break;
        }
        case Semantics::Preferred: {
            for (const Labelling& cand : labellings) {
                bool maximal = true;
                for (const Labelling& other : labellings) {
                    if (&other != &cand && in_subset(cand, other) &&
                        cand.in_set() != other.in_set()) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal) result.push_back(cand);
            }
            break;
        }
        case Semantics::Stable: {
            for (const Labelling& cand : labellings) {
                if (cand.undec_set().empty()) result.push_back(cand);
            }
            break;
        }
        case Semantics::Complete:
            break;
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

void Dialogue::add(const std::string& argument, std::uint32_t rank) {
    if (!is_valid_argument_name(argument)) {
        throw DomainError("invalid argument name '" + argument + "'");
    }
    std::pair<std::string, std::uint32_t> entry(argument, rank);
    auto less = [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    };
    auto it = std::lower_bound(entries_.begin(), entries_.end(), entry, less);
    if (it != entries_.end() && *it == entry) return;
    entries_.insert(it, std::move(entry));
}

}  // namespace argdial::aaf
