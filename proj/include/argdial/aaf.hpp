#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argdial/errors.hpp"

namespace argdial::aaf {

// Argument names: letters, digits, underscore; never empty.
bool is_valid_argument_name(std::string_view name);

// Finite directed attack graph. Declaration order of arguments is preserved
// so iteration and serialization stay deterministic.
class Aaf {
public:
    Aaf() = default;

    // Idempotent; returns the argument's index. Rejects invalid names.
    int add_argument(const std::string& name);
    // Both endpoints must already be declared. Duplicates are idempotent.
    void add_attack(const std::string& attacker, const std::string& target);
    void add_attack(int attacker, int target);

    int size() const { return static_cast<int>(arguments_.size()); }
    const std::vector<std::string>& arguments() const { return arguments_; }
    const std::string& argument(int index) const;
    std::optional<int> index_of(std::string_view name) const;
    int require_index(std::string_view name) const;  // DomainError if unknown

    bool has_attack(int attacker, int target) const;
    const std::set<std::pair<int, int>>& attacks() const { return attacks_; }
    // Attackers of `target`, ascending indices. May include `target` itself.
    const std::vector<int>& attackers_of(int target) const;

    bool operator==(const Aaf& other) const {
        return arguments_ == other.arguments_ && attacks_ == other.attacks_;
    }

private:
    std::vector<std::string> arguments_;
    std::map<std::string, int, std::less<>> index_;
    std::set<std::pair<int, int>> attacks_;
    std::vector<std::vector<int>> attackers_;
};

enum class Label : unsigned char { In, Out, Undec };

// Total IN/OUT/UNDEC assignment over a stated argument universe. Stored as a
// partition; the constructor rejects overlaps and leftovers, so disjointness
// and totality never need re-checking downstream.
class Labelling {
public:
    Labelling(std::vector<std::string> universe, std::vector<std::string> in_set,
              std::vector<std::string> out_set, std::vector<std::string> undec_set);

    static Labelling of(const Aaf& af, const std::vector<Label>& labels);

    const std::vector<std::string>& universe() const { return universe_; }
    const std::vector<std::string>& in_set() const { return in_; }
    const std::vector<std::string>& out_set() const { return out_; }
    const std::vector<std::string>& undec_set() const { return undec_; }

    bool contains(std::string_view name) const;
    Label label_of(std::string_view name) const;  // DomainError if unknown

    bool operator==(const Labelling& other) const {
        return in_ == other.in_ && out_ == other.out_ && undec_ == other.undec_;
    }
    // Canonical order, used to keep sets of labellings sorted.
    bool operator<(const Labelling& other) const;

private:
    std::vector<std::string> universe_;  // sorted
    std::vector<std::string> in_;        // sorted
    std::vector<std::string> out_;       // sorted
    std::vector<std::string> undec_;     // sorted
};

enum class Semantics : unsigned char { Complete, Grounded, Preferred, Stable };

inline constexpr int kDefaultOracleLimit = 12;

// Direct characterisation check: an argument is IN iff all its attackers are
// OUT, and OUT iff some attacker is IN. Universe must equal the AAF's
// arguments (DomainError otherwise).
bool is_complete_labelling(const Aaf& af, const Labelling& labelling);

// Brute-force oracle: scans all 3^n assignments and keeps the complete ones,
// sorted canonically. CapacityError when n exceeds `oracle_limit`.
std::vector<Labelling> enumerate_complete_labellings(const Aaf& af,
                                                     int oracle_limit = kDefaultOracleLimit);

// Post-filters a set of complete labellings. Grounded requires the unique
// labelling whose IN set is contained in every other; empty input or a set
// without such a minimum is a DomainError.
std::vector<Labelling> filter_semantics(const std::vector<Labelling>& labellings,
                                        Semantics semantics);

// Ranked enunciation entries (argument name, rank). The same argument may
// recur at distinct ranks; entries are kept sorted by (rank, name).
class Dialogue {
public:
    void add(const std::string& argument, std::uint32_t rank);
    const std::vector<std::pair<std::string, std::uint32_t>>& entries() const {
        return entries_;
    }
    bool empty() const { return entries_.empty(); }
    bool operator==(const Dialogue& other) const = default;

private:
    std::vector<std::pair<std::string, std::uint32_t>> entries_;
};

}  // namespace argdial::aaf
