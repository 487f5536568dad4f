#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argdial/aaf.hpp"
#include "argdial/adl.hpp"
#include "argdial/analysis.hpp"

namespace argdial::io {

// ---- AAF formats ---------------------------------------------------------

// `arg(<name>).` and `att(<attacker>,<target>).` statements; `#` starts a
// line comment. Attacks must name declared arguments. ParseError diagnostics
// carry line and column.
aaf::Aaf parse_apx(std::string_view text);
std::string emit_apx(const aaf::Aaf& af);

// Trivial graph format: one node id per line, a lone `#`, then `<src> <dst>`
// edge lines. Anything after the node id on its line is ignored as a label.
aaf::Aaf parse_tgf(std::string_view text);

// {"arguments": [...], "attacks": [[attacker, target], ...]}
aaf::Aaf parse_aaf_json(std::string_view text);
std::string emit_aaf_json(const aaf::Aaf& af);

// ---- Dialogue format -----------------------------------------------------

// `<argument> <rank>` per line; `#` starts a comment; blank lines ignored.
aaf::Dialogue parse_dialogue(std::string_view text);
std::string emit_dialogue(const aaf::Dialogue& dialogue);

// {"entries": [[argument, rank], ...]}
aaf::Dialogue parse_dialogue_json(std::string_view text);
std::string emit_dialogue_json(const aaf::Dialogue& dialogue);

// ---- Files ----------------------------------------------------------------

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Dispatch on extension: .json / .tgf / anything else as APX.
aaf::Aaf load_aaf_file(const std::string& path);
// Dispatch on extension: .json / anything else as dialogue text.
aaf::Dialogue load_dialogue_file(const std::string& path);

// ---- Labellings -----------------------------------------------------------

std::string emit_labelling_json(const aaf::Labelling& labelling);
std::string emit_labellings_json(const std::vector<aaf::Labelling>& labellings);
// Validates that in/out/undec partition the AAF's arguments.
aaf::Labelling parse_labelling_json(std::string_view text, const aaf::Aaf& af);

// ---- Digest ----------------------------------------------------------------

// FNV-1a 64 over the canonical APX encoding.
std::uint64_t aaf_digest(const aaf::Aaf& af);
std::string aaf_digest_hex(const aaf::Aaf& af);

// ---- Trace documents -------------------------------------------------------

struct StateDoc {
    std::vector<std::string> present, in, out, undec, last;  // each sorted
    bool operator==(const StateDoc&) const = default;
};

struct StepDoc {
    int t = 0;
    std::vector<std::string> events;  // sorted labels; empty on the last step
    StateDoc state;
    bool operator==(const StepDoc&) const = default;
};

struct LabellingDoc {
    std::vector<std::string> in, out, undec;
    bool operator==(const LabellingDoc&) const = default;
};

struct TraceMetadata {
    std::string aaf_digest;
    std::string transform;  // "base" or "lelu"
    std::vector<std::pair<std::string, std::uint32_t>> sequence;  // (argument, rank)
    int horizon = 0;
    std::string tool_version;
    bool operator==(const TraceMetadata&) const = default;
};

struct TraceDocument {
    TraceMetadata metadata;
    std::vector<StepDoc> steps;  // one per state
    std::vector<int> argumentative_marks;
    LabellingDoc final_labelling;
    bool operator==(const TraceDocument&) const = default;
};

TraceDocument to_document(const adl::Trace& trace);
// Canonical bytes: sorted keys, two-space indent, LF, trailing newline.
std::string emit_trace_document(const TraceDocument& document);
std::string emit_trace(const adl::Trace& trace);
TraceDocument parse_trace(std::string_view text);

// ---- Atlas -----------------------------------------------------------------

std::string emit_atlas_json(const analysis::Atlas& atlas, const aaf::Aaf& af);

// ---- DOT -------------------------------------------------------------------

// Snapshot of one state: absent arguments and their incident attacks are
// dashed; present ones are filled by their current label.
std::string emit_dot(const adl::Context& context, const adl::State& state);

}  // namespace argdial::io
