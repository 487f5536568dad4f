#include "argdial/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "argdial/version.hpp"
#include "json.hpp"

namespace argdial::io {

namespace {

using nlohmann::json;

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Character scanner with line/column tracking for the APX reader.
struct Scanner {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }

    void skip_blanks() {
        while (!done()) {
            char c = peek();
            if (c == '#') {
                while (!done() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, line, column);
    }

    std::string name() {
        if (done() || !is_name_char(peek())) fail("expected an argument name");
        std::string out;
        while (!done() && is_name_char(peek())) out.push_back(advance());
        return out;
    }

    void expect(char c) {
        if (done() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }
};

}  // namespace

aaf::Aaf parse_apx(std::string_view text) {
    aaf::Aaf af;
    Scanner s{text};
    while (true) {
        s.skip_blanks();
        if (s.done()) break;
        int line = s.line, column = s.column;
        std::string keyword = s.name();
        if (keyword == "arg") {
            s.expect('(');
            s.skip_blanks();
            std::string name = s.name();
            s.skip_blanks();
            s.expect(')');
            s.expect('.');
            af.add_argument(name);
        } else if (keyword == "att") {
            s.expect('(');
            s.skip_blanks();
            int arg_line = s.line, arg_column = s.column;
            std::string attacker = s.name();
            s.skip_blanks();
            s.expect(',');
            s.skip_blanks();
            int tgt_line = s.line, tgt_column = s.column;
            std::string target = s.name();
            s.skip_blanks();
            s.expect(')');
            s.expect('.');
            if (!af.index_of(attacker)) {
                throw ParseError("undeclared argument '" + attacker + "'", arg_line,
                                 arg_column);
            }
            if (!af.index_of(target)) {
                throw ParseError("undeclared argument '" + target + "'", tgt_line,
                                 tgt_column);
            }
            af.add_attack(attacker, target);
        } else {
            throw ParseError("unknown statement '" + keyword + "'", line, column);
        }
    }
    return af;
}

std::string emit_apx(const aaf::Aaf& af) {
    std::string out;
    for (const std::string& name : af.arguments()) {
        out += "arg(" + name + ").\n";
    }
    for (auto [y, x] : af.attacks()) {
        out += "att(" + af.argument(y) + "," + af.argument(x) + ").\n";
    }
    return out;
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

// Calls fn(line_number, line_without_comment) for each line.
template <class Fn>
void for_each_line(std::string_view text, bool strip_comments, Fn&& fn) {
    int number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (strip_comments) {
            std::size_t hash = line.find('#');
            if (hash != std::string_view::npos) line = line.substr(0, hash);
        }
        fn(number, line);
        if (end == std::string_view::npos) break;
        start = end + 1;
        ++number;
    }
}

}  // namespace

aaf::Aaf parse_tgf(std::string_view text) {
    aaf::Aaf af;
    bool edges = false;
    try {
        for_each_line(text, false, [&](int number, std::string_view line) {
            std::vector<std::string> tokens = split_tokens(line);
            if (tokens.empty()) return;
            if (tokens[0] == "#" && tokens.size() == 1) {
                edges = true;
                return;
            }
            if (!edges) {
                af.add_argument(tokens[0]);  // trailing tokens are a label
                return;
            }
            if (tokens.size() != 2) {
                throw ParseError("expected '<source> <destination>'", number, 1);
            }
            if (!af.index_of(tokens[0]) || !af.index_of(tokens[1])) {
                throw ParseError("edge endpoint not declared", number, 1);
            }
            af.add_attack(tokens[0], tokens[1]);
        });
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return af;
}

aaf::Dialogue parse_dialogue(std::string_view text) {
    aaf::Dialogue dialogue;
    for_each_line(text, true, [&](int number, std::string_view line) {
        std::vector<std::string> tokens = split_tokens(line);
        if (tokens.empty()) return;
        if (tokens.size() != 2) {
            throw ParseError("expected '<argument> <rank>'", number, 1);
        }
        if (!aaf::is_valid_argument_name(tokens[0])) {
            throw ParseError("invalid argument name '" + tokens[0] + "'", number, 1);
        }
        const std::string& rank_text = tokens[1];
        std::uint32_t rank = 0;
        auto [ptr, ec] = std::from_chars(rank_text.data(),
                                         rank_text.data() + rank_text.size(), rank);
        if (ec != std::errc() || ptr != rank_text.data() + rank_text.size()) {
            throw ParseError("rank must be a non-negative integer, got '" + rank_text + "'",
                             number, 1);
        }
        dialogue.add(tokens[0], rank);
    });
    return dialogue;
}

std::string emit_dialogue(const aaf::Dialogue& dialogue) {
    std::string out;
    for (const auto& [name, rank] : dialogue.entries()) {
        out += name + " " + std::to_string(rank) + "\n";
    }
    return out;
}

namespace {

json parse_json_or_throw(std::string_view text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string("invalid JSON in ") + what);
    return j;
}

std::vector<std::string> string_array(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const json& item : j) {
        if (!item.is_string()) throw ParseError(std::string(what) + " must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

aaf::Aaf parse_aaf_json(std::string_view text) {
    json j = parse_json_or_throw(text, "AAF document");
    if (!j.is_object() || !j.contains("arguments")) {
        throw ParseError("AAF document needs an 'arguments' array");
    }
    aaf::Aaf af;
    try {
        for (const std::string& name : string_array(j["arguments"], "'arguments'")) {
            af.add_argument(name);
        }
        if (j.contains("attacks")) {
            if (!j["attacks"].is_array()) throw ParseError("'attacks' must be an array");
            for (const json& pair : j["attacks"]) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                    !pair[1].is_string()) {
                    throw ParseError("each attack must be [attacker, target]");
                }
                af.add_attack(pair[0].get<std::string>(), pair[1].get<std::string>());
            }
        }
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return af;
}

std::string emit_aaf_json(const aaf::Aaf& af) {
    json j;
    j["arguments"] = af.arguments();
    j["attacks"] = json::array();
    for (auto [y, x] : af.attacks()) {
        j["attacks"].push_back({af.argument(y), af.argument(x)});
    }
    return j.dump(2) + "\n";
}

aaf::Dialogue parse_dialogue_json(std::string_view text) {
    json j = parse_json_or_throw(text, "dialogue document");
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("dialogue document needs an 'entries' array");
    }
    aaf::Dialogue dialogue;
    try {
        for (const json& entry : j["entries"]) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
                !entry[1].is_number_unsigned()) {
                throw ParseError("each entry must be [argument, rank]");
            }
            dialogue.add(entry[0].get<std::string>(), entry[1].get<std::uint32_t>());
        }
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return dialogue;
}

std::string emit_dialogue_json(const aaf::Dialogue& dialogue) {
    json entries = json::array();
    for (const auto& [name, rank] : dialogue.entries()) {
        entries.push_back({name, rank});
    }
    json j;
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write file '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw DomainError("failed while writing '" + path + "'");
}

namespace {

bool has_extension(const std::string& path, std::string_view ext) {
    return path.size() >= ext.size() &&
           path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
}

}  // namespace

aaf::Aaf load_aaf_file(const std::string& path) {
    std::string text = read_file(path);
    if (has_extension(path, ".json")) return parse_aaf_json(text);
    if (has_extension(path, ".tgf")) return parse_tgf(text);
    return parse_apx(text);
}

aaf::Dialogue load_dialogue_file(const std::string& path) {
    std::string text = read_file(path);
    if (has_extension(path, ".json")) return parse_dialogue_json(text);
    return parse_dialogue(text);
}

namespace {

json labelling_to_json(const aaf::Labelling& labelling) {
    json j;
    j["in"] = labelling.in_set();
    j["out"] = labelling.out_set();
    j["undec"] = labelling.undec_set();
    return j;
}

}  // namespace

std::string emit_labelling_json(const aaf::Labelling& labelling) {
    return labelling_to_json(labelling).dump(2) + "\n";
}

std::string emit_labellings_json(const std::vector<aaf::Labelling>& labellings) {
    json j = json::array();
    for (const aaf::Labelling& labelling : labellings) {
        j.push_back(labelling_to_json(labelling));
    }
    return j.dump(2) + "\n";
}

aaf::Labelling parse_labelling_json(std::string_view text, const aaf::Aaf& af) {
    json j = parse_json_or_throw(text, "labelling document");
    if (!j.is_object()) throw ParseError("labelling document must be an object");
    auto get = [&](const char* key) -> std::vector<std::string> {
        if (!j.contains(key)) return {};
        return string_array(j[key], key);
    };
    return aaf::Labelling(af.arguments(), get("in"), get("out"), get("undec"));
}

std::uint64_t aaf_digest(const aaf::Aaf& af) {
    std::string apx = emit_apx(af);
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : apx) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string aaf_digest_hex(const aaf::Aaf& af) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t value = aaf_digest(af);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

namespace {

const char* transform_name(TransformKind kind) {
    return kind == TransformKind::Base ? "base" : "lelu";
}

StateDoc state_doc(const adl::Context& context, const adl::State& state) {
    const aaf::Aaf& af = context.info().af;
    const adl::FluentTable& table = context.fluents();
    StateDoc doc;
    for (int x = 0; x < af.size(); ++x) {
        const std::string& name = af.argument(x);
        if (!state.value(table.require(adl::present(x)))) continue;
        doc.present.push_back(name);
        bool i = state.value(table.require(adl::in(x)));
        bool o = state.value(table.require(adl::out(x)));
        if (i && !o) doc.in.push_back(name);
        if (!i && o) doc.out.push_back(name);
        if (!i && !o) doc.undec.push_back(name);
    }
    if (context.info().kind == TransformKind::Lelu) {
        for (int x = 0; x < af.size(); ++x) {
            if (state.value(table.require(adl::last(x)))) {
                doc.last.push_back(af.argument(x));
            }
        }
    }
    for (auto* v : {&doc.present, &doc.in, &doc.out, &doc.undec, &doc.last}) {
        std::sort(v->begin(), v->end());
    }
    return doc;
}

}  // namespace

TraceDocument to_document(const adl::Trace& trace) {
    if (!trace.context) throw DomainError("trace has no context");
    const adl::Context& context = *trace.context;
    TraceDocument doc;
    doc.metadata.aaf_digest = aaf_digest_hex(context.info().af);
    doc.metadata.transform = transform_name(context.info().kind);
    doc.metadata.sequence = trace.dialogue.entries();
    doc.metadata.horizon = context.horizon();
    doc.metadata.tool_version = kToolVersion;

    for (std::size_t t = 0; t < trace.states.size(); ++t) {
        StepDoc step;
        step.t = static_cast<int>(t);
        if (t < trace.event_sets.size()) {
            for (int e : trace.event_sets[t]) {
                step.events.push_back(to_string(context.event(e).label, context.info().af));
            }
            std::sort(step.events.begin(), step.events.end());
        }
        step.state = state_doc(context, trace.states[t]);
        doc.steps.push_back(std::move(step));
    }
    doc.argumentative_marks = trace.argumentative_marks;

    const StateDoc& last = doc.steps.back().state;
    doc.final_labelling = LabellingDoc{last.in, last.out, last.undec};
    return doc;
}

std::string emit_trace_document(const TraceDocument& document) {
    json j;
    json& meta = j["metadata"];
    meta["aaf_digest"] = document.metadata.aaf_digest;
    meta["transform"] = document.metadata.transform;
    meta["sequence"] = json::array();
    for (const auto& [name, rank] : document.metadata.sequence) {
        meta["sequence"].push_back({name, rank});
    }
    meta["horizon"] = document.metadata.horizon;
    meta["tool_version"] = document.metadata.tool_version;

    j["steps"] = json::array();
    for (const StepDoc& step : document.steps) {
        json s;
        s["t"] = step.t;
        s["events"] = step.events;
        s["state"]["present"] = step.state.present;
        s["state"]["in"] = step.state.in;
        s["state"]["out"] = step.state.out;
        s["state"]["undec"] = step.state.undec;
        s["state"]["last"] = step.state.last;
        j["steps"].push_back(std::move(s));
    }
    j["argumentative_marks"] = document.argumentative_marks;
    j["final_labelling"]["in"] = document.final_labelling.in;
    j["final_labelling"]["out"] = document.final_labelling.out;
    j["final_labelling"]["undec"] = document.final_labelling.undec;
    return j.dump(2) + "\n";
}

std::string emit_trace(const adl::Trace& trace) {
    return emit_trace_document(to_document(trace));
}

TraceDocument parse_trace(std::string_view text) {
    json j = parse_json_or_throw(text, "trace document");
    if (!j.is_object() || !j.contains("metadata") || !j.contains("steps") ||
        !j.contains("argumentative_marks") || !j.contains("final_labelling")) {
        throw ParseError("trace document is missing a required section");
    }
    TraceDocument doc;
    const json& meta = j["metadata"];
    if (!meta.is_object() || !meta.contains("aaf_digest") || !meta.contains("transform") ||
        !meta.contains("sequence") || !meta.contains("horizon") ||
        !meta.contains("tool_version")) {
        throw ParseError("trace metadata is missing a required field");
    }
    if (!meta["aaf_digest"].is_string() || !meta["transform"].is_string() ||
        !meta["horizon"].is_number_integer() || !meta["tool_version"].is_string() ||
        !meta["sequence"].is_array()) {
        throw ParseError("trace metadata field has the wrong type");
    }
    doc.metadata.aaf_digest = meta["aaf_digest"].get<std::string>();
    doc.metadata.transform = meta["transform"].get<std::string>();
    if (doc.metadata.transform != "base" && doc.metadata.transform != "lelu") {
        throw ParseError("unknown transform '" + doc.metadata.transform + "'");
    }
    for (const json& entry : meta["sequence"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_number_unsigned()) {
            throw ParseError("sequence entries must be [argument, rank]");
        }
        doc.metadata.sequence.emplace_back(entry[0].get<std::string>(),
                                           entry[1].get<std::uint32_t>());
    }
    doc.metadata.horizon = meta["horizon"].get<int>();
    doc.metadata.tool_version = meta["tool_version"].get<std::string>();

    if (!j["steps"].is_array() || j["steps"].empty()) {
        throw ParseError("trace needs at least one step");
    }
    for (const json& s : j["steps"]) {
        if (!s.is_object() || !s.contains("t") || !s.contains("events") ||
            !s.contains("state") || !s["t"].is_number_integer()) {
            throw ParseError("malformed trace step");
        }
        StepDoc step;
        step.t = s["t"].get<int>();
        step.events = string_array(s["events"], "step events");
        const json& st = s["state"];
        if (!st.is_object()) throw ParseError("step state must be an object");
        auto get = [&](const char* key) -> std::vector<std::string> {
            if (!st.contains(key)) return {};
            return string_array(st[key], key);
        };
        step.state = StateDoc{get("present"), get("in"), get("out"), get("undec"),
                              get("last")};
        doc.steps.push_back(std::move(step));
    }

    if (!j["argumentative_marks"].is_array()) {
        throw ParseError("argumentative_marks must be an array");
    }
    for (const json& m : j["argumentative_marks"]) {
        if (!m.is_number_integer()) throw ParseError("marks must be integers");
        doc.argumentative_marks.push_back(m.get<int>());
    }

    const json& fl = j["final_labelling"];
    if (!fl.is_object()) throw ParseError("final_labelling must be an object");
    auto get_final = [&](const char* key) -> std::vector<std::string> {
        if (!fl.contains(key)) return {};
        return string_array(fl[key], key);
    };
    doc.final_labelling = LabellingDoc{get_final("in"), get_final("out"),
                                       get_final("undec")};
    return doc;
}

std::string emit_atlas_json(const analysis::Atlas& atlas, const aaf::Aaf& af) {
    json entries = json::object();
    for (const analysis::AtlasEntry& entry : atlas.entries) {
        entries[analysis::atlas_key(entry.groups)] = labelling_to_json(entry.final_labelling);
    }
    json j;
    j["aaf_digest"] = aaf_digest_hex(af);
    j["kind"] = transform_name(atlas.kind);
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::string emit_dot(const adl::Context& context, const adl::State& state) {
    const aaf::Aaf& af = context.info().af;
    const adl::FluentTable& table = context.fluents();
    std::string out = "digraph dialogue {\n  node [shape=circle];\n";
    for (int x = 0; x < af.size(); ++x) {
        const std::string& name = af.argument(x);
        if (!state.value(table.require(adl::present(x)))) {
            out += "  \"" + name + "\" [style=dashed];\n";
            continue;
        }
        bool i = state.value(table.require(adl::in(x)));
        bool o = state.value(table.require(adl::out(x)));
        const char* fill = (i && !o) ? "#b2df8a" : (!i && o) ? "#fb9a99" : "#ffffb3";
        out += "  \"" + name + "\" [style=filled, fillcolor=\"" + fill + "\"];\n";
    }
    for (auto [y, x] : af.attacks()) {
        bool both = state.value(table.require(adl::present(y))) &&
                    state.value(table.require(adl::present(x)));
        out += "  \"" + af.argument(y) + "\" -> \"" + af.argument(x) + "\"";
        if (!both) out += " [style=dashed]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace argdial::io
