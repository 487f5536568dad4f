#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "argdial/io.hpp"
#include "argdial/transform.hpp"
#include "argdial/version.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/subprocess.hpp"

using namespace argdial;
using namespace argdial::io;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string parse_error_text(const char* text) {
    try {
        parse_apx(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("apx parsing accepts comments, blanks and odd spacing") {
    aaf::Aaf af = parse_apx(
        "# the running example\n"
        "arg(a). arg(b).\n"
        "  arg( c ).\n"
        "arg(d).\n"
        "att(a,b). att( b , a ).\n"
        "att(a,c).att(b,c).\n"
        "att(c,d). # chain tail\n");
    CHECK(af == fixtures::example1());
}

TEST_CASE("apx emission is canonical and round-trips") {
    aaf::Aaf af = fixtures::example1();
    std::string apx = emit_apx(af);
    CHECK(apx ==
          "arg(a).\narg(b).\narg(c).\narg(d).\n"
          "att(a,b).\natt(a,c).\natt(b,a).\natt(b,c).\natt(c,d).\n");
    CHECK(parse_apx(apx) == af);
    CHECK(emit_apx(parse_apx(apx)) == apx);
}

TEST_CASE("apx diagnostics carry line and column") {
    CHECK(contains(parse_error_text("arg(a).\natt(a,b).\n"),
                   "line 2, col 7: undeclared argument 'b'"));
    CHECK(contains(parse_error_text("arg(a).\nfoo(a).\n"),
                   "line 2, col 1: unknown statement 'foo'"));
    CHECK(contains(parse_error_text("arg(a)\n"), "expected '.'"));
    CHECK(contains(parse_error_text("arg().\n"), "expected an argument name"));
    CHECK(contains(parse_error_text("att(a b).\n"), "expected ','"));
}

TEST_CASE("tgf parsing") {
    aaf::Aaf af = parse_tgf(
        "a first argument\n"
        "b\n"
        "c\n"
        "d\n"
        "#\n"
        "a b\n"
        "b a\n"
        "a c\n"
        "b c\n"
        "c d\n");
    CHECK(af == fixtures::example1());
    CHECK_THROWS_AS(parse_tgf("a\n#\na b\n"), ParseError);
    CHECK_THROWS_AS(parse_tgf("a\nb\n#\na b c\n"), ParseError);
    CHECK_THROWS_AS(parse_tgf("a?\n"), ParseError);  // invalid name
}

TEST_CASE("dialogue text round-trips and validates") {
    aaf::Dialogue d = parse_dialogue(
        "# opening moves\n"
        "a 0\n"
        "b 0\n"
        "c 2\n"
        "a 2   # repetition is allowed at a later rank\n");
    CHECK(d == fixtures::dlg({{"a", 0}, {"b", 0}, {"a", 2}, {"c", 2}}));
    CHECK(emit_dialogue(d) == "a 0\nb 0\na 2\nc 2\n");
    CHECK(parse_dialogue(emit_dialogue(d)) == d);

    CHECK_THROWS_AS(parse_dialogue("a\n"), ParseError);
    CHECK_THROWS_AS(parse_dialogue("a -1\n"), ParseError);
    CHECK_THROWS_AS(parse_dialogue("a 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dialogue("a one\n"), ParseError);
    CHECK_THROWS_AS(parse_dialogue("a,b 1\n"), ParseError);
}

TEST_CASE("aaf json round-trips") {
    aaf::Aaf af = fixtures::example1();
    std::string text = emit_aaf_json(af);
    CHECK(parse_aaf_json(text) == af);
    CHECK(emit_aaf_json(parse_aaf_json(text)) == text);

    CHECK(parse_aaf_json(R"({"arguments": ["a"]})").size() == 1);
    CHECK_THROWS_AS(parse_aaf_json("{"), ParseError);
    CHECK_THROWS_AS(parse_aaf_json(R"({"attacks": []})"), ParseError);
    CHECK_THROWS_AS(parse_aaf_json(R"({"arguments": ["a"], "attacks": [["a"]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_aaf_json(R"({"arguments": ["a"], "attacks": [["a","b"]]})"),
                    ParseError);
}

TEST_CASE("dialogue json round-trips") {
    aaf::Dialogue d = fixtures::dlg({{"a", 0}, {"b", 1}});
    std::string text = emit_dialogue_json(d);
    CHECK(parse_dialogue_json(text) == d);
    CHECK(emit_dialogue_json(parse_dialogue_json(text)) == text);
    CHECK_THROWS_AS(parse_dialogue_json(R"({"entries": [["a", -1]]})"), ParseError);
    CHECK_THROWS_AS(parse_dialogue_json(R"({"entries": ["a"]})"), ParseError);
    CHECK_THROWS_AS(parse_dialogue_json(R"([])"), ParseError);
}

TEST_CASE("labelling json round-trips against an AAF") {
    aaf::Aaf af = fixtures::example1();
    aaf::Labelling l = fixtures::lab(af, {"a", "d"}, {"b", "c"}, {});
    std::string text = emit_labelling_json(l);
    CHECK(parse_labelling_json(text, af) == l);
    // Not a partition of the universe.
    CHECK_THROWS_AS(parse_labelling_json(R"({"in": ["a"]})", af), DomainError);
    CHECK_THROWS_AS(parse_labelling_json(R"({"in": 3})", af), ParseError);
}

TEST_CASE("file loading dispatches on the extension") {
    std::string dir = subprocess::make_temp_dir();

    write_file(dir + "/g.apx", emit_apx(fixtures::example1()));
    write_file(dir + "/g.json", emit_aaf_json(fixtures::example1()));
    write_file(dir + "/g.tgf", "a\nb\nc\nd\n#\na b\nb a\na c\nb c\nc d\n");
    CHECK(load_aaf_file(dir + "/g.apx") == fixtures::example1());
    CHECK(load_aaf_file(dir + "/g.json") == fixtures::example1());
    CHECK(load_aaf_file(dir + "/g.tgf") == fixtures::example1());

    aaf::Dialogue d = fixtures::dlg({{"a", 0}, {"b", 1}});
    write_file(dir + "/d.dlg", emit_dialogue(d));
    write_file(dir + "/d.json", emit_dialogue_json(d));
    CHECK(load_dialogue_file(dir + "/d.dlg") == d);
    CHECK(load_dialogue_file(dir + "/d.json") == d);

    CHECK_THROWS_AS(read_file(dir + "/missing.apx"), DomainError);
}

TEST_CASE("digests are stable, canonical and discriminating") {
    CHECK(aaf_digest_hex(fixtures::two_cycle()) == "2fa01e657d299c16");
    CHECK(aaf_digest_hex(fixtures::example1()) == "8d4386a45e115707");

    // Same graph assembled in a different order digests identically.
    aaf::Aaf af;
    for (const char* name : {"a", "b", "c", "d"}) af.add_argument(name);
    af.add_attack("c", "d");
    af.add_attack("b", "c");
    af.add_attack("b", "a");
    af.add_attack("a", "c");
    af.add_attack("a", "b");
    CHECK(aaf_digest_hex(af) == aaf_digest_hex(fixtures::example1()));
    CHECK(aaf_digest_hex(fixtures::chain3()) != aaf_digest_hex(fixtures::three_cycle()));
}

TEST_CASE("trace documents carry the full run and round-trip") {
    aaf::Aaf af = fixtures::example1();
    adl::Trace t = adl::run(transform::build_base_context(af), fixtures::sequential(af));
    TraceDocument doc = to_document(t);

    CHECK(doc.metadata.aaf_digest == "8d4386a45e115707");
    CHECK(doc.metadata.transform == "base");
    CHECK(doc.metadata.sequence ==
          std::vector<std::pair<std::string, std::uint32_t>>{
              {"a", 0}, {"b", 1}, {"c", 2}, {"d", 3}});
    CHECK(doc.metadata.horizon == 16 * 18);
    CHECK(doc.metadata.tool_version == kToolVersion);

    REQUIRE(doc.steps.size() == 8);
    CHECK(doc.steps[0].events == std::vector<std::string>{"enunciate(a)"});
    CHECK(doc.steps[2].events == std::vector<std::string>{"delta1(a,b)", "delta1(b,a)"});
    CHECK(doc.steps[7].events.empty());
    CHECK(doc.steps[1].state.present == std::vector<std::string>{"a"});
    CHECK(doc.steps[1].state.in == std::vector<std::string>{"a"});
    CHECK(doc.steps[1].state.last.empty());
    CHECK(doc.argumentative_marks == std::vector<int>{0, 1, 3, 5, 7});
    CHECK(doc.final_labelling ==
          LabellingDoc{{}, {}, {"a", "b", "c", "d"}});

    std::string text = emit_trace_document(doc);
    CHECK(parse_trace(text) == doc);
    CHECK(emit_trace_document(parse_trace(text)) == text);
    CHECK(text.back() == '\n');
    CHECK(contains(text, "\"argumentative_marks\""));
}

TEST_CASE("freshness marks appear in split-transformation documents") {
    aaf::Aaf af = fixtures::two_cycle();
    adl::Trace t = adl::run(transform::build_lelu_context(af),
                            fixtures::dlg({{"a", 0}, {"b", 1}}));
    TraceDocument doc = to_document(t);
    CHECK(doc.metadata.transform == "lelu");
    CHECK(doc.steps[1].state.last == std::vector<std::string>{"a"});
    CHECK(doc.steps[2].state.last.empty());
    CHECK(doc.final_labelling == LabellingDoc{{"b"}, {"a"}, {}});
}

TEST_CASE("trace emission is byte-stable across runs") {
    aaf::Aaf af = fixtures::example1();
    auto c = transform::build_lelu_context(af);
    CHECK(emit_trace(adl::run(c, fixtures::sequential(af))) ==
          emit_trace(adl::run(c, fixtures::sequential(af))));
}

TEST_CASE("trace parsing validates the schema") {
    CHECK_THROWS_AS(parse_trace("{"), ParseError);
    CHECK_THROWS_AS(parse_trace("{}"), ParseError);
    CHECK_THROWS_AS(parse_trace(R"({"metadata": {}, "steps": [],
                                    "argumentative_marks": [], "final_labelling": {}})"),
                    ParseError);

    aaf::Aaf af = fixtures::two_cycle();
    adl::Trace t = adl::run(transform::build_base_context(af), fixtures::simultaneous(af));
    std::string good = emit_trace(t);

    std::string bad = good;
    bad.replace(bad.find("\"base\""), 6, "\"weird\"");
    CHECK_THROWS_AS(parse_trace(bad), ParseError);

    bad = good;
    bad.replace(bad.find("\"steps\""), 7, "\"stepz\"");
    CHECK_THROWS_AS(parse_trace(bad), ParseError);
}

TEST_CASE("atlas documents key every run by its order") {
    aaf::Aaf af = fixtures::two_cycle();
    std::string text = emit_atlas_json(analysis::atlas_all_orders(af, TransformKind::Lelu),
                                       af);
    CHECK(contains(text, "\"aaf_digest\": \"2fa01e657d299c16\""));
    CHECK(contains(text, "\"kind\": \"lelu\""));
    CHECK(contains(text, "\"a,b\""));
    CHECK(contains(text, "\"a|b\""));
    CHECK(contains(text, "\"b|a\""));
    CHECK(text.back() == '\n');
}

TEST_CASE("dot snapshots show presence and status") {
    aaf::Aaf af = fixtures::example1();
    auto c = transform::build_base_context(af);
    adl::Trace t = adl::run(c, fixtures::sequential(af));

    std::string early = emit_dot(*c, t.states[1]);
    CHECK(contains(early, "digraph dialogue"));
    CHECK(contains(early, "\"a\" [style=filled, fillcolor=\"#b2df8a\"];"));
    CHECK(contains(early, "\"b\" [style=dashed];"));
    CHECK(contains(early, "\"a\" -> \"b\" [style=dashed];"));

    std::string final_dot = emit_dot(*c, t.final_state());
    for (const char* name : {"a", "b", "c", "d"}) {
        CHECK(contains(final_dot,
                       "\"" + std::string(name) + "\" [style=filled, fillcolor=\"#ffffb3\"];"));
    }
    CHECK(!contains(final_dot, "dashed"));
    CHECK(contains(final_dot, "\"c\" -> \"d\";"));

    auto lelu = transform::build_lelu_context(fixtures::two_cycle());
    adl::Trace lt = adl::run(lelu, fixtures::dlg({{"a", 0}, {"b", 1}}));
    std::string decided = emit_dot(*lelu, lt.final_state());
    CHECK(contains(decided, "\"a\" [style=filled, fillcolor=\"#fb9a99\"];"));
    CHECK(contains(decided, "\"b\" [style=filled, fillcolor=\"#b2df8a\"];"));
}
