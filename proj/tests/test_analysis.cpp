#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "argdial/analysis.hpp"
#include "argdial/check.hpp"
#include "argdial/transform.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace argdial;
using namespace argdial::analysis;

namespace {

adl::State with(const adl::Context& c, adl::State s, const adl::Fluent& f, bool v) {
    s.set(c.fluents().require(f), v);
    return s;
}

}  // namespace

TEST_CASE("settledness on hand-picked states of the running example") {
    aaf::Aaf af = fixtures::example1();
    auto c = transform::build_base_context(af);
    adl::Trace t = adl::run(c, fixtures::sequential(af));
    REQUIRE(t.states.size() == 8);

    SUBCASE("the empty initial state is settled but the mid-cascade ones are not") {
        CHECK(is_sigma_c_state(*c, t.states[0]));
        CHECK(is_sigma_c_state(*c, t.states[1]));
        // Both a and b just became present and accepted while attacking each
        // other, so neither direction of the acceptance condition holds.
        CHECK(!is_sigma_c_state(*c, t.states[2]));
        CHECK(is_sigma_c_state(*c, t.states[3]));
        CHECK(!is_sigma_c_state(*c, t.states[4]));
        CHECK(is_sigma_c_state(*c, t.final_state()));
    }
    SUBCASE("tampering with a settled state unsettles it") {
        CHECK(!is_sigma_c_state(*c, with(*c, t.final_state(), adl::in(0), true)));
        CHECK(!is_sigma_c_state(*c, with(*c, t.final_state(), adl::out(3), true)));
    }
    SUBCASE("all-undecided is settled but not decided") {
        CHECK(is_sigma_c_state(*c, t.final_state()));
        CHECK(!is_sigma_s_state(*c, t.final_state()));
    }
    SUBCASE("a present argument only counts against decidedness") {
        CHECK(is_sigma_s_state(*c, t.states[0]));
        CHECK(is_sigma_s_state(*c, t.states[1]));  // a alone, accepted
    }
}

TEST_CASE("a fully decided final state is settled and decided") {
    aaf::Aaf af = fixtures::chain3();
    auto c = transform::build_base_context(af);
    adl::Trace t = adl::run(c, fixtures::sequential(af));
    CHECK(is_sigma_c_state(*c, t.final_state()));
    CHECK(is_sigma_s_state(*c, t.final_state()));
}

TEST_CASE("pending freshness marks block settledness") {
    aaf::Aaf af = fixtures::two_cycle();
    auto c = transform::build_lelu_context(af);
    adl::Trace t = adl::run(c, fixtures::dlg({{"a", 0}, {"b", 1}}));
    REQUIRE(t.argumentative_marks == std::vector<int>{0, 2, 6});
    // After enunciate(a) the state satisfies the status conditions, but the
    // freshness mark on a is still pending.
    CHECK(!is_sigma_c_state(*c, t.states[1]));
    CHECK(is_sigma_c_state(*c, with(*c, t.states[1], adl::last(0), false)));
    CHECK(is_sigma_s_state(*c, t.final_state()));
}

TEST_CASE("quiescence and settledness coincide along runs") {
    Rng rng(777);
    check::GeneratorOptions gen;
    gen.max_args = 5;
    for (int i = 0; i < 40; ++i) {
        aaf::Aaf af = check::random_aaf(rng, gen);
        aaf::Dialogue d = check::random_dialogue(rng, af);
        for (TransformKind kind : {TransformKind::Base, TransformKind::Lelu}) {
            auto c = transform::build_context(af, kind);
            adl::Trace t = adl::run(c, d);
            for (int s = 0; s < static_cast<int>(t.states.size()); ++s) {
                bool quiescent = adl::triggered_exogenous(*c, t.states[s]).empty();
                CHECK(quiescent == is_sigma_c_state(*c, t.states[s]));
                bool marked = std::count(t.argumentative_marks.begin(),
                                         t.argumentative_marks.end(), s) > 0;
                CHECK(marked == quiescent);
            }
        }
    }
}

TEST_CASE("cascades between pauses stay linear in the argument count") {
    Rng rng(778);
    check::GeneratorOptions gen;
    for (int i = 0; i < 40; ++i) {
        aaf::Aaf af = check::random_aaf(rng, gen);
        aaf::Dialogue d = check::random_dialogue(rng, af);
        adl::Trace t = adl::run(transform::build_base_context(af), d);
        for (std::size_t m = 1; m < t.argumentative_marks.size(); ++m) {
            int gap = t.argumentative_marks[m] - t.argumentative_marks[m - 1];
            CHECK(gap - 1 <= 4 * af.size());
        }
    }
}

TEST_CASE("labelling read-off over the present arguments") {
    aaf::Aaf af = fixtures::example1();
    auto c = transform::build_base_context(af);
    adl::Trace t = adl::run(c, fixtures::sequential(af));

    aaf::Labelling alone = associated_labelling(*c, t.states[1]);
    CHECK(alone.universe() == std::vector<std::string>{"a"});
    CHECK(alone.in_set() == std::vector<std::string>{"a"});

    aaf::Labelling pair = associated_labelling(*c, t.states[3]);
    CHECK(pair.universe() == std::vector<std::string>{"a", "b"});
    CHECK(pair.undec_set() == std::vector<std::string>{"a", "b"});

    aaf::Labelling full = associated_labelling(*c, t.final_state());
    CHECK(full == fixtures::lab(af, {}, {}, {"a", "b", "c", "d"}));

    CHECK_THROWS_AS(associated_labelling(*c, with(*c, t.states[1], adl::out(0), true)),
                    IntegrityError);
}

TEST_CASE("graph read-off keeps exactly the attacks among present arguments") {
    aaf::Aaf af = fixtures::example1();
    auto c = transform::build_base_context(af);
    adl::Trace t = adl::run(c, fixtures::sequential(af));

    aaf::Aaf g1 = associated_graph(*c, t.states[1]);
    CHECK(g1.arguments() == std::vector<std::string>{"a"});
    CHECK(g1.attacks().empty());

    aaf::Aaf g3 = associated_graph(*c, t.states[3]);
    CHECK(g3.arguments() == std::vector<std::string>{"a", "b"});
    CHECK(g3.attacks() == std::set<std::pair<int, int>>{{0, 1}, {1, 0}});

    CHECK(associated_graph(*c, t.final_state()) == af);
}

TEST_CASE("trace correctness accepts the real trace and pins down a corrupted one") {
    aaf::Aaf af = fixtures::example1();
    auto c = transform::build_base_context(af);
    adl::Trace t = adl::run(c, fixtures::sequential(af));
    CHECK(check_correctness(t).ok);

    SUBCASE("incomplete labelling at a pause") {
        adl::Trace bad = t;
        bad.states[3] = with(*c, bad.states[3], adl::in(0), true);
        CorrectnessReport report = check_correctness(bad);
        CHECK(!report.ok);
        CHECK(report.violation_time == 3);
    }
    SUBCASE("contradictory status at a pause") {
        adl::Trace bad = t;
        bad.states[1] = with(*c, bad.states[1], adl::out(0), true);
        CorrectnessReport report = check_correctness(bad);
        CHECK(!report.ok);
        CHECK(report.violation_time == 1);
        CHECK(report.message.find("both accepted and rejected") != std::string::npos);
    }
    SUBCASE("corruption between pauses goes unreported") {
        adl::Trace bad = t;
        // states[2] would fail the completeness check, but it is mid-cascade.
        bad.states[2] = with(*c, bad.states[2], adl::in(0), false);
        CHECK(check_correctness(bad).ok);
    }
}

TEST_CASE("sequence synthesis hits each target labelling of the running example") {
    aaf::Aaf af = fixtures::example1();
    CHECK(synthesize_sequence(af, fixtures::lab(af, {"a", "d"}, {"b", "c"}, {})) ==
          fixtures::dlg({{"b", 0}, {"c", 0}, {"a", 1}, {"d", 1}}));
    CHECK(synthesize_sequence(af, fixtures::lab(af, {"b", "d"}, {"a", "c"}, {})) ==
          fixtures::dlg({{"a", 0}, {"c", 0}, {"b", 1}, {"d", 1}}));
    CHECK(synthesize_sequence(af, fixtures::lab(af, {}, {}, {"a", "b", "c", "d"})) ==
          fixtures::dlg({{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}}));
}

TEST_CASE("sequence synthesis compacts empty groups") {
    aaf::Aaf af = fixtures::chain3();
    CHECK(synthesize_sequence(af, fixtures::lab(af, {"a", "c"}, {"b"}, {})) ==
          fixtures::dlg({{"b", 0}, {"a", 1}, {"c", 1}}));
}

TEST_CASE("sequence synthesis rejects non-complete targets") {
    aaf::Aaf af = fixtures::example1();
    CHECK_THROWS_AS(synthesize_sequence(af, fixtures::lab(af, {"a"}, {"b"}, {"c", "d"})),
                    DomainError);
    CHECK_THROWS_AS(synthesize_sequence(af, fixtures::lab(af, {"a", "b"}, {"c"}, {"d"})),
                    DomainError);
}

TEST_CASE("every complete labelling of a random instance is reachable") {
    Rng rng(1234);
    check::GeneratorOptions gen;
    gen.max_args = 5;
    for (int i = 0; i < 40; ++i) {
        aaf::Aaf af = check::random_aaf(rng, gen);
        for (const aaf::Labelling& target : aaf::enumerate_complete_labellings(af)) {
            // Self-verifying: throws if the run misses the target.
            aaf::Dialogue d = synthesize_sequence(af, target);
            CHECK(!d.entries().empty());
        }
    }
}

TEST_CASE("atlas keys are canonical") {
    CHECK(atlas_key({{"b"}, {"a", "c"}}) == "b|a,c");
    CHECK(atlas_key({{"a", "b", "c"}}) == "a,b,c");
    CHECK(atlas_key({}) == "");
}

TEST_CASE("exhaustive atlas of the mutual attack") {
    aaf::Aaf af = fixtures::two_cycle();

    Atlas base = atlas_all_orders(af, TransformKind::Base);
    REQUIRE(base.entries.size() == 3);
    CHECK(atlas_key(base.entries[0].groups) == "a,b");
    CHECK(atlas_key(base.entries[1].groups) == "a|b");
    CHECK(atlas_key(base.entries[2].groups) == "b|a");
    for (const AtlasEntry& entry : base.entries) {
        CHECK(entry.final_labelling == fixtures::lab(af, {}, {}, {"a", "b"}));
    }

    Atlas split = atlas_all_orders(af, TransformKind::Lelu);
    REQUIRE(split.entries.size() == 3);
    CHECK(split.entries[0].final_labelling == fixtures::lab(af, {}, {}, {"a", "b"}));
    CHECK(split.entries[1].final_labelling == fixtures::lab(af, {"b"}, {"a"}, {}));
    CHECK(split.entries[2].final_labelling == fixtures::lab(af, {"a"}, {"b"}, {}));
}

TEST_CASE("atlas of a single argument") {
    aaf::Aaf af;
    af.add_argument("a");
    Atlas atlas = atlas_all_orders(af, TransformKind::Lelu);
    REQUIRE(atlas.entries.size() == 1);
    CHECK(atlas_key(atlas.entries[0].groups) == "a");
    CHECK(atlas.entries[0].final_labelling == fixtures::lab(af, {"a"}, {}, {}));
}

TEST_CASE("exhaustive atlas refuses oversized instances") {
    aaf::Aaf af;
    for (char ch = 'a'; ch < 'a' + 7; ++ch) af.add_argument(std::string(1, ch));
    CHECK_THROWS_AS(atlas_all_orders(af, TransformKind::Base), CapacityError);
    CHECK_NOTHROW(atlas_all_orders(af, TransformKind::Base, 7));
}

TEST_CASE("sampled atlases agree with the exhaustive one") {
    aaf::Aaf af = fixtures::two_cycle();
    Atlas full = atlas_all_orders(af, TransformKind::Lelu);
    Atlas sampled = atlas_sampled(af, TransformKind::Lelu, 64, 9);
    CHECK(sampled.entries.size() == full.entries.size());
    for (std::size_t i = 0; i < sampled.entries.size(); ++i) {
        CHECK(atlas_key(sampled.entries[i].groups) == atlas_key(full.entries[i].groups));
        CHECK(sampled.entries[i].final_labelling == full.entries[i].final_labelling);
    }

    Atlas again = atlas_sampled(af, TransformKind::Lelu, 64, 9);
    REQUIRE(again.entries.size() == sampled.entries.size());
    for (std::size_t i = 0; i < again.entries.size(); ++i) {
        CHECK(atlas_key(again.entries[i].groups) == atlas_key(sampled.entries[i].groups));
    }

    Atlas tiny = atlas_sampled(af, TransformKind::Lelu, 0, 9);
    CHECK(tiny.entries.empty());
}
