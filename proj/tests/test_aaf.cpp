#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "argdial/aaf.hpp"
#include "argdial/rng.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace argdial;
using namespace argdial::aaf;
using fixtures::lab;

TEST_CASE("argument declaration is idempotent and order-preserving") {
    Aaf af;
    CHECK(af.add_argument("b") == 0);
    CHECK(af.add_argument("a") == 1);
    CHECK(af.add_argument("b") == 0);
    CHECK(af.size() == 2);
    CHECK(af.arguments() == std::vector<std::string>{"b", "a"});
    CHECK(af.index_of("a") == 1);
    CHECK(!af.index_of("c").has_value());
}

TEST_CASE("argument names are letters, digits, underscore") {
    Aaf af;
    CHECK_NOTHROW(af.add_argument("x_1"));
    CHECK_THROWS_AS(af.add_argument(""), DomainError);
    CHECK_THROWS_AS(af.add_argument("a b"), DomainError);
    CHECK_THROWS_AS(af.add_argument("a-b"), DomainError);
}

TEST_CASE("attacks need declared endpoints and deduplicate") {
    Aaf af = fixtures::two_cycle();
    CHECK_THROWS_AS(af.add_attack("a", "zz"), DomainError);
    CHECK(af.attacks().size() == 2);
    af.add_attack("a", "b");
    CHECK(af.attacks().size() == 2);
    CHECK(af.has_attack(0, 1));
    CHECK(af.attackers_of(0) == std::vector<int>{1});
}

TEST_CASE("labellings must partition the stated universe") {
    Aaf af = fixtures::two_cycle();
    CHECK_NOTHROW(lab(af, {"a"}, {"b"}, {}));
    CHECK_THROWS_AS(lab(af, {"a"}, {}, {}), DomainError);            // b missing
    CHECK_THROWS_AS(lab(af, {"a", "b"}, {"b"}, {}), DomainError);    // overlap
    CHECK_THROWS_AS(lab(af, {"a", "c"}, {"b"}, {}), DomainError);    // foreign name
    CHECK_THROWS_AS(lab(af, {"a", "a"}, {"b"}, {}), DomainError);    // duplicate
    Labelling l = lab(af, {"a"}, {"b"}, {});
    CHECK(l.label_of("a") == Label::In);
    CHECK(l.label_of("b") == Label::Out);
    CHECK_THROWS_AS(l.label_of("zzz"), DomainError);
}

TEST_CASE("completeness characterisation on the running example") {
    Aaf af = fixtures::example1();
    CHECK(is_complete_labelling(af, lab(af, {"a", "d"}, {"b", "c"}, {})));
    CHECK(is_complete_labelling(af, lab(af, {"b", "d"}, {"a", "c"}, {})));
    CHECK(is_complete_labelling(af, lab(af, {}, {}, {"a", "b", "c", "d"})));
    // a IN forces b OUT, c OUT, d IN; anything else fails.
    CHECK(!is_complete_labelling(af, lab(af, {"a"}, {"b", "c"}, {"d"})));
    CHECK(!is_complete_labelling(af, lab(af, {"a", "b"}, {"c", "d"}, {})));
    CHECK(!is_complete_labelling(af, lab(af, {"a", "b", "c", "d"}, {}, {})));
}

TEST_CASE("completeness check rejects a mismatched universe") {
    Aaf af = fixtures::two_cycle();
    Aaf other;
    other.add_argument("a");
    Labelling l(other.arguments(), {"a"}, {}, {});
    CHECK_THROWS_AS(is_complete_labelling(af, l), DomainError);
}

TEST_CASE("enumeration returns exactly the hand-checked labelling sets") {
    SUBCASE("running example has three complete labellings") {
        Aaf af = fixtures::example1();
        std::vector<Labelling> all = enumerate_complete_labellings(af);
        REQUIRE(all.size() == 3);
        std::vector<Labelling> expected{
            lab(af, {}, {}, {"a", "b", "c", "d"}),
            lab(af, {"a", "d"}, {"b", "c"}, {}),
            lab(af, {"b", "d"}, {"a", "c"}, {}),
        };
        std::sort(expected.begin(), expected.end());
        CHECK(all == expected);
    }
    SUBCASE("self-attack leaves the argument undecided") {
        Aaf af = fixtures::self_attack();
        std::vector<Labelling> all = enumerate_complete_labellings(af);
        REQUIRE(all.size() == 1);
        CHECK(all.front() == lab(af, {}, {}, {"a"}));
    }
    SUBCASE("single attack decides both arguments") {
        Aaf af;
        af.add_argument("a");
        af.add_argument("b");
        af.add_attack("a", "b");
        std::vector<Labelling> all = enumerate_complete_labellings(af);
        REQUIRE(all.size() == 1);
        CHECK(all.front() == lab(af, {"a"}, {"b"}, {}));
    }
    SUBCASE("empty graph has the empty labelling") {
        Aaf af;
        std::vector<Labelling> all = enumerate_complete_labellings(af);
        REQUIRE(all.size() == 1);
        CHECK(all.front().universe().empty());
    }
    SUBCASE("two-cycle has three complete labellings") {
        Aaf af = fixtures::two_cycle();
        std::vector<Labelling> all = enumerate_complete_labellings(af);
        REQUIRE(all.size() == 3);
        CHECK(std::count(all.begin(), all.end(), lab(af, {"a"}, {"b"}, {})) == 1);
        CHECK(std::count(all.begin(), all.end(), lab(af, {"b"}, {"a"}, {})) == 1);
        CHECK(std::count(all.begin(), all.end(), lab(af, {}, {}, {"a", "b"})) == 1);
    }
}

TEST_CASE("enumeration respects the capacity limit") {
    Aaf af;
    for (int i = 0; i < 13; ++i) af.add_argument("x" + std::to_string(i));
    CHECK_THROWS_AS(enumerate_complete_labellings(af), CapacityError);
    CHECK_THROWS_AS(enumerate_complete_labellings(af, 12), CapacityError);
    Aaf small = fixtures::two_cycle();
    CHECK_THROWS_AS(enumerate_complete_labellings(small, 1), CapacityError);
    CHECK_NOTHROW(enumerate_complete_labellings(small, 2));
}

TEST_CASE("semantics filters on the running example") {
    Aaf af = fixtures::example1();
    std::vector<Labelling> all = enumerate_complete_labellings(af);
    Labelling l1 = lab(af, {"a", "d"}, {"b", "c"}, {});
    Labelling l2 = lab(af, {"b", "d"}, {"a", "c"}, {});
    Labelling l3 = lab(af, {}, {}, {"a", "b", "c", "d"});

    std::vector<Labelling> grounded = filter_semantics(all, Semantics::Grounded);
    REQUIRE(grounded.size() == 1);
    CHECK(grounded.front() == l3);

    std::vector<Labelling> preferred = filter_semantics(all, Semantics::Preferred);
    REQUIRE(preferred.size() == 2);
    CHECK(std::count(preferred.begin(), preferred.end(), l1) == 1);
    CHECK(std::count(preferred.begin(), preferred.end(), l2) == 1);

    CHECK(filter_semantics(all, Semantics::Stable) == preferred);
    CHECK(filter_semantics(all, Semantics::Complete) == all);
}

TEST_CASE("stable labellings may not exist") {
    Aaf af = fixtures::self_attack();
    std::vector<Labelling> all = enumerate_complete_labellings(af);
    CHECK(filter_semantics(all, Semantics::Stable).empty());
    CHECK(filter_semantics(all, Semantics::Grounded).size() == 1);
}

TEST_CASE("filtering an empty labelling set is a domain error") {
    CHECK_THROWS_AS(filter_semantics({}, Semantics::Grounded), DomainError);
}

namespace {

// Small random graphs for the inclusion laws below.
aaf::Aaf random_graph(Rng& rng) {
    Aaf af;
    int n = 1 + rng.uniform_int(6);
    for (int i = 0; i < n; ++i) af.add_argument(std::string(1, static_cast<char>('a' + i)));
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            if (rng.bernoulli(0.3)) af.add_attack(y, x);
        }
    }
    return af;
}

bool contains(const std::vector<Labelling>& set, const Labelling& l) {
    return std::count(set.begin(), set.end(), l) > 0;
}

}  // namespace

TEST_CASE("enumerated labellings satisfy the standard inclusion laws") {
    Rng rng(20240817);
    for (int i = 0; i < 200; ++i) {
        Aaf af = random_graph(rng);
        std::vector<Labelling> all = enumerate_complete_labellings(af);
        REQUIRE(!all.empty());  // grounded always exists
        for (const Labelling& l : all) CHECK(is_complete_labelling(af, l));

        std::vector<Labelling> grounded = filter_semantics(all, Semantics::Grounded);
        REQUIRE(grounded.size() == 1);
        for (const Labelling& l : all) {
            CHECK(std::includes(l.in_set().begin(), l.in_set().end(),
                                grounded.front().in_set().begin(),
                                grounded.front().in_set().end()));
        }

        std::vector<Labelling> preferred = filter_semantics(all, Semantics::Preferred);
        std::vector<Labelling> stable = filter_semantics(all, Semantics::Stable);
        for (const Labelling& l : stable) {
            CHECK(l.undec_set().empty());
            CHECK(contains(preferred, l));
        }
        for (const Labelling& l : preferred) CHECK(contains(all, l));
    }
}

TEST_CASE("dialogues keep sorted deduplicated entries") {
    Dialogue d;
    d.add("b", 1);
    d.add("a", 0);
    d.add("a", 0);
    d.add("a", 2);  // repetition at a later rank is allowed
    REQUIRE(d.entries().size() == 3);
    CHECK(d.entries()[0] == std::pair<std::string, std::uint32_t>("a", 0));
    CHECK(d.entries()[1] == std::pair<std::string, std::uint32_t>("b", 1));
    CHECK(d.entries()[2] == std::pair<std::string, std::uint32_t>("a", 2));
    CHECK_THROWS_AS(d.add("bad name", 0), DomainError);
}
