#include "doctest.h"
#include "support.hpp"

using namespace ordcomplete;
namespace fx = ordcomplete::fixtures;
using testsupport::mask_subset;

TEST_SUITE_BEGIN("poset");

TEST_CASE("chain input closes to the full order") {
    FinitePoset p = FinitePoset::validate({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.relation_pairs().size() == 6);  // 3 reflexive + a<b, b<c, a<c
    CHECK(p.leq(p.index_of("a"), p.index_of("c")));
    CHECK_FALSE(p.leq(p.index_of("c"), p.index_of("a")));
}

TEST_CASE("singleton poset is reflexive only") {
    FinitePoset p = FinitePoset::validate({"a"}, {});
    CHECK(p.size() == 1);
    CHECK(p.relation_pairs().size() == 1);
}

TEST_CASE("two-cycles are rejected") {
    CHECK_THROWS_AS(FinitePoset::validate({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
}

TEST_CASE("longer cycles are rejected through the closure") {
    CHECK_THROWS_AS(FinitePoset::validate({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
                    CycleError);
}

TEST_CASE("duplicate labels are rejected") {
    CHECK_THROWS_AS(FinitePoset::validate({"a", "a"}, {}), DuplicateLabelError);
}

TEST_CASE("pairs over undeclared elements are rejected") {
    CHECK_THROWS_AS(FinitePoset::validate({"a"}, {{"a", "zz"}}), UnknownElementError);
}

TEST_CASE("element cap is enforced") {
    Caps caps;
    caps.max_elements = 2;
    CHECK_THROWS_AS(FinitePoset::validate({"a", "b", "c"}, {}, caps), SizeCapError);
}

TEST_CASE("revalidating an accepted relation reproduces the poset") {
    FinitePoset p = fx::diamond();
    FinitePoset again = FinitePoset::validate(p.labels(), p.relation_pairs());
    CHECK(p.same_order_as(again));
}

TEST_CASE("principal down-sets") {
    FinitePoset chain = fx::chain(3);
    CHECK(chain.labels_of(chain.principal_down("b").bits()) == std::vector<std::string>{"a", "b"});

    FinitePoset anti = fx::antichain(2);
    CHECK(anti.labels_of(anti.principal_down("a").bits()) == std::vector<std::string>{"a"});

    FinitePoset d = fx::diamond();
    CHECK(d.principal_down("1").count() == 4);
}

TEST_CASE("principal up-sets") {
    FinitePoset chain = fx::chain(3);
    CHECK(chain.labels_of(chain.principal_up("b").bits()) == std::vector<std::string>{"b", "c"});

    FinitePoset anti = fx::antichain(2);
    CHECK(anti.labels_of(anti.principal_up("b").bits()) == std::vector<std::string>{"b"});

    FinitePoset d = fx::diamond();
    CHECK(d.principal_up("0").count() == 4);
}

TEST_CASE("upper bounds") {
    FinitePoset chain = fx::chain(3);
    CHECK(chain.labels_of(chain.upper_bounds(chain.subset_of({"a", "b"})).bits()) ==
          std::vector<std::string>{"b", "c"});

    FinitePoset anti = fx::antichain(2);
    CHECK(anti.upper_bounds(anti.subset_of({"a", "b"})).empty());

    // The empty subset is bounded by everything.
    FinitePoset three = fx::antichain(3);
    CHECK(three.upper_bounds(three.empty_subset()).count() == 3);
}

TEST_CASE("lower bounds") {
    FinitePoset chain = fx::chain(3);
    CHECK(chain.labels_of(chain.lower_bounds(chain.subset_of({"b", "c"})).bits()) ==
          std::vector<std::string>{"a", "b"});

    FinitePoset anti = fx::antichain(2);
    CHECK(anti.lower_bounds(anti.subset_of({"a", "b"})).empty());

    FinitePoset d = fx::diamond();
    CHECK(d.labels_of(d.lower_bounds(d.subset_of({"a", "b"})).bits()) ==
          std::vector<std::string>{"0"});
}

TEST_CASE("subsets of other posets are rejected") {
    FinitePoset p = fx::chain(3);
    FinitePoset q = fx::chain(3);
    CHECK_THROWS_AS(p.upper_bounds(q.subset_of({"a"})), PosetMismatchError);
}

TEST_CASE("increasing map checks") {
    FinitePoset chain = fx::chain(3);
    GroundMap identity = GroundMap::validate(chain, chain, {{"a", "a"}, {"b", "b"}, {"c", "c"}});
    CHECK(is_increasing(identity));

    GroundMap swap = GroundMap::validate(chain, chain, {{"a", "c"}, {"b", "b"}, {"c", "a"}});
    CHECK_FALSE(is_increasing(swap));

    GroundMap constant = GroundMap::validate(chain, chain, {{"a", "b"}, {"b", "b"}, {"c", "b"}});
    CHECK(is_increasing(constant));
}

TEST_CASE("order isomorphic embedding checks") {
    FinitePoset two = fx::chain(2);
    FinitePoset three = fx::chain(3);
    GroundMap embed = GroundMap::validate(two, three, {{"a", "a"}, {"b", "c"}});
    CHECK(is_oie(embed));

    FinitePoset anti = fx::antichain(2);
    GroundMap constant = GroundMap::validate(anti, three, {{"a", "b"}, {"b", "b"}});
    CHECK_FALSE(is_oie(constant));  // not injective

    // Injective and increasing, but it introduces order the domain lacks.
    GroundMap collapse = GroundMap::validate(anti, two, {{"a", "a"}, {"b", "b"}});
    CHECK(collapse.is_injective());
    CHECK_FALSE(is_oie(collapse));
}

TEST_CASE("maps must be total and land in the codomain") {
    FinitePoset two = fx::chain(2);
    CHECK_THROWS_AS(GroundMap::validate(two, two, {{"a", "a"}}), InvalidInputError);
    CHECK_THROWS_AS(GroundMap::validate(two, two, {{"a", "zz"}, {"b", "b"}}),
                    UnknownElementError);
    CHECK_THROWS_AS(GroundMap::validate(two, two, {{"a", "a"}, {"a", "b"}, {"b", "b"}}),
                    InvalidInputError);
}

TEST_CASE("bound operators are antitone and extensive with an idempotent composite") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 60; ++round) {
        FinitePoset p = fx::random_poset_up_to(rng, 8);
        const std::uint64_t limit = std::uint64_t{1} << p.size();
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            Subset a = mask_subset(p, mask);
            Subset au = p.upper_bounds(a);
            Subset al = p.lower_bounds(a);

            // Extensivity of both closures.
            CHECK(a.bits().is_subset_of(p.lower_bounds(au).bits()));
            CHECK(a.bits().is_subset_of(p.upper_bounds(al).bits()));

            // Triple application collapses to a single one.
            CHECK(p.upper_bounds(p.lower_bounds(au)) == au);
            CHECK(p.lower_bounds(p.upper_bounds(al)) == al);

            // Antitone against random supersets.
            Subset b = p.subset(a.bits() | fx::random_subset(rng, p).bits());
            CHECK(p.upper_bounds(b).bits().is_subset_of(au.bits()));
            CHECK(p.lower_bounds(b).bits().is_subset_of(al.bits()));
        }
    }
}

TEST_CASE("singleton bounds agree with principal sets") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round) {
        FinitePoset p = fx::random_poset_up_to(rng, 8);
        for (std::size_t x = 0; x < p.size(); ++x) {
            Subset singleton = p.subset_of({p.label(x)});
            CHECK(p.upper_bounds(singleton) == p.principal_up(p.label(x)));
            CHECK(p.lower_bounds(singleton) == p.principal_down(p.label(x)));
            CHECK(p.lower_bounds(p.upper_bounds(singleton)) == p.principal_down(p.label(x)));
            CHECK(p.upper_bounds(p.lower_bounds(singleton)) == p.principal_up(p.label(x)));
        }
    }
}

TEST_CASE("bounds degenerate exactly on the empty and unbounded subsets") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 40; ++round) {
        FinitePoset p = fx::random_poset_up_to(rng, 7);
        const std::uint64_t limit = std::uint64_t{1} << p.size();
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            Subset a = mask_subset(p, mask);

            // The empty subset always has full bound sets; the converse
            // needs the poset to lack the corresponding extremum, since for
            // a minimum m the singleton {m} is below everything.
            if (a.empty()) {
                CHECK(p.upper_bounds(a).count() == p.size());
                CHECK(p.lower_bounds(a).count() == p.size());
            }
            if (!p.minimum()) {
                CHECK((p.upper_bounds(a).count() == p.size()) == a.empty());
            }
            if (!p.maximum()) {
                CHECK((p.lower_bounds(a).count() == p.size()) == a.empty());
            }

            bool no_common_upper = true;
            for (std::size_t y = 0; y < p.size() && no_common_upper; ++y) {
                bool above_all = true;
                for (std::size_t i : a.bits().indices()) above_all &= p.leq(i, y);
                if (above_all) no_common_upper = false;
            }
            CHECK(p.upper_bounds(a).empty() == (!a.empty() && no_common_upper));
        }
    }
}

TEST_SUITE_END();
