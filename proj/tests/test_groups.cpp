#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tannakit/groups.hpp"

using namespace tannakit;

TEST_CASE("C2 table validates") {
    auto g = validate_group({{0, 1}, {1, 0}}, {"e", "a"}, 0);
    CHECK(g->order == 2);
    CHECK(g->inv(1) == 1);
}

TEST_CASE("broken associativity is reported with a witness") {
    auto s3 = catalog("S3");
    auto table = s3->table;
    std::swap(table[1][2], table[1][3]);  // r*r2 <-> r*s
    try {
        validate_group(table, s3->labels, s3->identity);
        FAIL("expected a group axiom error");
    } catch (const GroupAxiomError& e) {
        CHECK((e.axiom == "associativity" || e.axiom == "identity" || e.axiom == "inverses"));
        CHECK(!e.witness.empty());
    }
}

TEST_CASE("catalog groups validate and have documented properties") {
    for (const auto& name : catalog_names()) {
        auto g = catalog(name);
        CHECK(g->labels[g->identity] == "e");
        CHECK_NOTHROW(validate_group(g->table, g->labels, g->identity));
    }
    CHECK(catalog("C1")->order == 1);
    auto s3 = catalog("S3");
    CHECK(s3->order == 6);
    CHECK(!s3->is_abelian());
    // presentation checks: r^3 = e, s^2 = e, s r s = r^2
    std::size_t r = s3->label_index("r"), s = s3->label_index("s");
    CHECK(s3->mul(r, s3->mul(r, r)) == s3->identity);
    CHECK(s3->mul(s, s) == s3->identity);
    CHECK(s3->mul(s, s3->mul(r, s)) == s3->mul(r, r));
    CHECK_THROWS(catalog("C9"));
}

TEST_CASE("every subgroup of Q8 is normal") {
    auto q8 = catalog("Q8");
    auto subs = all_subgroups(q8);
    CHECK(subs.size() == 6);  // 1, Z, three C4's, Q8
    for (const auto& h : subs) {
        CHECK(is_normal(*q8, h));
        CHECK(q8->order % h.order() == 0);  // Lagrange
    }
    CHECK(center(q8).order() == 2);
}

TEST_CASE("A3 is normal in S3, a transposition span is not") {
    auto s3 = catalog("S3");
    auto a3 = generated_subgroup(s3, {s3->label_index("r")});
    CHECK(a3.members == std::vector<std::size_t>{0, 1, 2});
    CHECK(is_normal(*s3, a3));
    auto flip = generated_subgroup(s3, {s3->label_index("s")});
    CHECK(flip.order() == 2);
    CHECK(!is_normal(*s3, flip));
    auto whole = make_subgroup(s3, {0, 1, 2, 3, 4, 5});
    CHECK(is_normal(*s3, whole));
}

TEST_CASE("quotient groups") {
    auto s3 = catalog("S3");
    auto a3 = generated_subgroup(s3, {s3->label_index("r")});
    auto q = quotient_group(s3, a3);
    CHECK(q.group->order == 2);
    CHECK(q.projection[s3->label_index("s")] == 1);
    CHECK(q.projection[s3->label_index("r2")] == 0);

    auto c4 = catalog("C4");
    auto c2 = generated_subgroup(c4, {c4->label_index("g2")});
    CHECK(quotient_group(c4, c2).group->order == 2);

    // G / {e} has the same table as G
    auto triv = make_subgroup(s3, {s3->identity});
    auto qq = quotient_group(s3, triv);
    CHECK(qq.group->table == s3->table);

    // kernel of the projection recovers the subgroup
    std::vector<std::size_t> ker;
    for (std::size_t i = 0; i < s3->order; ++i)
        if (q.projection[i] == q.group->identity) ker.push_back(i);
    CHECK(ker == a3.members);

    CHECK_THROWS(quotient_group(s3, generated_subgroup(s3, {s3->label_index("s")})));
}

TEST_CASE("subgroup as standalone group") {
    auto q8 = catalog("Q8");
    auto z = center(q8);
    auto zg = z.as_group();
    CHECK(zg->order == 2);
    CHECK(zg->labels[zg->identity] == "e");
}
