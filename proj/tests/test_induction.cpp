#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tannakit/induction.hpp"

using namespace tannakit;

namespace {
const FieldSpec Q = FieldSpec::rationals();

QuotientDatum s3_over_a3() {
    auto s3 = catalog("S3");
    return make_quotient_datum(s3, generated_subgroup(s3, {s3->label_index("r")}), Q);
}
}  // namespace

TEST_CASE("restriction") {
    auto d = s3_over_a3();
    auto unit = trivial_comodule(d.oG, 1);
    CHECK(restrict_comodule(d, unit)->coaction == trivial_comodule(d.oL, 1)->coaction);

    auto sgn = character_comodule(d.g, pm1_characters(d.g, Q)[1]);
    CHECK(restrict_comodule(d, sgn)->coaction == trivial_comodule(d.oL, 1)->coaction);

    auto res_std = restrict_comodule(d, standard_rep(d.g, Q));
    CHECK(res_std->dim == 2);
    CHECK(invariants(*res_std).sub.cols() == 0);
}

TEST_CASE("cotensor of the trivial module is carried by f*") {
    auto d = s3_over_a3();
    auto cu = cotensor(d, trivial_comodule(d.oL, 1));
    CHECK(cu.induced->dim == 2);
    CHECK(same_column_span(cu.embedding, d.f_star));
    CHECK(cu.induced->coaction == oa_as_comodule(d)->coaction);
}

TEST_CASE("cotensor of the regular O(L)-comodule is the regular O(G)-comodule") {
    auto d = s3_over_a3();
    auto cu = cotensor(d, regular_comodule(d.oL));
    CHECK(cu.induced->dim == 6);
    auto iso = find_isomorphism(cu.induced, regular_comodule(d.oG));
    REQUIRE(iso.has_value());
    CHECK(is_invertible(iso->matrix));
}

TEST_CASE("cotensor dimensions are multiplicative across the battery") {
    auto d = s3_over_a3();
    std::size_t index = d.g->order / d.l.order();
    for (const auto& item : l_battery(d))
        CHECK(cotensor(d, item.comodule).induced->dim == item.comodule->dim * index);
}

TEST_CASE("counit is surjective and colinear") {
    auto d = s3_over_a3();

    auto unit = trivial_comodule(d.oL, 1);
    auto cu = cotensor(d, unit);
    auto eps = counit_eps(d, unit, cu);
    CHECK(rank(eps.matrix) == 1);

    auto reg = regular_comodule(d.oL);
    auto cur = cotensor(d, reg);
    CHECK(rank(counit_eps(d, reg, cur).matrix) == 3);

    for (const auto& item : l_battery(d)) {
        auto c = cotensor(d, item.comodule);
        CHECK(rank(counit_eps(d, item.comodule, c).matrix) == item.comodule->dim);
    }
}

TEST_CASE("adjunction bijections") {
    auto d = s3_over_a3();
    auto unit_g = trivial_comodule(d.oG, 1);
    auto unit_l = trivial_comodule(d.oL, 1);
    auto rep_i = adjunction_check(d, unit_g, unit_l);
    CHECK(rep_i.dim_hom_g == 1);
    CHECK(rep_i.pass());

    auto std2 = standard_rep(d.g, Q);
    auto rep_s = adjunction_check(d, std2, restrict_comodule(d, std2));
    CHECK(rep_s.dim_hom_g == 2);  // End over L of the restricted standard rep
    CHECK(rep_s.pass());

    auto gb = group_battery(d.g, Q);
    auto lb = l_battery(d);
    std::size_t pairs = 0;
    for (const auto& v : gb)
        for (const auto& u : lb) {
            if (pairs >= 12) break;
            CAPTURE(v.name);
            CAPTURE(u.name);
            CHECK(adjunction_check(d, v.comodule, u.comodule).pass());
            ++pairs;
        }
}

TEST_CASE("takeuchi generating case for three kernels") {
    auto s3 = catalog("S3");

    // L = {e}: the quotient has dimension |G|
    auto d_triv = make_quotient_datum(s3, make_subgroup(s3, {s3->identity}), Q);
    auto t1 = takeuchi_phi(d_triv);
    CHECK(t1.quotient_dim == 6);
    CHECK(t1.identities_hold);

    // L = A3
    auto d = s3_over_a3();
    auto t2 = takeuchi_phi(d);
    CHECK(t2.quotient_dim == 18);
    CHECK(t2.identities_hold);

    // L = G: the balanced tensor is the plain tensor square
    auto d_full = make_quotient_datum(s3, make_subgroup(s3, {0, 1, 2, 3, 4, 5}), Q);
    auto t3 = takeuchi_phi(d_full);
    CHECK(t3.quotient_dim == 36);
    CHECK(t3.identities_hold);
}

TEST_CASE("takeuchi instances on small battery comodules") {
    auto d = s3_over_a3();
    for (const auto& item : l_battery(d)) {
        if (item.comodule->dim > 3) continue;
        CAPTURE(item.name);
        CHECK(takeuchi_instance_holds(d, item.comodule));
    }
}

TEST_CASE("induction after restriction is tensoring with O(A)") {
    auto d = s3_over_a3();
    auto unit = trivial_comodule(d.oG, 1);
    auto iso_unit = ind_res_iso(d, unit);
    CHECK(iso_unit.source->dim == 2);

    auto std2 = standard_rep(d.g, Q);
    CHECK(ind_res_iso(d, std2).source->dim == 4);

    auto reg = regular_comodule(d.oG);
    CHECK(ind_res_iso(d, reg).source->dim == 12);
}

TEST_CASE("induction is exact on battery short exact sequences") {
    auto d = s3_over_a3();
    auto sequences = battery_short_exact_sequences(l_battery(d));
    CHECK(sequences.size() >= 3);
    std::size_t used = 0;
    for (const auto& ses : sequences) {
        if (used >= 5) break;
        ++used;
        CAPTURE(ses.name);
        auto sub = cotensor(d, ses.inclusion.source);
        auto mid = cotensor(d, ses.inclusion.target);
        auto quo = cotensor(d, ses.projection.target);
        CHECK(mid.induced->dim == sub.induced->dim + quo.induced->dim);
        auto incl = cotensor_map(d, sub, mid, ses.inclusion);
        auto proj = cotensor_map(d, mid, quo, ses.projection);
        CHECK((proj.matrix * incl.matrix).is_zero());
        CHECK(rank(incl.matrix) == sub.induced->dim);
        CHECK(rank(proj.matrix) == quo.induced->dim);
    }
}

TEST_CASE("every battery L-comodule embeds into and surjects from restrictions") {
    auto d = s3_over_a3();
    for (const auto& item : l_battery(d)) {
        if (item.comodule->dim > 4) continue;
        CAPTURE(item.name);
        const auto& u = item.comodule;
        // surjection: counit of the induced comodule
        auto cu = cotensor(d, u);
        CHECK(rank(counit_eps(d, u, cu).matrix) == u->dim);
        // embedding: dualize the surjection onto the dual comodule
        auto du = dual_comodule(u);
        auto cdu = cotensor(d, du);
        auto eps = counit_eps(d, du, cdu);
        auto emb = make_comodule_map(u, dual_comodule(eps.source), eps.matrix.transpose());
        CHECK(rank(emb.matrix) == u->dim);
    }
}
