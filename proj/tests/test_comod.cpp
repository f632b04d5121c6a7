#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tannakit/battery.hpp"
#include "tannakit/comod.hpp"

using namespace tannakit;

namespace {
const FieldSpec Q = FieldSpec::rationals();

ComodPtr sign_rep(const GroupPtr& s3) {
    auto chars = pm1_characters(s3, Q);
    REQUIRE(chars.size() == 2);
    return character_comodule(s3, chars[1]);
}
}  // namespace

TEST_CASE("trivial and regular comodules") {
    auto oS3 = function_algebra(catalog("S3"), Q);
    auto zero = trivial_comodule(oS3, 0);
    CHECK(zero->dim == 0);
    auto unit = trivial_comodule(oS3, 1);
    CHECK(unit->dim == 1);
    auto reg = regular_comodule(oS3);
    CHECK(reg->dim == 6);
    CHECK(invariants(*reg).sub.cols() == 1);

    auto oC1 = function_algebra(catalog("C1"), Q);
    auto reg1 = regular_comodule(oC1);
    CHECK(reg1->coaction == trivial_comodule(oC1, 1)->coaction);

    auto oC2 = function_algebra(catalog("C2"), Q);
    auto reg2 = regular_comodule(oC2);
    CHECK(invariants(*reg2).sub.cols() == 1);
    // the other summand is the sign character
    auto c2chars = pm1_characters(catalog("C2"), Q);
    auto sgn2 = character_comodule(catalog("C2"), c2chars[1]);
    CHECK(hom_space(*sgn2, *reg2).cols() == 1);
}

TEST_CASE("rep_from_matrices round-trips and validates") {
    auto s3 = catalog("S3");
    auto triv = character_comodule(s3, pm1_characters(s3, Q)[0]);
    CHECK(triv->coaction == trivial_comodule(function_algebra(s3, Q), 1)->coaction);

    auto sgn = sign_rep(s3);
    // ρ(v) = v ⊗ (Σ_even x^g − Σ_odd x^g): even elements are powers of r
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(sgn->coaction.at(i, 0) == Scalar(i < 3 ? 1 : -1, Q));

    auto std2 = standard_rep(s3, Q);
    CHECK(std2->dim == 2);
    auto mats = matrices_from_comodule(*std2);
    CHECK(mats[s3->label_index("r")] == Matrix::from_rows({{0, -1}, {1, -1}}, Q));

    // a non-homomorphism is rejected with a witness pair
    std::vector<Matrix> bad(6, Matrix::identity(1, Q));
    bad[s3->label_index("r")] = Matrix::from_rows({{-1}}, Q);
    CHECK_THROWS_WITH_AS(rep_from_matrices(s3, bad, Q), doctest::Contains("witness"),
                         std::invalid_argument);
}

TEST_CASE("hom spaces over O(S3)") {
    auto s3 = catalog("S3");
    auto oS3 = function_algebra(s3, Q);
    auto unit = trivial_comodule(oS3, 1);
    CHECK(hom_space(*unit, *unit).cols() == 1);
    auto sgn = sign_rep(s3);
    CHECK(hom_space(*sgn, *unit).cols() == 0);
    auto reg = regular_comodule(oS3);
    CHECK(hom_space(*reg, *reg).cols() == 6);

    // every basis column is a genuine colinear map
    for (const auto& m : hom_basis(reg, reg)) CHECK(is_colinear(*reg, *reg, m.matrix));
}

TEST_CASE("tensor products") {
    auto s3 = catalog("S3");
    auto oS3 = function_algebra(s3, Q);
    auto unit = trivial_comodule(oS3, 1);
    auto sgn = sign_rep(s3);
    auto std2 = standard_rep(s3, Q);

    CHECK(tensor_comodule(std2, unit)->coaction == std2->coaction);
    CHECK(tensor_comodule(sgn, sgn)->coaction == trivial_comodule(oS3, 1)->coaction);

    auto t = tensor_comodule(std2, std2);
    CHECK(t->dim == 4);
    CHECK(invariants(*t).sub.cols() == 1);

    auto ka = group_algebra(s3, Q);
    CHECK_THROWS(tensor_comodule(regular_comodule(ka), regular_comodule(ka)));
}

TEST_CASE("duals") {
    auto s3 = catalog("S3");
    auto oS3 = function_algebra(s3, Q);
    auto unit = trivial_comodule(oS3, 1);
    CHECK(dual_comodule(unit)->coaction == unit->coaction);
    auto sgn = sign_rep(s3);
    CHECK(dual_comodule(sgn)->coaction == sgn->coaction);
    auto std2 = standard_rep(s3, Q);
    CHECK(dual_comodule(dual_comodule(std2))->coaction == std2->coaction);

    // evaluation V∨ ⊗ V -> I is colinear
    auto pairing = tensor_comodule(dual_comodule(std2), std2);
    Matrix ev(1, 4, Q);
    ev.set(0, 0, 1);
    ev.set(0, 3, 1);
    CHECK(is_colinear(*pairing, *unit, ev));
    // coevaluation I -> V ⊗ V∨
    auto copairing = tensor_comodule(std2, dual_comodule(std2));
    Matrix coev(4, 1, Q);
    coev.set(0, 0, 1);
    coev.set(3, 0, 1);
    CHECK(is_colinear(*unit, *copairing, coev));
}

TEST_CASE("hom dimensions are stable under dualization") {
    auto s3 = catalog("S3");
    auto items = group_battery(s3, Q);
    for (const auto& a : items)
        for (const auto& b : items)
            CHECK(hom_space(*a.comodule, *b.comodule).cols() ==
                  hom_space(*dual_comodule(b.comodule), *dual_comodule(a.comodule)).cols());
}

TEST_CASE("invariants agree with Hom from the unit object") {
    auto s3 = catalog("S3");
    auto oS3 = function_algebra(s3, Q);
    auto unit = trivial_comodule(oS3, 1);
    auto two = direct_sum_comodule(unit, unit);
    CHECK(invariants(*two).sub.cols() == 2);
    for (const auto& item : group_battery(s3, Q))
        CHECK(invariants(*item.comodule).sub.cols() ==
              hom_space(*trivial_comodule(item.comodule->algebra, 1), *item.comodule).cols());
    auto sgn = sign_rep(s3);
    CHECK(invariants(*sgn).sub.cols() == 0);
}

TEST_CASE("largest subobject with trivial subgroup action") {
    auto s3 = catalog("S3");
    auto a3 = generated_subgroup(s3, {s3->label_index("r")});
    auto reg = regular_comodule(function_algebra(s3, Q));

    auto triv = make_subgroup(s3, {s3->identity});
    auto full = largest_s_subobject(reg, s3, triv);
    CHECK(full.object->dim == 6);
    CHECK(full.inclusion.matrix.is_identity());

    auto whole = make_subgroup(s3, {0, 1, 2, 3, 4, 5});
    auto inv = largest_s_subobject(reg, s3, whole);
    CHECK(inv.object->dim == 1);
    CHECK(same_column_span(inv.inclusion.matrix, invariants(*reg).sub));

    auto mid = largest_s_subobject(reg, s3, a3);
    CHECK(mid.object->dim == 2);
    auto sur = hopf_surjection_from_quotient(s3, a3, Q);
    CHECK(same_column_span(mid.inclusion.matrix, sur.f_star));
}

TEST_CASE("largest subobject is maximal among pulled-back comodules") {
    auto s3 = catalog("S3");
    auto a3 = generated_subgroup(s3, {s3->label_index("r")});
    auto sur = hopf_surjection_from_quotient(s3, a3, Q);
    auto quo = quotient_group(s3, a3);
    auto oA = function_algebra(quo.group, Q);

    std::vector<ComodPtr> pulled;
    pulled.push_back(corestrict(*regular_comodule(oA), sur.oG, sur.f_star));
    pulled.push_back(corestrict(*trivial_comodule(oA, 1), sur.oG, sur.f_star));

    for (const auto& item : group_battery(s3, Q)) {
        auto xs = largest_s_subobject(item.comodule, s3, a3);
        for (const auto& s : pulled)
            CHECK(hom_space(*s, *item.comodule).cols() == hom_space(*s, *xs.object).cols());
    }
}

TEST_CASE("largest quotient duality") {
    auto s3 = catalog("S3");
    auto a3 = generated_subgroup(s3, {s3->label_index("r")});
    for (const auto& item : group_battery(s3, Q)) {
        auto dual_sub = largest_s_subobject(dual_comodule(item.comodule), s3, a3);
        CHECK(largest_s_quotient_dim(*item.comodule, s3, a3) == dual_sub.object->dim);
    }
}

TEST_CASE("sub and quotient comodules") {
    auto s3 = catalog("S3");
    auto reg = regular_comodule(function_algebra(s3, Q));
    auto inv = invariants(*reg);
    auto sub = sub_comodule(reg, inv.sub);
    CHECK(sub.object->dim == 1);
    auto quo = quotient_comodule(reg, inv.sub);
    CHECK(quo.object->dim == 5);
    CHECK((quo.projection.matrix * sub.inclusion.matrix).is_zero());

    // a random non-stable span is rejected
    Matrix bad(6, 1, Q);
    bad.set(0, 0, 1);
    CHECK_THROWS(sub_comodule(reg, bad));
}
