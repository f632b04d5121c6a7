#include "tannakit/induction.hpp"

namespace tannakit {

QuotientDatum make_quotient_datum(const GroupPtr& g, const Subgroup& l, const FieldSpec& field) {
    auto sur = hopf_surjection_from_quotient(g, l, field);
    QuotientDatum d;
    d.g = g;
    d.l = l;
    d.quotient = quotient_group(g, l);
    d.oG = sur.oG;
    d.oL = sur.oL;
    d.oA = function_algebra(d.quotient.group, field);
    d.q_star = sur.q_star;
    d.f_star = sur.f_star;
    return d;
}

ComodPtr restrict_comodule(const QuotientDatum& d, const ComodPtr& v) {
    return corestrict(*v, d.oL, d.q_star);
}

ComodPtr inflate_comodule(const QuotientDatum& d, const ComodPtr& u) {
    return corestrict(*u, d.oG, d.f_star);
}

CotensorResult cotensor(const QuotientDatum& d, const ComodPtr& u) {
    if (!same_hopf(*u->algebra, *d.oL)) throw std::invalid_argument("cotensor input must live over O(L)");
    std::size_t du = u->dim, ng = d.oG->dim;
    const FieldSpec& f = d.field();
    auto idU = Matrix::identity(du, f);
    auto idG = Matrix::identity(ng, f);
    Matrix lhs = kron(u->coaction, idG);
    Matrix rhs = kron(idU, kron(d.q_star, idG) * d.oG->comult);
    Matrix embedding = kernel_basis(lhs - rhs);

    Matrix ambient = kron(idU, d.oG->comult);  // id ⊗ Δ on U ⊗ O(G)
    auto rho = solve(kron(embedding, idG), ambient * embedding);
    if (!rho || !(kron(embedding, idG) * *rho == ambient * embedding))
        throw std::logic_error("coaction does not stabilize the equalizer");
    CotensorResult out;
    out.induced = make_comodule(d.oG, *rho);
    out.embedding = std::move(embedding);
    return out;
}

ComoduleMap cotensor_map(const QuotientDatum& d, const CotensorResult& cu,
                         const CotensorResult& cu2, const ComoduleMap& phi) {
    auto idG = Matrix::identity(d.oG->dim, d.field());
    Matrix ambient = kron(phi.matrix, idG) * cu.embedding;
    auto m = solve(cu2.embedding, ambient);
    if (!m || !(cu2.embedding * *m == ambient))
        throw std::logic_error("induced map does not respect the equalizers");
    return make_comodule_map(cu.induced, cu2.induced, *m);
}

ComoduleMap counit_eps(const QuotientDatum& d, const ComodPtr& u, const CotensorResult& cu) {
    Matrix eval = kron(Matrix::identity(u->dim, d.field()), d.oG->counit) * cu.embedding;
    return make_comodule_map(restrict_comodule(d, cu.induced), u, eval);
}

AdjunctionReport adjunction_check(const QuotientDatum& d, const ComodPtr& v, const ComodPtr& u) {
    auto cu = cotensor(d, u);
    auto eps = counit_eps(d, u, cu);
    auto res_v = restrict_comodule(d, v);
    Matrix hom_l = hom_space(*res_v, *u);
    Matrix hom_g = hom_space(*v, *cu.induced);

    AdjunctionReport report;
    report.dim_hom_g = hom_g.cols();
    report.dim_hom_l = hom_l.cols();
    Matrix transported(u->dim * v->dim, 0, d.field());
    for (std::size_t k = 0; k < hom_g.cols(); ++k) {
        Matrix fk = unflatten_map(hom_g.column(k), cu.induced->dim, v->dim);
        transported = transported.hstack(flatten_map(eps.matrix * fk));
    }
    bool spans = rank(transported) == hom_g.cols();
    bool inside = hom_l.cols() == 0 ? transported.is_zero()
                                    : solve(hom_l, transported).has_value();
    report.bijective = report.dim_hom_g == report.dim_hom_l && spans && inside;
    return report;
}

namespace {

// Left multiplication by an element of O(G) given as a coordinate column.
Matrix left_mult_by(const HopfAlgebra& o, const Matrix& column) {
    return o.mult * kron(column, Matrix::identity(o.dim, o.field));
}

}  // namespace

TakeuchiPair takeuchi_phi(const QuotientDatum& d) {
    std::size_t ng = d.oG->dim, nl = d.oL->dim, na = d.oA->dim;
    const FieldSpec& f = d.field();
    auto idG = Matrix::identity(ng, f);

    // balanced-tensor relations (a g) ⊗ h − g ⊗ (a h) for a running over f*(O(A))
    Matrix relations(ng * ng, 0, f);
    for (std::size_t a = 0; a < na; ++a) {
        Matrix la = left_mult_by(*d.oG, d.f_star.column(a));
        relations = relations.hstack(kron(la, idG) - kron(idG, la));
    }
    auto qp = quotient_by_span(relations);

    Matrix phi_ambient = kron(d.q_star, d.oG->mult) * kron(d.oG->comult, idG);
    TakeuchiPair out;
    out.quotient_dim = qp.dim;
    if (!(phi_ambient * image_basis(relations)).is_zero()) {
        out.identities_hold = false;
        return out;
    }
    out.phi = phi_ambient * qp.section;

    Matrix psi_ambient = kron(idG, d.oG->mult) * kron(idG, d.oG->antipode, idG) *
                         kron(d.oG->comult, idG);
    Matrix lift = d.q_star.transpose();  // x^l back to the same indicator in O(G)
    out.psi = qp.projection * psi_ambient * kron(lift, idG);

    bool factors = (qp.projection * psi_ambient * kernel_basis(kron(d.q_star, idG))).is_zero();
    out.identities_hold = factors && (out.phi * out.psi).is_identity() &&
                          (out.psi * out.phi).is_identity() && qp.dim == nl * ng;
    return out;
}

bool takeuchi_instance_holds(const QuotientDatum& d, const ComodPtr& u) {
    auto cu = cotensor(d, u);
    std::size_t du = u->dim, ng = d.oG->dim, na = d.oA->dim, dc = cu.induced->dim;
    const FieldSpec& f = d.field();
    auto idG = Matrix::identity(ng, f);
    auto idC = Matrix::identity(dc, f);

    // O(A)-action on the induced comodule, inherited from right multiplication
    Matrix act_ambient = kron(Matrix::identity(du, f), d.oG->mult * kron(idG, d.f_star));
    auto mu = solve(cu.embedding, act_ambient * kron(cu.embedding, Matrix::identity(na, f)));
    if (!mu || !(cu.embedding * *mu == act_ambient * kron(cu.embedding, Matrix::identity(na, f))))
        return false;

    Matrix relations(dc * ng, 0, f);
    for (std::size_t a = 0; a < na; ++a) {
        Matrix act_a(dc, dc, f);
        for (std::size_t i = 0; i < dc; ++i)
            for (std::size_t j = 0; j < dc; ++j) act_a.set(i, j, mu->at(i, j * na + a));
        Matrix la = left_mult_by(*d.oG, d.f_star.column(a));
        relations = relations.hstack(kron(act_a, idG) - kron(idC, la));
    }
    auto qp = quotient_by_span(relations);
    if (qp.dim != du * ng) return false;

    Matrix map_ambient = kron(Matrix::identity(du, f), d.oG->mult) * kron(cu.embedding, idG);
    if (!(map_ambient * image_basis(relations)).is_zero()) return false;
    return is_invertible(map_ambient * qp.section);
}

ComodPtr oa_as_comodule(const QuotientDatum& d) {
    Matrix rho = kron(Matrix::identity(d.oA->dim, d.field()), d.f_star) * d.oA->comult;
    return make_comodule(d.oG, std::move(rho));
}

ComoduleMap ind_res_iso(const QuotientDatum& d, const ComodPtr& v) {
    auto cu = cotensor(d, restrict_comodule(d, v));
    std::size_t dv = v->dim, ng = d.oG->dim, na = d.oA->dim;
    const FieldSpec& f = d.field();
    auto idV = Matrix::identity(dv, f);

    // v ⊗ h -> Σ v_(0) ⊗ ι(v_(1)) h: carries the id ⊗ Δ coaction on the
    // equalizer over to the diagonal coaction on the target
    Matrix theta = kron(idV, d.oG->mult) *
                   kron(kron(Matrix::identity(dv, f), d.oG->antipode) * v->coaction,
                        Matrix::identity(ng, f));

    // coordinates on the image of f*: evaluate at one representative per coset
    Matrix pick(na, ng, f);
    for (std::size_t c = 0; c < d.quotient.cosets.size(); ++c)
        pick.set(c, d.quotient.cosets[c][0], 1);
    Matrix into_image = theta * cu.embedding;
    Matrix complement = Matrix::identity(ng, f) - d.f_star * pick;
    if (!(kron(idV, complement) * into_image).is_zero())
        throw std::logic_error("induced image is not carried by O(A)");
    Matrix iso = kron(idV, pick) * into_image;

    auto target = tensor_comodule(v, oa_as_comodule(d));
    if (!is_invertible(iso)) throw std::logic_error("candidate map is not invertible");
    return make_comodule_map(cu.induced, target, iso);
}

std::vector<ShortExactSequence> battery_short_exact_sequences(const std::vector<BatteryItem>& items) {
    std::vector<ShortExactSequence> out;
    for (const auto& item : items) {
        const auto& u = item.comodule;
        Matrix inv = invariants(*u).sub;
        if (inv.cols() > 0 && inv.cols() < u->dim) {
            auto sub = sub_comodule(u, inv);
            auto quo = quotient_comodule(u, inv);
            out.push_back({"invariants-of-" + item.name, sub.inclusion, quo.projection});
        }
    }
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
        const auto& a = items[i].comodule;
        const auto& b = items[i + 1].comodule;
        auto sum = direct_sum_comodule(a, b);
        Matrix incl(sum->dim, a->dim, a->algebra->field);
        for (std::size_t k = 0; k < a->dim; ++k) incl.set(k, k, 1);
        Matrix proj(b->dim, sum->dim, a->algebra->field);
        for (std::size_t k = 0; k < b->dim; ++k) proj.set(k, a->dim + k, 1);
        out.push_back({"split-" + items[i].name + "-" + items[i + 1].name,
                       make_comodule_map(a, sum, incl), make_comodule_map(sum, b, proj)});
    }
    // image of the first hom basis element between consecutive items, when proper
    for (std::size_t i = 0; i + 1 < items.size() && out.size() < 12; ++i) {
        const auto& a = items[i].comodule;
        const auto& b = items[i + 1].comodule;
        Matrix hom = hom_space(*a, *b);
        if (hom.cols() == 0) continue;
        Matrix im = image_basis(unflatten_map(hom.column(0), b->dim, a->dim));
        if (im.cols() == 0 || im.cols() == b->dim) continue;
        auto sub = sub_comodule(b, im);
        auto quo = quotient_comodule(b, im);
        out.push_back({"image-" + items[i].name + "-into-" + items[i + 1].name, sub.inclusion,
                       quo.projection});
    }
    return out;
}

std::vector<BatteryItem> l_battery(const QuotientDatum& d) {
    std::vector<BatteryItem> out;
    for (const auto& item : group_battery(d.g, d.field()))
        out.push_back({"res-" + item.name, restrict_comodule(d, item.comodule)});
    auto lg = d.l.as_group();
    auto chars = pm1_characters(lg, d.field());
    for (std::size_t k = 1; k < chars.size(); ++k)
        out.push_back({"chiL" + std::to_string(k), character_comodule(lg, chars[k])});
    out.push_back({"regularL", regular_comodule(d.oL)});
    return out;
}

}  // namespace tannakit
