#include "tannakit/quotient.hpp"

namespace tannakit {

QuotientContext make_quotient_context(const QuotientDatum& d, bool require_etale) {
    QuotientContext ctx;
    ctx.datum = d;
    long p = d.field().characteristic();
    ctx.etale = p == 0 || d.oA->dim % static_cast<std::size_t>(p) != 0;
    if (require_etale && !ctx.etale)
        throw EtaleError("characteristic " + std::to_string(p) + " divides |G/L| = " +
                         std::to_string(d.oA->dim));
    ctx.oa = oa_as_comodule(d);
    ctx.mult_oa = d.oA->mult;
    ctx.unit_oa = d.oA->unit;
    ctx.counit_oa = d.oA->counit;
    auto unit_i = trivial_comodule(d.oG, 1);
    if (!is_colinear(*tensor_comodule(ctx.oa, ctx.oa), *ctx.oa, ctx.mult_oa) ||
        !is_colinear(*unit_i, *ctx.oa, ctx.unit_oa) ||
        !is_colinear(*ctx.oa, *unit_i, ctx.counit_oa))
        throw std::logic_error("O(A) structure maps are not equivariant");
    return ctx;
}

QuotientObject make_quotient_object(const QuotientContext& ctx, ComodPtr x, ComodPtr y, Matrix f) {
    if (f.rows() != y->dim * ctx.na() || f.cols() != x->dim)
        throw std::invalid_argument("triple map has wrong shape");
    if (!is_colinear(*x, *tensor_comodule(y, ctx.oa), f))
        throw std::invalid_argument("triple map is not equivariant");
    return QuotientObject{std::move(x), std::move(y), std::move(f)};
}

bool same_object(const QuotientObject& a, const QuotientObject& b) {
    return a.x->coaction == b.x->coaction && a.y->coaction == b.y->coaction && a.f == b.f;
}

Matrix extend_o_linear(const QuotientContext& ctx, const Matrix& g, std::size_t source_dim) {
    std::size_t na = ctx.na();
    if (g.cols() != source_dim || g.rows() % na != 0)
        throw std::invalid_argument("extend_o_linear: shape mismatch");
    std::size_t target_dim = g.rows() / na;
    auto idA = Matrix::identity(na, ctx.field());
    return kron(Matrix::identity(target_dim, ctx.field()), ctx.mult_oa) * kron(g, idA);
}

Matrix f_hat(const QuotientContext& ctx, const QuotientObject& obj) {
    return extend_o_linear(ctx, obj.f, obj.x->dim);
}

OModuleObject make_omodule(const QuotientContext& ctx, ComodPtr carrier, Matrix action) {
    std::size_t m = carrier->dim, na = ctx.na();
    if (action.rows() != m || action.cols() != m * na)
        throw std::invalid_argument("module action has wrong shape");
    auto idM = Matrix::identity(m, ctx.field());
    auto idA = Matrix::identity(na, ctx.field());
    if (!(action * kron(idM, ctx.unit_oa) == idM))
        throw std::invalid_argument("module action violates the unit law");
    if (!(action * kron(action, idA) == action * kron(idM, ctx.mult_oa)))
        throw std::invalid_argument("module action is not associative");
    if (!is_colinear(*tensor_comodule(carrier, ctx.oa), *carrier, action))
        throw std::invalid_argument("module action is not equivariant");
    return OModuleObject{std::move(carrier), std::move(action)};
}

ImageModule image_of(const QuotientContext& ctx, const QuotientObject& obj) {
    std::size_t na = ctx.na();
    Matrix fh = f_hat(ctx, obj);
    Matrix basis = image_basis(fh);
    auto ambient = tensor_comodule(obj.y, ctx.oa);
    auto sub = sub_comodule(ambient, basis);

    Matrix mu_ambient = kron(Matrix::identity(obj.y->dim, ctx.field()), ctx.mult_oa);
    auto idA = Matrix::identity(na, ctx.field());
    Matrix pushed = mu_ambient * kron(basis, idA);
    auto mu = solve(basis, pushed);
    if (!mu || !(basis * *mu == pushed))
        throw std::logic_error("image of f-hat is not stable under the O(A)-action");
    ImageModule out;
    out.module = make_omodule(ctx, sub.object, *mu);
    out.basis = std::move(basis);
    out.ambient = ambient;
    return out;
}

namespace {

// vec(T ⊗ id_k) = E vec(T) for T of shape q x p, both row-major.
Matrix tensor_id_expansion(std::size_t q, std::size_t p, std::size_t k, const FieldSpec& field) {
    Matrix e(q * k * p * k, q * p, field);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t a = 0; a < k; ++a)
                e.set((i * k + a) * (p * k) + (j * k + a), i * p + j, 1);
    return e;
}

// Operator whose kernel is Hom as O(A)-modules-with-coaction between images.
Matrix module_hom_operator(const QuotientContext& ctx, const ImageModule& ia,
                           const ImageModule& ib) {
    std::size_t p = ia.module.carrier->dim, q = ib.module.carrier->dim;
    std::size_t na = ctx.na(), ng = ctx.datum.oG->dim;
    const FieldSpec& f = ctx.field();

    // equivariance: ρ_b T - (T ⊗ id) ρ_a = 0
    Matrix w(p, ng * p, f);
    const Matrix& rho_a = ia.module.carrier->coaction;
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t a = 0; a < ng; ++a)
            for (std::size_t c = 0; c < p; ++c) w.set(j, a * p + c, rho_a.at(j * ng + a, c));
    Matrix colinear = kron(ib.module.carrier->coaction, Matrix::identity(p, f)) -
                      kron(Matrix::identity(q, f), w.transpose());

    // O(A)-linearity: T μ_a - μ_b (T ⊗ id_A) = 0
    Matrix left = kron(Matrix::identity(q, f), ia.module.action.transpose());
    Matrix right = kron(ib.module.action, Matrix::identity(p * na, f)) *
                   tensor_id_expansion(q, p, na, f);
    return colinear.vstack(left - right);
}

}  // namespace

Matrix hom_space_P(const QuotientContext& ctx, const QuotientObject& a, const QuotientObject& b) {
    auto ia = image_of(ctx, a);
    auto ib = image_of(ctx, b);
    return kernel_basis(module_hom_operator(ctx, ia, ib));
}

QuotientMap make_quotient_map(const QuotientContext& ctx, const QuotientObject& a,
                              const QuotientObject& b, Matrix m) {
    auto ia = image_of(ctx, a);
    auto ib = image_of(ctx, b);
    if (m.rows() != ib.module.carrier->dim || m.cols() != ia.module.carrier->dim)
        throw std::invalid_argument("quotient map has wrong shape");
    if (!is_colinear(*ia.module.carrier, *ib.module.carrier, m))
        throw std::invalid_argument("quotient map is not equivariant");
    auto idA = Matrix::identity(ctx.na(), ctx.field());
    if (!(m * ia.module.action == ib.module.action * kron(m, idA)))
        throw std::invalid_argument("quotient map is not O(A)-linear");
    return QuotientMap{a, b, std::move(m)};
}

QuotientMap identity_map(const QuotientContext& ctx, const QuotientObject& a) {
    auto ia = image_of(ctx, a);
    return QuotientMap{a, a, Matrix::identity(ia.module.carrier->dim, ctx.field())};
}

std::vector<QuotientMap> hom_basis_P(const QuotientContext& ctx, const QuotientObject& a,
                                     const QuotientObject& b) {
    auto ia = image_of(ctx, a);
    auto ib = image_of(ctx, b);
    Matrix basis = kernel_basis(module_hom_operator(ctx, ia, ib));
    std::vector<QuotientMap> out;
    for (std::size_t k = 0; k < basis.cols(); ++k)
        out.push_back(QuotientMap{
            a, b, unflatten_map(basis.column(k), ib.module.carrier->dim, ia.module.carrier->dim)});
    return out;
}

QuotientMap compose_P(const QuotientContext& ctx, const QuotientMap& g, const QuotientMap& f) {
    if (!same_object(f.target, g.source)) throw std::invalid_argument("compose_P: object mismatch");
    (void)ctx;
    return QuotientMap{f.source, g.target, g.matrix * f.matrix};
}

QuotientObject quotient_functor_q(const QuotientContext& ctx, const ComodPtr& x) {
    Matrix f = kron(Matrix::identity(x->dim, ctx.field()), ctx.unit_oa);
    return make_quotient_object(ctx, x, x, std::move(f));
}

QuotientMap quotient_functor_q_map(const QuotientContext& ctx, const ComoduleMap& t) {
    auto a = quotient_functor_q(ctx, t.source);
    auto b = quotient_functor_q(ctx, t.target);
    Matrix m = kron(t.matrix, Matrix::identity(ctx.na(), ctx.field()));
    return make_quotient_map(ctx, a, b, std::move(m));
}

QuotientMap map_from_bar(const QuotientContext& ctx, const QuotientObject& a,
                         const QuotientObject& b, const Matrix& g) {
    return make_quotient_map(ctx, a, b, extend_o_linear(ctx, g, a.x->dim));
}

Matrix bar_from_map(const QuotientContext& ctx, const QuotientMap& m) {
    return m.matrix * kron(Matrix::identity(m.source.x->dim, ctx.field()), ctx.unit_oa);
}

QuotientObject direct_sum_P(const QuotientContext& ctx, const QuotientObject& a,
                            const QuotientObject& b) {
    auto x = direct_sum_comodule(a.x, b.x);
    auto y = direct_sum_comodule(a.y, b.y);
    std::size_t na = ctx.na();
    Matrix f((a.y->dim + b.y->dim) * na, a.x->dim + b.x->dim, ctx.field());
    for (std::size_t r = 0; r < a.y->dim * na; ++r)
        for (std::size_t c = 0; c < a.x->dim; ++c) f.set(r, c, a.f.at(r, c));
    for (std::size_t r = 0; r < b.y->dim * na; ++r)
        for (std::size_t c = 0; c < b.x->dim; ++c)
            f.set(a.y->dim * na + r, a.x->dim + c, b.f.at(r, c));
    return make_quotient_object(ctx, x, y, std::move(f));
}

QuotientObject tensor_P(const QuotientContext& ctx, const QuotientObject& a,
                        const QuotientObject& b) {
    auto x = tensor_comodule(a.x, b.x);
    auto y = tensor_comodule(a.y, b.y);
    std::size_t na = ctx.na();
    auto perm = tensor_factor_permutation({a.y->dim, na, b.y->dim, na}, {0, 2, 1, 3});
    Matrix f = kron(Matrix::identity(a.y->dim * b.y->dim, ctx.field()), ctx.mult_oa) *
               kron(a.f, b.f).rows_reindexed(perm);
    return make_quotient_object(ctx, x, y, std::move(f));
}

namespace {

// Multiplication-collapse map (im f̂_a) ⊗ (im f̂_b) -> im f̂_{a⊗b} in image
// coordinates; surjective in the separable case.
Matrix tensor_collapse(const QuotientContext& ctx, const QuotientObject& a,
                       const QuotientObject& b, const QuotientObject& ab, const ImageModule& ia,
                       const ImageModule& ib, const ImageModule& iab) {
    std::size_t na = ctx.na();
    auto perm = tensor_factor_permutation({a.y->dim, na, b.y->dim, na}, {0, 2, 1, 3});
    Matrix collapse = kron(Matrix::identity(a.y->dim * b.y->dim, ctx.field()), ctx.mult_oa) *
                      kron(ia.basis, ib.basis).rows_reindexed(perm);
    auto coords = solve(iab.basis, collapse);
    if (!coords || !(iab.basis * *coords == collapse))
        throw std::logic_error("tensor collapse does not land in the image");
    return *coords;
}

}  // namespace

QuotientMap tensor_P_map(const QuotientContext& ctx, const QuotientMap& f, const QuotientMap& g) {
    auto src = tensor_P(ctx, f.source, g.source);
    auto dst = tensor_P(ctx, f.target, g.target);
    auto ia0 = image_of(ctx, f.source);
    auto ia1 = image_of(ctx, g.source);
    auto ib0 = image_of(ctx, f.target);
    auto ib1 = image_of(ctx, g.target);
    auto isrc = image_of(ctx, src);
    auto idst = image_of(ctx, dst);
    Matrix c_src = tensor_collapse(ctx, f.source, g.source, src, ia0, ia1, isrc);
    Matrix c_dst = tensor_collapse(ctx, f.target, g.target, dst, ib0, ib1, idst);
    if (rank(c_src) != isrc.module.carrier->dim)
        throw std::logic_error("tensor collapse is not surjective");
    auto section = solve(c_src, Matrix::identity(isrc.module.carrier->dim, ctx.field()));
    if (!section) throw std::logic_error("tensor collapse has no section");
    Matrix candidate = c_dst * kron(f.matrix, g.matrix) * *section;
    if (!(candidate * c_src == c_dst * kron(f.matrix, g.matrix)))
        throw std::logic_error("tensor of maps is not well defined on the images");
    return make_quotient_map(ctx, src, dst, std::move(candidate));
}

QuotientObject unit_object(const QuotientContext& ctx) {
    return quotient_functor_q(ctx, trivial_comodule(ctx.datum.oG, 1));
}

RepLImage equivalence_to_repL(const QuotientContext& ctx, const QuotientObject& obj) {
    Matrix f0 = kron(Matrix::identity(obj.y->dim, ctx.field()), ctx.counit_oa) * obj.f;
    auto res_y = restrict_comodule(ctx.datum, obj.y);
    Matrix basis = image_basis(f0);
    RepLImage out;
    if (basis.cols() == 0) {
        out.object = trivial_comodule(ctx.datum.oL, 0);
        out.basis = basis;
        out.onto = Matrix(0, image_of(ctx, obj).module.carrier->dim, ctx.field());
        return out;
    }
    auto sub = sub_comodule(res_y, basis);
    out.object = sub.object;
    out.basis = basis;

    auto im = image_of(ctx, obj);
    Matrix eval = kron(Matrix::identity(obj.y->dim, ctx.field()), ctx.counit_oa) * im.basis;
    auto onto = solve(basis, eval);
    if (!onto || !(basis * *onto == eval))
        throw std::logic_error("counit evaluation escapes the image of f0");
    if (rank(*onto) != out.object->dim) throw std::logic_error("counit evaluation is not surjective");
    out.onto = *onto;
    return out;
}

ComoduleMap equivalence_to_repL_map(const QuotientContext& ctx, const QuotientMap& m) {
    auto fa = equivalence_to_repL(ctx, m.source);
    auto fb = equivalence_to_repL(ctx, m.target);
    auto section = solve(fa.onto, Matrix::identity(fa.object->dim, ctx.field()));
    if (!section) throw std::logic_error("no section of the counit evaluation");
    Matrix candidate = fb.onto * m.matrix * *section;
    if (!(candidate * fa.onto == fb.onto * m.matrix))
        throw std::logic_error("morphism does not descend to the images in Rep(L)");
    return make_comodule_map(fa.object, fb.object, std::move(candidate));
}

DeligneVector deligne_triple(const QuotientContext& ctx, const QuotientObject& obj) {
    std::size_t dx = obj.x->dim, dy = obj.y->dim, na = ctx.na(), ng = ctx.datum.oG->dim;
    const FieldSpec& fld = ctx.field();
    DeligneVector out;

    Matrix f0 = kron(Matrix::identity(dy, fld), ctx.counit_oa) * obj.f;
    Matrix z(dx * dy, 1, fld);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j) z.set(i * dy + j, 0, f0.at(j, i));
    out.vector = z;

    auto dual_x = dual_comodule(obj.x);
    auto pairing = tensor_comodule(dual_x, obj.y);
    auto xs = largest_s_subobject(pairing, ctx.datum.g, ctx.datum.l);
    out.subspace = xs.inclusion.matrix;
    auto inside = solve(out.subspace, z);
    out.in_subspace = inside.has_value() && out.subspace * *inside == z;
    if (!out.in_subspace) return out;

    // reconstruct f from the invariant vector through the factored coaction
    Matrix rho_z = pairing->coaction * z;  // (dx*dy*ng) x 1
    Matrix pick(na, ng, fld);
    for (std::size_t c = 0; c < ctx.datum.quotient.cosets.size(); ++c)
        pick.set(c, ctx.datum.quotient.cosets[c][0], 1);
    Matrix carried = kron(Matrix::identity(dx * dy, fld), ctx.datum.f_star * pick) * rho_z;
    if (!(carried == rho_z)) return out;  // coaction must be carried by O(A)
    Matrix w = kron(Matrix::identity(dx * dy, fld), pick) * rho_z;  // (dx*dy*na) x 1
    Matrix rebuilt(dy * na, dx, fld);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            for (std::size_t a = 0; a < na; ++a)
                rebuilt.set(j * na + a, i, w.at((i * dy + j) * na + a, 0));
    out.round_trip_ok = rebuilt == obj.f;
    return out;
}

OModuleObject right_adjoint_p(const QuotientContext& ctx, const QuotientObject& obj) {
    return image_of(ctx, obj).module;
}

std::vector<NamedCheck> verify_quotient_axioms(const QuotientContext& ctx) {
    std::vector<NamedCheck> checks;
    const auto& d = ctx.datum;

    for (const auto& item : group_battery(d.g, ctx.field())) {
        NamedCheck c;
        c.id = "largest-trivial-subobject-lifts-" + item.name;
        auto obj = quotient_functor_q(ctx, item.comodule);
        auto image = equivalence_to_repL(ctx, obj);
        Matrix inv = invariants(*image.object).sub;
        // both live inside X: the image basis of q'(X) is the identity
        Matrix lifted = image.basis * inv;
        auto xs = largest_s_subobject(item.comodule, d.g, d.l);
        c.pass = same_column_span(lifted, xs.inclusion.matrix);
        if (!c.pass) c.detail = "subobject spans differ";
        checks.push_back(std::move(c));
    }

    for (const auto& item : l_battery(d)) {
        if (item.comodule->dim > 6) continue;
        NamedCheck c;
        c.id = "sandwich-" + item.name;
        const auto& u = item.comodule;
        auto cu = cotensor(d, u);
        bool surj = rank(counit_eps(d, u, cu).matrix) == u->dim;
        auto du = dual_comodule(u);
        auto cdu = cotensor(d, du);
        auto eps = counit_eps(d, du, cdu);
        Matrix emb = eps.matrix.transpose();
        bool inj = rank(emb) == u->dim &&
                   is_colinear(*u, *dual_comodule(eps.source), emb);
        c.pass = surj && inj;
        if (!c.pass) c.detail = surj ? "no embedding" : "counit not surjective";
        checks.push_back(std::move(c));
    }
    return checks;
}

}  // namespace tannakit
