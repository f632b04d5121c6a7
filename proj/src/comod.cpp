#include "tannakit/comod.hpp"

namespace tannakit {

namespace {

void require_same_algebra(const Comodule& x, const Comodule& y) {
    if (x.algebra != y.algebra && !same_hopf(*x.algebra, *y.algebra))
        throw std::invalid_argument("comodules live over different algebras");
}

}  // namespace

bool comodule_axioms_hold(const Comodule& c) {
    std::size_t n = c.dim, d = c.algebra->dim;
    auto idV = Matrix::identity(n, c.algebra->field);
    auto idO = Matrix::identity(d, c.algebra->field);
    if (!(kron(c.coaction, idO) * c.coaction == kron(idV, c.algebra->comult) * c.coaction))
        return false;
    return kron(idV, c.algebra->counit) * c.coaction == idV;
}

ComodPtr make_comodule(HopfPtr algebra, Matrix coaction) {
    Comodule c;
    c.dim = coaction.cols();
    c.algebra = std::move(algebra);
    if (coaction.rows() != c.dim * c.algebra->dim)
        throw std::invalid_argument("coaction has wrong shape");
    c.coaction = std::move(coaction);
    if (!comodule_axioms_hold(c)) throw std::invalid_argument("coaction fails the comodule axioms");
    return std::make_shared<Comodule>(std::move(c));
}

ComodPtr trivial_comodule(const HopfPtr& o, std::size_t n) {
    return make_comodule(o, kron(Matrix::identity(n, o->field), o->unit));
}

ComodPtr regular_comodule(const HopfPtr& o) { return make_comodule(o, o->comult); }

ComodPtr rep_from_matrices(const GroupPtr& g, const std::vector<Matrix>& images,
                           const FieldSpec& field) {
    if (images.size() != g->order) throw std::invalid_argument("need one matrix per group element");
    std::size_t n = images[0].rows();
    for (const auto& m : images)
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("representation matrices must be square of equal size");
    if (!images[g->identity].is_identity())
        throw std::invalid_argument("identity element must act as the identity matrix");
    for (std::size_t a = 0; a < g->order; ++a)
        for (std::size_t b = 0; b < g->order; ++b)
            if (!(images[a] * images[b] == images[g->mul(a, b)]))
                throw std::invalid_argument("not a homomorphism: witness pair (" + g->labels[a] + "," +
                                            g->labels[b] + ")");
    auto oG = function_algebra(g, field);
    Matrix rho(n * g->order, n, field);
    for (std::size_t gi = 0; gi < g->order; ++gi)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rho.set(i * g->order + gi, j, images[gi].at(i, j));
    return make_comodule(oG, std::move(rho));
}

std::vector<Matrix> matrices_from_comodule(const Comodule& c) {
    std::size_t n = c.dim, d = c.algebra->dim;
    std::vector<Matrix> out(d, Matrix(n, n, c.algebra->field));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[a].set(i, j, c.coaction.at(i * d + a, j));
    return out;
}

bool is_colinear(const Comodule& source, const Comodule& target, const Matrix& matrix) {
    auto idO = Matrix::identity(source.algebra->dim, source.algebra->field);
    return target.coaction * matrix == kron(matrix, idO) * source.coaction;
}

ComoduleMap make_comodule_map(ComodPtr source, ComodPtr target, Matrix matrix) {
    require_same_algebra(*source, *target);
    if (matrix.rows() != target->dim || matrix.cols() != source->dim)
        throw std::invalid_argument("comodule map has wrong shape");
    if (!is_colinear(*source, *target, matrix))
        throw std::invalid_argument("matrix is not colinear");
    return ComoduleMap{std::move(source), std::move(target), std::move(matrix)};
}

Matrix hom_space(const Comodule& x, const Comodule& y) {
    require_same_algebra(x, y);
    std::size_t dx = x.dim, dy = y.dim, d = x.algebra->dim;
    const FieldSpec& f = x.algebra->field;
    // W reshapes ρ_x so that (T ⊗ id) ρ_x = T W row-major
    Matrix w(dx, d * dx, f);
    for (std::size_t j = 0; j < dx; ++j)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t c = 0; c < dx; ++c) w.set(j, a * dx + c, x.coaction.at(j * d + a, c));
    Matrix op = kron(y.coaction, Matrix::identity(dx, f)) -
                kron(Matrix::identity(dy, f), w.transpose());
    return kernel_basis(op);
}

std::vector<ComoduleMap> hom_basis(const ComodPtr& x, const ComodPtr& y) {
    Matrix basis = hom_space(*x, *y);
    std::vector<ComoduleMap> out;
    out.reserve(basis.cols());
    for (std::size_t k = 0; k < basis.cols(); ++k)
        out.push_back(make_comodule_map(x, y, unflatten_map(basis.column(k), y->dim, x->dim)));
    return out;
}

Matrix unflatten_map(const Matrix& column, std::size_t target_dim, std::size_t source_dim) {
    if (column.rows() != target_dim * source_dim || column.cols() != 1)
        throw std::invalid_argument("unflatten_map: wrong shape");
    Matrix m(target_dim, source_dim, column.field());
    for (std::size_t i = 0; i < target_dim; ++i)
        for (std::size_t j = 0; j < source_dim; ++j) m.set(i, j, column.at(i * source_dim + j, 0));
    return m;
}

Matrix flatten_map(const Matrix& m) {
    Matrix col(m.rows() * m.cols(), 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) col.set(i * m.cols() + j, 0, m.at(i, j));
    return col;
}

ComodPtr tensor_comodule(const ComodPtr& x, const ComodPtr& y) {
    require_same_algebra(*x, *y);
    const auto& o = *x->algebra;
    if (!o.is_commutative())
        throw std::invalid_argument("diagonal coaction needs a commutative algebra");
    std::size_t d = o.dim;
    Matrix paired = kron(x->coaction, y->coaction);  // rows (vx, a, vy, b)
    auto perm = tensor_factor_permutation({x->dim, d, y->dim, d}, {0, 2, 1, 3});
    Matrix moved = paired.rows_reindexed(perm);  // rows (vx, vy, a, b)
    Matrix rho = kron(Matrix::identity(x->dim * y->dim, o.field), o.mult) * moved;
    return make_comodule(x->algebra, std::move(rho));
}

ComodPtr dual_comodule(const ComodPtr& x) {
    const auto& o = *x->algebra;
    std::size_t n = x->dim, d = o.dim;
    Matrix rho(n * d, n, o.field);
    // ρ*(e^j) = Σ_k e^k ⊗ ι(c_jk)
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < d; ++a) {
                Scalar sum(0, o.field);
                for (std::size_t b = 0; b < d; ++b) {
                    const Scalar& s = o.antipode.at(a, b);
                    if (!s.is_zero()) sum = sum + s * x->coaction.at(j * d + b, k);
                }
                if (!sum.is_zero()) rho.set(k * d + a, j, sum);
            }
    return make_comodule(x->algebra, std::move(rho));
}

ComodPtr direct_sum_comodule(const ComodPtr& x, const ComodPtr& y) {
    require_same_algebra(*x, *y);
    std::size_t d = x->algebra->dim;
    Matrix rho((x->dim + y->dim) * d, x->dim + y->dim, x->algebra->field);
    for (std::size_t i = 0; i < x->dim * d; ++i)
        for (std::size_t j = 0; j < x->dim; ++j) rho.set(i, j, x->coaction.at(i, j));
    for (std::size_t i = 0; i < y->dim * d; ++i)
        for (std::size_t j = 0; j < y->dim; ++j)
            rho.set(x->dim * d + i, x->dim + j, y->coaction.at(i, j));
    return make_comodule(x->algebra, std::move(rho));
}

ComodPtr corestrict(const Comodule& c, const HopfPtr& target_algebra, const Matrix& phi) {
    if (phi.cols() != c.algebra->dim || phi.rows() != target_algebra->dim)
        throw std::invalid_argument("corestrict: map shape mismatch");
    Matrix rho = kron(Matrix::identity(c.dim, c.algebra->field), phi) * c.coaction;
    return make_comodule(target_algebra, std::move(rho));
}

SubComodule sub_comodule(const ComodPtr& x, const Matrix& span) {
    Matrix basis = image_basis(span);
    std::size_t d = x->algebra->dim;
    auto idO = Matrix::identity(d, x->algebra->field);
    auto rho = solve(kron(basis, idO), x->coaction * basis);
    if (!rho || !(kron(basis, idO) * *rho == x->coaction * basis))
        throw std::invalid_argument("span is not coaction-stable");
    auto sub = make_comodule(x->algebra, *rho);
    return SubComodule{make_comodule_map(sub, x, basis), sub};
}

QuotientComodule quotient_comodule(const ComodPtr& x, const Matrix& span) {
    auto q = quotient_by_span(span);
    std::size_t d = x->algebra->dim;
    auto idO = Matrix::identity(d, x->algebra->field);
    Matrix pushed = kron(q.projection, idO) * x->coaction;
    if (!(pushed * image_basis(span)).is_zero())
        throw std::invalid_argument("span is not coaction-stable");
    Matrix rho = pushed * q.section;
    auto quotient = make_comodule(x->algebra, std::move(rho));
    return QuotientComodule{make_comodule_map(x, quotient, q.projection), quotient};
}

Invariants invariants(const Comodule& x) {
    Matrix op = x.coaction - kron(Matrix::identity(x.dim, x.algebra->field), x.algebra->unit);
    Matrix sub = kernel_basis(op);
    Invariants out;
    out.as_comodule = trivial_comodule(x.algebra, sub.cols());
    out.sub = std::move(sub);
    return out;
}

SubComodule largest_s_subobject(const ComodPtr& x, const GroupPtr& g, const Subgroup& l) {
    auto sur = hopf_surjection_from_quotient(g, l, x->algebra->field);
    if (!same_hopf(*x->algebra, *sur.oG))
        throw std::invalid_argument("comodule does not live over the function algebra of g");
    auto res = corestrict(*x, sur.oL, sur.q_star);
    Matrix span = invariants(*res).sub;
    auto sub = sub_comodule(x, span);

    // the inherited coaction must factor through O(G/L)
    std::size_t a_dim = sur.f_star.cols();
    auto idS = Matrix::identity(sub.object->dim, x->algebra->field);
    auto through = solve(kron(idS, sur.f_star), sub.object->coaction);
    if (!through ||
        !(kron(idS, sur.f_star) * *through == sub.object->coaction))
        throw std::logic_error("inherited action does not factor through the quotient group");
    (void)a_dim;
    return sub;
}

std::optional<ComoduleMap> find_isomorphism(const ComodPtr& x, const ComodPtr& y) {
    if (x->dim != y->dim) return std::nullopt;
    Matrix basis = hom_space(*x, *y);
    if (x->dim == 0) return make_comodule_map(x, y, Matrix(0, 0, x->algebra->field));
    if (basis.cols() == 0) return std::nullopt;
    auto candidate = [&](const Matrix& column) -> std::optional<ComoduleMap> {
        Matrix m = unflatten_map(column, y->dim, x->dim);
        if (!is_invertible(m)) return std::nullopt;
        return make_comodule_map(x, y, m);
    };
    for (std::size_t k = 0; k < basis.cols(); ++k)
        if (auto iso = candidate(basis.column(k))) return iso;
    for (std::size_t k = 0; k < basis.cols(); ++k)
        for (std::size_t j = k + 1; j < basis.cols(); ++j)
            if (auto iso = candidate(basis.column(k) + basis.column(j))) return iso;
    std::uint64_t state = 88172645463325252ULL;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return (state >> 33) % 5;
    };
    for (int trial = 0; trial < 64; ++trial) {
        Matrix combo(basis.rows(), 1, x->algebra->field);
        for (std::size_t k = 0; k < basis.cols(); ++k) {
            long c = static_cast<long>(next()) - 2;
            if (c != 0) combo = combo + basis.column(k).scaled(Scalar(c, x->algebra->field));
        }
        if (auto iso = candidate(combo)) return iso;
    }
    return std::nullopt;
}

std::size_t largest_s_quotient_dim(const Comodule& x, const GroupPtr& g, const Subgroup& l) {
    auto sur = hopf_surjection_from_quotient(g, l, x.algebra->field);
    auto res = corestrict(x, sur.oL, sur.q_star);
    auto mats = matrices_from_comodule(*res);
    Matrix span(x.dim, 0, x.algebra->field);
    auto id = Matrix::identity(x.dim, x.algebra->field);
    for (const auto& m : mats) span = span.hstack(m - id);
    return x.dim - image_basis(span).cols();
}

}  // namespace tannakit
