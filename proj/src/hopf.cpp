#include "tannakit/hopf.hpp"

namespace tannakit {

bool HopfAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t out = 0; out < dim; ++out)
                if (!(mult.at(out, i * dim + j) == mult.at(out, j * dim + i))) return false;
    return true;
}

Matrix HopfAlgebra::left_mult(std::size_t i) const {
    Matrix m(dim, dim, field);
    for (std::size_t out = 0; out < dim; ++out)
        for (std::size_t j = 0; j < dim; ++j) m.set(out, j, mult.at(out, i * dim + j));
    return m;
}

Scalar HopfAlgebra::counit_on(std::size_t i) const { return counit.at(0, i); }

bool same_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.dim == b.dim && a.field == b.field && a.mult == b.mult && a.unit == b.unit &&
           a.comult == b.comult && a.counit == b.counit && a.antipode == b.antipode;
}

HopfPtr group_algebra(const GroupPtr& g, const FieldSpec& field) {
    std::size_t n = g->order;
    auto h = std::make_shared<HopfAlgebra>();
    h->dim = n;
    h->field = field;
    h->basis_labels = g->labels;
    h->mult = Matrix(n, n * n, field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h->mult.set(g->mul(i, j), i * n + j, 1);
    h->unit = Matrix(n, 1, field);
    h->unit.set(g->identity, 0, 1);
    h->comult = Matrix(n * n, n, field);
    for (std::size_t i = 0; i < n; ++i) h->comult.set(i * n + i, i, 1);
    h->counit = Matrix(1, n, field);
    for (std::size_t i = 0; i < n; ++i) h->counit.set(0, i, 1);
    h->antipode = Matrix(n, n, field);
    for (std::size_t i = 0; i < n; ++i) h->antipode.set(g->inv(i), i, 1);
    return h;
}

HopfPtr function_algebra(const GroupPtr& g, const FieldSpec& field) {
    std::size_t n = g->order;
    auto h = std::make_shared<HopfAlgebra>();
    h->dim = n;
    h->field = field;
    h->basis_labels.reserve(n);
    for (const auto& l : g->labels) h->basis_labels.push_back("x^" + l);
    h->mult = Matrix(n, n * n, field);
    for (std::size_t i = 0; i < n; ++i) h->mult.set(i, i * n + i, 1);
    h->unit = Matrix(n, 1, field);
    for (std::size_t i = 0; i < n; ++i) h->unit.set(i, 0, 1);
    h->comult = Matrix(n * n, n, field);
    for (std::size_t gi = 0; gi < n; ++gi)
        for (std::size_t hi = 0; hi < n; ++hi)
            h->comult.set(hi * n + g->mul(g->inv(hi), gi), gi, 1);
    h->counit = Matrix(1, n, field);
    h->counit.set(0, g->identity, 1);
    h->antipode = Matrix(n, n, field);
    for (std::size_t i = 0; i < n; ++i) h->antipode.set(g->inv(i), i, 1);
    return h;
}

HopfPtr dual_hopf(const HopfPtr& h) {
    auto d = std::make_shared<HopfAlgebra>();
    d->dim = h->dim;
    d->field = h->field;
    d->basis_labels.reserve(h->dim);
    for (const auto& l : h->basis_labels) d->basis_labels.push_back(l + "*");
    d->mult = h->comult.transpose();
    d->unit = h->counit.transpose();
    d->comult = h->mult.transpose();
    d->counit = h->unit.transpose();
    d->antipode = h->antipode.transpose();
    return d;
}

namespace {

void record(AxiomReport& report, const std::string& family, const Matrix& lhs, const Matrix& rhs) {
    AxiomCheck c;
    c.family = family;
    c.pass = lhs == rhs;
    if (!c.pass) {
        Matrix diff = lhs - rhs;
        for (std::size_t i = 0; i < diff.rows() && c.witness.empty(); ++i)
            for (std::size_t j = 0; j < diff.cols(); ++j)
                if (!diff.at(i, j).is_zero()) {
                    c.witness = "first discrepancy at (" + std::to_string(i) + "," + std::to_string(j) +
                                "): " + lhs.at(i, j).str() + " vs " + rhs.at(i, j).str();
                    break;
                }
    }
    report.checks.push_back(std::move(c));
}

}  // namespace

AxiomReport check_axioms(const HopfAlgebra& h) {
    AxiomReport report;
    std::size_t n = h.dim;
    auto id = Matrix::identity(n, h.field);
    auto id2 = Matrix::identity(n * n, h.field);
    auto one = Matrix::identity(1, h.field);

    record(report, "associativity", h.mult * kron(h.mult, id), h.mult * kron(id, h.mult));
    record(report, "unit", (h.mult * kron(h.unit, id)).hstack(h.mult * kron(id, h.unit)),
           id.hstack(id));
    record(report, "coassociativity", kron(h.comult, id) * h.comult, kron(id, h.comult) * h.comult);
    record(report, "counit", (kron(h.counit, id) * h.comult).hstack(kron(id, h.counit) * h.comult),
           id.hstack(id));

    // Δ and ε are algebra maps
    auto swap23 = tensor_factor_permutation({n, n, n, n}, {0, 2, 1, 3});
    Matrix raw = kron(h.comult, h.comult);  // (O⊗O)⊗(O⊗O) ordered (a1,a2,b1,b2)
    Matrix mixed = raw.rows_reindexed(swap23);
    record(report, "comult multiplicative",
           (h.comult * h.mult).hstack(h.comult * h.unit),
           (kron(h.mult, h.mult) * mixed).hstack(kron(h.unit, h.unit) * one));
    record(report, "counit multiplicative", (h.counit * h.mult).hstack(h.counit * h.unit),
           kron(h.counit, h.counit).hstack(one));

    Matrix target = h.unit * h.counit;
    record(report, "antipode",
           (h.mult * kron(h.antipode, id) * h.comult).hstack(h.mult * kron(id, h.antipode) * h.comult),
           target.hstack(target));
    return report;
}

bool AxiomReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

IntegralElement find_integral(const HopfPtr& h) {
    std::size_t n = h->dim;
    Matrix system(0, n, h->field);
    for (std::size_t a = 0; a < n; ++a) {
        Matrix la = h->left_mult(a);
        Matrix shifted = la - Matrix::identity(n, h->field).scaled(h->counit_on(a));
        system = system.rows() == 0 ? shifted : system.vstack(shifted);
    }
    Matrix sol = kernel_basis(system);
    if (sol.cols() != 1)
        throw std::domain_error("integral space has dimension " + std::to_string(sol.cols()) +
                                ", expected 1");
    IntegralElement out;
    out.vector = sol;  // kernel_basis output already has leading coordinate one
    out.algebra = h;
    return out;
}

HopfSurjection hopf_surjection_from_quotient(const GroupPtr& g, const Subgroup& l,
                                             const FieldSpec& field) {
    if (!is_normal(*g, l)) throw std::invalid_argument("subgroup is not normal");
    HopfSurjection out;
    out.oG = function_algebra(g, field);
    out.oL = function_algebra(l.as_group(), field);
    out.q_star = Matrix(l.order(), g->order, field);
    for (std::size_t i = 0; i < l.order(); ++i) out.q_star.set(i, l.members[i], 1);
    auto q = quotient_group(g, l);
    out.f_star = Matrix(g->order, q.group->order, field);
    for (std::size_t c = 0; c < q.cosets.size(); ++c)
        for (std::size_t member : q.cosets[c]) out.f_star.set(member, c, 1);
    return out;
}

}  // namespace tannakit
