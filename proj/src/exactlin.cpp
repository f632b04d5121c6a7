#include "tannakit/exactlin.hpp"

#include <sstream>

namespace tannakit {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(long p) {
    if (!is_prime(p)) throw std::invalid_argument("prime field modulus must be prime: " + std::to_string(p));
    return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::name() const {
    return kind == Kind::Rationals ? "Q" : "F" + std::to_string(p);
}

FieldSpec parse_field(const std::string& text) {
    if (text == "Q" || text == "q") return FieldSpec::rationals();
    std::string t = text;
    if (!t.empty() && (t[0] == 'F' || t[0] == 'f')) {
        t = t.substr(1);
        if (!t.empty() && t[0] == '_') t = t.substr(1);
        try {
            return FieldSpec::prime_field(std::stol(t));
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::invalid_argument("cannot parse field spec: " + text);
}

Scalar::Scalar(long value, const FieldSpec& field) : v_(value), field_(field) { normalize(); }

Scalar::Scalar(const mpq_class& value, const FieldSpec& field) : v_(value), field_(field) { normalize(); }

void Scalar::normalize() {
    v_.canonicalize();
    if (field_.kind == FieldSpec::Kind::PrimeField) {
        mpz_class p(field_.p);
        mpz_class num = v_.get_num() % p;
        if (num < 0) num += p;
        if (v_.get_den() != 1) {
            mpz_class den = v_.get_den() % p;
            if (den < 0) den += p;
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw std::domain_error("division by zero residue in F_" + std::to_string(field_.p));
            num = (num * inv) % p;
        }
        v_ = mpq_class(num);
    }
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& field) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("cannot parse scalar: " + text);
    return Scalar(q, field);
}

void Scalar::check_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_field(o);
    return Scalar(mpq_class(v_ + o.v_), field_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_field(o);
    return Scalar(mpq_class(v_ - o.v_), field_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_field(o);
    return Scalar(mpq_class(v_ * o.v_), field_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_), field_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (field_.kind == FieldSpec::Kind::PrimeField) {
        mpz_class p(field_.p), inv;
        mpz_class num = v_.get_num();
        mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        return Scalar(mpq_class(inv), field_);
    }
    return Scalar(mpq_class(1 / v_), field_);
}

std::string Scalar::str() const { return v_.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar(0, field)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows, const FieldSpec& field) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s) {
    if (!(s.field() == field_)) throw std::invalid_argument("entry field mismatch");
    entries_[i * cols_ + j] = s;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(field_ == o.field_)) throw std::invalid_argument("matrix product shape/field mismatch");
    Matrix out(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.entries_[i * o.cols_ + j] = out.entries_[i * o.cols_ + j] + a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
        throw std::invalid_argument("matrix sum shape/field mismatch");
    Matrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + o.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * c;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_, field_);
}

Matrix Matrix::column(std::size_t j) const { return columns(j, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    Matrix out(rows_, count, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out.entries_[i * count + j] = at(i, first + j);
    return out;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_ || !(field_ == o.field_)) throw std::invalid_argument("hstack mismatch");
    Matrix out(rows_, cols_ + o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.entries_[i * out.cols_ + j] = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) out.entries_[i * out.cols_ + cols_ + j] = o.at(i, j);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_ || !(field_ == o.field_)) throw std::invalid_argument("vstack mismatch");
    Matrix out(rows_ + o.rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.entries_[i * cols_ + j] = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.entries_[(rows_ + i) * cols_ + j] = o.at(i, j);
    return out;
}

Matrix Matrix::direct_sum(const Matrix& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("direct_sum field mismatch");
    Matrix out(rows_ + o.rows_, cols_ + o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) out.set(rows_ + i, cols_ + j, o.at(i, j));
    return out;
}

Matrix Matrix::rows_reindexed(const std::vector<std::size_t>& perm) const {
    if (perm.size() != rows_) throw std::invalid_argument("row permutation size mismatch");
    Matrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.entries_[i * cols_ + j] = at(perm[i], j);
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[[]]";
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("kron field mismatch");
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& av = a.at(i, k);
            if (av.is_zero()) continue;
            for (std::size_t j = 0; j < b.rows(); ++j)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& bv = b.at(j, l);
                    if (bv.is_zero()) continue;
                    out.set(i * b.rows() + j, k * b.cols() + l, av * bv);
                }
        }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b, const Matrix& c) { return kron(kron(a, b), c); }

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_cols) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead) {
            for (std::size_t j = 0; j < r.cols(); ++j) {
                Scalar t = r.at(lead, j);
                r.set(lead, j, r.at(sel, j));
                r.set(sel, j, t);
            }
        }
        Scalar inv = r.at(lead, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.set(lead, j, r.at(lead, j) * inv);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead) continue;
            Scalar f = r.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < r.cols(); ++j) r.set(i, j, r.at(i, j) - f * r.at(lead, j));
        }
        pivots.push_back(col);
        ++lead;
    }
    if (pivot_cols) *pivot_cols = pivots;
    return r;
}

std::size_t rank(const Matrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

Matrix image_basis(const Matrix& m) {
    std::vector<std::size_t> pivots;
    Matrix r = rref(m.transpose(), &pivots);
    Matrix out(m.rows(), pivots.size(), m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) out.set(j, i, r.at(i, j));
    return out;
}

Matrix kernel_basis(const Matrix& m) {
    std::vector<std::size_t> pivots;
    Matrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix raw(m.cols(), free_cols.size(), m.field());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        raw.set(free_cols[k], k, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i) raw.set(pivots[i], k, -r.at(i, free_cols[k]));
    }
    return image_basis(raw);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    std::vector<std::size_t> pivots;
    Matrix r = rref(a.hstack(b), &pivots);
    for (std::size_t c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols(), a.field());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(pivots[i], j, r.at(i, a.cols() + j));
    return x;
}

QuotientPresentation quotient_by_span(const Matrix& span) {
    Matrix e = image_basis(span);
    std::size_t n = span.rows(), r = e.cols();
    // pivot row of column j = first nonzero row (leading 1 of the reduced column echelon basis)
    std::vector<std::size_t> pivot_rows(r);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t i = 0;
        while (i < n && e.at(i, j).is_zero()) ++i;
        pivot_rows[j] = i;
        is_pivot[i] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) rest.push_back(i);

    QuotientPresentation q;
    q.ambient_dim = n;
    q.dim = rest.size();
    // projection: normal form v - e * (pivot coordinates of v), read off non-pivot rows
    Matrix proj(rest.size(), n, span.field());
    for (std::size_t out = 0; out < rest.size(); ++out) {
        std::size_t i = rest[out];
        proj.set(out, i, 1);
        for (std::size_t j = 0; j < r; ++j) proj.set(out, pivot_rows[j], -e.at(i, j));
    }
    Matrix sec(n, rest.size(), span.field());
    for (std::size_t out = 0; out < rest.size(); ++out) sec.set(rest[out], out, 1);
    q.projection = proj;
    q.section = sec;
    return q;
}

std::vector<std::size_t> tensor_factor_permutation(const std::vector<std::size_t>& dims,
                                                   const std::vector<std::size_t>& factor_order) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    std::size_t k = dims.size();
    std::vector<std::size_t> out(total);
    std::vector<std::size_t> idx(k, 0);
    std::vector<std::size_t> out_dims(k);
    for (std::size_t s = 0; s < k; ++s) out_dims[s] = dims[factor_order[s]];
    for (std::size_t flat = 0; flat < total; ++flat) {
        // decompose flat as an output multi-index, then map back to input factors
        std::size_t rem = flat;
        for (std::size_t s = k; s-- > 0;) {
            idx[s] = rem % out_dims[s];
            rem /= out_dims[s];
        }
        std::size_t src = 0;
        for (std::size_t f = 0; f < k; ++f) {
            std::size_t slot = 0;
            while (factor_order[slot] != f) ++slot;
            src = src * dims[f] + idx[slot];
        }
        out[flat] = src;
    }
    return out;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    auto x = solve(m, Matrix::identity(m.rows(), m.field()));
    if (!x || !((m * *x).is_identity())) throw std::domain_error("matrix not invertible");
    return *x;
}

bool same_column_span(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return false;
    return image_basis(a) == image_basis(b);
}

Matrix left_inverse(const Matrix& m) {
    auto y = solve(m.transpose(), Matrix::identity(m.cols(), m.field()));
    if (!y) throw std::domain_error("left_inverse: matrix lacks full column rank");
    Matrix l = y->transpose();
    if (!((l * m).is_identity())) throw std::domain_error("left_inverse: matrix lacks full column rank");
    return l;
}

}  // namespace tannakit
