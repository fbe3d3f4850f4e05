#include "hhsmash/linalg.hpp"

#include "hhsmash/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace hhs {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NoIntegral: return "NoIntegral";
    case ErrorCode::IntegralNotTwoSided: return "IntegralNotTwoSided";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::RelationNotPreserved: return "RelationNotPreserved";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::TargetBasisIncomplete: return "TargetBasisIncomplete";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long num, long den) {
    if (den == 0)
        throw Error(ErrorCode::InvalidArgument, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+'))
            t.remove_prefix(1);
        return !t.empty() &&
               std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    num = trim(num);
    den = trim(den);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw Error(ErrorCode::ParseError, "not a rational number: \"" + std::string(text) + "\"");
    std::string n(num);
    if (!n.empty() && n.front() == '+')
        n.erase(0, 1);
    mpz_class zn(n, 10);
    mpz_class zd(std::string(den), 10);
    if (zd == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
    mpq_class q(zn, zd);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error(ErrorCode::InvalidArgument, "inverse of zero");
    return Scalar(mpq_class(1 / v_));
}

Scalar Scalar::pow(long exponent) const {
    if (exponent < 0)
        return inverse().pow(-exponent);
    mpq_class result(1);
    mpq_class base = v_;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if ((e & 1UL) != 0)
            result *= base;
        base *= base;
        e >>= 1U;
    }
    return Scalar(std::move(result));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero())
        throw Error(ErrorCode::InvalidArgument, "division by zero");
    v_ /= o.v_;
    return *this;
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero())
        return;
    mpq_class t = a.v_ * b.v_;
    v_ -= t;
}

void Scalar::addmul(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero())
        return;
    mpq_class t = a.v_ * b.v_;
    v_ += t;
}

// ---------------------------------------------------------------- vectors

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t k) {
    Vector v(n);
    v.at(k) = Scalar(1);
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string to_string(std::span<const Scalar> v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Scalar(rows[r][c]);
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
    if (v.size() != rows_)
        throw Error(ErrorCode::InvalidArgument, "column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_)
        throw Error(ErrorCode::InvalidArgument, "matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r)
            out[r].addmul((*this)(r, c), v[c]);
    }
    return out;
}

bool Matrix::is_zero() const { return hhs::is_zero(std::span<const Scalar>(data_)); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::InvalidArgument, "matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j).addmul(aik, b(k, j));
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorCode::InvalidArgument, "matrix sum size mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorCode::InvalidArgument, "matrix difference size mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_)
        x *= s;
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

// ---------------------------------------------------------------- elimination

RrefResult rref(Matrix m) {
    RrefResult result;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && m(r, c).is_zero())
            ++r;
        if (r == rows)
            continue;
        if (r != pivot_row)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(m(r, j), m(pivot_row, j));
        const Scalar inv = m(pivot_row, c).inverse();
        support.clear();
        for (std::size_t j = c + 1; j < cols; ++j)
            if (!m(pivot_row, j).is_zero()) {
                m(pivot_row, j) *= inv;
                support.push_back(j);
            }
        m(pivot_row, c) = Scalar(1);
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == pivot_row || m(r2, c).is_zero())
                continue;
            const Scalar factor = m(r2, c);
            for (std::size_t j : support)
                m(r2, j).submul(factor, m(pivot_row, j));
            m(r2, c) = Scalar(0);
        }
        result.pivots.push_back(c);
        ++pivot_row;
    }
    result.reduced = std::move(m);
    return result;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    if (vectors.empty())
        return s;
    auto [reduced, pivots] = rref(Matrix::from_rows(vectors, ambient_dim));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        s.basis_.push_back(reduced.row_vector(r));
    s.pivots_ = std::move(pivots);
    s.index_support();
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back(unit_vector(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    s.index_support();
    return s;
}

void Subspace::index_support() {
    support_.clear();
    for (const auto& b : basis_) {
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                nz.push_back(j);
        support_.push_back(std::move(nz));
    }
}

Vector Subspace::reduce(Vector v, Vector* coords) const {
    if (v.size() != ambient_)
        throw Error(ErrorCode::InvalidArgument, "vector length does not match subspace ambient dimension");
    if (coords != nullptr)
        coords->assign(basis_.size(), Scalar(0));
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Scalar f = v[pivots_[k]];
        if (f.is_zero())
            continue;
        for (std::size_t j : support_[k])
            v[j].submul(f, basis_[k][j]);
        if (coords != nullptr)
            (*coords)[k] = f;
    }
    return v;
}

bool Subspace::contains(std::span<const Scalar> v) const {
    return hhs::is_zero(reduce(Vector(v.begin(), v.end())));
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Vector& b) { return contains(b); });
}

Subspace kernel_basis(const Matrix& m) {
    auto [reduced, pivots] = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(cols);
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!reduced(r, f).is_zero())
                v[pivots[r]] = -reduced(r, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, cols);
}

Subspace image_basis(const Matrix& m) {
    std::vector<Vector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        cols.push_back(m.column(c));
    return Subspace::span(cols, m.rows());
}

std::optional<Vector> express_in_span(std::span<const Scalar> v, const Subspace& s) {
    Vector coords;
    Vector residual = s.reduce(Vector(v.begin(), v.end()), &coords);
    if (!is_zero(residual))
        return std::nullopt;
    return coords;
}

std::vector<std::size_t> quotient_coordinates(const Subspace& sub) {
    std::vector<bool> is_pivot(sub.ambient_dim(), false);
    for (auto p : sub.pivots())
        is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sub.ambient_dim(); ++i)
        if (!is_pivot[i])
            out.push_back(i);
    return out;
}

std::vector<Vector> quotient_basis(const Subspace& sub, std::size_t ambient_dim) {
    if (sub.ambient_dim() != ambient_dim)
        throw Error(ErrorCode::InvalidArgument, "quotient_basis: ambient dimension mismatch");
    std::vector<Vector> reps;
    for (auto i : quotient_coordinates(sub))
        reps.push_back(unit_vector(ambient_dim, i));
    return reps;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw Error(ErrorCode::InvalidArgument, "sum: ambient dimension mismatch");
    std::vector<Vector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(all, a.ambient_dim());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw Error(ErrorCode::InvalidArgument, "intersect: ambient dimension mismatch");
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace(n);
    // Solve Σ α_i a_i − Σ β_j b_j = 0.
    Matrix m(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        m.set_column(i, a.basis()[i]);
    for (std::size_t j = 0; j < b.dim(); ++j) {
        Vector neg = b.basis()[j];
        for (auto& x : neg)
            x = -x;
        m.set_column(a.dim() + j, neg);
    }
    const Subspace ker = kernel_basis(m);
    std::vector<Vector> vecs;
    for (const auto& k : ker.basis()) {
        Vector v(n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!k[i].is_zero())
                for (std::size_t c = 0; c < n; ++c)
                    v[c].addmul(k[i], a.basis()[i][c]);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, n);
}

std::optional<Vector> solve_combination(const std::vector<Vector>& vectors, std::span<const Scalar> v) {
    const std::size_t k = vectors.size();
    const std::size_t n = v.size();
    Matrix m(n, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (vectors[j].size() != n)
            throw Error(ErrorCode::InvalidArgument, "solve_combination: length mismatch");
        m.set_column(j, vectors[j]);
    }
    m.set_column(k, v);
    auto [reduced, pivots] = rref(std::move(m));
    std::size_t leading = 0;
    while (leading < pivots.size() && pivots[leading] < k)
        ++leading;
    if (leading != k)
        throw Error(ErrorCode::InvalidArgument, "solve_combination: vectors are linearly dependent");
    if (pivots.size() > k)
        return std::nullopt;
    Vector coeffs(k);
    for (std::size_t j = 0; j < k; ++j)
        coeffs[j] = reduced(j, k);
    return coeffs;
}

} // namespace hhs
