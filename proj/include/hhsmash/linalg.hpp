#pragma once

// Exact linear algebra over the rationals.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hhs {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : v_(value) {} // NOLINT(google-explicit-constructor)
    Scalar(long num, long den);
    explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "p/q", "-p/q" (leading '+' and surrounding blanks allowed).
    static Scalar parse(std::string_view text);

    [[nodiscard]] std::string to_string() const { return v_.get_str(); }
    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] Scalar pow(long exponent) const;
    [[nodiscard]] const mpq_class& raw() const { return v_; }
    [[nodiscard]] std::string numerator_str() const { return v_.get_num().get_str(); }
    [[nodiscard]] std::string denominator_str() const { return v_.get_den().get_str(); }

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.v_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.v_.get_str(); }

    /// this -= a * b without temporaries.
    void submul(const Scalar& a, const Scalar& b);
    /// this += a * b without temporaries.
    void addmul(const Scalar& a, const Scalar& b);

private:
    mpq_class v_{0};
};

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Scalar> v);
std::string to_string(std::span<const Scalar> v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    /// Builds a matrix from integer literals; rows must be rectangular.
    static Matrix from_ints(const std::vector<std::vector<long>>& rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] Vector row_vector(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Scalar> v);

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Vector apply(std::span<const Scalar> v) const;
    [[nodiscard]] bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Kronecker product a ⊗ b.
Matrix kronecker(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivots are chosen leftmost column first and,
/// within a column, topmost remaining row first.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// A linear subspace of k^ambient held as a reduced row-echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    /// Span of arbitrary (possibly dependent) vectors.
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Subtracts basis multiples so the result vanishes at every pivot; the
    /// removed multiples are the coordinates when v lies in the span.
    [[nodiscard]] Vector reduce(Vector v, Vector* coords = nullptr) const;
    [[nodiscard]] bool contains(std::span<const Scalar> v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    void index_support();

    std::size_t ambient_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::size_t>> support_; // nonzero columns per basis row
};

Subspace kernel_basis(const Matrix& m);
/// Column space of m.
Subspace image_basis(const Matrix& m);
/// Coordinates of v against s.basis(), or nullopt when v is not in the span.
std::optional<Vector> express_in_span(std::span<const Scalar> v, const Subspace& s);
/// Coset representatives of ambient/sub: standard vectors at sub's non-pivot positions.
std::vector<Vector> quotient_basis(const Subspace& sub, std::size_t ambient_dim);
/// Indices of the non-pivot coordinates of sub (the support of quotient_basis).
std::vector<std::size_t> quotient_coordinates(const Subspace& sub);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Coefficients c with Σ c_k vectors[k] = v, or nullopt. The vectors must be
/// linearly independent; throws InvalidArgument otherwise.
std::optional<Vector> solve_combination(const std::vector<Vector>& vectors, std::span<const Scalar> v);

} // namespace hhs
