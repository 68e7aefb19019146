#pragma once

// Arithmetic and linear algebra over prime fields F_q, subspace enumeration,
// polynomials over F_q and closed points of the projective line.

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kronhall {

bool is_supported_prime(int q);
int mod_q(long a, int q);
int inv_mod(int a, int q);

class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(int rows, int cols, int q) : rows_(rows), cols_(cols), q_(q), data_(static_cast<std::size_t>(rows) * cols, 0) {}
    static FqMatrix identity(int n, int q);
    static FqMatrix from_rows(const std::vector<std::vector<int>>& rows, int cols, int q);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int q() const { return q_; }
    int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, long x) { data_[static_cast<std::size_t>(i) * cols_ + j] = mod_q(x, q_); }
    int* row_ptr(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }
    const int* row_ptr(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }

    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix operator+(const FqMatrix& o) const;
    FqMatrix operator-(const FqMatrix& o) const;
    FqMatrix scaled(int c) const;
    FqMatrix transpose() const;
    bool is_zero() const;
    /// Copies `block` into this matrix with its top-left corner at (r, c).
    void put(int r, int c, const FqMatrix& block);
    FqMatrix submatrix(int r, int c, int nr, int nc) const;

    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
    friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int q_ = 2;
    std::vector<int> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref_in_place(FqMatrix& m);
FqMatrix rref(const FqMatrix& m);
int mat_rank(const FqMatrix& m);
/// Kernel basis, one vector per row of the result (cols x cols' shape: k x m.cols()).
FqMatrix mat_kernel(const FqMatrix& m);
/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<std::vector<int>> mat_solve(const FqMatrix& m, const std::vector<int>& b);
bool is_invertible(const FqMatrix& m);

/// Gaussian binomial [n choose k]_q.
long gaussian_binomial(int n, int k, int q);

/// Calls fn on every k-dimensional subspace of F_q^n, given as a k x n matrix
/// in reduced row echelon form. Each subspace is visited exactly once.
void for_each_subspace(int n, int k, int q, const std::function<void(const FqMatrix&)>& fn);
std::vector<FqMatrix> enumerate_subspaces(int n, int k, int q);

// ----------------------------------------------------------- polynomials

/// Polynomial over F_q, coefficients low to high, no trailing zeros.
using FqPoly = std::vector<int>;

int poly_degree(const FqPoly& p);  // -1 for the zero polynomial
FqPoly poly_trim(FqPoly p, int q);
FqPoly poly_add(const FqPoly& a, const FqPoly& b, int q);
FqPoly poly_sub(const FqPoly& a, const FqPoly& b, int q);
FqPoly poly_mul(const FqPoly& a, const FqPoly& b, int q);
FqPoly poly_scale(const FqPoly& a, int c, int q);
FqPoly poly_pow(const FqPoly& a, int n, int q);
/// Quotient and remainder; b must be nonzero.
std::pair<FqPoly, FqPoly> poly_divmod(const FqPoly& a, const FqPoly& b, int q);
FqPoly poly_monic(const FqPoly& a, int q);
bool poly_is_irreducible(const FqPoly& p, int q);
/// Monic irreducible factors with multiplicity; constants give an empty list.
std::vector<std::pair<FqPoly, int>> poly_factor(const FqPoly& f, int q);
/// Companion matrix of a monic polynomial of degree d >= 1.
FqMatrix companion(const FqPoly& p, int q);

/// All monic irreducible polynomials of degree d over F_q, in lexicographic
/// order of their coefficient lists (low to high). Cached.
const std::vector<FqPoly>& irreducibles(int d, int q);

/// A closed point of P^1 over F_q: infinity, or the monic irreducible
/// polynomial of its affine coordinate.
struct ClosedPoint {
    bool infinity = false;
    FqPoly poly;

    static ClosedPoint at_infinity() { return ClosedPoint{true, {}}; }
    static ClosedPoint finite(FqPoly p) { return ClosedPoint{false, std::move(p)}; }

    int degree() const { return infinity ? 1 : poly_degree(poly); }
    /// "inf" or the coefficient list, e.g. "[1,1]".
    std::string str() const;
    static ClosedPoint parse(const std::string& s);

    friend bool operator==(const ClosedPoint&, const ClosedPoint&) = default;
    /// Infinity first, then by degree, then lexicographically on coefficients.
    friend std::strong_ordering operator<=>(const ClosedPoint& a, const ClosedPoint& b);
};

long point_census(int d, int q);
/// All closed points of degree d, in canonical order.
std::vector<ClosedPoint> closed_points(int d, int q);

/// Elementary divisors of the polynomial matrix with entries mats[k] * y^k
/// (all of the same shape): the prime-power factors of its Smith form, as
/// (monic irreducible, exponent) pairs.
std::vector<std::pair<FqPoly, int>> elementary_divisors(const std::vector<FqMatrix>& coeffs, int q);

}  // namespace kronhall
