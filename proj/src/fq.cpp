#include "kronhall/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kronhall {

bool is_supported_prime(int q) { return q == 2 || q == 3 || q == 5 || q == 7; }

int mod_q(long a, int q) {
    long r = a % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

int inv_mod(int a, int q) {
    a = mod_q(a, q);
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    // q is a small prime: Fermat
    long r = 1, b = a;
    for (int e = q - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
    }
    return static_cast<int>(r);
}

// ------------------------------------------------------------------ FqMatrix

FqMatrix FqMatrix::identity(int n, int q) {
    FqMatrix m(n, n, q);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::from_rows(const std::vector<std::vector<int>>& rows, int cols, int q) {
    FqMatrix m(static_cast<int>(rows.size()), cols, q);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, rows[i].at(j));
    return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    FqMatrix r(rows_, o.cols_, q_);
    for (int i = 0; i < rows_; ++i) {
        const int* a = row_ptr(i);
        int* out = r.row_ptr(i);
        for (int k = 0; k < cols_; ++k) {
            if (a[k] == 0) continue;
            const int* b = o.row_ptr(k);
            for (int j = 0; j < o.cols_; ++j) out[j] += a[k] * b[j];
        }
        for (int j = 0; j < o.cols_; ++j) out[j] %= q_;
    }
    return r;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
    FqMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % q_;
    return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const { return *this + o.scaled(q_ - 1); }

FqMatrix FqMatrix::scaled(int c) const {
    FqMatrix r = *this;
    c = mod_q(c, q_);
    for (auto& x : r.data_) x = x * c % q_;
    return r;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix r(cols_, rows_, q_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.data_[static_cast<std::size_t>(j) * rows_ + i] = (*this)(i, j);
    return r;
}

bool FqMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](int x) { return x == 0; });
}

void FqMatrix::put(int r, int c, const FqMatrix& block) {
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) data_[static_cast<std::size_t>(r + i) * cols_ + c + j] = block(i, j);
}

FqMatrix FqMatrix::submatrix(int r, int c, int nr, int nc) const {
    FqMatrix s(nr, nc, q_);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) s.set(i, j, (*this)(r + i, c + j));
    return s;
}

std::string FqMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

// ------------------------------------------------------------ elimination

std::vector<int> rref_in_place(FqMatrix& m) {
    const int q = m.q();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) {
            int* a = m.row_ptr(p);
            int* b = m.row_ptr(r);
            std::swap_ranges(a, a + m.cols(), b);
        }
        int* pr = m.row_ptr(r);
        int inv = inv_mod(pr[c], q);
        for (int j = c; j < m.cols(); ++j) pr[j] = pr[j] * inv % q;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            int* row = m.row_ptr(i);
            int f = row[c];
            if (f == 0) continue;
            for (int j = c; j < m.cols(); ++j) row[j] = mod_q(row[j] - f * pr[j], q);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

FqMatrix rref(const FqMatrix& m) {
    FqMatrix r = m;
    rref_in_place(r);
    return r;
}

int mat_rank(const FqMatrix& m) {
    FqMatrix r = m;
    return static_cast<int>(rref_in_place(r).size());
}

FqMatrix mat_kernel(const FqMatrix& m) {
    FqMatrix r = m;
    std::vector<int> piv = rref_in_place(r);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    FqMatrix k(n - static_cast<int>(piv.size()), n, m.q());
    int row = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        k.set(row, f, 1);
        for (std::size_t i = 0; i < piv.size(); ++i) k.set(row, piv[i], -r(static_cast<int>(i), f));
        ++row;
    }
    return k;
}

std::optional<std::vector<int>> mat_solve(const FqMatrix& m, const std::vector<int>& b) {
    FqMatrix aug(m.rows(), m.cols() + 1, m.q());
    aug.put(0, 0, m);
    for (int i = 0; i < m.rows(); ++i) aug.set(i, m.cols(), b.at(i));
    std::vector<int> piv = rref_in_place(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    std::vector<int> x(m.cols(), 0);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(static_cast<int>(i), m.cols());
    return x;
}

bool is_invertible(const FqMatrix& m) { return m.rows() == m.cols() && mat_rank(m) == m.rows(); }

long gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        long a = 1, b = 1;
        for (int j = 0; j < n - i; ++j) a *= q;
        for (int j = 0; j < i + 1; ++j) b *= q;
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

void for_each_subspace(int n, int k, int q, const std::function<void(const FqMatrix&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_pivot(n, false);
        for (int c : piv) is_pivot[c] = true;
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < k; ++r)
            for (int c = piv[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free.emplace_back(r, c);
        FqMatrix m(k, n, q);
        for (int r = 0; r < k; ++r) m.set(r, piv[r], 1);
        std::vector<int> digits(free.size(), 0);
        while (true) {
            fn(m);
            std::size_t i = 0;
            for (; i < digits.size(); ++i) {
                if (++digits[i] < q) {
                    m.set(free[i].first, free[i].second, digits[i]);
                    break;
                }
                digits[i] = 0;
                m.set(free[i].first, free[i].second, 0);
            }
            if (i == digits.size()) break;
        }
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<FqMatrix> enumerate_subspaces(int n, int k, int q) {
    std::vector<FqMatrix> out;
    for_each_subspace(n, k, q, [&](const FqMatrix& m) { out.push_back(m); });
    return out;
}

// -------------------------------------------------------------- polynomials

int poly_degree(const FqPoly& p) { return static_cast<int>(p.size()) - 1; }

FqPoly poly_trim(FqPoly p, int q) {
    for (auto& c : p) c = mod_q(c, q);
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

FqPoly poly_add(const FqPoly& a, const FqPoly& b, int q) {
    FqPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r), q);
}

FqPoly poly_scale(const FqPoly& a, int c, int q) {
    FqPoly r = a;
    for (auto& x : r) x *= c;
    return poly_trim(std::move(r), q);
}

FqPoly poly_sub(const FqPoly& a, const FqPoly& b, int q) { return poly_add(a, poly_scale(b, q - 1, q), q); }

FqPoly poly_mul(const FqPoly& a, const FqPoly& b, int q) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
    return poly_trim(std::move(r), q);
}

FqPoly poly_pow(const FqPoly& a, int n, int q) {
    FqPoly r{1};
    for (int i = 0; i < n; ++i) r = poly_mul(r, a, q);
    return r;
}

std::pair<FqPoly, FqPoly> poly_divmod(const FqPoly& a, const FqPoly& b, int q) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    FqPoly r = a;
    int db = poly_degree(b);
    if (poly_degree(r) < db) return {{}, r};
    FqPoly quo(r.size() - b.size() + 1, 0);
    int inv = inv_mod(b.back(), q);
    while (!r.empty() && poly_degree(r) >= db) {
        int shift = poly_degree(r) - db;
        int f = r.back() * inv % q;
        quo[shift] = f;
        for (int i = 0; i <= db; ++i) r[shift + i] = mod_q(r[shift + i] - f * b[i], q);
        r = poly_trim(std::move(r), q);
    }
    return {poly_trim(std::move(quo), q), r};
}

FqPoly poly_monic(const FqPoly& a, int q) {
    if (a.empty()) return a;
    return poly_scale(a, inv_mod(a.back(), q), q);
}

bool poly_is_irreducible(const FqPoly& p, int q) {
    int d = poly_degree(p);
    if (d < 1) return false;
    for (int e = 1; 2 * e <= d; ++e)
        for (const auto& f : irreducibles(e, q))
            if (poly_divmod(p, f, q).second.empty()) return false;
    return true;
}

FqMatrix companion(const FqPoly& p, int q) {
    int d = poly_degree(p);
    FqMatrix c(d, d, q);
    for (int i = 1; i < d; ++i) c.set(i, i - 1, 1);
    for (int i = 0; i < d; ++i) c.set(i, d - 1, -p[i]);
    return c;
}

const std::vector<FqPoly>& irreducibles(int d, int q) {
    static std::map<std::pair<int, int>, std::vector<FqPoly>> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(d, q);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<FqPoly> out;
    // all monic polynomials of degree d, lexicographic low to high
    FqPoly p(d + 1, 0);
    p[d] = 1;
    while (true) {
        if (poly_is_irreducible(p, q)) out.push_back(p);
        int i = 0;
        for (; i < d; ++i) {
            if (++p[i] < q) break;
            p[i] = 0;
        }
        if (i == d) break;
    }
    std::sort(out.begin(), out.end());
    return cache[key] = std::move(out);
}

std::string ClosedPoint::str() const {
    if (infinity) return "inf";
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? "," : "") << poly[i];
    os << "]";
    return os.str();
}

ClosedPoint ClosedPoint::parse(const std::string& s) {
    if (s == "inf") return at_infinity();
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("bad closed point: " + s);
    FqPoly p;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok));
    return finite(std::move(p));
}

std::strong_ordering operator<=>(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.infinity != b.infinity) return a.infinity ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.infinity) return std::strong_ordering::equal;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.poly <=> b.poly;
}

long point_census(int d, int q) {
    return static_cast<long>(irreducibles(d, q).size()) + (d == 1 ? 1 : 0);
}

std::vector<ClosedPoint> closed_points(int d, int q) {
    std::vector<ClosedPoint> out;
    if (d == 1) out.push_back(ClosedPoint::at_infinity());
    for (const auto& p : irreducibles(d, q)) out.push_back(ClosedPoint::finite(p));
    return out;
}

// ------------------------------------------------- Smith diagonalization

std::vector<std::pair<FqPoly, int>> elementary_divisors(const std::vector<FqMatrix>& coeffs, int q) {
    if (coeffs.empty()) return {};
    const int rows = coeffs[0].rows(), cols = coeffs[0].cols();
    std::vector<std::vector<FqPoly>> m(rows, std::vector<FqPoly>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            FqPoly p(coeffs.size(), 0);
            for (std::size_t k = 0; k < coeffs.size(); ++k) p[k] = coeffs[k](i, j);
            m[i][j] = poly_trim(std::move(p), q);
        }

    std::vector<FqPoly> diag;
    for (int k = 0; k < std::min(rows, cols); ++k) {
        bool found = true;
        while (true) {
            int bi = -1, bj = -1;
            for (int i = k; i < rows; ++i)
                for (int j = k; j < cols; ++j)
                    if (!m[i][j].empty() && (bi < 0 || m[i][j].size() < m[bi][bj].size())) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) {
                found = false;
                break;
            }
            std::swap(m[k], m[bi]);
            for (int i = 0; i < rows; ++i) std::swap(m[i][k], m[i][bj]);
            bool clean = true;
            const FqPoly piv = m[k][k];
            for (int i = k + 1; i < rows; ++i) {
                if (m[i][k].empty()) continue;
                auto [quo, rem] = poly_divmod(m[i][k], piv, q);
                for (int j = k; j < cols; ++j) m[i][j] = poly_sub(m[i][j], poly_mul(quo, m[k][j], q), q);
                if (!rem.empty()) clean = false;
            }
            for (int j = k + 1; j < cols; ++j) {
                if (m[k][j].empty()) continue;
                auto [quo, rem] = poly_divmod(m[k][j], piv, q);
                for (int i = k; i < rows; ++i) m[i][j] = poly_sub(m[i][j], poly_mul(quo, m[i][k], q), q);
                if (!rem.empty()) clean = false;
            }
            if (clean) break;
        }
        if (!found) break;
        diag.push_back(m[k][k]);
    }

    std::vector<std::pair<FqPoly, int>> out;
    for (const FqPoly& f : diag)
        for (auto& pe : poly_factor(f, q)) out.push_back(std::move(pe));
    return out;
}

std::vector<std::pair<FqPoly, int>> poly_factor(const FqPoly& g, int q) {
    FqPoly f = poly_monic(g, q);
    std::vector<std::pair<FqPoly, int>> out;
    for (int d = 1; 2 * d <= poly_degree(f); ++d) {
        for (const auto& p : irreducibles(d, q)) {
            int e = 0;
            while (poly_degree(f) >= d) {
                auto [quo, rem] = poly_divmod(f, p, q);
                if (!rem.empty()) break;
                f = quo;
                ++e;
            }
            if (e > 0) out.emplace_back(p, e);
        }
    }
    if (poly_degree(f) >= 1) out.emplace_back(f, 1);
    return out;
}

}  // namespace kronhall
