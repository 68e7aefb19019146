#include "kronhall/kronrep.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace kronhall {

int euler_form(const KClass& a, const KClass& b) { return a.a1 * b.a1 + a.a2 * b.a2 - 2 * a.a1 * b.a2; }

int sym_form(const KClass& a, const KClass& b) { return euler_form(a, b) + euler_form(b, a); }

// ------------------------------------------------------------------ IsoClass

IsoClass IsoClass::P(int n, int mult) {
    IsoClass c;
    if (mult > 0) c.prep[n] = mult;
    return c;
}

IsoClass IsoClass::I(int n, int mult) {
    IsoClass c;
    if (mult > 0) c.preinj[n] = mult;
    return c;
}

IsoClass IsoClass::tube(const ClosedPoint& x, int t) {
    IsoClass c;
    c.regular[x] = {t};
    return c;
}

IsoClass IsoClass::direct_sum(const IsoClass& a, const IsoClass& b) {
    IsoClass c = a;
    for (const auto& [n, m] : b.prep) c.prep[n] += m;
    for (const auto& [n, m] : b.preinj) c.preinj[n] += m;
    for (const auto& [x, part] : b.regular) {
        auto& p = c.regular[x];
        p.insert(p.end(), part.begin(), part.end());
        std::sort(p.begin(), p.end(), std::greater<>());
    }
    return c;
}

IsoClass IsoClass::power(int n) const {
    IsoClass c;
    for (int i = 0; i < n; ++i) c = direct_sum(c, *this);
    return c;
}

DimVec IsoClass::dim() const {
    DimVec d;
    for (const auto& [n, m] : prep) d = d + DimVec{n * m, (n + 1) * m};
    for (const auto& [n, m] : preinj) d = d + DimVec{(n + 1) * m, n * m};
    for (const auto& [x, part] : regular)
        for (int t : part) d = d + DimVec{t * x.degree(), t * x.degree()};
    return d;
}

bool IsoClass::is_indecomposable() const {
    int count = 0;
    for (const auto& [n, m] : prep) count += m;
    for (const auto& [n, m] : preinj) count += m;
    for (const auto& [x, part] : regular) count += static_cast<int>(part.size());
    return count == 1;
}

std::strong_ordering operator<=>(const IsoClass& a, const IsoClass& b) {
    if (auto c = a.prep <=> b.prep; c != 0) return c;
    if (auto c = a.preinj <=> b.preinj; c != 0) return c;
    return a.regular <=> b.regular;
}

namespace {

std::string with_mult(const std::string& s, int m) { return m == 1 ? s : s + "^" + std::to_string(m); }

}  // namespace

std::string IsoClass::str() const {
    if (is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [n, m] : prep) parts.push_back(with_mult("P" + std::to_string(n), m));
    for (const auto& [n, m] : preinj) parts.push_back(with_mult("I" + std::to_string(n), m));
    for (const auto& [x, part] : regular) {
        for (std::size_t i = 0; i < part.size();) {
            std::size_t j = i;
            while (j < part.size() && part[j] == part[i]) ++j;
            parts.push_back(with_mult("T" + std::to_string(part[i]) + "@" + x.str(), static_cast<int>(j - i)));
            i = j;
        }
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "+" : "") + parts[i];
    return out;
}

IsoClass IsoClass::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    IsoClass c;
    if (s.empty() || s == "0") return c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        if (tok.empty()) throw std::invalid_argument("empty summand in iso class: " + text);
        int mult = 1;
        // multiplicity suffix ^m
        if (auto pos = tok.rfind('^'); pos != std::string::npos) {
            mult = std::stoi(tok.substr(pos + 1));
            tok = tok.substr(0, pos);
        }
        IsoClass term;
        if (tok == "S1") term = S1();
        else if (tok == "S2") term = S2();
        else if (tok[0] == 'P') term = P(std::stoi(tok.substr(1)));
        else if (tok[0] == 'I') term = I(std::stoi(tok.substr(1)));
        else if (tok[0] == 'T') {
            auto at = tok.find('@');
            if (at == std::string::npos) throw std::invalid_argument("tube summand needs @point: " + tok);
            term = tube(ClosedPoint::parse(tok.substr(at + 1)), std::stoi(tok.substr(1, at - 1)));
        } else {
            throw std::invalid_argument("unknown summand '" + tok + "' in iso class: " + text);
        }
        c = direct_sum(c, term.power(mult));
    }
    return c;
}

void to_json(nlohmann::json& j, const IsoClass& c) {
    nlohmann::json p = nlohmann::json::object(), i = nlohmann::json::object(), r = nlohmann::json::array();
    for (const auto& [n, m] : c.prep) p[std::to_string(n)] = m;
    for (const auto& [n, m] : c.preinj) i[std::to_string(n)] = m;
    for (const auto& [x, part] : c.regular) {
        nlohmann::json pt = x.infinity ? nlohmann::json("inf") : nlohmann::json(x.poly);
        r.push_back({{"point", pt}, {"partition", part}});
    }
    j = {{"P", p}, {"I", i}, {"R", r}};
}

void from_json(const nlohmann::json& j, IsoClass& c) {
    c = IsoClass{};
    for (const auto& [k, m] : j.at("P").items()) c.prep[std::stoi(k)] = m.get<int>();
    for (const auto& [k, m] : j.at("I").items()) c.preinj[std::stoi(k)] = m.get<int>();
    for (const auto& e : j.at("R")) {
        const auto& pt = e.at("point");
        ClosedPoint x = pt.is_string() ? ClosedPoint::at_infinity() : ClosedPoint::finite(pt.get<FqPoly>());
        c.regular[x] = e.at("partition").get<Partition>();
    }
}

// ---------------------------------------------------------------------- Rep

Rep Rep::zero(DimVec d, int q) { return Rep{d, FqMatrix(d.d2, d.d1, q), FqMatrix(d.d2, d.d1, q), q}; }

Rep Rep::direct_sum(const Rep& x, const Rep& y) {
    Rep r = zero(x.dim + y.dim, x.q);
    r.A.put(0, 0, x.A);
    r.A.put(x.dim.d2, x.dim.d1, y.A);
    r.B.put(0, 0, x.B);
    r.B.put(x.dim.d2, x.dim.d1, y.B);
    return r;
}

namespace {

Rep prep_block(int n, int q) {
    Rep r = Rep::zero({n, n + 1}, q);
    for (int i = 0; i < n; ++i) {
        r.A.set(i, i, 1);
        r.B.set(i + 1, i, 1);
    }
    return r;
}

Rep preinj_block(int n, int q) {
    Rep r = Rep::zero({n + 1, n}, q);
    for (int i = 0; i < n; ++i) {
        r.A.set(i, i, 1);
        r.B.set(i, i + 1, 1);
    }
    return r;
}

Rep tube_block(const ClosedPoint& x, int t, int q) {
    if (x.infinity) {
        Rep r = Rep::zero({t, t}, q);
        r.A = companion(poly_pow({0, 1}, t, q), q);
        r.B = FqMatrix::identity(t, q);
        return r;
    }
    FqMatrix c = companion(poly_pow(x.poly, t, q), q);
    int n = c.rows();
    return Rep{{n, n}, FqMatrix::identity(n, q), c, q};
}

}  // namespace

Rep canonical_rep(const IsoClass& c, int q) {
    std::vector<Rep> blocks;
    for (const auto& [n, m] : c.prep)
        for (int i = 0; i < m; ++i) blocks.push_back(prep_block(n, q));
    for (const auto& [n, m] : c.preinj)
        for (int i = 0; i < m; ++i) blocks.push_back(preinj_block(n, q));
    for (const auto& [x, part] : c.regular)
        for (int t : part) blocks.push_back(tube_block(x, t, q));
    Rep r = Rep::zero(c.dim(), q);
    int o1 = 0, o2 = 0;
    for (const auto& b : blocks) {
        r.A.put(o2, o1, b.A);
        r.B.put(o2, o1, b.B);
        o1 += b.dim.d1;
        o2 += b.dim.d2;
    }
    return r;
}

namespace {

// Multiplicities of the blocks with column minimal index k of the pencil
// (A, B), read off from kernel dimensions of the stacked block matrices.
std::map<int, int> column_minimal_indices(const FqMatrix& A, const FqMatrix& B, int max_k) {
    const int r = A.rows(), c = A.cols(), q = A.q();
    std::map<int, int> out;
    int kappa1 = 0, kappa2 = 0;  // kappa_{k-1}, kappa_{k-2}
    for (int k = 0; k <= max_k; ++k) {
        FqMatrix m((k + 2) * r, (k + 1) * c, q);
        for (int i = 0; i <= k; ++i) {
            m.put(i * r, i * c, A);
            m.put((i + 1) * r, i * c, B);
        }
        int kappa = (k + 1) * c - mat_rank(m);
        int mult = kappa - 2 * kappa1 + kappa2;
        if (mult > 0) out[k] = mult;
        kappa2 = kappa1;
        kappa1 = kappa;
    }
    return out;
}

}  // namespace

IsoClass decompose(const Rep& r) {
    const int q = r.q;
    IsoClass c;
    const int d1 = r.dim.d1, d2 = r.dim.d2;
    c.preinj = column_minimal_indices(r.A, r.B, std::min(d1 - 1, d2));
    c.prep = column_minimal_indices(r.A.transpose(), r.B.transpose(), std::min(d2 - 1, d1));
    DimVec singular = c.dim();
    int reg = d1 - singular.d1;
    if (reg != d2 - singular.d2 || reg < 0) throw std::logic_error("decompose: inconsistent pencil invariants");
    if (reg == 0) return c;

    int found = 0;
    for (const auto& [p, e] : elementary_divisors({r.B.scaled(-1), r.A}, q)) {
        c.regular[ClosedPoint::finite(p)].push_back(e);
        found += e * poly_degree(p);
    }
    if (found < reg) {
        for (const auto& [p, e] : elementary_divisors({r.A, r.B.scaled(-1)}, q)) {
            if (p == FqPoly{0, 1}) {
                c.regular[ClosedPoint::at_infinity()].push_back(e);
                found += e;
            }
        }
    }
    if (found != reg) throw std::logic_error("decompose: regular part does not add up");
    for (auto& [x, part] : c.regular) std::sort(part.begin(), part.end(), std::greater<>());
    return c;
}

// ---------------------------------------------------------------- Hom, Ext

FqMatrix intertwiner_matrix(const Rep& x, const Rep& y) {
    const int x1 = x.dim.d1, x2 = x.dim.d2, y1 = y.dim.d1, y2 = y.dim.d2;
    const int off2 = y1 * x1;
    FqMatrix m(2 * y2 * x1, y1 * x1 + y2 * x2, x.q);
    for (int blk = 0; blk < 2; ++blk) {
        const FqMatrix& MY = blk == 0 ? y.A : y.B;
        const FqMatrix& MX = blk == 0 ? x.A : x.B;
        const int roff = blk * y2 * x1;
        for (int r = 0; r < y2; ++r)
            for (int c = 0; c < x1; ++c) {
                int row = roff + r * x1 + c;
                for (int i = 0; i < y1; ++i) m.set(row, i * x1 + c, MY(r, i));
                for (int j = 0; j < x2; ++j) m.set(row, off2 + r * x2 + j, -MX(j, c));
            }
    }
    return m;
}

int hom_dim(const Rep& x, const Rep& y) {
    FqMatrix m = intertwiner_matrix(x, y);
    return m.cols() - mat_rank(m);
}

int ext_dim(const Rep& x, const Rep& y) {
    FqMatrix m = intertwiner_matrix(x, y);
    return m.rows() - mat_rank(m);
}

int hom_dim(const IsoClass& x, const IsoClass& y, int q) { return hom_dim(canonical_rep(x, q), canonical_rep(y, q)); }

int ext_dim(const IsoClass& x, const IsoClass& y, int q) { return ext_dim(canonical_rep(x, q), canonical_rep(y, q)); }

BigInt aut_count_enumerated(const IsoClass& x, int q, int end_bound) {
    Rep r = canonical_rep(x, q);
    FqMatrix basis = mat_kernel(intertwiner_matrix(r, r));
    const int k = basis.rows();
    if (k > end_bound)
        throw BoundError("aut_count: dim End = " + std::to_string(k) + " exceeds the bound " + std::to_string(end_bound));
    const int n1 = r.dim.d1, n2 = r.dim.d2, nvars = basis.cols();
    std::vector<int> coeff(k, 0);
    BigInt count = 0;
    while (true) {
        std::vector<int> f(nvars, 0);
        for (int i = 0; i < k; ++i)
            if (coeff[i])
                for (int j = 0; j < nvars; ++j) f[j] = (f[j] + coeff[i] * basis(i, j)) % q;
        FqMatrix f1(n1, n1, q), f2(n2, n2, q);
        for (int i = 0; i < n1 * n1; ++i) f1.set(i / n1, i % n1, f[i]);
        for (int i = 0; i < n2 * n2; ++i) f2.set(i / n2, i % n2, f[n1 * n1 + i]);
        if (is_invertible(f1) && is_invertible(f2)) ++count;
        int i = 0;
        for (; i < k; ++i) {
            if (++coeff[i] < q) break;
            coeff[i] = 0;
        }
        if (i == k) break;
    }
    return count;
}

BigInt gl_order(int n, const BigInt& field_size) {
    BigInt qn = 1;
    for (int i = 0; i < n; ++i) qn *= field_size;
    BigInt r = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= field_size;
    }
    return r;
}

BigInt aut_count(const IsoClass& x, int q) {
    // (multiplicity, residue degree) per indecomposable summand type
    std::vector<std::pair<int, int>> types;
    for (const auto& [n, m] : x.prep) types.emplace_back(m, 1);
    for (const auto& [n, m] : x.preinj) types.emplace_back(m, 1);
    for (const auto& [pt, part] : x.regular)
        for (std::size_t i = 0; i < part.size();) {
            std::size_t j = i;
            while (j < part.size() && part[j] == part[i]) ++j;
            types.emplace_back(static_cast<int>(j - i), pt.degree());
            i = j;
        }
    int radical = hom_dim(x, x, q);
    BigInt result = 1;
    for (auto [m, d] : types) {
        radical -= m * m * d;
        BigInt field = 1;
        for (int i = 0; i < d; ++i) field *= q;
        result *= gl_order(m, field);
    }
    for (int i = 0; i < radical; ++i) result *= q;
    return result;
}

// ------------------------------------------------------------ subobjects

namespace {

std::vector<int> pivots_of_rref(const FqMatrix& m) {
    std::vector<int> piv;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) {
                piv.push_back(j);
                break;
            }
    return piv;
}

std::vector<int> complement_of(const std::vector<int>& piv, int n) {
    std::vector<int> out;
    std::size_t p = 0;
    for (int c = 0; c < n; ++c) {
        if (p < piv.size() && piv[p] == c) ++p;
        else out.push_back(c);
    }
    return out;
}

// Restriction of M : V -> W to U1 -> U2 and the induced map V/U1 -> W/U2.
void restrict_map(const FqMatrix& M, const FqMatrix& U1, const std::vector<int>& n1,
                  const FqMatrix& U2, const std::vector<int>& p2, const std::vector<int>& n2, FqMatrix& sub,
                  FqMatrix& quot) {
    const int q = M.q();
    const int z2 = M.rows();
    sub = FqMatrix(static_cast<int>(p2.size()), U1.rows(), q);
    quot = FqMatrix(static_cast<int>(n2.size()), static_cast<int>(n1.size()), q);
    std::vector<int> w(z2);
    for (int j = 0; j < U1.rows(); ++j) {
        for (int r = 0; r < z2; ++r) {
            long s = 0;
            for (int c = 0; c < M.cols(); ++c) s += M(r, c) * U1(j, c);
            w[r] = static_cast<int>(s % q);
        }
        for (std::size_t i = 0; i < p2.size(); ++i) sub.set(static_cast<int>(i), j, w[p2[i]]);
    }
    for (std::size_t j = 0; j < n1.size(); ++j) {
        for (int r = 0; r < z2; ++r) w[r] = M(r, n1[j]);
        for (std::size_t i = 0; i < p2.size(); ++i) {
            int f = w[p2[i]];
            if (f == 0) continue;
            const int* u = U2.row_ptr(static_cast<int>(i));
            for (int r = 0; r < z2; ++r) w[r] = mod_q(w[r] - f * u[r], q);
        }
        for (std::size_t i = 0; i < n2.size(); ++i) quot.set(static_cast<int>(i), static_cast<int>(j), w[n2[i]]);
    }
}

}  // namespace

void for_each_subrep(const Rep& r, DimVec d, const std::function<void(const SubRep&)>& fn) {
    const int q = r.q, z1 = r.dim.d1, z2 = r.dim.d2;
    if (!d.fits_in(r.dim) || d.d1 < 0 || d.d2 < 0) return;
    for_each_subspace(z1, d.d1, q, [&](const FqMatrix& U1) {
        // S = A U1 + B U1
        FqMatrix S(2 * U1.rows(), z2, q);
        FqMatrix AU = (r.A * U1.transpose()).transpose();
        FqMatrix BU = (r.B * U1.transpose()).transpose();
        S.put(0, 0, AU);
        S.put(U1.rows(), 0, BU);
        std::vector<int> ps = rref_in_place(S);
        const int s = static_cast<int>(ps.size());
        if (s > d.d2) return;
        std::vector<int> ns = complement_of(ps, z2);
        const std::vector<int> n1 = complement_of(pivots_of_rref(U1), z1);
        for_each_subspace(z2 - s, d.d2 - s, q, [&](const FqMatrix& T) {
            FqMatrix U2(d.d2, z2, q);
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < z2; ++j) U2.set(i, j, S(i, j));
            for (int i = 0; i < T.rows(); ++i)
                for (std::size_t j = 0; j < ns.size(); ++j) U2.set(s + i, ns[j], T(i, static_cast<int>(j)));
            std::vector<int> p2 = rref_in_place(U2);
            std::vector<int> n2 = complement_of(p2, z2);
            SubRep sr;
            sr.sub.dim = d;
            sr.sub.q = q;
            sr.quotient.dim = r.dim - d;
            sr.quotient.q = q;
            restrict_map(r.A, U1, n1, U2, p2, n2, sr.sub.A, sr.quotient.A);
            restrict_map(r.B, U1, n1, U2, p2, n2, sr.sub.B, sr.quotient.B);
            fn(sr);
        });
    });
}

long hall_number(const IsoClass& z, const IsoClass& x, const IsoClass& y, int q, int dim_bound) {
    DimVec dz = z.dim();
    if (dz != x.dim() + y.dim()) return 0;
    if (dz.total() > dim_bound)
        throw BoundError("hall_number: total dimension " + std::to_string(dz.total()) + " exceeds the bound " +
                         std::to_string(dim_bound));
    long count = 0;
    for_each_subrep(canonical_rep(z, q), y.dim(), [&](const SubRep& sr) {
        if (decompose(sr.sub) == y && decompose(sr.quotient) == x) ++count;
    });
    return count;
}

const std::map<std::pair<IsoClass, IsoClass>, long>& subobject_census(const IsoClass& z, int q) {
    static std::map<std::pair<IsoClass, int>, std::map<std::pair<IsoClass, IsoClass>, long>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({z, q}); it != cache.end()) return it->second;
    }
    std::map<std::pair<IsoClass, IsoClass>, long> census;
    Rep r = canonical_rep(z, q);
    DimVec dz = z.dim();
    for (int a = 0; a <= dz.d1; ++a)
        for (int b = 0; b <= dz.d2; ++b)
            for_each_subrep(r, {a, b}, [&](const SubRep& sr) { ++census[{decompose(sr.quotient), decompose(sr.sub)}]; });
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(z, q), std::move(census)).first->second;
}

namespace {

// number of d-dimensional subspaces of F_q^n
double grassmannian_size(int n, int d, int q) {
    double r = 1;
    for (int i = 0; i < d; ++i) r *= (std::pow(q, n - i) - 1) / (std::pow(q, i + 1) - 1);
    return r;
}

}  // namespace

const std::map<std::pair<IsoClass, IsoClass>, long>& subobject_slice(const IsoClass& z, DimVec d, int q) {
    using Key = std::tuple<IsoClass, DimVec, int>;
    static std::map<Key, std::map<std::pair<IsoClass, IsoClass>, long>> cache;
    static std::mutex mu;
    Key key{z, d, q};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::map<std::pair<IsoClass, IsoClass>, long> census;
    const DimVec dz = z.dim();
    if (d.fits_in(dz) && d.d1 >= 0 && d.d2 >= 0) {
        if (grassmannian_size(dz.d1, d.d1, q) * grassmannian_size(dz.d2, d.d2, q) > double(kMaxSliceSubspaces))
            throw BoundError("subobjects of dimension " + d.str() + " in " + z.str() + " exceed the enumeration bound");
        for_each_subrep(canonical_rep(z, q), d,
                        [&](const SubRep& sr) { ++census[{decompose(sr.quotient), decompose(sr.sub)}]; });
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(census)).first->second;
}

// ------------------------------------------------------------ enumeration

namespace {

void partitions_of(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

const std::vector<Partition>& partitions(int n) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Partition> out;
    Partition cur;
    partitions_of(n, n, cur, out);
    return cache[n] = std::move(out);
}

void regular_rec(const std::vector<ClosedPoint>& pts, std::size_t i, int remaining, IsoClass& cur,
                 std::vector<IsoClass>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (i == pts.size()) return;
    regular_rec(pts, i + 1, remaining, cur, out);
    const int d = pts[i].degree();
    for (int k = 1; k * d <= remaining; ++k)
        for (const auto& part : partitions(k)) {
            cur.regular[pts[i]] = part;
            regular_rec(pts, i + 1, remaining - k * d, cur, out);
            cur.regular.erase(pts[i]);
        }
}

struct Indec {
    bool is_prep;
    int n;
    DimVec dim;
};

void singular_rec(const std::vector<Indec>& ind, std::size_t i, DimVec remaining, IsoClass& cur,
                  std::vector<IsoClass>& out) {
    if (remaining.is_zero()) {
        out.push_back(cur);
        return;
    }
    if (i == ind.size()) return;
    singular_rec(ind, i + 1, remaining, cur, out);
    DimVec used = ind[i].dim;
    for (int m = 1; used.fits_in(remaining); ++m, used = used + ind[i].dim) {
        auto& slot = ind[i].is_prep ? cur.prep : cur.preinj;
        slot[ind[i].n] = m;
        singular_rec(ind, i + 1, remaining - used, cur, out);
        slot.erase(ind[i].n);
    }
}

}  // namespace

const std::vector<IsoClass>& regular_classes(int r, int q) {
    static std::map<std::pair<int, int>, std::vector<IsoClass>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({r, q}); it != cache.end()) return it->second;
    }
    std::vector<ClosedPoint> pts;
    for (int d = 1; d <= r; ++d)
        for (auto& x : closed_points(d, q)) pts.push_back(x);
    std::vector<IsoClass> out;
    IsoClass cur;
    regular_rec(pts, 0, r, cur, out);
    std::sort(out.begin(), out.end());
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(r, q), std::move(out)).first->second;
}

std::vector<IsoClass> enumerate_iso_classes(DimVec d, int q) {
    std::vector<Indec> ind;
    for (int n = 0; n <= d.d1 && n + 1 <= d.d2; ++n) ind.push_back({true, n, {n, n + 1}});
    for (int n = 0; n + 1 <= d.d1 && n <= d.d2; ++n) ind.push_back({false, n, {n + 1, n}});
    std::vector<IsoClass> out;
    for (int r = 0; r <= std::min(d.d1, d.d2); ++r) {
        std::vector<IsoClass> sing;
        IsoClass cur;
        singular_rec(ind, 0, {d.d1 - r, d.d2 - r}, cur, sing);
        for (const auto& reg : regular_classes(r, q))
            for (const auto& s : sing) {
                IsoClass c = s;
                c.regular = reg.regular;
                out.push_back(std::move(c));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_rep(DimVec d, int q, const std::function<void(const Rep&)>& fn) {
    const int n = d.d1 * d.d2;
    Rep r = Rep::zero(d, q);
    std::vector<int> digits(2 * n, 0);
    while (true) {
        fn(r);
        int i = 0;
        for (; i < 2 * n; ++i) {
            FqMatrix& M = i < n ? r.A : r.B;
            int k = i % n;
            if (++digits[i] < q) {
                M.set(k / d.d1, k % d.d1, digits[i]);
                break;
            }
            digits[i] = 0;
            M.set(k / d.d1, k % d.d1, 0);
        }
        if (i == 2 * n) break;
    }
}

}  // namespace kronhall
