#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "kronhall/fq.hpp"

using namespace kronhall;

namespace {

FqMatrix random_matrix(int r, int c, int q, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, q - 1);
    FqMatrix m(r, c, q);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, d(rng));
    return m;
}

}  // namespace

TEST_CASE("rank and kernel examples") {
    CHECK(mat_rank(FqMatrix::identity(3, 2)) == 3);
    CHECK(mat_rank(FqMatrix(2, 2, 2)) == 0);
    auto ones = FqMatrix::from_rows({{1, 1}, {1, 1}}, 2, 2);
    CHECK(mat_kernel(ones).rows() == 1);
    CHECK(!mat_solve(ones, {0, 1}).has_value());
    auto x = mat_solve(ones, {1, 1});
    REQUIRE(x.has_value());
}

TEST_CASE("rank-nullity and kernel correctness on random matrices") {
    std::mt19937 rng(3);
    for (int q : {2, 3, 5}) {
        for (int t = 0; t < 50; ++t) {
            int r = 1 + rng() % 5, c = 1 + rng() % 5;
            FqMatrix m = random_matrix(r, c, q, rng);
            FqMatrix k = mat_kernel(m);
            CHECK(mat_rank(m) + k.rows() == c);
            CHECK((m * k.transpose()).is_zero());
            CHECK(mat_rank(k) == k.rows());
            std::vector<int> x0(c);
            for (auto& v : x0) v = rng() % q;
            std::vector<int> b(r, 0);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) b[i] = (b[i] + m(i, j) * x0[j]) % q;
            auto x = mat_solve(m, b);
            REQUIRE(x.has_value());
            for (int i = 0; i < r; ++i) {
                long s = 0;
                for (int j = 0; j < c; ++j) s += m(i, j) * (*x)[j];
                CHECK(s % q == b[i]);
            }
        }
    }
}

TEST_CASE("subspace enumeration") {
    CHECK(enumerate_subspaces(2, 1, 2).size() == 3);
    CHECK(enumerate_subspaces(3, 0, 2).size() == 1);
    CHECK(enumerate_subspaces(2, 1, 3).size() == 4);
    for (int q : {2, 3}) {
        for (int n = 0; n <= 4; ++n) {
            for (int k = 0; k <= n; ++k) {
                // product formula, independent of the library routine
                long num = 1, den = 1, qn = 1, qk = 1;
                for (int i = 0; i < n; ++i) qn *= q;
                long expected = 1;
                {
                    long qi = 1;
                    for (int i = 0; i < k; ++i) {
                        long a = qn / qi - 1;
                        qk = 1;
                        for (int j = 0; j <= i; ++j) qk *= q;
                        num *= a;
                        den *= qk - 1;
                        qi *= q;
                    }
                    expected = num / den;
                }
                std::set<FqMatrix> seen;
                for_each_subspace(n, k, q, [&](const FqMatrix& m) {
                    CHECK(mat_rank(m) == k);
                    CHECK(rref(m) == m);
                    seen.insert(m);
                });
                CHECK(static_cast<long>(seen.size()) == expected);
                CHECK(gaussian_binomial(n, k, q) == expected);
            }
        }
    }
}

TEST_CASE("irreducibles and point census") {
    CHECK(irreducibles(1, 2) == std::vector<FqPoly>{{0, 1}, {1, 1}});
    CHECK(irreducibles(2, 2) == std::vector<FqPoly>{{1, 1, 1}});
    CHECK(irreducibles(3, 2).size() == 2);
    CHECK(point_census(1, 2) == 3);
    CHECK(point_census(1, 3) == 4);
    CHECK(point_census(2, 2) == 1);
    for (int q : {2, 3, 5}) {
        for (int n = 1; n <= 4; ++n) {
            long total = 0;
            for (int d = 1; d <= n; ++d)
                if (n % d == 0) total += d * point_census(d, q);
            long qn = 1;
            for (int i = 0; i < n; ++i) qn *= q;
            CHECK(total == qn + 1);
        }
        for (int d = 2; d <= 3; ++d)
            for (const auto& p : irreducibles(d, q)) {
                CHECK(p.back() == 1);
                for (int x = 0; x < q; ++x) {
                    long s = 0, xp = 1;
                    for (int c : p) {
                        s += c * xp;
                        xp *= x;
                    }
                    CHECK(s % q != 0);
                }
            }
    }
}

TEST_CASE("closed point ordering and text form") {
    auto pts = closed_points(1, 2);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].infinity);
    CHECK(pts[0] < pts[1]);
    CHECK(pts[1].str() == "[0,1]");
    CHECK(ClosedPoint::parse("[1,1]") == pts[2]);
    CHECK(ClosedPoint::parse("inf") == pts[0]);
}

TEST_CASE("elementary divisors of yI - C") {
    int q = 3;
    // p = (y+1)^2 (y^2+1): companion gives divisors (y+1)^2 and y^2+1
    FqPoly a{1, 1}, b{1, 0, 1};
    FqPoly p = poly_mul(poly_pow(a, 2, q), b, q);
    FqMatrix c = companion(p, q);
    auto ed = elementary_divisors({c.scaled(-1), FqMatrix::identity(4, q)}, q);
    std::multiset<std::pair<FqPoly, int>> got(ed.begin(), ed.end());
    std::multiset<std::pair<FqPoly, int>> want{{a, 2}, {b, 1}};
    CHECK(got == want);
}
