#pragma once

// Coherent sheaves on P^1 seen through the derived equivalence with Kronecker
// representations: K-group bookkeeping with C^{1/2}, transport of line bundles
// and torsion sheaves, the torsion generators 1_(0,r), T_r, Theta_r and the
// checks relating them to the Kronecker double.

#include <map>
#include <string>
#include <vector>

#include "kronhall/hall.hpp"

namespace kronhall {

enum class Wing { Plus, Minus };

/// (rank, degree) with the degree doubled so that C^{1/2} = (0, 1/2) fits.
struct P1Class {
    int rank = 0;
    int deg2 = 0;

    static P1Class of(int rank, int deg) { return {rank, 2 * deg}; }
    static P1Class C_half() { return {0, 1}; }
    bool is_sheaf_class() const { return deg2 % 2 == 0; }

    P1Class operator+(const P1Class& o) const { return {rank + o.rank, deg2 + o.deg2}; }
    P1Class operator-(const P1Class& o) const { return {rank - o.rank, deg2 - o.deg2}; }
    P1Class operator-() const { return {-rank, -deg2}; }
    P1Class operator*(int k) const { return {k * rank, k * deg2}; }
    std::string str() const;
    friend bool operator==(const P1Class&, const P1Class&) = default;
    friend auto operator<=>(const P1Class&, const P1Class&) = default;
};

/// Class of the image on the Kronecker side: (r, d) |-> (d, r + d).
KHalf transport_class(const P1Class& c);
/// Euler form rk1 rk2 + rk1 d2 - rk2 d1 on sheaf classes.
int p1_euler(const P1Class& a, const P1Class& b);

/// Direct sum of line bundles O(n) and torsion sheaves S_{t,x}.
struct SheafDescriptor {
    std::vector<int> line_bundles;  // sorted
    std::map<ClosedPoint, Partition> torsion;

    static SheafDescriptor line_bundle(int n);
    static SheafDescriptor torsion_sheaf(const ClosedPoint& x, int t);
    static SheafDescriptor direct_sum(const SheafDescriptor& a, const SheafDescriptor& b);
    P1Class kclass() const;
    std::string str() const;
};

/// F(S) = X[-shift]. For shift 1, [S]^- |-> v^{v_exponent} [X]^+ K_twist and
/// [S]^+ |-> v^{v_exponent} [X]^- K_{-twist}.
struct Transported {
    IsoClass object;
    int shift = 0;
    KHalf twist;
    int v_exponent = 0;
};
/// Throws std::invalid_argument when the summands land in different shifts.
Transported obj_transport(const SheafDescriptor& s);

/// Image of [S]^{+-} in the Kronecker double.
DoubleElement transport_element(const SheafDescriptor& s, Wing w, int q);
DoubleElement L(int n, Wing w, int q);
DoubleElement K_p1(const P1Class& c, int q);

HallElement one_tor(int r, int q);
/// From 1 + sum 1_(0,r) t^r = exp(sum T_r/[r] t^r).
const HallElement& T_elem(int r, int q);
/// From 1 + sum Theta_r t^r = exp((v^{-1} - v) sum T_r t^r).
const HallElement& Theta_elem(int r, int q);
/// T_r^{+-} C^{-+r/2} and Theta_r^{+-} C^{-+r/2}.
DoubleElement T_tilde(int r, Wing w, int q);
DoubleElement Theta_tilde(int r, Wing w, int q);
DoubleElement T_double(int r, Wing w, int q);

/// v^{-r} sum over distinct points x_i and t_i with sum t_i deg x_i = r of
/// prod (1 - v^{2 deg x_i}) [S_{t_i,x_i}], evaluated directly on points.
HallElement theta_census(int r, int q);

/// Degree-r part of Delta([O(n)]) read off from the nonzero binary forms of
/// degree r: coefficient of [T] K_(1,n-r) (x) [O(n-r)].
HallElement lb_coproduct_census(int n, int r, int q);
struct LbCoproductCheck {
    int r = 0;
    bool holds = false;
    HallElement census;
    HallElement theta;
};
std::vector<LbCoproductCheck> lb_coproduct_check(int n, int rmax, int q);

/// [I_m][P_n] - v^2 [P_n][I_m]
HallElement szanto_lhs(int m, int n, int q);
HallElement szanto_rhs(int m, int n, int q);
bool szanto_check(int m, int n, int q);

struct RelationCheck {
    std::string name;
    bool holds = false;
    bool in_double = false;  // relation of the reduced double rather than of H(P^1)
};
/// The defining relations between L_n, T_r, K, C and their double versions,
/// for n, m in [nmin, nmax] and r, s <= rmax.
std::vector<RelationCheck> p1_relation_checks(int nmin, int nmax, int rmax, int q);

}  // namespace kronhall
