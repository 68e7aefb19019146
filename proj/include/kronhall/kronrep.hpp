#pragma once

// Representations of the Kronecker quiver 1 => 2 over F_q: canonical models,
// isomorphism classes via pencil invariants, Hom/Ext/Aut counts, Hall numbers.

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kronhall/fq.hpp"
#include "kronhall/scalars.hpp"

namespace kronhall {

class BoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DimVec {
    int d1 = 0;
    int d2 = 0;
    DimVec operator+(const DimVec& o) const { return {d1 + o.d1, d2 + o.d2}; }
    DimVec operator-(const DimVec& o) const { return {d1 - o.d1, d2 - o.d2}; }
    bool fits_in(const DimVec& o) const { return d1 <= o.d1 && d2 <= o.d2; }
    bool is_zero() const { return d1 == 0 && d2 == 0; }
    int total() const { return d1 + d2; }
    friend bool operator==(const DimVec&, const DimVec&) = default;
    friend auto operator<=>(const DimVec&, const DimVec&) = default;
    std::string str() const { return "(" + std::to_string(d1) + "," + std::to_string(d2) + ")"; }
};

/// Class in the Grothendieck group, coordinates in the basis of the simples.
struct KClass {
    int a1 = 0;
    int a2 = 0;
    KClass() = default;
    KClass(int x, int y) : a1(x), a2(y) {}
    KClass(const DimVec& d) : a1(d.d1), a2(d.d2) {}  // NOLINT(google-explicit-constructor)
    KClass operator+(const KClass& o) const { return {a1 + o.a1, a2 + o.a2}; }
    KClass operator-(const KClass& o) const { return {a1 - o.a1, a2 - o.a2}; }
    KClass operator-() const { return {-a1, -a2}; }
    KClass operator*(int k) const { return {k * a1, k * a2}; }
    bool is_zero() const { return a1 == 0 && a2 == 0; }
    friend bool operator==(const KClass&, const KClass&) = default;
    friend auto operator<=>(const KClass&, const KClass&) = default;
};

int euler_form(const KClass& a, const KClass& b);
int sym_form(const KClass& a, const KClass& b);

using Partition = std::vector<int>;  // descending, positive parts

/// Isomorphism class: multiplicities of preprojectives P_n, preinjectives I_n
/// and a partition per closed point for the tube part.
struct IsoClass {
    std::map<int, int> prep;
    std::map<int, int> preinj;
    std::map<ClosedPoint, Partition> regular;

    static IsoClass P(int n, int mult = 1);
    static IsoClass I(int n, int mult = 1);
    static IsoClass S1() { return I(0); }
    static IsoClass S2() { return P(0); }
    static IsoClass tube(const ClosedPoint& x, int t);
    static IsoClass direct_sum(const IsoClass& a, const IsoClass& b);
    IsoClass power(int n) const;

    DimVec dim() const;
    KClass kclass() const { return KClass(dim()); }
    bool is_zero() const { return prep.empty() && preinj.empty() && regular.empty(); }
    bool is_regular() const { return prep.empty() && preinj.empty(); }
    bool is_indecomposable() const;

    /// e.g. "P0+I1^2+T2@[0,1]"; the zero class renders as "0".
    std::string str() const;
    /// Accepts the str() format plus S1, S2, joined by '+'.
    static IsoClass parse(const std::string& s);

    friend bool operator==(const IsoClass&, const IsoClass&) = default;
    friend std::strong_ordering operator<=>(const IsoClass& a, const IsoClass& b);
};

void to_json(nlohmann::json& j, const IsoClass& c);
void from_json(const nlohmann::json& j, IsoClass& c);

/// Arrow maps A, B : V -> W, each of shape d2 x d1.
struct Rep {
    DimVec dim;
    FqMatrix A;
    FqMatrix B;
    int q = 2;

    static Rep zero(DimVec d, int q);
    static Rep direct_sum(const Rep& x, const Rep& y);
};

Rep canonical_rep(const IsoClass& c, int q);
IsoClass decompose(const Rep& r);

/// Matrix of (f1, f2) |-> (A_Y f1 - f2 A_X, B_Y f1 - f2 B_X); its kernel is
/// Hom(X, Y), its cokernel Ext^1(X, Y). Unknowns: f1 row-major, then f2.
FqMatrix intertwiner_matrix(const Rep& x, const Rep& y);
int hom_dim(const Rep& x, const Rep& y);
int ext_dim(const Rep& x, const Rep& y);
int hom_dim(const IsoClass& x, const IsoClass& y, int q);
int ext_dim(const IsoClass& x, const IsoClass& y, int q);

constexpr int kDefaultEndBound = 9;
/// |Aut X| by enumerating all of End X; throws BoundError when dim End X
/// exceeds end_bound.
BigInt aut_count_enumerated(const IsoClass& x, int q, int end_bound = kDefaultEndBound);
/// |Aut X| from the Krull-Schmidt structure of End X.
BigInt aut_count(const IsoClass& x, int q);
BigInt gl_order(int n, const BigInt& field_size);

struct SubRep {
    Rep sub;
    Rep quotient;
};

/// Calls fn for every subrepresentation of r with dimension vector d.
void for_each_subrep(const Rep& r, DimVec d, const std::function<void(const SubRep&)>& fn);

constexpr int kDefaultHallDimBound = 12;
/// F^Z_{X,Y}: number of subrepresentations U of Z with U = Y and Z/U = X.
long hall_number(const IsoClass& z, const IsoClass& x, const IsoClass& y, int q, int dim_bound = kDefaultHallDimBound);

/// All (quotient, sub) class pairs over all subrepresentations of Z, with
/// multiplicities. Cached per (Z, q).
const std::map<std::pair<IsoClass, IsoClass>, long>& subobject_census(const IsoClass& z, int q);
/// The same, restricted to subrepresentations of dimension d. Throws
/// BoundError when the Grassmannians involved exceed kMaxSliceSubspaces.
const std::map<std::pair<IsoClass, IsoClass>, long>& subobject_slice(const IsoClass& z, DimVec d, int q);
constexpr long kMaxSliceSubspaces = 1L << 20;

/// The regular classes of total degree r (partitions per closed point).
const std::vector<IsoClass>& regular_classes(int r, int q);
std::vector<IsoClass> enumerate_iso_classes(DimVec d, int q);

/// Every representation of dimension d (q^{2 d1 d2} of them).
void for_each_rep(DimVec d, int q, const std::function<void(const Rep&)>& fn);

}  // namespace kronhall
