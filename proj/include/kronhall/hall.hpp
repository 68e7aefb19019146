#pragma once

// The extended twisted Hall algebra of Kronecker representations over
// Q[sqrt q], its coproduct and Green pairing, and the reduced Drinfeld double
// in triangular form [X]+ K [Y]-.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "kronhall/kronrep.hpp"
#include "kronhall/scalars.hpp"

namespace kronhall {

void to_json(nlohmann::json& j, const ScalarQ& s);
void from_json(const nlohmann::json& j, ScalarQ& s);

/// Element of the K-group tensored with (1/2)Z along the null root (1,1),
/// stored with doubled coordinates so that K_{(1,1)/2} is representable.
struct KHalf {
    int h1 = 0;
    int h2 = 0;

    static KHalf of(const KClass& c) { return {2 * c.a1, 2 * c.a2}; }
    static KHalf doubled(int h1, int h2);
    static KHalf half_delta() { return {1, 1}; }

    KHalf operator+(const KHalf& o) const { return {h1 + o.h1, h2 + o.h2}; }
    KHalf operator-(const KHalf& o) const { return {h1 - o.h1, h2 - o.h2}; }
    KHalf operator-() const { return {-h1, -h2}; }
    KHalf operator*(int k) const { return {k * h1, k * h2}; }
    bool is_zero() const { return h1 == 0 && h2 == 0; }
    std::string str() const;
    friend bool operator==(const KHalf&, const KHalf&) = default;
    friend auto operator<=>(const KHalf&, const KHalf&) = default;
};

/// Symmetric form extended to half classes; always an integer here.
int sym_pair(const KHalf& a, const KHalf& b);
int sym_pair(const KHalf& a, const KClass& b);

ScalarQ vpow(int e, int q);

/// Finite combination of [X] K_alpha with coefficients in Q[sqrt q].
class HallElement {
public:
    using Key = std::pair<IsoClass, KHalf>;

    explicit HallElement(int q = 2) : q_(q) {}
    static HallElement basis(const IsoClass& x, int q, const KHalf& k = {});
    static HallElement K(const KHalf& k, int q) { return basis(IsoClass{}, q, k); }
    static HallElement one(int q) { return basis(IsoClass{}, q); }

    int q() const { return q_; }
    const std::map<Key, ScalarQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    ScalarQ coeff(const IsoClass& x, const KHalf& k = {}) const;
    void add(const IsoClass& x, const KHalf& k, const ScalarQ& c);

    HallElement& operator+=(const HallElement& o);
    HallElement& operator-=(const HallElement& o);
    HallElement& operator*=(const ScalarQ& c);
    friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
    friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
    friend HallElement operator*(HallElement a, const ScalarQ& c) { return a *= c; }
    friend HallElement operator*(const ScalarQ& c, HallElement a) { return a *= c; }
    friend bool operator==(const HallElement& a, const HallElement& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    int q_;
    std::map<Key, ScalarQ> terms_;
};

void to_json(nlohmann::json& j, const HallElement& h);
void from_json(const nlohmann::json& j, HallElement& h);

BigInt aut_cached(const IsoClass& x, int q);

/// sum_Z F^Z_{X,Y} [Z] for single classes (no twist), cached. Uses an
/// extension enumeration or a subobject count, whichever is cheaper.
const std::vector<std::pair<IsoClass, BigInt>>& hall_product_terms(const IsoClass& x, const IsoClass& y, int q);
/// The same sum, always by enumerating Ext^1(X, Y).
std::vector<std::pair<IsoClass, BigInt>> hall_product_by_extensions(const IsoClass& x, const IsoClass& y, int q);
/// The same sum, always by counting subobjects of every Z.
std::vector<std::pair<IsoClass, BigInt>> hall_product_by_subobjects(const IsoClass& x, const IsoClass& y, int q);

HallElement hall_mul(const HallElement& a, const HallElement& b);
HallElement hall_pow(const HallElement& a, int n);

/// One term v^{-<X,Y>} P^Z_{X,Y}/a_Z [X] (x) [Y] of Delta([Z]); X is the
/// quotient, Y the sub.
struct CoproductTerm {
    IsoClass quotient;
    IsoClass sub;
    ScalarQ coeff;
};
const std::vector<CoproductTerm>& coproduct_terms(const IsoClass& z, int q);
/// The terms of Delta([Z]) whose sub has dimension d.
const std::vector<CoproductTerm>& coproduct_slice(const IsoClass& z, DimVec d, int q);

/// sum c [X]K_a (x) [Y]K_b
using HallTensor = std::map<std::tuple<IsoClass, KHalf, IsoClass, KHalf>, ScalarQ>;
HallTensor hall_coproduct(const HallElement& a);

ScalarQ green_pair(const HallElement& a, const HallElement& b);
/// (a (x) b, t) = sum (a, t1)(b, t2)
ScalarQ green_pair_tensor(const HallElement& a, const HallElement& b, const HallTensor& t);

HallElement divided_power(const IsoClass& x, int n, int q);
HallElement one_alpha(const DimVec& d, int q);
HallElement tube_one(int r, int q);

/// Triangular element sum c [X]+ K_alpha [Y]- of the reduced double.
class DoubleElement {
public:
    struct Key {
        IsoClass plus;
        KHalf k;
        IsoClass minus;
        friend bool operator==(const Key&, const Key&) = default;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    explicit DoubleElement(int q = 2) : q_(q) {}
    static DoubleElement term(const IsoClass& plus, const KHalf& k, const IsoClass& minus, int q,
                              const ScalarQ& c);
    static DoubleElement one(int q) { return K({}, q); }
    static DoubleElement K(const KHalf& k, int q);
    /// [X]K_a |-> [X]+ K_a
    static DoubleElement plus(const HallElement& h);
    /// [X]K_a |-> [X]- K_{-a}, written in triangular form.
    static DoubleElement minus(const HallElement& h);

    int q() const { return q_; }
    const std::map<Key, ScalarQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Key& k, const ScalarQ& c);

    DoubleElement& operator+=(const DoubleElement& o);
    DoubleElement& operator-=(const DoubleElement& o);
    DoubleElement& operator*=(const ScalarQ& c);
    friend DoubleElement operator+(DoubleElement a, const DoubleElement& b) { return a += b; }
    friend DoubleElement operator-(DoubleElement a, const DoubleElement& b) { return a -= b; }
    friend DoubleElement operator*(DoubleElement a, const ScalarQ& c) { return a *= c; }
    friend DoubleElement operator*(const ScalarQ& c, DoubleElement a) { return a *= c; }
    friend bool operator==(const DoubleElement& a, const DoubleElement& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    int q_;
    std::map<Key, ScalarQ> terms_;
};

void to_json(nlohmann::json& j, const DoubleElement& d);
void from_json(const nlohmann::json& j, DoubleElement& d);

/// Triangular form of [Y]- [X]+, derived from the double relation D([Y],[X]).
const DoubleElement& straighten(const IsoClass& y, const IsoClass& x, int q);
DoubleElement dmul(const DoubleElement& a, const DoubleElement& b);
DoubleElement dbracket(const DoubleElement& a, const DoubleElement& b);
DoubleElement dpow(const DoubleElement& a, int n);

/// Cap on q^{dim Ext^1} for the extension enumeration in products.
constexpr long kMaxExtensionCount = 1L << 22;

}  // namespace kronhall
