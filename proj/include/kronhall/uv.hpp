#pragma once

// Symbolic presentations over Q(v): the Drinfeld-Jimbo algebra of affine sl2,
// its loop realization with a rewriting system to PBW normal form, the
// Drinfeld-Beck map between them, Lusztig symmetries, Coxeter automorphisms,
// and evaluation into the Kronecker double.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kronhall/hall.hpp"
#include "kronhall/p1.hpp"
#include "kronhall/scalars.hpp"

namespace kronhall {

enum class Presentation { DJ, Loop };

/// E1..K2 are DJ letters, the rest loop letters. `i` is the loop index for
/// Xp/Xm/H, the exponent for K1/K2/K, and twice the exponent for C.
enum class Sym { E1, E2, F1, F2, K1, K2, Xp, Xm, H, K, C };

struct Letter {
    Sym s;
    int i = 0;
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

bool is_dj_letter(Sym s);
std::string letter_str(const Letter& l);
std::string word_str(const Word& w);

class PresTerm {
public:
    explicit PresTerm(Presentation p = Presentation::DJ) : pres_(p) {}
    static PresTerm scalar(const RatFun& c, Presentation p);
    static PresTerm word(const Word& w, const RatFun& c = RatFun(1));
    static PresTerm letter(Sym s, int i = 0) { return word({{s, i}}); }

    Presentation presentation() const { return pres_; }
    const std::map<Word, RatFun>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Word& w, const RatFun& c);

    PresTerm& operator+=(const PresTerm& o);
    PresTerm& operator-=(const PresTerm& o);
    PresTerm& operator*=(const RatFun& c);
    friend PresTerm operator+(PresTerm a, const PresTerm& b) { return a += b; }
    friend PresTerm operator-(PresTerm a, const PresTerm& b) { return a -= b; }
    friend PresTerm operator*(PresTerm a, const RatFun& c) { return a *= c; }
    friend PresTerm operator*(const RatFun& c, PresTerm a) { return a *= c; }
    friend PresTerm operator*(const PresTerm& a, const PresTerm& b);
    friend bool operator==(const PresTerm&, const PresTerm&) = default;

    PresTerm pow(int n) const;
    std::string str() const;

private:
    void check(const Word& w) const;
    Presentation pres_;
    std::map<Word, RatFun> terms_;
};

PresTerm commutator(const PresTerm& a, const PresTerm& b);
/// a^n / [n]!
PresTerm divided_power(const PresTerm& a, int n);

/// Parses `E1 F2 K1^-1`, `X[3]+ H[-2] C^{1/2}`, `E1^(3)`; sums of monomials
/// separated by standalone `+`/`-`, optional leading coefficient such as
/// `3`, `v^-2`, `1/2`.
PresTerm parse_term(const std::string& text);

// ---- loop rewriting ----

/// Relation (7) at m + n = 0: as printed gives v/(v-v^{-1})(C^m - C^{-m});
/// the version compatible with the Kronecker double carries K^{+-1}.
enum class DiagonalRule { AsStated, WithK };
enum class RewriteStrategy { Leftmost, Rightmost };

struct RewriteConfig {
    int max_length = 14;
    int index_window = 16;
    long max_steps = 4'000'000;
    DiagonalRule diagonal = DiagonalRule::WithK;
    RewriteStrategy strategy = RewriteStrategy::Leftmost;
};

/// Combination of ordered monomials X+ (n descending), H_{r>0}, K^a C^{b/2},
/// X- (n descending), H_{r<0}. Powers are kept as repeated letters.
struct LoopNormalForm {
    PresTerm term{Presentation::Loop};
    bool is_zero() const { return term.is_zero(); }
    std::string str() const { return term.str(); }
    friend bool operator==(const LoopNormalForm&, const LoopNormalForm&) = default;
};

bool is_normal_word(const Word& w);
/// Throws BoundError naming the offending word when a bound is exceeded.
LoopNormalForm loop_normal_form(const PresTerm& t, const RewriteConfig& cfg = {});

/// Psi^+_r (r > 0) or Psi^-_r (r < 0) as a polynomial in H.
PresTerm psi_elem(int r);
/// 1 + sum P_r C^{-r/2} t^r = exp(sum Psi_r/[r] t^r) as printed, or with
/// H_r in place of Psi_r (the version whose image is 1_(0,r)).
enum class PSeries { Psi, H };
PresTerm P_elem(int r, PSeries series = PSeries::Psi);

struct IntegralityReport {
    bool integral = true;
    std::vector<std::pair<std::string, std::string>> offending;  // monomial, coefficient
};
/// Coefficients in the basis of divided powers X^{(m)} and H monomials must
/// be Laurent polynomials.
IntegralityReport is_integral(const PresTerm& t, const RewriteConfig& cfg = {});

// ---- maps between presentations ----

/// The printed Drinfeld-Beck table, or the one with the K-twists of E1, F1
/// exchanged (E1 -> v^{-1} X1- K^{-1} C, F1 -> v^{-1} X-1+ K C^{-1}).
enum class GTable { AsStated, SwappedTwists };
PresTerm map_G(const PresTerm& t, GTable table = GTable::AsStated);

enum class Sign { Plus, Minus };
/// Corrected weights the S+ images of E1, F1 by v^{-a} instead of v^{-b}, so
/// that E1 goes to [I1]+, and uses E2 -> v F1 K1, F2 -> v E1 K1^{-1} for S+,
/// E1 -> v^{-1} F2 K2^{-1}, F1 -> v^{-1} E2 K2 for S-.
enum class STable { AsStated, Corrected };
PresTerm lusztig_S(const PresTerm& t, Sign s, STable table = STable::AsStated);
/// S applied twice with the same sign.
PresTerm coxeter_A(const PresTerm& t, Sign s, STable table = STable::AsStated);
/// X_n^{+-} -> X_{n-+2}^{+-}, K -> K C^{-2}; Minus is the inverse.
PresTerm loop_coxeter_A(const PresTerm& t, Sign s);

struct NamedTerm {
    std::string name;
    PresTerm term;
};
std::vector<NamedTerm> dj_generators();
/// Centrality of Z+-, K-inverses, K-E/F commutations, [E_i,F_j], both Serre.
std::vector<NamedTerm> dj_relators();

struct HomVerdict {
    std::string relator;
    LoopNormalForm normal_form;
    bool holds = false;
    std::string error;  // nonempty on bound exhaustion
};
std::vector<HomVerdict> verify_hom(const std::vector<NamedTerm>& relators, GTable table,
                                   const RewriteConfig& cfg = {});
nlohmann::json to_json(const HomVerdict& h);

// ---- evaluation ----

/// E_i -> [S_i]+, F_i -> [S_i]-, K_i -> K_{S_i}; X_n+ -> L_n+, X_n- -> L_{-n}-,
/// H_r -> T~_r+ (r > 0), -T~_{-r}- (r < 0), K -> K_(1,0), C^{1/2} -> C^{1/2}.
DoubleElement ev_q(const PresTerm& t, int q);

/// ev_q(S^n(t)) computed letter by letter from the images of the generators,
/// without expanding S^n(t) into words.
DoubleElement ev_lusztig_power(const PresTerm& t, Sign s, int n, int q, STable table = STable::AsStated);

/// Rank over Q[sqrt q] of a family of double elements.
int double_rank(const std::vector<DoubleElement>& xs);

/// Normal monomials sorted by size: letter count, index weight, K/C weight.
std::vector<Word> small_normal_monomials(int count);

}  // namespace kronhall
