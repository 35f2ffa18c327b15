#ifndef KOSZUL_EXTERIOR_HPP
#define KOSZUL_EXTERIOR_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "koszul/ring.hpp"
#include "koszul/scalars.hpp"

namespace koszul {

/// Strictly increasing list of generator indices (0-based).
using IndexSet = std::vector<int>;

class ChainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// (-1)^{#{(a,b) in A x B : a > b}}, so that e_A e_B = sign(A,B) e_{A u B}.
int sign(const IndexSet& a, const IndexSet& b);

IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
bool is_subset(const IndexSet& sub, const IndexSet& super);
/// All size-k subsets of {0, ..., r-1} in lexicographic order.
std::vector<IndexSet> subsets_of_size(int r, int k);

using IdealPtr = std::shared_ptr<const MonomialIdeal>;

/// Ordering of chain terms: index sets lexicographically, then the
/// coefficient monomial largest-first.
struct TermKeyLess {
    bool operator()(const std::pair<IndexSet, Monomial>& a, const std::pair<IndexSet, Monomial>& b) const;
};

/// Element of K_t(I, S) = wedge^t F (x) S, stored sparsely as
/// sum coeff * e_T (x) w. Zero coefficients are never stored.
class KoszulChain {
public:
    using Key = std::pair<IndexSet, Monomial>;
    using Terms = std::map<Key, Rational, TermKeyLess>;

    KoszulChain(IdealPtr ideal, int t);

    /// coeff * e_T (x) w.
    static KoszulChain basis(IdealPtr ideal, IndexSet set, Monomial w, Rational coeff = Rational(1));
    /// coeff * [v_1, ..., v_t] * w with v_i generator monomials given in any
    /// order; the zero chain when two coincide.
    static KoszulChain bracket(IdealPtr ideal, const std::vector<Monomial>& gens, Monomial w,
                               Rational coeff = Rational(1));

    const MonomialIdeal& ideal() const { return *ideal_; }
    const IdealPtr& ideal_ptr() const { return ideal_; }
    int degree() const { return t_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const IndexSet& set, const Monomial& w, const Rational& coeff);
    Rational coefficient(const IndexSet& set, const Monomial& w) const;

    KoszulChain& operator+=(const KoszulChain& other);
    KoszulChain& operator-=(const KoszulChain& other);
    KoszulChain operator+(const KoszulChain& other) const;
    KoszulChain operator-(const KoszulChain& other) const;
    KoszulChain operator*(const Rational& scalar) const;
    /// Multiplication by a ring monomial.
    KoszulChain times(const Monomial& m) const;

    /// w * prod_{i in T} u_i of a term.
    Monomial term_degree(const Key& key) const;
    /// The common fine degree of all terms, if the chain is homogeneous and
    /// nonzero.
    std::optional<Monomial> fine_degree() const;
    bool is_homogeneous() const;

    /// "coeff * [u_i1,...,u_it] * w" per term, joined by " + ".
    std::string render() const;

    bool operator==(const KoszulChain& other) const;

private:
    void check_compatible(const KoszulChain& other) const;

    IdealPtr ideal_;
    int t_;
    Terms terms_;
};

/// Koszul differential: e_T (x) w -> sum_k (-1)^{k-1} e_{T \ i_k} (x) u_{i_k} w.
KoszulChain boundary(const KoszulChain& f);

/// Exterior-algebra product a.f, extended bilinearly from
/// e_A v . e_B w = sign(A,B) e_{A u B} vw.
KoszulChain wedge(const KoszulChain& a, const KoszulChain& f);

struct Decomposition {
    KoszulChain a;
    KoszulChain b;
};

/// The unique f = a + e_I . b with no e_J (J containing I) in a and no e_S
/// (S meeting I) in b.
Decomposition decompose(const KoszulChain& f, const IndexSet& set);

/// Formal sum of e_I (x) b_I, an element of K_s(I, K_t(I, S)).
using GammaImage = std::map<IndexSet, KoszulChain>;

/// sum over |I| = s of e_I (x) b_I; zero b_I are omitted.
GammaImage gamma_map(const KoszulChain& f, int s);
/// sum e_I . b_I (the multiplication map alpha).
KoszulChain alpha_map(const GammaImage& g, const IdealPtr& ideal, int total_degree);
/// Koszul differential of K(I, K_t(I,S)), acting on the outer factor.
GammaImage outer_boundary(const GammaImage& g, const IdealPtr& ideal);
bool gamma_equal(const GammaImage& a, const GammaImage& b);

} // namespace koszul

#endif // KOSZUL_EXTERIOR_HPP
