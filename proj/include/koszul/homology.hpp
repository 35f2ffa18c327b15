#ifndef KOSZUL_HOMOLOGY_HPP
#define KOSZUL_HOMOLOGY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/exterior.hpp"
#include "koszul/linalg.hpp"
#include "koszul/ring.hpp"
#include "koszul/scalars.hpp"

namespace koszul {

/// Monomial subquotient L/J of S used as Koszul coefficients. An absent
/// numerator means L = S, an absent denominator means J = 0.
struct CoefficientModule {
    std::optional<MonomialIdeal> numerator;
    std::optional<MonomialIdeal> denominator;

    bool allows(const Monomial& w) const;
};

/// K(I, L/J) over the active field, one fine (Z^n) degree at a time. All
/// per-degree data is computed lazily and cached; the cache is guarded so
/// one complex may be queried from several threads.
class KoszulComplex {
public:
    explicit KoszulComplex(IdealPtr ideal, CoefficientModule coeff = {}, FieldContext field = {});

    const MonomialIdeal& ideal() const { return *ideal_; }
    const IdealPtr& ideal_ptr() const { return ideal_; }
    const RingConfig& ring() const { return ideal_->ring(); }
    const CoefficientModule& coefficients() const { return coeff_; }
    const FieldContext& field() const { return field_; }
    int rank() const { return static_cast<int>(ideal_->size()); }

    /// Index sets T, |T| = t, with prod u_T | beta and beta / prod u_T in L/J.
    const std::vector<IndexSet>& basis(int t, const Monomial& beta) const;
    std::optional<std::size_t> basis_index(int t, const Monomial& beta, const IndexSet& set) const;
    /// Matrix of phi_t at fine degree beta: rows basis(t-1), columns basis(t).
    SparseMatrix differential(int t, const Monomial& beta) const;

    const std::vector<Vector>& cycles(int t, const Monomial& beta) const;
    /// RREF basis of the image of phi_{t+1}.
    const std::vector<Vector>& boundaries(int t, const Monomial& beta) const;
    std::size_t rank_of_differential(int t, const Monomial& beta) const;
    std::size_t homology_dim(int t, const Monomial& beta) const;

    /// Coordinates of m * v, where v lives at fine degree beta.
    Vector multiply(int t, const Monomial& beta, const Vector& v, const Monomial& m) const;

    KoszulChain to_chain(int t, const Monomial& beta, const Vector& v) const;
    /// Coordinates of a homogeneous chain at its fine degree. Throws if a term
    /// is not a basis element (e.g. its coefficient lies in J).
    Vector to_coordinates(const KoszulChain& chain, const Monomial& beta) const;

private:
    using Key = std::pair<int, Monomial>;

    IdealPtr ideal_;
    CoefficientModule coeff_;
    FieldContext field_;

    mutable std::mutex mutex_;
    mutable std::map<Key, std::shared_ptr<const std::vector<IndexSet>>> basis_cache_;
    mutable std::map<Key, std::shared_ptr<const std::vector<Vector>>> cycle_cache_;
    mutable std::map<Key, std::shared_ptr<const std::vector<Vector>>> boundary_cache_;
    mutable std::map<Key, std::size_t> rank_cache_;
    // The differential at beta depends only on the two bases involved, so
    // kernels and images are shared between fine degrees with equal bases.
    using Pattern = std::pair<std::vector<IndexSet>, std::vector<IndexSet>>;
    mutable std::map<Pattern, std::shared_ptr<const std::vector<Vector>>> kernel_patterns_;
    mutable std::map<Pattern, std::shared_ptr<const std::vector<Vector>>> image_patterns_;
};

/// Degree-alpha piece of K_t(I, S) for a block multidegree alpha, assembled
/// from its fine pieces.
struct GradedComponent {
    int t = 0;
    MultiDegree alpha;
    /// (IndexSet, coefficient monomial) pairs, fine degrees in component_basis order.
    std::vector<std::pair<IndexSet, Monomial>> basis;
    /// phi_t out of this component and phi_{t+1} into it, block diagonal.
    SparseMatrix boundary_out;
    SparseMatrix boundary_in;
};

GradedComponent graded_component(const KoszulComplex& complex, int t, const MultiDegree& alpha);

/// Basis of Z_t(I, S)_alpha as chains.
std::vector<KoszulChain> cycle_space(const KoszulComplex& complex, int t, const MultiDegree& alpha);
std::size_t cycle_dim(const KoszulComplex& complex, int t, const MultiDegree& alpha);
std::size_t boundary_dim(const KoszulComplex& complex, int t, const MultiDegree& alpha);
std::size_t homology_dim(const KoszulComplex& complex, int t, const MultiDegree& alpha);
std::size_t chain_dim(const KoszulComplex& complex, int t, const MultiDegree& alpha);

struct GenerationResult {
    bool generates = true;
    /// First block degree (in enumeration order) where the span falls short.
    std::optional<MultiDegree> failing_degree;
    std::optional<Monomial> failing_fine_degree;
    std::size_t span_dim = 0;
    std::size_t target_dim = 0;
    std::size_t degrees_checked = 0;
};

/// All block degrees 0 <= alpha <= bound, ordered by total degree, then
/// lexicographically.
std::vector<MultiDegree> degrees_up_to(const MultiDegree& bound);

/// Does the submodule generated by the candidate cycles equal Z_t(I,S) in
/// every degree alpha <= bound? Throws ChainError on a non-cycle or
/// inhomogeneous candidate.
GenerationResult generates_up_to(const KoszulComplex& complex, int t, const std::vector<KoszulChain>& candidates,
                                 const MultiDegree& bound);

/// Dimension, at a block degree, of the submodule generated by the given
/// homogeneous chains (all of homological degree t).
std::size_t generated_dim(const KoszulComplex& complex, int t, const std::vector<KoszulChain>& generators,
                          const MultiDegree& alpha);

/// dim Z_t(I,S)_beta minus the dimension of sum_v x_v Z_t(I,S)_{beta / x_v}:
/// the number of minimal generators of Z_t at fine degree beta.
std::size_t minimal_generators(const KoszulComplex& complex, int t, const Monomial& beta);
/// Same, summed over a block degree.
std::size_t minimal_generators(const KoszulComplex& complex, int t, const MultiDegree& alpha);

enum class ModulePart { chains, cycles, boundaries, homology };

/// Z^n-graded subquotient sub/bound of K_t(I, L/J), computed lazily per
/// fine degree.
class GradedModule {
public:
    GradedModule(std::shared_ptr<const KoszulComplex> complex, int t, ModulePart part);

    static GradedModule koszul_cycles(std::shared_ptr<const KoszulComplex> complex, int t);
    static GradedModule koszul_boundaries(std::shared_ptr<const KoszulComplex> complex, int t);
    static GradedModule koszul_homology(std::shared_ptr<const KoszulComplex> complex, int t);
    /// S itself.
    static GradedModule polynomial_ring(const RingConfig& ring, const FieldContext& field = {});
    /// S/J.
    static GradedModule quotient_ring(const MonomialIdeal& j, const FieldContext& field = {});
    /// The ideal I as an S-module.
    static GradedModule ideal_module(const MonomialIdeal& i, const FieldContext& field = {});

    const RingConfig& ring() const { return complex_->ring(); }
    const FieldContext& field() const { return complex_->field(); }
    const KoszulComplex& complex() const { return *complex_; }
    int homological_degree() const { return t_; }
    ModulePart part() const { return part_; }

    std::size_t ambient_dim(const Monomial& beta) const;
    const std::vector<Vector>& sub(const Monomial& beta) const;
    const std::vector<Vector>& bound(const Monomial& beta) const;
    std::size_t dim(const Monomial& beta) const { return sub(beta).size() - bound(beta).size(); }
    std::size_t dim_total(int j) const;
    Vector multiply(const Monomial& beta, const Vector& v, const Monomial& m) const;

    /// sub(beta) and bound(beta) with zero coordinates dropped.
    using SparseVector = std::vector<std::pair<std::size_t, Rational>>;
    const std::vector<SparseVector>& sparse_sub(const Monomial& beta) const;
    const std::vector<SparseVector>& sparse_bound(const Monomial& beta) const;

    /// No nonzero component lives below this total degree.
    int initial_degree() const;

    std::string describe() const;

private:
    std::shared_ptr<const KoszulComplex> complex_;
    int t_;
    ModulePart part_;
    std::vector<Vector> empty_;

    struct Cache {
        std::mutex mutex;
        std::map<Monomial, std::shared_ptr<const std::vector<Vector>>> identity;
        std::map<Monomial, std::shared_ptr<const std::vector<SparseVector>>> sparse_sub;
        std::map<Monomial, std::shared_ptr<const std::vector<SparseVector>>> sparse_bound;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// dim Tor_i(S/Q, M)_gamma from the Taylor resolution of S/Q tensored
/// with M.
std::size_t taylor_tor(const MonomialIdeal& q, const GradedModule& m, int i, const Monomial& gamma);

/// dim Tor_i(M, K)_j, via the Koszul complex on the variables.
std::size_t tor_dims(const GradedModule& m, int i, int j);
std::size_t tor_dims_fine(const GradedModule& m, int i, const Monomial& gamma);

struct BettiEntry {
    long long dim = 0;
    bool certified = false;
};

/// (i, j) -> dim Tor_i(M, K)_j.
struct BettiTable {
    std::map<std::pair<int, int>, BettiEntry> entries;
    int cap = 0;

    long long at(int i, int j) const;
    /// Largest j with a nonzero entry in row i, if any.
    std::optional<int> top_degree(int i) const;
};

struct Witness {
    int i = 0;
    int j = 0;
    long long dim = 0;
};

struct RegScan {
    /// max j - i over nonzero entries found; nullopt for the zero module
    /// within the window.
    std::optional<int> reg;
    std::vector<Witness> witnesses;
    /// True when the caller's a-priori vanishing bound lies inside the window.
    bool certified = false;
    int cap = 0;
    BettiTable table;
};

struct RegScanOptions {
    int cap = 0;
    /// reg(M) <= bound known in advance; certifies the scan when <= cap.
    std::optional<int> vanishing_bound;
    /// Highest homological index scanned; defaults to the number of variables.
    std::optional<int> max_i;
    /// Only entries with j - i >= min_excess are computed. Entries below are
    /// left out of the table and cannot raise the reported value.
    std::optional<int> min_excess;
};

/// Tor_i(M)_j for 0 <= i <= n and j <= cap + i. Throws std::invalid_argument
/// when cap lies below the initial degree of M.
RegScan reg_scan(const GradedModule& m, const RegScanOptions& options);

/// Monomials gamma with lcm-lattice support: every lcm of a nonempty subset
/// of the generators, plus the unit.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

} // namespace koszul

#endif // KOSZUL_HOMOLOGY_HPP
