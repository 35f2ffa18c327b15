#ifndef KOSZUL_RING_HPP
#define KOSZUL_RING_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace koszul {

class RingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Degree vector in Z^d. For d = 1 this is a one-element vector.
using MultiDegree = std::vector<int>;

bool degree_leq(const MultiDegree& a, const MultiDegree& b);
MultiDegree degree_add(const MultiDegree& a, const MultiDegree& b);
MultiDegree degree_sub(const MultiDegree& a, const MultiDegree& b);
MultiDegree degree_scale(int k, const MultiDegree& a);
int degree_total(const MultiDegree& a);
int degree_min(const MultiDegree& a);

/// Polynomial ring K[x_ij] with block sizes (m_1, ..., m_d); variables are
/// numbered block-major from 0.
class RingConfig {
public:
    explicit RingConfig(std::vector<int> blocks);
    static RingConfig standard(int n) { return RingConfig({n}); }

    int nvars() const { return nvars_; }
    int nblocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<int>& blocks() const { return blocks_; }
    int block_of(int var) const { return block_of_[static_cast<std::size_t>(var)]; }
    /// First variable of a block.
    int block_start(int block) const { return starts_[static_cast<std::size_t>(block)]; }
    std::string var_name(int var) const;

    bool operator==(const RingConfig& o) const { return blocks_ == o.blocks_; }

private:
    std::vector<int> blocks_;
    std::vector<int> block_of_;
    std::vector<int> starts_;
    int nvars_ = 0;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int nvars) { return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0)); }
    static Monomial variable(int nvars, int var);

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int var) const { return e_[static_cast<std::size_t>(var)]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const;
    MultiDegree multidegree(const RingConfig& ring) const;
    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// this / other; throws RingError unless other divides this.
    Monomial operator/(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial times_variable(int var) const;
    /// Largest / smallest variable index in the support, -1 for the unit.
    int max_var() const;
    int min_var() const;

    std::string to_string(const RingConfig& ring) const;

    /// Structural order on exponent vectors; used for map keys only.
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> e_;
};

/// Graded lexicographic comparison with x_{11} the largest variable.
/// Returns true when a is strictly larger than b.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Monomial ideal with a minimal generating set sorted largest-first in the
/// graded lex order. The zero ideal has no generators; the unit ideal is
/// rejected.
class MonomialIdeal {
public:
    MonomialIdeal(RingConfig ring, std::vector<Monomial> gens);

    const RingConfig& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const Monomial& gen(std::size_t i) const { return gens_[i]; }
    bool is_zero() const { return gens_.empty(); }

    bool contains(const Monomial& m) const;
    std::optional<std::size_t> index_of(const Monomial& m) const;
    int max_degree() const;
    int min_degree() const;
    /// Common multidegree of all generators, if there is one.
    std::optional<MultiDegree> common_multidegree() const;

    MonomialIdeal operator+(const MonomialIdeal& other) const;
    MonomialIdeal operator*(const MonomialIdeal& other) const;

    std::string to_string() const;

    bool operator==(const MonomialIdeal& o) const { return ring_ == o.ring_ && gens_ == o.gens_; }

private:
    RingConfig ring_;
    std::vector<Monomial> gens_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// All monomials of the given multidegree, largest first. Negative entries
/// give an empty list.
std::vector<Monomial> component_basis(const RingConfig& ring, const MultiDegree& alpha);
/// All monomials of total degree j in the ring's variables, largest first.
std::vector<Monomial> monomials_of_degree(const RingConfig& ring, int j);
/// Number of monomials of total degree j in n variables.
long long count_monomials(int n, int j);
long long binomial(long long n, long long k);

/// prod_i m_i^{c_i}: minimal generators are all monomials of multidegree c.
MonomialIdeal power_ideal(const RingConfig& ring, const MultiDegree& c);
/// Ideal generated by the variables of one block.
MonomialIdeal block_maximal_ideal(const RingConfig& ring, int block);

bool is_strongly_stable(const MonomialIdeal& ideal);
MonomialIdeal borel_closure(const RingConfig& ring, const std::vector<Monomial>& seed);

/// Number of monomials of multidegree alpha outside the ideal.
long long quotient_component_dim(const MonomialIdeal& ideal, const MultiDegree& alpha);
/// Krull dimension of S/I by exhaustive search over variable subsets.
int monomial_quotient_dim(const MonomialIdeal& ideal);
/// True iff every monomial of total degree k lies in the ideal.
bool power_containment(const MonomialIdeal& ideal, int k);
/// Smallest k with m^k contained in I, if I is m-primary.
std::optional<int> containment_power(const MonomialIdeal& ideal);

struct RegularityResult {
    int value = 0;
    bool certified = false;
    /// "eliahou-kervaire" or "lcm-lattice".
    std::string method;
};

/// Castelnuovo-Mumford regularity of a monomial ideal (d = 1).
RegularityResult reg_monomial_ideal(const MonomialIdeal& ideal);
/// Always runs the Tor computation over the lcm lattice, even for strongly
/// stable ideals.
RegularityResult reg_monomial_ideal_general(const MonomialIdeal& ideal);

} // namespace koszul

#endif // KOSZUL_RING_HPP
