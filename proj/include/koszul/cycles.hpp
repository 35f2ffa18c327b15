#ifndef KOSZUL_CYCLES_HPP
#define KOSZUL_CYCLES_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/exterior.hpp"
#include "koszul/homology.hpp"
#include "koszul/linalg.hpp"
#include "koszul/ring.hpp"

namespace koszul {

enum class FamilyLabel { z1_generator, symmetrized, z1_power, gen2_type1, gen2_type2 };

std::string to_string(FamilyLabel label);

/// A named cycle together with the parameters that built it.
struct CycleFamily {
    FamilyLabel label;
    std::vector<Monomial> a;
    std::vector<Monomial> b;
    /// (j, k) variable pairs of the z_b(x_j, x_k) factors.
    std::vector<std::pair<int, int>> variables;
    KoszulChain chain;
};

/// Receives guardrail warnings (large enumerations). Defaults to stderr.
using WarningHandler = std::function<void(const std::string&)>;
void set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

inline constexpr std::size_t family_warning_threshold = 100000;

/// x_j [b x_k] - x_k [b x_j]. Both b x_j and b x_k must be minimal
/// generators, and x_j, x_k must share a block.
KoszulChain z1_generator(const IdealPtr& ideal, const Monomial& b, int j, int k);

/// All z_b(x_j, x_k) with j < k in a common block, for I = m^c.
std::vector<CycleFamily> z1_generators(const IdealPtr& ideal);

/// sum over sigma in S_{t+1} of sign(sigma) a_{sigma(t+1)} [b_1 a_{sigma(1)}, ..., b_t a_{sigma(t)}].
/// The a_i share a multidegree alpha <= c and the b_i have multidegree c - alpha.
KoszulChain symmetrized_cycle(const IdealPtr& ideal, const std::vector<Monomial>& a, const std::vector<Monomial>& b);

/// Nonzero wedges of t distinct z1 generators.
std::vector<CycleFamily> z1_power_generators(const IdealPtr& ideal, int t);

/// Basis of (Z_1^t)_alpha inside K_t.
std::vector<KoszulChain> z1_power_component(const KoszulComplex& complex, int t, const MultiDegree& alpha);
std::size_t z1_power_dim(const KoszulComplex& complex, int t, const MultiDegree& alpha);

/// One product (c_i+1)! a_{u+1} prod_j z_{a_j}(y_0j, y_1j) with u = c_i.
struct Multi2Trial {
    int block = 0;
    Monomial extra;
    std::vector<Monomial> a;
    std::vector<std::pair<int, int>> variables;
};

struct Multi2Result {
    bool member = false;
    Rational factor;
    KoszulChain product;
    std::optional<Monomial> fine_degree;
    /// Coefficients expressing the product in the spanning set below.
    std::vector<Rational> certificate;
    std::size_t span_dim = 0;
    std::size_t spanning_vectors = 0;
};

/// Every trial for the given block (0-based): u distinct z1 generators of
/// that block, unordered, and any extra monomial of multidegree c - e_i.
std::vector<Multi2Trial> multi2_trials(const IdealPtr& ideal, int block);

/// Tests membership of the trial product in m_i^u Z_u + B_u at its fine
/// degree. The complex must be K(m^c, S) over a field of characteristic 0
/// or greater than c_i + 1.
Multi2Result multi2_membership(const KoszulComplex& complex, const Multi2Trial& trial);

/// The two generating families for Z_2(m^c, S) in one block: symmetrized
/// cycles with distinct variables a_i (degree 2c+1) and wedges of two
/// z1 generators (degree 2c+2).
std::vector<CycleFamily> gen2_families(const IdealPtr& ideal, const FieldContext& field = {});

/// The c for which the ideal equals m^c, if any.
std::optional<MultiDegree> power_exponent(const MonomialIdeal& ideal);

} // namespace koszul

#endif // KOSZUL_CYCLES_HPP
