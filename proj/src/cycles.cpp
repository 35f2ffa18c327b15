#include "koszul/cycles.hpp"

#include <algorithm>
#include <iostream>
#include <mutex>
#include <numeric>

namespace koszul {

std::string to_string(FamilyLabel label)
{
    switch (label) {
    case FamilyLabel::z1_generator:
        return "z1_generator";
    case FamilyLabel::symmetrized:
        return "symmetrized";
    case FamilyLabel::z1_power:
        return "z1_power";
    case FamilyLabel::gen2_type1:
        return "gen2_type1";
    case FamilyLabel::gen2_type2:
        return "gen2_type2";
    }
    return "unknown";
}

namespace {

std::mutex warning_mutex;
WarningHandler warning_handler = [](const std::string& message) { std::cerr << "warning: " << message << '\n'; };

Monomial variable_of(const RingConfig& ring, int var)
{
    if (var < 0 || var >= ring.nvars())
        throw ChainError("variable index out of range");
    return Monomial::variable(ring.nvars(), var);
}

long long factorial(int n)
{
    long long f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

int permutation_sign(const std::vector<int>& perm)
{
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

void check_count(std::size_t count, const std::string& what)
{
    if (count > family_warning_threshold)
        warn(what + " enumerates " + std::to_string(count) + " candidates");
}

} // namespace

void set_warning_handler(WarningHandler handler)
{
    std::lock_guard lock(warning_mutex);
    warning_handler = std::move(handler);
}

void warn(const std::string& message)
{
    std::lock_guard lock(warning_mutex);
    if (warning_handler)
        warning_handler(message);
}

std::optional<MultiDegree> power_exponent(const MonomialIdeal& ideal)
{
    auto c = ideal.common_multidegree();
    if (!c)
        return std::nullopt;
    for (int ci : *c)
        if (ci < 0)
            return std::nullopt;
    if (degree_total(*c) == 0)
        return std::nullopt;
    if (!(power_ideal(ideal.ring(), *c) == ideal))
        return std::nullopt;
    return c;
}

KoszulChain z1_generator(const IdealPtr& ideal, const Monomial& b, int j, int k)
{
    const RingConfig& ring = ideal->ring();
    if (j == k)
        throw ChainError("z_b(x_j, x_k) needs two distinct variables");
    Monomial xj = variable_of(ring, j), xk = variable_of(ring, k);
    if (ring.block_of(j) != ring.block_of(k))
        throw ChainError("x_j and x_k lie in different blocks");
    if (b.nvars() != ring.nvars())
        throw ChainError("b has the wrong number of variables");
    Monomial bj = b * xj, bk = b * xk;
    if (!ideal->index_of(bj) || !ideal->index_of(bk))
        throw ChainError("b has the wrong degree: " + b.to_string(ring) + " times x_j, x_k is not a generator");
    KoszulChain z = KoszulChain::bracket(ideal, {bk}, xj);
    z -= KoszulChain::bracket(ideal, {bj}, xk);
    return z;
}

std::vector<CycleFamily> z1_generators(const IdealPtr& ideal)
{
    auto c = power_exponent(*ideal);
    if (!c)
        throw ChainError("z1 generators are defined for powers m^c only");
    const RingConfig& ring = ideal->ring();
    std::vector<CycleFamily> out;
    for (int block = 0; block < ring.nblocks(); ++block) {
        if ((*c)[static_cast<std::size_t>(block)] < 1)
            continue;
        MultiDegree bdeg = *c;
        --bdeg[static_cast<std::size_t>(block)];
        const auto bs = component_basis(ring, bdeg);
        const int start = ring.block_start(block);
        const int end = start + ring.blocks()[static_cast<std::size_t>(block)];
        for (int j = start; j < end; ++j)
            for (int k = j + 1; k < end; ++k)
                for (const auto& b : bs)
                    out.push_back(CycleFamily{FamilyLabel::z1_generator, {}, {b}, {{j, k}}, z1_generator(ideal, b, j, k)});
    }
    return out;
}

KoszulChain symmetrized_cycle(const IdealPtr& ideal, const std::vector<Monomial>& a, const std::vector<Monomial>& b)
{
    const RingConfig& ring = ideal->ring();
    const int t = static_cast<int>(b.size());
    if (a.size() != b.size() + 1)
        throw ChainError("symmetrized cycle needs t+1 monomials a_i and t monomials b_i");
    if (t < 1)
        throw ChainError("symmetrized cycle needs t >= 1");
    auto c = ideal->common_multidegree();
    if (!c)
        throw ChainError("symmetrized cycles need an equigenerated ideal");
    const MultiDegree alpha = a.front().multidegree(ring);
    for (const auto& ai : a)
        if (ai.nvars() != ring.nvars() || ai.multidegree(ring) != alpha)
            throw ChainError("the a_i must share one multidegree");
    if (!degree_leq(alpha, *c))
        throw ChainError("multidegree of the a_i exceeds c");
    const MultiDegree rest = degree_sub(*c, alpha);
    for (const auto& bi : b)
        if (bi.nvars() != ring.nvars() || bi.multidegree(ring) != rest)
            throw ChainError("the b_i must have multidegree c - alpha");

    KoszulChain sum(ideal, t);
    std::vector<int> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Monomial> gens;
        gens.reserve(b.size());
        for (int k = 0; k < t; ++k)
            gens.push_back(b[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]);
        sum += KoszulChain::bracket(ideal, gens, a[static_cast<std::size_t>(perm.back())],
                                    Rational(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

namespace {

void wedge_combinations(const std::vector<CycleFamily>& gens, int t, std::size_t start, std::vector<std::size_t>& cur,
                        const IdealPtr& ideal, std::vector<CycleFamily>& out)
{
    if (static_cast<int>(cur.size()) == t) {
        KoszulChain prod = gens[cur[0]].chain;
        CycleFamily fam{FamilyLabel::z1_power, {}, gens[cur[0]].b, gens[cur[0]].variables, prod};
        for (std::size_t k = 1; k < cur.size(); ++k) {
            prod = wedge(prod, gens[cur[k]].chain);
            if (prod.is_zero())
                return;
            fam.b.push_back(gens[cur[k]].b.front());
            fam.variables.push_back(gens[cur[k]].variables.front());
        }
        fam.chain = std::move(prod);
        out.push_back(std::move(fam));
        return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
        cur.push_back(i);
        wedge_combinations(gens, t, i + 1, cur, ideal, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<CycleFamily> z1_power_generators(const IdealPtr& ideal, int t)
{
    if (t < 1)
        throw ChainError("Z_1^t needs t >= 1");
    auto gens = z1_generators(ideal);
    std::vector<CycleFamily> out;
    if (t > static_cast<int>(ideal->size()))
        return out;
    check_count(static_cast<std::size_t>(binomial(static_cast<long long>(gens.size()), t)), "Z_1^t");
    std::vector<std::size_t> cur;
    wedge_combinations(gens, t, 0, cur, ideal, out);
    return out;
}

namespace {

std::vector<KoszulChain> chains_of(const std::vector<CycleFamily>& fams)
{
    std::vector<KoszulChain> out;
    out.reserve(fams.size());
    for (const auto& f : fams)
        out.push_back(f.chain);
    return out;
}

} // namespace

std::vector<KoszulChain> z1_power_component(const KoszulComplex& complex, int t, const MultiDegree& alpha)
{
    if (t < 1)
        throw ChainError("Z_1^t needs t >= 1");
    std::vector<KoszulChain> out;
    if (t > complex.rank())
        return out;
    const auto gens = z1_power_generators(complex.ideal_ptr(), t);
    for (const auto& beta : component_basis(complex.ring(), alpha)) {
        std::vector<Vector> vecs;
        for (const auto& g : gens) {
            Monomial delta = *g.chain.fine_degree();
            if (!delta.divides(beta))
                continue;
            vecs.push_back(complex.multiply(t, delta, complex.to_coordinates(g.chain, delta), beta / delta));
        }
        for (const auto& v : span_basis(vecs, complex.basis(t, beta).size(), complex.field()))
            out.push_back(complex.to_chain(t, beta, v));
    }
    return out;
}

std::size_t z1_power_dim(const KoszulComplex& complex, int t, const MultiDegree& alpha)
{
    if (t < 1)
        throw ChainError("Z_1^t needs t >= 1");
    if (t > complex.rank())
        return 0;
    return generated_dim(complex, t, chains_of(z1_power_generators(complex.ideal_ptr(), t)), alpha);
}

std::vector<Multi2Trial> multi2_trials(const IdealPtr& ideal, int block)
{
    auto c = power_exponent(*ideal);
    if (!c)
        throw ChainError("multi2 trials are defined for powers m^c only");
    const RingConfig& ring = ideal->ring();
    if (block < 0 || block >= ring.nblocks())
        throw ChainError("block index out of range");
    const int u = (*c)[static_cast<std::size_t>(block)];
    if (u < 1)
        throw ChainError("c_i must be positive");
    MultiDegree bdeg = *c;
    --bdeg[static_cast<std::size_t>(block)];
    const auto extras = component_basis(ring, bdeg);

    std::vector<CycleFamily> gens;
    for (auto& g : z1_generators(ideal))
        if (ring.block_of(g.variables.front().first) == block)
            gens.push_back(std::move(g));

    std::vector<std::vector<std::size_t>> combos;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == u) {
            combos.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < gens.size(); ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    check_count(combos.size() * extras.size(), "multi2");

    std::vector<Multi2Trial> out;
    for (const auto& combo : combos)
        for (const auto& e : extras) {
            Multi2Trial trial;
            trial.block = block;
            trial.extra = e;
            for (std::size_t idx : combo) {
                trial.a.push_back(gens[idx].b.front());
                trial.variables.push_back(gens[idx].variables.front());
            }
            out.push_back(std::move(trial));
        }
    return out;
}

Multi2Result multi2_membership(const KoszulComplex& complex, const Multi2Trial& trial)
{
    const IdealPtr& ideal = complex.ideal_ptr();
    auto c = power_exponent(*ideal);
    if (!c)
        throw ChainError("multi2 membership is defined for powers m^c only");
    const RingConfig& ring = complex.ring();
    if (trial.block < 0 || trial.block >= ring.nblocks())
        throw ChainError("block index out of range");
    const int u = (*c)[static_cast<std::size_t>(trial.block)];
    if (!complex.field().is_rational() && complex.field().characteristic() <= static_cast<std::uint64_t>(u + 1))
        throw FieldError("multi2 needs characteristic 0 or greater than c_i + 1");
    if (static_cast<int>(trial.a.size()) != u || trial.variables.size() != trial.a.size())
        throw ChainError("a multi2 trial needs exactly c_i cycle factors");
    MultiDegree bdeg = *c;
    --bdeg[static_cast<std::size_t>(trial.block)];
    if (trial.extra.multidegree(ring) != bdeg)
        throw ChainError("extra monomial must have multidegree c - e_i");
    for (const auto& [j, k] : trial.variables)
        if (ring.block_of(j) != trial.block || ring.block_of(k) != trial.block)
            throw ChainError("cycle factor variables must lie in block i");

    KoszulChain prod = z1_generator(ideal, trial.a[0], trial.variables[0].first, trial.variables[0].second);
    for (std::size_t k = 1; k < trial.a.size(); ++k)
        prod = wedge(prod, z1_generator(ideal, trial.a[k], trial.variables[k].first, trial.variables[k].second));
    Multi2Result result{false, Rational(static_cast<long>(factorial(u + 1))), prod.times(trial.extra) * Rational(static_cast<long>(factorial(u + 1))),
                        std::nullopt, {}, 0, 0};
    if (result.product.is_zero()) {
        result.member = true;
        return result;
    }
    const Monomial beta = *result.product.fine_degree();
    result.fine_degree = beta;

    std::vector<Vector> vecs;
    MultiDegree shift(static_cast<std::size_t>(ring.nblocks()), 0);
    shift[static_cast<std::size_t>(trial.block)] = u;
    for (const auto& m : component_basis(ring, shift)) {
        if (!m.divides(beta))
            continue;
        const Monomial below = beta / m;
        for (const auto& z : complex.cycles(u, below))
            vecs.push_back(complex.multiply(u, below, z, m));
    }
    for (const auto& bnd : complex.boundaries(u, beta))
        vecs.push_back(bnd);
    result.spanning_vectors = vecs.size();
    const std::size_t dim = complex.basis(u, beta).size();
    result.span_dim = span_rank(vecs, dim, complex.field());
    auto membership = in_span(vecs, complex.to_coordinates(result.product, beta), complex.field());
    result.member = membership.member;
    result.certificate = std::move(membership.coefficients);
    return result;
}

std::vector<CycleFamily> gen2_families(const IdealPtr& ideal, const FieldContext& field)
{
    if (!field.is_rational() && field.characteristic() == 2)
        throw FieldError("gen2 needs characteristic different from 2");
    auto c = power_exponent(*ideal);
    const RingConfig& ring = ideal->ring();
    if (!c || ring.nblocks() != 1)
        throw ChainError("gen2 families are defined for m^c in a standard graded ring");
    const int n = ring.nvars();
    const int cc = (*c)[0];
    std::vector<CycleFamily> out;

    const auto bs = monomials_of_degree(ring, cc - 1);
    std::vector<KoszulChain> seen;
    auto is_new = [&](const KoszulChain& ch) {
        for (const auto& s : seen)
            if (s == ch || s == ch * Rational(-1))
                return false;
        seen.push_back(ch);
        return true;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                for (std::size_t p = 0; p < bs.size(); ++p)
                    for (std::size_t q = p; q < bs.size(); ++q) {
                        std::vector<Monomial> a{variable_of(ring, x), variable_of(ring, y), variable_of(ring, z)};
                        std::vector<Monomial> b{bs[p], bs[q]};
                        KoszulChain ch = symmetrized_cycle(ideal, a, b);
                        if (ch.is_zero() || !is_new(ch))
                            continue;
                        out.push_back(CycleFamily{FamilyLabel::gen2_type1, a, b, {}, std::move(ch)});
                    }
    for (auto& f : z1_power_generators(ideal, 2)) {
        if (!is_new(f.chain))
            continue;
        f.label = FamilyLabel::gen2_type2;
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace koszul
