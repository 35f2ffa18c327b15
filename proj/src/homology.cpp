#include "koszul/homology.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace koszul {

bool CoefficientModule::allows(const Monomial& w) const
{
    if (numerator && !numerator->contains(w))
        return false;
    if (denominator && denominator->contains(w))
        return false;
    return true;
}

KoszulComplex::KoszulComplex(IdealPtr ideal, CoefficientModule coeff, FieldContext field)
    : ideal_(std::move(ideal)), coeff_(std::move(coeff)), field_(field)
{
    if (!ideal_)
        throw ChainError("Koszul complex needs an ideal");
    if (ideal_->is_zero())
        throw ChainError("Koszul complex of the zero ideal");
    for (const auto* other : {coeff_.numerator ? &*coeff_.numerator : nullptr,
                              coeff_.denominator ? &*coeff_.denominator : nullptr})
        if (other && !(other->ring() == ideal_->ring()))
            throw ChainError("coefficient ideal lives in a different ring");
}

namespace {

template <class Map, class Key, class Fn>
auto cached(std::mutex& mutex, Map& map, const Key& key, Fn&& compute) -> decltype(map.begin()->second)
{
    {
        std::lock_guard lock(mutex);
        auto it = map.find(key);
        if (it != map.end())
            return it->second;
    }
    auto value = compute();
    std::lock_guard lock(mutex);
    return map.emplace(key, std::move(value)).first->second;
}

void enumerate_sets(const MonomialIdeal& ideal, const Monomial& beta, const CoefficientModule& coeff, int start,
                    int remaining, const Monomial& product, IndexSet& cur, std::vector<IndexSet>& out)
{
    if (remaining == 0) {
        if (coeff.allows(beta / product))
            out.push_back(cur);
        return;
    }
    const int r = static_cast<int>(ideal.size());
    for (int i = start; i <= r - remaining; ++i) {
        Monomial next = product * ideal.gen(static_cast<std::size_t>(i));
        if (!next.divides(beta))
            continue;
        cur.push_back(i);
        enumerate_sets(ideal, beta, coeff, i + 1, remaining - 1, next, cur, out);
        cur.pop_back();
    }
}

} // namespace

const std::vector<IndexSet>& KoszulComplex::basis(int t, const Monomial& beta) const
{
    if (beta.nvars() != ring().nvars())
        throw ChainError("fine degree has wrong number of variables");
    return *cached(mutex_, basis_cache_, Key{t, beta}, [&] {
        auto out = std::make_shared<std::vector<IndexSet>>();
        if (t >= 0 && t <= rank()) {
            IndexSet cur;
            enumerate_sets(*ideal_, beta, coeff_, 0, t, Monomial::one(ring().nvars()), cur, *out);
        }
        return std::shared_ptr<const std::vector<IndexSet>>(std::move(out));
    });
}

std::optional<std::size_t> KoszulComplex::basis_index(int t, const Monomial& beta, const IndexSet& set) const
{
    const auto& b = basis(t, beta);
    auto it = std::lower_bound(b.begin(), b.end(), set);
    if (it == b.end() || *it != set)
        return std::nullopt;
    return static_cast<std::size_t>(it - b.begin());
}

SparseMatrix KoszulComplex::differential(int t, const Monomial& beta) const
{
    const auto& cols = basis(t, beta);
    if (t <= 0)
        return SparseMatrix(0, cols.size());
    const auto& rows = basis(t - 1, beta);
    SparseMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const IndexSet& set = cols[c];
        for (std::size_t pos = 0; pos < set.size(); ++pos) {
            IndexSet rest = set;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
            auto r = basis_index(t - 1, beta, rest);
            if (r)
                m.set(*r, c, pos % 2 == 0 ? Rational(1) : Rational(-1));
        }
    }
    return m;
}

const std::vector<Vector>& KoszulComplex::cycles(int t, const Monomial& beta) const
{
    return *cached(mutex_, cycle_cache_, Key{t, beta}, [&] {
        Pattern pattern{basis(t, beta), t >= 1 ? basis(t - 1, beta) : std::vector<IndexSet>{}};
        return cached(mutex_, kernel_patterns_, pattern, [&] {
            return std::shared_ptr<const std::vector<Vector>>(
                std::make_shared<std::vector<Vector>>(kernel_basis(differential(t, beta), field_)));
        });
    });
}

const std::vector<Vector>& KoszulComplex::boundaries(int t, const Monomial& beta) const
{
    return *cached(mutex_, boundary_cache_, Key{t, beta}, [&] {
        Pattern pattern{basis(t + 1, beta), basis(t, beta)};
        return cached(mutex_, image_patterns_, pattern, [&] {
            auto out = std::make_shared<std::vector<Vector>>();
            if (t + 1 <= rank()) {
                SparseMatrix d = differential(t + 1, beta);
                if (d.rows() > 0 && d.cols() > 0)
                    *out = row_reduce(d.transpose(), field_).rows;
            }
            return std::shared_ptr<const std::vector<Vector>>(std::move(out));
        });
    });
}

std::size_t KoszulComplex::rank_of_differential(int t, const Monomial& beta) const
{
    if (t <= 0 || t > rank())
        return 0;
    return cached(mutex_, rank_cache_, Key{t, beta}, [&] { return basis(t, beta).size() - cycles(t, beta).size(); });
}

std::size_t KoszulComplex::homology_dim(int t, const Monomial& beta) const
{
    return basis(t, beta).size() - rank_of_differential(t, beta) - rank_of_differential(t + 1, beta);
}

Vector KoszulComplex::multiply(int t, const Monomial& beta, const Vector& v, const Monomial& m) const
{
    const auto& from = basis(t, beta);
    if (v.size() != from.size())
        throw LinalgError("coordinate vector does not match the component");
    Monomial target = beta * m;
    Vector out(basis(t, target).size(), Rational(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) == 0)
            continue;
        auto idx = basis_index(t, target, from[k]);
        if (idx)
            out[*idx] = v[k];
    }
    return out;
}

KoszulChain KoszulComplex::to_chain(int t, const Monomial& beta, const Vector& v) const
{
    const auto& b = basis(t, beta);
    if (v.size() != b.size())
        throw LinalgError("coordinate vector does not match the component");
    KoszulChain chain(ideal_, t);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) == 0)
            continue;
        Monomial prod = Monomial::one(ring().nvars());
        for (int i : b[k])
            prod = prod * ideal_->gen(static_cast<std::size_t>(i));
        chain.add_term(b[k], beta / prod, v[k]);
    }
    return chain;
}

Vector KoszulComplex::to_coordinates(const KoszulChain& chain, const Monomial& beta) const
{
    const int t = chain.degree();
    Vector out(basis(t, beta).size(), Rational(0));
    for (const auto& [key, c] : chain.terms()) {
        if (chain.term_degree(key) != beta)
            throw ChainError("chain term outside the requested fine degree");
        auto idx = basis_index(t, beta, key.first);
        if (!idx)
            throw ChainError("chain term is not a basis element of the component");
        out[*idx] = c;
    }
    return out;
}

GradedComponent graded_component(const KoszulComplex& complex, int t, const MultiDegree& alpha)
{
    GradedComponent comp;
    comp.t = t;
    comp.alpha = alpha;
    const auto fine = component_basis(complex.ring(), alpha);
    std::size_t n_out = 0, n_in = 0;
    for (const auto& beta : fine) {
        n_out += t >= 1 ? complex.basis(t - 1, beta).size() : 0;
        n_in += complex.basis(t + 1, beta).size();
    }
    std::size_t n_here = 0;
    for (const auto& beta : fine)
        n_here += complex.basis(t, beta).size();
    comp.boundary_out = SparseMatrix(n_out, n_here);
    comp.boundary_in = SparseMatrix(n_here, n_in);
    std::size_t off_out = 0, off_here = 0, off_in = 0;
    for (const auto& beta : fine) {
        const auto& sets = complex.basis(t, beta);
        for (const auto& set : sets) {
            Monomial prod = Monomial::one(complex.ring().nvars());
            for (int i : set)
                prod = prod * complex.ideal().gen(static_cast<std::size_t>(i));
            comp.basis.emplace_back(set, beta / prod);
        }
        if (t >= 1) {
            SparseMatrix d = complex.differential(t, beta);
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (const auto& [c, v] : d.row(r))
                    comp.boundary_out.set(off_out + r, off_here + c, v);
            off_out += d.rows();
        }
        SparseMatrix d_in = complex.differential(t + 1, beta);
        for (std::size_t r = 0; r < d_in.rows(); ++r)
            for (const auto& [c, v] : d_in.row(r))
                comp.boundary_in.set(off_here + r, off_in + c, v);
        off_in += d_in.cols();
        off_here += sets.size();
    }
    return comp;
}

std::vector<KoszulChain> cycle_space(const KoszulComplex& complex, int t, const MultiDegree& alpha)
{
    std::vector<KoszulChain> out;
    for (const auto& beta : component_basis(complex.ring(), alpha))
        for (const auto& v : complex.cycles(t, beta))
            out.push_back(complex.to_chain(t, beta, v));
    return out;
}

std::size_t cycle_dim(const KoszulComplex& complex, int t, const MultiDegree& alpha)
{
    std::size_t n = 0;
    for (const auto& beta : component_basis(complex.ring(), alpha))
        n += complex.basis(t, beta).size() - complex.rank_of_differential(t, beta);
    return n;
}

std::size_t boundary_dim(const KoszulComplex& complex, int t, const MultiDegree& alpha)
{
    std::size_t n = 0;
    for (const auto& beta : component_basis(complex.ring(), alpha))
        n += complex.rank_of_differential(t + 1, beta);
    return n;
}

std::size_t homology_dim(const KoszulComplex& complex, int t, const MultiDegree& alpha)
{
    std::size_t n = 0;
    for (const auto& beta : component_basis(complex.ring(), alpha))
        n += complex.homology_dim(t, beta);
    return n;
}

std::size_t chain_dim(const KoszulComplex& complex, int t, const MultiDegree& alpha)
{
    std::size_t n = 0;
    for (const auto& beta : component_basis(complex.ring(), alpha))
        n += complex.basis(t, beta).size();
    return n;
}

std::vector<MultiDegree> degrees_up_to(const MultiDegree& bound)
{
    std::vector<MultiDegree> out;
    for (int b : bound)
        if (b < 0)
            return out;
    MultiDegree cur(bound.size(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t k = bound.size();
        while (k-- > 0) {
            if (cur[k] < bound[k]) {
                ++cur[k];
                break;
            }
            cur[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1))
            break;
    }
    std::stable_sort(out.begin(), out.end(), [](const MultiDegree& a, const MultiDegree& b) {
        return degree_total(a) < degree_total(b);
    });
    return out;
}

namespace {

using GroupedChains = std::map<Monomial, std::vector<Vector>>;

GroupedChains group_by_degree(const KoszulComplex& complex, int t, const std::vector<KoszulChain>& chains,
                              bool require_cycles)
{
    GroupedChains groups;
    for (const auto& c : chains) {
        if (c.degree() != t)
            throw ChainError("candidate has the wrong homological degree");
        if (!(c.ideal() == complex.ideal()))
            throw ChainError("candidate lives over a different ideal");
        if (c.is_zero())
            continue;
        auto beta = c.fine_degree();
        if (!beta)
            throw ChainError("candidate is not homogeneous");
        if (require_cycles && t >= 1 && !boundary(c).is_zero())
            throw ChainError("candidate is not a cycle: " + c.render());
        groups[*beta].push_back(complex.to_coordinates(c, *beta));
    }
    return groups;
}

std::size_t span_at(const KoszulComplex& complex, int t, const GroupedChains& groups, const Monomial& beta)
{
    std::vector<Vector> vecs;
    for (const auto& [delta, coords] : groups) {
        if (!delta.divides(beta))
            continue;
        Monomial w = beta / delta;
        for (const auto& v : coords)
            vecs.push_back(complex.multiply(t, delta, v, w));
    }
    return span_rank(vecs, complex.basis(t, beta).size(), complex.field());
}

} // namespace

GenerationResult generates_up_to(const KoszulComplex& complex, int t, const std::vector<KoszulChain>& candidates,
                                 const MultiDegree& bound)
{
    if (complex.coefficients().numerator || complex.coefficients().denominator)
        throw ChainError("generation checks run over K(I, S) only");
    GroupedChains groups = group_by_degree(complex, t, candidates, true);
    GenerationResult result;
    for (const auto& alpha : degrees_up_to(bound)) {
        ++result.degrees_checked;
        for (const auto& beta : component_basis(complex.ring(), alpha)) {
            std::size_t target = complex.cycles(t, beta).size();
            if (target == 0)
                continue;
            std::size_t have = span_at(complex, t, groups, beta);
            if (have < target) {
                result.generates = false;
                result.failing_degree = alpha;
                result.failing_fine_degree = beta;
                result.span_dim = have;
                result.target_dim = target;
                return result;
            }
        }
    }
    return result;
}

std::size_t generated_dim(const KoszulComplex& complex, int t, const std::vector<KoszulChain>& generators,
                          const MultiDegree& alpha)
{
    GroupedChains groups = group_by_degree(complex, t, generators, false);
    std::size_t n = 0;
    for (const auto& beta : component_basis(complex.ring(), alpha))
        n += span_at(complex, t, groups, beta);
    return n;
}

std::size_t minimal_generators(const KoszulComplex& complex, int t, const Monomial& beta)
{
    const std::size_t target = complex.cycles(t, beta).size();
    if (target == 0)
        return 0;
    std::vector<Vector> vecs;
    const int n = complex.ring().nvars();
    for (int v = 0; v < n; ++v) {
        if (beta[v] == 0)
            continue;
        Monomial x = Monomial::variable(n, v);
        Monomial below = beta / x;
        for (const auto& z : complex.cycles(t, below))
            vecs.push_back(complex.multiply(t, below, z, x));
    }
    return target - span_rank(vecs, complex.basis(t, beta).size(), complex.field());
}

std::size_t minimal_generators(const KoszulComplex& complex, int t, const MultiDegree& alpha)
{
    std::size_t n = 0;
    for (const auto& beta : component_basis(complex.ring(), alpha))
        n += minimal_generators(complex, t, beta);
    return n;
}

GradedModule::GradedModule(std::shared_ptr<const KoszulComplex> complex, int t, ModulePart part)
    : complex_(std::move(complex)), t_(t), part_(part)
{
    if (!complex_)
        throw ChainError("graded module needs a complex");
    if (t < 0)
        throw ChainError("negative homological degree");
}

GradedModule GradedModule::koszul_cycles(std::shared_ptr<const KoszulComplex> complex, int t)
{
    return GradedModule(std::move(complex), t, ModulePart::cycles);
}

GradedModule GradedModule::koszul_boundaries(std::shared_ptr<const KoszulComplex> complex, int t)
{
    return GradedModule(std::move(complex), t, ModulePart::boundaries);
}

GradedModule GradedModule::koszul_homology(std::shared_ptr<const KoszulComplex> complex, int t)
{
    return GradedModule(std::move(complex), t, ModulePart::homology);
}

namespace {

IdealPtr variables_ideal(const RingConfig& ring)
{
    std::vector<Monomial> vars;
    for (int v = 0; v < ring.nvars(); ++v)
        vars.push_back(Monomial::variable(ring.nvars(), v));
    return std::make_shared<const MonomialIdeal>(ring, std::move(vars));
}

} // namespace

GradedModule GradedModule::polynomial_ring(const RingConfig& ring, const FieldContext& field)
{
    return koszul_cycles(std::make_shared<const KoszulComplex>(variables_ideal(ring), CoefficientModule{}, field), 0);
}

GradedModule GradedModule::quotient_ring(const MonomialIdeal& j, const FieldContext& field)
{
    CoefficientModule coeff;
    if (!j.is_zero())
        coeff.denominator = j;
    return koszul_cycles(std::make_shared<const KoszulComplex>(variables_ideal(j.ring()), coeff, field), 0);
}

GradedModule GradedModule::ideal_module(const MonomialIdeal& i, const FieldContext& field)
{
    auto ideal = std::make_shared<const MonomialIdeal>(i);
    return koszul_boundaries(std::make_shared<const KoszulComplex>(ideal, CoefficientModule{}, field), 0);
}

std::size_t GradedModule::ambient_dim(const Monomial& beta) const { return complex_->basis(t_, beta).size(); }

const std::vector<Vector>& GradedModule::sub(const Monomial& beta) const
{
    switch (part_) {
    case ModulePart::cycles:
    case ModulePart::homology:
        return complex_->cycles(t_, beta);
    case ModulePart::boundaries:
        return complex_->boundaries(t_, beta);
    case ModulePart::chains:
        break;
    }
    return *cached(cache_->mutex, cache_->identity, beta, [&] {
        const std::size_t n = ambient_dim(beta);
        auto id = std::make_shared<std::vector<Vector>>(n, Vector(n, Rational(0)));
        for (std::size_t k = 0; k < n; ++k)
            (*id)[k][k] = 1;
        return std::shared_ptr<const std::vector<Vector>>(std::move(id));
    });
}

const std::vector<Vector>& GradedModule::bound(const Monomial& beta) const
{
    if (part_ == ModulePart::homology)
        return complex_->boundaries(t_, beta);
    return empty_;
}

std::size_t GradedModule::dim_total(int j) const
{
    std::size_t n = 0;
    for (const auto& beta : monomials_of_degree(ring(), j))
        n += dim(beta);
    return n;
}

namespace {

std::shared_ptr<const std::vector<GradedModule::SparseVector>> sparsify(const std::vector<Vector>& dense)
{
    auto out = std::make_shared<std::vector<GradedModule::SparseVector>>();
    out->reserve(dense.size());
    for (const auto& v : dense) {
        GradedModule::SparseVector s;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (sgn(v[k]) != 0)
                s.emplace_back(k, v[k]);
        out->push_back(std::move(s));
    }
    return out;
}

} // namespace

const std::vector<GradedModule::SparseVector>& GradedModule::sparse_sub(const Monomial& beta) const
{
    return *cached(cache_->mutex, cache_->sparse_sub, beta, [&] { return sparsify(sub(beta)); });
}

const std::vector<GradedModule::SparseVector>& GradedModule::sparse_bound(const Monomial& beta) const
{
    return *cached(cache_->mutex, cache_->sparse_bound, beta, [&] { return sparsify(bound(beta)); });
}

Vector GradedModule::multiply(const Monomial& beta, const Vector& v, const Monomial& m) const
{
    return complex_->multiply(t_, beta, v, m);
}

int GradedModule::initial_degree() const
{
    const int shift = part_ == ModulePart::boundaries ? t_ + 1 : t_;
    int deg = shift * complex_->ideal().min_degree();
    if (complex_->coefficients().numerator)
        deg += complex_->coefficients().numerator->min_degree();
    return deg;
}

std::string GradedModule::describe() const
{
    std::ostringstream os;
    switch (part_) {
    case ModulePart::chains:
        os << "K";
        break;
    case ModulePart::cycles:
        os << "Z";
        break;
    case ModulePart::boundaries:
        os << "B";
        break;
    case ModulePart::homology:
        os << "H";
        break;
    }
    os << '_' << t_ << '(' << complex_->ideal().to_string();
    const auto& c = complex_->coefficients();
    if (c.numerator || c.denominator) {
        os << ", ";
        os << (c.numerator ? c.numerator->to_string() : std::string("S"));
        if (c.denominator)
            os << '/' << c.denominator->to_string();
    }
    os << ')';
    return os.str();
}

namespace {

struct TaylorBlock {
    IndexSet set;
    Monomial lcm;
    Monomial quotient; // gamma / lcm
    std::size_t offset = 0;
    std::size_t size = 0;
};

struct TaylorLevel {
    std::vector<TaylorBlock> blocks;
    std::map<IndexSet, std::size_t> lookup;
    std::size_t dim = 0;
};

void enumerate_taylor(const MonomialIdeal& q, const Monomial& gamma, int start, const Monomial& lcm, IndexSet& cur,
                      std::vector<std::vector<std::pair<IndexSet, Monomial>>>& by_size)
{
    by_size[cur.size()].emplace_back(cur, lcm);
    for (int i = start; i < static_cast<int>(q.size()); ++i) {
        Monomial next = lcm.lcm(q.gen(static_cast<std::size_t>(i)));
        if (!next.divides(gamma))
            continue;
        cur.push_back(i);
        enumerate_taylor(q, gamma, i + 1, next, cur, by_size);
        cur.pop_back();
    }
}

std::vector<TaylorLevel> taylor_levels(const MonomialIdeal& q, const GradedModule& m, const Monomial& gamma)
{
    std::vector<std::vector<std::pair<IndexSet, Monomial>>> by_size(q.size() + 1);
    IndexSet cur;
    enumerate_taylor(q, gamma, 0, Monomial::one(gamma.nvars()), cur, by_size);
    std::vector<TaylorLevel> levels(q.size() + 1);
    for (std::size_t k = 0; k < by_size.size(); ++k) {
        auto& level = levels[k];
        std::sort(by_size[k].begin(), by_size[k].end());
        for (auto& [set, lcm] : by_size[k]) {
            TaylorBlock b;
            b.quotient = gamma / lcm;
            b.size = m.ambient_dim(b.quotient);
            b.offset = level.dim;
            b.set = set;
            b.lcm = lcm;
            level.dim += b.size;
            level.lookup.emplace(set, level.blocks.size());
            level.blocks.push_back(std::move(b));
        }
    }
    return levels;
}

// rank of [d(sub) at level k ; bound at level k - 1], inside level k - 1.
std::size_t image_plus_bound_rank(const GradedModule& m, const std::vector<TaylorLevel>& levels, std::size_t k)
{
    if (k == 0 || k > levels.size())
        return 0;
    const auto& dst = levels[k - 1];
    if (dst.dim == 0)
        return 0;
    const KoszulComplex& complex = m.complex();
    const int t = m.homological_degree();
    std::vector<std::map<std::size_t, Rational>> rows;
    if (k < levels.size()) {
        const auto& src = levels[k];
        for (const auto& block : src.blocks) {
            const auto& subs = m.sparse_sub(block.quotient);
            if (subs.empty())
                continue;
            const auto& from = complex.basis(t, block.quotient);
            for (const auto& z : subs) {
                std::map<std::size_t, Rational> image;
                for (std::size_t pos = 0; pos < block.set.size(); ++pos) {
                    IndexSet rest = block.set;
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
                    const auto& target = dst.blocks[dst.lookup.at(rest)];
                    for (const auto& [e, val] : z) {
                        auto idx = complex.basis_index(t, target.quotient, from[e]);
                        if (!idx)
                            continue;
                        Rational& slot = image[target.offset + *idx];
                        if (pos % 2 == 0)
                            slot += val;
                        else
                            slot -= val;
                    }
                }
                rows.push_back(std::move(image));
            }
        }
    }
    for (const auto& block : dst.blocks)
        for (const auto& b : m.sparse_bound(block.quotient)) {
            std::map<std::size_t, Rational> row;
            for (const auto& [e, val] : b)
                row.emplace(block.offset + e, val);
            rows.push_back(std::move(row));
        }
    if (rows.empty())
        return 0;
    SparseMatrix mat(rows.size(), dst.dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, val] : rows[r])
            if (sgn(val) != 0)
                mat.set(r, col, val);
    return rank(mat, m.field());
}

std::size_t level_sum(const GradedModule& m, const std::vector<TaylorLevel>& levels, std::size_t k, bool subs)
{
    if (k >= levels.size())
        return 0;
    std::size_t n = 0;
    for (const auto& block : levels[k].blocks)
        n += subs ? m.sub(block.quotient).size() : m.bound(block.quotient).size();
    return n;
}

struct TaylorComputation {
    const GradedModule& module;
    std::vector<TaylorLevel> levels;
    std::map<std::size_t, std::size_t> ranks;

    std::size_t rank_at(std::size_t k)
    {
        auto it = ranks.find(k);
        if (it != ranks.end())
            return it->second;
        return ranks[k] = image_plus_bound_rank(module, levels, k);
    }

    // dim H_i(Z/B) = dim Z_i - dim(dZ_i + B_{i-1}) + dim B_{i-1} - dim(dZ_{i+1} + B_i)
    std::size_t homology(std::size_t i)
    {
        const std::size_t z_i = level_sum(module, levels, i, true);
        if (z_i == 0)
            return 0;
        const std::size_t b_prev = i == 0 ? 0 : level_sum(module, levels, i - 1, false);
        return z_i + b_prev - rank_at(i) - rank_at(i + 1);
    }
};

std::size_t taylor_homology(const GradedModule& m, const std::vector<TaylorLevel>& levels, std::size_t i)
{
    TaylorComputation comp{m, levels, {}};
    return comp.homology(i);
}

} // namespace

std::size_t taylor_tor(const MonomialIdeal& q, const GradedModule& m, int i, const Monomial& gamma)
{
    if (!(q.ring() == m.ring()))
        throw ChainError("Tor arguments live in different rings");
    if (i < 0 || i > static_cast<int>(q.size()))
        return 0;
    auto levels = taylor_levels(q, m, gamma);
    return taylor_homology(m, levels, static_cast<std::size_t>(i));
}

namespace {

const MonomialIdeal& variables_of(const RingConfig& ring)
{
    thread_local std::map<std::vector<int>, std::shared_ptr<const MonomialIdeal>> cache;
    auto it = cache.find(ring.blocks());
    if (it == cache.end())
        it = cache.emplace(ring.blocks(), variables_ideal(ring)).first;
    return *it->second;
}

} // namespace

std::size_t tor_dims_fine(const GradedModule& m, int i, const Monomial& gamma)
{
    return taylor_tor(variables_of(m.ring()), m, i, gamma);
}

std::size_t tor_dims(const GradedModule& m, int i, int j)
{
    if (i < 0 || i > m.ring().nvars())
        return 0;
    std::size_t n = 0;
    for (const auto& gamma : monomials_of_degree(m.ring(), j))
        n += tor_dims_fine(m, i, gamma);
    return n;
}

long long BettiTable::at(int i, int j) const
{
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second.dim;
}

std::optional<int> BettiTable::top_degree(int i) const
{
    std::optional<int> top;
    for (const auto& [key, e] : entries)
        if (key.first == i && e.dim > 0)
            top = top ? std::max(*top, key.second) : key.second;
    return top;
}

RegScan reg_scan(const GradedModule& m, const RegScanOptions& options)
{
    const int init = m.initial_degree();
    if (options.cap < init)
        throw std::invalid_argument("scan cap " + std::to_string(options.cap) + " lies below the initial degree "
                                    + std::to_string(init) + " of " + m.describe());
    const int n = m.ring().nvars();
    const int max_i = std::min(options.max_i.value_or(n), n);
    RegScan scan;
    scan.cap = options.cap;
    scan.table.cap = options.cap;
    scan.certified = options.vanishing_bound && *options.vanishing_bound <= options.cap;
    const auto& vars = variables_of(m.ring());
    const int excess = options.min_excess.value_or(std::numeric_limits<int>::min() / 2);
    for (int j = init; j <= options.cap + max_i; ++j) {
        std::vector<long long> dims(static_cast<std::size_t>(max_i + 1), 0);
        const int lo = std::max(0, j - options.cap);
        const int hi = std::min({max_i, j - init, j - excess});
        if (lo > hi)
            continue;
        for (const auto& gamma : monomials_of_degree(m.ring(), j)) {
            TaylorComputation comp{m, taylor_levels(vars, m, gamma), {}};
            for (int i = lo; i <= hi; ++i)
                dims[static_cast<std::size_t>(i)] += static_cast<long long>(comp.homology(static_cast<std::size_t>(i)));
        }
        for (int i = lo; i <= hi; ++i) {
            long long d = dims[static_cast<std::size_t>(i)];
            scan.table.entries[{i, j}] = BettiEntry{d, scan.certified};
            if (d > 0 && (!scan.reg || j - i > *scan.reg))
                scan.reg = j - i;
        }
    }
    if (scan.reg)
        for (const auto& [key, e] : scan.table.entries)
            if (e.dim > 0 && key.second - key.first == *scan.reg)
                scan.witnesses.push_back(Witness{key.first, key.second, e.dim});
    return scan;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal)
{
    std::set<Monomial> lattice;
    for (const auto& g : ideal.gens()) {
        std::vector<Monomial> fresh{g};
        for (const auto& x : lattice)
            fresh.push_back(x.lcm(g));
        lattice.insert(fresh.begin(), fresh.end());
    }
    lattice.insert(Monomial::one(ideal.ring().nvars()));
    std::vector<Monomial> out(lattice.begin(), lattice.end());
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return grlex_greater(a, b);
    });
    return out;
}

RegularityResult reg_monomial_ideal_general(const MonomialIdeal& ideal)
{
    if (ideal.ring().nblocks() != 1)
        throw RingError("regularity is computed for the standard grading only");
    if (ideal.is_zero())
        throw RingError("regularity of the zero ideal is undefined");
    GradedModule quotient = GradedModule::quotient_ring(ideal);
    const auto& vars = variables_of(ideal.ring());
    const int n = ideal.ring().nvars();
    int reg_quotient = 0;
    // Tor_i(S/I, K) is supported on the lcm lattice (Taylor resolution).
    for (const auto& gamma : lcm_lattice(ideal)) {
        TaylorComputation comp{quotient, taylor_levels(vars, quotient, gamma), {}};
        for (int i = 0; i <= n; ++i) {
            if (gamma.degree() - i <= reg_quotient)
                continue;
            if (comp.homology(static_cast<std::size_t>(i)) > 0)
                reg_quotient = gamma.degree() - i;
        }
    }
    return RegularityResult{reg_quotient + 1, true, "lcm-lattice"};
}

RegularityResult reg_monomial_ideal(const MonomialIdeal& ideal)
{
    if (ideal.ring().nblocks() != 1)
        throw RingError("regularity is computed for the standard grading only");
    if (!ideal.is_zero() && is_strongly_stable(ideal))
        return RegularityResult{ideal.max_degree(), true, "eliahou-kervaire"};
    return reg_monomial_ideal_general(ideal);
}

} // namespace koszul
