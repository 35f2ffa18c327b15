#include "koszul/exterior.hpp"

#include <algorithm>
#include <sstream>

namespace koszul {

int sign(const IndexSet& a, const IndexSet& b)
{
    int inversions = 0;
    for (int x : a)
        for (int y : b) {
            if (x == y)
                throw ChainError("sign of overlapping index sets");
            if (x > y)
                ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b)
{
    IndexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b)
{
    IndexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool is_subset(const IndexSet& sub, const IndexSet& super)
{
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::vector<IndexSet> subsets_of_size(int r, int k)
{
    std::vector<IndexSet> out;
    if (k < 0 || k > r)
        return out;
    IndexSet cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == r - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

bool TermKeyLess::operator()(const std::pair<IndexSet, Monomial>& a, const std::pair<IndexSet, Monomial>& b) const
{
    if (a.first != b.first)
        return a.first < b.first;
    return grlex_greater(a.second, b.second);
}

KoszulChain::KoszulChain(IdealPtr ideal, int t) : ideal_(std::move(ideal)), t_(t)
{
    if (!ideal_)
        throw ChainError("chain needs an ideal");
    if (t < 0)
        throw ChainError("negative homological degree");
}

KoszulChain KoszulChain::basis(IdealPtr ideal, IndexSet set, Monomial w, Rational coeff)
{
    KoszulChain c(std::move(ideal), static_cast<int>(set.size()));
    c.add_term(set, w, coeff);
    return c;
}

KoszulChain KoszulChain::bracket(IdealPtr ideal, const std::vector<Monomial>& gens, Monomial w, Rational coeff)
{
    KoszulChain c(ideal, static_cast<int>(gens.size()));
    std::vector<int> idx;
    for (const auto& g : gens) {
        auto i = ideal->index_of(g);
        if (!i)
            throw ChainError("bracket entry " + g.to_string(ideal->ring()) + " is not a generator");
        idx.push_back(static_cast<int>(*i));
    }
    // sign of the sorting permutation; zero on repeats
    int s = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j])
                return c;
            if (idx[i] > idx[j])
                s = -s;
        }
    std::sort(idx.begin(), idx.end());
    c.add_term(idx, w, s > 0 ? coeff : Rational(-coeff));
    return c;
}

void KoszulChain::add_term(const IndexSet& set, const Monomial& w, const Rational& coeff)
{
    if (static_cast<int>(set.size()) != t_)
        throw ChainError("index set size does not match the homological degree");
    if (w.nvars() != ideal_->ring().nvars())
        throw ChainError("coefficient monomial has wrong number of variables");
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] < 0 || set[i] >= static_cast<int>(ideal_->size()))
            throw ChainError("index out of range");
        if (i > 0 && set[i] <= set[i - 1])
            throw ChainError("index set must be strictly increasing");
    }
    if (sgn(coeff) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(Key{set, w}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Rational KoszulChain::coefficient(const IndexSet& set, const Monomial& w) const
{
    auto it = terms_.find(Key{set, w});
    return it == terms_.end() ? Rational(0) : it->second;
}

void KoszulChain::check_compatible(const KoszulChain& other) const
{
    if (ideal_ != other.ideal_ && !(*ideal_ == *other.ideal_))
        throw ChainError("chains over different ideals");
}

KoszulChain& KoszulChain::operator+=(const KoszulChain& other)
{
    check_compatible(other);
    if (other.t_ != t_)
        throw ChainError("adding chains of different homological degree");
    for (const auto& [k, c] : other.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

KoszulChain& KoszulChain::operator-=(const KoszulChain& other)
{
    check_compatible(other);
    if (other.t_ != t_)
        throw ChainError("subtracting chains of different homological degree");
    for (const auto& [k, c] : other.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

KoszulChain KoszulChain::operator+(const KoszulChain& other) const
{
    KoszulChain r(*this);
    r += other;
    return r;
}

KoszulChain KoszulChain::operator-(const KoszulChain& other) const
{
    KoszulChain r(*this);
    r -= other;
    return r;
}

KoszulChain KoszulChain::operator*(const Rational& scalar) const
{
    KoszulChain r(ideal_, t_);
    if (sgn(scalar) == 0)
        return r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, c * scalar);
    return r;
}

KoszulChain KoszulChain::times(const Monomial& m) const
{
    KoszulChain r(ideal_, t_);
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(Key{k.first, k.second * m}, c);
    return r;
}

Monomial KoszulChain::term_degree(const Key& key) const
{
    Monomial d = key.second;
    for (int i : key.first)
        d = d * ideal_->gen(static_cast<std::size_t>(i));
    return d;
}

std::optional<Monomial> KoszulChain::fine_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    Monomial d = term_degree(terms_.begin()->first);
    for (const auto& [k, c] : terms_)
        if (term_degree(k) != d)
            return std::nullopt;
    return d;
}

bool KoszulChain::is_homogeneous() const { return terms_.empty() || fine_degree().has_value(); }

std::string KoszulChain::render() const
{
    if (terms_.empty())
        return "0";
    const RingConfig& ring = ideal_->ring();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str() << " * [";
        for (std::size_t i = 0; i < k.first.size(); ++i) {
            if (i)
                os << ',';
            os << ideal_->gen(static_cast<std::size_t>(k.first[i])).to_string(ring);
        }
        os << "] * " << k.second.to_string(ring);
    }
    return os.str();
}

bool KoszulChain::operator==(const KoszulChain& other) const
{
    return t_ == other.t_ && *ideal_ == *other.ideal_ && terms_ == other.terms_;
}

KoszulChain boundary(const KoszulChain& f)
{
    if (f.degree() < 1)
        throw ChainError("boundary of a degree-0 chain");
    KoszulChain r(f.ideal_ptr(), f.degree() - 1);
    for (const auto& [k, c] : f.terms()) {
        const IndexSet& set = k.first;
        for (std::size_t pos = 0; pos < set.size(); ++pos) {
            IndexSet rest = set;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
            Monomial w = k.second * f.ideal().gen(static_cast<std::size_t>(set[pos]));
            r.add_term(rest, w, pos % 2 == 0 ? c : Rational(-c));
        }
    }
    return r;
}

KoszulChain wedge(const KoszulChain& a, const KoszulChain& f)
{
    if (a.ideal_ptr() != f.ideal_ptr() && !(a.ideal() == f.ideal()))
        throw ChainError("wedge of chains over different ideals");
    KoszulChain r(f.ideal_ptr(), a.degree() + f.degree());
    if (a.degree() + f.degree() > static_cast<int>(f.ideal().size()))
        return r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kf, cf] : f.terms()) {
            bool overlap = false;
            for (int x : ka.first)
                if (std::binary_search(kf.first.begin(), kf.first.end(), x)) {
                    overlap = true;
                    break;
                }
            if (overlap)
                continue;
            Rational coeff = ca * cf;
            if (sign(ka.first, kf.first) < 0)
                coeff = -coeff;
            r.add_term(set_union(ka.first, kf.first), ka.second * kf.second, coeff);
        }
    return r;
}

Decomposition decompose(const KoszulChain& f, const IndexSet& set)
{
    if (static_cast<int>(set.size()) > f.degree())
        throw ChainError("decomposition index set larger than the chain degree");
    Decomposition d{KoszulChain(f.ideal_ptr(), f.degree()),
                    KoszulChain(f.ideal_ptr(), f.degree() - static_cast<int>(set.size()))};
    for (const auto& [k, c] : f.terms()) {
        if (is_subset(set, k.first)) {
            IndexSet rest = set_difference(k.first, set);
            // e_I . e_rest = sign(I, rest) e_J
            d.b.add_term(rest, k.second, sign(set, rest) > 0 ? c : Rational(-c));
        } else {
            d.a.add_term(k.first, k.second, c);
        }
    }
    return d;
}

GammaImage gamma_map(const KoszulChain& f, int s)
{
    if (s < 0 || s > f.degree())
        throw ChainError("gamma map needs 0 <= s <= degree");
    GammaImage g;
    for (const auto& set : subsets_of_size(static_cast<int>(f.ideal().size()), s)) {
        KoszulChain b = decompose(f, set).b;
        if (!b.is_zero())
            g.emplace(set, std::move(b));
    }
    return g;
}

KoszulChain alpha_map(const GammaImage& g, const IdealPtr& ideal, int total_degree)
{
    KoszulChain r(ideal, total_degree);
    for (const auto& [set, b] : g) {
        KoszulChain e = KoszulChain::basis(ideal, set, Monomial::one(ideal->ring().nvars()));
        r += wedge(e, b);
    }
    return r;
}

GammaImage outer_boundary(const GammaImage& g, const IdealPtr& ideal)
{
    GammaImage r;
    for (const auto& [set, b] : g) {
        for (std::size_t pos = 0; pos < set.size(); ++pos) {
            IndexSet rest = set;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
            KoszulChain term = b.times(ideal->gen(static_cast<std::size_t>(set[pos])));
            if (pos % 2 == 1)
                term = term * Rational(-1);
            auto it = r.find(rest);
            if (it == r.end())
                r.emplace(rest, std::move(term));
            else
                it->second += term;
        }
    }
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

bool gamma_equal(const GammaImage& a, const GammaImage& b)
{
    if (a.size() != b.size())
        return false;
    for (const auto& [set, chain] : a) {
        auto it = b.find(set);
        if (it == b.end() || !(it->second == chain))
            return false;
    }
    return true;
}

} // namespace koszul
