#include "koszul/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace koszul {

bool degree_leq(const MultiDegree& a, const MultiDegree& b)
{
    if (a.size() != b.size())
        throw RingError("multidegree length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

MultiDegree degree_add(const MultiDegree& a, const MultiDegree& b)
{
    if (a.size() != b.size())
        throw RingError("multidegree length mismatch");
    MultiDegree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

MultiDegree degree_sub(const MultiDegree& a, const MultiDegree& b)
{
    if (a.size() != b.size())
        throw RingError("multidegree length mismatch");
    MultiDegree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

MultiDegree degree_scale(int k, const MultiDegree& a)
{
    MultiDegree r(a);
    for (auto& x : r)
        x *= k;
    return r;
}

int degree_total(const MultiDegree& a) { return std::accumulate(a.begin(), a.end(), 0); }

int degree_min(const MultiDegree& a)
{
    if (a.empty())
        throw RingError("empty multidegree");
    return *std::min_element(a.begin(), a.end());
}

RingConfig::RingConfig(std::vector<int> blocks) : blocks_(std::move(blocks))
{
    if (blocks_.empty())
        throw RingError("ring needs at least one block");
    for (int b = 0; b < nblocks(); ++b) {
        if (blocks_[static_cast<std::size_t>(b)] < 1)
            throw RingError("block sizes must be positive");
        starts_.push_back(nvars_);
        for (int j = 0; j < blocks_[static_cast<std::size_t>(b)]; ++j)
            block_of_.push_back(b);
        nvars_ += blocks_[static_cast<std::size_t>(b)];
    }
}

std::string RingConfig::var_name(int var) const
{
    if (nblocks() == 1) {
        static const char* small[] = {"x", "y", "z", "w"};
        if (nvars_ <= 4)
            return small[var];
        return "x" + std::to_string(var + 1);
    }
    int b = block_of(var);
    int j = var - block_start(b);
    bool wide = std::any_of(blocks_.begin(), blocks_.end(), [](int m) { return m >= 10; })
        || nblocks() >= 10;
    return "x" + std::to_string(b + 1) + (wide ? "_" : "") + std::to_string(j + 1);
}

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents))
{
    for (int x : e_)
        if (x < 0)
            throw RingError("negative exponent");
}

Monomial Monomial::variable(int nvars, int var)
{
    Monomial m = one(nvars);
    m.e_[static_cast<std::size_t>(var)] = 1;
    return m;
}

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

MultiDegree Monomial::multidegree(const RingConfig& ring) const
{
    MultiDegree d(static_cast<std::size_t>(ring.nblocks()), 0);
    for (int v = 0; v < nvars(); ++v)
        d[static_cast<std::size_t>(ring.block_of(v))] += e_[static_cast<std::size_t>(v)];
    return d;
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] += other.e_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= other.e_[i];
        if (r.e_[i] < 0)
            throw RingError("monomial division with remainder");
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = std::max(e_[i], other.e_[i]);
    return r;
}

Monomial Monomial::times_variable(int var) const
{
    Monomial r(*this);
    ++r.e_[static_cast<std::size_t>(var)];
    return r;
}

int Monomial::max_var() const
{
    for (int v = nvars() - 1; v >= 0; --v)
        if (e_[static_cast<std::size_t>(v)] > 0)
            return v;
    return -1;
}

int Monomial::min_var() const
{
    for (int v = 0; v < nvars(); ++v)
        if (e_[static_cast<std::size_t>(v)] > 0)
            return v;
    return -1;
}

std::string Monomial::to_string(const RingConfig& ring) const
{
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < nvars(); ++v) {
        int e = e_[static_cast<std::size_t>(v)];
        if (e == 0)
            continue;
        if (!first)
            os << '*';
        first = false;
        os << ring.var_name(v);
        if (e > 1)
            os << '^' << e;
    }
    if (first)
        os << '1';
    return os.str();
}

bool grlex_greater(const Monomial& a, const Monomial& b)
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    return a.exponents() > b.exponents();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : m.exponents()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

MonomialIdeal::MonomialIdeal(RingConfig ring, std::vector<Monomial> gens) : ring_(std::move(ring))
{
    for (const auto& g : gens) {
        if (g.nvars() != ring_.nvars())
            throw RingError("generator has wrong number of variables");
        if (g.is_one())
            throw RingError("the unit ideal is not a valid Koszul input");
    }
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& g : gens) {
        bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
        if (!redundant)
            gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), grlex_greater);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        index_.emplace(gens_[i], i);
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::optional<std::size_t> MonomialIdeal::index_of(const Monomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int MonomialIdeal::max_degree() const
{
    int d = 0;
    for (const auto& g : gens_)
        d = std::max(d, g.degree());
    return d;
}

int MonomialIdeal::min_degree() const
{
    if (gens_.empty())
        return 0;
    int d = gens_.front().degree();
    for (const auto& g : gens_)
        d = std::min(d, g.degree());
    return d;
}

std::optional<MultiDegree> MonomialIdeal::common_multidegree() const
{
    if (gens_.empty())
        return std::nullopt;
    MultiDegree d = gens_.front().multidegree(ring_);
    for (const auto& g : gens_)
        if (g.multidegree(ring_) != d)
            return std::nullopt;
    return d;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const
{
    if (!(ring_ == other.ring_))
        throw RingError("ideals live in different rings");
    std::vector<Monomial> all = gens_;
    all.insert(all.end(), other.gens_.begin(), other.gens_.end());
    return MonomialIdeal(ring_, std::move(all));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const
{
    if (!(ring_ == other.ring_))
        throw RingError("ideals live in different rings");
    std::vector<Monomial> all;
    for (const auto& a : gens_)
        for (const auto& b : other.gens_)
            all.push_back(a * b);
    return MonomialIdeal(ring_, std::move(all));
}

std::string MonomialIdeal::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            os << ", ";
        os << gens_[i].to_string(ring_);
    }
    os << ')';
    return os.str();
}

namespace {

// Exponent vectors of length `len` summing to `total`, lexicographically
// decreasing.
void compositions(int len, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (len == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = total; first >= 0; --first) {
        cur.push_back(first);
        compositions(len - 1, total - first, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Monomial> component_basis(const RingConfig& ring, const MultiDegree& alpha)
{
    if (static_cast<int>(alpha.size()) != ring.nblocks())
        throw RingError("multidegree length does not match the number of blocks");
    for (int a : alpha)
        if (a < 0)
            return {};
    std::vector<std::vector<int>> partial{{}};
    for (int b = 0; b < ring.nblocks(); ++b) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        compositions(ring.blocks()[static_cast<std::size_t>(b)], alpha[static_cast<std::size_t>(b)], cur, parts);
        std::vector<std::vector<int>> next;
        next.reserve(partial.size() * parts.size());
        for (const auto& p : partial)
            for (const auto& q : parts) {
                auto e = p;
                e.insert(e.end(), q.begin(), q.end());
                next.push_back(std::move(e));
            }
        partial = std::move(next);
    }
    std::vector<Monomial> out;
    out.reserve(partial.size());
    for (auto& e : partial)
        out.emplace_back(std::move(e));
    return out;
}

std::vector<Monomial> monomials_of_degree(const RingConfig& ring, int j)
{
    if (j < 0)
        return {};
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    compositions(ring.nvars(), j, cur, parts);
    std::vector<Monomial> out;
    out.reserve(parts.size());
    for (auto& e : parts)
        out.emplace_back(std::move(e));
    return out;
}

long long binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

long long count_monomials(int n, int j)
{
    if (j < 0)
        return 0;
    return binomial(j + n - 1, n - 1);
}

MonomialIdeal power_ideal(const RingConfig& ring, const MultiDegree& c)
{
    if (static_cast<int>(c.size()) != ring.nblocks())
        throw RingError("power vector length does not match the number of blocks");
    if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; }))
        throw RingError("power vector must be non-negative");
    if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; }))
        throw RingError("power vector must be nonzero");
    return MonomialIdeal(ring, component_basis(ring, c));
}

MonomialIdeal block_maximal_ideal(const RingConfig& ring, int block)
{
    std::vector<Monomial> gens;
    for (int v = 0; v < ring.nvars(); ++v)
        if (ring.block_of(v) == block)
            gens.push_back(Monomial::variable(ring.nvars(), v));
    return MonomialIdeal(ring, std::move(gens));
}

bool is_strongly_stable(const MonomialIdeal& ideal)
{
    if (ideal.ring().nblocks() != 1)
        throw RingError("strong stability is defined for the standard grading only");
    const int n = ideal.ring().nvars();
    for (const auto& u : ideal.gens())
        for (int i = 0; i < n; ++i) {
            if (u[i] == 0)
                continue;
            Monomial lowered = u / Monomial::variable(n, i);
            for (int j = 0; j < i; ++j)
                if (!ideal.contains(lowered.times_variable(j)))
                    return false;
        }
    return true;
}

MonomialIdeal borel_closure(const RingConfig& ring, const std::vector<Monomial>& seed)
{
    if (ring.nblocks() != 1)
        throw RingError("Borel closure is defined for the standard grading only");
    const int n = ring.nvars();
    std::set<Monomial> seen(seed.begin(), seed.end());
    std::vector<Monomial> queue(seed.begin(), seed.end());
    while (!queue.empty()) {
        Monomial m = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            if (m[i] == 0)
                continue;
            Monomial lowered = m / Monomial::variable(n, i);
            for (int j = 0; j < i; ++j) {
                Monomial moved = lowered.times_variable(j);
                if (seen.insert(moved).second)
                    queue.push_back(moved);
            }
        }
    }
    return MonomialIdeal(ring, std::vector<Monomial>(seen.begin(), seen.end()));
}

long long quotient_component_dim(const MonomialIdeal& ideal, const MultiDegree& alpha)
{
    long long count = 0;
    for (const auto& m : component_basis(ideal.ring(), alpha))
        if (!ideal.contains(m))
            ++count;
    return count;
}

int monomial_quotient_dim(const MonomialIdeal& ideal)
{
    const int n = ideal.ring().nvars();
    if (n > 24)
        throw RingError("Krull dimension search limited to 24 variables");
    std::vector<unsigned> supports;
    for (const auto& g : ideal.gens()) {
        unsigned s = 0;
        for (int v = 0; v < n; ++v)
            if (g[v] > 0)
                s |= 1u << v;
        supports.push_back(s);
    }
    int best = 0;
    for (unsigned y = 0; y < (1u << n); ++y) {
        int size = __builtin_popcount(y);
        if (size <= best)
            continue;
        bool ok = std::all_of(supports.begin(), supports.end(), [y](unsigned s) { return (s & ~y) != 0; });
        if (ok)
            best = size;
    }
    return best;
}

bool power_containment(const MonomialIdeal& ideal, int k)
{
    if (k < 0)
        throw RingError("negative power");
    for (const auto& m : monomials_of_degree(ideal.ring(), k))
        if (!ideal.contains(m))
            return false;
    return true;
}

std::optional<int> containment_power(const MonomialIdeal& ideal)
{
    if (ideal.is_zero() || monomial_quotient_dim(ideal) != 0)
        return std::nullopt;
    const int n = ideal.ring().nvars();
    // x_v^{a_v} in I for every v, so m^{sum(a_v - 1) + 1} is contained.
    int bound = 1;
    for (int v = 0; v < n; ++v) {
        int a = 0;
        for (const auto& g : ideal.gens())
            if (g.degree() == g[v])
                a = a == 0 ? g[v] : std::min(a, g[v]);
        bound += a - 1;
    }
    for (int k = 0; k <= bound; ++k)
        if (power_containment(ideal, k))
            return k;
    return bound;
}

} // namespace koszul
