#include "koszul/veronese.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "koszul/parallel.hpp"

namespace koszul {

SegreVeroneseSpec::SegreVeroneseSpec(std::vector<int> b, MultiDegree cc, FieldContext f)
    : blocks(std::move(b)), c(std::move(cc)), field(f)
{
    if (blocks.empty() || blocks.size() != c.size())
        throw std::invalid_argument("blocks and c must have the same positive length");
    for (int m : blocks)
        if (m < 1)
            throw std::invalid_argument("every block needs at least one variable");
    for (int ci : c)
        if (ci < 1)
            throw std::invalid_argument("every c_i must be at least 1");
}

int SegreVeroneseSpec::min_c() const { return *std::min_element(c.begin(), c.end()); }

long long SegreVeroneseSpec::presentation_vars() const
{
    long long n = 1;
    for (std::size_t k = 0; k < blocks.size(); ++k)
        n *= count_monomials(blocks[k], c[k]);
    return n;
}

std::string SegreVeroneseSpec::describe() const
{
    std::ostringstream os;
    os << "blocks=(";
    for (std::size_t k = 0; k < blocks.size(); ++k)
        os << (k ? "," : "") << blocks[k];
    os << ") c=(";
    for (std::size_t k = 0; k < c.size(); ++k)
        os << (k ? "," : "") << c[k];
    os << ")";
    return os.str();
}

int vanishing_start(int i, int min_c)
{
    // (j - i - 1) min_c >= i  <=>  j >= i + 1 + ceil(i / min_c)
    return i + 1 + (i + min_c - 1) / min_c;
}

long long component_estimate(const SegreVeroneseSpec& spec, int i, int j)
{
    if (j < i)
        return 0;
    long long dim = 1;
    for (std::size_t k = 0; k < spec.blocks.size(); ++k)
        dim *= count_monomials(spec.blocks[k], (j - i) * spec.c[k]);
    return binomial(spec.presentation_vars(), i) * dim;
}

namespace {

std::shared_ptr<const KoszulComplex> complex_for(const SegreVeroneseSpec& spec)
{
    auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(spec.ring(), spec.c));
    return std::make_shared<const KoszulComplex>(ideal, CoefficientModule{}, spec.field);
}

void check_feasible(const SegreVeroneseSpec& spec, int i, int j)
{
    const long long est = component_estimate(spec, i, j);
    if (est > spec.ceiling) {
        std::ostringstream os;
        os << "beta_{" << i << "," << j << "} of " << spec.describe() << " needs about " << est
           << " columns, above the ceiling " << spec.ceiling;
        throw InfeasibleError(os.str(), est, spec.ceiling);
    }
}

} // namespace

long long veronese_entry(const SegreVeroneseSpec& spec, int i, int j)
{
    if (i < 0 || j < 0)
        return 0;
    check_feasible(spec, i, j);
    auto complex = complex_for(spec);
    return static_cast<long long>(homology_dim(*complex, i, degree_scale(j, spec.c)));
}

BettiTable veronese_betti(const SegreVeroneseSpec& spec, int i_max)
{
    if (i_max < 1)
        throw std::invalid_argument("i_max must be at least 1");
    const int mc = spec.min_c();
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i <= i_max; ++i)
        for (int j = i; j < vanishing_start(i, mc); ++j)
            cells.emplace_back(i, j);
    for (const auto& [i, j] : cells)
        check_feasible(spec, i, j);

    auto complex = complex_for(spec);
    std::vector<long long> dims(cells.size(), 0);
    parallel_for(cells.size(), [&](std::size_t k) {
        const auto [i, j] = cells[k];
        dims[k] = static_cast<long long>(homology_dim(*complex, i, degree_scale(j, spec.c)));
    });

    BettiTable table;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        table.entries[cells[k]] = BettiEntry{dims[k], true};
        table.cap = std::max(table.cap, cells[k].second);
    }
    return table;
}

std::string IndexResult::render() const
{
    std::ostringstream os;
    if (status == Status::exact) {
        os << "= " << index;
        if (witness)
            os << " (t_" << witness->i << " = " << witness->j << ")";
    } else {
        os << ">= " << index;
    }
    return os.str();
}

IndexResult green_lazarsfeld_index(const SegreVeroneseSpec& spec, int i_max)
{
    IndexResult result;
    result.i_max = i_max;
    result.table = veronese_betti(spec, i_max);
    for (int i = 1; i <= i_max; ++i) {
        auto top = result.table.top_degree(i);
        if (top && *top > i + 1) {
            result.status = IndexResult::Status::exact;
            result.index = i - 1;
            result.witness = Witness{i, *top, result.table.at(i, *top)};
            return result;
        }
    }
    result.status = IndexResult::Status::at_least;
    result.index = i_max;
    return result;
}

NpResult np_check(const SegreVeroneseSpec& spec, int p)
{
    if (p < 1)
        throw std::invalid_argument("p must be at least 1");
    NpResult r;
    r.index = green_lazarsfeld_index(spec, p);
    r.holds = r.index.status == IndexResult::Status::at_least;
    return r;
}

} // namespace koszul
