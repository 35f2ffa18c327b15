#ifndef KOSZUL_VERONESE_HPP
#define KOSZUL_VERONESE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "koszul/homology.hpp"
#include "koszul/ring.hpp"
#include "koszul/scalars.hpp"

namespace koszul {

/// A computation was refused because a component exceeds the size ceiling.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, long long estimate, long long ceiling)
        : std::runtime_error(what), estimate_(estimate), ceiling_(ceiling)
    {
    }
    long long estimate() const { return estimate_; }
    long long ceiling() const { return ceiling_; }

private:
    long long estimate_;
    long long ceiling_;
};

inline constexpr long long default_column_ceiling = 50000;

/// Segre-Veronese ring S^(c) for S with variable blocks m_1..m_d.
struct SegreVeroneseSpec {
    std::vector<int> blocks;
    MultiDegree c;
    FieldContext field;
    long long ceiling = default_column_ceiling;

    SegreVeroneseSpec(std::vector<int> blocks, MultiDegree c, FieldContext field = {});

    RingConfig ring() const { return RingConfig(blocks); }
    int min_c() const;
    /// dim S_c, the number of variables of the presentation ring T.
    long long presentation_vars() const;
    std::string describe() const;
};

/// Smallest j with (j - i - 1) min(c) >= i; beta_{i,j} vanishes from there on.
int vanishing_start(int i, int min_c);

/// C(r, i) dim S_{(j-i)c}: columns of the Koszul component behind beta_{i,j}.
long long component_estimate(const SegreVeroneseSpec& spec, int i, int j);

/// beta_{i,j}(S^(c)) over T for 0 <= i <= i_max, every j below the vanishing
/// start. All entries are certified; entries not listed are zero.
BettiTable veronese_betti(const SegreVeroneseSpec& spec, int i_max);

/// Direct computation of beta_{i,j} without any window shortcut.
long long veronese_entry(const SegreVeroneseSpec& spec, int i, int j);

struct IndexResult {
    enum class Status { exact, at_least };
    Status status = Status::at_least;
    int index = 0;
    int i_max = 0;
    /// The first (i, t_i) with t_i > i + 1 when the index is exact.
    std::optional<Witness> witness;
    BettiTable table;

    std::string render() const;
};

IndexResult green_lazarsfeld_index(const SegreVeroneseSpec& spec, int i_max);

struct NpResult {
    bool holds = false;
    IndexResult index;
};

/// N_p: t_i <= i + 1 for i = 1..p.
NpResult np_check(const SegreVeroneseSpec& spec, int p);

} // namespace koszul

#endif // KOSZUL_VERONESE_HPP
