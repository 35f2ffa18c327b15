// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "koszul/cycles.hpp"
#include "koszul/harness.hpp"
#include "koszul/homology.hpp"
#include "koszul/veronese.hpp"

using namespace koszul;

namespace {

struct Outcome {
    bool ok = false;
    std::string note;
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= limit_seconds) {
        o.ok = false;
        o.note += " (over the time limit)";
    }
    if (!o.ok)
        ++failures;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << t.str() << " s] "
              << o.note << std::endl;
}

std::string counts(const SuiteReport& r)
{
    return r.suite + " " + std::to_string(r.count(Verdict::pass)) + "/" + std::to_string(r.cases.size());
}

} // namespace

int main()
{
    criterion(1, "sign identity and Koszul map identities", 60, [] {
        HarnessOptions o;
        auto signs = run_suite("signs", o);
        o.size = 200;
        auto maps = run_suite("maps", o);
        const bool triples = signs.cases.at(0).detail["triples"] == 4096;
        return Outcome{signs.verdict() == Verdict::pass && maps.verdict() == Verdict::pass && triples &&
                           maps.cases.size() >= 200,
                       counts(signs) + ", " + counts(maps)};
    });

    criterion(2, "beta_{1,2} of Veronese rings equals the quadric count", 30, [] {
        const std::vector<std::pair<int, int>> specs{{2, 2}, {2, 3}, {3, 2}};
        const std::vector<long long> expected{1, 3, 6};
        bool ok = true;
        std::string note;
        for (std::size_t k = 0; k < specs.size(); ++k) {
            auto [n, c] = specs[k];
            const long long r = count_monomials(n, c);
            const long long quadrics = r * (r + 1) / 2 - count_monomials(n, 2 * c);
            const long long b = veronese_betti(SegreVeroneseSpec({n}, {c}), 1).at(1, 2);
            ok = ok && b == quadrics && b == expected[k];
            note += "(" + std::to_string(n) + "," + std::to_string(c) + ")=" + std::to_string(b) + " ";
        }
        return Outcome{ok, note};
    });

    criterion(3, "Green-Lazarsfeld index at least min(c)+1", 600, [] {
        bool ok = true;
        std::string note;
        for (auto [blocks, c] : std::vector<std::pair<std::vector<int>, MultiDegree>>{{{3}, {2}}, {{2, 2}, {1, 1}}}) {
            SegreVeroneseSpec spec(blocks, c);
            const int need = spec.min_c() + 1;
            auto idx = green_lazarsfeld_index(spec, need);
            bool certified = true;
            for (const auto& [ij, e] : idx.table.entries)
                certified = certified && e.certified;
            ok = ok && certified && (idx.status == IndexResult::Status::at_least || idx.index >= need);
            note += spec.describe() + " " + idx.render() + "; ";
        }
        return Outcome{ok, note};
    });

    criterion(4, "Z_1^t and Z_t agree from degree t(c+1) on", 600, [] {
        bool ok = true;
        int compared = 0, skipped = 0;
        for (int n : {2, 3})
            for (int c : {1, 2})
                for (int t : {2, 3}) {
                    auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(RingConfig::standard(n), {c}));
                    KoszulComplex k(ideal);
                    if (t > k.rank()) {
                        ++skipped;
                        continue;
                    }
                    for (int j = t * (c + 1); j <= t * (c + 1) + 3; ++j) {
                        ok = ok && z1_power_dim(k, t, {j}) == cycle_dim(k, t, {j});
                        ++compared;
                    }
                }
        return Outcome{ok, std::to_string(compared) + " degrees compared, " + std::to_string(skipped) + " skipped"};
    });

    criterion(5, "the two gen2 families generate Z_2 up to degree 2c+2", 600, [] {
        bool ok = true;
        std::string note;
        for (auto [n, c] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
            auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(RingConfig::standard(n), {c}));
            KoszulComplex k(ideal);
            std::vector<KoszulChain> chains;
            for (const auto& f : gen2_families(ideal))
                chains.push_back(f.chain);
            const bool g = generates_up_to(k, 2, chains, {2 * c + 2}).generates;
            ok = ok && g;
            note += "(" + std::to_string(n) + "," + std::to_string(c) + "):" + (g ? "yes " : "no ");
        }
        return Outcome{ok, note};
    });

    criterion(6, "regularity suites find no violations", 1200, [] {
        HarnessOptions o;
        o.size = 50;
        bool ok = true;
        std::string note;
        for (const std::string s : {"regb", "greeny", "remark_b", "thm1", "piper", "sato"}) {
            auto r = run_suite(s, o);
            ok = ok && r.cases.size() >= 50 && r.count(Verdict::violation) == 0 && r.verdict() == Verdict::pass;
            note += counts(r) + " ";
        }
        return Outcome{ok, note};
    });

    criterion(7, "multi2 products lie in m_i^(c_i) Z + B", 300, [] {
        bool ok = true;
        std::size_t total = 0;
        struct Case {
            std::vector<int> blocks;
            MultiDegree c;
            int block;
        };
        for (const auto& cs : std::vector<Case>{{{2, 2}, {1, 1}, 0}, {{2, 2}, {1, 1}, 1}, {{3}, {2}, 0}}) {
            auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(RingConfig(cs.blocks), cs.c));
            KoszulComplex k(ideal);
            long long factorial = 1;
            for (int m = 2; m <= cs.c[static_cast<std::size_t>(cs.block)] + 1; ++m)
                factorial *= m;
            for (const auto& trial : multi2_trials(ideal, cs.block)) {
                auto r = multi2_membership(k, trial);
                ok = ok && r.member && r.factor == Rational(static_cast<long>(factorial));
                ++total;
            }
        }
        return Outcome{ok && total > 0, std::to_string(total) + " trials"};
    });

    criterion(8, "surjectivity of Z_1 x Z_1 -> Z_2 matches Tor_1 vanishing", 300, [] {
        auto compare = [](int n, int c, int max_j, int& surjective, int& degrees) {
            auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(RingConfig::standard(n), {c}));
            auto k = std::make_shared<const KoszulComplex>(ideal);
            GradedModule z1 = GradedModule::koszul_cycles(k, 1);
            bool ok = true;
            for (int j = 0; j <= max_j; ++j) {
                std::size_t tor = 0;
                for (const auto& g : monomials_of_degree(ideal->ring(), j))
                    tor += taylor_tor(*ideal, z1, 1, g);
                const bool s = z1_power_dim(*k, 2, {j}) == cycle_dim(*k, 2, {j});
                surjective += s;
                ++degrees;
                ok = ok && s == (tor == 0);
            }
            return ok;
        };
        int s2 = 0, d2 = 0, s3 = 0, d3 = 0;
        const bool main = compare(2, 2, 10, s2, d2);
        // three variables, where surjectivity does fail in low degree
        const bool extra = compare(3, 1, 8, s3, d3) && compare(3, 2, 8, s3, d3);
        return Outcome{main && extra, "n=2 c=2: " + std::to_string(s2) + "/" + std::to_string(d2) +
                                          " degrees surjective; n=3 c=1,2: " + std::to_string(s3) + "/" +
                                          std::to_string(d3)};
    });

    criterion(9, "identical seeds give byte-identical JSON", 600, [] {
        HarnessOptions o;
        o.seed = 20261018;
        o.size = 20;
        bool ok = true;
        for (const std::string s : {"maps", "regb", "sato", "check"})
            ok = ok && run_suite(s, o).to_json().dump() == run_suite(s, o).to_json().dump();
        return Outcome{ok, "maps, regb, sato, check"};
    });

    return failures == 0 ? 0 : 1;
}
