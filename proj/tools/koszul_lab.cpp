#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "koszul/cycles.hpp"
#include "koszul/harness.hpp"
#include "koszul/homology.hpp"
#include "koszul/io.hpp"
#include "koszul/veronese.hpp"

using namespace koszul;

namespace {

std::vector<int> parse_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad integer list: " + text);
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list");
    return out;
}

void emit(const Json& j, const std::string& format, const std::string& table)
{
    if (format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << table;
}

std::string betti_table_text(const BettiTable& t)
{
    std::ostringstream os;
    os << "   i    j  dim\n";
    for (const auto& [ij, e] : t.entries)
        os << std::setw(4) << ij.first << ' ' << std::setw(4) << ij.second << ' ' << std::setw(4) << e.dim
           << (e.certified ? "" : "  (capped)") << '\n';
    return os.str();
}

/// Symmetrized cycles for m^c in one block: t+1 distinct variables, b of degree c-1.
std::vector<CycleFamily> sym_families(const IdealPtr& ideal, int n, int c, int t)
{
    std::vector<CycleFamily> out;
    std::vector<Monomial> bs = monomials_of_degree(ideal->ring(), c - 1);
    std::vector<int> vars;
    std::function<void(int)> choose_a;
    std::vector<std::size_t> bidx;
    std::function<void(std::size_t)> choose_b = [&](std::size_t start) {
        if (static_cast<int>(bidx.size()) == t) {
            std::vector<Monomial> a, b;
            for (int v : vars)
                a.push_back(Monomial::variable(n, v));
            for (auto k : bidx)
                b.push_back(bs[k]);
            KoszulChain z = symmetrized_cycle(ideal, a, b);
            if (!z.is_zero())
                out.push_back(CycleFamily{FamilyLabel::symmetrized, a, b, {}, z});
            return;
        }
        for (std::size_t k = start; k < bs.size(); ++k) {
            bidx.push_back(k);
            choose_b(k);
            bidx.pop_back();
        }
    };
    choose_a = [&](int start) {
        if (static_cast<int>(vars.size()) == t + 1) {
            choose_b(0);
            return;
        }
        for (int v = start; v < n; ++v) {
            vars.push_back(v);
            choose_a(v + 1);
            vars.pop_back();
        }
    };
    choose_a(0);
    return out;
}

/// Symmetrized cycles of homological degree t together with wedges of z1
/// generators with the candidates of degree t - 1.
std::vector<KoszulChain> search_candidates(const IdealPtr& ideal, int n, int c, int t)
{
    std::vector<KoszulChain> out;
    for (const auto& f : sym_families(ideal, n, c, t))
        out.push_back(f.chain);
    if (t == 1) {
        for (const auto& f : z1_generators(ideal))
            out.push_back(f.chain);
        return out;
    }
    const auto lower = search_candidates(ideal, n, c, t - 1);
    const auto z1 = z1_generators(ideal);
    if (lower.size() * z1.size() > family_warning_threshold)
        warn("search enumerates " + std::to_string(lower.size() * z1.size()) + " products");
    for (const auto& z : z1)
        for (const auto& f : lower) {
            KoszulChain p = wedge(z.chain, f);
            if (!p.is_zero())
                out.push_back(std::move(p));
        }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"koszul-lab: Koszul cycles, regularity and Veronese syzygies"};
    app.require_subcommand(1);

    std::string field_text = "rat";
    std::string format = "table";
    app.add_option("--field", field_text, "rat or p=P")->capture_default_str();
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::uint64_t seed = 1;
    std::optional<std::size_t> size;
    int cap = 2;
    bool timing = false;
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", seed);
    verify->add_option("--size", size, "random cases (random suites only)");
    verify->add_option("--cap", cap, "degree slack past each bound")->capture_default_str();
    verify->add_flag("--timing", timing, "include wall time");

    auto* homology = app.add_subcommand("homology", "dimensions of K(I,S) in one total degree");
    std::string ideal_file, degree_text;
    int t = 1;
    homology->add_option("--ideal", ideal_file, "ideal JSON file")->required();
    homology->add_option("--t", t)->required();
    homology->add_option("--degree", degree_text, "total degree or multidegree a,b,..")->required();

    auto* cycles = app.add_subcommand("cycles", "list cycle families of m^c");
    std::string family;
    int n = 2, c = 1, ct = 1;
    cycles->add_option("--family", family)->required()->check(CLI::IsMember({"z1", "sym", "gen2"}));
    cycles->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    cycles->add_option("--c", c)->required()->check(CLI::PositiveNumber);
    cycles->add_option("--t", ct, "homological degree for sym")->check(CLI::PositiveNumber);
    std::optional<int> check_up_to;
    cycles->add_option("--check-up-to", check_up_to,
                       "with sym: test whether symmetrized cycles and products of lower families generate Z_t up to this degree");

    auto* betti = app.add_subcommand("betti", "Betti table of a Segre-Veronese ring");
    std::string blocks_text, c_text;
    int imax = 2;
    betti->add_option("--blocks", blocks_text)->required();
    betti->add_option("--c", c_text)->required();
    betti->add_option("--imax", imax)->capture_default_str()->check(CLI::NonNegativeNumber);
    betti->add_flag("--timing", timing);

    auto* index = app.add_subcommand("index", "Green-Lazarsfeld index of a Segre-Veronese ring");
    index->add_option("--blocks", blocks_text)->required();
    index->add_option("--c", c_text)->required();
    index->add_option("--imax", imax)->capture_default_str()->check(CLI::PositiveNumber);
    index->add_flag("--timing", timing);

    auto* probe = app.add_subcommand("probe-q1", "capped search for cycle regularity above t(reg I + 1)");
    ProbeOptions popt;
    probe->add_option("--seed", popt.seed);
    probe->add_option("--size", popt.size)->capture_default_str();
    probe->add_option("--cap", popt.slack)->capture_default_str();
    probe->add_option("--max-t", popt.max_t)->capture_default_str();
    probe->add_option("--n", popt.n_max, "largest number of variables")->capture_default_str();
    probe->add_flag("--strongly-stable", popt.strongly_stable);
    probe->add_flag("--timing", popt.timing);

    for (auto* sub : {verify, homology, cycles, betti, index, probe}) {
        sub->add_option("--field", field_text, "rat or p=P");
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const FieldContext field = FieldContext::parse(field_text);
        if (verify->parsed()) {
            HarnessOptions o;
            o.seed = seed;
            o.size = size;
            o.slack = cap;
            o.field = field;
            o.timing = timing;
            SuiteReport r = run_suite(suite, o);
            emit(r.to_json(), format, r.to_table());
            return r.exit_code();
        }
        if (probe->parsed()) {
            popt.field = field;
            SuiteReport r = probe_q1(popt);
            emit(r.to_json(), format, r.to_table());
            return r.exit_code();
        }
        if (homology->parsed()) {
            auto ideal = std::make_shared<const MonomialIdeal>(read_ideal_file(ideal_file));
            MultiDegree alpha = parse_list(degree_text);
            if (static_cast<int>(alpha.size()) != ideal->ring().nblocks())
                throw std::invalid_argument("degree needs one entry per block");
            KoszulComplex complex(ideal, CoefficientModule{}, field);
            const std::size_t k = chain_dim(complex, t, alpha), z = cycle_dim(complex, t, alpha),
                              b = boundary_dim(complex, t, alpha), h = homology_dim(complex, t, alpha);
            Json j{{"ideal", ideal_to_json(*ideal)}, {"t", t}, {"degree", alpha}, {"field", field.name()},
                   {"chains", k}, {"cycles", z}, {"boundaries", b}, {"homology", h}};
            std::ostringstream os;
            os << "K_" << t << " in degree (" << degree_text << "): chains " << k << ", cycles " << z
               << ", boundaries " << b << ", homology " << h << '\n';
            emit(j, format, os.str());
            return 0;
        }
        if (cycles->parsed()) {
            auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(RingConfig::standard(n), {c}));
            std::vector<CycleFamily> fams;
            if (family == "z1")
                fams = z1_generators(ideal);
            else if (family == "gen2")
                fams = gen2_families(ideal, field);
            else
                fams = sym_families(ideal, n, c, ct);
            Json arr = Json::array();
            std::ostringstream os;
            for (const auto& f : fams) {
                arr.push_back(family_to_json(f));
                os << to_string(f.label) << ": " << f.chain.render() << '\n';
            }
            os << fams.size() << " cycles\n";
            Json out{{"family", family}, {"n", n}, {"c", c}, {"cycles", arr}, {"count", fams.size()}};
            if (check_up_to) {
                if (family != "sym")
                    throw std::invalid_argument("--check-up-to needs --family sym");
                auto candidates = search_candidates(ideal, n, c, ct);
                KoszulComplex complex(ideal, CoefficientModule{}, field);
                GenerationResult g = generates_up_to(complex, ct, candidates, {*check_up_to});
                Json gen{{"t", ct}, {"up_to", *check_up_to}, {"candidates", candidates.size()},
                         {"generates", g.generates}};
                if (!g.generates)
                    gen["failing_degree"] = *g.failing_degree;
                out["generation"] = gen;
                os << "symmetrized cycles and products, t=" << ct << ": "
                   << (g.generates ? "generate" : "do not generate") << " Z_" << ct << " through degree "
                   << *check_up_to;
                if (!g.generates)
                    os << " (first gap in degree " << (*g.failing_degree)[0] << ")";
                os << '\n';
            }
            emit(out, format, os.str());
            return 0;
        }
        SegreVeroneseSpec spec(parse_list(blocks_text), parse_list(c_text), field);
        const auto start = std::chrono::steady_clock::now();
        auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
        Json echo{{"blocks", spec.blocks}, {"c", spec.c}, {"field", field.name()}, {"i_max", imax}};
        if (betti->parsed()) {
            BettiTable table = veronese_betti(spec, imax);
            Json j = betti_to_json(table);
            j["spec"] = echo;
            if (timing)
                j["wall_seconds"] = elapsed();
            emit(j, format, spec.describe() + "\n" + betti_table_text(table));
            return 0;
        }
        IndexResult r = green_lazarsfeld_index(spec, imax);
        Json j{{"spec", echo}, {"index", r.render()}, {"status", r.status == IndexResult::Status::exact ? "exact" : "at_least"},
               {"value", r.index}, {"betti", betti_to_json(r.table)}};
        if (r.witness)
            j["witness"] = Json{{"i", r.witness->i}, {"j", r.witness->j}, {"dim", r.witness->dim}};
        if (timing)
            j["wall_seconds"] = elapsed();
        emit(j, format, spec.describe() + " index " + r.render() + "\n");
        return 0;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const FieldError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
