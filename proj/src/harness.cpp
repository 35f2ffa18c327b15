#include "koszul/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "koszul/cycles.hpp"
#include "koszul/exterior.hpp"
#include "koszul/homology.hpp"
#include "koszul/parallel.hpp"
#include "koszul/veronese.hpp"

namespace koszul {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::violation:
        return "violation";
    case Verdict::infeasible:
        return "infeasible";
    }
    return "unknown";
}

std::string to_string(CorpusShape shape)
{
    switch (shape) {
    case CorpusShape::plain:
        return "plain";
    case CorpusShape::artinian:
        return "artinian";
    case CorpusShape::borel:
        return "borel";
    case CorpusShape::borel_artinian:
        return "borel_artinian";
    case CorpusShape::low_dimension:
        return "low_dimension";
    case CorpusShape::positive_dimension:
        return "positive_dimension";
    }
    return "unknown";
}

std::size_t SuiteReport::count(Verdict v) const
{
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [v](const CaseRecord& c) { return c.verdict == v; }));
}

Verdict SuiteReport::verdict() const
{
    if (count(Verdict::violation) > 0)
        return Verdict::violation;
    if (count(Verdict::infeasible) > 0)
        return Verdict::infeasible;
    return Verdict::pass;
}

int SuiteReport::exit_code() const
{
    switch (verdict()) {
    case Verdict::pass:
        return 0;
    case Verdict::violation:
        return 1;
    case Verdict::infeasible:
        return 3;
    }
    return 1;
}

Json SuiteReport::to_json() const
{
    Json cs = Json::array();
    for (const auto& c : cases)
        cs.push_back(Json{{"index", c.index}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    Json j{{"suite", suite},
           {"statement", statement},
           {"seed", options.seed},
           {"size", size_label},
           {"slack", options.slack},
           {"field", options.field.name()},
           {"corpus", corpus},
           {"cases", cs},
           {"summary",
            {{"pass", count(Verdict::pass)},
             {"violation", count(Verdict::violation)},
             {"infeasible", count(Verdict::infeasible)}}},
           {"verdict", to_string(verdict())}};
    if (!findings.is_null())
        j["findings"] = findings;
    if (wall_seconds)
        j["wall_seconds"] = *wall_seconds;
    return j;
}

std::string SuiteReport::to_table() const
{
    std::ostringstream os;
    os << suite << ": " << statement << '\n';
    os << "seed " << options.seed << ", size " << size_label << ", field " << options.field.name() << '\n';
    for (const auto& c : cases) {
        os << std::setw(5) << c.index << "  " << std::setw(10) << std::left << to_string(c.verdict) << std::right;
        if (c.detail.contains("summary"))
            os << "  " << c.detail["summary"].get<std::string>();
        os << '\n';
    }
    os << "pass " << count(Verdict::pass) << ", violation " << count(Verdict::violation) << ", infeasible "
       << count(Verdict::infeasible) << " -> " << to_string(verdict()) << '\n';
    if (!findings.is_null())
        for (const auto& [k, v] : findings.items())
            os << k << ": " << v.dump() << '\n';
    if (wall_seconds)
        os << "wall time " << std::fixed << std::setprecision(2) << *wall_seconds << " s\n";
    return os.str();
}

Json CorpusSpec::to_json() const
{
    return Json{{"n", {n_min, n_max}}, {"max_degree", max_degree}, {"max_gens", max_gens}, {"shape", koszul::to_string(shape)}};
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Monomial random_monomial(std::mt19937_64& rng, int n, int degree)
{
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < degree; ++k)
        ++e[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
    return Monomial(e);
}

std::vector<Monomial> random_antichain(std::mt19937_64& rng, int n, const CorpusSpec& spec)
{
    const int count = uniform(rng, 1, spec.max_gens);
    std::vector<Monomial> gens;
    for (int k = 0; k < count; ++k)
        gens.push_back(random_monomial(rng, n, uniform(rng, 1, spec.max_degree)));
    return gens;
}

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::mt19937_64 case_rng(std::uint64_t seed, const std::string& suite, std::size_t index)
{
    const std::uint64_t tag = fnv1a(suite);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32)};
    return std::mt19937_64(seq);
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusSpec& spec)
{
    const int n = uniform(rng, spec.n_min, spec.n_max);
    const RingConfig ring = RingConfig::standard(n);
    for (int attempt = 0;; ++attempt) {
        std::vector<Monomial> gens = random_antichain(rng, n, spec);
        switch (spec.shape) {
        case CorpusShape::plain:
            return MonomialIdeal(ring, gens);
        case CorpusShape::artinian:
            for (int v = 0; v < n; ++v) {
                std::vector<int> e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(v)] = uniform(rng, 2, std::max(2, spec.max_degree));
                gens.emplace_back(e);
            }
            return MonomialIdeal(ring, gens);
        case CorpusShape::borel:
            return borel_closure(ring, gens);
        case CorpusShape::borel_artinian: {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e.back() = uniform(rng, 2, std::max(2, spec.max_degree));
            gens.emplace_back(e);
            return borel_closure(ring, gens);
        }
        case CorpusShape::low_dimension: {
            // Powers of all variables but one leave dim S/I <= 1.
            const int skip = uniform(rng, 0, n - 1);
            for (int v = 0; v < n; ++v) {
                if (v == skip)
                    continue;
                std::vector<int> e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(v)] = uniform(rng, 2, std::max(2, spec.max_degree));
                gens.emplace_back(e);
            }
            return MonomialIdeal(ring, gens);
        }
        case CorpusShape::positive_dimension: {
            MonomialIdeal ideal(ring, gens);
            if (monomial_quotient_dim(ideal) >= 1 || attempt > 1000)
                return ideal;
            break;
        }
        }
    }
}

namespace {

using CaseFn = std::function<CaseRecord(std::size_t index, const FieldContext& field)>;

struct SuiteDef {
    std::string statement;
    std::size_t default_size;
    bool fixed;
    int char_floor;
    Json corpus;
    std::function<std::size_t(const HarnessOptions&)> count;
    std::function<CaseRecord(const HarnessOptions&, std::size_t, const FieldContext&)> run;
};

std::string join_ints(const std::vector<int>& v)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << v[k];
    return os.str();
}

Json replay(const MonomialIdeal& ideal, const FieldContext& field)
{
    return Json{{"ideal", ideal_to_json(ideal)}, {"ideal_text", ideal.to_string()}, {"field", field.name()}};
}

CaseRecord record(std::size_t index, bool ok, Json detail, const std::string& summary)
{
    detail["summary"] = summary;
    return CaseRecord{index, ok ? Verdict::pass : Verdict::violation, std::move(detail)};
}

// ---- signs ----------------------------------------------------------------

CaseRecord signs_case(std::size_t index)
{
    std::size_t triples = 0, failures = 0, wedge_checks = 0;
    Json first = nullptr;
    auto ring = RingConfig::standard(6);
    std::vector<Monomial> vars;
    for (int v = 0; v < 6; ++v)
        vars.push_back(Monomial::variable(6, v));
    auto ideal = std::make_shared<const MonomialIdeal>(ring, vars);
    const Monomial one = Monomial::one(6);
    for (int code = 0; code < 4096; ++code) {
        IndexSet a, b, c;
        int x = code;
        for (int e = 0; e < 6; ++e, x /= 4) {
            if (x % 4 == 1)
                a.push_back(e);
            else if (x % 4 == 2)
                b.push_back(e);
            else if (x % 4 == 3)
                c.push_back(e);
        }
        ++triples;
        const int lhs = sign(set_union(a, b), c) * sign(b, a);
        const int rhs = sign(b, set_union(a, c)) * sign(a, c);
        bool ok = lhs == rhs;
        if (c.empty()) {
            // e_A e_B = sigma(A,B) e_{A u B}
            ++wedge_checks;
            KoszulChain prod = wedge(KoszulChain::basis(ideal, a, one), KoszulChain::basis(ideal, b, one));
            ok = ok && prod == KoszulChain::basis(ideal, set_union(a, b), one, Rational(sign(a, b)));
        }
        if (!ok) {
            ++failures;
            if (first.is_null())
                first = Json{{"A", a}, {"B", b}, {"C", c}};
        }
    }
    Json detail{{"triples", triples}, {"wedge_checks", wedge_checks}, {"failures", failures}, {"first_failure", first},
                {"window", "exhaustive over disjoint A, B, C in [1,6]"}};
    return record(index, failures == 0, detail,
                  std::to_string(triples) + " triples, " + std::to_string(failures) + " failures");
}

// ---- maps -----------------------------------------------------------------

KoszulChain random_chain(std::mt19937_64& rng, const KoszulComplex& complex, int degree, Monomial& beta)
{
    const int r = complex.rank();
    const int n = complex.ring().nvars();
    IndexSet set;
    std::vector<int> pool(static_cast<std::size_t>(r));
    std::iota(pool.begin(), pool.end(), 0);
    for (int k = 0; k < degree; ++k) {
        int pick = uniform(rng, k, r - 1);
        std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(pick)]);
        set.push_back(pool[static_cast<std::size_t>(k)]);
    }
    std::sort(set.begin(), set.end());
    Monomial w = random_monomial(rng, n, uniform(rng, 0, 2));
    beta = w;
    for (int i : set)
        beta = beta * complex.ideal().gen(static_cast<std::size_t>(i));
    KoszulChain f(complex.ideal_ptr(), degree);
    for (const auto& s : complex.basis(degree, beta)) {
        int coeff = s == set ? uniform(rng, 1, 3) : uniform(rng, -3, 3);
        if (coeff == 0)
            continue;
        Monomial prod = Monomial::one(n);
        for (int i : s)
            prod = prod * complex.ideal().gen(static_cast<std::size_t>(i));
        f.add_term(s, beta / prod, Rational(coeff));
    }
    return f;
}

CaseRecord maps_case(const HarnessOptions& opt, std::size_t index, const FieldContext&)
{
    auto rng = case_rng(opt.seed, "maps", index);
    CorpusSpec spec{2, 3, 3, 8, CorpusShape::plain};
    MonomialIdeal ideal0(RingConfig::standard(2), {Monomial({1, 0})});
    do {
        ideal0 = random_ideal(rng, spec);
    } while (ideal0.size() < 2);
    auto ideal = std::make_shared<const MonomialIdeal>(ideal0);
    KoszulComplex complex(ideal);
    const int r = static_cast<int>(ideal->size());
    const int total = uniform(rng, 1, std::min(4, r));
    const int s = uniform(rng, 1, total);
    const int t = total - s;
    Monomial beta;
    KoszulChain f = random_chain(rng, complex, total, beta);

    Json checks;
    bool ok = true;
    auto check = [&](const std::string& name, bool value) {
        checks[name] = value;
        ok = ok && value;
    };
    if (total >= 2)
        check("phi_squared_zero", boundary(boundary(f)).is_zero());

    Monomial beta_a;
    const int sa = uniform(rng, 1, std::min(r, 2));
    KoszulChain a = random_chain(rng, complex, sa, beta_a);
    KoszulChain lhs = boundary(wedge(a, f));
    KoszulChain rhs = wedge(boundary(a), f);
    KoszulChain second = wedge(a, boundary(f));
    rhs = sa % 2 == 0 ? rhs + second : rhs - second;
    check("leibniz", lhs == rhs);

    check("gamma_chain_map", gamma_equal(outer_boundary(gamma_map(f, s), ideal), gamma_map(boundary(f), s - 1)));
    const Rational binom(static_cast<long>(binomial(t + s, s)));
    check("sum_eI_bI", alpha_map(gamma_map(f, s), ideal, total) == f * binom);

    // alpha o beta on a cycle of the same degree, when one exists
    const auto& zs = complex.cycles(total, beta);
    if (!zs.empty()) {
        Vector v(complex.basis(total, beta).size(), Rational(0));
        for (const auto& z : zs) {
            Rational c(uniform(rng, -2, 2));
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] += c * z[k];
        }
        if (is_zero_vector(v))
            v = zs.front();
        KoszulChain cyc = complex.to_chain(total, beta, v);
        GammaImage g = gamma_map(cyc, s);
        bool inner_cycles = true;
        for (const auto& [set, b] : g)
            if (t >= 1 && !boundary(b).is_zero())
                inner_cycles = false;
        check("b_I_are_cycles", inner_cycles);
        check("alpha_beta", alpha_map(g, ideal, total) == cyc * binom);
    } else {
        checks["alpha_beta"] = "no cycle at this degree";
    }

    Json detail = replay(*ideal, FieldContext{});
    detail["s"] = s;
    detail["t"] = t;
    detail["chain"] = chain_to_json(f);
    detail["checks"] = checks;
    return record(index, ok, detail, "s=" + std::to_string(s) + " t=" + std::to_string(t) + " r=" + std::to_string(r));
}

// ---- regularity scans -----------------------------------------------------

struct ScanOutcome {
    bool violation = false;
    Json detail;
};

/// Scans entries with j - i in [bound - slack, bound + slack]; a nonzero
/// entry above the bound is a violation.
ScanOutcome bounded_scan(const GradedModule& m, int bound, int slack, bool certified)
{
    RegScanOptions o;
    o.cap = bound + slack;
    o.min_excess = bound - slack;
    if (certified)
        o.vanishing_bound = bound;
    ScanOutcome out;
    const int init = m.initial_degree();
    if (o.cap < init) {
        out.detail = Json{{"bound", bound}, {"cap", o.cap}, {"observed_in_window", nullptr}, {"certified", certified},
                          {"note", "module vanishes below the window"}};
        return out;
    }
    RegScan scan = reg_scan(m, o);
    out.violation = scan.reg && *scan.reg > bound;
    Json witnesses = Json::array();
    for (const auto& w : scan.witnesses)
        witnesses.push_back(Json{{"i", w.i}, {"j", w.j}, {"dim", w.dim}});
    out.detail = Json{{"module", m.describe()},
                      {"bound", bound},
                      {"window", {o.min_excess.value(), o.cap}},
                      {"observed_in_window", scan.reg ? Json(*scan.reg) : Json(nullptr)},
                      {"witnesses", witnesses},
                      {"certified", certified}};
    return out;
}

/// c of the m-primary bound: smallest c with m^c in I and I generated in degree <= c.
std::optional<int> primary_c(const MonomialIdeal& ideal)
{
    auto k = containment_power(ideal);
    if (!k)
        return std::nullopt;
    return std::max(*k, ideal.max_degree());
}

int max_t(const MonomialIdeal& ideal) { return std::min(3, static_cast<int>(ideal.size())); }

CaseRecord regb_case(const HarnessOptions& opt, std::size_t index, const FieldContext& field)
{
    auto rng = case_rng(opt.seed, "regb", index);
    auto ideal = std::make_shared<const MonomialIdeal>(random_ideal(rng, {2, 3, 3, 4, CorpusShape::artinian}));
    auto complex = std::make_shared<const KoszulComplex>(ideal, CoefficientModule{}, field);
    const int c = *primary_c(*ideal);
    Json per_t = Json::array();
    bool ok = true;
    for (int t = 1; t <= max_t(*ideal); ++t) {
        const int bz = t * (c + 1);
        auto z = bounded_scan(GradedModule::koszul_cycles(complex, t), bz, opt.slack, true);
        auto h = bounded_scan(GradedModule::koszul_homology(complex, t), bz + c - 1, opt.slack, true);
        ok = ok && !z.violation && !h.violation;
        per_t.push_back(Json{{"t", t}, {"Z", z.detail}, {"H", h.detail}});
    }
    Json detail = replay(*ideal, field);
    detail["c"] = c;
    detail["scans"] = per_t;
    return record(index, ok, detail, ideal->to_string() + " c=" + std::to_string(c));
}

CaseRecord greeny_case(const HarnessOptions& opt, std::size_t index, const FieldContext& field)
{
    auto rng = case_rng(opt.seed, "greeny", index);
    auto ideal = std::make_shared<const MonomialIdeal>(random_ideal(rng, {2, 3, 3, 4, CorpusShape::artinian}));
    auto complex = std::make_shared<const KoszulComplex>(ideal, CoefficientModule{}, field);
    const int c = ideal->max_degree();
    const int v = static_cast<int>(quotient_component_dim(*ideal, {c}));
    const int cp = *primary_c(*ideal);
    Json per_t = Json::array();
    bool ok = true;
    for (int t = 1; t <= max_t(*ideal); ++t) {
        const int bz = t * (c + 1) + v;
        const int bh = bz + c - 1;
        const bool cert_z = t * (cp + 1) <= bz + opt.slack;
        const bool cert_h = t * (cp + 1) + cp - 1 <= bh + opt.slack;
        auto z = bounded_scan(GradedModule::koszul_cycles(complex, t), bz, opt.slack, cert_z);
        auto h = bounded_scan(GradedModule::koszul_homology(complex, t), bh, opt.slack, cert_h);
        ok = ok && !z.violation && !h.violation;
        per_t.push_back(Json{{"t", t}, {"Z", z.detail}, {"H", h.detail}});
    }
    Json detail = replay(*ideal, field);
    detail["c"] = c;
    detail["v"] = v;
    detail["scans"] = per_t;
    return record(index, ok, detail, ideal->to_string() + " c=" + std::to_string(c) + " v=" + std::to_string(v));
}

CaseRecord remark_b_case(const HarnessOptions& opt, std::size_t index, const FieldContext& field)
{
    auto rng = case_rng(opt.seed, "remark_b", index);
    MonomialIdeal ideal = random_ideal(rng, {2, 3, 3, 4, CorpusShape::artinian});
    const int c = ideal.max_degree();
    const int v = static_cast<int>(quotient_component_dim(ideal, {c}));
    const bool contained = power_containment(ideal, c + v);
    Json detail = replay(ideal, field);
    detail["c"] = c;
    detail["v"] = v;
    detail["power"] = c + v;
    detail["contained"] = contained;
    detail["smallest_power"] = *containment_power(ideal);
    detail["certified"] = true;
    return record(index, contained, detail,
                  ideal.to_string() + " m^" + std::to_string(c + v) + (contained ? " in I" : " not in I"));
}

CaseRecord thm1_case(const HarnessOptions& opt, std::size_t index, const FieldContext& field)
{
    auto rng = case_rng(opt.seed, "thm1", index);
    auto ideal = std::make_shared<const MonomialIdeal>(random_ideal(rng, {2, 3, 3, 4, CorpusShape::low_dimension}));
    auto complex = std::make_shared<const KoszulComplex>(ideal, CoefficientModule{}, field);
    const int dim = monomial_quotient_dim(*ideal);
    const RegularityResult reg = reg_monomial_ideal(*ideal);
    const auto cp = primary_c(*ideal);
    Json per_t = Json::array();
    bool ok = dim <= 1;
    for (int t = 1; t <= max_t(*ideal); ++t) {
        const int bound = t * (reg.value + 1);
        const bool certified = cp && t * (*cp + 1) <= bound + opt.slack;
        auto z = bounded_scan(GradedModule::koszul_cycles(complex, t), bound, opt.slack, certified);
        ok = ok && !z.violation;
        per_t.push_back(Json{{"t", t}, {"Z", z.detail}});
    }
    Json detail = replay(*ideal, field);
    detail["dim_quotient"] = dim;
    detail["reg_I"] = reg.value;
    detail["reg_method"] = reg.method;
    detail["scans"] = per_t;
    return record(index, ok, detail,
                  ideal->to_string() + " dim " + std::to_string(dim) + " reg " + std::to_string(reg.value));
}

CaseRecord piper_case(const HarnessOptions& opt, std::size_t index, const FieldContext& field)
{
    auto rng = case_rng(opt.seed, "piper", index);
    const CorpusShape shape = index % 2 == 0 ? CorpusShape::borel : CorpusShape::borel_artinian;
    auto ideal = std::make_shared<const MonomialIdeal>(random_ideal(rng, {2, 3, 3, 3, shape}));
    KoszulComplex complex(ideal, CoefficientModule{}, field);
    const int c = ideal->max_degree();
    const auto cp = primary_c(*ideal);
    Json per_t = Json::array();
    bool ok = true;
    for (int t = 1; t <= max_t(*ideal); ++t) {
        const int g = t * (c + 1);
        Json found = Json::array();
        for (int j = g + 1; j <= g + opt.slack; ++j) {
            const std::size_t extra = minimal_generators(complex, t, MultiDegree{j});
            if (extra > 0) {
                ok = false;
                found.push_back(Json{{"degree", j}, {"generators", extra}});
            }
        }
        const bool certified = cp && t * (*cp + 1) <= g + opt.slack;
        per_t.push_back(Json{{"t", t}, {"bound", g}, {"window", {g + 1, g + opt.slack}}, {"generators_above", found},
                             {"certified", certified}});
    }
    Json detail = replay(*ideal, field);
    detail["strongly_stable"] = is_strongly_stable(*ideal);
    detail["reg_I"] = c;
    detail["checks"] = per_t;
    return record(index, ok, detail, ideal->to_string() + " reg " + std::to_string(c));
}

CaseRecord sato_case(const HarnessOptions& opt, std::size_t index, const FieldContext& field)
{
    auto rng = case_rng(opt.seed, "sato", index);
    const int n = uniform(rng, 2, 3);
    CorpusSpec spec{n, n, 3, 3, CorpusShape::borel};
    auto ideal = std::make_shared<const MonomialIdeal>(random_ideal(rng, spec));
    MonomialIdeal j = random_ideal(rng, spec);
    CoefficientModule coeff;
    coeff.denominator = j;
    auto complex = std::make_shared<const KoszulComplex>(ideal, coeff, field);
    const int reg_i = ideal->max_degree();
    const int reg_quotient = j.max_degree() - 1;
    Json per_t = Json::array();
    bool ok = true;
    for (int t = 1; t <= std::min(2, static_cast<int>(ideal->size())); ++t) {
        const int bound = t * (reg_i + 1) + reg_quotient;
        auto z = bounded_scan(GradedModule::koszul_cycles(complex, t), bound, opt.slack, false);
        ok = ok && !z.violation;
        per_t.push_back(Json{{"t", t}, {"Z", z.detail}});
    }
    Json detail = replay(*ideal, field);
    detail["J"] = ideal_to_json(j);
    detail["J_text"] = j.to_string();
    detail["reg_I"] = reg_i;
    detail["reg_S_over_J"] = reg_quotient;
    detail["scans"] = per_t;
    return record(index, ok, detail, ideal->to_string() + " mod " + j.to_string());
}

// ---- cycle generation -----------------------------------------------------

struct MultiSpec {
    std::vector<int> blocks;
    MultiDegree c;
    int t;
};

const std::vector<MultiSpec>& multi_specs()
{
    static const std::vector<MultiSpec> specs{{{2, 2}, {1, 1}, 1}, {{2, 2}, {1, 1}, 2}, {{2, 2}, {2, 1}, 1},
                                              {{2, 2}, {2, 1}, 2}, {{2, 2}, {1, 2}, 2}, {{2, 2}, {1, 1}, 3}};
    return specs;
}

CaseRecord multi_case(const HarnessOptions& opt, std::size_t index, const FieldContext& field)
{
    const auto& spec = multi_specs()[index];
    const RingConfig ring(spec.blocks);
    auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(ring, spec.c));
    KoszulComplex complex(ideal, CoefficientModule{}, field);
    const int t = spec.t;
    const int d = ring.nblocks();
    MultiDegree low = degree_scale(t, spec.c);
    for (auto& x : low)
        x += t - 1;
    std::vector<KoszulChain> candidates;
    for (const auto& alpha : degrees_up_to(low))
        for (auto& z : cycle_space(complex, t, alpha))
            candidates.push_back(std::move(z));
    std::size_t u_products = 0;
    for (int i = 0; i < d; ++i) {
        MultiDegree ui = spec.c;
        ++ui[static_cast<std::size_t>(i)];
        auto u = cycle_space(complex, 1, ui);
        std::vector<std::size_t> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (static_cast<int>(cur.size()) == t) {
                KoszulChain p = u[cur[0]];
                for (std::size_t k = 1; k < cur.size(); ++k)
                    p = wedge(p, u[cur[k]]);
                if (!p.is_zero()) {
                    candidates.push_back(std::move(p));
                    ++u_products;
                }
                return;
            }
            for (std::size_t k = start; k < u.size(); ++k) {
                cur.push_back(k);
                rec(k + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    MultiDegree bound = degree_scale(t, spec.c);
    for (auto& x : bound)
        x += t + opt.slack;
    GenerationResult g = generates_up_to(complex, t, candidates, bound);
    Json detail{{"blocks", spec.blocks}, {"c", spec.c}, {"t", t}, {"low_degree_bound", low},
                {"U_products", u_products}, {"candidates", candidates.size()}, {"checked_up_to", bound},
                {"degrees_checked", g.degrees_checked}, {"generates", g.generates}, {"certified", false},
                {"field", field.name()}};
    if (!g.generates)
        detail["failing_degree"] = *g.failing_degree;
    return record(index, g.generates, detail,
                  "blocks=(" + join_ints(spec.blocks) + ") c=(" + join_ints(spec.c) + ") t=" + std::to_string(t));
}

struct Multi2Spec {
    std::vector<int> blocks;
    MultiDegree c;
    int block;
};

const std::vector<Multi2Spec>& multi2_specs()
{
    static const std::vector<Multi2Spec> specs{{{2, 2}, {1, 1}, 0}, {{2, 2}, {1, 1}, 1}, {{3}, {2}, 0},
                                               {{2}, {1}, 0},       {{2}, {2}, 0},       {{2, 2}, {2, 1}, 0}};
    return specs;
}

CaseRecord multi2_case(const HarnessOptions&, std::size_t index, const FieldContext& field)
{
    const auto& spec = multi2_specs()[index];
    const RingConfig ring(spec.blocks);
    auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(ring, spec.c));
    KoszulComplex complex(ideal, CoefficientModule{}, field);
    const auto trials = multi2_trials(ideal, spec.block);
    std::size_t members = 0;
    Json failures = Json::array();
    Json sample = nullptr;
    for (const auto& trial : trials) {
        Multi2Result r = multi2_membership(complex, trial);
        if (r.member) {
            ++members;
            if (sample.is_null() && !r.product.is_zero()) {
                Json cert = Json::array();
                for (const auto& q : r.certificate)
                    cert.push_back(rational_to_string(q));
                sample = Json{{"product", chain_to_json(r.product)}, {"certificate", cert},
                              {"spanning_vectors", r.spanning_vectors}};
            }
        } else {
            Json a = Json::array();
            for (const auto& m : trial.a)
                a.push_back(m.exponents());
            failures.push_back(Json{{"a", a}, {"variables", trial.variables}, {"extra", trial.extra.exponents()}});
        }
    }
    Json detail{{"blocks", spec.blocks}, {"c", spec.c}, {"block", spec.block + 1}, {"trials", trials.size()},
                {"members", members}, {"failures", failures}, {"sample", sample}, {"field", field.name()}};
    return record(index, members == trials.size(), detail,
                  "blocks=(" + join_ints(spec.blocks) + ") c=(" + join_ints(spec.c) + ") i=" +
                      std::to_string(spec.block + 1) + ": " + std::to_string(members) + "/" +
                      std::to_string(trials.size()));
}

struct NCT {
    int n, c, t;
};

std::vector<NCT> maincyc_specs()
{
    std::vector<NCT> out;
    for (int n : {2, 3})
        for (int c : {1, 2})
            for (int t : {1, 2, 3})
                out.push_back({n, c, t});
    return out;
}

CaseRecord maincyc_case(const HarnessOptions& opt, std::size_t index, const FieldContext& field)
{
    const auto spec = maincyc_specs()[index];
    const RingConfig ring = RingConfig::standard(spec.n);
    auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(ring, {spec.c}));
    KoszulComplex complex(ideal, CoefficientModule{}, field);
    const std::string label =
        "n=" + std::to_string(spec.n) + " c=" + std::to_string(spec.c) + " t=" + std::to_string(spec.t);
    Json detail{{"n", spec.n}, {"c", spec.c}, {"t", spec.t}, {"field", field.name()}};
    if (spec.t > complex.rank()) {
        detail["skipped"] = "t exceeds the rank " + std::to_string(complex.rank()) + " of F";
        return record(index, true, detail, label + " (rank)");
    }
    const int start = spec.t * (spec.c + 1);
    Json rows = Json::array();
    bool ok = true;
    for (int j = start; j <= start + opt.slack; ++j) {
        const std::size_t power = z1_power_dim(complex, spec.t, {j});
        const std::size_t cycles = cycle_dim(complex, spec.t, {j});
        ok = ok && power == cycles;
        rows.push_back(Json{{"j", j}, {"Z1_power", power}, {"Z", cycles}});
    }
    detail["degrees"] = rows;
    detail["certified"] = true;
    return record(index, ok, detail, label);
}

std::vector<std::pair<int, int>> gen2_specs() { return {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}; }

CaseRecord gen2_case(const HarnessOptions&, std::size_t index, const FieldContext& field)
{
    const auto [n, c] = gen2_specs()[index];
    const RingConfig ring = RingConfig::standard(n);
    auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(ring, {c}));
    KoszulComplex complex(ideal, CoefficientModule{}, field);
    const auto fams = gen2_families(ideal, field);
    std::vector<KoszulChain> chains;
    std::size_t type1 = 0;
    for (const auto& f : fams) {
        chains.push_back(f.chain);
        type1 += f.label == FamilyLabel::gen2_type1;
    }
    GenerationResult g = generates_up_to(complex, 2, chains, {2 * c + 2});
    Json detail{{"n", n}, {"c", c}, {"type1", type1}, {"type2", fams.size() - type1}, {"bound", 2 * c + 2},
                {"generates", g.generates}, {"certified", true}, {"field", field.name()}};
    if (!g.generates) {
        detail["failing_degree"] = *g.failing_degree;
        detail["span_dim"] = g.span_dim;
        detail["target_dim"] = g.target_dim;
    }
    return record(index, g.generates, detail, "n=" + std::to_string(n) + " c=" + std::to_string(c));
}

// ---- Segre-Veronese -------------------------------------------------------

struct CheckSpec {
    std::vector<int> blocks;
    MultiDegree c;
};

const std::vector<CheckSpec>& check_specs()
{
    static const std::vector<CheckSpec> specs{{{3}, {2}}, {{2, 2}, {1, 1}}, {{2}, {2}},      {{2}, {3}},
                                              {{3}, {1}}, {{2, 2}, {1, 2}}, {{2, 3}, {1, 1}}, {{2}, {4}}};
    return specs;
}

CaseRecord check_case(const HarnessOptions& opt, std::size_t index, const FieldContext& field)
{
    const auto& cs = check_specs()[index];
    SegreVeroneseSpec spec(cs.blocks, cs.c, field);
    const int mc = spec.min_c();
    if (!field.is_rational() && field.characteristic() <= static_cast<std::uint64_t>(1 + mc))
        throw FieldError("check needs characteristic 0 or greater than 1 + min(c)");
    const std::string label = spec.describe();
    Json detail{{"blocks", cs.blocks}, {"c", cs.c}, {"field", field.name()}};
    try {
        IndexResult idx = green_lazarsfeld_index(spec, mc + 1);
        const long long r = spec.presentation_vars();
        long long s2c = 1;
        for (std::size_t k = 0; k < cs.blocks.size(); ++k)
            s2c *= count_monomials(cs.blocks[k], 2 * cs.c[k]);
        const long long quadrics = r * (r + 1) / 2 - s2c;
        const bool quadric_ok = idx.table.at(1, 2) == quadrics;

        auto rng = case_rng(opt.seed, "check", index);
        Json spots = Json::array();
        bool spots_ok = true;
        for (int k = 0; k < 10; ++k) {
            const int i = uniform(rng, 1, mc + 1);
            const int j = vanishing_start(i, mc) + uniform(rng, 0, 1);
            if (component_estimate(spec, i, j) > spec.ceiling)
                continue;
            const long long d = veronese_entry(spec, i, j);
            spots_ok = spots_ok && d == 0;
            spots.push_back(Json{{"i", i}, {"j", j}, {"dim", d}});
        }
        const bool index_ok = idx.status == IndexResult::Status::at_least;
        detail["index"] = idx.render();
        detail["required"] = mc + 1;
        detail["betti"] = betti_to_json(idx.table);
        detail["beta_1_2"] = idx.table.at(1, 2);
        detail["quadric_count"] = quadrics;
        detail["zero_window_spot_checks"] = spots;
        detail["certified"] = true;
        return record(index, index_ok && quadric_ok && spots_ok, detail, label + " index " + idx.render());
    } catch (const InfeasibleError& e) {
        detail["infeasible"] = e.what();
        detail["summary"] = label + " infeasible";
        return CaseRecord{index, Verdict::infeasible, detail};
    }
}

// ---- surge ----------------------------------------------------------------

struct SurgeSpec {
    int n, c, max_j;
    bool equivalence;
};

const std::vector<SurgeSpec>& surge_specs()
{
    static const std::vector<SurgeSpec> specs{{2, 2, 10, true}, {2, 1, 8, false}, {2, 3, 12, false},
                                              {3, 1, 8, false}, {3, 2, 8, false}};
    return specs;
}

CaseRecord surge_case(const HarnessOptions&, std::size_t index, const FieldContext& field)
{
    const auto& spec = surge_specs()[index];
    const RingConfig ring = RingConfig::standard(spec.n);
    auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(ring, {spec.c}));
    auto complex = std::make_shared<const KoszulComplex>(ideal, CoefficientModule{}, field);
    GradedModule z1 = GradedModule::koszul_cycles(complex, 1);
    Json rows = Json::array();
    bool ok = true, equivalent = true;
    for (int j = 0; j <= spec.max_j; ++j) {
        const std::size_t prod = z1_power_dim(*complex, 2, {j});
        const std::size_t target = cycle_dim(*complex, 2, {j});
        std::size_t tor = 0;
        for (const auto& gamma : monomials_of_degree(ring, j))
            tor += taylor_tor(*ideal, z1, 1, gamma);
        const bool surjective = prod == target;
        const bool vanishes = tor == 0;
        equivalent = equivalent && surjective == vanishes;
        if (vanishes && !surjective)
            ok = false;
        rows.push_back(Json{{"j", j}, {"Z1Z1", prod}, {"Z2", target}, {"tor1", tor}, {"surjective", surjective}});
    }
    if (spec.equivalence)
        ok = ok && equivalent;
    Json detail{{"n", spec.n}, {"c", spec.c}, {"s", 1}, {"t", 1}, {"degrees", rows},
                {"mode", spec.equivalence ? "equivalence" : "implication"}, {"equivalent_everywhere", equivalent},
                {"field", field.name()}};
    return record(index, ok, detail,
                  "n=" + std::to_string(spec.n) + " c=" + std::to_string(spec.c) +
                      (equivalent ? " matches in every degree" : " implication only"));
}

// ---- registry -------------------------------------------------------------

const std::map<std::string, SuiteDef>& registry()
{
    static const std::map<std::string, SuiteDef> suites = [] {
        std::map<std::string, SuiteDef> m;
        auto fixed = [](std::size_t k) { return [k](const HarnessOptions&) { return k; }; };
        auto sized = [](std::size_t def) {
            return [def](const HarnessOptions& o) { return o.size.value_or(def); };
        };
        const Json artinian = CorpusSpec{2, 3, 3, 4, CorpusShape::artinian}.to_json();
        m["signs"] = {"sigma(A u B, C) sigma(B, A) = sigma(B, A u C) sigma(A, C) and e_A e_B = sigma(A,B) e_{A u B}",
                      1, true, 0, Json{{"triples", "all disjoint A, B, C in [1,6]"}}, fixed(1),
                      [](const HarnessOptions&, std::size_t i, const FieldContext&) { return signs_case(i); }};
        m["maps"] = {"phi^2 = 0, Leibniz rule, gamma is a chain map, sum e_I.b_I = C(t+s,s) f, alpha o beta = C(t+s,s) id",
                     200, false, 0, CorpusSpec{2, 3, 3, 8, CorpusShape::plain}.to_json(), sized(200), maps_case};
        m["regb"] = {"reg Z_t <= t(c+1) and reg H_t <= t(c+1)+c-1 for m-primary I, M = S", 50, false, 0, artinian,
                     sized(50), regb_case};
        m["greeny"] = {"reg Z_t <= t(c+1)+v and reg H_t <= t(c+1)+v+c-1 with v = dim [S/I]_c", 50, false, 0, artinian,
                       sized(50), greeny_case};
        m["remark_b"] = {"m^(c+v) is contained in I for m-primary I generated in degree <= c, v = dim [S/I]_c", 50,
                         false, 0, artinian, sized(50), remark_b_case};
        m["thm1"] = {"reg Z_t(I,S) <= t(reg I + 1) when dim S/I <= 1", 50, false, 3,
                     CorpusSpec{2, 3, 3, 4, CorpusShape::low_dimension}.to_json(), sized(50), thm1_case};
        m["piper"] = {"Z_t(I,S) is generated in degree <= t(reg I + 1) for strongly stable I", 50, false, 0,
                      CorpusSpec{2, 3, 3, 3, CorpusShape::borel}.to_json(), sized(50), piper_case};
        m["sato"] = {"reg Z_t(I,S/J) <= t(reg I + 1) + reg S/J for strongly stable I, J", 50, false, 0,
                     CorpusSpec{2, 3, 3, 3, CorpusShape::borel}.to_json(), sized(50), sato_case};
        m["multi"] = {"Z_t(m^c,S) is generated in multidegree <= tc+(t-1)sum e_i together with U_i^t", 0, true, 0,
                      Json{{"cases", "blocks (2,2)"}}, fixed(multi_specs().size()), multi_case};
        m["multi2"] = {"(c_i+1)! m^(c-e_i) U_i^(c_i) lies in m_i^(c_i) Z_(c_i) + B_(c_i)", 0, true, 0,
                       Json{{"cases", "every trial per listed block"}}, fixed(multi2_specs().size()), multi2_case};
        m["maincyc"] = {"Z_t(m^c,S) and Z_1^t agree in degree >= t(c+1)", 0, true, 3,
                        Json{{"cases", "(n,c,t) in {2,3}x{1,2}x{1,2,3}"}}, fixed(maincyc_specs().size()), maincyc_case};
        m["gen2"] = {"Z_2(m^c,S) is generated by symmetrized cycles of degree 2c+1 and products z z' of degree 2c+2", 0,
                     true, 2, Json{{"cases", "(n,c) in {(2,1),(2,2),(2,3),(3,1),(3,2)}"}}, fixed(gen2_specs().size()),
                     gen2_case};
        m["check"] = {"ind(S^(c)) >= min(c) + 1", 0, true, 0, Json{{"cases", "listed Segre-Veronese specs"}},
                      fixed(check_specs().size()), check_case};
        m["surge"] = {"Z_1 Z_1 = Z_2 in degree j when Tor_1(S/I, Z_1)_j = 0", 0, true, 2,
                      Json{{"cases", "I = m^c, s = t = 1"}}, fixed(surge_specs().size()), surge_case};
        return m;
    }();
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"signs", "maps",  "regb",    "thm1", "greeny", "remark_b", "piper",
                                                "sato",  "multi", "multi2",  "maincyc", "gen2", "check",  "surge"};
    return names;
}

namespace {

CaseRecord run_with_recheck(const std::function<CaseRecord(const FieldContext&)>& fn, std::size_t index,
                            const FieldContext& field)
{
    CaseRecord rec;
    try {
        rec = fn(field);
    } catch (const InfeasibleError& e) {
        return CaseRecord{index, Verdict::infeasible, Json{{"infeasible", e.what()}, {"summary", "infeasible"}}};
    }
    if (rec.verdict == Verdict::violation && !field.is_rational()) {
        CaseRecord exact = fn(FieldContext::rationals());
        rec.detail["recheck"] = Json{{"field", "rat"}, {"verdict", to_string(exact.verdict)}, {"detail", exact.detail}};
        rec.verdict = exact.verdict;
    }
    rec.index = index;
    return rec;
}

SuiteReport assemble(const std::string& name, const std::string& statement, const HarnessOptions& options,
                     std::string size_label, Json corpus, std::size_t count,
                     const std::function<CaseRecord(std::size_t, const FieldContext&)>& fn)
{
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = name;
    report.statement = statement;
    report.options = options;
    report.size_label = std::move(size_label);
    report.corpus = std::move(corpus);
    report.cases.resize(count);
    parallel_for(count, [&](std::size_t i) {
        report.cases[i] = run_with_recheck([&](const FieldContext& f) { return fn(i, f); }, i, options.field);
    });
    if (options.timing)
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace

SuiteReport run_suite(const std::string& name, const HarnessOptions& options)
{
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end())
        throw std::invalid_argument("unknown suite: " + name);
    const SuiteDef& def = it->second;
    if (!options.field.is_rational() && options.field.characteristic() <= static_cast<std::uint64_t>(def.char_floor))
        throw FieldError("suite " + name + " needs characteristic 0 or greater than " + std::to_string(def.char_floor));
    if (options.slack < 0)
        throw std::invalid_argument("cap slack must be nonnegative");
    HarnessOptions o = options;
    o.field = options.field.with_floor(def.char_floor);
    const std::size_t count = def.count(o);
    const std::string size_label = def.fixed ? "fixed" : std::to_string(count);
    return assemble(name, def.statement, o, size_label, def.corpus, count,
                    [&](std::size_t i, const FieldContext& f) { return def.run(o, i, f); });
}

SuiteReport probe_q1(const ProbeOptions& options)
{
    HarnessOptions h;
    h.seed = options.seed;
    h.size = options.size;
    h.slack = options.slack;
    h.field = options.field;
    h.timing = options.timing;
    CorpusSpec spec{2, std::max(2, options.n_max), 3, 4,
                    options.strongly_stable ? CorpusShape::borel : CorpusShape::positive_dimension};
    auto fn = [&](std::size_t index, const FieldContext& field) {
        auto rng = case_rng(options.seed, "probe-q1", index);
        MonomialIdeal ideal0 = random_ideal(rng, spec);
        auto ideal = std::make_shared<const MonomialIdeal>(ideal0);
        auto complex = std::make_shared<const KoszulComplex>(ideal, CoefficientModule{}, field);
        const int reg_i = reg_monomial_ideal(*ideal).value;
        Json per_t = Json::array();
        bool candidate = false;
        std::optional<int> excess_z1;
        for (int t = 1; t <= std::min(options.max_t, static_cast<int>(ideal->size())); ++t) {
            const int bound = t * (reg_i + 1);
            auto z = bounded_scan(GradedModule::koszul_cycles(complex, t), bound, options.slack, false);
            candidate = candidate || z.violation;
            if (t == 1 && !z.detail["observed_in_window"].is_null())
                excess_z1 = z.detail["observed_in_window"].get<int>() - (reg_i + 1);
            per_t.push_back(Json{{"t", t}, {"Z", z.detail}});
        }
        Json detail = replay(*ideal, field);
        detail["dim_quotient"] = monomial_quotient_dim(*ideal);
        detail["reg_I"] = reg_i;
        detail["scans"] = per_t;
        detail["z1_excess"] = excess_z1 ? Json(*excess_z1) : Json(nullptr);
        detail["kind"] = candidate ? "candidate" : "none";
        // A square with reg(I^2) > 2 reg(I) forces reg Z_1(I, I) > 2 reg(I) + 1.
        const MonomialIdeal square = *ideal * *ideal;
        const int reg_sq = reg_monomial_ideal(square).value;
        detail["reg_I_squared"] = reg_sq;
        if (reg_sq > 2 * reg_i) {
            CoefficientModule coeff;
            coeff.numerator = *ideal;
            auto cx = std::make_shared<const KoszulComplex>(ideal, coeff, field);
            const int floor = 2 * reg_i + 1;
            auto z = bounded_scan(GradedModule::koszul_cycles(cx, 1), floor, options.slack, false);
            detail["rem1_replay"] = Json{{"Z1_I_I", z.detail}, {"exceeds", z.violation}};
        }
        return record(index, !candidate, detail, ideal->to_string() + " reg " + std::to_string(reg_i));
    };
    SuiteReport report =
        assemble("probe-q1", "reg Z_t(I,S) <= t(reg I + 1) for dim S/I > 0 (capped scans, candidates only)", h,
                 std::to_string(options.size), spec.to_json(), options.size, fn);
    std::optional<int> max_excess;
    std::size_t squares = 0, replay_exceeds = 0;
    for (const auto& c : report.cases) {
        if (c.detail.contains("z1_excess") && !c.detail["z1_excess"].is_null()) {
            const int e = c.detail["z1_excess"].get<int>();
            max_excess = max_excess ? std::max(*max_excess, e) : e;
        }
        if (c.detail.contains("rem1_replay")) {
            ++squares;
            replay_exceeds += c.detail["rem1_replay"]["exceeds"].get<bool>();
        }
    }
    report.findings = Json{{"candidates", report.count(Verdict::violation)},
                           {"max_z1_excess", max_excess ? Json(*max_excess) : Json(nullptr)},
                           {"square_regularity_jumps", squares},
                           {"square_replays_exceeding", replay_exceeds}};
    return report;
}

} // namespace koszul
