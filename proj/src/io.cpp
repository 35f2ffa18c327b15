#include "koszul/io.hpp"

#include <fstream>
#include <sstream>

namespace koszul {

namespace {

std::vector<int> int_list(const Json& j, const char* what)
{
    if (!j.is_array())
        throw IoError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw IoError(std::string(what) + " must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

} // namespace

MonomialIdeal ideal_from_json(const Json& j)
{
    if (!j.is_object())
        throw IoError("ideal must be a JSON object");
    const bool has_gens = j.contains("generators");
    const bool has_power = j.contains("power");
    if (has_gens == has_power)
        throw IoError("ideal needs exactly one of \"generators\" or \"power\"");
    try {
        if (has_power) {
            MultiDegree c = int_list(j.at("power"), "power");
            std::vector<int> blocks = j.contains("blocks") ? int_list(j.at("blocks"), "blocks") : std::vector<int>{};
            if (blocks.empty())
                throw IoError("\"power\" needs \"blocks\"");
            return power_ideal(RingConfig(blocks), c);
        }
        const Json& gens = j.at("generators");
        if (!gens.is_array() || gens.empty())
            throw IoError("\"generators\" must be a nonempty array");
        std::vector<Monomial> monos;
        for (const auto& g : gens)
            monos.emplace_back(int_list(g, "generator"));
        std::vector<int> blocks = j.contains("blocks") ? int_list(j.at("blocks"), "blocks")
                                                       : std::vector<int>{monos.front().nvars()};
        return MonomialIdeal(RingConfig(blocks), monos);
    } catch (const RingError& e) {
        throw IoError(e.what());
    }
}

MonomialIdeal read_ideal_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
    return ideal_from_json(j);
}

Json ideal_to_json(const MonomialIdeal& ideal)
{
    Json gens = Json::array();
    for (const auto& g : ideal.gens())
        gens.push_back(g.exponents());
    return Json{{"blocks", ideal.ring().blocks()}, {"generators", gens}};
}

Json betti_to_json(const BettiTable& table)
{
    Json entries = Json::array();
    for (const auto& [key, e] : table.entries)
        entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"dim", e.dim}, {"certified", e.certified}});
    return Json{{"entries", entries}, {"cap", table.cap}};
}

BettiTable betti_from_json(const Json& j)
{
    BettiTable t;
    try {
        t.cap = j.at("cap").get<int>();
        for (const auto& e : j.at("entries"))
            t.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] =
                BettiEntry{e.at("dim").get<long long>(), e.at("certified").get<bool>()};
    } catch (const Json::exception& e) {
        throw IoError(std::string("malformed Betti table: ") + e.what());
    }
    return t;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Json monomial_to_json(const Monomial& m) { return m.exponents(); }

Json degree_to_json(const MultiDegree& d) { return d; }

Json chain_to_json(const KoszulChain& chain)
{
    Json terms = Json::array();
    for (const auto& [key, c] : chain.terms())
        terms.push_back(Json{{"set", key.first}, {"w", key.second.exponents()}, {"coeff", rational_to_string(c)}});
    return Json{{"t", chain.degree()}, {"render", chain.render()}, {"terms", terms}};
}

Json family_to_json(const CycleFamily& family)
{
    Json a = Json::array(), b = Json::array(), vars = Json::array();
    for (const auto& m : family.a)
        a.push_back(m.exponents());
    for (const auto& m : family.b)
        b.push_back(m.exponents());
    for (const auto& [j, k] : family.variables)
        vars.push_back(Json::array({j, k}));
    return Json{{"label", to_string(family.label)}, {"a", a}, {"b", b}, {"variables", vars},
                {"chain", chain_to_json(family.chain)}};
}

} // namespace koszul
