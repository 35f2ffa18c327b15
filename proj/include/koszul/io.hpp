#ifndef KOSZUL_IO_HPP
#define KOSZUL_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "koszul/cycles.hpp"
#include "koszul/exterior.hpp"
#include "koszul/homology.hpp"
#include "koszul/ring.hpp"

namespace koszul {

class IoError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::json;

/// {"blocks":[m_1,..],"generators":[[e_1,..],..]} or {"blocks":[..],"power":[c_1,..]}.
/// A missing "blocks" means one block holding every variable.
MonomialIdeal ideal_from_json(const Json& j);
MonomialIdeal read_ideal_file(const std::string& path);
Json ideal_to_json(const MonomialIdeal& ideal);

Json betti_to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& j);

std::string rational_to_string(const Rational& q);
Json monomial_to_json(const Monomial& m);
Json degree_to_json(const MultiDegree& d);
Json chain_to_json(const KoszulChain& chain);
Json family_to_json(const CycleFamily& family);

} // namespace koszul

#endif // KOSZUL_IO_HPP
