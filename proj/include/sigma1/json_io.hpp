/**
 * @file json_io.hpp
 * @brief JSON views of the library objects for the command line tool.
 *
 * All integers are rendered as decimal strings so output never depends on a
 * consumer's integer width, and objects keep insertion order, making output
 * byte-identical for identical inputs.
 */
#ifndef SIGMA1_JSON_IO_HPP
#define SIGMA1_JSON_IO_HPP

#include <json.hpp>

#include "sigma1/building.hpp"
#include "sigma1/cover_ring.hpp"
#include "sigma1/divisor.hpp"
#include "sigma1/lagrange.hpp"
#include "sigma1/symbol_unit.hpp"

namespace sigma1 {

using ordered_json = nlohmann::ordered_json;

std::string dec(int64_t v);

ordered_json json_of(const Params& par);
ordered_json json_of(const HyperplaneClass& H);
ordered_json json_of(const DivisorVector& D);
ordered_json json_of(const UnitClass& u);
ordered_json json_of(const KummerClass& K);
ordered_json json_of(const SymbolUnit& u);
ordered_json json_of(const Params& par, const SimplexPresentation& S);
ordered_json json_of(const Params& par, const XpidPresentation& X);
ordered_json json_of(const InvariantEnumeration& E);
ordered_json json_of(const Rat& r);
ordered_json json_of(const Valuation& v);
ordered_json json_of(const IdempotentReport& rep);
ordered_json json_of(const LemeqReport& rep);

}  // namespace sigma1

#endif  // SIGMA1_JSON_IO_HPP
