#pragma once

#include "svlab/asymptotics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace svlab {

// One row of the lookup table, grouped into six stratum families.
// Rows with free parameters are instantiated at m1 = m2 = 1 (principal
// stratum) and p = 2; the instantiation is printed in the row labels.
// Bound-only rows carry no float value.
struct TableRow {
    std::string stratum;
    std::string multiplicity;
    std::string loops;        // "distinct" / "loops" / "any"
    std::string zero_orders;
    std::string fixed_any;
    std::string formula;      // symbolic large-genus form
    std::string coefficient;  // exact PiLaurent string at the instantiation
    int g_power = 0;
    std::optional<double> value;  // coefficient * g^{g_power} at the given g
    ErrorClass error = ErrorClass::OneOverG;
    std::string reference;
};

std::vector<TableRow> generate_table(long g);

std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(const std::vector<TableRow>& rows, long g);

}  // namespace svlab
