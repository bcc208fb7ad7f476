#pragma once

#include <json.hpp>

#include "pim/halfint_mat.hpp"
#include "pim/qseries.hpp"

namespace pim {

using Json = nlohmann::ordered_json;

// Matrices travel as the integer matrix 2B (unambiguous half-integrality).
HalfIntMat halfint_from_json(const Json& j);
Json halfint_to_json(const HalfIntMat& B);

// q-expansions as arrays of exact scalar strings "num/den" / "(a+b*sqrt(d))/c".
Json qseries_to_json(const QSeries& s);

}  // namespace pim
