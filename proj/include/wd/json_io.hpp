#pragma once

#include <json.hpp>

#include "wd/concrete.hpp"
#include "wd/gl2.hpp"
#include "wd/spectrum.hpp"
#include "wd/wd_module.hpp"
#include "wd/zeta.hpp"

namespace wd {

using Json = nlohmann::json;

// All documents carry "format": 1. Rationals serialize as strings "p" or
// "p/r"; q as a JSON integer when it fits, else as a decimal string.

// Rejects documents whose "format" field is present and not 1.
void check_format(const Json& j);

Json monomial_to_json(const WeilMonomial& a);
WeilMonomial monomial_from_json(const Json& j);

Json module_to_json(const SSModule& a);
SSModule module_from_json(const Json& j);

Json spectrum_to_json(const WeightedSpectrum& s);
WeightedSpectrum spectrum_from_json(const Json& j);

Json gl2_to_json(const GL2Param& p);
GL2Param gl2_from_json(const Json& j);

Json matrix_to_json(const RatMat& m);
Json graded_to_json(const GradedModule& g);
Json filtration_to_json(const StableFiltration& f);
Json lfactor_to_json(const LocalLFactor& l);

} // namespace wd
