#pragma once

#include <json.hpp>

#include "matlis/artinian.hpp"
#include "matlis/primes.hpp"

namespace matlis {

using Json = nlohmann::ordered_json;

Json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const Json& j);

Json module_to_json(const GradedModule& m);
GradedModule module_from_json(const Json& j);

Json artinian_to_json(const ArtinianModule& a);
ArtinianModule artinian_from_json(const Json& j);

// Summary of a finite-length value: length, Hilbert table, generators.
Json finite_summary(const FiniteLengthModule& v);
Json module_summary(const GradedModule& m, int hilbert_window = 8);

Json stage_sequence_to_json(const StageSequence& s);
Json primes_to_json(const PrimeSet& ps, const RingPtr& ring);
Json vanishing_to_json(const VanishingReport& r);
Json depth_formulas_to_json(const DepthFormulaReport& r);

}  // namespace matlis
