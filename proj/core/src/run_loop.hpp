#pragma once

#include "msde/de.hpp"
#include "msde/gss.hpp"

namespace msde::detail {

// Generation loop shared by run_de and run_msde. `memetic` selects the
// strategy: nullptr runs plain DE, otherwise each generation is prefixed by
// compute_fj and mutations use the shared amplification F + f_j.
RunResult evolve(const Problem& problem, const DEConfig& config,
                 const MemeticConfig* memetic, Rng& rng, EvalContext& ctx,
                 Population& population, const RunHooks* hooks);

}  // namespace msde::detail
