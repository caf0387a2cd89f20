#pragma once

#include <cstdint>
#include <vector>

#include "clusterdt/cartan.hpp"
#include "clusterdt/report.hpp"

namespace clusterdt::verify {

struct Options {
    int trials = 5;                  // randomized repetitions per experiment
    std::uint64_t rng_seed = 12345;  // base seed; derived streams are offset
    double tol_scale = 1.0;          // uniform tolerance rescaling (> 0)
};

/// The complete check suite for one type: fixed point against the closed
/// form and both defining systems, kappa/u consistency, the finiteness
/// gate, a multi-start uniqueness probe, root counts and the height
/// partition, mutation involutions and the reddening sequence, the
/// transformation as a mutation composite, ensemble-map naturality,
/// frieze residuals and distinct-value counts, periodicity on both
/// sides, the superunitary margin, and the spectral suites.
report::Report verify_type(const roots::CartanSpec& spec, const Options& opt = {});

/// The tridiagonal-model suite: twist spectra and orbit periods for
/// n = 1..8, chart coherence of the two twist implementations, and the
/// unique totally nonnegative fixed-point candidate for n <= 6.
report::Report verify_bruhat(const Options& opt = {});

/// verify_type for every supported type in canonical order, then
/// verify_bruhat.
std::vector<report::Report> verify_all(const Options& opt = {});

} // namespace clusterdt::verify
