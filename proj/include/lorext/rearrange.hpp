#pragma once

#include <cstddef>
#include <vector>

#include "lorext/sampled.hpp"

namespace lorext {

/// Nested level sets E_t realized as a permutation of cell indices: for every
/// k the first k entries form the set of parameter t = k*a/n.  Ordering is by
/// nonincreasing modulus, ties broken by ascending original index.
struct LevelSetFamily {
    std::vector<std::size_t> order;
};

/// Moduli of f sorted nonincreasing; same grid.
RearrangedProfile decreasing_rearrangement(const SampledFunction& f);

RearrangedProfile decreasing_rearrangement(const RearrangedProfile& p);

/// Measure of { |f| > tau }: (a/n) * #{ cells with modulus > tau }.
double distribution_function(const SampledFunction& f, double tau);

/// True iff the rearranged profiles agree cellwise within tol.
/// Throws grid_mismatch_error when the grids differ.
bool equimeasurable(const SampledFunction& f, const SampledFunction& g,
                    double tol);

LevelSetFamily level_set_family(const SampledFunction& f);

/// Lifts a profile back to a (real, nonnegative) SampledFunction.
SampledFunction to_sampled(const RearrangedProfile& p);

} // namespace lorext
