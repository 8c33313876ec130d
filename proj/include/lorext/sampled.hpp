#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "lorext/errors.hpp"

namespace lorext {

using complexd = std::complex<double>;

/// Step-function model of a measurable function on [0, a]: a uniform grid of
/// n cells, each of measure a/n, carrying one complex value.
struct SampledFunction {
    double interval_length = 1.0;
    std::vector<complexd> values;

    SampledFunction() = default;
    SampledFunction(double a, std::vector<complexd> v)
        : interval_length(a), values(std::move(v)) {}
    SampledFunction(double a, const std::vector<double>& v)
        : interval_length(a), values(v.begin(), v.end()) {}

    std::size_t size() const { return values.size(); }
    double cell_measure() const {
        return interval_length / static_cast<double>(values.size());
    }

    bool same_grid(const SampledFunction& other) const {
        return size() == other.size() &&
               interval_length == other.interval_length;
    }

    /// True when all imaginary parts vanish within tol.
    bool is_real(double tol = 0.0) const;

    std::vector<double> moduli() const;
};

/// Nonincreasing nonnegative cell values: the discrete x*.
struct RearrangedProfile {
    double interval_length = 1.0;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double cell_measure() const {
        return interval_length / static_cast<double>(values.size());
    }
};

/// Throws precondition_error unless f satisfies the type invariants
/// (n >= 1, a > 0, all values finite).
void validate(const SampledFunction& f);

/// Throws grid_mismatch_error unless f and g share n and interval length.
void require_same_grid(const SampledFunction& f, const SampledFunction& g);

SampledFunction constant_function(double a, std::size_t n, complexd value);

/// f restricted to the listed cells (others zeroed).
SampledFunction restrict_to_cells(const SampledFunction& f,
                                  const std::vector<std::size_t>& cells);

} // namespace lorext
