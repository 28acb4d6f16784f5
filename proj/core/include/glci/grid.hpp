#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glci/grading.hpp"

namespace glci {

struct GridSelector {
    int max_d = 3;
    int min_weight = 2;
    int max_weight = 7;
    int extra_hyperplanes = 2;  // n <= d + 1 + extra_hyperplanes
    std::int64_t max_product = 240;
    bool include_named = true;
};

// Sorted weight tuples within the selector bounds (including n = 0 for
// every d), followed by the named fixtures not already present.
std::vector<WeightSystem> default_grid(const GridSelector& sel = {});

// Fixtures quoted throughout the documentation and tests.
std::vector<WeightSystem> named_fixtures();

std::int64_t weight_product(const WeightSystem& w);

}  // namespace glci
