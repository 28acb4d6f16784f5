#include "glci/grid.hpp"

#include <algorithm>
#include <functional>

namespace glci {

std::vector<WeightSystem> named_fixtures() {
    const std::vector<std::pair<int, std::vector<int>>> raw = {
        {1, {}},           {2, {}},           {3, {}},           {1, {2, 3, 5}},    {1, {2, 3, 6}},
        {1, {2, 3, 7}},    {1, {2, 2, 2}},    {1, {2, 3, 3}},    {1, {3, 3, 3}},    {2, {2, 3}},
        {2, {2, 3, 4}},    {2, {2, 2, 3, 4}}, {2, {2, 2, 2, 2}}, {2, {3, 3, 3, 3}}, {2, {2, 2, 2, 2, 2}},
        {2, {2, 2, 2, 2, 2, 2}},              {3, {2, 2}},       {3, {2, 2, 2, 2, 2}},
        {2, {2, 3, 7, 42}},                   {2, {2, 3, 7, 43}},
    };
    std::vector<WeightSystem> out;
    for (const auto& [d, p] : raw) out.push_back(make_weight_system(d, p));
    return out;
}

std::int64_t weight_product(const WeightSystem& w) {
    std::int64_t prod = 1;
    for (int p : w.weights) prod *= p;
    return prod;
}

std::vector<WeightSystem> default_grid(const GridSelector& sel) {
    std::vector<WeightSystem> out;
    for (int d = 1; d <= sel.max_d; ++d) {
        const int max_n = d + 1 + sel.extra_hyperplanes;
        std::vector<int> p;
        std::function<void(std::int64_t)> rec = [&](std::int64_t prod) {
            out.push_back(make_weight_system(d, p));
            if (static_cast<int>(p.size()) == max_n) return;
            const int lo = p.empty() ? sel.min_weight : p.back();
            for (int v = lo; v <= sel.max_weight && prod * v <= sel.max_product; ++v) {
                p.push_back(v);
                rec(prod * v);
                p.pop_back();
            }
        };
        rec(1);
    }
    if (sel.include_named)
        for (auto& f : named_fixtures())
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
    return out;
}

}  // namespace glci
