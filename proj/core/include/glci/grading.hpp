#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glci/arith.hpp"
#include "glci/linalg.hpp"

namespace glci {

// Dimension d, weights p_1..p_n and optional numeric hyperplane
// coefficients (an n x (d+1) matrix). An absent matrix means the
// coefficients are kept symbolic.
struct WeightSystem {
    int d = 1;
    std::vector<int> weights;
    std::optional<RationalMatrix> lambda;

    std::size_t n() const { return weights.size(); }
    bool symbolic() const { return !lambda.has_value(); }

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
};

// Validates and returns the weight system; throws InvalidInput.
WeightSystem make_weight_system(int d, std::vector<int> weights,
                                std::optional<RationalMatrix> lambda = std::nullopt);
void validate(const WeightSystem& w);

std::string to_string(const WeightSystem& w);

// Element of the grading group in normal form: sum a_i x_i + a c with
// 0 <= a_i < p_i.
struct GroupElement {
    std::vector<std::int64_t> torsion;
    std::int64_t free = 0;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    // Library-wide enumeration order: free coordinate first, then torsion
    // lexicographically.
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
        if (auto c = a.free <=> b.free; c != 0) return c;
        return a.torsion <=> b.torsion;
    }
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& x) const noexcept;
};

// "(a_1,...,a_n;a)"
std::string to_string(const GroupElement& x);
// Inverse of to_string for a given weight system; normalizes.
GroupElement parse_group_element(const WeightSystem& w, const std::string& text);

enum class Trichotomy { Fano, CalabiYau, AntiFano };
std::string to_string(Trichotomy t);

GroupElement normal_form(const WeightSystem& w, const std::vector<std::int64_t>& raw_torsion,
                         std::int64_t raw_free);

GroupElement zero(const WeightSystem& w);
// x_i for 1 <= i <= n.
GroupElement generator(const WeightSystem& w, std::size_t i);
// k c
GroupElement c_multiple(const WeightSystem& w, std::int64_t k);

GroupElement add(const WeightSystem& w, const GroupElement& x, const GroupElement& y);
GroupElement negate(const WeightSystem& w, const GroupElement& x);
GroupElement subtract(const WeightSystem& w, const GroupElement& x, const GroupElement& y);
GroupElement scale(const WeightSystem& w, const GroupElement& x, std::int64_t k);

bool is_nonneg(const WeightSystem& w, const GroupElement& x);
bool leq(const WeightSystem& w, const GroupElement& x, const GroupElement& y);

Rational delta(const WeightSystem& w, const GroupElement& x);

GroupElement omega(const WeightSystem& w);
Rational delta_omega(const WeightSystem& w);
Trichotomy trichotomy(const WeightSystem& w);

// All z with x <= z <= y, sorted by the GroupElement order.
std::vector<GroupElement> interval(const WeightSystem& w, const GroupElement& x, const GroupElement& y);

struct CosetData {
    bool infinite = false;
    BigInt count = 0;                      // meaningful when !infinite
    std::vector<BigInt> invariant_factors; // Smith diagonal of the presentation
};
CosetData coset_data_mod_omega(const WeightSystem& w);

// The n x n relation matrix presenting the quotient by Z omega.
BigIntMatrix omega_quotient_presentation(const WeightSystem& w);

// dim_k R_x: binomial(a + d, d) for free coordinate a >= 0.
std::int64_t piece_dim(const WeightSystem& w, const GroupElement& x);

// dim Ext^i(O(x), O(y)) between line bundles.
std::int64_t hom_ext_dim(const WeightSystem& w, const GroupElement& x, const GroupElement& y, int i);

// Drops weight-1 entries (and the matching rows of numeric lambda).
WeightSystem normalize_weights(const WeightSystem& w);

// Normalizes and then appends weight-1 entries until n >= d + 1.
WeightSystem minimal_presentation(const WeightSystem& w);

}  // namespace glci
