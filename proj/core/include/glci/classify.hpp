#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glci/arith.hpp"
#include "glci/grading.hpp"

namespace glci {

bool cm_finite(const WeightSystem& w);

enum class DCMFinite { Sufficient, Unknown };
std::string to_string(DCMFinite v);
// Never answers "no": outside the known sufficient patterns the answer is Unknown.
DCMFinite d_cm_finite_sufficient(const WeightSystem& w);

bool vb_finite(const WeightSystem& w);
int gldim_canonical(const WeightSystem& w);

struct FracCY {
    bool zero_category = false;  // the stable category vanishes (n <= d + 1)
    BigInt m = 0, l = 1;         // dimension m / l as an unreduced pair
    BigInt m_reduced = 0, l_reduced = 1;
};
std::optional<FracCY> frac_cy(const WeightSystem& w);

struct WeightEnumeration {
    // Minimal sorted prefixes (length < n) such that every sorted completion
    // stays in the class.
    std::vector<std::vector<int>> infinite_families;
    std::vector<std::vector<int>> sporadic;
};
// Sorted tuples p_i >= 2 of length n with delta(omega) < 0 (Fano) or = 0
// (CalabiYau). Throws InvalidInput for AntiFano or infeasible (d, n).
WeightEnumeration enumerate_weight_systems(int d, int n, Trichotomy cls);

// |[0, dc]| - |[0, dc + 2 omega]|; throws VerificationFailure unless it
// equals the signed coset count (zero in the Calabi-Yau case).
std::int64_t orlov_rank_delta(const WeightSystem& w);

struct SliceReport {
    std::size_t size = 0;
    BigInt coset_count = 0;
    bool size_matches = false;
    bool cosets_distinct = false;
    std::int64_t l_max = 0;
    bool hom_vanishing = false;
    std::string detail;
    bool ok() const { return size_matches && cosets_distinct && hom_vanishing; }
};

struct TiltingSlice {
    WeightSystem w;  // sorted so that the two weights 2 lead
    std::vector<GroupElement> S;
    SliceReport verification;
};
TiltingSlice tilting_slice(const WeightSystem& w);

// (d+1, (2, p_1..p_n)); throws VerificationFailure when the CM-canonical
// quivers of W and its partner are not isomorphic.
WeightSystem knoerrer_partner(const WeightSystem& w);
bool knoerrer_check(const WeightSystem& w);

struct ClassificationReport {
    WeightSystem w;  // normalized
    Trichotomy trichotomy = Trichotomy::Fano;
    Rational delta_omega = 0;
    bool is_regular = false;      // n <= d + 1
    bool is_hypersurface = false; // n == d + 2
    bool cm_finite = false;
    DCMFinite d_cm_finite = DCMFinite::Unknown;
    bool vb_finite = false;
    int gldim_canonical = 0;
    std::optional<FracCY> frac_cy;
    CosetData cosets;
    std::int64_t k0_rank = 0;
    std::int64_t cm_rank = 0;
    std::int64_t orlov_delta = 0;
};
ClassificationReport classify(const WeightSystem& w);

}  // namespace glci
