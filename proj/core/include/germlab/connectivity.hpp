#pragma once

#include "germlab/multiple_points.hpp"

#include <optional>
#include <set>
#include <string>
#include <variant>

namespace germlab {

// dim Inst(f): nullopt encodes the empty instability locus (stable germ).
using InstabilityDim = std::optional<int>;

struct DegreeWindow {
    enum class Theorem { KMB, KMA, KMDP, KM, KMRefined };
    Theorem tag;
    std::set<int> degrees;
    int n = 0, p = 0;
    InstabilityDim d;

    bool contiguous() const;
    std::string theorem_name() const;
};

/// Thm KMB: reduced cohomology of Delta(f_delta) vanishes outside
/// [p-1-d, p-1]. Requires p <= n.
DegreeWindow window_discriminant(int n, int p, InstabilityDim d);

/// Thm KMA (p = n+1): H~(Y_delta) vanishes outside [n-d, n].
DegreeWindow window_image(int n, InstabilityDim d);

/// Thm KMDP: H~(D(f_delta)) vanishes outside [n-1-d, n-1].
DegreeWindow window_double_points(int n, InstabilityDim d);

/// Thm KM (p > n+1): degrees kn-(k-1)(p-1)-s over 1 < k <= floor(p/(p-n)),
/// 0 <= s <= d; the refined variant clamps each k-block at total degree k-1.
DegreeWindow window_km(int n, int p, InstabilityDim d, bool refined);

struct WindowEntry {
    DegreeWindow window;
    std::string target; // what the window bounds (discriminant / image / ...)
};

struct AnalyzeReport {
    int n = 0, p = 0;
    int branch_count = 1;
    bool K_finite = false;
    int corank_value = 0;
    InstabilityDim d;
    std::string d_source; // "user" | "empty" | "bigerm-auto"
    std::optional<DimCorrectnessReport> dim_correctness;
    std::vector<WindowEntry> windows;
    std::vector<std::string> refusals;
    std::vector<std::string> warnings;
    std::vector<std::string> provenance;
};

struct AnalyzeOptions {
    // exactly one of d / d_empty / d_bigerm_auto
    std::optional<int> d;
    bool d_empty = false;
    bool d_bigerm_auto = false;
    int k_max = -1; // default floor(p/(p-n)) where applicable
    const Unfolding* unfolding = nullptr;
};

/// One-shot analyzer: dispatches on p vs n, checks K-finiteness and (for
/// p > n+1) dimensional correctness, and emits the applicable windows.
AnalyzeReport analyze(const MapGerm& g, const AnalyzeOptions& opts);

} // namespace germlab
