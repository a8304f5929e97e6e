#pragma once

#include "germlab/germ.hpp"

#include <optional>

namespace germlab {

enum class MpsKind { Strict, Gaffney };

/// Ideal presentation of a multiple point space with branch-tuple bookkeeping
/// and the S_k block-swap metadata.
struct MultiplePointSpace {
    int k = 0;
    MpsKind kind = MpsKind::Strict;
    std::vector<int> branch_tuple;                   // branch index per copy (nondecreasing)
    std::vector<std::string> ambient;                // copy blocks (+ shared params)
    std::vector<std::vector<std::string>> copy_vars; // per-copy variable block
    Ideal ideal;
    OriginDim dim;
    int expected_dim = 0;                            // kn - (k-1)p
    // adjacent transposition (i, i+1) swaps copy blocks i, i+1; recorded as an
    // S_k symmetry only when both copies carry the same branch
    std::vector<bool> swap_same_branch;
    std::vector<std::string> provenance;
};

/// Strict multiple point spaces D^k_strict: fiber-product equations saturated
/// by every same-branch pairwise diagonal; one space per branch tuple up to
/// S_k symmetry.
std::vector<MultiplePointSpace> strict_multiple_points(const MapGerm& g, int k);
std::vector<MultiplePointSpace> strict_multiple_points(const Unfolding& f, int k);

/// True if the germ is presented in the corank-<=1 divided-difference form:
/// n-1 components are distinct source variables, leaving one scalar variable.
bool divided_difference_presentable(const MapGerm& g);

int corank(const MapGerm& g);

/// Gaffney multiple point space D^k(f) of a monogerm. Route: divided
/// differences when presentable and no unfolding is supplied; otherwise the
/// slice of the strict space of the (asserted stable) unfolding at t = 0.
/// When both routes are available the results are cross-validated.
MultiplePointSpace gaffney_multiple_points(const MapGerm& g, int k,
                                           const Unfolding* stable_unfolding = nullptr);

/// Gaffney spaces of a multigerm via an unfolding: one per branch tuple,
/// sliced at parameter value zero.
std::vector<MultiplePointSpace> gaffney_multiple_points_tuples(const Unfolding& f, int k);

struct DimEntry {
    int k = 0;
    bool empty = false;
    std::optional<int> dim;   // max over tuples, absent when all empty
    int expected = 0;
    bool ok = false;
    bool certified_local = true;
};

struct DimCorrectnessReport {
    std::vector<DimEntry> gaffney;
    std::vector<DimEntry> strict;
    bool gaffney_ok = true;
    bool strict_ok = true;
    std::vector<std::string> provenance;
};

/// Per-k dimensional correctness (Gaffney spaces) plus the strict variant,
/// for 2 <= k <= k_max; k_max defaults to floor(p/(p-n)).
DimCorrectnessReport is_dimensionally_correct(const MapGerm& g, int k_max = -1,
                                              const Unfolding* stable_unfolding = nullptr);

struct SpecializationReport {
    RadicalCompare gaffney = RadicalCompare::Inconclusive;
    RadicalCompare strict_variant = RadicalCompare::Inconclusive;
    bool gaffney_specializes() const { return gaffney == RadicalCompare::Equal; }
    bool strict_specializes() const { return strict_variant == RadicalCompare::Equal; }
};

/// Does D^k behave well under the deformation F at the given parameter value:
/// radical(D^k(F) + <t - value>) == radical(D^k(f_value))? Also reports the
/// strict-variant analogue, which is expected to fail in general.
SpecializationReport check_specialization(const Unfolding& f, int k, const Rational& value);

struct SourceDoublePointsReport {
    std::vector<Ideal> branch_ideals; // per branch, in that branch's variables
    bool not_generically_one_to_one = false;
    std::vector<std::string> provenance;
};

/// Source double point locus D(f) per branch: projection of D^2 to each
/// source copy unioned with the non-immersive locus.
SourceDoublePointsReport source_double_points(const MapGerm& g,
                                              const Unfolding* stable_unfolding = nullptr);

} // namespace germlab
