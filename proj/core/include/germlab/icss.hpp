#pragma once

#include "germlab/monodromy.hpp"
#include "germlab/qlinalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace germlab {

/// Finite cochain complex over Q in degrees 0..dims.size()-1, carrying an
/// S_k action through the matrices of the adjacent transpositions.
struct EquivariantComplex {
    int k = 1;
    std::vector<int> dims;
    std::vector<QMat> d;                    // d[i]: degree i -> i+1
    std::vector<std::vector<QMat>> action;  // action[t][i]: transposition (t+1,t+2) in degree i

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    /// Shape checks, d*d = 0, involutivity, commutation with d, braid
    /// relations. Throws std::invalid_argument on failure.
    void validate() const;
    /// Matrix of an arbitrary permutation (one-line notation) in a degree.
    QMat permutation_matrix(const std::vector<int>& one_line, int degree) const;
};

/// Plain subcomplex presented by a basis embedding into a parent complex.
struct EmbeddedComplex {
    std::vector<int> dims;
    std::vector<QMat> d;
    std::vector<QMat> basis; // basis[i]: parent_dim x dims[i]
};

/// Image of the averaged alternating projector with the restricted
/// differential. Rejects k > 6 and invalid actions.
EmbeddedComplex alternating_part(const EquivariantComplex& c);

/// The alternating projector matrices themselves, one per degree.
std::vector<QMat> alternating_projectors(const EquivariantComplex& c);

struct IcssColumn {
    int k = 0;
    EquivariantComplex fiber;                // model of D^k(f_delta)
    std::optional<EquivariantComplex> total; // model of D^k(F); nullopt = contractible cone
    std::vector<QMat> restriction;           // per degree: total cochains -> fiber cochains
    std::vector<QMat> fiber_monodromy;       // optional (empty = none)
};

struct IcssFaceMap {
    int k = 0; // pullback C(D^k) -> C(D^{k+1})
    int j = 0; // which point is forgotten, 1 <= j <= k+1
    std::vector<QMat> fiber;
    std::vector<QMat> total; // optional; derived for cone totals
};

struct ICSSModel {
    int k_max = 2;
    std::vector<IcssColumn> columns; // k = 2..k_max
    std::vector<IcssFaceMap> face_maps;
    bool has_monodromy() const;
};

struct Page {
    int r = 0;
    // (i, j) -> dimension; i = vanishing-cycle degree, j = k-1 column index
    std::map<std::pair<int, int>, int> entries;
    // d_r out of (i, j), in the chosen quotient bases
    std::map<std::pair<int, int>, QMat> differentials;
    // induced monodromy per entry, when the model carries monodromy
    std::map<std::pair<int, int>, JordanModule> monodromy;
};

struct IcssResult {
    std::vector<Page> pages;      // r = 1, 2, ... up to stabilization
    std::vector<int> total_betti; // reduced Betti numbers of Y_delta by degree
    int stabilized_at = 1;
};

/// Runs the image-computing spectral sequence of a pair model: per column the
/// mapping cone of the restriction, alternating parts, horizontal alternating
/// sums of the face pullbacks, pages until stabilization, and the antidiagonal
/// totals.
IcssResult run_icss(const ICSSModel& m);

/// Absolute-model variant used to verify the Goryunov-Mond resolution on a
/// fixture: columns are the models of D^k(f_delta) themselves (k = 1..k_max),
/// no pair structure.
struct AbsoluteIcssModel {
    int k_max = 1;
    std::vector<EquivariantComplex> models; // k = 1..k_max
    std::vector<IcssFaceMap> face_maps;     // fiber entries only
};

IcssResult run_absolute_icss(const AbsoluteIcssModel& m);

/// Desk-scale check of the Goryunov-Mond augmented complex: the absolute
/// spectral sequence must converge to the supplied H^*(Y).
bool check_augmented_exactness(const AbsoluteIcssModel& m,
                               const std::vector<int>& image_cohomology);

struct DegreeMonodromy {
    int degree = 0;
    std::set<Eigenvalue> supp_superset;
    int j_upper = 0; // sum of entry bounds along the antidiagonal
    int j_lower = 0; // max of entry bounds
    bool exact = false;
    std::optional<JordanModule> exact_data; // present when exactly one column contributes
};

struct IcssMonodromyReport {
    std::vector<DegreeMonodromy> degrees;
    IcssResult icss;
};

/// Propagates fiber monodromy through the spectral sequence: per total degree
/// a support superset and Jordan-size bounds, exact module data when a single
/// column contributes.
IcssMonodromyReport propagate_icss_monodromy(const ICSSModel& m);

} // namespace germlab
