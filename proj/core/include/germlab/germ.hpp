#pragma once

#include "germlab/ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germlab {

struct Branch {
    std::vector<std::string> vars;       // exactly n source variables
    std::vector<Polynomial> components;  // exactly p components in Q[vars]
};

/// Multi-branch polynomial map-germ (C^n, S) -> (C^p, 0). Branch variable
/// namespaces are disjoint; target variable names are shared.
class MapGerm {
public:
    // `require_origin`: enforce that all components vanish at 0 (germ data).
    // Internal slices of unfoldings at nonzero parameter values relax this.
    MapGerm(int n, int p, std::vector<Branch> branches,
            std::vector<std::string> target_vars = {}, bool require_origin = true);

    int n() const { return n_; }
    int p() const { return p_; }
    const std::vector<Branch>& branches() const { return branches_; }
    const std::vector<std::string>& target_vars() const { return target_vars_; }
    bool is_multigerm() const { return branches_.size() > 1; }

    /// All source variable names across branches, in branch order.
    std::vector<std::string> all_source_vars() const;

private:
    int n_ = 0, p_ = 0;
    std::vector<Branch> branches_;
    std::vector<std::string> target_vars_;
};

/// One- or multi-parameter unfolding F(x,t) = (f_t(x), t); setting every
/// parameter to zero recovers the base components exactly (validated).
class Unfolding {
public:
    Unfolding(MapGerm base, std::vector<std::string> params,
              std::vector<std::vector<Polynomial>> branch_components);

    const MapGerm& base() const { return base_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::vector<std::vector<Polynomial>>& branch_components() const {
        return branch_components_;
    }

    /// The member f_t of the family at the given parameter values, as a map
    /// (origin-vanishing not enforced for nonzero values).
    MapGerm slice(const std::vector<Rational>& values) const;

private:
    MapGerm base_;
    std::vector<std::string> params_;
    std::vector<std::vector<Polynomial>> branch_components_; // in Q[branch vars + params]
};

struct LocusReport {
    Ideal ideal;          // in the target ring
    OriginDim dim;
    bool K_finite = false;
    bool K_finite_warning = false;            // set when computed despite failing the test
    std::optional<bool> dim_delta_expected;   // dim == p-1, when p <= n+1 applies
};

/// Critical locus per branch: p x p minors of the Jacobian when p <= n, the
/// zero ideal (whole source) when p > n.
std::vector<Ideal> critical_locus(const MapGerm& g);

/// Non-immersive locus per branch: n x n minors of the Jacobian (rank < n).
std::vector<Ideal> non_immersive_locus(const MapGerm& g);

/// Discriminant Delta(f) = f(Sigma(f)) via elimination of the source
/// variables from graph + critical ideals, unioned over branches.
LocusReport discriminant(const MapGerm& g);

/// Image of f as an ideal in the target ring (elimination of source vars).
Ideal image_ideal(const MapGerm& g);

/// K-finiteness: f restricted to its critical locus has zero-dimensional germ
/// fiber over 0 on every branch.
bool is_K_finite(const MapGerm& g);

/// Bi-germ of immersions attached to a hypersurface V(g): branch 1 is the
/// graph x -> (x, g(x)), branch 2 the zero section. Rejects g = 0.
MapGerm bigerm_from_hypersurface(const Polynomial& g);

/// True if the germ structurally matches the bigerm_from_hypersurface shape.
bool is_hypersurface_bigerm(const MapGerm& g);

/// Source polynomial g of a hypersurface bi-germ (branch-1 last component).
Polynomial bigerm_source_polynomial(const MapGerm& g);

/// The canonical stabilization: branch 1 unchanged, branch 2 translated to
/// (x, t). Rejects germs not of the paired-constructor shape.
Unfolding bigerm_stabilization(const MapGerm& g);

/// dim_at_origin of <g, dg/dx_1, ..., dg/dx_n> = dim Sing V(g); empty result
/// means the bi-germ is stable.
OriginDim instability_dim_bigerm(const MapGerm& g);

} // namespace germlab
