#include "germlab/connectivity.hpp"

#include <stdexcept>

namespace germlab {

bool DegreeWindow::contiguous() const {
    if (degrees.empty())
        return true;
    int prev = *degrees.begin();
    for (auto it = std::next(degrees.begin()); it != degrees.end(); ++it) {
        if (*it != prev + 1)
            return false;
        prev = *it;
    }
    return true;
}

std::string DegreeWindow::theorem_name() const {
    switch (tag) {
    case Theorem::KMB:
        return "KMB";
    case Theorem::KMA:
        return "KMA";
    case Theorem::KMDP:
        return "KMDP";
    case Theorem::KM:
        return "KM";
    case Theorem::KMRefined:
        return "KM_refined";
    }
    return "?";
}

namespace {

std::set<int> interval(int lo, int hi) {
    std::set<int> s;
    for (int q = std::max(lo, 0); q <= hi; ++q)
        s.insert(q);
    return s;
}

void require_d(const InstabilityDim& d) {
    if (d && *d < 0)
        throw std::invalid_argument("instability dimension must be >= 0 or empty");
}

} // namespace

DegreeWindow window_discriminant(int n, int p, InstabilityDim d) {
    if (p > n)
        throw std::invalid_argument("window_discriminant needs p <= n");
    require_d(d);
    DegreeWindow w{DegreeWindow::Theorem::KMB, {}, n, p, d};
    if (d)
        w.degrees = interval(p - 1 - *d, p - 1);
    return w;
}

DegreeWindow window_image(int n, InstabilityDim d) {
    require_d(d);
    DegreeWindow w{DegreeWindow::Theorem::KMA, {}, n, n + 1, d};
    if (d)
        w.degrees = interval(n - *d, n);
    return w;
}

DegreeWindow window_double_points(int n, InstabilityDim d) {
    require_d(d);
    DegreeWindow w{DegreeWindow::Theorem::KMDP, {}, n, n + 1, d};
    if (d)
        w.degrees = interval(n - 1 - *d, n - 1);
    return w;
}

DegreeWindow window_km(int n, int p, InstabilityDim d, bool refined) {
    if (p <= n + 1)
        throw std::invalid_argument("window_km needs p > n+1; use window_image instead");
    require_d(d);
    DegreeWindow w{refined ? DegreeWindow::Theorem::KMRefined : DegreeWindow::Theorem::KM,
                   {},
                   n,
                   p,
                   d};
    if (!d)
        return w;
    int k_top = p / (p - n);
    for (int k = 2; k <= k_top; ++k) {
        int top = k * n - (k - 1) * (p - 1);
        for (int s = 0; s <= *d; ++s) {
            int q = top - s;
            if (q < 0)
                continue;
            if (refined && q < k - 1)
                continue; // E1 column lives in vanishing-cycle degrees i >= 0
            w.degrees.insert(q);
        }
    }
    return w;
}

AnalyzeReport analyze(const MapGerm& g, const AnalyzeOptions& opts) {
    AnalyzeReport rep;
    rep.n = g.n();
    rep.p = g.p();
    rep.branch_count = static_cast<int>(g.branches().size());
    rep.K_finite = is_K_finite(g);
    rep.corank_value = corank(g);

    int selected = 0;
    selected += opts.d.has_value() ? 1 : 0;
    selected += opts.d_empty ? 1 : 0;
    selected += opts.d_bigerm_auto ? 1 : 0;
    if (selected != 1)
        throw std::invalid_argument("analyze: specify exactly one of d, empty, bigerm-auto");

    if (opts.d_bigerm_auto) {
        if (!is_hypersurface_bigerm(g))
            throw std::invalid_argument("bigerm-auto requires a hypersurface bi-germ");
        OriginDim inst = instability_dim_bigerm(g);
        rep.d_source = "bigerm-auto";
        rep.d = inst.empty ? InstabilityDim{} : InstabilityDim{inst.dim};
        if (!inst.certified_local)
            rep.warnings.push_back("instability dimension reported from global data");
    } else if (opts.d_empty) {
        rep.d_source = "empty";
        rep.d = std::nullopt;
    } else {
        rep.d_source = "user";
        rep.d = opts.d;
        rep.provenance.push_back("instability dimension d supplied by the user, not computed");
    }

    if (!rep.K_finite)
        rep.warnings.push_back("germ is not K-finite; the theorems do not apply as stated");

    if (rep.p <= rep.n) {
        rep.windows.push_back({window_discriminant(rep.n, rep.p, rep.d), "discriminant"});
        return rep;
    }
    if (rep.p == rep.n + 1) {
        rep.windows.push_back({window_image(rep.n, rep.d), "image"});
        rep.windows.push_back({window_double_points(rep.n, rep.d), "source double points"});
        return rep;
    }

    // p > n+1: Thm KM needs dimensional correctness
    try {
        rep.dim_correctness = is_dimensionally_correct(g, opts.k_max, opts.unfolding);
    } catch (const std::invalid_argument& e) {
        rep.refusals.push_back(std::string("KM inapplicable: ") + e.what());
        return rep;
    }
    for (const auto& pv : rep.dim_correctness->provenance)
        rep.provenance.push_back(pv);
    if (!rep.dim_correctness->gaffney_ok) {
        rep.refusals.push_back("KM inapplicable: not dimensionally correct");
        return rep;
    }
    if (g.is_multigerm())
        rep.provenance.push_back(
            "multigerm: monogerm KM window emitted; symmetric-group refinement not modelled");
    rep.windows.push_back({window_km(rep.n, rep.p, rep.d, false), "image"});
    rep.windows.push_back({window_km(rep.n, rep.p, rep.d, true), "image"});
    return rep;
}

} // namespace germlab
