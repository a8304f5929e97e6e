#include "germlab/multiple_points.hpp"

#include "germlab/qlinalg.hpp"
#include "germlab/qpoly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace germlab {

namespace {

std::vector<std::vector<int>> nondecreasing_tuples(int branches, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lexicographic enumeration gives the deterministic merge order
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int b = lo; b < branches; ++b) {
            cur.push_back(b);
            rec(b);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

struct CopyNaming {
    std::vector<std::string> ambient;
    std::vector<std::vector<std::string>> copy_vars;
    std::vector<std::map<std::string, std::string>> renamings; // branch vars -> copy vars
};

CopyNaming make_copies(const std::vector<Branch>& branches, const std::vector<int>& tuple,
                       const std::vector<std::string>& params) {
    CopyNaming naming;
    std::vector<std::string> taken;
    for (const auto& b : branches)
        taken.insert(taken.end(), b.vars.begin(), b.vars.end());
    taken.insert(taken.end(), params.begin(), params.end());
    for (size_t i = 0; i < tuple.size(); ++i) {
        const Branch& b = branches[static_cast<size_t>(tuple[i])];
        std::vector<std::string> block;
        std::map<std::string, std::string> ren;
        for (const auto& v : b.vars) {
            std::string nv = fresh_var(taken, v + "_" + std::to_string(i + 1));
            taken.push_back(nv);
            block.push_back(nv);
            ren[v] = nv;
        }
        naming.copy_vars.push_back(block);
        naming.renamings.push_back(std::move(ren));
        naming.ambient.insert(naming.ambient.end(), block.begin(), block.end());
    }
    naming.ambient.insert(naming.ambient.end(), params.begin(), params.end());
    return naming;
}

// Fiber-product equations, saturated by every same-branch pairwise diagonal.
MultiplePointSpace build_strict_space(const MapGerm& g,
                                      const std::vector<std::vector<Polynomial>>& components,
                                      const std::vector<std::string>& params, int k,
                                      const std::vector<int>& tuple) {
    CopyNaming naming = make_copies(g.branches(), tuple, params);
    const auto& ambient = naming.ambient;

    std::vector<std::vector<Polynomial>> copy_components;
    for (size_t i = 0; i < tuple.size(); ++i) {
        std::vector<Polynomial> comps;
        for (const auto& c : components[static_cast<size_t>(tuple[i])])
            comps.push_back(c.rename(naming.renamings[i], ambient));
        copy_components.push_back(std::move(comps));
    }

    std::vector<Polynomial> gens;
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j)
            for (int a = 0; a < g.p(); ++a) {
                Polynomial diff = copy_components[i][a] - copy_components[j][a];
                if (!diff.is_zero())
                    gens.push_back(std::move(diff));
            }
    Ideal ideal(ambient, std::move(gens));
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j) {
            if (tuple[i] != tuple[j])
                continue;
            std::vector<Polynomial> diag;
            for (size_t v = 0; v < naming.copy_vars[i].size(); ++v)
                diag.push_back(Polynomial::variable(ambient, naming.copy_vars[i][v]) -
                               Polynomial::variable(ambient, naming.copy_vars[j][v]));
            ideal = saturate(ideal, Ideal(ambient, std::move(diag)));
        }

    MultiplePointSpace mps;
    mps.k = k;
    mps.kind = MpsKind::Strict;
    mps.branch_tuple = tuple;
    mps.ambient = ambient;
    mps.copy_vars = naming.copy_vars;
    mps.ideal = groebner_basis(ideal, MonomialOrder::grevlex());
    mps.dim = dim_at_origin(mps.ideal);
    mps.expected_dim = k * g.n() - (k - 1) * g.p() + static_cast<int>(params.size());
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        mps.swap_same_branch.push_back(tuple[i] == tuple[i + 1]);
    return mps;
}

std::vector<std::vector<Polynomial>> base_components(const MapGerm& g) {
    std::vector<std::vector<Polynomial>> comps;
    for (const auto& b : g.branches())
        comps.push_back(b.components);
    return comps;
}

} // namespace

std::vector<MultiplePointSpace> strict_multiple_points(const MapGerm& g, int k) {
    if (k < 2)
        throw std::invalid_argument("strict_multiple_points needs k >= 2");
    std::vector<MultiplePointSpace> out;
    for (const auto& tuple : nondecreasing_tuples(static_cast<int>(g.branches().size()), k))
        out.push_back(build_strict_space(g, base_components(g), {}, k, tuple));
    return out;
}

std::vector<MultiplePointSpace> strict_multiple_points(const Unfolding& f, int k) {
    if (k < 2)
        throw std::invalid_argument("strict_multiple_points needs k >= 2");
    std::vector<MultiplePointSpace> out;
    const MapGerm& g = f.base();
    for (const auto& tuple : nondecreasing_tuples(static_cast<int>(g.branches().size()), k))
        out.push_back(build_strict_space(g, f.branch_components(), f.params(), k, tuple));
    return out;
}

int corank(const MapGerm& g) {
    int worst = 0;
    for (const auto& b : g.branches()) {
        QMat jac0(b.components.size(), b.vars.size());
        for (size_t a = 0; a < b.components.size(); ++a)
            for (size_t i = 0; i < b.vars.size(); ++i)
                jac0.at(a, i) = b.components[a].derivative(b.vars[i]).eval_at_origin();
        worst = std::max(worst, g.n() - static_cast<int>(jac0.rank()));
    }
    return worst;
}

namespace {

struct DividedDiffForm {
    std::vector<std::string> x_part;  // identity-component variables
    std::string scalar;               // the remaining source variable
    std::vector<Polynomial> nontrivial; // remaining components, in branch ring
};

std::optional<DividedDiffForm> detect_dd_form(const Branch& b) {
    std::set<std::string> identity;
    std::vector<bool> is_identity(b.components.size(), false);
    for (size_t a = 0; a < b.components.size(); ++a) {
        const Polynomial& c = b.components[a];
        if (c.terms().size() != 1)
            continue;
        const auto& [e, coeff] = *c.terms().begin();
        if (coeff != 1 || total_degree(e) != 1)
            continue;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] == 1) {
                if (identity.insert(b.vars[i]).second)
                    is_identity[a] = true;
                break;
            }
    }
    std::vector<std::string> leftover;
    for (const auto& v : b.vars)
        if (!identity.count(v))
            leftover.push_back(v);
    if (leftover.size() != 1)
        return std::nullopt;
    DividedDiffForm form;
    form.scalar = leftover[0];
    for (const auto& v : b.vars)
        if (identity.count(v))
            form.x_part.push_back(v);
    for (size_t a = 0; a < b.components.size(); ++a)
        if (!is_identity[a])
            form.nontrivial.push_back(b.components[a]);
    return form;
}

// Iterated divided difference g[y_1, ..., y_i] in the ambient ring; g itself
// still lives in the branch ring and enters the ambient at the leaves.
Polynomial divided_difference(const Polynomial& g, const std::string& scalar,
                              const std::vector<std::string>& ambient,
                              const std::vector<std::string>& ys, int from, int to) {
    if (from == to)
        return g.substitute({{scalar, Polynomial::variable(ambient, ys[from])}});
    Polynomial left = divided_difference(g, scalar, ambient, ys, from, to - 1);
    Polynomial right = divided_difference(g, scalar, ambient, ys, from + 1, to);
    return divide_by_linear_difference(left - right, ys[from], ys[to]);
}

struct DdSpace {
    std::vector<std::string> ambient;
    std::vector<std::string> ys;
    Ideal ideal;
};

// Divided-difference presentation of D^k for a map in the (x, g_j(x,y)) form.
DdSpace dd_space(const DividedDiffForm& form, int k) {
    std::vector<std::string> ambient = form.x_part;
    std::vector<std::string> taken = form.x_part;
    taken.push_back(form.scalar);
    std::vector<std::string> ys;
    for (int i = 1; i <= k; ++i) {
        std::string y = fresh_var(taken, form.scalar + "_" + std::to_string(i));
        taken.push_back(y);
        ys.push_back(y);
        ambient.push_back(y);
    }

    std::vector<Polynomial> gens;
    for (const auto& gj : form.nontrivial) {
        if (gj.is_zero())
            continue;
        for (int order = 2; order <= k; ++order)
            gens.push_back(divided_difference(gj, form.scalar, ambient, ys, 0, order - 1));
    }
    DdSpace space;
    space.ambient = ambient;
    space.ys = ys;
    space.ideal = groebner_basis(Ideal(ambient, std::move(gens)), MonomialOrder::grevlex());
    return space;
}

std::optional<DividedDiffForm> monogerm_dd_form(const MapGerm& g) {
    if (g.is_multigerm())
        return std::nullopt;
    return detect_dd_form(g.branches()[0]);
}

MultiplePointSpace dd_gaffney(const MapGerm& g, const DividedDiffForm& form, int k) {
    DdSpace space = dd_space(form, k);
    MultiplePointSpace mps;
    mps.k = k;
    mps.kind = MpsKind::Gaffney;
    mps.branch_tuple.assign(static_cast<size_t>(k), 0);
    mps.ambient = space.ambient;
    for (const auto& y : space.ys) {
        std::vector<std::string> block = form.x_part;
        block.push_back(y);
        mps.copy_vars.push_back(block);
    }
    mps.ideal = space.ideal;
    mps.dim = dim_at_origin(mps.ideal);
    mps.expected_dim = k * g.n() - (k - 1) * g.p();
    mps.swap_same_branch.assign(static_cast<size_t>(k - 1), true);
    mps.provenance.push_back("route: divided differences (corank <= 1)");
    return mps;
}

// Slice a strict space of an unfolding at parameter values 0.
MultiplePointSpace slice_params_to_zero(const MultiplePointSpace& mps,
                                        const std::vector<std::string>& params, int n, int p) {
    std::vector<std::string> ambient;
    for (const auto& v : mps.ambient)
        if (std::find(params.begin(), params.end(), v) == params.end())
            ambient.push_back(v);
    std::map<std::string, Polynomial> subs;
    for (const auto& t : params)
        subs.emplace(t, Polynomial::zero(ambient));
    for (const auto& v : ambient)
        subs.emplace(v, Polynomial::variable(ambient, v));
    std::vector<Polynomial> gens;
    for (const auto& g : mps.ideal.gens()) {
        Polynomial s = g.substitute(subs);
        if (!s.is_zero())
            gens.push_back(std::move(s));
    }
    MultiplePointSpace out = mps;
    out.kind = MpsKind::Gaffney;
    out.ambient = ambient;
    out.ideal = groebner_basis(Ideal(ambient, std::move(gens)), MonomialOrder::grevlex());
    out.dim = dim_at_origin(out.ideal);
    out.expected_dim = out.k * n - (out.k - 1) * p;
    out.provenance.push_back("route: unfolding slice at t = 0");
    out.provenance.push_back("stability asserted, not verified");
    return out;
}

// Project an unfolding-slice ideal into the divided-difference ambient by
// collapsing the x-part copies (the slice ideal contains their differences).
Ideal project_slice_to_dd(const MultiplePointSpace& slice, const DividedDiffForm& form,
                          const std::vector<std::string>& dd_ambient,
                          const std::vector<std::string>& ys,
                          const std::vector<std::string>& branch_vars) {
    std::map<std::string, std::string> ren;
    for (size_t i = 0; i < slice.copy_vars.size(); ++i) {
        for (size_t v = 0; v < branch_vars.size(); ++v) {
            const std::string& orig = branch_vars[v];
            const std::string& copy = slice.copy_vars[i][v];
            if (orig == form.scalar)
                ren[copy] = ys[i];
            else
                ren[copy] = orig;
        }
    }
    std::vector<Polynomial> gens;
    for (const auto& g : slice.ideal.gens()) {
        Polynomial r = g.rename(ren, dd_ambient);
        if (!r.is_zero())
            gens.push_back(std::move(r));
    }
    return Ideal(dd_ambient, std::move(gens));
}

} // namespace

bool divided_difference_presentable(const MapGerm& g) {
    return monogerm_dd_form(g).has_value();
}

MultiplePointSpace gaffney_multiple_points(const MapGerm& g, int k,
                                           const Unfolding* stable_unfolding) {
    if (k < 2)
        throw std::invalid_argument("gaffney_multiple_points needs k >= 2");
    if (g.is_multigerm())
        throw std::invalid_argument(
            "gaffney_multiple_points handles monogerms; use the tuple variant for multigerms");
    auto form = monogerm_dd_form(g);
    if (form) {
        MultiplePointSpace mps = dd_gaffney(g, *form, k);
        if (stable_unfolding) {
            auto strict = strict_multiple_points(*stable_unfolding, k);
            MultiplePointSpace slice =
                slice_params_to_zero(strict[0], stable_unfolding->params(), g.n(), g.p());
            Ideal projected = project_slice_to_dd(slice, *form, mps.ambient,
                                                  [&] {
                                                      std::vector<std::string> ys;
                                                      for (const auto& cv : mps.copy_vars)
                                                          ys.push_back(cv.back());
                                                      return ys;
                                                  }(),
                                                  g.branches()[0].vars);
            RadicalCompare cmp = radical_equal(mps.ideal, projected);
            if (cmp == RadicalCompare::Distinct)
                throw std::runtime_error(
                    "divided-difference and unfolding routes disagree; the supplied "
                    "unfolding is not a stable unfolding of this germ");
            mps.provenance.push_back(cmp == RadicalCompare::Equal
                                         ? "cross-validated against unfolding route"
                                         : "cross-validation inconclusive (resource limit)");
            mps.provenance.push_back("stability asserted, not verified");
        }
        return mps;
    }
    if (corank(g) == 0) {
        // immersive monogerm: injective as a germ, multiple points empty
        MultiplePointSpace mps;
        mps.k = k;
        mps.kind = MpsKind::Gaffney;
        mps.branch_tuple.assign(static_cast<size_t>(k), 0);
        mps.ambient = g.branches()[0].vars;
        mps.ideal = Ideal::unit(mps.ambient);
        mps.dim = {true, -1, true};
        mps.expected_dim = k * g.n() - (k - 1) * g.p();
        mps.swap_same_branch.assign(static_cast<size_t>(k - 1), true);
        mps.provenance.push_back("route: corank 0 (immersive germ, empty multiple points)");
        return mps;
    }
    if (!stable_unfolding)
        throw std::invalid_argument(
            "corank >= 2 (or non-presentable corank-1) germ needs a stable unfolding");
    auto strict = strict_multiple_points(*stable_unfolding, k);
    return slice_params_to_zero(strict[0], stable_unfolding->params(), g.n(), g.p());
}

std::vector<MultiplePointSpace> gaffney_multiple_points_tuples(const Unfolding& f, int k) {
    std::vector<MultiplePointSpace> out;
    for (const auto& strict : strict_multiple_points(f, k))
        out.push_back(slice_params_to_zero(strict, f.params(), f.base().n(), f.base().p()));
    return out;
}

namespace {

DimEntry aggregate_entry(int k, int expected, const std::vector<MultiplePointSpace>& spaces) {
    DimEntry e;
    e.k = k;
    e.expected = expected;
    e.empty = true;
    for (const auto& s : spaces) {
        if (s.dim.empty)
            continue;
        e.empty = false;
        e.dim = e.dim ? std::max(*e.dim, s.dim.dim) : s.dim.dim;
        e.certified_local = e.certified_local && s.dim.certified_local;
    }
    e.ok = e.empty || (expected >= 0 && e.dim && *e.dim == expected);
    return e;
}

} // namespace

DimCorrectnessReport is_dimensionally_correct(const MapGerm& g, int k_max,
                                              const Unfolding* stable_unfolding) {
    if (g.p() <= g.n())
        throw std::invalid_argument("dimensional correctness applies to p > n");
    if (k_max < 2)
        k_max = g.p() / (g.p() - g.n());

    std::optional<Unfolding> canonical;
    const Unfolding* route = stable_unfolding;
    if (!route && g.is_multigerm()) {
        if (!is_hypersurface_bigerm(g))
            throw std::invalid_argument("multigerm dimensional correctness needs an unfolding");
        canonical = bigerm_stabilization(g);
        route = &*canonical;
    }

    DimCorrectnessReport rep;
    for (int k = 2; k <= k_max; ++k) {
        int expected = k * g.n() - (k - 1) * g.p();
        std::vector<MultiplePointSpace> gaffney;
        if (g.is_multigerm())
            gaffney = gaffney_multiple_points_tuples(*route, k);
        else
            gaffney = {gaffney_multiple_points(g, k, route)};
        for (const auto& s : gaffney)
            for (const auto& pv : s.provenance)
                if (std::find(rep.provenance.begin(), rep.provenance.end(), pv) ==
                    rep.provenance.end())
                    rep.provenance.push_back(pv);
        rep.gaffney.push_back(aggregate_entry(k, expected, gaffney));
        rep.strict.push_back(aggregate_entry(k, expected, strict_multiple_points(g, k)));
    }
    for (const auto& e : rep.gaffney)
        rep.gaffney_ok = rep.gaffney_ok && e.ok;
    for (const auto& e : rep.strict)
        rep.strict_ok = rep.strict_ok && e.ok;
    return rep;
}

SpecializationReport check_specialization(const Unfolding& f, int k, const Rational& value) {
    if (f.params().size() != 1)
        throw std::invalid_argument("check_specialization needs a one-parameter unfolding");
    const MapGerm& base = f.base();
    if (base.is_multigerm())
        throw std::invalid_argument("check_specialization handles monogerms");
    SpecializationReport rep;
    const std::string& t = f.params()[0];

    // Gaffney side via divided differences of F itself (t joins the x-part).
    auto base_form = monogerm_dd_form(base);
    if (!base_form)
        throw std::invalid_argument("check_specialization needs the divided-difference form");
    Branch fbranch;
    fbranch.vars = base.branches()[0].vars;
    fbranch.vars.push_back(t);
    for (const auto& c : f.branch_components()[0])
        fbranch.components.push_back(c.in_ring(fbranch.vars));
    fbranch.components.push_back(Polynomial::variable(fbranch.vars, t));
    auto unfolding_form = detect_dd_form(fbranch);
    if (!unfolding_form || unfolding_form->scalar != base_form->scalar)
        throw std::invalid_argument(
            "unfolding perturbs the identity components; divided-difference route unavailable");
    DdSpace family = dd_space(*unfolding_form, k);

    // slice the family ideal at t = value
    std::vector<std::string> sliced_ambient;
    for (const auto& v : family.ambient)
        if (v != t)
            sliced_ambient.push_back(v);
    std::map<std::string, Polynomial> subs;
    subs.emplace(t, Polynomial::constant(sliced_ambient, value));
    for (const auto& v : sliced_ambient)
        subs.emplace(v, Polynomial::variable(sliced_ambient, v));
    std::vector<Polynomial> sliced_gens;
    for (const auto& g : family.ideal.gens()) {
        Polynomial s = g.substitute(subs);
        if (!s.is_zero())
            sliced_gens.push_back(std::move(s));
    }
    Ideal family_slice(sliced_ambient, std::move(sliced_gens));

    MapGerm member = f.slice({value});
    auto member_form = detect_dd_form(member.branches()[0]);
    if (!member_form)
        throw std::invalid_argument("family member is not divided-difference presentable");
    DdSpace member_space = dd_space(*member_form, k);
    rep.gaffney = radical_equal(family_slice, member_space.ideal);

    // Strict analogue.
    auto strict_family = strict_multiple_points(f, k);
    MultiplePointSpace strict_slice = strict_family[0];
    {
        std::vector<std::string> ambient;
        for (const auto& v : strict_slice.ambient)
            if (v != t)
                ambient.push_back(v);
        std::map<std::string, Polynomial> ssubs;
        ssubs.emplace(t, Polynomial::constant(ambient, value));
        for (const auto& v : ambient)
            ssubs.emplace(v, Polynomial::variable(ambient, v));
        std::vector<Polynomial> gens;
        for (const auto& g : strict_slice.ideal.gens()) {
            Polynomial s = g.substitute(ssubs);
            if (!s.is_zero())
                gens.push_back(std::move(s));
        }
        Ideal sliced(ambient, std::move(gens));
        auto strict_member = strict_multiple_points(member, k);
        rep.strict_variant = radical_equal(sliced, strict_member[0].ideal);
    }
    return rep;
}

namespace {

Polynomial squarefree_if_univariate(const Polynomial& p) {
    int support_var = -1;
    for (const auto& [e, c] : p.terms())
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) {
                if (support_var >= 0 && support_var != static_cast<int>(i))
                    return p;
                support_var = static_cast<int>(i);
            }
    if (support_var < 0)
        return p;
    const std::string& v = p.vars()[static_cast<size_t>(support_var)];
    qpoly::Poly coeffs;
    for (const auto& [e, c] : p.terms()) {
        size_t deg = static_cast<size_t>(e[static_cast<size_t>(support_var)]);
        if (coeffs.size() <= deg)
            coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] = c;
    }
    qpoly::Poly sf = qpoly::squarefree_part(coeffs);
    Polynomial out(p.vars());
    for (size_t i = 0; i < sf.size(); ++i) {
        if (sf[i] == 0)
            continue;
        Exponents e(p.vars().size(), 0);
        e[static_cast<size_t>(support_var)] = static_cast<int>(i);
        out.add_term(e, sf[i]);
    }
    return out;
}

Ideal reduce_multiplicities(const Ideal& ideal) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.gens())
        gens.push_back(squarefree_if_univariate(g));
    return Ideal(ideal.vars(), std::move(gens));
}

// Project a sliced double point space onto one copy block and rename back to
// the branch's own variables.
Ideal project_to_block(const MultiplePointSpace& slice, size_t block,
                       const std::vector<std::string>& branch_vars) {
    Ideal kept = eliminate(slice.ideal, slice.copy_vars[block]);
    std::map<std::string, std::string> ren;
    for (size_t v = 0; v < branch_vars.size(); ++v)
        ren[slice.copy_vars[block][v]] = branch_vars[v];
    std::vector<Polynomial> gens;
    for (const auto& g : kept.gens())
        gens.push_back(g.rename(ren, branch_vars));
    return Ideal(branch_vars, std::move(gens));
}

} // namespace

SourceDoublePointsReport source_double_points(const MapGerm& g,
                                              const Unfolding* stable_unfolding) {
    if (g.p() != g.n() + 1)
        throw std::invalid_argument("source_double_points needs p = n + 1");
    SourceDoublePointsReport rep;
    std::vector<Ideal> nonimm = non_immersive_locus(g);

    std::optional<Unfolding> canonical;
    const Unfolding* route = stable_unfolding;
    if (!route && is_hypersurface_bigerm(g)) {
        canonical = bigerm_stabilization(g);
        route = &*canonical;
        rep.provenance.push_back("route: canonical bi-germ stabilization");
    }

    std::vector<std::vector<Ideal>> projections(g.branches().size());
    if (route) {
        for (const auto& slice : gaffney_multiple_points_tuples(*route, 2)) {
            for (size_t block = 0; block < 2; ++block) {
                int b = slice.branch_tuple[block];
                if (block == 1 && slice.branch_tuple[0] == slice.branch_tuple[1])
                    continue; // symmetric copy
                projections[static_cast<size_t>(b)].push_back(project_to_block(
                    slice, block, g.branches()[static_cast<size_t>(b)].vars));
            }
        }
        rep.provenance.push_back("stability asserted, not verified");
    } else if (auto form = monogerm_dd_form(g)) {
        MultiplePointSpace d2 = dd_gaffney(g, *form, 2);
        // first source copy: eliminate y_2, rename y_1 back
        std::vector<std::string> keep = form->x_part;
        keep.push_back(d2.copy_vars[0].back());
        Ideal kept = eliminate(d2.ideal, keep);
        std::map<std::string, std::string> ren{{d2.copy_vars[0].back(), form->scalar}};
        const auto& branch_vars = g.branches()[0].vars;
        std::vector<Polynomial> gens;
        for (const auto& h : kept.gens())
            gens.push_back(h.rename(ren, branch_vars));
        projections[0].push_back(Ideal(branch_vars, std::move(gens)));
        rep.provenance.push_back("route: divided differences (corank <= 1)");
    } else if (!g.is_multigerm() && corank(g) == 0) {
        rep.provenance.push_back("route: corank 0 (immersive germ, empty double points)");
    } else {
        throw std::invalid_argument("source_double_points needs a stable unfolding here");
    }

    for (size_t b = 0; b < g.branches().size(); ++b) {
        Ideal acc = reduce_multiplicities(groebner_basis(nonimm[b], MonomialOrder::grevlex()));
        for (const auto& proj : projections[b])
            acc = intersect(acc, reduce_multiplicities(proj));
        acc = groebner_basis(acc, MonomialOrder::grevlex());
        OriginDim dim = dim_at_origin(acc);
        if (acc.is_zero_ideal() || (!dim.empty && dim.dim == g.n()))
            rep.not_generically_one_to_one = true;
        rep.branch_ideals.push_back(std::move(acc));
    }
    return rep;
}

} // namespace germlab
