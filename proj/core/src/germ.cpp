#include "germlab/germ.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace germlab {

namespace {

std::vector<std::string> default_target_vars(int p, const std::vector<std::string>& avoid) {
    static const char* short_names[] = {"X", "Y", "Z", "W"};
    std::vector<std::string> out;
    std::vector<std::string> taken = avoid;
    for (int a = 0; a < p; ++a) {
        std::string stem = p <= 4 ? short_names[a] : ("X" + std::to_string(a + 1));
        std::string name = fresh_var(taken, stem);
        taken.push_back(name);
        out.push_back(name);
    }
    return out;
}

// Determinant of a square polynomial matrix by Laplace expansion.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m,
                    const std::vector<std::string>& ring) {
    size_t n = m.size();
    if (n == 0)
        return Polynomial::constant(ring, 1);
    if (n == 1)
        return m[0][0];
    Polynomial det(ring);
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Polynomial>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c)
                    row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * poly_det(minor, ring);
        det = sign > 0 ? det + term : det - term;
        sign = -sign;
    }
    return det;
}

void choose(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Polynomial>> jacobian(const Branch& b) {
    std::vector<std::vector<Polynomial>> j;
    for (const auto& comp : b.components) {
        std::vector<Polynomial> row;
        for (const auto& v : b.vars)
            row.push_back(comp.derivative(v));
        j.push_back(std::move(row));
    }
    return j;
}

// All r x r minors of the p x n Jacobian of a branch.
std::vector<Polynomial> jacobian_minors(const Branch& b, int r) {
    auto jac = jacobian(b);
    int p = static_cast<int>(jac.size());
    int n = static_cast<int>(b.vars.size());
    std::vector<std::vector<int>> row_sets, col_sets;
    std::vector<int> cur;
    choose(p, r, 0, cur, row_sets);
    choose(n, r, 0, cur, col_sets);
    std::vector<Polynomial> minors;
    for (const auto& rows : row_sets)
        for (const auto& cols : col_sets) {
            std::vector<std::vector<Polynomial>> sub;
            for (int rr : rows) {
                std::vector<Polynomial> row;
                for (int cc : cols)
                    row.push_back(jac[rr][cc]);
                sub.push_back(std::move(row));
            }
            Polynomial d = poly_det(sub, b.vars);
            if (!d.is_zero())
                minors.push_back(std::move(d));
        }
    return minors;
}

} // namespace

MapGerm::MapGerm(int n, int p, std::vector<Branch> branches,
                 std::vector<std::string> target_vars, bool require_origin)
    : n_(n), p_(p), branches_(std::move(branches)) {
    if (branches_.empty())
        throw std::invalid_argument("map-germ needs at least one branch");
    std::set<std::string> seen;
    for (const auto& b : branches_) {
        if (static_cast<int>(b.vars.size()) != n_)
            throw std::invalid_argument("branch has wrong source dimension");
        if (static_cast<int>(b.components.size()) != p_)
            throw std::invalid_argument("branch has wrong number of components");
        for (const auto& v : b.vars)
            if (!seen.insert(v).second)
                throw std::invalid_argument("branch variable names must be disjoint: " + v);
        for (const auto& c : b.components) {
            if (c.vars() != b.vars)
                throw std::invalid_argument("component not in its branch ring");
            if (require_origin && !c.vanishes_at_origin())
                throw std::invalid_argument("component does not vanish at the origin: " +
                                            c.str());
        }
    }
    if (target_vars.empty())
        target_vars_ = default_target_vars(p_, all_source_vars());
    else {
        if (static_cast<int>(target_vars.size()) != p_)
            throw std::invalid_argument("target variable count must equal p");
        target_vars_ = std::move(target_vars);
    }
}

std::vector<std::string> MapGerm::all_source_vars() const {
    std::vector<std::string> out;
    for (const auto& b : branches_)
        out.insert(out.end(), b.vars.begin(), b.vars.end());
    return out;
}

Unfolding::Unfolding(MapGerm base, std::vector<std::string> params,
                     std::vector<std::vector<Polynomial>> branch_components)
    : base_(std::move(base)), params_(std::move(params)),
      branch_components_(std::move(branch_components)) {
    if (params_.empty())
        throw std::invalid_argument("unfolding needs at least one parameter");
    if (branch_components_.size() != base_.branches().size())
        throw std::invalid_argument("unfolded component count mismatch");
    std::map<std::string, Polynomial> zero_params;
    for (size_t bi = 0; bi < branch_components_.size(); ++bi) {
        const Branch& b = base_.branches()[bi];
        std::vector<std::string> ring = b.vars;
        ring.insert(ring.end(), params_.begin(), params_.end());
        if (branch_components_[bi].size() != b.components.size())
            throw std::invalid_argument("unfolded branch has wrong number of components");
        std::map<std::string, Polynomial> at_zero;
        for (const auto& t : params_)
            at_zero.emplace(t, Polynomial::zero(b.vars));
        for (const auto& v : b.vars)
            at_zero.emplace(v, Polynomial::variable(b.vars, v));
        for (size_t ci = 0; ci < b.components.size(); ++ci) {
            Polynomial comp = branch_components_[bi][ci].vars() == ring
                                  ? branch_components_[bi][ci]
                                  : branch_components_[bi][ci].in_ring(ring);
            branch_components_[bi][ci] = comp;
            if (comp.substitute(at_zero) != b.components[ci])
                throw std::invalid_argument(
                    "unfolding does not restrict to the base germ at t=0");
        }
    }
}

MapGerm Unfolding::slice(const std::vector<Rational>& values) const {
    if (values.size() != params_.size())
        throw std::invalid_argument("slice: parameter value count mismatch");
    bool at_zero = std::all_of(values.begin(), values.end(),
                               [](const Rational& v) { return v == 0; });
    std::vector<Branch> branches;
    for (size_t bi = 0; bi < base_.branches().size(); ++bi) {
        const Branch& b = base_.branches()[bi];
        std::map<std::string, Polynomial> subs;
        for (size_t ti = 0; ti < params_.size(); ++ti)
            subs.emplace(params_[ti], Polynomial::constant(b.vars, values[ti]));
        for (const auto& v : b.vars)
            subs.emplace(v, Polynomial::variable(b.vars, v));
        Branch nb;
        nb.vars = b.vars;
        for (const auto& comp : branch_components_[bi])
            nb.components.push_back(comp.substitute(subs));
        branches.push_back(std::move(nb));
    }
    return MapGerm(base_.n(), base_.p(), std::move(branches), base_.target_vars(), at_zero);
}

std::vector<Ideal> critical_locus(const MapGerm& g) {
    std::vector<Ideal> out;
    for (const auto& b : g.branches()) {
        if (g.p() > g.n()) {
            out.push_back(Ideal::zero(b.vars));
            continue;
        }
        out.push_back(Ideal(b.vars, jacobian_minors(b, g.p())));
    }
    return out;
}

std::vector<Ideal> non_immersive_locus(const MapGerm& g) {
    std::vector<Ideal> out;
    for (const auto& b : g.branches())
        out.push_back(Ideal(b.vars, jacobian_minors(b, g.n())));
    return out;
}

bool is_K_finite(const MapGerm& g) {
    std::vector<Ideal> crit = critical_locus(g);
    for (size_t bi = 0; bi < g.branches().size(); ++bi) {
        const Branch& b = g.branches()[bi];
        std::vector<Polynomial> gens = crit[bi].gens();
        for (const auto& c : b.components)
            gens.push_back(c);
        OriginDim dim = dim_at_origin(Ideal(b.vars, std::move(gens)));
        if (!dim.empty && dim.dim != 0)
            return false;
    }
    return true;
}

namespace {

Ideal branch_pushforward(const Branch& b, const Ideal& source_locus,
                         const std::vector<std::string>& target) {
    std::vector<std::string> ring = b.vars;
    ring.insert(ring.end(), target.begin(), target.end());
    std::vector<Polynomial> gens;
    for (size_t a = 0; a < b.components.size(); ++a)
        gens.push_back(Polynomial::variable(ring, target[a]) - b.components[a].in_ring(ring));
    for (const auto& h : source_locus.gens())
        gens.push_back(h.in_ring(ring));
    return eliminate(Ideal(ring, std::move(gens)), target);
}

} // namespace

Ideal image_ideal(const MapGerm& g) {
    std::optional<Ideal> acc;
    for (const auto& b : g.branches()) {
        Ideal part = branch_pushforward(b, Ideal::zero(b.vars), g.target_vars());
        acc = acc ? intersect(*acc, part) : part;
    }
    return *acc;
}

LocusReport discriminant(const MapGerm& g) {
    LocusReport rep;
    rep.K_finite = is_K_finite(g);
    rep.K_finite_warning = !rep.K_finite;
    std::vector<Ideal> crit = critical_locus(g);
    std::optional<Ideal> acc;
    for (size_t bi = 0; bi < g.branches().size(); ++bi) {
        Ideal part = branch_pushforward(g.branches()[bi], crit[bi], g.target_vars());
        acc = acc ? intersect(*acc, part) : part;
    }
    rep.ideal = groebner_basis(*acc, MonomialOrder::grevlex());
    rep.dim = dim_at_origin(rep.ideal);
    if (g.p() <= g.n() + 1)
        rep.dim_delta_expected = !rep.dim.empty && rep.dim.dim == g.p() - 1;
    return rep;
}

MapGerm bigerm_from_hypersurface(const Polynomial& g) {
    if (g.is_zero())
        throw std::invalid_argument("bi-germ construction rejects g = 0 (branches coincide)");
    if (!g.vanishes_at_origin())
        throw std::invalid_argument("bi-germ construction needs g(0) = 0");
    int n = static_cast<int>(g.vars().size());
    Branch b1;
    b1.vars = g.vars();
    for (const auto& v : b1.vars)
        b1.components.push_back(Polynomial::variable(b1.vars, v));
    b1.components.push_back(g);

    Branch b2;
    std::vector<std::string> taken = b1.vars;
    std::map<std::string, std::string> renaming;
    for (const auto& v : b1.vars) {
        std::string nv = fresh_var(taken, v + "_2");
        taken.push_back(nv);
        b2.vars.push_back(nv);
        renaming[v] = nv;
    }
    for (const auto& v : b2.vars)
        b2.components.push_back(Polynomial::variable(b2.vars, v));
    b2.components.push_back(Polynomial::zero(b2.vars));

    return MapGerm(n, n + 1, {std::move(b1), std::move(b2)});
}

bool is_hypersurface_bigerm(const MapGerm& g) {
    if (g.branches().size() != 2 || g.p() != g.n() + 1)
        return false;
    auto graph_like = [&](const Branch& b, bool zero_last) {
        for (int i = 0; i < g.n(); ++i)
            if (b.components[i] != Polynomial::variable(b.vars, b.vars[i]))
                return false;
        const Polynomial& last = b.components.back();
        return zero_last ? last.is_zero() : !last.is_zero();
    };
    return graph_like(g.branches()[0], false) && graph_like(g.branches()[1], true);
}

Polynomial bigerm_source_polynomial(const MapGerm& g) {
    if (!is_hypersurface_bigerm(g))
        throw std::invalid_argument("germ is not of the hypersurface bi-germ shape");
    return g.branches()[0].components.back();
}

Unfolding bigerm_stabilization(const MapGerm& g) {
    if (!is_hypersurface_bigerm(g))
        throw std::invalid_argument(
            "bigerm_stabilization applies only to hypersurface bi-germs");
    std::vector<std::string> taken = g.all_source_vars();
    std::string t = fresh_var(taken, "t");
    std::vector<std::vector<Polynomial>> comps;
    for (size_t bi = 0; bi < 2; ++bi) {
        const Branch& b = g.branches()[bi];
        std::vector<std::string> ring = b.vars;
        ring.push_back(t);
        std::vector<Polynomial> c;
        for (const auto& comp : b.components)
            c.push_back(comp.in_ring(ring));
        if (bi == 1)
            c.back() = Polynomial::variable(ring, t);
        comps.push_back(std::move(c));
    }
    return Unfolding(g, {t}, std::move(comps));
}

OriginDim instability_dim_bigerm(const MapGerm& g) {
    Polynomial src = bigerm_source_polynomial(g);
    std::vector<Polynomial> gens{src};
    for (const auto& v : src.vars())
        gens.push_back(src.derivative(v));
    return dim_at_origin(Ideal(src.vars(), std::move(gens)));
}

} // namespace germlab
