#include "germlab/ideal.hpp"
#include "germlab/qlinalg.hpp"

#include <algorithm>
#include <set>

namespace germlab {

std::string fresh_var(const std::vector<std::string>& taken, const std::string& stem) {
    auto used = [&](const std::string& s) {
        return std::find(taken.begin(), taken.end(), s) != taken.end();
    };
    if (!used(stem))
        return stem;
    for (int i = 0;; ++i) {
        std::string cand = stem + std::to_string(i);
        if (!used(cand))
            return cand;
    }
}

Ideal sum(const Ideal& a, const Ideal& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("ideal sum: rings differ");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.vars(), std::move(gens));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep) {
    for (const auto& k : keep)
        if (std::find(ideal.vars().begin(), ideal.vars().end(), k) == ideal.vars().end())
            throw std::invalid_argument("eliminate: " + k + " is not an ambient variable");
    std::vector<std::string> kill;
    for (const auto& v : ideal.vars())
        if (std::find(keep.begin(), keep.end(), v) == keep.end())
            kill.push_back(v);
    std::vector<std::string> kept;
    for (const auto& v : ideal.vars())
        if (std::find(keep.begin(), keep.end(), v) != keep.end())
            kept.push_back(v);

    if (kill.empty()) {
        Ideal g = groebner_basis(ideal, MonomialOrder::grevlex());
        return g;
    }
    if (kept.empty()) {
        Ideal g = groebner_basis(ideal, MonomialOrder::grevlex());
        bool unit = g.gens().size() == 1 && g.gens()[0].is_constant() && !g.gens()[0].is_zero();
        return unit ? Ideal::unit({}) : Ideal::zero({});
    }

    std::vector<std::string> reordered = kill;
    reordered.insert(reordered.end(), kept.begin(), kept.end());
    std::vector<Polynomial> gens;
    gens.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens())
        gens.push_back(g.in_ring(reordered));
    Ideal permuted(reordered, std::move(gens));
    Ideal basis = groebner_basis(permuted, MonomialOrder::block(static_cast<int>(kill.size())));

    std::vector<Polynomial> selected;
    for (const auto& g : basis.gens()) {
        bool pure = true;
        for (const auto& v : kill)
            if (g.uses_var(v)) {
                pure = false;
                break;
            }
        if (pure)
            selected.push_back(g.in_ring(kept));
    }
    return Ideal(kept, std::move(selected));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("ideal intersect: rings differ");
    std::string w = fresh_var(a.vars(), "_w");
    std::vector<std::string> ext{w};
    ext.insert(ext.end(), a.vars().begin(), a.vars().end());
    Polynomial wp = Polynomial::variable(ext, w);
    Polynomial one = Polynomial::constant(ext, 1);
    std::vector<Polynomial> gens;
    for (const auto& g : a.gens())
        gens.push_back(wp * g.in_ring(ext));
    for (const auto& g : b.gens())
        gens.push_back((one - wp) * g.in_ring(ext));
    Ideal joined(ext, std::move(gens));
    return eliminate(joined, a.vars());
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
    if (ideal.vars() != by.vars())
        throw std::invalid_argument("saturate: rings differ");
    if (by.is_zero_ideal())
        return Ideal::unit(ideal.vars());
    std::optional<Ideal> acc;
    for (const auto& g : by.gens()) {
        std::string w = fresh_var(ideal.vars(), "_w");
        std::vector<std::string> ext{w};
        ext.insert(ext.end(), ideal.vars().begin(), ideal.vars().end());
        std::vector<Polynomial> gens;
        for (const auto& h : ideal.gens())
            gens.push_back(h.in_ring(ext));
        gens.push_back(Polynomial::constant(ext, 1) -
                       Polynomial::variable(ext, w) * g.in_ring(ext));
        Ideal rab(ext, std::move(gens));
        Ideal part = eliminate(rab, ideal.vars());
        acc = acc ? intersect(*acc, part) : part;
    }
    return groebner_basis(*acc, MonomialOrder::grevlex());
}

bool radical_contains(const Ideal& ideal, const Polynomial& f, int power_cap) {
    Polynomial fr = f.vars() == ideal.vars() ? f : f.in_ring(ideal.vars());
    if (fr.is_zero())
        return true;
    Ideal basis = groebner_basis(ideal, MonomialOrder::grevlex());
    Polynomial p = fr;
    for (int j = 1; j <= power_cap; ++j) {
        if (normal_form(p, basis).is_zero())
            return true;
        p = p * fr;
    }
    // Rabinowitsch: f in sqrt(I) iff 1 in I + <1 - w f>.
    std::string w = fresh_var(ideal.vars(), "_w");
    std::vector<std::string> ext{w};
    ext.insert(ext.end(), ideal.vars().begin(), ideal.vars().end());
    std::vector<Polynomial> gens;
    for (const auto& h : ideal.gens())
        gens.push_back(h.in_ring(ext));
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, w) * fr.in_ring(ext));
    Ideal rab = groebner_basis(Ideal(ext, std::move(gens)), MonomialOrder::grevlex());
    return rab.gens().size() == 1 && rab.gens()[0].is_constant() && !rab.gens()[0].is_zero();
}

RadicalCompare radical_equal(const Ideal& a, const Ideal& b, int power_cap) {
    try {
        for (const auto& g : a.gens())
            if (!radical_contains(b, g, power_cap))
                return RadicalCompare::Distinct;
        for (const auto& g : b.gens())
            if (!radical_contains(a, g, power_cap))
                return RadicalCompare::Distinct;
        return RadicalCompare::Equal;
    } catch (const ResourceLimitError&) {
        return RadicalCompare::Inconclusive;
    }
}

namespace {

bool is_unit_basis(const Ideal& basis) {
    return basis.gens().size() == 1 && basis.gens()[0].is_constant() &&
           !basis.gens()[0].is_zero();
}

// Combinatorial dimension from the leading-term ideal: the maximum size of a
// variable subset S such that no leading monomial is supported inside S.
int dim_from_leads(const std::vector<Exponents>& leads, size_t nvars) {
    if (nvars > 22)
        throw ResourceLimitError("dimension computation limited to 22 variables");
    std::vector<uint32_t> supports;
    supports.reserve(leads.size());
    for (const auto& e : leads) {
        uint32_t s = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                s |= (1u << i);
        supports.push_back(s);
    }
    int best = -1;
    for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best)
            continue;
        bool independent = true;
        for (uint32_t s : supports)
            if ((s & ~mask) == 0) {
                independent = false;
                break;
            }
        if (independent)
            best = size;
    }
    return best;
}

std::vector<Exponents> leading_exponents(const Ideal& basis, const MonomialOrder& order) {
    std::vector<Exponents> leads;
    for (const auto& g : basis.gens()) {
        const Exponents* best = nullptr;
        for (const auto& [e, c] : g.terms())
            if (!best || order.cmp(e, *best) > 0)
                best = &e;
        if (best)
            leads.push_back(*best);
    }
    return leads;
}

} // namespace

int global_dim(const Ideal& ideal) {
    MonomialOrder ord = MonomialOrder::grevlex();
    Ideal basis = groebner_basis(ideal, ord);
    if (is_unit_basis(basis))
        return -1;
    if (basis.is_zero_ideal())
        return static_cast<int>(ideal.vars().size());
    return dim_from_leads(leading_exponents(basis, ord), ideal.vars().size());
}

std::optional<std::vector<Rational>> quasi_homogeneous_weights(const std::vector<Polynomial>& gens) {
    if (gens.empty())
        return std::vector<Rational>{};
    size_t nvars = gens[0].vars().size();
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        if (g.terms().size() < 2)
            continue;
        const Exponents& e0 = g.terms().begin()->first;
        for (auto it = std::next(g.terms().begin()); it != g.terms().end(); ++it) {
            std::vector<Rational> row(nvars);
            for (size_t i = 0; i < nvars; ++i)
                row[i] = it->first[i] - e0[i];
            rows.push_back(std::move(row));
        }
    }
    auto positive = [&](const QMat& w) {
        for (size_t i = 0; i < w.rows(); ++i)
            if (w.at(i, 0) <= 0)
                return false;
        return true;
    };
    auto result_from = [&](const QMat& w) {
        std::vector<Rational> out(nvars);
        for (size_t i = 0; i < nvars; ++i)
            out[i] = w.at(i, 0);
        return out;
    };
    if (rows.empty()) {
        QMat ones(nvars, 1);
        for (size_t i = 0; i < nvars; ++i)
            ones.at(i, 0) = 1;
        return result_from(ones);
    }
    QMat constraints = QMat::from_rows(rows);
    QMat null = constraints.kernel();
    if (null.cols() == 0)
        return std::nullopt;
    // homogeneous case first
    {
        QMat ones(nvars, 1);
        for (size_t i = 0; i < nvars; ++i)
            ones.at(i, 0) = 1;
        if (in_span(null, ones))
            return result_from(ones);
    }
    for (size_t c = 0; c < null.cols(); ++c) {
        QMat v = null.column(c);
        if (positive(v))
            return result_from(v);
        QMat neg = v * Rational(-1);
        if (positive(neg))
            return result_from(neg);
    }
    // bounded search over small integer combinations
    if (null.cols() <= 4) {
        int span = 3;
        size_t dims = null.cols();
        std::vector<int> coeff(dims, -span);
        while (true) {
            bool all_zero = std::all_of(coeff.begin(), coeff.end(), [](int c) { return c == 0; });
            if (!all_zero) {
                QMat w(nvars, 1);
                for (size_t d = 0; d < dims; ++d)
                    for (size_t i = 0; i < nvars; ++i)
                        w.at(i, 0) += Rational(coeff[d]) * null.at(i, d);
                if (positive(w))
                    return result_from(w);
            }
            size_t d = 0;
            while (d < dims && coeff[d] == span)
                coeff[d++] = -span;
            if (d == dims)
                break;
            ++coeff[d];
        }
    }
    return std::nullopt;
}

OriginDim dim_at_origin(const Ideal& ideal) {
    MonomialOrder ord = MonomialOrder::grevlex();
    Ideal basis = groebner_basis(ideal, ord);
    if (is_unit_basis(basis))
        return {true, -1, true};
    for (const auto& g : basis.gens())
        if (g.eval_at_origin() != 0)
            return {true, -1, true};
    if (basis.is_zero_ideal())
        return {false, static_cast<int>(ideal.vars().size()), true};
    if (quasi_homogeneous_weights(basis.gens()))
        return {false, global_dim(basis), true};

    // Strip the origin-primary part and retry on the residue.
    std::vector<Polynomial> mgens;
    for (const auto& v : ideal.vars())
        mgens.push_back(Polynomial::variable(ideal.vars(), v));
    Ideal residue = saturate(basis, Ideal(ideal.vars(), mgens));
    Ideal rbasis = groebner_basis(residue, ord);
    if (is_unit_basis(rbasis))
        return {false, 0, true};
    for (const auto& g : rbasis.gens())
        if (g.eval_at_origin() != 0)
            return {false, 0, true}; // only the origin itself passes through 0
    if (quasi_homogeneous_weights(rbasis.gens()))
        return {false, global_dim(rbasis), true};
    return {false, global_dim(rbasis), false};
}

std::optional<long> vspace_dim(const Ideal& ideal) {
    MonomialOrder ord = MonomialOrder::grevlex();
    Ideal basis = groebner_basis(ideal, ord);
    if (is_unit_basis(basis))
        return 0;
    size_t nvars = ideal.vars().size();
    if (nvars == 0)
        return 1;
    if (basis.is_zero_ideal())
        return std::nullopt;
    std::vector<Exponents> leads = leading_exponents(basis, ord);
    std::vector<int> box(nvars, -1);
    for (const auto& e : leads) {
        int support = -1;
        bool pure = true;
        for (size_t i = 0; i < nvars; ++i)
            if (e[i] > 0) {
                if (support >= 0) {
                    pure = false;
                    break;
                }
                support = static_cast<int>(i);
            }
        if (pure && support >= 0)
            box[support] = box[support] < 0 ? e[support] : std::min(box[support], e[support]);
    }
    for (int b : box)
        if (b < 0)
            return std::nullopt;

    long bound = 1;
    for (int b : box) {
        bound *= b;
        if (bound > 20'000'000L)
            throw ResourceLimitError("vspace_dim staircase too large");
    }
    // count standard monomials inside the box
    Exponents e(nvars, 0);
    long count = 0;
    while (true) {
        bool standard = true;
        for (const auto& l : leads) {
            bool div = true;
            for (size_t i = 0; i < nvars; ++i)
                if (l[i] > e[i]) {
                    div = false;
                    break;
                }
            if (div) {
                standard = false;
                break;
            }
        }
        if (standard)
            ++count;
        size_t d = 0;
        while (d < nvars && e[d] + 1 == box[d])
            e[d++] = 0;
        if (d == nvars)
            break;
        ++e[d];
    }
    return count;
}

} // namespace germlab
