#include "germlab/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace germlab {

int MonomialOrder::cmp(const Exponents& a, const Exponents& b) const {
    auto grevlex_cmp = [](const int* ea, const int* eb, size_t lo, size_t hi) {
        int da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) {
            da += ea[i];
            db += eb[i];
        }
        if (da != db)
            return da < db ? -1 : 1;
        // reverse lexicographic tie break: last differing exponent, smaller wins
        for (size_t i = hi; i-- > lo;) {
            if (ea[i] != eb[i])
                return ea[i] > eb[i] ? -1 : 1;
        }
        return 0;
    };
    switch (kind) {
    case Kind::Lex:
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    case Kind::GrevLex:
        return grevlex_cmp(a.data(), b.data(), 0, a.size());
    case Kind::Block: {
        int c = grevlex_cmp(a.data(), b.data(), 0, static_cast<size_t>(split));
        if (c != 0)
            return c;
        return grevlex_cmp(a.data(), b.data(), static_cast<size_t>(split), a.size());
    }
    }
    return 0;
}

GroebnerConfig& GroebnerConfig::global() {
    static GroebnerConfig cfg;
    return cfg;
}

Ideal::Ideal(std::vector<std::string> vars, std::vector<Polynomial> gens)
    : vars_(std::move(vars)) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        Polynomial h = g.vars() == vars_ ? std::move(g) : g.in_ring(vars_);
        if (!h.is_zero())
            gens_.push_back(std::move(h));
    }
}

Ideal Ideal::unit(std::vector<std::string> vars) {
    std::vector<Polynomial> gens{Polynomial::constant(vars, 1)};
    return Ideal(std::move(vars), std::move(gens));
}

bool Ideal::is_zero_ideal() const { return gens_.empty(); }

const std::vector<Polynomial>* Ideal::cached_basis(const MonomialOrder& order) const {
    if (cache_ && cache_->order == order)
        return &cache_->basis;
    return nullptr;
}

std::string Ideal::str() const {
    std::ostringstream out;
    out << "<";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            out << ", ";
        out << gens_[i].str();
    }
    out << ">";
    return out.str();
}

namespace {

// Term list sorted descending in the active order; leading term first.
struct OrdPoly {
    std::vector<std::pair<Exponents, Rational>> t;

    bool zero() const { return t.empty(); }
    const Exponents& lead() const { return t.front().first; }
    const Rational& lead_coeff() const { return t.front().second; }
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : t)
            d = std::max(d, total_degree(e));
        return d;
    }
};

OrdPoly to_ord(const Polynomial& p, const MonomialOrder& order) {
    OrdPoly r;
    r.t.assign(p.terms().begin(), p.terms().end());
    std::sort(r.t.begin(), r.t.end(),
              [&](const auto& a, const auto& b) { return order.cmp(a.first, b.first) > 0; });
    return r;
}

Polynomial from_ord(const OrdPoly& p, const std::vector<std::string>& vars) {
    Polynomial r(vars);
    for (const auto& [e, c] : p.t)
        r.add_term(e, c);
    return r;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

// r -= c * x^shift * g, keeping r sorted.
OrdPoly axpy(const OrdPoly& r, const Rational& c, const Exponents& shift, const OrdPoly& g,
             const MonomialOrder& order) {
    OrdPoly out;
    out.t.reserve(r.t.size() + g.t.size());
    size_t i = 0, j = 0;
    while (i < r.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            out.t.push_back(r.t[i++]);
            continue;
        }
        Exponents ge = exp_add(g.t[j].first, shift);
        Rational gc = -c * g.t[j].second;
        if (i == r.t.size()) {
            if (gc != 0)
                out.t.emplace_back(std::move(ge), std::move(gc));
            ++j;
            continue;
        }
        int cc = order.cmp(r.t[i].first, ge);
        if (cc > 0) {
            out.t.push_back(r.t[i++]);
        } else if (cc < 0) {
            if (gc != 0)
                out.t.emplace_back(std::move(ge), std::move(gc));
            ++j;
        } else {
            Rational s = r.t[i].second + gc;
            if (s != 0)
                out.t.emplace_back(r.t[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

void check_degree(const OrdPoly& p, const GroebnerConfig& cfg) {
    if (!p.zero() && p.degree() > cfg.degree_cap)
        throw ResourceLimitError("degree cap " + std::to_string(cfg.degree_cap) +
                                 " exceeded during basis computation");
}

// Fully reduced normal form of f against basis (every term reduced).
OrdPoly reduce_full(OrdPoly f, const std::vector<OrdPoly>& basis, const MonomialOrder& order,
                    const GroebnerConfig& cfg, const OrdPoly* skip = nullptr) {
    OrdPoly done; // accumulated irreducible head terms
    while (!f.zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (&g == skip || g.zero())
                continue;
            if (!divides(g.lead(), f.lead()))
                continue;
            Rational c = f.lead_coeff() / g.lead_coeff();
            f = axpy(f, c, exp_sub(f.lead(), g.lead()), g, order);
            check_degree(f, cfg);
            reduced = true;
            break;
        }
        if (!reduced) {
            done.t.push_back(f.t.front());
            f.t.erase(f.t.begin());
        }
    }
    return done;
}

OrdPoly s_poly(const OrdPoly& f, const OrdPoly& g, const MonomialOrder& order,
               const GroebnerConfig& cfg) {
    Exponents l = exp_lcm(f.lead(), g.lead());
    // lcm/lt(f) * f - (cf/cg) lcm/lt(g) * g
    OrdPoly shifted;
    shifted.t.reserve(f.t.size());
    Exponents sf = exp_sub(l, f.lead());
    for (const auto& [e, c] : f.t)
        shifted.t.emplace_back(exp_add(e, sf), c);
    Rational ratio = f.lead_coeff() / g.lead_coeff();
    OrdPoly r = axpy(shifted, ratio, exp_sub(l, g.lead()), g, order);
    check_degree(r, cfg);
    return r;
}

void make_monic(OrdPoly& p) {
    if (p.zero())
        return;
    Rational c = p.lead_coeff();
    if (c == 1)
        return;
    for (auto& [e, k] : p.t)
        k /= c;
}

std::vector<OrdPoly> buchberger(std::vector<OrdPoly> basis, const MonomialOrder& order,
                                const GroebnerConfig& cfg) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const OrdPoly& p) { return p.zero(); }),
                basis.end());
    for (auto& b : basis)
        make_monic(b);

    struct Pair {
        int deg;
        Exponents lcm;
        size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg)
            return a.deg < b.deg;
        int c = order.cmp(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> handled;
    auto push_pair = [&](size_t i, size_t j) {
        Exponents l = exp_lcm(basis[i].lead(), basis[j].lead());
        queue.push_back(Pair{total_degree(l), std::move(l), i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            push_pair(i, j);

    size_t processed = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        handled.insert({p.i, p.j});

        if (++processed > cfg.spair_budget)
            throw ResourceLimitError("S-pair budget " + std::to_string(cfg.spair_budget) +
                                     " exceeded");

        // product criterion
        if (p.lcm == exp_add(basis[p.i].lead(), basis[p.j].lead()))
            continue;
        // chain criterion
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j || basis[k].zero())
                continue;
            if (!divides(basis[k].lead(), p.lcm))
                continue;
            auto key_ik = std::minmax(p.i, k);
            auto key_jk = std::minmax(p.j, k);
            if (handled.count({key_ik.first, key_ik.second}) &&
                handled.count({key_jk.first, key_jk.second}))
                chained = true;
        }
        if (chained)
            continue;

        OrdPoly s = s_poly(basis[p.i], basis[p.j], order, cfg);
        OrdPoly h = reduce_full(std::move(s), basis, order, cfg);
        if (h.zero())
            continue;
        make_monic(h);
        size_t idx = basis.size();
        basis.push_back(std::move(h));
        for (size_t i = 0; i < idx; ++i)
            if (!basis[i].zero())
                push_pair(i, idx);
    }
    return basis;
}

std::vector<OrdPoly> inter_reduce(std::vector<OrdPoly> basis, const MonomialOrder& order,
                                  const GroebnerConfig& cfg) {
    // drop elements whose lead is divisible by another lead
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].zero())
            continue;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].zero())
                continue;
            if (divides(basis[j].lead(), basis[i].lead()) &&
                !(j > i && basis[j].lead() == basis[i].lead())) {
                basis[i].t.clear();
                break;
            }
        }
    }
    // tail-reduce the survivors
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].zero())
            continue;
        OrdPoly r = reduce_full(basis[i], basis, order, cfg, &basis[i]);
        basis[i] = std::move(r);
        make_monic(basis[i]);
    }
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const OrdPoly& p) { return p.zero(); }),
                basis.end());
    std::sort(basis.begin(), basis.end(), [&](const OrdPoly& a, const OrdPoly& b) {
        return order.cmp(a.lead(), b.lead()) < 0;
    });
    return basis;
}

} // namespace

Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
    if (order.kind == MonomialOrder::Kind::Block &&
        (order.split <= 0 || order.split >= static_cast<int>(ideal.vars().size())))
        throw std::invalid_argument("block order split must lie strictly inside the variables");
    if (const auto* cached = ideal.cached_basis(order)) {
        Ideal r(ideal.vars(), *cached);
        r.cache_ = ideal.cache_;
        return r;
    }
    const GroebnerConfig& cfg = GroebnerConfig::global();
    std::vector<OrdPoly> work;
    work.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens())
        work.push_back(to_ord(g, order));
    work = buchberger(std::move(work), order, cfg);
    work = inter_reduce(std::move(work), order, cfg);

    std::vector<Polynomial> out;
    out.reserve(work.size());
    for (const auto& p : work)
        out.push_back(from_ord(p, ideal.vars()));
    Ideal r(ideal.vars(), out);
    auto cache = std::make_shared<Ideal::Cache>();
    cache->order = order;
    cache->basis = std::move(out);
    r.cache_ = std::move(cache);
    return r;
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
    const std::vector<Polynomial>* basis = ideal.cached_basis(order);
    Ideal owned;
    if (!basis) {
        owned = groebner_basis(ideal, order);
        basis = owned.cached_basis(order);
    }
    std::vector<OrdPoly> b;
    b.reserve(basis->size());
    for (const auto& g : *basis)
        b.push_back(to_ord(g, order));
    Polynomial fr = f.vars() == ideal.vars() ? f : f.in_ring(ideal.vars());
    OrdPoly r = reduce_full(to_ord(fr, order), b, order, GroebnerConfig::global());
    return from_ord(r, ideal.vars());
}

bool contains(const Ideal& ideal, const Polynomial& f) {
    return normal_form(f, ideal).is_zero();
}

} // namespace germlab
