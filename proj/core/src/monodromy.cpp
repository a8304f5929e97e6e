#include "germlab/monodromy.hpp"

#include <algorithm>
#include <numeric>

namespace germlab {

std::string Eigenvalue::str() const {
    if (order == 1)
        return "1";
    if (order == 2)
        return "-1";
    return "zeta_" + std::to_string(order) + "^" + std::to_string(exponent);
}

void JordanModule::add(const Eigenvalue& lambda, int size, long count) {
    if (size <= 0 || count <= 0)
        throw std::invalid_argument("Jordan block size and count must be positive");
    if (std::gcd(lambda.exponent, lambda.order) != 1 && !(lambda.order == 1 && lambda.exponent == 0))
        throw std::invalid_argument("eigenvalue exponent must be coprime to its order");
    blocks_[lambda][size] += count;
}

std::set<Eigenvalue> JordanModule::support() const {
    std::set<Eigenvalue> s;
    for (const auto& [lambda, sizes] : blocks_)
        s.insert(lambda);
    return s;
}

int JordanModule::max_block_size() const {
    int j = 0;
    for (const auto& [lambda, sizes] : blocks_)
        if (!sizes.empty())
            j = std::max(j, sizes.rbegin()->first);
    return j;
}

long JordanModule::dimension() const {
    long d = 0;
    for (const auto& [lambda, sizes] : blocks_)
        for (const auto& [size, count] : sizes)
            d += static_cast<long>(size) * count;
    return d;
}

JordanModule JordanModule::direct_sum(const JordanModule& o) const {
    JordanModule r = *this;
    for (const auto& [lambda, sizes] : o.blocks_)
        for (const auto& [size, count] : sizes)
            r.blocks_[lambda][size] += count;
    return r;
}

long totient(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

qpoly::Poly cyclotomic(long m) {
    static std::map<long, qpoly::Poly> cache;
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    // Phi_m = (s^m - 1) / prod_{d | m, d < m} Phi_d
    qpoly::Poly num(static_cast<size_t>(m) + 1, Rational(0));
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d)
            continue;
        num = qpoly::divmod(num, cyclotomic(d)).first;
    }
    cache[m] = num;
    return num;
}

JordanModule jordan_data(const QMat& h) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("monodromy matrix must be square");
    size_t n = h.rows();
    JordanModule out;
    if (n == 0)
        return out;

    std::vector<Rational> cp = char_poly(h);
    if (cp[0] == 0)
        throw std::invalid_argument("monodromy matrix must be invertible");
    qpoly::Poly remaining(cp.begin(), cp.end());
    qpoly::trim(remaining);

    // peel off cyclotomic factors; phi(m) >= sqrt(m/2) bounds the search
    std::vector<long> orders;
    long m_bound = 2 * static_cast<long>(n) * static_cast<long>(n) + 1;
    for (long m = 1; m <= m_bound && qpoly::degree(remaining) > 0; ++m) {
        if (totient(m) > qpoly::degree(remaining))
            continue;
        qpoly::Poly phi = cyclotomic(m);
        bool found = false;
        while (qpoly::divides(phi, remaining)) {
            remaining = qpoly::divmod(remaining, phi).first;
            found = true;
        }
        if (found)
            orders.push_back(m);
    }
    if (qpoly::degree(remaining) != 0)
        throw NonCyclotomicError(
            "non-cyclotomic eigenvalue: characteristic polynomial has a factor that is "
            "no product of cyclotomics");

    long accounted = 0;
    for (long m : orders) {
        long phi_m = totient(m);
        QMat b = eval_poly(cyclotomic(m), h);
        // kernel-dimension jumps of powers give the block-size profile
        std::vector<long> nj{0};
        QMat power = QMat::identity(n);
        while (true) {
            power = power * b;
            long dim = static_cast<long>(n - power.rank());
            nj.push_back(dim);
            if (dim == nj[nj.size() - 2])
                break;
        }
        std::vector<long> at_least; // at_least[j-1] = #blocks of size >= j (rational count)
        for (size_t j = 1; j + 1 < nj.size() + 1 && nj[j] > nj[j - 1]; ++j)
            at_least.push_back((nj[j] - nj[j - 1]) / phi_m);
        for (size_t j = 1; j <= at_least.size(); ++j) {
            long exactly = at_least[j - 1] - (j < at_least.size() ? at_least[j] : 0);
            if (exactly <= 0)
                continue;
            for (long e = 0; e < m; ++e) {
                if (m == 1 && e != 0)
                    continue;
                if (m > 1 && std::gcd(e, m) != 1)
                    continue;
                out.add({m, e}, static_cast<int>(j), exactly);
                accounted += static_cast<long>(j) * exactly;
            }
        }
    }
    if (accounted != static_cast<long>(n))
        throw std::logic_error("jordan_data: block sizes do not account for the dimension");
    return out;
}

namespace {

void require_equivariant(const QMat& f, const QMat& h_src, const QMat& h_dst,
                         const char* what) {
    if (f.cols() != h_src.rows() || f.rows() != h_dst.rows())
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
    if (f * h_src != h_dst * f)
        throw std::invalid_argument(std::string(what) +
                                    " does not commute with the monodromies");
}

} // namespace

Cm1Report check_cm1(const QMat& u, const QMat& v, const QMat& h_a, const QMat& h_b,
                    const QMat& h_c) {
    require_equivariant(u, h_a, h_b, "u");
    require_equivariant(v, h_b, h_c, "v");
    if (!(v * u).is_zero())
        throw std::invalid_argument("check_cm1: v o u != 0, not a complex");

    Cm1Report rep;
    rep.middle = jordan_data(h_b);

    QMat ker_v = v.kernel();
    QMat im_u = u.column_space();
    QMat repr = complement_in(im_u, ker_v);
    if (repr.cols() == 0) {
        rep.subquotient = JordanModule{};
    } else {
        QMat frame = im_u.hcat(repr);
        auto coords = coords_in_basis(frame, h_b * repr);
        if (!coords)
            throw std::logic_error("check_cm1: monodromy does not preserve ker v");
        QMat induced(repr.cols(), repr.cols());
        for (size_t i = 0; i < repr.cols(); ++i)
            for (size_t j = 0; j < repr.cols(); ++j)
                induced.at(i, j) = coords->at(im_u.cols() + i, j);
        rep.subquotient = jordan_data(induced);
    }

    std::set<Eigenvalue> supp_b = rep.middle.support();
    std::set<Eigenvalue> supp_sub = rep.subquotient.support();
    rep.supp_contained =
        std::all_of(supp_sub.begin(), supp_sub.end(),
                    [&](const Eigenvalue& ev) { return supp_b.count(ev) > 0; });
    rep.j_bounded = rep.subquotient.max_block_size() <= rep.middle.max_block_size();
    return rep;
}

Cm2Report check_cm2(const QMat& i, const QMat& p, const QMat& h_a, const QMat& h_b,
                    const QMat& h_c) {
    require_equivariant(i, h_a, h_b, "i");
    require_equivariant(p, h_b, h_c, "p");
    if (!(p * i).is_zero())
        throw std::invalid_argument("check_cm2: p o i != 0");
    if (i.rank() != i.cols())
        throw std::invalid_argument("check_cm2: i is not injective");
    if (p.rank() != p.rows())
        throw std::invalid_argument("check_cm2: p is not surjective");
    if (i.cols() + p.rows() != h_b.rows())
        throw std::invalid_argument("check_cm2: dimensions do not form a short exact sequence");

    Cm2Report rep;
    rep.a = jordan_data(h_a);
    rep.b = jordan_data(h_b);
    rep.c = jordan_data(h_c);

    std::set<Eigenvalue> lhs = rep.b.support();
    std::set<Eigenvalue> rhs = rep.a.support();
    for (const auto& ev : rep.c.support())
        rhs.insert(ev);
    rep.supp_equal = lhs == rhs;
    int jb = rep.b.max_block_size();
    rep.lower_bound = std::max(rep.a.max_block_size(), rep.c.max_block_size()) <= jb;
    rep.upper_bound = jb <= rep.a.max_block_size() + rep.c.max_block_size();
    return rep;
}

MonodromyBoundsReport monodromy_bounds(int n, int p, int ell, bool isolated_instability) {
    if (p <= n)
        throw std::invalid_argument("monodromy_bounds needs p > n");
    MonodromyBoundsReport rep;
    rep.ell = ell;
    rep.general_bound = static_cast<long>(ell) * (ell + 1) / 2;
    rep.isolated_applicable = isolated_instability && p > n + 1;
    if (rep.isolated_applicable) {
        int k_top = p / (p - n);
        for (int k = 2; k <= k_top; ++k)
            rep.isolated.push_back({k, k * n - (k - 1) * (p - 1), k * n - (k - 1) * p + 1});
    }
    return rep;
}

} // namespace germlab
