#include "germlab/icss.hpp"

#include <algorithm>
#include <stdexcept>

namespace germlab {

bool ICSSModel::has_monodromy() const {
    return std::any_of(columns.begin(), columns.end(),
                       [](const IcssColumn& c) { return !c.fiber_monodromy.empty(); });
}

namespace {

QMat zero_or(const std::vector<QMat>& v, size_t i, size_t rows, size_t cols) {
    if (i < v.size())
        return v[i];
    return QMat::zero(rows, cols);
}

int dim_at(const EquivariantComplex& c, int i) {
    return (i >= 0 && i <= c.top_degree()) ? c.dims[static_cast<size_t>(i)] : 0;
}

QMat diff_at(const EquivariantComplex& c, int i) {
    if (i >= 0 && i + 1 <= c.top_degree())
        return c.d[static_cast<size_t>(i)];
    return QMat::zero(static_cast<size_t>(dim_at(c, i + 1)), static_cast<size_t>(dim_at(c, i)));
}

QMat block2x2(const QMat& a, const QMat& b, const QMat& c, const QMat& d) {
    QMat top = a.hcat(b);
    QMat bottom = c.hcat(d);
    return top.vcat(bottom);
}

// Column of the double complex: an alternating complex with its parent-space
// bases (for pair columns the parent is the cone, rows start at i = -1).
struct AssembledColumn {
    int j = 0;     // spectral-sequence column index
    int i_min = 0; // vanishing-cycle degree of row 0
    EmbeddedComplex alt;
    std::vector<QMat> monodromy; // in alternating coordinates, per row
    // parent cone data, kept to express face maps
    std::vector<int> cone_dims;
    std::vector<QMat> cone_d;
};

struct TotalMonodromy {
    bool present = false;
    std::vector<QMat> total; // per degree of the total complex
};

struct AssembledDouble {
    std::vector<AssembledColumn> cols;      // sorted by j
    std::map<int, std::vector<QMat>> horiz; // horiz[j][row]: col j -> col j+1, alt coordinates
};

void require_chain_map(const std::vector<QMat>& f, const EquivariantComplex& src,
                       const EquivariantComplex& dst, const char* what) {
    for (int i = 0; i <= std::max(src.top_degree(), dst.top_degree()); ++i) {
        QMat fi = zero_or(f, static_cast<size_t>(i), static_cast<size_t>(dim_at(dst, i)),
                          static_cast<size_t>(dim_at(src, i)));
        QMat fi1 = zero_or(f, static_cast<size_t>(i + 1),
                           static_cast<size_t>(dim_at(dst, i + 1)),
                           static_cast<size_t>(dim_at(src, i + 1)));
        if (fi.rows() != static_cast<size_t>(dim_at(dst, i)) ||
            fi.cols() != static_cast<size_t>(dim_at(src, i)))
            throw std::invalid_argument(std::string(what) + ": shape mismatch in degree " +
                                        std::to_string(i));
        if (fi1 * diff_at(src, i) != diff_at(dst, i) * fi)
            throw std::invalid_argument(std::string(what) + ": not a chain map at degree " +
                                        std::to_string(i));
    }
}

void require_equivariant_map(const std::vector<QMat>& f, const EquivariantComplex& src,
                             const EquivariantComplex& dst, const char* what) {
    size_t shared = std::min(src.action.size(), dst.action.size());
    for (size_t t = 0; t < shared; ++t)
        for (int i = 0; i <= std::min(src.top_degree(), dst.top_degree()); ++i) {
            if (static_cast<size_t>(i) >= f.size())
                continue;
            if (f[static_cast<size_t>(i)] * src.action[t][static_cast<size_t>(i)] !=
                dst.action[t][static_cast<size_t>(i)] * f[static_cast<size_t>(i)])
                throw std::invalid_argument(std::string(what) +
                                            ": not equivariant in degree " + std::to_string(i));
        }
}

// Derived contractible total: ker d^0 of the fiber with the induced action.
EquivariantComplex cone_total(const EquivariantComplex& fiber, QMat& ker_out) {
    QMat d0 = fiber.top_degree() >= 1 ? fiber.d[0]
                                      : QMat::zero(0, static_cast<size_t>(fiber.dims[0]));
    QMat ker = d0.kernel();
    ker_out = ker;
    EquivariantComplex total;
    total.k = fiber.k;
    total.dims = {static_cast<int>(ker.cols())};
    for (const auto& trans : fiber.action) {
        auto coords = coords_in_basis(ker, trans[0] * ker);
        if (!coords)
            throw std::invalid_argument("fiber action does not preserve ker d^0");
        total.action.push_back({*coords});
    }
    return total;
}

struct ConeParts {
    EquivariantComplex cone; // rows relabelled 0.. (geometric degree = row - 1)
    std::vector<QMat> monodromy;
    bool has_monodromy = false;
    // block sizes per row: (total part, fiber part)
    std::vector<std::pair<int, int>> split;
};

ConeParts build_cone(const IcssColumn& col) {
    col.fiber.validate();
    EquivariantComplex total;
    std::vector<QMat> restriction = col.restriction;
    QMat ker;
    if (col.total) {
        total = *col.total;
        total.validate();
        if (total.k != col.fiber.k)
            throw std::invalid_argument("total and fiber models must share the group");
    } else {
        total = cone_total(col.fiber, ker);
        restriction = {ker};
    }
    require_chain_map(restriction, total, col.fiber, "inclusion (restriction map)");
    require_equivariant_map(restriction, total, col.fiber, "inclusion (restriction map)");

    // monodromy: fiber matrices given; total side derived on cones, identity
    // otherwise (validated against the restriction)
    std::vector<QMat> h_fib = col.fiber_monodromy;
    bool has_mono = !h_fib.empty();
    std::vector<QMat> h_tot;
    if (has_mono) {
        require_chain_map(h_fib, col.fiber, col.fiber, "fiber monodromy");
        require_equivariant_map(h_fib, col.fiber, col.fiber, "fiber monodromy");
        if (!col.total) {
            auto coords = coords_in_basis(ker, h_fib[0] * ker);
            if (!coords)
                throw std::invalid_argument("fiber monodromy does not preserve ker d^0");
            h_tot = {*coords};
        } else {
            for (int i = 0; i <= total.top_degree(); ++i)
                h_tot.push_back(QMat::identity(static_cast<size_t>(total.dims[i])));
            for (int i = 0; i <= total.top_degree(); ++i) {
                QMat rho = zero_or(restriction, static_cast<size_t>(i),
                                   static_cast<size_t>(dim_at(col.fiber, i)),
                                   static_cast<size_t>(total.dims[i]));
                QMat h = zero_or(h_fib, static_cast<size_t>(i), rho.rows(), rho.rows());
                if (h * rho != rho)
                    throw std::invalid_argument(
                        "explicit total model needs monodromy fixing restricted cochains");
            }
        }
    }

    // cone rows: row r holds total^{r} (+) fiber^{r-1}; geometric degree r - 1
    int rows = std::max(total.top_degree(), col.fiber.top_degree() + 1) + 1;
    ConeParts parts;
    parts.cone.k = col.fiber.k;
    parts.has_monodromy = has_mono;
    for (int r = 0; r < rows; ++r) {
        int dt = dim_at(total, r);
        int df = dim_at(col.fiber, r - 1);
        parts.split.emplace_back(dt, df);
        parts.cone.dims.push_back(dt + df);
    }
    for (int r = 0; r + 1 < rows; ++r) {
        auto [dt, df] = parts.split[static_cast<size_t>(r)];
        auto [dt1, df1] = parts.split[static_cast<size_t>(r + 1)];
        QMat rho = zero_or(restriction, static_cast<size_t>(r),
                           static_cast<size_t>(dim_at(col.fiber, r)),
                           static_cast<size_t>(dt));
        // d(x, a) = (d_t x, rho x - d_f a)
        QMat m = block2x2(diff_at(total, r),
                          QMat::zero(static_cast<size_t>(dt1), static_cast<size_t>(df)), rho,
                          diff_at(col.fiber, r - 1) * Rational(-1));
        parts.cone.d.push_back(std::move(m));
    }
    for (size_t t = 0; t < static_cast<size_t>(std::max(0, col.fiber.k - 1)); ++t) {
        std::vector<QMat> act;
        for (int r = 0; r < rows; ++r) {
            auto [dt, df] = parts.split[static_cast<size_t>(r)];
            QMat at = r <= total.top_degree()
                          ? total.action[t][static_cast<size_t>(r)]
                          : QMat::zero(static_cast<size_t>(dt), static_cast<size_t>(dt));
            QMat af = (r - 1 >= 0 && r - 1 <= col.fiber.top_degree())
                          ? col.fiber.action[t][static_cast<size_t>(r - 1)]
                          : QMat::zero(static_cast<size_t>(df), static_cast<size_t>(df));
            act.push_back(block2x2(at, QMat::zero(at.rows(), af.cols()),
                                   QMat::zero(af.rows(), at.cols()), af));
        }
        parts.cone.action.push_back(std::move(act));
    }
    if (has_mono) {
        for (int r = 0; r < rows; ++r) {
            auto [dt, df] = parts.split[static_cast<size_t>(r)];
            QMat ht = r <= total.top_degree() && !h_tot.empty()
                          ? h_tot[static_cast<size_t>(r)]
                          : QMat::identity(static_cast<size_t>(dt));
            QMat hf = (r - 1 >= 0 && r - 1 <= col.fiber.top_degree() &&
                       static_cast<size_t>(r - 1) < h_fib.size())
                          ? h_fib[static_cast<size_t>(r - 1)]
                          : QMat::identity(static_cast<size_t>(df));
            parts.monodromy.push_back(block2x2(ht, QMat::zero(ht.rows(), hf.cols()),
                                               QMat::zero(hf.rows(), ht.cols()), hf));
        }
    }
    return parts;
}

// Alternating-coordinate matrix of a parent-space map between columns.
QMat restrict_to_alt(const QMat& parent_map, const QMat& src_basis, const QMat& dst_basis,
                     const char* what) {
    auto coords = coords_in_basis(dst_basis, parent_map * src_basis);
    if (!coords)
        throw std::invalid_argument(std::string(what) +
                                    " does not respect the alternating parts");
    return *coords;
}

AssembledDouble assemble_pair_model(const ICSSModel& m) {
    if (m.k_max < 2)
        throw std::invalid_argument("ICSS model needs k_max >= 2");
    std::map<int, const IcssColumn*> byk;
    for (const auto& c : m.columns) {
        if (c.k < 2 || c.k > m.k_max)
            throw std::invalid_argument("column k out of range");
        if (!byk.emplace(c.k, &c).second)
            throw std::invalid_argument("duplicate column k");
        if (c.fiber.k != c.k)
            throw std::invalid_argument("fiber group order must equal the column k");
    }

    AssembledDouble out;
    std::map<int, ConeParts> cones;
    std::map<int, std::vector<QMat>> proj;
    for (auto& [k, col] : byk) {
        ConeParts parts = build_cone(*col);
        EmbeddedComplex alt = alternating_part(parts.cone);
        AssembledColumn ac;
        ac.j = k - 1;
        ac.i_min = -1;
        ac.alt = alt;
        ac.cone_dims = parts.cone.dims;
        for (size_t r = 0; r + 1 < parts.cone.dims.size(); ++r)
            ac.cone_d.push_back(parts.cone.d[r]);
        if (parts.has_monodromy) {
            for (size_t r = 0; r < alt.basis.size(); ++r)
                ac.monodromy.push_back(restrict_to_alt(parts.monodromy[r], alt.basis[r],
                                                       alt.basis[r], "monodromy"));
        }
        cones.emplace(k, std::move(parts));
        out.cols.push_back(std::move(ac));
    }
    std::sort(out.cols.begin(), out.cols.end(),
              [](const AssembledColumn& a, const AssembledColumn& b) { return a.j < b.j; });

    // face maps: sum_j (-1)^j (pullback of epsilon^{k+1,j}) between cones
    std::map<int, std::map<int, const IcssFaceMap*>> faces;
    for (const auto& f : m.face_maps) {
        if (f.k < 2 || f.k + 1 > m.k_max)
            throw std::invalid_argument("face map k out of range");
        if (f.j < 1 || f.j > f.k + 1)
            throw std::invalid_argument("face map j out of range");
        faces[f.k][f.j] = &f;
    }
    for (const auto& [k, jmap] : faces) {
        const IcssColumn& src = *byk.at(k);
        const IcssColumn& dst = *byk.at(k + 1);
        const ConeParts& src_cone = cones.at(k);
        const ConeParts& dst_cone = cones.at(k + 1);
        size_t rows = std::min(src_cone.cone.dims.size(), dst_cone.cone.dims.size());
        std::vector<QMat> sum;
        for (size_t r = 0; r < rows; ++r)
            sum.push_back(QMat::zero(static_cast<size_t>(dst_cone.cone.dims[r]),
                                     static_cast<size_t>(src_cone.cone.dims[r])));
        for (const auto& [j, fm] : jmap) {
            require_chain_map(fm->fiber, src.fiber, dst.fiber, "face map (fiber)");
            std::vector<QMat> ftot = fm->total;
            if (!src.total || !dst.total) {
                if (src.total || dst.total)
                    throw std::invalid_argument(
                        "face maps between mixed explicit/cone totals are not supported");
                // derive on ker d^0
                QMat ks, kd;
                EquivariantComplex st = cone_total(src.fiber, ks);
                EquivariantComplex dt = cone_total(dst.fiber, kd);
                auto coords = coords_in_basis(kd, fm->fiber[0] * ks);
                if (!coords)
                    throw std::invalid_argument("face map does not preserve ker d^0");
                ftot = {*coords};
            } else {
                require_chain_map(ftot, *src.total, *dst.total, "face map (total)");
            }
            int sign = (j % 2 == 0) ? 1 : -1;
            for (size_t r = 0; r < rows; ++r) {
                auto [sdt, sdf] = src_cone.split[r];
                auto [ddt, ddf] = dst_cone.split[r];
                QMat bt = zero_or(ftot, r, static_cast<size_t>(ddt), static_cast<size_t>(sdt));
                QMat bf = r >= 1 ? zero_or(fm->fiber, r - 1, static_cast<size_t>(ddf),
                                           static_cast<size_t>(sdf))
                                 : QMat::zero(static_cast<size_t>(ddf), static_cast<size_t>(sdf));
                QMat block = block2x2(bt, QMat::zero(bt.rows(), bf.cols()),
                                      QMat::zero(bf.rows(), bt.cols()), bf);
                sum[r] = sign > 0 ? sum[r] + block : sum[r] - block;
            }
        }
        // express in alternating coordinates
        const AssembledColumn* src_col = nullptr;
        const AssembledColumn* dst_col = nullptr;
        for (const auto& c : out.cols) {
            if (c.j == k - 1)
                src_col = &c;
            if (c.j == k)
                dst_col = &c;
        }
        std::vector<QMat> alt_maps;
        for (size_t r = 0; r < rows; ++r)
            alt_maps.push_back(restrict_to_alt(sum[r], src_col->alt.basis[r],
                                               dst_col->alt.basis[r], "face-map sum"));
        out.horiz[k - 1] = std::move(alt_maps);
    }
    return out;
}

// ---------------------------------------------------------------------------
// spectral sequence of the column-filtered total complex
// ---------------------------------------------------------------------------

struct TotalComplex {
    // block layout per total degree: list of (j, row, offset, dim)
    struct Block {
        int j;
        int row;
        size_t offset;
        int dim;
    };
    std::map<int, std::vector<Block>> layout; // by total degree l
    std::map<int, size_t> total_dim;
    std::map<int, QMat> d;    // D^l
    std::map<int, QMat> mono; // block-diagonal monodromy per degree
    bool has_monodromy = false;
    int jmin = 0, jmax = 0;
    int lmin = 0, lmax = 0;
};

TotalComplex build_total(const AssembledDouble& dc) {
    TotalComplex t;
    if (dc.cols.empty())
        return t;
    t.jmin = dc.cols.front().j;
    t.jmax = dc.cols.back().j;
    t.lmin = 1 << 30;
    t.lmax = -(1 << 30);
    for (const auto& c : dc.cols) {
        for (size_t r = 0; r < c.alt.dims.size(); ++r) {
            int l = c.j + c.i_min + static_cast<int>(r);
            t.lmin = std::min(t.lmin, l);
            t.lmax = std::max(t.lmax, l);
        }
    }
    if (t.lmin > t.lmax) {
        t.lmin = 0;
        t.lmax = -1;
        return t;
    }
    t.has_monodromy =
        std::all_of(dc.cols.begin(), dc.cols.end(),
                    [](const AssembledColumn& c) { return !c.monodromy.empty(); }) &&
        !dc.cols.empty();
    for (int l = t.lmin; l <= t.lmax; ++l) {
        size_t off = 0;
        std::vector<TotalComplex::Block> blocks;
        for (const auto& c : dc.cols) {
            int row = l - c.j - c.i_min;
            if (row < 0 || row >= static_cast<int>(c.alt.dims.size()))
                continue;
            int dim = c.alt.dims[static_cast<size_t>(row)];
            blocks.push_back({c.j, row, off, dim});
            off += static_cast<size_t>(dim);
        }
        t.layout[l] = std::move(blocks);
        t.total_dim[l] = off;
    }
    auto find_block = [&](int l, int j) -> const TotalComplex::Block* {
        auto it = t.layout.find(l);
        if (it == t.layout.end())
            return nullptr;
        for (const auto& b : it->second)
            if (b.j == j)
                return &b;
        return nullptr;
    };
    for (int l = t.lmin; l <= t.lmax; ++l) {
        QMat D(t.total_dim.count(l + 1) ? t.total_dim[l + 1] : 0, t.total_dim[l]);
        for (const auto& src : t.layout[l]) {
            const AssembledColumn* col = nullptr;
            for (const auto& c : dc.cols)
                if (c.j == src.j)
                    col = &c;
            // vertical, with the (-1)^j column sign
            if (src.row + 1 < static_cast<int>(col->alt.dims.size())) {
                if (const auto* dst = find_block(l + 1, src.j)) {
                    const QMat& dv = col->alt.d[static_cast<size_t>(src.row)];
                    int sign = (src.j % 2 == 0) ? 1 : -1;
                    for (size_t rr = 0; rr < dv.rows(); ++rr)
                        for (size_t cc = 0; cc < dv.cols(); ++cc)
                            D.at(dst->offset + rr, src.offset + cc) =
                                sign > 0 ? dv.at(rr, cc) : -dv.at(rr, cc);
                }
            }
            // horizontal
            auto hit = dc.horiz.find(src.j);
            if (hit != dc.horiz.end() &&
                static_cast<size_t>(src.row) < hit->second.size()) {
                if (const auto* dst = find_block(l + 1, src.j + 1)) {
                    const QMat& h = hit->second[static_cast<size_t>(src.row)];
                    if (h.rows() != static_cast<size_t>(dst->dim) ||
                        h.cols() != static_cast<size_t>(src.dim))
                        throw std::invalid_argument("face-map shape mismatch in the total complex");
                    for (size_t rr = 0; rr < h.rows(); ++rr)
                        for (size_t cc = 0; cc < h.cols(); ++cc)
                            D.at(dst->offset + rr, src.offset + cc) = h.at(rr, cc);
                }
            }
        }
        t.d[l] = std::move(D);
    }
    // D o D = 0 across the assembled complex
    for (int l = t.lmin; l + 1 <= t.lmax; ++l)
        if (!(t.d[l + 1] * t.d[l]).is_zero())
            throw std::invalid_argument("assembled total differential does not square to zero");
    if (t.has_monodromy) {
        for (int l = t.lmin; l <= t.lmax; ++l) {
            QMat H(t.total_dim[l], t.total_dim[l]);
            for (const auto& b : t.layout[l]) {
                const AssembledColumn* col = nullptr;
                for (const auto& c : dc.cols)
                    if (c.j == b.j)
                        col = &c;
                const QMat& hb = col->monodromy[static_cast<size_t>(b.row)];
                for (size_t rr = 0; rr < hb.rows(); ++rr)
                    for (size_t cc = 0; cc < hb.cols(); ++cc)
                        H.at(b.offset + rr, b.offset + cc) = hb.at(rr, cc);
            }
            t.mono[l] = std::move(H);
        }
        for (int l = t.lmin; l < t.lmax; ++l)
            if (t.d[l] * t.mono[l] != t.mono[l + 1] * t.d[l])
                throw std::invalid_argument("monodromy does not commute with the differential");
    }
    return t;
}

// basis of F_p T^l
QMat filtration_basis(const TotalComplex& t, int p, int l) {
    if (!t.total_dim.count(l))
        return QMat(0, 0);
    size_t n = t.total_dim.at(l);
    std::vector<size_t> idx;
    for (const auto& b : t.layout.at(l))
        if (b.j >= p)
            for (int c = 0; c < b.dim; ++c)
                idx.push_back(b.offset + static_cast<size_t>(c));
    QMat m(n, idx.size());
    for (size_t c = 0; c < idx.size(); ++c)
        m.at(idx[c], c) = 1;
    return m;
}

// Z_r^{p,q} = F_p T^l  with  D x in F_{p+r}, l = p+q
QMat z_space(const TotalComplex& t, int r, int p, int q) {
    int l = p + q;
    QMat fp = filtration_basis(t, p, l);
    if (fp.cols() == 0)
        return fp;
    if (!t.d.count(l))
        return fp;
    QMat img = t.d.at(l) * fp;
    // rows of blocks j' < p+r in degree l+1 must vanish
    std::vector<size_t> rows;
    if (t.layout.count(l + 1))
        for (const auto& b : t.layout.at(l + 1))
            if (b.j < p + r)
                for (int c = 0; c < b.dim; ++c)
                    rows.push_back(b.offset + static_cast<size_t>(c));
    if (rows.empty())
        return fp;
    QMat constraint(rows.size(), img.cols());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t c = 0; c < img.cols(); ++c)
            constraint.at(i, c) = img.at(rows[i], c);
    QMat ker = constraint.kernel();
    return fp * ker;
}

struct EntryData {
    QMat denom; // concatenated denominator span
    QMat repr;  // representatives (columns independent mod denom)
};

IcssResult spectral_sequence(const AssembledDouble& dc) {
    TotalComplex t = build_total(dc);
    IcssResult result;
    if (t.lmax < t.lmin) {
        result.total_betti.clear();
        return result;
    }
    int width = t.jmax - t.jmin;
    int r_stab = std::max(1, width + 1);

    std::map<std::tuple<int, int, int>, QMat> zcache;
    auto z_of = [&](int r, int p, int q) -> const QMat& {
        auto key = std::make_tuple(r, p, q);
        auto it = zcache.find(key);
        if (it == zcache.end())
            it = zcache.emplace(key, z_space(t, r, p, q)).first;
        return it->second;
    };

    for (int r = 1; r <= r_stab; ++r) {
        Page page;
        page.r = r;
        std::map<std::pair<int, int>, EntryData> entries;
        for (int p = t.jmin; p <= t.jmax; ++p) {
            for (int l = t.lmin; l <= t.lmax; ++l) {
                int q = l - p;
                QMat z = z_of(r, p, q);
                if (z.cols() == 0 && filtration_basis(t, p, l).cols() == 0)
                    continue;
                QMat denom = z_of(r - 1, p + 1, q - 1);
                const QMat& zprev = z_of(r - 1, p - r + 1, q + r - 2);
                if (zprev.cols() > 0 && t.d.count(l - 1)) {
                    QMat img = t.d.at(l - 1) * zprev;
                    denom = denom.hcat(img);
                }
                QMat repr = complement_in(denom, z);
                if (repr.cols() == 0 && denom.cols() == 0)
                    continue;
                EntryData e{denom, repr};
                if (repr.cols() > 0)
                    page.entries[{q, p}] = static_cast<int>(repr.cols());
                entries[{p, q}] = std::move(e);
            }
        }
        // d_r matrices
        for (auto& [pq, e] : entries) {
            auto [p, q] = pq;
            if (e.repr.cols() == 0)
                continue;
            int l = p + q;
            auto target = entries.find({p + r, q - r + 1});
            if (!t.d.count(l))
                continue;
            QMat img = t.d.at(l) * e.repr;
            if (target == entries.end() || target->second.repr.cols() == 0) {
                if (!img.is_zero()) {
                    // image must die in the target denominator
                    if (target == entries.end() ||
                        !in_span(target->second.denom, img))
                        throw std::logic_error("d_r image missing its target entry");
                }
                continue;
            }
            QMat frame = target->second.denom.hcat(target->second.repr);
            auto coords = coords_in_basis(frame, img);
            if (!coords)
                throw std::logic_error("d_r image not in the target Z-space");
            QMat dr(target->second.repr.cols(), e.repr.cols());
            for (size_t i = 0; i < dr.rows(); ++i)
                for (size_t c = 0; c < dr.cols(); ++c)
                    dr.at(i, c) = coords->at(target->second.denom.cols() + i, c);
            if (!dr.is_zero())
                page.differentials[{q, p}] = std::move(dr);
        }
        // monodromy induced on the page
        if (t.has_monodromy) {
            for (auto& [pq, e] : entries) {
                auto [p, q] = pq;
                if (e.repr.cols() == 0)
                    continue;
                QMat frame = e.denom.hcat(e.repr);
                auto coords = coords_in_basis(frame, t.mono.at(p + q) * e.repr);
                if (!coords)
                    throw std::logic_error("monodromy does not preserve the page entry");
                QMat hm(e.repr.cols(), e.repr.cols());
                for (size_t i = 0; i < hm.rows(); ++i)
                    for (size_t c = 0; c < hm.cols(); ++c)
                        hm.at(i, c) = coords->at(e.denom.cols() + i, c);
                page.monodromy[{q, p}] = jordan_data(hm);
            }
        }
        // dimension check: E_{r+1} entries must be the homology of (E_r, d_r)
        if (r >= 2) {
            for (const auto& [ip, dim] : result.pages.back().entries) {
                auto [q, p] = ip;
                const auto& prev = result.pages.back();
                int out_rank = 0, in_rank = 0;
                auto ito = prev.differentials.find({q, p});
                if (ito != prev.differentials.end())
                    out_rank = static_cast<int>(ito->second.rank());
                auto iti = prev.differentials.find({q + (r - 1) - 1, p - (r - 1)});
                if (iti != prev.differentials.end())
                    in_rank = static_cast<int>(iti->second.rank());
                int expected = dim - out_rank - in_rank;
                int actual = 0;
                auto itn = page.entries.find({q, p});
                if (itn != page.entries.end())
                    actual = itn->second;
                if (expected != actual)
                    throw std::logic_error("page dimensions disagree with homology of d_r");
            }
        }
        result.pages.push_back(std::move(page));
    }
    result.stabilized_at = r_stab;

    // antidiagonal totals from the final page + direct cross-check
    const Page& last = result.pages.back();
    int top = std::max(0, t.lmax);
    result.total_betti.assign(static_cast<size_t>(top) + 1, 0);
    for (const auto& [ip, dim] : last.entries) {
        auto [q, p] = ip;
        int l = p + q;
        if (l < 0)
            throw std::logic_error("nonzero stable entry in negative total degree");
        if (l >= static_cast<int>(result.total_betti.size()))
            result.total_betti.resize(static_cast<size_t>(l) + 1, 0);
        result.total_betti[static_cast<size_t>(l)] += dim;
    }
    for (int l = t.lmin; l <= t.lmax; ++l) {
        size_t dim_l = t.total_dim.count(l) ? t.total_dim.at(l) : 0;
        size_t rank_out = t.d.count(l) ? t.d.at(l).rank() : 0;
        size_t rank_in = t.d.count(l - 1) ? t.d.at(l - 1).rank() : 0;
        long h = static_cast<long>(dim_l) - rank_out - rank_in;
        long fromss = (l >= 0 && l < static_cast<int>(result.total_betti.size()))
                          ? result.total_betti[static_cast<size_t>(l)]
                          : 0;
        if (h != fromss)
            throw std::logic_error("spectral-sequence totals disagree with the total complex");
    }
    return result;
}

} // namespace

IcssResult run_icss(const ICSSModel& m) {
    return spectral_sequence(assemble_pair_model(m));
}

namespace {

AssembledDouble assemble_absolute_model(const AbsoluteIcssModel& m) {
    if (m.k_max < 1 || static_cast<int>(m.models.size()) != m.k_max)
        throw std::invalid_argument("absolute model needs complexes for k = 1..k_max");
    AssembledDouble out;
    for (int k = 1; k <= m.k_max; ++k) {
        const EquivariantComplex& c = m.models[static_cast<size_t>(k - 1)];
        if (c.k != k)
            throw std::invalid_argument("absolute model: group order must equal k");
        AssembledColumn ac;
        ac.j = k - 1;
        ac.i_min = 0;
        ac.alt = alternating_part(c);
        out.cols.push_back(std::move(ac));
    }
    std::map<int, std::map<int, const IcssFaceMap*>> faces;
    for (const auto& f : m.face_maps) {
        if (f.k < 1 || f.k + 1 > m.k_max)
            throw std::invalid_argument("face map k out of range");
        if (f.j < 1 || f.j > f.k + 1)
            throw std::invalid_argument("face map j out of range");
        faces[f.k][f.j] = &f;
    }
    for (const auto& [k, jmap] : faces) {
        const EquivariantComplex& src = m.models[static_cast<size_t>(k - 1)];
        const EquivariantComplex& dst = m.models[static_cast<size_t>(k)];
        size_t rows = std::min(src.dims.size(), dst.dims.size());
        std::vector<QMat> sum;
        for (size_t rdeg = 0; rdeg < rows; ++rdeg)
            sum.push_back(QMat::zero(static_cast<size_t>(dst.dims[rdeg]),
                                     static_cast<size_t>(src.dims[rdeg])));
        for (const auto& [j, fm] : jmap) {
            require_chain_map(fm->fiber, src, dst, "face map");
            int sign = (j % 2 == 0) ? 1 : -1;
            for (size_t rdeg = 0; rdeg < rows; ++rdeg) {
                QMat b = zero_or(fm->fiber, rdeg, static_cast<size_t>(dst.dims[rdeg]),
                                 static_cast<size_t>(src.dims[rdeg]));
                sum[rdeg] = sign > 0 ? sum[rdeg] + b : sum[rdeg] - b;
            }
        }
        const AssembledColumn* src_col = &out.cols[static_cast<size_t>(k - 1)];
        const AssembledColumn* dst_col = &out.cols[static_cast<size_t>(k)];
        std::vector<QMat> alt_maps;
        for (size_t rdeg = 0; rdeg < rows; ++rdeg)
            alt_maps.push_back(restrict_to_alt(sum[rdeg], src_col->alt.basis[rdeg],
                                               dst_col->alt.basis[rdeg], "face-map sum"));
        out.horiz[k - 1] = std::move(alt_maps);
    }
    return out;
}

} // namespace

IcssResult run_absolute_icss(const AbsoluteIcssModel& m) {
    return spectral_sequence(assemble_absolute_model(m));
}

bool check_augmented_exactness(const AbsoluteIcssModel& m,
                               const std::vector<int>& image_cohomology) {
    IcssResult res = run_absolute_icss(m);
    std::vector<int> got = res.total_betti;
    std::vector<int> want = image_cohomology;
    while (!got.empty() && got.back() == 0)
        got.pop_back();
    while (!want.empty() && want.back() == 0)
        want.pop_back();
    return got == want;
}

IcssMonodromyReport propagate_icss_monodromy(const ICSSModel& m) {
    if (!m.has_monodromy())
        throw std::invalid_argument("model carries no monodromy matrices");
    for (const auto& c : m.columns)
        if (c.fiber_monodromy.empty())
            throw std::invalid_argument("every column needs monodromy matrices to propagate");
    IcssMonodromyReport rep;
    rep.icss = run_icss(m);
    const Page& last = rep.icss.pages.back();
    std::map<int, std::vector<std::pair<std::pair<int, int>, const JordanModule*>>> by_degree;
    for (const auto& [ip, dim] : last.entries) {
        auto [q, p] = ip;
        auto it = last.monodromy.find(ip);
        if (it == last.monodromy.end())
            throw std::logic_error("missing monodromy data on a stable entry");
        by_degree[p + q].push_back({ip, &it->second});
    }
    for (int l = 0; l < static_cast<int>(rep.icss.total_betti.size()); ++l) {
        DegreeMonodromy dm;
        dm.degree = l;
        auto it = by_degree.find(l);
        if (it == by_degree.end()) {
            dm.exact = true;
            dm.exact_data = JordanModule{};
            rep.degrees.push_back(std::move(dm));
            continue;
        }
        for (const auto& [ip, jm] : it->second) {
            for (const auto& ev : jm->support())
                dm.supp_superset.insert(ev);
            dm.j_upper += jm->max_block_size();
            dm.j_lower = std::max(dm.j_lower, jm->max_block_size());
        }
        if (it->second.size() == 1) {
            dm.exact = true;
            dm.exact_data = *it->second.front().second;
        }
        rep.degrees.push_back(std::move(dm));
    }
    return rep;
}

} // namespace germlab
