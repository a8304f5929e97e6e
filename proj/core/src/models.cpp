#include "germlab/models.hpp"

namespace germlab {

namespace {

QMat block_swap(int b) {
    QMat m(2 * static_cast<size_t>(b), 2 * static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) {
        m.at(static_cast<size_t>(i), static_cast<size_t>(b + i)) = 1;
        m.at(static_cast<size_t>(b + i), static_cast<size_t>(i)) = 1;
    }
    return m;
}

} // namespace

EquivariantComplex two_copy_swap_complex(const std::vector<int>& betti) {
    if (betti.empty() || betti[0] <= 0)
        throw std::invalid_argument("Betti profile must start with b_0 >= 1");
    EquivariantComplex c;
    c.k = 2;
    std::vector<QMat> swaps;
    for (int b : betti) {
        if (b < 0)
            throw std::invalid_argument("negative Betti number");
        c.dims.push_back(2 * b);
        swaps.push_back(block_swap(b));
    }
    for (size_t i = 0; i + 1 < c.dims.size(); ++i)
        c.d.push_back(QMat::zero(static_cast<size_t>(c.dims[i + 1]),
                                 static_cast<size_t>(c.dims[i])));
    c.action.push_back(std::move(swaps));
    return c;
}

ICSSModel bigerm_pair_model(const std::vector<int>& fiber_betti, bool with_monodromy) {
    ICSSModel m;
    m.k_max = 2;
    IcssColumn col;
    col.k = 2;
    col.fiber = two_copy_swap_complex(fiber_betti);
    if (with_monodromy)
        for (int dim : col.fiber.dims)
            col.fiber_monodromy.push_back(QMat::identity(static_cast<size_t>(dim)));
    m.columns.push_back(std::move(col));
    return m;
}

AbsoluteIcssModel bigerm_absolute_model(const std::vector<int>& fiber_betti) {
    AbsoluteIcssModel m;
    m.k_max = 2;
    // D^1: two disjoint balls
    EquivariantComplex d1;
    d1.k = 1;
    d1.dims = {2};
    m.models.push_back(d1);
    m.models.push_back(two_copy_swap_complex(fiber_betti));

    // pullbacks of epsilon^{2,1}, epsilon^{2,2}: the tuple components are
    // (branch-1 point, branch-2 point) and its swap
    size_t b0 = static_cast<size_t>(fiber_betti[0]);
    auto face = [&](int j) {
        IcssFaceMap f;
        f.k = 1;
        f.j = j;
        QMat deg0(2 * b0, 2);
        for (size_t c = 0; c < b0; ++c) {
            if (j == 2) {
                // keep the first point: component c12 sees branch 1, c21 branch 2
                deg0.at(c, 0) = 1;
                deg0.at(b0 + c, 1) = 1;
            } else {
                // keep the second point
                deg0.at(c, 1) = 1;
                deg0.at(b0 + c, 0) = 1;
            }
        }
        f.fiber = {deg0};
        return f;
    };
    m.face_maps.push_back(face(1));
    m.face_maps.push_back(face(2));
    return m;
}

AbsoluteIcssModel transverse_double_point_absolute_model() {
    // image: two planes crossing along a line; all spaces have contractible
    // components, so the Betti data is carried by the component counts
    return bigerm_absolute_model({1});
}

} // namespace germlab
