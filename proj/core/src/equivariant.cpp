#include "germlab/icss.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace germlab {

namespace {

long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

// adjacent-transposition word sorting `perm` to the identity; the permutation
// equals the reversed word applied left to right
std::vector<int> adjacent_word(std::vector<int> perm) {
    std::vector<int> word;
    for (size_t i = 0; i < perm.size(); ++i) {
        size_t j = i;
        while (perm[j] != static_cast<int>(i))
            ++j;
        while (j > i) {
            std::swap(perm[j - 1], perm[j]);
            word.push_back(static_cast<int>(j - 1));
            --j;
        }
    }
    return word;
}

} // namespace

void EquivariantComplex::validate() const {
    if (k < 1)
        throw std::invalid_argument("equivariant complex: k must be >= 1");
    if (dims.empty())
        throw std::invalid_argument("equivariant complex: no degrees");
    if (d.size() + 1 != dims.size() && !(dims.size() == 1 && d.empty()))
        throw std::invalid_argument("equivariant complex: differential count mismatch");
    for (size_t i = 0; i + 1 < dims.size(); ++i) {
        if (d[i].rows() != static_cast<size_t>(dims[i + 1]) ||
            d[i].cols() != static_cast<size_t>(dims[i]))
            throw std::invalid_argument("equivariant complex: differential shape mismatch");
        if (i + 2 < dims.size() && !(d[i + 1] * d[i]).is_zero())
            throw std::invalid_argument("equivariant complex: d o d != 0");
    }
    if (static_cast<int>(action.size()) != std::max(0, k - 1))
        throw std::invalid_argument("equivariant complex: need k-1 transposition actions");
    for (const auto& trans : action) {
        if (trans.size() != dims.size())
            throw std::invalid_argument("equivariant complex: action degree count mismatch");
        for (size_t i = 0; i < dims.size(); ++i) {
            const QMat& s = trans[i];
            if (s.rows() != static_cast<size_t>(dims[i]) || s.cols() != s.rows())
                throw std::invalid_argument("equivariant complex: action shape mismatch");
            if (s * s != QMat::identity(s.rows()))
                throw std::invalid_argument(
                    "equivariant complex: transposition matrix is not an involution");
            if (i + 1 < dims.size() && d[i] * s != trans[i + 1] * d[i])
                throw std::invalid_argument(
                    "equivariant complex: action does not commute with the differential");
        }
    }
    // braid relations among adjacent transpositions
    for (size_t a = 0; a + 1 < action.size(); ++a)
        for (size_t i = 0; i < dims.size(); ++i) {
            const QMat& s = action[a][i];
            const QMat& t = action[a + 1][i];
            if (s * t * s != t * s * t)
                throw std::invalid_argument("equivariant complex: braid relation fails");
        }
    for (size_t a = 0; a < action.size(); ++a)
        for (size_t b = a + 2; b < action.size(); ++b)
            for (size_t i = 0; i < dims.size(); ++i)
                if (action[a][i] * action[b][i] != action[b][i] * action[a][i])
                    throw std::invalid_argument(
                        "equivariant complex: distant transpositions do not commute");
}

QMat EquivariantComplex::permutation_matrix(const std::vector<int>& one_line, int degree) const {
    if (static_cast<int>(one_line.size()) != k)
        throw std::invalid_argument("permutation length must equal k");
    size_t n = static_cast<size_t>(dims[static_cast<size_t>(degree)]);
    QMat m = QMat::identity(n);
    std::vector<int> word = adjacent_word(one_line);
    // perm = s_{w_last} ... s_{w_first}
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        m = m * action[static_cast<size_t>(*it)][static_cast<size_t>(degree)];
    return m;
}

std::vector<QMat> alternating_projectors(const EquivariantComplex& c) {
    if (c.k > 6)
        throw std::invalid_argument("alternating part limited to k <= 6 (factorial blowup)");
    c.validate();
    std::vector<QMat> projectors;
    Rational scale(1, factorial(c.k));
    for (size_t i = 0; i < c.dims.size(); ++i) {
        size_t n = static_cast<size_t>(c.dims[i]);
        QMat sum(n, n);
        std::vector<int> perm(static_cast<size_t>(c.k));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> word = adjacent_word(perm);
            int sign = word.size() % 2 == 0 ? 1 : -1;
            QMat m = c.permutation_matrix(perm, static_cast<int>(i));
            sum = sign > 0 ? sum + m : sum - m;
        } while (std::next_permutation(perm.begin(), perm.end()));
        projectors.push_back(sum * scale);
    }
    return projectors;
}

EmbeddedComplex alternating_part(const EquivariantComplex& c) {
    std::vector<QMat> proj = alternating_projectors(c);
    for (size_t i = 0; i < proj.size(); ++i) {
        if (proj[i] * proj[i] != proj[i])
            throw std::logic_error("alternating projector is not idempotent");
        if (i + 1 < proj.size() && c.d[i] * proj[i] != proj[i + 1] * c.d[i])
            throw std::invalid_argument(
                "alternating projector does not commute with the differential");
    }
    EmbeddedComplex alt;
    for (size_t i = 0; i < c.dims.size(); ++i) {
        alt.basis.push_back(proj[i].column_space());
        alt.dims.push_back(static_cast<int>(alt.basis.back().cols()));
    }
    for (size_t i = 0; i + 1 < c.dims.size(); ++i) {
        auto coords = coords_in_basis(alt.basis[i + 1], c.d[i] * alt.basis[i]);
        if (!coords)
            throw std::logic_error("restricted differential leaves the alternating part");
        alt.d.push_back(*coords);
    }
    return alt;
}

} // namespace germlab
