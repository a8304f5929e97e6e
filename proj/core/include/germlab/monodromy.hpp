#pragma once

#include "germlab/qlinalg.hpp"
#include "germlab/qpoly.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace germlab {

/// Raised when a matrix has an eigenvalue that is not a root of unity.
class NonCyclotomicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root of unity exp(2*pi*i * exponent / order) with gcd(exponent, order) = 1.
struct Eigenvalue {
    long order = 1;
    long exponent = 0;
    auto operator<=>(const Eigenvalue&) const = default;
    std::string str() const;
};

/// Finitely generated torsion C[s,1/s]-module, stored as the multiset of
/// (eigenvalue, block size) invariant factors of its Jordan decomposition.
class JordanModule {
public:
    void add(const Eigenvalue& lambda, int size, long count = 1);

    bool is_zero() const { return blocks_.empty(); }
    std::set<Eigenvalue> support() const;
    int max_block_size() const; // J; 0 for the zero module by convention
    long dimension() const;     // underlying C-vector-space dimension

    JordanModule direct_sum(const JordanModule& o) const;

    const std::map<Eigenvalue, std::map<int, long>>& blocks() const { return blocks_; }
    bool operator==(const JordanModule& o) const = default;

private:
    std::map<Eigenvalue, std::map<int, long>> blocks_;
};

/// Euler totient.
long totient(long m);

/// Coefficients of the m-th cyclotomic polynomial.
qpoly::Poly cyclotomic(long m);

/// Jordan data of an invertible rational matrix whose characteristic
/// polynomial splits into cyclotomic factors; throws NonCyclotomicError
/// otherwise. Eigenvalues are reported as all primitive m-th roots per factor.
JordanModule jordan_data(const QMat& h);

struct MonodromyMatrix {
    QMat matrix;
    int degree = 0;
};

struct Cm1Report {
    JordanModule middle;      // Jordan data of B
    JordanModule subquotient; // Jordan data of ker v / im u with its induced action
    bool supp_contained = false;
    bool j_bounded = false;
    bool ok() const { return supp_contained && j_bounded; }
};

/// Lemma on subquotients: for a complex A -u-> B -v-> C of torsion modules,
/// supp(ker v/im u) is contained in supp(B) and J(ker v/im u) <= J(B).
/// Validates v*u = 0 and equivariance of u, v before computing.
Cm1Report check_cm1(const QMat& u, const QMat& v, const QMat& h_a, const QMat& h_b,
                    const QMat& h_c);

struct Cm2Report {
    JordanModule a, b, c;
    bool supp_equal = false;
    bool lower_bound = false; // max{J(A), J(C)} <= J(B)
    bool upper_bound = false; // J(B) <= J(A) + J(C)
    bool ok() const { return supp_equal && lower_bound && upper_bound; }
};

/// Lemma on short exact sequences 0 -> A -i-> B -p-> C -> 0: validates
/// exactness and equivariance, then checks supp(B) = supp(A) u supp(C) and
/// max{J(A), J(C)} <= J(B) <= J(A) + J(C).
Cm2Report check_cm2(const QMat& i, const QMat& p, const QMat& h_a, const QMat& h_b,
                    const QMat& h_c);

struct IsolatedDegreeBound {
    int k = 0;
    int degree = 0; // kn - (k-1)(p-1)
    int bound = 0;  // kn - (k-1)p + 1
};

struct MonodromyBoundsReport {
    int ell = 0;
    long general_bound = 0; // ell(ell+1)/2
    bool isolated_applicable = false;
    std::vector<IsolatedDegreeBound> isolated; // for p > n+1 with isolated instability
};

/// Jordan-block bounds for the monodromy of a disentanglement: the general
/// ell(ell+1)/2 bound, and for isolated instability with p > n+1 the list of
/// possibly nonzero degrees with their per-degree bounds.
MonodromyBoundsReport monodromy_bounds(int n, int p, int ell, bool isolated_instability);

} // namespace germlab
