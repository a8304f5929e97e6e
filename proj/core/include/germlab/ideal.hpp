#pragma once

#include "germlab/polynomial.hpp"

#include <memory>
#include <optional>
#include <stdexcept>

namespace germlab {

struct MonomialOrder {
    enum class Kind { GrevLex, Lex, Block };
    Kind kind = Kind::GrevLex;
    // Block elimination order: the first `split` ring variables form the
    // dominating block. Must lie strictly inside the variable list.
    int split = 0;

    static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder block(int split) { return {Kind::Block, split}; }

    // three-way comparison: negative if a < b, 0 if equal, positive if a > b
    int cmp(const Exponents& a, const Exponents& b) const;
    bool less(const Exponents& a, const Exponents& b) const { return cmp(a, b) < 0; }
    bool operator==(const MonomialOrder& o) const { return kind == o.kind && split == o.split; }
};

/// Raised when an engine exceeds its configured work budget.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GroebnerConfig {
    size_t spair_budget = 100000;
    int degree_cap = 40;

    static GroebnerConfig& global();
};

/// Ideal in Q[vars]. The generator list is immutable after construction; a
/// reduced Groebner basis (with its order) may be cached at construction time
/// and is shared freely across threads.
class Ideal {
public:
    Ideal() = default;
    Ideal(std::vector<std::string> vars, std::vector<Polynomial> gens);

    static Ideal zero(std::vector<std::string> vars) { return Ideal(std::move(vars), {}); }
    static Ideal unit(std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero_ideal() const;

    bool has_cached_basis() const { return cache_ != nullptr; }
    const std::vector<Polynomial>* cached_basis(const MonomialOrder& order) const;

    std::string str() const;

private:
    friend Ideal groebner_basis(const Ideal&, const MonomialOrder&);

    struct Cache {
        MonomialOrder order;
        std::vector<Polynomial> basis;
    };

    std::vector<std::string> vars_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<const Cache> cache_;
};

/// Reduced Groebner basis of `ideal` for `order`; the result carries the basis
/// both as its generator list and as its cache. Idempotent.
Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order);

/// Fully reduced normal form of f against the reduced basis of `ideal`.
Polynomial normal_form(const Polynomial& f, const Ideal& ideal,
                       const MonomialOrder& order = MonomialOrder::grevlex());

/// Ideal membership via normal form against a reduced Groebner basis.
bool contains(const Ideal& ideal, const Polynomial& f);

/// Elimination ideal I cap Q[keep], returned in the ring Q[keep] (original
/// variable order preserved on the kept block).
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep);

Ideal intersect(const Ideal& a, const Ideal& b);

/// Saturation I : J^infinity.
Ideal saturate(const Ideal& ideal, const Ideal& by);

/// Sum of ideals (same ring).
Ideal sum(const Ideal& a, const Ideal& b);

/// Exact radical membership: f in sqrt(I)? Tries small powers against the
/// cached basis first, then decides via Rabinowitsch.
bool radical_contains(const Ideal& ideal, const Polynomial& f, int power_cap = 6);

enum class RadicalCompare { Equal, Distinct, Inconclusive };

/// Set-theoretic comparison V(a) == V(b) through mutual radical membership of
/// generators. Inconclusive only when a resource limit interrupts the check.
RadicalCompare radical_equal(const Ideal& a, const Ideal& b, int power_cap = 6);

/// Krull dimension of V(I) in affine space: -1 encodes the empty variety.
int global_dim(const Ideal& ideal);

struct OriginDim {
    bool empty = false;          // origin not on V(I), or V(I) empty
    int dim = -1;                // dimension of the union of components through 0
    bool certified_local = true; // false: global dimension reported as fallback
};

/// Dimension at the origin of V(I) per the poly_core contract. Exact whenever
/// a quasi-homogeneity certificate is found or component isolation succeeds;
/// otherwise reports the global dimension with certified_local = false.
OriginDim dim_at_origin(const Ideal& ideal);

/// Q-vector-space dimension of Q[vars]/I (staircase count); nullopt when the
/// quotient is not finite dimensional.
std::optional<long> vspace_dim(const Ideal& ideal);

/// Positive weight vector making every generator quasi-homogeneous, if one is
/// found by the bounded search. Certificate only: nullopt does not disprove.
std::optional<std::vector<Rational>> quasi_homogeneous_weights(const std::vector<Polynomial>& gens);

/// Fresh variable name not colliding with `taken`, derived from `stem`.
std::string fresh_var(const std::vector<std::string>& taken, const std::string& stem);

} // namespace germlab
