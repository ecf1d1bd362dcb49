#ifndef REEBCERT_AUTOMORPHISM_HPP
#define REEBCERT_AUTOMORPHISM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reebcert/complexes.hpp"
#include "reebcert/group_ring.hpp"

namespace reebcert {

/// Unit multiplier q * e^A of the group ring.
struct UnitMonomial {
    Rational coeff = 1;
    Monomial exp;

    static UnitMonomial one(int rank) { return {1, Monomial(rank, 0)}; }
    UnitMonomial operator*(const UnitMonomial &o) const;
    UnitMonomial inverse() const;
    bool is_one() const;
    bool operator==(const UnitMonomial &o) const = default;
    GroupRingElem as_ring_elem() const { return GroupRingElem::term(exp, coeff); }
};

/// gamma_i -> multiplier(i) * gamma_{sigma(i)}, over a finite index set
/// or over Z with an index shift. The computational form of a contact
/// homology automorphism induced by a loop of diffeomorphisms.
class MonomialAutomorphism {
public:
    // Finite index set {0..n-1}.
    MonomialAutomorphism(std::vector<int> perm, std::vector<UnitMonomial> multipliers);
    // Z-shift: gamma_k -> multiplier(k) * gamma_{k+shift}; multipliers are
    // `tail` except at finitely many indices.
    MonomialAutomorphism(std::int64_t shift, UnitMonomial tail,
                         std::map<std::int64_t, UnitMonomial> exceptions = {});

    static MonomialAutomorphism identity_finite(int n, int ring_rank);

    bool is_zshift() const { return zshift_; }
    int size() const { return static_cast<int>(perm_.size()); }
    int ring_rank() const;
    std::int64_t shift() const { return shift_; }
    const std::vector<int> &perm() const { return perm_; }
    const std::vector<UnitMonomial> &multipliers() const { return mult_; }
    const UnitMonomial &tail() const { return tail_; }
    const std::map<std::int64_t, UnitMonomial> &exceptions() const { return except_; }
    UnitMonomial multiplier_at(std::int64_t k) const;

    // this after other: (a*b)(x) = a(b(x)).
    MonomialAutomorphism operator*(const MonomialAutomorphism &o) const;
    MonomialAutomorphism inverse() const;
    bool is_identity() const;
    bool operator==(const MonomialAutomorphism &o) const;

    RingMatrix to_matrix() const; // finite only

private:
    MonomialAutomorphism() = default;

    bool zshift_ = false;
    std::vector<int> perm_;
    std::vector<UnitMonomial> mult_;
    std::int64_t shift_ = 0;
    UnitMonomial tail_{1, {}};
    std::map<std::int64_t, UnitMonomial> except_;
};

struct OrderCertificate {
    bool finite = false;
    std::int64_t order = 0; // when finite
    // Infinite witness: a permutation cycle with nonzero total twist, a
    // non-torsion coefficient product, or a nonzero shift.
    std::string witness_kind;          // "cycle-twist" | "coefficient" | "shift"
    std::vector<int> witness_cycle;    // indices, for the finite-index case
    Monomial witness_twist;            // exponent sum around the cycle
    std::int64_t witness_shift = 0;
};

// Exact finite/infinite order with certificate; no power iteration in
// the decision path.
OrderCertificate order(const MonomialAutomorphism &a);

struct LoopData {
    std::vector<int> orbit_permutation;
    std::vector<Monomial> torus_classes; // class of the swept torus, per index
};

// eta on generators: gamma_i -> e^{A_i} gamma_{sigma(i)}.
MonomialAutomorphism automorphism_from_loop(const LoopData &data);

// Rank of the integer lattice spanned by the common exponent vectors of
// commuting pure multiplications.
int subgroup_rank(const std::vector<MonomialAutomorphism> &gens);

// Induced automorphism on a presented homology module; requires the
// relation submodule to be preserved. Multipliers are reduced modulo the
// exponent lattice of principal relations (1 - e^B) gamma = 0.
MonomialAutomorphism act_on_homology(const MonomialAutomorphism &a,
                                     const HomologyPresentation &h);

/// eta_k data for the marked-point families: degree shift k-1 = 2n-2 and
/// multiplier d*t in the marked-point variable.
struct HigherMorphism {
    int degree_shift = 0;
    GroupRingElem multiplier{1};
    bool additive = true;

    HigherMorphism operator+(const HigherMorphism &o) const;
};

HigherMorphism eta_k(std::int64_t d, int n);
// Precomposition with a degree-m sphere map: multiplier m*d*t.
HigherMorphism compose_with_degree(const HigherMorphism &h, std::int64_t m);

} // namespace reebcert

#endif
