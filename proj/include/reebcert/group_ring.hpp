#ifndef REEBCERT_GROUP_RING_HPP
#define REEBCERT_GROUP_RING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "reebcert/rational.hpp"

namespace reebcert {

// Exponent vector of a Laurent monomial e^A, A in Z^r.
using Monomial = std::vector<std::int64_t>;

/// An element of Q[Z^r]: a Laurent polynomial in r commuting variables
/// with exact rational coefficients. No stored coefficient is zero.
class GroupRingElem {
public:
    explicit GroupRingElem(int rank) : rank_(rank) {}
    GroupRingElem(int rank, std::map<Monomial, Rational> terms);

    static GroupRingElem zero(int rank) { return GroupRingElem(rank); }
    static GroupRingElem one(int rank);
    static GroupRingElem term(const Monomial &m, const Rational &c);
    static GroupRingElem constant(int rank, const Rational &c);
    // Convenience for the univariate ring Q[t, t^-1].
    static GroupRingElem t_power(std::int64_t k, const Rational &c = 1);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational> &terms() const { return terms_; }

    GroupRingElem operator+(const GroupRingElem &o) const;
    GroupRingElem operator-(const GroupRingElem &o) const;
    GroupRingElem operator-() const;
    GroupRingElem operator*(const GroupRingElem &o) const;
    bool operator==(const GroupRingElem &o) const;
    bool operator!=(const GroupRingElem &o) const { return !(*this == o); }

    // Unit test: a = q e^A with q != 0. Returns q^-1 e^-A when true.
    std::optional<GroupRingElem> unit_inverse() const;
    bool is_unit() const { return unit_inverse().has_value(); }

    // Univariate (rank 1) access.
    std::int64_t min_exp() const; // throws on zero element
    std::int64_t max_exp() const;
    // Newton span: max exponent - min exponent (0 for monomials).
    std::int64_t span() const;
    Rational coeff_at(const Monomial &m) const;

    std::string to_string(const std::vector<std::string> &vars = {}) const;

private:
    void check_rank(const GroupRingElem &o) const;
    void insert_term(const Monomial &m, const Rational &c);

    int rank_;
    std::map<Monomial, Rational> terms_;
};

/// Dense matrix over the group ring; houses differentials and
/// automorphism matrices.
class RingMatrix {
public:
    RingMatrix(int rows, int cols, int rank);
    static RingMatrix identity(int n, int rank);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int rank() const { return rank_; }

    GroupRingElem &at(int i, int j);
    const GroupRingElem &at(int i, int j) const;

    RingMatrix operator*(const RingMatrix &o) const;
    RingMatrix operator+(const RingMatrix &o) const;
    RingMatrix operator-(const RingMatrix &o) const;
    bool operator==(const RingMatrix &o) const;
    bool is_zero() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row_i += f * row_j, col_i += f * col_j
    void add_row_multiple(int i, int j, const GroupRingElem &f);
    void add_col_multiple(int i, int j, const GroupRingElem &f);
    void scale_row(int i, const GroupRingElem &f);
    void scale_col(int j, const GroupRingElem &f);

private:
    int rows_, cols_, rank_;
    std::vector<GroupRingElem> entries_;
};

} // namespace reebcert

#endif
