#include "reebcert/laurent_snf.hpp"

#include <stdexcept>
#include <vector>

namespace reebcert {

namespace {

void require_univariate(const GroupRingElem &e)
{
    if (e.rank() != 1)
        throw std::invalid_argument("operation requires the univariate Laurent ring");
}

// Dense coefficient vector of a / t^{min_exp(a)}.
std::vector<Rational> to_poly(const GroupRingElem &a, std::int64_t &ord)
{
    ord = a.min_exp();
    std::vector<Rational> c(static_cast<std::size_t>(a.span()) + 1, Rational(0));
    for (const auto &[m, q] : a.terms()) c[static_cast<std::size_t>(m[0] - ord)] = q;
    return c;
}

GroupRingElem from_poly(const std::vector<Rational> &c, std::int64_t ord)
{
    GroupRingElem out(1);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            out = out + GroupRingElem::t_power(ord + static_cast<std::int64_t>(i), c[i]);
    return out;
}

} // namespace

std::pair<GroupRingElem, GroupRingElem> laurent_divmod(const GroupRingElem &a,
                                                       const GroupRingElem &b)
{
    require_univariate(a);
    require_univariate(b);
    if (b.is_zero()) throw std::invalid_argument("laurent division by zero");
    if (a.is_zero()) return {GroupRingElem(1), GroupRingElem(1)};

    std::int64_t ord_a, ord_b;
    std::vector<Rational> pa = to_poly(a, ord_a);
    const std::vector<Rational> pb = to_poly(b, ord_b);

    const std::size_t db = pb.size() - 1;
    std::vector<Rational> q;
    if (pa.size() > db) {
        q.assign(pa.size() - db, Rational(0));
        for (std::size_t shift = pa.size() - db; shift-- > 0;) {
            const std::size_t i = shift + db;
            if (pa[i] == 0) continue;
            const Rational f = pa[i] / pb[db];
            q[shift] = f;
            for (std::size_t j = 0; j <= db; ++j) pa[shift + j] -= f * pb[j];
        }
    }
    // pa now holds the remainder, of degree < db.
    GroupRingElem qq = from_poly(q, ord_a - ord_b);
    GroupRingElem rr = from_poly(pa, ord_a);
    return {qq, rr};
}

bool laurent_divides(const GroupRingElem &b, const GroupRingElem &a)
{
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return laurent_divmod(a, b).second.is_zero();
}

GroupRingElem normalizing_unit(const GroupRingElem &a)
{
    require_univariate(a);
    if (a.is_zero()) throw std::invalid_argument("cannot normalize zero");
    const Rational lead = a.coeff_at(Monomial{a.max_exp()});
    return GroupRingElem::t_power(-a.min_exp(), Rational(1) / lead);
}

SmithResult snf_univariate(const RingMatrix &m)
{
    if (m.rank() != 1)
        throw std::invalid_argument("snf supported over Q[t,t^-1] only (ring rank 1)");

    const int nr = m.rows(), nc = m.cols();
    SmithResult s{RingMatrix::identity(nr, 1), m, RingMatrix::identity(nc, 1),
                  RingMatrix::identity(nr, 1), RingMatrix::identity(nc, 1)};
    RingMatrix &d = s.d;

    auto row_op = [&](int i, int j, const GroupRingElem &f) {
        d.add_row_multiple(i, j, f);
        s.u.add_row_multiple(i, j, f);
        s.u_inv.add_col_multiple(j, i, -f);
    };
    auto col_op = [&](int i, int j, const GroupRingElem &f) {
        d.add_col_multiple(i, j, f);
        s.v.add_col_multiple(i, j, f);
        s.v_inv.add_row_multiple(j, i, -f);
    };
    auto swap_rows = [&](int i, int j) {
        d.swap_rows(i, j);
        s.u.swap_rows(i, j);
        s.u_inv.swap_cols(i, j);
    };
    auto swap_cols = [&](int i, int j) {
        d.swap_cols(i, j);
        s.v.swap_cols(i, j);
        s.v_inv.swap_rows(i, j);
    };

    const int steps = std::min(nr, nc);
    for (int k = 0; k < steps; ++k) {
        // Pivot: minimal Newton span in the trailing submatrix, lexicographic
        // tie-break for determinism.
        int pi = -1, pj = -1;
        std::int64_t best = -1;
        for (int i = k; i < nr; ++i)
            for (int j = k; j < nc; ++j) {
                const GroupRingElem &e = d.at(i, j);
                if (e.is_zero()) continue;
                if (pi < 0 || e.span() < best) {
                    pi = i;
                    pj = j;
                    best = e.span();
                }
            }
        if (pi < 0) break; // trailing submatrix is zero

        for (;;) {
            swap_rows(k, pi);
            swap_cols(k, pj);

            bool clean = true;
            for (int i = k + 1; i < nr; ++i) {
                if (d.at(i, k).is_zero()) continue;
                auto [q, r] = laurent_divmod(d.at(i, k), d.at(k, k));
                row_op(i, k, -q);
                if (!r.is_zero()) clean = false;
            }
            for (int j = k + 1; j < nc; ++j) {
                if (d.at(k, j).is_zero()) continue;
                auto [q, r] = laurent_divmod(d.at(k, j), d.at(k, k));
                col_op(j, k, -q);
                if (!r.is_zero()) clean = false;
            }

            if (clean) {
                // Pivot must divide every remaining entry for the chain
                // d_i | d_{i+1}.
                bool fixed = false;
                for (int i = k + 1; i < nr && !fixed; ++i)
                    for (int j = k + 1; j < nc && !fixed; ++j)
                        if (!laurent_divides(d.at(k, k), d.at(i, j))) {
                            row_op(k, i, GroupRingElem::one(1));
                            fixed = true;
                        }
                if (!fixed) break;
            }

            // Re-pivot: remainders strictly decreased the minimal span.
            pi = -1;
            pj = -1;
            best = -1;
            for (int i = k; i < nr; ++i)
                for (int j = k; j < nc; ++j) {
                    const GroupRingElem &e = d.at(i, j);
                    if (e.is_zero()) continue;
                    if (pi < 0 || e.span() < best) {
                        pi = i;
                        pj = j;
                        best = e.span();
                    }
                }
        }
    }

    // Unit normalization of the diagonal.
    for (int k = 0; k < steps; ++k) {
        if (d.at(k, k).is_zero()) continue;
        const GroupRingElem unit = normalizing_unit(d.at(k, k));
        d.scale_row(k, unit);
        s.u.scale_row(k, unit);
        s.u_inv.scale_col(k, *unit.unit_inverse());
    }
    return s;
}

} // namespace reebcert
