#include "reebcert/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "reebcert/laurent_snf.hpp"

namespace reebcert {

UnitMonomial UnitMonomial::operator*(const UnitMonomial &o) const
{
    if (exp.size() != o.exp.size())
        throw std::invalid_argument("unit monomial rank mismatch");
    UnitMonomial out{coeff * o.coeff, exp};
    for (std::size_t i = 0; i < exp.size(); ++i) out.exp[i] += o.exp[i];
    return out;
}

UnitMonomial UnitMonomial::inverse() const
{
    UnitMonomial out{Rational(1) / coeff, exp};
    for (auto &e : out.exp) e = -e;
    return out;
}

bool UnitMonomial::is_one() const
{
    return coeff == 1 &&
           std::all_of(exp.begin(), exp.end(), [](std::int64_t e) { return e == 0; });
}

MonomialAutomorphism::MonomialAutomorphism(std::vector<int> perm,
                                           std::vector<UnitMonomial> multipliers)
    : zshift_(false), perm_(std::move(perm)), mult_(std::move(multipliers))
{
    const int n = static_cast<int>(perm_.size());
    if (mult_.size() != perm_.size())
        throw std::invalid_argument("one multiplier per index required");
    std::vector<bool> seen(n, false);
    for (int p : perm_) {
        if (p < 0 || p >= n || seen[p])
            throw std::invalid_argument("permutation is not a bijection");
        seen[p] = true;
    }
    for (const auto &u : mult_) {
        if (u.coeff == 0) throw std::invalid_argument("multiplier must be a unit");
        if (u.exp.size() != mult_.front().exp.size())
            throw std::invalid_argument("multiplier rank mismatch");
    }
}

MonomialAutomorphism::MonomialAutomorphism(std::int64_t shift, UnitMonomial tail,
                                           std::map<std::int64_t, UnitMonomial> exceptions)
    : zshift_(true), shift_(shift), tail_(std::move(tail)), except_(std::move(exceptions))
{
    if (tail_.coeff == 0) throw std::invalid_argument("multiplier must be a unit");
    for (auto it = except_.begin(); it != except_.end();) {
        if (it->second.coeff == 0)
            throw std::invalid_argument("multiplier must be a unit");
        if (it->second.exp.size() != tail_.exp.size())
            throw std::invalid_argument("multiplier rank mismatch");
        if (it->second == tail_)
            it = except_.erase(it);
        else
            ++it;
    }
}

MonomialAutomorphism MonomialAutomorphism::identity_finite(int n, int ring_rank)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return MonomialAutomorphism(std::move(perm),
                                std::vector<UnitMonomial>(n, UnitMonomial::one(ring_rank)));
}

int MonomialAutomorphism::ring_rank() const
{
    if (zshift_) return static_cast<int>(tail_.exp.size());
    return mult_.empty() ? 0 : static_cast<int>(mult_.front().exp.size());
}

UnitMonomial MonomialAutomorphism::multiplier_at(std::int64_t k) const
{
    if (zshift_) {
        auto it = except_.find(k);
        return it == except_.end() ? tail_ : it->second;
    }
    return mult_.at(static_cast<std::size_t>(k));
}

MonomialAutomorphism MonomialAutomorphism::operator*(const MonomialAutomorphism &o) const
{
    if (zshift_ != o.zshift_)
        throw std::invalid_argument("cannot compose finite and shift automorphisms");
    if (ring_rank() != o.ring_rank())
        throw std::invalid_argument("ring rank mismatch in composition");

    if (!zshift_) {
        if (size() != o.size())
            throw std::invalid_argument("index set size mismatch in composition");
        const int n = size();
        std::vector<int> perm(n);
        std::vector<UnitMonomial> mult;
        mult.reserve(n);
        for (int i = 0; i < n; ++i) {
            perm[i] = perm_[o.perm_[i]];
            mult.push_back(o.mult_[i] * mult_[o.perm_[i]]);
        }
        return MonomialAutomorphism(std::move(perm), std::move(mult));
    }

    MonomialAutomorphism out;
    out.zshift_ = true;
    out.shift_ = shift_ + o.shift_;
    out.tail_ = o.tail_ * tail_;
    std::map<std::int64_t, UnitMonomial> ex;
    for (const auto &[k, u] : o.except_) ex[k] = u * multiplier_at(k + o.shift_);
    for (const auto &[k, u] : except_) {
        const std::int64_t j = k - o.shift_;
        if (!ex.count(j)) ex[j] = o.multiplier_at(j) * u;
    }
    for (auto it = ex.begin(); it != ex.end();)
        it = (it->second == out.tail_) ? ex.erase(it) : std::next(it);
    out.except_ = std::move(ex);
    return out;
}

MonomialAutomorphism MonomialAutomorphism::inverse() const
{
    if (!zshift_) {
        const int n = size();
        std::vector<int> perm(n);
        std::vector<UnitMonomial> mult(n, UnitMonomial::one(ring_rank()));
        for (int i = 0; i < n; ++i) {
            perm[perm_[i]] = i;
            mult[perm_[i]] = mult_[i].inverse();
        }
        return MonomialAutomorphism(std::move(perm), std::move(mult));
    }
    MonomialAutomorphism out;
    out.zshift_ = true;
    out.shift_ = -shift_;
    out.tail_ = tail_.inverse();
    for (const auto &[k, u] : except_) out.except_[k + shift_] = u.inverse();
    return out;
}

bool MonomialAutomorphism::is_identity() const
{
    if (zshift_) {
        if (shift_ != 0 || !tail_.is_one()) return false;
        return std::all_of(except_.begin(), except_.end(),
                           [](const auto &kv) { return kv.second.is_one(); });
    }
    for (int i = 0; i < size(); ++i)
        if (perm_[i] != i || !mult_[i].is_one()) return false;
    return true;
}

bool MonomialAutomorphism::operator==(const MonomialAutomorphism &o) const
{
    if (zshift_ != o.zshift_) return false;
    if (zshift_)
        return shift_ == o.shift_ && tail_ == o.tail_ && except_ == o.except_;
    return perm_ == o.perm_ && mult_ == o.mult_;
}

RingMatrix MonomialAutomorphism::to_matrix() const
{
    if (zshift_) throw std::logic_error("shift automorphism has no finite matrix");
    const int n = size();
    RingMatrix m(n, n, ring_rank());
    for (int i = 0; i < n; ++i) m.at(perm_[i], i) = mult_[i].as_ring_elem();
    return m;
}

OrderCertificate order(const MonomialAutomorphism &a)
{
    OrderCertificate cert;
    if (a.is_zshift()) {
        if (a.shift() != 0) {
            cert.finite = false;
            cert.witness_kind = "shift";
            cert.witness_shift = a.shift();
            return cert;
        }
        auto units = std::vector<UnitMonomial>{a.tail()};
        for (const auto &[k, u] : a.exceptions()) units.push_back(u);
        std::int64_t ord = 1;
        for (const auto &u : units) {
            if (std::any_of(u.exp.begin(), u.exp.end(),
                            [](std::int64_t e) { return e != 0; })) {
                cert.finite = false;
                cert.witness_kind = "cycle-twist";
                cert.witness_twist = u.exp;
                return cert;
            }
            if (u.coeff == -1)
                ord = std::lcm(ord, std::int64_t(2));
            else if (u.coeff != 1) {
                cert.finite = false;
                cert.witness_kind = "coefficient";
                return cert;
            }
        }
        cert.finite = true;
        cert.order = ord;
        return cert;
    }

    const int n = a.size();
    std::vector<bool> seen(n, false);
    std::int64_t ord = 1;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        Monomial twist(a.ring_rank(), 0);
        Rational prod = 1;
        int i = start;
        do {
            seen[i] = true;
            cycle.push_back(i);
            const UnitMonomial &u = a.multipliers()[i];
            for (std::size_t j = 0; j < twist.size(); ++j) twist[j] += u.exp[j];
            prod *= u.coeff;
            i = a.perm()[i];
        } while (i != start);

        if (std::any_of(twist.begin(), twist.end(),
                        [](std::int64_t e) { return e != 0; })) {
            cert.finite = false;
            cert.witness_kind = "cycle-twist";
            cert.witness_cycle = cycle;
            cert.witness_twist = twist;
            return cert;
        }
        if (prod != 1 && prod != -1) {
            cert.finite = false;
            cert.witness_kind = "coefficient";
            cert.witness_cycle = cycle;
            return cert;
        }
        const std::int64_t len = static_cast<std::int64_t>(cycle.size());
        ord = std::lcm(ord, len * (prod == 1 ? 1 : 2));
    }
    cert.finite = true;
    cert.order = ord;
    return cert;
}

MonomialAutomorphism automorphism_from_loop(const LoopData &data)
{
    if (data.orbit_permutation.size() != data.torus_classes.size())
        throw std::invalid_argument("torus classes must be defined on all indices");
    std::vector<UnitMonomial> mult;
    mult.reserve(data.torus_classes.size());
    for (const auto &cls : data.torus_classes) mult.push_back({1, cls});
    return MonomialAutomorphism(data.orbit_permutation, std::move(mult));
}

int subgroup_rank(const std::vector<MonomialAutomorphism> &gens)
{
    std::vector<Monomial> rows;
    for (const auto &g : gens) {
        if (g.is_zshift())
            throw std::invalid_argument("subgroup_rank requires finite pure multiplications");
        const int n = g.size();
        if (n == 0) throw std::invalid_argument("empty automorphism");
        for (int i = 0; i < n; ++i)
            if (g.perm()[i] != i)
                throw std::invalid_argument("subgroup_rank requires identity permutations");
        const Monomial common = g.multipliers().front().exp;
        for (const auto &u : g.multipliers())
            if (u.exp != common)
                throw std::invalid_argument(
                    "subgroup_rank requires a common exponent vector per generator");
        rows.push_back(common);
    }
    if (rows.empty()) return 0;

    // Rational row reduction of the exponent matrix.
    const std::size_t r = rows.front().size();
    std::vector<std::vector<Rational>> m;
    for (const auto &row : rows) {
        if (row.size() != r) throw std::invalid_argument("exponent rank mismatch");
        m.emplace_back(row.begin(), row.end());
    }
    int rank = 0;
    for (std::size_t col = 0; col < r && rank < static_cast<int>(m.size()); ++col) {
        std::size_t piv = m.size();
        for (std::size_t i = rank; i < m.size(); ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (static_cast<int>(i) == rank || m[i][col] == 0) continue;
            const Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < r; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

// Principal relation columns (single nonzero entry of the form
// u * (1 - e^B)): exponent vector B per generator row.
struct PrincipalRelations {
    bool all_principal = true;
    std::vector<std::vector<Monomial>> per_row;
};

PrincipalRelations principal_relations(const HomologyPresentation &h, int rank)
{
    PrincipalRelations pr;
    pr.per_row.resize(h.generators);
    for (int j = 0; j < h.relations.cols(); ++j) {
        int row = -1;
        for (int i = 0; i < h.relations.rows(); ++i)
            if (!h.relations.at(i, j).is_zero()) {
                if (row >= 0) {
                    pr.all_principal = false;
                    row = -2;
                    break;
                }
                row = i;
            }
        if (row < 0) {
            if (row == -2) pr.all_principal = false;
            continue; // zero column
        }
        const GroupRingElem &e = h.relations.at(row, j);
        if (e.term_count() != 2) {
            pr.all_principal = false;
            continue;
        }
        const auto &t0 = *e.terms().begin();
        const auto &t1 = *std::next(e.terms().begin());
        if (t0.second + t1.second != 0) {
            pr.all_principal = false;
            continue;
        }
        Monomial b(rank);
        for (int k = 0; k < rank; ++k) b[k] = t1.first[k] - t0.first[k];
        pr.per_row[row].push_back(b);
    }
    return pr;
}

// Row-style Hermite reduction of an exponent vector modulo the lattice
// spanned by `basis`.
Monomial reduce_mod_lattice(Monomial e, std::vector<Monomial> basis)
{
    if (basis.empty()) return e;
    const std::size_t r = e.size();
    // Integer row echelon with positive pivots.
    std::vector<Monomial> rows = std::move(basis);
    std::size_t top = 0;
    for (std::size_t col = 0; col < r && top < rows.size(); ++col) {
        for (;;) {
            std::size_t piv = rows.size();
            std::int64_t best = 0;
            for (std::size_t i = top; i < rows.size(); ++i)
                if (rows[i][col] != 0 &&
                    (best == 0 || std::abs(rows[i][col]) < best)) {
                    best = std::abs(rows[i][col]);
                    piv = i;
                }
            if (piv == rows.size()) break;
            std::swap(rows[top], rows[piv]);
            bool again = false;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                const std::int64_t q = rows[i][col] / rows[top][col];
                for (std::size_t j = 0; j < r; ++j) rows[i][j] -= q * rows[top][j];
                if (rows[i][col] != 0) again = true;
            }
            if (!again) break;
        }
        if (rows[top][col] != 0) {
            if (rows[top][col] < 0)
                for (auto &x : rows[top]) x = -x;
            ++top;
        }
    }
    rows.resize(top);
    // Reduce e by each pivot row, floor-style for a canonical representative.
    for (const auto &row : rows) {
        std::size_t col = 0;
        while (col < r && row[col] == 0) ++col;
        if (col == r) continue;
        std::int64_t q = e[col] / row[col];
        if (e[col] % row[col] < 0) --q;
        for (std::size_t j = 0; j < r; ++j) e[j] -= q * row[j];
    }
    return e;
}

} // namespace

MonomialAutomorphism act_on_homology(const MonomialAutomorphism &a,
                                     const HomologyPresentation &h)
{
    if (a.is_zshift())
        throw std::invalid_argument("act_on_homology requires a finite automorphism");
    if (a.size() != h.generators)
        throw std::invalid_argument("automorphism size does not match generators");
    if (h.relations.cols() == 0) return a;
    const int rank = a.ring_rank();
    if (rank != h.relations.rank())
        throw std::invalid_argument("ring rank mismatch with presentation");

    const RingMatrix m = a.to_matrix();
    const RingMatrix image = m * h.relations;

    if (rank == 1) {
        // Exact membership test via the Smith form of the relations.
        const SmithResult s = snf_univariate(h.relations);
        const RingMatrix y = s.u * image;
        for (int j = 0; j < y.cols(); ++j)
            for (int i = 0; i < y.rows(); ++i) {
                const bool in_diag = i < std::min(s.d.rows(), s.d.cols());
                const GroupRingElem d =
                    in_diag ? s.d.at(i, i) : GroupRingElem(1);
                if (!laurent_divides(d, y.at(i, j)))
                    throw std::invalid_argument(
                        "not a chain map: relation column " + std::to_string(j) +
                        " leaves the relation submodule");
            }
    } else {
        const PrincipalRelations pr = principal_relations(h, rank);
        if (!pr.all_principal)
            throw std::invalid_argument(
                "multivariate presentations supported for principal relations only");
        for (int j = 0; j < h.relations.cols(); ++j) {
            int src = -1;
            for (int i = 0; i < h.relations.rows(); ++i)
                if (!h.relations.at(i, j).is_zero()) src = i;
            if (src < 0) continue;
            const int dst = a.perm()[src];
            // (1 - e^B) maps to a multiple of some (1 - e^B') at the target
            // iff B is an integer multiple of B'.
            bool ok = false;
            const Monomial red = reduce_mod_lattice(pr.per_row[src][0], pr.per_row[dst]);
            ok = std::all_of(red.begin(), red.end(),
                             [](std::int64_t x) { return x == 0; });
            if (!ok)
                throw std::invalid_argument("not a chain map: relation column " +
                                            std::to_string(j) +
                                            " leaves the relation submodule");
        }
    }

    // Induced map: reduce multiplier exponents modulo the principal
    // relation lattice at the target generator.
    const PrincipalRelations pr = principal_relations(h, rank);
    std::vector<UnitMonomial> mult = a.multipliers();
    for (int i = 0; i < a.size(); ++i) {
        const int dst = a.perm()[i];
        mult[i].exp = reduce_mod_lattice(mult[i].exp, pr.per_row[dst]);
    }
    return MonomialAutomorphism(a.perm(), std::move(mult));
}

HigherMorphism HigherMorphism::operator+(const HigherMorphism &o) const
{
    if (degree_shift != o.degree_shift)
        throw std::invalid_argument("cannot add morphisms of different degree shifts");
    return {degree_shift, multiplier + o.multiplier, additive && o.additive};
}

HigherMorphism eta_k(std::int64_t d, int n)
{
    if (n < 2)
        throw std::invalid_argument("marked-point morphism requires n >= 2");
    return {2 * n - 2, GroupRingElem::t_power(1, Rational(d)), true};
}

HigherMorphism compose_with_degree(const HigherMorphism &h, std::int64_t m)
{
    return {h.degree_shift, GroupRingElem::constant(1, Rational(m)) * h.multiplier,
            h.additive};
}

} // namespace reebcert
