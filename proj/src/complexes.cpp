#include "reebcert/complexes.hpp"

#include <stdexcept>

#include "reebcert/laurent_snf.hpp"

namespace reebcert {

bool verify_complex(const GradedComplex &c)
{
    for (const auto &[deg, d] : c.differentials) {
        if (d.rank() != c.ring_rank)
            throw std::invalid_argument("differential ring rank mismatch");
        if (d.cols() != c.rank_at(deg) || d.rows() != c.rank_at(deg - 1))
            throw std::invalid_argument("differential shape inconsistent with ranks");
    }
    for (const auto &[deg, d] : c.differentials) {
        auto lower = c.differentials.find(deg - 1);
        if (lower == c.differentials.end()) continue;
        if (!(lower->second * d).is_zero()) return false;
    }
    return true;
}

HomologyPresentation homology(const GradedComplex &c, int degree)
{
    if (!verify_complex(c))
        throw std::invalid_argument("d o d != 0: not a chain complex");

    const int n = c.rank_at(degree);
    auto out_it = c.differentials.find(degree);
    auto in_it = c.differentials.find(degree + 1);
    const int in_cols = in_it == c.differentials.end() ? 0 : in_it->second.cols();

    HomologyPresentation h;
    h.degree = degree;

    const bool zero_out =
        out_it == c.differentials.end() || out_it->second.is_zero();

    if (zero_out) {
        // Kernel is everything; relations are the incoming columns.
        h.generators = n;
        h.relations = RingMatrix(n, in_cols, c.ring_rank);
        for (int j = 0; j < in_cols; ++j)
            for (int i = 0; i < n; ++i) h.relations.at(i, j) = in_it->second.at(i, j);
    } else {
        if (c.ring_rank != 1)
            throw std::invalid_argument(
                "homology with nonzero outgoing differential needs ring rank 1");
        // Kernel basis from the Smith form of the outgoing differential.
        const SmithResult s = snf_univariate(out_it->second);
        std::vector<int> kernel_cols;
        for (int j = 0; j < n; ++j)
            if (j >= s.d.rows() || s.d.at(j, j).is_zero()) kernel_cols.push_back(j);
        h.generators = static_cast<int>(kernel_cols.size());
        h.relations = RingMatrix(h.generators, in_cols, 1);
        if (in_cols > 0) {
            const RingMatrix z = s.v_inv * in_it->second;
            for (int j = 0; j < in_cols; ++j)
                for (int g = 0; g < h.generators; ++g)
                    h.relations.at(g, j) = z.at(kernel_cols[g], j);
        }
    }

    if (c.ring_rank == 1) {
        std::vector<GroupRingElem> factors;
        if (h.relations.cols() == 0) {
            factors.assign(h.generators, GroupRingElem(1));
        } else {
            const SmithResult rs = snf_univariate(h.relations);
            for (int g = 0; g < h.generators; ++g) {
                if (g < rs.d.rows() && g < rs.d.cols())
                    factors.push_back(rs.d.at(g, g));
                else
                    factors.push_back(GroupRingElem(1));
            }
        }
        h.normal_form = std::move(factors);
    }
    return h;
}

GradedComplex build_morse_bott(const std::vector<OrbitGeneratorPair> &families,
                               MorseBottMode mode, int ring_rank,
                               const Monomial &relation_class, int degree_offset)
{
    if (families.empty())
        throw std::invalid_argument("build_morse_bott: no orbit families");
    for (const auto &f : families)
        if (f.degree_top != f.degree_bottom + 1)
            throw std::invalid_argument("orbit generator pair degrees must be adjacent");
    if (mode == MorseBottMode::Full &&
        static_cast<int>(relation_class.size()) != ring_rank)
        throw std::invalid_argument("relation class length does not match ring rank");

    const int n = static_cast<int>(families.size());
    const int top = degree_offset;
    GradedComplex c;
    c.ring_rank = ring_rank;
    c.rank_at_degree[top] = n;
    c.rank_at_degree[top - 1] = n;

    RingMatrix d(n, n, ring_rank);
    if (mode == MorseBottMode::Full) {
        const GroupRingElem rel =
            GroupRingElem::one(ring_rank) - GroupRingElem::term(relation_class, 1);
        for (int i = 0; i < n; ++i) d.at(i, i) = rel;
    }
    c.differentials.emplace(top, std::move(d));
    return c;
}

std::vector<long long> torus_betti(int m)
{
    if (m < 1) throw std::domain_error("torus_betti requires m >= 1");
    std::vector<long long> row{1};
    for (int i = 0; i < m; ++i) {
        std::vector<long long> next(row.size() + 1, 1);
        for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row;
}

} // namespace reebcert
