#include "reebcert/group_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace reebcert {

GroupRingElem::GroupRingElem(int rank, std::map<Monomial, Rational> terms)
    : rank_(rank), terms_(std::move(terms))
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (static_cast<int>(it->first.size()) != rank_)
            throw std::invalid_argument("monomial length does not match ring rank");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

GroupRingElem GroupRingElem::one(int rank)
{
    return term(Monomial(rank, 0), 1);
}

GroupRingElem GroupRingElem::term(const Monomial &m, const Rational &c)
{
    GroupRingElem e(static_cast<int>(m.size()));
    if (c != 0) e.terms_[m] = c;
    return e;
}

GroupRingElem GroupRingElem::constant(int rank, const Rational &c)
{
    return term(Monomial(rank, 0), c);
}

GroupRingElem GroupRingElem::t_power(std::int64_t k, const Rational &c)
{
    return term(Monomial{k}, c);
}

void GroupRingElem::check_rank(const GroupRingElem &o) const
{
    if (rank_ != o.rank_)
        throw std::invalid_argument("group ring elements over different ranks");
}

void GroupRingElem::insert_term(const Monomial &m, const Rational &c)
{
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem &o) const
{
    check_rank(o);
    GroupRingElem out = *this;
    for (const auto &[m, c] : o.terms_) out.insert_term(m, c);
    return out;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem &o) const
{
    check_rank(o);
    GroupRingElem out = *this;
    for (const auto &[m, c] : o.terms_) out.insert_term(m, -c);
    return out;
}

GroupRingElem GroupRingElem::operator-() const
{
    GroupRingElem out(rank_);
    for (const auto &[m, c] : terms_) out.terms_[m] = -c;
    return out;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem &o) const
{
    check_rank(o);
    GroupRingElem out(rank_);
    Monomial sum(rank_);
    for (const auto &[ma, ca] : terms_) {
        for (const auto &[mb, cb] : o.terms_) {
            for (int i = 0; i < rank_; ++i) sum[i] = ma[i] + mb[i];
            out.insert_term(sum, ca * cb);
        }
    }
    return out;
}

bool GroupRingElem::operator==(const GroupRingElem &o) const
{
    return rank_ == o.rank_ && terms_ == o.terms_;
}

std::optional<GroupRingElem> GroupRingElem::unit_inverse() const
{
    if (terms_.size() != 1) return std::nullopt;
    const auto &[m, c] = *terms_.begin();
    Monomial neg(rank_);
    for (int i = 0; i < rank_; ++i) neg[i] = -m[i];
    return term(neg, Rational(1) / c);
}

std::int64_t GroupRingElem::min_exp() const
{
    if (rank_ != 1) throw std::logic_error("min_exp requires a univariate element");
    if (terms_.empty()) throw std::logic_error("min_exp of zero element");
    return terms_.begin()->first[0];
}

std::int64_t GroupRingElem::max_exp() const
{
    if (rank_ != 1) throw std::logic_error("max_exp requires a univariate element");
    if (terms_.empty()) throw std::logic_error("max_exp of zero element");
    return terms_.rbegin()->first[0];
}

std::int64_t GroupRingElem::span() const
{
    return max_exp() - min_exp();
}

Rational GroupRingElem::coeff_at(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string GroupRingElem::to_string(const std::vector<std::string> &vars) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Rational a = abs(c);
        const bool trivial_mono =
            std::all_of(m.begin(), m.end(), [](std::int64_t e) { return e == 0; });
        if (a != 1 || trivial_mono) os << rational_to_string(a);
        if (!trivial_mono) {
            bool star = (a != 1);
            for (int i = 0; i < rank_; ++i) {
                if (m[i] == 0) continue;
                if (star) os << "*";
                star = true;
                if (static_cast<int>(vars.size()) > i) os << vars[i];
                else if (rank_ == 1) os << "t";
                else os << "x" << i;
                if (m[i] != 1) os << "^" << m[i];
            }
        }
    }
    return os.str();
}

RingMatrix::RingMatrix(int rows, int cols, int rank)
    : rows_(rows), cols_(cols), rank_(rank),
      entries_(static_cast<std::size_t>(rows) * cols, GroupRingElem(rank))
{
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

RingMatrix RingMatrix::identity(int n, int rank)
{
    RingMatrix m(n, n, rank);
    for (int i = 0; i < n; ++i) m.at(i, i) = GroupRingElem::one(rank);
    return m;
}

GroupRingElem &RingMatrix::at(int i, int j)
{
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("matrix index");
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

const GroupRingElem &RingMatrix::at(int i, int j) const
{
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("matrix index");
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

RingMatrix RingMatrix::operator*(const RingMatrix &o) const
{
    if (cols_ != o.rows_ || rank_ != o.rank_)
        throw std::invalid_argument("matrix product shape mismatch");
    RingMatrix out(rows_, o.cols_, rank_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GroupRingElem &a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + a * o.at(k, j);
            }
        }
    return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix &o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_ || rank_ != o.rank_)
        throw std::invalid_argument("matrix sum shape mismatch");
    RingMatrix out(rows_, cols_, rank_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
    return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix &o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_ || rank_ != o.rank_)
        throw std::invalid_argument("matrix difference shape mismatch");
    RingMatrix out(rows_, cols_, rank_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - o.at(i, j);
    return out;
}

bool RingMatrix::operator==(const RingMatrix &o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && rank_ == o.rank_ &&
           entries_ == o.entries_;
}

bool RingMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const GroupRingElem &e) { return e.is_zero(); });
}

void RingMatrix::swap_rows(int i, int j)
{
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void RingMatrix::swap_cols(int i, int j)
{
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void RingMatrix::add_row_multiple(int i, int j, const GroupRingElem &f)
{
    for (int k = 0; k < cols_; ++k) at(i, k) = at(i, k) + f * at(j, k);
}

void RingMatrix::add_col_multiple(int i, int j, const GroupRingElem &f)
{
    for (int k = 0; k < rows_; ++k) at(k, i) = at(k, i) + f * at(k, j);
}

void RingMatrix::scale_row(int i, const GroupRingElem &f)
{
    for (int k = 0; k < cols_; ++k) at(i, k) = f * at(i, k);
}

void RingMatrix::scale_col(int j, const GroupRingElem &f)
{
    for (int k = 0; k < rows_; ++k) at(k, j) = f * at(k, j);
}

} // namespace reebcert
