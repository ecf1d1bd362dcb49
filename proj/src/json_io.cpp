#include "reebcert/json_io.hpp"

#include <stdexcept>

namespace reebcert {

json elem_to_json(const GroupRingElem &e)
{
    json out = json::array();
    for (const auto &[m, c] : e.terms()) out.push_back({m, rational_to_string(c)});
    return out;
}

GroupRingElem elem_from_json(const json &j, int rank)
{
    GroupRingElem out(rank);
    for (const auto &pair : j) {
        const Monomial m = pair.at(0).get<Monomial>();
        if (static_cast<int>(m.size()) != rank)
            throw std::invalid_argument("monomial length does not match ring rank");
        const Rational c = rational_from_string(pair.at(1).get<std::string>());
        out = out + GroupRingElem::term(m, c);
    }
    return out;
}

json matrix_to_json(const RingMatrix &m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

RingMatrix matrix_from_json(const json &j, int rank)
{
    const int rows = static_cast<int>(j.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    RingMatrix m(rows, cols, rank);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (int k = 0; k < cols; ++k) m.at(i, k) = elem_from_json(j.at(i).at(k), rank);
    }
    return m;
}

json presentation_to_json(const HomologyPresentation &h)
{
    json out{{"degree", h.degree},
             {"generators", h.generators},
             {"relations", matrix_to_json(h.relations)}};
    if (h.normal_form) {
        json nf = json::array();
        for (const auto &f : *h.normal_form) nf.push_back(elem_to_json(f));
        out["normal_form"] = nf;
    }
    return out;
}

json monodromy_to_json(const Monodromy &m)
{
    return json::array({m.a, m.b, m.c, m.d});
}

Monodromy monodromy_from_json(const json &j)
{
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("monodromy must be [a,b,c,d]");
    return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>(),
            j.at(2).get<std::int64_t>(), j.at(3).get<std::int64_t>()};
}

json profile_to_json(const AngularProfile &p)
{
    if (p.is_linear()) return {{"linear_n", p.slope()}, {"phase", p.phase()}};
    json bp = json::array();
    for (const auto &[t, f] : p.breakpoints()) bp.push_back({t, f});
    return {{"breakpoints", bp}, {"delta", p.delta()}};
}

AngularProfile profile_from_json(const json &j)
{
    if (j.contains("linear_n"))
        return AngularProfile::linear(j.at("linear_n").get<double>(),
                                      j.value("phase", 0.0));
    std::vector<std::pair<double, double>> bp;
    for (const auto &b : j.at("breakpoints"))
        bp.emplace_back(b.at(0).get<double>(), b.at(1).get<double>());
    return AngularProfile::piecewise(std::move(bp));
}

json enumeration_to_json(const OrbitEnumeration &e)
{
    if (e.kind == OrbitEnumeration::Kind::Finite) {
        json orbits = json::array();
        for (const auto &o : e.orbits) {
            json jo{{"theta", o.theta},
                    {"class", {o.fiber_class.p, o.fiber_class.q}},
                    {"index", o.index_label}};
            if (o.turns) jo["turns"] = {o.turns->first, o.turns->second};
            orbits.push_back(jo);
        }
        return {{"kind", "finite"}, {"orbits", orbits}};
    }
    json rule{{"monodromy", monodromy_to_json(e.rule->monodromy)},
              {"base_class", {e.rule->base.p, e.rule->base.q}},
              {"profile", profile_to_json(e.rule->profile)}};
    json samples = json::array();
    for (std::int64_t k = -2; k <= 2; ++k)
        samples.push_back({{"k", k}, {"thetas", shift_thetas_for_lift(*e.rule, k)}});
    rule["samples"] = samples;
    return {{"kind", "shift"}, {"rule", rule}};
}

json automorphism_to_json(const MonomialAutomorphism &a)
{
    json out;
    if (a.is_zshift()) {
        out["index_set"] = {{"shift", a.shift()}};
        out["tail"] = {rational_to_string(a.tail().coeff), a.tail().exp};
        json ex = json::array();
        for (const auto &[k, u] : a.exceptions())
            ex.push_back({k, {rational_to_string(u.coeff), u.exp}});
        out["exceptions"] = ex;
        return out;
    }
    out["index_set"] = {{"finite", a.size()}};
    out["perm"] = a.perm();
    json mult = json::array();
    for (const auto &u : a.multipliers())
        mult.push_back({rational_to_string(u.coeff), u.exp});
    out["multipliers"] = mult;
    return out;
}

MonomialAutomorphism automorphism_from_json(const json &j)
{
    const json &idx = j.at("index_set");
    auto unit_from = [](const json &u) {
        return UnitMonomial{rational_from_string(u.at(0).get<std::string>()),
                            u.at(1).get<Monomial>()};
    };
    if (idx.contains("shift")) {
        UnitMonomial tail = unit_from(j.at("tail"));
        std::map<std::int64_t, UnitMonomial> ex;
        for (const auto &e : j.value("exceptions", json::array()))
            ex[e.at(0).get<std::int64_t>()] = unit_from(e.at(1));
        return MonomialAutomorphism(idx.at("shift").get<std::int64_t>(), tail, ex);
    }
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    std::vector<UnitMonomial> mult;
    for (const auto &u : j.at("multipliers")) mult.push_back(unit_from(u));
    return MonomialAutomorphism(std::move(perm), std::move(mult));
}

json certificate_to_json(const OrderCertificate &c)
{
    if (c.finite) return {{"order", c.order}};
    json witness{{"kind", c.witness_kind}};
    if (c.witness_kind == "shift") witness["shift"] = c.witness_shift;
    if (!c.witness_cycle.empty()) witness["cycle"] = c.witness_cycle;
    if (!c.witness_twist.empty()) witness["twist"] = c.witness_twist;
    return {{"order", "infinite"}, {"witness", witness}};
}

json census_to_json(const CriticalCensus &c, bool dump_points)
{
    json out{{"maxima", c.maxima},
             {"saddles", c.saddles},
             {"minima", c.minima},
             {"skipped_seeds", c.skipped_seeds}};
    if (dump_points) {
        json pts = json::array();
        for (const auto &p : c.points) {
            const char *kind = p.kind == MorseKind::Maximum  ? "maximum"
                               : p.kind == MorseKind::Saddle ? "saddle"
                                                             : "minimum";
            pts.push_back({{"theta", p.theta},
                           {"value", p.value},
                           {"kind", kind},
                           {"gradient_norm", p.gradient_norm},
                           {"hessian_eigs", p.hessian_eigs}});
        }
        out["points"] = pts;
    }
    return out;
}

json shooting_to_json(const std::vector<ShootingResult> &rs)
{
    json out = json::array();
    for (const auto &r : rs)
        out.push_back({{"theta_star", r.theta_star},
                       {"period", r.period},
                       {"class", {r.class_winding.p, r.class_winding.q}},
                       {"residual", r.residual},
                       {"iterations", r.iterations}});
    return out;
}

} // namespace reebcert
