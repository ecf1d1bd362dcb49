#ifndef REEBCERT_REPORTS_HPP
#define REEBCERT_REPORTS_HPP

#include <string>
#include <vector>

#include "reebcert/json_io.hpp"

namespace reebcert {

struct Verdict {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct Report {
    std::string command;
    json inputs;
    json outputs;
    std::vector<Verdict> verdicts;

    bool all_pass() const;
    json to_json() const;
    std::string to_table() const;
};

enum class RingMode { Quotient, Full };

// Prop-T3 pipeline: orbits -> complex -> loop automorphism -> order
// certificate. Full ring mode additionally presents the degree -1
// homology over Q[t,t^-1] (t = e^{A_{x,y}}) and the induced action of
// multiplication by e^{A_{x,y}}.
Report run_t3(int n, const FiberClass &cls, RingMode mode);

// Torus bundle pipeline: classification, enumeration, automorphism type
// and order certificate.
Report run_bundle(const Monodromy &m, const AngularProfile &profile,
                  const FiberClass &cls, double compat_tol = 1e-8);

// T^5 pipeline: Lutz census plus the rank of the lattice spanned by the
// three loop exponents on a surviving summand of the given rank.
Report run_t5(double epsilon, int summand_rank, int grid = 64, double tol = 1e-10);

// Marked-point pipeline: Betti table of T^{2n-1}, multiplier d*t and the
// degree-m composition law.
Report run_stt(int n, std::int64_t d, std::int64_t m);

// The three T^5 loop automorphisms on a summand of the given rank, over
// the rank-9 lattice H_2(T^5)/<A_{4,5}>.
std::vector<MonomialAutomorphism> t5_loop_automorphisms(int summand_rank);

} // namespace reebcert

#endif
