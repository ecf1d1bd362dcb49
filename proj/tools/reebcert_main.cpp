#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "reebcert/json_io.hpp"
#include "reebcert/laurent_snf.hpp"
#include "reebcert/reports.hpp"

using namespace reebcert;

namespace {

// Flat key=value config, '#' comments. Flags on the command line win.
std::map<std::string, std::string> load_config(const std::string &path)
{
    std::map<std::string, std::string> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) out[key] = val;
    }
    return out;
}

template <typename T>
void apply_config(const std::map<std::string, std::string> &cfg, CLI::Option *opt,
                  const std::string &key, T &target)
{
    if (opt->count() > 0) return;
    auto it = cfg.find(key);
    if (it == cfg.end()) return;
    std::istringstream ss(it->second);
    ss >> target;
    if (ss.fail())
        throw CLI::ValidationError("--config", "bad value for " + key);
}

FiberClass parse_class(const std::string &s)
{
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--class", "expected P,Q");
    FiberClass c;
    c.p = std::stoll(s.substr(0, comma));
    c.q = std::stoll(s.substr(comma + 1));
    validate_fiber_class(c);
    return c;
}

Monodromy parse_monodromy(const std::string &s)
{
    std::int64_t v[4];
    std::istringstream ss(s);
    for (int i = 0; i < 4; ++i) {
        std::string tok;
        if (!std::getline(ss, tok, ','))
            throw CLI::ValidationError("--monodromy", "expected a,b,c,d");
        v[i] = std::stoll(tok);
    }
    return {v[0], v[1], v[2], v[3]};
}

json read_json_input(const std::string &path)
{
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--input", "cannot open " + path);
    return json::parse(in);
}

int emit_report(const Report &r, bool as_json)
{
    if (as_json)
        std::cout << r.to_json().dump(2) << "\n";
    else
        std::cout << r.to_table();
    return r.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Reeb orbit enumeration, homology and order certificates"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string config_path;
    double global_tol = 1e-9;
    app.add_flag("--json", as_json, "emit JSON instead of tables");
    auto *config_opt =
        app.add_option("--config", config_path, "flat key=value config file");
    auto *tol_opt = app.add_option("--tol", global_tol, "numeric tolerance");

    // t3
    auto *t3 = app.add_subcommand("t3", "orbit circles and loop automorphism on T^3");
    int t3_n = 2;
    std::string t3_class = "1,0", t3_ring = "quotient";
    auto *t3_n_opt = t3->add_option("--n", t3_n, "form parameter n >= 1");
    auto *t3_class_opt = t3->add_option("--class", t3_class, "fiber class P,Q");
    auto *t3_ring_opt = t3->add_option("--ring", t3_ring, "quotient | full");

    // bundle
    auto *bundle = app.add_subcommand("bundle", "torus bundle pipeline");
    std::string bu_mono = "0,-1,1,0", bu_class = "1,0";
    int bu_profile_n = 1;
    double bu_phase = -1.0;
    auto *bu_mono_opt = bundle->add_option("--monodromy", bu_mono, "gluing a,b,c,d");
    auto *bu_class_opt = bundle->add_option("--class", bu_class, "fiber class P,Q");
    auto *bu_n_opt =
        bundle->add_option("--profile-n", bu_profile_n, "linear profile quasi-period index");
    auto *bu_phase_opt = bundle->add_option(
        "--phase", bu_phase, "profile phase (default: compatible choice)");

    // t5
    auto *t5 = app.add_subcommand("t5", "Lutz census and lattice rank on T^5");
    double t5_eps = 0.25, t5_tol = 1e-10;
    int t5_rank = 1, t5_grid = 64;
    auto *t5_eps_opt = t5->add_option("--epsilon", t5_eps, "fibration scale");
    auto *t5_rank_opt = t5->add_option("--summand-rank", t5_rank, "summand rank 1..8");
    auto *t5_grid_opt = t5->add_option("--grid", t5_grid, "seed grid per axis");
    auto *t5_tol_opt = t5->add_option("--tol", t5_tol, "Newton residual tolerance");

    // stt
    auto *stt = app.add_subcommand("stt", "marked-point morphism on T^{2n-1}");
    int stt_n = 2;
    std::int64_t stt_d = 1, stt_m = 1;
    auto *stt_n_opt = stt->add_option("--n", stt_n, "n >= 2");
    auto *stt_d_opt = stt->add_option("--d", stt_d, "marked-point coefficient");
    auto *stt_m_opt = stt->add_option("--m", stt_m, "sphere map degree");

    // lutz-critical
    auto *lutz = app.add_subcommand("lutz-critical", "critical point census");
    double lz_eps = 0.25, lz_tol = 1e-10;
    int lz_grid = 64;
    bool lz_dump = false;
    auto *lz_eps_opt = lutz->add_option("--epsilon", lz_eps, "fibration scale");
    auto *lz_grid_opt = lutz->add_option("--grid", lz_grid, "seed grid per axis");
    auto *lz_tol_opt = lutz->add_option("--tol", lz_tol, "Newton residual tolerance");
    lutz->add_flag("--dump-points", lz_dump, "emit the full point list");

    // shoot
    auto *shoot = app.add_subcommand("shoot", "closed orbit shooting on T^3");
    int sh_n = 2, sh_seeds = 64;
    std::string sh_class = "1,0";
    double sh_tol = 1e-9;
    auto *sh_n_opt = shoot->add_option("--n", sh_n, "form parameter n >= 1");
    auto *sh_class_opt = shoot->add_option("--class", sh_class, "fiber class P,Q");
    auto *sh_seeds_opt = shoot->add_option("--seeds", sh_seeds, "number of seeds");
    auto *sh_tol_opt = shoot->add_option("--tol", sh_tol, "closing tolerance");

    // snf
    auto *snf = app.add_subcommand("snf", "Smith form over Q[t,t^-1]");
    std::string snf_input;
    snf->add_option("--input", snf_input, "matrix JSON file ('-' for stdin)");

    // order
    auto *ord = app.add_subcommand("order", "order certificate of an automorphism");
    std::string ord_input;
    ord->add_option("--input", ord_input, "automorphism JSON file ('-' for stdin)");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto cfg = load_config(config_path);
        (void)config_opt;
        apply_config(cfg, tol_opt, "tol", global_tol);

        if (*t3) {
            apply_config(cfg, t3_n_opt, "t3.n", t3_n);
            apply_config(cfg, t3_class_opt, "t3.class", t3_class);
            apply_config(cfg, t3_ring_opt, "t3.ring", t3_ring);
            if (t3_ring != "quotient" && t3_ring != "full")
                throw CLI::ValidationError("--ring", "must be quotient or full");
            const Report r = run_t3(t3_n, parse_class(t3_class),
                                    t3_ring == "full" ? RingMode::Full
                                                      : RingMode::Quotient);
            return emit_report(r, as_json);
        }
        if (*bundle) {
            apply_config(cfg, bu_mono_opt, "bundle.monodromy", bu_mono);
            apply_config(cfg, bu_class_opt, "bundle.class", bu_class);
            apply_config(cfg, bu_n_opt, "bundle.profile_n", bu_profile_n);
            apply_config(cfg, bu_phase_opt, "bundle.phase", bu_phase);
            const Monodromy m = parse_monodromy(bu_mono);
            const AngularProfile profile =
                compatible_linear_profile(m, bu_profile_n,
                                          bu_phase < 0 ? 0.0 : bu_phase);
            const Report r = run_bundle(m, profile, parse_class(bu_class),
                                        global_tol > 1e-8 ? 1e-8 : global_tol);
            return emit_report(r, as_json);
        }
        if (*t5) {
            apply_config(cfg, t5_eps_opt, "t5.epsilon", t5_eps);
            apply_config(cfg, t5_rank_opt, "t5.summand_rank", t5_rank);
            apply_config(cfg, t5_grid_opt, "t5.grid", t5_grid);
            apply_config(cfg, t5_tol_opt, "t5.tol", t5_tol);
            return emit_report(run_t5(t5_eps, t5_rank, t5_grid, t5_tol), as_json);
        }
        if (*stt) {
            apply_config(cfg, stt_n_opt, "stt.n", stt_n);
            apply_config(cfg, stt_d_opt, "stt.d", stt_d);
            apply_config(cfg, stt_m_opt, "stt.m", stt_m);
            return emit_report(run_stt(stt_n, stt_d, stt_m), as_json);
        }
        if (*lutz) {
            apply_config(cfg, lz_eps_opt, "lutz.epsilon", lz_eps);
            apply_config(cfg, lz_grid_opt, "lutz.grid", lz_grid);
            apply_config(cfg, lz_tol_opt, "lutz.tol", lz_tol);
            const CriticalCensus c = critical_census(lz_eps, lz_grid, lz_tol);
            std::cout << census_to_json(c, lz_dump).dump(2) << "\n";
            return 0;
        }
        if (*shoot) {
            apply_config(cfg, sh_n_opt, "shoot.n", sh_n);
            apply_config(cfg, sh_class_opt, "shoot.class", sh_class);
            apply_config(cfg, sh_seeds_opt, "shoot.seeds", sh_seeds);
            apply_config(cfg, sh_tol_opt, "shoot.tol", sh_tol);
            const auto rs = shoot_all(sh_n, parse_class(sh_class), sh_seeds, sh_tol);
            std::cout << shooting_to_json(rs).dump(2) << "\n";
            return 0;
        }
        if (*snf) {
            const RingMatrix m = matrix_from_json(read_json_input(snf_input), 1);
            const SmithResult s = snf_univariate(m);
            const json out{{"u", matrix_to_json(s.u)},
                           {"d", matrix_to_json(s.d)},
                           {"v", matrix_to_json(s.v)}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*ord) {
            const MonomialAutomorphism a =
                automorphism_from_json(read_json_input(ord_input));
            std::cout << certificate_to_json(order(a)).dump(2) << "\n";
            return 0;
        }
    } catch (const CLI::Error &e) {
        return app.exit(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
