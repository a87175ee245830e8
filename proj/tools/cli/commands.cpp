#include "cli/commands.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <filesystem>
#include <functional>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "cli/output.hpp"
#include "cli/presets.hpp"
#include "swave/classical.hpp"
#include "swave/emission.hpp"
#include "swave/mathieu.hpp"
#include "swave/quantum.hpp"

namespace cli {

namespace {

namespace fs = std::filesystem;
using namespace swave;

Background make_background(const Config& cfg) {
    return Background::head_on(cfg.require_num("xi1"), cfg.require_num("xi2"),
                               cfg.get_num("omega1", 0.01), cfg.get_num("omega2", 0.01));
}

fs::path out_dir(const Config& cfg) {
    const fs::path dir = cfg.get_str("out", "out");
    fs::create_directories(dir);
    return dir;
}

bool want_svg(const Config& cfg) {
    const std::string fmt = cfg.get_str("format", "csv");
    if (fmt == "csv") return false;
    if (fmt == "csv+svg") return true;
    throw ConfigError("format must be csv or csv+svg");
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<double> sweep_grid(const Config& cfg) {
    const double lo = cfg.require_num("sweep_min");
    const double hi = cfg.require_num("sweep_max");
    const int n = cfg.get_int("sweep_points", 41);
    const std::string scale = cfg.get_str("sweep_scale", "log");
    if (n < 2) throw ConfigError("sweep_points must be >= 2");
    if (!(lo < hi)) throw ConfigError("sweep_min must be < sweep_max");
    if (scale != "log" && scale != "linear") throw ConfigError("sweep_scale must be log or linear");
    if (scale == "log" && lo <= 0.0) throw ConfigError("log sweep requires sweep_min > 0");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / (n - 1);
        g[static_cast<std::size_t>(i)] =
            scale == "log" ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
    }
    return g;
}

}  // namespace

int cmd_trajectory(const Config& cfg) {
    const Background bg = make_background(cfg);
    const std::string solCase = cfg.require_str("case");
    const double tol = cfg.get_num("tol", 1e-10);
    const double tauEnd = cfg.get_num("tau_end", 50.0);
    const int samples = cfg.get_int("samples", 1001);
    if (samples < 2 || !(tauEnd > 0.0) || !(tol > 0.0))
        throw ConfigError("trajectory: need samples >= 2, tau_end > 0, tol > 0");
    const fs::path dir = out_dir(cfg);

    classical::SolubleCase sc;
    FourVector seed;
    if (solCase == "node") {
        sc = classical::SolubleCase::MagneticNode;
        const double pe1 = cfg.require_num("p_e1");
        const double pe2 = cfg.require_num("p_e2");
        const double phi0 = cfg.get_num("phibar0", 0.0);
        const double amp = bg.xiSigma();
        const double px = pe1 + amp * std::cos(phi0);
        const double py = pe2 + amp * std::sin(phi0);
        seed = {std::sqrt(1.0 + pe1 * pe1 + pe2 * pe2), px, py, 0.0};
        const classical::MagneticNodeOrbit orbit = classical::magnetic_node_orbit(bg, seed);
        std::cout << "node orbit: s = " << fmt17(orbit.s) << ", varpiPerp^2 = "
                  << fmt17(orbit.varpiPerp2) << ", phi0 = " << fmt17(orbit.phi0) << "\n";
    } else if (solCase == "delta") {
        sc = classical::SolubleCase::ZeroTransverse;
        const double pz = cfg.require_num("pz");
        seed = {std::sqrt(1.0 + pz * pz), 0.0, 0.0, pz};
        const classical::DeltaOrbit orbit = classical::delta_orbit(bg, seed);
        if (orbit.regime == classical::Regime::Forbidden && !orbit.restFixedPoint) {
            std::cerr << "forbidden regime: varpiDelta^2 = " << fmt17(orbit.varpiDelta2)
                      << " < 0, the phase equation has no real solution for these parameters\n";
            return kExitForbidden;
        }
        if (orbit.restFixedPoint) {
            // distinguished fixed point: the particle sits at the field node
            CsvTable t;
            t.header = {"tau", "t", "x", "y", "z", "p0", "p1", "p2", "p3"};
            t.rows.push_back({"0", "0", "0", "0", "0", "1", "0", "0", "0"});
            write_csv((dir / "trajectory.csv").string(), t);
            std::cout << "at rest: longitudinal fixed point, single-row output\n";
            return kExitOk;
        }
        std::cout << "delta orbit: varpiDelta^2 = " << fmt17(orbit.varpiDelta2)
                  << ", muDelta^2 = " << fmt17(orbit.muDelta2) << "\n";
    } else {
        throw ConfigError("case must be node or delta");
    }

    const classical::ParticleState init = classical::analytic_initial_state(bg, seed, sc);
    const classical::Trajectory traj = classical::integrate_lorentz(bg, init, tauEnd, tol, samples);

    CsvTable t;
    t.header = {"tau", "t", "x", "y", "z", "p0", "p1", "p2", "p3",
                "cons_e1", "cons_e2", "cons_long", "phi_analytic", "phi_oracle"};
    const double omega = bg.kBar()[0];
    const bool node = (sc == classical::SolubleCase::MagneticNode);
    const classical::MagneticNodeOrbit nodeOrbit =
        node ? classical::magnetic_node_orbit(bg, seed) : classical::MagneticNodeOrbit{};
    const classical::DeltaOrbit deltaOrbit =
        node ? classical::DeltaOrbit{} : classical::delta_orbit(bg, seed);
    for (const auto& st : traj) {
        double phiAn = 0.0, phiOr = 0.0;
        if (node) {
            phiAn = classical::magnetic_node_phase(nodeOrbit, st.tau);
            phiOr = omega * st.x[0];
        } else {
            phiAn = classical::delta_phases(deltaOrbit, st.tau).phiDelta;
            phiOr = phase_variables(bg, st.x).phiDelta;
        }
        t.rows.push_back({fmt17(st.tau), fmt17(st.x[0]), fmt17(st.x[1]), fmt17(st.x[2]),
                          fmt17(st.x[3]), fmt17(st.p[0]), fmt17(st.p[1]), fmt17(st.p[2]),
                          fmt17(st.p[3]), fmt17(classical::conserved_transverse(bg, st, 1, 1)),
                          fmt17(classical::conserved_transverse(bg, st, 1, 2)),
                          fmt17(classical::conserved_longitudinal(bg, st)), fmt17(phiAn),
                          fmt17(phiOr)});
    }
    write_csv((dir / "trajectory.csv").string(), t);

    if (want_svg(cfg)) {
        Series orbitXY{"transverse orbit", {}, {}};
        Series phAn{"phi analytic", {}, {}}, phOr{"phi oracle", {}, {}};
        for (std::size_t i = 0; i < traj.size(); ++i) {
            orbitXY.x.push_back(traj[i].x[1]);
            orbitXY.y.push_back(traj[i].x[2]);
            phAn.x.push_back(traj[i].tau);
            phOr.x.push_back(traj[i].tau);
            phAn.y.push_back(std::stod(t.rows[i][12]));
            phOr.y.push_back(std::stod(t.rows[i][13]));
        }
        write_svg_plot((dir / "orbit.svg").string(), "transverse orbit", {orbitXY});
        write_svg_plot((dir / "phase.svg").string(), "phase vs proper time", {phAn, phOr});
    }
    return kExitOk;
}

int cmd_floquet_map(const Config& cfg) {
    const double l0 = cfg.get_num("lambda_min", -2.0), l1 = cfg.get_num("lambda_max", 10.0);
    const double q0 = cfg.get_num("q_min", 0.0), q1 = cfg.get_num("q_max", 5.0);
    const int nl = cfg.get_int("lambda_points", 61), nq = cfg.get_int("q_points", 26);
    if (!(l0 < l1) || !(q0 < q1) || nl < 2 || nq < 2)
        throw ConfigError("floquet-map: need lambda_min < lambda_max, q_min < q_max, points >= 2");
    const int threads = cfg.get_int("threads", 1);
    const fs::path dir = out_dir(cfg);

    struct Row {
        double lam, q, nuRe, nuIm;
        bool band;
    };
    std::vector<Row> rows(static_cast<std::size_t>(nl) * nq);
    parallel_for(nl * nq, threads, [&](int idx) {
        const int il = idx / nq, iq = idx % nq;
        const double lam = l0 + (l1 - l0) * il / (nl - 1);
        const double q = q0 + (q1 - q0) * iq / (nq - 1);
        const FloquetExponent nu = mathieu_nu({lam, q});
        rows[static_cast<std::size_t>(idx)] = {lam, q, nu.nuRe, nu.nuIm, nu.isBand};
    });

    CsvTable t;
    t.header = {"lambda", "q", "nu_re", "nu_im", "band", "wedge"};
    for (const Row& r : rows) {
        const bool wedge = r.lam > 0.0 && r.q >= 0.0 && r.q < 0.5 * r.lam;
        t.rows.push_back({fmt17(r.lam), fmt17(r.q), fmt17(r.nuRe), fmt17(r.nuIm),
                          r.band ? "1" : "0", wedge ? "1" : "0"});
    }
    write_csv((dir / "floquet_map.csv").string(), t);

    if (want_svg(cfg)) {
        // gap cells as points in the (lambda, Q) plane
        Series gaps{"gap cells", {}, {}};
        for (const Row& r : rows)
            if (!r.band) {
                gaps.x.push_back(r.lam);
                gaps.y.push_back(r.q);
            }
        write_svg_plot((dir / "floquet_map.svg").string(), "instability regions", {gaps});
    }
    return kExitOk;
}

int cmd_quasimomentum(const Config& cfg) {
    const std::string var = cfg.get_str("sweep_var", "pperp");
    if (var != "pperp" && var != "xis") throw ConfigError("sweep_var must be pperp or xis");
    const std::vector<double> grid = sweep_grid(cfg);
    const int threads = cfg.get_int("threads", 1);
    const fs::path dir = out_dir(cfg);

    struct Row {
        double v = 0.0, pw = 0.0, he = 0.0, ms = 0.0, exRe = 0.0, exIm = 0.0, nuRe = 0.0,
               nuIm = 0.0;
        bool band = true;
    };
    std::vector<Row> rows(grid.size());
    std::atomic<bool> failed{false};
    std::string failMsg;
    std::mutex failLock;

    parallel_for(static_cast<int>(grid.size()), threads, [&](int idx) {
        if (failed.load()) return;
        try {
            const double v = grid[static_cast<std::size_t>(idx)];
            Background bg = [&] {
                if (var == "pperp") return make_background(cfg);
                const double om = cfg.get_num("omega1", 5.0);
                return Background::head_on(0.5 * v, 0.5 * v, om, om);
            }();
            const double pPerp = (var == "pperp") ? v : cfg.require_num("pperp");
            const FourVector p{std::sqrt(1.0 + pPerp * pPerp), pPerp, 0.0, 0.0};
            using quantum::Model;
            const auto sc = quantum::SolubleCase::MagneticNode;
            Row r;
            r.v = v;
            r.pw = quantum::quasimomentum(bg, p, sc, Model::PW).mStar2.real();
            r.he = quantum::quasimomentum(bg, p, sc, Model::HE).mStar2.real();
            r.ms = quantum::quasimomentum(bg, p, sc, Model::MS).mStar2.real();
            const quantum::QuasiMomentum ex = quantum::quasimomentum(bg, p, sc, Model::Exact);
            r.exRe = ex.mStar2.real();
            r.exIm = ex.mStar2.imag();
            r.nuRe = ex.nuRe;
            r.nuIm = ex.nuIm;
            r.band = ex.band;
            rows[static_cast<std::size_t>(idx)] = r;
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> g(failLock);
            failed = true;
            failMsg = e.what();
        }
    });
    if (failed) throw NonConvergence("quasimomentum sweep: " + failMsg);

    CsvTable t;
    t.header = {var, "mstar2_pw", "mstar2_he", "mstar2_ms", "mstar2_exact_re", "mstar2_exact_im",
                "nu_re", "nu_im", "band"};
    for (const Row& r : rows)
        t.rows.push_back({fmt17(r.v), fmt17(r.pw), fmt17(r.he), fmt17(r.ms), fmt17(r.exRe),
                          fmt17(r.exIm), fmt17(r.nuRe), fmt17(r.nuIm), r.band ? "1" : "0"});
    write_csv((dir / "quasimomentum.csv").string(), t);

    if (want_svg(cfg)) {
        Series pw{"PW", {}, {}}, he{"HE", {}, {}}, ms{"MS", {}, {}}, ex{"Exact", {}, {}};
        for (const Row& r : rows) {
            const double x = std::log10(r.v);
            pw.x.push_back(x);
            pw.y.push_back(r.pw);
            he.x.push_back(x);
            he.y.push_back(r.he);
            ms.x.push_back(x);
            ms.y.push_back(r.ms);
            ex.x.push_back(x);
            ex.y.push_back(r.exRe);
        }
        write_svg_plot((dir / "quasimomentum.svg").string(), "effective mass squared (log10 sweep)",
                       {pw, he, ms, ex});
    }
    return kExitOk;
}

int cmd_compton(const Config& cfg) {
    emission::EmissionConfig ec;
    ec.xi = cfg.require_num("xi");
    ec.kp = cfg.require_num("kp");
    ec.sMax = cfg.get_int("smax", 50);
    ec.quadTol = cfg.get_num("tol", 1e-8);
    ec.alpha = cfg.get_num("alpha", ec.alpha);
    if (ec.xi < 0.0 || ec.kp <= 0.0 || ec.sMax < 1)
        throw ConfigError("compton: need xi >= 0, kp > 0, smax >= 1");
    const fs::path dir = out_dir(cfg);

    if (cfg.has("lpar")) {
        const emission::NodeEmissionDiagnosis d =
            emission::node_emission_stability(cfg.require_num("lpar"));
        std::cout << "node recoil: q_parallel = " << fmt17(d.qParallel) << " -> "
                  << (d.unstable ? "unstable" : "stable") << "\n";
    }

    const emission::HarmonicSpectrum sp = emission::spectrum(ec);
    CsvTable t;
    t.header = {"s", "W_s", "cumulative"};
    double cum = 0.0;
    for (const auto& [s, w] : sp.entries) {
        cum += w;
        t.rows.push_back({std::to_string(s), fmt17(w), fmt17(cum)});
    }
    write_csv((dir / "spectrum.csv").string(), t);

    std::cout << "harmonics: " << sp.entries.size() << ", total = " << fmt17(sp.total)
              << ", converged = " << (sp.converged ? "yes" : "no") << "\n";

    if (want_svg(cfg)) {
        Series ws{"W_s", {}, {}};
        for (const auto& [s, w] : sp.entries) {
            ws.x.push_back(s);
            ws.y.push_back(w);
        }
        write_svg_plot((dir / "spectrum.svg").string(), "harmonic emission probabilities", {ws});
    }
    return sp.converged ? kExitOk : kExitNonConvergence;
}

int cmd_presets_list() {
    for (const Preset& p : presets())
        std::cout << p.name << "  [" << p.command << "]  " << p.description << "\n";
    return kExitOk;
}

}  // namespace cli
