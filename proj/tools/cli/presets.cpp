#include "cli/presets.hpp"

namespace cli {

const std::vector<Preset>& presets() {
    // Transverse kinetic momentum components p_e1, p_e2 are given at the
    // starting phase phibar0; the node orbits use xi1 = xi2 = 10, omega = 0.01.
    static const std::vector<Preset> table = {
        {"fig1-thin",
         "trajectory",
         "node orbit with zero transverse canonical momentum (s = 0 circle); "
         "xi1 = xi2 = 10, omega = 0.01, p = -a at phase 0",
         {{"case", "node"}, {"xi1", "10"}, {"xi2", "10"}, {"omega1", "0.01"}, {"omega2", "0.01"},
          {"p_e1", "-20"}, {"p_e2", "0"}, {"phibar0", "0"}, {"tau_end", "50"}, {"samples", "1001"}}},
        {"fig1-dashed",
         "trajectory",
         "node orbit started with p.eps1 = a.eps1, p.eps2 = 0.2 a.eps2 at phase 0; "
         "xi1 = xi2 = 10, omega = 0.01",
         {{"case", "node"}, {"xi1", "10"}, {"xi2", "10"}, {"omega1", "0.01"}, {"omega2", "0.01"},
          {"p_e1", "20"}, {"p_e2", "0"}, {"phibar0", "0"}, {"tau_end", "50"}, {"samples", "1001"}}},
        {"fig1-thick",
         "trajectory",
         "node orbit in the vanishing-transverse-kinetic-momentum limit (s -> its supremum); "
         "xi1 = xi2 = 10, omega = 0.01",
         {{"case", "node"}, {"xi1", "10"}, {"xi2", "10"}, {"omega1", "0.01"}, {"omega2", "0.01"},
          {"p_e1", "0"}, {"p_e2", "0"}, {"phibar0", "0"}, {"tau_end", "50"}, {"samples", "1001"}}},
        {"fig2-left",
         "trajectory",
         "equal-amplitude standing wave, zero transverse canonical momentum, cusped "
         "helical orbit; xi1 = xi2 = 10, omega = 0.01, pz = 20.0005",
         {{"case", "delta"}, {"xi1", "10"}, {"xi2", "10"}, {"omega1", "0.01"}, {"omega2", "0.01"},
          {"pz", "20.0005"}, {"tau_end", "50"}, {"samples", "1001"}}},
        {"fig2-right",
         "trajectory",
         "strongly unequal amplitudes, drifting near-circular orbit; xi1 = 0.01, "
         "xi2 = 10, omega = 0.01, pz = 20.0005",
         {{"case", "delta"}, {"xi1", "0.01"}, {"xi2", "10"}, {"omega1", "0.01"},
          {"omega2", "0.01"}, {"pz", "20.0005"}, {"tau_end", "50"}, {"samples", "1001"}}},
        {"fig3",
         "quasimomentum",
         "effective mass vs transverse momentum at the node; xiSigma = 1, "
         "kBar^2 = (0.01)^2, log sweep pperp in [1e-2, 1e2]",
         {{"xi1", "0.5"}, {"xi2", "0.5"}, {"omega1", "0.01"}, {"omega2", "0.01"},
          {"sweep_var", "pperp"}, {"sweep_min", "0.01"}, {"sweep_max", "100"},
          {"sweep_points", "41"}, {"sweep_scale", "log"}}},
        {"fig4",
         "quasimomentum",
         "effective mass vs intensity at the node with band gaps resolved; "
         "kBar^2 = (5)^2, pperp = 2, log sweep xiSigma in [0.05, 20]",
         {{"omega1", "5"}, {"omega2", "5"}, {"pperp", "2"}, {"sweep_var", "xis"},
          {"sweep_min", "0.05"}, {"sweep_max", "20"}, {"sweep_points", "81"},
          {"sweep_scale", "log"}}},
        {"fig5",
         "floquet-map",
         "stability chart of the canonical Mathieu equation over (lambda, Q) with the "
         "physical wedge 0 <= Q < lambda/2 marked",
         {{"lambda_min", "-2"}, {"lambda_max", "10"}, {"lambda_points", "61"}, {"q_min", "0"},
          {"q_max", "5"}, {"q_points", "26"}}},
    };
    return table;
}

const Preset* find_preset(const std::string& name) {
    for (const Preset& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

void apply_preset(Config& cfg, const Preset& p) {
    for (const auto& [k, v] : p.assignments) cfg.set(k, v);
}

}  // namespace cli
