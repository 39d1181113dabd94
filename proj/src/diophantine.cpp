#include "hlf/diophantine.hpp"

namespace hlf {

DiophantineFamily g2_family() {
    DiophantineFamily fam;
    fam.genus = 2;
    fam.description = "genus-2 system 2s+n = 10k, 2n-s = 5t";
    fam.param_names = {"k", "t"};
    fam.n_formula = "n = 2t + 2k";
    fam.s_formula = "s = 4k - t";
    return fam;
}

std::vector<G2Solution> solve_g2_system(const Int& k_max, const Int& t_max) {
    if (k_max < 1 || t_max < 1)
        throw std::invalid_argument("solve_g2_system: k_max and t_max must be >= 1");
    std::vector<G2Solution> out;
    for (Int k = 1; k <= k_max; ++k) {
        for (Int t = 1; t <= t_max; ++t) {
            G2Solution sol;
            sol.k = k;
            sol.t = t;
            sol.n = 2 * t + 2 * k;
            sol.s = 4 * k - t;
            if (sol.s < 0) continue;
            sol.lambda = Rational(6) - Rational(t, k);
            if (2 * sol.s + sol.n != 10 * k)
                throw std::logic_error("solve_g2_system: 2s+n = 10k violated at k=" + k.str() +
                                       ", t=" + t.str());
            if (2 * sol.n - sol.s != 5 * t)
                throw std::logic_error("solve_g2_system: 2n-s = 5t violated at k=" + k.str() +
                                       ", t=" + t.str());
            out.push_back(std::move(sol));
        }
    }
    return out;
}

std::vector<Rational> g2_boundary_ratio_sequence(const Int& m_max) {
    if (m_max < 0)
        throw std::invalid_argument("g2_boundary_ratio_sequence: m_max must be >= 0");
    std::vector<Rational> out;
    for (Int m = 0; m <= m_max; ++m)
        out.emplace_back(4 * m + 3, 2 * m + 4);
    return out;
}

DiophantineFamily g3_family() {
    DiophantineFamily fam;
    fam.genus = 3;
    fam.description = "genus-3 system 3n+8s = 28k, 11n-8s = 28";
    fam.param_names = {"m"};
    fam.n_formula = "n = 2 + 2k with k = 4m + 1";
    fam.s_formula = "s = (11k - 3)/4 with k = 4m + 1";
    return fam;
}

std::vector<G3Solution> solve_g3_system(const Int& m_max) {
    if (m_max < 0)
        throw std::invalid_argument("solve_g3_system: m_max must be >= 0");
    std::vector<G3Solution> out;
    for (Int m = 0; m <= m_max; ++m) {
        G3Solution sol;
        sol.m = m;
        sol.k = 4 * m + 1;
        sol.n = 2 + 2 * sol.k;
        const Int s_num = 11 * sol.k - 3;
        if (s_num % 4 != 0)
            throw std::logic_error("solve_g3_system: s = (11k-3)/4 not integral at m=" + m.str());
        sol.s = s_num / 4;
        sol.ratio = Rational(sol.s, sol.n);
        if (sol.ratio != Rational(11 * m + 2, 8 * m + 4))
            throw std::logic_error("solve_g3_system: ratio closed form violated at m=" + m.str());
        if (3 * sol.n + 8 * sol.s != 28 * sol.k)
            throw std::logic_error("solve_g3_system: 3n+8s = 28k violated at m=" + m.str());
        if (11 * sol.n - 8 * sol.s != 28)
            throw std::logic_error("solve_g3_system: 11n-8s = 28 violated at m=" + m.str());
        FibrationNumerics f(3, sol.n, {sol.s});
        sol.lambda = slope(f);
        out.push_back(std::move(sol));
    }
    return out;
}

}  // namespace hlf
