#pragma once

#include "hlf/invariants.hpp"

#include <string>
#include <vector>

namespace hlf {

/// Closed-form parametric solution family for one of the admissibility
/// systems. Every emitted row satisfies its system exactly; emission
/// re-verifies the congruences and throws std::logic_error on any mismatch.
struct DiophantineFamily {
    int genus;  // 2 or 3
    std::string description;
    std::vector<std::string> param_names;
    std::string n_formula;
    std::string s_formula;
};

struct G2Solution {
    Int k, t, n, s;
    Rational lambda;  // = 6 - t/k
};

/// Genus-2 system 2s+n = 10k, 2n-s = 5t: n = 2t+2k, s = 4k-t for
/// 1 <= k <= k_max, 1 <= t <= t_max, keeping rows with s >= 0.
DiophantineFamily g2_family();
std::vector<G2Solution> solve_g2_system(const Int& k_max, const Int& t_max);

/// Boundary ratio sequence s/n = (4m+3)/(2m+4) for m = 0..m_max; strictly
/// increasing with limit 2.
std::vector<Rational> g2_boundary_ratio_sequence(const Int& m_max);

struct G3Solution {
    Int m, k, n, s;
    Rational ratio;   // s/n = (11m+2)/(8m+4)
    Rational lambda;
};

/// Genus-3 system 3n+8s = 28k, 11n-8s = 28 (t = 1 slice): k = 4m+1,
/// n = 2+2k, s = (11k-3)/4 for m = 0..m_max.
DiophantineFamily g3_family();
std::vector<G3Solution> solve_g3_system(const Int& m_max);

}  // namespace hlf
