#pragma once

#include "cwset/groups.hpp"
#include "cwset/region.hpp"

namespace cwset {

/// Iterative scaling-set construction: level i+1 is level i scaled by 1/d
/// and translated by step, starting from seed.
struct IterationSpec {
    int d = 3;
    Region seed;
    Vec2 step;
    int depth = 6;

    /// Seed [0, 1/3)^2, step (1/3, 1/3), d = 3.
    static IterationSpec paper(int depth = 6);
};

/// E_n, the union of the first depth levels.
Region scaling_set(const IterationSpec& spec);
/// W_n = d E_n minus E_n.
Region wavelet_from_scaling(const IterationSpec& spec);
Region transport(Transport key, const Region& r);

}  // namespace cwset
