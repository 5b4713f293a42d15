#pragma once

#include "cwset/groups.hpp"
#include "cwset/tiling.hpp"

#include <span>
#include <vector>

namespace cwset {

/// The three set conditions characterizing a crystallographic wavelet set:
/// (i) lattice translation tiling, (ii) disjoint point-group images,
/// (iii) dilation tiling of the union of those images.
/// All three are always evaluated so a report shows every failure.
struct WaveletVerdict {
    TilingReport condition_i;
    TilingReport condition_ii;
    TilingReport condition_iii;
    bool passed = false;
};

WaveletVerdict verify_wavelet_set(const WallpaperGroup& g, const Region& w, int d);

/// L-wavelet sets: each W_l tiles by translation, all images S(W_l) are
/// pairwise disjoint, and their union tiles by dilation.
WaveletVerdict verify_multiwavelet_set(const WallpaperGroup& g, std::span<const Region> sets, int d);

/// Subspace wavelet set for the sector M: (i) k-fold translation tiling over
/// the lattice, (ii) W inside M, (iii) dilation tiling of M.
WaveletVerdict verify_subspace_wavelet_set(const Region& w, const Sector& m, const Lattice& lattice, int d,
                                           int k = 1);

/// Runs the checker for two groups differing only in reflections versus
/// glides and reports whether the verdicts agree. Throws
/// std::invalid_argument unless both groups share lattice and point group.
bool glide_equivalence_check(const WallpaperGroup& g1, const WallpaperGroup& g2, const Region& w, int d);

}  // namespace cwset
