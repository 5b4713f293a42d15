#pragma once

#include "cwset/groups.hpp"
#include "cwset/region.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cwset::catalog {

enum class LatticeKind { square, hexagonal };

struct CatalogEntry {
    std::string key;
    Region region;
    std::vector<std::string> claimed_groups;
    int claimed_dilation = 2;
    std::string construction_note;
    LatticeKind lattice = LatticeKind::square;
    /// Claimed translation-tiling multiplicity over `lattice`; 0 for sets
    /// with no tiling claim of their own.
    int translation_multiplicity = 1;

    Lattice lattice_value() const {
        return lattice == LatticeKind::square ? Lattice::square() : Lattice::hexagonal();
    }
};

/// All single-region keys in build order.
const std::vector<std::string>& keys();
/// Throws std::invalid_argument for an unknown key.
CatalogEntry build(std::string_view key);

/// Keys of the conventional multiwavelet splittings (lists of regions).
const std::vector<std::string>& multiset_keys();
std::vector<Region> build_multiset(std::string_view key);

enum class ClaimKind { single, multi, subspace };

struct Claim {
    ClaimKind kind = ClaimKind::single;
    /// Group name for single/multi claims; empty for subspace claims.
    std::string group;
    /// Catalog key, or multiset key for multi claims.
    std::string key;
    Transport transport = Transport::none;
    int dilation = 2;
    bool expected_pass = true;
    /// Sector name for subspace claims (see sector_by_name).
    std::string sector;
    /// Translation multiplicity for subspace claims.
    int multiplicity = 1;

    std::string label() const;
};

/// Every positive claim for the 17 groups at dilation 2 plus the recorded
/// negative claim (p3 with L' applied to W_pmm). Single wavelet sets for p1
/// are not constructed here; p1 is covered by the conventional multiwavelet
/// splittings.
std::vector<Claim> all_claims();

/// Region a claim is about, with its transport applied.
Region claim_region(const Claim& c);

/// "whole", "right_half", "first_quadrant", "first_octant",
/// "first_fifth_octants", or a group name for its canonical sector.
Sector sector_by_name(std::string_view name);

}  // namespace cwset::catalog
