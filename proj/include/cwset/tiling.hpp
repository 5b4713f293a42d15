#pragma once

#include "cwset/groups.hpp"
#include "cwset/region.hpp"
#include "cwset/sector.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cwset {

/// Multiplicity recorded for the region near the origin when a piece reaches
/// it: such a cone is hit by infinitely many dilates.
inline constexpr int kUnboundedMultiplicity = -1;

struct MultiplicityClass {
    int multiplicity = 0;
    Region region;
};

/// Outcome of a coverage check. passed is true iff defect_regions is empty.
struct TilingReport {
    bool passed = false;
    int multiplicity_target = 1;
    /// Parts of checked_domain covered a number of times other than the target.
    std::vector<MultiplicityClass> defect_regions;
    Region checked_domain;
    /// Area of checked_domain covered exactly m times, for every observed m.
    /// Filled by the coverage verifiers; the areas sum to area(checked_domain).
    std::vector<std::pair<int, Scalar>> class_areas;
    std::string note;

    Scalar defect_area() const;
};

/// Partition of a domain into convex cells, each carrying the number of
/// inserted pieces that cover it. Inserting a piece splits every cell it
/// meets along the piece's edge lines.
class CoverageArrangement {
public:
    explicit CoverageArrangement(const Region& domain);

    /// The piece must lie inside the domain (clip it first).
    void insert(const ConvexPolygon& piece);
    std::size_t cell_count() const { return cells_.size(); }
    /// Report relative to multiplicity k; cells mapped through `to_output`.
    TilingReport report(int k, const Mat2& to_output = Mat2::identity()) const;

private:
    struct Cell {
        ConvexPolygon poly;
        int count;
    };
    Region domain_;
    std::vector<Cell> cells_;
};

/// Half-open box H = [x0, x1) x [y0, y1) containing the origin in its
/// interior; Q_d = dH \ H tiles the punctured plane under dilation by d.
struct DilationBox {
    Scalar x0{Rational(-1, 2)}, y0{Rational(-1, 2)}, x1{Rational(1, 2)}, y1{Rational(1, 2)};
};

/// Polygonal dilation fundamental domain dH \ H, restricted to the sector when given.
Region dilation_fundamental_domain(int d, const std::optional<Sector>& sector = std::nullopt,
                                   const DilationBox& h = {});

/// Checks sum over the lattice of 1_R(x + l) == k almost everywhere, exactly,
/// by wrapping every piece into the fundamental parallelogram.
TilingReport verify_translation_tiling(const Region& r, const Lattice& lattice, int k = 1);

/// Checks sum over j of 1_U(d^j x) == k almost everywhere (on the sector
/// when given) by folding every dilate of U into dH \ H.
/// Throws std::invalid_argument when the origin is interior to a piece of U
/// or U leaves the sector. A piece touching the origin fails with a witness.
TilingReport verify_dilation_tiling(const Region& u, int d, int k = 1,
                                    const std::optional<Sector>& sector = std::nullopt,
                                    const DilationBox& h = {});

/// Passes iff every pairwise intersection has zero area.
TilingReport verify_pairwise_disjoint(std::span<const Region> regions);

/// True iff r \ M has zero area.
bool sector_contains(const Sector& m, const Region& r);

}  // namespace cwset
