#pragma once

#include "cwset/region.hpp"
#include "cwset/sector.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cwset {

/// Translation lattice with basis (v1, v2).
class Lattice {
public:
    Lattice(Vec2 v1, Vec2 v2);
    static Lattice square();
    /// Generated by (1, 0) and (1/2, sqrt3/2).
    static Lattice hexagonal();

    const Vec2& v1() const { return v1_; }
    const Vec2& v2() const { return v2_; }
    /// Basis matrix with columns v1, v2.
    Mat2 basis() const { return Mat2::columns(v1_, v2_); }
    Scalar covolume() const { return abs(basis().det()); }
    /// Coordinates of p in the basis.
    Vec2 coordinates(const Vec2& p) const { return basis_inv_ * p; }
    bool contains(const Vec2& p) const;
    /// Representative of p modulo the lattice in the half-open fundamental parallelogram.
    Vec2 reduce(const Vec2& p) const;
    /// Closed fundamental parallelogram {a v1 + b v2 : 0 <= a, b <= 1}.
    ConvexPolygon fundamental_cell() const;

private:
    Vec2 v1_, v2_;
    Mat2 basis_inv_;
};

/// Dual basis (u1, u2) with <ui, vj> = delta_ij.
Lattice dual_lattice(const Lattice& lattice);
/// Same lattice up to change of basis.
bool same_lattice(const Lattice& a, const Lattice& b);

/// Point-group element S with its coset vector c_S, reduced modulo the lattice.
struct PointGroupElement {
    Mat2 matrix;
    Vec2 coset;
};

class WallpaperGroup {
public:
    WallpaperGroup(std::string name, Lattice lattice, std::vector<Isometry> generators);

    const std::string& name() const { return name_; }
    const Lattice& lattice() const { return lattice_; }
    const std::vector<Isometry>& generators() const { return generators_; }
    /// Point group with its coset table; the identity comes first.
    const std::vector<PointGroupElement>& elements() const { return elements_; }
    std::vector<Mat2> point_group() const;
    std::optional<Vec2> coset(const Mat2& s) const;
    std::size_t order() const { return elements_.size(); }
    bool is_symmorphic() const;

private:
    std::string name_;
    Lattice lattice_;
    std::vector<Isometry> generators_;
    std::vector<PointGroupElement> elements_;
};

/// The 17 names in table order.
const std::vector<std::string>& group_names();
/// Builds one of the 17 groups from its generators; case-insensitive.
/// Throws std::invalid_argument for an unknown name.
WallpaperGroup build_group(std::string_view name);

bool member(const WallpaperGroup& g, const Isometry& x);
/// Whether dilation by d normalizes the group: (d - 1) c_S lies in the lattice for every S.
bool compatible(const WallpaperGroup& g, int d);
/// One image S(R) per point-group element, in element order.
std::vector<Region> orbit(const WallpaperGroup& g, const Region& r);

enum class Transport { none, L, L_prime };
Mat2 transport_matrix(Transport t);
std::string to_string(Transport t);
Transport parse_transport(std::string_view text);

/// Sector assignment from the existence construction: a subspace sector for
/// the square lattice, the lattice matrix that carries it to the group's
/// lattice, and the resulting sector in the group's own frame.
struct SectorAssignment {
    Sector base;
    Transport transport = Transport::none;
    Sector sector;
};

/// Throws std::invalid_argument for unknown names; p1 maps to the whole plane.
SectorAssignment canonical_sector(std::string_view name);

}  // namespace cwset
