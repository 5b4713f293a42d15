#include "cwset/io.hpp"

#include <fstream>
#include <sstream>

namespace cwset {

namespace {

Json vec_json(const Vec2& v) { return Json::array({v.x.str(), v.y.str()}); }

Json mat_json(const Mat2& m) { return Json::array({Json::array({m.a.str(), m.b.str()}), Json::array({m.c.str(), m.d.str()})}); }

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(e.what());
    }
}

const Json& field(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object() || !j.contains(name)) throw FormatError(where + ": missing field '" + name + "'");
    return j.at(name);
}

void check_schema(const Json& j, const char* expected) {
    const Json& s = field(j, "schema", "document");
    if (!s.is_string() || s.get<std::string>() != expected)
        throw FormatError("schema: expected \"" + std::string(expected) + "\", got " + s.dump());
}

Scalar scalar_at(const Json& j, const std::string& where) {
    if (!j.is_string()) throw FormatError(where + ": coordinate must be a string, got " + j.dump());
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(where + ": " + e.what());
    }
}

Region pieces_from_json(const Json& pieces, const std::string& where) {
    if (!pieces.is_array()) throw FormatError(where + ": must be an array");
    std::vector<ConvexPolygon> out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const std::string pw = where + "[" + std::to_string(i) + "]";
        const Json& loop = pieces[i];
        if (!loop.is_array()) throw FormatError(pw + ": must be an array of vertices");
        std::vector<Vec2> verts;
        for (std::size_t k = 0; k < loop.size(); ++k) {
            const std::string vw = pw + "[" + std::to_string(k) + "]";
            if (!loop[k].is_array() || loop[k].size() != 2) throw FormatError(vw + ": vertex must be [x, y]");
            verts.push_back({scalar_at(loop[k][0], vw + "[0]"), scalar_at(loop[k][1], vw + "[1]")});
        }
        auto p = ConvexPolygon::try_from_vertices(std::move(verts));
        if (!p) throw FormatError(pw + ": not a convex polygon of positive area");
        out.push_back(*std::move(p));
    }
    return Region(std::move(out));
}

Json pieces_json(const Region& r) {
    Json pieces = Json::array();
    for (const auto& p : r.pieces()) {
        Json loop = Json::array();
        for (const auto& v : p.vertices()) loop.push_back(vec_json(v));
        pieces.push_back(std::move(loop));
    }
    return pieces;
}

}  // namespace

Json region_to_json(const Region& r) {
    Json j;
    j["schema"] = kRegionSchema;
    j["pieces"] = pieces_json(r);
    return j;
}

Region region_from_json(const Json& j) {
    check_schema(j, kRegionSchema);
    return pieces_from_json(field(j, "pieces", "document"), "pieces");
}

std::string write_region(const Region& r) { return region_to_json(r).dump(2) + "\n"; }

Region read_region(std::string_view text) { return region_from_json(parse_text(text)); }

Json multiset_to_json(const std::vector<Region>& regions) {
    Json j;
    j["schema"] = kMultisetSchema;
    j["regions"] = Json::array();
    for (const auto& r : regions) j["regions"].push_back(pieces_json(r));
    return j;
}

std::vector<Region> read_multiset(std::string_view text) {
    Json j = parse_text(text);
    check_schema(j, kMultisetSchema);
    const Json& regions = field(j, "regions", "document");
    if (!regions.is_array()) throw FormatError("regions: must be an array");
    std::vector<Region> out;
    for (std::size_t i = 0; i < regions.size(); ++i)
        out.push_back(pieces_from_json(regions[i], "regions[" + std::to_string(i) + "]"));
    return out;
}

Json report_to_json(const TilingReport& r) {
    Json j;
    j["schema"] = kTilingSchema;
    j["passed"] = r.passed;
    j["multiplicity_target"] = r.multiplicity_target;
    j["defect_area"] = r.defect_area().str();
    j["defect_area_approx"] = r.defect_area().to_double();
    Json classes = Json::array();
    for (const auto& [m, area] : r.class_areas) classes.push_back({{"multiplicity", m}, {"area", area.str()}});
    j["class_areas"] = std::move(classes);
    Json defects = Json::array();
    for (const auto& d : r.defect_regions)
        defects.push_back({{"multiplicity", d.multiplicity}, {"area", d.region.area().str()}, {"pieces", pieces_json(d.region)}});
    j["defect_regions"] = std::move(defects);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json verdict_to_json(const WaveletVerdict& v) {
    Json j;
    j["schema"] = kVerdictSchema;
    j["passed"] = v.passed;
    j["condition_i"] = report_to_json(v.condition_i);
    j["condition_ii"] = report_to_json(v.condition_ii);
    j["condition_iii"] = report_to_json(v.condition_iii);
    return j;
}

Json fourier_report_to_json(const FourierCheckReport& r) {
    Json j;
    j["schema"] = kFourierSchema;
    j["passed"] = r.passed;
    j["max_abs_value"] = r.max_abs_value;
    j["value_at_zero_error"] = r.value_at_zero_error;
    j["points_checked"] = r.points_checked;
    j["radius"] = r.radius;
    j["tolerance"] = r.tolerance;
    return j;
}

Json group_to_json(const WallpaperGroup& g) {
    Json j;
    j["schema"] = kGroupSchema;
    j["name"] = g.name();
    j["lattice"] = Json::array({vec_json(g.lattice().v1()), vec_json(g.lattice().v2())});
    j["symmorphic"] = g.is_symmorphic();
    Json elems = Json::array();
    for (const auto& e : g.elements()) elems.push_back({{"matrix", mat_json(e.matrix)}, {"coset", vec_json(e.coset)}});
    j["point_group"] = std::move(elems);
    Json compat = Json::object();
    for (int d = 2; d <= 5; ++d) compat[std::to_string(d)] = compatible(g, d);
    j["compatible"] = std::move(compat);
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace cwset
