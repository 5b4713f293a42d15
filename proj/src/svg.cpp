#include "cwset/svg.hpp"

#include "cwset/builder.hpp"
#include "cwset/catalog.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cwset {

namespace {

constexpr double kPanelWidth = 320;
constexpr double kGap = 16;

// Fill colours for orbit images, indexed by point-group element.
constexpr std::array<const char*, 12> kPalette{"#1b1b1b", "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                               "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s = buf;
    return s == "-0" ? "0" : s;
}

std::array<Scalar, 4> bounds(const RenderSpec& spec) {
    std::optional<std::array<Scalar, 4>> b;
    for (const auto& layer : spec.layers) {
        for (const auto& p : layer.region.pieces()) {
            std::array<Scalar, 4> pb{p.min_x(), p.min_y(), p.max_x(), p.max_y()};
            if (!b) {
                b = pb;
            } else {
                (*b)[0] = min((*b)[0], pb[0]);
                (*b)[1] = min((*b)[1], pb[1]);
                (*b)[2] = max((*b)[2], pb[2]);
                (*b)[3] = max((*b)[3], pb[3]);
            }
        }
    }
    return b.value_or(std::array<Scalar, 4>{0, 0, 1, 1});
}

std::string style_sheet() {
    std::ostringstream s;
    s << "path{stroke:#000}.set{fill:#1b1b1b}.alt{fill:#9a9a9a}.axes{stroke:#bbb;fill:none}";
    for (std::size_t i = 0; i < kPalette.size(); ++i) s << ".orbit-" << i << "{fill:" << kPalette[i] << "}";
    return s.str();
}

}  // namespace

RenderSpec orbit_panel(std::string title, const WallpaperGroup& g, const Region& r) {
    RenderSpec spec;
    spec.title = std::move(title);
    spec.orbit_coloring = true;
    auto images = orbit(g, r);
    for (std::size_t i = 0; i < images.size(); ++i)
        spec.layers.push_back({std::move(images[i]), "orbit-" + std::to_string(i % kPalette.size())});
    return spec;
}

std::string render_svg(std::span<const RenderSpec> panels) {
    struct Placed {
        std::array<Scalar, 4> box;
        double x0, y0, w, h, height_px;
    };
    std::vector<Placed> placed;
    double total_w = 0, total_h = 0;
    for (const auto& spec : panels) {
        auto box = spec.viewport ? *spec.viewport : bounds(spec);
        if (spec.viewport) {
            auto inner = bounds(spec);
            if (!spec.layers.empty() && (inner[0] < box[0] || inner[1] < box[1] || inner[2] > box[2] || inner[3] > box[3]))
                throw std::invalid_argument("viewport does not contain the regions");
        }
        double x0 = box[0].to_double(), y0 = box[1].to_double();
        double w = (box[2] - box[0]).to_double(), h = (box[3] - box[1]).to_double();
        const double pad = 0.04 * std::max(w, h);
        x0 -= pad;
        y0 -= pad;
        w += 2 * pad;
        h += 2 * pad;
        const double height_px = kPanelWidth * h / w;
        placed.push_back({box, x0, y0, w, h, height_px});
        total_w += kPanelWidth + (placed.size() > 1 ? kGap : 0);
        total_h = std::max(total_h, height_px);
    }
    if (panels.empty()) total_w = total_h = 1;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(total_w) << "\" height=\"" << num(total_h)
        << "\" viewBox=\"0 0 " << num(total_w) << " " << num(total_h) << "\">\n"
        << "<style>" << style_sheet() << "</style>\n";
    double offset = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const auto& spec = panels[i];
        const auto& pl = placed[i];
        // y is flipped so the plane's upward axis points up on screen.
        out << "<svg class=\"panel\" data-panel=\"" << i << "\" data-title=\"" << spec.title << "\" x=\"" << num(offset)
            << "\" y=\"0\" width=\"" << num(kPanelWidth) << "\" height=\"" << num(pl.height_px) << "\" viewBox=\""
            << num(pl.x0) << " " << num(-(pl.y0 + pl.h)) << " " << num(pl.w) << " " << num(pl.h) << "\">\n";
        // Strokes are given in plane units, about half a pixel wide.
        out << "<g stroke-width=\"" << num(0.5 * pl.w / kPanelWidth) << "\">\n";
        out << "<path class=\"axes\" d=\"M " << num(pl.x0) << " 0 H " << num(pl.x0 + pl.w) << " M 0 " << num(-pl.y0)
            << " V " << num(-(pl.y0 + pl.h)) << "\"/>\n";
        for (std::size_t l = 0; l < spec.layers.size(); ++l) {
            const auto& layer = spec.layers[l];
            for (std::size_t k = 0; k < layer.region.pieces().size(); ++k) {
                const auto& verts = layer.region.pieces()[k].vertices();
                std::string d, exact;
                for (std::size_t v = 0; v < verts.size(); ++v) {
                    d += (v ? " L " : "M ") + num(verts[v].x.to_double()) + " " + num(-verts[v].y.to_double());
                    exact += (v ? " " : "") + verts[v].x.str() + "," + verts[v].y.str();
                }
                out << "<path class=\"" << layer.style << "\" data-panel=\"" << i << "\" data-layer=\"" << l
                    << "\" data-piece=\"" << k << "\" data-exact=\"" << exact << "\" d=\"" << d << " Z\"/>\n";
            }
        }
        out << "</g>\n</svg>\n";
        offset += kPanelWidth + kGap;
    }
    out << "</svg>\n";
    return out.str();
}

Figure figure(int number) {
    using catalog::build;
    auto set = [](std::string title, Region r, std::string style = "set") {
        RenderSpec spec;
        spec.title = std::move(title);
        spec.layers.push_back({std::move(r), std::move(style)});
        return spec;
    };
    Figure f;
    f.number = number;
    switch (number) {
        case 1: {
            f.label = "quad1";
            Region w = wavelet_from_scaling(IterationSpec::paper());
            f.panels = {set("W", w), set("L' W", transport(Transport::L_prime, w)), set("L W", transport(Transport::L, w))};
            break;
        }
        case 2:
            f.label = "2wave";
            f.panels = {set("fig2_diamond", build("fig2_diamond").region), set("fig2_right", build("fig2_right").region)};
            break;
        case 3:
            f.label = "pgwave";
            f.panels = {set("W_pm", build("W_pm").region), set("W_p2", build("W_p2").region),
                        set("W_cm", build("W_cm").region)};
            break;
        case 4: {
            f.label = "p4ws";
            Region w = build("W_pmm").region;
            f.panels = {set("W_pmm", w), orbit_panel("pmm orbit", build_group("pmm"), w),
                        orbit_panel("p4 orbit", build_group("p4"), w)};
            break;
        }
        case 5: {
            f.label = "p6wave";
            Region w = build("W_p6").region;
            f.panels = {set("W_p6", w), orbit_panel("p6 orbit", build_group("p6"), w)};
            break;
        }
        case 6: {
            f.label = "p3ws";
            Region w = build("W_p3").region;
            f.panels = {set("W_p4", build("W_p4").region), set("W_p3", w), orbit_panel("p3 orbit", build_group("p3"), w)};
            break;
        }
        case 7: {
            f.label = "cmmws";
            RenderSpec split;
            split.title = "W_p4 split";
            split.layers = {{build("W_p4_a").region, "set"}, {build("W_p4_b").region, "alt"}};
            Region w = build("W_cmm").region;
            f.panels = {std::move(split), set("W_cmm", w), orbit_panel("cmm orbit", build_group("cmm"), w)};
            break;
        }
        case 8: {
            f.label = "p4gwave";
            Region w = build("W_p4m").region;
            f.panels = {set("W_p4m", w), orbit_panel("p4m orbit", build_group("p4m"), w),
                        set("W_p6m", build("W_p6m").region)};
            break;
        }
        case 9: {
            f.label = "p31md2";
            Region w = build("W_p3m1").region;
            f.panels = {set("D", build("D").region), set("W_p3m1", w), orbit_panel("p3m1 orbit", build_group("p3m1"), w)};
            break;
        }
        default:
            throw std::invalid_argument("figure number must be between 1 and " + std::to_string(kFigureCount));
    }
    return f;
}

}  // namespace cwset
