#include "cwset/builder.hpp"
#include "cwset/catalog.hpp"
#include "cwset/fourier.hpp"
#include "cwset/io.hpp"
#include "cwset/svg.hpp"
#include "cwset/wavelet.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

using namespace cwset;

namespace {

constexpr int kPass = 0, kFail = 1, kBadArgs = 2;

// Argument problems found after parsing; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_catalog_ref(const std::string& ref) { return ref.rfind("catalog:", 0) == 0; }

Region load_region(const std::string& ref) {
    if (is_catalog_ref(ref)) return catalog::build(ref.substr(8)).region;
    return read_region(read_file(ref));
}

std::vector<Region> load_multiset(const std::string& ref) {
    if (is_catalog_ref(ref)) return catalog::build_multiset(ref.substr(8));
    return read_multiset(read_file(ref));
}

Lattice parse_lattice(const std::string& name) {
    if (name == "z2") return Lattice::square();
    if (name == "hex") return Lattice::hexagonal();
    throw UsageError("lattice must be z2 or hex");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::runtime_error("cannot write '" + path + "'");
}

struct VerifyArgs {
    std::string group, set, multiset, transport = "none", subspace, lattice;
    int dilation = 2, multiplicity = 1;
};

int run_verify(const VerifyArgs& a) {
    const int given = !a.set.empty() + !a.multiset.empty();
    if (given != 1) throw UsageError("give exactly one of --set and --multiset");
    const Mat2 t = transport_matrix(parse_transport(a.transport));
    WaveletVerdict v;
    if (!a.subspace.empty()) {
        if (a.set.empty()) throw UsageError("--subspace needs --set");
        Lattice lattice = Lattice::square();
        if (!a.lattice.empty()) {
            lattice = parse_lattice(a.lattice);
        } else if (is_catalog_ref(a.set)) {
            lattice = catalog::build(a.set.substr(8)).lattice_value();
        }
        v = verify_subspace_wavelet_set(transform(t, load_region(a.set)), catalog::sector_by_name(a.subspace), lattice,
                                        a.dilation, a.multiplicity);
    } else {
        if (a.group.empty()) throw UsageError("--group is required");
        if (a.multiplicity != 1) throw UsageError("--multiplicity applies to --subspace only");
        const WallpaperGroup g = build_group(a.group);
        if (!a.set.empty()) {
            v = verify_wavelet_set(g, transform(t, load_region(a.set)), a.dilation);
        } else {
            auto sets = load_multiset(a.multiset);
            for (auto& r : sets) r = transform(t, r);
            v = verify_multiwavelet_set(g, sets, a.dilation);
        }
    }
    std::cout << verdict_to_json(v).dump(2) << "\n";
    return v.passed ? kPass : kFail;
}

std::string claim_command(const catalog::Claim& c) {
    std::string s = "verify";
    switch (c.kind) {
        case catalog::ClaimKind::single: s += " --group " + c.group + " --set catalog:" + c.key; break;
        case catalog::ClaimKind::multi: s += " --group " + c.group + " --multiset catalog:" + c.key; break;
        case catalog::ClaimKind::subspace:
            s += " --subspace " + c.sector + " --set catalog:" + c.key;
            if (c.multiplicity != 1) s += " --multiplicity " + std::to_string(c.multiplicity);
            break;
    }
    if (c.transport != Transport::none) s += " --transport " + to_string(c.transport);
    s += " --dilation " + std::to_string(c.dilation);
    return s;
}

int run_catalog_list(bool json) {
    if (json) {
        Json j = Json::array();
        for (const auto& k : catalog::keys()) {
            auto e = catalog::build(k);
            j.push_back({{"key", e.key},
                         {"groups", e.claimed_groups},
                         {"dilation", e.claimed_dilation},
                         {"lattice", e.lattice == catalog::LatticeKind::square ? "z2" : "hex"},
                         {"area", e.region.area().str()},
                         {"pieces", e.region.size()},
                         {"note", e.construction_note}});
        }
        std::cout << j.dump(2) << "\n";
        return kPass;
    }
    for (const auto& k : catalog::keys()) {
        auto e = catalog::build(k);
        std::cout << std::left << std::setw(14) << e.key << " pieces=" << std::setw(3) << e.region.size()
                  << " area=" << std::setw(8) << e.region.area().str() << " groups=";
        for (std::size_t i = 0; i < e.claimed_groups.size(); ++i) std::cout << (i ? "," : "") << e.claimed_groups[i];
        std::cout << "\n";
    }
    for (const auto& k : catalog::multiset_keys())
        std::cout << std::left << std::setw(14) << k << " multiset of " << catalog::build_multiset(k).size()
                  << " regions\n";
    return kPass;
}

int run_catalog_claims(bool json) {
    Json j = Json::array();
    for (const auto& c : catalog::all_claims()) {
        if (json) {
            j.push_back({{"label", c.label()}, {"command", claim_command(c)}, {"expected_pass", c.expected_pass}});
        } else {
            std::cout << claim_command(c) << (c.expected_pass ? "" : "  # expected to fail") << "\n";
        }
    }
    if (json) std::cout << j.dump(2) << "\n";
    return kPass;
}

int run_compat(bool json) {
    if (json) {
        Json j = Json::object();
        for (const auto& name : group_names()) {
            auto g = build_group(name);
            Json row = Json::object();
            for (int d = 2; d <= 5; ++d) row[std::to_string(d)] = compatible(g, d);
            j[name] = std::move(row);
        }
        std::cout << j.dump(2) << "\n";
        return kPass;
    }
    std::cout << std::left << std::setw(6) << "group" << " d=2 d=3 d=4 d=5\n";
    for (const auto& name : group_names()) {
        auto g = build_group(name);
        std::cout << std::left << std::setw(6) << name;
        for (int d = 2; d <= 5; ++d) std::cout << " " << std::setw(3) << (compatible(g, d) ? "yes" : "no");
        std::cout << "\n";
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crystallographic wavelet set checker"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check the wavelet set conditions; exit 1 when any fails");
    verify->add_option("--group", va.group, "Wallpaper group, e.g. p6m");
    verify->add_option("--set", va.set, "catalog:KEY or a region JSON file");
    verify->add_option("--multiset", va.multiset, "catalog:KEY or a multiset JSON file");
    verify->add_option("--transport", va.transport, "Lattice matrix applied first: none, L or Lp");
    verify->add_option("--dilation", va.dilation, "Integer dilation d >= 2")->check(CLI::Range(2, 1 << 20));
    verify->add_option("--subspace", va.subspace,
                       "Check as a subspace wavelet set for a sector: whole, right_half, first_quadrant, "
                       "first_octant, first_fifth_octants or a group name");
    verify->add_option("--lattice", va.lattice, "z2 or hex (subspace checks)");
    verify->add_option("--multiplicity", va.multiplicity, "Translation multiplicity (subspace checks)")
        ->check(CLI::PositiveNumber);

    auto* cat = app.add_subcommand("catalog", "List and dump catalog sets");
    cat->require_subcommand(1);
    bool cat_json = false;
    std::string dump_key, dump_out;
    auto* cat_list = cat->add_subcommand("list", "List catalog keys");
    cat_list->add_flag("--json", cat_json, "JSON output");
    auto* cat_claims = cat->add_subcommand("claims", "Print one verify command per catalog claim");
    cat_claims->add_flag("--json", cat_json, "JSON output");
    auto* cat_dump = cat->add_subcommand("dump", "Write a catalog set as region JSON");
    cat_dump->add_option("--key", dump_key, "Catalog key or multiset key")->required();
    cat_dump->add_flag("--json", cat_json, "Accepted for symmetry; output is always JSON");
    cat_dump->add_option("-o,--output", dump_out, "Output file (default stdout)");

    std::string render_set, render_orbit, render_out;
    int render_figure = 0;
    auto* render = app.add_subcommand("render", "Render a set or a figure as SVG");
    auto* rset = render->add_option("--set", render_set, "catalog:KEY or a region JSON file");
    auto* rfig = render->add_option("--figure", render_figure, "Figure number 1-9")->check(CLI::Range(1, kFigureCount));
    rset->excludes(rfig);
    render->add_option("--orbit", render_orbit, "Also draw the images under this group's point group");
    render->add_option("-o,--output", render_out, "Output file (default stdout)");

    int bi_dilation = 3, bi_depth = 6;
    std::string bi_transport = "none", bi_out;
    bool bi_scaling = false;
    auto* bi = app.add_subcommand("build-iterative", "Truncated iterative wavelet set W_n = d E_n minus E_n");
    bi->add_option("--dilation", bi_dilation, "Dilation d >= 2")->check(CLI::Range(2, 1000));
    bi->add_option("--depth", bi_depth, "Number of levels")->check(CLI::Range(1, 64));
    bi->add_option("--transport", bi_transport, "none, L or Lp");
    bi->add_flag("--scaling-set", bi_scaling, "Emit E_n instead of W_n");
    bi->add_option("-o,--output", bi_out, "Output file (default stdout)");

    std::string fc_set, fc_lattice = "z2";
    double fc_radius = 20, fc_tol = 1e-9;
    int fc_k = 1;
    auto* fc = app.add_subcommand("fourier-check", "Numeric Fourier tiling cross-check");
    fc->add_option("--set", fc_set, "catalog:KEY or a region JSON file")->required();
    fc->add_option("--lattice", fc_lattice, "z2 or hex");
    fc->add_option("--radius", fc_radius, "Radius of dual lattice points checked")->check(CLI::NonNegativeNumber);
    fc->add_option("--tol", fc_tol, "Absolute tolerance")->check(CLI::NonNegativeNumber);
    fc->add_option("--multiplicity", fc_k, "Expected tiling multiplicity")->check(CLI::PositiveNumber);

    bool compat_json = false;
    auto* compat = app.add_subcommand("compat", "Compatibility of the 17 groups with d = 2..5");
    compat->add_flag("--json", compat_json, "JSON output");

    std::string group_name;
    auto* group = app.add_subcommand("group", "Inspect a wallpaper group");
    group->require_subcommand(1);
    auto* group_dump = group->add_subcommand("dump", "Lattice and coset table as JSON");
    group_dump->add_option("name", group_name, "Group name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kBadArgs;
    }

    try {
        if (verify->parsed()) return run_verify(va);
        if (cat_list->parsed()) return run_catalog_list(cat_json);
        if (cat_claims->parsed()) return run_catalog_claims(cat_json);
        if (cat_dump->parsed()) {
            const auto& mk = catalog::multiset_keys();
            if (std::find(mk.begin(), mk.end(), dump_key) != mk.end())
                emit(multiset_to_json(catalog::build_multiset(dump_key)).dump(2) + "\n", dump_out);
            else
                emit(write_region(catalog::build(dump_key).region), dump_out);
            return kPass;
        }
        if (render->parsed()) {
            std::vector<RenderSpec> panels;
            if (render_figure) {
                panels = figure(render_figure).panels;
            } else {
                if (render_set.empty()) throw UsageError("give --set or --figure");
                Region r = load_region(render_set);
                RenderSpec spec;
                spec.title = render_set;
                spec.layers.push_back({r, "set"});
                panels.push_back(std::move(spec));
                if (!render_orbit.empty()) panels.push_back(orbit_panel(render_orbit + " orbit", build_group(render_orbit), r));
            }
            emit(render_svg(panels), render_out);
            return kPass;
        }
        if (bi->parsed()) {
            IterationSpec spec = IterationSpec::paper(bi_depth);
            if (bi_dilation != 3) {
                const Scalar s = Rational(1, bi_dilation);
                spec.d = bi_dilation;
                spec.seed = Region{ConvexPolygon::box(0, 0, s, s)};
                spec.step = {s, s};
            }
            Region r = bi_scaling ? scaling_set(spec) : wavelet_from_scaling(spec);
            emit(write_region(transport(parse_transport(bi_transport), r)), bi_out);
            return kPass;
        }
        if (fc->parsed()) {
            auto rep = fourier_tiling_check(load_region(fc_set), parse_lattice(fc_lattice), fc_radius, fc_tol, fc_k);
            std::cout << fourier_report_to_json(rep).dump(2) << "\n";
            return rep.passed ? kPass : kFail;
        }
        if (compat->parsed()) return run_compat(compat_json);
        if (group_dump->parsed()) {
            std::cout << group_to_json(build_group(group_name)).dump(2) << "\n";
            return kPass;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kBadArgs;
}
