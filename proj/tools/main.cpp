#include "toric/catalog.hpp"
#include "toric/certify.hpp"
#include "toric/fanfile.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace toric;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::pair<Fan, std::string> load_fan(const std::string& path) {
    FanFile f = parse_fan_file(read_file(path));
    return {f.to_fan(), f.name.value_or(fs::path(path).stem().string())};
}

FamilySpec parse_family(const std::string& family, const std::vector<int>& params) {
    FamilySpec spec{};
    if (family == "V") {
        if (params.size() != 1) throw std::invalid_argument("usage: catalog V <k>");
        spec.family = Family::V;
        spec.k = params[0];
    } else if (family == "S") {
        if (params.size() != 2) throw std::invalid_argument("usage: catalog S <m> <k>");
        spec.family = Family::S;
        spec.m = params[0];
        spec.k = params[1];
    } else if (family == "X") {
        if (params.size() != 2) throw std::invalid_argument("usage: catalog X <m> <k>");
        spec.family = Family::X;
        spec.m = params[0];
        spec.k = params[1];
    } else if (family == "W") {
        if (params.size() != 1) throw std::invalid_argument("usage: catalog W <m>");
        spec.family = Family::W;
        spec.m = params[0];
    } else {
        throw std::invalid_argument("unknown family \"" + family + "\" (expected V, S, X or W)");
    }
    return spec;
}

std::string classify_label(const Fan& fan) {
    struct Ref {
        const char* label;
        Fan fan;
    };
    static const std::vector<Ref> refs = [] {
        std::vector<Ref> r;
        r.push_back({"P^2", build_fan(2, {{1, 0}, {0, 1}, {-1, -1}})});
        r.push_back({"P^1xP^1", build_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}})});
        r.push_back({"Bl_1 P^2", build_fan(2, {{1, 0}, {0, 1}, {1, 1}, {-1, -1}})});
        r.push_back({"Bl_2 P^2", build_fan(2, {{1, 0}, {0, 1}, {1, 1}, {-1, -1}, {0, -1}})});
        r.push_back({"Bl_3 P^2 (V_1)",
                     build_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}})});
        return r;
    }();
    for (const auto& ref : refs)
        if (lattice_equivalent(ref.fan, fan)) return ref.label;
    return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Einstein-Kahler certification for smooth toric Fano manifolds"};
    app.require_subcommand(1);

    std::string file;
    bool analytic = false, as_json = false;
    std::uint64_t seed = kDefaultSeed;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    int bound = 3;
    std::string family;
    std::vector<int> params;
    std::string dir;

    auto* check = app.add_subcommand("check", "validate a fan file");
    check->add_option("file", file)->required();

    auto* certify_cmd = app.add_subcommand("certify", "run the full certification pipeline");
    certify_cmd->add_option("file", file)->required();
    certify_cmd->add_flag("--analytic", analytic, "attach integral/positivity evidence");
    certify_cmd->add_option("--seed", seed, "random seed for the analytic layer");
    certify_cmd->add_flag("--json", as_json, "emit a machine-readable report");

    auto* symmetry_cmd = app.add_subcommand("symmetry", "print the fan automorphism group");
    symmetry_cmd->add_option("file", file)->required();

    auto* bary_cmd = app.add_subcommand("barycenter", "print the exact barycenter of Delta");
    bary_cmd->add_option("file", file)->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "emit a family fan (V|S|X|W)");
    catalog_cmd->add_option("family", family)->required();
    catalog_cmd->add_option("params", params, "k for V, m k for S/X, m for W");

    auto* classify_cmd = app.add_subcommand("classify-surfaces",
                                            "enumerate smooth toric Fano surfaces");
    classify_cmd->add_option("--bound", bound, "ray coordinate bound (default 3)");

    auto* batch_cmd = app.add_subcommand("batch", "certify every .fan file in a directory");
    batch_cmd->add_option("dir", dir)->required();
    batch_cmd->add_option("--jobs", jobs, "concurrent certifications");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) {
            auto [fan, name] = load_fan(file);
            ValidationReport rep = validate_smooth_fano(fan);
            std::cout << name << ": primitive=" << (rep.is_primitive_ok ? "ok" : "FAIL")
                      << " complete=" << (rep.is_complete ? "ok" : "FAIL")
                      << " regular=" << (rep.is_regular ? "ok" : "FAIL")
                      << " fano=" << (rep.is_fano ? "ok" : "FAIL") << "\n";
            for (const auto& d : rep.diagnostics) std::cout << "  ! " << d << "\n";
        } else if (certify_cmd->parsed()) {
            auto [fan, name] = load_fan(file);
            CertifyOptions opts;
            opts.analytic = analytic;
            opts.seed = seed;
            CertificationReport rep = certify(fan, opts);
            rep.name = name;
            if (as_json)
                std::cout << report_to_json(rep).dump(2) << "\n";
            else
                std::cout << report_to_text(rep);
        } else if (symmetry_cmd->parsed()) {
            auto [fan, name] = load_fan(file);
            SymmetryGroup w = fan_automorphisms(fan);
            SymmetryVerdict v = is_symmetric(fan, w);
            std::cout << name << ": |W(X)| = " << w.order() << ", symmetric: "
                      << (v.is_symmetric ? "yes" : "no") << "\n";
            for (const auto& b : v.fixed_space_basis)
                std::cout << "  fixed-space witness: " << rational_vector_string(b) << "\n";
        } else if (bary_cmd->parsed()) {
            auto [fan, name] = load_fan(file);
            FanoPolytope delta = polytope_from_fan(fan);
            std::cout << rational_vector_string(barycenter(delta).point) << "\n";
        } else if (catalog_cmd->parsed()) {
            FamilySpec spec = parse_family(family, params);
            Fan fan = family_fan(spec);
            std::cout << serialize_fan_file(fan_file_from_fan(fan, spec.name()));
        } else if (classify_cmd->parsed()) {
            std::vector<Fan> classes = enumerate_smooth_fano_surfaces(bound);
            std::cout << classes.size() << " lattice-equivalence classes:\n";
            int symmetric_count = 0;
            for (const auto& fan : classes) {
                CertificationReport rep = certify(fan);
                if (rep.symmetry_checked && rep.symmetric.is_symmetric) ++symmetric_count;
                std::cout << "  " << classify_label(fan) << ": " << fan.rays.size()
                          << " rays, |W| = " << rep.symmetric.group_order << ", barycenter "
                          << rational_vector_string(rep.bary.point) << ", symmetric: "
                          << (rep.symmetric.is_symmetric ? "yes" : "no") << "\n";
            }
            std::cout << symmetric_count << " symmetric\n";
        } else if (batch_cmd->parsed()) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(dir))
                if (entry.path().extension() == ".fan") files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            std::vector<std::string> outputs(files.size());
            std::atomic<size_t> next{0};
            int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
            std::vector<std::thread> pool;
            for (int t = 0; t < n_threads; ++t)
                pool.emplace_back([&] {
                    for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
                        try {
                            auto [fan, name] = load_fan(files[i].string());
                            CertificationReport rep = certify(fan);
                            rep.name = name;
                            outputs[i] = report_to_text(rep);
                        } catch (const std::exception& e) {
                            outputs[i] = files[i].string() + ": error: " + e.what() + "\n";
                        }
                    }
                });
            for (auto& th : pool) th.join();
            for (const auto& out : outputs) std::cout << out;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
