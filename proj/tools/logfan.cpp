// logfan: fs monoids, fans, and the vertical-boundary calculus on the
// command line. Reads JSON descriptions, prints JSON results.

#include "logfan/json_io.hpp"
#include "logfan/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using logfan::io::json;
using logfan::io::Workspace;
using logfan::monoid::Element;
using logfan::monoid::FsMonoid;
using logfan::monoid::MonoidHom;
using logfan::zlin::BigInt;
using logfan::zlin::DomainError;
using logfan::zlin::IntMatrix;
using logfan::zlin::VecZ;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

VecZ parse_vector(const std::string& text) {
    VecZ out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(BigInt(tok));
    if (out.empty()) throw UsageError("expected a comma-separated integer vector");
    return out;
}

Workspace build_workspace(const std::vector<std::string>& lets) {
    Workspace ws;
    for (const auto& def : lets) {
        auto eq = def.find('=');
        if (eq == std::string::npos) throw UsageError("--let expects name=file.json");
        std::string name = def.substr(0, eq);
        json j = load_json(def.substr(eq + 1));
        if (j.contains("free_dim"))
            ws.monoids.emplace(name, logfan::io::monoid_from_json(j, ws));
        else if (j.contains("rank"))
            ws.fans.emplace(name, logfan::io::fan_from_json(j, ws));
        else
            throw UsageError("--let file is neither a monoid nor a fan: " + name);
    }
    return ws;
}

// theta for verify-acyclic: a full hom from N, or the shorthand {"image": ...}.
MonoidHom load_theta(const json& j, const FsMonoid& p, const Workspace& ws) {
    if (j.contains("matrix")) {
        MonoidHom h = logfan::io::hom_from_json(j, ws);
        if (h.source().free_dim() != 1 || !h.source().torsion().empty())
            throw DomainError("theta must have source N");
        return h;
    }
    if (!j.contains("image")) throw UsageError("theta file needs 'matrix' or 'image'");
    const json& img = j.at("image");
    Element e;
    if (img.is_array()) {
        for (const auto& x : img) e.free.push_back(logfan::io::big_from_json(x));
        e.tor = VecZ(p.torsion().size(), BigInt(0));
    } else {
        for (const auto& x : img.at("free")) e.free.push_back(logfan::io::big_from_json(x));
        if (img.contains("tor"))
            for (const auto& x : img.at("tor")) e.tor.push_back(logfan::io::big_from_json(x));
        else
            e.tor = VecZ(p.torsion().size(), BigInt(0));
    }
    IntMatrix m(p.ambient_dim(), 1);
    VecZ full = p.to_full(e);
    for (std::size_t i = 0; i < full.size(); ++i) m.at(i, 0) = full[i];
    return MonoidHom::create(FsMonoid::natural(1), p, std::move(m));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logfan: fs monoids, toric fans, and the vertical-boundary calculus"};
    app.require_subcommand(1);
    std::vector<std::string> lets;
    app.add_option("--let", lets, "define a named object: name=file.json")->take_all();

    std::string monoid_file, hom_file, left_file, right_file, fan_file, fine_file, coarse_file;
    std::string morphism_file, complex_file, theta_file, point_text, functional_text;
    std::vector<std::string> fan_files;
    bool unreduced = false, quick = false;
    std::uint64_t seed = 1;

    auto* monoid_cmd = app.add_subcommand("monoid", "operations on fs monoids");
    monoid_cmd->require_subcommand(1);
    auto add_monoid_sub = [&](const char* name, const char* desc) {
        auto* sub = monoid_cmd->add_subcommand(name, desc);
        sub->add_option("--monoid", monoid_file, "monoid JSON file")->required();
        return sub;
    };
    auto* m_info = add_monoid_sub("info", "summary of a monoid");
    auto* m_faces = add_monoid_sub("faces", "the face lattice");
    auto* m_saturate = add_monoid_sub("saturate", "saturation inside the groupification");
    auto* m_split = add_monoid_sub("split-torsion", "split off the torsion units");
    auto* m_dual = add_monoid_sub("dual", "dual monoid in the dual lattice");

    auto* hom_cmd = app.add_subcommand("hom", "operations on monoid homs");
    hom_cmd->require_subcommand(1);
    auto* h_vertical = hom_cmd->add_subcommand("vertical", "is the hom vertical?");
    h_vertical->add_option("--hom", hom_file)->required();
    auto* h_exact = hom_cmd->add_subcommand("exact", "is the hom exact?");
    h_exact->add_option("--hom", hom_file)->required();
    auto* h_coker = hom_cmd->add_subcommand("cokernel", "saturated cokernel");
    h_coker->add_option("--hom", hom_file)->required();
    auto* h_pushout = hom_cmd->add_subcommand("pushout", "pushout of two homs with a common source");
    h_pushout->add_option("--left", left_file)->required();
    h_pushout->add_option("--right", right_file)->required();

    auto* fan_cmd = app.add_subcommand("fan", "operations on fans");
    fan_cmd->require_subcommand(1);
    auto* f_spec = fan_cmd->add_subcommand("spec", "Spec of a sharp monoid");
    f_spec->add_option("--monoid", monoid_file)->required();
    auto* f_star = fan_cmd->add_subcommand("star", "star subdivision at a point");
    f_star->add_option("--fan", fan_file)->required();
    f_star->add_option("--point", point_text, "primitive point, e.g. 1,1")->required();
    auto* f_refine = fan_cmd->add_subcommand("refine", "common refinement");
    f_refine->add_option("--fan", fan_files, "fan JSON files")->required()->expected(-2);
    auto* f_vb = fan_cmd->add_subcommand("vertical-boundary", "vertical subfan of a morphism");
    f_vb->add_option("--morphism", morphism_file)->required();
    auto* f_smooth = fan_cmd->add_subcommand("smooth", "resolve to a smooth subdivision");
    f_smooth->add_option("--fan", fan_file)->required();
    auto* f_subdiv = fan_cmd->add_subcommand("is-subdivision", "is one fan a subdivision of another?");
    f_subdiv->add_option("--fine", fine_file)->required();
    f_subdiv->add_option("--coarse", coarse_file)->required();

    auto* topo_cmd = app.add_subcommand("topo", "cross-sections and homology");
    topo_cmd->require_subcommand(1);
    auto* t_cross = topo_cmd->add_subcommand("cross-section", "cross-section at h = 1");
    t_cross->add_option("--fan", fan_file)->required();
    t_cross->add_option("--functional", functional_text, "integer functional, e.g. 1,1,1")->required();
    auto* t_hom = topo_cmd->add_subcommand("homology", "integral homology of a complex");
    t_hom->add_option("--complex", complex_file)->required();
    t_hom->add_flag("--unreduced", unreduced, "report unreduced homology");
    auto* t_ver = topo_cmd->add_subcommand("verify-acyclic", "vertical-boundary acyclicity check");
    t_ver->add_option("--monoid", monoid_file)->required();
    t_ver->add_option("--theta", theta_file)->required();

    auto* verify_cmd = app.add_subcommand("verify", "property suites");
    auto* v_all = verify_cmd->add_subcommand("all", "run every suite");
    v_all->add_option("--seed", seed, "random seed (default 1)");
    v_all->add_flag("--quick", quick, "trimmed case counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Workspace ws = build_workspace(lets);

        if (*m_info) {
            FsMonoid p = logfan::io::monoid_from_json(load_json(monoid_file), ws);
            json out = logfan::io::monoid_to_json(p);
            out["sharp"] = p.is_sharp();
            out["is_group"] = logfan::monoid::monoid_is_group(p);
            out["saturated"] = logfan::monoid::is_saturated(p);
            out["gp"] = logfan::io::abelian_group_to_json(logfan::monoid::groupification(p).group);
            emit(out);
        } else if (*m_faces) {
            FsMonoid p = logfan::io::monoid_from_json(load_json(monoid_file), ws);
            if (!logfan::monoid::is_saturated(p))
                throw DomainError("faces: precondition failed, the monoid is not saturated");
            auto faces = logfan::monoid::faces(p);
            json out;
            out["count"] = faces.size();
            out["faces"] = json::array();
            for (const auto& f : faces) out["faces"].push_back(logfan::io::face_to_json(f));
            emit(out);
        } else if (*m_saturate) {
            FsMonoid p = logfan::io::monoid_from_json(load_json(monoid_file), ws);
            emit(logfan::io::monoid_to_json(logfan::monoid::saturate(p)));
        } else if (*m_split) {
            FsMonoid p = logfan::io::monoid_from_json(load_json(monoid_file), ws);
            auto ts = logfan::monoid::torsion_split(p);
            json out;
            out["tf"] = logfan::io::monoid_to_json(ts.tf);
            out["tor"] = logfan::io::abelian_group_to_json(ts.tor);
            out["canon"] = logfan::io::monoid_to_json(ts.canon);
            out["split"] = logfan::io::monoid_to_json(ts.split);
            emit(out);
        } else if (*m_dual) {
            FsMonoid p = logfan::io::monoid_from_json(load_json(monoid_file), ws);
            emit(logfan::io::monoid_to_json(logfan::monoid::dual_monoid(p)));
        } else if (*h_vertical) {
            auto h = logfan::io::hom_from_json(load_json(hom_file), ws);
            if (!logfan::monoid::is_saturated(h.source()) ||
                !logfan::monoid::is_saturated(h.target()))
                throw DomainError("vertical: precondition failed, source and target must be saturated");
            emit(json{{"vertical", logfan::monoid::is_vertical(h)}});
        } else if (*h_exact) {
            auto h = logfan::io::hom_from_json(load_json(hom_file), ws);
            if (!logfan::monoid::is_saturated(h.source()) ||
                !logfan::monoid::is_saturated(h.target()))
                throw DomainError("exact: precondition failed, source and target must be saturated");
            emit(json{{"exact", logfan::monoid::is_exact(h)}});
        } else if (*h_coker) {
            auto h = logfan::io::hom_from_json(load_json(hom_file), ws);
            auto coker = logfan::monoid::saturated_cokernel(h);
            json out;
            out["cokernel"] = logfan::io::monoid_to_json(coker);
            out["is_group"] = logfan::monoid::monoid_is_group(coker);
            emit(out);
        } else if (*h_pushout) {
            auto left = logfan::io::hom_from_json(load_json(left_file), ws);
            auto right = logfan::io::hom_from_json(load_json(right_file), ws);
            auto po = logfan::monoid::pushout(left, right);
            json out;
            out["pushout"] = logfan::io::monoid_to_json(po.result);
            out["into_left"] = logfan::io::hom_to_json(po.into_left);
            out["into_right"] = logfan::io::hom_to_json(po.into_right);
            emit(out);
        } else if (*f_spec) {
            FsMonoid p = logfan::io::monoid_from_json(load_json(monoid_file), ws);
            emit(logfan::io::fan_to_json(logfan::fan::spec_fan(p)));
        } else if (*f_star) {
            auto f = logfan::io::fan_from_json(load_json(fan_file), ws);
            emit(logfan::io::fan_to_json(logfan::fan::star_subdivision(f, parse_vector(point_text))));
        } else if (*f_refine) {
            std::vector<logfan::fan::Fan> fans;
            for (const auto& file : fan_files)
                fans.push_back(logfan::io::fan_from_json(load_json(file), ws));
            emit(logfan::io::fan_to_json(logfan::fan::common_refinement(fans)));
        } else if (*f_vb) {
            auto m = logfan::io::fan_morphism_from_json(load_json(morphism_file), ws);
            auto sub = logfan::fan::vertical_subfan(m);
            json out;
            out["fan"] = logfan::io::fan_to_json(sub);
            out["cones"] = sub.cones().size();
            out["vertical"] = logfan::fan::is_vertical_fan_morphism(m);
            emit(out);
        } else if (*f_smooth) {
            auto f = logfan::io::fan_from_json(load_json(fan_file), ws);
            auto r = logfan::fan::make_smooth(f);
            json out;
            out["fan"] = logfan::io::fan_to_json(r.fan);
            out["steps"] = json::array();
            for (const auto& s : r.trace) {
                json js;
                js["center"] = json::array();
                for (const auto& x : s.center) js["center"].push_back(logfan::io::big_to_json(x));
                js["max_multiplicity"] = logfan::io::big_to_json(s.max_multiplicity);
                js["num_at_max"] = s.num_at_max;
                js["total_multiplicity"] = logfan::io::big_to_json(s.total_multiplicity);
                js["simplicializing"] = s.simplicializing;
                out["steps"].push_back(std::move(js));
            }
            out["all_smooth"] = (r.final_max_multiplicity == 1);
            emit(out);
        } else if (*f_subdiv) {
            auto fine = logfan::io::fan_from_json(load_json(fine_file), ws);
            auto coarse = logfan::io::fan_from_json(load_json(coarse_file), ws);
            emit(json{{"subdivision", logfan::fan::is_subdivision(fine, coarse)}});
        } else if (*t_cross) {
            auto f = logfan::io::fan_from_json(load_json(fan_file), ws);
            emit(logfan::io::complex_to_json(
                logfan::topo::cross_section(f, parse_vector(functional_text))));
        } else if (*t_hom) {
            auto c = logfan::io::complex_from_json(load_json(complex_file));
            auto t = logfan::topo::triangulate(c);
            emit(logfan::io::homology_to_json(logfan::topo::homology(t, !unreduced)));
        } else if (*t_ver) {
            FsMonoid p = logfan::io::monoid_from_json(load_json(monoid_file), ws);
            auto theta = load_theta(load_json(theta_file), p, ws);
            emit(logfan::io::acyclicity_report_to_json(
                logfan::topo::verify_boundary_acyclicity(p, theta)));
        } else if (*v_all) {
            auto results = logfan::verify::run_all_suites(seed, quick);
            json out;
            out["seed"] = seed;
            out["suites"] = json::array();
            int failures = 0;
            for (const auto& r : results) {
                json js;
                js["name"] = r.name;
                js["cases"] = r.cases;
                js["failures"] = r.failures;
                if (!r.notes.empty()) js["notes"] = r.notes;
                failures += r.failures;
                out["suites"].push_back(std::move(js));
            }
            out["ok"] = (failures == 0);
            emit(out);
            if (failures != 0) return 1;
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
