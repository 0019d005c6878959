#include "logfan/json_io.hpp"

#include <limits>

namespace logfan::io {

using monoid::Element;
using monoid::FsMonoid;
using monoid::MonoidHom;
using zlin::BigInt;
using zlin::DomainError;
using zlin::IntMatrix;
using zlin::Rat;
using zlin::VecQ;
using zlin::VecZ;

const FsMonoid& Workspace::monoid_named(const std::string& name) const {
    static const FsMonoid n1 = FsMonoid::natural(1);
    if (name == "N") return n1;
    auto it = monoids.find(name);
    if (it == monoids.end()) throw DomainError("unknown monoid name: " + name);
    return it->second;
}

const fan::Fan& Workspace::fan_named(const std::string& name) const {
    auto it = fans.find(name);
    if (it == fans.end()) throw DomainError("unknown fan name: " + name);
    return it->second;
}

json big_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(x));
    return json(x.str());
}

BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw DomainError("expected an integer or integer string");
}

json rat_to_json(const Rat& x) {
    return json(BigInt(numerator(x)).str() + "/" + BigInt(denominator(x)).str());
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (!j.is_string()) throw DomainError("expected a rational 'num/den' string");
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

namespace {

json vec_to_json(const VecZ& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(big_to_json(x));
    return out;
}

VecZ vec_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("expected an integer array");
    VecZ out;
    for (const auto& x : j) out.push_back(big_from_json(x));
    return out;
}

json matrix_to_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
    return out;
}

IntMatrix matrix_from_json(const json& j, std::size_t expect_cols) {
    if (!j.is_array()) throw DomainError("expected a matrix (array of rows)");
    std::vector<VecZ> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r));
    if (rows.empty()) return IntMatrix(0, expect_cols);
    return IntMatrix::from_rows(rows);
}

}  // namespace

json monoid_to_json(const FsMonoid& p) {
    json out;
    out["free_dim"] = p.free_dim();
    out["torsion"] = json::array();
    for (const auto& t : p.torsion()) out["torsion"].push_back(big_to_json(t));
    out["generators"] = json::array();
    for (const auto& g : p.gens()) {
        json jg;
        jg["free"] = vec_to_json(g.free);
        jg["tor"] = vec_to_json(g.tor);
        out["generators"].push_back(std::move(jg));
    }
    return out;
}

FsMonoid monoid_from_json(const json& j, const Workspace& ws) {
    if (j.is_string()) return ws.monoid_named(j.get<std::string>());
    if (!j.is_object()) throw DomainError("monoid: expected an object or a name");
    std::size_t free_dim = j.at("free_dim").get<std::size_t>();
    std::vector<BigInt> torsion;
    if (j.contains("torsion"))
        for (const auto& t : j.at("torsion")) torsion.push_back(big_from_json(t));
    std::vector<Element> gens;
    if (j.contains("generators"))
        for (const auto& g : j.at("generators")) {
            Element e;
            e.free = vec_from_json(g.at("free"));
            e.tor = g.contains("tor") ? vec_from_json(g.at("tor")) : VecZ(torsion.size(), BigInt(0));
            gens.push_back(std::move(e));
        }
    return FsMonoid::create(free_dim, std::move(torsion), std::move(gens));
}

json hom_to_json(const MonoidHom& h) {
    json out;
    out["source"] = monoid_to_json(h.source());
    out["target"] = monoid_to_json(h.target());
    out["matrix"] = matrix_to_json(h.free_block());
    out["torsion_matrix"] = matrix_to_json(h.torsion_rows());
    return out;
}

MonoidHom hom_from_json(const json& j, const Workspace& ws) {
    FsMonoid source = monoid_from_json(j.at("source"), ws);
    FsMonoid target = monoid_from_json(j.at("target"), ws);
    IntMatrix free_block = matrix_from_json(j.at("matrix"), source.free_dim());
    if (free_block.rows() != target.free_dim() && !(free_block.rows() == 0 && target.free_dim() == 0))
        throw DomainError("hom: matrix row count does not match the target free rank");
    IntMatrix torsion_rows(target.torsion().size(), source.ambient_dim());
    if (j.contains("torsion_matrix") && !j.at("torsion_matrix").empty())
        torsion_rows = matrix_from_json(j.at("torsion_matrix"), source.ambient_dim());
    return MonoidHom::from_blocks(std::move(source), std::move(target), free_block, torsion_rows);
}

json fan_to_json(const fan::Fan& f) {
    json out;
    out["rank"] = f.lattice_rank();
    out["cones"] = json::array();
    for (std::size_t i : f.maximal_indices()) {
        const auto& c = f.cones()[i];
        if (c.is_zero() && f.maximal_indices().size() > 1) continue;
        json jc;
        jc["rays"] = json::array();
        for (const auto& r : c.rays()) jc["rays"].push_back(vec_to_json(r));
        out["cones"].push_back(std::move(jc));
    }
    return out;
}

fan::Fan fan_from_json(const json& j, const Workspace& ws) {
    if (j.is_string()) return ws.fan_named(j.get<std::string>());
    if (!j.is_object()) throw DomainError("fan: expected an object or a name");
    std::size_t rank = j.at("rank").get<std::size_t>();
    std::vector<fan::Cone> cones;
    for (const auto& jc : j.at("cones")) {
        std::vector<VecZ> rays;
        for (const auto& r : jc.at("rays")) rays.push_back(vec_from_json(r));
        cones.push_back(fan::Cone::from_rays(rank, std::move(rays)));
    }
    return fan::Fan::from_cones(rank, cones);
}

json fan_morphism_to_json(const fan::FanMorphism& m) {
    json out;
    out["source"] = fan_to_json(m.source);
    out["target"] = fan_to_json(m.target);
    out["matrix"] = matrix_to_json(m.lattice_map);
    return out;
}

fan::FanMorphism fan_morphism_from_json(const json& j, const Workspace& ws) {
    fan::Fan source = fan_from_json(j.at("source"), ws);
    fan::Fan target = fan_from_json(j.at("target"), ws);
    IntMatrix map = matrix_from_json(j.at("matrix"), source.lattice_rank());
    auto m = fan::check_fan_morphism(source, target, map);
    if (!m) throw DomainError("fan morphism: some cone image lies in no target cone");
    return *m;
}

json complex_to_json(const topo::PolyComplex& c) {
    json out;
    out["vertices"] = json::array();
    for (const auto& v : c.vertices) {
        json jv = json::array();
        for (const auto& x : v) jv.push_back(rat_to_json(x));
        out["vertices"].push_back(std::move(jv));
    }
    out["cells"] = json::array();
    for (const auto& cell : c.cells) {
        json jc = json::array();
        for (std::size_t i : cell.verts) jc.push_back(i);
        out["cells"].push_back(std::move(jc));
    }
    return out;
}

topo::PolyComplex complex_from_json(const json& j) {
    std::vector<VecQ> vertices;
    for (const auto& jv : j.at("vertices")) {
        VecQ v;
        for (const auto& x : jv) v.push_back(rat_from_json(x));
        vertices.push_back(std::move(v));
    }
    std::vector<std::vector<std::size_t>> cells;
    for (const auto& jc : j.at("cells")) {
        std::vector<std::size_t> cell;
        for (const auto& i : jc) cell.push_back(i.get<std::size_t>());
        cells.push_back(std::move(cell));
    }
    return topo::complete_complex(std::move(vertices), std::move(cells));
}

json homology_to_json(const topo::HomologyProfile& h) {
    json out;
    out["reduced"] = h.reduced;
    if (h.empty_complex) {
        out["empty"] = true;
        out["acyclic"] = "empty";
        return out;
    }
    out["acyclic"] = h.all_zero();
    out["groups"] = json::array();
    for (const auto& e : h.entries) {
        json je;
        je["degree"] = e.degree;
        je["betti"] = e.betti;
        je["torsion"] = json::array();
        for (const auto& t : e.torsion) je["torsion"].push_back(big_to_json(t));
        out["groups"].push_back(std::move(je));
    }
    return out;
}

json acyclicity_report_to_json(const topo::AcyclicityReport& r) {
    json out;
    if (r.w_empty)
        out["acyclic"] = "empty";
    else
        out["acyclic"] = *r.acyclic;
    out["vertical"] = r.theta_vertical;
    if (r.theta_vertical)
        out["note"] = "theta is vertical; the cross-section is a convex section of the full support";
    out["spec_cones"] = r.spec_cones;
    out["vertical_subfan_cones"] = r.subfan_cones;
    out["w_empty"] = r.w_empty;
    if (!r.w_empty) {
        out["w_vertices"] = r.w_vertices;
        out["w_cells"] = r.w_cells;
        out["reduced_homology"] = homology_to_json(r.reduced_homology);
    }
    return out;
}

json face_to_json(const monoid::Face& f) {
    json out;
    out["selector"] = json::array();
    for (std::size_t i : f.selector) out["selector"].push_back(i);
    out["functionals"] = json::array();
    for (const auto& phi : f.functionals) out["functionals"].push_back(vec_to_json(phi));
    return out;
}

json abelian_group_to_json(const zlin::AbelianGroup& g) {
    json out;
    out["rank"] = g.rank;
    out["invariant_factors"] = json::array();
    for (const auto& f : g.invariant_factors) out["invariant_factors"].push_back(big_to_json(f));
    return out;
}

}  // namespace logfan::io
