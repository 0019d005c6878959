#include "logfan/topo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace logfan::topo {

using zlin::dot;
using zlin::is_zero;
using zlin::lex_less;

bool PolyComplex::is_simplicial() const {
    return std::all_of(cells.begin(), cells.end(),
                       [](const Cell& c) { return c.verts.size() == c.dim + 1; });
}

namespace {

// Primitive integer vector on the ray through (v, 1).
VecZ lift_vertex(const VecQ& v) {
    BigInt denom_lcm = 1;
    for (const auto& x : v) {
        BigInt d = BigInt(denominator(x));
        denom_lcm = denom_lcm / boost::multiprecision::gcd(denom_lcm, d) * d;
    }
    VecZ out(v.size() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * denom_lcm;
        out[i] = BigInt(numerator(scaled));
    }
    out[v.size()] = denom_lcm;
    return zlin::primitive(out);
}

}  // namespace

PolyComplex complete_complex(std::vector<VecQ> vertices,
                             std::vector<std::vector<std::size_t>> cells) {
    PolyComplex out;
    out.vertices = std::move(vertices);
    const std::size_t n = out.vertices.empty() ? 0 : out.vertices[0].size();

    std::vector<VecZ> lifted;
    std::map<VecZ, std::size_t> lifted_to_index;
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        if (out.vertices[i].size() != n) throw DomainError("complex: ragged vertex coordinates");
        lifted.push_back(lift_vertex(out.vertices[i]));
        if (!lifted_to_index.emplace(lifted.back(), i).second)
            throw DomainError("complex: duplicate vertex");
    }

    std::set<std::vector<std::size_t>> seen;
    std::map<std::vector<std::size_t>, std::size_t> cell_dim;
    for (auto& cell : cells) {
        std::sort(cell.begin(), cell.end());
        cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
        if (cell.empty()) continue;
        std::vector<VecZ> rays;
        for (std::size_t i : cell) {
            if (i >= out.vertices.size()) throw DomainError("complex: vertex index out of range");
            rays.push_back(lifted[i]);
        }
        auto cone = zlin::cone_from_generators(rays, n + 1);
        if (!cone.pointed()) throw std::logic_error("complex: lifted cell cone must be pointed");
        // Faces of the polytope are the nonzero faces of the lifted cone.
        for (const auto& face : zlin::enumerate_faces(cone)) {
            if (face.ray_indices.empty()) continue;
            std::vector<std::size_t> fverts;
            for (std::size_t ri : face.ray_indices) {
                auto it = lifted_to_index.find(cone.extreme_rays[ri]);
                if (it == lifted_to_index.end())
                    throw DomainError("complex: cell has a non-vertex extreme point");
                fverts.push_back(it->second);
            }
            std::sort(fverts.begin(), fverts.end());
            if (seen.insert(fverts).second) {
                std::vector<VecZ> frays;
                for (std::size_t i : fverts) frays.push_back(lifted[i]);
                auto fcone = zlin::cone_from_generators(frays, n + 1);
                cell_dim[fverts] = fcone.dim - 1;
            }
        }
    }

    for (const auto& verts : seen) {
        PolyComplex::Cell c;
        c.verts = verts;
        c.dim = cell_dim[verts];
        out.cells.push_back(std::move(c));
    }
    std::sort(out.cells.begin(), out.cells.end(),
              [](const PolyComplex::Cell& a, const PolyComplex::Cell& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return a.verts < b.verts;
              });
    for (std::size_t i = 0; i < out.cells.size(); ++i)
        for (std::size_t j = 0; j < out.cells.size(); ++j) {
            if (i == j) continue;
            const auto& vi = out.cells[i].verts;
            const auto& vj = out.cells[j].verts;
            if (vj.size() < vi.size() &&
                std::includes(vi.begin(), vi.end(), vj.begin(), vj.end()))
                out.cells[i].faces.push_back(j);
        }
    return out;
}

PolyComplex cross_section(const Fan& f, const VecZ& h) {
    if (h.size() != f.lattice_rank()) throw DomainError("cross_section: functional has wrong size");
    std::vector<VecQ> vertices;
    std::map<VecZ, std::size_t> ray_to_vertex;
    for (const auto& c : f.cones())
        for (const auto& r : c.rays()) {
            if (ray_to_vertex.count(r)) continue;
            BigInt hr = dot(h, r);
            if (hr <= 0)
                throw DomainError("cross_section: functional is not positive on a ray");
            VecQ v(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) v[i] = Rat(r[i], hr);
            ray_to_vertex[r] = vertices.size();
            vertices.push_back(std::move(v));
        }
    std::vector<std::vector<std::size_t>> cells;
    for (std::size_t i : f.maximal_indices()) {
        const auto& c = f.cones()[i];
        if (c.is_zero()) continue;
        std::vector<std::size_t> cell;
        for (const auto& r : c.rays()) cell.push_back(ray_to_vertex.at(r));
        cells.push_back(std::move(cell));
    }
    return complete_complex(std::move(vertices), std::move(cells));
}

PolyComplex triangulate(const PolyComplex& c) {
    // Pulling triangulation, memoized by cell index; restriction to a face of
    // a cell is the triangulation of that face, so the pieces are compatible.
    std::vector<std::vector<std::vector<std::size_t>>> tri(c.cells.size());
    std::vector<bool> done(c.cells.size(), false);

    std::function<const std::vector<std::vector<std::size_t>>&(std::size_t)> pull =
        [&](std::size_t idx) -> const std::vector<std::vector<std::size_t>>& {
        if (done[idx]) return tri[idx];
        const auto& cell = c.cells[idx];
        if (cell.verts.size() == cell.dim + 1) {
            tri[idx].push_back(cell.verts);
        } else {
            std::size_t vstar = cell.verts.front();  // least vertex index
            for (std::size_t fidx : cell.faces) {
                const auto& face = c.cells[fidx];
                if (face.dim + 1 != cell.dim) continue;
                if (std::binary_search(face.verts.begin(), face.verts.end(), vstar)) continue;
                for (const auto& s : pull(fidx)) {
                    std::vector<std::size_t> simplex = s;
                    simplex.push_back(vstar);
                    std::sort(simplex.begin(), simplex.end());
                    tri[idx].push_back(std::move(simplex));
                }
            }
        }
        done[idx] = true;
        return tri[idx];
    };

    std::set<std::vector<std::size_t>> simplices;
    for (std::size_t i = 0; i < c.cells.size(); ++i)
        for (const auto& s : pull(i)) {
            // close under subsets
            for (std::size_t mask = 1; mask < (std::size_t(1) << s.size()); ++mask) {
                std::vector<std::size_t> sub;
                for (std::size_t b = 0; b < s.size(); ++b)
                    if (mask & (std::size_t(1) << b)) sub.push_back(s[b]);
                simplices.insert(std::move(sub));
            }
        }

    PolyComplex out;
    out.vertices = c.vertices;
    for (const auto& s : simplices) {
        PolyComplex::Cell cell;
        cell.verts = s;
        cell.dim = s.size() - 1;
        out.cells.push_back(std::move(cell));
    }
    std::sort(out.cells.begin(), out.cells.end(),
              [](const PolyComplex::Cell& a, const PolyComplex::Cell& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return a.verts < b.verts;
              });
    for (std::size_t i = 0; i < out.cells.size(); ++i)
        for (std::size_t j = 0; j < out.cells.size(); ++j) {
            if (i == j) continue;
            const auto& vi = out.cells[i].verts;
            const auto& vj = out.cells[j].verts;
            if (vj.size() < vi.size() &&
                std::includes(vi.begin(), vi.end(), vj.begin(), vj.end()))
                out.cells[i].faces.push_back(j);
        }
    return out;
}

ChainComplex chain_complex(const PolyComplex& c, bool reduced) {
    if (!c.is_simplicial())
        throw DomainError("chain_complex: complex is not simplicial; triangulate first");
    ChainComplex out;
    out.reduced = reduced;

    std::size_t top = 0;
    for (const auto& cell : c.cells) top = std::max(top, cell.dim);
    std::vector<std::vector<std::vector<std::size_t>>> by_dim(c.empty() ? 0 : top + 1);
    for (const auto& cell : c.cells) by_dim[cell.dim].push_back(cell.verts);
    for (auto& level : by_dim) std::sort(level.begin(), level.end());

    out.rank.resize(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d) out.rank[d] = by_dim[d].size();

    out.boundary.resize(by_dim.size());
    for (std::size_t d = 1; d < by_dim.size(); ++d) {
        std::map<std::vector<std::size_t>, std::size_t> row_index;
        for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i) row_index[by_dim[d - 1][i]] = i;
        IntMatrix b(by_dim[d - 1].size(), by_dim[d].size());
        for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
            const auto& s = by_dim[d][j];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<std::size_t> face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                auto it = row_index.find(face);
                if (it == row_index.end())
                    throw std::logic_error("chain_complex: complex is not closed under faces");
                b.at(it->second, j) = (drop % 2 == 0) ? 1 : -1;
            }
        }
        out.boundary[d] = std::move(b);
    }
    if (!by_dim.empty()) {
        IntMatrix aug(1, by_dim[0].size());
        for (std::size_t j = 0; j < by_dim[0].size(); ++j) aug.at(0, j) = 1;
        out.augmentation = std::move(aug);
    }

    // boundary-of-boundary vanishes
    for (std::size_t d = 2; d < out.boundary.size(); ++d)
        if (!(out.boundary[d - 1] * out.boundary[d]).is_zero())
            throw std::logic_error("chain_complex: boundary squared is nonzero");
    if (reduced && out.boundary.size() >= 2)
        if (!(out.augmentation * out.boundary[1]).is_zero())
            throw std::logic_error("chain_complex: augmented boundary squared is nonzero");
    return out;
}

bool HomologyProfile::all_zero() const {
    for (const auto& e : entries)
        if (e.betti != 0 || !e.torsion.empty()) return false;
    return true;
}

HomologyProfile homology(const PolyComplex& c, bool reduced) {
    HomologyProfile out;
    out.reduced = reduced;
    if (c.empty()) {
        out.empty_complex = true;
        return out;
    }
    ChainComplex cc = chain_complex(c, reduced);
    const std::size_t top = cc.rank.size() - 1;

    auto rank_of = [](const IntMatrix& m) {
        return zlin::smith_normal_form(m).rank();
    };

    for (std::size_t q = 0; q <= top; ++q) {
        HomologyEntry e;
        e.degree = static_cast<long>(q);
        std::size_t rank_q;  // rank of the boundary map leaving degree q
        if (q == 0) {
            rank_q = reduced ? rank_of(cc.augmentation) : 0;
        } else {
            rank_q = rank_of(cc.boundary[q]);
        }
        std::size_t rank_q1 = (q + 1 <= top) ? rank_of(cc.boundary[q + 1]) : 0;
        e.betti = cc.rank[q] - rank_q - rank_q1;
        if (q + 1 <= top) {
            auto snf = zlin::smith_normal_form(cc.boundary[q + 1]);
            for (const auto& d : snf.diag)
                if (d >= 2) e.torsion.push_back(d);
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

AcyclicityReport verify_boundary_acyclicity(const FsMonoid& p, const MonoidHom& theta) {
    if (theta.source().free_dim() != 1 || !theta.source().torsion().empty())
        throw DomainError("verify_boundary_acyclicity: theta must be a hom from N");
    if (monoid::monoid_is_group(p))
        throw DomainError("verify_boundary_acyclicity: hypothesis P+ != 0 fails (P is a group)");
    {
        auto gp = monoid::groupification(p);
        if (!gp.group.is_torsion_free())
            throw DomainError("verify_boundary_acyclicity: hypothesis P^gp torsion free fails");
    }
    monoid::Element one{VecZ{BigInt(1)}, {}};
    if (theta.apply(one).is_zero())
        throw DomainError("verify_boundary_acyclicity: hypothesis theta nontrivial fails");

    // Reduce to the sharp quotient; Spec and verticality are unchanged.
    FsMonoid q = p;
    MonoidHom th = theta;
    if (!p.is_sharp()) {
        auto sh = monoid::sharpen(p);
        th = monoid::compose(sh.projection, theta);
        q = sh.sharp;
    }

    AcyclicityReport report;
    if (th.apply(one).is_zero()) {
        // theta lands in the units: every ray is killed and W is empty.
        report.w_empty = true;
        report.theta_vertical = false;
        auto sigma = fan::spec_fan(q);
        report.spec_cones = sigma.cones().size();
        report.subfan_cones = 1;
        report.reduced_homology.empty_complex = true;
        return report;
    }

    auto morphism = fan::spec_morphism_to_N(q, th);
    report.spec_cones = morphism.source.cones().size();
    report.theta_vertical = fan::is_vertical_fan_morphism(morphism);
    Fan subfan = fan::vertical_subfan(morphism);
    report.subfan_cones = subfan.cones().size();

    // Interior functional: evaluation at the canonical interior element.
    auto eta = monoid::interior_vertical_to_N(q);
    auto gp = monoid::groupification(q);
    auto eta_coords = gp.coords(q.to_full(eta.apply(one)));
    if (!eta_coords) throw std::logic_error("interior element escapes the groupification");
    VecZ h = eta_coords->first;

    PolyComplex w = cross_section(subfan, h);
    if (w.empty()) {
        report.w_empty = true;
        report.reduced_homology.empty_complex = true;
        return report;
    }
    report.w_vertices = w.vertices.size();
    report.w_cells = w.cells.size();
    PolyComplex tw = triangulate(w);
    report.reduced_homology = homology(tw, true);
    report.acyclic = report.reduced_homology.all_zero();
    return report;
}

}  // namespace logfan::topo
