#include "logfan/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace logfan::fan {

using monoid::groupification;
using monoid::hilbert_basis;
using zlin::dot;
using zlin::hermite_column_basis;
using zlin::is_zero;
using zlin::lex_less;
using zlin::Rat;
using zlin::solve_integral;
using zlin::VecQ;

// --- Cone -------------------------------------------------------------------

Cone Cone::from_rays(std::size_t lattice_rank, std::vector<VecZ> rays) {
    Cone c;
    c.rank_ = lattice_rank;
    c.geom_ = zlin::cone_from_generators(std::move(rays), lattice_rank);
    return c;
}

bool Cone::contains_cone(const Cone& other) const { return geom_.contains_cone(other.geom_); }

bool Cone::operator==(const Cone& other) const {
    return rank_ == other.rank_ && geom_.equations == other.geom_.equations &&
           geom_.facets == other.geom_.facets;
}

bool Cone::operator<(const Cone& other) const {
    if (dim() != other.dim()) return dim() < other.dim();
    if (geom_.extreme_rays != other.geom_.extreme_rays)
        return std::lexicographical_compare(geom_.extreme_rays.begin(), geom_.extreme_rays.end(),
                                            other.geom_.extreme_rays.begin(),
                                            other.geom_.extreme_rays.end(), lex_less);
    if (geom_.equations != other.geom_.equations)
        return std::lexicographical_compare(geom_.equations.begin(), geom_.equations.end(),
                                            other.geom_.equations.begin(),
                                            other.geom_.equations.end(), lex_less);
    return std::lexicographical_compare(geom_.facets.begin(), geom_.facets.end(),
                                        other.geom_.facets.begin(), other.geom_.facets.end(),
                                        lex_less);
}

Cone dual_cone(const Cone& c) {
    auto dd = zlin::dd_from_inequalities(c.geometry().generators, c.lattice_rank());
    std::vector<VecZ> gens = dd.rays;
    for (const auto& l : dd.lineality) {
        gens.push_back(l);
        gens.push_back(zlin::negate(l));
    }
    return Cone::from_rays(c.lattice_rank(), std::move(gens));
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.lattice_rank() != b.lattice_rank()) throw DomainError("intersect: rank mismatch");
    std::vector<VecZ> ineqs;
    auto push_cone = [&](const Cone& c) {
        for (const auto& f : c.geometry().facets) ineqs.push_back(f);
        for (const auto& e : c.geometry().equations) {
            ineqs.push_back(e);
            ineqs.push_back(zlin::negate(e));
        }
    };
    push_cone(a);
    push_cone(b);
    auto dd = zlin::dd_from_inequalities(ineqs, a.lattice_rank());
    std::vector<VecZ> gens = dd.rays;
    for (const auto& l : dd.lineality) {
        gens.push_back(l);
        gens.push_back(zlin::negate(l));
    }
    return Cone::from_rays(a.lattice_rank(), std::move(gens));
}

std::vector<Cone> cone_faces(const Cone& c) {
    std::vector<Cone> out;
    for (const auto& face : zlin::enumerate_faces(c.geometry())) {
        std::vector<VecZ> rays;
        for (std::size_t i : face.ray_indices) rays.push_back(c.rays()[i]);
        for (const auto& l : c.geometry().lineality) {
            rays.push_back(l);
            rays.push_back(zlin::negate(l));
        }
        out.push_back(Cone::from_rays(c.lattice_rank(), std::move(rays)));
    }
    return out;
}

bool is_simplicial(const Cone& c) { return c.rays().size() == c.dim(); }

bool is_smooth_cone(const Cone& c) {
    if (c.is_zero()) return true;
    if (!c.pointed() || !is_simplicial(c)) return false;
    auto s = zlin::smith_normal_form(IntMatrix::from_cols(c.rays()));
    for (const auto& d : s.diag)
        if (d != 1) return false;
    return true;
}

BigInt multiplicity(const Cone& c) {
    if (c.is_zero()) return 1;
    if (!is_simplicial(c)) throw DomainError("multiplicity: cone is not simplicial");
    auto s = zlin::smith_normal_form(IntMatrix::from_cols(c.rays()));
    BigInt m = 1;
    for (const auto& d : s.diag) m *= d;
    return m;
}

// --- Fan ----------------------------------------------------------------------

Fan Fan::from_cones(std::size_t lattice_rank, const std::vector<Cone>& cones) {
    Fan f;
    f.rank_ = lattice_rank;

    std::vector<Cone> all;
    auto add = [&](const Cone& c) {
        if (c.lattice_rank() != lattice_rank) throw DomainError("fan: cone rank mismatch");
        if (!c.pointed()) throw DomainError("fan: cones must be pointed");
        if (std::find(all.begin(), all.end(), c) == all.end()) all.push_back(c);
    };
    add(Cone::from_rays(lattice_rank, {}));
    for (const auto& c : cones)
        for (const auto& face : cone_faces(c)) add(face);
    std::sort(all.begin(), all.end());

    // Pairwise compatibility: members intersect in a common face of each.
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto faces_i = cone_faces(all[i]);
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            Cone meet = intersect(all[i], all[j]);
            if (std::find(faces_i.begin(), faces_i.end(), meet) == faces_i.end())
                throw DomainError("fan: two cones do not meet in a common face");
            auto faces_j = cone_faces(all[j]);
            if (std::find(faces_j.begin(), faces_j.end(), meet) == faces_j.end())
                throw DomainError("fan: two cones do not meet in a common face");
        }
    }

    f.cones_ = std::move(all);
    f.face_links_.resize(f.cones_.size());
    for (std::size_t i = 0; i < f.cones_.size(); ++i)
        for (std::size_t j = 0; j < f.cones_.size(); ++j) {
            // Within a valid fan, tau is a face of sigma iff its rays are a subset.
            const auto& ri = f.cones_[i].rays();
            const auto& rj = f.cones_[j].rays();
            bool subset = std::all_of(rj.begin(), rj.end(), [&](const VecZ& r) {
                return std::find(ri.begin(), ri.end(), r) != ri.end();
            });
            if (subset) f.face_links_[i].push_back(j);
        }
    return f;
}

std::vector<std::size_t> Fan::maximal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cones_.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cones_.size() && maximal; ++j)
            if (i != j && std::find(face_links_[j].begin(), face_links_[j].end(), i) !=
                              face_links_[j].end())
                maximal = false;
        if (maximal) out.push_back(i);
    }
    if (out.empty() && !cones_.empty()) out.push_back(0);  // the zero fan
    return out;
}

bool Fan::has_cone(const Cone& c) const {
    return std::find(cones_.begin(), cones_.end(), c) != cones_.end();
}

bool Fan::support_contains(const VecZ& v) const {
    return std::any_of(cones_.begin(), cones_.end(),
                       [&](const Cone& c) { return c.contains(v); });
}

bool Fan::operator==(const Fan& other) const {
    return rank_ == other.rank_ && cones_ == other.cones_;
}

// --- morphisms -----------------------------------------------------------------

std::optional<FanMorphism> check_fan_morphism(const Fan& source, const Fan& target,
                                              const IntMatrix& map) {
    if (map.rows() != target.lattice_rank() || map.cols() != source.lattice_rank())
        throw DomainError("fan morphism: lattice map has wrong shape");
    FanMorphism m;
    m.source = source;
    m.target = target;
    m.lattice_map = map;
    for (const auto& c : source.cones()) {
        std::vector<VecZ> image;
        for (const auto& r : c.rays()) image.push_back(map * r);
        std::size_t witness = target.cones().size();
        for (std::size_t t = 0; t < target.cones().size(); ++t) {
            bool ok = std::all_of(image.begin(), image.end(), [&](const VecZ& v) {
                return target.cones()[t].contains(v);
            });
            if (ok) { witness = t; break; }
        }
        if (witness == target.cones().size()) return std::nullopt;
        m.witnesses.push_back(witness);
    }
    return m;
}

Fan vertical_subfan(const FanMorphism& m) {
    std::vector<Cone> keep;
    for (const auto& c : m.source.cones()) {
        bool survives = true;
        for (const auto& r : c.rays())
            if (is_zero(m.lattice_map * r)) { survives = false; break; }
        if (survives) keep.push_back(c);
    }
    return Fan::from_cones(m.source.lattice_rank(), keep);
}

bool is_vertical_fan_morphism(const FanMorphism& m) {
    return vertical_subfan(m) == m.source;
}

// --- subdivision calculus --------------------------------------------------------

namespace {

Rat rational_det(std::vector<VecQ> cols) {
    const std::size_t n = cols.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && cols[c][p] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            for (auto& col : cols) std::swap(col[p], col[c]);
            det = -det;
        }
        det *= cols[c][c];
        for (std::size_t j = c + 1; j < n; ++j) {
            if (cols[j][c] == 0) continue;
            Rat f = cols[j][c] / cols[c][c];
            for (std::size_t i = c; i < n; ++i) cols[j][i] -= f * cols[c][i];
        }
    }
    return det < 0 ? Rat(-det) : det;
}

// Pulling triangulation of a pointed cone into simplicial ray-index sets.
std::vector<std::vector<std::size_t>> triangulate_ray_indices(const ConeGeometry& g) {
    std::vector<std::vector<std::size_t>> out;
    if (g.extreme_rays.size() == g.dim) {
        std::vector<std::size_t> all(g.extreme_rays.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        out.push_back(all);
        return out;
    }
    auto faces = zlin::enumerate_faces(g);
    // Pull from ray 0 (rays are sorted, so this is the lex-least ray).
    for (const auto& face : faces) {
        // facets of g not containing ray 0
        if (face.ray_indices.size() == g.extreme_rays.size()) continue;
        // only codim-1 faces
        std::vector<VecZ> frays;
        for (std::size_t i : face.ray_indices) frays.push_back(g.extreme_rays[i]);
        auto fg = zlin::cone_from_generators(frays, g.ambient_dim);
        if (fg.dim + 1 != g.dim) continue;
        if (std::find(face.ray_indices.begin(), face.ray_indices.end(), 0) !=
            face.ray_indices.end())
            continue;
        auto sub = triangulate_ray_indices(fg);
        for (const auto& s : sub) {
            std::vector<std::size_t> simplex{0};
            for (std::size_t local : s) simplex.push_back(face.ray_indices[local]);
            std::sort(simplex.begin(), simplex.end());
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

// Normalized measure of a pointed cone against the section h = 1, computed in
// the coordinates of a fixed span basis. Additive across interior-disjoint
// subcones of a common pointed cone.
Rat cone_measure(const ConeGeometry& g, const IntMatrix& span, const VecZ& h_ambient) {
    if (g.dim != span.cols()) throw std::logic_error("cone_measure: dimension mismatch");
    std::vector<VecQ> vertices;
    for (const auto& r : g.extreme_rays) {
        auto coord = solve_integral(span, r);
        if (!coord) throw std::logic_error("cone_measure: ray outside the span lattice");
        BigInt hr = dot(h_ambient, r);
        if (hr <= 0) throw std::logic_error("cone_measure: section functional not positive");
        VecQ v(coord->size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat((*coord)[i], hr);
        vertices.push_back(std::move(v));
    }
    Rat total = 0;
    for (const auto& simplex : triangulate_ray_indices(g)) {
        std::vector<VecQ> cols;
        for (std::size_t i : simplex) cols.push_back(vertices[i]);
        total += rational_det(std::move(cols));
    }
    return total;
}

// Does the union of the pieces cover the target cone exactly?
bool cone_covered_by(const Cone& target, const std::vector<Cone>& candidates) {
    if (target.is_zero()) return true;
    IntMatrix span = IntMatrix::from_cols(target.geometry().span_basis);
    // A functional positive on the target away from 0.
    VecZ h = zlin::zero_vec(target.lattice_rank());
    for (const auto& f : target.facets()) h = zlin::add(h, f);
    if (target.facets().empty()) throw std::logic_error("cone_covered_by: target not pointed");

    std::vector<Cone> pieces;
    for (const auto& c : candidates) {
        Cone piece = intersect(target, c);
        if (piece.dim() != target.dim()) continue;
        if (std::find(pieces.begin(), pieces.end(), piece) == pieces.end())
            pieces.push_back(piece);
    }
    Rat total = 0;
    for (const auto& piece : pieces) total += cone_measure(piece.geometry(), span, h);
    return total == cone_measure(target.geometry(), span, h);
}

}  // namespace

bool support_equal(const Fan& a, const Fan& b) {
    if (a.lattice_rank() != b.lattice_rank()) return false;
    for (std::size_t i : a.maximal_indices())
        if (!cone_covered_by(a.cones()[i], b.cones())) return false;
    for (std::size_t i : b.maximal_indices())
        if (!cone_covered_by(b.cones()[i], a.cones())) return false;
    return true;
}

bool is_subdivision(const Fan& fine, const Fan& coarse) {
    if (fine.lattice_rank() != coarse.lattice_rank())
        throw DomainError("is_subdivision: lattice rank mismatch");
    for (const auto& c : fine.cones()) {
        bool inside = std::any_of(coarse.cones().begin(), coarse.cones().end(),
                                  [&](const Cone& big) { return big.contains_cone(c); });
        if (!inside) return false;
    }
    for (std::size_t i : coarse.maximal_indices())
        if (!cone_covered_by(coarse.cones()[i], fine.cones())) return false;
    return true;
}

Fan star_subdivision(const Fan& f, const VecZ& v) {
    if (is_zero(v)) throw DomainError("star_subdivision: point must be nonzero");
    if (zlin::primitive(v) != v) throw DomainError("star_subdivision: point must be primitive");
    if (!f.support_contains(v)) throw DomainError("star_subdivision: point outside the support");

    std::vector<Cone> out;
    for (const auto& c : f.cones()) {
        if (!c.contains(v)) {
            out.push_back(c);
            continue;
        }
        for (const auto& face : cone_faces(c)) {
            if (face.contains(v)) continue;
            std::vector<VecZ> rays = face.rays();
            rays.push_back(v);
            out.push_back(Cone::from_rays(f.lattice_rank(), std::move(rays)));
        }
    }
    return Fan::from_cones(f.lattice_rank(), out);
}

Fan common_refinement(const std::vector<Fan>& fans) {
    if (fans.empty()) throw DomainError("common_refinement: no fans given");
    for (std::size_t i = 1; i < fans.size(); ++i) {
        if (fans[i].lattice_rank() != fans[0].lattice_rank())
            throw DomainError("common_refinement: lattice rank mismatch");
        if (!support_equal(fans[0], fans[i]))
            throw DomainError("common_refinement: supports differ");
    }
    Fan acc = fans[0];
    for (std::size_t i = 1; i < fans.size(); ++i) {
        std::vector<Cone> pieces;
        for (const auto& a : acc.cones())
            for (const auto& b : fans[i].cones()) {
                Cone meet = intersect(a, b);
                if (std::find(pieces.begin(), pieces.end(), meet) == pieces.end())
                    pieces.push_back(meet);
            }
        acc = Fan::from_cones(acc.lattice_rank(), pieces);
    }
    return acc;
}

// --- smoothing ---------------------------------------------------------------------

std::vector<VecZ> cone_hilbert_basis(const Cone& c) {
    if (c.is_zero()) return {};
    IntMatrix span = IntMatrix::from_cols(c.geometry().span_basis);
    return hilbert_basis(c.rays(), span, c.lattice_rank());
}

namespace {

VecZ subdivision_center(const Cone& c) {
    auto hb = cone_hilbert_basis(c);
    for (const auto& h : hb) {
        bool is_ray = std::find(c.rays().begin(), c.rays().end(), h) != c.rays().end();
        if (!is_ray) return h;  // hb is lex-sorted, so this is the lex-least choice
    }
    // No non-generator Hilbert basis element (possible for non-simplicial
    // cones): fall back to the primitive ray sum, an interior point.
    VecZ sum = zlin::zero_vec(c.lattice_rank());
    for (const auto& r : c.rays()) sum = zlin::add(sum, r);
    return zlin::primitive(sum);
}

}  // namespace

SmoothResult make_smooth(const Fan& f) {
    if (f.lattice_rank() > 3) throw BoundError("make_smooth: lattice rank cap is 3");
    SmoothResult out;
    out.fan = f;

    auto stats = [&](const Fan& fan) {
        BigInt maxm = 1, total = 0;
        std::size_t at_max = 0;
        for (std::size_t i : fan.maximal_indices()) {
            const Cone& c = fan.cones()[i];
            if (!is_simplicial(c)) continue;
            BigInt m = multiplicity(c);
            total += m;
            if (m > maxm) { maxm = m; at_max = 1; }
            else if (m == maxm) ++at_max;
        }
        return std::tuple<BigInt, std::size_t, BigInt>(maxm, at_max, total);
    };

    for (int round = 0; round < 4096; ++round) {
        // Phase 1: make every cone simplicial.
        std::optional<VecZ> center;
        for (const auto& c : out.fan.cones())
            if (!is_simplicial(c) && !c.is_zero()) { center = subdivision_center(c); break; }
        if (center) {
            auto [maxm, at_max, total] = stats(out.fan);
            out.trace.push_back({*center, maxm, at_max, total, true});
            out.fan = star_subdivision(out.fan, *center);
            continue;
        }
        // Phase 2: resolve a maximal-multiplicity simplicial cone.
        auto [maxm, at_max, total] = stats(out.fan);
        if (maxm == 1) break;
        for (const auto& c : out.fan.cones()) {
            if (c.is_zero() || !is_simplicial(c)) continue;
            if (multiplicity(c) != maxm) continue;
            center = subdivision_center(c);
            break;
        }
        if (!center) throw std::logic_error("make_smooth: no cone attains the maximum");
        out.trace.push_back({*center, maxm, at_max, total, false});
        out.fan = star_subdivision(out.fan, *center);
        auto [maxm2, at_max2, total2] = stats(out.fan);
        (void)total2;
        bool decreased = (maxm2 < maxm) || (maxm2 == maxm && at_max2 < at_max);
        if (!decreased)
            throw std::logic_error("make_smooth: resolution invariant failed to decrease");
    }
    out.final_max_multiplicity = std::get<0>(stats(out.fan));
    if (out.final_max_multiplicity != 1)
        throw std::logic_error("make_smooth: did not terminate with a smooth fan");
    return out;
}

// --- Spec ---------------------------------------------------------------------------

Fan spec_of_N() {
    return Fan::from_cones(1, {Cone::from_rays(1, {VecZ{BigInt(1)}})});
}

Fan spec_fan(const FsMonoid& p) {
    if (!p.is_sharp()) throw DomainError("spec: monoid is not sharp");
    auto gp = groupification(p);
    if (!gp.group.is_torsion_free()) throw DomainError("spec: groupification has torsion");
    const std::size_t k = gp.group.rank;
    if (k == 0) return Fan::from_cones(0, {});

    std::vector<VecZ> coords;
    for (const auto& g : p.gens()) {
        auto c = gp.coords(p.to_full(g));
        if (!c) throw std::logic_error("spec: generator outside its groupification");
        coords.push_back(c->first);
    }
    auto dd = zlin::dd_from_inequalities(coords, k);
    if (!dd.lineality.empty()) throw std::logic_error("spec: dual cone is not pointed");
    return Fan::from_cones(k, {Cone::from_rays(k, dd.rays)});
}

FanMorphism spec_morphism_to_N(const FsMonoid& p, const MonoidHom& theta) {
    if (theta.source().free_dim() != 1 || !theta.source().torsion().empty())
        throw DomainError("spec morphism: theta must have source N");
    auto gp = groupification(p);
    auto img = gp.coords(p.to_full(theta.apply(monoid::Element{VecZ{BigInt(1)}, {}})));
    if (!img) throw std::logic_error("spec morphism: image outside the groupification");
    IntMatrix row(1, gp.group.rank);
    for (std::size_t j = 0; j < gp.group.rank; ++j) row.at(0, j) = img->first[j];
    auto m = check_fan_morphism(spec_fan(p), spec_of_N(), row);
    if (!m) throw std::logic_error("spec morphism: evaluation map is not a fan morphism");
    return *m;
}

}  // namespace logfan::fan
