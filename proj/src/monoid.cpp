#include "logfan/monoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <cstdlib>
#include <map>
#include <set>

namespace logfan::monoid {

using zlin::dot;
using zlin::hermite_column_basis;
using zlin::is_zero;
using zlin::kernel_basis;
using zlin::lex_less;
using zlin::Rat;
using zlin::saturation_basis;
using zlin::smith_normal_form;
using zlin::solve_integral;
using zlin::solve_rational;
using zlin::unimodular_inverse;
using zlin::VecQ;

const DeskLimits& limits() {
    static DeskLimits l = [] {
        DeskLimits d;
        if (const char* env = std::getenv("LOGFAN_MAX_DIM")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 1) d.max_dim = static_cast<std::size_t>(v);
        }
        return d;
    }();
    return l;
}

bool element_lex_less(const Element& a, const Element& b) {
    if (a.free != b.free) return lex_less(a.free, b.free);
    return lex_less(a.tor, b.tor);
}

// --- FsMonoid ----------------------------------------------------------------

Element FsMonoid::normalize(Element e) const {
    if (e.free.size() != free_dim_ || e.tor.size() != torsion_.size())
        throw DomainError("element does not match the ambient of the monoid");
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        e.tor[i] %= torsion_[i];
        if (e.tor[i] < 0) e.tor[i] += torsion_[i];
    }
    return e;
}

VecZ FsMonoid::to_full(const Element& e) const {
    Element n = normalize(e);
    VecZ v = n.free;
    v.insert(v.end(), n.tor.begin(), n.tor.end());
    return v;
}

Element FsMonoid::from_full(const VecZ& v) const {
    if (v.size() != ambient_dim()) throw DomainError("from_full: dimension mismatch");
    Element e;
    e.free.assign(v.begin(), v.begin() + free_dim_);
    e.tor.assign(v.begin() + free_dim_, v.end());
    return normalize(e);
}

FsMonoid FsMonoid::create(std::size_t free_dim, std::vector<BigInt> torsion,
                          std::vector<Element> generators) {
    FsMonoid p;
    p.free_dim_ = free_dim;
    for (const auto& t : torsion)
        if (t < 2) throw DomainError("ambient torsion moduli must be >= 2");
    p.torsion_ = std::move(torsion);

    std::vector<Element> gens;
    for (auto& g : generators) {
        Element n = p.normalize(std::move(g));
        if (n.is_zero()) continue;
        if (std::find(gens.begin(), gens.end(), n) == gens.end()) gens.push_back(std::move(n));
    }
    p.gens_ = std::move(gens);

    std::vector<VecZ> free_parts;
    for (const auto& g : p.gens_) free_parts.push_back(g.free);
    p.cone_ = zlin::cone_from_generators(free_parts, free_dim);

    for (std::size_t i = 0; i < p.gens_.size(); ++i) {
        bool unit = true;
        for (const auto& f : p.cone_.facets)
            if (dot(f, p.gens_[i].free) != 0) { unit = false; break; }
        if (unit) p.unit_gen_indices_.push_back(i);
    }
    return p;
}

FsMonoid FsMonoid::natural(std::size_t n) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back({zlin::unit_vec(n, i), {}});
    return create(n, {}, std::move(gens));
}

FsMonoid FsMonoid::integers(std::size_t n) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back({zlin::unit_vec(n, i), {}});
        gens.push_back({zlin::negate(zlin::unit_vec(n, i)), {}});
    }
    return create(n, {}, std::move(gens));
}

FsMonoid FsMonoid::zero(std::size_t free_dim) { return create(free_dim, {}, {}); }

FsMonoid FsMonoid::from_free_gens(std::size_t free_dim, std::vector<VecZ> gens) {
    std::vector<Element> es;
    for (auto& g : gens) es.push_back({std::move(g), {}});
    return create(free_dim, {}, std::move(es));
}

IntMatrix FsMonoid::gens_matrix() const {
    std::vector<VecZ> cols;
    for (const auto& g : gens_) cols.push_back(to_full(g));
    if (cols.empty()) return IntMatrix(ambient_dim(), 0);
    return IntMatrix::from_cols(cols);
}

IntMatrix FsMonoid::relation_matrix() const {
    IntMatrix r(ambient_dim(), torsion_.size());
    for (std::size_t i = 0; i < torsion_.size(); ++i) r.at(free_dim_ + i, i) = torsion_[i];
    return r;
}

IntMatrix FsMonoid::group_span_matrix() const { return gens_matrix().hcat(relation_matrix()); }

// --- membership ---------------------------------------------------------------

namespace {

// Sum of the cone facets: a grading vanishing exactly on the unit generators.
VecZ sharp_grading(const FsMonoid& p) {
    VecZ g = zlin::zero_vec(p.free_dim());
    for (const auto& f : p.cone().facets) g = zlin::add(g, f);
    return g;
}

bool in_group_of(const IntMatrix& span, const VecZ& x) {
    return solve_integral(span, x).has_value();
}

IntMatrix units_span_matrix(const FsMonoid& p) {
    std::vector<VecZ> cols;
    for (std::size_t i : p.unit_gen_indices()) cols.push_back(p.to_full(p.gens()[i]));
    IntMatrix u = cols.empty() ? IntMatrix(p.ambient_dim(), 0) : IntMatrix::from_cols(cols);
    return u.hcat(p.relation_matrix());
}

}  // namespace

bool membership(const FsMonoid& p, const Element& x0) {
    Element x = p.normalize(x0);
    if (x.is_zero()) return true;
    if (p.is_zero_monoid()) return false;
    if (!p.cone().contains(x.free)) return false;

    VecZ grading = sharp_grading(p);
    IntMatrix units_span = units_span_matrix(p);

    std::vector<std::size_t> nonunit;
    for (std::size_t i = 0; i < p.gens().size(); ++i)
        if (std::find(p.unit_gen_indices().begin(), p.unit_gen_indices().end(), i) ==
            p.unit_gen_indices().end())
            nonunit.push_back(i);

    std::vector<BigInt> weight;
    std::vector<VecZ> full;
    for (std::size_t i : nonunit) {
        weight.push_back(dot(grading, p.gens()[i].free));
        full.push_back(p.to_full(p.gens()[i]));
    }
    BigInt target = dot(grading, x.free);
    if (target < 0) return false;

    VecZ xfull = p.to_full(x);
    std::size_t budget = limits().max_search_nodes;

    // Depth-first search over coefficient vectors of the non-unit generators
    // with total grading equal to the target; the remainder must be a unit.
    std::function<bool(std::size_t, const BigInt&, const VecZ&)> dfs =
        [&](std::size_t idx, const BigInt& remaining, const VecZ& rest) -> bool {
        if (budget == 0) throw BoundError("membership: search budget exceeded");
        --budget;
        if (idx == nonunit.size())
            return remaining == 0 && in_group_of(units_span, rest);
        BigInt maxc = remaining / weight[idx];
        for (BigInt cnt = 0; cnt <= maxc; ++cnt) {
            VecZ r = zlin::sub(rest, zlin::scale(cnt, full[idx]));
            if (dfs(idx + 1, remaining - cnt * weight[idx], r)) return true;
        }
        return false;
    };
    return dfs(0, target, xfull);
}

bool gp_contains(const FsMonoid& p, const Element& x) {
    return in_group_of(p.group_span_matrix(), p.to_full(x));
}

// --- subgroup structure and ambient quotients --------------------------------

namespace {

struct SubgroupData {
    AbelianGroup group;
    std::vector<VecZ> free_basis;
    std::vector<std::pair<VecZ, BigInt>> torsion_reps;
};

// Structure of the subgroup of Z^n / im(relations) generated by the columns of
// gens, with ambient representatives of a basis.
SubgroupData subgroup_structure(const IntMatrix& gens, const IntMatrix& relations) {
    SubgroupData out;
    IntMatrix m = gens.hcat(relations);
    if (m.cols() == 0) {
        out.group = AbelianGroup{};
        return out;
    }
    IntMatrix lattice = hermite_column_basis(m);  // preimage lattice in Z^n
    const std::size_t s = lattice.cols();

    // Relations expressed in lattice coordinates.
    std::vector<VecZ> xcols;
    for (std::size_t j = 0; j < relations.cols(); ++j) {
        auto y = solve_integral(lattice, relations.col(j));
        if (!y) throw std::logic_error("relations lie in the lattice");
        xcols.push_back(*y);
    }
    IntMatrix x = xcols.empty() ? IntMatrix(s, 0) : IntMatrix::from_cols(xcols);

    auto snf = smith_normal_form(x);
    IntMatrix left_inv = unimodular_inverse(snf.left);
    for (std::size_t i = 0; i < s; ++i) {
        BigInt d = (i < snf.diag.size()) ? snf.diag[i] : BigInt(0);
        if (d == 1) continue;
        VecZ rep = lattice * left_inv.col(i);
        if (d == 0) {
            out.free_basis.push_back(std::move(rep));
        } else {
            out.torsion_reps.emplace_back(std::move(rep), d);
        }
    }
    out.group.rank = out.free_basis.size();
    for (const auto& [rep, ord] : out.torsion_reps) out.group.invariant_factors.push_back(ord);
    return out;
}

struct AmbientQuotient {
    std::size_t new_free_dim = 0;
    std::vector<BigInt> new_torsion;
    IntMatrix proj;  // (d' + t') x n
};

// Presentation of Z^n / im(columns), free coordinates first.
AmbientQuotient quotient_presentation(std::size_t n, const IntMatrix& columns) {
    AmbientQuotient out;
    IntMatrix m = columns.cols() ? columns : IntMatrix(n, 0);
    auto snf = smith_normal_form(m);
    std::vector<VecZ> free_rows, tor_rows;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt d = (i < snf.diag.size()) ? snf.diag[i] : BigInt(0);
        if (d == 1) continue;
        if (d == 0) {
            free_rows.push_back(snf.left.row(i));
        } else {
            tor_rows.push_back(snf.left.row(i));
            out.new_torsion.push_back(d);
        }
    }
    out.new_free_dim = free_rows.size();
    std::vector<VecZ> all_rows = free_rows;
    all_rows.insert(all_rows.end(), tor_rows.begin(), tor_rows.end());
    out.proj = all_rows.empty() ? IntMatrix(0, n) : IntMatrix::from_rows(all_rows);
    return out;
}

FsMonoid monoid_in_quotient(const AmbientQuotient& q, const FsMonoid& p) {
    std::vector<Element> gens;
    FsMonoid shell = FsMonoid::create(q.new_free_dim, q.new_torsion, {});
    for (const auto& g : p.gens()) gens.push_back(shell.from_full(q.proj * p.to_full(g)));
    return FsMonoid::create(q.new_free_dim, q.new_torsion, std::move(gens));
}

}  // namespace

Groupification groupification(const FsMonoid& p) {
    SubgroupData data = subgroup_structure(p.gens_matrix(), p.relation_matrix());
    Groupification out;
    out.group = data.group;
    out.free_basis = data.free_basis;
    out.torsion_reps = data.torsion_reps;

    std::vector<VecZ> cols = data.free_basis;
    std::vector<BigInt> orders;
    for (const auto& [rep, ord] : data.torsion_reps) {
        cols.push_back(rep);
        orders.push_back(ord);
    }
    IntMatrix basis = cols.empty() ? IntMatrix(p.ambient_dim(), 0) : IntMatrix::from_cols(cols);
    IntMatrix solve_m = basis.hcat(p.relation_matrix());
    std::size_t k = data.free_basis.size();
    out.coords = [solve_m, k, orders](const VecZ& v) -> std::optional<std::pair<VecZ, VecZ>> {
        auto y = solve_integral(solve_m, v);
        if (!y) return std::nullopt;
        VecZ free(y->begin(), y->begin() + k);
        VecZ tor(y->begin() + k, y->begin() + k + orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
            tor[i] %= orders[i];
            if (tor[i] < 0) tor[i] += orders[i];
        }
        return std::make_pair(std::move(free), std::move(tor));
    };
    return out;
}

FsMonoid units(const FsMonoid& p) {
    std::vector<Element> gens;
    Element total{zlin::zero_vec(p.free_dim()), zlin::zero_vec(p.torsion().size())};
    for (std::size_t i : p.unit_gen_indices()) {
        const Element& g = p.gens()[i];
        gens.push_back(g);
        total.free = zlin::add(total.free, g.free);
        total.tor = zlin::add(total.tor, g.tor);
    }
    if (!gens.empty())
        gens.push_back(p.normalize({zlin::negate(total.free), zlin::negate(total.tor)}));
    return FsMonoid::create(p.free_dim(), p.torsion(), std::move(gens));
}

// --- homomorphisms ------------------------------------------------------------

namespace {

IntMatrix normalize_hom_matrix(const FsMonoid& source, const FsMonoid& target, IntMatrix m,
                               bool check) {
    const std::size_t ds = source.free_dim(), ts = source.torsion().size();
    const std::size_t dt = target.free_dim(), tt = target.torsion().size();
    if (m.rows() != dt + tt || m.cols() != ds + ts)
        throw DomainError("hom matrix has wrong shape for the given ambients");
    // Free rows must vanish on torsion columns.
    for (std::size_t i = 0; i < dt; ++i)
        for (std::size_t j = 0; j < ts; ++j)
            if (m.at(i, ds + j) != 0)
                throw DomainError("hom matrix maps torsion into the free part");
    // Torsion rows reduce mod the target moduli; order conditions must hold.
    for (std::size_t k = 0; k < tt; ++k) {
        const BigInt& mod = target.torsion()[k];
        for (std::size_t j = 0; j < ds + ts; ++j) {
            m.at(dt + k, j) %= mod;
            if (m.at(dt + k, j) < 0) m.at(dt + k, j) += mod;
        }
        if (check) {
            for (std::size_t j = 0; j < ts; ++j)
                if ((source.torsion()[j] * m.at(dt + k, ds + j)) % mod != 0)
                    throw DomainError("hom matrix is not well defined on the torsion relations");
        }
    }
    return m;
}

}  // namespace

MonoidHom MonoidHom::create_unchecked(FsMonoid source, FsMonoid target, IntMatrix full_matrix) {
    MonoidHom h;
    h.matrix_ = normalize_hom_matrix(source, target, std::move(full_matrix), true);
    h.source_ = std::move(source);
    h.target_ = std::move(target);
    return h;
}

MonoidHom MonoidHom::create(FsMonoid source, FsMonoid target, IntMatrix full_matrix) {
    MonoidHom h = create_unchecked(std::move(source), std::move(target), std::move(full_matrix));
    for (const auto& g : h.source_.gens())
        if (!membership(h.target_, h.apply(g)))
            throw DomainError("hom does not map a generator into the target monoid");
    return h;
}

MonoidHom MonoidHom::from_blocks(FsMonoid source, FsMonoid target, const IntMatrix& free_block,
                                 const IntMatrix& torsion_rows) {
    const std::size_t ds = source.free_dim(), ts = source.torsion().size();
    const std::size_t dt = target.free_dim(), tt = target.torsion().size();
    if (free_block.rows() != dt || free_block.cols() != ds)
        throw DomainError("free block has wrong shape");
    if (tt > 0 && (torsion_rows.rows() != tt || torsion_rows.cols() != ds + ts))
        throw DomainError("torsion rows have wrong shape");
    IntMatrix m(dt + tt, ds + ts);
    for (std::size_t i = 0; i < dt; ++i)
        for (std::size_t j = 0; j < ds; ++j) m.at(i, j) = free_block.at(i, j);
    for (std::size_t i = 0; i < tt; ++i)
        for (std::size_t j = 0; j < ds + ts; ++j) m.at(dt + i, j) = torsion_rows.at(i, j);
    return create(std::move(source), std::move(target), std::move(m));
}

MonoidHom MonoidHom::identity(const FsMonoid& p) {
    MonoidHom h;
    h.source_ = p;
    h.target_ = p;
    h.matrix_ = IntMatrix::identity(p.ambient_dim());
    return h;
}

Element MonoidHom::apply(const Element& e) const {
    return target_.from_full(matrix_ * source_.to_full(e));
}

IntMatrix MonoidHom::free_block() const {
    IntMatrix a(target_.free_dim(), source_.free_dim());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = matrix_.at(i, j);
    return a;
}

IntMatrix MonoidHom::torsion_rows() const {
    const std::size_t dt = target_.free_dim(), tt = target_.torsion().size();
    IntMatrix b(tt, source_.ambient_dim());
    for (std::size_t i = 0; i < tt; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) = matrix_.at(dt + i, j);
    return b;
}

MonoidHom compose(const MonoidHom& second, const MonoidHom& first) {
    if (second.source().ambient_dim() != first.target().ambient_dim() ||
        second.source().free_dim() != first.target().free_dim())
        throw DomainError("compose: inner ambients do not match");
    return MonoidHom::create_unchecked(first.source(), second.target(),
                                       second.matrix() * first.matrix());
}

bool hom_equal_on_source(const MonoidHom& a, const MonoidHom& b) {
    if (a.source().gens() != b.source().gens()) return false;
    if (a.target().free_dim() != b.target().free_dim() ||
        a.target().torsion() != b.target().torsion())
        return false;
    for (const auto& g : a.source().gens())
        if (a.apply(g) != b.apply(g)) return false;
    return true;
}

// --- sharpening and quotients ---------------------------------------------

Sharpening sharpen(const FsMonoid& p) {
    std::vector<VecZ> unit_cols;
    for (std::size_t i : p.unit_gen_indices()) unit_cols.push_back(p.to_full(p.gens()[i]));
    IntMatrix u = unit_cols.empty() ? IntMatrix(p.ambient_dim(), 0) : IntMatrix::from_cols(unit_cols);
    AmbientQuotient q = quotient_presentation(p.ambient_dim(), u.hcat(p.relation_matrix()));
    FsMonoid sharp = monoid_in_quotient(q, p);
    MonoidHom proj = MonoidHom::create_unchecked(p, sharp, q.proj);
    return {std::move(sharp), std::move(proj)};
}

// --- Hilbert bases and saturation -------------------------------------------

std::vector<VecZ> hilbert_basis(const std::vector<VecZ>& rays, const IntMatrix& lattice_basis,
                                std::size_t ambient_dim) {
    auto cone = zlin::cone_from_generators(rays, ambient_dim);
    if (!cone.pointed()) throw DomainError("hilbert_basis: cone is not pointed");
    if (cone.is_zero_cone()) return {};
    if (cone.dim > limits().max_dim) throw BoundError("hilbert_basis: dimension cap exceeded");

    // Intersect the cone with the span of the lattice.
    std::vector<VecZ> ineqs = cone.facets;
    for (const auto& e : cone.equations) {
        ineqs.push_back(e);
        ineqs.push_back(zlin::negate(e));
    }
    IntMatrix lat_orth = kernel_basis(lattice_basis.transpose());
    for (std::size_t j = 0; j < lat_orth.cols(); ++j) {
        VecZ e = lat_orth.col(j);
        ineqs.push_back(e);
        ineqs.push_back(zlin::negate(e));
    }
    auto restricted = zlin::dd_from_inequalities(ineqs, ambient_dim);
    if (!restricted.lineality.empty())
        throw std::logic_error("restricted cone lost pointedness");

    // Primitive ray generators inside the lattice, in lattice coordinates.
    std::vector<VecZ> w;
    for (const auto& r : restricted.rays) {
        auto q = solve_rational(lattice_basis, r);
        if (!q) throw std::logic_error("restricted ray lies in the lattice span");
        BigInt denom_lcm = 1;
        for (const auto& x : *q)
            denom_lcm = denom_lcm / boost::multiprecision::gcd(denom_lcm, BigInt(denominator(x))) *
                        BigInt(denominator(x));
        VecZ coord(q->size());
        for (std::size_t i = 0; i < q->size(); ++i) {
            Rat scaled = (*q)[i] * denom_lcm;
            coord[i] = BigInt(numerator(scaled));
        }
        if (!is_zero(coord)) w.push_back(coord);
    }
    if (w.empty()) return {};
    const std::size_t ell = lattice_basis.cols();
    auto coord_cone = zlin::cone_from_generators(w, ell);

    // Bounding box around the zonotope of the primitive ray generators.
    VecZ lo = zlin::zero_vec(ell), hi = zlin::zero_vec(ell);
    for (const auto& v : coord_cone.generators)
        for (std::size_t j = 0; j < ell; ++j) {
            if (v[j] < 0) lo[j] += v[j];
            if (v[j] > 0) hi[j] += v[j];
        }
    BigInt volume = 1;
    for (std::size_t j = 0; j < ell; ++j) volume *= hi[j] - lo[j] + 1;
    if (volume > BigInt(limits().max_enumeration))
        throw BoundError("hilbert_basis: enumeration box exceeds the desk-scale cap");

    VecZ grading = zlin::zero_vec(ell);
    for (const auto& f : coord_cone.facets) grading = zlin::add(grading, f);

    std::vector<std::pair<BigInt, VecZ>> candidates;
    VecZ point = lo;
    for (;;) {
        if (!is_zero(point) && coord_cone.contains(point))
            candidates.emplace_back(dot(grading, point), point);
        std::size_t j = 0;
        while (j < ell && point[j] == hi[j]) { point[j] = lo[j]; ++j; }
        if (j == ell) break;
        ++point[j];
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return lex_less(a.second, b.second);
              });

    std::vector<VecZ> basis;
    for (const auto& [g, x] : candidates) {
        bool reducible = false;
        for (const auto& h : basis) {
            VecZ diff = zlin::sub(x, h);
            if (is_zero(diff)) { reducible = true; break; }
            if (coord_cone.contains(diff)) { reducible = true; break; }
        }
        if (!reducible) basis.push_back(x);
    }

    std::vector<VecZ> out;
    for (const auto& h : basis) out.push_back(lattice_basis * h);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

FsMonoid saturate(const FsMonoid& p) {
    if (p.free_dim() > limits().max_dim)
        throw BoundError("saturate: free dimension exceeds the desk-scale cap");
    if (p.gens().size() > limits().max_generators)
        throw BoundError("saturate: generator count exceeds the desk-scale cap");
    if (p.is_zero_monoid()) return p;

    const std::size_t d = p.free_dim();
    IntMatrix span = p.group_span_matrix();
    IntMatrix lattice = hermite_column_basis(span);  // preimage lattice of P^gp

    // Functionals cutting out the quotient by the unit directions.
    IntMatrix phi;
    if (p.cone().lineality.empty()) {
        phi = IntMatrix::identity(d);
    } else {
        IntMatrix lin = IntMatrix::from_cols(p.cone().lineality);
        phi = kernel_basis(lin.transpose()).transpose();
    }

    IntMatrix lattice_free(d, lattice.cols());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < lattice.cols(); ++j) lattice_free.at(i, j) = lattice.at(i, j);
    IntMatrix projected_lattice = phi * lattice_free;

    // Unit part of the saturation: the subgroup with free part in the lineality.
    std::vector<Element> gens;
    {
        IntMatrix k = kernel_basis(projected_lattice);
        Element total{zlin::zero_vec(d), zlin::zero_vec(p.torsion().size())};
        bool any = false;
        for (std::size_t j = 0; j < k.cols(); ++j) {
            VecZ full = lattice * k.col(j);
            Element e = p.from_full(full);
            if (e.is_zero()) continue;
            any = true;
            gens.push_back(e);
            total.free = zlin::add(total.free, e.free);
            total.tor = zlin::add(total.tor, e.tor);
        }
        if (any) gens.push_back(p.normalize({zlin::negate(total.free), zlin::negate(total.tor)}));
    }

    // Pointed part: Hilbert basis of the projected cone in the projected lattice.
    std::vector<VecZ> proj_rays;
    for (const auto& g : p.gens()) {
        VecZ pr = phi * g.free;
        if (!is_zero(pr)) proj_rays.push_back(pr);
    }
    if (!proj_rays.empty()) {
        IntMatrix proj_lattice_basis = hermite_column_basis(projected_lattice);
        auto hb = hilbert_basis(proj_rays, proj_lattice_basis, phi.rows());
        for (const auto& h : hb) {
            auto y = solve_integral(phi * lattice_free, h);
            if (!y) throw std::logic_error("Hilbert basis element lies in the projected lattice");
            gens.push_back(p.from_full(lattice * *y));
        }
    }
    return FsMonoid::create(d, p.torsion(), std::move(gens));
}

bool is_saturated(const FsMonoid& p) {
    FsMonoid s = saturate(p);
    for (const auto& g : s.gens())
        if (!membership(p, g)) return false;
    return true;
}

// --- faces ---------------------------------------------------------------

namespace {

std::vector<std::size_t> selector_for_functionals(const FsMonoid& p,
                                                  const std::vector<VecZ>& functionals) {
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < p.gens().size(); ++i) {
        bool inside = true;
        for (const auto& f : functionals)
            if (dot(f, p.gens()[i].free) != 0) { inside = false; break; }
        if (inside) sel.push_back(i);
    }
    return sel;
}

}  // namespace

std::vector<Face> faces(const FsMonoid& p) {
    auto cone_faces = zlin::enumerate_faces(p.cone());
    std::vector<Face> out;
    std::set<std::vector<std::size_t>> seen;
    for (const auto& cf : cone_faces) {
        Face f;
        f.functionals = cf.tight_facets;
        f.selector = selector_for_functionals(p, f.functionals);
        if (seen.insert(f.selector).second) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.selector.size() != b.selector.size()) return a.selector.size() < b.selector.size();
        return a.selector < b.selector;
    });
    return out;
}

Face whole_face(const FsMonoid& p) {
    Face f;
    f.selector = selector_for_functionals(p, {});
    return f;
}

Face unit_face(const FsMonoid& p) {
    Face f;
    f.functionals = p.cone().facets;
    f.selector = selector_for_functionals(p, f.functionals);
    return f;
}

Face minimal_face_containing(const FsMonoid& p, const std::vector<Element>& elems) {
    for (const auto& e : elems)
        if (!membership(p, e)) throw DomainError("minimal_face_containing: element not in the monoid");
    Face f;
    for (const auto& facet : p.cone().facets) {
        bool vanishes = true;
        for (const auto& e : elems)
            if (dot(facet, p.normalize(e).free) != 0) { vanishes = false; break; }
        if (vanishes) f.functionals.push_back(facet);
    }
    f.selector = selector_for_functionals(p, f.functionals);
    return f;
}

bool face_equal(const FsMonoid& p, const Face& a, const Face& b) {
    (void)p;
    return a.selector == b.selector;
}

bool is_face_of(const FsMonoid& p, const Face& f) {
    for (const auto& phi : f.functionals)
        for (const auto& g : p.gens())
            if (dot(phi, g.free) < 0) return false;
    return f.selector == selector_for_functionals(p, f.functionals);
}

FsMonoid face_monoid(const FsMonoid& p, const Face& f) {
    std::vector<Element> gens;
    for (std::size_t i : f.selector) gens.push_back(p.gens()[i]);
    return FsMonoid::create(p.free_dim(), p.torsion(), std::move(gens));
}

bool face_contains(const FsMonoid& p, const Face& f, const Element& x) {
    Element n = p.normalize(x);
    for (const auto& phi : f.functionals)
        if (dot(phi, n.free) != 0) return false;
    return true;
}

FsMonoid localize(const FsMonoid& p, const Face& f) {
    if (!is_face_of(p, f)) throw DomainError("localize: input is not a face of the monoid");
    std::vector<Element> gens = p.gens();
    for (std::size_t i : f.selector) {
        const Element& g = p.gens()[i];
        gens.push_back(p.normalize({zlin::negate(g.free), zlin::negate(g.tor)}));
    }
    return FsMonoid::create(p.free_dim(), p.torsion(), std::move(gens));
}

// --- verticality and exactness ---------------------------------------------

bool is_vertical(const MonoidHom& h) {
    std::vector<Element> images;
    for (const auto& g : h.source().gens()) images.push_back(h.apply(g));
    for (const auto& facet : h.target().cone().facets) {
        bool vanishes_on_all = true;
        for (const auto& img : images)
            if (dot(facet, img.free) != 0) { vanishes_on_all = false; break; }
        if (vanishes_on_all) return false;  // the face generated lies in this facet
    }
    return true;
}

bool is_exact(const MonoidHom& h) {
    const FsMonoid& p = h.source();
    const FsMonoid& q = h.target();
    IntMatrix a = h.free_block();

    // Rational preimage of cone(Q) inside the span of cone(P); exactness of a
    // hom of saturated monoids reduces to this polyhedral containment.
    std::vector<VecZ> ineqs;
    auto pullback_rows = [&](const VecZ& functional, bool with_negative) {
        VecZ row(p.free_dim());
        for (std::size_t j = 0; j < p.free_dim(); ++j) {
            BigInt s = 0;
            for (std::size_t i = 0; i < q.free_dim(); ++i) s += functional[i] * a.at(i, j);
            row[j] = s;
        }
        ineqs.push_back(row);
        if (with_negative) ineqs.push_back(zlin::negate(row));
    };
    for (const auto& f : q.cone().facets) pullback_rows(f, false);
    for (const auto& e : q.cone().equations) pullback_rows(e, true);
    for (const auto& e : p.cone().equations) {
        ineqs.push_back(e);
        ineqs.push_back(zlin::negate(e));
    }

    auto dd = zlin::dd_from_inequalities(ineqs, p.free_dim());
    for (const auto& r : dd.rays)
        if (!p.cone().contains(r)) return false;
    for (const auto& l : dd.lineality)
        if (!p.cone().contains(l) || !p.cone().contains(zlin::negate(l))) return false;
    return true;
}

SharpenedHom sharpen_hom(const MonoidHom& h) {
    Sharpening src = sharpen(h.source());
    Sharpening dst = sharpen(h.target());
    // The projection rows come from a unimodular transform, so an integral
    // section exists; the induced matrix is proj_target * M * section_source.
    IntMatrix proj_s = src.projection.matrix();
    IntMatrix section = [&] {
        // Solve proj_s * X = I columnwise.
        std::vector<VecZ> cols;
        for (std::size_t j = 0; j < proj_s.rows(); ++j) {
            auto x = solve_integral(proj_s, zlin::unit_vec(proj_s.rows(), j));
            if (!x) throw std::logic_error("quotient projection admits an integral section");
            cols.push_back(*x);
        }
        if (cols.empty()) return IntMatrix(proj_s.cols(), 0);
        return IntMatrix::from_cols(cols);
    }();
    IntMatrix induced = dst.projection.matrix() * h.matrix() * section;
    MonoidHom hbar = MonoidHom::create_unchecked(src.sharp, dst.sharp, std::move(induced));
    return {std::move(hbar), std::move(src.projection), std::move(dst.projection)};
}

MonoidHom localize_hom(const MonoidHom& h, const Face& target_face) {
    if (!is_face_of(h.target(), target_face))
        throw DomainError("localize_hom: input is not a face of the target");
    // Preimage face of the source: generators whose image lies in the face.
    std::vector<VecZ> pre_functionals;
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < h.source().gens().size(); ++i)
        if (face_contains(h.target(), target_face, h.apply(h.source().gens()[i])))
            inside.push_back(i);
    for (const auto& facet : h.source().cone().facets) {
        bool vanishes = true;
        for (std::size_t i : inside)
            if (dot(facet, h.source().gens()[i].free) != 0) { vanishes = false; break; }
        if (vanishes) pre_functionals.push_back(facet);
    }
    Face pre;
    pre.functionals = std::move(pre_functionals);
    pre.selector = selector_for_functionals(h.source(), pre.functionals);
    FsMonoid src_loc = localize(h.source(), pre);
    FsMonoid dst_loc = localize(h.target(), target_face);
    return MonoidHom::create_unchecked(std::move(src_loc), std::move(dst_loc), h.matrix());
}

// --- pushouts -----------------------------------------------------------------

Pushout pushout(const MonoidHom& left, const MonoidHom& right) {
    if (left.source().gens() != right.source().gens() ||
        left.source().free_dim() != right.source().free_dim() ||
        left.source().torsion() != right.source().torsion())
        throw DomainError("pushout: the two homs must share their source");

    const FsMonoid& lp = left.target();
    const FsMonoid& rq = right.target();
    const std::size_t nl = lp.ambient_dim(), nr = rq.ambient_dim();
    const std::size_t d = lp.free_dim() + rq.free_dim();

    // Ambient of the direct sum, free coordinates first.
    auto embed_left = [&](const VecZ& v) {
        VecZ out = zlin::zero_vec(d + lp.torsion().size() + rq.torsion().size());
        for (std::size_t i = 0; i < lp.free_dim(); ++i) out[i] = v[i];
        for (std::size_t i = 0; i < lp.torsion().size(); ++i) out[d + i] = v[lp.free_dim() + i];
        return out;
    };
    auto embed_right = [&](const VecZ& v) {
        VecZ out = zlin::zero_vec(d + lp.torsion().size() + rq.torsion().size());
        for (std::size_t i = 0; i < rq.free_dim(); ++i) out[lp.free_dim() + i] = v[i];
        for (std::size_t i = 0; i < rq.torsion().size(); ++i)
            out[d + lp.torsion().size() + i] = v[rq.free_dim() + i];
        return out;
    };
    std::vector<BigInt> sum_torsion = lp.torsion();
    sum_torsion.insert(sum_torsion.end(), rq.torsion().begin(), rq.torsion().end());
    const std::size_t n = d + sum_torsion.size();

    // Antidiagonal images of the shared source generators, plus both relations.
    std::vector<VecZ> cols;
    for (const auto& g : left.source().gens()) {
        VecZ gl = left.matrix() * left.source().to_full(g);
        VecZ gr = right.matrix() * right.source().to_full(g);
        cols.push_back(zlin::sub(embed_left(gl), embed_right(gr)));
    }
    for (std::size_t i = 0; i < sum_torsion.size(); ++i) {
        VecZ r = zlin::zero_vec(n);
        r[d + i] = sum_torsion[i];
        cols.push_back(r);
    }
    IntMatrix quotient_cols = cols.empty() ? IntMatrix(n, 0) : IntMatrix::from_cols(cols);
    AmbientQuotient q = quotient_presentation(n, quotient_cols);

    FsMonoid shell = FsMonoid::create(q.new_free_dim, q.new_torsion, {});
    std::vector<Element> gens;
    for (const auto& g : lp.gens()) gens.push_back(shell.from_full(q.proj * embed_left(lp.to_full(g))));
    for (const auto& g : rq.gens()) gens.push_back(shell.from_full(q.proj * embed_right(rq.to_full(g))));
    FsMonoid amalgam = FsMonoid::create(q.new_free_dim, q.new_torsion, std::move(gens));
    FsMonoid result = saturate(amalgam);

    // Structure maps: proj restricted to each summand embedding.
    IntMatrix incl_l(n, nl), incl_r(n, nr);
    for (std::size_t j = 0; j < nl; ++j) {
        VecZ e = embed_left(zlin::unit_vec(nl, j));
        for (std::size_t i = 0; i < n; ++i) incl_l.at(i, j) = e[i];
    }
    for (std::size_t j = 0; j < nr; ++j) {
        VecZ e = embed_right(zlin::unit_vec(nr, j));
        for (std::size_t i = 0; i < n; ++i) incl_r.at(i, j) = e[i];
    }
    MonoidHom into_left = MonoidHom::create_unchecked(lp, result, q.proj * incl_l);
    MonoidHom into_right = MonoidHom::create_unchecked(rq, result, q.proj * incl_r);
    return {std::move(result), std::move(into_left), std::move(into_right)};
}

FsMonoid saturated_cokernel(const MonoidHom& h) {
    FsMonoid zero = FsMonoid::zero(0);
    IntMatrix to_zero(0, h.source().ambient_dim());
    MonoidHom collapse = MonoidHom::create_unchecked(h.source(), zero, to_zero);
    return pushout(h, collapse).result;
}

bool monoid_is_group(const FsMonoid& p) {
    return p.unit_gen_indices().size() == p.gens().size();
}

// --- torsion splitting -------------------------------------------------------

TorsionSplit torsion_split(const FsMonoid& p) {
    Groupification gp = groupification(p);
    for (const auto& [rep, ord] : gp.torsion_reps)
        if (!membership(p, p.from_full(rep)))
            throw DomainError(
                "torsion_split: a torsion element of the groupification is outside the monoid "
                "(monoid is not saturated)");

    TorsionSplit out;
    const std::size_t k = gp.group.rank;
    std::vector<BigInt> orders = gp.group.invariant_factors;

    std::vector<Element> canon_gens;
    for (const auto& g : p.gens()) {
        auto c = gp.coords(p.to_full(g));
        if (!c) throw std::logic_error("generators lie in the groupification");
        canon_gens.push_back({c->first, c->second});
    }
    out.canon = FsMonoid::create(k, orders, canon_gens);

    std::vector<Element> tf_gens;
    for (const auto& e : canon_gens) tf_gens.push_back({e.free, {}});
    out.tf = FsMonoid::create(k, {}, std::move(tf_gens));

    out.tor = AbelianGroup{0, orders};

    std::vector<Element> split_gens;
    for (const auto& e : canon_gens) {
        split_gens.push_back({e.free, zlin::zero_vec(orders.size())});
    }
    for (std::size_t j = 0; j < orders.size(); ++j) {
        VecZ t = zlin::zero_vec(orders.size());
        t[j] = 1;
        split_gens.push_back({zlin::zero_vec(k), t});
    }
    out.split = FsMonoid::create(k, orders, std::move(split_gens));

    IntMatrix id = IntMatrix::identity(k + orders.size());
    out.to_split = MonoidHom::create_unchecked(out.canon, out.split, id);
    out.from_split = MonoidHom::create_unchecked(out.split, out.canon, id);

    FsMonoid source = p, canon = out.canon;
    auto coords = gp.coords;
    out.canonize = [source, canon, coords](const Element& e) {
        auto c = coords(source.to_full(e));
        if (!c) throw DomainError("canonize: element outside the groupification");
        return canon.normalize({c->first, c->second});
    };
    std::vector<VecZ> basis = gp.free_basis;
    std::vector<std::pair<VecZ, BigInt>> treps = gp.torsion_reps;
    out.decanonize = [source, basis, treps](const Element& e) {
        VecZ v = zlin::zero_vec(source.ambient_dim());
        for (std::size_t i = 0; i < basis.size(); ++i)
            v = zlin::add(v, zlin::scale(e.free[i], basis[i]));
        for (std::size_t j = 0; j < treps.size(); ++j)
            v = zlin::add(v, zlin::scale(e.tor[j], treps[j].first));
        return source.from_full(v);
    };
    return out;
}

// --- support functionals and interior elements -------------------------------

namespace {

// Lift a functional given in span coordinates to a canonical ambient functional.
VecZ lift_functional(const ConeGeometry& cone, const VecZ& functional_span_coords) {
    IntMatrix span = IntMatrix::from_cols(cone.span_basis);
    auto lift = solve_integral(span.transpose(), functional_span_coords);
    if (!lift) throw std::logic_error("span basis is saturated");
    // Canonicalize modulo the equation lattice.
    VecZ v = *lift;
    IntMatrix eq = cone.equations.empty() ? IntMatrix(cone.ambient_dim, 0)
                                          : hermite_column_basis(IntMatrix::from_cols(cone.equations));
    for (std::size_t j = 0; j < eq.cols(); ++j) {
        std::size_t prow = 0;
        while (prow < eq.rows() && eq.at(prow, j) == 0) ++prow;
        if (prow == eq.rows()) continue;
        BigInt q = v[prow] / eq.at(prow, j);
        BigInt r = v[prow] - q * eq.at(prow, j);
        if (r < 0) q += (eq.at(prow, j) > 0) ? -1 : 1;
        for (std::size_t i = 0; i < eq.rows(); ++i) v[i] -= q * eq.at(i, j);
    }
    return v;
}

VecZ span_coords_of_functional(const ConeGeometry& cone, const VecZ& ambient_functional) {
    VecZ out(cone.span_basis.size());
    for (std::size_t j = 0; j < cone.span_basis.size(); ++j)
        out[j] = dot(ambient_functional, cone.span_basis[j]);
    return out;
}

}  // namespace

MonoidHom support_functional(const FsMonoid& p, const Face& f) {
    if (!is_face_of(p, f)) throw DomainError("support_functional: input is not a face");
    if (f.selector.size() == p.gens().size())
        throw DomainError("support_functional: no functional vanishes exactly on the whole monoid");
    const auto& cone = p.cone();

    // The dual face is generated by the facets tight on f; its Hilbert basis
    // sum is a canonical relative-interior point.
    std::vector<VecZ> dual_gens;
    for (const auto& facet : f.functionals) dual_gens.push_back(span_coords_of_functional(cone, facet));
    const std::size_t s = cone.span_basis.size();
    auto hb = hilbert_basis(dual_gens, IntMatrix::identity(s), s);
    if (hb.empty()) throw std::logic_error("dual face has an empty Hilbert basis");
    VecZ eta_span = zlin::zero_vec(s);
    for (const auto& h : hb) eta_span = zlin::add(eta_span, h);
    VecZ eta = lift_functional(cone, eta_span);

    IntMatrix m(1, p.ambient_dim());
    for (std::size_t j = 0; j < p.free_dim(); ++j) m.at(0, j) = eta[j];
    return MonoidHom::create_unchecked(p, FsMonoid::natural(1), std::move(m));
}

MonoidHom interior_vertical_to_N(const FsMonoid& p) {
    if (p.is_zero_monoid()) throw DomainError("interior_vertical_to_N: monoid is zero");
    if (!p.is_sharp()) throw DomainError("interior_vertical_to_N: monoid is not sharp");

    MonoidHom grading_hom = support_functional(p, unit_face(p));
    VecZ grading(p.free_dim());
    for (std::size_t j = 0; j < p.free_dim(); ++j) grading[j] = grading_hom.matrix().at(0, j);

    std::vector<BigInt> weights;
    for (const auto& g : p.gens()) weights.push_back(dot(grading, g.free));

    BigInt level_cap = 0;
    for (const auto& w : weights) level_cap += w;

    auto is_interior = [&](const Element& e) {
        for (const auto& facet : p.cone().facets)
            if (dot(facet, e.free) <= 0) return false;
        return true;
    };

    for (BigInt level = 1; level <= level_cap; ++level) {
        // All monoid elements of this grading level.
        std::vector<Element> found;
        std::function<void(std::size_t, const BigInt&, Element)> dfs =
            [&](std::size_t idx, const BigInt& remaining, Element acc) {
                if (idx == p.gens().size()) {
                    if (remaining == 0) found.push_back(p.normalize(acc));
                    return;
                }
                BigInt maxc = remaining / weights[idx];
                for (BigInt cnt = 0; cnt <= maxc; ++cnt) {
                    Element next = acc;
                    next.free = zlin::add(next.free, zlin::scale(cnt, p.gens()[idx].free));
                    next.tor = zlin::add(next.tor, zlin::scale(cnt, p.gens()[idx].tor));
                    dfs(idx + 1, remaining - cnt * weights[idx], std::move(next));
                }
            };
        dfs(0, level, Element{zlin::zero_vec(p.free_dim()), zlin::zero_vec(p.torsion().size())});

        std::vector<Element> interior;
        for (auto& e : found)
            if (is_interior(e)) interior.push_back(e);
        if (interior.empty()) continue;
        std::sort(interior.begin(), interior.end(), element_lex_less);
        interior.erase(std::unique(interior.begin(), interior.end()), interior.end());

        const Element& chosen = interior.front();
        IntMatrix m(p.ambient_dim(), 1);
        VecZ full = p.to_full(chosen);
        for (std::size_t i = 0; i < full.size(); ++i) m.at(i, 0) = full[i];
        return MonoidHom::create_unchecked(FsMonoid::natural(1), p, std::move(m));
    }
    throw DomainError("interior_vertical_to_N: no interior element found (monoid not sharp?)");
}

// --- duality -------------------------------------------------------------------

FsMonoid dual_monoid(const FsMonoid& p) {
    if (!p.is_sharp()) throw DomainError("dual_monoid: monoid is not sharp");
    Groupification gp = groupification(p);
    if (!gp.group.is_torsion_free())
        throw DomainError("dual_monoid: groupification has torsion");
    const std::size_t k = gp.group.rank;
    if (k == 0) return FsMonoid::zero(0);

    std::vector<VecZ> coords;
    for (const auto& g : p.gens()) {
        auto c = gp.coords(p.to_full(g));
        if (!c) throw std::logic_error("generator outside its groupification");
        coords.push_back(c->first);
    }
    // Dual cone in the dual lattice Z^k, generated by its Hilbert basis.
    auto dd = zlin::dd_from_inequalities(coords, k);
    if (!(dd.lineality.empty())) throw std::logic_error("dual of a sharp monoid's cone is pointed");
    auto hb = hilbert_basis(dd.rays, IntMatrix::identity(k), k);
    return FsMonoid::from_free_gens(k, hb);
}

// --- misc ----------------------------------------------------------------------

bool monoid_equal(const FsMonoid& a, const FsMonoid& b) {
    if (a.free_dim() != b.free_dim() || a.torsion() != b.torsion()) return false;
    for (const auto& g : a.gens())
        if (!membership(b, g)) return false;
    for (const auto& g : b.gens())
        if (!membership(a, g)) return false;
    return true;
}

DirectSum direct_sum(const FsMonoid& a, const FsMonoid& b) {
    const std::size_t d = a.free_dim() + b.free_dim();
    std::vector<BigInt> torsion = a.torsion();
    torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
    const std::size_t n = d + torsion.size();

    auto embed = [&](const VecZ& v, bool left) {
        VecZ out = zlin::zero_vec(n);
        std::size_t foff = left ? 0 : a.free_dim();
        std::size_t toff = d + (left ? 0 : a.torsion().size());
        std::size_t fd = left ? a.free_dim() : b.free_dim();
        for (std::size_t i = 0; i < fd; ++i) out[foff + i] = v[i];
        for (std::size_t i = 0; i + fd < v.size(); ++i) out[toff + i] = v[fd + i];
        return out;
    };

    // Normalize the concatenated torsion into a divisibility chain.
    IntMatrix rel(n, torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) rel.at(d + i, i) = torsion[i];
    AmbientQuotient q = quotient_presentation(n, rel);

    FsMonoid shell = FsMonoid::create(q.new_free_dim, q.new_torsion, {});
    std::vector<Element> gens;
    for (const auto& g : a.gens()) gens.push_back(shell.from_full(q.proj * embed(a.to_full(g), true)));
    for (const auto& g : b.gens()) gens.push_back(shell.from_full(q.proj * embed(b.to_full(g), false)));
    FsMonoid sum = FsMonoid::create(q.new_free_dim, q.new_torsion, std::move(gens));

    IntMatrix incl_a(n, a.ambient_dim()), incl_b(n, b.ambient_dim());
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) {
        VecZ e = embed(zlin::unit_vec(a.ambient_dim(), j), true);
        for (std::size_t i = 0; i < n; ++i) incl_a.at(i, j) = e[i];
    }
    for (std::size_t j = 0; j < b.ambient_dim(); ++j) {
        VecZ e = embed(zlin::unit_vec(b.ambient_dim(), j), false);
        for (std::size_t i = 0; i < n; ++i) incl_b.at(i, j) = e[i];
    }
    MonoidHom ia = MonoidHom::create_unchecked(a, sum, q.proj * incl_a);
    MonoidHom ib = MonoidHom::create_unchecked(b, sum, q.proj * incl_b);
    return {std::move(sum), std::move(ia), std::move(ib)};
}

std::vector<Element> bounded_elements(const FsMonoid& p, const BigInt& height_bound) {
    // Height = total generator coefficient; deterministic bounded enumeration.
    std::set<std::pair<VecZ, VecZ>> seen;
    std::vector<Element> out;
    std::function<void(std::size_t, const BigInt&, Element)> dfs =
        [&](std::size_t idx, const BigInt& remaining, Element acc) {
            Element n = p.normalize(acc);
            if (seen.insert({n.free, n.tor}).second) out.push_back(n);
            if (idx == p.gens().size()) return;
            dfs(idx + 1, remaining, acc);
            if (remaining > 0) {
                Element next = acc;
                next.free = zlin::add(next.free, p.gens()[idx].free);
                next.tor = zlin::add(next.tor, p.gens()[idx].tor);
                dfs(idx, remaining - 1, std::move(next));
            }
        };
    dfs(0, height_bound, Element{zlin::zero_vec(p.free_dim()), zlin::zero_vec(p.torsion().size())});
    std::sort(out.begin(), out.end(), element_lex_less);
    return out;
}

bool ideal_contains(const MonoidIdeal& ideal, const Element& x) {
    for (const auto& g : ideal.generators) {
        Element diff{zlin::sub(ideal.owner.normalize(x).free, ideal.owner.normalize(g).free),
                     zlin::sub(ideal.owner.normalize(x).tor, ideal.owner.normalize(g).tor)};
        if (membership(ideal.owner, ideal.owner.normalize(diff))) return true;
    }
    return false;
}

}  // namespace logfan::monoid
