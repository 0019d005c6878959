#include "logfan/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace logfan::verify {

using monoid::Element;
using monoid::membership;
using zlin::dot;
using zlin::is_zero;
using zlin::lex_less;

long rand_int(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

FsMonoid random_saturated_monoid(Rng& rng, std::size_t max_rank, std::size_t max_gens) {
    for (;;) {
        std::size_t d = static_cast<std::size_t>(rand_int(rng, 1, (long)max_rank));
        std::size_t n = static_cast<std::size_t>(rand_int(rng, 1, (long)std::min<std::size_t>(max_gens, d + 2)));
        std::vector<VecZ> gens;
        for (std::size_t i = 0; i < n; ++i) {
            VecZ g(d);
            for (auto& x : g) x = BigInt(rand_int(rng, -2, 2));
            if (!is_zero(g)) gens.push_back(g);
        }
        if (gens.empty()) continue;
        try {
            return monoid::saturate(FsMonoid::from_free_gens(d, gens));
        } catch (const zlin::BoundError&) {
            continue;
        }
    }
}

FsMonoid random_sharp_monoid(Rng& rng, std::size_t max_rank, std::size_t max_gens, bool nonzero) {
    for (;;) {
        FsMonoid p = random_saturated_monoid(rng, max_rank, max_gens);
        FsMonoid sharp = monoid::sharpen(p).sharp;
        if (nonzero && sharp.is_zero_monoid()) continue;
        if (!monoid::groupification(sharp).group.is_torsion_free()) continue;
        return sharp;
    }
}

FsMonoid random_torsion_monoid(Rng& rng, std::size_t max_rank) {
    FsMonoid sharp = random_sharp_monoid(rng, max_rank, 4, true);
    long modulus = rand_int(rng, 2, 4);
    FsMonoid torsion = FsMonoid::create(0, {BigInt(modulus)},
                                        {Element{{}, VecZ{BigInt(1)}}});
    FsMonoid sum = monoid::direct_sum(sharp, torsion).sum;
    // Twist some generators by torsion so the split is not a relabeling.
    std::vector<Element> gens = sum.gens();
    for (auto& g : gens)
        if (!is_zero(g.free) && rand_int(rng, 0, 1) == 1)
            g.tor[0] += rand_int(rng, 0, modulus - 1);
    return FsMonoid::create(sum.free_dim(), sum.torsion(), gens);
}

Element random_element(Rng& rng, const FsMonoid& p, long max_coeff) {
    Element acc{zlin::zero_vec(p.free_dim()), zlin::zero_vec(p.torsion().size())};
    for (const auto& g : p.gens()) {
        long c = rand_int(rng, 0, max_coeff);
        acc.free = zlin::add(acc.free, zlin::scale(BigInt(c), g.free));
        acc.tor = zlin::add(acc.tor, zlin::scale(BigInt(c), g.tor));
    }
    return p.normalize(acc);
}

std::optional<MonoidHom> random_hom(Rng& rng, const FsMonoid& source, const FsMonoid& target,
                                    int attempts) {
    const std::size_t ns = source.ambient_dim(), nt = target.ambient_dim();
    const std::size_t m = source.gens().size();
    for (int attempt = 0; attempt < attempts; ++attempt) {
        // Prescribe random target images for the generators, then solve for an
        // ambient matrix realizing them, with slack in the target relations.
        std::vector<VecZ> images;
        for (std::size_t i = 0; i < m; ++i)
            images.push_back(target.to_full(random_element(rng, target, 2)));

        const std::size_t unknowns = nt * ns + m * target.torsion().size();
        IntMatrix sys(m * nt, unknowns);
        VecZ rhs(m * nt);
        for (std::size_t j = 0; j < m; ++j) {
            VecZ g = source.to_full(source.gens()[j]);
            for (std::size_t i = 0; i < nt; ++i) {
                for (std::size_t k = 0; k < ns; ++k) sys.at(j * nt + i, i * ns + k) = g[k];
                for (std::size_t l = 0; l < target.torsion().size(); ++l)
                    if (i == target.free_dim() + l)
                        sys.at(j * nt + i, nt * ns + j * target.torsion().size() + l) =
                            target.torsion()[l];
                rhs[j * nt + i] = images[j][i];
            }
        }
        auto sol = zlin::solve_integral(sys, rhs);
        if (!sol) continue;
        IntMatrix mat(nt, ns);
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t k = 0; k < ns; ++k) mat.at(i, k) = (*sol)[i * ns + k];
        try {
            return MonoidHom::create(source, target, std::move(mat));
        } catch (const zlin::DomainError&) {
            continue;
        }
    }
    return std::nullopt;
}

fan::Fan random_complete_fan_2d(Rng& rng) {
    for (;;) {
        std::vector<VecZ> rays;
        std::size_t n = static_cast<std::size_t>(rand_int(rng, 3, 6));
        for (std::size_t i = 0; i < n; ++i) {
            VecZ r(2);
            r[0] = BigInt(rand_int(rng, -3, 3));
            r[1] = BigInt(rand_int(rng, -3, 3));
            if (!is_zero(r)) rays.push_back(zlin::primitive(r));
        }
        std::sort(rays.begin(), rays.end(), lex_less);
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        if (rays.size() < 3) continue;
        // Order by angle: upper half plane first, exact cross-product compare.
        auto half = [](const VecZ& v) {
            return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
        };
        std::sort(rays.begin(), rays.end(), [&](const VecZ& a, const VecZ& b) {
            if (half(a) != half(b)) return half(a) < half(b);
            BigInt cross = a[0] * b[1] - a[1] * b[0];
            return cross > 0;
        });
        // Consecutive rays must span pointed 2-d cones.
        bool ok = true;
        std::vector<fan::Cone> cones;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const VecZ& a = rays[i];
            const VecZ& b = rays[(i + 1) % rays.size()];
            BigInt cross = a[0] * b[1] - a[1] * b[0];
            if (cross <= 0) { ok = false; break; }
            cones.push_back(fan::Cone::from_rays(2, {a, b}));
        }
        if (!ok) continue;
        try {
            return fan::Fan::from_cones(2, cones);
        } catch (const zlin::DomainError&) {
            continue;
        }
    }
}

fan::Fan random_fan(Rng& rng, std::size_t rank) {
    if (rank == 2) {
        if (rand_int(rng, 0, 1) == 0) return random_complete_fan_2d(rng);
        // A single subdivided quadrant-like cone.
        fan::Fan f = fan::Fan::from_cones(
            2, {fan::Cone::from_rays(2, {VecZ{BigInt(1), BigInt(0)},
                                         VecZ{BigInt(rand_int(rng, -2, 1)), BigInt(rand_int(rng, 1, 3))}})});
        for (int i = 0, n = rand_int(rng, 0, 2); i < n; ++i)
            f = fan::star_subdivision(f, random_support_point(rng, f));
        return f;
    }
    // rank 3: a simplicial cone or the square cone, randomly star subdivided.
    std::vector<fan::Cone> seeds;
    if (rand_int(rng, 0, 1) == 0) {
        seeds.push_back(fan::Cone::from_rays(
            3, {VecZ{BigInt(1), BigInt(0), BigInt(0)}, VecZ{BigInt(0), BigInt(1), BigInt(0)},
                VecZ{BigInt(rand_int(rng, 0, 2)), BigInt(rand_int(rng, 0, 2)),
                     BigInt(rand_int(rng, 1, 3))}}));
    } else {
        seeds.push_back(fan::Cone::from_rays(
            3, {VecZ{BigInt(1), BigInt(0), BigInt(0)}, VecZ{BigInt(0), BigInt(1), BigInt(0)},
                VecZ{BigInt(0), BigInt(0), BigInt(1)}, VecZ{BigInt(1), BigInt(1), BigInt(-1)}}));
    }
    fan::Fan f = fan::Fan::from_cones(3, seeds);
    for (int i = 0, n = rand_int(rng, 0, 2); i < n; ++i)
        f = fan::star_subdivision(f, random_support_point(rng, f));
    return f;
}

VecZ random_support_point(Rng& rng, const fan::Fan& f) {
    for (;;) {
        auto maxima = f.maximal_indices();
        const fan::Cone& c = f.cones()[maxima[rand_int(rng, 0, (long)maxima.size() - 1)]];
        if (c.rays().empty()) continue;
        VecZ v = zlin::zero_vec(f.lattice_rank());
        for (const auto& r : c.rays())
            v = zlin::add(v, zlin::scale(BigInt(rand_int(rng, 0, 2)), r));
        if (is_zero(v)) continue;
        return zlin::primitive(v);
    }
}

// --- suites -------------------------------------------------------------------

namespace {

struct Check {
    SuiteResult result;
    explicit Check(std::string name) { result.name = std::move(name); }
    void expect(bool ok, const std::string& what) {
        ++result.cases;
        if (!ok) {
            ++result.failures;
            if (result.notes.size() < 8) result.notes.push_back(what);
        }
    }
};

SuiteResult suite_zlin(Rng& rng, int n) {
    Check c("zlin.normal_forms");
    for (int t = 0; t < n; ++t) {
        std::size_t r = 1 + rng() % 4, co = 1 + rng() % 4;
        IntMatrix m(r, co);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < co; ++j) m.at(i, j) = BigInt(rand_int(rng, -4, 4));
        auto s = zlin::smith_normal_form(m);
        IntMatrix d = s.left * m * s.right;
        bool diag_ok = true;
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) {
                BigInt expect = (i == j && i < s.diag.size()) ? s.diag[i] : BigInt(0);
                if (d.at(i, j) != expect) diag_ok = false;
            }
        for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
            if (s.diag[i + 1] != 0 && (s.diag[i] == 0 || s.diag[i + 1] % s.diag[i] != 0))
                diag_ok = false;
        c.expect(diag_ok, "snf identity");
        IntMatrix k = zlin::kernel_basis(m);
        c.expect((m * k).is_zero(), "kernel annihilates");
        bool saturated = true;
        if (k.cols() > 0)
            for (const auto& dd : zlin::smith_normal_form(k).diag)
                if (dd != 1) saturated = false;
        c.expect(saturated, "kernel saturated");
        c.expect(zlin::cokernel(m).rank == m.rows() - (co - k.cols()), "cokernel rank");
    }
    return c.result;
}

SuiteResult suite_vertical_laws(Rng& rng, int n) {
    Check c("monoid.vertical_laws");
    int built = 0;
    while (built < n) {
        FsMonoid p = random_saturated_monoid(rng, 3, 5);
        FsMonoid q = random_saturated_monoid(rng, 3, 5);
        FsMonoid r = random_saturated_monoid(rng, 3, 5);
        auto theta = random_hom(rng, p, q);
        auto eta = random_hom(rng, q, r);
        if (!theta || !eta) continue;
        ++built;
        MonoidHom comp = monoid::compose(*eta, *theta);

        // (1) verticality is invariant under sharpening
        auto sh = monoid::sharpen_hom(*theta);
        c.expect(monoid::is_vertical(*theta) == monoid::is_vertical(sh.hom),
                 "sharpening invariance");
        // (2) localization preserves verticality
        if (monoid::is_vertical(*theta)) {
            for (const auto& face : monoid::faces(q)) {
                MonoidHom loc = monoid::localize_hom(*theta, face);
                c.expect(monoid::is_vertical(loc), "localization preserves verticality");
            }
        }
        // (3) composition of verticals is vertical
        if (monoid::is_vertical(*theta) && monoid::is_vertical(*eta))
            c.expect(monoid::is_vertical(comp), "composite of verticals is vertical");
        // (4) vertical composite forces the outer map vertical
        if (monoid::is_vertical(comp)) c.expect(monoid::is_vertical(*eta), "vertical composite forces the outer map");
        // (5) exact outer + vertical composite forces the inner map vertical
        if (monoid::is_exact(*eta) && monoid::is_vertical(comp))
            c.expect(monoid::is_vertical(*theta), "exact outer map cancels");
        // definition equivalence: the saturated cokernel is a group iff vertical
        c.expect(monoid::monoid_is_group(monoid::saturated_cokernel(*theta)) ==
                     monoid::is_vertical(*theta),
                 "cokernel criterion");
    }
    return c.result;
}

SuiteResult suite_pushout(Rng& rng, int n) {
    Check c("monoid.pushout_invariance");
    int built = 0;
    while (built < n) {
        FsMonoid p = random_saturated_monoid(rng, 2, 3);
        FsMonoid pprime = random_saturated_monoid(rng, 2, 4);
        FsMonoid q = random_saturated_monoid(rng, 2, 4);
        auto top = random_hom(rng, p, pprime);
        auto left = random_hom(rng, p, q);
        if (!top || !left) continue;
        monoid::Pushout po;
        try {
            po = monoid::pushout(*top, *left);
        } catch (const zlin::BoundError&) {
            continue;
        }
        ++built;
        c.expect(monoid::hom_equal_on_source(monoid::compose(po.into_left, *top),
                                             monoid::compose(po.into_right, *left)),
                 "pushout square commutes");
        c.expect(monoid::is_vertical(*left) == monoid::is_vertical(po.into_left),
                 "pushout transfers verticality");
        c.expect(monoid::is_saturated(po.result), "pushout saturated");
    }
    return c.result;
}

SuiteResult suite_torsion_split(Rng& rng, int n) {
    Check c("monoid.torsion_split");
    for (int t = 0; t < n; ++t) {
        FsMonoid p = random_torsion_monoid(rng, 2);
        auto ts = monoid::torsion_split(p);
        c.expect(!ts.tor.invariant_factors.empty(), "torsion present");
        c.expect(monoid::groupification(ts.tf).group.is_torsion_free(), "tf torsion free");
        bool roundtrip = true;
        for (const auto& e : monoid::bounded_elements(p, 3)) {
            Element canon = ts.canonize(e);
            Element there = ts.to_split.apply(canon);
            Element back = ts.from_split.apply(there);
            if (back != canon || ts.decanonize(back) != e) roundtrip = false;
            if (!membership(ts.split, there)) roundtrip = false;
        }
        c.expect(roundtrip, "round trip on bounded elements");
    }
    return c.result;
}

SuiteResult suite_saturate(Rng& rng, int n) {
    Check c("monoid.saturate");
    for (int t = 0; t < n; ++t) {
        std::size_t d = 1 + rng() % 2;
        std::vector<VecZ> gens;
        for (std::size_t i = 0, m = 1 + rng() % 3; i < m; ++i) {
            VecZ g(d);
            for (auto& x : g) x = BigInt(rand_int(rng, -2, 3));
            if (!is_zero(g)) gens.push_back(g);
        }
        if (gens.empty()) continue;
        FsMonoid p = FsMonoid::from_free_gens(d, gens);
        FsMonoid s = monoid::saturate(p);
        c.expect(monoid::monoid_equal(monoid::saturate(s), s), "idempotent");
        // k*x test: bounded elements of the groupification with a positive
        // multiple inside s must already lie in s.
        bool kx = true;
        for (const auto& e : monoid::bounded_elements(s, 3)) {
            Element half = e;
            bool even = true;
            for (auto& x : half.free) {
                if (x % 2 != 0) { even = false; break; }
                x /= 2;
            }
            if (even && monoid::gp_contains(s, half) && !membership(s, half)) kx = false;
        }
        c.expect(kx, "saturation closed under halving");
    }
    return c.result;
}

SuiteResult suite_faces_and_dual(Rng& rng, int n) {
    Check c("monoid.faces_dual");
    for (int t = 0; t < n; ++t) {
        FsMonoid p = random_sharp_monoid(rng, 3, 4);
        auto fs = monoid::faces(p);
        // Face count agrees with the cone face lattice computed by the fan side.
        fan::Cone cone = fan::Cone::from_rays(p.free_dim(), [&] {
            std::vector<VecZ> rays;
            for (const auto& g : p.gens()) rays.push_back(g.free);
            return rays;
        }());
        c.expect(fs.size() == fan::cone_faces(cone).size(), "face count matches the fan");
        // The face lattice of P and the fan of faces of the dual cone are
        // anti-isomorphic, so their sizes agree.
        c.expect(fan::spec_fan(p).cones().size() == fs.size(),
                 "face count matches the dual fan");
        // Support functionals vanish exactly on their face.
        for (const auto& f : fs) {
            if (f.selector.size() == p.gens().size()) continue;
            monoid::MonoidHom eta = monoid::support_functional(p, f);
            bool kernel_exact = true;
            for (const auto& e : monoid::bounded_elements(p, 3)) {
                bool zero = eta.apply(e).is_zero();
                if (zero != monoid::face_contains(p, f, e)) kernel_exact = false;
            }
            c.expect(kernel_exact, "support functional kernel");
        }
        // Summand closure on bounded elements.
        auto elems = monoid::bounded_elements(p, 3);
        bool closed = true;
        for (const auto& f : fs) {
            for (const auto& x : elems)
                for (const auto& y : elems) {
                    Element sum{zlin::add(x.free, y.free), zlin::add(x.tor, y.tor)};
                    if (monoid::face_contains(p, f, p.normalize(sum)) &&
                        (!monoid::face_contains(p, f, x) || !monoid::face_contains(p, f, y)))
                        closed = false;
                }
        }
        c.expect(closed, "summand closure");
        // Double dual in coordinates.
        auto gp = monoid::groupification(p);
        if (gp.group.rank > 0) {
            std::vector<VecZ> coords;
            for (const auto& g : p.gens()) coords.push_back(gp.coords(p.to_full(g))->first);
            FsMonoid pc = FsMonoid::from_free_gens(gp.group.rank, coords);
            c.expect(monoid::monoid_equal(monoid::dual_monoid(monoid::dual_monoid(p)), pc),
                     "double dual");
        }
    }
    return c.result;
}

SuiteResult suite_duality_verticality(Rng& rng, int n) {
    Check c("fan.duality_verticality");
    int built = 0;
    while (built < n) {
        FsMonoid p = random_sharp_monoid(rng, 3, 4);
        Element img = random_element(rng, p, 2);
        if (img.is_zero()) continue;
        IntMatrix m(p.ambient_dim(), 1);
        VecZ full = p.to_full(img);
        for (std::size_t i = 0; i < full.size(); ++i) m.at(i, 0) = full[i];
        MonoidHom theta = MonoidHom::create_unchecked(FsMonoid::natural(1), p, std::move(m));
        ++built;
        c.expect(monoid::is_vertical(theta) ==
                     fan::is_vertical_fan_morphism(fan::spec_morphism_to_N(p, theta)),
                 "monoid vs fan verticality");
    }
    return c.result;
}

SuiteResult suite_subfan_bruteforce(Rng& rng, int n) {
    Check c("fan.vertical_subfan_maximality");
    int built = 0;
    while (built < n) {
        FsMonoid p = random_sharp_monoid(rng, 2, 4);
        Element img = random_element(rng, p, 2);
        if (img.is_zero()) continue;
        IntMatrix m(p.ambient_dim(), 1);
        VecZ full = p.to_full(img);
        for (std::size_t i = 0; i < full.size(); ++i) m.at(i, 0) = full[i];
        MonoidHom theta = MonoidHom::create_unchecked(FsMonoid::natural(1), p, std::move(m));
        auto morphism = fan::spec_morphism_to_N(p, theta);
        if (morphism.source.cones().size() > 6) continue;
        ++built;
        fan::Fan sub = fan::vertical_subfan(morphism);
        // Brute force: the computed subfan is the unique maximal qualifying set.
        const auto& cones = morphism.source.cones();
        std::size_t best = 0;
        bool unique_max = true, matches = false;
        for (std::size_t mask = 1; mask < (std::size_t(1) << cones.size()); ++mask) {
            std::vector<fan::Cone> subset;
            for (std::size_t i = 0; i < cones.size(); ++i)
                if (mask & (std::size_t(1) << i)) subset.push_back(cones[i]);
            bool closed = true, qualifies = true;
            for (const auto& cn : subset) {
                for (const auto& face : fan::cone_faces(cn))
                    if (std::find(subset.begin(), subset.end(), face) == subset.end())
                        closed = false;
                for (const auto& ray : cn.rays())
                    if (is_zero(morphism.lattice_map * ray)) qualifies = false;
            }
            if (!closed || !qualifies) continue;
            if (subset.size() > best) {
                best = subset.size();
                unique_max = true;
                matches = (fan::Fan::from_cones(sub.lattice_rank(), subset) == sub);
            } else if (subset.size() == best) {
                unique_max = false;
            }
        }
        c.expect(best == sub.cones().size() && unique_max && matches,
                 "brute-force maximal subfan");
    }
    return c.result;
}

SuiteResult suite_subdivision(Rng& rng, int n) {
    Check c("fan.subdivision");
    for (int t = 0; t < n; ++t) {
        std::size_t rank = (t % 2 == 0) ? 2 : 3;
        fan::Fan f = random_fan(rng, rank);
        VecZ v = random_support_point(rng, f);
        fan::Fan s = fan::star_subdivision(f, v);
        c.expect(fan::is_subdivision(s, f), "star subdivision is a subdivision");
        c.expect(fan::support_equal(s, f), "star subdivision preserves support");
    }
    for (int t = 0; t < std::max(1, n / 3); ++t) {
        fan::Fan a = random_complete_fan_2d(rng);
        fan::Fan b = random_complete_fan_2d(rng);
        fan::Fan cfan = random_complete_fan_2d(rng);
        fan::Fan r = fan::common_refinement({a, b, cfan});
        c.expect(fan::is_subdivision(r, a) && fan::is_subdivision(r, b) &&
                     fan::is_subdivision(r, cfan),
                 "common refinement subdivides inputs");
        fan::Fan r2 = fan::common_refinement({cfan, a, b});
        c.expect(r == r2, "refinement independent of order");
        fan::Fan r3 = fan::common_refinement({fan::common_refinement({a, b}), cfan});
        c.expect(r == r3, "refinement associativity");
    }
    return c.result;
}

SuiteResult suite_smooth(Rng& rng, int n) {
    Check c("fan.make_smooth");
    for (int t = 0; t < n; ++t) {
        std::size_t rank = (t % 2 == 0) ? 2 : 3;
        fan::Fan f = random_fan(rng, rank);
        fan::SmoothResult r = fan::make_smooth(f);
        bool all_smooth = true;
        for (std::size_t i : r.fan.maximal_indices())
            if (!fan::is_smooth_cone(r.fan.cones()[i])) all_smooth = false;
        c.expect(all_smooth, "all cones smooth");
        c.expect(fan::is_subdivision(r.fan, f), "resolution is a subdivision");
        // The resolution witness (max multiplicity, count at max) over the
        // simplicial cones decreases strictly once simplicialization is done.
        bool lex_decreasing = true;
        for (std::size_t i = 1; i < r.trace.size(); ++i) {
            const auto& prev = r.trace[i - 1];
            const auto& cur = r.trace[i];
            if (prev.simplicializing || cur.simplicializing) continue;
            if (!(cur.max_multiplicity < prev.max_multiplicity ||
                  (cur.max_multiplicity == prev.max_multiplicity &&
                   cur.num_at_max < prev.num_at_max)))
                lex_decreasing = false;
        }
        if (!r.trace.empty() && !r.trace.back().simplicializing)
            lex_decreasing = lex_decreasing && r.final_max_multiplicity == 1;
        c.expect(lex_decreasing, "multiplicity witness decreasing");
    }
    return c.result;
}

// Independent homology oracle: betti via rational rank-nullity.
std::size_t rational_rank(const IntMatrix& m) {
    std::vector<std::vector<zlin::Rat>> a(m.rows(), std::vector<zlin::Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = zlin::Rat(m.at(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][col] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            zlin::Rat f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

SuiteResult suite_homology(Rng& rng, int n) {
    Check c("topo.homology");
    for (int t = 0; t < n; ++t) {
        // Random cross-section complexes from random fans.
        fan::Fan f = random_fan(rng, (t % 2 == 0) ? 2 : 3);
        // h: sum of the facet functionals of the maximal cones, positive on
        // every ray for most convex-support fans; skip the instance otherwise.
        VecZ h = zlin::zero_vec(f.lattice_rank());
        bool positive = true;
        for (std::size_t i : f.maximal_indices())
            for (const auto& facet : f.cones()[i].facets()) h = zlin::add(h, facet);
        for (const auto& cone : f.cones())
            for (const auto& r : cone.rays())
                if (dot(h, r) <= 0) positive = false;
        if (!positive) continue;
        topo::PolyComplex w = topo::cross_section(f, h);
        if (w.empty()) continue;
        topo::PolyComplex tw = topo::triangulate(w);
        long chi_w = 0, chi_tw = 0;
        for (const auto& cell : w.cells) chi_w += (cell.dim % 2 == 0) ? 1 : -1;
        for (const auto& cell : tw.cells) chi_tw += (cell.dim % 2 == 0) ? 1 : -1;
        c.expect(chi_w == chi_tw, "triangulation preserves the Euler characteristic");

        auto profile = topo::homology(tw, false);
        auto cc = topo::chain_complex(tw, false);
        bool match = true;
        for (std::size_t q = 0; q < cc.rank.size(); ++q) {
            std::size_t rank_q = (q == 0) ? 0 : rational_rank(cc.boundary[q]);
            std::size_t rank_q1 = (q + 1 < cc.rank.size()) ? rational_rank(cc.boundary[q + 1]) : 0;
            if (profile.entries[q].betti != cc.rank[q] - rank_q - rank_q1) match = false;
        }
        c.expect(match, "betti match rational rank-nullity");
    }
    return c.result;
}

SuiteResult suite_acyclicity(Rng& rng, int n) {
    Check c("topo.boundary_acyclicity");
    int built = 0;
    while (built < n) {
        FsMonoid p = random_sharp_monoid(rng, 3, 4);
        Element img = random_element(rng, p, 2);
        if (img.is_zero()) continue;
        IntMatrix m(p.ambient_dim(), 1);
        VecZ full = p.to_full(img);
        for (std::size_t i = 0; i < full.size(); ++i) m.at(i, 0) = full[i];
        MonoidHom theta = MonoidHom::create_unchecked(FsMonoid::natural(1), p, std::move(m));
        ++built;
        auto report = topo::verify_boundary_acyclicity(p, theta);
        c.expect(report.acyclic.has_value() && *report.acyclic, "boundary cross-section acyclic");
        if (report.theta_vertical)
            c.expect(report.subfan_cones == report.spec_cones, "vertical shortcut consistent");
    }
    return c.result;
}

}  // namespace

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, bool quick) {
    Rng rng(seed);
    const int base = quick ? 8 : 40;
    std::vector<SuiteResult> out;
    out.push_back(suite_zlin(rng, base * 3));
    out.push_back(suite_vertical_laws(rng, base));
    out.push_back(suite_pushout(rng, std::max(4, base / 2)));
    out.push_back(suite_torsion_split(rng, std::max(4, base / 2)));
    out.push_back(suite_saturate(rng, base));
    out.push_back(suite_faces_and_dual(rng, std::max(4, base / 2)));
    out.push_back(suite_duality_verticality(rng, base));
    out.push_back(suite_subfan_bruteforce(rng, std::max(4, base / 3)));
    out.push_back(suite_subdivision(rng, std::max(4, base / 2)));
    out.push_back(suite_smooth(rng, std::max(4, base / 2)));
    out.push_back(suite_homology(rng, std::max(4, base / 2)));
    out.push_back(suite_acyclicity(rng, std::max(4, base / 2)));
    return out;
}

}  // namespace logfan::verify
