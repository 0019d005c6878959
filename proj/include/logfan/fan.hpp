// Rational polyhedral cones and fans: duality, Spec of a monoid, fan
// morphisms, vertical subfans, star and common subdivisions, smoothing.
#pragma once

#include "logfan/monoid.hpp"
#include "logfan/zlin.hpp"

#include <optional>
#include <vector>

namespace logfan::fan {

using monoid::FsMonoid;
using monoid::MonoidHom;
using zlin::BigInt;
using zlin::BoundError;
using zlin::ConeGeometry;
using zlin::DomainError;
using zlin::IntMatrix;
using zlin::VecZ;

class Cone {
public:
    Cone() = default;
    static Cone from_rays(std::size_t lattice_rank, std::vector<VecZ> rays);

    std::size_t lattice_rank() const { return rank_; }
    const ConeGeometry& geometry() const { return geom_; }
    const std::vector<VecZ>& rays() const { return geom_.extreme_rays; }
    const std::vector<VecZ>& facets() const { return geom_.facets; }
    std::size_t dim() const { return geom_.dim; }
    bool pointed() const { return geom_.pointed(); }
    bool is_zero() const { return geom_.is_zero_cone(); }

    bool contains(const VecZ& v) const { return geom_.contains(v); }
    bool contains_cone(const Cone& other) const;
    bool operator==(const Cone& other) const;
    bool operator<(const Cone& other) const;  // canonical order

private:
    std::size_t rank_ = 0;
    ConeGeometry geom_;
};

Cone dual_cone(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
std::vector<Cone> cone_faces(const Cone& c);

bool is_smooth_cone(const Cone& c);
bool is_simplicial(const Cone& c);
BigInt multiplicity(const Cone& c);

class Fan {
public:
    Fan() = default;
    // Completes faces of the given cones and verifies that members meet in
    // common faces; rejects non-pointed cones.
    static Fan from_cones(std::size_t lattice_rank, const std::vector<Cone>& cones);

    std::size_t lattice_rank() const { return rank_; }
    const std::vector<Cone>& cones() const { return cones_; }
    std::vector<std::size_t> maximal_indices() const;

    bool has_cone(const Cone& c) const;
    bool support_contains(const VecZ& v) const;
    // Indices of the faces of cone i (including itself and the zero cone).
    const std::vector<std::vector<std::size_t>>& face_links() const { return face_links_; }

    bool operator==(const Fan& other) const;

private:
    std::size_t rank_ = 0;
    std::vector<Cone> cones_;  // canonical order, closed under faces
    std::vector<std::vector<std::size_t>> face_links_;
};

struct FanMorphism {
    Fan source;
    Fan target;
    IntMatrix lattice_map;
    std::vector<std::size_t> witnesses;  // per source cone, a target cone containing its image
};

std::optional<FanMorphism> check_fan_morphism(const Fan& source, const Fan& target,
                                              const IntMatrix& map);

Fan vertical_subfan(const FanMorphism& m);
bool is_vertical_fan_morphism(const FanMorphism& m);

bool is_subdivision(const Fan& fine, const Fan& coarse);
bool support_equal(const Fan& a, const Fan& b);

Fan star_subdivision(const Fan& f, const VecZ& v);

Fan common_refinement(const std::vector<Fan>& fans);

struct SmoothingStep {
    VecZ center;
    BigInt max_multiplicity;   // before the step, over simplicial maximal cones
    std::size_t num_at_max;
    BigInt total_multiplicity;
    bool simplicializing = false;  // step removed a non-simplicial cone
};
struct SmoothResult {
    Fan fan;
    std::vector<SmoothingStep> trace;  // one entry per subdivision performed
    BigInt final_max_multiplicity;
};
SmoothResult make_smooth(const Fan& f);

// Spec(P): the fan of faces of the dual cone of P inside the dual lattice of
// P^gp; requires P sharp with torsion-free groupification.
Fan spec_fan(const FsMonoid& p);

// The morphism Spec(P) -> Spec(N) induced by theta: N -> P.
FanMorphism spec_morphism_to_N(const FsMonoid& p, const MonoidHom& theta);

Fan spec_of_N();

// Hilbert basis of the cone inside the lattice of its span.
std::vector<VecZ> cone_hilbert_basis(const Cone& c);

}  // namespace logfan::fan
