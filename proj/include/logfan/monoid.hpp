// Finitely generated saturated monoids inside Z^d + finite torsion, their
// homomorphisms, faces, verticality, exactness, localization, saturation,
// pushouts, and torsion splitting.
#pragma once

#include "logfan/zlin.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <vector>

namespace logfan::monoid {

using zlin::AbelianGroup;
using zlin::BigInt;
using zlin::BoundError;
using zlin::ConeGeometry;
using zlin::DomainError;
using zlin::IntMatrix;
using zlin::VecZ;

// Desk-scale caps; LOGFAN_MAX_DIM overrides max_dim at process start.
struct DeskLimits {
    std::size_t max_dim = 4;
    std::size_t max_generators = 8;
    std::size_t max_enumeration = 8'000'000;   // lattice-point boxes
    std::size_t max_search_nodes = 4'000'000;  // membership search
};
const DeskLimits& limits();

// An element of Z^free_dim + sum Z/t_i, torsion residues reduced mod t_i.
struct Element {
    VecZ free;
    VecZ tor;

    bool operator==(const Element&) const = default;
    bool is_zero() const { return zlin::is_zero(free) && zlin::is_zero(tor); }
};

bool element_lex_less(const Element& a, const Element& b);

class FsMonoid {
public:
    FsMonoid() = default;

    // torsion: list of moduli >= 2 for the ambient finite part.
    static FsMonoid create(std::size_t free_dim, std::vector<BigInt> torsion,
                           std::vector<Element> generators);
    static FsMonoid natural(std::size_t n);  // N^n
    static FsMonoid integers(std::size_t n); // Z^n as a monoid
    static FsMonoid zero(std::size_t free_dim = 0);
    static FsMonoid from_free_gens(std::size_t free_dim, std::vector<VecZ> gens);

    std::size_t free_dim() const { return free_dim_; }
    const std::vector<BigInt>& torsion() const { return torsion_; }
    std::size_t ambient_dim() const { return free_dim_ + torsion_.size(); }
    const std::vector<Element>& gens() const { return gens_; }
    bool is_zero_monoid() const { return gens_.empty(); }

    const ConeGeometry& cone() const { return cone_; }
    const std::vector<std::size_t>& unit_gen_indices() const { return unit_gen_indices_; }
    bool is_sharp() const { return unit_gen_indices_.empty(); }

    Element normalize(Element e) const;
    VecZ to_full(const Element& e) const;       // ambient coordinates, length d+t
    Element from_full(const VecZ& v) const;

    IntMatrix gens_matrix() const;               // (d+t) x m
    IntMatrix relation_matrix() const;           // (d+t) x t, columns t_i e_{d+i}
    IntMatrix group_span_matrix() const;         // [gens | relations]

private:
    std::size_t free_dim_ = 0;
    std::vector<BigInt> torsion_;
    std::vector<Element> gens_;
    ConeGeometry cone_;                          // cone of generator free parts
    std::vector<std::size_t> unit_gen_indices_;
};

// Face of a monoid, recorded by the generators it contains and the facet
// functionals (on the free ambient) vanishing exactly on its cone.
struct Face {
    std::vector<std::size_t> selector;
    std::vector<VecZ> functionals;

    bool operator==(const Face&) const = default;
};

struct MonoidIdeal {
    FsMonoid owner;
    std::vector<Element> generators;
};

// Homomorphism given by an integer matrix on the full ambient groups,
// block form [[A, 0], [B, C]]; generators are checked to map into the target.
class MonoidHom {
public:
    static MonoidHom create(FsMonoid source, FsMonoid target, IntMatrix full_matrix);
    // Same checks except the per-generator membership search; for homs whose
    // images are members by construction.
    static MonoidHom create_unchecked(FsMonoid source, FsMonoid target, IntMatrix full_matrix);
    // From the wire format: free block A plus torsion rows [B | C].
    static MonoidHom from_blocks(FsMonoid source, FsMonoid target, const IntMatrix& free_block,
                                 const IntMatrix& torsion_rows);
    static MonoidHom identity(const FsMonoid& p);

    const FsMonoid& source() const { return source_; }
    const FsMonoid& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    Element apply(const Element& e) const;
    IntMatrix free_block() const;
    IntMatrix torsion_rows() const;

private:
    FsMonoid source_, target_;
    IntMatrix matrix_;
};

MonoidHom compose(const MonoidHom& second, const MonoidHom& first);
bool hom_equal_on_source(const MonoidHom& a, const MonoidHom& b);

// --- operations -------------------------------------------------------------

bool membership(const FsMonoid& p, const Element& x);

struct Groupification {
    AbelianGroup group;
    // Ambient representatives of a basis of the free part and of generators of
    // the cyclic torsion factors (paired with their orders).
    std::vector<VecZ> free_basis;
    std::vector<std::pair<VecZ, BigInt>> torsion_reps;
    // Coordinates of an ambient vector lying in the group: free coordinates
    // followed by torsion residues. Nullopt when outside the group.
    std::function<std::optional<std::pair<VecZ, VecZ>>(const VecZ&)> coords;
};
Groupification groupification(const FsMonoid& p);

bool gp_contains(const FsMonoid& p, const Element& x);

FsMonoid units(const FsMonoid& p);

struct Sharpening {
    FsMonoid sharp;
    MonoidHom projection;
};
Sharpening sharpen(const FsMonoid& p);

FsMonoid saturate(const FsMonoid& p);
bool is_saturated(const FsMonoid& p);

// Minimal generating set of cone(rays) intersected with the lattice spanned by
// the given basis columns. The cone must be pointed.
std::vector<VecZ> hilbert_basis(const std::vector<VecZ>& rays, const IntMatrix& lattice_basis,
                                std::size_t ambient_dim);

std::vector<Face> faces(const FsMonoid& p);
Face minimal_face_containing(const FsMonoid& p, const std::vector<Element>& elems);
Face whole_face(const FsMonoid& p);
Face unit_face(const FsMonoid& p);
bool face_equal(const FsMonoid& p, const Face& a, const Face& b);
bool is_face_of(const FsMonoid& p, const Face& f);
FsMonoid face_monoid(const FsMonoid& p, const Face& f);
bool face_contains(const FsMonoid& p, const Face& f, const Element& x);

FsMonoid localize(const FsMonoid& p, const Face& f);

bool is_vertical(const MonoidHom& h);
bool is_exact(const MonoidHom& h);

// Induced homomorphism on sharp quotients together with the two projections.
struct SharpenedHom {
    MonoidHom hom;
    MonoidHom source_projection;
    MonoidHom target_projection;
};
SharpenedHom sharpen_hom(const MonoidHom& h);

// Induced homomorphism P_{theta^{-1}(G)} -> Q_G for a face G of the target.
MonoidHom localize_hom(const MonoidHom& h, const Face& target_face);

struct Pushout {
    FsMonoid result;
    MonoidHom into_left;   // from the left target P'
    MonoidHom into_right;  // from the right target Q
};
Pushout pushout(const MonoidHom& left, const MonoidHom& right);

// Saturated cokernel: pushout of h along source -> 0; a group iff h is vertical.
FsMonoid saturated_cokernel(const MonoidHom& h);
bool monoid_is_group(const FsMonoid& p);

struct TorsionSplit {
    FsMonoid canon;       // p rebased into its own groupification presentation
    FsMonoid tf;          // torsion-free quotient, sharing canon's free ambient
    AbelianGroup tor;     // torsion subgroup of the units
    FsMonoid split;       // tf + tor as a monoid
    MonoidHom to_split;   // canon -> split
    MonoidHom from_split; // split -> canon
    std::function<Element(const Element&)> canonize;    // p -> canon
    std::function<Element(const Element&)> decanonize;  // canon -> p
};
TorsionSplit torsion_split(const FsMonoid& p);

MonoidHom support_functional(const FsMonoid& p, const Face& f);

MonoidHom interior_vertical_to_N(const FsMonoid& p);

FsMonoid dual_monoid(const FsMonoid& p);

// Same ambient and the same set of elements (mutual generator membership).
bool monoid_equal(const FsMonoid& a, const FsMonoid& b);

// Direct sum with ambient torsion normalized to a divisibility chain.
struct DirectSum {
    FsMonoid sum;
    MonoidHom left_injection;
    MonoidHom right_injection;
};
DirectSum direct_sum(const FsMonoid& a, const FsMonoid& b);

// All elements x with grading(x) <= bound for a sharp-part grading; used by
// bounded enumeration tests. Includes 0.
std::vector<Element> bounded_elements(const FsMonoid& p, const BigInt& height_bound);

bool ideal_contains(const MonoidIdeal& ideal, const Element& x);

}  // namespace logfan::monoid
