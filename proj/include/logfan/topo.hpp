// Cross-sections of fan supports, triangulation, and integral simplicial
// homology; drives the acyclicity verification of the vertical-boundary
// cross-section W.
#pragma once

#include "logfan/fan.hpp"

#include <optional>
#include <vector>

namespace logfan::topo {

using fan::Fan;
using fan::FanMorphism;
using monoid::FsMonoid;
using monoid::MonoidHom;
using zlin::BigInt;
using zlin::DomainError;
using zlin::IntMatrix;
using zlin::Rat;
using zlin::VecQ;
using zlin::VecZ;

// Polyhedral cell complex with exact rational vertices. Cells are recorded by
// vertex-index sets, closed under faces, with the face relation stored.
struct PolyComplex {
    struct Cell {
        std::vector<std::size_t> verts;  // sorted vertex indices
        std::size_t dim = 0;
        std::vector<std::size_t> faces;  // indices of all proper faces
    };
    std::vector<VecQ> vertices;
    std::vector<Cell> cells;  // sorted by (dim, verts)

    bool empty() const { return cells.empty(); }
    bool is_simplicial() const;
};

// Builds the complex generated by the given cells (each a convex polytope
// described by its vertices), completing all faces and the incidence relation.
PolyComplex complete_complex(std::vector<VecQ> vertices,
                             std::vector<std::vector<std::size_t>> cells);

// One cell per nonzero cone: the polytope cone & {h = 1}; h must be strictly
// positive on every nonzero ray.
PolyComplex cross_section(const Fan& f, const VecZ& h);

// Pulling triangulation by least vertex index; compatible across shared faces
// and the identity on simplices.
PolyComplex triangulate(const PolyComplex& c);

// Boundary matrices of a simplicial complex; checks that consecutive
// boundaries compose to zero.
struct ChainComplex {
    std::vector<std::size_t> rank;      // number of cells per dimension
    std::vector<IntMatrix> boundary;    // boundary[d] : C_d -> C_{d-1} (d >= 1)
    IntMatrix augmentation;             // 1 x rank[0]
    bool reduced = false;
};
ChainComplex chain_complex(const PolyComplex& c, bool reduced);

struct HomologyEntry {
    long degree = 0;
    std::size_t betti = 0;
    std::vector<BigInt> torsion;
};
struct HomologyProfile {
    std::vector<HomologyEntry> entries;  // degrees 0..top
    bool reduced = false;
    bool empty_complex = false;

    bool all_zero() const;
};
HomologyProfile homology(const PolyComplex& c, bool reduced);

// Pipeline for the boundary-acyclicity check: Spec(P), the induced morphism
// to Spec(N), the vertical subfan, the interior cross-section W, and its
// reduced homology. A monoid with units is sharpened first.
struct AcyclicityReport {
    bool theta_vertical = false;  // convexity shortcut applies when true
    std::size_t spec_cones = 0;
    std::size_t subfan_cones = 0;
    bool w_empty = false;
    std::optional<bool> acyclic;  // unset when W is empty
    HomologyProfile reduced_homology;
    std::size_t w_vertices = 0;
    std::size_t w_cells = 0;
};
AcyclicityReport verify_boundary_acyclicity(const FsMonoid& p, const MonoidHom& theta);

}  // namespace logfan::topo
