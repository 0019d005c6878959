// Exact integer and rational linear algebra: Smith/Hermite normal forms,
// kernels, cokernels, integral solving, and the polyhedral double-description
// engine used for cone duality. No floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logfan::zlin {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using VecZ = std::vector<BigInt>;
using VecQ = std::vector<Rat>;

// Domain precondition violated by the caller (exit code 1 at the CLI).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Desk-scale resource bound exceeded.
class BoundError : public DomainError {
public:
    explicit BoundError(const std::string& what) : DomainError(what) {}
};

// Dense exact integer matrix, row-major. Zero-dimensional matrices permitted.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<VecZ>& rows);
    static IntMatrix from_cols(const std::vector<VecZ>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    VecZ row(std::size_t i) const;
    VecZ col(std::size_t j) const;
    std::vector<VecZ> cols_as_vectors() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    VecZ operator*(const VecZ& v) const;
    bool operator==(const IntMatrix& rhs) const = default;

    // Horizontal concatenation [*this | rhs]; row counts must agree.
    IntMatrix hcat(const IntMatrix& rhs) const;

    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> data_;
};

// U * original * V = diagonal(diag), with U, V unimodular and
// diag[i] | diag[i+1] over the nonzero prefix (zeros trail).
struct SmithDecomposition {
    IntMatrix left;     // rows x rows
    IntMatrix right;    // cols x cols
    std::vector<BigInt> diag;

    std::size_t rank() const;
};

// Finitely generated abelian group: Z^rank + sum of Z/f with f >= 2 and
// f[i] | f[i+1].
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<BigInt> invariant_factors;

    bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
    bool is_torsion_free() const { return invariant_factors.empty(); }
    bool operator==(const AbelianGroup&) const = default;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Columns form a basis of {x : m x = 0}; the spanned lattice is saturated.
IntMatrix kernel_basis(const IntMatrix& m);

// Structure of Z^rows / (column span of m).
AbelianGroup cokernel(const IntMatrix& m);

// Column basis of the saturation of the column span of m inside Z^rows.
IntMatrix saturation_basis(const IntMatrix& m);

// Column-style Hermite normal form: returns H with column span equal to that
// of m, columns echelonized with positive pivots and reduced entries.
// Canonical for the column lattice.
IntMatrix hermite_column_basis(const IntMatrix& m);

// v / gcd(entries); rejects the zero vector.
VecZ primitive(const VecZ& v);

// Some integral x with m x = b, or nullopt.
std::optional<VecZ> solve_integral(const IntMatrix& m, const VecZ& b);

// Some rational x with m x = b, or nullopt (Gaussian elimination).
std::optional<VecQ> solve_rational(const IntMatrix& m, const VecZ& b);

// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

// --- small vector helpers -------------------------------------------------

BigInt dot(const VecZ& a, const VecZ& b);
VecZ add(const VecZ& a, const VecZ& b);
VecZ sub(const VecZ& a, const VecZ& b);
VecZ scale(const BigInt& c, const VecZ& v);
VecZ negate(const VecZ& v);
bool is_zero(const VecZ& v);
VecZ zero_vec(std::size_t n);
VecZ unit_vec(std::size_t n, std::size_t i);

// Lexicographic comparison, used for all deterministic tie-breaks.
bool lex_less(const VecZ& a, const VecZ& b);

std::string to_string(const VecZ& v);

// --- polyhedral double description -----------------------------------------

// Generator description of {x : a.x >= 0 for all rows a}: a lineality basis
// plus the extreme rays of the pointed part. Rays are primitive.
struct DoubleDescription {
    std::vector<VecZ> lineality;
    std::vector<VecZ> rays;
};

// Incremental double description over exact integers. `dim` is the ambient
// dimension; inequalities are processed in order, so the output is
// deterministic for a fixed input.
DoubleDescription dd_from_inequalities(const std::vector<VecZ>& inequalities, std::size_t dim);

// Full geometric data of the cone generated by an explicit vector list,
// possibly non-pointed and of any dimension. All functionals are primitive
// integer vectors in the ambient dual, sorted lexicographically.
struct ConeGeometry {
    std::size_t ambient_dim = 0;
    std::vector<VecZ> generators;       // input, deduped, primitive
    std::vector<VecZ> span_basis;       // saturated lattice basis of the linear span
    std::vector<VecZ> equations;        // functionals vanishing on the span
    std::vector<VecZ> facets;           // supporting functionals, tight on codim-1 faces
    std::vector<VecZ> lineality;        // basis of the maximal linear subspace
    std::vector<VecZ> extreme_rays;     // primitive, modulo lineality; empty for a linear subspace
    std::size_t dim = 0;                // dimension of the span

    bool pointed() const { return lineality.empty(); }
    bool is_zero_cone() const { return dim == 0; }

    // Membership x in cone: equations vanish and facet values >= 0.
    bool contains(const VecZ& x) const;
    // x in relative interior: equations vanish and facet values > 0.
    bool contains_in_relative_interior(const VecZ& x) const;
    bool contains_cone(const ConeGeometry& other) const;
};

ConeGeometry cone_from_generators(std::vector<VecZ> gens, std::size_t ambient_dim);

// All faces of a cone as subsets of its extreme rays (plus lineality, which
// every face contains). Each face is reported by the indices of the extreme
// rays it contains; the minimal face (indices empty) and the cone itself are
// included. Sorted by (dim, ray index set).
struct ConeFace {
    std::vector<std::size_t> ray_indices;
    std::vector<VecZ> tight_facets;     // facets vanishing on this face
};
std::vector<ConeFace> enumerate_faces(const ConeGeometry& cone);

}  // namespace logfan::zlin
