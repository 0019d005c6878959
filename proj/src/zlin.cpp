#include "logfan/zlin.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <stdexcept>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace logfan::zlin {

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

// Euclidean quotient: a = q*p + r with 0 <= r < |p|.
BigInt euclid_quot(const BigInt& a, const BigInt& p) {
    BigInt q = a / p;
    BigInt r = a - q * p;
    if (r < 0) q += (p > 0) ? -1 : 1;
    return q;
}

// g = gcd(a,b) = x*a + y*b, deterministic.
void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b;
    BigInt old_s = 1, s = 0;
    BigInt old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    g = old_r; x = old_s; y = old_t;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw DomainError("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<VecZ>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DomainError("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<VecZ>& cols) {
    std::size_t c = cols.size();
    std::size_t r = c ? cols[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw DomainError("IntMatrix::from_cols: ragged columns");
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

VecZ IntMatrix::row(std::size_t i) const {
    VecZ v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

VecZ IntMatrix::col(std::size_t j) const {
    VecZ v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<VecZ> IntMatrix::cols_as_vectors() const {
    std::vector<VecZ> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DomainError("IntMatrix: dimension mismatch in product");
    IntMatrix m(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) m.at(i, j) += a * rhs.at(k, j);
        }
    return m;
}

VecZ IntMatrix::operator*(const VecZ& v) const {
    if (v.size() != cols_) throw DomainError("IntMatrix: dimension mismatch in matrix-vector product");
    VecZ out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ && cols_ != 0 && rhs.cols_ != 0)
        throw DomainError("IntMatrix::hcat: row mismatch");
    std::size_t r = std::max(rows_, rhs.rows_);
    IntMatrix m(r, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < rhs.rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) m.at(i, cols_ + j) = rhs.at(i, j);
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const auto& d : diag)
        if (d != 0) ++r;
    return r;
}

namespace {

struct SnfWork {
    IntMatrix a, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
        for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
        for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
        for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
    }
    // row_i -= q * row_j
    void row_sub(std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) -= q * a.at(j, k);
        for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) -= q * u.at(j, k);
    }
    // col_i -= q * col_j
    void col_sub(std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < a.rows(); ++k) a.at(k, i) -= q * a.at(k, j);
        for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, i) -= q * v.at(k, j);
    }
    void col_add(std::size_t i, std::size_t j) { col_sub(i, j, BigInt(-1)); }
    // rows (i,j) <- L * rows (i,j), L a 2x2 unimodular matrix
    void row_transform(std::size_t i, std::size_t j, const BigInt& l00, const BigInt& l01,
                       const BigInt& l10, const BigInt& l11) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            BigInt x = a.at(i, k), y = a.at(j, k);
            a.at(i, k) = l00 * x + l01 * y;
            a.at(j, k) = l10 * x + l11 * y;
        }
        for (std::size_t k = 0; k < u.cols(); ++k) {
            BigInt x = u.at(i, k), y = u.at(j, k);
            u.at(i, k) = l00 * x + l01 * y;
            u.at(j, k) = l10 * x + l11 * y;
        }
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SnfWork w{m, IntMatrix::identity(r), IntMatrix::identity(c)};
    const std::size_t n = std::min(r, c);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Pivot rule: smallest nonzero absolute value, row-then-column order.
            std::size_t pi = r, pj = c;
            BigInt best;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    const BigInt& x = w.a.at(i, j);
                    if (x == 0) continue;
                    BigInt ax = abs(x);
                    if (pi == r || ax < best) { best = ax; pi = i; pj = j; }
                }
            if (pi == r) goto diagonal_done;
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            if (w.a.at(t, t) < 0) w.negate_row(t);

            const BigInt p = w.a.at(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (w.a.at(i, t) == 0) continue;
                w.row_sub(i, t, euclid_quot(w.a.at(i, t), p));
                if (w.a.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (w.a.at(t, j) == 0) continue;
                w.col_sub(j, t, euclid_quot(w.a.at(t, j), p));
                if (w.a.at(t, j) != 0) clean = false;
            }
            if (clean) break;
        }
    }
diagonal_done:

    // Move zero diagonal entries to the end.
    {
        std::vector<std::size_t> nonzero, zero;
        for (std::size_t i = 0; i < n; ++i)
            (w.a.at(i, i) != 0 ? nonzero : zero).push_back(i);
        std::size_t target = 0;
        for (std::size_t src : nonzero) {
            if (src != target) { w.swap_rows(target, src); w.swap_cols(target, src); }
            ++target;
        }
    }

    // Enforce the divisibility chain with 2x2 unimodular fixes.
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (w.a.at(i, i) != 0) ++rank;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < rank; ++i)
            for (std::size_t j = i + 1; j < rank; ++j) {
                const BigInt di = w.a.at(i, i), dj = w.a.at(j, j);
                if (dj % di == 0) continue;
                changed = true;
                // [[di,0],[0,dj]] -> [[g,0],[0,lcm]]
                w.col_add(i, j);  // column i gains dj in row j
                BigInt g, x, y;
                ext_gcd(di, dj, g, x, y);
                w.row_transform(i, j, x, y, -dj / g, di / g);
                // entry (i,j) is now dj*y; clear it against the pivot g
                w.col_sub(j, i, w.a.at(i, j) / g);
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (w.a.at(i, i) < 0) w.negate_row(i);

    SmithDecomposition out;
    out.left = std::move(w.u);
    out.right = std::move(w.v);
    out.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diag[i] = w.a.at(i, i);
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    std::vector<VecZ> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool in_kernel = (j >= s.diag.size()) || (s.diag[j] == 0);
        if (in_kernel) cols.push_back(s.right.col(j));
    }
    if (cols.empty()) return IntMatrix(m.cols(), 0);
    return IntMatrix::from_cols(cols);
}

AbelianGroup cokernel(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    AbelianGroup g;
    std::size_t nonzero = 0;
    for (const auto& d : s.diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d >= 2) g.invariant_factors.push_back(d);
    }
    g.rank = m.rows() - nonzero;
    return g;
}

IntMatrix saturation_basis(const IntMatrix& m) {
    IntMatrix orth = kernel_basis(m.transpose());
    if (orth.cols() == 0) {
        // The span is all of Z^rows.
        return IntMatrix::identity(m.rows());
    }
    return kernel_basis(orth.transpose());
}

IntMatrix hermite_column_basis(const IntMatrix& m) {
    IntMatrix h = m;
    const std::size_t rows = h.rows(), cols = h.cols();
    auto col_sub = [&](std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < rows; ++k) h.at(k, i) -= q * h.at(k, j);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows; ++k) std::swap(h.at(k, i), h.at(k, j));
    };

    std::size_t pivot_col = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    for (std::size_t row = 0; row < rows && pivot_col < cols; ++row) {
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = pivot_col; j < cols; ++j) {
                if (h.at(row, j) == 0) continue;
                if (best == cols || abs(h.at(row, j)) < abs(h.at(row, best))) best = j;
            }
            if (best == cols) break;
            swap_cols(pivot_col, best);
            bool clean = true;
            for (std::size_t j = pivot_col + 1; j < cols; ++j) {
                if (h.at(row, j) == 0) continue;
                col_sub(j, pivot_col, euclid_quot(h.at(row, j), h.at(row, pivot_col)));
                if (h.at(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(row, pivot_col) != 0) {
            if (h.at(row, pivot_col) < 0)
                for (std::size_t k = 0; k < rows; ++k) h.at(k, pivot_col) = -h.at(k, pivot_col);
            pivots.emplace_back(row, pivot_col);
            ++pivot_col;
        }
    }
    // Reduce entries left of each pivot into [0, pivot).
    for (auto [prow, pcol] : pivots)
        for (std::size_t j = 0; j < pcol; ++j)
            col_sub(j, pcol, euclid_quot(h.at(prow, j), h.at(prow, pcol)));

    std::vector<VecZ> keep;
    for (std::size_t j = 0; j < cols; ++j) {
        VecZ cj = h.col(j);
        if (!zlin::is_zero(cj)) keep.push_back(std::move(cj));
    }
    IntMatrix out = IntMatrix::from_cols(keep);
    if (keep.empty()) out = IntMatrix(rows, 0);
    return out;
}

VecZ primitive(const VecZ& v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw DomainError("primitive: zero vector");
    VecZ out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

std::optional<VecZ> solve_integral(const IntMatrix& m, const VecZ& b) {
    if (b.size() != m.rows()) throw DomainError("solve_integral: dimension mismatch");
    SmithDecomposition s = smith_normal_form(m);
    VecZ ub = s.left * b;
    VecZ y(m.cols(), BigInt(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < s.diag.size() && s.diag[i] != 0) {
            if (ub[i] % s.diag[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.diag[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.right * y;
}

std::optional<VecQ> solve_rational(const IntMatrix& m, const VecZ& b) {
    if (b.size() != m.rows()) throw DomainError("solve_rational: dimension mismatch");
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(c + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][c] = Rat(b[i]);
    }
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t p = row;
        while (p < r && a[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(a[p], a[row]);
        Rat inv = a[row][col];
        for (std::size_t j = col; j <= c; ++j) a[row][j] /= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j <= c; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < r; ++i)
        if (a[i][c] != 0) return std::nullopt;
    VecQ x(c, Rat(0));
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = a[i][c];
    return x;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    if (u.rows() != u.cols()) throw DomainError("unimodular_inverse: matrix not square");
    SmithDecomposition s = smith_normal_form(u);
    for (const auto& d : s.diag)
        if (d != 1) throw DomainError("unimodular_inverse: matrix not unimodular");
    // left * u * right = I, so u^{-1} = right * left.
    return s.right * s.left;
}

BigInt dot(const VecZ& a, const VecZ& b) {
    if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

VecZ add(const VecZ& a, const VecZ& b) {
    VecZ out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

VecZ sub(const VecZ& a, const VecZ& b) {
    VecZ out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

VecZ scale(const BigInt& c, const VecZ& v) {
    VecZ out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

VecZ negate(const VecZ& v) { return scale(BigInt(-1), v); }

bool is_zero(const VecZ& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

VecZ zero_vec(std::size_t n) { return VecZ(n, BigInt(0)); }

VecZ unit_vec(std::size_t n, std::size_t i) {
    VecZ v(n, BigInt(0));
    v[i] = 1;
    return v;
}

bool lex_less(const VecZ& a, const VecZ& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const VecZ& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

// --- double description -----------------------------------------------------

namespace {

struct DDRay {
    VecZ v;
    std::vector<bool> tight;  // over processed inequalities
};

}  // namespace

DoubleDescription dd_from_inequalities(const std::vector<VecZ>& inequalities, std::size_t dim) {
    std::vector<VecZ> lin;
    for (std::size_t i = 0; i < dim; ++i) lin.push_back(unit_vec(dim, i));
    std::vector<DDRay> rays;
    const std::size_t m = inequalities.size();

    for (std::size_t k = 0; k < m; ++k) {
        const VecZ& a = inequalities[k];
        if (a.size() != dim) throw DomainError("dd_from_inequalities: inequality dimension mismatch");

        std::size_t pivot = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) { pivot = i; break; }

        if (pivot < lin.size()) {
            VecZ v = lin[pivot];
            BigInt av = dot(a, v);
            if (av < 0) { v = negate(v); av = -av; }
            std::vector<VecZ> new_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == pivot) continue;
                BigInt aw = dot(a, lin[i]);
                VecZ w = sub(scale(av, lin[i]), scale(aw, v));
                new_lin.push_back(primitive(w));
            }
            lin = std::move(new_lin);
            for (auto& r : rays) {
                BigInt ar = dot(a, r.v);
                if (ar != 0) r.v = primitive(sub(scale(av, r.v), scale(ar, v)));
                r.tight.push_back(true);  // projected onto the hyperplane of a
            }
            DDRay nr;
            nr.v = primitive(v);
            nr.tight.assign(k, true);   // v was in the lineality of all previous steps
            nr.tight.push_back(false);  // strictly positive on a
            rays.push_back(std::move(nr));
            continue;
        }

        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            BigInt val = dot(a, rays[i].v);
            if (val > 0) pos.push_back(i);
            else if (val < 0) neg.push_back(i);
            else zero.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                rays[i].tight.push_back(dot(a, rays[i].v) == 0);
            continue;
        }

        std::vector<DDRay> next;
        for (std::size_t i : pos) {
            DDRay r = rays[i];
            r.tight.push_back(false);
            next.push_back(std::move(r));
        }
        for (std::size_t i : zero) {
            DDRay r = rays[i];
            r.tight.push_back(true);
            next.push_back(std::move(r));
        }
        for (std::size_t ip : pos)
            for (std::size_t in : neg) {
                // Combinatorial adjacency: no third ray tight on the common tight set.
                std::vector<bool> common(k);
                for (std::size_t t = 0; t < k; ++t)
                    common[t] = rays[ip].tight[t] && rays[in].tight[t];
                bool adjacent = true;
                for (std::size_t other = 0; other < rays.size() && adjacent; ++other) {
                    if (other == ip || other == in) continue;
                    bool covers = true;
                    for (std::size_t t = 0; t < k && covers; ++t)
                        if (common[t] && !rays[other].tight[t]) covers = false;
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                BigInt ap = dot(a, rays[ip].v);
                BigInt an = dot(a, rays[in].v);
                VecZ v = sub(scale(ap, rays[in].v), scale(an, rays[ip].v));
                DDRay nr;
                nr.v = primitive(v);
                nr.tight.resize(k + 1);
                for (std::size_t t = 0; t < k; ++t) nr.tight[t] = common[t];
                nr.tight[k] = true;
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
    }

    DoubleDescription out;
    out.lineality = std::move(lin);
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    std::sort(out.lineality.begin(), out.lineality.end(), lex_less);
    return out;
}

// --- cone geometry ----------------------------------------------------------

namespace {

// Reduce v modulo the column lattice of a Hermite basis; canonical representative.
VecZ reduce_mod_hermite(VecZ v, const IntMatrix& h) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
        std::size_t prow = 0;
        while (prow < h.rows() && h.at(prow, j) == 0) ++prow;
        if (prow == h.rows()) continue;
        BigInt q = euclid_quot(v[prow], h.at(prow, j));
        for (std::size_t i = 0; i < h.rows(); ++i) v[i] -= q * h.at(i, j);
    }
    return v;
}

}  // namespace

bool ConeGeometry::contains(const VecZ& x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, x) < 0) return false;
    return true;
}

bool ConeGeometry::contains_in_relative_interior(const VecZ& x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, x) <= 0) return false;
    return true;
}

bool ConeGeometry::contains_cone(const ConeGeometry& other) const {
    for (const auto& g : other.generators)
        if (!contains(g)) return false;
    return true;
}

ConeGeometry cone_from_generators(std::vector<VecZ> gens, std::size_t ambient_dim) {
    ConeGeometry c;
    c.ambient_dim = ambient_dim;

    std::vector<VecZ> cleaned;
    for (auto& g : gens) {
        if (g.size() != ambient_dim) throw DomainError("cone_from_generators: generator dimension mismatch");
        if (is_zero(g)) continue;
        cleaned.push_back(primitive(g));
    }
    std::sort(cleaned.begin(), cleaned.end(), lex_less);
    cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
    c.generators = cleaned;

    IntMatrix gmat = IntMatrix::from_cols(c.generators);
    if (c.generators.empty()) gmat = IntMatrix(ambient_dim, 0);

    // Equations: canonical basis of the functionals vanishing on the span.
    IntMatrix orth = kernel_basis(gmat.transpose());
    if (c.generators.empty()) orth = IntMatrix::identity(ambient_dim);
    IntMatrix orth_h = hermite_column_basis(orth);
    c.equations = orth_h.cols_as_vectors();
    std::sort(c.equations.begin(), c.equations.end(), lex_less);

    if (c.generators.empty()) {
        c.dim = 0;
        return c;
    }

    // Canonical saturated basis of the span lattice.
    IntMatrix span = hermite_column_basis(saturation_basis(gmat));
    c.span_basis = span.cols_as_vectors();
    c.dim = c.span_basis.size();
    const std::size_t s = c.dim;

    // Generators in span coordinates.
    std::vector<VecZ> gcoords;
    for (const auto& g : c.generators) {
        auto x = solve_integral(span, g);
        if (!x) throw std::logic_error("generator must lie in the saturated span");
        gcoords.push_back(*x);
    }

    // Facets: extreme rays of the dual cone within the span.
    DoubleDescription dual = dd_from_inequalities(gcoords, s);
    if (!(dual.lineality.empty())) throw std::logic_error("dual of a full-dimensional cone is pointed");
    std::vector<VecZ> facets_b = dual.rays;

    // Lineality: common kernel of the facets within the span.
    IntMatrix fmat = IntMatrix::from_rows(facets_b);
    if (facets_b.empty()) fmat = IntMatrix(0, s);
    IntMatrix link = kernel_basis(fmat);
    for (std::size_t j = 0; j < link.cols(); ++j)
        c.lineality.push_back(primitive(span * link.col(j)));
    std::sort(c.lineality.begin(), c.lineality.end(), lex_less);

    // Extreme rays from the facet description.
    DoubleDescription primal = dd_from_inequalities(facets_b, s);
    for (const auto& r : primal.rays)
        c.extreme_rays.push_back(primitive(span * r));
    std::sort(c.extreme_rays.begin(), c.extreme_rays.end(), lex_less);

    // Lift facets to ambient functionals, canonical modulo the equations.
    IntMatrix span_t = span.transpose();
    IntMatrix eq_h = orth_h;
    for (const auto& fb : facets_b) {
        auto lift = solve_integral(span_t, fb);
        if (!lift) throw std::logic_error("span basis is saturated, so functionals lift");
        c.facets.push_back(reduce_mod_hermite(*lift, eq_h));
    }
    std::sort(c.facets.begin(), c.facets.end(), lex_less);
    return c;
}

std::vector<ConeFace> enumerate_faces(const ConeGeometry& cone) {
    const auto& rays = cone.extreme_rays;
    const auto& facets = cone.facets;

    // A face is determined by the set of extreme rays it contains.
    std::map<std::vector<std::size_t>, std::vector<VecZ>> seen;  // ray set -> tight facets
    auto tight_facets_of_rayset = [&](const std::vector<std::size_t>& rs) {
        std::vector<VecZ> tf;
        for (const auto& f : facets) {
            bool tight = true;
            for (std::size_t i : rs)
                if (dot(f, rays[i]) != 0) { tight = false; break; }
            if (tight) tf.push_back(f);
        }
        return tf;
    };

    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> all(rays.size());
    std::iota(all.begin(), all.end(), 0);
    seen[all] = tight_facets_of_rayset(all);
    queue.push_back(all);

    while (!queue.empty()) {
        auto rs = queue.back();
        queue.pop_back();
        for (std::size_t f = 0; f < facets.size(); ++f) {
            std::vector<std::size_t> sub;
            for (std::size_t i : rs)
                if (dot(facets[f], rays[i]) == 0) sub.push_back(i);
            if (sub == rs) continue;
            if (seen.count(sub)) continue;
            seen[sub] = tight_facets_of_rayset(sub);
            queue.push_back(sub);
        }
    }

    std::vector<ConeFace> out;
    for (auto& [rs, tf] : seen) {
        ConeFace face;
        face.ray_indices = rs;
        face.tight_facets = tf;
        out.push_back(std::move(face));
    }
    std::sort(out.begin(), out.end(), [](const ConeFace& a, const ConeFace& b) {
        if (a.ray_indices.size() != b.ray_indices.size())
            return a.ray_indices.size() < b.ray_indices.size();
        return a.ray_indices < b.ray_indices;
    });
    return out;
}

}  // namespace logfan::zlin
