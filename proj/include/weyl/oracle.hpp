#pragma once

#include <complex>
#include <vector>

#include "weyl/algebra.hpp"

namespace weyl {

// Dense square complex matrix realizing an operator in the truncated
// harmonic-oscillator number basis. Numerical oracle only; the last rows
// and columns are corrupted by truncation.
struct MatrixRep {
    long dim = 0;
    double hbar = 1.0;
    std::vector<std::complex<double>> entries;  // row-major dim x dim

    std::complex<double>& at(long i, long j) { return entries[i * dim + j]; }
    const std::complex<double>& at(long i, long j) const {
        return entries[i * dim + j];
    }

    static MatrixRep zeros(long dim, double hbar);
    static MatrixRep identity(long dim, double hbar);
};

MatrixRep mat_add(const MatrixRep& a, const MatrixRep& b);
MatrixRep mat_sub(const MatrixRep& a, const MatrixRep& b);
MatrixRep mat_mul(const MatrixRep& a, const MatrixRep& b);
MatrixRep mat_scale(const MatrixRep& a, std::complex<double> s);
MatrixRep mat_pow(const MatrixRep& a, long e);

// Oscillator matrices: a has sqrt(j+1) on the superdiagonal,
// q = sqrt(hbar/2) (a + a†), p = i sqrt(hbar/2) (a† − a).
MatrixRep lowering_matrix(long dim, double hbar);
MatrixRep position_matrix(long dim, double hbar);
MatrixRep momentum_matrix(long dim, double hbar);

// Evaluates an atom-free polynomial: words become matrix products, the
// central h becomes the scalar -i*hbar. Requires dim >= the q/p degree.
MatrixRep represent(const OperatorPoly& a, long dim, double hbar);

struct CompareReport {
    double max_abs_diff = 0.0;
    long safe_dim = 0;
};

// Entry-wise max |represent(a) - represent(b)| over the top-left safe block
// of size dim - max(qp degree). Requires dim strictly above that degree.
CompareReport compare(const OperatorPoly& a, const OperatorPoly& b, long dim,
                      double hbar);

// Same safe-block comparison for matrices whose polynomial degrees are
// known to the caller (used by the raw AST evaluation path).
CompareReport compare_matrices(const MatrixRep& a, const MatrixRep& b,
                               long degree);

}  // namespace weyl
