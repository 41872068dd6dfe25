#include "weyl/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace weyl {

namespace {
constexpr std::complex<double> kImag{0.0, 1.0};
}

MatrixRep MatrixRep::zeros(long dim, double hbar) {
    MatrixRep m;
    m.dim = dim;
    m.hbar = hbar;
    m.entries.assign(static_cast<std::size_t>(dim) * dim, {0.0, 0.0});
    return m;
}

MatrixRep MatrixRep::identity(long dim, double hbar) {
    MatrixRep m = zeros(dim, hbar);
    for (long i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

MatrixRep mat_add(const MatrixRep& a, const MatrixRep& b) {
    MatrixRep r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
    return r;
}

MatrixRep mat_sub(const MatrixRep& a, const MatrixRep& b) {
    MatrixRep r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= b.entries[i];
    return r;
}

MatrixRep mat_mul(const MatrixRep& a, const MatrixRep& b) {
    MatrixRep r = MatrixRep::zeros(a.dim, a.hbar);
    for (long i = 0; i < a.dim; ++i)
        for (long k = 0; k < a.dim; ++k) {
            std::complex<double> aik = a.at(i, k);
            if (aik == std::complex<double>{}) continue;
            for (long j = 0; j < a.dim; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

MatrixRep mat_scale(const MatrixRep& a, std::complex<double> s) {
    MatrixRep r = a;
    for (auto& e : r.entries) e *= s;
    return r;
}

MatrixRep mat_pow(const MatrixRep& a, long e) {
    MatrixRep r = MatrixRep::identity(a.dim, a.hbar);
    for (long i = 0; i < e; ++i) r = mat_mul(r, a);
    return r;
}

MatrixRep lowering_matrix(long dim, double hbar) {
    MatrixRep m = MatrixRep::zeros(dim, hbar);
    for (long j = 0; j + 1 < dim; ++j)
        m.at(j, j + 1) = std::sqrt(static_cast<double>(j + 1));
    return m;
}

MatrixRep position_matrix(long dim, double hbar) {
    MatrixRep a = lowering_matrix(dim, hbar);
    double s = std::sqrt(hbar / 2.0);
    MatrixRep m = MatrixRep::zeros(dim, hbar);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            m.at(i, j) = s * (a.at(i, j) + std::conj(a.at(j, i)));
    return m;
}

MatrixRep momentum_matrix(long dim, double hbar) {
    MatrixRep a = lowering_matrix(dim, hbar);
    double s = std::sqrt(hbar / 2.0);
    MatrixRep m = MatrixRep::zeros(dim, hbar);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            m.at(i, j) = kImag * s * (std::conj(a.at(j, i)) - a.at(i, j));
    return m;
}

MatrixRep represent(const OperatorPoly& a, long dim, double hbar) {
    if (!a.is_atom_free())
        throw PreconditionError("represent requires an atom-free polynomial");
    if (dim < 1) throw PreconditionError("represent requires dim >= 1");
    if (dim < a.qp_degree())
        throw PreconditionError("truncation too small for polynomial degree");

    MatrixRep q = position_matrix(dim, hbar);
    MatrixRep p = momentum_matrix(dim, hbar);
    MatrixRep sum = MatrixRep::zeros(dim, hbar);

    for (const auto& [key, coeff] : a.terms()) {
        MatrixRep word = MatrixRep::identity(dim, hbar);
        for (const auto& g : key.word.letters)
            word = mat_mul(word, g.kind == Generator::Kind::Q ? q : p);
        std::complex<double> scalar = coeff.get_d();
        std::complex<double> h_value = -kImag * hbar;
        for (long k = 0; k < key.h_exp; ++k) scalar *= h_value;
        for (long k = 0; k > key.h_exp; --k) scalar /= h_value;
        sum = mat_add(sum, mat_scale(word, scalar));
    }
    return sum;
}

CompareReport compare_matrices(const MatrixRep& a, const MatrixRep& b,
                               long degree) {
    if (a.dim <= degree)
        throw PreconditionError("truncation too small for safe-block compare");
    CompareReport rep;
    rep.safe_dim = a.dim - degree;
    for (long i = 0; i < rep.safe_dim; ++i)
        for (long j = 0; j < rep.safe_dim; ++j)
            rep.max_abs_diff =
                std::max(rep.max_abs_diff, std::abs(a.at(i, j) - b.at(i, j)));
    return rep;
}

CompareReport compare(const OperatorPoly& a, const OperatorPoly& b, long dim,
                      double hbar) {
    long degree = std::max(a.qp_degree(), b.qp_degree());
    if (dim <= degree)
        throw PreconditionError("truncation too small for safe-block compare");
    return compare_matrices(represent(a, dim, hbar), represent(b, dim, hbar),
                            degree);
}

}  // namespace weyl
