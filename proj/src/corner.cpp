#include "sudecomp/corner.hpp"

#include <stdexcept>

namespace sud {

VirtualUnipotentChar rho_c_vector(int n, int c) {
    if (c < 0 || 3 * c > n) throw std::invalid_argument("rho_c_vector: need 0 <= 3c <= n");
    VirtualUnipotentChar v;
    v.n = n;
    BigInt pow3 = 1;
    for (int i = 0; i < c; ++i) pow3 *= 3;
    int global = (n * (n - 1) / 2 - c) % 2;
    for (int k = 0; k <= c; ++k) {
        std::vector<int> parts(k, 3);
        parts.insert(parts.end(), n - 3 * k, 1);
        VirtualUnipotentChar dl = dl_virtual_char(Partition(parts), n);
        BigRat scale(binomial(c, k), pow3);
        if ((k + global) % 2 == 1) scale = -scale;
        v += dl.scaled(scale);
    }
    return v;
}

IntMatrix matrix_C(int n, int bound) {
    if (bound < 0 || 2 * bound > n) throw std::invalid_argument("matrix_C: bound out of range");
    IntMatrix C(bound + 1, std::vector<BigInt>(bound + 1, 0));
    for (int i = 0; i <= bound; ++i)
        for (int j = i; j <= bound; ++j) {
            BigInt v = binomial(n - 2 * i, j - i) - binomial(n - 2 * i, j - i - 1);
            C[i][j] = ((i + j) % 2 == 0) ? v : -v;
        }
    return C;
}

IntMatrix matrix_D_closed(int n, int bound) {
    if (bound < 0 || 2 * bound > n) throw std::invalid_argument("matrix_D_closed: bound out of range");
    IntMatrix D(bound + 1, std::vector<BigInt>(bound + 1, 0));
    for (int i = 0; i <= bound; ++i)
        for (int j = i; j <= bound; ++j) D[i][j] = binomial(n - i - j, j - i);
    return D;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    size_t n = A.size();
    IntMatrix R(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (A[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) R[i][j] += A[i][k] * B[k][j];
        }
    return R;
}

bool is_identity(const IntMatrix& A) {
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j)
            if (A[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

Partition CornerMatrix::row_label(int b) const {
    std::vector<int> parts(b, 2);
    parts.insert(parts.end(), n - 2 * b, 1);
    return Partition(std::move(parts));
}

int corner_default_bound(int n) { return std::min(n / 3 + 1, n / 2); }

CornerMatrix corner_decomposition_matrix(int n, int bound) {
    if (bound < 0 || 2 * bound > n)
        throw std::invalid_argument("corner_decomposition_matrix: bound out of range");
    CornerMatrix m;
    m.n = n;
    m.bound = bound;
    m.extended = bound > corner_default_bound(n);
    m.conjectural = m.extended && n > 10;
    m.entry = matrix_D_closed(n, bound);
    if (!is_identity(mat_mul(matrix_C(n, bound), m.entry)))
        throw std::logic_error("corner matrix is not the inverse of C");
    return m;
}

RowRemovalReport verify_row_removal(int n) {
    RowRemovalReport report;
    report.n = n;
    int a = corner_default_bound(n);
    CornerMatrix big = corner_decomposition_matrix(n, a);
    for (int c = 0; c <= a; ++c) {
        int nn = n - 2 * c;
        int small_bound = std::min(a - c, corner_default_bound(nn));
        CornerMatrix small = corner_decomposition_matrix(nn, small_bound);
        for (int b = c; b <= a; ++b) {
            if (b - c > small_bound) continue;
            ++report.checked;
            if (big.entry[c][b] != small.entry[0][b - c]) {
                report.holds = false;
                report.violations.push_back("n=" + std::to_string(n) + " c=" + std::to_string(c) +
                                            " b=" + std::to_string(b));
            }
        }
    }
    return report;
}

Psi321Column psi_321_column(int n) {
    if (n < 6) throw std::invalid_argument("psi_321_column: needs n >= 6");
    Psi321Column out;
    out.column.n = n;
    auto put = [&](std::vector<int> head, int ones, long long c) {
        head.insert(head.end(), ones, 1);
        out.column.coeff.emplace(Partition(std::move(head)), BigRat(c));
    };
    put({3, 2}, n - 5, 1);
    put({2, 2, 2}, n - 6, 2);
    put({3}, n - 3, n - 4);
    put({2, 2}, n - 4, n - 4);
    put({2}, n - 2, 2);
    put({}, n, 2 * n - 6);
    if (n == 6) out.note = "valid for ell > 7";
    return out;
}

}  // namespace sud
