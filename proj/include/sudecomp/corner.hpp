#pragma once

#include "sudecomp/bigint.hpp"
#include "sudecomp/partition.hpp"
#include "sudecomp/unipotent.hpp"

#include <string>
#include <vector>

namespace sud {

// rho_c = ((-1)^{n(n-1)/2-c} / 3^c) sum_k (-1)^k C(c,k) R_{x_k w0} where x_k
// is a product of k disjoint 3-cycles. Requires 0 <= 3c <= n.
VirtualUnipotentChar rho_c_vector(int n, int c);

using IntMatrix = std::vector<std::vector<BigInt>>;

// C entries: c_{i,j} = (-1)^{i+j} (C(n-2i, j-i) - C(n-2i, j-i-1)) for i <= j,
// 0 otherwise; these are the inner products <rho_i, rho_{2^j 1^{n-2j}}>.
IntMatrix matrix_C(int n, int bound);

// Closed-form inverse: d_{i,j} = C(n-i-j, j-i) for i <= j, 0 otherwise.
IntMatrix matrix_D_closed(int n, int bound);

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);
bool is_identity(const IntMatrix& A);

// Two-column corner of the decomposition matrix for ell | (q+1).
// entry(b, c) = multiplicity of rho_{2^b 1^{n-2b}} in the PIM of 2^c 1^{n-2c}.
struct CornerMatrix {
    int n = 0;
    int bound = 0;      // largest exponent of 2 considered
    bool extended = false;  // bound beyond floor(n/3)+1 (proved regime)
    bool conjectural = false;  // extended regime with n > 10
    IntMatrix entry;    // entry[b][c] for 0 <= b, c <= bound

    Partition row_label(int b) const;
};

// Proved regime bound: floor(n/3) + 1 (capped at floor(n/2)).
int corner_default_bound(int n);
CornerMatrix corner_decomposition_matrix(int n, int bound);

struct RowRemovalReport {
    int n = 0;
    bool holds = true;
    int checked = 0;
    std::vector<std::string> violations;
};

// d_{2^c 1^{n-2c}, 2^b 1^{n-2b}} = d_{1^{n-2c}, 2^{b-c} 1^{n-2b}} for
// c <= b <= bound, using corners at sizes n and n-2c.
RowRemovalReport verify_row_removal(int n);

// Unipotent part of the PIM indexed by 321^{n-5} for ell | (q+1):
// rho_{321^{n-5}} + 2 rho_{2^3 1^{n-6}} + (n-4) rho_{31^{n-3}} +
// (n-4) rho_{2^2 1^{n-4}} + 2 rho_{21^{n-2}} + (2n-6) rho_{1^n}.
// For n = 6 the formula needs ell > 7; `note` records that condition.
struct Psi321Column {
    VirtualUnipotentChar column;
    std::string note;
};
Psi321Column psi_321_column(int n);

}  // namespace sud
