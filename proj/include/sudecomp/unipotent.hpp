#pragma once

#include "sudecomp/partition.hpp"
#include "sudecomp/permutation.hpp"
#include "sudecomp/qpoly.hpp"
#include "sudecomp/twisted.hpp"

#include <map>
#include <vector>

namespace sud {

// Degree polynomial of the GL_n(q) unipotent character indexed by la:
// q^{sum (i-1) la_i} prod_{i<=n}(q^i - 1) / prod_{hooks}(q^h - 1).
QPoly gl_generic_degree(const Partition& la);

// Degree of the GU_n unipotent character rho_la: +-psi_la(-q), sign chosen so
// the leading coefficient is positive.
QPoly gu_degree(const Partition& la);

// (a, A): valuation and degree of gu_degree(la).
std::pair<int, int> a_A(const Partition& la);

struct UnipotentCharInfo {
    Partition la;
    QPoly degree;
    int a = 0;
    int A = 0;
};
UnipotentCharInfo unipotent_char_info(const Partition& la);

// Exact rational vector in the unipotent basis {rho_mu}.
struct VirtualUnipotentChar {
    int n = 0;
    std::map<Partition, BigRat> coeff;

    BigRat at(const Partition& mu) const;
    void add(const Partition& mu, const BigRat& c);
    VirtualUnipotentChar& operator+=(const VirtualUnipotentChar& o);
    VirtualUnipotentChar scaled(const BigRat& s) const;
    bool operator==(const VirtualUnipotentChar& o) const;
};

// R_{T_wF}(1) in the unipotent basis: coefficient of rho_mu is
// (-1)^{A(mu)} chi_mu evaluated on the class of w*w0. Depends only on the
// F-class of w.
VirtualUnipotentChar dl_virtual_char(const Permutation& w);
VirtualUnipotentChar dl_virtual_char(const FClassLabel& label, int n);

BigRat inner_product(const VirtualUnipotentChar& u, const VirtualUnipotentChar& v);

struct BlockPartition {
    int n = 0;
    int d = 1;
    // Blocks sorted by core (lex-decreasing); members lex-decreasing.
    std::vector<Partition> cores;
    std::vector<std::vector<Partition>> blocks;
    int principal_index = -1;
};

// Unipotent ell-blocks for a unitary prime with d = order of -q mod ell:
// same d-core <=> same block. d must be odd.
BlockPartition block_partition(int n, int d);

}  // namespace sud
