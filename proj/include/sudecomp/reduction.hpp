#pragma once

#include "sudecomp/expr.hpp"
#include "sudecomp/partition.hpp"
#include "sudecomp/twisted.hpp"
#include "sudecomp/unipotent.hpp"

#include <map>
#include <string>
#include <vector>

namespace sud {

// Cuspidal F-class labels [w w0]_F over w in the Young subgroup attached to
// triangular_split(la) with nonvanishing outer-product character value.
std::vector<FClassLabel> c_lambda(const Partition& la);

// Coordinates of rho_bla^0 in the unipotent basic set (the ell-reduction of
// the non-unipotent character attached to la). Normalized: coefficient 1 on
// la itself, asserted.
struct ReductionVector {
    Partition source;
    Multipartition split;
    VirtualUnipotentChar vec;
};
ReductionVector ell_reduction_vector(const Partition& la);

struct Prop56Report {
    Partition la;
    bool applicable = false;
    bool cond_i = false, cond_ii = false, cond_iii = false;
    std::vector<std::string> witnesses;
    bool pass() const { return applicable && cond_i && cond_ii && cond_iii; }
};
Prop56Report check_prop56(const Partition& la, int bound = kDefaultClassBound);

// -(R_{w_I F}) for I = {s_2,...,s_{n-2}}: w_I w0 is the transposition (1,n).
// Pairs to zero against every PIM column except 1^n, 21^{n-2}, 31^{n-3}.
VirtualUnipotentChar wI_constraint_vector(int n);

// A decomposition-matrix column with affine entries; diagonal 1, support
// inside the dominance-down set of the label.
struct UnknownColumn {
    int n = 0;
    Partition label;
    std::map<Partition, Poly> entries;

    static UnknownColumn fresh(const Partition& label, const std::string& prefix = "x");
};

Constraint constraint_from_vector(const UnknownColumn& col, const VirtualUnipotentChar& vec,
                                  const std::string& provenance);

struct DecompTable;  // tables.hpp

// Coefficients of R_w on the PIM basis of the (possibly partially unknown)
// table, by unitriangular back-substitution. Partitions of n absent from the
// table count as defect-zero singleton columns. Coefficients may involve
// products of unknowns when several columns are unknown.
std::map<Partition, Poly> rw_pim_decomposition(const Permutation& w, const DecompTable& table);

}  // namespace sud
