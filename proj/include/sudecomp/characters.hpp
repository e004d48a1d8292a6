#pragma once

#include "sudecomp/bigint.hpp"
#include "sudecomp/partition.hpp"

#include <vector>

namespace sud {

// chi_la evaluated on the class mu, by rim-hook removal (Murnaghan-Nakayama).
long long mn_value(const Partition& la, const Partition& mu);

struct CharacterTable {
    int n;
    std::vector<Partition> index;              // rows and columns, lex-decreasing
    std::vector<std::vector<long long>> chi;   // chi[row la][col mu]
    std::vector<BigInt> class_sizes;           // by column
    int find(const Partition& p) const;
};

// Full table, memoized. n <= 20.
const CharacterTable& character_table(int n);

// M_{n,j,k} = sum_r C(k,r) (C(n-3k, j-3r) - C(n-3k, j-3r-1)); the value of
// chi_{2^j 1^{n-2j}} on a product of k disjoint 3-cycles.
BigInt two_column_on_3cycles(int n, int j, int k);

// Multiplicity of chi_mu in the induction of the outer product character
// chi_{la^1} x ... x chi_{la^m} from the Young subgroup of shape (n_1,...,n_m).
BigInt induced_multiplicity(const Multipartition& mp, const Partition& mu);

// n! / z_mu with z_mu = prod i^{m_i} m_i!.
BigInt class_size(int n, const Partition& mu);
// z_mu itself (centralizer order).
BigInt centralizer_order(const Partition& mu);

}  // namespace sud
