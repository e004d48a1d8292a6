#pragma once

#include "sudecomp/partition.hpp"

#include <string>
#include <vector>

namespace sud {

// Element of S_n in one-line notation. Composition is the usual function
// composition: (u*v)(i) = u(v(i)), i.e. v acts first. Points are 1..n
// externally, stored 0-based.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    explicit Permutation(std::vector<int> images_1based);

    int n() const { return static_cast<int>(img_.size()); }
    // 1-based application.
    int operator()(int i) const { return img_[i - 1] + 1; }
    const std::vector<int>& images0() const { return img_; }
    std::vector<int> images1() const;

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    std::string str() const;

private:
    std::vector<int> img_;  // img_[i] = w(i+1)-1
};

using Word = std::vector<int>;  // generator indices in 1..n-1

Permutation simple_reflection(int i, int n);
Permutation word_to_perm(const Word& word, int n);
// Reduced word by descent-driven bubble sort (deterministic output).
Word reduced_word(const Permutation& w);

int length(const Permutation& w);

Permutation longest_element(int n);
// Longest element of the parabolic generated by {s_i : i in gens}.
Permutation parabolic_longest(const std::vector<int>& gens, int n);

// Bruhat order by the rank-matrix criterion.
bool bruhat_leq(const Permutation& x, const Permutation& y);
// Exponential subword oracle (cross-validation at small n).
bool bruhat_leq_subword(const Permutation& x, const Permutation& y);

// F(w) = w0 w w0.
Permutation twist(const Permutation& w);

// The cycle sigma_m of Lemma-style form (1, n, 2, n-1, ...): for m = 2r+1 the
// cycle (1,n,2,n-1,...,n-r+1,r+1); for m = 2r the cycle (1,n,2,...,n-r+1).
Permutation sigma_cycle(int n, int m);

// Maximal composition: even parts first (any order), then odd parts
// decreasing.
bool is_maximal_composition(const std::vector<int>& comp);
// Kim's sigma_la for a maximal composition: shifted cycles on nested windows
// with alternating twists on the odd tail.
Permutation sigma_of_composition(const std::vector<int>& comp, int n);

Partition cycle_type(const Permutation& w);

// All maximal compositions with underlying partition la (even parts permuted
// in all distinct orders).
std::vector<std::vector<int>> maximal_compositions(const Partition& la);

}  // namespace sud
