#pragma once

#include "sudecomp/partition.hpp"
#include "sudecomp/permutation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sud {

// F-classes of S_n with F(w) = w0 w w0 are labelled by the cycle type of
// w*w0; this is the FClassLabel of the spec.
using FClassLabel = Partition;

FClassLabel fclass_label(const Permutation& w);
bool is_cuspidal(const FClassLabel& label);

struct MinLengthSet {
    FClassLabel label;
    int n = 0;
    int min_length = 0;
    std::vector<Permutation> elements;  // every minimal-length member
    long long class_size = 0;
};

// Default enumeration bound; --long raises it at the CLI.
constexpr int kDefaultClassBound = 10;
constexpr int kLongClassBound = 12;

// Full-enumeration table of all F-classes of S_n: minimal lengths and minimal
// elements per label. Memoized per n.
struct TwistedClassTable {
    int n;
    std::vector<FClassLabel> labels;  // lex-decreasing
    std::map<std::vector<int>, MinLengthSet> classes;

    const MinLengthSet& at(const FClassLabel& label) const;
    static const TwistedClassTable& get(int n, int bound = kDefaultClassBound);
};

MinLengthSet min_length_elements(const FClassLabel& label, int n, int bound = kDefaultClassBound);

// One element of O_min reachable from w by non-length-increasing cyclic
// shifts x -> s x F(s); searches the whole equal-length plateau before
// concluding minimality.
Permutation reduce_to_minimal(const Permutation& w);

// Cyclic-shift closure of w within its own length.
std::vector<Permutation> shift_closure(const Permutation& w);

// smaller <= larger in the order on F-classes: for every x in (larger)_min
// there is x' in (smaller)_min with x' <= x in Bruhat order. For cuspidal
// `larger` only one representative is tested (cyclic-shift transfer).
bool class_leq(const FClassLabel& smaller, const FClassLabel& larger, int n,
               int bound = kDefaultClassBound);
// The same check without the cuspidal shortcut (cross-validation).
bool class_leq_full(const FClassLabel& smaller, const FClassLabel& larger, int n,
                    int bound = kDefaultClassBound);

std::vector<FClassLabel> classes_above(const FClassLabel& label, int n,
                                       int bound = kDefaultClassBound);

struct ConjectureReport {
    int n;
    bool holds = true;
    int pairs_checked = 0;
    std::vector<std::string> violations;
};

// Dominance description of the order on cuspidal classes:
// O_la <= O_mu iff mu trianglelefteq la, over all odd-part pairs.
ConjectureReport verify_dominance_conjecture(int n, int bound = kDefaultClassBound);

}  // namespace sud
