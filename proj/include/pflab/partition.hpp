#pragma once

#include <string>
#include <vector>

#include "pflab/error.hpp"

namespace pflab {

/// Partition of 2N into positive parts p_1 >= p_2 >= ... >= p_{2m}.
class Partition {
public:
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& text);  // "4,4,3,1", whitespace ignored

    const std::vector<int>& parts() const { return parts_; }
    int count() const { return static_cast<int>(parts_.size()); }
    long total() const { return total_; }           // 2N
    long half() const { return total_ / 2; }        // N
    int part(int i) const;                          // p_i, 1-based; 0 beyond the end

    std::string to_string() const;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    long total_ = 0;
};

/// k[j] = p_1 + ... + p_j, with k[0] = 0.
struct PartialSumTable {
    std::vector<long> k;
    static PartialSumTable from(const Partition& p);
};

/// True iff every even value occurs an even number of times.
bool is_d_partition(const std::vector<int>& parts);

/// True iff every maximal run of odd parts (between even parts or at either
/// end of the descending order) has even length. Requires a D-partition.
bool is_special(const std::vector<int>& parts);

inline bool is_d_partition(const Partition& p) { return is_d_partition(p.parts()); }
inline bool is_special(const Partition& p) { return is_special(p.parts()); }

/// chi_{2k}: the unique j with k_{j-1} < 2k <= k_j. Requires 1 <= k <= N.
int chi(const Partition& p, int k);

/// The j with k_{j-1} < v <= k_j for any v in 1..2N.
int chi_at(const Partition& p, long v);

/// All even j with p_j > p_{j+1} (p_{2m+1} = 0), ascending; contains 2m.
std::vector<int> conjecture_indices(const Partition& p);

/// One pair of the decomposition into [r,r] and [2a+1, 2b+1] pieces.
struct Pair {
    int hi = 0;
    int lo = 0;
    bool is_even_pair() const { return hi == lo; }  // the [r,r] form
    int a() const { return (hi - 1) / 2; }
    int b() const { return (lo - 1) / 2; }
};
using Pairing = std::vector<Pair>;

/// Deterministic pairing: equal even parts greedily largest-first; leftover
/// odd parts consecutively within each maximal odd run. Equal odd parts pair
/// as [r,r]. Pairs sorted by (hi desc, lo desc, even-pair first).
Pairing pair_partition(const Partition& p);

struct LegoBlock {
    enum class Kind { TypeI, TypeII };
    Kind kind = Kind::TypeI;
    int top = 0;   // r for Type I; the odd highest element p for Type II
    int sign = 0;  // +1 / -1 for Type I, 0 for Type II

    int highest() const { return top; }
    int minor_dim() const { return kind == Kind::TypeI ? top : top + 1; }  // s_beta
    int half_width() const { return kind == Kind::TypeI ? top : (top + 1) / 2; }

    friend bool operator==(const LegoBlock&, const LegoBlock&) = default;
    std::string to_string() const;  // "(7,1)", "(2,+)", "(2,-)"
};

/// Paper-uniform Lego conversion: every [2a+1,2b+1] pair appends a (1,1)
/// pair to the partition and contributes Type II blocks (2a+1,1), (2b+1,1).
struct LegoSet {
    Partition original;
    Partition augmented;
    std::vector<LegoBlock> blocks;  // sorted: highest desc, Type I before Type II, + before -
};

LegoSet to_lego_set(const Partition& p);

/// Appends `ones` copies of 1 (ones must be even to keep the total even).
Partition augment(const Partition& p, int ones);

/// Minimal realization: only pairs with b > 0 are split (each appending one
/// (1,1) pair); a b = 0 pair [2a+1,1] stays a single Type II block. This is
/// the block set the nilpotent matrix and the pencil are built from.
struct Realization {
    Partition original;
    Partition realized;
    std::vector<LegoBlock> blocks;  // same sort order as LegoSet
    bool augmented() const { return realized.count() != original.count(); }
};

Realization realize(const Partition& p);

}  // namespace pflab
