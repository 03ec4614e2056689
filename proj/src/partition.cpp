#include "pflab/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace pflab {

namespace {

void validate_parts(const std::vector<int>& parts) {
    if (parts.empty()) throw InvalidInput("partition must have at least one part");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidInput("partition parts must be nonincreasing");
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate_parts(parts_);
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
    if (total_ % 2 != 0) throw InvalidInput("partition total must be even");
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw InvalidInput("empty entry in partition text");
        size_t pos = 0;
        int v = std::stoi(cur, &pos);
        if (pos != cur.size()) throw InvalidInput("bad integer in partition text: " + cur);
        parts.push_back(v);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == ',') {
            flush();
        } else if ((ch >= '0' && ch <= '9') || ch == '-') {
            cur.push_back(ch);
        } else {
            throw InvalidInput(std::string("unexpected character in partition text: ") + ch);
        }
    }
    flush();
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1) throw OutOfRange("part index is 1-based");
    return i <= count() ? parts_[i - 1] : 0;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

PartialSumTable PartialSumTable::from(const Partition& p) {
    PartialSumTable t;
    t.k.resize(p.count() + 1, 0);
    for (int j = 1; j <= p.count(); ++j) t.k[j] = t.k[j - 1] + p.part(j);
    return t;
}

bool is_d_partition(const std::vector<int>& parts) {
    validate_parts(parts);
    std::map<int, int> mult;
    for (int v : parts)
        if (v % 2 == 0) ++mult[v];
    for (const auto& [v, m] : mult)
        if (m % 2 != 0) return false;
    return true;
}

bool is_special(const std::vector<int>& parts) {
    validate_parts(parts);
    int run = 0;
    for (int v : parts) {
        if (v % 2 != 0) {
            ++run;
        } else {
            if (run % 2 != 0) return false;
            run = 0;
        }
    }
    return run % 2 == 0;
}

int chi_at(const Partition& p, long v) {
    if (v < 1 || v > p.total()) throw OutOfRange("chi argument outside 1..2N");
    auto sums = PartialSumTable::from(p);
    for (int j = 1; j <= p.count(); ++j)
        if (sums.k[j - 1] < v && v <= sums.k[j]) return j;
    throw OutOfRange("no partial-sum interval contains the argument");
}

int chi(const Partition& p, int k) {
    if (k < 1 || 2L * k > p.total()) throw OutOfRange("k outside 1..N");
    return chi_at(p, 2L * k);
}

std::vector<int> conjecture_indices(const Partition& p) {
    if (!is_d_partition(p) || !is_special(p)) throw NotSpecial("conjecture indices require a special D-partition");
    std::vector<int> out;
    for (int j = 2; j <= p.count(); j += 2)
        if (p.part(j) > p.part(j + 1)) out.push_back(j);
    return out;
}

Pairing pair_partition(const Partition& p) {
    if (!is_d_partition(p)) throw PairingImpossible("pairing requires a D-partition");
    Pairing pairs;
    // Equal even parts, largest first.
    std::map<int, int, std::greater<>> even_mult;
    for (int v : p.parts())
        if (v % 2 == 0) ++even_mult[v];
    for (const auto& [v, m] : even_mult) {
        if (m % 2 != 0) throw PairingImpossible("even part with odd multiplicity");
        for (int i = 0; i < m / 2; ++i) pairs.push_back({v, v});
    }
    // Odd parts consecutively within each maximal odd run of the descending
    // order. Runs of a special partition have even length.
    for (size_t i = 0; i < p.parts().size();) {
        if (p.parts()[i] % 2 == 0) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < p.parts().size() && p.parts()[j] % 2 != 0) ++j;
        if ((j - i) % 2 != 0)
            throw PairingImpossible("odd-length run of odd parts cannot be paired");
        for (size_t r = i; r + 1 < j; r += 2) pairs.push_back({p.parts()[r], p.parts()[r + 1]});
        i = j;
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.hi != b.hi) return a.hi > b.hi;
        if (a.lo != b.lo) return a.lo > b.lo;
        return a.is_even_pair() && !b.is_even_pair();
    });
    return pairs;
}

std::string LegoBlock::to_string() const {
    std::ostringstream os;
    if (kind == Kind::TypeI)
        os << "(" << top << "," << (sign > 0 ? "+" : "-") << ")";
    else
        os << "(" << top << ",1)";
    return os.str();
}

namespace {

void sort_blocks(std::vector<LegoBlock>& blocks) {
    // Highest element descending; Type I before Type II on ties. The sort is
    // stable, so the +,- emission order keeps each Type I pair adjacent.
    std::stable_sort(blocks.begin(), blocks.end(), [](const LegoBlock& x, const LegoBlock& y) {
        if (x.highest() != y.highest()) return x.highest() > y.highest();
        return x.kind == LegoBlock::Kind::TypeI && y.kind == LegoBlock::Kind::TypeII;
    });
}

}  // namespace

LegoSet to_lego_set(const Partition& p) {
    if (!is_d_partition(p) || !is_special(p)) throw NotSpecial("Lego conversion requires a special D-partition");
    Pairing pairs = pair_partition(p);
    LegoSet set{p, p, {}};
    int extra_ones = 0;
    for (const Pair& q : pairs) {
        if (q.is_even_pair()) {
            set.blocks.push_back({LegoBlock::Kind::TypeI, q.hi, +1});
            set.blocks.push_back({LegoBlock::Kind::TypeI, q.hi, -1});
        } else {
            set.blocks.push_back({LegoBlock::Kind::TypeII, q.hi, 0});
            set.blocks.push_back({LegoBlock::Kind::TypeII, q.lo, 0});
            extra_ones += 2;
        }
    }
    set.augmented = augment(p, extra_ones);
    sort_blocks(set.blocks);
    long minor_total = 0;
    for (const auto& b : set.blocks) minor_total += b.minor_dim();
    if (minor_total != set.augmented.total())
        throw Error("lego minor dimensions do not add up to the augmented total");
    return set;
}

Partition augment(const Partition& p, int ones) {
    if (ones < 0 || ones % 2 != 0)
        throw ParityViolation("augmentation must append an even number of 1s");
    std::vector<int> parts = p.parts();
    parts.insert(parts.end(), ones, 1);
    return Partition(std::move(parts));
}

Realization realize(const Partition& p) {
    if (!is_d_partition(p) || !is_special(p)) throw NotSpecial("realization requires a special D-partition");
    Pairing pairs = pair_partition(p);
    Realization r{p, p, {}};
    int extra_ones = 0;
    for (const Pair& q : pairs) {
        if (q.is_even_pair()) {
            r.blocks.push_back({LegoBlock::Kind::TypeI, q.hi, +1});
            r.blocks.push_back({LegoBlock::Kind::TypeI, q.hi, -1});
        } else if (q.lo == 1) {
            r.blocks.push_back({LegoBlock::Kind::TypeII, q.hi, 0});
        } else {
            r.blocks.push_back({LegoBlock::Kind::TypeII, q.hi, 0});
            r.blocks.push_back({LegoBlock::Kind::TypeII, q.lo, 0});
            extra_ones += 2;
        }
    }
    r.realized = augment(p, extra_ones);
    sort_blocks(r.blocks);
    return r;
}

}  // namespace pflab
