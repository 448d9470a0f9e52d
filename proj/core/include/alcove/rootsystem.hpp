#pragma once

#include <string>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

// Simple Dynkin type, family letter + rank.  Classical ranks are capped at 16.
struct DynkinType {
    char family = 'A';  // one of A B C D E F G
    int rank = 1;

    void validate() const;  // throws InvalidRank
    bool operator==(const DynkinType& o) const { return family == o.family && rank == o.rank; }
    bool operator!=(const DynkinType& o) const { return !(*this == o); }

    // Parses "A2", "g2", "E8"; throws ParseError.
    static DynkinType parse(const std::string& s);
    std::string str() const { return std::string(1, family) + std::to_string(rank); }
};

// A root is its integer coefficient vector in the simple-root basis
// (Bourbaki numbering).
using Root = std::vector<int>;

inline Root negate(const Root& r) {
    Root n(r.size());
    for (size_t i = 0; i < r.size(); ++i) n[i] = -r[i];
    return n;
}

inline int height(const Root& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
}

// Generated root data for a simple type.  Roots are stored in canonical
// order: positives sorted by height then reverse-lexicographically, followed
// by their negatives in the matching order.
class RootSystem {
public:
    explicit RootSystem(DynkinType dynkin);

    // Cached per-type instance; safe to share, instances are immutable.
    static const RootSystem& get(DynkinType dynkin);

    const DynkinType& dynkin() const { return dynkin_; }
    int rank() const { return dynkin_.rank; }

    // cartan()[i][j] = <alpha_j, alpha_i^vee>; row i is alpha_i^vee in the
    // fundamental-coweight basis.
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    const std::vector<Root>& roots() const { return roots_; }
    int num_positive() const { return npos_; }
    const Root& positive(int i) const { return roots_[i]; }
    const Root& highest() const { return highest_; }

    bool is_root(const Root& r) const { return index_of(r) >= 0; }
    int index_of(const Root& r) const;  // -1 when r is not a root

    // alpha_i^vee in the fundamental-coweight basis (row i of the Cartan
    // matrix), 0-based simple index.
    std::vector<int> simple_coroot_coweight(int i) const;

    // Coroot of roots_[idx] expressed in the simple-coroot basis.
    const std::vector<int>& coroot(int idx) const { return coroots_[idx]; }

    // Coroot of the highest root in the fundamental-coweight basis.
    std::vector<int> highest_coroot_coweight() const;

    // <r, theta_coords> with theta in fundamental-coweight coordinates.
    Rat pairing(const Root& r, const std::vector<Rat>& coords) const;

private:
    DynkinType dynkin_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> roots_;
    std::vector<std::vector<int>> coroots_;  // parallel to roots_
    Root highest_;
    int npos_ = 0;
};

struct GroupConstants {
    long coxeter = 0;
    long mixed_char_bound = 0;
    long min_faithful_dim = 0;
};

GroupConstants group_constants(DynkinType dynkin);

// Cartan matrix in the fixed convention, Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(DynkinType dynkin);

}  // namespace alcove
