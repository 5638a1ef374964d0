#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "synkit/congruence.hpp"

namespace synkit {

using ElementId = int32_t;

// Total map Q -> Q.
struct Transformation {
    std::vector<State> images;

    int degree() const { return static_cast<int>(images.size()); }
    bool operator==(const Transformation&) const = default;
};

// Apply s first, then t (words read left to right).
Transformation compose(const Transformation& s, const Transformation& t);
int rank(const Transformation& t);
Partition kernel(const Transformation& t);

// Finite monoid generated by the letter transformations.  Elements are
// numbered in breadth-first discovery order from the identity, so each
// element's witness word is shortest, then lexicographically least, and
// ids sort by (witness length, witness word).
class TransitionMonoid {
public:
    static TransitionMonoid enumerate(const Automaton& a, const SearchLimits& lim = {});

    int size() const { return size_; }
    int degree() const { return n_; }
    int generator_count() const { return k_; }

    std::span<const State> images(ElementId e) const {
        return {arena_.data() + size_t(e) * n_, size_t(n_)};
    }
    Transformation element(ElementId e) const;
    int rank_of(ElementId e) const { return rank_[e]; }
    Partition kernel_of(ElementId e) const;

    ElementId identity() const { return 0; }
    ElementId right(ElementId e, Letter x) const { return right_[size_t(e) * k_ + x]; }
    ElementId left(Letter x, ElementId e) const { return left_[size_t(e) * k_ + x]; }
    ElementId product(ElementId a, ElementId b) const;  // a then b
    ElementId generator(Letter x) const { return right(0, x); }

    std::optional<ElementId> find(const Transformation& t) const;
    ElementId eval(const Word& w) const;  // image of w under the evaluation morphism

    Word witness(ElementId e) const;
    int witness_length(ElementId e) const { return wlen_[e]; }

private:
    int n_ = 0, k_ = 0, size_ = 0;
    std::vector<State> arena_;          // size_ * n_
    std::vector<ElementId> right_;      // size_ * k_
    std::vector<ElementId> left_;       // size_ * k_
    std::vector<ElementId> parent_;
    std::vector<int8_t> parent_letter_;
    std::vector<int> wlen_;
    std::vector<int> rank_;
    // open-addressing table over arena rows
    std::vector<int32_t> table_;
    uint64_t hash_row(const State* row) const;
    std::optional<ElementId> lookup_row(const State* row) const;
};

// Subset of element ids, optionally viewed modulo a zeroed ideal Z: then
// members is a plain subset of M and members ∪ Z is an ideal of M.
struct MonoidIdeal {
    std::vector<ElementId> members;                 // sorted ascending
    std::optional<std::vector<ElementId>> zero;     // sorted ascending

    bool contains(ElementId e) const;
    size_t size() const { return members.size(); }
};

// members ∪ extra closed under two-sided multiplication by generators.
bool is_ideal(const TransitionMonoid& m, const std::vector<ElementId>& members,
              const std::vector<ElementId>& extra = {});

// Rank-1 elements; empty iff the automaton is not synchronizing.
MonoidIdeal syn_ideal(const TransitionMonoid& m);

// Elements whose full image lies inside a single s-class.
MonoidIdeal syn_quotient_ideal(const TransitionMonoid& m, const Partition& s);

// { x e y : x, y in M }, via closure over the Cayley tables.
MonoidIdeal principal_ideal(const TransitionMonoid& m, ElementId e);

// Least k with I^k ⊆ z, where I = i.members ∪ z; nullopt when the powers
// stabilize outside z.
std::optional<int> is_nilpotent_mod(const TransitionMonoid& m, const MonoidIdeal& i,
                                    const MonoidIdeal& z);

// Minimal elements (mod z) among the principal ideals of elements outside
// z.  Every minimal nonzero ideal of M/Z arises this way.
std::vector<MonoidIdeal> zero_minimal_ideals(const TransitionMonoid& m, const MonoidIdeal& z);

// Mutual-reachability classes of the two-sided Cayley graph, with the
// condensation order.  Class ids are ordered by least member.
struct JClasses {
    std::vector<int32_t> class_of;
    std::vector<std::vector<ElementId>> members;
    std::vector<std::vector<int32_t>> succ;  // sorted, deduped

    static JClasses build(const TransitionMonoid& m);
};

// Morphism onto the transition monoid of the quotient automaton.
struct InducedMorphism {
    QuotientResult quot;
    TransitionMonoid monoid;        // monoid of the quotient
    std::vector<ElementId> map;     // element of m -> element of monoid
};
InducedMorphism induced_morphism(const TransitionMonoid& m, const Automaton& a,
                                 const Partition& s, const SearchLimits& lim = {});

// { e : map(e) ∈ subset } as a sorted id list.
std::vector<ElementId> pullback(const InducedMorphism& phi, const std::vector<ElementId>& subset);

}  // namespace synkit
