#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ttt/tree.hpp"

namespace ttt {

// One child-assignment step of rooted embedding: demand shapes (the
// children of T's root, with multiplicities) must be matched injectively
// to distinct capacity branches (the children of S's root). Shapes are
// abstract here — the same feasibility kernel serves tree children and
// Gamma-value multisets — so compatibility comes precomputed, as do the
// two segment couplings:
//   demand.segment_hosts: the capacity segment can host this demand
//     shape (at tree level: least_family_index(D) < capacity bound);
//   capacity.hosts_demand_segment: w copies of this capacity shape can
//     host the whole demand segment cone (family_capacity(C) >= demand
//     bound).
struct DemandCapacityInstance {
    struct Demand {
        Card mult;
        bool segment_hosts = false;
    };
    struct Capacity {
        Card mult;
        bool hosts_demand_segment = false;
    };
    std::vector<Demand> demands;
    std::vector<Capacity> capacities;
    std::vector<std::vector<char>> compat;  // [demand][capacity]
    std::optional<Ordinal> demand_segment;
    std::optional<Ordinal> capacity_segment;
};

// Feasibility of the injective assignment, decomposed by cardinality:
//   (1) finite demands form an integral assignment where w capacities
//       (and a compatible segment) count as unbounded;
//   (2) every w demand has some w capacity host (a compatible segment
//       counts: a limit bound leaves room to interleave countably many
//       streams below cofinally many indices);
//   (3) a demand segment needs the capacity segment to dominate it, or
//       a single w capacity shape hosting its whole cone (the cone is
//       cofinal in its bound, so finitely many shapes can't split it).
// Clauses are independent because w splits into countably many w's.
bool fit_feasible(const DemandCapacityInstance& inst);

// Decides rooted topological-minor embedding and equivalence on the
// denoted (possibly infinite) trees. Decisions are pure; the memo table
// is shared and guarded, and entries are immutable once written, so
// concurrent use returns the same answers as sequential evaluation.
class EmbedEngine {
public:
    // Honors TTT_MEMO_LIMIT (max memo entries, 0 = unlimited).
    EmbedEngine();

    // T <= S with the image of T's root anywhere in S.
    bool embeds(const TreePtr& T, const TreePtr& S);
    // T <= S with T's root mapped onto S's root.
    bool embeds_at_root(const TreePtr& T, const TreePtr& S);
    // Same topological type: embeds both ways.
    bool equivalent(const TreePtr& T, const TreePtr& S);

    // Least a with D <= family(a).
    Ordinal least_family_index(const TreePtr& D);
    // Least upper bound of {g+1 : family(g) <= C}; equivalently the
    // least b with family(b) not<= C.
    Ordinal family_capacity(const TreePtr& C);

    std::size_t memo_entries() const;

    static EmbedEngine& shared();

private:
    bool lookup(const std::string& key, bool& out) const;
    void store(const std::string& key, bool value);

    mutable std::mutex mu_;
    std::unordered_map<std::string, bool> memo_;
    std::unordered_map<std::string, Ordinal> lfi_memo_;
    std::unordered_map<std::string, Ordinal> cap_memo_;
    std::size_t limit_ = 0;
};

}  // namespace ttt
