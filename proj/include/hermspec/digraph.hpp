#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hermspec {

// State of an unordered vertex pair {u,v}, u < v. A pair of opposite arcs is
// a digon, never two separate arcs.
enum class PairState : uint8_t { None = 0, Digon = 1, Forward = 2, Backward = 3 };

// Mixed graph on n vertices: every unordered pair of distinct vertices holds
// exactly one PairState. Immutable by convention after construction.
struct Digraph {
    int n = 0;
    std::vector<PairState> pair_states;  // lexicographic (u,v), u < v

    Digraph() = default;
    explicit Digraph(int n_) : n(n_), pair_states(pair_count(n_), PairState::None) {}

    static int pair_count(int n) { return n * (n - 1) / 2; }
    int pair_index(int u, int v) const;  // requires u < v

    PairState state(int u, int v) const;  // any order; flips Forward/Backward if u > v
    void set_state(int u, int v, PairState s);

    bool operator==(const Digraph& o) const = default;
};

// Base-4 digit string, one digit per pair in lexicographic order.
using PairCode = std::string;

PairCode code_of(const Digraph& g);
Digraph digraph_from_code(int n, const PairCode& code);

Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& g);
std::string digraph_to_json(const Digraph& g);

Digraph permute_digraph(const Digraph& g, const std::vector<int>& perm);

// Lexicographically minimal code over all vertex relabelings. Brute force, n <= 8.
PairCode canonical_code(const Digraph& g);

// Visits all 4^(n(n-1)/2) labeled digraphs in code order; with dedup only
// canonical representatives are passed on. Return false from fn to stop.
void enumerate_digraphs(int n, bool dedup, const std::function<bool(const Digraph&)>& fn);

uint64_t labeled_digraph_count(int n);  // 4^(n(n-1)/2), n small enough for uint64
Digraph digraph_from_counter(int n, uint64_t counter);

// The order-4 mixed graph used as a fixture throughout the test suite:
// arcs 1->0, 0->3, 3->2, 2->1 and digons {0,2}, {1,3}.
Digraph example4();

// Petersen graph as an all-digon digraph (outer 5-cycle, inner pentagram, spokes).
Digraph petersen();

} // namespace hermspec
