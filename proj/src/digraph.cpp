#include "hermspec/digraph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hermspec {

int Digraph::pair_index(int u, int v) const {
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

PairState Digraph::state(int u, int v) const {
    if (u == v) throw std::invalid_argument("state: u == v");
    if (u < v) return pair_states[pair_index(u, v)];
    PairState s = pair_states[pair_index(v, u)];
    if (s == PairState::Forward) return PairState::Backward;
    if (s == PairState::Backward) return PairState::Forward;
    return s;
}

void Digraph::set_state(int u, int v, PairState s) {
    if (u == v) throw std::invalid_argument("set_state: u == v");
    if (u < v) {
        pair_states[pair_index(u, v)] = s;
    } else {
        if (s == PairState::Forward) s = PairState::Backward;
        else if (s == PairState::Backward) s = PairState::Forward;
        pair_states[pair_index(v, u)] = s;
    }
}

PairCode code_of(const Digraph& g) {
    PairCode c(g.pair_states.size(), '0');
    for (size_t i = 0; i < g.pair_states.size(); ++i)
        c[i] = char('0' + int(g.pair_states[i]));
    return c;
}

Digraph digraph_from_code(int n, const PairCode& code) {
    Digraph g(n);
    if ((int)code.size() != Digraph::pair_count(n))
        throw std::invalid_argument("code length does not match vertex count");
    for (size_t i = 0; i < code.size(); ++i) {
        int d = code[i] - '0';
        if (d < 0 || d > 3) throw std::invalid_argument("code digit out of range");
        g.pair_states[i] = PairState(d);
    }
    return g;
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    Digraph g;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments and blank lines
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (n < 0) {
            if (tok != "n")
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'n <count>'");
            if (!(ls >> n) || n < 1)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad vertex count");
            std::string rest;
            if (ls >> rest)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
            g = Digraph(n);
            seen.assign(Digraph::pair_count(n), false);
            continue;
        }
        int u, v;
        std::string kind;
        std::istringstream ls2(line);
        if (!(ls2 >> u >> v >> kind))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed line");
        std::string rest;
        if (ls2 >> rest)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": vertex index out of range");
        if (u == v)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": self-loop not allowed");
        int a = std::min(u, v), b = std::max(u, v);
        int idx = g.pair_index(a, b);
        if (seen[idx])
            throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate pair {" +
                                        std::to_string(a) + "," + std::to_string(b) + "}");
        seen[idx] = true;
        if (kind == "digon") {
            g.set_state(u, v, PairState::Digon);
        } else if (kind == "arc") {
            g.set_state(u, v, PairState::Forward);  // u -> v
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown edge kind '" + kind + "'");
        }
    }
    if (n < 0) throw std::invalid_argument("missing 'n <count>' header");
    return g;
}

std::string serialize_digraph(const Digraph& g) {
    std::ostringstream out;
    out << "n " << g.n << "\n";
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            switch (g.pair_states[g.pair_index(u, v)]) {
                case PairState::None: break;
                case PairState::Digon: out << u << " " << v << " digon\n"; break;
                case PairState::Forward: out << u << " " << v << " arc\n"; break;
                case PairState::Backward: out << v << " " << u << " arc\n"; break;
            }
        }
    return out.str();
}

std::string digraph_to_json(const Digraph& g) {
    static const char* names[4] = {"none", "digon", "forward", "backward"};
    std::ostringstream out;
    out << "{\"n\":" << g.n << ",\"pairs\":[";
    bool first = true;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            PairState s = g.pair_states[g.pair_index(u, v)];
            if (s == PairState::None) continue;
            if (!first) out << ",";
            first = false;
            out << "{\"u\":" << u << ",\"v\":" << v << ",\"state\":\"" << names[int(s)] << "\"}";
        }
    out << "]}";
    return out.str();
}

Digraph permute_digraph(const Digraph& g, const std::vector<int>& perm) {
    if ((int)perm.size() != g.n) throw std::invalid_argument("permutation size mismatch");
    Digraph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            h.set_state(perm[u], perm[v], g.pair_states[g.pair_index(u, v)]);
    return h;
}

namespace {

// permuted code digit for pair slot (u,v) without materializing the digraph
inline char permuted_digit(const Digraph& g, const std::vector<int>& inv, int u, int v) {
    int a = inv[u], b = inv[v];  // preimages
    PairState s = g.state(a, b);
    return char('0' + int(s));
}

} // namespace

PairCode canonical_code(const Digraph& g) {
    if (g.n > 8) throw std::invalid_argument("canonical_code: n > 8 not supported (factorial scan)");
    PairCode best = code_of(g);
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> inv(g.n);
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (int i = 0; i < g.n; ++i) inv[perm[i]] = i;
        // lexicographic compare with early bail-out
        bool smaller = false, decided = false;
        size_t slot = 0;
        for (int u = 0; u < g.n && !decided; ++u)
            for (int v = u + 1; v < g.n; ++v, ++slot) {
                char c = permuted_digit(g, inv, u, v);
                if (c != best[slot]) {
                    smaller = c < best[slot];
                    decided = true;
                    break;
                }
            }
        if (smaller) {
            slot = 0;
            for (int u = 0; u < g.n; ++u)
                for (int v = u + 1; v < g.n; ++v, ++slot) best[slot] = permuted_digit(g, inv, u, v);
        }
    }
    return best;
}

uint64_t labeled_digraph_count(int n) {
    int p = Digraph::pair_count(n);
    if (p > 31) throw std::invalid_argument("labeled_digraph_count: too many pairs");
    return uint64_t(1) << (2 * p);
}

Digraph digraph_from_counter(int n, uint64_t counter) {
    Digraph g(n);
    int p = Digraph::pair_count(n);
    for (int i = 0; i < p; ++i) g.pair_states[i] = PairState((counter >> (2 * i)) & 3);
    return g;
}

void enumerate_digraphs(int n, bool dedup, const std::function<bool(const Digraph&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumerate_digraphs: n >= 1 required");
    if (dedup && n > 7) throw std::invalid_argument("enumerate_digraphs: dedup limited to n <= 7");
    uint64_t total = labeled_digraph_count(n);
    for (uint64_t c = 0; c < total; ++c) {
        Digraph g = digraph_from_counter(n, c);
        if (dedup && canonical_code(g) != code_of(g)) continue;
        if (!fn(g)) return;
    }
}

Digraph petersen() {
    Digraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.set_state(i, (i + 1) % 5, PairState::Digon);           // outer cycle
        g.set_state(5 + i, 5 + (i + 2) % 5, PairState::Digon);   // inner pentagram
        g.set_state(i, 5 + i, PairState::Digon);                 // spokes
    }
    return g;
}

Digraph example4() {
    Digraph g(4);
    g.set_state(1, 0, PairState::Forward);
    g.set_state(0, 3, PairState::Forward);
    g.set_state(3, 2, PairState::Forward);
    g.set_state(2, 1, PairState::Forward);
    g.set_state(0, 2, PairState::Digon);
    g.set_state(1, 3, PairState::Digon);
    return g;
}

} // namespace hermspec
