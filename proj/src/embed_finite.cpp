#include "ttt/embed_finite.hpp"

#include <algorithm>
#include <queue>

namespace ttt {

namespace {

// anywhere[t][s], at_root[t][s] over all vertex pairs, filled bottom-up.
struct DpTables {
    int nT, nS;
    std::vector<char> anywhere, at_root;
    char& any(int t, int s) { return anywhere[t * nS + s]; }
    char& root(int t, int s) { return at_root[t * nS + s]; }
};

// Kuhn's augmenting-path matching over an implicit adjacency matrix.
class Matcher {
public:
    Matcher(int n_left, int n_right) : nl_(n_left), nr_(n_right), match_right_(n_right, -1) {}

    template <class Adj>
    bool perfect_left(const Adj& adj) {
        for (int u = 0; u < nl_; ++u) {
            seen_.assign(nr_, false);
            if (!augment(u, adj)) return false;
        }
        return true;
    }

    // match_right()[v] = left endpoint matched to right v, or -1.
    const std::vector<int>& match_right() const { return match_right_; }

private:
    template <class Adj>
    bool augment(int u, const Adj& adj) {
        for (int v = 0; v < nr_; ++v) {
            if (!adj(u, v) || seen_[v]) continue;
            seen_[v] = true;
            if (match_right_[v] == -1 || augment(match_right_[v], adj)) {
                match_right_[v] = u;
                return true;
            }
        }
        return false;
    }

    int nl_, nr_;
    std::vector<int> match_right_;
    std::vector<char> seen_;
};

DpTables fill_tables(const FiniteTree& T, const FiniteTree& S) {
    DpTables dp;
    dp.nT = T.size();
    dp.nS = S.size();
    dp.anywhere.assign(dp.nT * dp.nS, 0);
    dp.at_root.assign(dp.nT * dp.nS, 0);

    // Vertex order already has parents first, so iterating backwards is
    // a postorder for the DP.
    for (int s = dp.nS - 1; s >= 0; --s) {
        for (int t = dp.nT - 1; t >= 0; --t) {
            const auto& ct = T.children(t);
            const auto& cs = S.children(s);
            bool fits;
            if (ct.empty()) {
                fits = true;
            } else if (ct.size() > cs.size()) {
                fits = false;
            } else {
                Matcher m(static_cast<int>(ct.size()), static_cast<int>(cs.size()));
                fits = m.perfect_left([&](int i, int j) { return dp.any(ct[i], cs[j]) != 0; });
            }
            dp.root(t, s) = fits ? 1 : 0;
            char any = dp.root(t, s);
            for (int c : cs)
                if (dp.any(t, c)) any = 1;
            dp.any(t, s) = any;
        }
    }
    return dp;
}

// First vertex in the subtree at s (preorder) where t fits at-root.
int first_fit(const FiniteTree& S, DpTables& dp, int t, int s) {
    if (dp.root(t, s)) return s;
    for (int c : S.children(s)) {
        if (dp.any(t, c)) return first_fit(S, dp, t, c);
    }
    return -1;
}

void extract(const FiniteTree& T, const FiniteTree& S, DpTables& dp, int t, int s,
             std::vector<int>& out) {
    out[t] = s;
    const auto& ct = T.children(t);
    if (ct.empty()) return;
    const auto& cs = S.children(s);
    Matcher m(static_cast<int>(ct.size()), static_cast<int>(cs.size()));
    m.perfect_left([&](int i, int j) { return dp.any(ct[i], cs[j]) != 0; });
    const auto& mr = m.match_right();
    for (int j = 0; j < static_cast<int>(cs.size()); ++j) {
        if (mr[j] < 0) continue;
        int child = ct[mr[j]];
        extract(T, S, dp, child, first_fit(S, dp, child, cs[j]), out);
    }
}

}  // namespace

bool embed_rooted_decide(const FiniteTree& T, const FiniteTree& S) {
    if (T.size() > S.size()) return false;
    DpTables dp = fill_tables(T, S);
    return dp.any(T.root(), S.root()) != 0;
}

std::optional<EmbeddingWitness> embed_rooted(const FiniteTree& T, const FiniteTree& S) {
    if (T.size() > S.size()) return std::nullopt;
    DpTables dp = fill_tables(T, S);
    if (!dp.any(T.root(), S.root())) return std::nullopt;
    EmbeddingWitness w;
    w.map.assign(T.size(), -1);
    extract(T, S, dp, T.root(), first_fit(S, dp, T.root(), S.root()), w.map);
    return w;
}

namespace {

struct OracleSearch {
    const FiniteTree& T;
    const FiniteTree& S;
    std::vector<int> map;        // T vertex -> S vertex or -1
    std::vector<char> used;      // S vertex taken

    bool assign(int idx) {
        if (idx == T.size()) return true;
        int p = T.parent(idx);
        for (int s = 0; s < S.size(); ++s) {
            if (used[s]) continue;
            if (idx > 0) {
                // Order preservation: the image must lie strictly below
                // the parent's image.
                if (s == map[p] || !S.is_ancestor(map[p], s)) continue;
                // Sibling meets checked incrementally against already
                // placed siblings.
                bool ok = true;
                for (int sib : T.children(p)) {
                    if (sib >= idx) break;
                    if (S.meet(map[sib], s) != map[p]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
            }
            map[idx] = s;
            used[s] = 1;
            if (assign(idx + 1)) return true;
            used[s] = 0;
            map[idx] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<bool> embed_rooted_oracle(const FiniteTree& T, const FiniteTree& S) {
    if (T.size() > 7 || S.size() > 9) return std::nullopt;  // search budget
    if (T.size() > S.size()) return false;
    OracleSearch search{T, S, std::vector<int>(T.size(), -1), std::vector<char>(S.size(), 0)};
    return search.assign(0);
}

bool embed_unrooted(const FiniteTree& T, const FiniteTree& S) {
    if (T.size() > S.size()) return false;
    for (int rt = 0; rt < T.size(); ++rt) {
        FiniteTree Tr = reroot(T, rt);
        for (int rs = 0; rs < S.size(); ++rs) {
            if (embed_rooted_decide(Tr, reroot(S, rs))) return true;
        }
    }
    return false;
}

namespace {
std::string ahu(const FiniteTree& T, int v) {
    std::vector<std::string> codes;
    for (int c : T.children(v)) codes.push_back(ahu(T, c));
    std::sort(codes.begin(), codes.end());
    std::string out = "(";
    for (const auto& c : codes) out += c;
    out += ")";
    return out;
}
}  // namespace

std::string canonical_code(const FiniteTree& T) { return ahu(T, T.root()); }

bool validate_witness(const FiniteTree& T, const FiniteTree& S, const EmbeddingWitness& w) {
    if (static_cast<int>(w.map.size()) != T.size()) return false;
    std::vector<char> used(S.size(), 0);
    for (int v = 0; v < T.size(); ++v) {
        int s = w.map[v];
        if (s < 0 || s >= S.size() || used[s]) return false;  // injective
        used[s] = 1;
    }
    for (int v = 1; v < T.size(); ++v) {
        if (!S.is_ancestor(w.map[T.parent(v)], w.map[v]) || w.map[v] == w.map[T.parent(v)])
            return false;  // order-preserving (parent constraint suffices transitively)
    }
    for (int x = 0; x < T.size(); ++x) {
        const auto& kids = T.children(x);
        for (size_t i = 0; i < kids.size(); ++i)
            for (size_t j = i + 1; j < kids.size(); ++j)
                if (S.meet(w.map[kids[i]], w.map[kids[j]]) != w.map[x]) return false;
    }
    return true;
}

FiniteTree reroot(const FiniteTree& T, int r) {
    int n = T.size();
    std::vector<std::vector<int>> adj(n);
    for (int v = 1; v < n; ++v) {
        adj[v].push_back(T.parent(v));
        adj[T.parent(v)].push_back(v);
    }
    std::vector<int> order, parent_of(n, -2), newidx(n, -1);
    std::queue<int> q;
    q.push(r);
    parent_of[r] = -1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        newidx[v] = static_cast<int>(order.size());
        order.push_back(v);
        for (int u : adj[v]) {
            if (parent_of[u] == -2) {
                parent_of[u] = v;
                q.push(u);
            }
        }
    }
    std::vector<int> par(n);
    for (int i = 0; i < n; ++i) par[i] = parent_of[order[i]] == -1 ? -1 : newidx[parent_of[order[i]]];
    return FiniteTree(std::move(par));
}

}  // namespace ttt
