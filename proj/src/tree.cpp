#include "ttt/tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ttt {

const TreePtr& TreeExpr::leaf() {
    static TreePtr instance = [] {
        auto t = std::shared_ptr<TreeExpr>(new TreeExpr());
        t->code_ = "leaf";
        t->fam_ = Ordinal();  // family(0)
        return TreePtr(t);
    }();
    return instance;
}

TreePtr make_node(std::vector<ChildSlot> children, std::optional<Ordinal> segment) {
    if (children.empty() && !segment)
        throw std::invalid_argument("tree: node needs at least one child or a segment");
    if (segment && !segment->is_limit())
        throw std::invalid_argument("tree: segment bound must be a limit ordinal");
    for (const auto& c : children) {
        if (!c.shape) throw std::invalid_argument("tree: null child shape");
        if (c.mult.is_zero()) throw std::invalid_argument("tree: multiplicity must be >= 1");
    }

    // Canonical form: sort by code, merge equal shapes.
    std::sort(children.begin(), children.end(), [](const ChildSlot& a, const ChildSlot& b) {
        return a.shape->code() < b.shape->code();
    });
    std::vector<ChildSlot> merged;
    for (auto& c : children) {
        if (!merged.empty() && merged.back().shape->code() == c.shape->code())
            merged.back().mult += c.mult;
        else
            merged.push_back(std::move(c));
    }

    auto t = std::shared_ptr<TreeExpr>(new TreeExpr());
    t->children_ = std::move(merged);
    t->segment_ = std::move(segment);

    Ordinal h;
    Card sz = 1;
    uint64_t es = 1;
    for (const auto& c : t->children_) {
        h = Ordinal::max(h, c.shape->height().successor());
        sz += c.mult * c.shape->size();
        es += c.shape->expr_size();
    }
    if (t->segment_) {
        h = Ordinal::max(h, *t->segment_);
        sz += Card::omega();
    }
    t->height_ = h;
    t->size_ = sz;
    t->expr_size_ = es;

    // Family recognition.
    if (t->children_.empty() && t->segment_) {
        t->fam_ = *t->segment_;
    } else if (t->children_.size() == 1 && !t->segment_ && t->children_[0].mult.is_omega()) {
        if (const auto& f = t->children_[0].shape->family_index()) t->fam_ = f->successor();
    }

    // Code: family(a) prints compactly from a = w on (a pure-segment node
    // has no other grammatical spelling anyway); below w the structural
    // form is the canonical one.
    if (t->fam_ && *t->fam_ >= Ordinal::omega()) {
        t->code_ = "family(" + t->fam_->str() + ")";
    } else {
        std::string c = "node(";
        for (size_t i = 0; i < t->children_.size(); ++i) {
            if (i > 0) c += ",";
            c += t->children_[i].shape->code();
            if (t->children_[i].mult != Card(1)) c += "^" + t->children_[i].mult.str();
        }
        if (t->segment_) c += ";seg=" + t->segment_->str();
        c += ")";
        t->code_ = std::move(c);
    }
    return t;
}

TreePtr star(const TreePtr& shape, Card mult) { return make_node({{shape, mult}}); }

TreePtr family(const Ordinal& a) {
    if (a.is_zero()) return TreeExpr::leaf();
    if (a.is_limit()) return make_node({}, a);
    return star(family(a.predecessor()), Card::omega());
}

std::optional<Ordinal> as_family(const TreePtr& t) {
    return t ? t->family_index() : std::nullopt;
}

FiniteTree::FiniteTree(std::vector<int> parent) : parent_(std::move(parent)) {
    if (parent_.empty() || parent_[0] != -1)
        throw std::invalid_argument("finite tree: vertex 0 must be the root");
    int n = static_cast<int>(parent_.size());
    kids_.resize(n);
    depth_.resize(n, 0);
    for (int v = 1; v < n; ++v) {
        if (parent_[v] < 0 || parent_[v] >= v)
            throw std::invalid_argument("finite tree: parents must precede children");
        kids_[parent_[v]].push_back(v);
        depth_[v] = depth_[parent_[v]] + 1;
    }
}

int FiniteTree::meet(int u, int v) const {
    while (depth_[u] > depth_[v]) u = parent_[u];
    while (depth_[v] > depth_[u]) v = parent_[v];
    while (u != v) {
        u = parent_[u];
        v = parent_[v];
    }
    return u;
}

bool FiniteTree::is_ancestor(int u, int v) const {
    while (depth_[v] > depth_[u]) v = parent_[v];
    return u == v;
}

namespace {
void truncate_into(const TreePtr& t, int parent_idx, int n, std::vector<int>& par) {
    int me = static_cast<int>(par.size());
    par.push_back(parent_idx);
    for (const auto& c : t->children()) {
        uint64_t k = c.mult.is_omega() ? static_cast<uint64_t>(n) : c.mult.finite();
        for (uint64_t i = 0; i < k; ++i) truncate_into(c.shape, me, n, par);
    }
    if (t->segment()) {
        for (int i = 0; i < n; ++i)
            truncate_into(family(t->segment()->fundamental(static_cast<uint64_t>(i))), me, n, par);
    }
}
}  // namespace

FiniteTree truncate(const TreePtr& t, int n) {
    if (n < 1) throw std::invalid_argument("truncate: n must be >= 1");
    std::vector<int> par;
    truncate_into(t, -1, n, par);
    return FiniteTree(std::move(par));
}

namespace {
TreePtr lift_vertex(const FiniteTree& t, int v) {
    if (t.children(v).empty()) return TreeExpr::leaf();
    std::vector<ChildSlot> slots;
    for (int c : t.children(v)) slots.push_back({lift_vertex(t, c), Card(1)});
    return make_node(std::move(slots));
}
}  // namespace

TreePtr lift(const FiniteTree& t) { return lift_vertex(t, t.root()); }

namespace {
void collect_suffixes(const TreePtr& t, std::map<std::string, TreePtr>& seen, Ordinal& bound) {
    if (seen.count(t->code())) return;
    seen.emplace(t->code(), t);
    if (t->segment()) bound = Ordinal::max(bound, *t->segment());
    for (const auto& c : t->children()) collect_suffixes(c.shape, seen, bound);
}
}  // namespace

Suffixes suffixes(const TreePtr& t) {
    Suffixes s;
    std::map<std::string, TreePtr> seen;
    collect_suffixes(t, seen, s.family_bound);
    for (auto& [code, ptr] : seen) s.exprs.push_back(ptr);
    return s;
}

}  // namespace ttt
