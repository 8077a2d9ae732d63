#include "genring/egraph.hpp"

#include <utility>

namespace genring {

std::size_t EGraph::KeyHash::operator()(const std::vector<std::int64_t>& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : k) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

EGraph::Id EGraph::find(Id a) const {
    Id r = a;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[a] != r) {
        Id next = parent_[a];
        parent_[a] = r;
        a = next;
    }
    return r;
}

std::vector<std::int64_t> EGraph::key(const Node& n) const {
    std::vector<std::int64_t> k;
    k.reserve(n.kids.size() + 1);
    k.push_back(n.op);
    for (Id c : n.kids) k.push_back(find(c));
    return k;
}

EGraph::Id EGraph::add_node(std::int64_t op, std::vector<Id> kids) {
    Node n{op, std::move(kids)};
    auto k = key(n);
    if (auto it = table_.find(k); it != table_.end()) return find(it->second);
    const Id id = static_cast<Id>(nodes_.size());
    for (Id c : n.kids) uses_[find(c)].push_back(id);
    nodes_.push_back(std::move(n));
    parent_.push_back(id);
    uses_.emplace_back();
    table_.emplace(std::move(k), id);
    return id;
}

EGraph::Id EGraph::add(const Term& t) {
    if (t.is_var) return add_node(-static_cast<std::int64_t>(t.id), {});
    std::vector<Id> kids;
    kids.reserve(t.args.size());
    for (const auto& a : t.args) kids.push_back(add(a));
    return add_node(static_cast<std::int64_t>(t.id), std::move(kids));
}

void EGraph::merge(Id a, Id b) {
    std::vector<std::pair<Id, Id>> pending{{a, b}};
    while (!pending.empty()) {
        auto [x, y] = pending.back();
        pending.pop_back();
        x = find(x);
        y = find(y);
        if (x == y) continue;
        if (uses_[x].size() < uses_[y].size()) std::swap(x, y);
        parent_[y] = x;
        std::vector<Id> moved = std::move(uses_[y]);
        uses_[y].clear();
        for (Id u : moved) {
            auto [it, inserted] = table_.try_emplace(key(nodes_[u]), u);
            if (!inserted && find(it->second) != find(u)) pending.emplace_back(it->second, u);
            uses_[x].push_back(u);
        }
    }
}

}  // namespace genring
