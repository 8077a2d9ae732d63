#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "genring/terms.hpp"

namespace genring {

// Hash-consed term graph with union-find and congruence propagation.
class EGraph {
public:
    using Id = std::uint32_t;

    Id add(const Term& t);
    void merge(Id a, Id b);
    Id find(Id a) const;
    bool equivalent(Id a, Id b) const { return find(a) == find(b); }
    std::size_t size() const { return nodes_.size(); }

private:
    struct Node {
        std::int64_t op;  // symbol id, or -k for variable x_k
        std::vector<Id> kids;
    };
    struct KeyHash {
        std::size_t operator()(const std::vector<std::int64_t>& k) const;
    };

    Id add_node(std::int64_t op, std::vector<Id> kids);
    std::vector<std::int64_t> key(const Node& n) const;

    std::vector<Node> nodes_;
    mutable std::vector<Id> parent_;
    std::vector<std::vector<Id>> uses_;
    std::unordered_map<std::vector<std::int64_t>, Id, KeyHash> table_;
};

}  // namespace genring
