#include <algorithm>
#include <set>
#include <stdexcept>

#include "genring/presentations.hpp"

namespace genring {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

void collect_vars(const Term& t, std::set<std::size_t>& out) {
    if (t.is_var) {
        out.insert(t.id);
        return;
    }
    for (const auto& a : t.args) collect_vars(a, out);
}

// Evaluates against partial tables; -1 when an unassigned cell is needed.
long eval_partial(const Term& t, const std::vector<std::size_t>& env, const std::vector<std::vector<long>>& tables,
                  std::size_t s) {
    if (t.is_var) return static_cast<long>(env[t.id - 1]);
    std::size_t idx = 0;
    for (const auto& a : t.args) {
        const long v = eval_partial(a, env, tables, s);
        if (v < 0) return -1;
        idx = idx * s + static_cast<std::size_t>(v);
    }
    return tables[t.id][idx];
}

struct Instance {
    const Relation* rel;
    std::vector<std::size_t> env;
};

class ModelSearch {
public:
    ModelSearch(const Presentation& p, const std::vector<Relation>& rels, std::size_t s, const Term& lhs,
                const Term& rhs, std::size_t budget)
        : p_(p), s_(s), lhs_(lhs), rhs_(rhs), budget_(budget) {
        for (const auto& sym : p.symbols) tables_.emplace_back(ipow(s, sym.arity), -1);
        // constants first, then by arity, so identities like x+0 = x bite early
        std::vector<std::size_t> order(p.symbols.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return p.symbols[a].arity < p.symbols[b].arity; });
        bool fixed = false;
        for (std::size_t sym : order)
            for (std::size_t c = 0; c < tables_[sym].size(); ++c) {
                // carrier labels are interchangeable: the first constant may be taken to be 0
                if (!fixed && p.symbols[sym].arity == 0) {
                    tables_[sym][c] = 0;
                    fixed = true;
                    continue;
                }
                cells_.emplace_back(sym, c);
            }
        for (const auto& r : rels) {
            std::set<std::size_t> vs;
            collect_vars(r.lhs, vs);
            collect_vars(r.rhs, vs);
            const std::size_t width = vs.empty() ? 0 : *vs.rbegin();
            const std::vector<std::size_t> vars(vs.begin(), vs.end());
            std::vector<std::size_t> idx(vars.size(), 0);
            while (true) {
                std::vector<std::size_t> env(width, 0);
                for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i] - 1] = idx[i];
                instances_.push_back({&r, std::move(env)});
                std::size_t pos = 0;
                while (pos < idx.size() && ++idx[pos] == s) idx[pos++] = 0;
                if (pos == idx.size()) break;
            }
        }
        goal_arity_ = std::max(lhs.max_var(), rhs.max_var());
    }

    // 1 found, 0 exhausted, -1 budget
    int run() { return search(0); }

    std::size_t nodes() const { return nodes_; }
    const std::vector<std::size_t>& witness() const { return witness_; }

    FiniteModel model() const {
        FiniteModel m;
        m.size = s_;
        m.symbols = p_.symbols;
        for (const auto& t : tables_) {
            std::vector<std::size_t> row;
            for (long v : t) row.push_back(static_cast<std::size_t>(v));
            m.tables.push_back(std::move(row));
        }
        return m;
    }

private:
    bool consistent() const {
        for (const auto& inst : instances_) {
            const long a = eval_partial(inst.rel->lhs, inst.env, tables_, s_);
            if (a < 0) continue;
            const long b = eval_partial(inst.rel->rhs, inst.env, tables_, s_);
            if (b >= 0 && a != b) return false;
        }
        return true;
    }

    bool goal_fails() {
        std::vector<std::size_t> env(goal_arity_, 0);
        while (true) {
            if (eval_partial(lhs_, env, tables_, s_) != eval_partial(rhs_, env, tables_, s_)) {
                witness_ = env;
                return true;
            }
            std::size_t pos = 0;
            while (pos < env.size() && ++env[pos] == s_) env[pos++] = 0;
            if (pos == env.size()) return false;
        }
    }

    int search(std::size_t k) {
        if (!consistent()) return 0;
        if (k == cells_.size()) return goal_fails() ? 1 : 0;
        auto [sym, c] = cells_[k];
        for (std::size_t v = 0; v < s_; ++v) {
            if (++nodes_ > budget_) return -1;
            tables_[sym][c] = static_cast<long>(v);
            const int r = search(k + 1);
            if (r != 0) return r;
        }
        tables_[sym][c] = -1;
        return 0;
    }

    const Presentation& p_;
    std::size_t s_;
    const Term& lhs_;
    const Term& rhs_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::size_t goal_arity_ = 0;
    std::vector<std::vector<long>> tables_;
    std::vector<std::pair<std::size_t, std::size_t>> cells_;
    std::vector<Instance> instances_;
    std::vector<std::size_t> witness_;
};

}  // namespace

std::size_t FiniteModel::apply(std::size_t sym, const std::vector<std::size_t>& args) const {
    std::size_t idx = 0;
    for (auto a : args) idx = idx * size + a;
    return tables.at(sym).at(idx);
}

std::size_t FiniteModel::eval(const Term& t, const std::vector<std::size_t>& env) const {
    if (t.is_var) return env.at(t.id - 1);
    std::vector<std::size_t> args;
    args.reserve(t.args.size());
    for (const auto& a : t.args) args.push_back(eval(a, env));
    return apply(t.id, args);
}

bool satisfies(const Presentation& p, const FiniteModel& m) {
    for (const auto& r : effective_relations(p)) {
        std::vector<std::size_t> env(r.arity, 0);
        while (true) {
            if (m.eval(r.lhs, env) != m.eval(r.rhs, env)) return false;
            std::size_t pos = 0;
            while (pos < env.size() && ++env[pos] == m.size) env[pos++] = 0;
            if (pos == env.size()) break;
        }
    }
    return true;
}

CountermodelResult find_countermodel(const Presentation& p, const Term& lhs, const Term& rhs, std::size_t max_size,
                                     std::size_t node_budget) {
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    CountermodelResult res;
    if (lhs == rhs) return res;
    const auto rels = effective_relations(p);
    for (std::size_t s = 1; s <= max_size; ++s) {
        ModelSearch search(p, rels, s, lhs, rhs, node_budget > res.nodes ? node_budget - res.nodes : 0);
        const int r = search.run();
        res.nodes += search.nodes();
        res.sizes_searched = s;
        if (r == 1) {
            res.status = CountermodelResult::Status::found;
            res.model = search.model();
            res.assignment = search.witness();
            return res;
        }
        if (r < 0) {
            res.status = CountermodelResult::Status::undecided;
            return res;
        }
    }
    res.status = CountermodelResult::Status::none;
    return res;
}

}  // namespace genring
