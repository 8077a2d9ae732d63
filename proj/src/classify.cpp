#include "genring/classify.hpp"

#include <stdexcept>

namespace genring {

namespace {

bool next_tuple(std::vector<std::size_t>& idx, std::size_t base) {
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == base) idx[pos++] = 0;
    return pos < idx.size();
}

// Atoms whose defining constraint is a condition on each coordinate alone.
bool coordinatewise(const CoeffMonad& m) {
    using T = CoeffMonad::Tag;
    switch (m.tag()) {
        case T::Z:
        case T::N:
        case T::BN:
            return true;
        case T::Intersection:
            for (const auto& part : m.parts())
                if (!coordinatewise(part)) return false;
            return true;
        default:
            return false;
    }
}

}  // namespace

ModelCommuteResult commute_in_model(const FiniteModel& model, std::size_t a, std::size_t b) {
    const std::size_t n = model.symbols.at(a).arity, m = model.symbols.at(b).arity;
    std::vector<std::size_t> x(n * m, 0);
    ModelCommuteResult res;
    do {
        std::vector<std::size_t> rows(n), cols(m);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> r(x.begin() + i * m, x.begin() + (i + 1) * m);
            rows[i] = model.apply(b, r);
        }
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<std::size_t> c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = x[i * m + j];
            cols[j] = model.apply(a, c);
        }
        if (model.apply(a, rows) != model.apply(b, cols)) {
            res.commutes = false;
            res.witness = x;
            return res;
        }
    } while (next_tuple(x, model.size));
    return res;
}

CommutativityReport is_commutative_model(const FiniteModel& model) {
    CommutativityReport rep;
    for (std::size_t a = 0; a < model.symbols.size(); ++a)
        for (std::size_t b = 0; b < model.symbols.size(); ++b) {
            ++rep.pairs;
            if (commute_in_model(model, a, b).commutes)
                ++rep.passed;
            else if (!rep.failure)
                rep.failure = std::make_pair(model.symbols[a].name, model.symbols[b].name);
        }
    return rep;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::yes_sampled: return "yes (sampled)";
        case Verdict::no: return "no";
        case Verdict::unknown: return "unknown";
        case Verdict::not_applicable: return "not applicable";
    }
    return "unknown";
}

std::string AdditivityReport::cell(Verdict v, const std::optional<bool>& exact) {
    if (exact) {
        // an exact decision must never contradict a sampled verdict
        if (*exact && (v == Verdict::yes || v == Verdict::yes_sampled)) return "oui";
        if (!*exact && (v == Verdict::no || v == Verdict::unknown)) return "non";
        return "?";
    }
    switch (v) {
        case Verdict::yes: return "oui";
        case Verdict::no:
        case Verdict::not_applicable: return "non";
        default: return "?";
    }
}

AdditivityReport classify_additivity(const CoeffMonad& m, std::size_t n_max) {
    auto rep = classify_additivity_generic(CoeffModel{m}, n_max);
    if (!m.has_constant()) return rep;
    // π_n(t)_k = (t_k) for every t, so π_n is injective
    rep.hypo_exact = true;
    // onto Σ(1)^n iff the constraint on Σ(n) splits over coordinates; otherwise
    // (e, ..., e) is the obstruction
    const bool split = coordinatewise(m);
    const RatVec ones(2, Rat(1));
    if (split) {
        rep.hyper_exact = true;
    } else {
        rep.hyper_exact = contains(m, ones) ? std::optional<bool>{} : std::optional<bool>{false};
        if (rep.hyper_exact && rep.hyper_witness.empty()) rep.hyper_witness = {to_string(ones)};
    }
    return rep;
}

AdditivityReport classify_additivity(const CycModel& m, std::size_t n_max) {
    return classify_additivity_generic(m, n_max);
}

AdditivityReport classify_additivity(const FinfModel& m, std::size_t n_max) {
    return classify_additivity_generic(m, n_max);
}

PseudoAddition<Element> find_pseudoaddition(const CoeffMonad& m) {
    if (!m.has_constant()) throw NoZeroError();
    PseudoAddition<Element> res;
    res.exhaustive = true;
    const RatVec ones(2, Rat(1));
    if (contains(m, ones)) {
        res.element = Element{m, ones};
        res.unique = true;
    }
    return res;
}

AnyMonad parse_monad(const std::string& id) {
    if (id == "Finf") return FinfModel{};
    if (id.rfind("F1n:", 0) == 0) {
        long n = 0;
        try {
            std::size_t used = 0;
            n = std::stol(id.substr(4), &used);
            if (used != id.size() - 4) throw std::invalid_argument(id);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad monad identifier: " + id);
        }
        if (n < 1) throw std::invalid_argument("F1n:k needs k >= 1");
        return CycModel{n};
    }
    return CoeffMonad::parse(id);
}

std::string monad_id(const AnyMonad& m) {
    return std::visit(
        [](const auto& x) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CoeffMonad>)
                return x.id();
            else
                return x.name();
        },
        m);
}

AdditivityReport classify_additivity(const AnyMonad& m, std::size_t n_max) {
    return std::visit([&](const auto& x) { return classify_additivity(x, n_max); }, m);
}

}  // namespace genring
