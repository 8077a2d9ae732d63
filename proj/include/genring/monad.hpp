#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace genring {

using Rng = std::mt19937_64;

// What the generic algorithms (presentations, classify, spectra) need from a
// concrete monad: Σ(n) elements as values, unit, projections, substitution,
// the image of the constant (if any), and ways to produce elements.
template <class M>
concept MonadModel = requires(const M& m, const typename M::Op& t,
                              const std::vector<typename M::Op>& args, std::size_t n,
                              Rng& rng) {
    typename M::Op;
    { m.name() } -> std::convertible_to<std::string>;
    { m.arity(t) } -> std::convertible_to<std::size_t>;
    { m.unit() } -> std::same_as<typename M::Op>;
    { m.projection(n, n) } -> std::same_as<typename M::Op>;
    // n is the arity of the result (needed when args is empty)
    { m.substitute(t, args, n) } -> std::same_as<typename M::Op>;
    { m.zero(n) } -> std::same_as<std::optional<typename M::Op>>;
    { m.member(t) } -> std::same_as<bool>;
    // nullopt when Σ(n) is infinite
    { m.enumerate(n) } -> std::same_as<std::optional<std::vector<typename M::Op>>>;
    // deterministic finite sample of Σ(n)
    { m.sample(n) } -> std::same_as<std::vector<typename M::Op>>;
    { m.random(n, rng) } -> std::same_as<typename M::Op>;
    { m.str(t) } -> std::convertible_to<std::string>;
    { t == t } -> std::convertible_to<bool>;
};

// Σ(φ)(t) expressed through substitution: t(x_φ(1), ..., x_φ(n)).
template <MonadModel M>
typename M::Op reindex(const M& m, const typename M::Op& t, const std::vector<std::size_t>& phi,
                       std::size_t target_arity) {
    std::vector<typename M::Op> args;
    args.reserve(phi.size());
    for (std::size_t j : phi) args.push_back(m.projection(j, target_arity));
    return m.substitute(t, args, target_arity);
}

}  // namespace genring
