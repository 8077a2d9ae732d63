#pragma once

#include <map>
#include <string>
#include <vector>

#include "genring/exactnum.hpp"

namespace genring {

using Monomial = std::map<std::string, unsigned>;  // variable -> exponent > 0

// Polynomial over Q; zero coefficients never stored.
struct PolyQ {
    std::map<Monomial, Rat> terms;

    // "(3/2) X^2 - 1/2 X Y", "c T1^a T2^b", "0"
    static PolyQ parse(const std::string& s);
    std::string str() const;
    bool is_zero() const { return terms.empty(); }
    bool homogeneous() const;
    std::vector<std::string> variables() const;
    PolyQ scaled(const Rat& c) const;
    friend bool operator==(const PolyQ&, const PolyQ&) = default;
};

Rat poly_norm(const PolyQ& p);

// One polynomial per line; blank lines and '#' comments skipped.
std::vector<PolyQ> parse_poly_file(const std::string& text);

// Relations f_j/|f_j| over Z_(∞) on the generators T_0..T_k.
struct ModelRecord {
    std::vector<std::string> generators;
    std::vector<PolyQ> relations;
    std::vector<Rat> scales;  // factor applied to each input
    bool homogeneous = false;
    std::string presentation() const;
};

ModelRecord build_model(const std::vector<PolyQ>& fs);

}  // namespace genring
