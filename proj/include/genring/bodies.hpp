#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "genring/exactnum.hpp"
#include "genring/monad.hpp"

namespace genring {

using IntVec = std::vector<BigInt>;
using RatMatrix = std::vector<RatVec>;

class ConvexBody {
public:
    enum class Shape { octahedron, box, ellipsoid };

    static ConvexBody octahedron(std::size_t dim, const Rat& r);  // Σ|x_i| ≤ r
    static ConvexBody box(RatVec radii);                          // |x_i| ≤ r_i
    static ConvexBody ellipsoid(RatMatrix q);                     // xᵀQx ≤ 1

    // "oct:r", "box:a,b,..", "ell:q11,q12,..,qdd" (row major); dim only used by oct
    static ConvexBody parse(const std::string& s, std::size_t dim);

    Shape shape() const { return shape_; }
    std::size_t dim() const { return dim_; }
    const Rat& radius() const { return r_; }
    const RatVec& radii() const { return radii_; }
    const RatMatrix& matrix() const { return q_; }

    ConvexBody scaled(const Rat& c) const;  // c·body, c > 0
    bool contains(const RatVec& x) const;
    std::string str() const;

private:
    ConvexBody() = default;
    Shape shape_ = Shape::box;
    std::size_t dim_ = 0;
    Rat r_;
    RatVec radii_;
    RatMatrix q_;
};

std::string to_string(ConvexBody::Shape s);

Rat det(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);  // throws when singular

// Gauge norm. For ellipsoids value holds xᵀQx and the norm is its square root.
struct NormValue {
    Rat value;
    bool squared = false;
    std::string str() const;
};

NormValue body_norm(const ConvexBody& b, const RatVec& x);
// sign of ||x|| - t, t ≥ 0, exact
int compare_norm(const ConvexBody& b, const RatVec& x, const Rat& t);

struct ArakelovBundle {
    ConvexBody body;
    std::size_t rank() const { return body.dim(); }
};

struct SectionCount {
    std::size_t count = 0;
    std::vector<IntVec> points;  // lexicographic
};

// Lattice points of the body; throws std::length_error when the bounding box
// exceeds budget.
SectionCount global_sections_count(const ArakelovBundle& l, std::size_t budget = 1'000'000);

// Exact volume, or a pair of rational bounds when π is involved.
struct Volume {
    std::optional<Rat> exact;
    Rat lower, upper;
    std::string str() const;
};

Volume volume(const ConvexBody& b);

struct MinkowskiVerdict {
    Volume vol;
    std::optional<bool> exceeds;  // vol > 2^d; empty when the bounds do not separate
    std::optional<IntVec> point;  // a nonzero lattice point, searched when exceeds
    bool ok() const { return !exceeds.value_or(false) || point.has_value(); }
};

// vol > 2^d; empty only if the π bounds cannot separate
std::optional<bool> exceeds_cube(const ConvexBody& b);

MinkowskiVerdict minkowski_check(const ConvexBody& b, std::size_t budget = 1'000'000);

// Random body with small rational parameters; large forces volume > 2^d.
ConvexBody random_body(ConvexBody::Shape s, std::size_t dim, bool large, Rng& rng);

}  // namespace genring
