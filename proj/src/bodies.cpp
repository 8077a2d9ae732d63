#include "genring/bodies.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genring {

namespace {

void check_dim(std::size_t d) {
    if (d < 1 || d > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
}

Rat positive(const Rat& r) {
    if (r <= Rat(0)) throw std::invalid_argument("body parameters must be positive, got " + r.str());
    return r;
}

RatVec parse_list(const std::string& s) {
    RatVec out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(Rat::parse(item));
    return out;
}

std::string join(const RatVec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out;
}

Rat pow_int(const Rat& x, std::size_t e) {
    Rat r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= x;
    return r;
}

// π to 50 decimals, rounded down, and one ulp above
const BigInt kPiDigits("314159265358979323846264338327950288419716939937510");
Rat ten_pow(unsigned long e) {
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, e);
    return Rat(t);
}
Rat pi_lower() { return Rat(kPiDigits, ten_pow(50).num()); }
Rat pi_upper() { return Rat(kPiDigits + 1, ten_pow(50).num()); }

// lower and upper rational bounds on sqrt(x), x ≥ 0, width 10^-20
std::pair<Rat, Rat> sqrt_bounds(const Rat& x) {
    const Rat scale = ten_pow(20);
    const BigInt s = floor_sqrt(x * scale * scale);
    const Rat lo = Rat(s) / scale;
    return {lo, lo * lo == x ? lo : Rat(s + 1) / scale};
}

// half-widths of the bounding box
std::vector<BigInt> half_widths(const ConvexBody& b) {
    std::vector<BigInt> h;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        switch (b.shape()) {
            case ConvexBody::Shape::octahedron: h.push_back(floor_sqrt(b.radius() * b.radius())); break;
            case ConvexBody::Shape::box: h.push_back(floor_sqrt(b.radii()[i] * b.radii()[i])); break;
            case ConvexBody::Shape::ellipsoid: h.push_back(floor_sqrt(inverse(b.matrix())[i][i])); break;
        }
    }
    return h;
}

void check_budget(const std::vector<BigInt>& h, std::size_t budget) {
    BigInt size = 1;
    for (const auto& x : h) size *= 2 * x + 1;
    if (size > BigInt(static_cast<unsigned long>(budget)))
        throw std::length_error("bounding box has " + size.get_str() + " points, budget " + std::to_string(budget));
}

// 0, 1, -1, 2, -2, ..., ±h
BigInt zigzag(unsigned long k) { return k % 2 ? BigInt(static_cast<long>((k + 1) / 2)) : -BigInt(static_cast<long>(k / 2)); }

// Calls f on every point of the box, small coordinates first; stops when f returns true.
template <class F>
void scan(const std::vector<BigInt>& h, F f) {
    const std::size_t d = h.size();
    std::vector<unsigned long> k(d, 0);
    std::vector<unsigned long> top(d);
    for (std::size_t i = 0; i < d; ++i) top[i] = 2 * h[i].get_ui() + 1;
    while (true) {
        IntVec x(d);
        for (std::size_t i = 0; i < d; ++i) x[i] = zigzag(k[i]);
        if (f(x)) return;
        std::size_t pos = 0;
        while (pos < d && ++k[pos] == top[pos]) k[pos++] = 0;
        if (pos == d) return;
    }
}

RatVec to_rat(const IntVec& x) {
    RatVec v;
    for (const auto& c : x) v.push_back(Rat(c));
    return v;
}

}  // namespace

std::string to_string(ConvexBody::Shape s) {
    switch (s) {
        case ConvexBody::Shape::octahedron: return "oct";
        case ConvexBody::Shape::box: return "box";
        case ConvexBody::Shape::ellipsoid: return "ell";
    }
    return "?";
}

ConvexBody ConvexBody::octahedron(std::size_t dim, const Rat& r) {
    check_dim(dim);
    ConvexBody b;
    b.shape_ = Shape::octahedron;
    b.dim_ = dim;
    b.r_ = positive(r);
    return b;
}

ConvexBody ConvexBody::box(RatVec radii) {
    check_dim(radii.size());
    for (const auto& r : radii) positive(r);
    ConvexBody b;
    b.shape_ = Shape::box;
    b.dim_ = radii.size();
    b.radii_ = std::move(radii);
    return b;
}

ConvexBody ConvexBody::ellipsoid(RatMatrix q) {
    const std::size_t d = q.size();
    check_dim(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (q[i].size() != d) throw std::invalid_argument("matrix must be square");
        for (std::size_t j = 0; j < i; ++j)
            if (q[i][j] != q[j][i]) throw std::invalid_argument("matrix must be symmetric");
    }
    // Sylvester: every leading minor positive
    for (std::size_t k = 1; k <= d; ++k) {
        RatMatrix lead(k, RatVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = q[i][j];
        if (det(lead) <= Rat(0)) throw std::invalid_argument("matrix is not positive definite");
    }
    ConvexBody b;
    b.shape_ = Shape::ellipsoid;
    b.dim_ = d;
    b.q_ = std::move(q);
    return b;
}

ConvexBody ConvexBody::parse(const std::string& s, std::size_t dim) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("body must look like oct:r, box:a,b or ell:q11,..");
    const std::string kind = s.substr(0, colon);
    const RatVec vals = parse_list(s.substr(colon + 1));
    if (kind == "oct") {
        if (vals.size() != 1) throw std::invalid_argument("oct takes one radius");
        return octahedron(dim, vals[0]);
    }
    if (kind == "box") return box(vals);
    if (kind == "ell") {
        std::size_t d = 1;
        while (d * d < vals.size()) ++d;
        if (d * d != vals.size()) throw std::invalid_argument("ell takes d*d entries");
        RatMatrix q(d, RatVec(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) q[i][j] = vals[i * d + j];
        return ellipsoid(std::move(q));
    }
    throw std::invalid_argument("unknown body kind '" + kind + "'");
}

ConvexBody ConvexBody::scaled(const Rat& c) const {
    positive(c);
    ConvexBody b = *this;
    b.r_ *= c;
    for (auto& r : b.radii_) r *= c;
    const Rat c2 = c * c;
    for (auto& row : b.q_)
        for (auto& x : row) x /= c2;
    return b;
}

bool ConvexBody::contains(const RatVec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("dimension mismatch");
    switch (shape_) {
        case Shape::octahedron: return l1_norm(x) <= r_;
        case Shape::box:
            for (std::size_t i = 0; i < dim_; ++i)
                if (x[i].abs() > radii_[i]) return false;
            return true;
        case Shape::ellipsoid: {
            Rat s = 0;
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j) s += x[i] * q_[i][j] * x[j];
            return s <= Rat(1);
        }
    }
    return false;
}

std::string ConvexBody::str() const {
    switch (shape_) {
        case Shape::octahedron: return "oct:" + r_.str() + " dim=" + std::to_string(dim_);
        case Shape::box: return "box:" + join(radii_);
        case Shape::ellipsoid: {
            RatVec flat;
            for (const auto& row : q_) flat.insert(flat.end(), row.begin(), row.end());
            return "ell:" + join(flat);
        }
    }
    return "?";
}

Rat det(const RatMatrix& m) {
    RatMatrix a = m;
    const std::size_t n = a.size();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a = m, inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) throw std::invalid_argument("matrix is singular");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        const Rat p = a[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= p;
            inv[c][k] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            const Rat f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

std::string NormValue::str() const { return squared ? "sqrt(" + value.str() + ")" : value.str(); }

NormValue body_norm(const ConvexBody& b, const RatVec& x) {
    if (x.size() != b.dim()) throw std::invalid_argument("dimension mismatch");
    switch (b.shape()) {
        case ConvexBody::Shape::octahedron: return {l1_norm(x) / b.radius(), false};
        case ConvexBody::Shape::box: {
            Rat m = 0;
            for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, x[i].abs() / b.radii()[i]);
            return {m, false};
        }
        case ConvexBody::Shape::ellipsoid: {
            Rat s = 0;
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * b.matrix()[i][j] * x[j];
            return {s, true};
        }
    }
    return {};
}

int compare_norm(const ConvexBody& b, const RatVec& x, const Rat& t) {
    if (t < Rat(0)) throw std::invalid_argument("threshold must be >= 0");
    const auto n = body_norm(b, x);
    const Rat rhs = n.squared ? t * t : t;
    return n.value < rhs ? -1 : (n.value > rhs ? 1 : 0);
}

SectionCount global_sections_count(const ArakelovBundle& l, std::size_t budget) {
    const auto h = half_widths(l.body);
    check_budget(h, budget);
    SectionCount res;
    scan(h, [&](const IntVec& x) {
        if (compare_norm(l.body, to_rat(x), 1) <= 0) res.points.push_back(x);
        return false;
    });
    std::sort(res.points.begin(), res.points.end());
    res.count = res.points.size();
    return res;
}

std::string Volume::str() const {
    if (exact) return exact->str();
    const double lo = mpq_class(lower.num(), lower.den()).get_d();
    std::ostringstream out;
    out.precision(12);
    out << lo;
    return out.str();
}

Volume volume(const ConvexBody& b) {
    const std::size_t d = b.dim();
    Volume v;
    switch (b.shape()) {
        case ConvexBody::Shape::octahedron: {
            Rat fact = 1;
            for (std::size_t i = 2; i <= d; ++i) fact *= Rat(static_cast<long>(i));
            v.exact = pow_int(2 * b.radius(), d) / fact;
            break;
        }
        case ConvexBody::Shape::box: {
            Rat p = 1;
            for (const auto& r : b.radii()) p *= 2 * r;
            v.exact = p;
            break;
        }
        case ConvexBody::Shape::ellipsoid: {
            // vol² = ω_d² / det Q with ω_1 = 2, ω_2 = π, ω_3 = 4π/3
            const Rat dq = det(b.matrix());
            Rat lo2, hi2;
            if (d == 1) {
                lo2 = hi2 = Rat(4) / dq;
            } else {
                const Rat c = d == 2 ? Rat(1) : Rat(16, 9);
                lo2 = c * pi_lower() * pi_lower() / dq;
                hi2 = c * pi_upper() * pi_upper() / dq;
            }
            v.lower = sqrt_bounds(lo2).first;
            v.upper = sqrt_bounds(hi2).second;
            if (d == 1 && v.lower == v.upper) v.exact = v.lower;
            return v;
        }
    }
    v.lower = v.upper = *v.exact;
    return v;
}

std::optional<bool> exceeds_cube(const ConvexBody& b) {
    const Rat cap = pow_int(Rat(2), b.dim());
    if (b.shape() != ConvexBody::Shape::ellipsoid) return *volume(b).exact > cap;
    // compare vol² with 4^d through the π bounds
    const Rat dq = det(b.matrix());
    const Rat c = b.dim() == 1 ? Rat(4) : (b.dim() == 2 ? Rat(1) : Rat(16, 9));
    const Rat lo2 = b.dim() == 1 ? c / dq : c * pi_lower() * pi_lower() / dq;
    const Rat hi2 = b.dim() == 1 ? c / dq : c * pi_upper() * pi_upper() / dq;
    if (lo2 > cap * cap) return true;
    if (hi2 <= cap * cap) return false;
    return std::nullopt;
}

MinkowskiVerdict minkowski_check(const ConvexBody& b, std::size_t budget) {
    MinkowskiVerdict res;
    res.vol = volume(b);
    res.exceeds = exceeds_cube(b);
    if (!res.exceeds.value_or(false)) return res;
    const auto h = half_widths(b);
    check_budget(h, budget);
    scan(h, [&](const IntVec& x) {
        if (std::all_of(x.begin(), x.end(), [](const BigInt& c) { return c == 0; })) return false;
        if (compare_norm(b, to_rat(x), 1) > 0) return false;
        res.point = x;
        return true;
    });
    return res;
}

ConvexBody random_body(ConvexBody::Shape s, std::size_t dim, bool large, Rng& rng) {
    check_dim(dim);
    std::uniform_int_distribution<long> den(1, 8), num(1, 24), off(-4, 4);
    auto rat = [&] { return Rat(BigInt(num(rng)), BigInt(den(rng))); };
    for (int tries = 0; tries < 100000; ++tries) {
        ConvexBody b = ConvexBody::box(RatVec(dim, Rat(1)));
        switch (s) {
            case ConvexBody::Shape::octahedron: b = ConvexBody::octahedron(dim, rat() / 4); break;
            case ConvexBody::Shape::box: {
                RatVec r;
                for (std::size_t i = 0; i < dim; ++i) r.push_back(rat() / 4);
                b = ConvexBody::box(std::move(r));
                break;
            }
            case ConvexBody::Shape::ellipsoid: {
                // Q = L Lᵀ with L lower triangular, nonzero diagonal
                RatMatrix l(dim, RatVec(dim, Rat(0)));
                for (std::size_t i = 0; i < dim; ++i) {
                    l[i][i] = rat() / 8;
                    for (std::size_t j = 0; j < i; ++j) l[i][j] = Rat(BigInt(off(rng)), BigInt(den(rng)));
                }
                RatMatrix q(dim, RatVec(dim, Rat(0)));
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        for (std::size_t k = 0; k < dim; ++k) q[i][j] += l[i][k] * l[j][k];
                b = ConvexBody::ellipsoid(std::move(q));
                break;
            }
        }
        if (!large) return b;
        const auto h = half_widths(b);
        BigInt size = 1;
        for (const auto& x : h) size *= 2 * x + 1;
        if (size > 200000) continue;
        if (exceeds_cube(b).value_or(false)) return b;
    }
    throw std::logic_error("no random body found");
}

}  // namespace genring
