#include "genring/polys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace genring {

namespace {

unsigned degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    PolyQ run() {
        PolyQ p;
        skip();
        if (eof()) throw error("empty polynomial");
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip();
            } else if (!first) {
                throw error("expected + or -");
            }
            auto [coef, mono] = term();
            add(p, mono, coef * Rat(sign));
            first = false;
            skip();
        }
        return p;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[i_]; }
    char get() { return s_[i_++]; }
    void skip() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }
    std::invalid_argument error(const std::string& what) const {
        return std::invalid_argument("polynomial: " + what + " at column " + std::to_string(i_ + 1));
    }

    static void add(PolyQ& p, const Monomial& m, const Rat& c) {
        const Rat s = p.terms[m] + c;
        if (s.is_zero())
            p.terms.erase(m);
        else
            p.terms[m] = s;
    }

    std::string digits() {
        std::string out;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
        return out;
    }

    Rat number() {
        std::string n = digits();
        skip();
        if (peek() == '/') {
            ++i_;
            skip();
            const std::string d = digits();
            if (d.empty()) throw error("missing denominator");
            if (BigInt(d) == 0) throw error("zero denominator");
            return Rat(BigInt(n), BigInt(d));
        }
        return Rat(BigInt(n));
    }

    std::pair<Rat, Monomial> term() {
        Rat coef = 1;
        bool seen = false;
        skip();
        if (peek() == '(') {
            ++i_;
            skip();
            int sign = 1;
            if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
            skip();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) throw error("expected a number");
            coef = number() * Rat(sign);
            skip();
            if (peek() != ')') throw error("expected )");
            ++i_;
            seen = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = number();
            seen = true;
        }
        Monomial m;
        while (true) {
            skip();
            if (peek() == '*') {
                ++i_;
                skip();
            }
            if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) break;
            std::string name;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += get();
            skip();
            unsigned e = 1;
            if (peek() == '^') {
                ++i_;
                skip();
                const std::string d = digits();
                if (d.empty()) throw error("expected an exponent");
                e = static_cast<unsigned>(std::stoul(d));
            }
            if (e > 0) m[name] += e;
            seen = true;
        }
        if (!seen) throw error("expected a term");
        return {coef, m};
    }
};

// T2 before T10
bool var_less(const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

unsigned exponent(const Monomial& m, const std::string& v) {
    const auto it = m.find(v);
    return it == m.end() ? 0 : it->second;
}

// graded lexicographic, higher first
bool grlex_greater(const Monomial& a, const Monomial& b) {
    if (degree(a) != degree(b)) return degree(a) > degree(b);
    std::vector<std::string> vs;
    for (const auto& [v, e] : a) vs.push_back(v);
    for (const auto& [v, e] : b) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), var_less);
    for (const auto& v : vs)
        if (exponent(a, v) != exponent(b, v)) return exponent(a, v) > exponent(b, v);
    return false;
}

}  // namespace

PolyQ PolyQ::parse(const std::string& s) { return PolyParser(s).run(); }

std::string PolyQ::str() const {
    if (terms.empty()) return "0";
    std::vector<std::pair<Monomial, Rat>> order(terms.begin(), terms.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& [m, c] = order[k];
        if (k == 0)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        const Rat a = c.abs();
        std::string mono;
        for (const auto& [v, e] : m) mono += (mono.empty() ? "" : " ") + v + (e > 1 ? "^" + std::to_string(e) : "");
        if (mono.empty())
            out += a.str();
        else if (a == Rat(1))
            out += mono;
        else
            out += a.str() + " " + mono;
    }
    return out;
}

bool PolyQ::homogeneous() const {
    std::set<unsigned> ds;
    for (const auto& [m, c] : terms) ds.insert(degree(m));
    return ds.size() <= 1;
}

std::vector<std::string> PolyQ::variables() const {
    std::set<std::string> vs;
    for (const auto& [m, c] : terms)
        for (const auto& [v, e] : m) vs.insert(v);
    std::vector<std::string> out(vs.begin(), vs.end());
    std::sort(out.begin(), out.end(), var_less);
    return out;
}

PolyQ PolyQ::scaled(const Rat& c) const {
    PolyQ p;
    if (c.is_zero()) return p;
    for (const auto& [m, a] : terms) p.terms[m] = a * c;
    return p;
}

Rat poly_norm(const PolyQ& p) {
    Rat s = 0;
    for (const auto& [m, c] : p.terms) s += c.abs();
    return s;
}

std::vector<PolyQ> parse_poly_file(const std::string& text) {
    std::vector<PolyQ> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(PolyQ::parse(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string ModelRecord::presentation() const {
    std::string out = "base Zinf\ngenerators";
    for (const auto& g : generators) out += " " + g;
    out += "\n";
    for (const auto& r : relations) out += "relation " + r.str() + " = 0\n";
    out += std::string("homogeneous ") + (homogeneous ? "yes" : "no") + "\n";
    return out;
}

ModelRecord build_model(const std::vector<PolyQ>& fs) {
    if (fs.empty()) throw std::invalid_argument("model needs at least one polynomial");
    ModelRecord rec;
    std::set<std::string> vars;
    rec.homogeneous = true;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        const auto& f = fs[j];
        if (f.is_zero()) throw std::invalid_argument("polynomial " + std::to_string(j + 1) + " is zero");
        const Rat n = poly_norm(f);
        const Rat c = n > Rat(1) ? n.inverse() : Rat(1);
        rec.scales.push_back(c);
        rec.relations.push_back(f.scaled(c));
        if (poly_norm(rec.relations.back()) > Rat(1)) throw std::logic_error("rescaled relation outside the unit ball");
        rec.homogeneous = rec.homogeneous && f.homogeneous();
        for (const auto& v : f.variables()) vars.insert(v);
    }
    rec.generators.assign(vars.begin(), vars.end());
    std::sort(rec.generators.begin(), rec.generators.end(), var_less);
    return rec;
}

}  // namespace genring
