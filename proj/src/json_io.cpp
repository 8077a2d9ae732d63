#include "genring/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genring {

namespace {

std::vector<std::string> split_list(std::string s) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    if (s.find_first_not_of(' ') == std::string::npos) return out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto a = item.find_first_not_of(' ');
        const auto b = item.find_last_not_of(' ');
        if (a == std::string::npos) throw std::invalid_argument("empty entry in '" + s + "'");
        out.push_back(item.substr(a, b - a + 1));
    }
    return out;
}

Json str_list(const std::vector<std::string>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(x);
    return a;
}

Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

RatVec parse_rat_vec(const std::string& s) {
    RatVec v;
    for (const auto& item : split_list(s)) v.push_back(Rat::parse(item));
    return v;
}

CycElement parse_cyc(long n, const std::string& s) {
    const auto items = split_list(s);
    std::optional<std::pair<std::size_t, long>> root;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& it = items[i];
        if (it == "0") continue;
        long e = 0;
        if (it == "1") {
            e = 0;
        } else if (it.rfind("z^", 0) == 0) {
            std::size_t used = 0;
            e = std::stol(it.substr(2), &used);
            if (used != it.size() - 2) throw std::invalid_argument("bad root of unity '" + it + "'");
        } else if (it == "z") {
            e = 1;
        } else {
            throw std::invalid_argument("entries of F1n elements are 0, 1, z or z^e, got '" + it + "'");
        }
        if (root) throw std::invalid_argument("F1n elements have at most one nonzero entry");
        root = {i, e};
    }
    if (!root) return cyc_zero(n, items.size());
    return cyc_make(n, items.size(), root->first, root->second);
}

SignClass parse_sign_class(const std::string& s) {
    const auto items = split_list(s);
    const bool signs = std::all_of(items.begin(), items.end(),
                                   [](const std::string& x) { return x == "+" || x == "-" || x == "0"; });
    if (signs) {
        SignClass c;
        for (const auto& x : items) c.signs.push_back(x == "+" ? 1 : (x == "-" ? -1 : 0));
        return c;
    }
    return finf_classify(parse_rat_vec(s));
}

std::vector<SpecPoint> parse_points(const std::string& s) {
    std::vector<SpecPoint> out;
    for (const auto& item : split_list(s)) out.push_back(SpecPoint::parse(item));
    return out;
}

Json to_json(const AdditivityReport& r) {
    return Json{{"monad", r.monad},
                {"arity", r.n_max},
                {"hypo", r.hypo_cell()},
                {"hyper", r.hyper_cell()},
                {"hypo_verdict", to_string(r.hypo)},
                {"hyper_verdict", to_string(r.hyper)},
                {"hypo_exact", opt_bool(r.hypo_exact)},
                {"hyper_exact", opt_bool(r.hyper_exact)},
                {"hypo_witness", str_list(r.hypo_witness)},
                {"hyper_witness", str_list(r.hyper_witness)}};
}

Json to_json(const ProductFormulaReport& r) {
    Json f = Json::object();
    for (const auto& [p, v] : r.factors) f[p.get_str()] = v.str();
    return Json{{"factors", f},
                {"product", r.product.str()},
                {"inverse_abs_infinity", r.inverse_abs_infinity.str()},
                {"holds", r.holds}};
}

Json to_json(const FactorVec& v) {
    Json j = Json::object();
    for (const auto& [p, e] : v) j[p.get_str()] = e;
    return j;
}

Json to_json(const SystemMorphism& m) {
    return Json{{"N", m.n.get_str()},
                {"M", m.m.get_str()},
                {"identity", m.identity},
                {"continuous", m.continuous},
                {"homeomorphism", m.homeomorphism},
                {"witness", m.witness ? Json(m.witness->get_str()) : Json(nullptr)},
                {"opens_checked", m.opens_checked}};
}

Json to_json(const ProjComparison& c) {
    return Json{{"N", c.n.get_str()},
                {"bound", c.bound.get_str()},
                {"chart_sections", str_list(c.chart_sections)},
                {"sections_agree", c.sections_agree},
                {"points_agree", c.points_agree},
                {"opens_agree", c.opens_agree},
                {"points", c.points},
                {"opens_checked", c.opens_checked},
                {"isomorphic", c.ok()},
                {"failure", c.failure ? Json(*c.failure) : Json(nullptr)}};
}

Json to_json(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

Json to_json(const SectionCount& s) {
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(to_json(p));
    return Json{{"count", s.count}, {"points", pts}};
}

Json to_json(const MinkowskiVerdict& v) {
    return Json{{"volume", v.vol.exact ? Json(v.vol.exact->str()) : Json(nullptr)},
                {"volume_lower", v.vol.lower.str()},
                {"volume_upper", v.vol.upper.str()},
                {"exceeds", opt_bool(v.exceeds)},
                {"point", v.point ? to_json(*v.point) : Json(nullptr)},
                {"ok", v.ok()}};
}

Json to_json(const ModelRecord& m) {
    Json rel = Json::array(), sc = Json::array();
    for (const auto& r : m.relations) rel.push_back(r.str());
    for (const auto& s : m.scales) sc.push_back(s.str());
    return Json{{"base", "Zinf"},
                {"generators", str_list(m.generators)},
                {"relations", rel},
                {"scales", sc},
                {"homogeneous", m.homogeneous}};
}

Json points_json(const std::vector<SpecPoint>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(p.str());
    return a;
}

}  // namespace genring
