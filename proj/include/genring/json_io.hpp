#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "genring/bodies.hpp"
#include "genring/classify.hpp"
#include "genring/picard.hpp"
#include "genring/polys.hpp"
#include "genring/projgraded.hpp"
#include "genring/spectra.hpp"

namespace genring {

using Json = nlohmann::ordered_json;

// ---- text input ------------------------------------------------------------------

RatVec parse_rat_vec(const std::string& s);           // "(1,-1/2)", "1,-1/2", "()"
CycElement parse_cyc(long n, const std::string& s);   // "(0,z^2,0)"; "1" is z^0
SignClass parse_sign_class(const std::string& s);     // "(+,-,0)" or an octahedral vector
std::vector<SpecPoint> parse_points(const std::string& s);  // "xi,2,inf"

// ---- JSON output -----------------------------------------------------------------

Json to_json(const AdditivityReport& r);
Json to_json(const ProductFormulaReport& r);
Json to_json(const FactorVec& v);  // {"2":-1,"3":1}
Json to_json(const SystemMorphism& m);
Json to_json(const ProjComparison& c);
Json to_json(const SectionCount& s);
Json to_json(const MinkowskiVerdict& v);
Json to_json(const ModelRecord& m);
Json to_json(const IntVec& v);
Json points_json(const std::vector<SpecPoint>& pts);

}  // namespace genring
