// genring: command-line workbench over the genring library.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "genring/bodies.hpp"
#include "genring/classify.hpp"
#include "genring/json_io.hpp"
#include "genring/picard.hpp"
#include "genring/polys.hpp"
#include "genring/presentations.hpp"
#include "genring/projgraded.hpp"
#include "genring/spectra.hpp"

using namespace genring;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t budget_from_env() {
    const char* s = std::getenv("GENRING_BUDGET");
    if (!s || !*s) return 1'000'000;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used == std::string(s).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("GENRING_BUDGET must be a positive integer, got '") + s + "'");
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// built-in name or a presentation file
Presentation load_presentation(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return parse_presentation(read_file(arg));
    return presentations::named(arg);
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::vector<std::string> strs(const std::vector<SpecPoint>& pts) {
    std::vector<std::string> out;
    for (const auto& p : pts) out.push_back(p.str());
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- verbs -------------------------------------------------------------------------

struct Opts {
    bool json = false;
    std::string monad, space, point, t, s, lhs, rhs, body, file, complement, tensor_with, limit, x, p1, p2;
    std::size_t arity = 3, samples = 2000, dim = 2, countermodel = 0;
    long depth = 2, bound = 30, n = 0, morphism = 0;
    std::uint64_t seed = 7;
    bool list = false;
    std::vector<std::string> tests;
};

// sampled verdict, plus the exact decision when one exists
std::string basis(Verdict v, const std::optional<bool>& exact) {
    std::string s = to_string(v);
    if (exact) s += *exact ? ", exact yes" : ", exact no";
    return s;
}

int cmd_classify(const Opts& o) {
    const auto rep = classify_additivity(parse_monad(o.monad), o.arity);
    if (o.json) {
        emit(to_json(rep));
        return 0;
    }
    std::cout << "monad           " << rep.monad << "\n"
              << "arity bound     " << rep.n_max << "\n"
              << "hypo-additive   " << rep.hypo_cell() << "  [" << basis(rep.hypo, rep.hypo_exact) << "]";
    if (!rep.hypo_witness.empty()) std::cout << "  witness " << join(rep.hypo_witness, " ; ");
    std::cout << "\nhyper-additive  " << rep.hyper_cell() << "  [" << basis(rep.hyper, rep.hyper_exact) << "]";
    if (!rep.hyper_witness.empty()) std::cout << "  witness " << join(rep.hyper_witness, " ; ");
    std::cout << "\n";
    return 0;
}

template <MonadModel M, class Parse>
int commute_in(const M& m, const Opts& o, Parse parse) {
    if (o.t.empty() != o.s.empty()) throw UsageError("commute takes two operations or none");
    if (!o.t.empty()) {
        const auto a = parse(o.t), b = parse(o.s);
        if (!m.member(a) || !m.member(b)) throw std::invalid_argument("operation outside " + std::string(m.name()));
        const auto r = commute(m, a, b);
        if (o.json) {
            emit(Json{{"monad", m.name()},
                      {"t", m.str(a)},
                      {"s", m.str(b)},
                      {"commutes", r.commutes},
                      {"lhs", m.str(r.lhs)},
                      {"rhs", m.str(r.rhs)},
                      {"position", r.position ? Json(*r.position) : Json(nullptr)}});
            return 0;
        }
        std::cout << "t * s  " << m.str(r.lhs) << "\ns * t  " << m.str(r.rhs) << "\ncommutes " << yes_no(r.commutes);
        if (r.position) std::cout << " (first difference at slot " << *r.position << ")";
        std::cout << "\n";
        return 0;
    }
    const auto rep = is_commutative(m, o.arity, o.samples);
    if (o.json) {
        emit(Json{{"monad", m.name()},
                  {"arity", o.arity},
                  {"pairs", rep.pairs},
                  {"passed", rep.passed},
                  {"commutative", rep.commutative()},
                  {"failure", rep.failure ? Json::array({rep.failure->first, rep.failure->second}) : Json(nullptr)}});
        return 0;
    }
    std::cout << m.name() << ": " << rep.passed << "/" << rep.pairs << " pairs commute up to arity " << o.arity
              << "\ncommutative " << yes_no(rep.commutative()) << "\n";
    if (rep.failure) std::cout << "failing pair " << rep.failure->first << " , " << rep.failure->second << "\n";
    return 0;
}

int cmd_commute(const Opts& o) {
    const auto any = parse_monad(o.monad);
    if (const auto* c = std::get_if<CoeffMonad>(&any))
        return commute_in(CoeffModel{*c}, o, [&](const std::string& x) { return make_element(*c, parse_rat_vec(x)); });
    if (const auto* c = std::get_if<CycModel>(&any))
        return commute_in(*c, o, [&](const std::string& x) { return parse_cyc(c->n, x); });
    return commute_in(std::get<FinfModel>(any), o, [](const std::string& x) { return parse_sign_class(x); });
}

template <MonadModel M>
int finite_spec(const M& m, const Opts& o) {
    const auto spec = ideals_finite(m);
    if (o.json) {
        Json ideals = Json::array();
        for (const auto& i : spec.ideals) {
            Json mem = Json::array();
            for (auto k : i.members) mem.push_back(spec.carrier[k]);
            ideals.push_back(Json{{"members", mem}, {"prime", i.prime}});
        }
        Json carrier = Json::array();
        for (const auto& c : spec.carrier) carrier.push_back(c);
        emit(Json{{"monad", m.name()}, {"carrier", carrier}, {"ideals", ideals}});
        return 0;
    }
    std::cout << "underlying monoid {" << join(spec.carrier, ", ") << "}\n";
    for (const auto& i : spec.ideals) {
        std::vector<std::string> mem;
        for (auto k : i.members) mem.push_back(spec.carrier[k]);
        std::cout << (i.prime ? "prime  " : "ideal  ") << "{" << join(mem, ", ") << "}\n";
    }
    return 0;
}

int cmd_spec(const Opts& o) {
    std::optional<SpecSpace> space;
    try {
        space = SpecSpace::parse(o.space);
    } catch (const std::invalid_argument&) {
    }
    if (!space) {
        const auto any = parse_monad(o.space);
        if (const auto* c = std::get_if<CoeffMonad>(&any)) return finite_spec(CoeffModel{*c}, o);
        if (const auto* c = std::get_if<CycModel>(&any)) return finite_spec(*c, o);
        return finite_spec(std::get<FinfModel>(any), o);
    }
    const BigInt bound(o.bound);
    const auto pts = points(*space, bound);
    if (o.json) {
        Json arr = Json::array();
        for (const auto& p : pts)
            arr.push_back(Json{{"point", p.str()},
                               {"closed", is_closed_point(*space, p)},
                               {"closure", points_json(closure(*space, p, bound))}});
        emit(Json{{"space", space->id()}, {"bound", o.bound}, {"points", arr}});
        return 0;
    }
    std::cout << space->id() << ", primes up to " << o.bound << "\n";
    for (const auto& p : pts)
        std::cout << (is_closed_point(*space, p) ? "closed  " : "        ") << p.str() << "  closure {"
                  << join(strs(closure(*space, p, bound)), ", ") << "}\n";
    return 0;
}

int cmd_topology(const Opts& o) {
    const auto space = SpecSpace::parse(o.space);
    if (o.morphism != 0) {
        if (space.kind != SpecSpace::Kind::CompactifiedN)
            throw std::invalid_argument("--morphism needs a space hat:N");
        const auto m = system_morphism(space.n, o.morphism);
        if (o.json) {
            emit(to_json(m));
            return 0;
        }
        std::cout << "f: hat:" << BigInt(space.n * o.morphism).get_str() << " -> hat:" << space.n.get_str() << "\n"
                  << "identity on points  " << yes_no(m.identity) << "\n"
                  << "continuous          " << yes_no(m.continuous) << "\n"
                  << "homeomorphism       " << yes_no(m.homeomorphism);
        if (m.witness) std::cout << "  (open set avoiding " << m.witness->get_str() << " and inf fails)";
        std::cout << "\nopen sets checked   " << m.opens_checked << "\n";
        return 0;
    }
    if (o.complement.empty()) throw UsageError("topology needs --complement or --morphism");
    const auto comp = parse_points(o.complement);
    const bool open = is_open(space, OpenSubset::avoiding(comp));
    if (o.json) {
        emit(Json{{"space", space.id()}, {"complement", points_json(comp)}, {"open", open}});
        return 0;
    }
    std::cout << space.id() << " minus {" << join(strs(comp), ", ") << "} is " << (open ? "open" : "not open") << "\n";
    return 0;
}

int cmd_stalk(const Opts& o) {
    const auto space = SpecSpace::parse(o.space);
    const auto pt = SpecPoint::parse(o.point);
    const auto ring = stalk(space, pt);
    Json tests = Json::array();
    for (const auto& t : o.tests) {
        const Rat x = Rat::parse(t);
        tests.push_back(Json{{"x", x.str()}, {"member", ring.contains(x)}});
    }
    if (o.json) {
        emit(Json{{"space", space.id()}, {"point", pt.str()}, {"stalk", ring.str()}, {"tests", tests}});
        return 0;
    }
    std::cout << "O at " << pt.str() << " on " << space.id() << " = " << ring.str() << "\n";
    for (const auto& t : tests)
        std::cout << "  " << t["x"].get<std::string>() << (t["member"].get<bool>() ? " in " : " not in ")
                  << ring.str() << "\n";
    return 0;
}

Json presentation_json(const Presentation& p) {
    Json gens = Json::array();
    for (const auto& g : p.generators()) gens.push_back(g.name + "/" + std::to_string(g.arity));
    return Json{{"base", p.base == Base::F1 ? "F1" : "Fempty"},
                {"commutative", p.commutative},
                {"generators", gens},
                {"relations", p.relations.size()},
                {"text", print_presentation(p)}};
}

int cmd_tensor(const Opts& o) {
    const auto p = tensor_presentation(load_presentation(o.p1), load_presentation(o.p2));
    if (o.json)
        emit(presentation_json(p));
    else
        std::cout << print_presentation(p);
    return 0;
}

int cmd_prove(const Opts& o, std::size_t budget) {
    auto p = load_presentation(o.p1);
    if (!o.tensor_with.empty()) p = tensor_presentation(p, load_presentation(o.tensor_with));
    const auto lhs = parse_term(p, o.lhs), rhs = parse_term(p, o.rhs);
    ProofOptions opt;
    opt.max_instances = std::max<std::size_t>(budget, 1) * 3;
    const auto res = derive_equal(p, lhs, rhs, o.depth, opt);
    std::optional<CountermodelResult> cm;
    if (o.countermodel > 0) cm = find_countermodel(p, lhs, rhs, o.countermodel, budget * 20);
    auto cm_status = [](CountermodelResult::Status s) {
        return s == CountermodelResult::Status::found ? "found" : (s == CountermodelResult::Status::none ? "none"
                                                                                                         : "undecided");
    };
    if (o.json) {
        Json j{{"lhs", print_term(p, lhs)},
               {"rhs", print_term(p, rhs)},
               {"status", res.proven() ? "proven" : "unknown"},
               {"depth", res.proven() ? Json(res.depth) : Json(nullptr)},
               {"instances", res.instances},
               {"nodes", res.nodes},
               {"budget_exhausted", res.budget_exhausted}};
        if (cm) j["countermodel"] = Json{{"status", cm_status(cm->status)}, {"max_size", o.countermodel},
                                         {"size", cm->model ? Json(cm->model->size) : Json(nullptr)}};
        emit(j);
        return 0;
    }
    std::cout << print_term(p, lhs) << " = " << print_term(p, rhs) << "\n";
    if (res.proven())
        std::cout << "proven at depth " << res.depth;
    else
        std::cout << "not proven up to depth " << o.depth << (res.budget_exhausted ? " (budget exhausted)" : "");
    std::cout << "  [" << res.instances << " instances, " << res.nodes << " nodes]\n";
    if (cm) {
        std::cout << "countermodel up to size " << o.countermodel << ": " << cm_status(cm->status);
        if (cm->model) std::cout << " (size " << cm->model->size << ")";
        std::cout << "\n";
    }
    return 0;
}

int cmd_proj_count(const Opts& o) {
    if (o.n < 0) throw std::invalid_argument("n must be >= 0");
    const auto p = proj_points_F1(static_cast<std::size_t>(o.n));
    if (o.json) {
        Json pts = Json::array();
        for (auto s : p.points) pts.push_back(p.label(s));
        emit(Json{{"n", o.n}, {"count", p.count()}, {"points", pts}});
        return 0;
    }
    std::cout << p.count() << "\n";
    if (o.list)
        for (auto s : p.points) std::cout << p.label(s) << "\n";
    return 0;
}

int cmd_proj_verify(const Opts& o) {
    const auto c = proj_is_compactification(o.n, o.bound, o.samples, o.seed);
    if (o.json) {
        emit(to_json(c));
        return 0;
    }
    std::cout << "Proj R for N = " << o.n << ", primes up to " << o.bound << "\n"
              << "R_(f1), R_(f2), R_(f1f2) = " << join(c.chart_sections, ", ") << "\n"
              << "sections agree  " << yes_no(c.sections_agree) << "\n"
              << "points agree    " << yes_no(c.points_agree) << " (" << c.points << " points)\n"
              << "opens agree     " << yes_no(c.opens_agree) << " (" << c.opens_checked << " checked)\n"
              << "isomorphic to hat:" << o.n << "  " << yes_no(c.ok()) << "\n";
    if (c.failure) std::cout << "failure: " << *c.failure << "\n";
    return c.ok() ? 0 : 1;
}

int cmd_pic(const Opts& o) {
    if (!o.limit.empty()) {
        const Rat lambda = Rat::parse(o.limit);
        const auto v = pic_limit_element(lambda);
        if (o.json)
            emit(Json{{"lambda", lambda.str()}, {"class", to_json(v)}});
        else
            std::cout << "O(log " << lambda.str() << ") = " << fv_str(v) << "\n";
        return 0;
    }
    if (o.n == 0) throw UsageError("pic needs N or --limit");
    const auto g = pic_group(o.n);
    if (o.json) {
        Json basis = Json::array();
        for (const auto& b : g.basis()) basis.push_back(b);
        emit(Json{{"rank", g.rank()}, {"basis", basis}});
        return 0;
    }
    std::vector<std::string> basis;
    for (const auto& b : g.basis()) basis.push_back("O(" + b + ")");
    std::cout << "rank " << g.rank() << "\nbasis " << join(basis, ", ") << "\n";
    return 0;
}

int cmd_sections(const Opts& o, std::size_t budget) {
    const ArakelovBundle l{ConvexBody::parse(o.body, o.dim)};
    const auto s = global_sections_count(l, budget);
    if (o.json) {
        Json j = to_json(s);
        emit(Json{{"body", l.body.str()}, {"rank", l.rank()}, {"count", j["count"]}, {"points", j["points"]}});
        return 0;
    }
    std::cout << s.count << "\n";
    if (o.list)
        for (const auto& p : s.points) {
            std::vector<std::string> c;
            for (const auto& x : p) c.push_back(x.get_str());
            std::cout << "(" << join(c, ",") << ")\n";
        }
    return 0;
}

int cmd_minkowski(const Opts& o, std::size_t budget) {
    const auto b = ConvexBody::parse(o.body, o.dim);
    const auto v = minkowski_check(b, budget);
    if (o.json) {
        Json j = to_json(v);
        j["body"] = b.str();
        emit(j);
        return 0;
    }
    std::cout << "volume " << v.vol.str() << (v.vol.exact ? "" : " (approx.)") << ", 2^d = " << (1 << b.dim())
              << "\n";
    if (!v.exceeds)
        std::cout << "volume too close to 2^d to decide\n";
    else if (!*v.exceeds)
        std::cout << "volume does not exceed 2^d; nothing asserted\n";
    else if (v.point) {
        std::vector<std::string> c;
        for (const auto& x : *v.point) c.push_back(x.get_str());
        std::cout << "nonzero lattice point (" << join(c, ",") << ")\n";
    } else {
        std::cout << "no nonzero lattice point found\n";
    }
    return v.ok() ? 0 : 1;
}

int cmd_product_formula(const Opts& o) {
    const Rat x = Rat::parse(o.x);
    const auto r = product_formula_check(x);
    if (o.json) {
        emit(to_json(r));
        return 0;
    }
    for (const auto& [p, f] : r.factors) std::cout << "|x|_" << p.get_str() << " = " << f.str() << "\n";
    std::cout << "product " << r.product.str() << ", 1/|x|_inf = " << r.inverse_abs_infinity.str() << "\nholds "
              << yes_no(r.holds) << "\n";
    return 0;
}

int cmd_model(const Opts& o) {
    const auto m = build_model(parse_poly_file(read_file(o.file)));
    if (o.json)
        emit(to_json(m));
    else
        std::cout << m.presentation();
    return 0;
}

int cmd_parse(const Opts& o) {
    const auto p = parse_presentation(read_file(o.file));
    if (o.json)
        emit(presentation_json(p));
    else
        std::cout << print_presentation(p);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"genring: generalized rings workbench"};
    app.require_subcommand(1);
    Opts o;
    std::string seed_text;

    auto add = [&](const std::string& name, const std::string& desc) {
        auto* c = app.add_subcommand(name, desc);
        c->add_flag("--json", o.json, "JSON output");
        return c;
    };

    auto* classify = add("classify", "hypo/hyper-additivity of a monad");
    classify->add_option("monad", o.monad, "Z, N, BN:k, AN:k, Zinf, F1, F12, Fempty, F1n:k, Finf")->required();
    classify->add_option("--arity", o.arity, "arity bound")->check(CLI::Range(2, 6));

    auto* comm = add("commute", "interchange law for a pair of operations, or over a sample");
    comm->add_option("monad", o.monad)->required();
    comm->add_option("t", o.t, "operation, e.g. (1,1)");
    comm->add_option("s", o.s, "operation");
    comm->add_option("--arity", o.arity, "arity bound for the sampled check")->check(CLI::Range(1, 4));
    comm->add_option("--samples", o.samples, "elements per arity");

    auto* spec = add("spec", "points and closures of a spectrum");
    spec->add_option("space", o.space, "Z, BN:k, AN:k, hat:k, limit, or a finite monad")->required();
    spec->add_option("--bound", o.bound, "prime bound")->check(CLI::Range(2L, 100000L));

    auto* topo = add("topology", "open sets and system morphisms");
    topo->add_option("space", o.space)->required();
    auto* compl_opt = topo->add_option("--complement", o.complement, "points removed, e.g. 2,inf");
    auto* morph_opt = topo->add_option("--morphism", o.morphism, "M: compare hat:NM -> hat:N")->check(CLI::Range(2L, 1000000L));
    compl_opt->excludes(morph_opt);

    auto* stalk_cmd = add("stalk", "local ring at a point");
    stalk_cmd->add_option("space", o.space)->required();
    stalk_cmd->add_option("point", o.point, "xi, a prime, or inf")->required();
    stalk_cmd->add_option("--test", o.tests, "rationals to test for membership");

    auto* tensor = add("tensor", "tensor product of two presentations");
    tensor->add_option("left", o.p1, "built-in name or file")->required();
    tensor->add_option("right", o.p2)->required();

    auto* prove = add("prove", "bounded equational proof");
    prove->add_option("presentation", o.p1, "built-in name or file")->required();
    prove->add_option("lhs", o.lhs)->required();
    prove->add_option("rhs", o.rhs)->required();
    prove->add_option("--tensor", o.tensor_with, "tensor with a second presentation first");
    prove->add_option("--depth", o.depth, "instantiation depth")->check(CLI::Range(0L, 6L));
    prove->add_option("--countermodel", o.countermodel, "also search finite models up to this size")
        ->check(CLI::Range(0, 5));

    auto* pcount = add("proj-count", "points of P^n over F1");
    pcount->add_option("n", o.n)->required()->check(CLI::Range(0L, 20L));
    pcount->add_flag("--list", o.list, "list the points");

    auto* pverify = add("proj-verify", "compare Proj R with the compactification");
    pverify->add_option("N", o.n)->required()->check(CLI::Range(2L, 1000000L));
    pverify->add_option("--bound", o.bound, "prime bound")->check(CLI::Range(2L, 100000L));
    pverify->add_option("--samples", o.samples, "localization samples");
    pverify->add_option("--seed", o.seed, "sample seed");

    auto* pic = add("pic", "Picard group of hat:N, or a class in the limit");
    pic->add_option("N", o.n)->check(CLI::Range(2L, 1000000000L));
    pic->add_option("--limit", o.limit, "positive rational gluing scalar");

    auto* sections = add("sections", "global sections of an Arakelov line bundle");
    sections->add_option("--body", o.body, "oct:r, box:a,b, ell:q11,..")->required();
    sections->add_option("--dim", o.dim, "dimension for oct")->check(CLI::Range(1, 3));
    sections->add_flag("--list", o.list, "list the lattice points");

    auto* mink = add("minkowski", "volume versus lattice points");
    mink->add_option("--body", o.body)->required();
    mink->add_option("--dim", o.dim)->check(CLI::Range(1, 3));

    auto* pf = add("product-formula", "product of all absolute values");
    pf->add_option("x", o.x, "nonzero rational")->required();

    auto* model = add("model", "model over Zinf of a system of polynomials");
    model->add_option("file", o.file, ".poly file, or - for stdin")->required();

    auto* parse = add("parse", "parse and pretty-print a presentation");
    parse->add_option("file", o.file, "presentation file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        const auto used = app.get_subcommands();
        std::cerr << (used.empty() ? app.help() : used.front()->help());
        return 2;
    }

    CLI::App* used = app.get_subcommands().front();
    try {
        const std::size_t budget = budget_from_env();
        const std::string v = used->get_name();
        if (v == "classify") return cmd_classify(o);
        if (v == "commute") return cmd_commute(o);
        if (v == "spec") return cmd_spec(o);
        if (v == "topology") return cmd_topology(o);
        if (v == "stalk") return cmd_stalk(o);
        if (v == "tensor") return cmd_tensor(o);
        if (v == "prove") return cmd_prove(o, budget);
        if (v == "proj-count") return cmd_proj_count(o);
        if (v == "proj-verify") return cmd_proj_verify(o);
        if (v == "pic") return cmd_pic(o);
        if (v == "sections") return cmd_sections(o, budget);
        if (v == "minkowski") return cmd_minkowski(o, budget);
        if (v == "product-formula") return cmd_product_formula(o);
        if (v == "model") return cmd_model(o);
        if (v == "parse") return cmd_parse(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << used->help();
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
