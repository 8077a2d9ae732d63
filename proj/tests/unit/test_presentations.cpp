#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "genring/classify.hpp"
#include "genring/coeffmonads.hpp"
#include "genring/presentations.hpp"

using namespace genring;

namespace {

Term sym(const Presentation& p, const std::string& name, std::vector<Term> args = {}) {
    return Term::app(*p.find(name), std::move(args));
}
Term x(std::size_t k) { return Term::var(k); }

Term random_term(const Presentation& p, std::size_t n, std::size_t depth, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, p.symbols.size() + n - 1);
    const std::size_t c = depth == 0 ? p.symbols.size() + (rng() % n) : pick(rng);
    if (c >= p.symbols.size()) return Term::var(c - p.symbols.size() + 1);
    std::vector<Term> args;
    for (std::size_t i = 0; i < p.symbols[c].arity; ++i) args.push_back(random_term(p, n, depth - 1, rng));
    return Term::app(c, std::move(args));
}

// Words over x1..xn reachable with nesting height <= d, enumerated directly.
std::size_t word_count(std::size_t n, std::size_t d) {
    std::set<std::vector<std::size_t>> level;
    for (std::size_t k = 1; k <= n; ++k) level.insert({k});
    for (std::size_t i = 0; i < d; ++i) {
        auto next = level;
        next.insert(std::vector<std::size_t>{});
        for (const auto& u : level)
            for (const auto& v : level) {
                auto w = u;
                w.insert(w.end(), v.begin(), v.end());
                next.insert(w);
            }
        level = std::move(next);
    }
    return level.size();
}

Interpretation<CoeffModel> z_interp() {
    const auto Z = CoeffMonad::Z();
    return {CoeffModel{Z}, {{"neg", make_element(Z, {-1})}, {"add", make_element(Z, {1, 1})}}};
}

Interpretation<CoeffModel> an_interp(long n) {
    const auto A = CoeffMonad::AN(n);
    Interpretation<CoeffModel> in{CoeffModel{A}, {{"neg", make_element(A, {-1})}}};
    for (long p : {2L, 3L, 5L, 7L})
        if (n % p == 0) in.assignment.emplace("s" + std::to_string(p), make_element(A, RatVec(p, Rat(1, p))));
    return in;
}

}  // namespace

TEST_SUITE("presentations") {

TEST_CASE("parse examples") {
    const auto p = parse_presentation("base F1; gen neg/1, add/2; rel add(x1,x2) = add(x2,x1);");
    CHECK(p.base == Base::F1);
    CHECK(p.symbols.size() == 3);
    CHECK(p.relations.size() == 1);
    CHECK(p.relations[0].arity == 2);

    const auto f = parse_presentation("base F_empty; gen z/0;");
    CHECK(f.base == Base::Fempty);
    CHECK(f.generators().size() == 1);

    CHECK_THROWS_AS(parse_presentation("gen add/2; rel add(x1) = x1;"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gen add/2; rel mul(x1, x1) = x1;"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gen a/1, a/2;"), ParseError);
    CHECK_THROWS_AS(parse_presentation("base F_empty; gen a/1; rel a(0) = x1;"), ParseError);
    try {
        parse_presentation("base F1;\ngen f/1;\nrel f(x1 = x1;");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() > 1);
    }
}

TEST_CASE("printing round-trips") {
    for (const auto& p : {presentations::f1(), presentations::f12(), presentations::naturals(),
                          presentations::integers_fempty(), presentations::integers_f1(), presentations::a_n(6),
                          presentations::finf(), presentations::words(), presentations::f1n(3)}) {
        const auto text = print_presentation(p);
        CHECK(parse_presentation(text) == p);
        CHECK(print_presentation(parse_presentation(text)) == text);
    }
}

TEST_CASE("free_terms examples") {
    const auto f1 = presentations::f1();
    const auto r = free_terms(f1, 2, 1);
    CHECK(r.terms.size() == 3);
    CHECK_FALSE(r.truncated);

    const auto empty = parse_presentation("base F_empty;");
    for (std::size_t d : {0u, 1u, 4u}) CHECK(free_terms(empty, 3, d).terms.size() == 3);

    const auto f12 = presentations::f12();
    CHECK(free_terms(f12, 2, 2, {true}).terms.size() == 5);
    CHECK(free_terms(f12, 2, 2).terms.size() > 5);
}

TEST_CASE("F_1 has n+1 free terms in context n") {
    const auto f1 = presentations::f1();
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t d : {1u, 2u, 5u}) CHECK(free_terms(f1, n, d).terms.size() == n + 1);
}

TEST_CASE("free term cap reports truncation") {
    const auto r = free_terms(presentations::integers_f1(), 3, 3, {false, 100});
    CHECK(r.truncated);
}

TEST_CASE("word monad free terms count flattened words") {
    const auto w = presentations::words();
    for (std::size_t n = 1; n <= 2; ++n)
        for (std::size_t d = 0; d <= 3; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(free_terms(w, n, d, {true}).terms.size() == word_count(n, d));
        }
}

TEST_CASE("interpret examples") {
    const auto zp = presentations::integers_f1();
    const auto zi = z_interp();
    const Term t = sym(zp, "add", {x(1), sym(zp, "add", {x(2), x(3)})});
    CHECK(interpret(zp, t, 3, zi).coeffs == RatVec{1, 1, 1});
    CHECK(interpret(zp, sym(zp, "neg", {sym(zp, "neg", {x(1)})}), 1, zi).coeffs == RatVec{1});
    CHECK(interpret(zp, Term::app(0), 2, zi).coeffs == RatVec{0, 0});

    for (long p : {2L, 3L, 5L}) {
        const auto ap = presentations::a_n(p);
        const Term s = sym(ap, "s" + std::to_string(p), std::vector<Term>(p, x(1)));
        CHECK(interpret(ap, s, 1, an_interp(p)).coeffs == RatVec{1});
    }

    auto partial = zi;
    partial.assignment.erase("neg");
    CHECK_THROWS_AS(interpret(zp, sym(zp, "neg", {x(1)}), 1, partial), InterpretError);
}

TEST_CASE("interpretation is a homomorphism for substitution") {
    Rng rng(61);
    const auto zp = presentations::integers_f1();
    const auto ap = presentations::a_n(6);
    const std::vector<std::pair<Presentation, Interpretation<CoeffModel>>> cases = {{zp, z_interp()},
                                                                                    {ap, an_interp(6)}};
    for (const auto& [p, in] : cases)
        for (int i = 0; i < 100; ++i) {
            const std::size_t n = 1 + rng() % 3, m = 1 + rng() % 3;
            const Term t = random_term(p, n, 3, rng);
            std::vector<Term> sigma;
            std::vector<Element> vals;
            for (std::size_t k = 0; k < n; ++k) {
                sigma.push_back(random_term(p, m, 2, rng));
                vals.push_back(interpret(p, sigma.back(), m, in));
            }
            CHECK(interpret(p, substitute_vars(t, sigma), m, in) == substitute(interpret(p, t, n, in), vals, m));
        }
}

TEST_CASE("relations hold in the intended models") {
    for (long p : {2L, 3L, 5L}) {
        CAPTURE(p);
        const auto checks = check_relations(presentations::a_n(p), an_interp(p));
        CHECK(checks.size() > 2);
        for (const auto& c : checks) CHECK(c.passed);
    }
    const auto nat = presentations::naturals();
    const auto N = CoeffMonad::N();
    for (const auto& c :
         check_relations(nat, Interpretation<CoeffModel>{CoeffModel{N}, {{"add", make_element(N, {1, 1})}}}))
        CHECK(c.passed);

    const auto zp = presentations::integers_f1();
    auto bad = z_interp();
    bad.assignment.insert_or_assign("add", make_element(CoeffMonad::Z(), {1, 2}));
    const auto checks = check_relations(zp, bad);
    const auto comm = std::find_if(checks.begin(), checks.end(),
                                   [](const RelationCheck& c) { return c.lhs == "add(x1, x2)" && c.rhs == "add(x2, x1)"; });
    REQUIRE(comm != checks.end());
    CHECK_FALSE(comm->passed);
}

TEST_CASE("tensor product shape") {
    const auto z = presentations::integers_fempty();
    const auto t = tensor_presentation(z, z);
    std::size_t by_arity[3] = {0, 0, 0};
    for (const auto& s : t.symbols) ++by_arity[s.arity];
    CHECK(by_arity[0] == 2);
    CHECK(by_arity[1] == 2);
    CHECK(by_arity[2] == 2);
    CHECK(t.relations.size() == 2 * z.relations.size() + 9);

    const auto f1 = presentations::f1();
    const auto nat = presentations::naturals();
    const auto unit = tensor_presentation(nat, parse_presentation("base F1; commutative;"));
    CHECK(unit.symbols.size() == nat.symbols.size());
    CHECK(unit.relations.size() == nat.relations.size());

    // two binaries: (x+y)+(z+t) = (x+z)+(y+t)
    const auto w = parse_presentation("gen a/2, b/2;");
    const auto r = commutation_relation(0, 2, 1, 2);
    CHECK(print_term(w, r.lhs) == "a(b(x1, x2), b(x3, x4))");
    CHECK(print_term(w, r.rhs) == "b(a(x1, x3), a(x2, x4))");
    CHECK_THROWS_AS(tensor_presentation(f1, nat), std::invalid_argument);
}

TEST_CASE("derivations in Z tensor Z") {
    const auto z = presentations::integers_fempty();
    const auto t = tensor_presentation(z, z);
    const auto zero_eq = derive_equal(t, sym(t, "zero_1"), sym(t, "zero_2"), 2);
    CHECK(zero_eq.proven());
    const auto add_eq = derive_equal(t, sym(t, "add_1", {x(1), x(2)}), sym(t, "add_2", {x(1), x(2)}), 2);
    CHECK(add_eq.proven());
    const auto neg_eq = derive_equal(t, sym(t, "neg_1", {x(1)}), sym(t, "neg_2", {x(1)}), 2);
    CHECK(neg_eq.proven());
    CHECK(derive_equal(t, x(1), x(1), 0).proven());
    CHECK(derive_equal(t, x(1), x(1), 0).depth == 0);
    CHECK_THROWS_AS(derive_equal(t, x(1), x(2), -1), std::invalid_argument);
}

TEST_CASE("countermodel examples") {
    const auto f1 = presentations::f1();
    const auto r = find_countermodel(f1, x(1), sym(f1, "z"), 3);
    REQUIRE(r.status == CountermodelResult::Status::found);
    CHECK(r.model->size == 2);
    CHECK(satisfies(f1, *r.model));
    CHECK(r.model->eval(x(1), r.assignment) != r.model->eval(sym(f1, "z"), r.assignment));

    CHECK(find_countermodel(f1, x(1), x(1), 3).status == CountermodelResult::Status::none);

    const auto nat = presentations::naturals();
    const auto c = find_countermodel(nat, sym(nat, "add", {x(1), x(2)}), sym(nat, "add", {x(2), x(1)}), 3);
    CHECK(c.status == CountermodelResult::Status::none);
    CHECK(c.sizes_searched == 3);

    // without the interchange law commutativity of + is not forced
    const auto magma = parse_presentation("base F1; gen add/2; rel add(0, x1) = x1; rel add(x1, 0) = x1;");
    const auto m = find_countermodel(magma, sym(magma, "add", {x(1), x(2)}), sym(magma, "add", {x(2), x(1)}), 3);
    CHECK(m.status == CountermodelResult::Status::found);

    const auto tiny = find_countermodel(magma, sym(magma, "add", {x(1), x(2)}), sym(magma, "add", {x(2), x(1)}), 3, 5);
    CHECK(tiny.status == CountermodelResult::Status::undecided);
    CHECK_THROWS_AS(find_countermodel(f1, x(1), x(1), 0), std::invalid_argument);
}

TEST_CASE("table models: interchange law") {
    FiniteModel nand;
    nand.size = 2;
    nand.symbols = {{"nand", 2}};
    nand.tables = {{1, 1, 1, 0}};
    CHECK_FALSE(commute_in_model(nand, 0, 0).commutes);
    CHECK_FALSE(is_commutative_model(nand).commutative());

    FiniteModel consts;
    consts.size = 2;
    consts.symbols = {{"c", 0}, {"d", 0}};
    consts.tables = {{0}, {1}};
    CHECK_FALSE(commute_in_model(consts, 0, 1).commutes);
    CHECK(commute_in_model(consts, 0, 0).commutes);

    FiniteModel xorm;
    xorm.size = 2;
    xorm.symbols = {{"xor", 2}, {"0", 0}};
    xorm.tables = {{0, 1, 1, 0}, {0}};
    CHECK(is_commutative_model(xorm).commutative());
}

TEST_CASE("proofs never contradict countermodels") {
    struct Eq {
        Presentation p;
        Term lhs, rhs;
    };
    const auto nat = presentations::naturals();
    const auto zf = presentations::integers_f1();
    const auto f12 = presentations::f12();
    const auto fi = presentations::finf();
    const auto w = presentations::words();
    const auto f1 = presentations::f1();
    const auto zz = tensor_presentation(presentations::integers_fempty(), presentations::integers_fempty());
    auto add = [](const Presentation& p, Term a, Term b) { return sym(p, "add", {std::move(a), std::move(b)}); };
    const Term zero = Term::app(0);
    const std::vector<Eq> corpus = {
        {nat, add(nat, x(1), x(2)), add(nat, x(2), x(1))},
        {nat, add(nat, add(nat, x(1), x(2)), x(3)), add(nat, x(1), add(nat, x(2), x(3)))},
        {nat, add(nat, x(1), x(1)), x(1)},
        {nat, add(nat, zero, zero), zero},
        {zf, add(zf, x(1), zero), x(1)},
        {zf, sym(zf, "neg", {sym(zf, "neg", {x(1)})}), x(1)},
        {zf, sym(zf, "neg", {zero}), zero},
        {zf, add(zf, x(1), x(1)), zero},
        {zf, sym(zf, "neg", {x(1)}), x(1)},
        {f12, sym(f12, "neg", {zero}), zero},
        {f12, sym(f12, "neg", {x(1)}), x(1)},
        {fi, sym(fi, "star", {x(1), zero}), zero},
        {fi, sym(fi, "star", {x(1), x(2)}), x(1)},
        {fi, sym(fi, "neg", {sym(fi, "star", {x(1), x(2)})}),
         sym(fi, "star", {sym(fi, "neg", {x(1)}), sym(fi, "neg", {x(2)})})},
        {w, sym(w, "cat", {sym(w, "eps"), sym(w, "eps")}), sym(w, "eps")},
        {w, sym(w, "cat", {x(1), x(2)}), sym(w, "cat", {x(2), x(1)})},
        {f1, sym(f1, "z"), x(1)},
        {zz, sym(zz, "zero_1"), sym(zz, "zero_2")},
        {zz, sym(zz, "neg_1", {x(1)}), sym(zz, "neg_2", {x(1)})},
        {zz, sym(zz, "add_1", {x(1), x(2)}), sym(zz, "add_1", {x(2), x(1)})},
    };
    REQUIRE(corpus.size() == 20);
    std::size_t proven = 0, refuted = 0;
    for (const auto& e : corpus) {
        CAPTURE(print_term(e.p, e.lhs));
        CAPTURE(print_term(e.p, e.rhs));
        const auto pr = derive_equal(e.p, e.lhs, e.rhs, 2, {200000});
        const auto cm = find_countermodel(e.p, e.lhs, e.rhs, 3, 2000000);
        if (pr.proven()) {
            ++proven;
            CHECK(cm.status != CountermodelResult::Status::found);
        }
        if (cm.status == CountermodelResult::Status::found) {
            ++refuted;
            CHECK(satisfies(e.p, *cm.model));
        }
    }
    CHECK(proven >= 8);
    CHECK(refuted >= 5);
}

}
