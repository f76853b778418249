#include <catch_amalgamated.hpp>

#include <random>

#include "defrev/text_format.hpp"
#include "fixtures.hpp"
#include "random_theory.hpp"

using namespace defrev;

namespace {

// Independent cycle check by depth-first search with colouring.
bool dfs_acyclic(const Superiority& s) {
    std::map<std::string, std::vector<std::string>> g;
    for (const auto& [w, l] : s.tuples) g[w].push_back(l);
    std::map<std::string, int> colour;
    std::function<bool(const std::string&)> visit = [&](const std::string& n) {
        colour[n] = 1;
        for (const auto& m : g[n]) {
            if (colour[m] == 1) return false;
            if (colour[m] == 0 && !visit(m)) return false;
        }
        colour[n] = 2;
        return true;
    };
    for (const auto& [n, _] : g)
        if (colour[n] == 0 && !visit(n)) return false;
    return true;
}

std::set<std::string, NaturalLess> labels_of(std::initializer_list<const char*> ls) {
    std::set<std::string, NaturalLess> out;
    for (auto l : ls) out.insert(l);
    return out;
}

}  // namespace

TEST_CASE("literal complement is an involution") {
    Literal a("a");
    CHECK(complement(a) == Literal("a", true));
    CHECK(complement(Literal("a", true)) == a);
    for (const char* s : {"x", "~x", "_c1", "~Healthy"}) {
        Literal l = Literal::parse(s);
        CHECK(complement(complement(l)) == l);
        CHECK(l.str() == s);
    }
}

TEST_CASE("natural label order") {
    CHECK(natural_compare("r2", "r10") < 0);
    CHECK(natural_compare("r10", "r9") > 0);
    CHECK(natural_compare("a", "b") < 0);
    CHECK(natural_compare("r01", "r1") != 0);
    CHECK(natural_compare("r1", "r1") == 0);
    CHECK(Literal("x2") < Literal("x10"));
    CHECK(Literal("a") < Literal("a", true));
    CHECK(Literal("a", true) < Literal("b"));
}

TEST_CASE("parse smallest conflict theory") {
    Theory t = parse_theory("r1: => a.\nr4: => ~a.\nr1 > r4.");
    CHECK(t.rules().size() == 2);
    CHECK(t.superiority().size() == 1);
    CHECK(t.superiority().contains("r1", "r4"));
}

TEST_CASE("parse the running theory") {
    Theory t = parse_theory(fixtures::kRunning);
    CHECK(t.rules().size() == 11);
    CHECK(t.superiority() == Superiority{{"r1", "r4"}, {"r5", "r3"}});
    const Rule* r8 = t.find("r8");
    REQUIRE(r8);
    CHECK(r8->antecedent == std::vector<Literal>{Literal("b")});
    CHECK(r8->consequent == Literal("c", true));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_theory("facts: a, ~a."), TheoryError);
    CHECK_THROWS_AS(parse_theory("r: => a. r: => b."), ParseError);
    CHECK_THROWS_AS(parse_theory("r: => a. s: => ~a. r > s. s > r."), TheoryError);
    CHECK_THROWS_AS(parse_theory("r: => a. r > r."), TheoryError);
    CHECK_THROWS_AS(parse_theory("r: => a. r > q."), ParseError);
    try {
        parse_theory("r1: => a.\nr2: a => .");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 10);
    }
    try {
        parse_theory("r1: => a.\n  r2 a => b.");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 6);
    }
    CHECK_THROWS_AS(parse_theory("r1: => 1a."), ParseError);
    CHECK_THROWS_AS(parse_theory("r1: => a"), ParseError);
    CHECK_THROWS_AS(parse_theory("r1: a b => c."), ParseError);
    CHECK_THROWS_AS(parse_theory("r1: => a. $"), ParseError);
}

TEST_CASE("parse conveniences") {
    Theory t = parse_theory("# comment\nfacts: a.\nfacts: b. # more\nr:a,a,~c~>~b.\nr > r2.\nr2: => b. r > r2.");
    CHECK(t.facts() == std::set<Literal>{Literal("a"), Literal("b")});
    CHECK(t.superiority().size() == 1);
    CHECK(t.find("r")->antecedent.size() == 2);
    CHECK(t.find("r")->kind == RuleKind::defeater);
    CHECK(parse_theory("facts:.").facts().empty());
    CHECK(parse_theory("s: x -> y.").find("s")->kind == RuleKind::strict);
}

TEST_CASE("serialize canonical form") {
    CHECK(serialize_theory(Theory{}) == "facts:.\n");
    Theory d = parse_theory("r: a ~> ~b.");
    CHECK(serialize_theory(d) == "facts:.\nr: a ~> ~b.\n");
    Theory t = parse_theory("r10: => e. r2: b, a => c. facts: z, ~y. r2 > r10.");
    CHECK(serialize_theory(t) == "facts: ~y, z.\nr2: a, b => c.\nr10: => e.\nr2 > r10.\n");
}

TEST_CASE("round trip on fixtures") {
    for (const char* src : {fixtures::kRunning, fixtures::kLegal, fixtures::kContr78, fixtures::kContrContrTaut,
                            fixtures::kIdHarper}) {
        Theory t = parse_theory(src);
        std::string once = serialize_theory(t);
        Theory back = parse_theory(once);
        CHECK(back == t);
        CHECK(serialize_theory(back) == once);
    }
}

TEST_CASE("round trip on random theories") {
    std::mt19937_64 rng(20240611);
    gen::RandomTheoryOptions opts;
    opts.strict_rules = true;
    opts.defeaters = true;
    opts.facts = true;
    for (int i = 0; i < 300; ++i) {
        Theory t = gen::random_theory(rng, opts);
        Theory back = parse_theory(serialize_theory(t));
        REQUIRE(back == t);
    }
}

TEST_CASE("check_acyclic") {
    CHECK(check_acyclic(Superiority{}, {}));
    CHECK_FALSE(check_acyclic(Superiority{{"r1", "r2"}, {"r2", "r1"}}, labels_of({"r1", "r2"})));
    Superiority tri{{"r1", "r2"}, {"r2", "r3"}, {"r3", "r1"}};
    CHECK(check_acyclic(tri, labels_of({"r1", "r2", "r3"})) == dfs_acyclic(tri));
    CHECK_FALSE(dfs_acyclic(tri));
    CHECK_THROWS_AS(check_acyclic(Superiority{{"r1", "zz"}}, labels_of({"r1"})), TheoryError);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Superiority s;
        int n = 2 + static_cast<int>(rng() % 5);
        std::set<std::string, NaturalLess> labels;
        for (int k = 0; k < n; ++k) labels.insert("r" + std::to_string(k));
        int m = static_cast<int>(rng() % 7);
        for (int k = 0; k < m; ++k) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            s.tuples.insert({"r" + std::to_string(a), "r" + std::to_string(b)});
        }
        CHECK(check_acyclic(s, labels) == dfs_acyclic(s));
    }
}

TEST_CASE("rules_for") {
    Theory t = parse_theory(fixtures::kRunning);
    auto d = rules_for(t, Literal("d"));
    REQUIRE(d.size() == 1);
    CHECK(d[0].label == "r3");
    CHECK(rules_for(t, Literal("p", true)).empty());
    CHECK(rules_for(Theory{}, Literal("q")).empty());

    Theory k = parse_theory("s: -> q. d: => q. f: ~> q.");
    CHECK(rules_for(k, Literal("q")).size() == 3);
    CHECK(rules_for(k, Literal("q"), RuleClass::strict).size() == 1);
    CHECK(rules_for(k, Literal("q"), RuleClass::strict_and_defeasible).size() == 2);
}

TEST_CASE("literal universe is closed under complement") {
    Theory t = parse_theory(fixtures::kRunning);
    auto u = t.universe();
    CHECK(u.size() == 14);
    for (const auto& l : u) CHECK(u.count(complement(l)));
    CHECK(t.appearing().size() == 11);
}
