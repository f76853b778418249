#include <catch_amalgamated.hpp>

#include <random>

#include "defrev/structure.hpp"
#include "defrev/text_format.hpp"
#include "fixtures.hpp"
#include "random_theory.hpp"

using namespace defrev;

namespace {

Literal L(const char* s) { return Literal::parse(s); }

// Degree-n dependency, unrolled until it stops growing.
bool dependency_oracle(const Theory& t, const Literal& a, const Literal& b) {
    auto u = t.universe();
    u.insert(a);
    u.insert(b);
    std::set<Literal> dep{b};
    for (std::size_t n = 0; n <= u.size(); ++n) {
        std::set<Literal> next = dep;
        for (const auto& x : u) {
            if (t.facts().count(x)) continue;
            bool all = true;
            for (const auto& r : rules_for(t, x)) {
                bool hit = false;
                for (const auto& c : r.antecedent) hit = hit || dep.count(c);
                all = all && hit;
            }
            if (all) next.insert(x);
        }
        dep = next;
    }
    return dep.count(a) != 0;
}

std::vector<LabelPair> head_scan(const Theory& t) {
    std::vector<LabelPair> out;
    for (const auto& r : t.rules())
        for (const auto& s : t.rules())
            if (natural_compare(r.label, s.label) < 0 && r.consequent.atom == s.consequent.atom &&
                r.consequent.negative != s.consequent.negative)
                out.push_back({r.label, s.label});
    return out;
}

// Brute force over every subset of ordered conflicting tuples.
std::size_t acyclic_relation_count(const Theory& t) {
    auto pairs = head_scan(t);
    std::size_t count = 0, total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        Superiority s;
        std::size_t c = code;
        for (const auto& [a, b] : pairs) {
            if (c % 3 == 1) s.tuples.insert({a, b});
            if (c % 3 == 2) s.tuples.insert({b, a});
            c /= 3;
        }
        if (check_acyclic(s, t.labels())) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("depends_on") {
    Theory any = parse_theory(fixtures::kRunning);
    CHECK(depends_on(any, L("x"), L("x")));
    Theory d = parse_theory("r1: a => b. r2: ~a, b => p.");
    CHECK(depends_on(d, L("p"), L("b")));
    CHECK(depends_on(d, L("p"), L("a")));
    CHECK(depends_on(any, L("d"), L("a")));
    CHECK(dependency_oracle(any, L("d"), L("a")));
    CHECK_FALSE(depends_on(any, L("d"), L("b")));
    CHECK_FALSE(depends_on(any, L("p"), L("a")));
    // a fact depends only on itself
    Theory f = parse_theory("facts: a. r: b => a.");
    CHECK_FALSE(depends_on(f, L("a"), L("b")));
    // rule-less literal: vacuous
    CHECK(depends_on(any, L("~p"), L("e")));

    std::mt19937_64 rng(5);
    gen::RandomTheoryOptions o;
    o.facts = true;
    for (int i = 0; i < 150; ++i) {
        Theory t = gen::random_theory(rng, o);
        auto u = t.universe();
        for (const auto& a : u)
            for (const auto& b : u) REQUIRE(depends_on(t, a, b) == dependency_oracle(t, a, b));
    }
}

TEST_CASE("unreachability") {
    CHECK(is_unreachable(parse_theory(fixtures::kUnreachable), L("p")));
    CHECK(is_unreachable(parse_theory("r1: a => b. r2: ~a, b => p."), L("p")));
    Theory ex1 = parse_theory(fixtures::kRunning);
    CHECK_FALSE(is_unreachable(ex1, L("p")));
    CHECK(is_unreachable(ex1, L("~p")));
    CHECK_FALSE(is_unreachable(parse_theory("facts: q."), L("q")));
    // propagates through antecedents
    CHECK(is_unreachable(parse_theory("r1:=>a. r2:=>~a. r3: a,~a => p. r4: p => q."), L("q")));
    CHECK_FALSE(is_unreachable(parse_theory(fixtures::kChainedButStuck), L("p")));
}

TEST_CASE("a proved literal proves everything it depends on") {
    std::mt19937_64 rng(11);
    gen::RandomTheoryOptions o;
    o.defeaters = true;
    for (int i = 0; i < 300; ++i) {
        Theory t = gen::random_theory(rng, o);
        auto tags = compute_tags(t, bit(Family::Partial));
        for (const auto& p : t.universe()) {
            if (!tags.proves({Family::Partial, Sign::plus}, p)) continue;
            for (const auto& q : t.universe())
                if (depends_on(t, p, q)) REQUIRE(tags.proves({Family::Partial, Sign::plus}, q));
        }
    }
}

TEST_CASE("unreachable literals are never proved") {
    std::mt19937_64 rng(12);
    gen::RandomTheoryOptions o;
    o.max_rules = 8;
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        Theory t = gen::random_theory(rng, o);
        if (conflicting_pairs(t).size() > 5) continue;
        auto un = unreachable_literals(t);
        if (un.empty()) continue;
        for_each_superiority(t, 1000, [&](const Superiority& s) {
            auto tags = compute_tags(t.with_superiority(s), bit(Family::Partial));
            for (const auto& l : un) REQUIRE_FALSE(tags.proves({Family::Partial, Sign::plus}, l));
            ++checked;
        });
    }
    CHECK(checked > 0);
}

TEST_CASE("reachability is not sufficient for revisability") {
    Theory t = parse_theory(fixtures::kChainedButStuck);
    CHECK_FALSE(is_unreachable(t, L("p")));
    CHECK(compute_tags(t).proves({Family::SigmaChain, Sign::plus}, L("p")));
    std::size_t proving = 0;
    for_each_superiority(t, 100, [&](const Superiority& s) {
        proving += compute_tags(t.with_superiority(s), bit(Family::Partial)).proves({Family::Partial, Sign::plus}, L("p"));
    });
    CHECK(proving == 0);
}

TEST_CASE("decisiveness") {
    auto ex1 = is_decisive(parse_theory(fixtures::kRunning));
    CHECK(ex1.decisive);
    CHECK(ex1.acyclic_atom_graph);
    auto loop = is_decisive(parse_theory(fixtures::kLoop));
    CHECK_FALSE(loop.decisive);
    CHECK_FALSE(loop.acyclic_atom_graph);
    // acyclic atom graph implies decisive
    std::mt19937_64 rng(13);
    int acyclic = 0;
    for (int i = 0; i < 300; ++i) {
        Theory t = gen::random_theory(rng);
        auto d = is_decisive(t);
        if (d.acyclic_atom_graph) {
            ++acyclic;
            REQUIRE(d.decisive);
        }
    }
    CHECK(acyclic > 20);
}

TEST_CASE("support trees") {
    Theory ex1 = parse_theory(fixtures::kRunning);
    auto d = support_trees(ex1, L("d"), 10);
    REQUIRE(d.size() == 1);
    CHECK(d[0].str() == "r3(c <- r2(a <- r1))");
    CHECK(d[0].literals() == std::set<Literal>{L("a"), L("c"), L("d")});
    CHECK(support_trees(ex1, L("~p"), 10).empty());
    CHECK(support_trees(parse_theory("r1:=>p. r2:=>p."), L("p"), 10).size() == 2);
    CHECK(support_trees(parse_theory("r1:=>p. r2:=>p."), L("p"), 1).size() == 1);
    // products: two ways to a, two ways to b
    Theory prod = parse_theory("r1:=>a. r2:=>a. r3:=>b. r4:=>b. r5: a, b => p.");
    CHECK(support_trees(prod, L("p"), 100).size() == 4);
    CHECK(support_trees(prod, L("p"), 3).size() == 3);
    // facts are leaves; defeaters never support
    Theory f = parse_theory("facts: a. r: a ~> p. s: a => p.");
    auto tf = support_trees(f, L("p"), 10);
    REQUIRE(tf.size() == 1);
    CHECK(*tf[0].rule == "s");
    CHECK_FALSE(tf[0].children[0].rule.has_value());

    std::mt19937_64 rng(17);
    gen::RandomTheoryOptions o;
    o.defeaters = true;
    o.facts = true;
    for (int i = 0; i < 300; ++i) {
        Theory t = gen::random_theory(rng, o);
        auto tags = compute_tags(t, bit(Family::SigmaChain));
        for (const auto& l : t.universe()) {
            bool chain = tags.proves({Family::SigmaChain, Sign::plus}, l);
            REQUIRE(support_trees(t, l, 1).empty() == !chain);
        }
    }
}

TEST_CASE("conflicting pairs") {
    Theory ex1 = parse_theory(fixtures::kRunning);
    auto pairs = conflicting_pairs(ex1);
    CHECK(pairs == head_scan(ex1));
    std::set<LabelPair> s(pairs.begin(), pairs.end());
    CHECK(s == std::set<LabelPair>{{"r1", "r4"}, {"r3", "r5"}, {"r2", "r8"}, {"r7", "r9"}});
    CHECK(conflicting_pairs(Theory{}).empty());
    auto team = conflicting_pairs(parse_theory(fixtures::kTeam));
    CHECK(std::set<LabelPair>(team.begin(), team.end()) ==
          std::set<LabelPair>{{"r1", "r3"}, {"r1", "r4"}, {"r2", "r3"}, {"r2", "r4"}});
}

TEST_CASE("enumerate superiorities") {
    CHECK(enumerate_superiorities(parse_theory("r:=>p. s:=>~p."), 100).size() == 3);
    CHECK(enumerate_superiorities(parse_theory("r:=>p. s:=>~p. t:=>q. u:=>~q."), 100).size() == 9);
    Theory ex1 = parse_theory(fixtures::kRunning);
    auto all = enumerate_superiorities(ex1, 81);
    CHECK(all.size() == 81);
    std::set<std::vector<Tuple>> distinct;
    for (const auto& s : all) {
        distinct.insert(std::vector<Tuple>(s.tuples.begin(), s.tuples.end()));
        CHECK(check_acyclic(s, ex1.labels()));
    }
    CHECK(distinct.size() == 81);
    CHECK_THROWS_AS(enumerate_superiorities(ex1, 80), BudgetExceeded);
    try {
        enumerate_superiorities(ex1, 10);
    } catch (const BudgetExceeded& e) {
        CHECK(e.required == 81);
    }
    Theory team = parse_theory(fixtures::kTeam);
    CHECK(enumerate_superiorities(team, 81).size() == acyclic_relation_count(team));
    CHECK(acyclic_relation_count(team) < 81);
}

TEST_CASE("restriction soundness: inert tuples do not matter") {
    std::mt19937_64 rng(21);
    gen::RandomTheoryOptions o;
    o.inert_tuples = true;
    o.defeaters = true;
    int with_inert = 0;
    for (int i = 0; i < 400; ++i) {
        Theory t = gen::random_theory(rng, o);
        Superiority conflicting;
        for (const auto& [w, l] : t.superiority().tuples)
            if (t.find(w)->consequent == complement(t.find(l)->consequent)) conflicting.tuples.insert({w, l});
        if (conflicting.size() != t.superiority().size()) ++with_inert;
        REQUIRE(extension(t) == extension(t.with_superiority(conflicting)));
    }
    CHECK(with_inert > 50);
}

TEST_CASE("classify refutability") {
    auto taut = classify_refutability(parse_theory("r:=>p."), L("p"));
    CHECK(taut.value == RefutabilityClass::tautological);
    CHECK(taut.examined == 1);
    auto tie = classify_refutability(parse_theory("r:=>p. s:=>~p."), L("p"));
    CHECK(tie.value == RefutabilityClass::refutable);
    REQUIRE(tie.witness);
    CHECK(tie.witness->tuples.empty());
    CHECK(tie.plus == 1);
    CHECK(tie.minus == 2);

    Theory ex1 = parse_theory(fixtures::kRunning);
    auto over = classify_refutability(ex1, L("p"), 2);
    CHECK(over.value == RefutabilityClass::exhausted_budget);
    CHECK(over.required == 81);  // every pair feeds p through ~d, c and d
    auto loop = classify_refutability(parse_theory(fixtures::kLoop), L("p"));
    CHECK(loop.value == RefutabilityClass::undetermined);  // undecided only when s > r
    CHECK(loop.plus == 2);

    // facts are dropped: theories are based on the rules alone
    auto facts = classify_refutability(parse_theory("facts: a. r: a => p."), L("p"));
    CHECK(facts.value == RefutabilityClass::refutable);

    // pruned classification equals brute force over every conflicting pair
    std::mt19937_64 rng(23);
    gen::RandomTheoryOptions o;
    o.max_rules = 8;
    for (int i = 0; i < 120; ++i) {
        Theory t({}, gen::random_theory(rng, o).rules(), {});
        if (conflicting_pairs(t).size() > 5) continue;
        for (const auto& p : t.universe()) {
            std::size_t plus = 0, minus = 0, total = 0;
            for_each_superiority(t, 1000, [&](const Superiority& s) {
                auto tags = compute_tags(t.with_superiority(s), bit(Family::Partial));
                plus += tags.proves({Family::Partial, Sign::plus}, p);
                minus += tags.proves({Family::Partial, Sign::minus}, p);
                ++total;
            });
            auto r = classify_refutability(t, p, 1000, 2);
            if (minus > 0) REQUIRE(r.value == RefutabilityClass::refutable);
            else if (plus == total) REQUIRE(r.value == RefutabilityClass::tautological);
            else REQUIRE(r.value == RefutabilityClass::undetermined);
        }
    }
}
