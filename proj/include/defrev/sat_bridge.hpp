#pragma once

#include <array>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "structure.hpp"

namespace defrev {

struct CnfError : Error {
    using Error::Error;
};

struct CnfFormula {
    int variable_count = 0;
    std::vector<std::array<int, 3>> clauses;  // DIMACS literals: k or -k
};

// Comments ("c ..."), header "p cnf V C", clauses ended by 0, free layout.
inline CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    CnfFormula f;
    std::optional<long> declared;
    std::vector<int> current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
        if (tok == "p") {
            std::string fmt;
            long v = -1, c = -1;
            if (declared || !(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0 || (ls >> tok))
                throw CnfError("malformed header: '" + line + "'");
            f.variable_count = static_cast<int>(v);
            declared = c;
            continue;
        }
        if (!declared) throw CnfError("clause before the 'p cnf' header");
        do {
            char* end = nullptr;
            long x = std::strtol(tok.c_str(), &end, 10);
            if (*end != '\0' || tok.empty()) throw CnfError("not a literal: '" + tok + "'");
            if (x == 0) {
                if (current.size() != 3)
                    throw CnfError("clause " + std::to_string(f.clauses.size() + 1) + " has " + std::to_string(current.size()) +
                                   " literals, expected 3");
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
                continue;
            }
            if (std::labs(x) > f.variable_count) throw CnfError("variable " + std::to_string(std::labs(x)) + " out of range");
            current.push_back(static_cast<int>(x));
        } while (ls >> tok);
    }
    if (!declared) throw CnfError("missing 'p cnf' header");
    if (!current.empty()) throw CnfError("last clause is not terminated by 0");
    if (f.clauses.empty()) throw CnfError("empty formula");
    if (static_cast<long>(f.clauses.size()) != *declared)
        throw CnfError("header declares " + std::to_string(*declared) + " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

inline Literal variable_literal(int dimacs) { return Literal("x" + std::to_string(std::abs(dimacs)), dimacs < 0); }
inline Literal goal_literal() { return Literal("_goal"); }

inline std::string generator_label(std::size_t i, std::size_t j) { return "ga_" + std::to_string(i) + "_" + std::to_string(j); }

// Per clause i and position j: ga_i_j: => a, g_i_j: a => _c<i>, gn_i: => ~_c<i>, gp_i: ~_c<i> => _goal.
// Duplicate literals in a clause keep their own (i, j) rules.
inline Theory gamma_transform(const CnfFormula& f) {
    std::vector<Rule> rules;
    for (std::size_t i = 1; i <= f.clauses.size(); ++i) {
        const Literal c("_c" + std::to_string(i));
        for (std::size_t j = 1; j <= 3; ++j) {
            Literal a = variable_literal(f.clauses[i - 1][j - 1]);
            rules.emplace_back(generator_label(i, j), std::vector<Literal>{}, RuleKind::defeasible, a);
            rules.emplace_back("g_" + std::to_string(i) + "_" + std::to_string(j), std::vector<Literal>{a},
                               RuleKind::defeasible, c);
        }
        rules.emplace_back("gn_" + std::to_string(i), std::vector<Literal>{}, RuleKind::defeasible, complement(c));
        rules.emplace_back("gp_" + std::to_string(i), std::vector<Literal>{complement(c)}, RuleKind::defeasible,
                           goal_literal());
    }
    return Theory({}, std::move(rules), {});
}

// Conflicting pairs between generator rules, in label order.
inline std::vector<LabelPair> generator_pairs(const CnfFormula& f) {
    std::vector<LabelPair> out;
    const Theory g = gamma_transform(f);
    for (const auto& pr : conflicting_pairs(g))
        if (pr.first.rfind("ga_", 0) == 0 && pr.second.rfind("ga_", 0) == 0) out.push_back(pr);
    return out;
}

struct SatAnswer {
    enum class Kind { sat, unsat, exhausted_budget } kind = Kind::unsat;
    std::vector<bool> assignment;  // index 0 unused; x_k at index k
    std::uint64_t examined = 0, required = 0;
};

inline bool satisfies(const CnfFormula& f, const std::vector<bool>& a) {
    for (const auto& cl : f.clauses) {
        bool any = false;
        for (int x : cl) any = any || (a[std::abs(x)] == (x > 0));
        if (!any) return false;
    }
    return true;
}

// Exhaustive; x1 is the most significant position, so the first hit is the
// lexicographically least model.
inline SatAnswer truth_table_sat(const CnfFormula& f) {
    if (f.variable_count > 24) throw CnfError("truth table limited to 24 variables");
    const int v = f.variable_count;
    SatAnswer ans;
    ans.required = std::uint64_t{1} << v;
    std::vector<bool> a(v + 1);
    for (std::uint64_t m = 0; m < ans.required; ++m) {
        for (int k = 1; k <= v; ++k) a[k] = (m >> (v - k)) & 1u;
        ++ans.examined;
        if (satisfies(f, a)) {
            ans.kind = SatAnswer::Kind::sat;
            ans.assignment = a;
            return ans;
        }
    }
    return ans;
}

namespace detail {

inline std::vector<bool> read_back(const CnfFormula& f, const TagAssignment& tags) {
    std::vector<bool> a(f.variable_count + 1, false);
    for (int k = 1; k <= f.variable_count; ++k) a[k] = tags.proves({Family::Partial, Sign::plus}, variable_literal(k));
    return a;
}

}  // namespace detail

// Refutability of _goal in the transformed theory decides satisfiability.
// When every relation over the generator pairs fits the budget they are all
// scanned. Otherwise the scan covers the relations that orient each variable
// uniformly (all x_k generators over all ~x_k ones, the reverse, or none),
// which is where the satisfying witnesses live; 3^V' candidates for the V'
// variables used with both signs.
inline SatAnswer sat_via_refutability(const CnfFormula& f, std::uint64_t budget = kDefaultBudget, unsigned jobs = 1) {
    const Theory g = gamma_transform(f);
    const Literal goal = goal_literal();
    SatAnswer ans;
    auto pairs = generator_pairs(f);
    if (pow3(pairs.size()) <= budget) {
        auto r = classify_refutability(g, goal, pairs, budget, jobs);
        ans.examined = r.examined;
        ans.required = r.required;
        if (r.value == RefutabilityClass::refutable) {
            ans.kind = SatAnswer::Kind::sat;
            ans.assignment = detail::read_back(f, compute_tags(g.with_superiority(*r.witness), bit(Family::Partial)));
        }
        return ans;
    }
    // orientation quotient
    std::vector<int> vars;
    for (int k = 1; k <= f.variable_count; ++k) {
        bool pos = false, neg = false;
        for (const auto& cl : f.clauses)
            for (int x : cl) {
                if (x == k) pos = true;
                if (x == -k) neg = true;
            }
        if (pos && neg) vars.push_back(k);
    }
    ans.required = pow3(vars.size());
    if (ans.required > budget) {
        ans.kind = SatAnswer::Kind::exhausted_budget;
        return ans;
    }
    CompiledTheory ct(g);
    Evaluator ev(ct);
    DenseSuperiority dense(g.rules().size());
    const int gid = ct.id(goal);
    // generator rule indexes by variable and sign
    std::vector<std::vector<int>> posg(f.variable_count + 1), negg(f.variable_count + 1);
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            int x = f.clauses[i][j];
            int idx = static_cast<int>(*g.index_of(generator_label(i + 1, j + 1)));
            (x > 0 ? posg : negg)[std::abs(x)].push_back(idx);
        }
    for (std::uint64_t m = 0; m < ans.required; ++m) {
        dense.clear();
        std::uint64_t c = m;
        for (int k : vars) {
            int state = static_cast<int>(c % 3);
            c /= 3;
            for (int a : posg[k])
                for (int b : negg[k]) {
                    if (state == 1) dense.set(a, b);
                    if (state == 2) dense.set(b, a);
                }
        }
        ev.run(dense, bit(Family::Partial));
        ++ans.examined;
        if (ev.status(Family::Partial, gid) == Status::provenMinus) {
            ans.kind = SatAnswer::Kind::sat;
            ans.assignment.assign(f.variable_count + 1, false);
            for (int k = 1; k <= f.variable_count; ++k) {
                int id = ct.id(variable_literal(k));
                ans.assignment[k] = id >= 0 && ev.status(Family::Partial, id) == Status::provenPlus;
            }
            return ans;
        }
    }
    return ans;
}

// "s SATISFIABLE" / "s UNSATISFIABLE" and a "v ... 0" line.
inline std::string format_sat(const SatAnswer& a) {
    switch (a.kind) {
        case SatAnswer::Kind::unsat: return "s UNSATISFIABLE\n";
        case SatAnswer::Kind::exhausted_budget: return "s UNKNOWN\n";
        case SatAnswer::Kind::sat: break;
    }
    std::string s = "s SATISFIABLE\nv";
    for (std::size_t k = 1; k < a.assignment.size(); ++k)
        s += " " + std::string(a.assignment[k] ? "" : "-") + std::to_string(k);
    return s + " 0\n";
}

}  // namespace defrev
