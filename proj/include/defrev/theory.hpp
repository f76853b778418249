#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "literal.hpp"

namespace defrev {

struct TheoryError : Error {
    using Error::Error;
};

enum class RuleKind { strict, defeasible, defeater };

inline const char* arrow(RuleKind k) {
    switch (k) {
        case RuleKind::strict: return "->";
        case RuleKind::defeasible: return "=>";
        case RuleKind::defeater: return "~>";
    }
    return "?";
}

struct Rule {
    std::string label;
    std::vector<Literal> antecedent;  // sorted, no duplicates
    RuleKind kind = RuleKind::defeasible;
    Literal consequent;

    Rule() = default;
    Rule(std::string l, std::vector<Literal> body, RuleKind k, Literal head)
        : label(std::move(l)), antecedent(std::move(body)), kind(k), consequent(std::move(head)) {
        std::sort(antecedent.begin(), antecedent.end());
        antecedent.erase(std::unique(antecedent.begin(), antecedent.end()), antecedent.end());
    }

    bool supports() const { return kind != RuleKind::defeater; }  // member of R_sd
    friend bool operator==(const Rule&, const Rule&) = default;
};

// (winner, loser)
using Tuple = std::pair<std::string, std::string>;

struct TupleLess {
    bool operator()(const Tuple& a, const Tuple& b) const {
        if (int c = natural_compare(a.first, b.first); c != 0) return c < 0;
        return natural_compare(a.second, b.second) < 0;
    }
};

using TupleSet = std::set<Tuple, TupleLess>;

struct Superiority {
    TupleSet tuples;

    Superiority() = default;
    Superiority(std::initializer_list<Tuple> ts) : tuples(ts) {}
    explicit Superiority(TupleSet ts) : tuples(std::move(ts)) {}

    bool contains(const std::string& winner, const std::string& loser) const {
        return tuples.count({winner, loser}) != 0;
    }
    std::size_t size() const { return tuples.size(); }
    friend bool operator==(const Superiority&, const Superiority&) = default;
};

// Kahn's algorithm over the digraph induced by the tuples.
inline bool check_acyclic(const Superiority& s, const std::set<std::string, NaturalLess>& labels) {
    std::map<std::string, std::vector<std::string>, NaturalLess> out;
    std::map<std::string, int, NaturalLess> indeg;
    for (const auto& l : labels) indeg[l] = 0;
    for (const auto& [w, l] : s.tuples) {
        if (!labels.count(w)) throw TheoryError("superiority names unknown rule '" + w + "'");
        if (!labels.count(l)) throw TheoryError("superiority names unknown rule '" + l + "'");
        out[w].push_back(l);
        ++indeg[l];
    }
    std::vector<std::string> ready;
    for (const auto& [l, d] : indeg)
        if (d == 0) ready.push_back(l);
    std::size_t seen = 0;
    while (!ready.empty()) {
        std::string n = std::move(ready.back());
        ready.pop_back();
        ++seen;
        for (const auto& m : out[n])
            if (--indeg[m] == 0) ready.push_back(m);
    }
    return seen == indeg.size();
}

enum class RuleClass { all, strict, strict_and_defeasible };

class Theory {
public:
    Theory() = default;

    // Validates every invariant; throws TheoryError.
    Theory(std::set<Literal> facts, std::vector<Rule> rules, Superiority sup)
        : facts_(std::move(facts)), rules_(std::move(rules)), sup_(std::move(sup)) {
        for (const auto& f : facts_)
            if (facts_.count(complement(f)))
                throw TheoryError("inconsistent facts: " + f.atom + " and ~" + f.atom);
        std::sort(rules_.begin(), rules_.end(),
                  [](const Rule& a, const Rule& b) { return natural_compare(a.label, b.label) < 0; });
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            if (!is_identifier(rules_[i].label)) throw TheoryError("bad rule label '" + rules_[i].label + "'");
            if (!index_.emplace(rules_[i].label, i).second)
                throw TheoryError("duplicate rule label '" + rules_[i].label + "'");
        }
        for (const auto& [w, l] : sup_.tuples) {
            if (!index_.count(w)) throw TheoryError("superiority names unknown rule '" + w + "'");
            if (!index_.count(l)) throw TheoryError("superiority names unknown rule '" + l + "'");
            if (w == l) throw TheoryError("cyclic superiority: " + w + " > " + w);
        }
        if (!check_acyclic(sup_, labels())) throw TheoryError("cyclic superiority relation");
    }

    const std::set<Literal>& facts() const { return facts_; }
    const std::vector<Rule>& rules() const { return rules_; }  // sorted by label
    const Superiority& superiority() const { return sup_; }

    std::set<std::string, NaturalLess> labels() const {
        std::set<std::string, NaturalLess> out;
        for (const auto& r : rules_) out.insert(r.label);
        return out;
    }

    const Rule* find(const std::string& label) const {
        auto it = index_.find(label);
        return it == index_.end() ? nullptr : &rules_[it->second];
    }
    std::optional<std::size_t> index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool has_strict_or_defeater() const {
        return std::any_of(rules_.begin(), rules_.end(),
                           [](const Rule& r) { return r.kind != RuleKind::defeasible; });
    }

    Theory with_superiority(Superiority s) const { return Theory(facts_, rules_, std::move(s)); }

    // Facts, antecedents, consequents, and their complements.
    std::set<Literal> universe() const {
        std::set<Literal> u = appearing();
        for (const auto& l : std::set<Literal>(u)) u.insert(complement(l));
        return u;
    }

    // Literals written somewhere in the theory.
    std::set<Literal> appearing() const {
        std::set<Literal> u(facts_.begin(), facts_.end());
        for (const auto& r : rules_) {
            u.insert(r.antecedent.begin(), r.antecedent.end());
            u.insert(r.consequent);
        }
        return u;
    }

    friend bool operator==(const Theory& a, const Theory& b) {
        return a.facts_ == b.facts_ && a.rules_ == b.rules_ && a.sup_ == b.sup_;
    }

private:
    std::set<Literal> facts_;
    std::vector<Rule> rules_;
    Superiority sup_;
    std::map<std::string, std::size_t, NaturalLess> index_;
};

inline std::vector<Rule> rules_for(const Theory& t, const Literal& q, RuleClass restrict = RuleClass::all) {
    std::vector<Rule> out;
    for (const auto& r : t.rules()) {
        if (r.consequent != q) continue;
        if (restrict == RuleClass::strict && r.kind != RuleKind::strict) continue;
        if (restrict == RuleClass::strict_and_defeasible && r.kind == RuleKind::defeater) continue;
        out.push_back(r);
    }
    return out;
}

}  // namespace defrev
