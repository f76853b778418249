#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "structure.hpp"
#include "text_format.hpp"

namespace defrev {

struct UnsupportedTheory : Error {
    using Error::Error;
};

inline void require_revisable(const Theory& t) {
    if (t.has_strict_or_defeater())
        throw UnsupportedTheory("revision works on theories of defeasible rules only (no strict rules, no defeaters)");
}

enum class GoalKind { contract, revise, expand };

struct RevisionGoal {
    GoalKind kind;
    Literal target;
};

struct GoalTag {
    ProofTag tag;
    Literal literal;
};

// contract: -∂p, revise: +∂~p, expand: +∂p
inline GoalTag goal_tag(const RevisionGoal& g) {
    switch (g.kind) {
        case GoalKind::contract: return {{Family::Partial, Sign::minus}, g.target};
        case GoalKind::revise: return {{Family::Partial, Sign::plus}, complement(g.target)};
        case GoalKind::expand: break;
    }
    return {{Family::Partial, Sign::plus}, g.target};
}

enum class InstanceClass {
    attack_premises,
    omega_plus_sigma_minus,
    omega_minus_sigma_plus,
    omega_minus_sigma_minus,
    omega_plus_sigma_plus_impossible,
    third_omega_plus_sigma_plus,
    third_omega_minus_sigma_plus,
    third_omega_minus_sigma_minus,
    infeasible_phi,
    infeasible_no_chain,
    infeasible_unreachable,
    precondition_not_met,
};

inline const char* to_string(InstanceClass c) {
    switch (c) {
        case InstanceClass::attack_premises: return "attack_premises";
        case InstanceClass::omega_plus_sigma_minus: return "omega_plus_sigma_minus";
        case InstanceClass::omega_minus_sigma_plus: return "omega_minus_sigma_plus";
        case InstanceClass::omega_minus_sigma_minus: return "omega_minus_sigma_minus";
        case InstanceClass::omega_plus_sigma_plus_impossible: return "omega_plus_sigma_plus_impossible";
        case InstanceClass::third_omega_plus_sigma_plus: return "third_omega_plus_sigma_plus";
        case InstanceClass::third_omega_minus_sigma_plus: return "third_omega_minus_sigma_plus";
        case InstanceClass::third_omega_minus_sigma_minus: return "third_omega_minus_sigma_minus";
        case InstanceClass::infeasible_phi: return "infeasible_phi";
        case InstanceClass::infeasible_no_chain: return "infeasible_no_chain";
        case InstanceClass::infeasible_unreachable: return "infeasible_unreachable";
        case InstanceClass::precondition_not_met: return "precondition_not_met";
    }
    return "?";
}

inline bool is_infeasible(InstanceClass c) {
    return c == InstanceClass::infeasible_phi || c == InstanceClass::infeasible_no_chain ||
           c == InstanceClass::infeasible_unreachable;
}

enum class Strategy { single_winner, team_defeater, targeted, search };

inline const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::single_winner: return "single_winner";
        case Strategy::team_defeater: return "team_defeater";
        case Strategy::targeted: return "targeted";
        case Strategy::search: return "search";
    }
    return "?";
}

inline Strategy parse_strategy(std::string_view s) {
    for (Strategy x : {Strategy::single_winner, Strategy::team_defeater, Strategy::targeted, Strategy::search})
        if (s == to_string(x)) return x;
    throw Error("unknown strategy '" + std::string(s) + "'");
}

enum class OutcomeStatus { ok, infeasible, exhausted, precondition_not_met };

inline const char* to_string(OutcomeStatus s) {
    switch (s) {
        case OutcomeStatus::ok: return "ok";
        case OutcomeStatus::infeasible: return "infeasible";
        case OutcomeStatus::exhausted: return "exhausted";
        case OutcomeStatus::precondition_not_met: return "precondition_not_met";
    }
    return "?";
}

struct RevisionOutcome {
    OutcomeStatus status = OutcomeStatus::infeasible;
    std::optional<InstanceClass> instance;  // unset for bare searches
    Strategy strategy = Strategy::search;
    Superiority new_superiority;
    TupleSet added, removed;
    bool verified = false;
    bool fell_back = false;  // targeted edit did not verify, search answered
    std::uint64_t examined = 0, required = 0;
    Theory theory;  // outcome theory; the input when nothing was found

    bool ok() const { return status == OutcomeStatus::ok; }
};

// ---------------------------------------------------------------- helpers

namespace detail {

inline bool goal_holds(const TagAssignment& tags, const std::vector<GoalTag>& goals) {
    for (const auto& g : goals)
        if (!tags.proves(g.tag, g.literal)) return false;
    return true;
}

inline FamilyMask goal_mask(const std::vector<GoalTag>& goals) {
    FamilyMask m = 0;
    for (const auto& g : goals) m |= bit(g.tag.family);
    return close_mask(m);
}

inline RevisionOutcome make_outcome(const Theory& t, Superiority s, Strategy how, const std::vector<GoalTag>& goals) {
    RevisionOutcome out;
    out.status = OutcomeStatus::ok;
    out.strategy = how;
    for (const auto& x : s.tuples)
        if (!t.superiority().tuples.count(x)) out.added.insert(x);
    for (const auto& x : t.superiority().tuples)
        if (!s.tuples.count(x)) out.removed.insert(x);
    out.theory = t.with_superiority(s);
    out.new_superiority = std::move(s);
    out.verified = goal_holds(compute_tags(out.theory, goal_mask(goals)), goals);
    return out;
}

inline bool tuple_list_less(const TupleSet& a, const TupleSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), TupleLess{});
}

}  // namespace detail

// ---------------------------------------------------------------- classification

inline InstanceClass classify_instance(const Theory& t, const TagAssignment& tags, const RevisionGoal& g,
                                       bool relaxed = false) {
    const Literal& p = g.target;
    const Literal np = complement(p);
    auto plus = [&](Family f, const Literal& l) { return tags.proves({f, Sign::plus}, l); };
    auto minus = [&](Family f, const Literal& l) { return tags.proves({f, Sign::minus}, l); };
    auto leaf12 = [&]() {
        bool w = plus(Family::Omega, np), s = plus(Family::SigmaSupport, np);
        if (w && s) return InstanceClass::omega_plus_sigma_plus_impossible;
        if (w) return InstanceClass::omega_plus_sigma_minus;
        return s ? InstanceClass::omega_minus_sigma_plus : InstanceClass::omega_minus_sigma_minus;
    };
    switch (g.kind) {
        case GoalKind::contract:
        case GoalKind::revise:
            if (!relaxed && !plus(Family::Partial, p)) return InstanceClass::precondition_not_met;
            if (plus(Family::Phi, p)) return InstanceClass::infeasible_phi;
            // Σ does not depend on >, and +∂ needs +Σ: anything short of +Σ~p means no chain
            if (!plus(Family::SigmaChain, np))
                return g.kind == GoalKind::contract ? InstanceClass::attack_premises : InstanceClass::infeasible_no_chain;
            return leaf12();
        case GoalKind::expand: {
            if (!relaxed && !(minus(Family::Partial, p) && minus(Family::Partial, np)))
                return InstanceClass::precondition_not_met;
            if (!plus(Family::SigmaChain, p)) return InstanceClass::infeasible_no_chain;
            if (is_unreachable(t, p)) return InstanceClass::infeasible_unreachable;
            bool w = plus(Family::Omega, p), s = plus(Family::SigmaSupport, p);
            if (w && s) return InstanceClass::third_omega_plus_sigma_plus;
            // +omega p with -sigma p needs +∂~p, so only a relaxed run gets here; treated as the generic leaf
            if (s && !w) return InstanceClass::third_omega_minus_sigma_plus;
            return InstanceClass::third_omega_minus_sigma_minus;
        }
    }
    return InstanceClass::precondition_not_met;
}

inline InstanceClass classify_instance(const Theory& t, const RevisionGoal& g, bool relaxed = false) {
    require_revisable(t);
    return classify_instance(t, compute_tags(t), g, relaxed);
}

// ---------------------------------------------------------------- search

enum class Metric { tuples, conclusions };

struct SearchOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
    Metric metric = Metric::tuples;
    bool all_minimal = false;
    std::size_t max_outcomes = 64;
};

struct SearchResult {
    OutcomeStatus status = OutcomeStatus::infeasible;
    std::vector<RevisionOutcome> outcomes;  // one, or every minimal one in order
    std::uint64_t examined = 0, required = 0;
};

// Scans every acyclic assignment of the conflicting pairs that can matter to
// the goals. Minimal by tuple distance (or changed conclusions, then tuple
// distance); ties go to the lexicographically least new relation.
inline SearchResult search_revision(const Theory& t, const std::vector<GoalTag>& goals, const SearchOptions& o = {}) {
    SearchResult res;
    std::vector<Literal> seeds;
    for (const auto& g : goals) seeds.push_back(g.literal);
    PairSpace space(t, o.metric == Metric::tuples ? relevant_pairs(t, seeds) : conflicting_pairs(t));
    res.required = space.size();
    if (space.size() > o.budget) {
        res.status = OutcomeStatus::exhausted;
        return res;
    }
    CompiledTheory ct(t);
    FamilyMask mask = detail::goal_mask(goals) | (o.metric == Metric::conclusions ? bit(Family::Partial) : 0);
    std::vector<std::pair<int, GoalTag>> gid;
    for (const auto& g : goals) gid.push_back({ct.id(g.literal), g});
    std::vector<int> watched;
    std::vector<Status> before;
    if (o.metric == Metric::conclusions) {
        auto tags = compute_tags(t, bit(Family::Partial));
        for (const auto& l : t.appearing()) {
            watched.push_back(ct.id(l));
            before.push_back(tags.status(Family::Partial, l));
        }
    }
    const auto orig = space.original_digits();
    using Key = std::pair<std::uint64_t, std::uint64_t>;
    struct Best {
        std::optional<Key> key;
        std::vector<TupleSet> found;
    };
    const unsigned jobs =
        std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(std::min<std::uint64_t>(space.size(), 64))));
    std::vector<Best> best(jobs);

    auto work = [&](unsigned j) {
        Best& b = best[j];
        Evaluator ev(ct);
        DenseSuperiority dense(t.rules().size());
        const std::uint64_t lo = space.size() * j / jobs, hi = space.size() * (j + 1) / jobs;
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto d = space.digits(i);
            std::uint64_t dist = 0;
            for (std::size_t k = 0; k < d.size(); ++k)
                if (d[k] != orig[k]) dist += (d[k] == 0 || orig[k] == 0) ? 1 : 2;
            if (o.metric == Metric::tuples && b.key && dist > b.key->first) continue;
            space.load(d, dense);
            if (!PairSpace::acyclic(dense)) continue;
            ev.run(dense, mask);
            bool hit = true;
            for (const auto& [id, g] : gid) {
                Status s = id < 0 ? Status::provenMinus : ev.status(g.tag.family, id);
                if (s != (g.tag.sign == Sign::plus ? Status::provenPlus : Status::provenMinus)) {
                    hit = false;
                    break;
                }
            }
            if (!hit) continue;
            Key key{dist, 0};
            if (o.metric == Metric::conclusions) {
                std::uint64_t changed = 0;
                for (std::size_t k = 0; k < watched.size(); ++k)
                    changed += ev.status(Family::Partial, watched[k]) != before[k];
                key = {changed, dist};
            }
            if (b.key && key > *b.key) continue;
            TupleSet rel = space.relation(d).tuples;
            if (!b.key || key < *b.key) {
                b.key = key;
                b.found.clear();
            }
            if (o.all_minimal || b.found.empty()) {
                b.found.push_back(std::move(rel));
            } else if (detail::tuple_list_less(rel, b.found.front())) {
                b.found.front() = std::move(rel);
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
        for (auto& th : pool) th.join();
    }
    res.examined = space.size();
    std::optional<Key> key;
    for (const auto& b : best)
        if (b.key && (!key || *b.key < *key)) key = b.key;
    if (!key) return res;
    std::vector<TupleSet> all;
    for (auto& b : best)
        if (b.key == key) all.insert(all.end(), b.found.begin(), b.found.end());
    std::sort(all.begin(), all.end(), detail::tuple_list_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (!o.all_minimal) all.resize(1);
    if (all.size() > o.max_outcomes) all.resize(o.max_outcomes);
    res.status = OutcomeStatus::ok;
    for (auto& rel : all) {
        auto out = detail::make_outcome(t, Superiority{std::move(rel)}, Strategy::search, goals);
        out.examined = res.examined;
        out.required = res.required;
        res.outcomes.push_back(std::move(out));
    }
    return res;
}

// ---------------------------------------------------------------- targeted edits

namespace detail {

// Mutable superiority with the tags of the current state.
class Workbench {
public:
    Workbench(const Theory& t, bool invert) : t_(t), sup_(t.superiority()), labels_(t.labels()), invert_(invert) {
        refresh();
    }

    void refresh() { tags_ = compute_tags(t_.with_superiority(sup_)); }
    const Superiority& sup() const { return sup_; }
    bool plus(Family f, const Literal& l) const { return tags_.proves({f, Sign::plus}, l); }
    bool minus(Family f, const Literal& l) const { return tags_.proves({f, Sign::minus}, l); }

    bool applicable(const Rule& r) const {
        return std::all_of(r.antecedent.begin(), r.antecedent.end(), [&](const Literal& a) { return plus(Family::Partial, a); });
    }
    bool discarded(const Rule& r) const {
        return std::any_of(r.antecedent.begin(), r.antecedent.end(), [&](const Literal& a) { return minus(Family::Partial, a); });
    }
    bool beats(const Rule& w, const Rule& l) const { return sup_.contains(w.label, l.label); }
    void erase(const Rule& w, const Rule& l) { sup_.tuples.erase({w.label, l.label}); }

    // w > l, inverting l > w when allowed; refuses anything that closes a cycle.
    bool prefer(const Rule& w, const Rule& l) {
        if (beats(w, l)) return true;
        bool inverted = false;
        if (beats(l, w)) {
            if (!invert_) return false;
            erase(l, w);
            inverted = true;
        }
        sup_.tuples.insert({w.label, l.label});
        if (check_acyclic(sup_, labels_)) return true;
        sup_.tuples.erase({w.label, l.label});
        if (inverted) sup_.tuples.insert({l.label, w.label});
        return false;
    }

    std::vector<Rule> applicable_rules(const Literal& q) const {
        std::vector<Rule> out;
        for (const auto& r : rules_for(t_, q))
            if (applicable(r)) out.push_back(r);
        return out;
    }

    // Walks a chain for x back to where it fails and makes every step win.
    bool strengthen(const Literal& x, std::set<Literal>& path) {
        if (plus(Family::Partial, x)) return true;
        if (path.count(x)) return false;
        std::vector<Rule> cands;
        for (const auto& r : rules_for(t_, x))
            if (std::all_of(r.antecedent.begin(), r.antecedent.end(),
                            [&](const Literal& a) { return plus(Family::SigmaChain, a); }))
                cands.push_back(r);
        if (cands.empty()) return false;
        auto rank = [&](const Rule& r) {
            bool sig = std::all_of(r.antecedent.begin(), r.antecedent.end(),
                                   [&](const Literal& a) { return plus(Family::SigmaSupport, a); });
            return applicable(r) ? 0 : sig ? 1 : 2;
        };
        std::stable_sort(cands.begin(), cands.end(), [&](const Rule& a, const Rule& b) { return rank(a) < rank(b); });
        const Rule r = cands.front();
        path.insert(x);
        for (const auto& y : r.antecedent)
            if (!plus(Family::Partial, y)) strengthen(y, path);
        for (const auto& s : rules_for(t_, complement(x)))
            if (!discarded(s)) prefer(r, s);
        refresh();
        path.erase(x);
        return plus(Family::Partial, x);
    }

    // Makes x refuted: win for ~x if it has a chain, else attack a premise.
    bool block(const Literal& x, std::set<Literal>& path) {
        if (minus(Family::Partial, x)) return true;
        if (path.count(x)) return false;
        path.insert(x);
        if (plus(Family::SigmaChain, complement(x))) {
            // a tie is enough: drop what lets x's rules beat the applicable rules for ~x
            for (const auto& s : applicable_rules(complement(x)))
                for (const auto& r : rules_for(t_, x))
                    if (beats(r, s)) erase(r, s);
            refresh();
            if (!minus(Family::Partial, x)) strengthen(complement(x), path);
        } else {
            for (const auto& r : rules_for(t_, x)) {
                if (discarded(r)) continue;
                std::optional<Literal> pick;
                for (const auto& y : r.antecedent) {
                    if (plus(Family::Phi, y)) continue;
                    if (!pick || (plus(Family::SigmaChain, complement(y)) && !plus(Family::SigmaChain, complement(*pick))))
                        pick = y;
                }
                if (pick) block(*pick, path);
            }
        }
        path.erase(x);
        return minus(Family::Partial, x);
    }

    const Theory& theory() const { return t_; }
    Superiority& mutable_sup() { return sup_; }

private:
    const Theory& t_;
    Superiority sup_;
    std::set<std::string, NaturalLess> labels_;
    bool invert_;
    TagAssignment tags_;
};

// One chain for ~p beats every applicable rule for p.
inline std::optional<Superiority> single_winner(const Theory& t, const Literal& p, const std::optional<std::string>& winner) {
    Workbench wb(t, true);
    auto N = wb.applicable_rules(complement(p));
    auto P = wb.applicable_rules(p);
    if (N.empty()) return std::nullopt;
    const Rule* w = &N.front();
    if (winner) {
        auto it = std::find_if(N.begin(), N.end(), [&](const Rule& r) { return r.label == *winner; });
        if (it == N.end()) return std::nullopt;
        w = &*it;
    }
    for (const auto& r : P)
        if (!wb.prefer(*w, r)) return std::nullopt;
    return wb.sup();
}

// Inversions spread over several chains for ~p.
inline std::optional<Superiority> team_defeater(const Theory& t, const Literal& p) {
    Workbench wb(t, true);
    auto N = wb.applicable_rules(complement(p));
    auto P = wb.applicable_rules(p);
    std::size_t pls = 0;
    for (const auto& r : P)
        if (std::any_of(N.begin(), N.end(), [&](const Rule& n) { return wb.beats(r, n); })) ++pls;
    if (N.empty()) return std::nullopt;
    // |P_ls| >= |N|: the whole of N; otherwise the first |P_ls| chains of N
    std::vector<Rule> S(N.begin(), N.begin() + static_cast<std::ptrdiff_t>(pls >= N.size() || pls == 0 ? N.size() : pls));
    for (const auto& n : S)
        for (const auto& r : P)
            if (wb.beats(r, n) && !wb.prefer(n, r)) return std::nullopt;
    std::size_t turn = 0;
    for (const auto& r : P) {
        if (std::any_of(S.begin(), S.end(), [&](const Rule& n) { return wb.beats(n, r); })) continue;
        if (!wb.prefer(S[turn++ % S.size()], r)) return std::nullopt;
    }
    return wb.sup();
}

inline std::optional<Superiority> targeted_edit(const Theory& t, const RevisionGoal& g, InstanceClass inst,
                                                Strategy strategy, const std::optional<std::string>& winner) {
    const Literal& p = g.target;
    const Literal np = complement(p);
    using I = InstanceClass;
    std::set<Literal> path;
    switch (inst) {
        case I::attack_premises: {
            Workbench wb(t, true);
            wb.block(p, path);
            return wb.sup();
        }
        case I::omega_plus_sigma_minus:
            if (g.kind == GoalKind::revise)
                return strategy == Strategy::team_defeater ? team_defeater(t, p) : single_winner(t, p, winner);
            else {
                // erase the priorities that beat applicable chains for ~p at the last step
                Workbench wb(t, false);
                for (const auto& s : wb.applicable_rules(np))
                    for (const auto& r : rules_for(t, p))
                        if (wb.beats(r, s)) wb.erase(r, s);
                return wb.sup();
            }
        case I::omega_minus_sigma_plus:
        case I::omega_minus_sigma_minus: {
            Workbench wb(t, inst == I::omega_minus_sigma_minus);
            wb.strengthen(np, path);
            return wb.sup();
        }
        case I::third_omega_plus_sigma_plus: {
            Workbench wb(t, false);
            std::optional<Rule> pick;
            for (const auto& r : wb.applicable_rules(p)) {
                auto opp = wb.applicable_rules(np);
                if (std::none_of(opp.begin(), opp.end(), [&](const Rule& s) { return wb.beats(s, r); })) {
                    pick = r;
                    break;
                }
            }
            if (!pick) return std::nullopt;
            for (const auto& s : wb.applicable_rules(np))
                if (!wb.prefer(*pick, s)) return std::nullopt;
            return wb.sup();
        }
        case I::third_omega_minus_sigma_plus:
        case I::third_omega_minus_sigma_minus: {
            Workbench wb(t, inst == I::third_omega_minus_sigma_minus);
            wb.strengthen(p, path);
            return wb.sup();
        }
        default: return std::nullopt;
    }
}

}  // namespace detail

// ---------------------------------------------------------------- operators

struct RevisionOptions {
    Strategy strategy = Strategy::targeted;
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
    std::optional<std::string> winner;  // single_winner: rule for ~p to promote
    bool relaxed_precondition = false;
};

inline RevisionOutcome apply_revision(const Theory& t, const RevisionGoal& g, const RevisionOptions& o = {}) {
    require_revisable(t);
    const GoalTag goal = goal_tag(g);
    const InstanceClass inst = classify_instance(t, compute_tags(t), g, o.relaxed_precondition);
    RevisionOutcome out;
    out.instance = inst;
    out.theory = t;
    out.new_superiority = t.superiority();
    if (inst == InstanceClass::precondition_not_met) {
        out.status = OutcomeStatus::precondition_not_met;
        return out;
    }
    if (is_infeasible(inst)) return out;
    bool fell_back = false;
    if (o.strategy != Strategy::search && inst != InstanceClass::omega_plus_sigma_plus_impossible) {
        auto sup = detail::targeted_edit(t, g, inst, o.strategy, o.winner);
        if (sup && check_acyclic(*sup, t.labels())) {
            Strategy how = Strategy::targeted;
            if (g.kind == GoalKind::revise && inst == InstanceClass::omega_plus_sigma_minus)
                how = o.strategy == Strategy::team_defeater ? Strategy::team_defeater : Strategy::single_winner;
            auto res = detail::make_outcome(t, *sup, how, {goal});
            if (res.verified) {
                res.instance = inst;
                return res;
            }
        }
        fell_back = true;
    }
    SearchOptions so;
    so.budget = o.budget;
    so.jobs = o.jobs;
    auto found = search_revision(t, {goal}, so);
    if (found.status != OutcomeStatus::ok) {
        out.status = found.status;
        out.examined = found.examined;
        out.required = found.required;
        out.fell_back = fell_back;
        return out;
    }
    auto res = std::move(found.outcomes.front());
    res.instance = inst;
    res.fell_back = fell_back;
    return res;
}

inline RevisionOutcome contract(const Theory& t, const Literal& p, const RevisionOptions& o = {}) {
    return apply_revision(t, {GoalKind::contract, p}, o);
}
inline RevisionOutcome revise(const Theory& t, const Literal& p, const RevisionOptions& o = {}) {
    return apply_revision(t, {GoalKind::revise, p}, o);
}
inline RevisionOutcome expand(const Theory& t, const Literal& p, const RevisionOptions& o = {}) {
    return apply_revision(t, {GoalKind::expand, p}, o);
}

// Status, instance, strategy, sorted diff lines, outcome theory.
inline std::string format_outcome(const RevisionOutcome& o) {
    std::string s = "status: " + std::string(to_string(o.status)) + "\n";
    s += "instance: " + std::string(o.instance ? to_string(*o.instance) : "-") + "\n";
    if (o.status == OutcomeStatus::ok) {
        s += "strategy: " + std::string(to_string(o.strategy)) + (o.fell_back ? " (targeted edit did not verify)" : "") + "\n";
        s += std::string("verified: ") + (o.verified ? "true" : "false") + "\n";
        for (const auto& [w, l] : o.removed) s += "- (" + w + "," + l + ")\n";
        for (const auto& [w, l] : o.added) s += "+ (" + w + "," + l + ")\n";
        s += "superiority: " + format_superiority(o.new_superiority) + "\n";
        s += serialize_theory(o.theory);
    } else if (o.status == OutcomeStatus::exhausted) {
        s += "candidates: " + std::to_string(o.required) + "\n";
    }
    return s;
}

}  // namespace defrev
