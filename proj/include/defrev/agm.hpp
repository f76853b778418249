#pragma once

#include <functional>
#include <map>

#include "revision.hpp"
#include "text_format.hpp"

namespace defrev {

struct AgmError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------- operators

struct AgmOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
    bool all_minimal = false;          // every minimal outcome instead of the tie-broken one
    std::size_t max_combinations = 256;  // cap on enumerated operator choices per check
};

struct AgmResult {
    OutcomeStatus status = OutcomeStatus::infeasible;
    std::vector<Theory> theories;  // front() is the deterministic outcome

    bool ok() const { return status == OutcomeStatus::ok; }
    const Theory& theory() const { return theories.front(); }
    BeliefSet beliefs() const { return belief_set(theories.front()); }
};

namespace detail {

enum class AgmOp { contract, revise, expand };

inline std::vector<GoalTag> agm_goals(AgmOp op, const std::vector<Literal>& targets) {
    std::vector<GoalTag> g;
    for (const auto& l : targets)
        g.push_back({{Family::Partial, op == AgmOp::contract ? Sign::minus : Sign::plus}, l});
    return g;
}

// Contraction: every target believed. Revision: +Σ for every target, and a
// single target must be contradicted; with several, each is contradicted or
// open and at least one is contradicted. Expansion: every target open, with +Σ.
inline bool agm_precondition(const TagAssignment& tags, AgmOp op, const std::vector<Literal>& targets) {
    auto pd = [&](const Literal& l) { return tags.proves({Family::Partial, Sign::plus}, l); };
    auto md = [&](const Literal& l) { return tags.proves({Family::Partial, Sign::minus}, l); };
    auto chain = [&](const Literal& l) { return tags.proves({Family::SigmaChain, Sign::plus}, l); };
    bool any_contradicted = false;
    for (const auto& l : targets) {
        const Literal n = complement(l);
        switch (op) {
            case AgmOp::contract:
                if (!pd(l)) return false;
                break;
            case AgmOp::revise:
                if (!chain(l)) return false;
                if (pd(n)) any_contradicted = true;
                else if (targets.size() == 1 || !(md(l) && md(n))) return false;
                break;
            case AgmOp::expand:
                if (!(md(l) && md(n) && chain(l))) return false;
                break;
        }
    }
    return op != AgmOp::revise || any_contradicted;
}

inline AgmResult agm_search(const Theory& t, const std::vector<GoalTag>& goals, const AgmOptions& o) {
    require_revisable(t);
    AgmResult r;
    if (detail::goal_holds(compute_tags(t, goal_mask(goals)), goals)) {
        r.status = OutcomeStatus::ok;
        r.theories.push_back(t);
        return r;
    }
    SearchOptions so;
    so.budget = o.budget;
    so.jobs = o.jobs;
    so.all_minimal = o.all_minimal;
    auto found = search_revision(t, goals, so);
    r.status = found.status;
    for (auto& x : found.outcomes) r.theories.push_back(std::move(x.theory));
    return r;
}

// Already-satisfied goals leave the theory alone; otherwise the precondition
// gates (unless relaxed) and a minimal-change search does the work.
inline AgmResult agm_apply(const Theory& t, AgmOp op, const std::vector<Literal>& targets, bool relaxed,
                           const AgmOptions& o) {
    if (targets.empty()) throw AgmError("no target literals");
    const auto goals = agm_goals(op, targets);
    const auto tags = compute_tags(t);
    if (detail::goal_holds(tags, goals)) return agm_search(t, goals, o);
    if (!relaxed && !agm_precondition(tags, op, targets)) {
        AgmResult r;
        r.status = OutcomeStatus::precondition_not_met;
        return r;
    }
    return agm_search(t, goals, o);
}

}  // namespace detail

// Contraction by a set C makes every member -∂; revision and expansion make every member +∂.
inline AgmResult agm_contract(const Theory& t, const std::vector<Literal>& c, const AgmOptions& o = {}) {
    return detail::agm_apply(t, detail::AgmOp::contract, c, false, o);
}
inline AgmResult agm_revise(const Theory& t, const std::vector<Literal>& c, const AgmOptions& o = {}) {
    return detail::agm_apply(t, detail::AgmOp::revise, c, false, o);
}
inline AgmResult agm_expand(const Theory& t, const std::vector<Literal>& c, const AgmOptions& o = {}) {
    return detail::agm_apply(t, detail::AgmOp::expand, c, false, o);
}
inline AgmResult agm_contract(const Theory& t, const Literal& p, const AgmOptions& o = {}) { return agm_contract(t, std::vector{p}, o); }
inline AgmResult agm_revise(const Theory& t, const Literal& p, const AgmOptions& o = {}) { return agm_revise(t, std::vector{p}, o); }
inline AgmResult agm_expand(const Theory& t, const Literal& p, const AgmOptions& o = {}) { return agm_expand(t, std::vector{p}, o); }

// ---------------------------------------------------------------- postulates

enum class PostulateFamily { contraction, revision, expansion, identity };

inline const char* to_string(PostulateFamily f) {
    switch (f) {
        case PostulateFamily::contraction: return "contraction";
        case PostulateFamily::revision: return "revision";
        case PostulateFamily::expansion: return "expansion";
        case PostulateFamily::identity: return "identity";
    }
    return "?";
}

struct PostulateId {
    PostulateFamily family = PostulateFamily::contraction;
    std::string index;
    friend bool operator==(const PostulateId&, const PostulateId&) = default;
};

inline const std::vector<PostulateId>& postulate_catalogue() {
    static const std::vector<PostulateId> c = [] {
        std::vector<PostulateId> v;
        for (const char* s : {"K-1", "K-2", "K-3", "K-4", "K-4'", "K-5", "K-6", "K-7", "K-8"})
            v.push_back({PostulateFamily::contraction, s});
        for (int i = 1; i <= 8; ++i) v.push_back({PostulateFamily::revision, "K*" + std::to_string(i)});
        for (int i = 1; i <= 6; ++i) v.push_back({PostulateFamily::expansion, "K+" + std::to_string(i)});
        v.push_back({PostulateFamily::identity, "LI"});
        v.push_back({PostulateFamily::identity, "HI"});
        return v;
    }();
    return c;
}

inline PostulateId parse_postulate(std::string_view s) {
    for (const auto& id : postulate_catalogue())
        if (id.index == s) return id;
    throw AgmError("unknown postulate '" + std::string(s) + "'");
}

enum class VerdictStatus { holds, violated, not_applicable, infeasible_operation };

inline const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::holds: return "holds";
        case VerdictStatus::violated: return "violated";
        case VerdictStatus::not_applicable: return "n/a";
        case VerdictStatus::infeasible_operation: return "infeasible";
    }
    return "?";
}

// One named theory in a postulate ("D", "D-p", "(D-p)+p", ...) with its belief set.
struct WitnessSide {
    std::string name;
    Theory theory;
    BeliefSet beliefs;
};

struct Witness {
    std::vector<WitnessSide> sides;

    const WitnessSide& operator[](std::string_view name) const {
        for (const auto& s : sides)
            if (s.name == name) return s;
        throw AgmError("witness has no side '" + std::string(name) + "'");
    }
    const BeliefSet& bs(std::string_view name) const { return (*this)[name].beliefs; }
};

struct Verdict {
    VerdictStatus status = VerdictStatus::holds;
    std::vector<Witness> witnesses;  // nonempty iff violated; one per violating choice of outcomes
    std::string detail;              // why n/a or infeasible, or which premise failed
    std::size_t combinations = 0;    // operator choices examined

    const Witness* witness() const { return witnesses.empty() ? nullptr : &witnesses.front(); }
};

struct PostulateInput {
    Literal p;
    std::optional<Literal> q;
    std::optional<Theory> other;  // D' for K+5
};

namespace detail {

struct InfeasibleStep {
    std::string what;
};

// Runs the operators of one postulate under a fixed choice script. Calls with
// the same goals on the same theory are the same choice within a run.
class ChoiceRun {
public:
    ChoiceRun(const AgmOptions& o, std::map<std::string, AgmResult>& cache, const std::vector<std::size_t>& script)
        : o_(o), cache_(cache), script_(script) {}

    Theory apply(AgmOp op, const Theory& t, const std::vector<Literal>& targets, bool relaxed, const std::string& name,
                 bool identity_if_infeasible = false) {
        const auto goals = agm_goals(op, targets);
        const auto tags = compute_tags(t);
        const bool already = goal_holds(tags, goals);
        if (!already && !relaxed && !agm_precondition(tags, op, targets))
            throw InfeasibleStep{name + ": precondition not met"};
        std::string key = serialize_theory(t) + "|" + std::to_string(op == AgmOp::contract);
        for (const auto& l : targets) key += "|" + l.str();
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, agm_search(t, goals, o_)).first;
        const AgmResult& r = it->second;
        if (!r.ok()) {
            if (identity_if_infeasible && r.status == OutcomeStatus::infeasible) return t;
            throw InfeasibleStep{name + ": " + to_string(r.status)};
        }
        auto m = memo_.find(key);
        if (m != memo_.end()) return r.theories[m->second];
        const std::size_t pos = arity_.size();
        const std::size_t pick = pos < script_.size() ? script_[pos] : 0;
        arity_.push_back(r.theories.size());
        memo_.emplace(key, pick);
        return r.theories.at(pick);
    }

    const std::vector<std::size_t>& arity() const { return arity_; }

private:
    const AgmOptions& o_;
    std::map<std::string, AgmResult>& cache_;
    const std::vector<std::size_t>& script_;
    std::vector<std::size_t> arity_;
    std::map<std::string, std::size_t> memo_;
};

inline bool subset(const std::set<Literal>& a, const std::set<Literal>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline std::set<Literal> meet(const std::set<Literal>& a, const std::set<Literal>& b) {
    std::set<Literal> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()), std::less<Literal>{});
    return out;
}
inline bool bs_subset(const BeliefSet& a, const BeliefSet& b) {
    return subset(a.believed, b.believed) && subset(a.disbelieved, b.disbelieved);
}
inline bool is_acyclic(const Theory& t) { return check_acyclic(t.superiority(), t.labels()); }

struct Postulate {
    bool needs_q = false, needs_other = false, not_applicable = false;
    std::function<std::optional<std::string>(const Theory&, const PostulateInput&)> vacuous;  // reason, when the premise fails
    std::function<void(ChoiceRun&, const Theory&, const PostulateInput&, Witness&)> build;
    std::function<bool(const Witness&, const PostulateInput&)> holds;
};

inline void add_side(Witness& w, std::string name, Theory t) {
    BeliefSet b = belief_set(t);
    w.sides.push_back({std::move(name), std::move(t), std::move(b)});
}

inline const std::map<std::string, Postulate>& postulate_table() {
    using L = std::vector<Literal>;
    static const std::map<std::string, Postulate> table = [] {
        std::map<std::string, Postulate> m;
        auto believed = [](const Theory& t, const Literal& l) { return belief_set(t).believed.count(l) > 0; };
        auto disbelieved = [](const Theory& t, const Literal& l) { return belief_set(t).disbelieved.count(l) > 0; };
        auto same_literal = [](const Theory&, const PostulateInput& in) -> std::optional<std::string> {
            if (*in.q == in.p) return std::nullopt;
            return "p and q are different literals";
        };
        auto contract_p = [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
            add_side(w, "D", d);
            add_side(w, "D-p", r.apply(AgmOp::contract, d, L{in.p}, false, "D-p"));
        };
        auto revise_p = [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
            add_side(w, "D", d);
            add_side(w, "D*p", r.apply(AgmOp::revise, d, L{in.p}, false, "D*p"));
        };
        auto expand_p = [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
            add_side(w, "D", d);
            add_side(w, "D+p", r.apply(AgmOp::expand, d, L{in.p}, false, "D+p"));
        };

        // contraction
        m["K-1"] = {false, false, false, nullptr, contract_p, [](const Witness& w, const PostulateInput&) { return is_acyclic(w["D-p"].theory); }};
        m["K-2"] = {false, false, false, nullptr, contract_p, [](const Witness& w, const PostulateInput&) {
                        return subset(w.bs("D-p").believed, w.bs("D").believed) &&
                               subset(w.bs("D").disbelieved, w.bs("D-p").disbelieved);
                    }};
        m["K-3"] = {false, false, false,
                    [=](const Theory& d, const PostulateInput& in) -> std::optional<std::string> {
                        if (disbelieved(d, in.p)) return std::nullopt;
                        return "p is not disbelieved in D";
                    },
                    contract_p, [](const Witness& w, const PostulateInput&) { return w.bs("D-p") == w.bs("D"); }};
        // An impossible contraction leaves D as it is, which is what the premise is about.
        auto k4 = [](Family need) {
            return Postulate{false, false, false, nullptr,
                             [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
                                 add_side(w, "D", d);
                                 add_side(w, "D-p", r.apply(AgmOp::contract, d, L{in.p}, false, "D-p", true));
                             },
                             [need](const Witness& w, const PostulateInput& in) {
                                 if (!w.bs("D-p").believed.count(in.p)) return true;
                                 return proves(w["D"].theory, {need, Sign::plus}, in.p);
                             }};
        };
        m["K-4"] = k4(Family::Delta);
        m["K-4'"] = k4(Family::Phi);
        m["K-5"] = {false, false, false,
                    [=](const Theory& d, const PostulateInput& in) -> std::optional<std::string> {
                        if (believed(d, in.p)) return std::nullopt;
                        return "p is not believed in D";
                    },
                    [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
                        add_side(w, "D", d);
                        Theory c = r.apply(AgmOp::contract, d, L{in.p}, false, "D-p");
                        add_side(w, "D-p", c);
                        add_side(w, "(D-p)+p", r.apply(AgmOp::expand, c, L{in.p}, true, "(D-p)+p"));
                    },
                    [](const Witness& w, const PostulateInput&) { return bs_subset(w.bs("D"), w.bs("(D-p)+p")); }};
        m["K-6"] = {true, false, false, same_literal,
                    [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
                        add_side(w, "D", d);
                        add_side(w, "D-p", r.apply(AgmOp::contract, d, L{in.p}, false, "D-p"));
                        add_side(w, "D-q", r.apply(AgmOp::contract, d, L{*in.q}, false, "D-q"));
                    },
                    [](const Witness& w, const PostulateInput&) { return w.bs("D-p") == w.bs("D-q"); }};
        auto contract_pq = [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
            add_side(w, "D", d);
            add_side(w, "D-p", r.apply(AgmOp::contract, d, L{in.p}, false, "D-p"));
            add_side(w, "D-q", r.apply(AgmOp::contract, d, L{*in.q}, false, "D-q"));
            add_side(w, "D-pq", r.apply(AgmOp::contract, d, L{in.p, *in.q}, false, "D-pq"));
        };
        m["K-7"] = {true, false, false, nullptr, contract_pq, [](const Witness& w, const PostulateInput&) {
                        const auto &a = w.bs("D-p"), &b = w.bs("D-q"), &c = w.bs("D-pq");
                        return subset(meet(a.believed, b.believed), c.believed) &&
                               subset(c.disbelieved, meet(a.disbelieved, b.disbelieved));
                    }};
        m["K-8"] = {true, false, false, nullptr, contract_pq, [](const Witness& w, const PostulateInput& in) {
                        const auto &a = w.bs("D-p"), &c = w.bs("D-pq");
                        if (!c.disbelieved.count(in.p)) return true;
                        return subset(c.believed, a.believed) && subset(a.disbelieved, c.disbelieved);
                    }};

        // revision: D*p makes p believed
        m["K*1"] = {false, false, false, nullptr, revise_p, [](const Witness& w, const PostulateInput&) { return is_acyclic(w["D*p"].theory); }};
        m["K*2"] = {false, false, false, nullptr, revise_p,
                    [](const Witness& w, const PostulateInput& in) { return w.bs("D*p").believed.count(in.p) > 0; }};
        m["K*3"] = {false, false, false, nullptr,
                    [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
                        add_side(w, "D", d);
                        add_side(w, "D*p", r.apply(AgmOp::revise, d, L{in.p}, false, "D*p"));
                        // under the revision precondition expansion proper cannot apply; both reach +∂p
                        add_side(w, "D+p", r.apply(AgmOp::expand, d, L{in.p}, true, "D+p"));
                    },
                    [](const Witness& w, const PostulateInput&) { return subset(w.bs("D*p").believed, w.bs("D+p").believed); }};
        m["K*4"] = {false, false, false,
                    [=](const Theory& d, const PostulateInput& in) -> std::optional<std::string> {
                        if (disbelieved(d, complement(in.p))) return std::nullopt;
                        return "~p is not disbelieved in D";
                    },
                    [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
                        add_side(w, "D", d);
                        add_side(w, "D*p", r.apply(AgmOp::revise, d, L{in.p}, true, "D*p"));
                        add_side(w, "D+p", r.apply(AgmOp::expand, d, L{in.p}, false, "D+p"));
                    },
                    [](const Witness& w, const PostulateInput&) { return subset(w.bs("D+p").believed, w.bs("D*p").believed); }};
        m["K*5"] = {false, false, false, nullptr, revise_p, [](const Witness& w, const PostulateInput&) {
                        for (const auto& l : w.bs("D*p").believed)
                            if (w.bs("D*p").believed.count(complement(l))) return false;
                        return true;
                    }};
        m["K*6"] = {true, false, false, same_literal,
                    [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
                        add_side(w, "D", d);
                        add_side(w, "D*p", r.apply(AgmOp::revise, d, L{in.p}, false, "D*p"));
                        add_side(w, "D*q", r.apply(AgmOp::revise, d, L{*in.q}, false, "D*q"));
                    },
                    [](const Witness& w, const PostulateInput&) { return w.bs("D*p").believed == w.bs("D*q").believed; }};
        auto revise_pq = [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
            add_side(w, "D", d);
            add_side(w, "D*pq", r.apply(AgmOp::revise, d, L{in.p, *in.q}, false, "D*pq"));
            Theory dp = r.apply(AgmOp::revise, d, L{in.p}, false, "D*p");
            add_side(w, "D*p", dp);
            add_side(w, "(D*p)+q", r.apply(AgmOp::expand, dp, L{*in.q}, true, "(D*p)+q"));
        };
        m["K*7"] = {true, false, false, nullptr, revise_pq, [](const Witness& w, const PostulateInput&) {
                        const auto &a = w.bs("D*pq"), &b = w.bs("(D*p)+q");
                        return subset(a.believed, b.believed) && subset(b.disbelieved, a.disbelieved);
                    }};
        m["K*8"] = {true, false, false, nullptr, revise_pq, [](const Witness& w, const PostulateInput& in) {
                        if (!w.bs("D*p").disbelieved.count(complement(*in.q))) return true;
                        const auto &a = w.bs("D*pq"), &b = w.bs("(D*p)+q");
                        return subset(b.believed, a.believed) && subset(a.disbelieved, b.disbelieved);
                    }};

        // expansion
        m["K+1"] = {false, false, false, nullptr, expand_p, [](const Witness& w, const PostulateInput&) { return is_acyclic(w["D+p"].theory); }};
        m["K+2"] = {false, false, false, nullptr, expand_p,
                    [](const Witness& w, const PostulateInput& in) { return w.bs("D+p").believed.count(in.p) > 0; }};
        // Read jointly: both speak about a T that already believes p.
        auto already = [=](const Theory& d, const PostulateInput& in) -> std::optional<std::string> {
            if (believed(d, in.p)) return std::nullopt;
            return "p is not believed in D";
        };
        m["K+3"] = {false, false, false, already, expand_p, [](const Witness& w, const PostulateInput&) {
                        return subset(w.bs("D").believed, w.bs("D+p").believed) &&
                               subset(w.bs("D+p").disbelieved, w.bs("D").disbelieved);
                    }};
        m["K+4"] = {false, false, false, already, expand_p, [](const Witness& w, const PostulateInput&) {
                        return subset(w.bs("D+p").believed, w.bs("D").believed) &&
                               subset(w.bs("D").disbelieved, w.bs("D+p").disbelieved);
                    }};
        m["K+5"] = {false, true, false,
                    [](const Theory& d, const PostulateInput& in) -> std::optional<std::string> {
                        if (subset(belief_set(d).believed, belief_set(*in.other).believed)) return std::nullopt;
                        return "BS+(D) is not contained in BS+(D')";
                    },
                    [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
                        add_side(w, "D", d);
                        add_side(w, "D'", *in.other);
                        add_side(w, "D+p", r.apply(AgmOp::expand, d, L{in.p}, false, "D+p"));
                        add_side(w, "D'+p", r.apply(AgmOp::expand, *in.other, L{in.p}, false, "D'+p"));
                    },
                    [](const Witness& w, const PostulateInput&) { return subset(w.bs("D+p").believed, w.bs("D'+p").believed); }};
        m["K+6"] = {false, false, true, nullptr, nullptr, nullptr};

        // identities
        m["LI"] = {false, false, false, nullptr,
                   [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
                       const Literal np = complement(in.p);
                       add_side(w, "D", d);
                       add_side(w, "D*p", r.apply(AgmOp::revise, d, L{in.p}, false, "D*p"));
                       Theory c = r.apply(AgmOp::contract, d, L{np}, false, "D-~p");
                       add_side(w, "D-~p", c);
                       add_side(w, "(D-~p)+p", r.apply(AgmOp::expand, c, L{in.p}, true, "(D-~p)+p"));
                   },
                   [](const Witness& w, const PostulateInput&) { return w.bs("D*p") == w.bs("(D-~p)+p"); }};
        m["HI"] = {false, false, false, nullptr,
                   [](ChoiceRun& r, const Theory& d, const PostulateInput& in, Witness& w) {
                       add_side(w, "D", d);
                       add_side(w, "D-p", r.apply(AgmOp::contract, d, L{in.p}, false, "D-p"));
                       add_side(w, "D*~p", r.apply(AgmOp::revise, d, L{complement(in.p)}, false, "D*~p"));
                   },
                   [](const Witness& w, const PostulateInput&) {
                       const auto &c = w.bs("D-p"), &v = w.bs("D*~p"), &d = w.bs("D");
                       return c.believed == meet(v.believed, d.believed) && c.disbelieved == meet(v.disbelieved, d.disbelieved);
                   }};
        return m;
    }();
    return table;
}

}  // namespace detail

// Builds both sides of the postulate from operator runs and compares them.
// With all_minimal every combination of minimal operator outcomes is tried and
// each violating one is kept as a witness.
inline Verdict check_postulate(const PostulateId& id, const Theory& t, const PostulateInput& in, const AgmOptions& o = {}) {
    const auto& table = detail::postulate_table();
    auto it = table.find(id.index);
    if (it == table.end()) throw AgmError("unknown postulate '" + id.index + "'");
    const detail::Postulate& post = it->second;
    Verdict v;
    if (post.not_applicable) {
        v.status = VerdictStatus::not_applicable;
        v.detail = "no smallest belief set in a nonmonotonic setting";
        return v;
    }
    if ((post.needs_q && !in.q) || (post.needs_other && !in.other)) {
        v.status = VerdictStatus::not_applicable;
        v.detail = post.needs_q ? "needs a second literal" : "needs a second theory";
        return v;
    }
    require_revisable(t);
    if (in.other) require_revisable(*in.other);
    if (post.vacuous) {
        if (auto why = post.vacuous(t, in)) {
            v.detail = "premise fails: " + *why;
            return v;
        }
    }
    std::map<std::string, AgmResult> cache;
    std::vector<std::size_t> script;
    bool any_run = false;
    std::string last_failure;
    for (;;) {
        detail::ChoiceRun run(o, cache, script);
        Witness w;
        try {
            post.build(run, t, in, w);
            any_run = true;
            if (!post.holds(w, in)) v.witnesses.push_back(std::move(w));
        } catch (const detail::InfeasibleStep& e) {
            last_failure = e.what;
        }
        ++v.combinations;
        if (!o.all_minimal || v.combinations >= o.max_combinations) break;
        // next script: bump the deepest choice that still has alternatives
        const auto& ar = run.arity();
        script.resize(ar.size(), 0);
        std::size_t i = ar.size();
        while (i > 0 && script[i - 1] + 1 >= ar[i - 1]) --i;
        if (i == 0) break;
        script.resize(i);
        ++script[i - 1];
    }
    if (!any_run) {
        v.status = VerdictStatus::infeasible_operation;
        v.detail = last_failure;
    } else if (!v.witnesses.empty()) {
        v.status = VerdictStatus::violated;
    }
    return v;
}

inline Verdict check_levi(const Theory& t, const Literal& p, const AgmOptions& o = {}) {
    return check_postulate(parse_postulate("LI"), t, {p, std::nullopt, std::nullopt}, o);
}
inline Verdict check_harper(const Theory& t, const Literal& p, const AgmOptions& o = {}) {
    return check_postulate(parse_postulate("HI"), t, {p, std::nullopt, std::nullopt}, o);
}

// Recomputes every belief set in the witness from its theory and re-applies the relation.
inline bool witness_violates(const PostulateId& id, const Witness& w, const PostulateInput& in) {
    const auto& table = detail::postulate_table();
    auto it = table.find(id.index);
    if (it == table.end() || !it->second.holds) throw AgmError("postulate '" + id.index + "' has no relation");
    Witness fresh;
    for (const auto& s : w.sides) detail::add_side(fresh, s.name, s.theory);
    return !it->second.holds(fresh, in);
}

inline std::string format_belief_set(const BeliefSet& b) {
    return "BS+ = {" + join_literals(b.believed) + "}\nBS- = {" + join_literals(b.disbelieved) + "}\n";
}

// Theory text per side, each followed by its belief set as comments.
inline std::string format_witness(const Witness& w) {
    std::string s;
    for (const auto& side : w.sides) {
        s += "# " + side.name + "\n" + serialize_theory(side.theory);
        std::istringstream bs(format_belief_set(side.beliefs));
        for (std::string line; std::getline(bs, line);) s += "# " + line + "\n";
        s += "\n";
    }
    return s;
}

struct AuditLine {
    PostulateId id;
    Verdict verdict;
};

inline std::vector<AuditLine> audit(const Theory& t, const PostulateInput& in, const AgmOptions& o = {}) {
    std::vector<AuditLine> out;
    for (const auto& id : postulate_catalogue()) out.push_back({id, check_postulate(id, t, in, o)});
    return out;
}

}  // namespace defrev
