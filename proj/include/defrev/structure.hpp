#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "engine.hpp"

namespace defrev {

// ---------------------------------------------------------------- dependency

namespace detail {

// Literals (ids) that depend on target (-1: a literal outside the theory): least set containing target and
// every non-fact a whose every rule mentions target or a member.
inline std::vector<char> dependents_of(const CompiledTheory& ct, int target) {
    const int n = static_cast<int>(ct.size());
    std::vector<char> dep(n, 0);
    if (target >= 0) dep[target] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a) {
            if (dep[a] || ct.fact[a]) continue;
            bool all = true;
            for (int r : ct.heads[a]) {
                bool hit = false;
                for (int c : ct.rules[r].body)
                    if (dep[c]) { hit = true; break; }
                if (!hit) { all = false; break; }
            }
            if (all) {
                dep[a] = 1;
                changed = true;
            }
        }
    }
    return dep;
}

}  // namespace detail

inline bool depends_on(const Theory& t, const Literal& a, const Literal& b) {
    if (a == b) return true;
    CompiledTheory ct(t);
    int ia = ct.id(a), ib = ct.id(b);
    if (ia < 0) return true;  // no rules, not a fact: the quantifier is vacuous
    return detail::dependents_of(ct, ib)[ia] != 0;  // ib may be -1: b outside the theory
}

// All ∂-unreachable literals of the universe.
inline std::set<Literal> unreachable_literals(const Theory& t) {
    CompiledTheory ct(t);
    const int n = static_cast<int>(ct.size());
    std::vector<std::vector<char>> dep(n);
    for (int l = 0; l < n; ++l) dep[l] = detail::dependents_of(ct, l);
    // contradictory[r]: two antecedents depending on some l and ~l
    std::vector<char> contradictory(ct.rules.size(), 0);
    for (std::size_t r = 0; r < ct.rules.size(); ++r) {
        const auto& body = ct.rules[r].body;
        for (int l = 0; l < n && !contradictory[r]; l += 2) {
            bool pos = false, neg = false;
            for (int x : body) {
                pos = pos || dep[l][x];
                neg = neg || dep[l + 1][x];
            }
            contradictory[r] = pos && neg;
        }
    }
    std::vector<char> un(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int p = 0; p < n; ++p) {
            if (un[p] || ct.fact[p]) continue;
            bool all = true;
            for (int r : ct.heads[p]) {
                bool blocked = contradictory[r];
                for (int c : ct.rules[r].body) blocked = blocked || un[c];
                if (!blocked) { all = false; break; }
            }
            if (all) {
                un[p] = 1;
                changed = true;
            }
        }
    }
    std::set<Literal> out;
    for (int p = 0; p < n; ++p)
        if (un[p]) out.insert(ct.literals[p]);
    return out;
}

inline bool is_unreachable(const Theory& t, const Literal& p) {
    if (t.facts().count(p)) return false;
    auto u = t.universe();
    if (!u.count(p)) return true;
    return unreachable_literals(t).count(p) != 0;
}

// ---------------------------------------------------------------- decisiveness

struct AtomDependencyGraph {
    std::set<std::string, NaturalLess> nodes;
    std::set<std::pair<std::string, std::string>> edges;  // antecedent atom -> consequent atom

    explicit AtomDependencyGraph(const Theory& t) {
        for (const auto& l : t.universe()) nodes.insert(l.atom);
        for (const auto& r : t.rules())
            for (const auto& a : r.antecedent) edges.insert({a.atom, r.consequent.atom});
    }

    bool acyclic() const {
        std::map<std::string, int> indeg;
        std::map<std::string, std::vector<std::string>> out;
        for (const auto& n : nodes) indeg[n] = 0;
        for (const auto& [a, b] : edges) {
            out[a].push_back(b);
            ++indeg[b];
        }
        std::vector<std::string> ready;
        for (const auto& [n, d] : indeg)
            if (d == 0) ready.push_back(n);
        std::size_t seen = 0;
        while (!ready.empty()) {
            auto n = ready.back();
            ready.pop_back();
            ++seen;
            for (const auto& m : out[n])
                if (--indeg[m] == 0) ready.push_back(m);
        }
        return seen == nodes.size();
    }
};

struct Decisiveness {
    bool decisive = true;
    bool acyclic_atom_graph = false;  // sufficient condition for decisiveness
    std::vector<Literal> undecided;
};

inline Decisiveness is_decisive(const Theory& t) {
    Decisiveness d;
    d.acyclic_atom_graph = AtomDependencyGraph(t).acyclic();
    auto tags = compute_tags(t, bit(Family::Partial));
    for (const auto& l : tags.literals())
        if (tags.status(Family::Partial, l) == Status::undecided) d.undecided.push_back(l);
    d.decisive = d.undecided.empty();
    return d;
}

// ---------------------------------------------------------------- support trees

struct SupportTree {
    Literal root;
    std::optional<std::string> rule;  // nullopt: root is a fact
    std::vector<SupportTree> children;

    friend bool operator==(const SupportTree&, const SupportTree&) = default;

    void collect(std::set<Literal>& out) const {
        out.insert(root);
        for (const auto& c : children) c.collect(out);
    }
    std::set<Literal> literals() const {
        std::set<Literal> out;
        collect(out);
        return out;
    }
    // "r3(c <- r2(a <- r1))" style rendering.
    std::string str() const {
        if (!rule) return root.str();
        std::string out = *rule;
        if (children.empty()) return out;
        out += "(";
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) out += ", ";
            out += children[i].root.str() + " <- " + children[i].str();
        }
        return out + ")";
    }
};

namespace detail {

inline std::vector<SupportTree> trees(const Theory& t, const Literal& q, std::set<Literal>& path, std::size_t limit) {
    std::vector<SupportTree> out;
    if (limit == 0 || path.count(q)) return out;
    if (t.facts().count(q)) out.push_back({q, std::nullopt, {}});
    path.insert(q);
    for (const auto& r : t.rules()) {
        if (out.size() >= limit) break;
        if (r.consequent != q || !r.supports()) continue;
        // cartesian product of the antecedents' trees, truncated at limit
        std::vector<std::vector<SupportTree>> partial{{}};
        for (const auto& a : r.antecedent) {
            auto sub = trees(t, a, path, limit);
            std::vector<std::vector<SupportTree>> next;
            for (const auto& pre : partial)
                for (const auto& s : sub) {
                    if (next.size() >= limit) break;
                    auto v = pre;
                    v.push_back(s);
                    next.push_back(std::move(v));
                }
            partial = std::move(next);
            if (partial.empty()) break;
        }
        for (auto& kids : partial) {
            if (out.size() >= limit) break;
            out.push_back({q, r.label, std::move(kids)});
        }
    }
    path.erase(q);
    return out;
}

}  // namespace detail

// Distinct support trees for q in label order; nonempty iff +Σq.
inline std::vector<SupportTree> support_trees(const Theory& t, const Literal& q, std::size_t limit) {
    std::set<Literal> path;
    return detail::trees(t, q, path, std::max<std::size_t>(limit, 1));
}

// ---------------------------------------------------------------- enumeration

using LabelPair = std::pair<std::string, std::string>;  // first precedes second in label order

inline std::vector<LabelPair> conflicting_pairs(const Theory& t) {
    std::vector<LabelPair> out;
    const auto& rs = t.rules();
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j)
            if (rs[i].consequent == complement(rs[j].consequent)) out.push_back({rs[i].label, rs[j].label});
    return out;
}

struct BudgetExceeded : Error {
    std::uint64_t required;
    explicit BudgetExceeded(std::uint64_t req)
        : Error("enumeration needs " + std::to_string(req) + " candidates, over budget"), required(req) {}
};

inline constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;
inline constexpr std::uint64_t kDefaultBudget = 531441;  // 3^12

inline std::uint64_t pow3(std::size_t k) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (v >= kSaturated / 3) return kSaturated;
        v *= 3;
    }
    return v;
}

// Pair states: 0 incomparable, 1 first beats second, 2 second beats first.
// Tuples between non-conflicting rules (inert) are carried unchanged.
class PairSpace {
public:
    PairSpace(const Theory& t, std::vector<LabelPair> pairs) : theory_(&t), labels_(std::move(pairs)) {
        for (const auto& [a, b] : labels_)
            idx_.push_back({static_cast<int>(*t.index_of(a)), static_cast<int>(*t.index_of(b))});
        for (const auto& [w, l] : t.superiority().tuples) {
            auto in = [&](const LabelPair& p) { return (p.first == w && p.second == l) || (p.first == l && p.second == w); };
            if (std::none_of(labels_.begin(), labels_.end(), in)) inert_.tuples.insert({w, l});
        }
    }

    std::size_t pairs() const { return labels_.size(); }
    const std::vector<LabelPair>& labels() const { return labels_; }
    std::uint64_t size() const { return pow3(labels_.size()); }
    const Superiority& inert() const { return inert_; }

    // State of each pair in the theory's own relation.
    std::vector<int> original_digits() const {
        std::vector<int> d;
        for (const auto& [a, b] : labels_)
            d.push_back(theory_->superiority().contains(a, b) ? 1 : theory_->superiority().contains(b, a) ? 2 : 0);
        return d;
    }

    std::vector<int> digits(std::uint64_t index) const {
        std::vector<int> d(labels_.size());
        for (auto& x : d) {
            x = static_cast<int>(index % 3);
            index /= 3;
        }
        return d;
    }

    Superiority relation(const std::vector<int>& d) const {
        Superiority s = inert_;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] == 1) s.tuples.insert({labels_[i].first, labels_[i].second});
            if (d[i] == 2) s.tuples.insert({labels_[i].second, labels_[i].first});
        }
        return s;
    }

    void load(const std::vector<int>& d, DenseSuperiority& into) const {
        into.clear();
        for (const auto& [w, l] : inert_.tuples) into.set(static_cast<int>(*theory_->index_of(w)), static_cast<int>(*theory_->index_of(l)));
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] == 1) into.set(idx_[i].first, idx_[i].second);
            if (d[i] == 2) into.set(idx_[i].second, idx_[i].first);
        }
    }

    static bool acyclic(const DenseSuperiority& s) {
        const int n = static_cast<int>(s.rules());
        std::vector<int> indeg(n, 0), ready;
        for (int w = 0; w < n; ++w)
            for (int l = 0; l < n; ++l)
                if (s.beats(w, l)) ++indeg[l];
        for (int i = 0; i < n; ++i)
            if (!indeg[i]) ready.push_back(i);
        int seen = 0;
        while (!ready.empty()) {
            int w = ready.back();
            ready.pop_back();
            ++seen;
            for (int l = 0; l < n; ++l)
                if (s.beats(w, l) && --indeg[l] == 0) ready.push_back(l);
        }
        return seen == n;
    }

private:
    const Theory* theory_;
    std::vector<LabelPair> labels_;
    std::vector<std::pair<int, int>> idx_;
    Superiority inert_;
};

// Conflicting pairs whose outcome can influence the ∂ status of any seed:
// closure of the seeds under antecedents of rules for a literal or its complement.
inline std::vector<LabelPair> relevant_pairs(const Theory& t, const std::vector<Literal>& seeds) {
    std::set<Literal> rel;
    std::vector<Literal> todo;
    auto add = [&](const Literal& l) {
        for (const Literal& x : {l, complement(l)})
            if (rel.insert(x).second) todo.push_back(x);
    };
    for (const auto& s : seeds) add(s);
    while (!todo.empty()) {
        Literal x = todo.back();
        todo.pop_back();
        for (const auto& r : t.rules())
            if (r.consequent == x)
                for (const auto& a : r.antecedent) add(a);
    }
    std::vector<LabelPair> out;
    for (const auto& pr : conflicting_pairs(t))
        if (rel.count(t.find(pr.first)->consequent)) out.push_back(pr);
    return out;
}

// Every acyclic assignment of the conflicting pairs, in index order.
inline void for_each_superiority(const Theory& t, std::uint64_t budget, const std::function<void(const Superiority&)>& fn) {
    Theory bare = t.with_superiority({});
    PairSpace space(bare, conflicting_pairs(bare));
    if (space.size() > budget) throw BudgetExceeded(space.size());
    DenseSuperiority dense(t.rules().size());
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        auto d = space.digits(i);
        space.load(d, dense);
        if (PairSpace::acyclic(dense)) fn(space.relation(d));
    }
}

inline std::vector<Superiority> enumerate_superiorities(const Theory& t, std::uint64_t budget) {
    std::vector<Superiority> out;
    for_each_superiority(t, budget, [&](const Superiority& s) { out.push_back(s); });
    return out;
}

// ---------------------------------------------------------------- refutability

enum class RefutabilityClass { tautological, refutable, undetermined, exhausted_budget };

inline const char* to_string(RefutabilityClass c) {
    switch (c) {
        case RefutabilityClass::tautological: return "tautological";
        case RefutabilityClass::refutable: return "refutable";
        case RefutabilityClass::undetermined: return "undetermined";
        case RefutabilityClass::exhausted_budget: return "exhausted_budget";
    }
    return "?";
}

struct RefutabilityResult {
    RefutabilityClass value = RefutabilityClass::exhausted_budget;
    std::optional<Superiority> witness;  // first relation proving -∂p
    std::uint64_t examined = 0;          // candidates visited (cyclic ones included)
    std::uint64_t required = 0;          // size of the candidate space
    std::uint64_t plus = 0, minus = 0, undecided = 0;
};

// Evaluates candidates [lo, hi) of a pair space, ∂ family only.
template <class Visit>
void scan_candidates(const Theory& t, const PairSpace& space, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
    CompiledTheory ct(t);
    Evaluator ev(ct);
    DenseSuperiority dense(t.rules().size());
    for (std::uint64_t i = lo; i < hi; ++i) {
        auto d = space.digits(i);
        space.load(d, dense);
        if (!PairSpace::acyclic(dense)) continue;
        ev.run(dense, bit(Family::Partial));
        if (!visit(i, ev)) return;
    }
}

// Refutability of p over theories (∅, R, >') with the given pairs varied and
// every other pair incomparable.
inline RefutabilityResult classify_refutability(const Theory& t, const Literal& p, const std::vector<LabelPair>& pairs,
                                                std::uint64_t budget = kDefaultBudget, unsigned jobs = 1) {
    Theory bare({}, t.rules(), {});
    PairSpace space(bare, pairs);
    RefutabilityResult res;
    res.required = space.size();
    if (space.size() > budget) return res;
    CompiledTheory ct(bare);
    const int pid = ct.id(p);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(space.size(), 64))));
    struct Part {
        std::uint64_t plus = 0, minus = 0, undecided = 0;
        std::optional<std::uint64_t> first_minus;
    };
    std::vector<Part> parts(jobs);
    auto work = [&](unsigned j) {
        std::uint64_t lo = space.size() * j / jobs, hi = space.size() * (j + 1) / jobs;
        scan_candidates(bare, space, lo, hi, [&](std::uint64_t i, const Evaluator& ev) {
            Status s = pid < 0 ? Status::provenMinus : ev.status(Family::Partial, pid);
            if (s == Status::provenPlus) ++parts[j].plus;
            else if (s == Status::provenMinus) {
                ++parts[j].minus;
                if (!parts[j].first_minus) parts[j].first_minus = i;
            } else ++parts[j].undecided;
            return true;
        });
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
        for (auto& th : pool) th.join();
    }
    std::optional<std::uint64_t> first;
    for (const auto& pt : parts) {
        res.plus += pt.plus;
        res.minus += pt.minus;
        res.undecided += pt.undecided;
        if (pt.first_minus && !first) first = pt.first_minus;
    }
    res.examined = space.size();
    if (first) {
        res.value = RefutabilityClass::refutable;
        res.witness = space.relation(space.digits(*first));
    } else if (res.undecided == 0) {
        res.value = RefutabilityClass::tautological;
    } else {
        res.value = RefutabilityClass::undetermined;
    }
    return res;
}

// Only pairs relevant to p are varied: the others cannot change p's ∂ status,
// and leaving them incomparable keeps every candidate acyclic.
inline RefutabilityResult classify_refutability(const Theory& t, const Literal& p, std::uint64_t budget = kDefaultBudget,
                                                unsigned jobs = 1) {
    Theory bare({}, t.rules(), {});
    return classify_refutability(bare, p, relevant_pairs(bare, {p}), budget, jobs);
}

}  // namespace defrev
