#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "theory.hpp"

namespace defrev {

// Declared in report order: Δ, φ, ∂, ω, σ, Σ.
enum class Family : std::uint8_t { Delta, Phi, Partial, Omega, SigmaSupport, SigmaChain };
inline constexpr std::array<Family, 6> kFamilies = {Family::Delta, Family::Phi, Family::Partial,
                                                    Family::Omega, Family::SigmaSupport, Family::SigmaChain};
enum class Sign : std::uint8_t { plus, minus };
enum class Status : std::uint8_t { undecided, provenPlus, provenMinus };

struct ProofTag {
    Family family;
    Sign sign;
    friend bool operator==(const ProofTag&, const ProofTag&) = default;
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Delta: return "delta";
        case Family::Phi: return "phi";
        case Family::Partial: return "partial";
        case Family::Omega: return "omega";
        case Family::SigmaSupport: return "support";
        case Family::SigmaChain: return "chain";
    }
    return "?";
}

inline std::string tag_name(ProofTag t) { return (t.sign == Sign::plus ? "+" : "-") + std::string(family_name(t.family)); }

inline ProofTag parse_tag(std::string_view s) {
    if (s.size() < 2 || (s[0] != '+' && s[0] != '-')) throw Error("malformed proof tag '" + std::string(s) + "'");
    Sign sign = s[0] == '+' ? Sign::plus : Sign::minus;
    for (Family f : kFamilies)
        if (s.substr(1) == family_name(f)) return {f, sign};
    throw Error("unknown proof tag '" + std::string(s) + "'");
}

using FamilyMask = unsigned;
inline constexpr FamilyMask bit(Family f) { return 1u << static_cast<unsigned>(f); }
inline constexpr FamilyMask kAllFamilies = 0x3f;

// Adds the strata a requested family reads from.
inline FamilyMask close_mask(FamilyMask m) {
    if (m & bit(Family::Phi)) m |= bit(Family::SigmaChain);
    if (m & (bit(Family::Omega) | bit(Family::SigmaSupport))) m |= bit(Family::Partial);
    return m | bit(Family::Delta);
}

// Integer view of a theory. Literal ids follow the sorted universe, so each
// atom occupies ids 2k (positive) and 2k+1 (negative) and ~id == id ^ 1.
struct CompiledTheory {
    struct CRule {
        int head;
        std::vector<int> body;
        RuleKind kind;
        bool supports() const { return kind != RuleKind::defeater; }
    };

    std::vector<Literal> literals;
    std::vector<CRule> rules;                 // same order as Theory::rules()
    std::vector<std::vector<int>> heads;      // R[q]
    std::vector<std::vector<int>> occurs_in;  // rules with q in the antecedent
    std::vector<char> fact;

    explicit CompiledTheory(const Theory& t) {
        auto u = t.universe();
        literals.assign(u.begin(), u.end());
        const std::size_t n = literals.size();
        heads.resize(n);
        occurs_in.resize(n);
        fact.assign(n, 0);
        for (const auto& f : t.facts()) fact[id(f)] = 1;
        rules.reserve(t.rules().size());
        for (const auto& r : t.rules()) {
            CRule c{id(r.consequent), {}, r.kind};
            for (const auto& a : r.antecedent) c.body.push_back(id(a));
            const int ri = static_cast<int>(rules.size());
            heads[c.head].push_back(ri);
            for (int a : c.body) occurs_in[a].push_back(ri);
            rules.push_back(std::move(c));
        }
    }

    int id(const Literal& l) const {
        auto it = std::lower_bound(literals.begin(), literals.end(), l);
        return it != literals.end() && *it == l ? static_cast<int>(it - literals.begin()) : -1;
    }
    std::size_t size() const { return literals.size(); }
};

// Superiority as sorted loser lists per winner; good for large sparse relations.
class SparseSuperiority {
public:
    SparseSuperiority() = default;
    SparseSuperiority(const Theory& t, const Superiority& s) : beats_(t.rules().size()) {
        for (const auto& [w, l] : s.tuples) beats_[*t.index_of(w)].push_back(static_cast<int>(*t.index_of(l)));
        for (auto& v : beats_) std::sort(v.begin(), v.end());
    }
    bool beats(int winner, int loser) const {
        const auto& v = beats_[winner];
        return !v.empty() && std::binary_search(v.begin(), v.end(), loser);
    }

private:
    std::vector<std::vector<int>> beats_;
};

// Bit matrix; cheap to rewrite in tight enumeration loops.
class DenseSuperiority {
public:
    explicit DenseSuperiority(std::size_t n = 0) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
    DenseSuperiority(const Theory& t, const Superiority& s) : DenseSuperiority(t.rules().size()) {
        for (const auto& [w, l] : s.tuples) set(static_cast<int>(*t.index_of(w)), static_cast<int>(*t.index_of(l)));
    }
    bool beats(int w, int l) const { return (bits_[w * words_ + l / 64] >> (l % 64)) & 1u; }
    void set(int w, int l) { bits_[w * words_ + l / 64] |= std::uint64_t{1} << (l % 64); }
    void reset(int w, int l) { bits_[w * words_ + l / 64] &= ~(std::uint64_t{1} << (l % 64)); }
    void clear() { std::fill(bits_.begin(), bits_.end(), 0); }
    std::size_t rules() const { return n_; }

private:
    std::size_t n_, words_;
    std::vector<std::uint64_t> bits_;
};

// Stratified least-fixpoint evaluation of the proof conditions. Reusable
// across superiority relations over the same compiled theory.
class Evaluator {
public:
    explicit Evaluator(const CompiledTheory& ct) : ct_(ct), queued_(ct.size(), 0) {
        for (auto& s : st_) s.assign(ct.size(), Status::undecided);
    }

    template <class Sup>
    void run(const Sup& sup, FamilyMask mask = kAllFamilies) {
        mask = close_mask(mask);
        for (auto& s : st_) std::fill(s.begin(), s.end(), Status::undecided);
        run_delta();
        if (mask & bit(Family::Partial)) run_partial(sup);
        if (mask & bit(Family::SigmaChain)) run_chain();
        if (mask & bit(Family::Omega)) run_omega();
        if (mask & bit(Family::SigmaSupport)) run_support(sup);
        if (mask & bit(Family::Phi)) run_phi();
    }

    Status status(Family f, int q) const { return st_[static_cast<int>(f)][q]; }
    const std::vector<Status>& statuses(Family f) const { return st_[static_cast<int>(f)]; }
    const CompiledTheory& compiled() const { return ct_; }

    bool all_body(int r, Family f, Status v) const {
        for (int a : ct_.rules[r].body)
            if (at(f, a) != v) return false;
        return true;
    }
    bool any_body(int r, Family f, Status v) const {
        for (int a : ct_.rules[r].body)
            if (at(f, a) == v) return true;
        return false;
    }

private:
    static constexpr Status P = Status::provenPlus;
    static constexpr Status M = Status::provenMinus;
    static constexpr Status U = Status::undecided;

    Status at(Family f, int q) const { return st_[static_cast<int>(f)][q]; }
    std::vector<Status>& of(Family f) { return st_[static_cast<int>(f)]; }

    template <class Eval>
    void fixpoint(Family f, bool wake_complement, Eval&& eval) {
        auto& s = of(f);
        stack_.clear();
        for (int q = static_cast<int>(ct_.size()) - 1; q >= 0; --q) {
            stack_.push_back(q);
            queued_[q] = 1;
        }
        auto push = [&](int q) {
            if (!queued_[q] && s[q] == U) {
                queued_[q] = 1;
                stack_.push_back(q);
            }
        };
        while (!stack_.empty()) {
            int q = stack_.back();
            stack_.pop_back();
            queued_[q] = 0;
            if (s[q] != U) continue;
            Status v = eval(q);
            if (v == U) continue;
            s[q] = v;
            for (int r : ct_.occurs_in[q]) {
                int h = ct_.rules[r].head;
                push(h);
                if (wake_complement) push(h ^ 1);
            }
        }
    }

    void run_delta() {
        fixpoint(Family::Delta, false, [&](int q) {
            if (ct_.fact[q]) return P;
            bool all_blocked = true;
            for (int r : ct_.heads[q]) {
                if (ct_.rules[r].kind != RuleKind::strict) continue;
                if (all_body(r, Family::Delta, P)) return P;
                if (!any_body(r, Family::Delta, M)) all_blocked = false;
            }
            return all_blocked ? M : U;
        });
    }

    template <class Sup>
    void run_partial(const Sup& sup) {
        const Family D = Family::Delta, F = Family::Partial;
        fixpoint(F, true, [&](int q) {
            const int nq = q ^ 1;
            const Status dq = at(D, q);
            if (dq == P) return P;
            // positive: (2.1) -Δ~q, (2.2) applicable supporting rule, (2.3) every attacker discarded or beaten
            if (at(D, nq) == M) {
                bool has_applicable = false;
                for (int r : ct_.heads[q])
                    if (ct_.rules[r].supports() && all_body(r, F, P)) { has_applicable = true; break; }
                if (has_applicable) {
                    bool all_handled = true;
                    for (int s : ct_.heads[nq]) {
                        if (any_body(s, F, M)) continue;
                        bool beaten = false;
                        for (int t : ct_.heads[q])
                            if (ct_.rules[t].supports() && sup.beats(t, s) && all_body(t, F, P)) { beaten = true; break; }
                        if (!beaten) { all_handled = false; break; }
                    }
                    if (all_handled) return P;
                }
            }
            if (dq != M) return U;
            if (at(D, nq) == P) return M;
            bool all_discarded = true;
            for (int r : ct_.heads[q])
                if (ct_.rules[r].supports() && !any_body(r, F, M)) { all_discarded = false; break; }
            if (all_discarded) return M;
            for (int s : ct_.heads[nq]) {
                if (!all_body(s, F, P)) continue;
                bool unbeaten = true;
                for (int t : ct_.heads[q])
                    if (ct_.rules[t].supports() && sup.beats(t, s) && !any_body(t, F, M)) { unbeaten = false; break; }
                if (unbeaten) return M;
            }
            return U;
        });
    }

    void run_chain() {
        const Family D = Family::Delta, S = Family::SigmaChain;
        fixpoint(S, false, [&](int q) {
            if (at(D, q) == P) return P;
            bool all_blocked = true;
            for (int r : ct_.heads[q]) {
                if (!ct_.rules[r].supports()) continue;
                if (all_body(r, S, P)) return P;
                if (!any_body(r, S, M)) all_blocked = false;
            }
            return all_blocked && at(D, q) == M ? M : U;
        });
    }

    // Reads only Δ and ∂, so one pass suffices.
    void run_omega() {
        const Family D = Family::Delta, F = Family::Partial;
        auto& s = of(Family::Omega);
        for (int q = 0; q < static_cast<int>(ct_.size()); ++q) {
            if (at(D, q) == P) { s[q] = P; continue; }
            bool all_blocked = true, found = false;
            for (int r : ct_.heads[q]) {
                if (!ct_.rules[r].supports()) continue;
                if (all_body(r, F, P)) { found = true; break; }
                if (!any_body(r, F, M)) all_blocked = false;
            }
            s[q] = found ? P : (all_blocked && at(D, q) == M ? M : U);
        }
    }

    template <class Sup>
    void run_support(const Sup& sup) {
        const Family D = Family::Delta, F = Family::Partial, S = Family::SigmaSupport;
        fixpoint(S, false, [&](int q) {
            const int nq = q ^ 1;
            if (at(D, q) == P) return P;
            bool all_blocked = true;
            for (int r : ct_.heads[q]) {
                if (!ct_.rules[r].supports()) continue;
                if (all_body(r, S, P)) {
                    bool undefeated = true;
                    for (int s : ct_.heads[nq])
                        if (sup.beats(s, r) && !any_body(s, F, M)) { undefeated = false; break; }
                    if (undefeated) return P;
                }
                if (any_body(r, S, M)) continue;
                bool beaten = false;
                for (int s : ct_.heads[nq])
                    if (sup.beats(s, r) && all_body(s, F, P)) { beaten = true; break; }
                if (!beaten) all_blocked = false;
            }
            return all_blocked && at(D, q) == M ? M : U;
        });
    }

    void run_phi() {
        const Family D = Family::Delta, S = Family::SigmaChain, H = Family::Phi;
        fixpoint(H, false, [&](int q) {
            const int nq = q ^ 1;
            if (at(D, q) == P) return P;
            bool opposed = false, no_chain_attacker = true;
            for (int s : ct_.heads[nq]) {
                if (!any_body(s, S, M)) opposed = true;
                if (all_body(s, S, P)) no_chain_attacker = false;
            }
            bool all_blocked = true;
            for (int r : ct_.heads[q]) {
                if (!ct_.rules[r].supports()) continue;
                if (!opposed && all_body(r, H, P)) return P;
                if (!any_body(r, H, M) && no_chain_attacker) all_blocked = false;
            }
            return all_blocked && at(D, q) == M ? M : U;
        });
    }

    const CompiledTheory& ct_;
    std::array<std::vector<Status>, 6> st_;
    std::vector<char> queued_;
    std::vector<int> stack_;
};

class TagAssignment {
public:
    TagAssignment() = default;
    TagAssignment(const CompiledTheory& ct, const Evaluator& ev) : literals_(ct.literals) {
        for (Family f : kFamilies) st_[static_cast<int>(f)] = ev.statuses(f);
    }

    // Literals outside the universe have no rules and are not facts: every
    // negative condition holds vacuously for them.
    Status status(Family f, const Literal& l) const {
        auto it = std::lower_bound(literals_.begin(), literals_.end(), l);
        if (it == literals_.end() || *it != l) return Status::provenMinus;
        return st_[static_cast<int>(f)][it - literals_.begin()];
    }
    bool proves(ProofTag t, const Literal& l) const {
        return status(t.family, l) == (t.sign == Sign::plus ? Status::provenPlus : Status::provenMinus);
    }
    const std::vector<Literal>& literals() const { return literals_; }
    friend bool operator==(const TagAssignment&, const TagAssignment&) = default;

private:
    std::vector<Literal> literals_;
    std::array<std::vector<Status>, 6> st_;
};

inline TagAssignment compute_tags(const Theory& t, FamilyMask mask = kAllFamilies) {
    CompiledTheory ct(t);
    Evaluator ev(ct);
    ev.run(SparseSuperiority(t, t.superiority()), mask);
    return TagAssignment(ct, ev);
}

inline bool proves(const Theory& t, ProofTag tag, const Literal& l) {
    FamilyMask m = bit(tag.family);
    return compute_tags(t, m).proves(tag, l);
}

struct Extension {
    std::set<Literal> plus_partial;
    std::set<Literal> minus_partial;
    friend bool operator==(const Extension&, const Extension&) = default;
};

struct BeliefSet {
    std::set<Literal> believed;
    std::set<Literal> disbelieved;
    friend bool operator==(const BeliefSet&, const BeliefSet&) = default;
};

inline Extension extension(const Theory& t) {
    auto tags = compute_tags(t, bit(Family::Partial));
    Extension e;
    for (const auto& l : tags.literals()) {
        Status s = tags.status(Family::Partial, l);
        if (s == Status::provenPlus) e.plus_partial.insert(l);
        if (s == Status::provenMinus) e.minus_partial.insert(l);
    }
    return e;
}

// Restricted to literals written in the theory, not the complement-closed universe.
inline BeliefSet belief_set(const Theory& t) {
    auto tags = compute_tags(t, bit(Family::Partial));
    BeliefSet b;
    for (const auto& l : t.appearing()) {
        Status s = tags.status(Family::Partial, l);
        if (s == Status::provenPlus) b.believed.insert(l);
        if (s == Status::provenMinus) b.disbelieved.insert(l);
    }
    return b;
}

inline bool is_consistent(const TagAssignment& tags) {
    for (const auto& l : tags.literals()) {
        if (l.negative) continue;
        Literal n = complement(l);
        if (tags.proves({Family::Partial, Sign::plus}, l) && tags.proves({Family::Partial, Sign::plus}, n) &&
            !(tags.proves({Family::Delta, Sign::plus}, l) && tags.proves({Family::Delta, Sign::plus}, n)))
            return false;
    }
    return true;
}

inline bool is_consistent(const Theory& t) { return is_consistent(compute_tags(t, bit(Family::Partial))); }

// "lit<TAB>+tags<TAB>-tags", families in Δ,φ,∂,ω,σ,Σ order.
inline std::string format_report(const TagAssignment& tags) {
    std::string out;
    for (const auto& l : tags.literals()) {
        std::string plus, minus;
        for (Family f : kFamilies) {
            Status s = tags.status(f, l);
            std::string& dst = s == Status::provenPlus ? plus : minus;
            if (s == Status::undecided) continue;
            if (!dst.empty()) dst += ",";
            dst += tag_name({f, s == Status::provenPlus ? Sign::plus : Sign::minus});
        }
        out += l.str() + "\t" + plus + "\t" + minus + "\n";
    }
    return out;
}

}  // namespace defrev
