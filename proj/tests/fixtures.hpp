#pragma once

// Theories shared by the unit and acceptance suites.
namespace fixtures {

inline constexpr const char* kRunning = R"(
r1: => a.
r2: a => c.
r3: c => d.
r4: => ~a.
r5: => ~d.
r6: ~d => p.
r7: => b.
r8: b => ~c.
r9: => ~b.
r10: => e.
r11: => f.
r1 > r4.
r5 > r3.
)";

inline constexpr const char* kLegal = R"(
facts: Embryo, GeneticAnomalies.
r0: ~CandidateInVitroFertilization => ~Techniques.
r1: ~Sterility => ~CandidateInVitroFertilization.
r2: Embryo => ~Sterility.
r3: ~Sterility, GeneticAnomalies => CandidateInVitroFertilization.
r4: ~Sterility, GeneticAnomalies => ~Healthy.
r5: GeneticAnomalies, CandidateInVitroFertilization => Healthy.
r1 > r3.
)";

inline constexpr const char* kTeam = R"(
r1: => p.
r2: => p.
r3: => ~p.
r4: => ~p.
r1 > r3.
r2 > r4.
)";

// Chain a -> b -> c -> p, attacked at a and c; one rule for ~p.
inline constexpr const char* kChain = R"(
r1: => a.
r2: a => b.
r3: b => c.
r4: c => p.
r5: => ~a.
r6: => ~c.
r7: => ~p.
r6 > r3.
)";

inline constexpr const char* kContr5 = R"(
r1: => a.
r2: a => p.
r3: => ~a.
r4: => b.
r5: b => p.
r6: => ~b.
r1 > r3.
)";

inline constexpr const char* kTaut = R"(
r1: => l.
r2: l => ~a.
r3: => a.
r4: a => p.
r5: => b.
r6: b => p.
r7: => ~l.
r8: ~l => ~b.
)";

inline constexpr const char* kContrTaut = R"(
r1: => a.
r2: a => p.
r3: => b.
r4: b => p.
r5: => c.
r6: c => p.
r7: => l.
r8: l => ~a.
r9: => ~l.
r10: ~l => ~b.
r11: => m.
r12: m => ~b.
r13: => ~m.
r14: ~m => ~c.
r15: => n.
r16: n => ~c.
r17: => ~n.
r18: ~n => ~a.
)";

inline constexpr const char* kContrContrTaut = R"(
r1: => a.
r2: a => p.
r3: => b.
r4: b => p.
r5: => c.
r6: c => p.
r7: => l.
r8: l => ~a.
r9: => ~l.
r10: ~l => ~b.
r11: => m.
r12: m => ~b.
r13: => ~m.
r14: ~m => ~c.
r15: => n.
r16: n => ~c.
r17: => ~n.
r18: ~n => ~a.
r19: => e.
r20: e => p.
r21: => f.
r22: f => p.
r23: n => ~e.
r24: ~n => ~f.
r25: ~m => ~f.
)";

// The second rule labelled r3 in the source is renamed r10.
inline constexpr const char* kContr78 = R"(
r1: => a.
r2: a => c.
r3: => ~a.
r4: ~c, ~d => p.
r5: => ~d.
r6: => ~p.
r7: => b.
r8: b => d.
r9: => ~b.
r10: => ~c.
r1 > r3.
r2 > r10.
r8 > r5.
r7 > r9.
r4 > r6.
)";

inline constexpr const char* kRev78 = R"(
r1: => ~a.
r2: => a.
r3: a => p.
r4: => ~p.
r5: => b.
r6: => ~b.
r7: b => p.
r8: b => q.
r9: => ~q.
r10: => c.
r11: c => q.
)";

inline constexpr const char* kIdLevi = R"(
r1: => a.
r2: a => p.
r3: => ~a.
r4: => ~p.
r5: => b.
r6: b => p.
r7: => ~b.
)";

inline constexpr const char* kIdHarper = R"(
r1: => p.
r2: p => q.
r3: => ~q.
r4: => ~p.
r5: ~p => q.
r1 > r4.
r2 > r3.
r5 > r3.
)";

// The third-case example; r7 is the renamed rule for ~b.
inline constexpr const char* k3Can1 = kIdLevi;

// "we know a, and => p, a => ~p", with a defeasible and contractible.
inline constexpr const char* kK2 = R"(
r: => p.
s: a => ~p.
t: => a.
u: => ~a.
t > u.
)";

// Two theories for K+5: BS+(D) = {} is contained in BS+(D') = {~a}.
inline constexpr const char* kK5D = R"(
r1: => a.
r2: a => p.
r3: => b.
r4: b => p.
r5: => ~a.
r6: => ~b.
)";
inline constexpr const char* kK5DPrime = R"(
r1: => a.
r2: a => p.
r3: => b.
r4: b => p.
r5: => ~a.
r6: => ~b.
r5 > r1.
)";

inline constexpr const char* kUnreachable = R"(
r1: => a.
r2: => ~a.
r3: a, ~a => p.
)";

inline constexpr const char* kLoop = R"(
r: => p.
s: ~p => ~p.
s > r.
)";

// +d p and +omega ~p hold while +sigma ~p also holds through s2.
inline constexpr const char* kOmegaWithSupport = R"(
t: => p.
s1: => ~p.
s2: a => ~p.
u: => a.
v: => ~a.
t > s1.
)";

// p is reachable and chained, yet no superiority relation proves +d p:
// every chain for p needs a and ~l, and ~l needs ~m, which blocks a's only
// unattacked route through m.
inline constexpr const char* kChainedButStuck = R"(
r1: l => a.
r2: m => a.
r3: a, ~l => p.
r4: ~m => ~l.
r5: => l.
r6: => m.
r7: => ~m.
)";

// The third-case example read as drawn: r4 continues the chain from ~a.
inline constexpr const char* k3Can1Chain = R"(
r1: => a.
r2: a => p.
r3: => ~a.
r4: ~a => ~p.
r5: => b.
r6: b => p.
r7: => ~b.
)";

// One tuple on the c chain against two on the a chain; the first moves
// more conclusions.
inline constexpr const char* kConcl = R"(
r1: => a.
r2: a => b.
r3: b => p.
r4: => ~a.
r5: ~a => ~b.
r6: => c.
r7: c => d.
r8: d => e.
r9: e => p.
r10: => ~c.
)";

}  // namespace fixtures
