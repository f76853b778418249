// defrev: command-line front end.
// Exit codes: 0 answered (infeasible included), 1 usage, 2 input error, 3 budget exhausted.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "defrev/defrev.hpp"

using namespace defrev;

namespace {

constexpr int kAnswered = 0, kUsage = 1, kInput = 2, kExhausted = 3;

struct InputError : Error {
    using Error::Error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Theory load_theory(const std::string& path) {
    try {
        return parse_theory(slurp(path));
    } catch (const Error& e) {
        throw InputError(path + ": " + e.what());
    }
}

struct Common {
    std::string file;
    std::string lit;
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
};

void add_file(CLI::App* c, Common& o, const char* what = "theory file ('-' for standard input)") {
    c->add_option("file", o.file, what)->required();
}
void add_budget(CLI::App* c, Common& o) {
    c->add_option("--budget", o.budget, "largest candidate space to scan")->check(CLI::PositiveNumber);
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
}

std::string braces(const std::set<Literal>& s) { return "{" + join_literals(s) + "}"; }

GoalTag parse_goal(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw InputError("goal '" + s + "' is not TAG:LITERAL");
    return {parse_tag(s.substr(0, colon)), Literal::parse(s.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Defeasible theories: proof tags, preference revision, 3-SAT bridge, AGM audit."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every verb");

    Common o;
    int code = kAnswered;
    std::function<void()> action;

    // prove
    std::string tag;
    auto* prove = app.add_subcommand("prove", "does the theory prove TAG LIT? without --lit, every tag of every literal");
    add_file(prove, o);
    prove->add_option("--lit", o.lit, "literal, e.g. p or ~p");
    prove->add_option("--tag", tag, "+delta -delta +phi -phi +partial -partial +omega -omega +support -support +chain -chain");
    prove->callback([&] {
        action = [&] {
            Theory t = load_theory(o.file);
            if (o.lit.empty()) {
                std::cout << format_report(compute_tags(t));
                return;
            }
            if (tag.empty()) throw CLI::RequiredError("--tag is required with --lit");
            std::cout << (proves(t, parse_tag(tag), Literal::parse(o.lit)) ? "true" : "false") << "\n";
        };
    });

    auto* ext = app.add_subcommand("extension", "literals proved and refuted under the partial tag");
    add_file(ext, o);
    ext->callback([&] {
        action = [&] {
            auto e = extension(load_theory(o.file));
            std::cout << "+partial " << braces(e.plus_partial) << "\n-partial " << braces(e.minus_partial) << "\n";
        };
    });

    auto* bs = app.add_subcommand("beliefset", "believed and disbelieved literals among those written in the theory");
    add_file(bs, o);
    bs->callback([&] { action = [&] { std::cout << format_belief_set(belief_set(load_theory(o.file))); }; });

    // classify
    std::string goal_kind = "contract";
    bool relaxed = false;
    auto goal_of = [&](const std::string& kind, const Literal& l) -> RevisionGoal {
        if (kind == "contract") return {GoalKind::contract, l};
        if (kind == "revise") return {GoalKind::revise, complement(l)};
        if (kind == "expand") return {GoalKind::expand, l};
        throw InputError("unknown goal '" + kind + "'");
    };
    auto* cls = app.add_subcommand("classify", "which revision instance a goal falls in");
    add_file(cls, o);
    cls->add_option("--lit", o.lit, "literal to contract, to believe (revise), or to expand")->required();
    cls->add_option("--goal", goal_kind, "contract, revise or expand")->check(CLI::IsMember({"contract", "revise", "expand"}));
    cls->add_flag("--relaxed", relaxed, "skip the precondition");
    cls->callback([&] {
        action = [&] {
            Theory t = load_theory(o.file);
            std::cout << to_string(classify_instance(t, goal_of(goal_kind, Literal::parse(o.lit)), relaxed)) << "\n";
        };
    });

    // revise / contract / expand
    std::string strategy = "targeted";
    std::optional<std::string> winner;
    auto add_operator = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        add_file(c, o);
        c->add_option("--lit", o.lit, "target literal")->required();
        c->add_option("--strategy", strategy, "targeted, single_winner, team_defeater or search")
            ->check(CLI::IsMember({"targeted", "single_winner", "team_defeater", "search"}));
        c->add_option("--winner", winner, "rule to promote under single_winner");
        c->add_flag("--relaxed", relaxed, "skip the precondition");
        add_budget(c, o);
        c->callback([&, name = std::string(name)] {
            action = [&, name] {
                Theory t = load_theory(o.file);
                RevisionOptions ro;
                ro.strategy = parse_strategy(strategy);
                ro.winner = winner;
                ro.budget = o.budget;
                ro.jobs = o.jobs;
                ro.relaxed_precondition = relaxed;
                auto out = apply_revision(t, goal_of(name, Literal::parse(o.lit)), ro);
                std::cout << format_outcome(out);
                if (out.status == OutcomeStatus::exhausted) code = kExhausted;
            };
        });
    };
    add_operator("contract", "make LIT refuted (-partial) by editing the superiority relation");
    add_operator("revise", "make LIT believed in place of its believed complement");
    add_operator("expand", "make an undecided LIT believed");

    // search
    std::vector<std::string> goals;
    std::string metric = "tuples";
    bool all_minimal = false;
    auto* srch = app.add_subcommand("search", "minimal superiority relations meeting every goal");
    add_file(srch, o);
    srch->add_option("--goal", goals, "TAG:LITERAL, e.g. -partial:a (repeatable)")->required();
    srch->add_option("--metric", metric, "tuples or conclusions")->check(CLI::IsMember({"tuples", "conclusions"}));
    srch->add_flag("--all-minimal", all_minimal, "list every minimal relation");
    add_budget(srch, o);
    srch->callback([&] {
        action = [&] {
            Theory t = load_theory(o.file);
            std::vector<GoalTag> gs;
            for (const auto& g : goals) gs.push_back(parse_goal(g));
            require_revisable(t);
            SearchOptions so;
            so.budget = o.budget;
            so.jobs = o.jobs;
            so.metric = metric == "tuples" ? Metric::tuples : Metric::conclusions;
            so.all_minimal = all_minimal;
            auto r = search_revision(t, gs, so);
            std::cout << "status: " << to_string(r.status) << "\ncandidates: " << r.required << "\n";
            for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
                const auto& x = r.outcomes[i];
                std::cout << "outcome " << i + 1 << ": " << format_superiority(x.new_superiority) << "\n";
                for (const auto& [w, l] : x.removed) std::cout << "- (" << w << "," << l << ")\n";
                for (const auto& [w, l] : x.added) std::cout << "+ (" << w << "," << l << ")\n";
            }
            if (r.status == OutcomeStatus::exhausted) code = kExhausted;
        };
    });

    // gamma / sat
    bool emit = false, truth_table = false;
    auto load_cnf = [&] {
        try {
            return parse_dimacs(slurp(o.file));
        } catch (const CnfError& e) {
            throw InputError(o.file + ": " + e.what());
        }
    };
    auto* gam = app.add_subcommand("gamma", "transform a 3-CNF formula into a defeasible theory");
    add_file(gam, o, "DIMACS file");
    gam->add_flag("--emit-theory", emit, "print the theory rather than its size");
    gam->callback([&] {
        action = [&] {
            auto f = load_cnf();
            Theory g = gamma_transform(f);
            if (emit) {
                std::cout << serialize_theory(g);
                return;
            }
            std::cout << "clauses: " << f.clauses.size() << "\nrules: " << g.rules().size()
                      << "\ngenerator pairs: " << generator_pairs(f).size() << "\ngoal: " << goal_literal().str() << "\n";
        };
    });
    auto* sat = app.add_subcommand("sat", "decide a 3-CNF formula through refutability of the goal literal");
    add_file(sat, o, "DIMACS file");
    sat->add_flag("--truth-table", truth_table, "use the truth-table oracle instead");
    add_budget(sat, o);
    sat->callback([&] {
        action = [&] {
            auto f = load_cnf();
            auto a = truth_table ? truth_table_sat(f) : sat_via_refutability(f, o.budget, o.jobs);
            std::cout << format_sat(a);
            if (a.kind == SatAnswer::Kind::exhausted_budget) code = kExhausted;
        };
    });

    // agm
    std::string q, other, witness_dir;
    std::vector<std::string> ids;
    auto* agm = app.add_subcommand("agm", "audit the AGM postulates; one line per postulate");
    add_file(agm, o);
    agm->add_option("--lit", o.lit, "p")->required();
    agm->add_option("--second", q, "q, for the postulates about two literals");
    agm->add_option("--other", other, "second theory D' for K+5");
    agm->add_option("--postulate", ids, "restrict to these ids (K-1 ... K-8, K-4', K*1 ... K*8, K+1 ... K+6, LI, HI)");
    agm->add_flag("--all-minimal", all_minimal, "try every combination of minimal operator outcomes");
    agm->add_option("--witness-dir", witness_dir, "write one witness file per violation here");
    add_budget(agm, o);
    agm->callback([&] {
        action = [&] {
            Theory t = load_theory(o.file);
            PostulateInput in{Literal::parse(o.lit), std::nullopt, std::nullopt};
            if (!q.empty()) in.q = Literal::parse(q);
            if (!other.empty()) in.other = load_theory(other);
            AgmOptions ao;
            ao.budget = o.budget;
            ao.jobs = o.jobs;
            ao.all_minimal = all_minimal;
            std::vector<PostulateId> which;
            try {
                for (const auto& s : ids) which.push_back(parse_postulate(s));
            } catch (const AgmError& e) {
                throw InputError(e.what());
            }
            if (which.empty()) which = postulate_catalogue();
            if (!witness_dir.empty()) std::filesystem::create_directories(witness_dir);
            for (const auto& id : which) {
                Verdict v = check_postulate(id, t, in, ao);
                std::string where = "-";
                if (v.witness() && !witness_dir.empty()) {
                    std::string name = id.index;
                    for (char& c : name)
                        if (c == '*') c = 'r';
                        else if (c == '\'') c = 'p';
                    where = (std::filesystem::path(witness_dir) / (name + ".dlt")).string();
                    std::ofstream(where) << format_witness(*v.witness());
                }
                std::cout << id.index << "\t" << to_string(v.status) << "\t" << where << "\n";
            }
        };
    });

    // oracle
    auto* orc = app.add_subcommand("oracle", "is LIT refuted under some superiority relation? exhaustive");
    add_file(orc, o);
    orc->add_option("--lit", o.lit, "literal")->required();
    add_budget(orc, o);
    orc->callback([&] {
        action = [&] {
            Theory t = load_theory(o.file);
            auto r = classify_refutability(t, Literal::parse(o.lit), o.budget, o.jobs);
            std::cout << to_string(r.value) << "\ncandidates: " << r.required << "\nexamined: " << r.examined << "\n";
            if (r.witness) std::cout << "witness: " << format_superiority(*r.witness) << "\n";
            if (r.value == RefutabilityClass::exhausted_budget) code = kExhausted;
        };
    });

    // fmt
    bool in_place = false;
    auto* fmt = app.add_subcommand("fmt", "print a theory in canonical form");
    add_file(fmt, o);
    fmt->add_flag("-i,--in-place", in_place, "rewrite the file");
    fmt->callback([&] {
        action = [&] {
            std::string text = serialize_theory(load_theory(o.file));
            if (!in_place || o.file == "-") {
                std::cout << text;
                return;
            }
            std::ofstream out(o.file, std::ios::binary | std::ios::trunc);
            if (!(out << text)) throw InputError("cannot write '" + o.file + "'");
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        action();
    } catch (const CLI::RequiredError& e) {
        std::cerr << "defrev: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "defrev: " << e.what() << "\n";
        return kExhausted;
    } catch (const Error& e) {
        std::cerr << "defrev: " << e.what() << "\n";
        return kInput;
    }
    return code;
}
