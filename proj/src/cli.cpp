// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "dnsk/eval.hpp"
#include "dnsk/extract.hpp"
#include "dnsk/parser.hpp"
#include "dnsk/printer.hpp"
#include "dnsk/source.hpp"
#include "dnsk/subst.hpp"
#include "dnsk/theorems.hpp"
#include "dnsk/translate.hpp"

namespace dnsk {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SourceFile load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_source(ss.str());
}

template <class T>
std::vector<Name> names_of(const std::vector<T>& xs) {
    std::vector<Name> out;
    for (const auto& x : xs) out.push_back(x.name);
    return out;
}

template <class T>
const T* by_name(const std::vector<T>& xs, const Name& n) {
    for (const auto& x : xs)
        if (x.name == n) return &x;
    return nullptr;
}

std::string describe(const CheckError& e) {
    return std::string(to_string(e.kind)) + " at " + e.path + ": expected " + e.expected + ", got " + e.got;
}

void print_tree(std::ostream& out, const Derivation& d, int depth) {
    out << std::string(static_cast<std::size_t>(2 * depth + 2), ' ') << d.rule << ": " << d.formula << '\n';
    for (const auto& p : d.premises) print_tree(out, p, depth + 1);
}

// --- check ----------------------------------------------------------------------------

int cmd_check(const SourceFile& f, bool json, bool tree, std::ostream& out) {
    int code = kExitOk;
    Json report = Json::array();
    for (const auto& name : f.targets("check", names_of(f.proofs))) {
        const auto* np = by_name(f.proofs, name);
        if (!np) continue;
        Json j{{"name", name}, {"annotation", to_string(np->annotation)}};
        if (!np->goal) {
            code = kExitFailure;
            j["accepted"] = false;
            j["error"] = {{"kind", "NoGoal"}};
            if (!json) out << name << ": rejected: no goal given\n";
            report.push_back(j);
            continue;
        }
        CheckReport r = check_proof(f.signature, np->context, np->annotation, np->proof, *np->goal);
        j["goal"] = to_string(*np->goal);
        j["accepted"] = r.accepted;
        if (r.accepted) {
            j["rule"] = r.derivation->rule;
            if (!json) {
                out << name << ": accepted by " << r.derivation->rule << " : " << *np->goal << '\n';
                if (tree) print_tree(out, *r.derivation, 0);
            }
        } else {
            code = kExitFailure;
            const CheckError& e = *r.error;
            j["error"] = {{"kind", to_string(e.kind)}, {"path", e.path}, {"expected", e.expected}, {"got", e.got}};
            if (!json) out << name << ": rejected: " << describe(e) << '\n';
        }
        report.push_back(j);
    }
    if (json) out << report.dump(2) << '\n';
    return code;
}

// --- translate ------------------------------------------------------------------------

int cmd_translate(const SourceFile& f, const std::string& mode, bool simplify, std::ostream& out) {
    for (const auto& name : f.targets("translate", names_of(f.formulas))) {
        const auto* nf = by_name(f.formulas, name);
        if (!nf) continue;
        const Formula& a = nf->formula;
        NameSet used;
        collect_names(a, used);
        for (const auto& [x, _] : nf->context.term_vars) used.insert(x);
        Name t = prime_fresh("t", used);
        used.insert(t);
        Name s = prime_fresh("s", used);
        Context ctx = nf->context;
        out << name;
        if (mode == "kuroda") {
            out << " := " << kuroda(a);
        } else if (mode == "kuroda-inner") {
            out << " := " << kuroda_inner(a);
        } else if (mode == "mr" || mode == "mrt") {
            Type tau = mr_type(a);
            ctx.declare(t, tau);
            Formula r = mode == "mr" ? mr_formula(f.signature, ctx, var(t), a) : mrt_formula(f.signature, ctx, var(t), a);
            if (simplify) r = mr_simplify(r);
            out << " (" << t << " : " << tau << ") := " << r;
        } else if (mode == "dia" || mode == "dia-nn") {
            DiaTypes ty = dia_types(mode == "dia" ? a : neg(neg(a)));
            ctx.declare(t, ty.witness);
            ctx.declare(s, ty.challenge);
            Formula r = mode == "dia" ? dia_formula(f.signature, ctx, var(t), var(s), a)
                                      : dia_nn_simplify(f.signature, ctx, a, var(t), var(s));
            out << " (" << t << " : " << ty.witness << ", " << s << " : " << ty.challenge << ") := " << r;
        } else {
            out << " (" << t << " : " << dia_types(neg(neg(a))).witness << ") := " << spector_target(a, t);
        }
        out << '\n';
    }
    return kExitOk;
}

// --- extract --------------------------------------------------------------------------

int cmd_extract(const SourceFile& f, std::ostream& out) {
    int code = kExitOk;
    for (const auto& name : f.targets("extract", names_of(f.proofs))) {
        const auto* np = by_name(f.proofs, name);
        if (!np) continue;
        if (!np->goal) {
            out << name << ": rejected: no goal given\n";
            code = kExitFailure;
            continue;
        }
        CheckReport r = check_proof(f.signature, np->context, np->annotation, np->proof, *np->goal);
        if (!r.accepted) {
            out << name << ": rejected: " << describe(*r.error) << '\n';
            code = kExitFailure;
            continue;
        }
        TheoremEntry e{name, "", np->context, f.axioms, np->annotation, np->proof, *np->goal};
        Context rctx;
        ExtractionEnv env = extraction_env(e, rctx);
        try {
            Term t = extract_mr(*r.derivation, env);
            out << name << " : " << infer_term_type(rctx, t) << " := " << t << '\n';
            out << name << " ~> " << normalize_term(rctx, t) << '\n';
        } catch (const ExtractError& err) {
            out << name << ": not extractable: " << err.what() << '\n';
            code = kExitFailure;
        }
    }
    return code;
}

// --- eval -----------------------------------------------------------------------------

int cmd_eval(const SourceFile& f, bool trace, std::size_t fuel, std::ostream& out) {
    int code = kExitOk;
    std::vector<Name> all = names_of(f.terms);
    for (const auto& n : names_of(f.proofs)) all.push_back(n);
    for (const auto& name : f.targets("eval", all)) {
        if (const auto* nt = by_name(f.terms, name)) {
            try {
                out << name << " ~> " << normalize_term(nt->context, nt->term) << '\n';
            } catch (const EvalError& e) {
                out << name << ": " << e.what() << '\n';
                code = kExitFailure;
            }
            continue;
        }
        const auto* np = by_name(f.proofs, name);
        if (!np) continue;
        NormalizeResult r = normalize_proof(np->proof, fuel, trace);
        out << name << ": " << to_string(r.status) << " after " << r.steps << " step" << (r.steps == 1 ? "" : "s");
        if (r.status == NormalizeResult::Status::Stuck) out << " (" << r.reason << ")";
        out << ": " << r.result << '\n';
        if (trace) {
            out << "  0: " << np->proof << '\n';
            for (std::size_t i = 0; i < r.trace.size(); ++i) out << "  " << i + 1 << ": " << r.trace[i] << '\n';
        }
        if (r.status != NormalizeResult::Status::Done) code = kExitFailure;
    }
    return code;
}

// --- library --------------------------------------------------------------------------

int cmd_library(bool list, const std::string& check, bool check_all, bool mutants, std::ostream& out,
                std::ostream& err) {
    auto lib = build_library();
    if (!check.empty()) {
        const TheoremEntry* e = find_entry(lib, check);
        if (!e) {
            err << "dnsk: no library entry named " << check << '\n';
            return kExitUsage;
        }
        CheckReport r = check_entry(*e);
        out << e->name << ": " << (r.accepted ? "accepted" : "rejected: " + describe(*r.error)) << '\n';
        out << "  goal:  " << e->goal << '\n';
        out << "  proof: " << e->proof << '\n';
        for (const auto& [h, a] : e->context.hyps) out << "  hyp " << h << " : " << a << '\n';
        return r.accepted ? kExitOk : kExitFailure;
    }
    if (check_all) {
        int code = kExitOk;
        for (const auto& e : lib) {
            CheckReport r = check_entry(e);
            out << e.name << ": " << (r.accepted ? "accepted" : "rejected: " + describe(*r.error)) << '\n';
            if (!r.accepted) code = kExitFailure;
        }
        return code;
    }
    if (mutants) {
        int code = kExitOk;
        for (const auto& m : build_mutants()) {
            const TheoremEntry* e = find_entry(lib, m.base);
            CheckReport r = check_proof(library_signature(), e->context, e->annotation, m.proof, e->goal);
            bool ok = !r.accepted && r.error->kind == m.expected;
            out << m.name << ": " << (r.accepted ? "accepted" : "rejected " + std::string(to_string(r.error->kind)))
                << " (expected " << to_string(m.expected) << ")" << (ok ? "" : " MISMATCH") << '\n';
            if (!ok) code = kExitFailure;
        }
        return code;
    }
    (void)list;
    for (const auto& e : lib) out << e.name << ": " << e.description << '\n';
    return kExitOk;
}

std::size_t default_fuel() {
    if (const char* v = std::getenv("DNSK_FUEL")) {
        try {
            return static_cast<std::size_t>(std::stoul(v));
        } catch (const std::exception&) {
            throw UsageError(std::string("DNSK_FUEL is not a number: ") + v);
        }
    }
    return 1000;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dnsk: proof checking, translation, extraction and evaluation for shift/reset arithmetic", "dnsk"};
    app.require_subcommand(1);

    std::string file, mode, check_name;
    bool json = false, tree = false, simplify = false, trace = false, list = false, check_all = false, mutants = false;
    std::size_t fuel = 0;

    auto* check = app.add_subcommand("check", "type-check every proof in FILE");
    check->add_option("FILE", file)->required();
    check->add_flag("--json", json, "machine-readable report");
    check->add_flag("--tree", tree, "print accepted derivations");

    auto* translate = app.add_subcommand("translate", "translate every named formula in FILE");
    translate->add_option("--mode", mode)
        ->required()
        ->check(CLI::IsMember({"kuroda", "kuroda-inner", "mr", "mrt", "dia", "dia-nn", "spector"}));
    translate->add_flag("--simplify", simplify, "clean up mr/mrt output");
    translate->add_option("FILE", file)->required();

    auto* extract = app.add_subcommand("extract", "extract realizers from the proofs in FILE");
    extract->add_option("FILE", file)->required();

    auto* eval = app.add_subcommand("eval", "run the terms and proofs in FILE");
    eval->add_option("FILE", file)->required();
    eval->add_flag("--trace", trace, "print every configuration");
    auto* fuel_opt = eval->add_option("--fuel", fuel, "step budget per proof");

    auto* library = app.add_subcommand("library", "the built-in theorem library");
    auto* g = library->add_option_group("action")->require_option(0, 1);
    g->add_flag("--list", list, "list entries");
    g->add_option("--check", check_name, "check one entry");
    g->add_flag("--check-all", check_all, "check every entry");
    g->add_flag("--mutants", mutants, "check that every curated mutant is rejected");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "dnsk: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*library) return cmd_library(list, check_name, check_all, mutants, out, err);
        SourceFile f = load(file);
        if (*check) return cmd_check(f, json, tree, out);
        if (*translate) return cmd_translate(f, mode, simplify, out);
        if (*extract) return cmd_extract(f, out);
        if (*eval) return cmd_eval(f, trace, fuel_opt->count() ? fuel : default_fuel(), out);
    } catch (const UsageError& e) {
        err << "dnsk: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "dnsk: " << file << ":" << e.what() << '\n';
        return kExitUsage;
    } catch (const SourceError& e) {
        err << "dnsk: " << file << ":" << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace dnsk
