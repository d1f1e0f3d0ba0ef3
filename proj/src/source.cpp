// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/source.hpp"

#include <map>
#include <set>

#include "dnsk/parser.hpp"

namespace dnsk {

std::vector<Name> SourceFile::targets(std::string_view verb, const std::vector<Name>& all) const {
    std::vector<Name> out;
    for (const auto& d : directives)
        if (d.verb == verb) out.push_back(d.target);
    return out.empty() ? all : out;
}

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : p_(text) { p_.set_formula_macros(&macros_); }

    SourceFile run() {
        while (!p_.at_end()) statement();
        for (const auto& d : f_.directives) {
            bool found = false;
            for (const auto& x : f_.formulas) found |= x.name == d.target;
            for (const auto& x : f_.terms) found |= x.name == d.target;
            for (const auto& x : f_.proofs) found |= x.name == d.target;
            if (!found) throw SourceError(d.verb + ": no formula, term or proof named " + d.target, 0);
        }
        return std::move(f_);
    }

private:
    void statement() {
        int line = p_.peek().line;
        if (p_.peek().kind != Token::Kind::Ident) p_.fail("expected a statement");
        std::string kw = p_.next().text;
        if (kw == "pred") {
            Name n = fresh_name(line);
            std::vector<Type> sorts;
            if (p_.accept(":")) {
                sorts.push_back(p_.type());
                while (p_.accept(",")) sorts.push_back(p_.type());
            }
            f_.signature.declare(n, std::move(sorts));
        } else if (kw == "var") {
            Name n = fresh_name(line);
            p_.expect(":");
            f_.context.declare(n, p_.type());
        } else if (kw == "formula") {
            Name n = fresh_name(line);
            p_.expect(":=");
            Formula a = p_.formula();
            sorted(a, line);
            macros_.emplace(n, a);
            f_.formulas.push_back({n, a, f_.context});
        } else if (kw == "hyp") {
            Name n = fresh_name(line);
            p_.expect(":");
            Formula a = p_.formula();
            sorted(a, line);
            f_.context.assume(n, a);
        } else if (kw == "axiom") {
            axiom(line);
        } else if (kw == "term") {
            Name n = fresh_name(line);
            p_.expect(":=");
            f_.terms.push_back({n, p_.term(), f_.context});
        } else if (kw == "proof") {
            Annotation ann = Annotation::Plain;
            if (p_.is_word("bot")) {
                p_.next();
                ann = Annotation::Bot;
            }
            Name n = fresh_name(line);
            std::optional<Formula> goal;
            if (p_.accept(":")) {
                goal = p_.formula();
                sorted(*goal, line);
            }
            p_.expect(":=");
            Proof proof = p_.proof();
            f_.proofs.push_back({n, ann, goal, proof, f_.context});
        } else if (kw == "check" || kw == "translate" || kw == "extract" || kw == "eval") {
            f_.directives.push_back({kw, p_.ident()});
        } else {
            throw SourceError("unknown statement '" + kw + "'", line);
        }
        p_.expect(";");
    }

    void axiom(int line) {
        Name n = fresh_name(line);
        p_.expect(":");
        Name word = p_.ident();
        auto schema = schema_from_string(word);
        if (!schema) throw SourceError("unknown axiom schema '" + word + "'", line);
        SchemaArgs args;
        auto binder = [&](bool sorted_binder) {
            args.vars.push_back(p_.ident());
            if (sorted_binder) {
                p_.expect(":");
                args.sorts.push_back(p_.type());
            }
        };
        switch (*schema) {
        case Schema::DNS:
        case Schema::AC:
        case Schema::IND: {
            // Binders are scoped over the body only.
            p_.expect("[");
            if (*schema == Schema::IND) {
                binder(false);
            } else {
                binder(true);
                if (*schema == Schema::AC) {
                    p_.expect(",");
                    binder(true);
                    p_.expect(",");
                    binder(false);
                }
            }
            p_.expect("]");
            args.body = p_.formula();
            break;
        }
        default:
            args.terms.push_back(p_.term());
            while (p_.accept(",")) args.terms.push_back(p_.term());
        }
        try {
            f_.context.assume(n, axiom_instance(f_.signature, f_.context, *schema, args));
        } catch (const SchemaError& e) {
            throw SourceError(e.what(), line);
        } catch (const SortError& e) {
            throw SourceError(std::string("ill-sorted axiom instance: ") + e.what(), line);
        }
        f_.axioms.push_back({n, *schema, std::move(args)});
    }

    Name fresh_name(int line) {
        Name n = p_.ident();
        if (!names_.insert(n).second) throw SourceError("duplicate name '" + n + "'", line);
        return n;
    }

    void sorted(const Formula& a, int line) {
        try {
            check_formula(f_.signature, f_.context, a);
        } catch (const SortError& e) {
            throw SourceError(std::string("ill-sorted formula: ") + e.what(), line);
        }
    }

    Parser p_;
    SourceFile f_;
    std::map<Name, Formula> macros_;
    std::set<Name> names_;
};

} // namespace

SourceFile parse_source(std::string_view text) { return Reader(text).run(); }

} // namespace dnsk
