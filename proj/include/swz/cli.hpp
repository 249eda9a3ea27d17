// Command-line front end. Commands: schwarzian, classify, reduce, verify,
// batch, selftest. Exit codes: 0 success, 1 analysis failure, 2 usage error.
#pragma once

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swz/golden.hpp"
#include "swz/parser.hpp"
#include "swz/report.hpp"

namespace swz {
namespace cli {

inline int default_trunc() {
    if (const char* env = std::getenv("SCHWARZIAN_TRUNC")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 16;
}

inline Candidate parse_candidate(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    const std::string& kind = parts[0];
    auto want = [&](std::size_t n) {
        if (parts.size() != n)
            throw Error(ErrorKind::UnsupportedCandidate,
                        "candidate '" + spec + "' has the wrong number of fields");
    };
    if (kind == "exp") {
        want(2);
        return Candidate::exp(parse_rat(parts[1]));
    }
    if (kind == "tan") {
        want(2);
        return Candidate::tan(parse_rat(parts[1]));
    }
    if (kind == "mobius-exp" || kind == "mobius-tan") {
        want(6);
        Rat k = parse_rat(parts[1]);
        Rat a = parse_rat(parts[2]), b = parse_rat(parts[3]);
        Rat c = parse_rat(parts[4]), d = parse_rat(parts[5]);
        return kind == "mobius-exp" ? Candidate::mobius_exp(k, a, b, c, d)
                                    : Candidate::mobius_tan(k, a, b, c, d);
    }
    throw Error(ErrorKind::UnsupportedCandidate,
                "unknown candidate '" + kind + "'; use exp:k, tan:k, mobius-exp:k:a:b:c:d, "
                "or mobius-tan:k:a:b:c:d");
}

inline std::string verdict_text(const ReductionVerdict& v) {
    std::ostringstream os;
    os << "class: " << qtag_name(v.qclass.tag);
    auto params = v.qclass.param_strings();
    if (!params.empty()) {
        os << " {";
        bool first = true;
        for (const auto& [key, value] : params) {
            if (!first) os << ", ";
            os << key << " = " << value;
            first = false;
        }
        os << "}";
    }
    if (!v.alternates.empty()) {
        os << "  alternates:";
        for (QTag t : v.alternates) os << " " << qtag_name(t);
    }
    os << "\n";
    os << "verdict: " << outcome_name(v.outcomes.front());
    for (std::size_t i = 1; i < v.outcomes.size(); ++i) os << " | " << outcome_name(v.outcomes[i]);
    os << "\n";
    os << "target: " << v.template_text << "\n";
    for (const auto& t : v.branch_templates) os << "   or: " << t << "\n";
    if (!v.mobius_used.is_identity()) os << "mobius: " << v.mobius_used.to_string() << "\n";
    for (const auto& c : v.certificates) {
        if (c.feasibility) {
            const auto& f = *c.feasibility;
            os << "certificate[feasibility]: s = " << f.s << ", "
               << (f.feasible ? "feasible" : "infeasible") << ", required sum "
               << f.required_sum.to_string();
            if (f.forced_n) os << ", n = " << *f.forced_n;
            os << "\n";
        } else {
            os << "certificate[" << c.kind << "]: " << c.text << "\n";
        }
    }
    for (const auto& d : v.diagnostics) os << "note: " << d << "\n";
    return os.str();
}

inline std::string one_line_verdict(const ReductionVerdict& v) {
    std::string s = qtag_name(v.qclass.tag);
    s += " -> ";
    s += outcome_name(v.outcomes.front());
    for (std::size_t i = 1; i < v.outcomes.size(); ++i)
        s += std::string(" | ") + outcome_name(v.outcomes[i]);
    return s;
}

inline int run_selftest(std::ostream& out, std::ostream& err) {
    int failures = 0;
    for (const auto& entry : golden_corpus()) {
        bool ok = false;
        std::string got;
        try {
            ReductionVerdict v = reduce(parse_equation(entry.text));
            ok = v.qclass.tag == entry.expected_tag && v.primary() == entry.expected_primary;
            got = one_line_verdict(v);
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
        }
        out << (ok ? "[ok]   " : "[FAIL] ") << entry.text << "  =>  " << got << "\n";
        if (!ok) ++failures;
    }
    for (const auto& entry : near_miss_corpus()) {
        bool ok = false;
        std::string got;
        try {
            QClass qc = classify_q(parse_equation(entry.text));
            ok = qc.tag != entry.forbidden_tag;
            got = std::string(qtag_name(qc.tag)) + " (must not be " +
                  qtag_name(entry.forbidden_tag) + ": " + entry.why + ")";
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
        }
        out << (ok ? "[ok]   " : "[FAIL] ") << entry.text << "  =>  " << got << "\n";
        if (!ok) ++failures;
    }
    // solution fixtures
    struct Fixture {
        const char* eq;
        Candidate cand;
    };
    const Fixture fixtures[] = {
        {"S(f) = 2", Candidate::tan(Rat(1))},
        {"S(f) = -1/2", Candidate::exp(Rat(1))},
    };
    for (const auto& fx : fixtures) {
        bool ok = false;
        try {
            auto rep = verify_candidate(parse_equation(fx.eq), fx.cand, Rat(0), 20);
            ok = rep.residual_zero;
        } catch (const std::exception&) {
        }
        out << (ok ? "[ok]   " : "[FAIL] ") << fx.eq << "  solved by  " << fx.cand.describe()
            << "\n";
        if (!ok) ++failures;
    }
    if (failures) {
        err << failures << " selftest case(s) failed\n";
        return 1;
    }
    out << "selftest passed\n";
    return 0;
}

struct BatchLine {
    std::size_t lineno;
    std::string text;
};

inline int run_batch(const std::string& path, bool as_json, std::ostream& out,
                     std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot open corpus file: " << path << "\n";
        return 1;
    }
    std::vector<BatchLine> lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        auto pos = trimmed.find('#');
        if (pos != std::string::npos) trimmed.erase(pos);
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        std::size_t start = 0;
        while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
            ++start;
        trimmed.erase(0, start);
        if (trimmed.empty()) continue;
        lines.push_back({lineno, trimmed});
    }
    // reject the whole file when any line fails to parse
    bool parse_failed = false;
    for (const auto& bl : lines) {
        try {
            parse_equation(bl.text);
        } catch (const std::exception& e) {
            err << "line " << bl.lineno << ": " << e.what() << "\n";
            parse_failed = true;
        }
    }
    if (parse_failed) return 1;
    // analyses are pure; fan out and emit in input order
    std::vector<std::future<std::string>> futures;
    futures.reserve(lines.size());
    for (const auto& bl : lines) {
        futures.push_back(std::async(std::launch::async, [bl, as_json]() {
            SchwarzEquation eq = parse_equation(bl.text);
            ReductionVerdict v = reduce(eq);
            if (as_json) return reduce_report_json(bl.text, eq, v).dump();
            return std::to_string(bl.lineno) + ": " + bl.text + "  =>  " + one_line_verdict(v);
        }));
    }
    for (auto& f : futures) out << f.get() << "\n";
    return 0;
}

// Run with argv-style arguments (excluding the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analyzer for Schwarzian differential equations S(f,z)^m = P(z,f)/Q(z,f)"};
    app.require_subcommand(1);

    std::string expr, equation, corpus, candidate_spec, at_str = "0";
    bool as_json = false;
    int trunc = default_trunc();

    CLI::App* cmd_schwarzian =
        app.add_subcommand("schwarzian", "print S(f,z) of a rational function of z");
    cmd_schwarzian->add_option("expr", expr, "rational function, e.g. \"(2z+3)/(z-5)\"")
        ->required();
    cmd_schwarzian->add_flag("--json", as_json, "emit JSON");

    CLI::App* cmd_classify = app.add_subcommand("classify", "classify the denominator Q");
    cmd_classify->add_option("equation", equation, "e.g. \"S(f)^2 = (f-1)/(f-2)\"")->required();
    cmd_classify->add_flag("--json", as_json, "emit JSON");

    CLI::App* cmd_reduce = app.add_subcommand("reduce", "full reduction verdict");
    cmd_reduce->add_option("equation", equation, "e.g. \"S(f) = 2\"")->required();
    cmd_reduce->add_flag("--json", as_json, "emit JSON");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "check a candidate solution by series residual");
    cmd_verify->add_option("equation", equation, "equation text")->required();
    cmd_verify
        ->add_option("--candidate", candidate_spec,
                     "exp:k | tan:k | mobius-exp:k:a:b:c:d | mobius-tan:k:a:b:c:d")
        ->required();
    cmd_verify->add_option("--at", at_str, "rational expansion point p/q (default 0)");
    cmd_verify->add_option("--trunc", trunc, "truncation length (default 16)");
    cmd_verify->add_flag("--json", as_json, "emit JSON");

    CLI::App* cmd_batch = app.add_subcommand("batch", "reduce every equation in a corpus file");
    cmd_batch->add_option("file", corpus, "one equation per line; # comments")->required();
    cmd_batch->add_flag("--json", as_json, "emit one JSON object per line");

    app.add_subcommand("selftest", "run the embedded golden corpus");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_schwarzian->parsed()) {
            RationalFunction f = parse_rational_function(expr);
            RationalFunction s = schwarzian_rational(f);
            if (as_json) {
                json j;
                j["input"] = expr;
                j["schwarzian"] = s.to_string();
                out << j.dump() << "\n";
            } else {
                out << s.to_string() << "\n";
            }
            return 0;
        }
        if (cmd_classify->parsed()) {
            SchwarzEquation eq = parse_equation(equation);
            if (as_json) {
                out << classify_report_json(equation, eq).dump() << "\n";
            } else {
                QClass qc = classify_q(eq);
                out << qtag_name(qc.tag);
                for (const auto& [key, value] : qc.param_strings())
                    out << " " << key << "=" << value;
                out << "\n";
            }
            return 0;
        }
        if (cmd_reduce->parsed()) {
            SchwarzEquation eq = parse_equation(equation);
            ReductionVerdict v = reduce(eq);
            if (as_json)
                out << reduce_report_json(equation, eq, v).dump() << "\n";
            else
                out << verdict_text(v);
            return 0;
        }
        if (cmd_verify->parsed()) {
            SchwarzEquation eq = parse_equation(equation);
            Candidate cand = parse_candidate(candidate_spec);
            Rat z0 = parse_rat(at_str);
            VerificationReport rep = verify_candidate(eq, cand, z0, trunc);
            if (as_json) {
                out << verify_report_json(equation, eq, rep, z0, trunc).dump() << "\n";
            } else {
                out << "candidate: " << rep.candidate << "\n";
                out << "residual: " << (rep.residual_zero ? "0 (zero through truncation)"
                                                          : rep.residual->to_string())
                    << "\n";
                if (rep.flagged_non_transcendental)
                    out << "flag: candidate is not transcendental\n";
            }
            return rep.residual_zero ? 0 : 1;
        }
        if (cmd_batch->parsed()) return run_batch(corpus, as_json, out, err);
        return run_selftest(out, err);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace swz
