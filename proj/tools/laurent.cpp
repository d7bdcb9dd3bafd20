// Command-line front end: check, build, verify, oracle, enumerate, export.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "laurent/laurent.hpp"

namespace {

using namespace laurent;

enum Exit : int {
    kOk = 0,
    kIo = 1,
    kInvalid = 2,
    kNotRealizable = 3,
    kBudget = 4,
    kVerifyFailed = 5,
};

void print_violations(const std::vector<Violation>& vs) {
    for (const auto& v : vs) std::cout << "  " << to_string(v.kind) << ": " << v.detail << "\n";
}

/// Parse and validate, printing INVALID on failure.
std::optional<LaurentPassport> load_passport(const std::string& text) {
    RawPassport raw;
    try {
        raw = parse_passport(text);
    } catch (const Error& e) {
        std::cout << "INVALID\n  " << e.what() << "\n";
        return std::nullopt;
    }
    auto res = validate(raw);
    if (!res.ok()) {
        std::cout << "INVALID\n";
        print_violations(res.violations);
        return std::nullopt;
    }
    return res.passport;
}

bool read_doc(const std::string& path, nlohmann::json& out) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        return false;
    }
    try {
        out = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed JSON in " << path << ": " << e.what() << "\n";
        return false;
    }
    return true;
}

bool write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return false;
    }
    out << text;
    return static_cast<bool>(out);
}

int cmd_check(const std::string& text) {
    auto p = load_passport(text);
    if (!p) return kInvalid;
    auto v = classify(*p);
    std::cout << to_string(v) << "\n";
    return is_realizable(v) ? kOk : kNotRealizable;
}

int cmd_build(const std::string& text, const std::string& out) {
    auto p = load_passport(text);
    if (!p) return kInvalid;
    auto res = build(*p);
    if (auto* nr = std::get_if<NotRealizableResult>(&res)) {
        std::cout << to_string(Verdict{Exceptional{nr->families}}) << "\n";
        return kNotRealizable;
    }
    const auto& tuple = std::get<ConstellationTuple>(res);
    if (!write_text(out, to_json(tuple).dump(2) + "\n")) return kIo;
    if (!out.empty() && out != "-") std::cout << "BUILT " << format_passport(*p) << " -> " << out << "\n";
    return kOk;
}

int cmd_verify(const std::string& doc_path, const std::string& text) {
    nlohmann::json j;
    if (!read_doc(doc_path, j)) return kIo;
    auto p = load_passport(text);
    if (!p) return kInvalid;
    ConstellationTuple c;
    try {
        c = from_json(j);
    } catch (const Error& e) {
        std::cout << "FAIL\n  " << e.what() << "\n";
        return kVerifyFailed;
    }
    VerifyReport rep;
    try {
        rep = verify_against(c, *p);
    } catch (const Error& e) {
        std::cout << "FAIL\n  " << e.what() << "\n";
        return kVerifyFailed;
    }
    if (rep.passed()) {
        std::cout << "PASS\n";
        return kOk;
    }
    std::cout << "FAIL\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    return kVerifyFailed;
}

int cmd_oracle(const std::string& text, const OracleOptions& opt, const std::string& out) {
    auto p = load_passport(text);
    if (!p) return kInvalid;
    auto res = oracle_decide(*p, opt);
    std::cout << to_string(res.tag) << " nodes=" << res.nodes << "\n";
    if (res.witness && !out.empty() && !write_text(out, to_json(*res.witness).dump(2) + "\n")) return kIo;
    switch (res.tag) {
        case OracleTag::Realizable: return kOk;
        case OracleTag::NotRealizable: return kNotRealizable;
        case OracleTag::BudgetExceeded: return kBudget;
    }
    return kOk;
}

int cmd_enumerate(int n, int q, bool only_exceptional) {
    for_each_passport(n, q, [&](const LaurentPassport& p) {
        auto v = classify(p);
        if (!only_exceptional || is_exceptional(v)) std::cout << format_passport(p) << "\t" << to_string(v) << "\n";
        return true;
    });
    return kOk;
}

int cmd_export(const std::string& doc_path, const std::string& format) {
    if (format != "dot") {
        std::cerr << "unsupported format " << format << "\n";
        return kIo;
    }
    nlohmann::json j;
    if (!read_doc(doc_path, j)) return kIo;
    try {
        std::cout << to_dot(from_json(j));
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kVerifyFailed;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Realizability of Laurent passports: decide, build witnesses, cross-check by exhaustive search"};
    app.require_subcommand(1);

    std::string passport, doc, out, format = "dot";
    int n = 0, q = 3, workers = 1;
    bool only_exceptional = false, no_reduce = false;
    std::uint64_t max_nodes = SearchBudget{}.max_nodes, max_millis = SearchBudget{}.max_millis;

    auto* check = app.add_subcommand("check", "Print REALIZABLE, EXCEPTIONAL families=[...] or INVALID");
    check->add_option("passport", passport, "e.g. \"2,2;2,2;3,1\"")->required();

    auto* bld = app.add_subcommand("build", "Construct a witness tuple as JSON");
    bld->add_option("passport", passport)->required();
    bld->add_option("-o,--output", out, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "Check a tuple document against a passport");
    ver->add_option("doc", doc)->required();
    ver->add_option("passport", passport)->required();

    auto* orc = app.add_subcommand("oracle", "Decide by exhaustive search");
    orc->add_option("passport", passport)->required();
    orc->add_option("--max-nodes", max_nodes)->check(CLI::PositiveNumber);
    orc->add_option("--max-millis", max_millis)->check(CLI::PositiveNumber);
    orc->add_option("--workers", workers)->check(CLI::PositiveNumber);
    orc->add_flag("--no-reduce", no_reduce, "disable the symmetry filter");
    orc->add_option("-o,--output", out, "write the witness here");

    auto* en = app.add_subcommand("enumerate", "List every passport of degree n with q branch points");
    en->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    en->add_option("--q", q)->required()->check(CLI::Range(3, 64));
    en->add_flag("--only-exceptional", only_exceptional);

    auto* exp = app.add_subcommand("export", "Render a tuple document");
    exp->add_option("doc", doc)->required();
    exp->add_option("--format", format)->check(CLI::IsMember({"dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kIo;
    }

    try {
        if (*check) return cmd_check(passport);
        if (*bld) return cmd_build(passport, out);
        if (*ver) return cmd_verify(doc, passport);
        if (*orc) {
            OracleOptions opt;
            opt.budget = {max_nodes, max_millis};
            opt.workers = workers;
            opt.reduce_symmetry = !no_reduce;
            return cmd_oracle(passport, opt, out);
        }
        if (*en) return cmd_enumerate(n, q, only_exceptional);
        if (*exp) return cmd_export(doc, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kIo;
}
