#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "aperylab/census.hpp"
#include "aperylab/factorization.hpp"
#include "aperylab/families.hpp"
#include "aperylab/poset.hpp"
#include "aperylab/serialize.hpp"
#include "aperylab/verify.hpp"

namespace aperylab::cli {

namespace {

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string show(const Rational& r, bool decimal) { return decimal ? r.str() + " (" + r.decimal(4) + ")" : r.str(); }

// Writes to --out when given, otherwise to the command's stdout.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    file << text;
}

int cmd_info(const NumericalSemigroup& s, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << semigroup_json(s).dump() << "\n";
        return kExitOk;
    }
    out << "S = " << s.str() << "\n"
        << "m = " << s.multiplicity() << "\n"
        << "e = " << s.embedding_dimension() << "\n"
        << "F = " << s.frobenius() << "\n"
        << "g = " << s.genus() << "\n"
        << "atoms = " << format_set(s.generators()) << "\n";
    return kExitOk;
}

int cmd_apery(const NumericalSemigroup& s, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << nlohmann::json(s.apery_set()).dump() << "\n";
    } else {
        out << format_set(s.apery_set()) << "\n";
    }
    return kExitOk;
}

int cmd_elasticity(const NumericalSemigroup& s, std::optional<Int> element, const std::string& format, bool decimal,
                   std::ostream& out) {
    if (element) {
        if (format == "json") {
            out << element_json(s, *element).dump() << "\n";
        } else {
            out << "n = " << *element << "\n"
                << "lengths = " << format_set(length_set(s, *element)) << "\n"
                << "rho = " << show(elasticity(s, *element), decimal) << "\n";
        }
        return kExitOk;
    }
    if (format == "json") {
        auto doc = apery_invariants_json(s);
        doc["semigroup"] = s.generators();
        out << doc.dump() << "\n";
        return kExitOk;
    }
    out << "S = " << s.str() << "\n";
    out << "n\tlengths\trho\n";
    for (const auto& row : apery_elasticity_table(s)) {
        out << row.element << "\t" << format_set(row.lengths) << "\t" << show(row.elasticity, decimal) << "\n";
    }
    const auto set = apery_elasticity_set(s);
    out << "R(Ap(S)) = " << format_set(set) << "\n"
        << "rho(Ap(S)) = " << show(set.back(), decimal) << "\n"
        << "AHFF = " << show(ahff(s), decimal) << "\n"
        << "MAE = " << show(mae(s), decimal) << "\n"
        << "AHF = " << (is_ahf(s) ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_poset(const NumericalSemigroup& s, bool json, bool with_width, bool with_graded, const std::string& path,
              std::ostream& out) {
    const AperyPoset p = build_poset(s);
    std::string text;
    if (json) {
        auto doc = poset_json(p);
        if (with_width) {
            doc["width"] = width(p);
            doc["minimal_antichain"] = minimal_nonzero_elements(p);
        }
        if (with_graded) doc["graded"] = is_graded(p);
        text = doc.dump() + "\n";
    } else {
        text = to_dot(p);
        if (with_width) {
            const auto w = width(p);
            text += "// width = " + std::to_string(w) + ", elements covering 0: " +
                    format_set(minimal_nonzero_elements(p)) + "\n";
            if (w < s.embedding_dimension()) {
                text += "// note: width " + std::to_string(w) + " < e(S) = " +
                        std::to_string(s.embedding_dimension()) + "\n";
            }
        }
        if (with_graded) text += std::string("// graded = ") + (is_graded(p) ? "true" : "false") + "\n";
    }
    emit(text, path, out);
    return kExitOk;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& params) {
    std::map<std::string, std::string> out;
    for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw usage_error("family parameter \"" + kv + "\" is not KEY=VALUE");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

Int parse_int(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const Int v = std::stoll(text, &used);
        if (used == text.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw usage_error("parameter " + key + " must be an integer, got \"" + text + "\"");
}

FamilyInstance build_family(const std::string& name, const std::vector<std::string>& raw) {
    auto params = parse_params(raw);
    auto take = [&](const std::string& key) -> std::optional<Int> {
        const auto it = params.find(key);
        if (it == params.end()) return std::nullopt;
        const Int v = parse_int(key, it->second);
        params.erase(it);
        return v;
    };
    auto need = [&](const std::string& key) {
        auto v = take(key);
        if (!v) throw usage_error("family " + name + " needs parameter " + key);
        return *v;
    };
    auto take_subset = [&]() {
        std::vector<Int> subset;
        const auto it = params.find("T");
        if (it == params.end()) return subset;
        if (!it->second.empty()) subset = parse_generators(it->second);
        params.erase(it);
        return subset;
    };

    std::optional<FamilyInstance> inst;
    if (name == "master") {
        const Int a = need("a");
        const Int b = need("b");
        inst = master_example(a, b, take("p"));
    } else if (name == "small-ahff") {
        const Int n = need("n");
        inst = small_ahff(n, take("p"));
    } else if (name == "ahf-grid") {
        inst = ahf_grid(need("n"));
    } else if (name == "large-mae") {
        const Int q = need("q");
        inst = large_mae(q, take("p"));
    } else if (name == "apery-choice") {
        const Int m = need("m");
        inst = apery_choice(m, take_subset());
    } else if (name == "non-ahf-choice") {
        const Int m = need("m");
        inst = non_ahf_choice(m, take_subset());
    } else {
        throw usage_error("unknown family \"" + name +
                          "\" (master, small-ahff, ahf-grid, large-mae, apery-choice, non-ahf-choice)");
    }
    if (!params.empty()) throw usage_error("unknown parameter " + params.begin()->first + " for family " + name);
    return std::move(*inst);
}

int cmd_family(const std::string& name, const std::vector<std::string>& params, bool do_verify,
               const std::string& format, std::ostream& out) {
    const FamilyInstance inst = build_family(name, params);
    std::vector<PredictionResult> results;
    if (do_verify) results = verify(inst);
    const bool ok = all_hold(results);

    if (format == "json") {
        auto doc = family_json(inst, do_verify ? &results : nullptr);
        if (do_verify) doc["verified"] = ok;
        out << doc.dump() << "\n";
    } else {
        out << "family " << inst.family << "\n";
        for (const auto& [k, v] : inst.parameters) out << "  " << k << " = " << v << "\n";
        if (!inst.subset.empty()) out << "  T = " << format_set(inst.subset) << "\n";
        out << "S = " << inst.semigroup.str() << "\n";
        if (do_verify) {
            for (const auto& r : results) {
                out << (r.holds ? "PASS " : "FAIL ") << r.invariant << "\n";
                if (!r.holds) {
                    out << "  - expected: " << r.expected << "\n"
                        << "  + computed: " << r.computed << "\n";
                }
            }
        } else {
            for (const auto& p : inst.predictions) out << "predicts " << p.invariant << " = " << p.expected << "\n";
        }
        for (const auto& note : inst.notes) out << "note: " << note << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int max_genus_cap() {
    if (const char* env = std::getenv("APERYLAB_MAX_GENUS")) {
        try {
            return std::stoi(env);
        } catch (const std::logic_error&) {
            throw usage_error(std::string("APERYLAB_MAX_GENUS is not an integer: ") + env);
        }
    }
    return kMaxCensusGenus;
}

int cmd_census(int max_genus, int multiplicity, unsigned threads, int split, const std::string& path,
               const std::string& format, std::ostream& out, std::ostream& err, const std::atomic<bool>* cancel) {
    const int cap = max_genus_cap();
    if (max_genus > cap) {
        throw usage_error("--max-genus " + std::to_string(max_genus) + " exceeds the cap " + std::to_string(cap) +
                          " (APERYLAB_MAX_GENUS)");
    }
    const CensusTable table = census(max_genus, {.threads = threads, .split_genus = split, .cancel = cancel});
    std::optional<ReferenceComparison> reference;
    if (table.complete && max_genus >= kReferenceGenus) reference = compare_with_reference(table);

    std::string text;
    if (format == "json") {
        auto doc = census_json(table, multiplicity);
        if (reference) {
            doc["reference"] = {{"genus", kReferenceGenus},
                                {"expected", {{"n", reference->expected_total}, {"h", reference->expected_ahf}}},
                                {"computed", {{"n", reference->computed_total}, {"h", reference->computed_ahf}}},
                                {"discrepancy", reference->discrepancy}};
        }
        text = doc.dump(1) + "\n";
    } else if (format == "text") {
        text = ratio_report(table, multiplicity);
        if (reference) text += reference->str() + "\n";
    } else {
        text = census_csv(table, multiplicity);
        if (reference) err << reference->str() << "\n";
    }
    emit(text, path, out);
    if (!table.complete) {
        err << "census interrupted; rows with genus <= " << table.complete_through << " are exact\n";
        return kExitPartial;
    }
    return kExitOk;
}

int cmd_verify(int theorem, const std::string& sweep, unsigned threads, const std::string& format,
               std::ostream& out) {
    std::optional<SweepRange> range;
    if (!sweep.empty()) range = SweepRange::parse(sweep, theorem == 3 ? 3 : theorem == 5 || theorem == 6 ? 2 : 0);
    const VerificationReport report = verify_theorem(theorem, range, threads);
    if (format == "json") {
        out << report_json(report).dump() << "\n";
    } else {
        out << report.str(true);
    }
    return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::atomic<bool>* cancel) {
    CLI::App app{"Apery-set factorization invariants of numerical semigroups", "aperylab"};
    app.require_subcommand(1, 1);

    std::string gens_text;
    std::string format = "text";
    std::string out_path;
    bool decimal = false;

    auto* info = app.add_subcommand("info", "multiplicity, embedding dimension, Frobenius number, genus, atoms");
    info->add_option("GENS", gens_text, "generators, e.g. 5,6,9")->required();
    info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* apery = app.add_subcommand("apery", "Apery set with respect to the multiplicity");
    apery->add_option("GENS", gens_text)->required();
    apery->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::optional<Int> element;
    auto* elast = app.add_subcommand("elasticity", "elasticity of one element, or the whole Apery table");
    elast->add_option("GENS", gens_text)->required();
    elast->add_option("N", element, "a single element");
    elast->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    elast->add_flag("--decimal", decimal, "also print decimals");

    bool dot = false, poset_as_json = false, with_width = false, with_graded = false;
    auto* poset = app.add_subcommand("poset", "Apery poset as DOT or JSON");
    poset->add_option("GENS", gens_text)->required();
    auto* dot_flag = poset->add_flag("--dot", dot, "DOT output (default)");
    poset->add_flag("--json", poset_as_json, "JSON {elements, covers}")->excludes(dot_flag);
    poset->add_flag("--width", with_width, "report the width");
    poset->add_flag("--graded", with_graded, "report gradedness");
    poset->add_option("--out", out_path, "output file");

    std::string family_name;
    std::vector<std::string> family_params;
    bool do_verify = false;
    auto* family = app.add_subcommand("family", "construct a family member and check its predicted invariants");
    family->add_option("NAME", family_name)->required();
    family->add_option("PARAMS", family_params, "KEY=VALUE, e.g. a=3 b=2 p=3 or m=7 T=5");
    family->add_flag("--verify", do_verify, "evaluate predictions; exit 1 on any failure");
    family->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    int max_genus = 0, multiplicity = 0, split = 6;
    unsigned threads = 1;
    std::string census_format = "csv";
    auto* cen = app.add_subcommand("census", "count numerical semigroups and AHF members by genus and multiplicity");
    cen->add_option("--max-genus", max_genus)->required()->check(CLI::Range(0, kMaxCensusGenus));
    cen->add_option("--multiplicity", multiplicity, "restrict per-cell output to one multiplicity");
    cen->add_option("--threads", threads)->check(CLI::Range(1u, 1024u));
    cen->add_option("--split-genus", split, "genus at which the tree is split into tasks");
    cen->add_option("--out", out_path);
    cen->add_option("--format", census_format)->check(CLI::IsMember({"csv", "json", "text"}));

    int theorem = 0;
    std::string sweep;
    auto* ver = app.add_subcommand("verify", "run the property suite for one theorem");
    ver->add_option("--theorem", theorem)->required()->check(CLI::IsMember({1, 2, 3, 5, 6, 8, 10}));
    ver->add_option("--sweep", sweep, "LO..HI or HI");
    ver->add_option("--threads", threads)->check(CLI::Range(1u, 1024u));
    ver->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv{"aperylab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        auto semigroup = [&] { return NumericalSemigroup::from_generators(parse_generators(gens_text)); };
        if (info->parsed()) return cmd_info(semigroup(), format, out);
        if (apery->parsed()) return cmd_apery(semigroup(), format, out);
        if (elast->parsed()) return cmd_elasticity(semigroup(), element, format, decimal, out);
        if (poset->parsed()) return cmd_poset(semigroup(), poset_as_json, with_width, with_graded, out_path, out);
        if (family->parsed()) return cmd_family(family_name, family_params, do_verify, format, out);
        if (cen->parsed()) {
            return cmd_census(max_genus, multiplicity, threads, split, out_path, census_format, out, err, cancel);
        }
        if (ver->parsed()) return cmd_verify(theorem, sweep, threads, format, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace aperylab::cli
