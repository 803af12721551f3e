// Command-line front end over the C API.
#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stellar/stellar.h"

namespace {

using Json = nlohmann::ordered_json;

struct ComplexDeleter {
    void operator()(stellar_complex* c) const { stellar_free(c); }
};
using Handle = std::unique_ptr<stellar_complex, ComplexDeleter>;

// Carries a status out of a verb; the message is printed to stderr.
struct Failure {
    stellar_status status;
    std::string message;
};

struct Args {
    std::string verb;
    std::vector<std::string> operands;
    std::string field = "q";
    int k = 1;
    bool k_given = false;
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    int jobs = 1;
    int cap = 0;
    std::string mode = "direct";
    std::string json_path;
    std::string out_path;
    bool certified = false;
};

std::uint32_t parse_field(const std::string& text)
{
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "q") return 0;
    if (t.size() >= 2 && t[0] == 'z' && t.find_first_not_of("0123456789", 1) == std::string::npos && t.size() < 11)
        return static_cast<std::uint32_t>(std::stoul(t.substr(1)));
    throw Failure{STELLAR_INPUT, "unknown field '" + text + "' (use q, z2, z3, z5 or zP)"};
}

stellar_options options_of(const Args& a)
{
    stellar_options o;
    stellar_default_options(&o);
    o.field = parse_field(a.field);
    o.k = a.k;
    o.budget = a.budget;
    o.seed = a.seed;
    o.jobs = a.jobs;
    o.cap = a.cap;
    if (a.mode == "direct")
        o.mode = STELLAR_TIGHT_DIRECT;
    else if (a.mode == "p18" || a.mode == "mu-beta")
        o.mode = STELLAR_TIGHT_MU_BETA;
    else
        throw Failure{STELLAR_INPUT, "unknown tightness mode '" + a.mode + "' (use direct or p18)"};
    o.certified = a.certified ? 1 : 0;
    return o;
}

// Turns a C API call into (status, parsed report); input and internal errors become Failures.
template <class Fn>
std::pair<stellar_status, Json> call(Fn&& fn)
{
    char* text = nullptr;
    const stellar_status status = fn(&text);
    Json report;
    if (text) {
        report = Json::parse(text);
        stellar_string_free(text);
    }
    if (status == STELLAR_INPUT || status == STELLAR_INTERNAL) throw Failure{status, stellar_last_error()};
    if (status == STELLAR_BUDGET && !report.is_object() && !report.is_array())
        throw Failure{status, stellar_last_error()};
    return {status, report};
}

Handle load(const std::string& path)
{
    stellar_complex* c = nullptr;
    const stellar_status status = stellar_load(path.c_str(), &c);
    if (status != STELLAR_OK) throw Failure{status, path + ": " + stellar_last_error()};
    return Handle(c);
}

const std::string& operand(const Args& a, std::size_t i, const char* what)
{
    if (a.operands.size() <= i) throw Failure{STELLAR_INPUT, a.verb + ": missing " + what};
    return a.operands[i];
}

std::string tuple(const Json& values)
{
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ", ";
        s += values[i].is_string() ? values[i].get<std::string>() : values[i].dump();
    }
    return s + ")";
}

std::string face(const Json& names)
{
    std::string s = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += " ";
        s += names[i].get<std::string>();
    }
    return s + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_complex(const stellar_complex* c, const std::string& path)
{
    if (stellar_save(c, path.c_str()) != STELLAR_OK) throw Failure{STELLAR_INPUT, stellar_last_error()};
}

void print_facets(const stellar_complex* c)
{
    char* text = nullptr;
    if (stellar_facet_text(c, &text) != STELLAR_OK) throw Failure{STELLAR_INTERNAL, stellar_last_error()};
    std::cout << text;
    stellar_string_free(text);
}

struct Outcome {
    stellar_status status = STELLAR_OK;
    Json report;
};

Outcome run_vectors(const Args& a, const char* key)
{
    auto x = load(operand(a, 0, "complex"));
    auto [status, r] = call([&](char** j) { return stellar_vectors(x.get(), j); });
    std::cout << key << " = " << tuple(r[key]) << "\n";
    return {status, r};
}

Outcome run_betti(const Args& a, const stellar_options& o)
{
    auto x = load(operand(a, 0, "complex"));
    auto [status, r] = call([&](char** j) { return stellar_betti(x.get(), &o, j); });
    std::cout << "field: " << r["field"].get<std::string>() << "\n";
    std::cout << "beta = " << tuple(r["beta"]) << "\n";
    if (r.contains("orientable")) std::cout << "orientable: " << yes_no(r["orientable"].get<bool>()) << "\n";
    return {status, r};
}

Outcome run_identities(const Args& a, const stellar_options& o)
{
    auto x = load(operand(a, 0, "complex"));
    auto [status, r] = call([&](char** j) { return stellar_identities(x.get(), &o, j); });
    bool all = true;
    for (const char* key : {"dehn_sommerville", "klee"}) {
        const bool ok = r[key]["ok"].get<bool>();
        const bool applies = r[key]["applies"].get<bool>();
        all = all && (ok || !applies);
        std::cout << key << ": residuals " << tuple(r[key]["residuals"])
                  << (!applies ? " (hypothesis not met)" : ok ? " ok" : " FAIL") << "\n";
    }
    for (const auto& line : r["link_g_identity"]) {
        const bool ok = line["holds"].get<bool>();
        all = all && ok;
        std::cout << "link g identity j=" << line["j"].dump() << ": " << line["lhs"].dump() << " vs "
                  << line["rhs"].dump() << (ok ? " ok" : " FAIL") << "\n";
    }
    if (r.contains("wk_relations")) {
        std::cout << "relations forced on W_" << o.k << " members (they need not hold otherwise):\n";
        for (const auto& line : r["wk_relations"])
            std::cout << "  " << line["label"].get<std::string>() << ": " << line["lhs"].get<std::string>() << " vs "
                      << line["rhs"].get<std::string>() << (line["holds"].get<bool>() ? " holds" : " differs") << "\n";
    }
    return {all ? status : STELLAR_REFUTED, r};
}

Outcome run_sigma(const Args& a, const stellar_options& o)
{
    auto x = load(operand(a, 0, "complex"));
    auto [status, r] = call([&](char** j) { return stellar_sigma(x.get(), &o, j); });
    std::cout << "field: " << r["field"].get<std::string>() << "\n";
    std::cout << "sigma = " << tuple(r["sigma"]) << "\n";
    return {status, r};
}

Outcome run_mu(const Args& a, const stellar_options& o)
{
    auto x = load(operand(a, 0, "complex"));
    auto [status, r] = call([&](char** j) { return stellar_mu(x.get(), &o, j); });
    std::cout << "field: " << r["field"].get<std::string>() << "\n";
    std::cout << "mu = " << tuple(r["mu"]) << "\n";
    std::cout << "beta = " << tuple(r["beta"]) << "\n";
    std::cout << "slack = " << tuple(r["slack"]) << "\n";
    std::cout << "2-neighbourly: " << yes_no(r["two_neighbourly"].get<bool>()) << "\n";
    std::cout << "verdict: " << r["verdict"].get<std::string>() << "\n";
    for (const auto& w : r["witnesses"]) std::cout << "  " << w.get<std::string>() << "\n";
    return {status, r};
}

void print_battery(const Json& r)
{
    std::cout << "criteria for k = " << r["k"].dump() << " over " << r["field"].get<std::string>() << ":\n";
    for (const auto& line : r["lines"]) {
        std::cout << "  " << line["criterion"].get<std::string>() << " " << line["clause"].get<std::string>() << ": "
                  << line["outcome"].get<std::string>() << " (" << line["hypothesis"].get<std::string>() << ")";
        if (!line["lhs"].get<std::string>().empty())
            std::cout << " " << line["lhs"].get<std::string>() << " vs " << line["rhs"].get<std::string>();
        if (line.contains("note")) std::cout << "; " << line["note"].get<std::string>();
        std::cout << "\n";
    }
    std::cout << "consistent: " << yes_no(r["consistent"].get<bool>()) << "\n";
}

Outcome run_tight(const Args& a, const stellar_options& o)
{
    auto x = load(operand(a, 0, "complex"));
    auto [status, r] = call([&](char** j) { return stellar_tight(x.get(), &o, j); });
    const bool tight = r["tight"].get<bool>();
    std::cout << "tight: " << yes_no(tight);
    if (!r["mu"].empty()) {
        if (r["mu"].size() == r["beta"].size() && tuple(r["mu"]) == tuple(r["beta"]))
            std::cout << "; mu = beta = " << tuple(r["mu"]);
        else
            std::cout << "; mu = " << tuple(r["mu"]) << "; beta = " << tuple(r["beta"]);
    } else {
        std::cout << "; beta = " << tuple(r["beta"]);
    }
    std::cout << "\n";
    if (!r["witness"].is_null())
        std::cout << "witness: " << face(r["witness"]["subset"]) << " in degree " << r["witness"]["degree"].dump()
                  << "\n";
    if (!r["reason"].get<std::string>().empty()) std::cout << "reason: " << r["reason"].get<std::string>() << "\n";
    if (!a.k_given) return {status, r};

    auto [battery_status, battery] = call([&](char** j) { return stellar_criteria(x.get(), &o, j); });
    print_battery(battery);
    Json both;
    both["tightness"] = r;
    both["criteria"] = battery;
    return {status != STELLAR_OK ? status : battery_status, both};
}

Outcome run_moves(const Args& a)
{
    auto x = load(operand(a, 0, "complex"));
    auto [status, r] = call([&](char** j) { return stellar_moves(x.get(), j); });
    std::cout << r["count"].dump() << " admissible moves\n";
    for (const auto& m : r["moves"])
        std::cout << "  index " << m["index"].dump() << ": " << face(m["alpha"]) << " -> " << face(m["beta"]) << "\n";
    return {status, r};
}

void print_search_header(const Args& a)
{
    std::cout << "k = " << a.k << ", budget = " << a.budget << "\n";
}

Outcome run_stellate(const Args& a, const stellar_options& o)
{
    auto x = load(operand(a, 0, "sphere"));
    print_search_header(a);
    auto [status, r] = call([&](char** j) { return stellar_stellate(x.get(), &o, j); });
    if (status == STELLAR_OK)
        std::cout << a.k << "-stellated: yes; certificate of " << r["certificate"]["steps"].size() << " moves\n";
    else if (status == STELLAR_REFUTED)
        std::cout << a.k << "-stellated: no (exhaustive search)\n";
    else
        std::cout << a.k << "-stellated: undecided (search cut short)\n";
    std::cout << "nodes: " << r["nodes"].dump() << "; length lower bound: " << r["length_lower_bound"].dump() << "\n";
    return {status, r};
}

Outcome run_wk(const Args& a, const stellar_options& o)
{
    auto x = load(operand(a, 0, "manifold"));
    print_search_header(a);
    auto [status, r] = call([&](char** j) { return stellar_wk(x.get(), &o, j); });
    std::cout << "W_" << a.k << " membership: " << r["verdict"].get<std::string>() << "\n";
    for (const auto& l : r["links"]) {
        std::cout << "  link of " << l["vertex"].get<std::string>() << ": " << l["outcome"].get<std::string>();
        if (l["length"].get<long long>() >= 0) std::cout << " (" << l["length"].dump() << " moves)";
        if (!l["complete"].get<bool>() && l["outcome"] == "exhausted") std::cout << " (incomplete)";
        std::cout << "\n";
    }
    return {status, r};
}

Outcome run_shellcheck(const Args& a)
{
    auto x = load(operand(a, 0, "ball"));
    const std::string& path = operand(a, 1, "shelling order file");
    std::ifstream in(path);
    if (!in) throw Failure{STELLAR_INPUT, "cannot open " + path};
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string order = buf.str();
    auto [status, r] = call([&](char** j) { return stellar_shellcheck(x.get(), order.c_str(), j); });
    if (r["valid"].get<bool>()) {
        std::cout << "valid shelling\n";
        std::cout << "step index counts (from -1) = " << tuple(r["index_counts"]) << "\n";
        std::cout << "h = " << tuple(r["h"]) << "; matches h-vector: " << yes_no(r["h_matches"].get<bool>()) << "\n";
        if (!r["certificate"].is_null())
            std::cout << "k bound (largest step index + 1): " << r["certificate"]["k_bound"].dump() << "\n";
    } else {
        std::cout << "invalid at position " << r["failed_position"].dump() << ": "
                  << r["message"].get<std::string>() << "\n";
    }
    return {status, r};
}

Outcome run_shellfind(const Args& a, const stellar_options& o)
{
    auto x = load(operand(a, 0, "ball"));
    std::cout << "budget = " << a.budget << "\n";
    auto [status, r] = call([&](char** j) { return stellar_shellfind(x.get(), &o, j); });
    const std::string outcome = r["outcome"].get<std::string>();
    if (outcome == "found") {
        std::cout << "shelling found; k bound " << r["certificate"]["k_bound"].dump()
                  << "; facets added after the initial one:\n";
        for (const auto& step : r["certificate"]["steps"]) {
            Json facet = step["alpha"];
            for (const auto& v : step["beta"]) facet.push_back(v);
            std::sort(facet.begin(), facet.end());
            std::cout << "  " << face(facet) << "\n";
        }
    } else if (outcome == "none") {
        std::cout << "no shelling exists\n";
    } else {
        std::cout << "undecided: budget exhausted\n";
    }
    std::cout << "nodes: " << r["nodes"].dump() << "\n";
    return {status, r};
}

Outcome run_ears(const Args& a)
{
    auto x = load(operand(a, 0, "ball"));
    auto [status, r] = call([&](char** j) { return stellar_ears(x.get(), j); });
    std::cout << r["count"].dump() << " ears\n";
    for (const auto& e : r["ears"]) std::cout << "  " << face(e) << "\n";
    return {status, r};
}

Outcome run_stacked(const Args& a, const stellar_options& o)
{
    auto x = load(operand(a, 0, "ball"));
    auto [status, r] = call([&](char** j) { return stellar_stacked(x.get(), &o, j); });
    std::cout << a.k << "-stacked: " << yes_no(r["stacked"].get<bool>()) << "\n";
    if (r.contains("dual_tree_criterion"))
        std::cout << "dual graph criterion: " << yes_no(r["dual_tree_criterion"].get<bool>()) << "\n";
    return {status, r};
}

Outcome run_canonical(const Args& a, const stellar_options& o, bool manifold)
{
    auto x = load(operand(a, 0, manifold ? "manifold" : "sphere"));
    stellar_complex* raw = nullptr;
    auto [status, r] = call([&](char** j) {
        return manifold ? stellar_canonical_manifold(x.get(), &o, j, &raw) : stellar_canonical_ball(x.get(), &o, j, &raw);
    });
    Handle built(raw);
    std::cout << "status: " << r["status"].get<std::string>() << "\n";
    if (!r["diagnostic"].get<std::string>().empty()) std::cout << "diagnostic: " << r["diagnostic"].get<std::string>() << "\n";
    std::cout << "f = " << tuple(r["f"]) << "\n";
    if (!a.out_path.empty() && built) write_complex(built.get(), a.out_path);
    return {status, r};
}

Outcome run_kn(const Args& a)
{
    const int d = std::stoi(operand(a, 0, "dimension"));
    stellar_complex* m = nullptr;
    stellar_complex* mbar = nullptr;
    const stellar_status s = stellar_klee_novik(a.k, d, &m, &mbar);
    if (s != STELLAR_OK) throw Failure{s, stellar_last_error()};
    Handle boundary(m), filling(mbar);
    auto [status, rm] = call([&](char** j) { return stellar_vectors(boundary.get(), j); });
    auto [status2, rb] = call([&](char** j) { return stellar_vectors(filling.get(), j); });
    std::cout << "M(" << a.k << "," << d << "): f = " << tuple(rm["f"]) << "; g = " << tuple(rm["g"]) << "\n";
    std::cout << "filling: f = " << tuple(rb["f"]) << "\n";
    if (!a.out_path.empty()) {
        write_complex(boundary.get(), a.out_path);
        write_complex(filling.get(), a.out_path + ".filling");
    }
    Json r;
    r["k"] = a.k;
    r["d"] = d;
    r["boundary"] = rm;
    r["filling"] = rb;
    return {status != STELLAR_OK ? status : status2, r};
}

Outcome run_corpus(const Args& a)
{
    auto [status, r] = call([&](char** j) { return stellar_corpus(j); });
    if (a.operands.empty() || a.operands[0] == "verify") {
        // Building the corpus checks every entry's f-vector and digest; a mismatch is an internal error.
        for (const auto& e : r)
            std::cout << e["name"].get<std::string>() << ": f = " << tuple(e["f"]) << "  "
                      << e["description"].get<std::string>() << "\n";
        if (!a.operands.empty()) std::cout << r.size() << " entries verified\n";
        return {status, r};
    }
    auto x = load("corpus:" + a.operands[0]);
    if (a.out_path.empty())
        print_facets(x.get());
    else
        write_complex(x.get(), a.out_path);
    return {status, Json()};
}

void on_check(int id, const char* title, int passed, const char* failures, void*)
{
    std::cout << (passed ? "PASS " : "FAIL ") << id << " " << title << "\n";
    if (!passed)
        for (const auto& f : Json::parse(failures)) std::cout << "    " << f.get<std::string>() << "\n";
    std::cout.flush();
}

Outcome run_verify(const stellar_options& o)
{
    auto [status, r] = call([&](char** j) { return stellar_verify(&o, 1, on_check, nullptr, j); });
    std::cout << (status == STELLAR_OK ? "all checks passed" : "verification failed") << "\n";
    return {status, r};
}

Outcome dispatch(const Args& a)
{
    const stellar_options o = options_of(a);
    const std::string& v = a.verb;
    if (v == "fvec") return run_vectors(a, "f");
    if (v == "hvec") return run_vectors(a, "h");
    if (v == "gvec") return run_vectors(a, "g");
    if (v == "betti") return run_betti(a, o);
    if (v == "identities") return run_identities(a, o);
    if (v == "sigma") return run_sigma(a, o);
    if (v == "mu") return run_mu(a, o);
    if (v == "tight") return run_tight(a, o);
    if (v == "moves") return run_moves(a);
    if (v == "stellate") return run_stellate(a, o);
    if (v == "wk") return run_wk(a, o);
    if (v == "shellcheck") return run_shellcheck(a);
    if (v == "shellfind") return run_shellfind(a, o);
    if (v == "ears") return run_ears(a);
    if (v == "stacked") return run_stacked(a, o);
    if (v == "canonical-ball") return run_canonical(a, o, false);
    if (v == "canonical-manifold") return run_canonical(a, o, true);
    if (v == "kn") return run_kn(a);
    if (v == "corpus") return run_corpus(a);
    if (v == "verify-paper") return run_verify(o);
    throw Failure{STELLAR_INPUT, "unknown verb '" + v + "'"};
}

const char* kVerbs =
    "verbs:\n"
    "  fvec|hvec|gvec|betti|identities COMPLEX   vectors, Betti numbers, identity residuals\n"
    "  sigma|mu COMPLEX                         sigma- and mu-vectors (--field, --cap, --jobs)\n"
    "  tight COMPLEX                            tightness (--mode direct|p18; --k adds the criteria)\n"
    "  moves COMPLEX                            admissible bistellar moves\n"
    "  stellate SPHERE | wk MANIFOLD            k-stellation and W_k membership searches\n"
    "  shellcheck BALL ORDER | shellfind BALL   shelling verification and search\n"
    "  ears|stacked BALL                        ears, k-stackedness\n"
    "  canonical-ball SPHERE                    canonical filling ball (--out PATH)\n"
    "  canonical-manifold MANIFOLD              canonical filling manifold (--out PATH)\n"
    "  kn D                                     M(k,D) and its filling (--k, --out PATH)\n"
    "  corpus [verify|NAME]                     list, self-check or export the embedded corpus\n"
    "  verify-paper                             run every numbered check, stopping at the first failure\n"
    "COMPLEX is a facet file path or corpus:NAME.\n";

}  // namespace

int main(int argc, char** argv)
{
    Args a;
    CLI::App app{"Triangulated spheres, balls and manifolds: moves, vectors, homology and tightness."};
    app.footer(kVerbs);
    app.add_option("verb", a.verb, "Operation to run")->required();
    app.add_option("operands", a.operands, "Inputs of the verb");
    app.add_option("--field", a.field, "Coefficient field: q, z2, z3, z5 or zP");
    auto* k_opt = app.add_option("--k", a.k, "Parameter k of the stellation, stacking and W_k operations");
    app.add_option("--budget", a.budget, "Search budget in explored nodes");
    app.add_option("--seed", a.seed, "Seed for randomised tie-breaking");
    app.add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cap", a.cap, "Vertex cap for subset enumeration")->check(CLI::NonNegativeNumber);
    app.add_option("--mode", a.mode, "Tightness mode: direct or p18");
    app.add_option("--json", a.json_path, "Write the JSON report to PATH ('-' for stdout)");
    app.add_option("--out", a.out_path, "Write a constructed complex to PATH");
    app.add_flag("--certified", a.certified, "Treat the input as a certified W_k member in the criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return STELLAR_INPUT;
    }
    a.k_given = k_opt->count() > 0;

    try {
        std::cout << "# stellar " << a.verb;
        for (const auto& op : a.operands) std::cout << " " << op;
        std::cout << " (seed " << a.seed << ")\n";
        const Outcome out = dispatch(a);
        if (!a.json_path.empty()) {
            Json doc;
            doc["verb"] = a.verb;
            doc["operands"] = a.operands;
            doc["seed"] = a.seed;
            doc["status"] = static_cast<int>(out.status);
            doc["report"] = out.report;
            if (a.json_path == "-") {
                std::cout << doc.dump(2) << "\n";
            } else {
                std::ofstream f(a.json_path);
                if (!f) throw Failure{STELLAR_INPUT, "cannot write " + a.json_path};
                f << doc.dump(2) << "\n";
            }
        }
        return out.status;
    } catch (const Failure& f) {
        std::cerr << "stellar: " << f.message << "\n";
        if (f.status == STELLAR_INPUT && f.message.rfind("unknown verb", 0) == 0) std::cerr << app.help();
        return f.status;
    } catch (const std::exception& e) {
        std::cerr << "stellar: " << e.what() << "\n";
        return STELLAR_INPUT;
    }
}
