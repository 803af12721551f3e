#include "stellar/stellar.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "stellar/complex.hpp"
#include "stellar/constructions.hpp"
#include "stellar/homology.hpp"
#include "stellar/moves.hpp"
#include "stellar/tightness.hpp"
#include "stellar/vectors.hpp"
#include "stellar/verify.hpp"

struct stellar_complex {
    stellar::Complex complex;
};

namespace {

using stellar::Complex;
using stellar::Error;
using Json = nlohmann::ordered_json;

thread_local std::string last_error;

stellar_status fail(stellar_status status, const std::string& message)
{
    last_error = message;
    return status;
}

// Runs body, translating exceptions into status codes and the thread's last error.
template <class Fn>
stellar_status guarded(Fn&& body)
{
    last_error.clear();
    try {
        return body();
    } catch (const Error& e) {
        switch (e.kind()) {
        case Error::Kind::Budget: return fail(STELLAR_BUDGET, e.what());
        case Error::Kind::Internal: return fail(STELLAR_INTERNAL, e.what());
        default: return fail(STELLAR_INPUT, e.what());
        }
    } catch (const std::bad_alloc&) {
        return fail(STELLAR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(STELLAR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const Json& j, char** out)
{
    if (out) *out = copy_string(j.dump(2));
}

const Complex& get(const stellar_complex* c)
{
    if (!c) throw Error(Error::Kind::Input, "null complex handle");
    return c->complex;
}

stellar_options defaults()
{
    stellar_options o;
    stellar_default_options(&o);
    return o;
}

const stellar_options& opts(const stellar_options* o)
{
    static const stellar_options fallback = defaults();
    return o ? *o : fallback;
}

stellar::Field field_of(const stellar_options& o)
{
    return o.field == 0 ? stellar::Field::rationals() : stellar::Field::prime(o.field);
}

stellar::TightnessOptions tightness_of(const stellar_options& o)
{
    stellar::TightnessOptions t;
    t.jobs = o.jobs;
    if (o.cap > 0) t.sigma_cap = t.direct_cap = o.cap;
    return t;
}

stellar::StellationOptions stellation_of(const stellar_options& o)
{
    stellar::StellationOptions s;
    s.budget = o.budget;
    s.seed = o.seed;
    return s;
}

Json number(const stellar::BigInt& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(v));
    return Json(stellar::to_string(v));
}

Json numbers(const std::vector<stellar::BigInt>& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(number(x));
    return out;
}

Json rationals(const std::vector<stellar::Rational>& v)
{
    Json out = Json::array();
    for (const auto& q : v) out.push_back(stellar::to_string(q));
    return out;
}

std::vector<std::string> sorted_names(const Complex& x, stellar::Face f)
{
    auto names = x.names_of(f);
    std::sort(names.begin(), names.end());
    return names;
}

Json parse_report(const std::string& text) { return Json::parse(text); }

Json certificate_json(const std::optional<stellar::MoveCertificate>& cert)
{
    return cert ? parse_report(cert->to_json()) : Json(nullptr);
}

Json stellation_json(const stellar::StellationResult& r)
{
    Json j;
    j["outcome"] = r.outcome == stellar::StellationResult::Outcome::Certified ? "certified" : "exhausted";
    j["complete"] = r.complete;
    j["nodes"] = r.nodes;
    j["length_lower_bound"] = number(r.h_k_minus_one);
    j["index_counts"] = r.index_counts;
    j["certificate"] = certificate_json(r.certificate);
    return j;
}

stellar_status own(Complex c, stellar_complex** out)
{
    if (!out) throw Error(Error::Kind::Input, "null output handle");
    *out = new stellar_complex{std::move(c)};
    return STELLAR_OK;
}

}  // namespace

extern "C" {

void stellar_default_options(stellar_options* options)
{
    if (!options) return;
    options->field = 0;
    options->k = 1;
    options->budget = 1'000'000;
    options->seed = 0;
    options->jobs = 1;
    options->cap = 0;
    options->mode = STELLAR_TIGHT_DIRECT;
    options->certified = 0;
}

const char* stellar_last_error(void) { return last_error.c_str(); }

void stellar_string_free(char* text) { std::free(text); }

stellar_status stellar_load(const char* path, stellar_complex** out)
{
    return guarded([&] {
        if (!path) throw Error(Error::Kind::Input, "null path");
        const std::string p(path);
        if (p.rfind("corpus:", 0) == 0) return own(stellar::named_complex(p.substr(7)), out);
        return own(stellar::load_facet_file(p), out);
    });
}

stellar_status stellar_parse(const char* text, stellar_complex** out)
{
    return guarded([&] {
        if (!text) throw Error(Error::Kind::Input, "null text");
        return own(stellar::parse_facet_text(text), out);
    });
}

stellar_status stellar_save(const stellar_complex* complex, const char* path)
{
    return guarded([&] {
        if (!path) throw Error(Error::Kind::Input, "null path");
        stellar::save_facet_file(get(complex), path);
        return STELLAR_OK;
    });
}

stellar_status stellar_facet_text(const stellar_complex* complex, char** out)
{
    return guarded([&] {
        *out = copy_string(stellar::to_facet_text(get(complex)));
        return STELLAR_OK;
    });
}

void stellar_free(stellar_complex* complex) { delete complex; }

stellar_status stellar_summary(const stellar_complex* complex, char** json)
{
    return guarded([&] {
        const Complex& x = get(complex);
        Json j;
        j["vertices"] = x.vertex_count();
        j["dimension"] = x.dim();
        j["facets"] = x.facets().size();
        j["pure"] = x.is_pure();
        j["f"] = numbers(stellar::f_vector(x));
        j["euler_characteristic"] = stellar::euler_characteristic(x);
        j["neighbourliness"] = stellar::neighbourliness(x);
        j["connected"] = stellar::is_connected(x);
        j["closed_pseudomanifold"] = stellar::is_closed_pseudomanifold(x);
        j["digest"] = x.digest();
        emit(j, json);
        return STELLAR_OK;
    });
}

stellar_status stellar_vectors(const stellar_complex* complex, char** json)
{
    return guarded([&] {
        const auto p = stellar::profile(get(complex));
        Json j;
        j["d"] = p.d;
        j["f"] = numbers(p.f);
        j["h"] = numbers(p.h);
        j["g"] = numbers(p.g);
        emit(j, json);
        return STELLAR_OK;
    });
}

stellar_status stellar_betti(const stellar_complex* complex, const stellar_options* options, char** json)
{
    return guarded([&] {
        const Complex& x = get(complex);
        const auto field = field_of(opts(options));
        const auto table = stellar::betti(x, field);
        Json j;
        j["field"] = field.name();
        j["beta"] = table.beta;
        j["reduced"] = table.reduced;
        if (stellar::is_closed_pseudomanifold(x)) j["orientable"] = stellar::orientable(x, field);
        emit(j, json);
        return STELLAR_OK;
    });
}

stellar_status stellar_identities(const stellar_complex* complex, const stellar_options* options, char** json)
{
    return guarded([&] {
        const Complex& x = get(complex);
        auto residuals = [](const stellar::ResidualReport& r) {
            Json j;
            j["first_index"] = r.first_index;
            j["residuals"] = numbers(r.residuals);
            j["ok"] = r.ok();
            return j;
        };
        // Klee's relations need a homology manifold, Dehn-Sommerville a homology sphere.
        const bool manifold = stellar::is_homology_manifold(x, stellar::Field::rationals());
        bool sphere = manifold;
        if (manifold) {
            const auto reduced = stellar::betti(x, stellar::Field::rationals()).reduced;
            for (int i = 0; i < x.dim(); ++i) sphere = sphere && reduced[i] == 0;
            sphere = sphere && reduced[x.dim()] == 1;
        }
        Json j;
        j["dehn_sommerville"] = residuals(stellar::check_dehn_sommerville(x));
        j["dehn_sommerville"]["applies"] = sphere;
        j["klee"] = residuals(stellar::check_klee(x, stellar::euler_characteristic(x)));
        j["klee"]["applies"] = manifold;
        Json links = Json::array();
        for (int i = 0; i <= x.dim(); ++i) {
            const auto sides = stellar::link_g_identity(x, i);
            Json line;
            line["j"] = i;
            line["lhs"] = number(sides.lhs);
            line["rhs"] = number(sides.rhs);
            line["holds"] = sides.lhs == sides.rhs;
            links.push_back(std::move(line));
        }
        j["link_g_identity"] = std::move(links);
        const int k = opts(options).k;
        if (k >= 1) {
            Json rel = Json::array();
            for (const auto& line : stellar::w_k_gvector_relations(x, k).lines) {
                Json l;
                l["label"] = line.label;
                l["lhs"] = stellar::to_string(line.lhs);
                l["rhs"] = stellar::to_string(line.rhs);
                l["holds"] = line.holds();
                rel.push_back(std::move(l));
            }
            j["wk_relations"] = std::move(rel);
        }
        emit(j, json);
        return STELLAR_OK;
    });
}

stellar_status stellar_sigma(const stellar_complex* complex, const stellar_options* options, char** json)
{
    return guarded([&] {
        const auto& o = opts(options);
        const auto field = field_of(o);
        Json j;
        j["field"] = field.name();
        j["sigma"] = rationals(stellar::sigma_vector(get(complex), field, tightness_of(o)));
        emit(j, json);
        return STELLAR_OK;
    });
}

stellar_status stellar_mu(const stellar_complex* complex, const stellar_options* options, char** json)
{
    return guarded([&] {
        const auto& o = opts(options);
        const auto report = stellar::morse_report(get(complex), field_of(o), tightness_of(o));
        emit(parse_report(report.to_json()), json);
        return STELLAR_OK;
    });
}

stellar_status stellar_tight(const stellar_complex* complex, const stellar_options* options, char** json)
{
    return guarded([&] {
        const auto& o = opts(options);
        const auto field = field_of(o);
        const auto mode = o.mode == STELLAR_TIGHT_MU_BETA ? stellar::TightMode::MuBeta : stellar::TightMode::Direct;
        const auto r = stellar::is_tight(get(complex), field, mode, tightness_of(o));
        Json j;
        j["field"] = field.name();
        j["mode"] = mode == stellar::TightMode::Direct ? "direct" : "mu-beta";
        j["tight"] = r.tight;
        if (r.witness_subset) {
            Json w;
            w["subset"] = *r.witness_subset;
            w["degree"] = r.witness_degree;
            j["witness"] = std::move(w);
        } else {
            j["witness"] = nullptr;
        }
        j["reason"] = r.reason;
        j["mu"] = rationals(r.mu);
        j["beta"] = r.beta;
        emit(j, json);
        return r.tight ? STELLAR_OK : STELLAR_REFUTED;
    });
}

stellar_status stellar_criteria(const stellar_complex* complex, const stellar_options* options, char** json)
{
    return guarded([&] {
        const auto& o = opts(options);
        stellar::BatteryOptions battery;
        battery.tightness = tightness_of(o);
        battery.wk_certified = o.certified != 0;
        const auto report = stellar::criterion_battery(get(complex), o.k, field_of(o), battery);
        emit(parse_report(report.to_json()), json);
        return report.consistent() ? STELLAR_OK : STELLAR_REFUTED;
    });
}

stellar_status stellar_moves(const stellar_complex* complex, char** json)
{
    return guarded([&] {
        const auto moves = stellar::enumerate_bistellar(get(complex));
        Json arr = Json::array();
        for (const auto& mv : moves) {
            Json m;
            m["alpha"] = mv.alpha;
            m["beta"] = mv.beta;
            m["index"] = mv.index;
            arr.push_back(std::move(m));
        }
        Json j;
        j["count"] = moves.size();
        j["moves"] = std::move(arr);
        emit(j, json);
        return STELLAR_OK;
    });
}

stellar_status stellar_stellate(const stellar_complex* complex, const stellar_options* options, char** json)
{
    return guarded([&] {
        const auto& o = opts(options);
        const auto r = stellar::stellation_search(get(complex), o.k, stellation_of(o));
        Json j;
        j["k"] = o.k;
        j["seed"] = o.seed;
        j["budget"] = o.budget;
        j.update(stellation_json(r));
        emit(j, json);
        if (r.outcome == stellar::StellationResult::Outcome::Certified) return STELLAR_OK;
        return r.complete ? STELLAR_REFUTED : STELLAR_BUDGET;
    });
}

stellar_status stellar_wk(const stellar_complex* complex, const stellar_options* options, char** json)
{
    return guarded([&] {
        const auto& o = opts(options);
        const auto r = stellar::w_k_membership(get(complex), o.k, stellation_of(o), o.jobs);
        Json links = Json::array();
        for (const auto& l : r.links) {
            Json line;
            line["vertex"] = l.vertex;
            line["outcome"] = l.result.outcome == stellar::StellationResult::Outcome::Certified ? "certified" : "exhausted";
            line["complete"] = l.result.complete;
            line["nodes"] = l.result.nodes;
            line["length"] = l.result.certificate ? static_cast<long long>(l.result.certificate->length()) : -1;
            links.push_back(std::move(line));
        }
        Json j;
        j["k"] = o.k;
        j["seed"] = o.seed;
        j["budget"] = o.budget;
        j["verdict"] = stellar::to_string(r.verdict);
        j["links"] = std::move(links);
        emit(j, json);
        switch (r.verdict) {
        case stellar::WkMembership::Verdict::Member: return STELLAR_OK;
        case stellar::WkMembership::Verdict::NotMember: return STELLAR_REFUTED;
        default: return STELLAR_BUDGET;
        }
    });
}

stellar_status stellar_shellcheck(const stellar_complex* ball, const char* order, char** json)
{
    return guarded([&] {
        if (!order) throw Error(Error::Kind::Input, "null shelling order");
        stellar::FacetList facets;
        std::istringstream in(order);
        for (std::string line; std::getline(in, line);) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream words(line);
            std::vector<std::string> facet;
            for (std::string w; words >> w;) facet.push_back(w);
            if (!facet.empty()) facets.push_back(facet);
        }
        const auto r = stellar::verify_shelling(get(ball), facets);
        Json j;
        j["valid"] = r.valid;
        j["failed_position"] = r.valid ? Json(nullptr) : Json(r.failed_position);
        j["message"] = r.message;
        j["index_counts"] = r.index_counts;
        j["h"] = numbers(r.h);
        j["h_matches"] = r.h_matches;
        j["certificate"] = certificate_json(r.certificate);
        emit(j, json);
        return r.valid ? STELLAR_OK : STELLAR_REFUTED;
    });
}

stellar_status stellar_shellfind(const stellar_complex* ball, const stellar_options* options, char** json)
{
    return guarded([&] {
        const auto& o = opts(options);
        const auto r = stellar::find_shelling(get(ball), o.budget);
        Json j;
        j["budget"] = o.budget;
        j["outcome"] = r.outcome == stellar::ShellingSearch::Outcome::Found  ? "found"
                       : r.outcome == stellar::ShellingSearch::Outcome::None ? "none"
                                                                              : "exhausted";
        j["nodes"] = r.nodes;
        j["certificate"] = certificate_json(r.certificate);
        emit(j, json);
        switch (r.outcome) {
        case stellar::ShellingSearch::Outcome::Found: return STELLAR_OK;
        case stellar::ShellingSearch::Outcome::None: return STELLAR_REFUTED;
        default: return STELLAR_BUDGET;
        }
    });
}

stellar_status stellar_ears(const stellar_complex* ball, char** json)
{
    return guarded([&] {
        const Complex& x = get(ball);
        Json arr = Json::array();
        for (auto f : stellar::ears(x)) arr.push_back(sorted_names(x, f));
        Json j;
        j["count"] = arr.size();
        j["ears"] = std::move(arr);
        emit(j, json);
        return STELLAR_OK;
    });
}

stellar_status stellar_stacked(const stellar_complex* ball, const stellar_options* options, char** json)
{
    return guarded([&] {
        const Complex& x = get(ball);
        const int k = opts(options).k;
        const bool stacked = stellar::is_k_stacked_ball(x, k);
        Json j;
        j["k"] = k;
        j["stacked"] = stacked;
        if (k == 1) j["dual_tree_criterion"] = stellar::is_1_stacked_via_tree(x);
        emit(j, json);
        return stacked ? STELLAR_OK : STELLAR_REFUTED;
    });
}

namespace {

stellar_status canonical(const stellar::CanonicalResult& r, int k, char** json, stellar_complex** out)
{
    Json j;
    j["k"] = k;
    j["status"] = stellar::to_string(r.status);
    j["diagnostic"] = r.diagnostic;
    j["f"] = numbers(stellar::f_vector(r.complex));
    emit(j, json);
    if (out) *out = new stellar_complex{r.complex};
    return r.status == stellar::CanonicalResult::Status::Ok ? STELLAR_OK : STELLAR_REFUTED;
}

}  // namespace

stellar_status stellar_canonical_ball(const stellar_complex* sphere, const stellar_options* options, char** json,
                                      stellar_complex** out)
{
    return guarded([&] {
        const int k = opts(options).k;
        return canonical(stellar::canonical_ball(get(sphere), k), k, json, out);
    });
}

stellar_status stellar_canonical_manifold(const stellar_complex* manifold, const stellar_options* options, char** json,
                                          stellar_complex** out)
{
    return guarded([&] {
        const int k = opts(options).k;
        return canonical(stellar::canonical_manifold(get(manifold), k), k, json, out);
    });
}

stellar_status stellar_klee_novik(int k, int d, stellar_complex** boundary, stellar_complex** filling)
{
    return guarded([&] {
        auto kn = stellar::klee_novik(k, d);
        if (boundary) *boundary = new stellar_complex{std::move(kn.m)};
        if (filling) *filling = new stellar_complex{std::move(kn.mbar)};
        return STELLAR_OK;
    });
}

stellar_status stellar_corpus(char** json)
{
    return guarded([&] {
        Json arr = Json::array();
        for (const auto& e : stellar::corpus()) {
            Json item;
            item["name"] = e.name;
            item["description"] = e.description;
            item["f"] = e.expected_f;
            item["tags"] = e.tags;
            item["digest"] = e.complex.digest();
            arr.push_back(std::move(item));
        }
        emit(arr, json);
        return STELLAR_OK;
    });
}

stellar_status stellar_verify(const stellar_options* options, int stop_on_failure, stellar_check_callback callback,
                              void* user, char** json)
{
    return guarded([&] {
        const auto& o = opts(options);
        stellar::VerifyOptions v;
        v.jobs = o.jobs;
        v.seed = o.seed;
        v.budget = o.budget;
        if (o.cap > 0) v.sigma_cap = o.cap;
        const auto results = stellar::run_checks(v, stop_on_failure != 0, [&](const stellar::CheckResult& r) {
            if (callback) callback(r.id, r.title.c_str(), r.passed ? 1 : 0, Json(r.failures).dump().c_str(), user);
        });
        emit(parse_report(stellar::to_json(results)), json);
        for (const auto& r : results)
            if (!r.passed) return STELLAR_REFUTED;
        return STELLAR_OK;
    });
}

}  // extern "C"
