#pragma once

// JSON and command-line text formats. Needs nlohmann/json (json.hpp).

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbitc/coadjoint.hpp"
#include "orbitc/orbit_topology.hpp"

namespace orbitc::io {

using nlohmann::json;

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline double parse_real(const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("not a number: '" + s + "'");
    }
    if (pos != s.size() || !std::isfinite(v)) throw ParseError("not a number: '" + s + "'");
    return v;
}

inline std::int64_t parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw ParseError("not an integer: '" + s + "'");
    return v;
}

// "2,1,0"
inline Weight parse_weight(const std::string& s) {
    if (s.empty()) return {};
    Weight w;
    for (const auto& part : split(s, ',')) w.push_back(parse_int(part));
    return w;
}

// "a+bi", "a-bi", "a", "bi", "i", "-i"
inline cplx parse_complex(std::string s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty complex number");
    if (t.back() != 'i' && t.back() != 'j') return {parse_real(t), 0.0};
    t.pop_back();
    std::size_t cut = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;)
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            cut = i;
            break;
        }
    const std::string re = cut == std::string::npos ? "" : t.substr(0, cut);
    std::string im = cut == std::string::npos ? t : t.substr(cut);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

inline CVec parse_cvec(const std::string& s) {
    CVec v;
    for (const auto& part : split(s, ',')) v.push_back(parse_complex(part));
    return v;
}

inline std::string format_complex(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

inline json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json cvec_json(const CVec& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(complex_json(z));
    return a;
}

inline json matrix_json(const CMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(complex_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json functional_json(const Functional& f) { return {{"U", matrix_json(f.U)}, {"u", cvec_json(f.u)}, {"x", f.x}}; }

inline json weight_json(const Weight& w) { return json(w); }

inline json param_json(const OrbitParam& p) {
    if (auto* g = std::get_if<Generic>(&p)) return {{"kind", "generic"}, {"lambda", g->lambda}, {"alpha", g->alpha}};
    if (auto* m = std::get_if<Intermediate>(&p)) return {{"kind", "intermediate"}, {"mu", m->mu}, {"r", m->r}};
    return {{"kind", "character"}, {"lambda", std::get<Character>(p).lambda}};
}

namespace detail {

inline const json& need(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(where) + ": missing field '" + key + "'");
    return j.at(key);
}

inline Weight weight_from(const json& j, const char* where) {
    if (!j.is_array()) throw ParseError(std::string(where) + ": expected an integer array");
    Weight w;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(std::string(where) + ": expected integers");
        w.push_back(v.get<std::int64_t>());
    }
    return w;
}

inline double real_from(const json& j, const char* where) {
    if (!j.is_number()) throw ParseError(std::string(where) + ": expected a number");
    return j.get<double>();
}

inline ScalarRule scalar_rule_from(const json& j, const char* where) {
    if (j.is_number()) return ScalarRule::constant(j.get<double>());
    const std::string rule = need(j, "rule", where).get<std::string>();
    const double limit = j.contains("limit") ? real_from(j["limit"], where) : 0.0;
    ScalarRule r;
    if (rule == "explicit") {
        std::vector<double> v;
        for (const auto& x : need(j, "values", where)) v.push_back(real_from(x, where));
        r = ScalarRule::explicit_list(std::move(v));
    } else if (rule == "constant") {
        r = ScalarRule::constant(real_from(need(j, "c", where), where));
    } else if (rule == "harmonic") {
        r = ScalarRule::harmonic(real_from(need(j, "c", where), where), limit);
    } else if (rule == "power") {
        r = ScalarRule::power(real_from(need(j, "c", where), where), real_from(need(j, "p", where), where), limit);
    } else if (rule == "geometric") {
        r = ScalarRule::geometric(real_from(need(j, "c", where), where), real_from(need(j, "q", where), where), limit);
    } else {
        throw ParseError(std::string(where) + ": unknown rule '" + rule + "'");
    }
    r.validate(where);
    return r;
}

inline TailRule tail_rule_from(const json& j) {
    const char* where = "lambda.tail";
    const std::string rule = need(j, "rule", where).get<std::string>();
    TailRule t;
    if (rule == "explicit") {
        t.kind = TailRule::Kind::Explicit;
        t.values = weight_from(need(j, "values", where), where);
    } else if (rule == "constant") {
        t.kind = TailRule::Kind::Constant;
        const json& v = need(j, "value", where);
        if (!v.is_number_integer()) throw ParseError("lambda.tail: value must be an integer");
        t.a = v.get<std::int64_t>();
    } else if (rule == "linear") {
        t.kind = TailRule::Kind::Linear;
        const json& a = need(j, "a", where);
        const json& b = need(j, "b", where);
        if (!a.is_number_integer() || !b.is_number_integer()) throw ParseError("lambda.tail: a, b must be integers");
        t.a = a.get<std::int64_t>();
        t.b = b.get<std::int64_t>();
    } else if (rule == "linked") {
        t.kind = TailRule::Kind::Linked;
        t.c = real_from(need(j, "c", where), where);
    } else {
        throw ParseError(std::string("lambda.tail: unknown rule '") + rule + "'");
    }
    return t;
}

inline std::vector<Weight> prefix_from(const json& j) {
    std::vector<Weight> out;
    if (!j.contains("prefix")) return out;
    if (!j["prefix"].is_array()) throw ParseError("prefix: expected an array of weights");
    for (const auto& w : j["prefix"]) out.push_back(weight_from(w, "prefix"));
    return out;
}

}  // namespace detail

inline SequenceDescriptor descriptor_from_json(const json& j) {
    using detail::need;
    if (!j.is_object()) throw ParseError("descriptor: expected an object");
    SequenceDescriptor s;
    const std::string kind = j.value("kind", std::string("generic"));
    const json& nj = need(j, "n", "descriptor");
    if (!nj.is_number_integer() || nj.get<std::int64_t>() < 1) throw ParseError("descriptor: n must be a positive integer");
    s.n = nj.get<std::size_t>();
    if (j.contains("K")) {
        if (!j["K"].is_number_integer()) throw ParseError("descriptor: K must be an integer");
        s.K = j["K"].get<std::int64_t>();
    }
    if (kind == "generic") {
        s.kind = SeqKind::Generic;
        s.alpha = detail::scalar_rule_from(need(j, "alpha", "descriptor"), "alpha");
        const json& lam = need(j, "lambda", "descriptor");
        s.head = detail::weight_from(need(lam, "head", "lambda"), "lambda.head");
        s.tail = detail::tail_rule_from(need(lam, "tail", "lambda"));
        const std::string varying = lam.value("varying", std::string("last"));
        if (varying != "last" && varying != "first") throw ParseError("lambda.varying must be 'last' or 'first'");
        s.varying_first = varying == "first";
        s.prefix = detail::prefix_from(lam);
    } else if (kind == "intermediate") {
        s.kind = SeqKind::Intermediate;
        const json& mu = need(j, "mu", "descriptor");
        if (mu.is_array()) {
            s.mu = detail::weight_from(mu, "mu");
        } else {
            s.mu = detail::weight_from(need(mu, "value", "mu"), "mu.value");
            s.prefix = detail::prefix_from(mu);
        }
        s.r = detail::scalar_rule_from(need(j, "r", "descriptor"), "r");
    } else if (kind == "character") {
        s.kind = SeqKind::Character;
        const json& lam = need(j, "lambda", "descriptor");
        if (lam.is_array()) {
            s.lambda = detail::weight_from(lam, "lambda");
        } else {
            s.lambda = detail::weight_from(need(lam, "value", "lambda"), "lambda.value");
            s.prefix = detail::prefix_from(lam);
        }
    } else {
        throw ParseError("descriptor: unknown kind '" + kind + "'");
    }
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return s;
}

inline OrbitParam param_from_json(const json& j) {
    using detail::need;
    if (!j.is_object()) throw ParseError("target: expected an object");
    const std::string kind = need(j, "kind", "target").get<std::string>();
    OrbitParam p;
    if (kind == "generic")
        p = Generic{detail::weight_from(need(j, "lambda", "target"), "target.lambda"),
                    detail::real_from(need(j, "alpha", "target"), "target.alpha")};
    else if (kind == "intermediate")
        p = Intermediate{detail::weight_from(need(j, "mu", "target"), "target.mu"),
                         detail::real_from(need(j, "r", "target"), "target.r")};
    else if (kind == "character")
        p = Character{detail::weight_from(need(j, "lambda", "target"), "target.lambda")};
    else
        throw ParseError("target: unknown kind '" + kind + "'");
    try {
        validate(p);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return p;
}

}  // namespace orbitc::io
