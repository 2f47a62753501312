#include "sdet/io.hpp"

#include <algorithm>

namespace sdet::io {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (!j.is_string()) throw FormatError("expected a rational as a string or integer, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("malformed rational: ") + e.what());
    }
}

Json to_json(const UniPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

UniPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected a polynomial as an array of coefficients, got " + j.dump());
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return UniPoly(std::move(c));
}

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object()) throw FormatError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& require_array(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
    return v;
}

}  // namespace

Problem problem_from_json(const Json& j) {
    Problem out;
    out.p = poly_from_json(require(j, "P"));
    for (const auto& q : require_array(j, "system")) out.system.push_back(poly_from_json(q));
    return out;
}

Json to_json(const Problem& problem) {
    Json out;
    out["P"] = to_json(problem.p);
    Json sys = Json::array();
    for (const auto& q : problem.system) sys.push_back(to_json(q));
    out["system"] = std::move(sys);
    return out;
}

namespace {

Json conditions_json(const ConditionList& feas, const std::vector<long>& counts, std::string (*fmt)(const Row&)) {
    Json out;
    Json conds = Json::array();
    for (const auto& row : feas.rows) conds.push_back(fmt(row));
    out["conditions"] = std::move(conds);
    out["cardinals"] = counts;
    return out;
}

}  // namespace

Json znz_to_json(const ConditionList& feas, const std::vector<long>& counts) {
    return conditions_json(feas, counts, &znz_string);
}

Json sign_to_json(const ConditionList& feas, const std::vector<long>& counts) {
    return conditions_json(feas, counts, &sign_string);
}

Json stats_to_json(const QueryLedger& ledger) {
    Json out;
    out["inv_calls"] = ledger.inv_calls();
    out["taqu_calls"] = ledger.taqu_calls();
    out["used_subsets"] = ledger.used_subsets();
    return out;
}

Json to_json(const RealNonrealResult& r) {
    Json out;
    out["real"] = sign_to_json(r.feas_real, r.c_real);
    out["nonreal"] = znz_to_json(r.feas_nonreal, r.c_nonreal);
    return out;
}

Json to_json(const ParamPoly& f, std::size_t m) {
    Json out = Json::array();
    for (const auto& [mono, c] : f.terms()) {
        if (mono.size() > m) throw std::invalid_argument("monomial uses more parameters than declared");
        std::vector<unsigned> padded = mono;
        padded.resize(m, 0);
        Json t;
        t["monomial"] = padded;
        t["coeff"] = to_json(c);
        out.push_back(std::move(t));
    }
    return out;
}

ParamPoly param_poly_from_json(const Json& j) {
    if (!j.is_array()) return ParamPoly(rational_from_json(j));
    ParamPoly out;
    for (const auto& t : j) {
        const Json& mono = require_array(t, "monomial");
        Monomial m;
        for (const auto& e : mono) {
            if (!e.is_number_unsigned()) throw FormatError("monomial exponents must be natural numbers");
            m.push_back(e.get<unsigned>());
        }
        out += ParamPoly::term(std::move(m), rational_from_json(require(t, "coeff")));
    }
    return out;
}

Json to_json(const ParamUniPoly& p, std::size_t m) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c, m));
    return out;
}

ParamUniPoly param_unipoly_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected a parametric polynomial as an array of coefficients");
    std::vector<ParamPoly> c;
    for (const auto& x : j) c.push_back(param_poly_from_json(x));
    return ParamUniPoly(std::move(c));
}

ParamProblem param_problem_from_json(const Json& j) {
    ParamProblem out;
    out.p = param_unipoly_from_json(require(j, "P"));
    for (const auto& q : require_array(j, "system")) out.system.push_back(param_unipoly_from_json(q));
    out.params = out.p.num_params();
    for (const auto& q : out.system) out.params = std::max(out.params, q.num_params());
    if (auto it = j.find("params"); it != j.end()) {
        if (!it->is_number_unsigned()) throw FormatError("field \"params\" must be a natural number");
        const auto m = it->get<std::size_t>();
        if (m < out.params) throw FormatError("field \"params\" is smaller than the number of parameters used");
        out.params = m;
    }
    if (auto it = j.find("p"); it != j.end()) {
        if (!it->is_number_unsigned()) throw FormatError("field \"p\" must be a natural number");
        out.bound = it->get<std::uint64_t>();
    }
    if (auto it = j.find("samples"); it != j.end()) {
        if (!it->is_array()) throw FormatError("field \"samples\" must be an array");
        for (const auto& pt : *it) {
            if (!pt.is_array() || pt.size() != out.params) {
                throw FormatError("each sample must be an array of " + std::to_string(out.params) + " rationals");
            }
            std::vector<Rational> y;
            for (const auto& x : pt) y.push_back(rational_from_json(x));
            out.samples.push_back(std::move(y));
        }
    }
    return out;
}

Json to_json(const RootSpec& spec) {
    Json out;
    Json real = Json::array();
    for (const auto& r : spec.real) real.push_back(Json::array({to_json(r.value), r.multiplicity}));
    Json cx = Json::array();
    for (const auto& c : spec.complex) cx.push_back(Json::array({to_json(c.re), to_json(c.im), c.multiplicity}));
    out["real"] = std::move(real);
    out["complex"] = std::move(cx);
    return out;
}

namespace {

unsigned multiplicity_from_json(const Json& j) {
    if (!j.is_number_unsigned() || j.get<unsigned>() == 0) throw FormatError("multiplicity must be a positive integer");
    return j.get<unsigned>();
}

}  // namespace

RootSpec root_spec_from_json(const Json& j) {
    RootSpec spec;
    if (!j.is_object()) throw FormatError("expected a root specification object");
    if (auto it = j.find("real"); it != j.end()) {
        if (!it->is_array()) throw FormatError("field \"real\" must be an array");
        for (const auto& r : *it) {
            if (!r.is_array() || r.size() != 2) throw FormatError("real root entries are [value, multiplicity]");
            spec.real.push_back({rational_from_json(r[0]), multiplicity_from_json(r[1])});
        }
    }
    if (auto it = j.find("complex"); it != j.end()) {
        if (!it->is_array()) throw FormatError("field \"complex\" must be an array");
        for (const auto& c : *it) {
            if (!c.is_array() || c.size() != 3) throw FormatError("complex pair entries are [re, im, multiplicity]");
            spec.complex.push_back({rational_from_json(c[0]), rational_from_json(c[1]), multiplicity_from_json(c[2])});
        }
    }
    try {
        validate(spec);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid root specification: ") + e.what());
    }
    return spec;
}

}  // namespace sdet::io
