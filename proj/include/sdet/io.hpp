#pragma once

// JSON encodings. Objects keep their keys in insertion order so that output
// is byte-stable.

#include "sdet/conditions.hpp"
#include "sdet/oracle.hpp"
#include "sdet/parametric.hpp"
#include "sdet/queries.hpp"
#include "sdet/realnonreal.hpp"
#include "sdet/signdet.hpp"
#include "sdet/unipoly.hpp"
#include "sdet/znz.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdet::io {

using Json = nlohmann::ordered_json;

/// Input that does not have the expected shape.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
/// Accepts "num/den", "num" or a JSON integer.
Rational rational_from_json(const Json& j);

/// Ascending coefficient strings.
Json to_json(const UniPoly& p);
UniPoly poly_from_json(const Json& j);

struct Problem {
    UniPoly p;
    std::vector<UniPoly> system;
};
/// {"P": [...], "system": [[...], ...]}
Problem problem_from_json(const Json& j);
Json to_json(const Problem& problem);

Json znz_to_json(const ConditionList& feas, const std::vector<long>& counts);
Json sign_to_json(const ConditionList& feas, const std::vector<long>& counts);
Json stats_to_json(const QueryLedger& ledger);
Json to_json(const RealNonrealResult& r);

/// Terms padded to m exponents: [{"monomial": [...], "coeff": "n/d"}, ...].
Json to_json(const ParamPoly& f, std::size_t m);
/// Also accepts a bare rational as a constant.
ParamPoly param_poly_from_json(const Json& j);
Json to_json(const ParamUniPoly& p, std::size_t m);
ParamUniPoly param_unipoly_from_json(const Json& j);

struct ParamProblem {
    ParamUniPoly p;
    std::vector<ParamUniPoly> system;
    std::optional<std::uint64_t> bound;          // "p", defaults to deg_X P
    std::vector<std::vector<Rational>> samples;  // optional parameter points
    std::size_t params = 0;                      // m
};
/// {"params": m, "P": [coeff, ...], "system": [[coeff, ...], ...], "p": n,
/// "samples": [["1/2", ...], ...]} where each coeff is a parametric
/// polynomial. "params", "p" and "samples" are optional.
ParamProblem param_problem_from_json(const Json& j);

/// {"real": [["1/2", 2], ...], "complex": [["0", "1", 1], ...]}
Json to_json(const RootSpec& spec);
RootSpec root_spec_from_json(const Json& j);

}  // namespace sdet::io
