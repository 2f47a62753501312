// Command-line front end: runs one determination on a JSON instance, or a
// batch of oracle comparisons.

#include "sdet/io.hpp"
#include "sdet/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

namespace {

using sdet::io::Json;

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kParse = 3, kFormat = 4, kInstance = 5, kInternal = 6 };

struct InputError {
    int code;
    std::string message;
};

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw InputError{kUsage, "cannot open input file " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_input(const std::string& path) {
    try {
        return Json::parse(read_all(path));
    } catch (const Json::parse_error& e) {
        throw InputError{kParse, std::string("malformed JSON: ") + e.what()};
    }
}

sdet::ZeroSetHandle make_handle(const sdet::UniPoly& p, sdet::Backend backend) {
    if (p.is_zero()) throw InputError{kInstance, "P is the zero polynomial and cannot be normalized to a monic one"};
    return sdet::ZeroSetHandle(p, backend);
}

Json run_znz(const Json& in, sdet::Backend backend, bool stats) {
    const auto prob = sdet::io::problem_from_json(in);
    auto handle = make_handle(prob.p, backend);
    const auto res = sdet::zero_nonzero_determination(handle, prob.system);
    Json out = sdet::io::znz_to_json(res.feas, res.counts);
    if (stats) out["stats"] = sdet::io::stats_to_json(handle.ledger());
    return out;
}

Json run_sign(const Json& in, sdet::Backend backend, bool stats) {
    const auto prob = sdet::io::problem_from_json(in);
    auto handle = make_handle(prob.p, backend);
    const auto res = sdet::sign_determination(handle, prob.system);
    Json out = sdet::io::sign_to_json(res.feas, res.counts);
    if (stats) out["stats"] = sdet::io::stats_to_json(handle.ledger());
    return out;
}

Json run_real_nonreal(const Json& in, sdet::Backend backend, bool stats) {
    const auto prob = sdet::io::problem_from_json(in);
    auto handle = make_handle(prob.p, backend);
    const auto res = sdet::real_nonreal_determination(handle, prob.system);
    Json out = sdet::io::to_json(res);
    if (stats) out["stats"] = sdet::io::stats_to_json(handle.ledger());
    return out;
}

Json run_helim(const Json& in) {
    const auto prob = sdet::io::param_problem_from_json(in);
    if (!prob.p.is_monic() || prob.p.degree() < 1) {
        throw InputError{kInstance, "parametric P must be monic in X of degree >= 1"};
    }
    Json out = Json::array();
    for (const auto& f : sdet::helim(prob.p, prob.system, prob.bound)) out.push_back(sdet::io::to_json(f, prob.params));
    return out;
}

Json instance_json(const sdet::Instance& inst) {
    Json j;
    j["roots"] = sdet::io::to_json(inst.roots);
    Json sys = Json::array();
    for (const auto& q : inst.system) sys.push_back(sdet::io::to_json(q));
    j["system"] = std::move(sys);
    return j;
}

sdet::Instance instance_from_json(const Json& j) {
    sdet::Instance inst;
    inst.roots = sdet::io::root_spec_from_json(j.contains("roots") ? j.at("roots") : j);
    if (auto it = j.find("system"); it != j.end()) {
        if (!it->is_array()) throw sdet::io::FormatError("field \"system\" must be an array");
        for (const auto& q : *it) inst.system.push_back(sdet::io::poly_from_json(q));
    }
    return inst;
}

Json run_verify(const std::string& input, sdet::Backend backend, std::uint64_t seed, std::size_t cases, bool& all_ok) {
    std::vector<sdet::Instance> instances;
    if (!input.empty()) {
        const Json in = parse_input(input);
        if (in.is_array()) {
            for (const auto& j : in) instances.push_back(instance_from_json(j));
        } else {
            instances.push_back(instance_from_json(in));
        }
    } else {
        std::mt19937_64 rng(seed);
        for (std::size_t k = 0; k < cases; ++k) instances.push_back(sdet::random_instance(rng));
    }

    Json failures = Json::array();
    std::size_t passed = 0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
        sdet::VerifyOutcome outcome;
        try {
            outcome = sdet::verify_instance(instances[k], backend);
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (outcome.ok) {
            ++passed;
            continue;
        }
        Json f;
        f["index"] = k;
        f["reason"] = outcome.failure;
        f["instance"] = instance_json(instances[k]);
        failures.push_back(std::move(f));
    }
    all_ok = failures.empty();
    Json out;
    if (input.empty()) out["seed"] = seed;
    out["cases"] = instances.size();
    out["passed"] = passed;
    out["failed"] = instances.size() - passed;
    out["failures"] = std::move(failures);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-nonzero, sign and real-nonreal determination on the roots of a univariate polynomial"};
    std::string mode = "znz";
    std::string backend_name = "sturm";
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    std::size_t cases = 200;
    bool stats = false;

    app.add_option("--mode", mode, "znz | sign | real-nonreal | helim | verify")
        ->check(CLI::IsMember({"znz", "sign", "real-nonreal", "helim", "verify"}));
    app.add_option("--backend", backend_name, "sturm | hermite")->check(CLI::IsMember({"sturm", "hermite"}));
    app.add_option("--input", input, "input JSON file (stdin when omitted, except for verify)");
    app.add_option("--output", output, "output file (stdout when omitted)");
    app.add_option("--seed", seed, "generator seed for verify");
    app.add_option("--cases", cases, "number of generated instances for verify");
    app.add_flag("--stats", stats, "attach query ledger statistics");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const sdet::Backend backend = backend_name == "hermite" ? sdet::Backend::Hermite : sdet::Backend::Sturm;
    Json result;
    int rc = kOk;
    try {
        if (mode == "verify") {
            bool ok = true;
            result = run_verify(input, backend, seed, cases, ok);
            if (!ok) rc = kMismatch;
        } else {
            const Json in = parse_input(input);
            if (mode == "znz") result = run_znz(in, backend, stats);
            else if (mode == "sign") result = run_sign(in, backend, stats);
            else if (mode == "real-nonreal") result = run_real_nonreal(in, backend, stats);
            else result = run_helim(in);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const sdet::io::FormatError& e) {
        std::cerr << "error: bad input shape: " << e.what() << '\n';
        return kFormat;
    } catch (const Json::exception& e) {
        std::cerr << "error: bad input shape: " << e.what() << '\n';
        return kFormat;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid instance: " << e.what() << '\n';
        return kInstance;
    } catch (const std::exception& e) {
        std::cerr << "error: internal failure: " << e.what() << '\n';
        return kInternal;
    }

    const std::string text = result.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot open output file " << output << '\n';
            return kUsage;
        }
        out << text;
    }
    return rc;
}
