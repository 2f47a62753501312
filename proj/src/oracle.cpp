#include "sdet/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sdet {

void validate(const RootSpec& spec) {
    std::set<Rational> reals;
    for (const auto& r : spec.real) {
        if (r.multiplicity == 0) throw std::invalid_argument("root multiplicity must be positive");
        if (!reals.insert(r.value).second) throw std::invalid_argument("repeated real root " + to_string(r.value));
    }
    std::set<std::pair<Rational, Rational>> pairs;
    for (const auto& c : spec.complex) {
        if (c.multiplicity == 0) throw std::invalid_argument("root multiplicity must be positive");
        if (sgn(c.im) == 0) throw std::invalid_argument("complex pair with zero imaginary part");
        const Rational im = abs(c.im);
        if (!pairs.insert({c.re, im}).second) {
            throw std::invalid_argument("repeated complex pair " + to_string(c.re) + " +- i" + to_string(im));
        }
    }
}

UniPoly build_instance(const RootSpec& spec) {
    validate(spec);
    UniPoly p = UniPoly::constant(1);
    for (const auto& r : spec.real) p = p * power(UniPoly::linear_root(r.value), r.multiplicity);
    for (const auto& c : spec.complex) {
        const UniPoly quad({c.re * c.re + c.im * c.im, -2 * c.re, Rational(1)});
        p = p * power(quad, c.multiplicity);
    }
    return p;
}

namespace {

ConditionCounts collect(const std::map<Row, long>& tally, std::size_t s) {
    ConditionCounts out;
    for (std::size_t k = 1; k <= s; ++k) out.conditions.indices.push_back(static_cast<int>(k));
    for (const auto& [row, n] : tally) {
        out.conditions.rows.push_back(row);
        out.counts.push_back(n);
    }
    return out;
}

}  // namespace

OracleResult direct_feasible(const RootSpec& spec, std::span<const UniPoly> system) {
    validate(spec);
    const std::size_t s = system.size();
    std::map<Row, long> all, real_znz, nonreal, real_sign;

    for (const auto& r : spec.real) {
        Row znz, sg;
        for (const auto& q : system) {
            const int v = sgn(q.evaluate(r.value));
            znz.push_back(v == 0 ? 0 : 1);
            sg.push_back(v == 0 ? 0 : v > 0 ? 1 : 2);
        }
        ++all[znz];
        ++real_znz[znz];
        ++real_sign[sg];
    }
    for (const auto& c : spec.complex) {
        for (const ComplexRational& x : {ComplexRational(c.re, c.im), ComplexRational(c.re, -c.im)}) {
            Row znz;
            for (const auto& q : system) znz.push_back(q.evaluate(x).is_zero() ? 0 : 1);
            ++all[znz];
            ++nonreal[znz];
        }
    }
    return {collect(all, s), collect(real_znz, s), collect(nonreal, s), collect(real_sign, s)};
}

// ---------------------------------------------------------------------------
// Generator

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational small_rational(std::mt19937_64& rng, long range, long max_den) {
    return make_rational(uniform(rng, -range, range), uniform(rng, 1, max_den));
}

bool within(const UniPoly& p, long max_numerator) {
    for (const auto& c : p.coeffs())
        if (abs(c.get_num()) > max_numerator || c.get_den() > max_numerator) return false;
    return true;
}

UniPoly random_dense(std::mt19937_64& rng, int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = uniform(rng, -5, 5);
    if (sgn(c.back()) == 0) c.back() = 1;
    return UniPoly(std::move(c));
}

UniPoly root_factor_product(std::mt19937_64& rng, const RootSpec& spec, int max_degree) {
    UniPoly p = UniPoly::constant(uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1));
    for (const auto& r : spec.real) {
        if (p.degree() + 1 > max_degree || uniform(rng, 0, 2) != 0) continue;
        p = p * UniPoly::linear_root(r.value);
    }
    for (const auto& c : spec.complex) {
        if (p.degree() + 2 > max_degree || uniform(rng, 0, 2) != 0) continue;
        p = p * UniPoly({c.re * c.re + c.im * c.im, -2 * c.re, Rational(1)});
    }
    // Optional cofactor with random sign behaviour.
    if (p.degree() < max_degree && uniform(rng, 0, 1) == 0) {
        p = p * UniPoly::linear_root(small_rational(rng, 6, 2));
    }
    return p;
}

UniPoly random_linear_product(std::mt19937_64& rng, int max_degree) {
    const int k = static_cast<int>(uniform(rng, 1, std::min(3, max_degree)));
    UniPoly p = UniPoly::constant(uniform(rng, 0, 1) ? 1 : -1);
    for (int j = 0; j < k; ++j) p = p * UniPoly::linear_root(small_rational(rng, 6, 2));
    return p;
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, const GeneratorLimits& limits) {
    Instance inst;
    const long max_pairs = static_cast<long>(limits.max_distinct_roots / 2);
    const long pairs = uniform(rng, 0, std::min<long>(max_pairs, 3));
    const long max_real = static_cast<long>(limits.max_distinct_roots) - 2 * pairs;
    const long reals = uniform(rng, pairs == 0 ? 1 : 0, max_real);

    std::set<Rational> used_real;
    while (static_cast<long>(inst.roots.real.size()) < reals) {
        Rational v = small_rational(rng, 4, 2);
        if (!used_real.insert(v).second) continue;
        inst.roots.real.push_back({v, static_cast<unsigned>(uniform(rng, 1, limits.max_multiplicity))});
    }
    std::set<std::pair<Rational, Rational>> used_pairs;
    while (static_cast<long>(inst.roots.complex.size()) < pairs) {
        Rational re = small_rational(rng, 3, 2);
        Rational im = make_rational(uniform(rng, 1, 3), uniform(rng, 1, 2));
        if (!used_pairs.insert({re, im}).second) continue;
        inst.roots.complex.push_back({re, im, static_cast<unsigned>(uniform(rng, 1, limits.max_multiplicity))});
    }
    std::sort(inst.roots.real.begin(), inst.roots.real.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });

    const long s = uniform(rng, 0, static_cast<long>(limits.max_system));
    while (static_cast<long>(inst.system.size()) < s) {
        const long kind = uniform(rng, 0, 19);
        UniPoly q;
        if (kind < 7) {
            q = root_factor_product(rng, inst.roots, limits.max_degree);
        } else if (kind < 12) {
            q = random_linear_product(rng, limits.max_degree);
        } else if (kind < 16) {
            q = random_dense(rng, static_cast<int>(uniform(rng, 0, limits.max_degree)));
        } else if (kind == 16) {
            q = UniPoly{};
        } else if (kind == 17) {
            q = UniPoly::constant(uniform(rng, 0, 1) ? 2 : -3);
        } else if (!inst.system.empty()) {
            const auto& a = inst.system[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(inst.system.size()) - 1))];
            const auto& b = inst.system[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(inst.system.size()) - 1))];
            q = a * b;
            if (q.degree() > limits.max_degree) q = -a;
        } else {
            q = random_linear_product(rng, limits.max_degree);
        }
        if (q.degree() > limits.max_degree || !within(q, limits.max_numerator)) continue;
        inst.system.push_back(std::move(q));
    }
    return inst;
}

}  // namespace sdet
