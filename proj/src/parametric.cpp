#include "sdet/parametric.hpp"
#include "sdet/symmatrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sdet {

namespace {

void trim_monomial(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

ParamPoly::ParamPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::variable(std::size_t k) {
    Monomial m(k + 1, 0);
    m[k] = 1;
    return term(std::move(m), Rational(1));
}

ParamPoly ParamPoly::term(Monomial m, const Rational& c) {
    trim_monomial(m);
    ParamPoly out;
    out.add_term(m, c);
    return out;
}

bool ParamPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

std::size_t ParamPoly::num_params() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return n;
}

Rational ParamPoly::evaluate(std::span<const Rational> point) const {
    if (num_params() > point.size()) throw std::invalid_argument("parameter point has too few coordinates");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t k = 0; k < m.size(); ++k)
            for (unsigned e = 0; e < m[k]; ++e) t *= point[k];
        acc += t;
    }
    return acc;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t k = 0; k < ma.size(); ++k) m[k] += ma[k];
            for (std::size_t k = 0; k < mb.size(); ++k) m[k] += mb[k];
            out.add_term(m, ca * cb);
        }
    return out;
}

bool operator<(const ParamPoly& a, const ParamPoly& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
}

// ---------------------------------------------------------------------------

ParamUniPoly::ParamUniPoly(std::vector<ParamPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ParamUniPoly ParamUniPoly::from(const UniPoly& p) {
    std::vector<ParamPoly> c;
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return ParamUniPoly(std::move(c));
}

void ParamUniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool ParamUniPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == ParamPoly(1); }

std::size_t ParamUniPoly::num_params() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n = std::max(n, c.num_params());
    return n;
}

UniPoly ParamUniPoly::specialize(std::span<const Rational> point) const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x.evaluate(point));
    return UniPoly(std::move(c));
}

ParamUniPoly operator+(const ParamUniPoly& a, const ParamUniPoly& b) {
    std::vector<ParamPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return ParamUniPoly(std::move(c));
}

ParamUniPoly operator-(const ParamUniPoly& a, const ParamUniPoly& b) {
    std::vector<ParamPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
    return ParamUniPoly(std::move(c));
}

ParamUniPoly operator*(const ParamUniPoly& a, const ParamUniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ParamPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ParamUniPoly(std::move(c));
}

ParamUniPoly rem_monic(const ParamUniPoly& a, const ParamUniPoly& p) {
    if (!p.is_monic()) throw std::invalid_argument("parametric remainder requires a divisor monic in X");
    const std::size_t d = static_cast<std::size_t>(p.degree());
    std::vector<ParamPoly> r = a.coeffs();
    for (std::size_t top = r.size(); top-- > d;) {
        const ParamPoly lead = r[top];
        if (lead.is_zero()) continue;
        const std::size_t shift = top - d;
        for (std::size_t k = 0; k <= d; ++k) r[shift + k] -= lead * p.coeffs()[k];
    }
    if (r.size() > d) r.resize(d);
    return ParamUniPoly(std::move(r));
}

std::vector<ParamPoly> parametric_newton_sums(const ParamUniPoly& p, std::size_t count) {
    if (!p.is_monic() || p.degree() < 1) {
        throw std::invalid_argument("parametric Newton sums require a polynomial monic in X of degree >= 1");
    }
    const std::size_t d = static_cast<std::size_t>(p.degree());
    // p = X^d + a_{d-1} X^{d-1} + ... + a_0
    auto a = [&](std::size_t j) -> const ParamPoly& { return p.coeffs()[j]; };
    std::vector<ParamPoly> s(count);
    if (count > 0) s[0] = ParamPoly(static_cast<int>(d));
    for (std::size_t k = 1; k < count; ++k) {
        ParamPoly acc;
        // Newton identities; the k * a_{d-k} term only for k <= d.
        for (std::size_t j = 1; j <= std::min(k - 1, d); ++j) acc += a(d - j) * s[k - j];
        if (k <= d) acc += ParamPoly(static_cast<int>(k)) * a(d - k);
        s[k] = -acc;
    }
    return s;
}

namespace {

ParamMatrix hermite_from_sums(const std::vector<ParamPoly>& sums, std::size_t d, const ParamUniPoly& q_reduced) {
    ParamMatrix h(d, std::vector<ParamPoly>(d));
    // N_k = sum_m q_m s_{k+m}; entry (i, j) = N_{i+j}.
    std::vector<ParamPoly> n(2 * d - 1);
    for (std::size_t k = 0; k < n.size(); ++k)
        for (std::size_t m = 0; m < q_reduced.coeffs().size(); ++m) n[k] += q_reduced.coeffs()[m] * sums[k + m];
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) h[i][j] = n[i + j];
    return h;
}

}  // namespace

ParamMatrix parametric_hermite(const ParamUniPoly& p, const ParamUniPoly& q) {
    if (!p.is_monic() || p.degree() < 1) {
        throw std::invalid_argument("parametric Hermite matrix requires P monic in X of degree >= 1");
    }
    const std::size_t d = static_cast<std::size_t>(p.degree());
    return hermite_from_sums(parametric_newton_sums(p, 3 * d - 2), d, rem_monic(q, p));
}

std::vector<ParamPoly> leading_principal_minors(const ParamMatrix& m) {
    const auto polys = berkowitz_leading_charpolys(m);
    std::vector<ParamPoly> out;
    out.reserve(polys.size());
    for (std::size_t k = 1; k <= polys.size(); ++k) {
        const ParamPoly& c = polys[k - 1].back();
        out.push_back(k % 2 == 0 ? c : -c);
    }
    return out;
}

std::vector<ExponentVector> prod_family(std::size_t s, std::uint64_t p) {
    const std::size_t limit = bit_length(p);
    std::vector<ExponentVector> out;
    ExponentVector alpha(s, 0);
    // Odometer in lex order, skipping vectors whose support is too large.
    auto support = [&] { return static_cast<std::size_t>(std::count_if(alpha.begin(), alpha.end(), [](auto e) { return e != 0; })); };
    while (true) {
        if (support() <= limit) out.push_back(alpha);
        std::size_t k = s;
        while (k > 0 && alpha[k - 1] == 2) alpha[--k] = 0;
        if (k == 0) break;
        ++alpha[k - 1];
    }
    return out;
}

namespace {

ParamUniPoly product_of(std::span<const ParamUniPoly> system, const ExponentVector& alpha, const ParamUniPoly& p) {
    ParamUniPoly q = ParamUniPoly::from(UniPoly::constant(1));
    for (std::size_t k = 0; k < alpha.size(); ++k)
        for (std::uint8_t e = 0; e < alpha[k]; ++e) q = rem_monic(q * system[k], p);
    return q;
}

}  // namespace

std::vector<ParamPoly> helim(const ParamUniPoly& p, std::span<const ParamUniPoly> system,
                             std::optional<std::uint64_t> bound) {
    if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("HElim requires P monic in X of degree >= 1");
    const std::size_t d = static_cast<std::size_t>(p.degree());
    const auto sums = parametric_newton_sums(p, 3 * d - 2);
    std::set<ParamPoly> family;
    for (const auto& alpha : prod_family(system.size(), bound.value_or(d))) {
        const auto h = hermite_from_sums(sums, d, product_of(system, alpha, p));
        for (auto& minor : leading_principal_minors(h)) family.insert(std::move(minor));
    }
    return {family.begin(), family.end()};
}

namespace {

bool same_output(const RealNonrealResult& a, const RealNonrealResult& b) {
    return a.feas_real.rows == b.feas_real.rows && a.c_real == b.c_real && a.feas_nonreal.rows == b.feas_nonreal.rows &&
           a.c_nonreal == b.c_nonreal;
}

}  // namespace

InvarianceReport invariance_check(const ParamUniPoly& p, std::span<const ParamUniPoly> system,
                                  std::span<const std::vector<Rational>> samples, Backend backend) {
    InvarianceReport report;
    report.family = helim(p, system);
    std::map<std::vector<int>, std::size_t> group_of;
    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        const auto& y = samples[idx];
        std::vector<int> signs;
        signs.reserve(report.family.size());
        for (const auto& f : report.family) signs.push_back(sgn(f.evaluate(y)));

        std::vector<UniPoly> specialized;
        for (const auto& q : system) specialized.push_back(q.specialize(y));
        ZeroSetHandle handle(p.specialize(y), backend);
        RealNonrealResult out = real_nonreal_determination(handle, specialized);

        auto [it, inserted] = group_of.emplace(signs, report.groups.size());
        if (inserted) {
            report.groups.push_back({std::move(signs), {idx}, std::move(out)});
            continue;
        }
        auto& group = report.groups[it->second];
        group.samples.push_back(idx);
        if (!same_output(group.output, out)) report.violations.push_back({it->second, idx});
    }
    return report;
}

}  // namespace sdet
