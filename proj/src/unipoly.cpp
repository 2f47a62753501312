#include "sdet/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdet {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    if (sgn(c) == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& a) { return UniPoly({-a, Rational(1)}); }

void UniPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw std::domain_error("cannot make the zero polynomial monic");
    UniPoly out = *this;
    const Rational lc = leading();
    for (auto& c : out.coeffs_) c /= lc;
    return out;
}

UniPoly UniPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return UniPoly(std::move(d));
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ComplexRational UniPoly::evaluate(const ComplexRational& x) const {
    ComplexRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + ComplexRational(*it);
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const std::size_t shift_max = r.size() - 1 - db;
    std::vector<Rational> q(shift_max + 1);
    const Rational inv_lc = 1 / b.leading();
    for (std::size_t shift = shift_max + 1; shift-- > 0;) {
        const Rational f = r[shift + db] * inv_lc;
        if (sgn(f) == 0) continue;
        q[shift] = f;
        for (std::size_t k = 0; k <= db; ++k) r[shift + k] -= f * b.coeffs()[k];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly rem(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly quo(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly power(const UniPoly& p, unsigned e) {
    UniPoly result = UniPoly::constant(1);
    UniPoly base = p;
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

std::vector<UniPoly> signed_remainder_sequence(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) throw std::domain_error("signed remainder sequence of a zero polynomial");
    std::vector<UniPoly> seq{a};
    if (b.is_zero()) return seq;
    seq.push_back(b);
    for (;;) {
        UniPoly next = -rem(seq[seq.size() - 2], seq.back());
        if (next.is_zero()) break;
        seq.push_back(std::move(next));
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers for the primitive sequence.

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g == 1) return;
    }
    if (sgn(g) == 0) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Positive multiple of rem(a, b): |lc(b)|^(deg a - deg b + 1) * rem(a, b).
IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return a;
    const Integer& lc = b.back();
    const std::size_t delta = a.size() - b.size();
    std::size_t steps = 0;
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - 1 - db;
        const Integer lead = a.back();
        for (auto& c : a) c *= lc;
        for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= lead * b[k];
        ++steps;
        trim(a);
    }
    // Complete the multiplier to lc^(delta+1), then force it positive.
    Integer extra;
    mpz_pow_ui(extra.get_mpz_t(), lc.get_mpz_t(), delta + 1 - steps);
    bool negate = sgn(lc) < 0 && ((delta + 1) % 2 == 1);
    for (auto& c : a) {
        c *= extra;
        if (negate) c = -c;
    }
    return a;
}

}  // namespace

std::vector<Integer> primitive_part(const UniPoly& p) {
    Integer lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (lcm / c.get_den()));
    make_primitive(out);
    return out;
}

std::vector<std::vector<Integer>> primitive_signed_remainder_sequence(const UniPoly& a,
                                                                      const UniPoly& b) {
    if (a.is_zero()) throw std::domain_error("signed remainder sequence of a zero polynomial");
    std::vector<IntPoly> seq{primitive_part(a)};
    if (b.is_zero()) return seq;
    seq.push_back(primitive_part(b));
    for (;;) {
        IntPoly next = positive_pseudo_remainder(seq[seq.size() - 2], seq.back());
        if (next.empty()) break;
        for (auto& c : next) c = -c;
        make_primitive(next);
        seq.push_back(std::move(next));
    }
    return seq;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (b.is_zero()) return a.monic();
    if (a.is_zero()) return b.monic();
    const auto seq = primitive_signed_remainder_sequence(a, b);
    std::vector<Rational> last(seq.back().begin(), seq.back().end());
    return UniPoly(std::move(last)).monic();
}

namespace {

int sign_at_minus_infinity(int lc_sign, int degree) { return (degree % 2 == 0) ? lc_sign : -lc_sign; }

int count_variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

template <typename Poly, typename LeadSign, typename Degree>
SignVariations variations(std::span<const Poly> seq, LeadSign lead_sign, Degree degree) {
    std::vector<int> minus, plus;
    for (const auto& p : seq) {
        const int d = degree(p);
        if (d < 0) continue;
        const int s = lead_sign(p);
        plus.push_back(s);
        minus.push_back(sign_at_minus_infinity(s, d));
    }
    return {count_variations(minus), count_variations(plus)};
}

}  // namespace

SignVariations sign_variations_at_infinity(std::span<const UniPoly> seq) {
    return variations(
        seq, [](const UniPoly& p) { return sgn(p.leading()); }, [](const UniPoly& p) { return p.degree(); });
}

SignVariations sign_variations_at_infinity(std::span<const std::vector<Integer>> seq) {
    return variations(
        seq, [](const IntPoly& p) { return sgn(p.back()); },
        [](const IntPoly& p) { return static_cast<int>(p.size()) - 1; });
}

int coefficient_sign_variations(std::span<const Rational> coeffs) {
    std::vector<int> signs;
    signs.reserve(coeffs.size());
    for (const auto& c : coeffs) signs.push_back(sgn(c));
    return count_variations(signs);
}

std::vector<Rational> newton_sums(const UniPoly& p, std::size_t count) {
    if (p.degree() < 1 || !p.is_monic()) {
        throw std::invalid_argument("newton_sums requires a monic polynomial of degree >= 1");
    }
    const std::size_t d = static_cast<std::size_t>(p.degree());
    const auto& a = p.coeffs();
    std::vector<Rational> s(count);
    if (count == 0) return s;
    s[0] = static_cast<long>(d);
    for (std::size_t k = 1; k < count; ++k) {
        Rational acc = 0;
        if (k <= d) acc = a[d - k] * static_cast<long>(k);
        const std::size_t upto = std::min(k - 1, d);
        for (std::size_t j = 1; j <= upto; ++j) acc += a[d - j] * s[k - j];
        s[k] = -acc;
    }
    return s;
}

}  // namespace sdet
