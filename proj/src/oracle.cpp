#include "gainforest/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gainforest {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Fraction::Fraction(long long n) : num(n), den(1) {}

Fraction::Fraction(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num * o.den + o.num * den, den * o.den);
}
Fraction Fraction::operator-(const Fraction& o) const {
    return Fraction(num * o.den - o.num * den, den * o.den);
}
Fraction Fraction::operator*(const Fraction& o) const { return Fraction(num * o.num, den * o.den); }
Fraction Fraction::operator/(const Fraction& o) const {
    if (o.num == 0) throw std::invalid_argument("division by zero");
    return Fraction(num * o.den, den * o.num);
}

long long Fraction::as_integer() const {
    if (den != 1) throw std::invalid_argument("fraction is not an integer");
    return static_cast<long long>(num);
}

std::string to_string(const Fraction& f) {
    auto print128 = [](__int128 x) {
        if (x == 0) return std::string("0");
        bool negative = x < 0;
        if (negative) x = -x;
        std::string s;
        while (x) {
            s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
            x /= 10;
        }
        if (negative) s.push_back('-');
        std::reverse(s.begin(), s.end());
        return s;
    };
    std::string s = print128(f.num);
    if (f.den != 1) s += "/" + print128(f.den);
    return s;
}

long long CharPoly::evaluate(long long q) const {
    __int128 acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * q + *it;
    return static_cast<long long>(acc);
}

namespace {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

long long admissibility_bound(const GainGraph& g) {
    return static_cast<long long>(g.vertex_count() - 1) * (max_abs_gain(g) + 1);
}

}  // namespace

bool is_admissible_prime(const GainGraph& g, long long q) {
    return is_prime(q) && q > admissibility_bound(g);
}

std::vector<long long> admissible_primes(const GainGraph& g, int count) {
    std::vector<long long> out;
    for (long long q = admissibility_bound(g) + 1; static_cast<int>(out.size()) < count; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

long long count_points_mod_q(const GainGraph& g, long long q) {
    if (!is_admissible_prime(g, q)) throw std::invalid_argument("prime below admissibility bound");
    const int n = g.vertex_count();
    auto vertex_index = [&](int v) {
        return static_cast<int>(std::lower_bound(g.vertices.begin(), g.vertices.end(), v) -
                                g.vertices.begin());
    };
    // Forbidden differences per index pair (i < j): x_j - x_i != g.
    std::vector<std::vector<std::pair<int, long long>>> forbidden(g.vertices.size());
    for (const auto& e : g.edges) {
        int i = vertex_index(e.tail), j = vertex_index(e.head);
        forbidden[j].push_back({i, ((e.gain % q) + q) % q});
    }
    // Translation invariance: pin the first coordinate and scale by q.
    std::vector<long long> x(g.vertices.size(), 0);
    long long leaves = 0;
    auto assign = [&](auto&& self, int k) -> void {
        if (k == n) {
            ++leaves;
            return;
        }
        for (long long value = 0; value < q; ++value) {
            bool ok = true;
            for (const auto& [i, diff] : forbidden[k])
                if ((value - x[i] + q) % q == diff) {
                    ok = false;
                    break;
                }
            if (ok) {
                x[k] = value;
                self(self, k + 1);
            }
        }
    };
    assign(assign, 1);
    return leaves * q;
}

CharPoly char_poly(const GainGraph& g) {
    return char_poly(g, admissible_primes(g, g.vertex_count() + 1));
}

CharPoly char_poly(const GainGraph& g, const std::vector<long long>& primes) {
    const int n = g.vertex_count();
    if (static_cast<int>(primes.size()) != n + 1)
        throw std::invalid_argument("need exactly n+1 interpolation primes");
    for (long long q : primes)
        if (!is_admissible_prime(g, q)) throw std::invalid_argument("inadmissible prime");
    std::vector<long long> values;
    values.reserve(primes.size());
    for (long long q : primes) values.push_back(count_points_mod_q(g, q));

    // Lagrange interpolation, exact: coefficients accumulate as fractions.
    std::vector<Fraction> coeff(static_cast<std::size_t>(n) + 1, Fraction(0));
    for (std::size_t k = 0; k < primes.size(); ++k) {
        // Basis polynomial prod_{j != k} (x - q_j) / (q_k - q_j).
        std::vector<Fraction> basis{Fraction(1)};
        Fraction scale(values[k]);
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (j == k) continue;
            std::vector<Fraction> next(basis.size() + 1, Fraction(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] = next[d + 1] + basis[d];
                next[d] = next[d] - basis[d] * Fraction(primes[j]);
            }
            basis = std::move(next);
            scale = scale / Fraction(primes[k] - primes[j]);
        }
        for (std::size_t d = 0; d < basis.size(); ++d) coeff[d] = coeff[d] + basis[d] * scale;
    }
    CharPoly out;
    for (const auto& c : coeff) {
        if (!c.is_integer())
            throw std::runtime_error("characteristic polynomial has a non-integer coefficient");
        out.coefficients.push_back(c.as_integer());
    }
    if (out.coefficients.back() != 1)
        throw std::runtime_error("characteristic polynomial is not monic");
    return out;
}

long long region_count(const GainGraph& g) {
    CharPoly chi = char_poly(g);
    long long value = chi.evaluate(-1);
    return (g.vertex_count() % 2 == 0) ? value : -value;
}

Fraction linial_formula(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    __int128 sum = 0;
    for (int k = 1; k <= n; ++k) {
        __int128 binom = 1;
        for (int i = 1; i <= k; ++i) binom = binom * (n - i + 1) / i;
        __int128 power = 1;
        for (int i = 0; i < n - 1; ++i) power *= k;
        sum += binom * power;
    }
    __int128 denom = n;
    for (int i = 0; i < n - 1; ++i) denom *= 2;
    return Fraction(sum, denom);
}

}  // namespace gainforest
