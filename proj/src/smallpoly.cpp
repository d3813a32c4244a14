#include "dio/smallpoly.hpp"

#include <algorithm>

namespace dio {

namespace {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly rem(Poly a, const Poly& b) {
    trim(a);
    while (static_cast<int>(a.size()) >= static_cast<int>(b.size()) && !a.empty()) {
        Rational factor = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly divide_exact(const Poly& a, const Poly& b) {
    Poly q(a.size(), Rational(0));
    Poly r = a;
    trim(r);
    while (static_cast<int>(r.size()) >= static_cast<int>(b.size()) && !r.empty()) {
        Rational factor = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = factor;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= factor * b[i];
        trim(r);
    }
    trim(q);
    return q;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    chain.push_back(poly_derivative(p));
    trim(chain.back());
    while (!chain.back().empty() && chain.back().size() > 1) {
        Poly r = rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations_at(const std::vector<Poly>& chain, const Rational& x) {
    int variations = 0, prev = 0;
    for (const Poly& p : chain) {
        int s = poly_eval(p, x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

// distinct real roots in (a, b]
int roots_in(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

void isolate_integer_roots(const std::vector<Poly>& chain, const Poly& p,
                           const BigInt& lo, const BigInt& hi, std::vector<BigInt>& out) {
    if (roots_in(chain, Rational(lo), Rational(hi)) == 0) return;
    if (hi - lo <= 1) {
        if (poly_eval(p, Rational(hi)).is_zero()) out.push_back(hi);
        return;
    }
    BigInt mid = (lo + hi);
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
    isolate_integer_roots(chain, p, lo, mid, out);
    isolate_integer_roots(chain, p, mid, hi, out);
}

} // namespace

int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Rational(BigInt(i)) * p[i]);
    return d;
}

std::vector<Rational> rational_roots(const Poly& input) {
    Poly p = input;
    trim(p);
    std::vector<Rational> roots;
    if (p.empty()) return roots; // zero polynomial: treat as no reported roots
    while (!p.empty() && p[0].is_zero()) {
        if (roots.empty() || !roots.back().is_zero()) roots.push_back(Rational(0));
        p.erase(p.begin());
    }
    if (poly_degree(p) < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    // strip repeated roots so the Sturm chain is usable
    Poly g = gcd(p, poly_derivative(p));
    if (poly_degree(g) >= 1) p = divide_exact(p, g);

    // clear denominators, then monicize: q(z) = L^{n-1} p(z / L) has integer
    // coefficients and is monic, with z = L x.
    BigInt l(1);
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<BigInt> ip;
    for (const auto& c : p) ip.push_back(c.num() * (l / c.den()));
    int n = static_cast<int>(ip.size()) - 1;
    const BigInt& lead = ip.back();
    std::vector<BigInt> q(n + 1);
    // q_i = ip_i * lead^{n-1-i}
    BigInt pw(1);
    for (int i = n; i >= 0; --i) {
        q[i] = ip[i] * pw;
        if (i > 0) pw *= lead;
    }
    Poly qp;
    for (const auto& c : q) qp.push_back(Rational(c));

    BigInt bound(1);
    for (int i = 0; i <= n; ++i) {
        BigInt a = q[i] < 0 ? BigInt(-q[i]) : q[i];
        if (a > bound) bound = a;
    }
    bound += 1;

    auto chain = sturm_chain(qp);
    std::vector<BigInt> zroots;
    isolate_integer_roots(chain, qp, -bound, bound, zroots);
    for (const auto& z : zroots) roots.push_back(Rational(z, lead));
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace dio
