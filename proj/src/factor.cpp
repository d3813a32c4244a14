#include "dio/factor.hpp"

#include <mutex>
#include <vector>

namespace dio {

FactorBudget& default_factor_budget() {
    static FactorBudget budget;
    return budget;
}

bool is_probable_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

// shared sieve cache; the lock keeps concurrent factorizations safe
std::vector<unsigned long> primes_below(unsigned long bound) {
    static std::mutex mu;
    static std::vector<unsigned long> primes;
    static unsigned long sieved = 0;
    std::lock_guard<std::mutex> lock(mu);
    if (bound > sieved) {
        primes.clear();
        std::vector<bool> composite(bound + 1, false);
        for (unsigned long p = 2; p <= bound; ++p) {
            if (composite[p]) continue;
            primes.push_back(p);
            for (unsigned long q = p * p; q <= bound; q += p) composite[q] = true;
        }
        sieved = bound;
    }
    return primes;
}

BigInt rho_step(const BigInt& x, const BigInt& c, const BigInt& n) {
    BigInt y = (x * x + c) % n;
    return y;
}

// Brent-cycle rho. Returns a nontrivial factor or 0 when the iteration budget
// runs out.
BigInt pollard_rho(const BigInt& n, unsigned long max_iters) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xd10c04feUL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        BigInt c = rng.get_z_range(n - 3) + 1;
        BigInt x = rng.get_z_range(n - 2) + 2;
        BigInt y = x, d = 1, q = 1, saved = x;
        unsigned long iters = 0;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (d == 1 && iters < max_iters) {
            x = y;
            for (unsigned long i = 0; i < r && iters < max_iters; ++i) {
                y = rho_step(y, c, n);
                ++iters;
            }
            unsigned long k = 0;
            while (k < r && d == 1 && iters < max_iters) {
                saved = y;
                unsigned long steps = std::min(batch, r - k);
                for (unsigned long i = 0; i < steps; ++i) {
                    y = rho_step(y, c, n);
                    BigInt diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = diff == 0 ? q : (q * diff) % n;
                    ++iters;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += steps;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one by one from the last saved position
            d = 1;
            y = saved;
            while (d == 1) {
                y = rho_step(y, c, n);
                BigInt diff = x - y;
                if (diff < 0) diff = -diff;
                if (diff == 0) break;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != 1 && d != n) return d;
        if (iters >= max_iters) return 0;
    }
    return 0;
}

void split(const BigInt& n, unsigned mult, std::map<BigInt, unsigned>& out, const FactorBudget& budget) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += mult;
        return;
    }
    // Perfect powers first: cheap, and they let a huge square slide through
    // without ever factoring its root's primes via rho.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            BigInt root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                split(root, mult * static_cast<unsigned>(k), out, budget);
                return;
            }
        }
    }
    BigInt d = pollard_rho(n, budget.rho_iters);
    if (d == 0) {
        fail(Err::FactoringBudgetExceeded,
             "unfactored cofactor " + n.get_str());
    }
    split(d, mult, out, budget);
    split(n / d, mult, out, budget);
}

} // namespace

std::map<BigInt, unsigned> factorize(const BigInt& n, const FactorBudget& budget) {
    if (n == 0) fail(Err::DegenerateRadicand, "factorize(0)");
    std::map<BigInt, unsigned> out;
    BigInt m = n < 0 ? BigInt(-n) : n;
    for (unsigned long p : primes_below(budget.trial_bound)) {
        if (BigInt(p) * p > m) break;
        while (m % p == 0) {
            ++out[BigInt(p)];
            m /= p;
        }
    }
    if (m > 1) {
        if (BigInt(budget.trial_bound) * budget.trial_bound > m) {
            // below the square of the trial bound, the survivor is prime
            ++out[m];
        } else {
            split(m, 1, out, budget);
        }
    }
    return out;
}

SquarefreeSplit squarefree_part(const BigInt& n, const FactorBudget& budget) {
    if (n == 0) fail(Err::DegenerateRadicand, "squarefree_part(0)");
    SquarefreeSplit res{BigInt(n < 0 ? -1 : 1), BigInt(1)};
    for (const auto& [p, e] : factorize(n, budget)) {
        if (e % 2) res.s *= p;
        for (unsigned i = 0; i < e / 2; ++i) res.f *= p;
    }
    return res;
}

BigInt square_class(const Rational& x, const FactorBudget& budget) {
    if (x.is_zero()) fail(Err::DegenerateRadicand, "square class of zero");
    return squarefree_part(x.num() * x.den(), budget).s;
}

} // namespace dio
