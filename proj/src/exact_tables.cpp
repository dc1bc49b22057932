#include "zetaconst/exact_tables.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace zetaconst {

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

namespace {

// Memo tables. deque keeps references stable across growth, so readers can
// hold on to published entries while a writer extends.
class GregoryStore {
public:
    const Rational& value(std::size_t n) {
        {
            std::shared_lock lk(mu_);
            if (n <= values_.size()) return values_[n - 1];
        }
        std::unique_lock lk(mu_);
        while (values_.size() < n) extend_locked();
        return values_[n - 1];
    }

private:
    void extend_locked() {
        std::size_t n = values_.size() + 1;
        if (n == 1) {
            values_.emplace_back(1, 2);
            return;
        }
        // G_n = (-1)^{n+1}/(n+1) - sum_{l=1}^{n-1} (-1)^{n-l} G_l/(n+1-l)
        Rational s(n % 2 == 0 ? -1 : 1, static_cast<long>(n) + 1);
        for (std::size_t l = 1; l < n; ++l) {
            Rational term = values_[l - 1] / Rational(static_cast<long>(n + 1 - l));
            if ((n - l) % 2 == 0)
                s -= term;
            else
                s += term;
        }
        values_.push_back(s);
    }

    std::shared_mutex mu_;
    std::deque<Rational> values_;  // values_[n-1] = G_n
};

class StirlingStore {
public:
    const Integer& value(std::size_t n, std::size_t l) {
        {
            std::shared_lock lk(mu_);
            if (n <= rows_.size()) return rows_[n - 1][l - 1];
        }
        std::unique_lock lk(mu_);
        while (rows_.size() < n) extend_locked();
        return rows_[n - 1][l - 1];
    }

private:
    void extend_locked() {
        std::size_t n = rows_.size() + 1;
        std::vector<Integer> row(n);
        if (n == 1) {
            row[0] = 1;
        } else {
            const auto& prev = rows_[n - 2];
            // S1(n,l) = S1(n-1,l-1) - (n-1)*S1(n-1,l)
            for (std::size_t l = 1; l <= n; ++l) {
                Integer v = 0;
                if (l >= 2) v = prev[l - 2];
                if (l <= n - 1) v -= Integer(static_cast<long>(n - 1)) * prev[l - 1];
                row[l - 1] = v;
            }
        }
        rows_.push_back(std::move(row));
    }

    std::shared_mutex mu_;
    std::deque<std::vector<Integer>> rows_;  // rows_[n-1][l-1] = S1(n,l)
};

class HarmonicStore {
public:
    Rational value(std::size_t n, unsigned m) {
        {
            std::shared_lock lk(mu_);
            auto it = by_order_.find(m);
            if (it != by_order_.end() && n <= it->second.size()) return it->second[n - 1];
        }
        std::unique_lock lk(mu_);
        auto& col = by_order_[m];
        while (col.size() < n) {
            std::size_t k = col.size() + 1;
            Integer km = 1;
            for (unsigned i = 0; i < m; ++i) km *= static_cast<long>(k);
            Rational next = (k == 1 ? Rational(0) : col[k - 2]) + Rational(Integer(1), km);
            col.push_back(next);
        }
        return col[n - 1];
    }

private:
    std::shared_mutex mu_;
    std::map<unsigned, std::deque<Rational>> by_order_;
};

GregoryStore& gregory_store() {
    static GregoryStore s;
    return s;
}
StirlingStore& stirling_store() {
    static StirlingStore s;
    return s;
}
HarmonicStore& harmonic_store() {
    static HarmonicStore s;
    return s;
}

}  // namespace

Rational gregory(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gregory: n must be >= 1");
    return gregory_store().value(n);
}

Rational gregory_via_stirling(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gregory_via_stirling: n must be >= 1");
    Rational s(0);
    for (std::size_t l = 1; l <= n; ++l)
        s += Rational(stirling1(n, static_cast<long>(l)), Integer(static_cast<long>(l) + 1));
    return s / Rational(factorial(n));
}

Integer stirling1(std::size_t n, long l) {
    if (n == 0) throw std::invalid_argument("stirling1: n must be >= 1");
    if (l < 1 || static_cast<std::size_t>(l) > n) return 0;
    return stirling_store().value(n, static_cast<std::size_t>(l));
}

Rational harmonic(std::size_t n, unsigned m) {
    if (m == 0) throw std::invalid_argument("harmonic: order m must be >= 1");
    if (n == 0) return Rational(0);
    return harmonic_store().value(n, m);
}

Rational bell_poly(std::size_t m, std::span<const Rational> xs) {
    if (xs.size() != m) throw std::invalid_argument("bell_poly: xs must hold exactly m entries");
    std::vector<Rational> P(m + 1);
    P[0] = Rational(1);
    for (std::size_t mm = 1; mm <= m; ++mm) {
        Rational s(0);
        for (std::size_t j = 1; j <= mm; ++j) s += xs[j - 1] * P[mm - j];
        P[mm] = s / Rational(static_cast<long>(mm));
    }
    return P[m];
}

bool bell_stirling_identity_holds(std::size_t n, std::size_t m) {
    if (m > n) throw std::invalid_argument("bell_stirling_identity_holds: requires m <= n");
    std::vector<Rational> xs(m);
    for (std::size_t r = 1; r <= m; ++r) {
        Rational h = harmonic(n, static_cast<unsigned>(r));
        xs[r - 1] = (r % 2 == 1) ? h : -h;
    }
    Rational lhs = Rational(abs(Integer(stirling1(n + 1, static_cast<long>(m) + 1))),
                            factorial(static_cast<unsigned long>(n)));
    return lhs == bell_poly(m, xs);
}

}  // namespace zetaconst
