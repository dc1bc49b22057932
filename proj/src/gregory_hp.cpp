#include "zetaconst/gregory_hp.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "zetaconst/exact_tables.hpp"

namespace zetaconst {

namespace {

// Fixed storage guard: 2*log2(n) + 32 bits, padded to cover any n below
// 2^24. Keeping the guard independent of the current table size lets
// published entries stay immutable while the table grows.
constexpr mpfr_prec_t kStorageGuard = 80;
constexpr std::size_t kMaxIndex = std::size_t{1} << 24;

struct Store {
    explicit Store(mpfr_prec_t storage_prec) : prec(storage_prec) {}

    const HPReal& value(std::size_t n) {
        {
            std::shared_lock lk(mu);
            if (n <= values.size()) return values[n - 1];
        }
        std::unique_lock lk(mu);
        extend_locked(n);
        return values[n - 1];
    }

    void reserve(std::size_t n_max) {
        std::unique_lock lk(mu);
        extend_locked(n_max);
    }

    // |G_n| = 1/(n+1) - sum_{l=1}^{n-1} |G_l|/(n+1-l); the bracket is
    // positive because the signs of G_n strictly alternate.
    void extend_locked(std::size_t n_max) {
        while (inv.size() < n_max + 2)
            inv.push_back(HPReal::one_over(static_cast<unsigned long>(inv.size()) + 1, prec));  // inv[j-1] = 1/j
        while (values.size() < n_max) {
            std::size_t n = values.size() + 1;
            if (n <= kGregoryExactCrossover) {
                values.push_back(HPReal::of(abs(gregory(n)), prec));
                continue;
            }
            HPReal acc(prec);
            for (std::size_t l = 1; l < n; ++l) acc.add_mul(values[l - 1], inv[n - l]);  // /(n+1-l)
            HPReal b = inv[n] - acc;  // 1/(n+1) - acc
            values.push_back(std::move(b));
        }
    }

    mpfr_prec_t prec;
    std::shared_mutex mu;
    std::deque<HPReal> values;  // values[n-1] = |G_n|
    std::deque<HPReal> inv;     // inv[j-1] = 1/j
};

mpfr_prec_t normalize(mpfr_prec_t p) { return ((p + 63) / 64) * 64; }

Store& store_for(mpfr_prec_t working_prec) {
    static std::mutex mu;
    static std::map<mpfr_prec_t, std::unique_ptr<Store>> stores;
    mpfr_prec_t key = normalize(working_prec);
    std::lock_guard lk(mu);
    auto& slot = stores[key];
    if (!slot) slot = std::make_unique<Store>(key + kStorageGuard);
    return *slot;
}

}  // namespace

const HPReal& gregory_abs_hp(std::size_t n, mpfr_prec_t working_prec) {
    if (n == 0 || n > kMaxIndex) throw std::invalid_argument("gregory_abs_hp: index out of range");
    return store_for(working_prec).value(n);
}

void gregory_hp_reserve(std::size_t n_max, mpfr_prec_t working_prec) {
    if (n_max == 0 || n_max > kMaxIndex) throw std::invalid_argument("gregory_hp_reserve: index out of range");
    store_for(working_prec).reserve(n_max);
}

}  // namespace zetaconst
