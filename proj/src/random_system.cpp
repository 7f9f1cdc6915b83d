#include "lieconn/random_system.hpp"

#include <algorithm>
#include <array>

namespace lieconn {

namespace {

constexpr std::array<int, 40> kPrimes{2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
                                      47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
                                      109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// All legal control elements, in canonical order.
std::vector<BasisElement> control_pool(const Algebra& alg) {
    std::vector<BasisElement> pool;
    const int n = alg.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            switch (alg.family()) {
                case Family::SO:
                    if (i < j) pool.push_back({Tag::B, i, j});
                    break;
                case Family::SL:
                    if (i != j) pool.push_back({Tag::E, i, j});
                    else if (i < n) pool.push_back({Tag::C, i, i + 1});
                    break;
                case Family::GL: pool.push_back({Tag::E, i, j}); break;
            }
        }
    return pool;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
    // splitmix64 finaliser over the combined state
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

BilinearSystem random_system(const RandomSystemOptions& opts, std::mt19937_64& rng) {
    const Algebra alg(opts.family, opts.n);
    const int n = alg.n();

    auto pool = control_pool(alg);
    std::shuffle(pool.begin(), pool.end(), rng);
    const int m = uniform(rng, 0, std::min<int>(opts.max_controls, static_cast<int>(pool.size())));
    std::vector<BasisElement> controls(pool.begin(), pool.begin() + m);

    LieVector drift(alg);
    if (!coin(rng, opts.driftless_probability)) {
        std::vector<int> primes(kPrimes.begin(), kPrimes.end());
        std::shuffle(primes.begin(), primes.end(), rng);
        std::size_t next = 0;
        auto coefficient = [&] { return Rational(coin(rng, 0.5) ? primes[next++] : -primes[next++]); };

        std::vector<std::pair<int, int>> off;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (alg.family() == Family::SO ? i < j : i != j) off.emplace_back(i, j);
        std::shuffle(off.begin(), off.end(), rng);
        const int terms = uniform(rng, 1, std::min<int>(n + 2, static_cast<int>(off.size())));
        const Tag tag = alg.family() == Family::SO ? Tag::B : Tag::E;
        for (int t = 0; t < terms; ++t)
            drift.axpy(coefficient(), LieVector::basis(alg, {tag, off[t].first, off[t].second}));

        if (alg.family() != Family::SO) {
            const int diagonal = uniform(rng, 0, 2);
            for (int t = 0; t < diagonal; ++t) {
                const int i = uniform(rng, 1, alg.family() == Family::SL ? n - 1 : n);
                const BasisElement b = alg.family() == Family::SL ? BasisElement{Tag::C, i, n}
                                                                  : BasisElement{Tag::E, i, i};
                drift.axpy(coefficient(), LieVector::basis(alg, b));
            }
        }
    }
    return BilinearSystem(alg, std::move(drift), std::move(controls));
}

}  // namespace lieconn
