// Minimal tour of the library: finite-demand equilibria, the unbounded-demand
// region dispatch, and the optimal-price policy.

#include <cstdio>

#include "buytiming/finite.hpp"
#include "buytiming/infinite.hpp"
#include "buytiming/pricing.hpp"

int main() {
    using namespace buytiming;

    // A market where waiting is cheap enough that three equilibria coexist.
    const MarketParams mp{0.2, 0.4, 1.0, 0.0, Demand::finite(1.0)};
    std::printf("equilibria at c=%.2f K=%.2f (V-P=1, lambda=1):\n", mp.c, mp.K);
    for (const auto& rec : find_equilibria(mp))
        std::printf("  type %d: lambda0=%.4f lambda1=%.4f  u0=%.4f u1=%.4f\n", rec.type,
                    rec.profile.lambda0, rec.profile.lambda1, rec.utilities.u0,
                    rec.utilities.u1);

    // Unbounded demand: arrival rates follow the region of the net value v-p.
    const NormalizedMarket nm{10.0, 2.0, 6.5};
    const auto rates = solve_rates(nm);
    std::printf("\nv=%.1f k=%.1f p=%.1f -> region %d, rates (%.4f, %.4f)\n", nm.v, nm.k, nm.p,
                classify_region(nm), rates.lambda0, rates.lambda1);

    // The profit-maximizing price for the same (v, k).
    const auto sol = optimal_price(10.0, 2.0);
    std::printf("optimal price: case %d, p*=%.5f, pi*=%.5f\n", sol.pricing_case, sol.p_star,
                sol.pi_star);
    return 0;
}
