/*
 * End-to-end acceptance run: every headline statement verified at full sweep
 * size, one line per criterion, nonzero exit if anything fails.
 */

#include <qaffine/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>

namespace {

int failures = 0;
int counter = 0;

void run(const char* name, const std::function<bool()>& check) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool pass = check();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d. %-62s %7.2fs\n", pass ? "PASS" : "FAIL", ++counter, name, secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

}  // namespace

int main() {
    using namespace qaffine;

    run("alternating q-binomial identity, 1 <= l <= m <= 20",
        [] { return verify_factorial_identity(20, nullptr); });
    run("classical alternating sum = 1 for m <= 30; q->1 limit for m <= 12",
        [] { return verify_classical_limit(30, 12, nullptr); });
    run("defining relations on tensor modules, symbolic x and y, m, n <= 3",
        [] { return verify_defining_relations(3, 3, nullptr); });
    run("extremal vectors, kernel oracle, degeneracy flag, n <= m <= 5",
        [] { return verify_extremal_vectors(5, nullptr); });
    run("coproduct f-power expansion, k <= m+n, m, n <= 4",
        [] { return verify_coproduct_powers(4, 4, nullptr); });
    run("alpha by three routes plus ratio identity, n <= m <= 5",
        [] { return verify_alpha_routes(5, nullptr); });
    run("lowering identities and three-term decomposition, n <= m <= 5",
        [] { return verify_lowering_lemmas(5, nullptr); });
    run("summation identities: vanishing l <= 12, product form l <= 10, |s| <= 10",
        [] { return verify_sum_lemmas(12, 10, 10, nullptr); });
    run("determinant chain: prefactors, factorization, inductive step, m <= 5",
        [] { return verify_determinants(5, nullptr); });
    run("basis certification with critical-set deficiency, both families, m <= 4",
        [] { return verify_bases(4, nullptr); });
    run("scalar field axioms and round-trip, 1000 seeded cases",
        [] { return verify_scalar_properties(20260815, 1000, nullptr); });

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %d criteria passed\n", counter);
    return 0;
}
