// Acceptance battery: one line per criterion, nonzero exit if any fails.
// Every criterion is an exact equality check; there are no tolerances.

#include <cstdio>

#include "algcat/catcheck.hpp"

int main() {
    using namespace algcat;
    const Zoo& zoo = standard_zoo();
    const auto verdicts = run_acceptance(zoo);
    int failures = 0;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto& v = verdicts[i];
        std::printf("[%s] criterion %zu: %s (%.0f ms)%s%s\n", v.pass ? "PASS" : "FAIL", i + 1, v.name.c_str(),
                    v.elapsed_ms, v.witness.empty() ? "" : " -- ", v.witness.c_str());
        failures += !v.pass;
    }
    std::printf("%zu/%zu criteria passed\n", verdicts.size() - failures, verdicts.size());
    return failures == 0 ? 0 : 1;
}
