// Both mirror maps end to end: the t-side map with its invariant tables, and
// the q-side flat coordinate with the first instanton numbers.

#include <iostream>

#include "lgcy/mirror.hpp"
#include "lgcy/report.hpp"

int main() {
    unsigned order = 25;

    auto m = lgcy::fjrw_mirror_map(order);
    std::cout << "tau(t) = " << lgcy::series_pretty(m.forward.truncated(13), "t") << "\n";
    std::cout << "t(tau) = " << lgcy::series_pretty(m.inverse.truncated(13), "tau") << "\n\n";

    auto [primary, descendant] = lgcy::fjrw_invariants(3, order);
    std::cout << lgcy::table_to_csv(primary) << "\n" << lgcy::table_to_csv(descendant) << "\n";

    auto inst = lgcy::gw_instantons(8);
    std::cout << "flat coordinate Yukawa coupling:\n  "
              << lgcy::series_pretty(inst.yukawaQPrime.truncated(4), "q'") << "\n";
    for (size_t d = 1; d <= inst.n.size(); ++d)
        std::cout << "n_" << d << " = " << lgcy::to_fraction_string(inst.n[d - 1]) << "\n";
    return 0;
}
