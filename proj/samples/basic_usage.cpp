// Minimal use of the library: one LCS, then the breakout row of the source
// column from the full cost table.

#include <iostream>

#include "plcs/plcs.hpp"

int main() {
    const plcs::LcsResult res = plcs::lcs("gatttatgcagg", "tcaggatt");
    std::cout << "lcs length " << res.length << ": " << res.subsequence.str() << '\n';

    const plcs::GridModel g(plcs::Sequence(std::string_view("tcaggatt")),
                            plcs::Sequence(std::string_view("gatttatgcagg")));
    const plcs::CostTable table = plcs::build_cost_table(g);
    std::cout << "breakouts of column 1:";
    for (std::size_t j = 0; j <= table.max_weight(); ++j) {
        const plcs::Reach r = table.reach(1, j);
        if (g.is_inf(r)) {
            std::cout << " inf";
        } else {
            std::cout << ' ' << r.column();
        }
    }
    std::cout << '\n';
    return 0;
}
