// Evaluate a few intersection numbers on P(T_X) through the library API.

#include "tanpos/catalog.hpp"
#include "tanpos/chow.hpp"
#include "tanpos/expr.hpp"
#include "tanpos/threefold.hpp"

#include <iostream>

int main() {
    using namespace tanpos;

    // Build classes by hand ...
    const BaseProfile dp2 = threefold_profile(2, 20);
    const PTClass z = PTClass::zeta(dp2);
    const PTClass h = PTClass::pullback(dp2, "H");
    std::cout << "z^2 (z+2H)^3 on " << dp2.label << ": " << to_string(eval_product(dp2, {z, z, z + 2 * h, z + 2 * h, z + 2 * h}))
              << "\n";

    // ... or parse them.
    const BaseProfile cubic = find_profile("cubic-surface");
    for (const char* text : {"z^3", "z^2 H", "z (z + K + 2F) (z - K)"})
        std::cout << text << " on cubic-surface: " << to_string(eval_top(cubic, parse_expr(cubic, text))) << "\n";

    for (const auto& row : vmrt_table())
        std::cout << "d=" << row.d << "  " << vmrt_row_text(row) << (not_big_certificate(row) ? "  (not big)" : "")
                  << "\n";
}
