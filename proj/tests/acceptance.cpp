// Paper-reproduction acceptance suite: one pass/fail line per criterion.
// Runs the full set at n = 4 and the n-dependent criteria at n = 5, 6.

#include <cstdlib>
#include <iostream>

#include "liaison/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    bool all = true;
    for (int n : {4, 5, 6}) {
        auto results = liaison::verify_paper(n, seed);
        for (const auto& r : results) {
            all = all && r.pass;
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "\n";
            if (!r.pass) std::cout << "       " << r.detail << "\n";
        }
    }
    std::cout << (all ? "acceptance: all criteria passed\n"
                      : "acceptance: FAILURES present\n");
    return all ? 0 : 1;
}
