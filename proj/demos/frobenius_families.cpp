// A few members of the two infinite Frobenius families, with their
// signatures and spectra.
#include <meanderkit/meanderkit.hpp>

#include <iostream>

int main()
{
    using namespace meanderkit;

    std::cout << "a|...|a|b over ka+b\n";
    for (int a : {2, 4}) {
        for (int k = 1; k <= 3; ++k) {
            const MeanderType m = family_parabolic(a, k, a + 1);
            std::cout << "  " << to_string(m) << "  " << to_string(signature_simplified(m)) << "\n";
        }
    }

    std::cout << "\na|...|a|b over b+ka|a|...|a\n";
    for (int k = 0; k <= 2; ++k) {
        for (int copies = 1; copies <= 2; ++copies) {
            const MeanderType m = family_biparabolic(2, 3, k, copies);
            std::cout << "  " << to_string(m) << "  " << to_string(spectrum(m)) << "\n";
        }
    }

    std::cout << "\ntwo blocks a|b over a+b, index gcd(a, b) - 1\n";
    for (int a = 1; a <= 6; ++a) {
        std::cout << "  ";
        for (int b = 1; b <= 6; ++b) {
            std::cout << index_two_block(a, b) << (b == 6 ? "\n" : " ");
        }
    }
    return 0;
}
