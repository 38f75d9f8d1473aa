// Walks a meander down to nothing, prints what each stage tells us, and
// winds it back up.
#include <meanderkit/meanderkit.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    using namespace meanderkit;
    const std::string text = argc > 1 ? argv[1] : "16|2|4/5|17";
    try {
        const MeanderType m = parse_type(text);
        std::cout << ascii_diagram(m) << "\n";
        std::cout << signature_trace(m, false) << "\n";

        const auto sig = signature_simplified(m);
        std::cout << "signature  " << to_string(sig) << "\n";
        std::cout << "refined    " << to_string(signature_refined(m)) << "\n";
        std::cout << "index      " << index_from_signature(sig) << "\n";
        std::cout << "homotopy   " << to_string(homotopy_type(sig)) << "\n";

        const auto up = up_sequence(sig);
        std::cout << "wind up    " << to_up_string(std::span(up)) << "\n";
        std::cout << "           -> " << to_string(wind_up(up)) << "\n";

        if (is_frobenius(sig)) {
            std::cout << "spectrum   " << to_string(spectrum(m)) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
