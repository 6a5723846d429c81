// Walk a few classical singularities through the analyzer and print their
// profiles: charges, symmetry group, sectors and state degrees.

#include <iostream>

#include "lgcy/report.hpp"
#include "lgcy/singularity.hpp"

int main() {
    const char* examples[] = {
        "x1^5+x2^5+x3^5+x4^5+x5^5",  // the Fermat quintic
        "x^2",                       // A_1
        "x^3+y^4",                   // E_6
        "x^3+x*y^3",                 // E_7
        "x^3+y^5",                   // E_8
        "x^3+x*y^2+y*z^2",           // a three-step chain
        "x^2*y+y^2*z+z^2*x",         // a loop
    };
    for (const char* text : examples) {
        std::cout << "W = " << text << "\n";
        std::cout << lgcy::profile_pretty(lgcy::analyze(text)) << "\n\n";
    }

    // error handling: xy admits a one-parameter family of charges
    try {
        lgcy::analyze("x*y");
    } catch (const lgcy::NonUniqueCharges& e) {
        std::cout << "analyze(\"x*y\") rejected: " << e.what() << "\n";
    }
    return 0;
}
