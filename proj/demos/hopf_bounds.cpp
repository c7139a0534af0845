// Bound reports for a few bundles, including the Hopf bundle.
#include "tcsphere/report.hpp"

#include <iostream>

int main() {
    using namespace tcsphere;
    for (const char* text : {"CP(1); 1*eta", "S(2); 3*eps", "CP(3); 1*eta+1*eps", "RP(5); 2*eta+1*eps"}) {
        for (unsigned r = 2; r <= 4; ++r) {
            const auto report = evaluate(BundleSpec::parse(text), r);
            std::cout << report.spec.to_string() << "  r=" << r << "  " << interval_string(report) << "\n";
        }
    }
}
