// Plans a three-point configuration with one antipodal point on S^3.
#include "tcsphere/planner.hpp"

#include <iostream>

int main() {
    using namespace tcsphere;
    Vec e1(4), e3(4);
    e1 << 1, 0, 0, 0;
    e3 << 0, 0, 1, 0;
    const FiberConfig config{4, {e1, Vec(-e1), e3}, "b0"};
    const auto result = plan(config, builtin_complex_section(4), 5);
    std::cout << "piece index " << result.piece_index << "\n";
    for (std::size_t n = 0; n < result.paths.size(); ++n) {
        std::cout << "gamma_" << result.paths[n].j << " (" << to_string(result.paths[n].kind) << ")\n";
        for (const auto& s : result.samples[n]) std::cout << "  t=" << s.t << "  " << s.point.transpose() << "\n";
    }
}
