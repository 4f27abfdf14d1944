#include "eafkit/synth.hpp"

#include <random>
#include <string>
#include <vector>

#include "eafkit/errors.hpp"

namespace eafkit {

RunArchive synthesize_runs(std::uint64_t seed, std::size_t runs, std::size_t samples, std::size_t dim) {
    if (runs == 0 || samples == 0 || dim == 0) {
        throw ValidationError("runs, samples and dim must all be positive");
    }
    std::mt19937_64 engine(seed);
    auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

    std::vector<double> values;
    values.reserve(runs * samples * 2);
    std::vector<double> x(dim);
    for (std::size_t s = 0; s < runs; ++s) {
        for (std::size_t n = 0; n < samples; ++n) {
            for (double& xd : x) xd = uniform() * 10.0 - 5.0;
            double f1 = 0.0;
            double f2 = 0.0;
            for (double xd : x) {
                f1 += xd * xd;
                f2 += (xd - 2.0) * (xd - 2.0);
            }
            values.push_back(f1);
            values.push_back(f2);
        }
    }

    RunArchive archive;
    archive.costs = RunTensor(runs, samples, 2, std::move(values));
    archive.metadata = {
        {"optimizer", "random search"},
        {"function", "f1=sum(x^2), f2=sum((x-2)^2)"},
        {"generator", "mt19937_64"},
        {"seed", std::to_string(seed)},
        {"dim", std::to_string(dim)},
    };
    return archive;
}

}  // namespace eafkit
