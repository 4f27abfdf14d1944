#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "eafkit/cli.hpp"
#include "eafkit/parallel.hpp"

int main(int argc, char** argv) {
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("EAFKIT_THREADS")) {
        try {
            const long long requested = std::stoll(cap);
            if (requested < 1) throw std::invalid_argument(cap);
            threads = std::min<std::size_t>(threads, static_cast<std::size_t>(requested));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring invalid EAFKIT_THREADS='" << cap << "'\n";
        }
    }
    eafkit::set_max_threads(threads);
    return eafkit::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
