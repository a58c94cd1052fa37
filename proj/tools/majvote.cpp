#include <iostream>
#include <stdexcept>

#include "majvote/cli.hpp"
#include "majvote/kernels.hpp"

int main(int argc, char** argv) {
    try {
        majvote::kernels::apply_worker_env();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return majvote::cli::kUsageError;
    }
    return majvote::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
