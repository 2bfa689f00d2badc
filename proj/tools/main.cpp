#include <csignal>
#include <iostream>

#include "cli.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_interrupt(int) { g_interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_interrupt);
    std::signal(SIGTERM, on_interrupt);
    std::vector<std::string> args(argv + 1, argv + argc);
    return aperylab::cli::run(args, std::cout, std::cerr, &g_interrupted);
}
