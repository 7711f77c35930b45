#include <cstring>
#include <iostream>

#include "fermatlab/acceptance.hpp"

using namespace fermatlab::acceptance;

int main(int argc, char** argv) {
    const bool mutate = argc > 1 && std::strcmp(argv[1], "--mutate") == 0;
    const auto results = runAcceptance(mutate ? Constants::corrupted() : Constants::standard());
    int failed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.title << "  (" << r.seconds
                  << " s of " << r.budgetSeconds << " s)\n";
        if (!r.passed) {
            std::cout << "      " << r.detail << "\n";
            ++failed;
        }
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
