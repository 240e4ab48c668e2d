#include "trispec/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

// Usage: trispec_acceptance [id ...]; no ids runs every criterion.
int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty())
        for (int id = 1; id <= trispec::kCriterionCount; ++id) ids.push_back(id);
    bool all = true;
    for (int id : ids) {
        const trispec::CriterionResult r = trispec::run_criterion(id);
        std::cout << trispec::format_result(r) << std::flush;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
