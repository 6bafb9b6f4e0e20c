#include "acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

// usage: acceptance [id ...]
int main(int argc, char** argv)
{
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i)
        ids.push_back(std::atoi(argv[i]));
    int failed = 0;
    auto results = janossy::acceptance::run(ids, [&](const janossy::acceptance::CriterionResult& r) {
        std::cout << janossy::acceptance::format(r) << std::endl;
        failed += r.pass ? 0 : 1;
    });
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << results.size() - failed << "/" << results.size()
              << std::endl;
    return failed ? 1 : 0;
}
