#ifndef GENIUS_SELFTEST_HPP
#define GENIUS_SELFTEST_HPP

#include <functional>
#include <string>
#include <vector>

namespace genius {

struct SelfCase {
    std::string module;
    std::string name;
    std::function<bool()> run;
};

/// The small worked examples of every module, each cheap to evaluate.
std::vector<SelfCase> selftest_cases();

}  // namespace genius

#endif
