#include <doctest.h>

#include "properties.hpp"

TEST_CASE("kernel properties hold on 10000 random cases") {
    const props::Outcome out = props::run_kernel_properties(2024);
    CHECK(out.cases == 10000);
    CHECK_MESSAGE(out.failures == 0, out.first_failure);
}

TEST_CASE("properties are reproducible per case") {
    for (const auto& p : props::kernel_properties()) {
        genius::SplitMix64 a(genius::derive_seed(3, 17));
        genius::SplitMix64 b(genius::derive_seed(3, 17));
        CHECK(p.run(a) == p.run(b));
    }
}
