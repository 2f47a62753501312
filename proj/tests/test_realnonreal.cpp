#include "sdet/realnonreal.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sdet;
using testing::poly;
using testing::sign_list;
using testing::znz_list;

TEST_CASE("real and nonreal conditions") {
    for (Backend b : {Backend::Sturm, Backend::Hermite}) {
        CAPTURE(static_cast<int>(b));
        {  // X (X^2 + 1) with [X^2 + 1]
            ZeroSetHandle h(poly({0, 1, 0, 1}), b);
            const std::vector<UniPoly> sys{poly({1, 0, 1})};
            const auto r = real_nonreal_determination(h, sys);
            CHECK(r.feas_real.rows == sign_list({"+"}).rows);
            CHECK(r.c_real == std::vector<long>{1});
            CHECK(r.feas_nonreal.rows == znz_list({"0"}).rows);
            CHECK(r.c_nonreal == std::vector<long>{2});
        }
        {  // X^2 - 1 with [X]
            ZeroSetHandle h(poly({-1, 0, 1}), b);
            const std::vector<UniPoly> sys{poly({0, 1})};
            const auto r = real_nonreal_determination(h, sys);
            CHECK(r.feas_real.rows == sign_list({"+", "-"}).rows);
            CHECK(r.c_real == std::vector<long>{1, 1});
            CHECK(r.feas_nonreal.empty());
        }
        {  // empty system
            // roots 1, 2, i, -i, 1 + i, 1 - i
            const UniPoly p = poly({2, -3, 1}) * poly({1, 0, 1}) * poly({2, -2, 1});
            ZeroSetHandle h(p, b);
            const auto r = real_nonreal_determination(h, {});
            CHECK(r.feas_real.rows == std::vector<Row>{Row{}});
            CHECK(r.c_real == std::vector<long>{2});
            CHECK(r.feas_nonreal.rows == std::vector<Row>{Row{}});
            CHECK(r.c_nonreal == std::vector<long>{4});
        }
        {  // only real roots, empty system
            ZeroSetHandle h(poly({-1, 0, 1}), b);
            const auto r = real_nonreal_determination(h, {});
            CHECK(r.c_real == std::vector<long>{2});
            CHECK(r.feas_nonreal.empty());
        }
    }
}

TEST_CASE("real and nonreal share one ledger") {
    ZeroSetHandle h(poly({0, 1, 0, 1}));
    const std::vector<UniPoly> sys{poly({1, 0, 1}), poly({0, 1})};
    const auto r = real_nonreal_determination(h, sys);
    CHECK(h.ledger().taqu_calls() > 0);
    CHECK(h.ledger().inv_calls() > 0);
    CHECK(r.feas_all.rows == znz_list({"01", "10"}).rows);
    CHECK(r.c_all == std::vector<long>{2, 1});
    CHECK(r.feas_nonreal.rows == znz_list({"01"}).rows);
}

TEST_CASE("zero pattern of a sign condition") {
    CHECK(zero_pattern(Row{0, 1, 2, 0}) == Row{0, 1, 1, 0});
    CHECK(zero_pattern(Row{}) == Row{});
}
