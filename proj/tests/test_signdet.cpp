#include "sdet/signdet.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sdet;
using testing::poly;
using testing::sign_list;

TEST_CASE("base sign system") {
    CHECK(base_sign_solve(2, 0, 2) == BaseSignCounts{0, 1, 1});
    CHECK(base_sign_solve(4, 4, 4) == BaseSignCounts{0, 4, 0});
    CHECK(base_sign_solve(0, 0, 0) == BaseSignCounts{0, 0, 0});
    CHECK(base_sign_solve(3, -1, 1) == BaseSignCounts{2, 0, 1});
    CHECK_THROWS_AS(base_sign_solve(2, 1, 2), std::logic_error);   // half-integral
    CHECK_THROWS_AS(base_sign_solve(1, 0, 2), std::logic_error);   // negative zero count
    CHECK_THROWS_AS(base_sign_solve(2, 2, 0), std::logic_error);   // negative count
}

TEST_CASE("sign strings use 0, + and -") {
    CHECK(sign_string(Row{0, 1, 2}) == "0+-");
    CHECK(parse_sign_string("-+0") == Row{2, 1, 0});
    CHECK_THROWS_AS(parse_sign_string("0x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_znz_string("012"), std::invalid_argument);
}

TEST_CASE("ternary Info and adapted exponents") {
    SUBCASE("one index with all three signs") {
        const ConditionList s = sign_list({"0", "+", "-"});
        const SubsetList e = adapted_exponents(s);
        CHECK(e.rows == std::vector<Row>{Row{0}, Row{1}, Row{2}});
        CHECK(sign_mat_of(e, s) == IntMatrix{{1, 1, 1}, {0, 1, -1}, {0, 1, 1}});
    }
    SUBCASE("two signs") {
        const ConditionList s = sign_list({"+", "-"});
        const SubsetList e = adapted_exponents(s);
        CHECK(e.rows == std::vector<Row>{Row{0}, Row{1}});
        CHECK(sign_mat_of(e, s) == IntMatrix{{1, 1}, {1, -1}});
    }
    SUBCASE("second index branches below one prefix only") {
        const ConditionList s = sign_list({"00", "+0", "+-", "-+"});
        const SubsetList e = adapted_exponents(s);
        CHECK(e.rows == std::vector<Row>{Row{0, 0}, Row{1, 0}, Row{0, 1}, Row{2, 0}});
        CHECK(testing::invertible(sign_mat_of(e, s)));
    }
    SUBCASE("non-canonical input is rejected") {
        CHECK_THROWS_AS(adapted_exponents(sign_list({"-", "+"})), std::invalid_argument);
    }
}

TEST_CASE("exact solver") {
    const IntMatrix m{{1, 1, 1}, {0, 1, -1}, {0, 1, 1}};
    const std::vector<long> v{5, 1, 3};
    CHECK(solve_exact(m, v) == std::vector<Rational>{2, 2, 1});
    const IntMatrix singular{{1, 1}, {1, 1}};
    const std::vector<long> w{1, 1};
    CHECK_THROWS_AS(solve_exact(singular, w), std::invalid_argument);
}

TEST_CASE("sign determination") {
    for (Backend b : {Backend::Sturm, Backend::Hermite}) {
        CAPTURE(static_cast<int>(b));
        {  // three real roots
            ZeroSetHandle h(poly({0, 2, -3, 1}), b);
            const std::vector<UniPoly> sys{poly({0, 1})};
            const SignResult r = sign_determination(h, sys);
            CHECK(r.feas.rows == sign_list({"0", "+"}).rows);
            CHECK(r.counts == std::vector<long>{1, 2});
        }
        {  // no real roots
            ZeroSetHandle h(poly({1, 0, 1}), b);
            const std::vector<UniPoly> sys{poly({0, 1}), poly({3, 1})};
            const SignResult r = sign_determination(h, sys);
            CHECK(r.feas.empty());
            CHECK(r.counts.empty());
            CHECK(h.ledger().taqu_calls() == 1);
        }
        {  // plus and minus one
            ZeroSetHandle h(poly({-1, 0, 1}), b);
            const std::vector<UniPoly> sys{poly({0, 1})};
            const SignResult r = sign_determination(h, sys);
            CHECK(r.feas.rows == sign_list({"+", "-"}).rows);
            CHECK(r.counts == std::vector<long>{1, 1});
        }
        {  // two polynomials
            // roots -2, -1, 0, 1, 2
            const UniPoly p = poly({0, 4, 0, -5, 0, 1});
            const std::vector<UniPoly> sys{poly({0, 1}), poly({-1, 0, 1})};
            ZeroSetHandle h(p, b);
            const SignResult r = sign_determination(h, sys);
            CHECK(r.feas.rows == sign_list({"0-", "+0", "++", "-0", "-+"}).rows);
            CHECK(r.counts == std::vector<long>{1, 1, 1, 1, 1});
            CHECK(h.ledger().taqu_calls() <= 1 + 2 * 2 * 5);
        }
    }
}
