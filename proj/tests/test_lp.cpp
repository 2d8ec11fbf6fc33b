#include <doctest.h>

#include "locpos/lp.hpp"

using namespace locpos;

TEST_CASE("bounded maximization") {
    LPProblem lp;
    lp.num_vars = 1;
    lp.objective = {Rat(1)};
    lp.maximize = true;
    lp.constraints.push_back({{Rat(1)}, Relation::LessEq, Rat(3)});
    LPResult res = solve_lp(lp);
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.solution[0] == 3);
    CHECK(res.value == 3);
}

TEST_CASE("infeasible") {
    LPProblem lp;
    lp.num_vars = 1;
    lp.objective = {Rat(0)};
    lp.constraints.push_back({{Rat(1)}, Relation::LessEq, Rat(-1)});
    CHECK(solve_lp(lp).status == LPStatus::Infeasible);
}

TEST_CASE("two variable maximum") {
    LPProblem lp;
    lp.num_vars = 2;
    lp.objective = {Rat(1), Rat(1)};
    lp.maximize = true;
    lp.constraints.push_back({{Rat(1), Rat(1)}, Relation::LessEq, Rat(1)});
    LPResult res = solve_lp(lp);
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.value == 1);
}

TEST_CASE("unbounded") {
    LPProblem lp;
    lp.num_vars = 1;
    lp.objective = {Rat(1)};
    lp.maximize = true;
    lp.constraints.push_back({{Rat(-1)}, Relation::LessEq, Rat(0)});
    CHECK(solve_lp(lp).status == LPStatus::Unbounded);
}

TEST_CASE("free variables and equality constraints") {
    // min x + y subject to x + y = 2, x - y = 4, x and y free.
    LPProblem lp;
    lp.num_vars = 2;
    lp.objective = {Rat(1), Rat(1)};
    lp.lower_bounds = {std::nullopt, std::nullopt};
    lp.constraints.push_back({{Rat(1), Rat(1)}, Relation::Eq, Rat(2)});
    lp.constraints.push_back({{Rat(1), Rat(-1)}, Relation::Eq, Rat(4)});
    LPResult res = solve_lp(lp);
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.solution[0] == 3);
    CHECK(res.solution[1] == -1);
}

TEST_CASE("rational data stays exact") {
    // max (1/3)x subject to (2/7)x <= 5/11.
    LPProblem lp;
    lp.num_vars = 1;
    lp.objective = {make_rat(1, 3)};
    lp.maximize = true;
    lp.constraints.push_back({{make_rat(2, 7)}, Relation::LessEq, make_rat(5, 11)});
    LPResult res = solve_lp(lp);
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.solution[0] == make_rat(35, 22));
    CHECK(res.value == make_rat(35, 66));
}

TEST_CASE("nonzero lower bounds") {
    // min x with x >= 5/2 and x <= 10.
    LPProblem lp;
    lp.num_vars = 1;
    lp.objective = {Rat(1)};
    lp.lower_bounds = {make_rat(5, 2)};
    lp.constraints.push_back({{Rat(1)}, Relation::LessEq, Rat(10)});
    LPResult res = solve_lp(lp);
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.solution[0] == make_rat(5, 2));
}

TEST_CASE("greater-equal rows") {
    // min 2x + 3y subject to x + y >= 4, x >= 0, y >= 0.
    LPProblem lp;
    lp.num_vars = 2;
    lp.objective = {Rat(2), Rat(3)};
    lp.constraints.push_back({{Rat(1), Rat(1)}, Relation::GreaterEq, Rat(4)});
    LPResult res = solve_lp(lp);
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.value == 8);
    CHECK(res.solution[0] == 4);
}

TEST_CASE("optimal solution satisfies every constraint exactly") {
    LPProblem lp;
    lp.num_vars = 3;
    lp.objective = {Rat(1), Rat(2), Rat(-1)};
    lp.maximize = true;
    lp.constraints.push_back({{Rat(1), Rat(1), Rat(1)}, Relation::LessEq, Rat(7)});
    lp.constraints.push_back({{Rat(2), Rat(-1), Rat(0)}, Relation::GreaterEq, Rat(-3)});
    lp.constraints.push_back({{Rat(0), Rat(1), Rat(3)}, Relation::Eq, Rat(3)});
    LPResult res = solve_lp(lp);
    REQUIRE(res.status == LPStatus::Optimal);
    for (const auto& c : lp.constraints) {
        Rat lhs(0);
        for (unsigned j = 0; j < lp.num_vars; ++j) lhs += c.row[j] * res.solution[j];
        if (c.rel == Relation::LessEq) CHECK(lhs <= c.rhs);
        if (c.rel == Relation::GreaterEq) CHECK(lhs >= c.rhs);
        if (c.rel == Relation::Eq) CHECK(lhs == c.rhs);
    }
}
