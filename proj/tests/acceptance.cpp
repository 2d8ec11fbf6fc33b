// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every expected value is exact; timing limits are wall-clock.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "locpos/certify.hpp"
#include "locpos/newton.hpp"
#include "locpos/oracle.hpp"
#include "locpos/poly.hpp"
#include "locpos/refute.hpp"

using namespace locpos;

namespace {

int g_failures = 0;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

void report(int index, const std::string& name, const Check& c) {
    if (c.ok) {
        std::printf("criterion %d (%s): pass\n", index, name.c_str());
    } else {
        std::printf("criterion %d (%s): FAIL [%s]\n", index, name.c_str(),
                    c.detail.str().c_str());
        ++g_failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::string kExample2 =
    "x^16+y^18-x^7*y^3+x^12*y^15+x^4*y^2-2*x^3*y^3+x^2*y^4";

// 1. x^2 + y^4 + z^6 - s x y^2 z^3 certifies for s in {-3, 0, 2, 100} with
//    principal part exactly x^2 + y^4 + z^6, under 5 s per case.
void criterion1() {
    Check c;
    SparsePolynomial expected =
        parse_polynomial("x^2+y^4+z^6", std::vector<std::string>{"x", "y", "z"});
    for (long s : {-3L, 0L, 2L, 100L}) {
        std::ostringstream text;
        text << "x^2+y^4+z^6";
        if (s != 0) text << (s > 0 ? "-" : "+") << std::abs(s) << "*x*y^2*z^3";
        SparsePolynomial f =
            parse_polynomial(text.str(), std::vector<std::string>{"x", "y", "z"});
        auto t0 = std::chrono::steady_clock::now();
        Verdict v = certify_local_nonnegative(f);
        double elapsed = seconds_since(t0);
        std::string tag = "s=" + std::to_string(s);
        c.require(v.kind == Verdict::Kind::Certified, tag + " not certified");
        c.require(v.certificate && v.certificate->principal == expected,
                  tag + " wrong principal part");
        c.require(elapsed < 5.0, tag + " too slow");
    }
    report(1, "family x^2+y^4+z^6-s*x*y^2*z^3 certifies", c);
}

// 2. The two-variable degree-18 example: exact principal part, hypothesis
//    failure on the middle edge face with a zero at (1,1), curve witness
//    x=t, y=t with lowest term -t^10, final verdict refuted, under 5 s.
void criterion2() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    SparsePolynomial f = parse_polynomial(kExample2);

    SparsePolynomial expected_principal =
        parse_polynomial("x^16+x^4*y^2-2*x^3*y^3+x^2*y^4+y^18");
    auto [f_N, tail] = principal_part(f);
    c.require(f_N == expected_principal, "wrong principal part");

    Verdict v = certify_local_nonnegative(f);
    c.require(v.kind == Verdict::Kind::Unknown, "certifier did not return unknown");
    c.require(v.reason == "hypothesis-fails", "wrong unknown reason");
    SparsePolynomial edge = parse_polynomial("x^4*y^2-2*x^3*y^3+x^2*y^4");
    if (v.failure) {
        c.require(v.failure->face == edge, "wrong offending face");
        c.require(v.failure->point && *v.failure->point == std::vector<Rat>{Rat(1), Rat(1)},
                  "offending point is not (1,1)");
        c.require(v.failure->value && *v.failure->value == 0, "face value at (1,1) not 0");
    } else {
        c.require(false, "no hypothesis failure payload");
    }

    auto witness = curve_search(f, 6);
    if (witness) {
        c.require(witness->signs == SignVector{1, 1} &&
                      witness->weights == std::vector<unsigned>{1, 1},
                  "witness curve is not x=t, y=t");
        c.require(witness->lowest_degree == 10 && witness->lowest_coefficient == -1,
                  "lowest term of f(t,t) is not -t^10");
    } else {
        c.require(false, "no curve witness found");
    }

    bool refuted = v.kind != Verdict::Kind::Certified && witness.has_value();
    c.require(refuted, "final verdict is not refuted");
    c.require(seconds_since(t0) < 5.0, "too slow");
    report(2, "degree-18 counterexample refuted via f(t,t)", c);
}

// 3. Multiplier iteration fixture: x^2-xy+y^2 certifies at m=1 with product
//    exactly x^4+x^2y^2+y^4 and k1=1; (x-y)^2 is never found for m <= 10.
void criterion3() {
    Check c;
    SparsePolynomial h = parse_polynomial("x^2-x*y+y^2");
    HandelmanOutcome out = handelman_search(h, 10, 200000, 4096);
    c.require(out.status == HandelmanStatus::Found, "x^2-xy+y^2 not found");
    if (out.result) {
        c.require(out.result->m == 1, "wrong multiplier order");
        c.require(out.result->product == parse_polynomial("x^4+x^2*y^2+y^4"),
                  "wrong product");
        c.require(out.result->k1 == 1, "wrong k1");
    }
    HandelmanOutcome square =
        handelman_search(parse_polynomial("x^2-2*x*y+y^2"), 10, 200000, 4096);
    c.require(square.status == HandelmanStatus::NotFound, "(x-y)^2 not rejected");
    report(3, "multiplier iteration fixture", c);
}

// 4. tau = 1/5 exactly for x^2-xy+y^2, and h - (1/5)(x^2+y^2) >= 0 at 1000
//    seeded positive rational points.
void criterion4() {
    Check c;
    SparsePolynomial h = parse_polynomial("x^2-x*y+y^2");
    HandelmanOutcome out = handelman_search(h, 10, 200000, 4096);
    c.require(out.status == HandelmanStatus::Found && out.result, "fixture not found");
    if (out.result) {
        TauBound tb = tau_bound(h, *out.result);
        c.require(tb.tau == make_rat(1, 5), "tau != 1/5");

        SparsePolynomial fifth(2, {"x", "y"});
        fifth.add_term({0, 0}, make_rat(1, 5));
        SparsePolynomial gap = h - parse_polynomial("x^2+y^2") * fifth;
        std::mt19937_64 rng(424242);
        for (int i = 0; i < 1000; ++i) {
            Rat x = make_rat(1 + static_cast<long>(rng() % 1000),
                             1 + static_cast<long>(rng() % 1000));
            Rat y = make_rat(1 + static_cast<long>(rng() % 1000),
                             1 + static_cast<long>(rng() % 1000));
            if (gap.evaluate({x, y}) < 0) {
                c.require(false, "h - (1/5) h^V negative at a positive point");
                break;
            }
        }
    }
    report(4, "constructive tau bound", c);
}

// 5. Radius soundness: x^2+y^2-x^3 gets radius exactly 1 with a clean depth-4
//    box scan; x^2+y^4+z^6-100xy^2z^3 gets radius (1/50)^{1/3} rounded down,
//    with a clean depth-3 scan inside the certified box.
void criterion5() {
    Check c;
    SparsePolynomial f1 = parse_polynomial("x^2+y^2-x^3");
    Verdict v1 = certify_local_nonnegative(f1);
    c.require(v1.kind == Verdict::Kind::Certified, "x^2+y^2-x^3 not certified");
    c.require(v1.certificate && v1.certificate->radius == 1.0, "radius != 1");
    c.require(box_minimum(f1, Rat(1), 4).minimum >= 0, "negative value in [-1,1]^2");

    SparsePolynomial f2 = parse_polynomial("x^2+y^4+z^6-100*x*y^2*z^3");
    Verdict v2 = certify_local_nonnegative(f2);
    c.require(v2.kind == Verdict::Kind::Certified, "three-variable case not certified");
    if (v2.certificate) {
        double r = v2.certificate->radius;
        double ideal = std::cbrt(1.0 / 50.0);
        c.require(rat_pow(Rat(r), 3) <= make_rat(1, 50), "radius^3 exceeds 1/50");
        c.require(r > ideal * (1.0 - 1e-12) && r <= ideal * (1.0 + 1e-12),
                  "radius is not (1/50)^{1/3} up to rounding");
        c.require(box_minimum(f2, Rat(r), 3).minimum >= 0,
                  "negative value inside the certified box");
    }
    report(5, "certified radius soundness", c);
}

// 6. 50 random univariate polynomials c t^k + higher-order tail certify iff
//    k is even and c > 0.
void criterion6() {
    Check c;
    std::mt19937_64 rng(777001);
    for (int trial = 0; trial < 50; ++trial) {
        unsigned k = 1 + static_cast<unsigned>(rng() % 8);
        long num = 1 + static_cast<long>(rng() % 9);
        long den = 1 + static_cast<long>(rng() % 9);
        if (rng() % 2) num = -num;
        Rat lead = make_rat(num, den);

        SparsePolynomial f(1, {"t"});
        f.add_term({k}, lead);
        unsigned tail_terms = 1 + static_cast<unsigned>(rng() % 4);
        for (unsigned j = 0; j < tail_terms; ++j) {
            unsigned d = k + 1 + static_cast<unsigned>(rng() % 6);
            long tn = static_cast<long>(rng() % 9) - 4;
            if (tn == 0) tn = 1;
            f.add_term({d}, Rat(tn));
        }

        bool expected = (k % 2 == 0) && lead > 0;
        Verdict v = certify_local_nonnegative(f);
        bool certified = v.kind == Verdict::Kind::Certified;
        if (certified != expected) {
            c.require(false, "mismatch on " + f.format());
            break;
        }
    }
    report(6, "univariate lowest-term closed form", c);
}

// 7. 50 diagonally-dominant positive definite quadratic forms in three
//    variables: Hessian test passes 50/50, certification succeeds on at
//    least 45 (budget exhaustion counted), no oracle contradiction.
void criterion7() {
    Check c;
    std::mt19937_64 rng(881100);
    int pd = 0, certified = 0, exhausted = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 3;
        std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n, Rat(0)));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) {
                long num = static_cast<long>(rng() % 13) - 6;
                long den = 1 + static_cast<long>(rng() % 4);
                b[i][j] = make_rat(num, den);
            }
        SparsePolynomial f(n, {"x", "y", "z"});
        for (unsigned i = 0; i < n; ++i) {
            Rat row(0);
            for (unsigned j = 0; j < n; ++j)
                if (j != i) row += abs(i < j ? b[i][j] : b[j][i]);
            Rat diag = row / 2 + Rat(1 + static_cast<long>(rng() % 5));
            ExponentVector sq(n, 0);
            sq[i] = 2;
            f.add_term(sq, diag);
        }
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (b[i][j] != 0) {
                    ExponentVector cross(n, 0);
                    cross[i] = 1;
                    cross[j] = 1;
                    f.add_term(cross, b[i][j]);
                }

        HessianReport hess = hessian_check(f);
        if (hess.applicable && hess.positive_definite) ++pd;

        Verdict v = certify_local_nonnegative(f);
        if (v.kind == Verdict::Kind::Certified) ++certified;
        if (v.kind == Verdict::Kind::Unknown && v.reason == "budget-exhausted")
            ++exhausted;
        if (v.kind == Verdict::Kind::Refuted)
            c.require(false, "refuted a positive definite form: " + f.format());
        if (box_minimum(f, Rat(1), 2).minimum < 0)
            c.require(false, "oracle found a negative value: " + f.format());
    }
    c.require(pd == 50, "Hessian test passed only " + std::to_string(pd) + "/50");
    c.require(certified >= 45, "certified only " + std::to_string(certified) +
                                   "/50 (" + std::to_string(exhausted) +
                                   " budget-exhausted)");
    report(7, "Hessian agreement on random PD forms", c);
}

// 8. 200 seeded random sparse polynomials, n <= 3, degree <= 8, <= 8 terms:
//    cross-validation reports no contradiction and no re-verification
//    failure, in under 10 minutes.
void criterion8() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<SparsePolynomial> corpus;
    for (unsigned i = 0; i < 200; ++i)
        corpus.push_back(random_polynomial(90000 + i, 1 + i % 3, 8, 8));
    CrossValidateReport report_all = cross_validate(corpus);
    c.require(report_all.rows.size() == 200, "corpus size mismatch");
    for (const auto& row : report_all.rows)
        if (!row.consistent) {
            c.require(false, "violation on " + row.polynomial + ": " + row.note);
            break;
        }
    c.require(report_all.all_pass, "cross-validation reported failures");
    c.require(seconds_since(t0) < 600.0, "corpus run exceeded 10 minutes");
    report(8, "random corpus cross-validation", c);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures == 0) {
        std::printf("all acceptance criteria pass\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", g_failures);
    return 1;
}
