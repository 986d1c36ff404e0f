#include "resrec/recurrence.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace resrec;

namespace {

const IntPoly kQuartic1{1, -4, -1, -4, 1};
const IntPoly kQuartic2{1, 3, 6, 3, 1};
const IntPoly kQuintic{-1, 5, -3, 3, -5, 1};
const IntPoly kXminus1{-1, 1};

IntPoly deg14() { return kXminus1 * kXminus1 * kQuartic1 * kQuartic1 * kQuartic2; }

DetSequence seq_of(std::string label, long start, std::vector<long> vals) {
    DetSequence s;
    s.label = std::move(label);
    s.start = start;
    for (long v : vals) s.terms.emplace_back(v);
    return s;
}

DetSequence minor_seq(Part part, int hi) {
    const long shift = (part == Part::numerator) ? -2 : -1;
    return oracle_sequence(FamilySpec{3, part}, 2, hi).reindexed(shift);
}

}  // namespace

TEST_CASE("eliminate reduces the path system to (y-1)^2") {
    EquationSystem system = run_procedure(seed_family(FamilySpec{1, Part::numerator}));
    IntPoly ann = eliminate(system);
    CHECK(ann == IntPoly{1, -2, 1});
    CHECK(y_to_X(ann) == IntPoly{1, -2, 1});
}

TEST_CASE("eliminate on a one-family system") {
    // hand-built: D(0) = 2y D(0)
    EquationSystem system;
    system.families.push_back(seed_family(FamilySpec{1, Part::numerator}));
    DetIdentity eq;
    eq.lhs = 0;
    eq.rhs.emplace_back(IntPoly::monomial(BigInt(2), 1), 0);
    system.equations.push_back(eq);
    CHECK(eliminate(system) == IntPoly{1, -2});  // 1 - 2y
}

TEST_CASE("degenerate systems are rejected") {
    // D(0) = D(0) gives det(I - A) identically zero
    EquationSystem system;
    system.families.push_back(seed_family(FamilySpec{1, Part::numerator}));
    DetIdentity eq;
    eq.lhs = 0;
    eq.rhs.emplace_back(IntPoly{1}, 0);
    system.equations.push_back(eq);
    CHECK_THROWS_WITH(eliminate(system), Catch::Matchers::ContainsSubstring("degenerate system"));
}

TEST_CASE("polynomial-matrix determinant agrees with pointwise evaluation") {
    std::mt19937 rng(8088);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3;
        std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
        for (auto& row : m)
            for (auto& p : row) {
                std::vector<BigInt> c(static_cast<size_t>(deg(rng)) + 1);
                for (auto& v : c) v = coeff(rng);
                p = IntPoly(std::move(c));
            }
        IntPoly det = detail::det_poly_matrix(m);
        for (long t = -3; t <= 3; ++t) {
            ExactMatrix at(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) at(r, c) = m[static_cast<size_t>(r)][static_cast<size_t>(c)].eval(BigInt(t));
            CHECK(det.eval(BigInt(t)) == det_fraction_free(at));
        }
    }
}

TEST_CASE("y_to_X conventions") {
    CHECK(y_to_X(IntPoly{1, -2, 1}) == IntPoly{1, -2, 1});
    CHECK(y_to_X(IntPoly{7}) == IntPoly{1});
    // 1 - 5y + 3y^2 - 3y^3 + 5y^4 - y^5 reverses onto the quintic
    CHECK(y_to_X(IntPoly{1, -5, 3, -3, 5, -1}) == kQuintic);
    // powers of y are index shifts and drop out
    CHECK(y_to_X(IntPoly{0, 1, -1}) == IntPoly{-1, 1});
}

TEST_CASE("minimal polynomial extraction") {
    SECTION("constant sequence") {
        CHECK(minimal_polynomial(seq_of("ones", 0, {1, 1, 1, 1, 1, 1})) == kXminus1);
    }
    SECTION("arithmetic progression from the path family") {
        DetSequence path = oracle_sequence(FamilySpec{1, Part::numerator}, 4, 20).reindexed(-2);
        // oracle terms are m+1; independent hand check: second differences vanish
        for (long m = path.start; m + 2 <= path.end(); ++m)
            CHECK(path.at(m + 2) - 2 * path.at(m + 1) + path.at(m) == 0);
        CHECK(minimal_polynomial(path) == IntPoly{1, -2, 1});
    }
    SECTION("3-tree denominator window gives exactly the quintic") {
        DetSequence b = minor_seq(Part::denominator, 48);
        DetSequence window;
        window.start = 5;
        window.label = "den[5..40]";
        for (long m = 5; m <= 40; ++m) window.terms.push_back(b.at(m));
        CHECK(minimal_polynomial(window) == kQuintic);
    }
    SECTION("3-tree numerator window gives exactly the degree-14 polynomial") {
        DetSequence a = minor_seq(Part::numerator, 50);
        DetSequence window;
        window.start = 4;
        window.label = "num[4..45]";
        for (long m = 4; m <= 45; ++m) window.terms.push_back(a.at(m));
        IntPoly got = minimal_polynomial(window);
        CHECK(got == deg14());
        CHECK(got == IntPoly{1, -7, 7, 0, 98, -56, 56, -198, 56, -56, 98, 0, 7, -7, 1});
    }
    SECTION("uncertified windows are rejected") {
        DetSequence b = minor_seq(Part::denominator, 14);
        DetSequence window;
        window.start = 2;
        for (long m = 2; m <= 9; ++m) window.terms.push_back(b.at(m));
        CHECK_THROWS_WITH(minimal_polynomial(window),
                          Catch::Matchers::ContainsSubstring("insufficient terms"));
    }
}

TEST_CASE("cutoff detection on the 3-tree sequences") {
    DetSequence b = minor_seq(Part::denominator, 40);
    CHECK(detect_cutoff(b, kQuintic) == 2);
    CHECK(recurrence_holds_at(b, kQuintic, 2));
    CHECK_FALSE(recurrence_holds_at(b, kQuintic, 1));
    // the recurrence holds a fortiori on every later base
    for (long base = 2; base + 5 <= b.end(); ++base) CHECK(recurrence_holds_at(b, kQuintic, base));

    DetSequence a = minor_seq(Part::numerator, 40);
    CHECK(detect_cutoff(a, deg14()) == 1);
    CHECK_FALSE(recurrence_holds_at(a, deg14(), 0));
    // the quintic never annihilates the numerator sequence
    for (long base = a.start; base + 5 <= a.end(); ++base)
        CHECK_FALSE(recurrence_holds_at(a, kQuintic, base));
}

TEST_CASE("make_recurrence anchors initial terms at the cutoff") {
    DetSequence b = minor_seq(Part::denominator, 30);
    LinearRecurrence rec = make_recurrence(b, kQuintic);
    CHECK(rec.order == 5);
    CHECK(rec.cutoff == 2);
    REQUIRE(rec.initial.size() == 5);
    CHECK(rec.initial[0] == 3);
    CHECK(rec.initial[1] == 16);
    CHECK(rec.initial[4] == 1488);
}

TEST_CASE("backward extension") {
    SECTION("3-tree denominator sister values") {
        DetSequence b = minor_seq(Part::denominator, 30);
        LinearRecurrence rec = make_recurrence(b, kQuintic);
        SisterSequence sis = extend_backward(b, rec, 6);
        CHECK(sis.at(1) == 0);   // differs from the oracle value 1: the recurrence fails below m=2
        CHECK(sis.at(0) == 0);
        CHECK(sis.at(-1) == 4);
        CHECK(sis.at(2) == 3);   // anchors keep their oracle values
        // every stored window satisfies the recurrence
        for (long m = sis.lo(); m + rec.order <= sis.hi(); ++m) {
            BigInt acc = 0;
            for (int i = 0; i <= rec.order; ++i)
                acc += rec.char_X[static_cast<size_t>(i)] * sis.at(m + i);
            CHECK(acc == 0);
        }
    }
    SECTION("path numerator extended three back") {
        DetSequence path = oracle_sequence(FamilySpec{1, Part::numerator}, 2, 20).reindexed(-2);
        LinearRecurrence rec = make_recurrence(path, IntPoly{1, -2, 1});
        CHECK(rec.cutoff == 0);
        SisterSequence sis = extend_backward(path, rec, 3);
        CHECK(sis.at(1) == 2);
        CHECK(sis.at(0) == 1);
        CHECK(sis.at(-1) == 0);
        CHECK(sis.at(-2) == -1);
    }
    SECTION("constant sequence stays constant") {
        DetSequence ones = seq_of("ones", 0, {7, 7, 7, 7, 7, 7});
        LinearRecurrence rec = make_recurrence(ones, kXminus1);
        SisterSequence sis = extend_backward(ones, rec, 4);
        for (long m = -4; m <= 5; ++m) CHECK(sis.at(m) == 7);
    }
    SECTION("non-integral backward steps are refused") {
        DetSequence pow2 = seq_of("2^m", 0, {1, 2, 4, 8, 16, 32});
        LinearRecurrence rec = make_recurrence(pow2, IntPoly{-2, 1});
        CHECK_THROWS_WITH(extend_backward(pow2, rec, 2),
                          Catch::Matchers::ContainsSubstring("not backward-extendable"));
    }
}

TEST_CASE("factor annihilation test") {
    IntPoly sq = kXminus1 * kXminus1;

    SECTION("differences of a constant vanish") {
        DetSequence ones = seq_of("ones", 0, {1, 1, 1, 1, 1, 1, 1, 1});
        SisterSequence sis = extend_backward(ones, make_recurrence(ones, kXminus1), 3);
        CHECK(factor_annihilates(sq, kXminus1, kXminus1, sis, 0));
    }
    SECTION("X-2 does not annihilate m+1") {
        DetSequence path = oracle_sequence(FamilySpec{1, Part::numerator}, 2, 16).reindexed(-2);
        SisterSequence sis = extend_backward(path, make_recurrence(path, sq), 3);
        // (X-1)^2 (X-2) annihilates the sequence, its factor X-2 does not:
        // (X-2)x at index m is -m
        IntPoly a = sq * IntPoly{-2, 1};
        CHECK_FALSE(factor_annihilates(a, sq, IntPoly{-2, 1}, sis, 1));
        // pairing C with a non-cofactor is rejected outright
        CHECK_THROWS_WITH(factor_annihilates(sq, kXminus1, IntPoly{-2, 1}, sis, 0),
                          Catch::Matchers::ContainsSubstring("not a factorization"));
    }
    SECTION("bad factorization is rejected") {
        DetSequence ones = seq_of("ones", 0, {1, 1, 1, 1, 1});
        SisterSequence sis = extend_backward(ones, make_recurrence(ones, kXminus1), 2);
        CHECK_THROWS_WITH(factor_annihilates(sq, kXminus1, IntPoly{2, 1}, sis, 0),
                          Catch::Matchers::ContainsSubstring("not a factorization"));
    }
    SECTION("true factor of the denominator annihilator, with extra windows") {
        DetSequence b = minor_seq(Part::denominator, 32);
        LinearRecurrence rec = make_recurrence(b, kQuintic);
        SisterSequence sis = extend_backward(b, rec, 8);
        IntPoly a = kXminus1 * kQuintic;  // degree-6 annihilator of the sister sequence
        CHECK(factor_annihilates(a, kXminus1, kQuintic, sis, 0));
        // positive answer survives direct verification on later windows
        for (long m = 1; m <= 10; ++m) CHECK(apply_poly(kQuintic, sis, m) == 0);
    }
    SECTION("no proper factor of the degree-14 polynomial annihilates the numerator") {
        DetSequence a = minor_seq(Part::numerator, 40);
        LinearRecurrence rec = make_recurrence(a, deg14());
        SisterSequence sis = extend_backward(a, rec, 6);
        IntPoly lhs = deg14();
        CHECK_FALSE(factor_annihilates(lhs, kQuintic, kXminus1 * kQuartic1 * kQuartic2, sis, 1));
        CHECK_FALSE(factor_annihilates(lhs, kQuartic2, kXminus1 * kXminus1 * kQuartic1 * kQuartic1, sis, 1));
        CHECK_FALSE(factor_annihilates(lhs, kXminus1 * kXminus1 * kQuartic1 * kQuartic1, kQuartic2, sis, 1));
    }
}

TEST_CASE("eliminate-then-verify on the 3-tree systems") {
    for (Part part : {Part::numerator, Part::denominator}) {
        EquationSystem system = run_procedure(seed_family(FamilySpec{3, part}));
        IntPoly annX = y_to_X(eliminate(system));
        DetSequence seq = minor_seq(part, 45);
        long cutoff = detect_cutoff(seq, annX);
        INFO("part " << to_string(part) << " annihilator degree " << annX.degree());
        CHECK(annX.degree() == 20);
        CHECK(cutoff <= 5);
        int windows = 0;
        for (long base = cutoff; base + annX.degree() <= seq.end(); ++base, ++windows)
            CHECK(recurrence_holds_at(seq, annX, base));
        CHECK(windows >= 20);
        // the minimal polynomial divides the annihilator
        IntPoly mini = (part == Part::numerator) ? deg14() : kQuintic;
        CHECK(poly_divides(mini, annX));
    }
}
