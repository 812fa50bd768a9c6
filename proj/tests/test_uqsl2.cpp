#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qm/qcomb.hpp"
#include "qm/uqsl2.hpp"

using namespace qm;

namespace {
RF rfq(long e) { return RF::q_power(e); }
Mat delta_like(const Mat& K, const Mat& Kinv) {
    RF d = (rfq(1) - rfq(-1)).inverse();
    return d * (K - Kinv);
}
} // namespace

TEST_CASE("defining relations on irreducibles") {
    for (long m = 0; m <= 3; ++m) {
        ModuleFactor V{m, false};
        Mat E = factor_action(Gen::E, V), F = factor_action(Gen::F, V);
        Mat K = factor_action(Gen::K, V), Ki = factor_action(Gen::Kinv, V);
        CHECK(K * Ki == Mat::identity(m + 1));
        CHECK(K * E == (rfq(2) * E) * K);
        CHECK(K * F == (rfq(-2) * F) * K);
        CHECK(E * F - F * E == delta_like(K, Ki));
        // nilpotency order m+1
        CHECK(E.pow(m + 1).is_zero());
        CHECK(F.pow(m + 1).is_zero());
    }
}

TEST_CASE("printed actions on V_1 and V_2") {
    Mat E = factor_action(Gen::E, {1, false});
    CHECK(E.at(0, 1) == RF(Rat(1))); // e v_1 = v_0
    CHECK(E.at(0, 0).is_zero());     // e v_0 = 0
    Mat K2 = factor_action(Gen::K, {2, false});
    CHECK(K2.at(0, 0) == rfq(2));
    CHECK(K2.at(1, 1) == RF(Rat(1)));
    CHECK(K2.at(2, 2) == rfq(-2));
}

TEST_CASE("defining relations hold on dual factors and tensor products") {
    FactorList cases[] = {{{1, true}}, {{2, true}}, {{1, false}, {1, false}},
                          {{1, false}, {2, true}}, {{2, true}, {1, true}}};
    for (auto& fs : cases) {
        Mat E = coproduct_action(Gen::E, fs), F = coproduct_action(Gen::F, fs);
        Mat K = coproduct_action(Gen::K, fs), Ki = coproduct_action(Gen::Kinv, fs);
        CHECK(K * E == (rfq(2) * E) * K);
        CHECK(K * F == (rfq(-2) * F) * K);
        CHECK(E * F - F * E == delta_like(K, Ki));
    }
}

TEST_CASE("coproduct instances") {
    // Delta(K) on V_1 (x) V_1 is diagonal q^2, 1, 1, q^{-2}
    Mat K = coproduct_action(Gen::K, {{1, false}, {1, false}});
    CHECK(K.at(0, 0) == rfq(2));
    CHECK(K.at(1, 1) == RF(Rat(1)));
    CHECK(K.at(2, 2) == RF(Rat(1)));
    CHECK(K.at(3, 3) == rfq(-2));
    // Delta(e)(v_1 (x) v_1) = v_0 (x) v_1 + q^{-(-1... )}: e (x) 1 + K^{-1} (x) e
    Mat E = coproduct_action(Gen::E, {{1, false}, {1, false}});
    CHECK(E.at(1, 3) == RF(Rat(1))); // (e (x) 1) v_1(x)v_1 = v_0(x)v_1
    CHECK(E.at(2, 3) == rfq(1));     // (K^{-1} (x) e) v_1(x)v_1 = q v_1(x)v_0
    // empty factor list carries the counit
    CHECK(coproduct_action(Gen::K, {}).at(0, 0) == RF(Rat(1)));
    CHECK(coproduct_action(Gen::E, {}).is_zero());
    CHECK(coproduct_action(Gen::F, {}).is_zero());
}

TEST_CASE("weight tables") {
    auto w = weight_table({{1, false}, {1, true}});
    CHECK(w == std::vector<long>{0, 2, -2, 0});
    CHECK(space_dim({{2, false}, {1, true}}) == 6);
}

TEST_CASE("R-matrix basics") {
    // trivial factor gives the identity
    CHECK(r_matrix({0, false}, {2, false}) == Mat::identity(3));
    CHECK(r_matrix({2, false}, {0, false}) == Mat::identity(3));
    // explicit V_1 (x) V_1 entries: H = diag(s^2, s^-2, s^-2, s^2),
    // R0 adds q(1-q^{-2}) at (v_0 v_1 <- v_1 v_0)... the off-diagonal slot
    Mat R = r_matrix({1, false}, {1, false});
    CHECK(R.at(0, 0) == RF::s_power(2));
    CHECK(R.at(1, 1) == RF::s_power(-2));
    CHECK(R.at(3, 3) == RF::s_power(2));
    RF c1 = rfq(1) - rfq(-1); // q(1-q^{-2})
    CHECK(R.at(1, 2) == c1 * RF::s_power(-2));
}

TEST_CASE("Yang-Baxter") {
    ModuleFactor V1{1, false}, V2{2, false};
    for (auto c : {V1, V2}) {
        Mat R12 = r_matrix(V1, V1).kron(Mat::identity(factor_dim(c)));
        Mat R23 = Mat::identity(2).kron(r_matrix(V1, c));
        // R13 via conjugating R (x) id with the middle flip
        Mat P23(2 * 2 * factor_dim(c), 2 * 2 * factor_dim(c));
        long dc = factor_dim(c);
        for (long a = 0; a < 2; ++a)
            for (long b = 0; b < 2; ++b)
                for (long k = 0; k < dc; ++k)
                    P23.at(a * 2 * dc + k * 2 + b, a * 2 * dc + b * dc + k) = RF(Rat(1));
        // note: this permutation matrix is only consistent when dims allow;
        // build R13 directly instead
        (void)P23;
        Mat R13(2 * 2 * dc, 2 * 2 * dc);
        Mat R1c = r_matrix(V1, c);
        for (long a = 0; a < 2; ++a)
            for (long ap = 0; ap < 2; ++ap)
                for (long b = 0; b < 2; ++b)
                    for (long k = 0; k < dc; ++k)
                        for (long kp = 0; kp < dc; ++kp) {
                            const RF& x = R1c.at(a * dc + k, ap * dc + kp);
                            if (!x.is_zero())
                                R13.at(a * 2 * dc + b * dc + k,
                                       ap * 2 * dc + b * dc + kp) = x;
                        }
        CHECK(R12 * R13 * R23 == R23 * R13 * R12);
    }
}

TEST_CASE("quasitriangularity and coproduct identity") {
    for (long a = 1; a <= 2; ++a)
        for (long b = 1; b <= 2; ++b) {
            ModuleFactor Va{a, false}, Vb{b, false};
            Mat R = r_matrix(Va, Vb);
            Mat Rinv = R.inverse();
            FactorList ab = {Va, Vb};
            // Delta^op(x) = flip Delta(x) flip = R Delta(x) R^{-1}
            for (Gen g : {Gen::E, Gen::F, Gen::K}) {
                Mat D = coproduct_action(g, ab);
                Mat Dop_on_ab(space_dim(ab), space_dim(ab));
                Mat Dba = coproduct_action(g, {Vb, Va});
                long da = a + 1, db = b + 1;
                for (long i = 0; i < da; ++i)
                    for (long j = 0; j < db; ++j)
                        for (long ip = 0; ip < da; ++ip)
                            for (long jp = 0; jp < db; ++jp)
                                Dop_on_ab.at(i * db + j, ip * db + jp) =
                                    Dba.at(j * da + i, jp * da + ip);
                CHECK(Dop_on_ab * R == R * D);
                (void)Rinv;
            }
        }
    // (Delta (x) id)(R) = R13 R23 on V_1,V_1,V_1: check via the braiding form
    ModuleFactor V1{1, false};
    Mat R = r_matrix(V1, V1);
    Mat I2 = Mat::identity(2);
    Mat R23 = I2.kron(R);
    Mat R13(8, 8);
    for (long a2 = 0; a2 < 2; ++a2)
        for (long ap = 0; ap < 2; ++ap)
            for (long b2 = 0; b2 < 2; ++b2)
                for (long k = 0; k < 2; ++k)
                    for (long kp = 0; kp < 2; ++kp) {
                        const RF& x = R.at(a2 * 2 + k, ap * 2 + kp);
                        if (!x.is_zero()) R13.at(a2 * 4 + b2 * 2 + k, ap * 4 + b2 * 2 + kp) = x;
                    }
    // (Delta (x) id)(R): R0 part uses Delta(e)^n (x) f^n with the same
    // coefficients; the Cartan part multiplies the two s^{2 w_i w_3} factors
    Mat E12 = coproduct_action(Gen::E, {V1, V1});
    Mat F3 = factor_action(Gen::F, V1);
    auto w12 = weight_table({V1, V1});
    auto w3 = weight_table({V1});
    Mat H(8, 8);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 2; ++j)
            H.at(i * 2 + j, i * 2 + j) = RF::s_power(2 * w12[(size_t)i] * w3[(size_t)j]);
    Mat R0 = Mat::identity(8);
    Mat En = Mat::identity(4), Fn = Mat::identity(2);
    for (long n = 1;; ++n) {
        En = En * E12;
        Fn = Fn * F3;
        if (En.is_zero() || Fn.is_zero()) break;
        RF cn = rfq(n) * (RF(Rat(1)) - rfq(-2)).pow(2 * n) * q_pochhammer(rfq(-2), rfq(-2), n).inverse();
        R0 = R0 + cn * En.kron(Fn);
    }
    CHECK(R0 * H == R13 * R23);
}

TEST_CASE("ribbon scalar") {
    CHECK(ribbon_scalar(0) == RF(Rat(1)));
    CHECK(ribbon_scalar(1) == RF::s_power(-6));
    CHECK(ribbon_scalar(2) == rfq(-4));
}

TEST_CASE("ribbon axiom on isotypic components") {
    // R21 R12 acts on the V_j component of V_a (x) V_b by theta_a theta_b / theta_j
    for (long a = 1; a <= 2; ++a)
        for (long b = 1; b <= 2; ++b) {
            ModuleFactor Va{a, false}, Vb{b, false};
            Mat Rab = r_matrix(Va, Vb), Rba = r_matrix(Vb, Va);
            long da = a + 1, db = b + 1;
            Mat R21(da * db, da * db);
            for (long i = 0; i < da; ++i)
                for (long j = 0; j < db; ++j)
                    for (long ip = 0; ip < da; ++ip)
                        for (long jp = 0; jp < db; ++jp)
                            R21.at(i * db + j, ip * db + jp) =
                                Rba.at(j * da + i, jp * da + ip);
            Mat M = R21 * Rab;
            for (long j = std::labs(a - b); j <= a + b; j += 2) {
                auto incl = hom_basis({{j, false}}, {Va, Vb});
                REQUIRE(incl.size() == 1);
                RF scal = ribbon_scalar(a) * ribbon_scalar(b) *
                          ribbon_scalar(j).inverse();
                CHECK(M * incl[0] == scal * incl[0]);
            }
        }
}

TEST_CASE("quantum Weyl operator") {
    Mat w1 = quantum_weyl(1);
    CHECK(w1.at(1, 0) == RF::s_power(-1)); // w v_0 = q^{-1/4} v_1
    for (long m = 1; m <= 3; ++m) {
        Mat w = quantum_weyl(m), wi = w.inverse();
        Mat E = factor_action(Gen::E, {m, false});
        Mat F = factor_action(Gen::F, {m, false});
        Mat K = factor_action(Gen::K, {m, false});
        CHECK(w * E * wi == (RF(Rat(-1)) * rfq(1)) * F);      // T(e) = -qf
        CHECK(w * F * wi == (RF(Rat(-1)) * rfq(-1)) * E);     // T(f) = -q^{-1}e
        CHECK(w * K * wi == factor_action(Gen::Kinv, {m, false}));
        // the printed action squares to (-1)^m times the ribbon scalar (w is
        // fixed only up to a central scalar by its defining conjugations)
        RF expect = RF(Rat(m % 2 ? -1 : 1)) * ribbon_scalar(m);
        CHECK(w * w == expect * Mat::identity(m + 1));
    }
}

TEST_CASE("intertwiner bases") {
    auto b0 = intertwiner_basis({{1, false}, {1, false}}, 0);
    REQUIRE(b0.size() == 1);
    CHECK(is_intertwiner(b0[0], {{1, false}, {1, false}}, {{0, false}}));
    auto b1 = intertwiner_basis({{1, false}, {2, false}}, 1);
    REQUIRE(b1.size() == 1);
    CHECK(is_intertwiner(b1[0], {{1, false}, {2, false}}, {{1, false}}));
    CHECK(intertwiner_basis({{1, false}, {1, false}}, 1).empty());
    // Hom(V_1^{(x)4}, V_0) has dimension 2 (Catalan), both certified
    FactorList four(4, ModuleFactor{1, false});
    auto b4 = intertwiner_basis(four, 0);
    REQUIRE(b4.size() == 2);
    for (auto& x : b4) CHECK(is_intertwiner(x, four, {{0, false}}));
    // linear independence: the two have different support rows
    CHECK(!(b4[0] == b4[1]));
    // normalization: leading entry one
    auto wd = weight_table({{1, false}, {2, false}});
    long first = -1;
    for (size_t j = 0; j < wd.size(); ++j)
        if (wd[j] == 1) { first = (long)j; break; }
    CHECK(b1[0].at(0, first) == RF(Rat(1)));
}

TEST_CASE("duality maps and snake identities") {
    for (long m = 1; m <= 2; ++m) {
        long d = m + 1;
        Mat Id = Mat::identity(d);
        // (id (x) ev) o (coev (x) id) = id on V
        CHECK((Id.kron(ev(m))) * (coev(m).kron(Id)) == Id);
        // (evp (x) id) o (id (x) coevp) = id on V
        CHECK((evp(m).kron(Id)) * (Id.kron(coevp(m))) == Id);
        // dual-side snakes
        CHECK((ev(m).kron(Id)) * (Id.kron(coev(m))) == Id);
        CHECK((Id.kron(evp(m))) * (coevp(m).kron(Id)) == Id);
        // loops close to the quantum dimension both ways
        CHECK((evp(m) * coev(m)).at(0, 0) == qdim_rf(m));
        CHECK((ev(m) * coevp(m)).at(0, 0) == qdim_rf(m));
        // the duality maps intertwine the module structure
        CHECK(is_intertwiner(coev(m), {}, {{m, false}, {m, true}}));
        CHECK(is_intertwiner(ev(m), {{m, true}, {m, false}}, {}));
        CHECK(is_intertwiner(evp(m), {{m, false}, {m, true}}, {}));
        CHECK(is_intertwiner(coevp(m), {}, {{m, true}, {m, false}}));
    }
    // pivot is K for sl2
    Mat mu = pivot(1);
    CHECK(mu.at(0, 0) == rfq(1));
    CHECK(mu.at(1, 1) == rfq(-1));
}

TEST_CASE("braiding is an intertwiner and invertible") {
    ModuleFactor V1{1, false}, V2{2, false};
    Mat Xp = braiding(V1, V2, true);
    Mat Xm = braiding(V2, V1, false);
    CHECK(Xm * Xp == Mat::identity(6));
    for (Gen g : {Gen::E, Gen::F, Gen::K}) {
        CHECK(coproduct_action(g, {V2, V1}) * Xp == Xp * coproduct_action(g, {V1, V2}));
    }
}

TEST_CASE("classical limit of generator actions") {
    // s -> 1 turns [n] into n: classical sl2 matrices, no poles
    for (long m = 1; m <= 3; ++m) {
        Mat E = factor_action(Gen::E, {m, false});
        for (long k = 1; k <= m; ++k) {
            Cplx v = E.eval(Cplx(1, 0), Cplx(1, 0), k - 1, k);
            CHECK(std::abs(v - Cplx((double)(m - k + 1), 0)) < 1e-12);
        }
        Mat K = factor_action(Gen::K, {m, false});
        for (long k = 0; k <= m; ++k)
            CHECK(std::abs(K.eval(Cplx(1, 0), Cplx(1, 0), k, k) - Cplx(1, 0)) < 1e-12);
    }
}
