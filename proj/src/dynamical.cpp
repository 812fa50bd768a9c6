#include "qm/dynamical.hpp"

#include "qm/qcomb.hpp"

#include <stdexcept>
#include <string>

namespace qm {

RF fusion_coeff(long n) {
    return RF::q_power(n) * (RF(Rat(1)) - RF::q_power(-2)).pow(2 * n) *
           q_pochhammer(RF::q_power(-2), RF::q_power(-2), n).inverse();
}

Mat fusion_bipartite(const FactorList& fs, size_t split) {
    if (split == 0 || split >= fs.size())
        throw std::invalid_argument("fusion_bipartite: bad split");
    FactorList pre(fs.begin(), fs.begin() + (long)split);
    FactorList suf(fs.begin() + (long)split, fs.end());
    long dp = space_dim(pre), ds = space_dim(suf);
    Mat Fp = coproduct_action(Gen::F, pre);
    Mat Es = coproduct_action(Gen::E, suf);
    auto ws = weight_table(suf);
    Mat acc = Mat::identity(dp * ds);
    Mat Fn = Mat::identity(dp), En = Mat::identity(ds);
    for (long n = 1;; ++n) {
        Fn = Fn * Fp;
        En = En * Es;
        if (Fn.is_zero() || En.is_zero()) break;
        Mat jd(ds, ds);
        for (long j = 0; j < ds; ++j) {
            RF p(Rat(1));
            for (long k = 0; k < n; ++k)
                p = p * (RF(Rat(1)) -
                         RF::t_power(1) * RF::q_power(-2 * ws[(size_t)j] - 2 * k));
            jd.at(j, j) = p.inverse();
        }
        acc = acc + fusion_coeff(n) * Fn.kron(En * jd);
    }
    return acc;
}

Mat fusion_matrix(long a, long b) {
    return fusion_bipartite({{a, false}, {b, false}}, 1);
}

std::vector<Mat> fusion_blocks(const FactorList& fs) {
    if (fs.size() < 2) throw std::invalid_argument("fusion_blocks: need >= 2 factors");
    std::vector<Mat> out;
    for (size_t k = 0; k + 1 < fs.size(); ++k) {
        FactorList tail(fs.begin() + (long)k, fs.end());
        Mat blk = fusion_bipartite(tail, 1);
        if (k > 0) {
            FactorList head(fs.begin(), fs.begin() + (long)k);
            blk = Mat::identity(space_dim(head)).kron(blk);
        }
        out.push_back(std::move(blk));
    }
    return out;
}

Mat fusion_matrix_multi(const FactorList& fs) {
    auto blocks = fusion_blocks(fs);
    Mat acc = blocks[0];
    for (size_t i = 1; i < blocks.size(); ++i) acc = acc * blocks[i];
    return acc;
}

RF q_scalar(long m, long k) {
    RF num = q_pochhammer(RF::t_power(1) * RF::q_power(2 * (k + 1)),
                          RF::q_power(-2), k);
    RF den = q_pochhammer(RF::t_power(1) * RF::q_power(2 * (2 * k - m)),
                          RF::q_power(-2), k);
    return RF::q_power(-2 * (m - k + 1) * k) * num * den.inverse();
}

Mat q_operator(long m) {
    Mat out(m + 1, m + 1);
    for (long k = 0; k <= m; ++k) out.at(k, k) = q_scalar(m, k);
    return out;
}

Mat q_operator_on(const ModuleFactor& f) {
    Mat out(f.m + 1, f.m + 1);
    for (long k = 0; k <= f.m; ++k)
        out.at(k, k) = q_scalar(f.m, f.dual ? f.m - k : k);
    return out;
}

Mat q_operator_from_fusion(long m) {
    ModuleFactor V{m, false};
    Mat E = factor_action(Gen::E, V);
    // S(f) = -f K^{-1}
    Mat Sf = RF(Rat(-1)) * (factor_action(Gen::F, V) * factor_action(Gen::Kinv, V));
    auto w = weight_table({V});
    long d = m + 1;
    Mat acc = Mat::identity(d);
    Mat Sfn = Mat::identity(d), En = Mat::identity(d);
    for (long n = 1;; ++n) {
        Sfn = Sfn * Sf;
        En = En * E;
        if (Sfn.is_zero() || En.is_zero()) break;
        Mat jd(d, d);
        for (long j = 0; j < d; ++j) {
            RF p(Rat(1));
            for (long k = 0; k < n; ++k)
                p = p * (RF(Rat(1)) -
                         RF::t_power(1) * RF::q_power(-2 * w[(size_t)j] - 2 * k));
            jd.at(j, j) = p.inverse();
        }
        acc = acc + fusion_coeff(n) * (Sfn * En * jd);
    }
    return acc;
}

RF a_scalar(long m, long k) {
    RF num = q_pochhammer(RF::t_power(1) * RF::q_power(2 * (k + 1)),
                          RF::q_power(-2), k);
    RF den = q_pochhammer(RF::t_power(1) * RF::q_power(2 * (2 * k - m)),
                          RF::q_power(-2), k);
    return RF(Rat(k % 2 ? -1 : 1)) * RF::q_power(-k * (m - k + 1)) * num *
           den.inverse();
}

Mat dynamical_weyl(long m) {
    Mat out(m + 1, m + 1);
    for (long k = 0; k <= m; ++k) out.at(m - k, k) = a_scalar(m, k);
    return out;
}

Mat dynamical_weyl_composed(long m) {
    Mat K = pivot(m);
    Mat Hq(m + 1, m + 1); // q^{-h^2/4} = s^{-h^2}
    for (long j = 0; j <= m; ++j) {
        long w = m - 2 * j;
        Hq.at(j, j) = RF::s_power(-w * w);
    }
    return ribbon_scalar(m).inverse() * (K * Hq * quantum_weyl(m) * q_operator(m));
}

Mat delta_dynamical_weyl(long a, long b) {
    FactorList ab = {{a, false}, {b, false}};
    long d = space_dim(ab);
    Mat acc(d, d);
    for (long g = std::labs(a - b); g <= a + b; g += 2) {
        auto incl = hom_basis({{g, false}}, ab);
        auto proj = hom_basis(ab, {{g, false}});
        if (incl.empty()) continue;
        Mat comp = proj[0] * incl[0];
        Mat p = comp.at(0, 0).inverse() * proj[0];
        acc = acc + incl[0] * dynamical_weyl(g) * p;
    }
    return acc;
}

Mat shift_lambda(const Mat& op, long c) {
    return op.subst_t(RF::t_power(1) * RF::q_power(2 * c));
}

Mat weyl_flip_lambda(const Mat& op) {
    return op.subst_t(RF::q_power(-4) * RF::t_power(-1));
}

Mat specialize_lambda(const Mat& op, long n) {
    Mat out(op.rows(), op.cols());
    for (long i = 0; i < op.rows(); ++i)
        for (long j = 0; j < op.cols(); ++j) {
            try {
                out.at(i, j) = op.at(i, j).subst_t_spow(8 * n);
            } catch (const std::exception&) {
                throw std::domain_error(
                    "specialize_lambda: entry (" + std::to_string(i) + "," +
                    std::to_string(j) + ") has a pole at t = q^{2*" +
                    std::to_string(n) + "}");
            }
        }
    return out;
}

RF phi21(const RF& a, const RF& b, const RF& c, const RF& p, const RF& z,
         long nmax) {
    RF acc(Rat(0));
    for (long n = 0; n <= nmax; ++n) {
        RF num = q_pochhammer(a, p, n) * q_pochhammer(b, p, n);
        if (num.is_zero()) break;
        RF den = q_pochhammer(c, p, n) * q_pochhammer(p, p, n);
        acc = acc + num * den.inverse() * z.pow(n);
    }
    return acc;
}

RF phi32(const RF& a1, const RF& a2, const RF& a3, const RF& b1, const RF& b2,
         const RF& p, const RF& z, long nmax) {
    RF acc(Rat(0));
    for (long n = 0; n <= nmax; ++n) {
        RF num = q_pochhammer(a1, p, n) * q_pochhammer(a2, p, n) *
                 q_pochhammer(a3, p, n);
        if (num.is_zero()) break;
        RF den = q_pochhammer(b1, p, n) * q_pochhammer(b2, p, n) *
                 q_pochhammer(p, p, n);
        acc = acc + num * den.inverse() * z.pow(n);
    }
    return acc;
}

} // namespace qm
