#include "qm/qseries.hpp"

#include <cmath>

namespace qm {

namespace {

using SR = Series<Rat>;

// Laurent expansion of e^{x u}/(1-e^u) with coefficients of u^{-1}..u^{order}
SR kernel_series(const Rat& x, long order) {
    SR ex = SR::exp_linear(x, order + 1);
    SR one_minus_eu = SR::constant(Rat(1), order + 1) - SR::exp_linear(Rat(1), order + 1);
    return ex * one_minus_eu.invert();
}

// all sign vectors over |P| punctures; when half is set the first sign is
// pinned to +1 (global-flip representatives)
std::vector<std::vector<int>> sign_vectors(size_t n, bool half) {
    std::vector<std::vector<int>> out;
    size_t total = 1u << (n - (half ? 1 : 0));
    for (size_t mask = 0; mask < total; ++mask) {
        std::vector<int> eps(n, 1);
        for (size_t p = half ? 1 : 0, bit = 0; p < n; ++p, ++bit)
            eps[p] = (mask >> bit) & 1 ? -1 : 1;
        out.push_back(std::move(eps));
    }
    return out;
}

int sign_of(const std::vector<int>& eps) {
    int s = 1;
    for (int e : eps) s *= e;
    return s;
}

Rat dot(const std::vector<int>& eps, const ConjugacyParameter& x) {
    Rat acc(0);
    for (size_t p = 0; p < x.size(); ++p) acc += Rat(eps[p]) * x[p];
    return acc;
}

void check_regular(const ConjugacyParameter& x) {
    if (x.empty()) throw std::domain_error("empty conjugacy parameter");
    for (auto& xp : x)
        if (!(xp > 0 && xp < rat(1, 2)))
            throw std::domain_error("conjugacy parameter outside (0,1/2)");
}

// coefficient of w^{2j} in ((e^{w/2}-e^{-w/2})/w)^{-m}
std::vector<Rat> kernel_correction(long m, long jmax) {
    long order = 2 * jmax;
    SR half = SR::exp_linear(rat(1, 2), order + 1);
    SR mhalf = SR::exp_linear(rat(-1, 2), order + 1);
    SR d = (half - mhalf) * SR::monomial(Rat(1), -1, order + 1); // starts at 1
    SR dm = d.invert().pow(m);
    std::vector<Rat> c((size_t)jmax + 1, Rat(0));
    for (long j = 0; j <= jmax; ++j) c[(size_t)j] = dm.coeff(2 * j);
    return c;
}

} // namespace

void check_level_weight(const LevelWeight& lw) {
    if (lw.level < 1) throw std::domain_error("level must be positive");
    if (lw.weights.empty()) throw std::domain_error("at least one weight required");
    for (int l : lw.weights) {
        if (l % 2 != 0) throw std::domain_error("weight must be even");
        if (l < 0 || l > 2 * lw.level) throw std::domain_error("weight out of range [0, 2k]");
    }
}

Rat bernoulli_series(long m, const Rat& x) {
    if (m < 1) throw std::domain_error("bernoulli_series: m must be positive");
    if (rat_is_integer(x)) throw std::domain_error("bernoulli_series: x must not be integral");
    Rat fx = rat_frac(x);
    // residue of e^{{x}u}/((1-e^u) u^m) = coefficient of u^{m-1} in e^{{x}u}/(1-e^u)
    return kernel_series(fx, m).coeff(m - 1);
}

Rat witten_volume(const SurfaceSignature& sig, const ConjugacyParameter& x) {
    check_signature(sig);
    check_regular(x);
    if ((int)x.size() != sig.punctures)
        throw std::domain_error("witten_volume: puncture count mismatch");
    long m = 2 * sig.genus - 2 + sig.punctures;
    Rat acc(0);
    for (auto& eps : sign_vectors(x.size(), false)) {
        Rat y = dot(eps, x);
        if (rat_is_integer(y))
            throw std::domain_error("witten_volume: special parameter (eps.x integral)");
        acc += Rat(sign_of(eps)) * bernoulli_series(m, rat_frac(y));
    }
    return rat_pow(rat(-2), sig.genus - 1) * acc;
}

Cplx witten_direct_truncated_serial(const SurfaceSignature& sig,
                                    const ConjugacyParameter& x, long nmax) {
    check_signature(sig);
    long m = 2 * sig.genus - 2 + sig.punctures;
    auto epss = sign_vectors(x.size(), false);
    Cplx acc(0, 0);
    for (long n = -nmax; n <= nmax; ++n) {
        if (n == 0) continue;
        Cplx d = std::pow(Cplx(0, 2 * M_PI * (double)n), (double)m);
        for (auto& eps : epss) {
            double y = rat_to_double(dot(eps, x));
            acc += (double)sign_of(eps) * std::exp(Cplx(0, 2 * M_PI * (double)n * y)) / d;
        }
    }
    return std::pow(Cplx(-2, 0), (double)(sig.genus - 1)) * acc;
}

Cplx witten_direct_truncated(const SurfaceSignature& sig, const ConjugacyParameter& x,
                             long nmax) {
    check_signature(sig);
    long m = 2 * sig.genus - 2 + sig.punctures;
    auto epss = sign_vectors(x.size(), false);
    std::vector<double> xs, sg;
    for (auto& eps : epss) {
        xs.push_back(rat_to_double(dot(eps, x)));
        sg.push_back((double)sign_of(eps));
    }
    double re = 0, im = 0;
#ifdef QM_HAVE_OPENMP
#pragma omp parallel for reduction(+ : re, im) schedule(static)
#endif
    for (long n = 1; n <= nmax; ++n) {
        Cplx local(0, 0);
        for (long s = -1; s <= 1; s += 2) {
            Cplx d = std::pow(Cplx(0, 2 * M_PI * (double)(s * n)), (double)m);
            for (size_t i = 0; i < xs.size(); ++i)
                local += sg[i] * std::exp(Cplx(0, 2 * M_PI * (double)(s * n) * xs[i])) / d;
        }
        re += local.real();
        im += local.imag();
    }
    return std::pow(Cplx(-2, 0), (double)(sig.genus - 1)) * Cplx(re, im);
}

long long verlinde_sum_direct(const SurfaceSignature& sig, const LevelWeight& lw) {
    check_signature(sig);
    check_level_weight(lw);
    if ((int)lw.weights.size() != sig.punctures)
        throw std::domain_error("verlinde_sum_direct: puncture count mismatch");
    const long k = lw.level, g = sig.genus;
    const long period = 2 * (k + 2);
    long double acc = 0.0L;
    // 1/|W| sum over regular points t_j, theta_j = pi j / (k+2), j != 0, k+2
    for (long j = 1; j <= period - 1; ++j) {
        if (j == k + 2) continue;
        long double theta = (long double)M_PI * (long double)j / (long double)(k + 2);
        long double sj = sinl(theta);
        long double weyl = (long double)(2 * (k + 2)) / (4.0L * sj * sj);
        long double term = powl(weyl, (long double)(g - 1));
        for (int l : lw.weights) term *= sinl((long double)(l + 1) * theta) / sj;
        acc += term;
    }
    acc *= 0.5L;
    long double rounded = roundl(acc);
    if (fabsl(acc - rounded) > 1e-6L)
        throw std::runtime_error("verlinde_sum_direct: value failed the integer gate");
    return (long long)rounded;
}

Rat p_residue(long m, const Rat& x, const Rat& k) {
    if (m < 1) throw std::domain_error("p_residue: m must be positive");
    long order = m + 1;
    SR num = kernel_series(x, order); // e^{xu}/(1-e^u), valuation -1
    Rat inv2k = Rat(1) / (2 * k);
    SR sinh2k = SR::exp_linear(inv2k, order + m) - SR::exp_linear(-inv2k, order + m);
    SR f = num * sinh2k.invert().pow(m);
    return f.residue();
}

Rat verlinde_residue(const SurfaceSignature& sig, const LevelWeight& lw) {
    check_signature(sig);
    check_level_weight(lw);
    if ((int)lw.weights.size() != sig.punctures)
        throw std::domain_error("verlinde_residue: puncture count mismatch");
    const long k = lw.level, g = sig.genus;
    long m = 2 * g - 2 + sig.punctures;
    Rat kk = Rat(k + 2);
    ConjugacyParameter xs;
    for (int l : lw.weights) xs.push_back(Rat(l + 1) / (2 * (k + 2)));
    Rat acc(0);
    // half sign-sum: global flips pair up, the representative sum matches the
    // one-puncture residue formula exactly
    for (auto& eps : sign_vectors(xs.size(), true)) {
        Rat y = rat_frac(dot(eps, xs));
        acc += Rat(sign_of(eps)) * p_residue(m, y, kk);
    }
    return Rat(2) * rat_pow(Rat(-2) * Rat(k + 2), g - 1) * acc;
}

Cplx t_series_serial(const SurfaceSignature& sig, const ConjugacyParameter& x, Cplx q,
                     double tol) {
    check_signature(sig);
    check_regular(x);
    if (!(std::abs(q) > 0 && std::abs(q) < 1))
        throw std::domain_error("t_series: need 0 < |q| < 1");
    if (tol <= 0) throw std::domain_error("t_series: tol must be positive");
    long m = 2 * sig.genus - 2 + sig.punctures;
    auto epss = sign_vectors(x.size(), false);
    double aq = std::abs(q);
    // |q^n - q^{-n}|^{-m} <= (|q|^{-n}(1-|q|^{2n}))^{-m} <= C |q|^{nm}
    double C = std::pow(1.0 - aq * aq, -(double)m) * (double)epss.size() * std::pow(2.0, sig.genus);
    long N = 1;
    while (C * std::pow(aq, (double)(m * (N + 1))) / (1.0 - std::pow(aq, (double)m)) >= tol)
        ++N;
    Cplx acc(0, 0);
    for (long n = 1; n <= N; ++n) {
        Cplx qn = std::pow(q, (double)n);
        Cplx d = std::pow(qn - 1.0 / qn, (double)m);
        for (auto& eps : epss) {
            double y = rat_to_double(dot(eps, x));
            acc += (double)sign_of(eps) * std::exp(Cplx(0, 2 * M_PI * (double)n * y)) / d;
        }
    }
    return std::pow(Cplx(-1, 0), (double)(sig.genus - 1)) * std::pow(2.0, (double)sig.genus) *
           acc;
}

Cplx t_series(const SurfaceSignature& sig, const ConjugacyParameter& x, Cplx q,
              double tol) {
    check_signature(sig);
    check_regular(x);
    if (!(std::abs(q) > 0 && std::abs(q) < 1))
        throw std::domain_error("t_series: need 0 < |q| < 1");
    if (tol <= 0) throw std::domain_error("t_series: tol must be positive");
    long m = 2 * sig.genus - 2 + sig.punctures;
    auto epss = sign_vectors(x.size(), false);
    double aq = std::abs(q);
    double C = std::pow(1.0 - aq * aq, -(double)m) * (double)epss.size() * std::pow(2.0, sig.genus);
    long N = 1;
    while (C * std::pow(aq, (double)(m * (N + 1))) / (1.0 - std::pow(aq, (double)m)) >= tol)
        ++N;
    std::vector<double> ys, sg;
    for (auto& eps : epss) {
        ys.push_back(rat_to_double(dot(eps, x)));
        sg.push_back((double)sign_of(eps));
    }
    double re = 0, im = 0;
#ifdef QM_HAVE_OPENMP
#pragma omp parallel for reduction(+ : re, im) schedule(static)
#endif
    for (long n = 1; n <= N; ++n) {
        Cplx qn = std::pow(q, (double)n);
        Cplx d = std::pow(qn - 1.0 / qn, (double)m);
        Cplx local(0, 0);
        for (size_t i = 0; i < ys.size(); ++i)
            local += sg[i] * std::exp(Cplx(0, 2 * M_PI * (double)n * ys[i])) / d;
        re += local.real();
        im += local.imag();
    }
    return std::pow(Cplx(-1, 0), (double)(sig.genus - 1)) * std::pow(2.0, (double)sig.genus) *
           Cplx(re, im);
}

AsymptoticExpansion t_asymptotic(const SurfaceSignature& sig, const ConjugacyParameter& x) {
    check_signature(sig);
    check_regular(x);
    if (auto w = is_special(x)) {
        std::string msg = "t_asymptotic: special parameter, witness eps = (";
        for (size_t i = 0; i < w->size(); ++i)
            msg += std::string((*w)[i] > 0 ? "+" : "-") + (i + 1 < w->size() ? "," : "");
        throw std::domain_error(msg + ")");
    }
    long m = 2 * sig.genus - 2 + sig.punctures;
    long jmax = m / 2;
    auto corr = kernel_correction(m, jmax);
    AsymptoticExpansion out;
    Rat pref = rat(1, 2) * rat_pow(rat(-1), sig.genus - 1) * rat_pow(rat(2), sig.genus);
    for (auto& eps : sign_vectors(x.size(), false)) {
        Rat y = rat_frac(dot(eps, x));
        SR ker = kernel_series(y, m);
        for (long j = 0; j <= jmax; ++j) {
            long a = m - 2 * j - 1; // u-exponent picked from the class kernel
            if (a < -1) continue;
            Rat coeff = pref * Rat(sign_of(eps)) * corr[(size_t)j] * ker.coeff(a);
            if (coeff == 0) continue;
            out.terms[2 * j - m] += coeff;
            if (out.terms[2 * j - m] == 0) out.terms.erase(2 * j - m);
        }
    }
    out.pole_set = {0};
    out.decay_note =
        "remainder bounded by c*exp(-tau/|hbar|) from the poles at u = 2 pi i n / hbar";
    return out;
}

std::optional<std::vector<int>> is_special(const ConjugacyParameter& x) {
    for (auto& eps : sign_vectors(x.size(), false)) {
        if (rat_is_integer(dot(eps, x))) return eps;
    }
    return std::nullopt;
}

Cplx tilde_series(const SurfaceSignature& sig, const ConjugacyParameter& x, Cplx q,
                  double tol) {
    check_signature(sig);
    check_regular(x);
    if (!(std::abs(q) > 0 && std::abs(q) < 1))
        throw std::domain_error("tilde_series: need 0 < |q| < 1");
    long m = 2 * sig.genus - 2 + sig.punctures;
    Cplx acc(0, 0);
    double aq = std::abs(q);
    long stall = 0;
    for (long lam = 0; lam < 100000; ++lam) {
        long n = lam + 1;
        Cplx qn = std::pow(q, (double)n);
        Cplx qdim = (qn - 1.0 / qn) / (q - 1.0 / q);
        Cplx term = 1.0 / std::pow(qdim, (double)m);
        for (size_t p = 0; p < x.size(); ++p) term *= chi_su2(lam, rat_to_double(x[p]));
        acc += term;
        // geometric tail: |qdim|^{-m} decays like |q|^{nm}
        double bound = std::abs(term) / (1.0 - std::pow(aq, (double)m));
        if (bound < tol * 0.5) {
            if (++stall >= 3) break;
        } else {
            stall = 0;
        }
    }
    return acc;
}

} // namespace qm
