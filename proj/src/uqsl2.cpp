#include "qm/uqsl2.hpp"

#include "qm/qcomb.hpp"

#include <map>
#include <stdexcept>

namespace qm {

long space_dim(const FactorList& fs) {
    long d = 1;
    for (auto& f : fs) d *= factor_dim(f);
    return d;
}

std::vector<long> weight_table(const FactorList& fs) {
    std::vector<long> w = {0};
    for (auto& f : fs) {
        std::vector<long> next;
        next.reserve(w.size() * (size_t)factor_dim(f));
        for (long base : w)
            for (long k = 0; k <= f.m; ++k) {
                long wk = f.m - 2 * k;
                next.push_back(base + (f.dual ? -wk : wk));
            }
        w = std::move(next);
    }
    return w;
}

Mat Mat::identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = RF(Rat(1));
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("Mat: composition dims");
    Mat out(a.r_, b.c_);
    for (long i = 0; i < a.r_; ++i)
        for (long k = 0; k < a.c_; ++k) {
            const RF& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (long j = 0; j < b.c_; ++j) {
                const RF& y = b.at(k, j);
                if (!y.is_zero()) out.at(i, j) = out.at(i, j) + x * y;
            }
        }
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("Mat: add dims");
    Mat out(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("Mat: sub dims");
    Mat out(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
    return out;
}

Mat operator*(const RF& c, const Mat& a) {
    Mat out(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = c * a.a_[i];
    return out;
}

Mat Mat::transpose() const {
    Mat out(c_, r_);
    for (long i = 0; i < r_; ++i)
        for (long j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::kron(const Mat& o) const {
    Mat out(r_ * o.r_, c_ * o.c_);
    for (long i = 0; i < r_; ++i)
        for (long j = 0; j < c_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (long p = 0; p < o.r_; ++p)
                for (long q = 0; q < o.c_; ++q)
                    out.at(i * o.r_ + p, j * o.c_ + q) = at(i, j) * o.at(p, q);
        }
    return out;
}

Mat Mat::inverse() const {
    if (r_ != c_) throw std::invalid_argument("Mat::inverse: not square");
    Mat a = *this, inv = identity(r_);
    for (long col = 0; col < c_; ++col) {
        long piv = -1;
        for (long i = col; i < r_; ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) throw std::domain_error("Mat::inverse: singular");
        if (piv != col)
            for (long j = 0; j < c_; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        RF d = a.at(col, col).inverse();
        for (long j = 0; j < c_; ++j) {
            a.at(col, j) = d * a.at(col, j);
            inv.at(col, j) = d * inv.at(col, j);
        }
        for (long i = 0; i < r_; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            RF f = a.at(i, col);
            for (long j = 0; j < c_; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Mat Mat::pow(long e) const {
    if (r_ != c_) throw std::invalid_argument("Mat::pow: not square");
    if (e < 0) throw std::invalid_argument("Mat::pow: negative");
    Mat acc = identity(r_), b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

bool Mat::is_zero() const {
    for (auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<RF> Mat::apply(const std::vector<RF>& v) const {
    if ((long)v.size() != c_) throw std::invalid_argument("Mat::apply: dims");
    std::vector<RF> out((size_t)r_);
    for (long i = 0; i < r_; ++i)
        for (long j = 0; j < c_; ++j)
            if (!at(i, j).is_zero() && !v[(size_t)j].is_zero())
                out[(size_t)i] = out[(size_t)i] + at(i, j) * v[(size_t)j];
    return out;
}

Mat Mat::subst_t_spow(long k) const {
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].subst_t_spow(k);
    return out;
}

Mat Mat::subst_t(const RF& r) const {
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].subst_t(r);
    return out;
}

Cplx Mat::eval(Cplx s, Cplx t, long i, long j) const { return at(i, j).eval(s, t); }

Mat factor_action(Gen g, const ModuleFactor& f) {
    const long m = f.m, d = m + 1;
    Mat out(d, d);
    auto qi = [](long n) { return RF(Poly(q_integer(n))); };
    if (!f.dual) {
        switch (g) {
        case Gen::E:
            for (long k = 1; k <= m; ++k) out.at(k - 1, k) = qi(m - k + 1);
            break;
        case Gen::F:
            for (long k = 0; k < m; ++k) out.at(k + 1, k) = qi(k + 1);
            break;
        case Gen::K:
            for (long k = 0; k <= m; ++k) out.at(k, k) = RF::q_power(m - 2 * k);
            break;
        case Gen::Kinv:
            for (long k = 0; k <= m; ++k) out.at(k, k) = RF::q_power(2 * k - m);
            break;
        }
        return out;
    }
    // dual action: transpose of the antipode image on V_m
    switch (g) {
    case Gen::E: // S(e) = -Ke
        for (long k = 1; k <= m; ++k)
            out.at(k, k - 1) = RF(Rat(-1)) * RF::q_power(m - 2 * k + 2) * qi(m - k + 1);
        break;
    case Gen::F: // S(f) = -fK^{-1}
        for (long k = 0; k < m; ++k)
            out.at(k, k + 1) = RF(Rat(-1)) * RF::q_power(2 * k - m) * qi(k + 1);
        break;
    case Gen::K:
        for (long k = 0; k <= m; ++k) out.at(k, k) = RF::q_power(2 * k - m);
        break;
    case Gen::Kinv:
        for (long k = 0; k <= m; ++k) out.at(k, k) = RF::q_power(m - 2 * k);
        break;
    }
    return out;
}

Mat coproduct_action(Gen g, const FactorList& fs) {
    if (fs.empty()) {
        Mat c(1, 1);
        if (g == Gen::K || g == Gen::Kinv) c.at(0, 0) = RF(Rat(1)); // counit
        return c;
    }
    const size_t n = fs.size();
    if (g == Gen::K || g == Gen::Kinv) {
        Mat acc = factor_action(g, fs[0]);
        for (size_t i = 1; i < n; ++i) acc = acc.kron(factor_action(g, fs[i]));
        return acc;
    }
    long d = space_dim(fs);
    Mat acc(d, d);
    for (size_t i = 0; i < n; ++i) {
        Mat term(1, 1);
        term.at(0, 0) = RF(Rat(1));
        for (size_t j = 0; j < n; ++j) {
            Mat piece;
            if (j == i)
                piece = factor_action(g, fs[j]);
            else if (g == Gen::E)
                piece = j < i ? factor_action(Gen::Kinv, fs[j])
                              : Mat::identity(factor_dim(fs[j]));
            else // Gen::F
                piece = j < i ? Mat::identity(factor_dim(fs[j]))
                              : factor_action(Gen::K, fs[j]);
            term = term.kron(piece);
        }
        acc = acc + term;
    }
    return acc;
}

Mat r_matrix(const ModuleFactor& a, const ModuleFactor& b) {
    Mat E = factor_action(Gen::E, a), F = factor_action(Gen::F, b);
    long da = factor_dim(a), db = factor_dim(b);
    // cartan part q^{h (x) h / 2} = s^{2 w1 w2}
    auto wa = weight_table({a}), wb = weight_table({b});
    Mat H(da * db, da * db);
    for (long i = 0; i < da; ++i)
        for (long j = 0; j < db; ++j)
            H.at(i * db + j, i * db + j) = RF::s_power(2 * wa[(size_t)i] * wb[(size_t)j]);
    // R0 = exp_{q^{-2}}(q e (x) f) with exp_p(x) = sum (1-p)^n x^n/(p;p)_n,
    // a finite sum by nilpotency; c_1 = q - q^{-1}
    Mat R0 = Mat::identity(da * db);
    Mat En = Mat::identity(da), Fn = Mat::identity(db);
    for (long n = 1;; ++n) {
        En = En * E;
        Fn = Fn * F;
        if (En.is_zero() || Fn.is_zero()) break;
        RF cn = RF::q_power(n) * (RF(Rat(1)) - RF::q_power(-2)).pow(2 * n) *
                q_pochhammer(RF::q_power(-2), RF::q_power(-2), n).inverse();
        R0 = R0 + cn * En.kron(Fn);
    }
    return R0 * H;
}

namespace {
Mat flip(long da, long db) {
    Mat F(da * db, da * db);
    for (long i = 0; i < da; ++i)
        for (long j = 0; j < db; ++j) F.at(j * da + i, i * db + j) = RF(Rat(1));
    return F;
}
} // namespace

Mat braiding(const ModuleFactor& a, const ModuleFactor& b, bool positive) {
    if (positive) return flip(factor_dim(a), factor_dim(b)) * r_matrix(a, b);
    return braiding(b, a, true).inverse();
}

RF ribbon_scalar(long m) {
    if (m < 0) throw std::domain_error("ribbon_scalar: m >= 0");
    return RF::s_power(-2 * m * (m + 2)); // q^{-m(m+2)/2}
}

Mat quantum_weyl(long m) {
    Mat w(m + 1, m + 1);
    for (long k = 0; k <= m; ++k)
        w.at(m - k, k) = RF(Rat(k % 2 ? -1 : 1)) * RF::s_power(-m * m - 4 * k);
    return w;
}

RF qdim_rf(long m) { return RF(Poly(q_dimension(m))); }

Mat pivot(long m) { return factor_action(Gen::K, {m, false}); }

Mat coev(long m) {
    Mat c((m + 1) * (m + 1), 1);
    for (long i = 0; i <= m; ++i) c.at(i * (m + 2), 0) = RF(Rat(1));
    return c;
}

Mat ev(long m) {
    Mat e(1, (m + 1) * (m + 1));
    for (long i = 0; i <= m; ++i) e.at(0, i * (m + 2)) = RF(Rat(1));
    return e;
}

Mat evp(long m) {
    Mat e(1, (m + 1) * (m + 1));
    for (long i = 0; i <= m; ++i) e.at(0, i * (m + 2)) = RF::q_power(m - 2 * i);
    return e;
}

Mat coevp(long m) {
    Mat c((m + 1) * (m + 1), 1);
    for (long i = 0; i <= m; ++i) c.at(i * (m + 2), 0) = RF::q_power(2 * i - m);
    return c;
}

namespace {

// reduced row echelon form in place; returns pivot column per row
std::vector<long> rref(std::vector<std::vector<RF>>& rows) {
    std::vector<long> pivots;
    size_t r = 0;
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        RF d = rows[r][col].inverse();
        for (size_t j = col; j < ncols; ++j) rows[r][j] = d * rows[r][j];
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            RF f = rows[i][col];
            for (size_t j = col; j < ncols; ++j)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivots.push_back((long)col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

} // namespace

std::vector<Mat> hom_basis(const FactorList& dom, const FactorList& cod) {
    long dd = space_dim(dom), dc = space_dim(cod);
    auto wd = weight_table(dom), wc = weight_table(cod);
    // K-equivariance: unknowns only where the weights agree
    std::vector<std::pair<long, long>> slots; // (cod row, dom col)
    std::map<std::pair<long, long>, size_t> slot_of;
    for (long i = 0; i < dc; ++i)
        for (long j = 0; j < dd; ++j)
            if (wc[(size_t)i] == wd[(size_t)j]) {
                slot_of[{i, j}] = slots.size();
                slots.push_back({i, j});
            }
    if (slots.empty()) return {};
    std::vector<std::vector<RF>> rows;
    for (Gen g : {Gen::E, Gen::F}) {
        Mat Mc = coproduct_action(g, cod), Md = coproduct_action(g, dom);
        // (Mc X - X Md)(i,j) = 0
        for (long i = 0; i < dc; ++i)
            for (long j = 0; j < dd; ++j) {
                std::vector<RF> row(slots.size());
                bool nonzero = false;
                for (long k = 0; k < dc; ++k) {
                    if (Mc.at(i, k).is_zero()) continue;
                    auto it = slot_of.find({k, j});
                    if (it == slot_of.end()) continue;
                    row[it->second] = row[it->second] + Mc.at(i, k);
                    nonzero = true;
                }
                for (long k = 0; k < dd; ++k) {
                    if (Md.at(k, j).is_zero()) continue;
                    auto it = slot_of.find({i, k});
                    if (it == slot_of.end()) continue;
                    row[it->second] = row[it->second] - Md.at(k, j);
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    auto pivots = rref(rows);
    std::vector<bool> is_pivot(slots.size(), false);
    for (long p : pivots) is_pivot[(size_t)p] = true;
    std::vector<Mat> basis;
    for (size_t free = 0; free < slots.size(); ++free) {
        if (is_pivot[free]) continue;
        Mat X(dc, dd);
        X.at(slots[free].first, slots[free].second) = RF(Rat(1));
        for (size_t r = 0; r < rows.size(); ++r)
            if (!rows[r][free].is_zero())
                X.at(slots[(size_t)pivots[r]].first, slots[(size_t)pivots[r]].second) =
                    RF(Rat(0)) - rows[r][free];
        basis.push_back(std::move(X));
    }
    return basis;
}

std::vector<Mat> intertwiner_basis(const FactorList& dom, long target_m) {
    auto basis = hom_basis(dom, {{target_m, false}});
    // scale so the entry pairing the first domain vector of weight target_m
    // with the highest-weight target vector is 1
    auto wd = weight_table(dom);
    long first = -1;
    for (size_t j = 0; j < wd.size(); ++j)
        if (wd[j] == target_m) { first = (long)j; break; }
    if (first >= 0)
        for (auto& X : basis)
            if (!X.at(0, first).is_zero()) {
                RF inv = X.at(0, first).inverse();
                X = inv * X;
            }
    return basis;
}

bool is_intertwiner(const Mat& op, const FactorList& dom, const FactorList& cod) {
    for (Gen g : {Gen::E, Gen::F, Gen::K}) {
        Mat lhs = coproduct_action(g, cod) * op;
        Mat rhs = op * coproduct_action(g, dom);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace qm
