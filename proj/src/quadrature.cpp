#include "qentropy/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qentropy::quad {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b, value, err, resabs;
};

double sample(const Fn& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v)) throw PropagatedInvalid(x);
    return v;
}

Panel gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = sample(f, c);

    double fv1[7], fv2[7];
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    double resabs = wgk[7] * std::fabs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        fv1[j] = sample(f, c - dx);
        fv2[j] = sample(f, c + dx);
        const double fsum = fv1[j] + fv2[j];
        resk += wgk[j] * fsum;
        resabs += wgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
        if (j % 2 == 1) resg += wg[j / 2] * fsum;
    }

    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
    resasc *= std::fabs(h);
    resabs *= std::fabs(h);

    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > DBL_MIN / (50.0 * DBL_EPSILON))
        err = std::max(err, 50.0 * DBL_EPSILON * resabs);

    return {a, b, resk * h, err, resabs};
}

struct HeapCmp {
    bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

constexpr int max_subdivisions = 2000;

QuadratureResult integrate_finite(const Fn& f, double a, double b,
                                  double rel_tol, double abs_tol) {
    std::vector<Panel> heap;
    heap.push_back(gk15(f, a, b));
    double done_value = 0.0, done_err = 0.0;

    int subs = 0;
    for (;;) {
        double value = done_value, err = done_err, resabs = 0.0;
        for (const Panel& p : heap) {
            value += p.value;
            err += p.err;
            resabs += p.resabs;
        }
        const double target =
            std::max({abs_tol, rel_tol * std::fabs(value), 10.0 * DBL_EPSILON * resabs});
        if (err <= target || heap.empty()) return {value, err, subs};
        if (subs >= max_subdivisions) throw NonConvergent({value, err, subs});

        std::pop_heap(heap.begin(), heap.end(), HeapCmp{});
        const Panel worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // interval at floating-point resolution; accept as-is
            done_value += worst.value;
            done_err += worst.err;
            continue;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        ++subs;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), HeapCmp{});
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), HeapCmp{});
    }
}

// Euler-Maclaurin Hurwitz zeta: sum_{k>=0} (q+k)^(-p), p > 1.
double hurwitz_zeta(double p, double q) {
    double head = 0.0;
    while (q < 12.0) {
        head += std::pow(q, -p);
        q += 1.0;
    }
    const double qp = std::pow(q, -p);
    return head + qp * q / (p - 1.0) + 0.5 * qp + p * qp / (12.0 * q) -
           p * (p + 1.0) * (p + 2.0) * qp / (720.0 * q * q * q);
}

// sum_{k>=0} (q+k)^(-p) * ln(q+k)  ( = -d/dp of hurwitz_zeta )
double hurwitz_zeta_log(double p, double q) {
    double head = 0.0;
    while (q < 12.0) {
        head += std::pow(q, -p) * std::log(q);
        q += 1.0;
    }
    const double qp = std::pow(q, -p);
    const double lq = std::log(q);
    const double pm = p - 1.0;
    const double q3 = q * q * q;
    return head + qp * q * (lq / pm + 1.0 / (pm * pm)) + 0.5 * qp * lq +
           qp * (p * lq - 1.0) / (12.0 * q) +
           qp * (p * (p + 1.0) * (p + 2.0) * lq -
                 (3.0 * p * p + 6.0 * p + 2.0)) /
               (720.0 * q3);
}

// Gaussian elimination with partial pivoting for the small normal systems
bool solve_small(int n, long double a[4][5], double x[4]) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int i = col + 1; i < n; ++i)
            if (std::fabs((double)a[i][col]) > std::fabs((double)a[piv][col])) piv = i;
        if (a[piv][col] == 0.0L) return false;
        std::swap(a[piv], a[col]);
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const long double q = a[i][col] / a[col][col];
            for (int j = col; j <= n; ++j) a[i][j] -= q * a[col][j];
        }
    }
    for (int i = 0; i < n; ++i) x[i] = (double)(a[i][n] / a[i][i]);
    return true;
}

bool solve3(const double m[3][3], const double r[3], double x[3]) {
    long double a[4][5] = {};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) a[i][j] = m[i][j];
        a[i][3] = r[i];  // augmented column for n = 3
    }
    double y[4];
    if (!solve_small(3, a, y)) return false;
    for (int i = 0; i < 3; ++i) x[i] = y[i];
    return true;
}

struct Closure {
    bool ok = false;
    double tail = 0.0;
    double err = HUGE_VAL;
};

// Fitted power-law remainder: w_m ~ nu^-p (A + B(nu_mid/nu - 1) + C ln(nu/nu_mid)).
Closure power_closure(const std::vector<double>& w, double nu0) {
    Closure out;
    const std::size_t m = w.size() - 1;
    if (m < 31) return out;

    const auto mag = [&](std::size_t i) { return std::fabs(w[i]); };
    const std::size_t h = m / 2, q = m / 4;
    if (mag(m) == 0.0 || mag(h) == 0.0 || mag(q) == 0.0) return out;

    const auto nu = [&](std::size_t i) { return nu0 + (double)i; };
    const double p_fine = std::log(mag(h) / mag(m)) / std::log(nu(m) / nu(h));
    const double p_coarse = std::log(mag(q) / mag(h)) / std::log(nu(h) / nu(q));
    const double p = 2.0 * p_fine - p_coarse;  // cancels the O(1/nu) bias
    const double dp = std::fabs(p_fine - p_coarse);
    if (!(p > 1.01) || dp > 0.5) return out;

    const std::size_t L = std::clamp<std::size_t>(m / 2, 16, 768);
    const std::size_t i0 = m + 1 - L;
    const double nu_mid = nu(i0 + L / 2);

    double A[3][3] = {};
    double rhs[3] = {};
    const double scale = std::pow(nu(i0), p);  // condition the normal equations
    for (std::size_t i = i0; i <= m; ++i) {
        const double base = std::pow(nu(i), -p) * scale;
        const double phi[3] = {base, base * (nu_mid / nu(i) - 1.0),
                               base * std::log(nu(i) / nu_mid)};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) A[r][c] += phi[r] * phi[c];
            rhs[r] += phi[r] * w[i] * scale;
        }
    }
    double coef[3];
    if (!solve3(A, rhs, coef)) return out;

    double ss = 0.0;
    for (std::size_t i = i0; i <= m; ++i) {
        const double base = std::pow(nu(i), -p);
        const double model = base * (coef[0] + coef[1] * (nu_mid / nu(i) - 1.0) +
                                     coef[2] * std::log(nu(i) / nu_mid));
        const double res = w[i] - model;
        ss += res * res;
    }
    const double rms = std::sqrt(ss / (double)L);

    const double qstart = nu(m + 1);
    const double z1 = hurwitz_zeta(p, qstart);
    const double z2 = nu_mid * hurwitz_zeta(p + 1.0, qstart) - z1;
    const double z3 = hurwitz_zeta_log(p, qstart) - std::log(nu_mid) * z1;
    out.tail = coef[0] * z1 + coef[1] * z2 + coef[2] * z3;

    const double lnq = std::log(qstart);
    out.err = rms * (z1 / std::pow(qstart, -p)) +
              std::fabs(out.tail) * std::min(1.0, 0.25 * dp * dp * lnq * lnq);
    out.ok = true;
    return out;
}

// Least-squares remainder with the decay exponent supplied by the caller:
// w_m ~ nu^-p (c0 + c1/nu + c2/nu^2), or with a ln(nu) factor woven in.
Closure hinted_closure(const std::vector<double>& w, double nu0,
                       const DecayHint& hint) {
    Closure out;
    const std::size_t m = w.size() - 1;
    if (m < 31) return out;
    const double p = hint.power;
    if (!(p > 1.005) || !std::isfinite(p)) return out;

    const std::size_t L = std::clamp<std::size_t>(m / 2, 16, 2048);
    const std::size_t i0 = m + 1 - L;
    const auto nu = [&](std::size_t i) { return nu0 + (double)i; };
    const int nb = hint.log_factor ? 4 : 3;

    const auto basis = [&](double v, double phi[4]) {
        const double b0 = std::pow(v, -p);
        if (hint.log_factor) {
            const double lv = std::log(v);
            phi[0] = b0 * lv;
            phi[1] = b0;
            phi[2] = b0 * lv / v;
            phi[3] = b0 / v;
        } else {
            phi[0] = b0;
            phi[1] = b0 / v;
            phi[2] = b0 / (v * v);
        }
    };

    double col_scale[4];
    basis(nu(i0), col_scale);
    for (int c = 0; c < nb; ++c)
        if (col_scale[c] == 0.0) return out;

    long double A[4][5] = {};
    for (std::size_t i = i0; i <= m; ++i) {
        double phi[4];
        basis(nu(i), phi);
        for (int c = 0; c < nb; ++c) phi[c] /= col_scale[c];
        for (int r = 0; r < nb; ++r) {
            for (int c = 0; c < nb; ++c) A[r][c] += (long double)phi[r] * phi[c];
            A[r][nb] += (long double)phi[r] * w[i];
        }
    }
    double coef[4];
    if (!solve_small(nb, A, coef)) return out;

    double ss = 0.0;
    for (std::size_t i = i0; i <= m; ++i) {
        double phi[4];
        basis(nu(i), phi);
        double model = 0.0;
        for (int c = 0; c < nb; ++c) model += coef[c] * phi[c] / col_scale[c];
        const double res = w[i] - model;
        ss += res * res;
    }
    const double rms = std::sqrt(ss / (double)L);

    const double q = nu(m + 1);
    double Z[4];
    if (hint.log_factor) {
        Z[0] = hurwitz_zeta_log(p, q);
        Z[1] = hurwitz_zeta(p, q);
        Z[2] = hurwitz_zeta_log(p + 1.0, q);
        Z[3] = hurwitz_zeta(p + 1.0, q);
    } else {
        Z[0] = hurwitz_zeta(p, q);
        Z[1] = hurwitz_zeta(p + 1.0, q);
        Z[2] = hurwitz_zeta(p + 2.0, q);
    }
    out.tail = 0.0;
    for (int c = 0; c < nb; ++c) out.tail += coef[c] * Z[c] / col_scale[c];

    double lead[4];
    basis(q, lead);
    out.err = rms * std::fabs(Z[0] / lead[0]);
    out.ok = true;
    return out;
}

// Euler transformation as iterated averaging of the partial sums.
Closure euler_closure(const std::vector<double>& w, double acc_before) {
    Closure out;
    const std::size_t n = w.size();
    const std::size_t K = std::min<std::size_t>(n, 40);
    if (K < 8) return out;

    // strict sign alternation over the terms used
    for (std::size_t i = n - K + 1; i < n; ++i) {
        if (w[i] == 0.0 || w[i - 1] == 0.0) return out;
        if ((w[i] > 0.0) == (w[i - 1] > 0.0)) return out;
    }

    std::vector<double> v(K);
    double s = acc_before;
    for (std::size_t i = 0; i < n - K; ++i) s += w[i];
    for (std::size_t i = 0; i < K; ++i) {
        s += w[n - K + i];
        v[i] = s;
    }
    double top = v[0], top_prev = v[0];
    for (std::size_t len = K - 1; len >= 1; --len) {
        for (std::size_t i = 0; i < len; ++i) v[i] = 0.5 * (v[i] + v[i + 1]);
        top_prev = top;
        top = v[0];
    }
    out.tail = top;  // caller treats this as the full-sum estimate
    out.err = 2.0 * std::fabs(top - top_prev) + DBL_EPSILON * std::fabs(top);
    out.ok = true;
    return out;
}

}  // namespace

QuadratureResult integrate(const Fn& f, Interval domain, double rel_tol,
                           double abs_tol) {
    const bool lo_inf = std::isinf(domain.lo);
    const bool hi_inf = std::isinf(domain.hi);
    if (std::isnan(domain.lo) || std::isnan(domain.hi))
        throw std::domain_error("integrate: NaN interval endpoint");

    if (!lo_inf && !hi_inf) {
        if (domain.lo == domain.hi) return {0.0, 0.0, 0};
        return integrate_finite(f, domain.lo, domain.hi, rel_tol, abs_tol);
    }

    if (lo_inf && hi_inf) {
        // split so each tail maps its point at infinity to u = 0, where the
        // floating-point grid is dense enough to chase endpoint singularities
        QuadratureResult left =
            integrate(f, {domain.lo, 0.0}, rel_tol, 0.5 * abs_tol);
        QuadratureResult right =
            integrate(f, {0.0, domain.hi}, rel_tol, 0.5 * abs_tol);
        return {left.value + right.value,
                left.abs_error_estimate + right.abs_error_estimate,
                left.subdivisions + right.subdivisions};
    }

    if (hi_inf) {
        // x = a + (1-u)/u, u in (0,1]; infinity sits at u = 0
        const double a = domain.lo;
        auto g = [&f, a](double u) {
            const double x = a + (1.0 - u) / u;
            if (!std::isfinite(x)) return 0.0;
            const double fx = f(x);
            if (fx == 0.0) return 0.0;
            return fx / (u * u);
        };
        return integrate_finite(g, 0.0, 1.0, rel_tol, abs_tol);
    }

    // x = b - (1-u)/u, u in (0,1]
    const double b = domain.hi;
    auto g = [&f, b](double u) {
        const double x = b - (1.0 - u) / u;
        if (!std::isfinite(x)) return 0.0;
        const double fx = f(x);
        if (fx == 0.0) return 0.0;
        return fx / (u * u);
    };
    return integrate_finite(g, 0.0, 1.0, rel_tol, abs_tol);
}

QuadratureResult integrate_oscillatory_tail(const Fn& f, double period,
                                            double start, double rel_tol,
                                            std::optional<DecayHint> hint) {
    if (!(period > 0.0) || !std::isfinite(start))
        throw std::domain_error("integrate_oscillatory_tail: bad period or start");

    constexpr std::size_t max_windows = 24576;
    const double win_rel = std::clamp(rel_tol * 1e-2, 1e-13, 1e-6);

    std::vector<double> w;
    w.reserve(4096);
    double acc = 0.0, werr = 0.0, wabs_peak = 0.0;
    const double nu0 = start / period + 0.5;
    int nondecay_run = 0;

    // successive closure estimates at doubling window counts; a candidate is
    // accepted only once two octaves agree, making the error claim testable
    struct Track {
        double total = 0.0;
        bool have = false;
    };
    Track prev_hint, prev_euler, prev_power;
    auto vetted = [&](Closure c, double total, Track& track,
                      double* err_out) {
        const double agree =
            track.have ? std::fabs(total - track.total) : HUGE_VAL;
        track.total = total;
        track.have = true;
        *err_out = std::max(c.err, agree);
        return std::isfinite(*err_out);
    };

    for (std::size_t m = 0; m < max_windows; ++m) {
        const double a = start + (double)m * period;
        const QuadratureResult wm =
            integrate_finite(f, a, a + period, win_rel, wabs_peak * rel_tol * 1e-3);
        w.push_back(wm.value);
        acc += wm.value;
        werr += wm.abs_error_estimate;
        const double am = std::fabs(wm.value);
        wabs_peak = std::max(wabs_peak, am);

        // a stubbornly non-decaying envelope means the integral cannot close
        if (m > 0 && am > std::fabs(w[m - 1]) * (1.0 + 1e-12) && std::fabs(w[m - 1]) > 0.0)
            ++nondecay_run;
        else
            nondecay_run = 0;
        if (nondecay_run >= 50)
            throw NonConvergent({acc, werr + 50.0 * am, (int)m});

        // fast-decay exits
        if (m >= 4) {
            const double prev = std::fabs(w[m - 1]);
            if (am == 0.0 && prev == 0.0)
                return {acc, werr, (int)(m + 1)};
            const double ref = std::fabs(w[m - 4]);
            if (ref > 0.0) {
                const double r4 = am / ref;
                if (r4 < 0.5) {
                    const double r = std::pow(r4, 0.25);
                    const double bound = am * r / (1.0 - r);
                    if (bound <= 0.5 * rel_tol * std::fabs(acc))
                        return {acc, werr + bound, (int)(m + 1)};
                }
            }
        }

        // acceleration attempts at power-of-two window counts
        const std::size_t count = m + 1;
        if (count >= 32 && (count & (count - 1)) == 0) {
            double err;
            if (hint) {
                Closure hc = hinted_closure(w, nu0, *hint);
                if (hc.ok && vetted(hc, acc + hc.tail, prev_hint, &err) &&
                    err <= 0.5 * rel_tol * std::fabs(acc + hc.tail))
                    return {acc + hc.tail, werr + err, (int)count};
            }
            Closure eu = euler_closure(w, 0.0);
            if (eu.ok && vetted(eu, eu.tail, prev_euler, &err) &&
                err <= 0.5 * rel_tol * std::fabs(eu.tail))
                return {eu.tail, werr + err, (int)count};

            Closure pc = power_closure(w, nu0);
            if (pc.ok && vetted(pc, acc + pc.tail, prev_power, &err) &&
                err <= 0.5 * rel_tol * std::fabs(acc + pc.tail))
                return {acc + pc.tail, werr + err, (int)count};
        }
    }

    // final attempt before giving up: best vetted estimate at full tolerance
    double best_total = acc, best_err = HUGE_VAL;
    auto consider = [&](const Closure& c, double total, const Track& track) {
        if (!c.ok) return;
        const double agree =
            track.have ? std::fabs(total - track.total) : HUGE_VAL;
        const double err = std::max(c.err, agree);
        if (err < best_err) {
            best_err = err;
            best_total = total;
        }
    };
    if (hint) {
        Closure hc = hinted_closure(w, nu0, *hint);
        consider(hc, acc + hc.tail, prev_hint);
    }
    Closure eu = euler_closure(w, 0.0);
    consider(eu, eu.tail, prev_euler);
    Closure pc = power_closure(w, nu0);
    consider(pc, acc + pc.tail, prev_power);
    if (best_err <= rel_tol * std::fabs(best_total))
        return {best_total, werr + best_err, (int)max_windows};
    throw NonConvergent({best_total,
                         std::isfinite(best_err) ? werr + best_err
                                                 : werr + std::fabs(acc),
                         (int)max_windows});
}

QuadratureResult gk15_panel(const Fn& f, double a, double b) {
    Panel p = gk15(f, a, b);
    return {p.value, p.err, 1};
}

}  // namespace qentropy::quad
