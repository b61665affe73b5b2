#pragma once

#include <cmath>

#include "twistlie.hpp"

namespace swlab {

enum class SpectrumModel { hyperboloid, cpn };

struct SpectrumRow {
    long l = 0;
    QuadScalar eigenvalue;   // rational, strictly increasing in l
    mpz_class multiplicity;  // integral even where defined through alpha powers
};

struct SpectrumTable {
    SpectrumModel model = SpectrumModel::hyperboloid;
    int n = 0;  // hyperboloid: dim V; cpn: rank p
    std::vector<SpectrumRow> rows;
};

/// alpha_2 = (n + sqrt(n^2-4))/2 as an exact quadratic element.
inline QuadScalar hyperboloid_alpha2(int n) {
    auto [s, d] = squarefree_split(static_cast<unsigned long>(n) * n - 4);
    QuadScalar root = d <= 1 ? QuadScalar(static_cast<long>(s) * (d == 0 ? 0 : 1))
                             : QuadScalar(0, static_cast<long>(s), 1, d);
    return (QuadScalar(n) + root) * QuadScalar::rational(1, 2);
}

/// Multiplicity by the closed alpha-power formula, evaluated exactly in the
/// quadratic field and checked integral.
inline mpz_class hyperboloid_mult_formula(int n, long l) {
    QuadScalar a2 = hyperboloid_alpha2(n);
    QuadScalar a1 = a2.conjugate();
    QuadScalar m = (a2.pow(2 * l + 1) - a1.pow(2 * l + 1)) / (a2 - a1);
    if (!m.is_rational() || m.den() != 1)
        throw std::runtime_error("hyperboloid multiplicity is not integral");
    return m.num_rat();
}

/**
 * Spectrum of the traceless Casimir on the rank-2 twisted hyperboloid:
 * eigenvalue 2l^2 + 2l with multiplicity dim V_{(2l)}.  Multiplicities run
 * through the integer three-term recurrence m_{l+1} = (n^2-2) m_l - m_{l-1}
 * (the alpha-power route overflows doubles near l = 35 and is kept as the
 * exact cross-check).
 */
inline SpectrumTable hyperboloid_spectrum(int n, long L) {
    if (n < 3)
        throw std::invalid_argument(
            "hyperboloid_spectrum: n >= 3 (n = 2 is the classical hyperboloid)");
    if (L < 0) throw std::invalid_argument("hyperboloid_spectrum: L >= 0");
    SpectrumTable out;
    out.model = SpectrumModel::hyperboloid;
    out.n = n;
    mpz_class prev = 1, cur = mpz_class(n) * n - 1;
    for (long l = 0; l <= L; ++l) {
        SpectrumRow row;
        row.l = l;
        row.eigenvalue = QuadScalar(2 * l * l + 2 * l);
        row.multiplicity = (l == 0) ? prev : cur;
        out.rows.push_back(row);
        if (l >= 1) {
            mpz_class next = (mpz_class(n) * n - 2) * cur - prev;
            prev = cur;
            cur = next;
        }
    }
    return out;
}

/**
 * CP^n-type orbit spectrum at rank p: diagrams (2k, k^{p-2}) with the
 * traceless Casimir eigenvalue and multiplicity s_{lambda(k)}(alpha).
 */
inline Partition cpn_diagram(int p, long k) {
    std::vector<int> parts;
    if (k > 0) {
        parts.push_back(static_cast<int>(2 * k));
        for (int i = 0; i < p - 2; ++i) parts.push_back(static_cast<int>(k));
    }
    return Partition(parts);
}

template <class T>
SpectrumTable orbit_spectrum_cpn(int p, const std::vector<T>& alpha, long L,
                                 double tol = 1e-6) {
    if (p < 2 || static_cast<int>(alpha.size()) != p)
        throw std::invalid_argument("orbit_spectrum_cpn: need p >= 2 and |alpha| = p");
    SpectrumTable out;
    out.model = SpectrumModel::cpn;
    out.n = p;
    for (long k = 0; k <= L; ++k) {
        Partition lam = cpn_diagram(p, k);
        SpectrumRow row;
        row.l = k;
        row.eigenvalue = casimir_sl_eigenvalue(lam, p);
        T mult = schur_poly(lam, alpha);
        if constexpr (scalar_ops<T>::exact) {
            if (!mult.is_rational() || mult.den() != 1)
                throw std::runtime_error("orbit multiplicity is not integral at k = " +
                                         std::to_string(k));
            row.multiplicity = mult.num_rat();
        } else {
            double v = scalar_ops<T>::to_double(mult);
            double r = std::llround(v);
            if (std::abs(v - r) > tol * std::max(1.0, std::abs(v)))
                throw std::runtime_error("orbit multiplicity is not integral at k = " +
                                         std::to_string(k));
            row.multiplicity = static_cast<long>(std::llround(v));
        }
        out.rows.push_back(row);
    }
    return out;
}

/// Compare two rational scalars (b = 0 required).
inline int rational_cmp(const QuadScalar& x, const QuadScalar& y) {
    QuadScalar d = x - y;
    if (!d.is_rational()) throw std::invalid_argument("rational_cmp: irrational input");
    int s = mpz_sgn(d.num_rat().get_mpz_t());
    return s;
}

/// Counting function N(lam) = number of eigenvalues <= lam with multiplicity.
inline mpz_class count_eigenvalues(const SpectrumTable& table, const QuadScalar& lam) {
    if (table.rows.empty() || rational_cmp(lam, table.rows.back().eigenvalue) > 0)
        throw std::invalid_argument("count_eigenvalues: lambda beyond the tabulated range");
    mpz_class acc = 0;
    for (const auto& row : table.rows)
        if (rational_cmp(row.eigenvalue, lam) <= 0) acc += row.multiplicity;
    return acc;
}

inline double log_mpz(const mpz_class& x) {
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

/**
 * Weyl-type asymptotics probe for the hyperboloid counting function.  The
 * counting function has no single limit; it is bracketed by two geometric
 * envelopes.  Two subsequences are measured in log arithmetic:
 *   r_at(l)    = N(lambda_l) / alpha_2^sqrt(2 lambda_l)
 *   r_below(l) = N(lambda_l) / alpha_2^sqrt(2 lambda_{l+1})   (just below the jump)
 * whose tails estimate the upper/lower envelope constants; their ratio tends
 * to alpha_2^2.  Also reported: log N / sqrt(2 lambda) -> log alpha_2, and
 * the divergence of log N / log lambda (no polynomial law).
 */
struct AsymptoticsReport {
    int n = 0;
    long L = 0;
    double alpha2 = 0, log_alpha2 = 0;
    std::vector<double> r_at_log, r_below_log;  // log of the two subsequences
    double beta_sup = 0, beta_inf = 0;          // exp of the tail values
    double ratio = 0, ratio_expected = 0;       // beta_sup/beta_inf vs alpha_2^2
    bool r_at_stable = false, r_below_stable = false;
    double max_rel_change_at = 0, max_rel_change_below = 0;
    double log_fit = 0;  // log N(lambda_L) / sqrt(2 lambda_L)
    double log_fit_rel_err = 0;
    std::vector<double> poly_exponent;  // log N / log lambda, diverging sequence
    bool poly_exponent_diverges = false;
};

inline AsymptoticsReport weyl_fit(const SpectrumTable& table) {
    if (table.model != SpectrumModel::hyperboloid)
        throw std::invalid_argument("weyl_fit: hyperboloid model required");
    const long L = static_cast<long>(table.rows.size()) - 1;
    if (L < 10) throw std::invalid_argument("weyl_fit: need at least L = 10 rows");

    AsymptoticsReport rep;
    rep.n = table.n;
    rep.L = L;
    rep.alpha2 = hyperboloid_alpha2(table.n).to_double();
    rep.log_alpha2 = std::log(rep.alpha2);
    rep.ratio_expected = rep.alpha2 * rep.alpha2;

    std::vector<double> logN;
    mpz_class acc = 0;
    for (const auto& row : table.rows) {
        acc += row.multiplicity;
        logN.push_back(log_mpz(acc));
    }
    auto lam = [](long l) { return 2.0 * l * l + 2.0 * l; };
    for (long l = 1; l <= L; ++l) {
        rep.r_at_log.push_back(logN[l] - std::sqrt(2.0 * lam(l)) * rep.log_alpha2);
        rep.r_below_log.push_back(logN[l] - std::sqrt(2.0 * lam(l + 1)) * rep.log_alpha2);
        rep.poly_exponent.push_back(logN[l] / std::log(lam(l)));
    }

    auto tail_stability = [&](const std::vector<double>& seq, double& max_change) {
        max_change = 0;
        for (std::size_t i = seq.size() - 5; i < seq.size(); ++i)
            max_change = std::max(max_change,
                                  std::abs(std::exp(seq[i] - seq[i - 1]) - 1.0));
        return max_change < 1e-3;
    };
    rep.r_at_stable = tail_stability(rep.r_at_log, rep.max_rel_change_at);
    rep.r_below_stable = tail_stability(rep.r_below_log, rep.max_rel_change_below);
    rep.beta_sup = std::exp(rep.r_at_log.back());
    rep.beta_inf = std::exp(rep.r_below_log.back());
    rep.ratio = std::exp(rep.r_at_log.back() - rep.r_below_log.back());
    rep.log_fit = logN[L] / std::sqrt(2.0 * lam(L));
    rep.log_fit_rel_err = std::abs(rep.log_fit - rep.log_alpha2) / rep.log_alpha2;

    // polynomial exponent must keep growing (exponential beats every power)
    rep.poly_exponent_diverges = true;
    for (std::size_t i = rep.poly_exponent.size() / 2; i < rep.poly_exponent.size(); ++i)
        if (rep.poly_exponent[i] <= rep.poly_exponent[i - 1]) rep.poly_exponent_diverges = false;
    return rep;
}

}  // namespace swlab
