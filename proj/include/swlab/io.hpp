#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "fusion.hpp"
#include "poincare.hpp"
#include "schur.hpp"
#include "spectra.hpp"
#include "symmetry.hpp"
#include "twistlie.hpp"

namespace swlab::io {

using json = nlohmann::ordered_json;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

inline mpz_class json_to_mpz(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw parse_error("expected an integer or integer string");
}

/// Exact scalars travel as [a, b, c] with the discriminant d field-level.
inline json scalar_to_json(const QuadScalar& x) {
    return json::array({mpz_to_json(x.num_rat()), mpz_to_json(x.num_irr()),
                        mpz_to_json(x.den())});
}

inline QuadScalar json_to_scalar(const json& j, unsigned long d) {
    if (!j.is_array() || j.size() != 3) throw parse_error("scalar must be [a, b, c]");
    return QuadScalar(json_to_mpz(j[0]), json_to_mpz(j[1]), json_to_mpz(j[2]), d);
}

inline json matrix_to_json(const Matrix<QuadScalar>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix<QuadScalar> json_to_matrix(const json& j, unsigned long d) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw parse_error("matrix must be an array of row arrays");
    Matrix<QuadScalar> m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != j[0].size()) throw parse_error("ragged matrix rows");
        for (std::size_t k = 0; k < j[i].size(); ++k) m(i, k) = json_to_scalar(j[i][k], d);
    }
    return m;
}

inline json matrix_to_json_float(const Matrix<double>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Fixture format: {"dim", "field": {"d"}, "kind", "u"/"v" or "S"}.
inline json symmetry_to_json(const Symmetry<QuadScalar>& s, unsigned long d,
                             const Matrix<QuadScalar>* u = nullptr,
                             const Matrix<QuadScalar>* v = nullptr) {
    json out;
    out["dim"] = s.dim();
    out["field"] = {{"d", d}};
    out["kind"] = kind_name(s.kind());
    if (s.kind() == SymmetryKind::rank2 && u && v) {
        out["u"] = matrix_to_json(*u);
        out["v"] = matrix_to_json(*v);
    } else {
        out["S"] = matrix_to_json(s.matrix());
    }
    return out;
}

inline unsigned long fixture_disc(const json& j) {
    if (!j.contains("field") || !j["field"].contains("d"))
        throw parse_error("fixture is missing field.d");
    long d = j["field"]["d"].get<long>();
    if (d < 0) throw parse_error("field.d must be nonnegative");
    return static_cast<unsigned long>(d);
}

/// Raw operator matrix of a fixture, without the construction-time checks.
inline Matrix<QuadScalar> fixture_matrix(const json& j) {
    unsigned long d = fixture_disc(j);
    int n = j.at("dim").get<int>();
    std::string kind = j.value("kind", "custom");
    if (kind == "rank2" && j.contains("u")) {
        auto u = json_to_matrix(j.at("u"), d);
        auto v = json_to_matrix(j.at("v"), d);
        Matrix<QuadScalar> s = Matrix<QuadScalar>::identity(n * n);
        QuadScalar two(2);
        for (int i = 0; i < n; ++i)
            for (int jj = 0; jj < n; ++jj)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        s(i * n + jj, k * n + l) -= two * u(i, jj) * v(k, l);
        return s;
    }
    auto s = json_to_matrix(j.at("S"), d);
    if (s.rows() != static_cast<std::size_t>(n) * n) throw parse_error("S has wrong size");
    return s;
}

inline Symmetry<QuadScalar> json_to_symmetry(const json& j, double tol = 1e-9) {
    unsigned long d = fixture_disc(j);
    std::string kind = j.value("kind", "custom");
    if (kind == "rank2" && j.contains("u"))
        return build_rank2(json_to_matrix(j.at("u"), d), json_to_matrix(j.at("v"), d), tol);
    SymmetryKind k = kind == "glued"  ? SymmetryKind::glued
                     : kind == "super" ? SymmetryKind::super
                                       : SymmetryKind::custom;
    return Symmetry<QuadScalar>(j.at("dim").get<int>(), fixture_matrix(j), k, tol);
}

inline json verification_to_json(const VerificationReport& rep) {
    return json{{"involutive", rep.involutive},
                {"qybe", rep.qybe},
                {"site_conjugation", rep.site_conjugation},
                {"residuals",
                 {{"involutive", rep.involutive_residual},
                  {"qybe", rep.qybe_residual},
                  {"conjugation", rep.conjugation_residual}}},
                {"all_ok", rep.all_ok()}};
}

inline json poincare_to_json(const PoincareData& data) {
    json out;
    out["minus"] = data.minus;
    out["plus"] = data.plus;
    out["class"] = series_class_name(data.cls);
    if (data.cls == SeriesClass::even) out["rank"] = data.rank;
    out["birank"] = {data.birank.first, data.birank.second};
    out["pp_ok"] = data.pp_ok;
    json alpha = json::array();
    if (!data.alpha_exact.empty())
        for (const auto& a : data.alpha_exact) alpha.push_back(scalar_to_json(a));
    out["alpha"] = alpha;
    json alpha_f = json::array();
    if (data.cls == SeriesClass::even)
        for (double a : roots_alpha(data)) alpha_f.push_back(a);
    out["alpha_float"] = alpha_f;
    if (!data.numer.empty()) {
        json numer = json::array(), denom = json::array();
        for (const auto& c : data.numer) numer.push_back(scalar_to_json(c));
        for (const auto& c : data.denom) denom.push_back(scalar_to_json(c));
        out["numerator"] = numer;
        out["denominator"] = denom;
    }
    return out;
}

inline Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            int v = std::stoi(item);
            if (v < 0) throw parse_error("negative part");
            if (v > 0) parts.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("bad partition entry '" + item + "'");
        }
    }
    return Partition(parts);
}

inline std::string partition_key(const Partition& lam) {
    if (lam.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < lam.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(lam.part(i));
    }
    return s;
}

inline json spectrum_to_json(const SpectrumTable& t) {
    json out;
    out["model"] = t.model == SpectrumModel::hyperboloid ? "hyperboloid" : "cpn";
    out["n"] = t.n;
    json rows = json::array();
    mpz_class acc = 0;
    for (const auto& row : t.rows) {
        acc += row.multiplicity;
        rows.push_back(json{{"l", row.l},
                            {"eigenvalue", scalar_to_json(row.eigenvalue)},
                            {"multiplicity", mpz_to_json(row.multiplicity)},
                            {"N", mpz_to_json(acc)}});
    }
    out["rows"] = rows;
    return out;
}

/// CSV with header, UTF-8, LF endings; r_at/r_below only for the hyperboloid.
inline std::string spectrum_to_csv(const SpectrumTable& t) {
    std::ostringstream os;
    bool hyp = t.model == SpectrumModel::hyperboloid;
    os << "l,eigenvalue,multiplicity,N";
    if (hyp) os << ",r_at,r_below";
    os << "\n";
    std::optional<AsymptoticsReport> rep;
    if (hyp && t.rows.size() >= 12) rep = weyl_fit(t);
    mpz_class acc = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        acc += row.multiplicity;
        os << row.l << "," << row.eigenvalue.num_rat();
        if (row.eigenvalue.den() != 1) os << "/" << row.eigenvalue.den();
        os << "," << row.multiplicity << "," << acc;
        if (hyp) {
            if (rep && i >= 1) {
                os << "," << std::exp(rep->r_at_log[i - 1]) << ","
                   << std::exp(rep->r_below_log[i - 1]);
            } else {
                os << ",,";
            }
        }
        os << "\n";
    }
    return os.str();
}

inline json weyl_to_json(const AsymptoticsReport& rep) {
    return json{{"n", rep.n},
                {"L", rep.L},
                {"alpha2", rep.alpha2},
                {"log_alpha2", rep.log_alpha2},
                {"beta_sup", rep.beta_sup},
                {"beta_inf", rep.beta_inf},
                {"ratio", rep.ratio},
                {"ratio_expected", rep.ratio_expected},
                {"r_at_stable", rep.r_at_stable},
                {"r_below_stable", rep.r_below_stable},
                {"max_rel_change_at", rep.max_rel_change_at},
                {"max_rel_change_below", rep.max_rel_change_below},
                {"log_fit", rep.log_fit},
                {"log_fit_rel_err", rep.log_fit_rel_err},
                {"poly_exponent_diverges", rep.poly_exponent_diverges}};
}

inline json conjecture_report_to_json(const Conjecture34Report& rep) {
    json out;
    out["lambda"] = partition_key(rep.lambda);
    out["closed"] = rep.closed;
    out["induced_is_symmetry"] = rep.induced_is_symmetry;
    out["dim"] = rep.dim;
    out["classical_dim"] = rep.classical_dim;
    out["minus_series"] = rep.minus_series;
    out["series_terminates"] = rep.series_terminates;
    out["roots"] = rep.roots;
    out["weights"] = rep.weights;
    out["agree"] = rep.agree;
    out["max_deviation"] = rep.max_deviation;
    return out;
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
}

inline json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open " + path);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw parse_error(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return j;
}

}  // namespace swlab::io
