#include "hardy/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hardy/error.hpp"

namespace hardy::io {

namespace {

[[noreturn]] void bad(const std::string& msg)
{
    fail(ErrorCode::invalid_argument, msg);
}

const Json& field(const Json& j, const char* key, const char* what)
{
    if (!j.is_object()) {
        bad(std::string(what) + ": expected a JSON object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        bad(std::string(what) + ": missing field \"" + key + "\"");
    }
    return *it;
}

double number_from(const Json& j, const char* what)
{
    if (!j.is_number()) {
        bad(std::string(what) + ": expected a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        bad(std::string(what) + ": non-finite number");
    }
    return v;
}

Eigen::Index index_from(const Json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        bad(std::string(what) + ": expected a positive integer");
    }
    return static_cast<Eigen::Index>(j.get<long long>());
}

template <class Fn>
auto guarded(const char* what, Fn fn)
{
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        bad(std::string(what) + ": " + e.what());
    }
}

bool all_numbers(const Json& j)
{
    for (const auto& e : j) {
        if (!e.is_number()) {
            return false;
        }
    }
    return true;
}

/// Numbers, or complex pairs: short enough to print on one line.
bool inline_array(const Json& j)
{
    for (const auto& e : j) {
        if (!e.is_number() && !(e.is_array() && e.size() <= 2 && all_numbers(e))) {
            return false;
        }
    }
    return true;
}

void write(std::ostringstream& os, const Json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            os << "null";
            return;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf;
    } else if (j.is_array()) {
        if (j.empty()) {
            os << "[]";
        } else if (inline_array(j)) {
            os << '[';
            bool first = true;
            for (const auto& e : j) {
                os << (first ? "" : ", ");
                write(os, e, indent);
                first = false;
            }
            os << ']';
        } else {
            os << "[\n";
            bool first = true;
            for (const auto& e : j) {
                os << (first ? "" : ",\n") << inner;
                write(os, e, indent + 1);
                first = false;
            }
            os << '\n' << pad << ']';
        }
    } else if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << (first ? "" : ",\n") << inner << Json(it.key()).dump() << ": ";
            write(os, it.value(), indent + 1);
            first = false;
        }
        os << '\n' << pad << '}';
    } else {
        os << j.dump();
    }
}

} // namespace

Json parse(const std::string& text, const std::string& what)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(what + ": malformed JSON (" + e.what() + ")");
    }
}

std::string dump(const Json& j)
{
    std::ostringstream os;
    write(os, j, 0);
    os << '\n';
    return os.str();
}

cplx complex_from(const Json& j)
{
    if (j.is_number()) {
        return {number_from(j, "complex number"), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        bad("complex numbers are written as [re, im]");
    }
    return {number_from(j[0], "real part"), number_from(j[1], "imaginary part")};
}

Json to_json(cplx z)
{
    return Json::array({z.real(), z.imag()});
}

Matrix matrix_from(const Json& j)
{
    if (!j.is_array() || j.empty()) {
        // A lone complex number is a 1 x 1 matrix.
        return Matrix::Constant(1, 1, complex_from(j));
    }
    if (j.size() == 2 && j[0].is_number()) {
        return Matrix::Constant(1, 1, complex_from(j));
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    if (!j[0].is_array() || j[0].empty()) {
        bad("matrices are written as a list of rows");
    }
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            bad("matrix rows must all have the same length");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = complex_from(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

TaylorSeries series_from(const Json& j)
{
    return guarded("series", [&] {
        const Eigen::Index p = j.contains("p") ? index_from(j["p"], "series p") : 1;
        const Eigen::Index q = j.contains("q") ? index_from(j["q"], "series q") : 1;
        const Json& coeffs = field(j, "coeffs", "series");
        if (!coeffs.is_array() || coeffs.empty()) {
            bad("series: \"coeffs\" must be a non-empty list");
        }
        std::vector<Matrix> out;
        for (const auto& c : coeffs) {
            Matrix m(p, q);
            if (p == 1 && q == 1 && !(c.is_array() && c.size() == 1)) {
                // Scalar shorthand: a bare complex number per coefficient.
                m(0, 0) = complex_from(c);
            } else {
                if (!c.is_array() || static_cast<Eigen::Index>(c.size()) != p * q) {
                    bad("series: every coefficient needs p * q entries");
                }
                for (Eigen::Index k = 0; k < p * q; ++k) {
                    m(k / q, k % q) = complex_from(c[static_cast<std::size_t>(k)]);
                }
            }
            out.push_back(std::move(m));
        }
        return TaylorSeries(std::move(out));
    });
}

Json to_json(const TaylorSeries& f)
{
    Json coeffs = Json::array();
    for (std::size_t n = 0; n < f.size(); ++n) {
        Json c = Json::array();
        for (Eigen::Index r = 0; r < f.rows(); ++r) {
            for (Eigen::Index k = 0; k < f.cols(); ++k) {
                c.push_back(to_json(f[n](r, k)));
            }
        }
        coeffs.push_back(std::move(c));
    }
    Json out;
    out["p"] = f.rows();
    out["q"] = f.cols();
    out["coeffs"] = std::move(coeffs);
    return out;
}

BlaschkeProduct blaschke_from(const Json& j)
{
    return guarded("blaschke", [&] {
        const Json& zeros = field(j, "zeros", "blaschke");
        if (!zeros.is_array() || zeros.empty()) {
            bad("blaschke: \"zeros\" must be a non-empty list");
        }
        std::vector<BlaschkeZero> out;
        for (const auto& z : zeros) {
            if (z.is_object()) {
                const int m = z.contains("m") ? static_cast<int>(index_from(z["m"], "multiplicity")) : 1;
                out.push_back({complex_from(field(z, "a", "blaschke zero")), m});
            } else {
                out.push_back({complex_from(z), 1});
            }
        }
        const cplx c = j.contains("c") ? complex_from(j["c"]) : cplx(1.0);
        return BlaschkeProduct(std::move(out), c);
    });
}

Json to_json(const BlaschkeProduct& b)
{
    Json zeros = Json::array();
    for (const auto& z : b.zeros()) {
        Json e;
        e["a"] = to_json(z.a);
        e["m"] = z.multiplicity;
        zeros.push_back(std::move(e));
    }
    Json out;
    out["zeros"] = std::move(zeros);
    out["c"] = to_json(b.unimodular());
    return out;
}

NPData np_data_from(const Json& j)
{
    return guarded("np data", [&] {
        const Json& nodes = field(j, "nodes", "np data");
        const Json& xi = field(j, "xi", "np data");
        const Json& eta = field(j, "eta", "np data");
        if (!nodes.is_array() || nodes.empty() || !xi.is_array() || !eta.is_array()
            || xi.size() != nodes.size() || eta.size() != nodes.size()) {
            bad("np data: \"nodes\", \"xi\" and \"eta\" must be lists of equal, non-zero length");
        }
        const auto vec = [](const Json& v) -> Vector {
            if (v.is_array()) {
                if (v.empty()) {
                    bad("np data: xi and eta entries must not be empty");
                }
                Vector out(static_cast<Eigen::Index>(v.size()));
                for (std::size_t k = 0; k < v.size(); ++k) {
                    out(static_cast<Eigen::Index>(k)) = complex_from(v[k]);
                }
                return out;
            }
            return Vector::Constant(1, complex_from(v));
        };
        NPData d;
        const auto n = static_cast<Eigen::Index>(nodes.size());
        for (Eigen::Index k = 0; k < n; ++k) {
            const auto idx = static_cast<std::size_t>(k);
            d.nodes.push_back(complex_from(nodes[idx]));
            const Vector x = vec(xi[idx]);
            const Vector y = vec(eta[idx]);
            if (k == 0) {
                d.xi.resize(x.size(), n);
                d.eta.resize(y.size(), n);
            }
            if (x.size() != d.xi.rows() || y.size() != d.eta.rows()) {
                bad("np data: all xi (and all eta) must have the same length");
            }
            d.xi.col(k) = x;
            d.eta.col(k) = y;
        }
        d.validate();
        return d;
    });
}

Json to_json(const NPData& d)
{
    Json nodes = Json::array();
    Json xi = Json::array();
    Json eta = Json::array();
    for (std::size_t k = 0; k < d.size(); ++k) {
        nodes.push_back(to_json(d.nodes[k]));
        Json x = Json::array();
        Json y = Json::array();
        for (Eigen::Index r = 0; r < d.p(); ++r) {
            x.push_back(to_json(d.xi(r, static_cast<Eigen::Index>(k))));
        }
        for (Eigen::Index r = 0; r < d.q(); ++r) {
            y.push_back(to_json(d.eta(r, static_cast<Eigen::Index>(k))));
        }
        xi.push_back(std::move(x));
        eta.push_back(std::move(y));
    }
    Json out;
    out["nodes"] = std::move(nodes);
    out["xi"] = std::move(xi);
    out["eta"] = std::move(eta);
    return out;
}

std::string problem_kind(const Json& j)
{
    return guarded("problem", [&] {
        const Json& kind = field(j, "kind", "problem");
        if (!kind.is_string()) {
            bad("problem: \"kind\" must be a string");
        }
        const auto k = kind.get<std::string>();
        if (k != "linear_functional" && k != "derivative") {
            bad("problem: unknown kind \"" + k + "\"");
        }
        return k;
    });
}

LinearFunctionalProblem linear_functional_from(const Json& j)
{
    return guarded("linear_functional problem", [&] {
        const Json& points = field(j, "points", "linear_functional problem");
        const Json& u = field(j, "u", "linear_functional problem");
        if (!points.is_array() || points.empty() || !u.is_array() || u.size() != points.size()) {
            bad("linear_functional problem: \"points\" and \"u\" must be lists of equal, non-zero length");
        }
        LinearFunctionalProblem pr;
        pr.u.resize(static_cast<Eigen::Index>(u.size()));
        for (std::size_t k = 0; k < points.size(); ++k) {
            pr.points.push_back(complex_from(points[k]));
            pr.u(static_cast<Eigen::Index>(k)) = complex_from(u[k]);
        }
        pr.gamma = matrix_from(field(j, "gamma", "linear_functional problem"));
        pr.validate();
        return pr;
    });
}

DerivativeProblem derivative_from(const Json& j)
{
    return guarded("derivative problem", [&] {
        DerivativeProblem pr;
        pr.a = complex_from(field(j, "a", "derivative problem"));
        const Json& xi = field(j, "xi", "derivative problem");
        if (!xi.is_array() || xi.empty()) {
            bad("derivative problem: \"xi\" must be a non-empty list");
        }
        for (const auto& x : xi) {
            pr.xi.push_back(matrix_from(x));
        }
        if (j.contains("M") && index_from(j["M"], "M") != static_cast<Eigen::Index>(pr.xi.size())) {
            bad("derivative problem: \"M\" differs from the number of xi entries");
        }
        pr.gamma = matrix_from(field(j, "gamma", "derivative problem"));
        pr.validate();
        return pr;
    });
}

std::vector<TaylorSeries> series_list_from(const Json& j)
{
    return guarded("parameter", [&] {
        const Json& list = j.is_object() ? field(j, "parts", "parameter") : j;
        if (!list.is_array() || list.empty()) {
            bad("parameter: expected a non-empty list of series");
        }
        std::vector<TaylorSeries> out;
        for (const auto& s : list) {
            out.push_back(series_from(s));
        }
        return out;
    });
}

} // namespace hardy::io
