#include "hardy/leech.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hardy/error.hpp"
#include "hardy/linalg.hpp"
#include "hardy/random.hpp"

namespace hardy {

namespace {

void require_norm_bound(const TaylorSeries& h, double tol)
{
    const double top = linalg::max_eigenvalue(h2_form(h, h));
    if (top > 1.0 + tol) {
        std::ostringstream os;
        os << "[H, H] exceeds the identity (largest eigenvalue " << top << ")";
        fail(ErrorCode::infeasible, os.str());
    }
}

} // namespace

void LeechData::validate() const
{
    require(!points.empty() && a_values.size() == points.size()
                && b_values.size() == points.size(),
            ErrorCode::dimension_mismatch, "Leech data needs one A and one B value per point");
    const Eigen::Index p = a_values.front().cols();
    const Eigen::Index q = b_values.front().cols();
    for (std::size_t l = 0; l < points.size(); ++l) {
        require(std::abs(points[l]) < 1.0, ErrorCode::invalid_argument,
                "Leech sample points must lie in the open disk");
        require(a_values[l].cols() == p && b_values[l].cols() == q
                    && a_values[l].rows() == b_values[l].rows() && a_values[l].rows() >= 1,
                ErrorCode::dimension_mismatch, "Leech samples have inconsistent shapes");
    }
}

Matrix leech_kernel(const LeechData& data)
{
    data.validate();
    std::vector<Eigen::Index> offset{0};
    for (const auto& a : data.a_values) {
        offset.push_back(offset.back() + a.rows());
    }
    Matrix k(offset.back(), offset.back());
    for (std::size_t l = 0; l < data.points.size(); ++l) {
        for (std::size_t j = 0; j < data.points.size(); ++j) {
            const Matrix num = data.a_values[l] * data.a_values[j].adjoint()
                               - data.b_values[l] * data.b_values[j].adjoint();
            k.block(offset[l], offset[j], num.rows(), num.cols()) =
                num / (1.0 - data.points[l] * std::conj(data.points[j]));
        }
    }
    return linalg::hermitian_part(k);
}

SchurFunction leech_factor(const LeechData& data, const NPOptions& opts)
{
    data.validate();
    NPData np;
    Eigen::Index rows = 0;
    for (const auto& a : data.a_values) {
        rows += a.rows();
    }
    np.xi.resize(data.a_values.front().cols(), rows);
    np.eta.resize(data.b_values.front().cols(), rows);
    Eigen::Index col = 0;
    for (std::size_t l = 0; l < data.points.size(); ++l) {
        for (Eigen::Index r = 0; r < data.a_values[l].rows(); ++r, ++col) {
            np.nodes.push_back(data.points[l]);
            np.xi.col(col) = data.a_values[l].row(r).adjoint();
            np.eta.col(col) = data.b_values[l].row(r).adjoint();
        }
    }
    // The Leech kernel on the samples is exactly this Pick matrix, so the
    // PSD test inside np_solve is the kernel test.
    return np_solve(np, std::nullopt, opts);
}

std::vector<cplx> ring_samples(int count, std::uint64_t seed)
{
    require(count >= 2, ErrorCode::invalid_argument, "need at least two sample points");
    Random rng(seed);
    const int inner = count / 2;
    const int outer = count - inner;
    std::vector<cplx> pts;
    const double off_inner = rng.uniform();
    const double off_outer = rng.uniform();
    for (int k = 0; k < inner; ++k) {
        pts.push_back(std::polar(0.4, 2.0 * std::numbers::pi * (k + off_inner) / inner));
    }
    for (int k = 0; k < outer; ++k) {
        pts.push_back(std::polar(0.75, 2.0 * std::numbers::pi * (k + off_outer) / outer));
    }
    return pts;
}

TaylorSeries schur_to_h2(const SchurFunction& s, std::size_t n)
{
    const Eigen::Index q = s.cols();
    const Eigen::Index p = s.rows() - q;
    require(p >= 1, ErrorCode::dimension_mismatch,
            "representation needs s with more rows than columns");
    const TaylorSeries ser = s.series(n);
    // I - z s2(z): constant term I, then -s2 shifted by one.
    TaylorSeries den(q, q, n);
    den[0] = Matrix::Identity(q, q);
    for (std::size_t k = 1; k < n; ++k) {
        den[k] = -ser[k - 1].bottomRows(q);
    }
    return mul(ser.block(0, 0, p, q), inverse(den, n));
}

SchurFunction h2_to_schur(const TaylorSeries& h, const std::vector<cplx>& points,
                          const LeechOptions& opts)
{
    require_norm_bound(h, opts.norm_tol);
    const Eigen::Index p = h.rows();
    const Eigen::Index q = h.cols();
    LeechData data;
    for (cplx z : points) {
        const Matrix hz = eval(h, z);
        Matrix a(p, p + q);
        a.leftCols(p) = Matrix::Identity(p, p);
        a.rightCols(q) = z * hz;
        data.points.push_back(z);
        data.a_values.push_back(std::move(a));
        data.b_values.push_back(hz);
    }
    return leech_factor(data, opts.np).with_partition({p, q});
}

SchurFunction h2_to_schur(const TaylorSeries& h, const LeechOptions& opts)
{
    return h2_to_schur(h, ring_samples(opts.samples, opts.seed), opts);
}

TaylorSeries generalized_schur_to_h2(const SchurFunction& s, const ModelBasis& basis,
                                     std::size_t n, std::size_t work)
{
    const Eigen::Index m = basis.dimension();
    const Eigen::Index q = s.cols();
    const Eigen::Index top = s.rows() - q;
    require(top >= m && top % m == 0, ErrorCode::dimension_mismatch,
            "Schur function rows do not split into M blocks plus q");
    const Eigen::Index p = top / m;
    const auto& blocks = s.partition();
    if (blocks.size() > 1) {
        bool ok = blocks.size() == static_cast<std::size_t>(m) + 1 && blocks.back() == q;
        for (std::size_t k = 0; ok && k + 1 < blocks.size(); ++k) {
            ok = blocks[k] == p;
        }
        require(ok, ErrorCode::dimension_mismatch, "partition does not match M blocks of p rows");
    }
    const TaylorSeries stacked = schur_to_h2(s, work == 0 ? 4 * n : std::max(work, n));
    std::vector<TaylorSeries> parts;
    for (Eigen::Index j = 0; j < m; ++j) {
        parts.push_back(stacked.block(j * p, 0, p, q));
    }
    return synthesize(basis, parts, n);
}

SchurFunction generalized_h2_to_schur(const TaylorSeries& h, const ModelBasis& basis,
                                      const LeechOptions& opts)
{
    require_norm_bound(h, opts.norm_tol);
    const auto d = analyze(h, basis);
    const TaylorSeries g = vstack(d.parts);
    const auto s = h2_to_schur(g, opts);
    std::vector<Eigen::Index> blocks(static_cast<std::size_t>(basis.dimension()), h.rows());
    blocks.push_back(h.cols());
    return s.with_partition(std::move(blocks));
}

} // namespace hardy
