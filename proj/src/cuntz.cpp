#include "hardy/cuntz.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/error.hpp"

namespace hardy {

namespace {

using Column = std::vector<cplx>;

constexpr double atom_energy_floor = 1e-30;
constexpr std::size_t parts_cap_factor = 64;

/// In-place multiplication of a truncated scalar series by b: multiply by
/// the numerator, then divide by the denominator (constant term 1) with the
/// forward recurrence. The recurrence is stable because the denominator
/// roots 1/conj(a) lie outside the closed disk.
class BMultiplier {
public:
    explicit BMultiplier(const BlaschkeProduct& b) : num_(b.numerator()), den_(b.denominator()) {}

    void apply(Column& x) const
    {
        const std::size_t rows = x.size();
        tmp_.assign(rows, 0.0);
        for (std::size_t k = 0; k < rows; ++k) {
            cplx acc = 0.0;
            const std::size_t top = std::min(k, num_.size() - 1);
            for (std::size_t i = 0; i <= top; ++i) {
                acc += num_[i] * x[k - i];
            }
            const std::size_t dtop = std::min(k, den_.size() - 1);
            for (std::size_t i = 1; i <= dtop; ++i) {
                acc -= den_[i] * tmp_[k - i];
            }
            tmp_[k] = acc;
        }
        x.swap(tmp_);
    }

private:
    std::vector<cplx> num_;
    std::vector<cplx> den_;
    mutable Column tmp_;
};

/// The atoms e_j b^n for n = 0, 1, ... truncated to a fixed number of rows.
class AtomStream {
public:
    AtomStream(const ModelBasis& basis, std::size_t rows) : mul_(basis.blaschke())
    {
        const int m = basis.dimension();
        const TaylorSeries e = basis.series(rows);
        atoms_.assign(static_cast<std::size_t>(m), Column(rows));
        for (std::size_t k = 0; k < rows; ++k) {
            for (int j = 0; j < m; ++j) {
                atoms_[static_cast<std::size_t>(j)][k] = e[k](0, j);
            }
        }
    }

    const std::vector<Column>& atoms() const noexcept { return atoms_; }

    void advance()
    {
        for (auto& a : atoms_) {
            mul_.apply(a);
        }
    }

    double max_energy(std::size_t from = 0) const
    {
        double worst = 0.0;
        for (const auto& a : atoms_) {
            double e = 0.0;
            for (std::size_t k = from; k < a.size(); ++k) {
                e += std::norm(a[k]);
            }
            worst = std::max(worst, e);
        }
        return worst;
    }

private:
    BMultiplier mul_;
    std::vector<Column> atoms_;
};

std::size_t support_rows(const TaylorSeries& f)
{
    for (std::size_t k = f.size(); k > 0; --k) {
        if (f[k - 1].cwiseAbs().maxCoeff() > 0.0) {
            return k;
        }
    }
    return 0;
}

void check_channel(int j, const ModelBasis& basis)
{
    require(j >= 0 && j < basis.dimension(), ErrorCode::invalid_argument,
            "channel index out of range");
}

cplx dot(const Column& a, const Column& b)
{
    cplx s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

} // namespace

TaylorSeries compose(const TaylorSeries& h, const BlaschkeProduct& b, std::size_t n)
{
    require(n >= 1, ErrorCode::invalid_argument, "truncation must be positive");
    const BMultiplier mul(b);
    Column power(n, 0.0);
    power[0] = 1.0;
    TaylorSeries out(h.rows(), h.cols(), n);
    for (std::size_t m = 0; m < h.size(); ++m) {
        if (m > 0) {
            mul.apply(power);
        }
        const Matrix& c = h[m];
        for (std::size_t k = 0; k < n; ++k) {
            out[k] += power[k] * c;
        }
    }
    return out;
}

TaylorSeries apply_S(int j, const TaylorSeries& h, const ModelBasis& basis, std::size_t n)
{
    check_channel(j, basis);
    require(n >= 1, ErrorCode::invalid_argument, "truncation must be positive");
    const BMultiplier mul(basis.blaschke());
    const TaylorSeries e = basis.series(n);
    Column atom(n);
    for (std::size_t k = 0; k < n; ++k) {
        atom[k] = e[k](0, j);
    }
    TaylorSeries out(h.rows(), h.cols(), n);
    for (std::size_t m = 0; m < h.size(); ++m) {
        if (m > 0) {
            mul.apply(atom);
        }
        const Matrix& c = h[m];
        for (std::size_t k = 0; k < n; ++k) {
            out[k] += atom[k] * c;
        }
    }
    return out;
}

SubbandDecomposition analyze(const TaylorSeries& f, const ModelBasis& basis)
{
    const int m = basis.dimension();
    const std::size_t rows = support_rows(f);
    SubbandDecomposition d{basis, {}, f.size(), 0.0};
    if (rows == 0) {
        d.parts.assign(static_cast<std::size_t>(m), TaylorSeries(f.rows(), f.cols(), 1));
        return d;
    }

    AtomStream stream(basis, rows);
    const std::size_t cap = parts_cap_factor * f.size();
    std::vector<std::vector<Matrix>> coeffs(static_cast<std::size_t>(m));
    for (std::size_t n = 0;; ++n) {
        const double energy = stream.max_energy();
        if (n > 0 && (energy < atom_energy_floor || n >= cap)) {
            d.tail_estimate = energy;
            break;
        }
        for (int j = 0; j < m; ++j) {
            const Column& atom = stream.atoms()[static_cast<std::size_t>(j)];
            Matrix acc = Matrix::Zero(f.rows(), f.cols());
            for (std::size_t k = 0; k < rows; ++k) {
                acc += std::conj(atom[k]) * f[k];
            }
            coeffs[static_cast<std::size_t>(j)].push_back(std::move(acc));
        }
        stream.advance();
    }
    for (auto& c : coeffs) {
        d.parts.emplace_back(std::move(c));
    }
    return d;
}

TaylorSeries synthesize(const ModelBasis& basis, const std::vector<TaylorSeries>& parts,
                        std::size_t n)
{
    const int m = basis.dimension();
    require(parts.size() == static_cast<std::size_t>(m), ErrorCode::dimension_mismatch,
            "synthesis needs one part per channel");
    require(n >= 1, ErrorCode::invalid_argument, "truncation must be positive");
    std::size_t len = 0;
    for (const auto& p : parts) {
        require(p.rows() == parts.front().rows() && p.cols() == parts.front().cols(),
                ErrorCode::dimension_mismatch, "parts must share one shape");
        len = std::max(len, p.size());
    }

    TaylorSeries out(parts.front().rows(), parts.front().cols(), n);
    AtomStream stream(basis, n);
    for (std::size_t idx = 0; idx < len; ++idx) {
        if (idx > 0) {
            stream.advance();
        }
        for (int j = 0; j < m; ++j) {
            const auto& part = parts[static_cast<std::size_t>(j)];
            if (idx >= part.size()) {
                continue;
            }
            const Matrix& c = part[idx];
            if (c.cwiseAbs().maxCoeff() == 0.0) {
                continue;
            }
            const Column& atom = stream.atoms()[static_cast<std::size_t>(j)];
            for (std::size_t k = 0; k < n; ++k) {
                out[k] += atom[k] * c;
            }
        }
    }
    return out;
}

TaylorSeries synthesize(const SubbandDecomposition& d)
{
    return synthesize(d.basis, d.parts, d.truncation);
}

TaylorSeries t_a(const TaylorSeries& f, cplx a, std::size_t n)
{
    return apply_S(0, f, orthonormal_basis(BlaschkeProduct::single(a)), n);
}

double CuntzReport::worst() const
{
    return std::max({sum_residual, cross_residual, isometry_residual});
}

CuntzReport verify_cuntz(const ModelBasis& basis, std::size_t n, int deg)
{
    const int m = basis.dimension();
    require(deg >= 0, ErrorCode::invalid_argument, "test degree must be non-negative");
    require(static_cast<std::size_t>(deg) * static_cast<std::size_t>(m) + 32 < n,
            ErrorCode::truncation_too_small, "truncation too small for the requested degree");

    CuntzReport rep;
    rep.degree = deg;
    rep.truncation = n;

    for (int k = 0; k <= deg; ++k) {
        const TaylorSeries g = TaylorSeries::monomial(static_cast<std::size_t>(k), n);
        const TaylorSeries back = synthesize(analyze(g, basis));
        rep.sum_residual = std::max(rep.sum_residual, std::sqrt(norm2(back - g)));
    }

    // Atoms S_j z^i for i <= deg, extended until their trailing quarter is
    // negligible so that inner products do not see the cut.
    const std::size_t count = static_cast<std::size_t>(deg) + 1;
    std::size_t rows = n;
    std::vector<std::vector<Column>> atoms;
    for (;;) {
        atoms.assign(static_cast<std::size_t>(m), {});
        AtomStream stream(basis, rows);
        for (std::size_t i = 0; i < count; ++i) {
            if (i > 0) {
                stream.advance();
            }
            for (int j = 0; j < m; ++j) {
                atoms[static_cast<std::size_t>(j)].push_back(
                    stream.atoms()[static_cast<std::size_t>(j)]);
            }
        }
        double trailing = 0.0;
        for (const auto& channel : atoms) {
            for (const auto& a : channel) {
                double e = 0.0;
                for (std::size_t k = rows - rows / 4; k < rows; ++k) {
                    e += std::norm(a[k]);
                }
                trailing = std::max(trailing, e);
            }
        }
        if (trailing < 1e-32 || rows >= parts_cap_factor * n) {
            break;
        }
        rows *= 2;
    }
    rep.work_truncation = rows;

    for (int j = 0; j < m; ++j) {
        const Column& last = atoms[static_cast<std::size_t>(j)].back();
        double kept = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            kept += std::norm(last[k]);
        }
        rep.tail_estimate = std::max(rep.tail_estimate, 1.0 - kept);
    }

    for (int j = 0; j < m; ++j) {
        for (int l = j; l < m; ++l) {
            for (std::size_t s = 0; s < count; ++s) {
                for (std::size_t t = 0; t < count; ++t) {
                    const cplx ip = dot(atoms[static_cast<std::size_t>(j)][s],
                                        atoms[static_cast<std::size_t>(l)][t]);
                    if (j == l) {
                        const double target = s == t ? 1.0 : 0.0;
                        rep.isometry_residual = std::max(rep.isometry_residual,
                                                         std::abs(ip - target));
                    } else {
                        rep.cross_residual = std::max(rep.cross_residual, std::abs(ip));
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace hardy
