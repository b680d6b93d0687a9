#include "leland/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace leland {

BandedMatrix::BandedMatrix(std::size_t dimension, std::size_t half_bandwidth)
    : n_(dimension), hb_(half_bandwidth), width_(2 * half_bandwidth + 1),
      a_(dimension * (2 * half_bandwidth + 1), 0.0) {
    if (dimension == 0) throw std::invalid_argument("BandedMatrix: empty dimension");
}

double BandedMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("BandedMatrix::at: index out of range");
    return in_band(i, j) ? a_[slot(i, j)] : 0.0;
}

void BandedMatrix::add(std::size_t i, std::size_t j, double value) {
    if (i >= n_ || j >= n_ || !in_band(i, j))
        throw std::out_of_range("BandedMatrix::add: entry outside band");
    a_[slot(i, j)] += value;
}

void BandedMatrix::set(std::size_t i, std::size_t j, double value) {
    if (i >= n_ || j >= n_ || !in_band(i, j))
        throw std::out_of_range("BandedMatrix::set: entry outside band");
    a_[slot(i, j)] = value;
}

double BandedMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> apply(const BandedMatrix& m, const std::vector<double>& v) {
    const std::size_t n = m.dimension();
    const std::size_t hb = m.half_bandwidth();
    if (v.size() != n) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= hb ? i - hb : 0;
        const std::size_t hi = std::min(i + hb, n - 1);
        double s = 0.0;
        for (std::size_t j = lo; j <= hi; ++j) s += m.at(i, j) * v[j];
        y[i] = s;
    }
    return y;
}

BandedLU::BandedLU(const BandedMatrix& m)
    : n_(m.dimension()), hb_(m.half_bandwidth()), width_(3 * m.half_bandwidth() + 1),
      lu_(m.dimension() * (3 * m.half_bandwidth() + 1), 0.0), pivot_(m.dimension()) {
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t lo = i >= hb_ ? i - hb_ : 0;
        const std::size_t hi = std::min(i + hb_, n_ - 1);
        for (std::size_t j = lo; j <= hi; ++j) lu(i, j) = m.at(i, j);
    }
    const double tol = 1e-14 * m.max_abs();

    for (std::size_t k = 0; k < n_; ++k) {
        const std::size_t rend = std::min(k + hb_, n_ - 1);
        std::size_t p = k;
        double pmax = std::abs(lu_at(k, k));
        for (std::size_t r = k + 1; r <= rend; ++r) {
            const double cand = std::abs(lu_at(r, k));
            if (cand > pmax) { pmax = cand; p = r; }
        }
        if (!(pmax > tol))
            throw std::runtime_error("BandedLU: pivot below threshold at column " +
                                     std::to_string(k));
        pivot_[k] = p;
        const std::size_t cend = std::min(k + 2 * hb_, n_ - 1);
        if (p != k)
            for (std::size_t c = k; c <= cend; ++c) std::swap(lu(k, c), lu(p, c));
        for (std::size_t r = k + 1; r <= rend; ++r) {
            const double mult = lu_at(r, k) / lu_at(k, k);
            lu(r, k) = mult;
            for (std::size_t c = k + 1; c <= cend; ++c) lu(r, c) -= mult * lu_at(k, c);
        }
    }
}

std::vector<double> BandedLU::solve(const std::vector<double>& rhs) const {
    if (rhs.size() != n_) throw std::invalid_argument("BandedLU::solve: dimension mismatch");
    std::vector<double> x = rhs;
    for (std::size_t k = 0; k < n_; ++k) {
        if (pivot_[k] != k) std::swap(x[k], x[pivot_[k]]);
        const std::size_t rend = std::min(k + hb_, n_ - 1);
        for (std::size_t r = k + 1; r <= rend; ++r) x[r] -= lu_at(r, k) * x[k];
    }
    for (std::size_t ii = n_; ii-- > 0;) {
        const std::size_t cend = std::min(ii + 2 * hb_, n_ - 1);
        double s = x[ii];
        for (std::size_t c = ii + 1; c <= cend; ++c) s -= lu_at(ii, c) * x[c];
        x[ii] = s / lu_at(ii, ii);
    }
    return x;
}

std::vector<double> solve_banded(const BandedMatrix& m, const std::vector<double>& rhs) {
    return BandedLU(m).solve(rhs);
}

}  // namespace leland
