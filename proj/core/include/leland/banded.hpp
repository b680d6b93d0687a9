#pragma once

#include <cstddef>
#include <vector>

namespace leland {

// Square banded matrix; row i stores columns [i - hb, i + hb].
class BandedMatrix {
public:
    BandedMatrix() = default;
    BandedMatrix(std::size_t dimension, std::size_t half_bandwidth);

    std::size_t dimension() const { return n_; }
    std::size_t half_bandwidth() const { return hb_; }

    double at(std::size_t i, std::size_t j) const;  // 0 outside the band
    void add(std::size_t i, std::size_t j, double value);
    void set(std::size_t i, std::size_t j, double value);
    double max_abs() const;

private:
    bool in_band(std::size_t i, std::size_t j) const {
        return (j + hb_ >= i) && (j <= i + hb_);
    }
    std::size_t slot(std::size_t i, std::size_t j) const { return i * width_ + (j + hb_ - i); }

    std::size_t n_ = 0;
    std::size_t hb_ = 0;
    std::size_t width_ = 0;
    std::vector<double> a_;
};

std::vector<double> apply(const BandedMatrix& m, const std::vector<double>& v);

// LU factorization with partial pivoting. Row swaps widen the upper band to
// 2*hb, which the factor storage accommodates. A pivot below
// 1e-14 * max|entry| is treated as singular.
class BandedLU {
public:
    explicit BandedLU(const BandedMatrix& m);
    std::vector<double> solve(const std::vector<double>& rhs) const;
    std::size_t dimension() const { return n_; }

private:
    double& lu(std::size_t i, std::size_t j) { return lu_[i * width_ + (j + hb_ - i)]; }
    double lu_at(std::size_t i, std::size_t j) const { return lu_[i * width_ + (j + hb_ - i)]; }

    std::size_t n_ = 0;
    std::size_t hb_ = 0;
    std::size_t width_ = 0;
    std::vector<double> lu_;
    std::vector<std::size_t> pivot_;
};

std::vector<double> solve_banded(const BandedMatrix& m, const std::vector<double>& rhs);

}  // namespace leland
