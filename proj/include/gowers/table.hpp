#pragma once

#include <vector>

#include "gowers/group.hpp"

namespace gowers {

// A dense complex-valued function on F_p^n, stored in linear-index order.
// The sup norm is kept current across mutation so unitarity checks are O(1)
// after construction.
class FunctionTable {
  public:
    explicit FunctionTable(const GroupParams& params, cplx fill = cplx{0.0, 0.0});
    FunctionTable(const GroupParams& params, std::vector<cplx> values);

    const GroupParams& params() const { return params_; }
    std::uint64_t size() const { return values_.size(); }

    cplx value(std::uint64_t index) const { return values_[index]; }
    cplx value(const GroupVector& x) const { return values_[x.index]; }
    const std::vector<cplx>& values() const { return values_; }

    void set_value(std::uint64_t index, cplx v);

    double sup_norm() const { return sup_norm_; }

    // Every entry within tol of the unit circle.
    bool is_unimodular(double tol = 1e-12) const;

  private:
    void recompute_sup_norm();

    GroupParams params_;
    std::vector<cplx> values_;
    double sup_norm_ = 0.0;
};

// Fourier coefficients of a FunctionTable, indexed by character gamma.
struct SpectrumTable {
    GroupParams params;
    std::vector<cplx> values;

    cplx value(std::uint64_t gamma) const { return values[gamma]; }
};

} // namespace gowers
