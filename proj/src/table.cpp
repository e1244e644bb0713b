#include "gowers/table.hpp"

#include <cmath>
#include <stdexcept>

namespace gowers {

FunctionTable::FunctionTable(const GroupParams& params, cplx fill)
    : params_(params), values_(params.order(), fill) {
    if (params.order() > size_cap())
        throw std::length_error("table size exceeds the size cap");
    sup_norm_ = std::abs(fill);
}

FunctionTable::FunctionTable(const GroupParams& params, std::vector<cplx> values)
    : params_(params), values_(std::move(values)) {
    if (values_.size() != params.order())
        throw std::invalid_argument("value count must equal the group order");
    recompute_sup_norm();
}

void FunctionTable::set_value(std::uint64_t index, cplx v) {
    values_.at(index) = v;
    recompute_sup_norm();
}

void FunctionTable::recompute_sup_norm() {
    double m = 0.0;
    for (const cplx& v : values_) m = std::max(m, std::abs(v));
    sup_norm_ = m;
}

bool FunctionTable::is_unimodular(double tol) const {
    for (const cplx& v : values_)
        if (std::abs(std::abs(v) - 1.0) > tol) return false;
    return true;
}

} // namespace gowers
