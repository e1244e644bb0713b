#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace gowers {

using cplx = std::complex<double>;

// Global ceiling on how many amplitudes / group elements any operation may
// materialize at once. Default 2^24, overridable at runtime.
std::uint64_t size_cap();
void set_size_cap(std::uint64_t cap);

bool is_prime(std::uint64_t p);

// The group F_p^n together with its precomputed p-th roots of unity.
// Characters are indexed by group elements (the dual group is identified
// with the group itself), so this one object carries everything needed to
// evaluate chi_gamma(x) = omega^<gamma,x>.
class GroupParams {
  public:
    GroupParams(std::uint32_t p, std::uint32_t n);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint64_t order() const { return order_; } // N = p^n

    // omega^k for k in [0, p); entries from one trig evaluation per residue.
    cplx root(std::uint32_t k) const { return (*roots_)[k]; }

    bool operator==(const GroupParams& o) const { return p_ == o.p_ && n_ == o.n_; }
    bool operator!=(const GroupParams& o) const { return !(*this == o); }

  private:
    std::uint32_t p_;
    std::uint32_t n_;
    std::uint64_t order_;
    std::shared_ptr<const std::vector<cplx>> roots_;
};

// An element of F_p^n. Also serves as a character index. The linear index is
// the base-p positional encoding with digit 0 least significant; it is the
// canonical array-index currency throughout.
struct GroupVector {
    GroupParams params;
    std::vector<std::uint32_t> coords; // each < p, size n
    std::uint64_t index = 0;
};

GroupVector element(const GroupParams& g, std::uint64_t index);
GroupVector from_coords(const GroupParams& g, std::vector<std::uint32_t> coords);

GroupVector add(const GroupVector& x, const GroupVector& y);
GroupVector neg(const GroupVector& x);
GroupVector scalar_mul(std::uint32_t c, const GroupVector& x);
std::uint32_t dot(const GroupVector& gamma, const GroupVector& x);

// chi_gamma(x) = omega^<gamma,x>, drawn from the precomputed root table.
cplx character_eval(const GroupVector& gamma, const GroupVector& x);

// All N elements in linear-index order. Refuses above the size cap.
std::vector<GroupVector> enumerate_group(const GroupParams& g);

// Index-level arithmetic (digit-wise mod p on base-p encodings). These are
// the hot-path forms used by the reference sums and the simulator; the
// GroupVector operations above delegate to them.
std::uint64_t add_indices(const GroupParams& g, std::uint64_t a, std::uint64_t b);
std::uint64_t negate_index(const GroupParams& g, std::uint64_t a);
std::uint64_t scale_index(const GroupParams& g, std::uint32_t c, std::uint64_t a);
std::uint32_t dot_indices(const GroupParams& g, std::uint64_t a, std::uint64_t b);

} // namespace gowers
