#include "gowers/group.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gowers {

namespace {

std::atomic<std::uint64_t> g_size_cap{std::uint64_t{1} << 24};

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > (std::uint64_t{1} << 62) / base)
            throw std::length_error("p^n exceeds the platform index width");
        r *= base;
    }
    return r;
}

} // namespace

std::uint64_t size_cap() { return g_size_cap.load(); }

void set_size_cap(std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("size cap must be positive");
    g_size_cap.store(cap);
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

GroupParams::GroupParams(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    order_ = checked_pow(p, n);
    auto roots = std::make_shared<std::vector<cplx>>(p);
    for (std::uint32_t k = 0; k < p; ++k)
        (*roots)[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
    roots_ = std::move(roots);
}

namespace {

void require_same(const GroupParams& a, const GroupParams& b) {
    if (a != b) throw std::invalid_argument("mismatched group parameters");
}

} // namespace

GroupVector element(const GroupParams& g, std::uint64_t index) {
    if (index >= g.order()) throw std::invalid_argument("linear index out of range");
    GroupVector v{g, std::vector<std::uint32_t>(g.n()), index};
    std::uint64_t rest = index;
    for (std::uint32_t i = 0; i < g.n(); ++i) {
        v.coords[i] = static_cast<std::uint32_t>(rest % g.p());
        rest /= g.p();
    }
    return v;
}

GroupVector from_coords(const GroupParams& g, std::vector<std::uint32_t> coords) {
    if (coords.size() != g.n()) throw std::invalid_argument("coordinate count must equal n");
    std::uint64_t index = 0;
    std::uint64_t stride = 1;
    for (std::uint32_t i = 0; i < g.n(); ++i) {
        if (coords[i] >= g.p()) throw std::invalid_argument("coordinate out of range");
        index += coords[i] * stride;
        stride *= g.p();
    }
    return GroupVector{g, std::move(coords), index};
}

GroupVector add(const GroupVector& x, const GroupVector& y) {
    require_same(x.params, y.params);
    return element(x.params, add_indices(x.params, x.index, y.index));
}

GroupVector neg(const GroupVector& x) {
    return element(x.params, negate_index(x.params, x.index));
}

GroupVector scalar_mul(std::uint32_t c, const GroupVector& x) {
    if (c >= x.params.p()) throw std::invalid_argument("scalar out of field range");
    return element(x.params, scale_index(x.params, c, x.index));
}

std::uint32_t dot(const GroupVector& gamma, const GroupVector& x) {
    require_same(gamma.params, x.params);
    return dot_indices(gamma.params, gamma.index, x.index);
}

cplx character_eval(const GroupVector& gamma, const GroupVector& x) {
    return gamma.params.root(dot(gamma, x));
}

std::vector<GroupVector> enumerate_group(const GroupParams& g) {
    if (g.order() > size_cap())
        throw std::length_error("group order exceeds the size cap");
    std::vector<GroupVector> out;
    out.reserve(g.order());
    for (std::uint64_t i = 0; i < g.order(); ++i) out.push_back(element(g, i));
    return out;
}

std::uint64_t add_indices(const GroupParams& g, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t p = g.p();
    std::uint64_t out = 0;
    std::uint64_t stride = 1;
    for (std::uint32_t i = 0; i < g.n(); ++i) {
        out += ((a % p + b % p) % p) * stride;
        a /= p;
        b /= p;
        stride *= p;
    }
    return out;
}

std::uint64_t negate_index(const GroupParams& g, std::uint64_t a) {
    const std::uint64_t p = g.p();
    std::uint64_t out = 0;
    std::uint64_t stride = 1;
    for (std::uint32_t i = 0; i < g.n(); ++i) {
        std::uint64_t d = a % p;
        out += (d == 0 ? 0 : p - d) * stride;
        a /= p;
        stride *= p;
    }
    return out;
}

std::uint64_t scale_index(const GroupParams& g, std::uint32_t c, std::uint64_t a) {
    const std::uint64_t p = g.p();
    std::uint64_t out = 0;
    std::uint64_t stride = 1;
    for (std::uint32_t i = 0; i < g.n(); ++i) {
        out += ((a % p) * c % p) * stride;
        a /= p;
        stride *= p;
    }
    return out;
}

std::uint32_t dot_indices(const GroupParams& g, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t p = g.p();
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < g.n(); ++i) {
        acc += (a % p) * (b % p);
        a /= p;
        b /= p;
    }
    return static_cast<std::uint32_t>(acc % p);
}

} // namespace gowers
