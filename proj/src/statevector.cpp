#include "gowers/statevector.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "gowers/rng.hpp"

namespace gowers::qsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

#ifndef NDEBUG
void debug_check_norm(const StateVector& s) {
    assert(std::abs(s.norm_squared() - 1.0) <= 1e-9);
}
#else
void debug_check_norm(const StateVector&) {}
#endif

void require_unimodular(const FunctionTable& f) {
    if (!f.is_unimodular())
        throw std::domain_error("phase oracle requires a unimodular table");
}

} // namespace

RegisterLayout::RegisterLayout(const GroupParams& g, std::uint32_t r, bool anc)
    : params(g), registers(r), ancilla(anc) {
    if (r < 1) throw std::invalid_argument("need at least one register");
    base_dim = 1;
    for (std::uint32_t k = 0; k < r; ++k) {
        if (base_dim > size_cap() / g.order())
            throw std::length_error("state size exceeds the size cap");
        base_dim *= g.order();
    }
    total_dim = base_dim * (anc ? 2 : 1);
    if (total_dim > size_cap())
        throw std::length_error("state size exceeds the size cap");
}

std::uint64_t RegisterLayout::register_stride(std::uint32_t k) const {
    std::uint64_t s = 1;
    for (std::uint32_t i = 0; i < k; ++i) s *= params.order();
    return s;
}

std::uint64_t RegisterLayout::register_value(std::uint64_t index, std::uint32_t k) const {
    return index / register_stride(k) % params.order();
}

std::uint64_t RegisterLayout::replace_register(std::uint64_t index, std::uint32_t k,
                                               std::uint64_t value) const {
    const std::uint64_t stride = register_stride(k);
    const std::uint64_t old = index / stride % params.order();
    return index + (value - old) * stride;
}

std::uint64_t RegisterLayout::composite_index(const std::vector<std::uint64_t>& regs,
                                              bool anc_level) const {
    if (regs.size() != registers)
        throw std::invalid_argument("need one value per register");
    std::uint64_t idx = 0;
    std::uint64_t stride = 1;
    for (std::uint32_t k = 0; k < registers; ++k) {
        if (regs[k] >= params.order()) throw std::invalid_argument("register value out of range");
        idx += regs[k] * stride;
        stride *= params.order();
    }
    if (anc_level) {
        if (!ancilla) throw std::invalid_argument("layout has no ancilla");
        idx += base_dim;
    }
    return idx;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const cplx& a : amps) acc += std::norm(a);
    return acc;
}

StateVector init_uniform(const RegisterLayout& layout) {
    StateVector s{layout, std::vector<cplx>(layout.total_dim)};
    const double amp = 1.0 / std::sqrt(static_cast<double>(layout.base_dim));
    for (std::uint64_t i = 0; i < layout.base_dim; ++i) s.amps[i] = amp;
    return s; // ancilla branch, if any, stays at level 0
}

StateVector init_basis(const RegisterLayout& layout,
                       const std::vector<GroupVector>& shifts) {
    std::vector<std::uint64_t> regs;
    regs.reserve(shifts.size());
    for (const GroupVector& v : shifts) {
        if (v.params != layout.params)
            throw std::invalid_argument("mismatched group parameters");
        regs.push_back(v.index);
    }
    StateVector s{layout, std::vector<cplx>(layout.total_dim)};
    s.amps[layout.composite_index(regs)] = 1.0;
    return s;
}

void apply_phase_oracle(StateVector& s, std::uint32_t k, const FunctionTable& f,
                        bool conjugate) {
    const RegisterLayout& L = s.layout;
    if (f.params() != L.params) throw std::invalid_argument("mismatched group parameters");
    if (k >= L.registers) throw std::invalid_argument("register index out of range");
    require_unimodular(f);

    const std::uint64_t N = L.params.order();
    const std::uint64_t stride = L.register_stride(k);
    for (std::uint64_t base = 0; base < s.amps.size(); base += L.base_dim) {
        for (std::uint64_t i = 0; i < L.base_dim; ++i) {
            cplx v = f.value(i / stride % N);
            s.amps[base + i] *= conjugate ? std::conj(v) : v;
        }
    }
    debug_check_norm(s);
}

void apply_cadd(StateVector& s, std::uint32_t src, std::uint32_t dst, int sign) {
    const RegisterLayout& L = s.layout;
    if (src == dst) throw std::invalid_argument("CADD needs distinct registers");
    if (src >= L.registers || dst >= L.registers)
        throw std::invalid_argument("register index out of range");
    const GroupParams& g = L.params;
    const std::uint32_t p = g.p();
    const std::uint64_t N = g.order();
    const std::uint64_t src_stride = L.register_stride(src);
    const std::uint64_t dst_stride = L.register_stride(dst);

    std::vector<std::uint64_t> cycle(p);
    for (std::uint64_t base = 0; base < s.amps.size(); base += L.base_dim) {
        for (std::uint64_t i = 0; i < L.base_dim; ++i) {
            const std::uint64_t a = i / src_stride % N;
            if (a == 0) continue;
            const std::uint64_t b = sign > 0 ? a : negate_index(g, a);
            const std::uint64_t y = i / dst_stride % N;

            // start each translation cycle at its minimal dst value
            std::uint64_t z = y;
            bool start = true;
            for (std::uint32_t step = 1; step < p && start; ++step) {
                z = add_indices(g, z, b);
                if (z < y) start = false;
            }
            if (!start) continue;

            // amp'[y + b] = amp[y] around the p-cycle
            const std::uint64_t root = base + i;
            std::uint64_t val = y;
            cycle[0] = root;
            for (std::uint32_t step = 1; step < p; ++step) {
                val = add_indices(g, val, b);
                cycle[step] = root + (val - y) * dst_stride;
            }
            cplx tmp = s.amps[cycle[p - 1]];
            for (std::uint32_t step = p - 1; step >= 1; --step)
                s.amps[cycle[step]] = s.amps[cycle[step - 1]];
            s.amps[cycle[0]] = tmp;
        }
    }
    debug_check_norm(s);
}

void apply_qft(StateVector& s, std::uint32_t k, bool inverse) {
    const RegisterLayout& L = s.layout;
    if (k >= L.registers) throw std::invalid_argument("register index out of range");
    const GroupParams& g = L.params;
    const std::uint32_t p = g.p();
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));

    std::vector<cplx> matrix(static_cast<std::size_t>(p) * p);
    for (std::uint32_t out = 0; out < p; ++out)
        for (std::uint32_t in = 0; in < p; ++in) {
            cplx w = g.root(static_cast<std::uint32_t>(std::uint64_t{out} * in % p));
            matrix[std::size_t{out} * p + in] = (inverse ? std::conj(w) : w) * scale;
        }

    std::vector<cplx> scratch(p);
    for (std::uint32_t digit = 0; digit < g.n(); ++digit) {
        std::uint64_t stride = L.register_stride(k);
        for (std::uint32_t i = 0; i < digit; ++i) stride *= p;
        const std::uint64_t span = stride * p;
        for (std::uint64_t base = 0; base < s.amps.size(); base += L.base_dim) {
            for (std::uint64_t block = 0; block < L.base_dim; block += span) {
                for (std::uint64_t lo = 0; lo < stride; ++lo) {
                    const std::uint64_t head = base + block + lo;
                    for (std::uint32_t out = 0; out < p; ++out) {
                        cplx acc{0.0, 0.0};
                        for (std::uint32_t in = 0; in < p; ++in)
                            acc += matrix[std::size_t{out} * p + in] *
                                   s.amps[head + in * stride];
                        scratch[out] = acc;
                    }
                    for (std::uint32_t out = 0; out < p; ++out)
                        s.amps[head + out * stride] = scratch[out];
                }
            }
        }
    }
    debug_check_norm(s);
}

void apply_hadamard_ancilla(StateVector& s) {
    const RegisterLayout& L = s.layout;
    if (!L.ancilla) throw std::invalid_argument("layout has no ancilla");
    for (std::uint64_t i = 0; i < L.base_dim; ++i) {
        const cplx a0 = s.amps[i];
        const cplx a1 = s.amps[i + L.base_dim];
        s.amps[i] = (a0 + a1) * kInvSqrt2;
        s.amps[i + L.base_dim] = (a0 - a1) * kInvSqrt2;
    }
    debug_check_norm(s);
}

void apply_controlled_phase_oracle(StateVector& s, const FunctionTable& f,
                                   std::uint32_t target) {
    const RegisterLayout& L = s.layout;
    if (!L.ancilla) throw std::invalid_argument("layout has no ancilla");
    if (f.params() != L.params) throw std::invalid_argument("mismatched group parameters");
    if (target >= L.registers) throw std::invalid_argument("register index out of range");
    require_unimodular(f);

    const std::uint64_t N = L.params.order();
    const std::uint64_t stride = L.register_stride(target);
    for (std::uint64_t i = 0; i < L.base_dim; ++i)
        s.amps[L.base_dim + i] *= f.value(i / stride % N);
    debug_check_norm(s);
}

double probability_of(const StateVector& s, const std::vector<GroupVector>& basis,
                      bool anc_level) {
    std::vector<std::uint64_t> regs;
    regs.reserve(basis.size());
    for (const GroupVector& v : basis) {
        if (v.params != s.layout.params)
            throw std::invalid_argument("mismatched group parameters");
        regs.push_back(v.index);
    }
    return std::norm(s.amps[s.layout.composite_index(regs, anc_level)]);
}

std::vector<double> distribution(const StateVector& s) {
    std::vector<double> out(s.amps.size());
    for (std::size_t i = 0; i < s.amps.size(); ++i) out[i] = std::norm(s.amps[i]);
    return out;
}

double ancilla_zero_probability(const StateVector& s) {
    if (!s.layout.ancilla) throw std::invalid_argument("layout has no ancilla");
    double acc = 0.0;
    for (std::uint64_t i = 0; i < s.layout.base_dim; ++i) acc += std::norm(s.amps[i]);
    return acc;
}

std::vector<std::uint64_t> sample(const StateVector& s, std::uint64_t m,
                                  std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("sample count must be >= 1");
    std::vector<double> cdf(s.amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        acc += std::norm(s.amps[i]);
        cdf[i] = acc;
    }

    CounterRng rng(seed, kStreamSample);
    std::vector<std::uint64_t> out(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        out[i] = it == cdf.end() ? cdf.size() - 1
                                 : static_cast<std::uint64_t>(it - cdf.begin());
    }
    return out;
}

void save_statevector(const StateVector& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    const std::uint32_t header[4] = {s.layout.params.p(), s.layout.params.n(),
                                     s.layout.registers,
                                     s.layout.ancilla ? 1u : 0u};
    out.write(reinterpret_cast<const char*>(header), sizeof(header));
    for (const cplx& a : s.amps) {
        const double re = a.real(), im = a.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(double));
        out.write(reinterpret_cast<const char*>(&im), sizeof(double));
    }
}

StateVector load_statevector(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::uint32_t header[4];
    in.read(reinterpret_cast<char*>(header), sizeof(header));
    if (!in) throw std::runtime_error("truncated statevector dump");
    RegisterLayout layout(GroupParams(header[0], header[1]), header[2], header[3] != 0);
    StateVector s{layout, std::vector<cplx>(layout.total_dim)};
    for (cplx& a : s.amps) {
        double re, im;
        in.read(reinterpret_cast<char*>(&re), sizeof(double));
        in.read(reinterpret_cast<char*>(&im), sizeof(double));
        if (!in) throw std::runtime_error("truncated statevector dump");
        a = {re, im};
    }
    return s;
}

} // namespace gowers::qsim
