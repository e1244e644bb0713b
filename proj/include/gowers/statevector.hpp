#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gowers/table.hpp"

namespace gowers::qsim {

// A product of r registers, each of dimension p^n, with an optional 2-level
// ancilla on top. Register k owns digits [k*n, (k+1)*n) of the composite
// base-p index; the ancilla contributes base_dim to the composite index.
struct RegisterLayout {
    GroupParams params;
    std::uint32_t registers;
    bool ancilla = false;

    RegisterLayout(const GroupParams& g, std::uint32_t r, bool anc = false);

    std::uint64_t base_dim;   // p^(n*r)
    std::uint64_t total_dim;  // base_dim * (ancilla ? 2 : 1)

    std::uint64_t register_stride(std::uint32_t k) const; // p^(n*k)
    std::uint64_t register_value(std::uint64_t index, std::uint32_t k) const;
    std::uint64_t replace_register(std::uint64_t index, std::uint32_t k,
                                   std::uint64_t value) const;
    std::uint64_t composite_index(const std::vector<std::uint64_t>& regs,
                                  bool anc_level = false) const;
};

struct StateVector {
    RegisterLayout layout;
    std::vector<cplx> amps;

    double norm_squared() const;
};

StateVector init_uniform(const RegisterLayout& layout);
StateVector init_basis(const RegisterLayout& layout,
                       const std::vector<GroupVector>& shifts);

// U_f on register k: each amplitude picks up f (or conj f) of that register's
// content. f must be unimodular — the gate has to be unitary.
void apply_phase_oracle(StateVector& s, std::uint32_t k, const FunctionTable& f,
                        bool conjugate);

// |x>_src |y>_dst -> |x>_src |y + sign*x>_dst; pure permutation, done in
// place by walking the translation cycles.
void apply_cadd(StateVector& s, std::uint32_t src, std::uint32_t dst, int sign);

// QFT over F_p^n on register k, realized as n single-digit p-point
// transforms. amps'(gamma) = (1/sqrt(N)) sum_x omega^<gamma,x> amps(x);
// the inverse flips the exponent sign.
void apply_qft(StateVector& s, std::uint32_t k, bool inverse);

// H on the 2-level ancilla.
void apply_hadamard_ancilla(StateVector& s);

// U_f on the target register, fired only on the ancilla's |1> branch.
void apply_controlled_phase_oracle(StateVector& s, const FunctionTable& f,
                                   std::uint32_t target);

double probability_of(const StateVector& s, const std::vector<GroupVector>& basis,
                      bool anc_level = false);
std::vector<double> distribution(const StateVector& s);
double ancilla_zero_probability(const StateVector& s);

// m i.i.d. composite-index draws via inverse CDF; deterministic given seed.
std::vector<std::uint64_t> sample(const StateVector& s, std::uint64_t m,
                                  std::uint64_t seed);

// Debug dump: 16-byte header {p, n, r, ancilla} as little-endian u32s, then
// interleaved (re, im) doubles.
void save_statevector(const StateVector& s, const std::string& path);
StateVector load_statevector(const std::string& path);

} // namespace gowers::qsim
