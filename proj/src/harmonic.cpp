#include "gowers/harmonic.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gowers::harmonic {

namespace {

void require_same(const GroupParams& a, const GroupParams& b) {
    if (a != b) throw std::invalid_argument("mismatched group parameters");
}

void require_within_cap(std::uint64_t n, std::uint32_t power) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < power; ++i) {
        if (total > size_cap() / n)
            throw std::length_error("tuple space exceeds the size cap");
        total *= n;
    }
}

} // namespace

SpectrumTable fourier(const FunctionTable& f) {
    const GroupParams& g = f.params();
    const std::uint64_t n = g.order();
    SpectrumTable out{g, std::vector<cplx>(n)};
    for (std::uint64_t gamma = 0; gamma < n; ++gamma) {
        KahanSum acc;
        for (std::uint64_t x = 0; x < n; ++x)
            acc.add(f.value(x) * std::conj(g.root(dot_indices(g, gamma, x))));
        out.values[gamma] = acc.total() / static_cast<double>(n);
    }
    return out;
}

FunctionTable inverse_fourier(const SpectrumTable& F) {
    const GroupParams& g = F.params;
    const std::uint64_t n = g.order();
    std::vector<cplx> vals(n);
    for (std::uint64_t x = 0; x < n; ++x) {
        KahanSum acc;
        for (std::uint64_t gamma = 0; gamma < n; ++gamma)
            acc.add(F.values[gamma] * g.root(dot_indices(g, gamma, x)));
        vals[x] = acc.total();
    }
    return FunctionTable(g, std::move(vals));
}

FunctionTable convolve(const FunctionTable& f, const FunctionTable& g) {
    require_same(f.params(), g.params());
    const GroupParams& gp = f.params();
    const std::uint64_t n = gp.order();
    std::vector<cplx> vals(n);
    for (std::uint64_t x = 0; x < n; ++x) {
        KahanSum acc;
        for (std::uint64_t y = 0; y < n; ++y)
            acc.add(f.value(y) * g.value(add_indices(gp, x, negate_index(gp, y))));
        vals[x] = acc.total() / static_cast<double>(n);
    }
    return FunctionTable(gp, std::move(vals));
}

cplx autocorrelation(const FunctionTable& f, const GroupVector& a) {
    require_same(f.params(), a.params);
    const GroupParams& g = f.params();
    KahanSum acc;
    for (std::uint64_t x = 0; x < g.order(); ++x)
        acc.add(f.value(x) * std::conj(f.value(add_indices(g, x, a.index))));
    return acc.total() / static_cast<double>(g.order());
}

double gowers_expectation(const FunctionTable& f, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("Gowers order must be >= 1");
    const GroupParams& g = f.params();
    const std::uint64_t n = g.order();
    require_within_cap(n, d + 1);

    const std::uint32_t vertices = 1u << d;
    std::vector<std::uint64_t> shift(d, 0);  // current (h_1, .., h_d)
    std::vector<std::uint64_t> pts(vertices);
    KahanSum acc;

    std::uint64_t tuples = 1;
    for (std::uint32_t i = 0; i < d; ++i) tuples *= n;

    for (std::uint64_t t = 0; t < tuples; ++t) {
        // decode the h-tuple in mixed radix
        std::uint64_t rest = t;
        for (std::uint32_t i = 0; i < d; ++i) {
            shift[i] = rest % n;
            rest /= n;
        }
        for (std::uint64_t x = 0; x < n; ++x) {
            pts[0] = x;
            for (std::uint32_t w = 1; w < vertices; ++w) {
                std::uint32_t low = std::countr_zero(w);
                pts[w] = add_indices(g, pts[w & (w - 1)], shift[low]);
            }
            cplx prod{1.0, 0.0};
            for (std::uint32_t w = 0; w < vertices; ++w) {
                cplx v = f.value(pts[w]);
                prod *= (std::popcount(w) & 1) ? std::conj(v) : v;
            }
            acc.add(prod);
        }
    }

    double scale = 1.0;
    for (std::uint32_t i = 0; i < d + 1; ++i) scale *= static_cast<double>(n);
    cplx mean = acc.total() / scale;
    if (std::abs(mean.imag()) > 1e-10)
        throw std::logic_error("Gowers expectation has a non-real residue");
    if (mean.real() < -1e-10)
        throw std::logic_error("Gowers expectation is negative beyond tolerance");
    return std::max(mean.real(), 0.0);
}

double gowers_norm_bruteforce(const FunctionTable& f, std::uint32_t d) {
    return std::pow(gowers_expectation(f, d), 1.0 / static_cast<double>(1u << d));
}

double gowers_u2_via_fourier(const FunctionTable& f) {
    SpectrumTable F = fourier(f);
    KahanSum acc;
    for (const cplx& c : F.values) {
        double m2 = std::norm(c);
        acc.add(cplx{m2 * m2, 0.0});
    }
    return std::pow(acc.total().real(), 0.25);
}

double gowers_u3_via_fourier(const FunctionTable& f) {
    const GroupParams& g = f.params();
    const std::uint64_t n = g.order();
    require_within_cap(n, 4);
    SpectrumTable F = fourier(f);

    // Free indices: the spectrum points at the empty vertex (a) and the three
    // singleton vertices (b, c, e). The pair and triple vertices are pinned by
    // the four orthogonality constraints: gamma_w = sum_{i in w} gamma_i -
    // (|w|-1) a. Even vertices contribute f_hat, odd vertices its conjugate.
    KahanSum acc;
    for (std::uint64_t a = 0; a < n; ++a) {
        const std::uint64_t na = negate_index(g, a);
        for (std::uint64_t b = 0; b < n; ++b) {
            const cplx fa_fb = F.values[a] * std::conj(F.values[b]);
            const std::uint64_t b_na = add_indices(g, b, na);
            for (std::uint64_t c = 0; c < n; ++c) {
                const std::uint64_t u = add_indices(g, b_na, c); // b + c - a
                const cplx partial = fa_fb * std::conj(F.values[c]) * F.values[u];
                const std::uint64_t c_na = add_indices(g, c, na);
                const std::uint64_t bc_n2a = add_indices(g, b_na, c_na);
                for (std::uint64_t e = 0; e < n; ++e) {
                    const std::uint64_t v = add_indices(g, b_na, e);  // b + e - a
                    const std::uint64_t w = add_indices(g, c_na, e);  // c + e - a
                    const std::uint64_t t = add_indices(g, bc_n2a, e); // b + c + e - 2a
                    acc.add(partial * std::conj(F.values[e]) * F.values[v] *
                            F.values[w] * std::conj(F.values[t]));
                }
            }
        }
    }
    cplx total = acc.total();
    if (std::abs(total.imag()) > 1e-9)
        throw std::logic_error("U^3 spectrum sum has a non-real residue");
    return std::pow(std::max(total.real(), 0.0), 1.0 / 8.0);
}

cplx gowers_inner_product(const std::vector<const FunctionTable*>& fs, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("Gowers order must be >= 1");
    const std::uint32_t vertices = 1u << d;
    if (fs.size() != vertices)
        throw std::invalid_argument("need one table slot per vertex of {0,1}^d");
    const GroupParams* gp = nullptr;
    for (const FunctionTable* t : fs)
        if (t) {
            if (gp) require_same(*gp, t->params());
            gp = &t->params();
        }
    if (!gp) throw std::invalid_argument("at least one vertex must carry a table");
    const GroupParams& g = *gp;
    const std::uint64_t n = g.order();
    require_within_cap(n, d + 1);

    std::vector<std::uint64_t> shift(d, 0);
    std::vector<std::uint64_t> pts(vertices);
    KahanSum acc;
    std::uint64_t tuples = 1;
    for (std::uint32_t i = 0; i < d; ++i) tuples *= n;

    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::uint64_t rest = t;
        for (std::uint32_t i = 0; i < d; ++i) {
            shift[i] = rest % n;
            rest /= n;
        }
        for (std::uint64_t x = 0; x < n; ++x) {
            pts[0] = x;
            for (std::uint32_t w = 1; w < vertices; ++w)
                pts[w] = add_indices(g, pts[w & (w - 1)], shift[std::countr_zero(w)]);
            cplx prod{1.0, 0.0};
            for (std::uint32_t w = 0; w < vertices; ++w) {
                if (!fs[w]) continue;
                cplx v = fs[w]->value(pts[w]);
                prod *= (std::popcount(w) & 1) ? std::conj(v) : v;
            }
            acc.add(prod);
        }
    }
    double scale = 1.0;
    for (std::uint32_t i = 0; i < d + 1; ++i) scale *= static_cast<double>(n);
    return acc.total() / scale;
}

cplx t3(const FunctionTable& f, const FunctionTable& g, const FunctionTable& h,
        bool verify) {
    require_same(f.params(), g.params());
    require_same(f.params(), h.params());
    const GroupParams& gp = f.params();
    if (gp.p() < 3)
        throw std::domain_error("3-term progressions degenerate over F_2 (x + 2y = x)");
    const std::uint64_t n = gp.order();

    KahanSum acc;
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y) {
            std::uint64_t xy = add_indices(gp, x, y);
            std::uint64_t xyy = add_indices(gp, xy, y);
            acc.add(f.value(x) * g.value(xy) * h.value(xyy));
        }
    cplx direct = acc.total() / static_cast<double>(n * n);

    if (verify) {
        SpectrumTable F = fourier(f), G = fourier(g), H = fourier(h);
        KahanSum spec;
        for (std::uint64_t gamma = 0; gamma < n; ++gamma) {
            std::uint64_t m2g = negate_index(gp, scale_index(gp, 2, gamma));
            spec.add(F.values[gamma] * G.values[m2g] * H.values[gamma]);
        }
        if (std::abs(spec.total() - direct) > 1e-10)
            throw std::logic_error("3-AP spectrum identity disagrees with the direct sum");
    }
    return direct;
}

ApCount count_3aps_exact(const FunctionTable& indicator) {
    const GroupParams& gp = indicator.params();
    if (gp.p() < 3)
        throw std::domain_error("3-term progressions degenerate over F_2 (x + 2y = x)");
    const std::uint64_t n = gp.order();

    std::vector<std::uint8_t> in_set(n);
    std::uint64_t set_size = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
        cplx v = indicator.value(x);
        if (v.imag() != 0.0 || (v.real() != 0.0 && v.real() != 1.0))
            throw std::domain_error("indicator values must be exactly 0 or 1");
        in_set[x] = v.real() == 1.0;
        set_size += in_set[x];
    }

    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
        if (!in_set[x]) continue;
        for (std::uint64_t d = 0; d < n; ++d) {
            std::uint64_t xd = add_indices(gp, x, d);
            if (!in_set[xd]) continue;
            if (in_set[add_indices(gp, xd, d)]) ++count;
        }
    }
    return ApCount{count, count - set_size,
                   static_cast<double>(count) / static_cast<double>(n * n)};
}

} // namespace gowers::harmonic
