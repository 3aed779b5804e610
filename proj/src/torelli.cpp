#include "symchar/torelli.hpp"

#include <algorithm>

#include "symchar/cache.hpp"
#include "symchar/parallel.hpp"

namespace symchar {

namespace {

constexpr const char* kChvFormulaTag =
    "chv1:sum[t^{2k-2+n} h_n]-excluding{(0,0),(1,0),(1,1),(0,2)}";

std::string fnv1a_hex(const std::string& s) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

bool excluded_pair(int k, int n) {
    return (k == 0 && n == 0) || (k == 1 && n == 0) || (k == 1 && n == 1) || (k == 0 && n == 2);
}

}  // namespace

std::string chv_fingerprint() {
    return fnv1a_hex(kChvFormulaTag);
}

CharSeries ch_v(int sym_cap, int t_cap) {
    CharSeries out(sym_cap, t_cap);
    for (int k = 0; 2 * k - 2 <= t_cap; ++k) {
        for (int n = 0; n <= sym_cap; ++n) {
            int j = 2 * k - 2 + n;
            if (j < 0 || j > t_cap || excluded_pair(k, n))
                continue;
            out.add_at(j, h_generator(n, sym_cap));
        }
    }
    return out;
}

int gamma_delta(const Partition& lambda) {
    int delta = 0;
    for (int n : lambda.parts())
        delta += (n >= 3) ? n - 2 : (n == 2 ? 2 : 3);
    return delta;
}

namespace {

// h_l o (h_n/(1-t^2)) for l = 0..l_max.
std::vector<CharSeries> block_family(int n, int l_max, int sym_cap, int t_cap) {
    CharSeries base = CharSeries::monomial(h_generator(n, sym_cap), 0, t_cap).geometric_factor();
    return h_plethysm_family(base, l_max);
}

CharSeries exp_ch_v_gamma(int sym_cap, int t_cap) {
    // Exp(ch_v) = sum over partitions lambda with delta(lambda) <= T and
    // |lambda| <= S of gamma_lambda; the sum is organized as the product
    // over part sizes n of (sum_l t^{c_n l} h_l o (h_n/(1-t^2))), which
    // enumerates exactly the same finite set with shared prefixes.
    //
    // The n = 0 block of the product is the scalar Exp(t^2/(1-t^2)): the
    // convergent part of the generating character in symmetric degree 0.
    CharSeries scalar = exp_op(CharSeries::one(0, t_cap).geometric_factor() -
                               CharSeries::one(0, t_cap));
    CharSeries result(sym_cap, t_cap);
    for (int j = 0; j <= t_cap; ++j)
        result.add_at(j, SymFn::constant(epsilon(scalar.at(j)), sym_cap));
    for (int n = 1; n <= sym_cap; ++n) {
        int c_n = (n >= 3) ? n - 2 : (n == 2 ? 2 : 3);
        int l_max = std::min(t_cap / c_n, sym_cap / n);
        if (l_max < 1)
            continue;
        auto family = block_family(n, l_max, sym_cap, t_cap);
        CharSeries block(sym_cap, t_cap);
        for (int l = 0; l <= l_max; ++l)
            block += family[l].shifted_by_t_power(c_n * l);
        result = result * block;
    }
    return result;
}

}  // namespace

CharSeries gamma_lambda(const Partition& lambda, int sym_cap, int t_cap) {
    CharSeries result = CharSeries::one(sym_cap, t_cap);
    const auto& parts = lambda.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        int n = parts[i], l = static_cast<int>(j - i);
        auto family = block_family(n, l, sym_cap, t_cap);
        result = result * family[l];
        i = j;
    }
    return result.shifted_by_t_power(gamma_delta(lambda));
}

CharSeries exp_ch_v(int sym_cap, int t_cap, ExpMethod method, const RunOptions& opts) {
    CacheKey key{"exp_ch_v", sym_cap, t_cap,
                 method == ExpMethod::Generic ? "generic" : "gamma", chv_fingerprint()};
    if (opts.use_cache) {
        if (auto cached = cache_load(opts.cache_dir, key))
            return *cached;
    }
    CharSeries result = method == ExpMethod::Generic ? exp_op(ch_v(sym_cap, t_cap))
                                                     : exp_ch_v_gamma(sym_cap, t_cap);
    if (opts.use_cache)
        cache_store(opts.cache_dir, key, result);
    return result;
}

CharacterTable::CharacterTable(TableObject object, std::vector<SpDecomposition> degrees,
                               int sym_cap, int t_cap, std::string fingerprint)
    : object_(object),
      degrees_(std::move(degrees)),
      sym_cap_(sym_cap),
      t_cap_(t_cap),
      fingerprint_(std::move(fingerprint)) {
    for (std::size_t n = 0; n < degrees_.size(); ++n) {
        if (!degrees_[n].is_integral())
            throw Error("character table degree " + std::to_string(n) +
                        " has non-integer multiplicities");
        if (!degrees_[n].is_nonnegative())
            throw Error("character table degree " + std::to_string(n) +
                        " has negative multiplicities");
    }
}

const SpDecomposition& CharacterTable::degree(int n) const {
    if (n < 0 || n > max_degree())
        throw Error("CharacterTable::degree out of range");
    return degrees_[n];
}

namespace {

// cch_t of the quadratic algebra: omega_tilde(exp(-D') Exp(ch_v)), with the
// one-marked-point variant first multiplied by Exp(t h_1) = sum_n t^n h_n.
CharSeries quadratic_algebra_cch(int n_max, bool marked_point, const RunOptions& opts) {
    int S = 3 * n_max, T = n_max;
    CharSeries e = exp_ch_v(S, T, ExpMethod::Generic, opts);
    if (marked_point) {
        CharSeries exp_th1(S, T);
        for (int n = 0; n <= T && n <= S; ++n)
            exp_th1.add_at(n, h_generator(n, S));
        e = e * exp_th1;
    }
    CharSeries heat = apply_heat(HeatKind::DPrime, -1, e, opts.threads);
    CharSeries cch(S, T);
    for (int j = 0; j <= T; ++j)
        cch.set(j, omega_tilde(heat.at(j)));
    return cch;
}

std::vector<SpDecomposition> decompose_alternating(const CharSeries& cch, int threads) {
    // Degree-n character = (-1)^n times the t^n coefficient.
    std::vector<SpDecomposition> out(cch.t_cap() + 1);
    parallel_for(cch.t_cap() + 1, threads, [&](std::size_t j) {
        SymFn f = cch.at(static_cast<int>(j));
        if (j % 2 == 1)
            f = -f;
        out[j] = to_symplectic_basis(f);
        out[j].degree_tag = static_cast<int>(j);
    });
    return out;
}

}  // namespace

CharacterTable char_A(int n_max, const RunOptions& opts) {
    if (n_max < 0)
        throw Error("char_A: n_max must be >= 0");
    CharSeries cch = quadratic_algebra_cch(n_max, false, opts);
    return CharacterTable(TableObject::A, decompose_alternating(cch, opts.threads), 3 * n_max,
                          n_max, chv_fingerprint());
}

CharacterTable char_A1(int n_max, const RunOptions& opts) {
    if (n_max < 0)
        throw Error("char_A1: n_max must be >= 0");
    CharSeries cch = quadratic_algebra_cch(n_max, true, opts);
    return CharacterTable(TableObject::A1, decompose_alternating(cch, opts.threads), 3 * n_max,
                          n_max, chv_fingerprint());
}

CharacterTable char_torelli(int n_max, const RunOptions& opts) {
    if (n_max < 1)
        throw Error("char_torelli: n_max must be >= 1");
    // Two-stage truncation: the Exp/heat stage needs the full symmetric cap
    // 3 n_max because the heat operator sheds degree downward; the Koszul
    // stage is degree-graded upward so n_max + 2 suffices there.
    int S_down = n_max + 2, T = n_max;
    CharSeries cch_a = quadratic_algebra_cch(n_max, false, opts).truncated(S_down, T);
    // The table rows are the coefficients of the plain series
    // t^2 - Log(cch_t); Log is applied to the alternating series itself
    // because t -> -t is not compatible with the Adams operations and may
    // not be moved inside the argument.
    CharSeries series = -log_op(cch_a);
    if (T >= 2)
        series.add_at(2, SymFn::one(S_down));
    std::vector<SpDecomposition> degrees(T + 1);
    parallel_for(T + 1, opts.threads, [&](std::size_t j) {
        degrees[j] = to_symplectic_basis(series.at(static_cast<int>(j)));
        degrees[j].degree_tag = static_cast<int>(j);
    });
    return CharacterTable(TableObject::Torelli, std::move(degrees), S_down, T,
                          chv_fingerprint());
}

CharSeries gamma_infinity(int t_cap) {
    CharSeries arg(0, t_cap);
    for (int j = 2; j <= t_cap; j += 2)
        arg.add_at(j, SymFn::one(0));
    return exp_op(arg);
}

CharSeries poincare_series(const Partition& lambda, int t_cap, const RunOptions& opts) {
    if (lambda.weight() > 3 * t_cap)
        throw CapError("poincare_series: |lambda| exceeds 3 * t_cap");
    CharSeries cch = quadratic_algebra_cch(t_cap, false, opts);
    auto classes = partitions_of(lambda.weight());
    std::vector<Rational> coeffs(t_cap + 1, Rational(0));
    parallel_for(t_cap + 1, opts.threads, [&](std::size_t j) {
        SymFn lifted = apply_heat(HeatKind::D, +1, cch.at(static_cast<int>(j)));
        Rational a = 0;
        for (const Partition& mu : classes) {
            Rational c = lifted.coeff(mu);
            if (!is_zero(c))
                a += Rational(symmetric_group_character(lambda, mu)) * c;
        }
        // Report dimensions positively: (-1)^j undoes the alternating sign.
        coeffs[j] = (j % 2 == 0) ? a : -a;
    });
    return CharSeries::scalar_series(coeffs);
}

CharSeries stable_moduli_series(ModuliKind kind, int sym_cap, int t_cap,
                                const RunOptions& /*opts*/) {
    CharSeries inner(sym_cap, t_cap);
    if (kind == ModuliKind::MarkedPoints) {
        if (sym_cap >= 1)
            inner = CharSeries::monomial(h_generator(1, sym_cap), 0, t_cap).geometric_factor();
    } else {
        // (Exp(t^2 h_1) - 1)/t^2 assembled term by term: sum_{n>=1} t^{2n-2} h_n,
        // then the 1/(1-t^2) factor.
        for (int n = 1; n <= sym_cap && 2 * n - 2 <= t_cap; ++n)
            inner.add_at(2 * n - 2, h_generator(n, sym_cap));
        inner = inner.geometric_factor();
    }
    CharSeries gamma = gamma_infinity(t_cap);
    CharSeries gamma_lifted(sym_cap, t_cap);
    for (int j = 0; j <= t_cap; ++j)
        gamma_lifted.add_at(j, SymFn::constant(epsilon(gamma.at(j)), sym_cap));
    return gamma_lifted * exp_op(inner);
}

SpDecomposition wedge2_sp(const SpDecomposition& d) {
    int cap = std::max(0, 2 * d.max_weight());
    SymFn f = from_symplectic_basis(d, cap);
    return to_symplectic_basis(plethysm(e_generator(2, cap), f));
}

}  // namespace symchar
