#include "symchar/lambda_ring.hpp"

#include <map>

namespace symchar {

SymFn adams(int n, const SymFn& f) {
    if (n < 1)
        throw Error("adams: n must be >= 1");
    SymFn out(f.cap());
    for (const auto& [mu, c] : f.terms()) {
        if (mu.weight() * n > f.cap())
            break;
        out.add_term(mu.stretched(n), c);
    }
    return out;
}

CharSeries adams(int n, const CharSeries& f) {
    if (n < 1)
        throw Error("adams: n must be >= 1");
    CharSeries out(f.sym_cap(), f.t_cap());
    for (int j = 0; n * j <= f.t_cap(); ++j)
        out.add_at(n * j, adams(n, f.at(j)));
    return out;
}

namespace {

// Filtration degree of a term p_lambda t^j is |lambda| + j; buckets[w] holds
// the weight-w homogeneous component.
std::vector<CharSeries> filtration_buckets(const CharSeries& f) {
    int W = f.sym_cap() + f.t_cap();
    std::vector<CharSeries> buckets(W + 1, CharSeries(f.sym_cap(), f.t_cap()));
    for (int j = 0; j <= f.t_cap(); ++j)
        for (const auto& [mu, c] : f.at(j).terms()) {
            SymFn term(f.sym_cap());
            term.add_term(mu, c);
            buckets[mu.weight() + j].add_at(j, term);
        }
    return buckets;
}

}  // namespace

CharSeries exp_op(const CharSeries& f) {
    Rational c00 = epsilon(f.at(0));
    if (!is_zero(c00))
        throw ConvergenceError("exp_op: argument has nonzero bidegree-(0,0) coefficient " +
                               c00.get_str());
    const int S = f.sym_cap(), T = f.t_cap(), W = S + T;
    CharSeries g(S, T);
    for (int k = 1; k <= W; ++k) {
        CharSeries ak = adams(k, f);
        if (!ak.is_zero())
            g += ak * Rational(1, k);
    }
    auto gw = filtration_buckets(g);
    // exp by weight: W E_W = sum_{w=1..W} w g_w E_{W-w}
    std::vector<CharSeries> E(W + 1, CharSeries(S, T));
    E[0] = CharSeries::one(S, T);
    CharSeries result = E[0];
    for (int wd = 1; wd <= W; ++wd) {
        CharSeries acc(S, T);
        for (int w = 1; w <= wd; ++w) {
            if (gw[w].is_zero() || E[wd - w].is_zero())
                continue;
            acc += (gw[w] * E[wd - w]) * Rational(w);
        }
        E[wd] = acc * Rational(1, wd);
        result += E[wd];
    }
    return result;
}

SymFn exp_op(const SymFn& f) {
    return exp_op(CharSeries::monomial(f, 0, 0)).at(0);
}

CharSeries log_op(const CharSeries& g) {
    Rational c00 = epsilon(g.at(0));
    if (c00 != 1)
        throw ConvergenceError("log_op: bidegree-(0,0) coefficient is " + c00.get_str() +
                               ", expected 1");
    const int S = g.sym_cap(), T = g.t_cap(), W = S + T;
    CharSeries a = g;
    a.add_at(0, SymFn::constant(-1, S));
    CharSeries result(S, T);
    for (int n = 1; n <= W; ++n) {
        int mu_n = mobius(n);
        if (mu_n == 0)
            continue;
        CharSeries x = adams(n, a);
        if (x.is_zero())
            continue;
        // log(1+x) = sum_m (-1)^(m-1) x^m / m; x has positive filtration so
        // the powers terminate within the caps.
        CharSeries power = x;
        for (int m = 1; m <= W && !power.is_zero(); ++m) {
            int sign = (m % 2 == 1) ? 1 : -1;
            result += power * Rational(sign * mu_n, static_cast<long>(n) * m);
            power = power * x;
        }
    }
    return result;
}

SymFn log_op(const SymFn& g) {
    return log_op(CharSeries::monomial(g, 0, 0)).at(0);
}

CharSeries plethysm(const CharSeries& f, const CharSeries& g) {
    // The outer argument is composed exactly, term by term; the result lives
    // at the caps of the inner argument (p_k goes to psi_k(g), t is inert).
    CharSeries out(g.sym_cap(), std::min(f.t_cap(), g.t_cap()));
    std::map<int, CharSeries> adams_memo;
    auto psi = [&](int k) -> const CharSeries& {
        auto it = adams_memo.find(k);
        if (it == adams_memo.end())
            it = adams_memo.emplace(k, adams(k, g)).first;
        return it->second;
    };
    for (int j = 0; j <= std::min(f.t_cap(), out.t_cap()); ++j) {
        for (const auto& [mu, c] : f.at(j).terms()) {
            CharSeries term = CharSeries::one(out.sym_cap(), out.t_cap());
            for (int k : mu.parts()) {
                term = term * psi(k);
                if (term.is_zero())
                    break;
            }
            if (!term.is_zero())
                out += (term * c).shifted_by_t_power(j);
        }
    }
    return out;
}

SymFn plethysm(const SymFn& f, const SymFn& g) {
    return plethysm(CharSeries::monomial(f, 0, 0), CharSeries::monomial(g, 0, 0)).at(0);
}

std::vector<CharSeries> h_plethysm_family(const CharSeries& a, int l_max) {
    const int S = a.sym_cap(), T = a.t_cap();
    std::vector<CharSeries> psi_images;
    psi_images.reserve(l_max + 1);
    for (int k = 1; k <= l_max; ++k)
        psi_images.push_back(adams(k, a));
    std::vector<CharSeries> H;
    H.reserve(l_max + 1);
    H.push_back(CharSeries::one(S, T));
    for (int l = 1; l <= l_max; ++l) {
        CharSeries acc(S, T);
        for (int k = 1; k <= l; ++k) {
            if (psi_images[k - 1].is_zero() || H[l - k].is_zero())
                continue;
            acc += psi_images[k - 1] * H[l - k];
        }
        H.push_back(acc * Rational(1, l));
    }
    return H;
}

}  // namespace symchar
