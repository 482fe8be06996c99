#ifndef SCHUBERTK_GROTHENDIECK_HPP
#define SCHUBERTK_GROTHENDIECK_HPP

// Factorial, plain and twisted Grothendieck polynomials via the determinant
// formula, divided differences on the parameter alphabet, localization of
// polynomials at fixed points, and expansions in Grothendieck bases.
//
// Universe layout convention: the symmetric variables x1..xd come first,
// parameters (a1..aN or A1..AN) after them.

#include <cassert>
#include <functional>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "ring.hpp"
#include "shapes.hpp"

namespace schubertk {

// x (+) y = x + y - x*y, the multiplicative group law at beta = -1
inline LaurentPoly oplus(const LaurentPoly& x, const LaurentPoly& y) {
    return x + y - x * y;
}

inline std::vector<std::size_t> x_indices(int d) {
    std::vector<std::size_t> v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    return v;
}

// xi(x) = prod_i (1 - x_i)
inline LaurentPoly xi_poly(const UniversePtr& u, int d) {
    LaurentPoly r = LaurentPoly::one(u);
    for (int i = 0; i < d; ++i)
        r = r * (LaurentPoly::one(u) - LaurentPoly::variable(u, static_cast<std::size_t>(i)));
    return r;
}

// b_j providers for the three polynomial families (1-based j)
using BProvider = std::function<LaurentPoly(int)>;

inline BProvider b_plain(const UniversePtr& u) {
    return [u](int) { return LaurentPoly::zero(u); };
}
// b_j = 1 - a_j, parameters starting right after the x block
inline BProvider b_factorial(const UniversePtr& u, int d) {
    return [u, d](int j) {
        std::size_t idx = static_cast<std::size_t>(d + j - 1);
        if (idx >= u->size()) throw bad_input_error("universe has too few parameters");
        return LaurentPoly::one(u) - LaurentPoly::variable(u, idx);
    };
}
// b_j = 1 - xi(x)^{w_j}, no parameters involved
inline BProvider b_twisted(const UniversePtr& u, int d, std::vector<Int> w) {
    LaurentPoly xi = xi_poly(u, d);
    return [u, xi, w = std::move(w)](int j) {
        Int wj = j <= static_cast<int>(w.size()) ? w[static_cast<std::size_t>(j - 1)] : Int(0);
        return LaurentPoly::one(u) - xi.pow(wj.convert_to<long long>());
    };
}
// b_j = 1 - A_j * xi(x)^{w_j}
inline BProvider b_twisted_factorial(const UniversePtr& u, int d, std::vector<Int> w) {
    LaurentPoly xi = xi_poly(u, d);
    return [u, d, xi, w = std::move(w)](int j) {
        std::size_t idx = static_cast<std::size_t>(d + j - 1);
        if (idx >= u->size()) throw bad_input_error("universe has too few parameters");
        Int wj = j <= static_cast<int>(w.size()) ? w[static_cast<std::size_t>(j - 1)] : Int(0);
        return LaurentPoly::one(u) -
               LaurentPoly::variable(u, idx) * xi.pow(wj.convert_to<long long>());
    };
}

// [x|b]^k = (x (+) b_1) ... (x (+) b_k)
inline LaurentPoly xb_power(const UniversePtr& u, std::size_t x_idx, int k, const BProvider& b) {
    LaurentPoly r = LaurentPoly::one(u);
    LaurentPoly x = LaurentPoly::variable(u, x_idx);
    for (int j = 1; j <= k; ++j) r = r * oplus(x, b(j));
    return r;
}

// determinant of a matrix of polynomials; cofactor expansion for small sizes,
// fraction-free (Bareiss) elimination above
inline LaurentPoly det_poly(std::vector<std::vector<LaurentPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw bad_input_error("empty determinant");
    const UniversePtr& u = m[0][0].universe();
    if (n <= 4) {
        std::function<LaurentPoly(std::vector<std::vector<LaurentPoly>>&)> rec =
            [&](std::vector<std::vector<LaurentPoly>>& a) -> LaurentPoly {
            const std::size_t s = a.size();
            if (s == 1) return a[0][0];
            LaurentPoly acc = LaurentPoly::zero(u);
            for (std::size_t r = 0; r < s; ++r) {
                if (a[r][0].is_zero()) continue;
                std::vector<std::vector<LaurentPoly>> sub;
                for (std::size_t rr = 0; rr < s; ++rr) {
                    if (rr == r) continue;
                    sub.emplace_back(a[rr].begin() + 1, a[rr].end());
                }
                LaurentPoly term = a[r][0] * rec(sub);
                if (r % 2) acc -= term;
                else acc += term;
            }
            return acc;
        };
        return rec(m);
    }
    // Bareiss
    int sign = 1;
    LaurentPoly prev = LaurentPoly::one(u);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return LaurentPoly::zero(u);
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).div_exact(prev);
        prev = m[k][k];
    }
    LaurentPoly r = m[n - 1][n - 1];
    return sign < 0 ? -r : r;
}

// G_lambda(x|b) = det( [x_i|b]^{lambda_j + d - j} (1-x_i)^{j-1} ) / prod_{i<j}(x_i - x_j)
inline LaurentPoly grothendieck_poly(const UniversePtr& u, int d, const Partition& lam,
                                     const BProvider& b) {
    if (lam.length() > d) throw bad_input_error("partition has more than d parts");
    std::vector<std::vector<LaurentPoly>> m(static_cast<std::size_t>(d),
                                            std::vector<LaurentPoly>(static_cast<std::size_t>(d),
                                                                     LaurentPoly::zero(u)));
    for (int i = 1; i <= d; ++i) {
        LaurentPoly one_minus_x =
            LaurentPoly::one(u) - LaurentPoly::variable(u, static_cast<std::size_t>(i - 1));
        for (int j = 1; j <= d; ++j) {
            LaurentPoly e = xb_power(u, static_cast<std::size_t>(i - 1), lam.part(j - 1) + d - j, b);
            for (int t = 0; t < j - 1; ++t) e = e * one_minus_x;
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(e);
        }
    }
    LaurentPoly num = det_poly(std::move(m));
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            LaurentPoly v = LaurentPoly::variable(u, static_cast<std::size_t>(i - 1)) -
                            LaurentPoly::variable(u, static_cast<std::size_t>(j - 1));
            num = num.div_exact(v);
        }
    return num;
}

inline LaurentPoly plain_grothendieck(const UniversePtr& u, int d, const Partition& lam) {
    return grothendieck_poly(u, d, lam, b_plain(u));
}
inline LaurentPoly factorial_grothendieck(const UniversePtr& u, int d, const Partition& lam) {
    return grothendieck_poly(u, d, lam, b_factorial(u, d));
}
inline LaurentPoly twisted_grothendieck(const UniversePtr& u, int d, const Partition& lam,
                                        const std::vector<Int>& w) {
    return grothendieck_poly(u, d, lam, b_twisted(u, d, w));
}
inline LaurentPoly twisted_factorial_grothendieck(const UniversePtr& u, int d, const Partition& lam,
                                                  const std::vector<Int>& w) {
    return grothendieck_poly(u, d, lam, b_twisted_factorial(u, d, w));
}

// symmetry in x1..xd, checked through adjacent transpositions
inline bool is_symmetric(const LaurentPoly& p, int d) {
    for (int i = 0; i + 1 < d; ++i)
        if (p.swap_vars(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) != p)
            return false;
    return true;
}

// divided difference on the parameter alphabet: s_i swaps a_i, a_{i+1};
// pi_i f = (f - (a_i/a_{i+1}) s_i f) / (1 - a_i/a_{i+1})
inline LaurentPoly divided_difference_poly(const LaurentPoly& f, int i, int d) {
    const UniversePtr& u = f.universe();
    std::size_t ai = static_cast<std::size_t>(d + i - 1), ai1 = ai + 1;
    if (ai1 >= u->size()) throw bad_input_error("divided difference index out of range");
    LaurentPoly swapped = f.swap_vars(ai, ai1);
    LaurentPoly ratio = LaurentPoly::variable(u, ai) * LaurentPoly::variable(u, ai1, -1);
    LaurentPoly num = f - ratio * swapped;
    LaurentPoly den = LaurentPoly::one(u) - ratio;
    return num.div_exact(den);
}

// Localization at the fixed point mu: x_i -> 1 - 1/a_{mu~_i}, parameters
// a_j -> a_j for j <= n and a_j -> 1 beyond.  Set n = 0 for the formal
// (untruncated) substitution.  The result lives in dst (a1..aN).
inline LaurentPoly psi_localize(const LaurentPoly& f, const Partition& mu, int d, int n,
                                const UniversePtr& dst) {
    const UniversePtr& u = f.universe();
    SchubertSymbol sym = to_symbol(mu, d);
    std::vector<LaurentPoly> images;
    images.reserve(u->size());
    for (std::size_t v = 0; v < u->size(); ++v) {
        const std::string& nm = u->name(v);
        if (v < static_cast<std::size_t>(d)) {
            int entry = sym[v];
            int idx = dst->index_of("a" + std::to_string(entry));
            if (idx < 0) throw bad_input_error("localization target lacks a" + std::to_string(entry));
            images.push_back(LaurentPoly::one(dst) -
                             LaurentPoly::variable(dst, static_cast<std::size_t>(idx), -1));
        } else {
            int idx = dst->index_of(nm);
            if (idx >= 0 && (n == 0 || static_cast<int>(v) - d < n)) {
                images.push_back(LaurentPoly::variable(dst, static_cast<std::size_t>(idx)));
            } else if (n > 0 && static_cast<int>(v) - d >= n) {
                images.push_back(LaurentPoly::one(dst));
            } else {
                throw bad_input_error("localization target lacks " + nm);
            }
        }
    }
    return f.substitute(dst, images);
}

enum class GrothBasis { plain, factorial };

// expansion of a polynomial in a Grothendieck basis; coefficients live in the
// input universe with the x variables cleared
struct GrothExpansion {
    int d = 0;
    GrothBasis basis = GrothBasis::plain;
    std::map<Partition, LaurentPoly> coeffs;
};

inline LaurentPoly reconstruct(const GrothExpansion& ex, const UniversePtr& u) {
    LaurentPoly r = LaurentPoly::zero(u);
    for (const auto& [mu, c] : ex.coeffs) {
        LaurentPoly g = ex.basis == GrothBasis::plain ? plain_grothendieck(u, ex.d, mu)
                                                      : factorial_grothendieck(u, ex.d, mu);
        r += c.transport(u) * g;
    }
    return r;
}

// Plain-basis expansion by elimination of the lexicographically greatest
// monomial of the lowest total x-degree; the lowest-degree part of the plain
// G_mu is the Schur polynomial s_mu, which makes this triangular and the
// minimal degree strictly increasing.
inline GrothExpansion expand_plain(const LaurentPoly& f, int d, long long cap) {
    const UniversePtr& u = f.universe();
    if (!is_symmetric(f, d)) throw consistency_error_base("expansion input is not symmetric");
    auto xv = x_indices(d);
    GrothExpansion ex;
    ex.d = d;
    ex.basis = GrothBasis::plain;
    LaurentPoly rem = f;
    while (!rem.is_zero()) {
        long long dmin = rem.min_degree_in(xv);
        // lex-greatest x-exponent among terms of minimal x-degree
        const Exps* best = nullptr;
        for (const auto& [e, c] : rem.terms()) {
            long long s = 0;
            for (auto v : xv) s += e[v];
            if (s != dmin) continue;
            if (!best) { best = &e; continue; }
            bool greater = false;
            for (auto v : xv) {
                if (e[v] != (*best)[v]) { greater = e[v] > (*best)[v]; break; }
            }
            if (greater) best = &e;
        }
        Exps alpha(xv.size());
        for (std::size_t i = 0; i < xv.size(); ++i) alpha[i] = (*best)[xv[i]];
        for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
            if (alpha[i] < alpha[i + 1])
                throw consistency_error_base("leading x-exponent is not a partition");
        Partition mu(std::vector<int>(alpha.begin(), alpha.end()));
        if (mu.weight() > cap)
            throw nonterminating_error("plain expansion exceeded the degree cap");
        LaurentPoly c = rem.coefficient_of(xv, alpha);
        rem -= c * plain_grothendieck(u, d, mu);
        auto [it, fresh] = ex.coeffs.emplace(mu, c);
        if (!fresh) throw consistency_error_base("plain expansion revisited a basis element");
    }
    return ex;
}

// Factorial-basis expansion through the vanishing property: processing
// candidates level by level in a linear extension of containment, the
// localization of the remainder at mu equals coeff * (diagonal value), and
// the diagonal divides exactly.
inline GrothExpansion expand_factorial(const LaurentPoly& f, int d, long long cap) {
    if (!is_symmetric(f, d)) throw consistency_error_base("expansion input is not symmetric");
    // widen the parameter block up to what the deepest candidate needs
    int need = static_cast<int>(cap) + d;
    UniversePtr wide = make_universe_xa(d, need);
    UniversePtr adst = make_universe_a(need);
    LaurentPoly rem = f.transport(wide);
    GrothExpansion ex;
    ex.d = d;
    ex.basis = GrothBasis::factorial;
    for (long long w = 0; !rem.is_zero(); ++w) {
        if (w > cap) throw nonterminating_error("factorial expansion exceeded the degree cap");
        // partitions of weight w with at most d parts, dictionary order
        std::vector<Partition> level;
        std::vector<int> parts(static_cast<std::size_t>(d));
        std::function<void(int, long long)> gen = [&](int row, long long rest) {
            if (row == d) {
                if (rest == 0) level.push_back(Partition(parts));
                return;
            }
            int hi = row == 0 ? static_cast<int>(rest)
                              : std::min(parts[static_cast<std::size_t>(row - 1)], static_cast<int>(rest));
            for (int v = 0; v <= hi; ++v) {
                parts[static_cast<std::size_t>(row)] = v;
                gen(row + 1, rest - v);
            }
        };
        gen(0, w);
        std::sort(level.begin(), level.end(),
                  [d](const Partition& a, const Partition& b) { return dict_less(a, b, d); });
        for (const Partition& mu : level) {
            if (rem.is_zero()) break;
            LaurentPoly loc = psi_localize(rem, mu, d, 0, adst);
            if (loc.is_zero()) continue;
            LaurentPoly g = factorial_grothendieck(wide, d, mu);
            LaurentPoly diag = psi_localize(g, mu, d, 0, adst);
            LaurentPoly k = loc.div_exact(diag);
            rem -= k.transport(wide) * g;
            ex.coeffs.emplace(mu, k.transport(wide));
        }
    }
    return ex;
}

inline GrothExpansion expand_in_grothendieck_basis(const LaurentPoly& f, int d, GrothBasis basis,
                                                   long long cap) {
    return basis == GrothBasis::plain ? expand_plain(f, d, cap) : expand_factorial(f, d, cap);
}

// sensible default guard for expansions when the caller has no better bound
inline long long default_expansion_cap(const LaurentPoly& f, int d) {
    long long m = f.max_degree_in(x_indices(d));
    return (m + 1) * d + 8;
}

// both sides of the divisor multiplication identity
// xi(x) * G_lambda(x|1-a) = a_lambda^{-1} sum_{lambda => mu} (-1)^{|mu/lam|} G_mu(x|1-a)
inline std::pair<LaurentPoly, LaurentPoly> chevalley_poly_identity(int d, const Partition& lam) {
    int np = lam.first() + d;
    UniversePtr u = make_universe_xa(d, np);
    LaurentPoly lhs = xi_poly(u, d) * factorial_grothendieck(u, d, lam);
    Exps e(u->size(), 0);
    for (int s : to_symbol(lam, d)) e[static_cast<std::size_t>(d + s - 1)] = 1;
    LaurentPoly alam_inv = LaurentPoly::monomial(u, e, 1).monomial_inverse();
    LaurentPoly rhs = LaurentPoly::zero(u);
    for (const Partition& mu : step_targets(lam, d, lam.first() + 1)) {
        Int sgn = ((mu.weight() - lam.weight()) % 2 == 0) ? 1 : -1;
        rhs += factorial_grothendieck(u, d, mu) * sgn;
    }
    return {lhs, alam_inv * rhs};
}

// integer expansion of the twisted Grothendieck polynomial G^c_lambda(x),
// directly: substitute b_j = 1 - xi^{w_j} and expand in the plain basis
inline std::map<Partition, Int> twisted_expand_direct(int d, const Partition& lam,
                                                      const std::vector<Int>& w, long long cap) {
    UniversePtr u = make_universe_x(d);
    LaurentPoly f = twisted_grothendieck(u, d, lam, w);
    if (cap <= 0) cap = default_expansion_cap(f, d);
    GrothExpansion ex = expand_plain(f, d, cap);
    std::map<Partition, Int> out;
    for (const auto& [mu, c] : ex.coeffs) {
        if (!c.is_constant())
            throw consistency_error_base("twisted expansion produced a non-constant coefficient");
        if (c.is_zero()) continue;
        out.emplace(mu, c.constant_value());
    }
    return out;
}

// pipeline route: expand the factorial polynomial in the plain basis, then
// substitute a_j = xi^{w_j} monomial by monomial, rewriting each xi^k G_mu
// through k-step chain counts: xi^k G_mu = sum_eta (-1)^{|eta/mu|} N G_eta
inline std::map<Partition, Int> twisted_expand_pipeline(int d, const Partition& lam,
                                                        const std::vector<Int>& w, long long cap) {
    int np = std::max(lam.first() + d - 1, 1);
    UniversePtr u = make_universe_xa(d, np);
    LaurentPoly f = factorial_grothendieck(u, d, lam);
    GrothExpansion ex = expand_plain(f, d, cap > 0 ? cap : default_expansion_cap(f, d));
    // the substitution a_j = xi^{w_j} turns each coefficient monomial into a
    // xi power; collect the largest row the chain rewrites can reach
    std::vector<std::tuple<Partition, long long, Int>> jobs; // (mu, k, C)
    long long need = lam.first();
    for (const auto& [mu, cpoly] : ex.coeffs) {
        for (const auto& [e, C] : cpoly.terms()) {
            long long k = 0;
            for (int j = 1; j <= np; ++j) {
                int exp = e[static_cast<std::size_t>(d + j - 1)];
                if (exp < 0) throw consistency_error_base("plain expansion coefficient is not polynomial");
                Int wj = j <= static_cast<int>(w.size()) ? w[static_cast<std::size_t>(j - 1)] : Int(0);
                k += exp * wj.convert_to<long long>();
            }
            if (cap > 0 && mu.first() + k > cap)
                throw nonterminating_error("chain expansion exceeded the degree cap");
            need = std::max(need, mu.first() + k);
            jobs.emplace_back(mu, k, C);
        }
    }
    ChainContext ctx(d, static_cast<int>(need), [](const Partition&) { return Int(1); });
    std::map<Partition, Int> out;
    for (const auto& job : jobs) {
        const Partition& mu = std::get<0>(job);
        long long k = std::get<1>(job);
        const Int& C = std::get<2>(job);
        if (k == 0) {
            out[mu] += C;
            continue;
        }
        // all eta containing mu with eta_1 <= mu_1 + k
        std::vector<int> parts(static_cast<std::size_t>(d));
        std::function<void(int)> gen = [&](int row) {
            if (row == d) {
                Partition eta(parts);
                Int cnt = unit_chain_count(ctx, {mu, k, eta});
                if (cnt != 0) {
                    Int sgn = ((eta.weight() - mu.weight()) % 2 == 0) ? 1 : -1;
                    out[eta] += C * sgn * cnt;
                }
                return;
            }
            int hi = static_cast<int>(std::min<long long>(mu.first() + k,
                                                          row > 0 ? parts[static_cast<std::size_t>(row - 1)]
                                                                  : mu.first() + k));
            for (int v = mu.part(row); v <= hi; ++v) {
                parts[static_cast<std::size_t>(row)] = v;
                gen(row + 1);
            }
        };
        gen(0);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// the self-validating twisted expansion: the substitution pipeline and the
// direct expansion must produce the same integers
inline std::map<Partition, Int> twisted_in_grothendieck_basis(int d, const Partition& lam,
                                                              const std::vector<Int>& w,
                                                              long long cap) {
    auto pipeline = twisted_expand_pipeline(d, lam, w, cap);
    auto direct = twisted_expand_direct(d, lam, w, cap);
    if (pipeline != direct)
        throw consistency_error_base("twisted expansion routes disagree");
    return pipeline;
}

} // namespace schubertk

#endif
