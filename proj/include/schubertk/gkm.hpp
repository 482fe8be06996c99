#ifndef SCHUBERTK_GKM_HPP
#define SCHUBERTK_GKM_HPP

// Equivariant K-theory of Gr(d,n) through its fixed-point description:
// classes are tuples of Laurent polynomials in a1..an indexed by the
// partitions in the d x (n-d) box (dictionary order), subject to the
// divisibility condition along moment-graph edges.

#include <map>
#include <utility>
#include <vector>

#include "grothendieck.hpp"
#include "ring.hpp"
#include "shapes.hpp"

namespace schubertk {

// a class is one Laurent polynomial per box partition, in dictionary order
using ClassVector = std::vector<LaurentPoly>;

inline ClassVector class_add(const ClassVector& a, const ClassVector& b) {
    ClassVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
inline ClassVector class_sub(const ClassVector& a, const ClassVector& b) {
    ClassVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}
inline ClassVector class_mul(const ClassVector& a, const ClassVector& b) {
    ClassVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] * b[i];
    return r;
}
inline ClassVector class_scale(const LaurentPoly& c, const ClassVector& a) {
    ClassVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * r[i];
    return r;
}

class GrassContext {
public:
    GrassContext(int d, int n) : d_(d), n_(n), au_(make_universe_a(n)) {
        if (d < 1 || n <= d) throw bad_input_error("need 1 <= d < n");
        box_ = enumerate_box(d, n);
        for (std::size_t i = 0; i < box_.size(); ++i)
            index_[box_[i]] = static_cast<int>(i);
    }

    int d() const { return d_; }
    int n() const { return n_; }
    const UniversePtr& param_universe() const { return au_; }
    const std::vector<Partition>& box() const { return box_; }

    int index_of(const Partition& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

    // a_lambda = prod_i a_{lambda~_i}
    LaurentPoly a_monomial(const Partition& p) const {
        Exps e(static_cast<std::size_t>(n_), 0);
        for (int s : to_symbol(p, d_)) {
            if (s < 1 || s > n_) throw bad_input_error("symbol entry outside 1..n");
            e[static_cast<std::size_t>(s - 1)] += 1;
        }
        return LaurentPoly::monomial(au_, e, 1);
    }

    // Schubert class from the descent recurrence, one value per box partition
    const ClassVector& schubert_row(const Partition& lam) {
        auto it = rows_.find(lam);
        if (it != rows_.end()) return it->second;
        if (index_of(lam) < 0) throw bad_input_error("partition outside the box");
        ClassVector row(box_.size(), LaurentPoly::zero(au_));
        for (std::size_t idx = 0; idx < box_.size(); ++idx) {
            const Partition& mu = box_[idx];
            if (mu.length() == 0) {
                row[idx] = lam.length() == 0 ? LaurentPoly::one(au_) : LaurentPoly::zero(au_);
                continue;
            }
            int i = smallest_descent(mu);
            Partition nu = simple_reflection(i, mu, d_).value;
            int nidx = index_of(nu);
            LaurentPoly ratio = LaurentPoly::variable(au_, static_cast<std::size_t>(i - 1)) *
                                LaurentPoly::variable(au_, static_cast<std::size_t>(i), -1);
            reflection_result rl = simple_reflection(i, lam, d_);
            if (rl.cmp < 0) {
                const ClassVector& lower = schubert_row_ref(rl.value);
                LaurentPoly e = LaurentPoly::one(au_) - ratio;
                row[idx] = ratio * swap_param(row[static_cast<std::size_t>(nidx)], i) +
                           e * swap_param(lower[static_cast<std::size_t>(nidx)], i);
            } else {
                row[idx] = swap_param(row[static_cast<std::size_t>(nidx)], i);
            }
        }
        return rows_.emplace(lam, std::move(row)).first->second;
    }

    // Schubert class by localizing the factorial Grothendieck polynomial;
    // lam may lie outside the box (then the row vanishes identically)
    ClassVector schubert_row_localized(const Partition& lam) const {
        if (lam.length() > d_) throw bad_input_error("partition has more than d parts");
        int np = std::max(n_, lam.first() + d_ - 1);
        UniversePtr xu = make_universe_xa(d_, np);
        LaurentPoly g = factorial_grothendieck(xu, d_, lam);
        ClassVector row;
        row.reserve(box_.size());
        for (const Partition& mu : box_) row.push_back(psi_localize(g, mu, d_, n_, au_));
        return row;
    }

    LaurentPoly localize(const Partition& lam, const Partition& mu) const {
        if (index_of(mu) < 0) throw bad_input_error("localization point outside the box");
        int np = std::max(n_, lam.first() + d_ - 1);
        UniversePtr xu = make_universe_xa(d_, np);
        LaurentPoly g = factorial_grothendieck(xu, d_, lam);
        return psi_localize(g, mu, d_, n_, au_);
    }

    // closed product over reversals, the diagonal value S_lam |_lam
    LaurentPoly diagonal_value(const Partition& lam) const {
        LaurentPoly r = LaurentPoly::one(au_);
        LaurentPoly inv = a_monomial(lam).monomial_inverse();
        for (const Partition& nu : reversals(lam, d_, n_))
            r = r * (LaurentPoly::one(au_) - a_monomial(nu) * inv);
        return r;
    }

    // moment-graph failures of the divisibility condition; empty means valid
    std::vector<std::pair<Partition, Partition>> gkm_failures(const ClassVector& cls) const {
        std::vector<std::pair<Partition, Partition>> bad;
        for (std::size_t idx = 0; idx < box_.size(); ++idx) {
            const Partition& lam = box_[idx];
            for (const Partition& mu : inversions(lam, d_, n_)) {
                int midx = index_of(mu);
                LaurentPoly w = LaurentPoly::one(au_) -
                                a_monomial(lam) * a_monomial(mu).monomial_inverse();
                LaurentPoly diff = cls[idx] - cls[static_cast<std::size_t>(midx)];
                if (diff.is_zero()) continue;
                try {
                    diff.div_exact(w);
                } catch (const not_divisible_error&) {
                    bad.emplace_back(lam, mu);
                }
            }
        }
        return bad;
    }

    // Demazure operator: (pi_i f)|_mu = (f|_mu - (a_i/a_{i+1}) s_i(f|_{s_i mu})) / (1 - a_i/a_{i+1})
    ClassVector divided_difference(int i, const ClassVector& cls) const {
        if (i < 1 || i >= n_) throw bad_input_error("reflection index out of range");
        LaurentPoly ratio = LaurentPoly::variable(au_, static_cast<std::size_t>(i - 1)) *
                            LaurentPoly::variable(au_, static_cast<std::size_t>(i), -1);
        LaurentPoly e = LaurentPoly::one(au_) - ratio;
        ClassVector out(box_.size(), LaurentPoly::zero(au_));
        for (std::size_t idx = 0; idx < box_.size(); ++idx) {
            reflection_result r = simple_reflection(i, box_[idx], d_);
            int oidx = r.cmp == 0 ? static_cast<int>(idx) : index_of(r.value);
            LaurentPoly num = cls[idx] - ratio * swap_param(cls[static_cast<std::size_t>(oidx)], i);
            out[idx] = num.div_exact(e);
        }
        return out;
    }

    // triangular solve against the Schubert basis in dictionary order
    std::map<Partition, LaurentPoly> expand_in_schubert(const ClassVector& cls) {
        std::map<Partition, LaurentPoly> out;
        std::vector<std::pair<int, LaurentPoly>> found; // (index, coefficient)
        for (std::size_t idx = 0; idx < box_.size(); ++idx) {
            LaurentPoly r = cls[idx];
            for (const auto& [fidx, k] : found)
                r -= k * schubert_row(box_[static_cast<std::size_t>(fidx)])[idx];
            if (r.is_zero()) continue;
            LaurentPoly diag = schubert_row(box_[idx])[idx];
            LaurentPoly k = r.div_exact(diag);
            found.emplace_back(static_cast<int>(idx), k);
            out.emplace(box_[idx], std::move(k));
        }
        return out;
    }

    std::map<Partition, LaurentPoly> structure_constants(const Partition& lam,
                                                         const Partition& mu) {
        const ClassVector& a = schubert_row(lam);
        const ClassVector& b = schubert_row(mu);
        return expand_in_schubert(class_mul(a, b));
    }

    // multiplication by the divisor class S_(1) in closed form
    std::map<Partition, LaurentPoly> chevalley(const Partition& lam) const {
        if (index_of(lam) < 0) throw bad_input_error("partition outside the box");
        std::map<Partition, LaurentPoly> out;
        LaurentPoly base = a_monomial(Partition({})) * a_monomial(lam).monomial_inverse();
        LaurentPoly self = LaurentPoly::one(au_) - base;
        if (!self.is_zero()) out.emplace(lam, std::move(self));
        for (const Partition& mu : step_targets(lam, d_, n_ - d_)) {
            if (mu == lam) continue;
            Int sgn = ((mu.weight() - lam.weight()) % 2 == 1) ? 1 : -1; // (-1)^{|mu/lam|-1}
            out.emplace(mu, base * sgn);
        }
        return out;
    }

    // substitution a_i -> u_i u_{i+1} ... u_{n-1}, a_n -> 1; the input must be
    // homogeneous of degree zero and the image must be a genuine polynomial
    LaurentPoly rewrite_in_u(const LaurentPoly& p) const {
        for (const auto& [e, c] : p.terms())
            if (total_degree_of(e) != 0)
                throw not_polynomial_error("u-rewrite needs a degree-zero homogeneous input");
        int cnt = n_ - 1;
        std::vector<variable_spec> specs;
        for (int i = 1; i <= cnt; ++i)
            specs.push_back({"u" + std::to_string(i), exponent_policy::laurent});
        UniversePtr ul = VarUniverse::create(specs);
        std::vector<LaurentPoly> images;
        for (int i = 1; i <= n_; ++i) {
            Exps e(static_cast<std::size_t>(cnt), 0);
            for (int j = i; j <= cnt; ++j) e[static_cast<std::size_t>(j - 1)] = 1;
            images.push_back(LaurentPoly::monomial(ul, e, 1));
        }
        LaurentPoly img = p.substitute(ul, images);
        UniversePtr un = make_universe_u(cnt);
        try {
            return img.transport(un);
        } catch (const std::exception&) {
            throw not_polynomial_error("u-rewrite image has a negative exponent");
        }
    }

    // largest u-index that may appear in the u-rewrite of a structure
    // constant against nu
    int u_support_bound(const Partition& nu) const { return nu.first() + d_ - 1; }

    // lift a localized value into the (a, u) universe: each monomial gets the
    // minimal power of u * a_mu clearing its denominators on mu's rows
    LaurentPoly plucker_lift(const LaurentPoly& val, const Partition& mu) const {
        UniversePtr auu = make_universe_au(n_);
        SchubertSymbol sym = to_symbol(mu, d_);
        LaurentPoly out = LaurentPoly::zero(auu);
        for (const auto& [e, c] : val.terms()) {
            int t = 0;
            for (int s : sym) t = std::max(t, -e[static_cast<std::size_t>(s - 1)]);
            Exps le(static_cast<std::size_t>(n_) + 1, 0);
            for (int i = 0; i < n_; ++i) le[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
            for (int s : sym) le[static_cast<std::size_t>(s - 1)] += t;
            le[static_cast<std::size_t>(n_)] = t;
            out += LaurentPoly::monomial(auu, le, c);
        }
        return out;
    }

    LaurentPoly plucker_view(const Partition& lam, const Partition& mu) {
        int idx = index_of(mu);
        if (idx < 0) throw bad_input_error("partition outside the box");
        return plucker_lift(schubert_row(lam)[static_cast<std::size_t>(idx)], mu);
    }

    // collapse the u variable back: u -> a_mu^{-1}; two lifts agree as classes
    // exactly when their collapses agree
    LaurentPoly plucker_collapse(const LaurentPoly& lifted, const Partition& mu) const {
        std::vector<LaurentPoly> images;
        for (int i = 1; i <= n_; ++i)
            images.push_back(LaurentPoly::variable(au_, "a" + std::to_string(i)));
        images.push_back(a_monomial(mu).monomial_inverse());
        return lifted.substitute(au_, images);
    }

private:
    int smallest_descent(const Partition& mu) const {
        for (int i = 1; i < n_; ++i)
            if (simple_reflection(i, mu, d_).cmp < 0) return i;
        throw consistency_error_base("nonempty partition without a descent");
    }

    LaurentPoly swap_param(const LaurentPoly& p, int i) const {
        return p.swap_vars(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i));
    }

    const ClassVector& schubert_row_ref(const Partition& lam) { return schubert_row(lam); }

    int d_, n_;
    UniversePtr au_;
    std::vector<Partition> box_;
    std::map<Partition, int> index_;
    std::map<Partition, ClassVector> rows_;
};

// a polynomial in u1..u_{n-1} as a list of (multiset, coefficient) pairs:
// the multiset lists each index i with multiplicity equal to its exponent
inline std::vector<std::pair<std::vector<int>, Int>> u_expansion_terms(const LaurentPoly& upoly) {
    std::vector<std::pair<std::vector<int>, Int>> out;
    for (const auto& [e, c] : upoly.sorted_terms()) {
        std::vector<int> multiset;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (int t = 0; t < e[j]; ++t) multiset.push_back(static_cast<int>(j) + 1);
        out.emplace_back(std::move(multiset), c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace schubertk

#endif
