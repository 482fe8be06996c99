#ifndef SCHUBERTK_RING_HPP
#define SCHUBERTK_RING_HPP

// Exact sparse Laurent polynomial arithmetic over arbitrary-precision integers,
// with named variables, per-variable exponent policies, monomial substitution
// maps and their lattice preimages.  Everything downstream (localized Schubert
// classes, Grothendieck polynomials, structure constants) is built on this ring.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schubertk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error hierarchy.  domain_error_base maps to CLI exit code 2 (bad input),
// consistency_error_base to exit code 3 (a violated internal claim; the
// strongest failure signal this library can emit).
class domain_error_base : public std::runtime_error {
public:
    explicit domain_error_base(const std::string& m) : std::runtime_error(m) {}
};
class consistency_error_base : public std::runtime_error {
public:
    explicit consistency_error_base(const std::string& m) : std::runtime_error(m) {}
};

class bad_input_error : public domain_error_base {
public:
    explicit bad_input_error(const std::string& m) : domain_error_base(m) {}
};
class universe_mismatch_error : public consistency_error_base {
public:
    explicit universe_mismatch_error(const std::string& m) : consistency_error_base(m) {}
};
class not_polynomial_error : public consistency_error_base {
public:
    explicit not_polynomial_error(const std::string& m) : consistency_error_base(m) {}
};
class not_divisible_error : public consistency_error_base {
public:
    explicit not_divisible_error(const std::string& m) : consistency_error_base(m) {}
};
class not_in_image_error : public consistency_error_base {
public:
    explicit not_in_image_error(const std::string& m) : consistency_error_base(m) {}
};
class nonterminating_error : public consistency_error_base {
public:
    explicit nonterminating_error(const std::string& m) : consistency_error_base(m) {}
};

enum class exponent_policy { laurent, nonnegative };

struct variable_spec {
    std::string name;
    exponent_policy policy = exponent_policy::laurent;
    bool operator==(const variable_spec& o) const {
        return name == o.name && policy == o.policy;
    }
};

// Immutable, shared set of variables.  A polynomial's exponent vectors are
// dense over its universe; two polynomials interoperate only when their
// universes are structurally equal.
class VarUniverse {
public:
    static std::shared_ptr<const VarUniverse> create(std::vector<variable_spec> vars) {
        return std::shared_ptr<const VarUniverse>(new VarUniverse(std::move(vars)));
    }
    std::size_t size() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_[i].name; }
    exponent_policy policy(std::size_t i) const { return vars_[i].policy; }
    // -1 if the name is absent
    int index_of(const std::string& n) const {
        auto it = index_.find(n);
        return it == index_.end() ? -1 : it->second;
    }
    bool same_as(const VarUniverse& o) const {
        return this == &o || vars_ == o.vars_;
    }

private:
    explicit VarUniverse(std::vector<variable_spec> vars) : vars_(std::move(vars)) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (!index_.emplace(vars_[i].name, static_cast<int>(i)).second)
                throw bad_input_error("duplicate variable name: " + vars_[i].name);
        }
    }
    std::vector<variable_spec> vars_;
    std::map<std::string, int> index_;
};

using UniversePtr = std::shared_ptr<const VarUniverse>;

inline void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
    if (!a->same_as(*b)) throw universe_mismatch_error("operands live in different universes");
}

// Standard universe layouts used across the library.  Mixed universes always
// put the symmetric variables x1..xd first, parameters after.
inline UniversePtr make_universe_a(int n) {
    std::vector<variable_spec> v;
    for (int i = 1; i <= n; ++i) v.push_back({"a" + std::to_string(i), exponent_policy::laurent});
    return VarUniverse::create(std::move(v));
}
inline UniversePtr make_universe_au(int n) {
    std::vector<variable_spec> v;
    for (int i = 1; i <= n; ++i) v.push_back({"a" + std::to_string(i), exponent_policy::laurent});
    v.push_back({"u", exponent_policy::laurent});
    return VarUniverse::create(std::move(v));
}
inline UniversePtr make_universe_A(int n) {
    std::vector<variable_spec> v;
    for (int i = 1; i <= n; ++i) v.push_back({"A" + std::to_string(i), exponent_policy::laurent});
    return VarUniverse::create(std::move(v));
}
inline UniversePtr make_universe_u(int count) {
    std::vector<variable_spec> v;
    for (int i = 1; i <= count; ++i) v.push_back({"u" + std::to_string(i), exponent_policy::nonnegative});
    return VarUniverse::create(std::move(v));
}
inline UniversePtr make_universe_x(int d) {
    std::vector<variable_spec> v;
    for (int i = 1; i <= d; ++i) v.push_back({"x" + std::to_string(i), exponent_policy::nonnegative});
    return VarUniverse::create(std::move(v));
}
inline UniversePtr make_universe_xa(int d, int na) {
    std::vector<variable_spec> v;
    for (int i = 1; i <= d; ++i) v.push_back({"x" + std::to_string(i), exponent_policy::nonnegative});
    for (int i = 1; i <= na; ++i) v.push_back({"a" + std::to_string(i), exponent_policy::laurent});
    return VarUniverse::create(std::move(v));
}
inline UniversePtr make_universe_xA(int d, int na) {
    std::vector<variable_spec> v;
    for (int i = 1; i <= d; ++i) v.push_back({"x" + std::to_string(i), exponent_policy::nonnegative});
    for (int i = 1; i <= na; ++i) v.push_back({"A" + std::to_string(i), exponent_policy::laurent});
    return VarUniverse::create(std::move(v));
}

using Exps = std::vector<int>;

inline long long total_degree_of(const Exps& e) {
    long long s = 0;
    for (int x : e) s += x;
    return s;
}

// graded lexicographic order, first variable most significant
inline bool glex_less(const Exps& a, const Exps& b) {
    long long da = total_degree_of(a), db = total_degree_of(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class LaurentPoly {
public:
    using term_map = std::map<Exps, Int>;

    LaurentPoly() = default;

    static LaurentPoly zero(UniversePtr u) { return LaurentPoly(std::move(u), term_map{}); }
    static LaurentPoly constant(UniversePtr u, Int c) {
        term_map t;
        if (c != 0) t.emplace(Exps(u->size(), 0), std::move(c));
        return LaurentPoly(std::move(u), std::move(t));
    }
    static LaurentPoly one(UniversePtr u) { return constant(std::move(u), 1); }
    static LaurentPoly monomial(UniversePtr u, Exps e, Int c = 1) {
        if (e.size() != u->size()) throw bad_input_error("exponent vector has wrong width");
        term_map t;
        if (c != 0) t.emplace(std::move(e), std::move(c));
        return LaurentPoly(std::move(u), std::move(t));
    }
    static LaurentPoly variable(UniversePtr u, const std::string& name) {
        int i = u->index_of(name);
        if (i < 0) throw bad_input_error("unknown variable: " + name);
        Exps e(u->size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return monomial(std::move(u), std::move(e));
    }
    static LaurentPoly variable(UniversePtr u, std::size_t idx, int exp = 1) {
        Exps e(u->size(), 0);
        e.at(idx) = exp;
        return monomial(std::move(u), std::move(e));
    }

    const UniversePtr& universe() const { return u_; }
    const term_map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && total_degree_of(t_.begin()->first) == 0 &&
                              *std::max_element(t_.begin()->first.begin(), t_.begin()->first.end()) == 0 &&
                              *std::min_element(t_.begin()->first.begin(), t_.begin()->first.end()) == 0);
    }
    bool is_one() const { return is_constant() && constant_value() == 1; }
    bool is_monomial() const { return t_.size() == 1; }
    Int constant_value() const {
        if (t_.empty()) return 0;
        if (!is_constant()) throw consistency_error_base("constant_value on non-constant");
        return t_.begin()->second;
    }
    std::size_t term_count() const { return t_.size(); }

    bool operator==(const LaurentPoly& o) const {
        return u_->same_as(*o.u_) && t_ == o.t_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        require_same_universe(u_, o.u_);
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        require_same_universe(u_, o.u_);
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    LaurentPoly operator-() const {
        term_map t = t_;
        for (auto& [e, c] : t) c = -c;
        return LaurentPoly(u_, std::move(t));
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        require_same_universe(a.u_, b.u_);
        LaurentPoly r = zero(a.u_);
        const std::size_t w = a.u_->size();
        Exps e(w, 0);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                for (std::size_t i = 0; i < w; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    friend LaurentPoly operator*(const LaurentPoly& a, const Int& s) {
        term_map t;
        if (s != 0)
            for (const auto& [e, c] : a.t_) t.emplace(e, c * s);
        return LaurentPoly(a.u_, std::move(t));
    }
    friend LaurentPoly operator*(const Int& s, const LaurentPoly& a) { return a * s; }

    // k < 0 only for invertible monomials (coefficient +-1)
    LaurentPoly pow(long long k) const {
        if (k == 0) return one(u_);
        if (k < 0) {
            LaurentPoly inv = monomial_inverse();
            return inv.pow(-k);
        }
        LaurentPoly base = *this, r = one(u_);
        while (k > 0) {
            if (k & 1) r = r * base;
            base = (k >>= 1) > 0 ? base * base : base;
        }
        return r;
    }

    // multiplicative inverse of a monomial with unit coefficient
    LaurentPoly monomial_inverse() const {
        if (t_.size() != 1) throw not_divisible_error("inverse of non-monomial");
        const auto& [e, c] = *t_.begin();
        if (c != 1 && c != -1) throw not_divisible_error("inverse of non-unit coefficient");
        Exps inv(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
        return monomial(u_, std::move(inv), c);
    }

    // Exact division with zero remainder required.  Both operands are first
    // shifted so every variable has minimum exponent zero; a Laurent quotient
    // of the shifted pair is then an ordinary polynomial (compare lowest
    // terms variable by variable), so reduction by the graded-lex leading
    // term of q strictly descends through a finite set of monomials and
    // failure surfaces as a leading term the divisor cannot reach.
    LaurentPoly div_exact(const LaurentPoly& q) const {
        require_same_universe(u_, q.u_);
        if (q.is_zero()) throw bad_input_error("division by zero polynomial");
        if (is_zero()) return zero(u_);
        const std::size_t w = u_->size();
        auto min_exps = [w](const term_map& t) {
            Exps m = t.begin()->first;
            for (const auto& [e, c] : t)
                for (std::size_t i = 0; i < w; ++i) m[i] = std::min(m[i], e[i]);
            return m;
        };
        auto shifted = [w](const term_map& t, const Exps& s) {
            term_map out;
            for (const auto& [e, c] : t) {
                Exps r(w);
                for (std::size_t i = 0; i < w; ++i) r[i] = e[i] - s[i];
                out.emplace(std::move(r), c);
            }
            return out;
        };
        Exps sp = min_exps(t_), sq = min_exps(q.t_);
        term_map rem = shifted(t_, sp), qt = shifted(q.t_, sq);
        const auto& qlead = *std::max_element(
            qt.begin(), qt.end(),
            [](const auto& a, const auto& b) { return glex_less(a.first, b.first); });
        term_map quo;
        while (!rem.empty()) {
            const auto& plead = *std::max_element(
                rem.begin(), rem.end(),
                [](const auto& a, const auto& b) { return glex_less(a.first, b.first); });
            if (plead.second % qlead.second != 0)
                throw not_divisible_error("leading coefficient does not divide");
            Exps te(w);
            for (std::size_t i = 0; i < w; ++i) {
                te[i] = plead.first[i] - qlead.first[i];
                if (te[i] < 0) throw not_divisible_error("division leaves a remainder");
            }
            Int tc = plead.second / qlead.second;
            for (const auto& [eq, cq] : qt) {
                Exps e(w);
                for (std::size_t i = 0; i < w; ++i) e[i] = te[i] + eq[i];
                auto it = rem.find(e);
                if (it == rem.end()) rem.emplace(std::move(e), -(tc * cq));
                else if ((it->second -= tc * cq) == 0) rem.erase(it);
            }
            for (std::size_t i = 0; i < w; ++i) te[i] += sp[i] - sq[i];
            auto it = quo.find(te);
            if (it == quo.end()) quo.emplace(std::move(te), std::move(tc));
            else if ((it->second += tc) == 0) quo.erase(it);
        }
        // the true quotient must respect the policies of this universe
        for (const auto& [e, c] : quo) check_policy(*u_, e);
        return LaurentPoly(u_, std::move(quo));
    }

    LaurentPoly swap_vars(std::size_t i, std::size_t j) const {
        if (i == j) return *this;
        term_map t;
        for (const auto& [e0, c] : t_) {
            Exps e = e0;
            std::swap(e[i], e[j]);
            t.emplace(std::move(e), c);
        }
        return LaurentPoly(u_, std::move(t));
    }

    // Substitute every variable by the image of the same index; images live
    // in dst.  A variable occurring with a negative exponent must map to an
    // invertible monomial.
    LaurentPoly substitute(const UniversePtr& dst, const std::vector<LaurentPoly>& images) const {
        if (images.size() != u_->size()) throw bad_input_error("substitute: one image per variable required");
        for (const auto& im : images) require_same_universe(im.universe(), dst);
        LaurentPoly r = zero(dst);
        for (const auto& [e, c] : t_) {
            LaurentPoly m = constant(dst, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) m = m * images[i].pow(e[i]);
            r += m;
        }
        return r;
    }

    // exact evaluation; values for negatively-exponentiated variables must be nonzero
    Rat evaluate(const std::vector<Rat>& values) const {
        if (values.size() != u_->size()) throw bad_input_error("evaluate: one value per variable required");
        Rat r = 0;
        for (const auto& [e, c] : t_) {
            Rat m(c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (values[i] == 0) {
                    if (e[i] < 0) throw bad_input_error("evaluate: zero raised to negative power");
                    m = 0;
                    break;
                }
                Rat base = e[i] > 0 ? values[i] : Rat(denominator(values[i]), numerator(values[i]));
                for (int k = 0; k < std::abs(e[i]); ++k) m *= base;
            }
            r += m;
        }
        return r;
    }

    // coefficient of the given exponents on the given variables, as a
    // polynomial in the same universe with those variables cleared
    LaurentPoly coefficient_of(const std::vector<std::size_t>& vars, const Exps& exps) const {
        if (vars.size() != exps.size()) throw bad_input_error("coefficient_of: mismatched lengths");
        term_map t;
        for (const auto& [e, c] : t_) {
            bool match = true;
            for (std::size_t k = 0; k < vars.size(); ++k)
                if (e[vars[k]] != exps[k]) { match = false; break; }
            if (!match) continue;
            Exps r = e;
            for (std::size_t k = 0; k < vars.size(); ++k) r[vars[k]] = 0;
            t.emplace(std::move(r), c);
        }
        return LaurentPoly(u_, std::move(t));
    }

    // move this polynomial into another universe, matching variables by name;
    // variables absent from dst must not occur
    LaurentPoly transport(const UniversePtr& dst) const {
        std::vector<int> where(u_->size());
        for (std::size_t i = 0; i < u_->size(); ++i) where[i] = dst->index_of(u_->name(i));
        term_map t;
        for (const auto& [e, c] : t_) {
            Exps r(dst->size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (where[i] < 0)
                    throw universe_mismatch_error("transport drops used variable " + u_->name(i));
                r[static_cast<std::size_t>(where[i])] = e[i];
            }
            check_policy(*dst, r);
            t.emplace(std::move(r), c);
        }
        return LaurentPoly(dst, std::move(t));
    }

    // extremes of the total degree restricted to a subset of variables
    long long max_degree_in(const std::vector<std::size_t>& vars) const {
        long long best = 0;
        bool first = true;
        for (const auto& [e, c] : t_) {
            long long s = 0;
            for (auto v : vars) s += e[v];
            if (first || s > best) { best = s; first = false; }
        }
        return best;
    }
    long long min_degree_in(const std::vector<std::size_t>& vars) const {
        long long best = 0;
        bool first = true;
        for (const auto& [e, c] : t_) {
            long long s = 0;
            for (auto v : vars) s += e[v];
            if (first || s < best) { best = s; first = false; }
        }
        return best;
    }

    std::string to_pretty_string() const {
        if (t_.empty()) return "0";
        // leading term first
        std::vector<const term_map::value_type*> ts;
        for (const auto& t : t_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(),
                  [](const auto* a, const auto* b) { return glex_less(b->first, a->first); });
        std::ostringstream os;
        bool first = true;
        for (const auto* t : ts) {
            Int c = t->second;
            bool neg = c < 0;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            Int ac = neg ? Int(-c) : c;
            std::string vars = monomial_string(t->first);
            if (vars.empty()) os << ac.str();
            else {
                if (ac != 1) os << ac.str() << "*";
                os << vars;
            }
        }
        return os.str();
    }

    // terms ordered leading-first, for serialization
    std::vector<std::pair<Exps, Int>> sorted_terms() const {
        std::vector<std::pair<Exps, Int>> ts(t_.begin(), t_.end());
        std::sort(ts.begin(), ts.end(),
                  [](const auto& a, const auto& b) { return glex_less(b.first, a.first); });
        return ts;
    }

private:
    LaurentPoly(UniversePtr u, term_map t) : u_(std::move(u)), t_(std::move(t)) {
        for (const auto& [e, c] : t_) check_policy(*u_, e);
    }

    static void check_policy(const VarUniverse& u, const Exps& e) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 && u.policy(i) == exponent_policy::nonnegative)
                throw not_polynomial_error("negative exponent on variable " + u.name(i));
    }

    void add_term(const Exps& e, const Int& c) {
        if (c == 0) return;
        check_policy(*u_, e);
        add_term_unchecked(e, c);
    }
    void add_term_unchecked(const Exps& e, const Int& c) {
        if (c == 0) return;
        auto it = t_.find(e);
        if (it == t_.end()) t_.emplace(e, c);
        else if ((it->second += c) == 0) t_.erase(it);
    }

    std::string monomial_string(const Exps& e) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) os << "*";
            os << u_->name(i);
            if (e[i] != 1) os << "^" << e[i];
            first = false;
        }
        return os.str();
    }

    UniversePtr u_;
    term_map t_;
};

// Solve a square rational linear system by Gaussian elimination.
// Returns false if the matrix is singular.
inline bool solve_rational(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs,
                           std::vector<Rat>& out) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    out.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
    return true;
}

// A ring homomorphism sending each source variable to a single target
// monomial with coefficient 1.  Supports exact preimages when the induced
// map on exponent lattices is square with nonzero determinant.
class MonomialMap {
public:
    MonomialMap(UniversePtr src, UniversePtr dst, std::vector<Exps> images)
        : src_(std::move(src)), dst_(std::move(dst)), img_(std::move(images)) {
        if (img_.size() != src_->size()) throw bad_input_error("one image per source variable required");
        for (const auto& e : img_)
            if (e.size() != dst_->size()) throw bad_input_error("image exponent width mismatch");
    }

    const UniversePtr& source() const { return src_; }
    const UniversePtr& target() const { return dst_; }
    const std::vector<Exps>& images() const { return img_; }

    LaurentPoly apply(const LaurentPoly& p) const {
        require_same_universe(p.universe(), src_);
        LaurentPoly r = LaurentPoly::zero(dst_);
        for (const auto& [e, c] : p.terms()) {
            Exps t(dst_->size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0)
                    for (std::size_t j = 0; j < t.size(); ++j) t[j] += e[i] * img_[i][j];
            r += LaurentPoly::monomial(dst_, std::move(t), c);
        }
        return r;
    }

    // determinant of the exponent lattice matrix (square maps only)
    Int lattice_determinant() const {
        if (src_->size() != dst_->size())
            throw bad_input_error("lattice determinant requires a square map");
        const std::size_t n = src_->size();
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) m[i][j] = Rat(img_[j][i]);
        // fraction-free enough at this size: plain rational elimination
        Rat det = 1;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && m[piv][col] == 0) ++piv;
            if (piv == n) return 0;
            if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
            det *= m[col][col];
            for (std::size_t r = col + 1; r < n; ++r) {
                if (m[r][col] == 0) continue;
                Rat f = m[r][col] / m[col][col];
                for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            }
        }
        if (denominator(det) != 1) throw consistency_error_base("non-integer lattice determinant");
        return numerator(det);
    }

    // Unique preimage under an injective (square, determinant != 0) map.
    // Throws not_in_image_error when a term's exponent vector has no integral
    // solution.
    LaurentPoly preimage(const LaurentPoly& p) const {
        require_same_universe(p.universe(), dst_);
        if (src_->size() != dst_->size())
            throw bad_input_error("preimage requires a square map");
        const std::size_t n = src_->size();
        if (lattice_determinant() == 0)
            throw bad_input_error("preimage requires an injective lattice map");
        LaurentPoly r = LaurentPoly::zero(src_);
        for (const auto& [e, c] : p.terms()) {
            std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
            std::vector<Rat> rhs(n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) m[i][j] = Rat(img_[j][i]);
            for (std::size_t i = 0; i < n; ++i) rhs[i] = Rat(e[i]);
            std::vector<Rat> sol;
            if (!solve_rational(std::move(m), std::move(rhs), sol))
                throw not_in_image_error("singular lattice system");
            Exps v(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (denominator(sol[i]) != 1)
                    throw not_in_image_error("monomial has no integral preimage");
                Int num = numerator(sol[i]);
                v[i] = static_cast<int>(num.convert_to<long long>());
            }
            r += LaurentPoly::monomial(src_, std::move(v), c);
        }
        return r;
    }

private:
    UniversePtr src_, dst_;
    std::vector<Exps> img_;
};

} // namespace schubertk

#endif
