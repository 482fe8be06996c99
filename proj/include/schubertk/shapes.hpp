#ifndef SCHUBERTK_SHAPES_HPP
#define SCHUBERTK_SHAPES_HPP

// Partitions in a d x (n-d) box, Schubert symbols, the Bruhat (containment)
// partial order, the dictionary total order, reversal/inversion sets, simple
// reflections, one-box-per-row-and-column steps, and the k-step chains used
// by the iterated Chevalley formula.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ring.hpp"

namespace schubertk {

class undefined_ratio_error : public consistency_error_base {
public:
    explicit undefined_ratio_error(const std::string& m) : consistency_error_base(m) {}
};

// Weakly decreasing nonnegative parts, stored with trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
        for (std::size_t i = 0; i + 1 < p_.size(); ++i)
            if (p_[i] < p_[i + 1]) throw bad_input_error("parts must be weakly decreasing");
        if (!p_.empty() && p_.back() < 0) throw bad_input_error("parts must be nonnegative");
        while (!p_.empty() && p_.back() == 0) p_.pop_back();
    }

    int length() const { return static_cast<int>(p_.size()); }
    int part(int i) const { return i >= 0 && i < length() ? p_[static_cast<std::size_t>(i)] : 0; }
    int first() const { return part(0); }
    long long weight() const {
        long long s = 0;
        for (int v : p_) s += v;
        return s;
    }
    const std::vector<int>& parts() const { return p_; }
    std::vector<int> padded(int d) const {
        std::vector<int> r(static_cast<std::size_t>(d), 0);
        for (int i = 0; i < length() && i < d; ++i) r[static_cast<std::size_t>(i)] = p_[static_cast<std::size_t>(i)];
        return r;
    }
    std::string to_string(int d) const {
        std::string s = "[";
        auto v = padded(d);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "]";
    }

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // container order only; use bruhat_leq / dict_less for the mathematical orders
    bool operator<(const Partition& o) const { return p_ < o.p_; }

private:
    std::vector<int> p_;
};

using SchubertSymbol = std::vector<int>;

inline bool in_box(const Partition& p, int d, int n) {
    return p.length() <= d && p.first() <= n - d;
}

// symbol entries are the jump positions: entry i (1-based) is part(d+1-i) + i
inline SchubertSymbol to_symbol(const Partition& p, int d) {
    if (p.length() > d) throw bad_input_error("partition has more than d parts");
    SchubertSymbol s(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) s[static_cast<std::size_t>(i - 1)] = p.part(d - i) + i;
    return s;
}

inline Partition to_partition(const SchubertSymbol& s) {
    const int d = static_cast<int>(s.size());
    std::vector<int> parts(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) {
        int v = s[static_cast<std::size_t>(i - 1)] - i;
        if (v < 0) throw bad_input_error("symbol entries must satisfy s_i >= i");
        parts[static_cast<std::size_t>(d - i)] = v;
    }
    return Partition(std::move(parts));
}

inline bool valid_symbol(const SchubertSymbol& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

// Bruhat order: containment of Young diagrams (componentwise on symbols)
inline bool bruhat_leq(const Partition& a, const Partition& b) {
    for (int i = 0; i < a.length(); ++i)
        if (a.part(i) > b.part(i)) return false;
    return true;
}

// dictionary order: lexicographic on symbols, i.e. on reversed padded parts
inline bool dict_less(const Partition& a, const Partition& b, int d) {
    for (int i = d - 1; i >= 0; --i) {
        if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
    }
    return false;
}

inline long long colength(const Partition& p, int d, int n) {
    return static_cast<long long>(d) * (n - d) - p.weight();
}

// all partitions in the d x (n-d) box, in dictionary order
inline std::vector<Partition> enumerate_box(int d, int n) {
    if (d < 1 || n <= d) throw bad_input_error("need 1 <= d < n");
    std::vector<Partition> out;
    // enumerate symbols in lexicographic order
    SchubertSymbol s(static_cast<std::size_t>(d));
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == d) {
            out.push_back(to_partition(s));
            return;
        }
        for (int v = lo; v <= n - (d - 1 - pos); ++v) {
            s[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    return out;
}

// mu = (s,s') lambda for s in the symbol, s' not in it.  Reversals use
// s' < s (results strictly below lambda), inversions s' > s (strictly above).
inline std::vector<Partition> reversals(const Partition& p, int d, int n) {
    SchubertSymbol sym = to_symbol(p, d);
    std::set<int> members(sym.begin(), sym.end());
    std::vector<Partition> out;
    for (int s : sym)
        for (int t = 1; t < s; ++t) {
            if (members.count(t)) continue;
            SchubertSymbol r;
            for (int v : sym) r.push_back(v == s ? t : v);
            std::sort(r.begin(), r.end());
            if (valid_symbol(r, n)) out.push_back(to_partition(r));
        }
    std::sort(out.begin(), out.end(),
              [d](const Partition& a, const Partition& b) { return dict_less(a, b, d); });
    return out;
}

inline std::vector<Partition> inversions(const Partition& p, int d, int n) {
    SchubertSymbol sym = to_symbol(p, d);
    std::set<int> members(sym.begin(), sym.end());
    std::vector<Partition> out;
    for (int s : sym)
        for (int t = s + 1; t <= n; ++t) {
            if (members.count(t)) continue;
            SchubertSymbol r;
            for (int v : sym) r.push_back(v == s ? t : v);
            std::sort(r.begin(), r.end());
            if (valid_symbol(r, n)) out.push_back(to_partition(r));
        }
    std::sort(out.begin(), out.end(),
              [d](const Partition& a, const Partition& b) { return dict_less(a, b, d); });
    return out;
}

// simple reflection s_i exchanges i and i+1 in the symbol.
// cmp: -1 if the result is strictly below, +1 strictly above, 0 fixed.
struct reflection_result {
    Partition value;
    int cmp = 0;
};

inline reflection_result simple_reflection(int i, const Partition& p, int d) {
    SchubertSymbol sym = to_symbol(p, d);
    std::set<int> members(sym.begin(), sym.end());
    bool has_i = members.count(i) > 0, has_i1 = members.count(i + 1) > 0;
    if (has_i == has_i1) return {p, 0};
    SchubertSymbol r;
    for (int v : sym) {
        if (v == i) r.push_back(i + 1);
        else if (v == i + 1) r.push_back(i);
        else r.push_back(v);
    }
    std::sort(r.begin(), r.end());
    return {to_partition(r), has_i1 ? -1 : +1};
}

// lambda => mu: containment with at most one new box in every row and column
inline bool single_step(const Partition& a, const Partition& b) {
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        int diff = b.part(i) - a.part(i);
        if (diff < 0 || diff > 1) return false;
    }
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            if (b.part(i) - a.part(i) == 1 && b.part(j) - a.part(j) == 1 && a.part(i) == a.part(j))
                return false;  // same column
    return true;
}

// all mu with lambda => mu and mu_1 <= cap (lambda itself included)
inline std::vector<Partition> step_targets(const Partition& a, int d, int cap) {
    std::vector<Partition> out;
    const int rows = d;
    for (unsigned mask = 0; mask < (1u << rows); ++mask) {
        std::vector<int> parts(static_cast<std::size_t>(rows));
        bool ok = true;
        for (int i = 0; i < rows; ++i)
            parts[static_cast<std::size_t>(i)] = a.part(i) + ((mask >> i) & 1u);
        for (int i = 0; i + 1 < rows && ok; ++i)
            if (parts[static_cast<std::size_t>(i)] < parts[static_cast<std::size_t>(i + 1)]) ok = false;
        if (!ok || parts[0] > cap) continue;
        Partition b(parts);
        if (single_step(a, b)) out.push_back(b);
    }
    std::sort(out.begin(), out.end(),
              [d](const Partition& x, const Partition& y) { return dict_less(x, y, d); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct ChainKey {
    Partition start;
    long long k = 0;
    Partition end;
    bool operator<(const ChainKey& o) const {
        if (!(start == o.start)) return start < o.start;
        if (k != o.k) return k < o.k;
        return end < o.end;
    }
};

using Chain = std::vector<Partition>;

// Enumerates the k-step chains lambda = nu^1 => nu^2, with every later step
// nu^i ->(d_{lambda,nu^i}) nu^{i+1} a recursively defined reachability, where
// d_{lambda,nu} = c(lambda)/c(nu).  The weight function c is supplied by the
// caller (identically 1 in the unweighted setting); it must divide along the
// dictionary order, and intermediates stay inside max_part.
class ChainContext {
public:
    ChainContext(int d, int max_part, std::function<Int(const Partition&)> c_of)
        : d_(d), cap_(max_part), c_(std::move(c_of)) {}

    int dim() const { return d_; }
    int cap() const { return cap_; }

    Int c_of(const Partition& p) const {
        if (p.length() > d_ || p.first() > cap_)
            throw undefined_ratio_error("weight requested outside the chain domain");
        return c_(p);
    }

    // d_{lo,hi} = c(lo)/c(hi), integral by divisiveness
    Int ratio(const Partition& lo, const Partition& hi) const {
        Int a = c_of(lo), b = c_of(hi);
        if (b == 0 || a % b != 0)
            throw undefined_ratio_error("weight ratio is not an integer");
        return a / b;
    }

    bool reachable(const ChainKey& key) {
        auto it = reach_.find(key);
        if (it != reach_.end()) return it->second;
        bool r = compute_reachable(key);
        reach_.emplace(key, r);
        return r;
    }

    const std::vector<Chain>& chains(const ChainKey& key) {
        auto it = chains_.find(key);
        if (it != chains_.end()) return it->second;
        std::vector<Chain> out;
        if (key.k == 0) {
            if (key.start == key.end) out.push_back({key.start});
        } else if (bruhat_leq(key.start, key.end)) {
            Chain prefix{key.start};
            extend(key, prefix, out);
        }
        return chains_.emplace(key, std::move(out)).first->second;
    }

private:
    bool compute_reachable(const ChainKey& key) {
        if (key.k == 0) return key.start == key.end;
        if (!bruhat_leq(key.start, key.end)) return false;
        if (key.k == 1) return single_step(key.start, key.end);
        // existence only: first step single, rest recursive
        for (const Partition& nu2 : step_targets(key.start, d_, cap_)) {
            if (!bruhat_leq(nu2, key.end)) continue;
            if (tail_reachable(key.start, nu2, 2, key))
                return true;
        }
        return false;
    }

    bool tail_reachable(const Partition& origin, const Partition& cur, long long pos, const ChainKey& key) {
        if (pos == key.k + 1) return cur == key.end;
        Int kk = ratio(origin, cur);
        for (const Partition& nxt : interval_above(cur, key.end)) {
            long long kl = kk.convert_to<long long>();
            if (!reachable({cur, kl, nxt})) continue;
            if (tail_reachable(origin, nxt, pos + 1, key)) return true;
        }
        return false;
    }

    void extend(const ChainKey& key, Chain& prefix, std::vector<Chain>& out) {
        const long long pos = static_cast<long long>(prefix.size());
        const Partition& cur = prefix.back();
        if (pos == key.k + 1) {
            if (cur == key.end) out.push_back(prefix);
            return;
        }
        if (pos == 1) {
            for (const Partition& nu2 : step_targets(cur, d_, cap_)) {
                if (!bruhat_leq(nu2, key.end)) continue;
                prefix.push_back(nu2);
                extend(key, prefix, out);
                prefix.pop_back();
            }
            return;
        }
        Int kk = ratio(key.start, cur);
        long long kl = kk.convert_to<long long>();
        for (const Partition& nxt : interval_above(cur, key.end)) {
            if (!reachable({cur, kl, nxt})) continue;
            prefix.push_back(nxt);
            extend(key, prefix, out);
            prefix.pop_back();
        }
    }

    // partitions eta with cur <= eta <= hi in Bruhat order
    std::vector<Partition> interval_above(const Partition& lo, const Partition& hi) {
        std::vector<Partition> out;
        std::vector<int> parts(static_cast<std::size_t>(d_));
        std::function<void(int)> rec = [&](int row) {
            if (row == d_) {
                out.push_back(Partition(parts));
                return;
            }
            int upper = hi.part(row);
            if (row > 0) upper = std::min(upper, parts[static_cast<std::size_t>(row - 1)]);
            for (int v = lo.part(row); v <= upper; ++v) {
                parts[static_cast<std::size_t>(row)] = v;
                rec(row + 1);
            }
        };
        rec(0);
        return out;
    }

    int d_;
    int cap_;
    std::function<Int(const Partition&)> c_;
    std::map<ChainKey, bool> reach_;
    std::map<ChainKey, std::vector<Chain>> chains_;
};

// chain counts for the unweighted (c identically 1) case: every step is a
// single step, so counts are powers of the step adjacency relation
inline Int unit_chain_count(ChainContext& ctx, const ChainKey& key) {
    if (key.k == 0) return key.start == key.end ? 1 : 0;
    std::map<Partition, Int> cur{{key.start, 1}};
    for (long long s = 0; s < key.k; ++s) {
        std::map<Partition, Int> nxt;
        for (const auto& [p, cnt] : cur)
            for (const Partition& q : step_targets(p, ctx.dim(), ctx.cap())) {
                if (!bruhat_leq(q, key.end)) continue;
                nxt[q] += cnt;
            }
        cur = std::move(nxt);
    }
    auto it = cur.find(key.end);
    return it == cur.end() ? Int(0) : it->second;
}

} // namespace schubertk

#endif
