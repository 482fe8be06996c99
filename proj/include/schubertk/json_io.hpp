#ifndef SCHUBERTK_JSON_IO_HPP
#define SCHUBERTK_JSON_IO_HPP

// JSON serialization: Laurent polynomials as arrays of {"coeff", "exps"}
// objects in descending graded-lex term order, partitions as integer arrays
// padded to d entries, expansion maps keyed by the partition array rendered
// as a string.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkm.hpp"
#include "ring.hpp"
#include "shapes.hpp"

namespace schubertk {

using ordered_json = nlohmann::ordered_json;

inline ordered_json poly_to_json(const LaurentPoly& p) {
    ordered_json arr = ordered_json::array();
    const UniversePtr& u = p.universe();
    for (const auto& [e, c] : p.sorted_terms()) {
        ordered_json term;
        term["coeff"] = c.str();
        ordered_json exps = ordered_json::object();
        for (std::size_t v = 0; v < u->size(); ++v)
            if (e[v] != 0) exps[u->name(v)] = e[v];
        term["exps"] = std::move(exps);
        arr.push_back(std::move(term));
    }
    return arr;
}

inline ordered_json partition_to_json(const Partition& p, int d) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < d; ++i) arr.push_back(p.part(i));
    return arr;
}

inline std::string partition_key(const Partition& p, int d) {
    return partition_to_json(p, d).dump();
}

inline ordered_json symbol_to_json(const SchubertSymbol& s) {
    ordered_json obj;
    obj["symbol"] = s;
    return obj;
}

// expansion maps are emitted in dictionary order for deterministic output
inline ordered_json expansion_to_json(const std::map<Partition, LaurentPoly>& m, int d) {
    std::vector<const Partition*> keys;
    keys.reserve(m.size());
    for (const auto& [p, v] : m) keys.push_back(&p);
    std::sort(keys.begin(), keys.end(),
              [d](const Partition* a, const Partition* b) { return dict_less(*a, *b, d); });
    ordered_json obj = ordered_json::object();
    for (const Partition* p : keys) obj[partition_key(*p, d)] = poly_to_json(m.at(*p));
    return obj;
}

inline ordered_json int_expansion_to_json(const std::map<Partition, Int>& m, int d) {
    std::vector<const Partition*> keys;
    keys.reserve(m.size());
    for (const auto& [p, v] : m) keys.push_back(&p);
    std::sort(keys.begin(), keys.end(),
              [d](const Partition* a, const Partition* b) { return dict_less(*a, *b, d); });
    ordered_json obj = ordered_json::object();
    for (const Partition* p : keys) obj[partition_key(*p, d)] = m.at(*p).str();
    return obj;
}

// GrothExpansion schema: array of {"partition": [...], "coeff": poly}
inline ordered_json groth_expansion_to_json(const GrothExpansion& ex) {
    std::vector<const Partition*> keys;
    for (const auto& [p, v] : ex.coeffs) keys.push_back(&p);
    std::sort(keys.begin(), keys.end(), [&ex](const Partition* a, const Partition* b) {
        return dict_less(*a, *b, ex.d);
    });
    ordered_json arr = ordered_json::array();
    for (const Partition* p : keys) {
        ordered_json item;
        item["partition"] = partition_to_json(*p, ex.d);
        item["coeff"] = poly_to_json(ex.coeffs.at(*p));
        arr.push_back(std::move(item));
    }
    return arr;
}

inline ordered_json int_groth_expansion_to_json(const std::map<Partition, Int>& m, int d,
                                                const UniversePtr& coeff_universe) {
    std::vector<const Partition*> keys;
    for (const auto& [p, v] : m) keys.push_back(&p);
    std::sort(keys.begin(), keys.end(),
              [d](const Partition* a, const Partition* b) { return dict_less(*a, *b, d); });
    ordered_json arr = ordered_json::array();
    for (const Partition* p : keys) {
        ordered_json item;
        item["partition"] = partition_to_json(*p, d);
        item["coeff"] = poly_to_json(LaurentPoly::constant(coeff_universe, m.at(*p)));
        arr.push_back(std::move(item));
    }
    return arr;
}

// u-polynomial as the multiset table {"I": [...], "coeff": int}
inline ordered_json u_expansion_to_json(const LaurentPoly& upoly) {
    ordered_json arr = ordered_json::array();
    for (const auto& [multiset, c] : u_expansion_terms(upoly)) {
        ordered_json item;
        item["I"] = multiset;
        item["coeff"] = c.str();
        arr.push_back(std::move(item));
    }
    return arr;
}

// ---- input parsing ----------------------------------------------------

inline std::vector<Int> parse_int_list(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == ',') s += ' ';
        else s += ch;
    }
    std::istringstream in(s);
    std::vector<Int> out;
    std::string tok;
    while (in >> tok) {
        try {
            out.emplace_back(tok);
        } catch (const std::exception&) {
            throw bad_input_error("not an integer: '" + tok + "'");
        }
    }
    return out;
}

inline Partition parse_partition(const std::string& text) {
    std::vector<Int> raw = parse_int_list(text);
    std::vector<int> parts;
    parts.reserve(raw.size());
    for (const Int& v : raw) {
        if (v < 0 || v > 1000000) throw bad_input_error("partition part out of range");
        parts.push_back(v.convert_to<int>());
    }
    return Partition(parts);
}

// weight vectors may be passed inline or as a path to a file holding the
// same comma/whitespace separated list (a JSON integer array also parses)
inline std::vector<Int> parse_weight_vector(const std::string& arg) {
    std::ifstream f(arg);
    if (f.good()) {
        std::stringstream buf;
        buf << f.rdbuf();
        return parse_int_list(buf.str());
    }
    return parse_int_list(arg);
}

} // namespace schubertk

#endif
