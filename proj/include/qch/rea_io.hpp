/**
 * @file rea_io.hpp
 * @brief JSON serialization of rewrite systems and ncpoly-valued tensors.
 */
#pragma once

#include <json.hpp>

#include "qch/rea.hpp"
#include "qch/tensor_io.hpp"

namespace qch {

/// rules as a JSON list: { "lhs": ["l_2_1","l_1_2"], "tail": [{"word": [...], "coeff": text}] }
inline nlohmann::ordered_json rewrite_system_to_json(const RewriteSystem& rs) {
    int N = rs.N();
    auto j = nlohmann::ordered_json::array();
    for (const auto& [lhs, tail] : rs.rules()) {
        nlohmann::ordered_json rule;
        rule["lhs"] = nlohmann::ordered_json::array(
            {gen_text(lhs.first, N), gen_text(lhs.second, N)});
        auto& t = rule["tail"] = nlohmann::ordered_json::array();
        for (const auto& [w, c] : tail.terms()) {
            nlohmann::ordered_json term;
            auto& word = term["word"] = nlohmann::ordered_json::array();
            for (Gen g : w) word.push_back(gen_text(g, N));
            term["coeff"] = c.text();
            t.push_back(std::move(term));
        }
        j.push_back(std::move(rule));
    }
    return j;
}

inline Gen parse_gen(const std::string& s, int N) {
    if (s.size() < 5 || s.compare(0, 2, "l_") != 0)
        throw std::invalid_argument("parse_gen: bad generator '" + s + "'");
    size_t sep = s.find('_', 2);
    if (sep == std::string::npos) throw std::invalid_argument("parse_gen: bad generator '" + s + "'");
    int i = std::stoi(s.substr(2, sep - 2));
    int j = std::stoi(s.substr(sep + 1));
    if (i < 1 || i > N || j < 1 || j > N)
        throw std::invalid_argument("parse_gen: index out of range in '" + s + "'");
    return gen_code(i, j, N);
}

/// inverse of NCPoly::text(N)
inline NCPoly parse_ncpoly(const std::string& s, int N) {
    NCPoly p;
    if (s == "0") return p;
    size_t pos = 0;
    while (pos < s.size()) {
        // find the end of this term: a " + " at paren depth zero
        int depth = 0;
        size_t end = s.size();
        for (size_t k = pos; k < s.size(); ++k) {
            if (s[k] == '(') ++depth;
            if (s[k] == ')') --depth;
            if (depth == 0 && s.compare(k, 3, " + ") == 0) {
                end = k;
                break;
            }
        }
        std::string term = s.substr(pos, end - pos);
        if (term.empty() || term.front() != '(')
            throw std::invalid_argument("parse_ncpoly: bad term '" + term + "'");
        // the coefficient is the leading parenthesized group
        int d = 0;
        size_t close = std::string::npos;
        for (size_t k = 0; k < term.size(); ++k) {
            if (term[k] == '(') ++d;
            if (term[k] == ')' && --d == 0) {
                close = k;
                break;
            }
        }
        if (close == std::string::npos)
            throw std::invalid_argument("parse_ncpoly: unbalanced term '" + term + "'");
        RatFunc c = RatFunc::parse(term.substr(1, close - 1));
        Word w;
        size_t wpos = close + 1;
        while (wpos < term.size()) {
            if (term[wpos] != '*')
                throw std::invalid_argument("parse_ncpoly: expected '*' in '" + term + "'");
            size_t next = term.find('*', wpos + 1);
            if (next == std::string::npos) next = term.size();
            w.push_back(parse_gen(term.substr(wpos + 1, next - wpos - 1), N));
            wpos = next;
        }
        p.add_term(w, c);
        pos = (end == s.size()) ? end : end + 3;
    }
    return p;
}

inline nlohmann::ordered_json tensor_op_to_json(const TensorOp<NCPoly>& op, int N) {
    nlohmann::ordered_json j;
    j["dim"] = op.dim();
    j["legs"] = op.legs();
    j["ring"] = "ncpoly";
    auto& entries = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [k, v] : op.entries()) {
        nlohmann::ordered_json e;
        e["row"] = decode_index(k.first, op.dim(), op.legs());
        e["col"] = decode_index(k.second, op.dim(), op.legs());
        e["coeff"] = v.text(N);
        entries.push_back(std::move(e));
    }
    return j;
}

inline TensorOp<NCPoly> tensor_op_ncpoly_from_json(const nlohmann::json& j, int N) {
    if (j.at("ring").get<std::string>() != "ncpoly")
        throw std::invalid_argument("tensor load: expected ring 'ncpoly'");
    TensorOp<NCPoly> op(j.at("dim").get<int>(), j.at("legs").get<int>());
    for (const auto& e : j.at("entries"))
        op.add_entry(e.at("row").get<MultiIndex>(), e.at("col").get<MultiIndex>(),
                     parse_ncpoly(e.at("coeff").get<std::string>(), N));
    return op;
}

}  // namespace qch
