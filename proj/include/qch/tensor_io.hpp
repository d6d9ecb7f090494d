/**
 * @file tensor_io.hpp
 * @brief JSON dump/load of operators and cotensors.
 *
 * Format: { "dim": N, "legs": k, "ring": "laurent"|"ratfunc"|"ncpoly",
 *           "entries": [ { "row": [...], "col": [...], "coeff": text } ] }
 * Entries are ordered by encoded (row, col); round-trips are bit-exact.
 * Cotensors use the same format with an empty "col".
 */
#pragma once

#include <string>

#include <json.hpp>

#include "qch/tensor.hpp"

namespace qch {

template <class R>
struct RingTag;
template <>
struct RingTag<LaurentPoly> {
    static constexpr const char* name = "laurent";
    static std::string text(const LaurentPoly& c) { return c.text(); }
    static LaurentPoly parse(const std::string& s) { return LaurentPoly::parse(s); }
};
template <>
struct RingTag<RatFunc> {
    static constexpr const char* name = "ratfunc";
    static std::string text(const RatFunc& c) { return c.text(); }
    static RatFunc parse(const std::string& s) { return RatFunc::parse(s); }
};

template <class R>
nlohmann::ordered_json tensor_op_to_json(const TensorOp<R>& op) {
    nlohmann::ordered_json j;
    j["dim"] = op.dim();
    j["legs"] = op.legs();
    j["ring"] = RingTag<R>::name;
    auto& entries = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [k, v] : op.entries()) {
        nlohmann::ordered_json e;
        e["row"] = decode_index(k.first, op.dim(), op.legs());
        e["col"] = decode_index(k.second, op.dim(), op.legs());
        e["coeff"] = RingTag<R>::text(v);
        entries.push_back(std::move(e));
    }
    return j;
}

template <class R>
nlohmann::ordered_json cotensor_to_json(const CoTensor<R>& v) {
    nlohmann::ordered_json j;
    j["dim"] = v.dim();
    j["legs"] = v.legs();
    j["ring"] = RingTag<R>::name;
    auto& entries = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [idx, c] : v.entries()) {
        nlohmann::ordered_json e;
        e["row"] = decode_index(idx, v.dim(), v.legs());
        e["col"] = nlohmann::ordered_json::array();
        e["coeff"] = RingTag<R>::text(c);
        entries.push_back(std::move(e));
    }
    return j;
}

template <class R>
std::string dump_tensor_op(const TensorOp<R>& op) {
    return tensor_op_to_json(op).dump(2) + "\n";
}

template <class R>
std::string dump_cotensor(const CoTensor<R>& v) {
    return cotensor_to_json(v).dump(2) + "\n";
}

template <class R>
TensorOp<R> tensor_op_from_json(const nlohmann::json& j) {
    if (j.at("ring").get<std::string>() != RingTag<R>::name)
        throw std::invalid_argument("tensor load: ring tag mismatch, expected " +
                                    std::string(RingTag<R>::name));
    TensorOp<R> op(j.at("dim").get<int>(), j.at("legs").get<int>());
    for (const auto& e : j.at("entries")) {
        op.add_entry(e.at("row").get<MultiIndex>(), e.at("col").get<MultiIndex>(),
                     RingTag<R>::parse(e.at("coeff").get<std::string>()));
    }
    return op;
}

template <class R>
CoTensor<R> cotensor_from_json(const nlohmann::json& j) {
    if (j.at("ring").get<std::string>() != RingTag<R>::name)
        throw std::invalid_argument("cotensor load: ring tag mismatch");
    CoTensor<R> v(j.at("dim").get<int>(), j.at("legs").get<int>());
    for (const auto& e : j.at("entries"))
        v.add_entry(e.at("row").get<MultiIndex>(),
                    RingTag<R>::parse(e.at("coeff").get<std::string>()));
    return v;
}

inline TensorOp<LaurentPoly> load_tensor_op_laurent(const std::string& s) {
    return tensor_op_from_json<LaurentPoly>(nlohmann::json::parse(s));
}
inline TensorOp<RatFunc> load_tensor_op_ratfunc(const std::string& s) {
    return tensor_op_from_json<RatFunc>(nlohmann::json::parse(s));
}
inline CoTensor<LaurentPoly> load_cotensor_laurent(const std::string& s) {
    return cotensor_from_json<LaurentPoly>(nlohmann::json::parse(s));
}

}  // namespace qch
