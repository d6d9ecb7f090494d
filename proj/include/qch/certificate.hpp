/**
 * @file certificate.hpp
 * @brief Machine-readable verification certificates and their stream writer.
 *
 * Each certificate binds one claim to one exact computation. Claim ids embed
 * the source equation number and a quote-derived slug so they stay matchable
 * if equation numbering drifts. Field order is fixed; streams for identical
 * inputs are byte-identical (wall_ms stays 0 unless timings are requested).
 */
#pragma once

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qch {

inline constexpr const char* kEngineVersion = "qch 0.1.0";

/// fixed description of the conventions every certificate was produced under
inline nlohmann::ordered_json conventions_block() {
    nlohmann::ordered_json c;
    c["rhat"] = "q on (ii,ii); 1 on (ji,ij), i != j; lambda on (ij,ij), i < j";
    c["eps"] = "eps(1..N) = 1; (-q)^inversions; R_i eigenvalue -1/q on both sides";
    c["qsamples"] = nlohmann::ordered_json::array({"3/5", "7/2"});
    c["prng"] = "mt19937_64; num = (r % 21) - 10, den = (r % 10) + 1";
    return c;
}

struct Certificate {
    std::string id;    // e.g. "eq2.11-newton-i2-n3"
    std::string slug;  // e.g. "connected-by-the-relations"
    int n = 0;
    std::vector<std::pair<std::string, std::string>> params;  // insertion-ordered
    bool pass = false;
    std::string witness;  // canonical residual text, empty on pass
    long wall_ms = 0;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["id"] = id;
        j["slug"] = slug;
        j["n"] = n;
        auto& p = j["params"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : params) p[k] = v;
        j["status"] = pass ? "pass" : "fail";
        j["witness"] = witness;
        j["wall_ms"] = wall_ms;
        j["engine"] = kEngineVersion;
        j["conventions"] = conventions_block();
        return j;
    }

    std::string text_line() const {
        std::string line = pass ? "PASS " : "FAIL ";
        line += id;
        for (const auto& [k, v] : params) line += " " + k + "=" + v;
        if (!pass && !witness.empty()) line += " :: " + witness;
        if (wall_ms > 0) line += " [" + std::to_string(wall_ms) + "ms]";
        return line;
    }
};

/// serializes certificates in arrival order; one JSON object or text line each
class CertificateStream {
public:
    CertificateStream(std::ostream& out, bool json, bool timings)
        : out_(out), json_(json), timings_(timings) {}

    void emit(Certificate c) {
        if (!timings_) c.wall_ms = 0;
        if (json_)
            out_ << c.to_json().dump() << "\n";
        else
            out_ << c.text_line() << "\n";
        all_pass_ = all_pass_ && c.pass;
        ++count_;
    }

    /// run `body` (returning a certificate), stamping its wall time
    template <class F>
    void timed(F&& body) {
        auto t0 = std::chrono::steady_clock::now();
        Certificate c = body();
        auto t1 = std::chrono::steady_clock::now();
        c.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        emit(std::move(c));
    }

    bool all_pass() const { return all_pass_; }
    long count() const { return count_; }

private:
    std::ostream& out_;
    bool json_;
    bool timings_;
    bool all_pass_ = true;
    long count_ = 0;
};

}  // namespace qch
