#pragma once

#include "plab/common.hpp"

#include <json.hpp>

namespace plab {

using Json = nlohmann::ordered_json;

// Deterministic serializer: floating values at 17 significant digits, insertion
// order preserved.  The library's own dump() uses shortest-round-trip floats,
// which would not honor the fixed-width contract.
inline void dump_json(const Json& j, std::string& out, int indent, int depth) {
    auto pad = [&](int d) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<size_t>(indent) * d, ' ');
        }
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                pad(depth + 1);
                out += Json(it.key()).dump();
                out += indent >= 0 ? ": " : ":";
                dump_json(it.value(), out, indent, depth + 1);
            }
            pad(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (auto& v : j) {
                if (!first) out += ',';
                first = false;
                pad(depth + 1);
                dump_json(v, out, indent, depth + 1);
            }
            pad(depth);
            out += ']';
            return;
        }
        case Json::value_t::number_float: {
            double v = j.get<double>();
            if (std::isfinite(v))
                out += fmt_g17(v);
            else
                out += v > 0 ? "\"inf\"" : (v < 0 ? "\"-inf\"" : "\"nan\"");
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

inline std::string dump_report(const Json& j, int indent = 2) {
    std::string out;
    dump_json(j, out, indent, 0);
    out += '\n';
    return out;
}

inline Json json_vec(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

}  // namespace plab
