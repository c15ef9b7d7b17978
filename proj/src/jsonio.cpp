#include "rotdil/jsonio.hpp"

#include <cstdio>

namespace rotdil {

std::string format_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v + 0.0);  // normalizes -0
    return buf;
}

static void dump_value(const nlohmann::ordered_json& j, std::string& out) {
    using value_t = nlohmann::ordered_json::value_t;
    switch (j.type()) {
        case value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::ordered_json(it.key()).dump();
                out += ':';
                dump_value(it.value(), out);
            }
            out += '}';
            break;
        }
        case value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ',';
                first = false;
                dump_value(item, out);
            }
            out += ']';
            break;
        }
        case value_t::number_float:
            out += format_real(j.get<double>());
            break;
        default:
            out += j.dump();  // null, bool, integers, strings
            break;
    }
}

std::string dump_canonical(const nlohmann::ordered_json& j) {
    std::string out;
    dump_value(j, out);
    return out;
}

}  // namespace rotdil
