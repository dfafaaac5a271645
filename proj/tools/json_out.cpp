#include "json_out.hpp"

#include <cmath>
#include <cstdio>

namespace dq::cli {

Json complex_json(std::complex<double> z) {
    Json j = Json::object();
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void write_string(std::string& out, const std::string& s) {
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
}

void write(std::string& out, const Json& v, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close(2 * depth, ' ');
    switch (v.type()) {
        case Json::value_t::null: out += "null"; break;
        case Json::value_t::boolean: out += v.get<bool>() ? "true" : "false"; break;
        case Json::value_t::number_integer: out += std::to_string(v.get<std::int64_t>()); break;
        case Json::value_t::number_unsigned: out += std::to_string(v.get<std::uint64_t>()); break;
        case Json::value_t::number_float: {
            const double x = v.get<double>();
            out += std::isfinite(x) ? format_double(x) : "null";
            break;
        }
        case Json::value_t::string: write_string(out, v.get_ref<const std::string&>()); break;
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                out += pad;
                write(out, v[i], depth + 1);
                out += i + 1 < v.size() ? ",\n" : "\n";
            }
            out += close + "]";
            break;
        }
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = v.begin(); it != v.end(); ++it, ++i) {
                out += pad;
                write_string(out, it.key());
                out += ": ";
                write(out, it.value(), depth + 1);
                out += i + 1 < v.size() ? ",\n" : "\n";
            }
            out += close + "}";
            break;
        }
        default: out += "null";
    }
}

}  // namespace

std::string dump(const Json& value) {
    std::string out;
    write(out, value, 0);
    out += '\n';
    return out;
}

}  // namespace dq::cli
