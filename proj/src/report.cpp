#include "mcfs/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mcfs {

Json Json::boolean(bool v) {
    Json j;
    j.type = Type::boolean;
    j.b = v;
    return j;
}

Json Json::number(double v) {
    Json j;
    j.type = Type::number;
    j.num = v;
    return j;
}

Json Json::string_value(std::string v) {
    Json j;
    j.type = Type::string;
    j.str = std::move(v);
    return j;
}

Json Json::array() {
    Json j;
    j.type = Type::array;
    return j;
}

Json Json::object() {
    Json j;
    j.type = Type::object;
    return j;
}

Json& Json::push(Json v) {
    arr.push_back(std::move(v));
    return *this;
}

Json& Json::set(std::string key, Json v) {
    obj.emplace_back(std::move(key), std::move(v));
    return *this;
}

std::string format_double(double v) {
    if (std::isnan(v))
        return "null";
    if (std::isinf(v))
        return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void escape(std::ostream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            case '\r': os << "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

void pad(std::ostream& os, int n) {
    for (int i = 0; i < n; ++i)
        os << ' ';
}

} // namespace

void Json::dump(std::ostream& os, int indent) const {
    switch (type) {
        case Type::null:
            os << "null";
            break;
        case Type::boolean:
            os << (b ? "true" : "false");
            break;
        case Type::number:
            os << format_double(num);
            break;
        case Type::string:
            escape(os, str);
            break;
        case Type::array: {
            if (arr.empty()) {
                os << "[]";
                break;
            }
            os << "[\n";
            for (size_t i = 0; i < arr.size(); ++i) {
                pad(os, indent + 2);
                arr[i].dump(os, indent + 2);
                os << (i + 1 < arr.size() ? ",\n" : "\n");
            }
            pad(os, indent);
            os << ']';
            break;
        }
        case Type::object: {
            if (obj.empty()) {
                os << "{}";
                break;
            }
            os << "{\n";
            for (size_t i = 0; i < obj.size(); ++i) {
                pad(os, indent + 2);
                escape(os, obj[i].first);
                os << ": ";
                obj[i].second.dump(os, indent + 2);
                os << (i + 1 < obj.size() ? ",\n" : "\n");
            }
            pad(os, indent);
            os << '}';
            break;
        }
    }
}

std::string Json::dump() const {
    std::ostringstream os;
    dump(os, 0);
    return os.str();
}

void emit_error(std::ostream& os, const std::string& kind, const std::string& message) {
    Json rec = Json::object();
    Json inner = Json::object();
    inner.set("kind", Json::string_value(kind));
    inner.set("message", Json::string_value(message));
    rec.set("error", std::move(inner));
    rec.dump(os, 0);
    os << '\n';
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    for (size_t i = 0; i < header.size(); ++i)
        os << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << format_double(row[i]) << (i + 1 < row.size() ? "," : "\n");
    }
}

} // namespace mcfs
