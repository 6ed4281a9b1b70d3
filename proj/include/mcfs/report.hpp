#ifndef MCFS_REPORT_HPP
#define MCFS_REPORT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace mcfs {

// Minimal ordered JSON value for deterministic reports: object keys keep
// insertion order and numbers are emitted with 17 significant digits, so
// identical runs produce byte-identical output.
struct Json {
    enum class Type { null, boolean, number, string, array, object };
    Type type = Type::null;
    bool b = false;
    double num = 0.0;
    std::string str;
    std::vector<Json> arr;
    std::vector<std::pair<std::string, Json>> obj;

    static Json boolean(bool v);
    static Json number(double v);
    static Json string_value(std::string v);
    static Json array();
    static Json object();

    Json& push(Json v);                      // arrays
    Json& set(std::string key, Json v);      // objects

    void dump(std::ostream& os, int indent = 0) const;
    std::string dump() const;
};

// One machine-readable error record on the given stream:
// {"error": {"kind": ..., "message": ...}}
void emit_error(std::ostream& os, const std::string& kind, const std::string& message);

// Single header row + numeric rows, 17 significant digits.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

std::string format_double(double v);

} // namespace mcfs

#endif
