#include "t2a/jsonl.hpp"

#include "t2a/errors.hpp"
#include "t2a/util.hpp"

namespace t2a::jsonl {

File parse(const std::string& content) {
    File f;
    auto lines = util::split_lines(content);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = util::trim(lines[i]);
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw SchemaViolation(i + 1, "not valid JSON");
        }
        if (!j.is_object()) {
            throw SchemaViolation(i + 1, "record is not a JSON object");
        }
        if (j.contains("_meta")) {
            if (!f.meta && f.records.empty()) {
                f.meta = j["_meta"];
                continue;
            }
            throw SchemaViolation(i + 1, "stray _meta record");
        }
        f.records.push_back(std::move(j));
    }
    return f;
}

File read(const std::string& path) {
    return parse(util::read_file(path));
}

std::string serialize(const File& f) {
    std::string out;
    if (f.meta) {
        nlohmann::json m;
        m["_meta"] = *f.meta;
        out += m.dump();
        out += '\n';
    }
    for (const auto& r : f.records) {
        out += r.dump();
        out += '\n';
    }
    return out;
}

void write(const std::string& path, const File& f) {
    util::write_file_atomic(path, serialize(f));
}

}  // namespace t2a::jsonl
