#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace t2a::jsonl {

// Stage artifacts are JSONL with an optional leading meta record of the form
// {"_meta": {...}}. Readers skip it; writers emit it when meta is supplied.

struct File {
    std::optional<nlohmann::json> meta;
    std::vector<nlohmann::json> records;
};

// Parses every non-blank line. Throws SchemaViolation with the 1-based line
// number on unparseable lines or non-object records.
File read(const std::string& path);

// Same, from a string (used by tests).
File parse(const std::string& content);

std::string serialize(const File& f);

// Atomic write (temp + rename).
void write(const std::string& path, const File& f);

}  // namespace t2a::jsonl
