#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace t2a::util {

// --- string helpers -------------------------------------------------------

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);

// Collapses runs of whitespace (including newlines) to single spaces and trims.
std::string normalize_ws(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool contains_ci(std::string_view haystack, std::string_view needle);

std::vector<std::string> split_lines(std::string_view s);

// Lowercase [a-z0-9]+ runs; everything else is a separator. "20,000" -> {"20","000"}.
std::vector<std::string> tokenize(std::string_view text);

// True iff `word` occurs in `text` on ASCII word boundaries, case-insensitive.
bool contains_word_ci(std::string_view text, std::string_view word);

// --- hashing ---------------------------------------------------------------

// FNV-1a, 64-bit. Stable across platforms; used for fixture digests,
// knowledge-unit ids, and config hashes.
std::uint64_t fnv1a(std::string_view data);
std::string fnv1a_hex(std::string_view data);

// --- unicode ---------------------------------------------------------------

// Decodes UTF-8; each invalid byte yields U+FFFD.
std::vector<std::uint32_t> decode_utf8(std::string_view s);

// Codepoints that read as ASR noise rather than text: controls, the
// replacement character, block elements (U+2580..259F), invalid bytes.
bool printable_codepoint(std::uint32_t cp);

// Fraction of codepoints printable; 0 for empty input.
double printable_ratio(std::string_view s);

std::size_t codepoint_count(std::string_view s);

// --- templates -------------------------------------------------------------

// Replaces "{key}" for each key in `values`; unknown braces are left alone,
// so pseudo-code bodies with literal braces survive rendering.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& values);

// --- files -----------------------------------------------------------------

std::string read_file(const std::string& path);

// Writes via temp file + rename so a crash never leaves a partial artifact.
void write_file_atomic(const std::string& path, std::string_view content);

bool file_exists(const std::string& path);

}  // namespace t2a::util
