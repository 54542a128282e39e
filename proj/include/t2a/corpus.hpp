#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "t2a/llm.hpp"

namespace t2a::corpus {

enum class Role { Assistant, User, System, Unknown };

std::string to_string(Role r);
Role role_from_string(const std::string& s);

struct Utterance {
    std::size_t index = 0;
    std::string speaker_label;  // raw diarization label, verbatim
    Role role = Role::Unknown;
    std::string text;  // whitespace-normalized
    bool eligible = false;
};

struct Transcript {
    std::string id;
    std::string domain_tag;
    std::vector<Utterance> utterances;
    std::string source_path;
};

enum class TranscriptFormat { PlainDialogue, JsonLines };

// PlainDialogue grammar: `LABEL: text` per line, LABEL a single token before
// the first colon; a line without such a prefix continues the previous
// utterance. JsonLines: one {"speaker","text"} object per line.
// Roles come out Unknown; eligibility false until mark_eligibility.
Transcript parse_transcript(const std::string& raw, TranscriptFormat format,
                            const std::string& id = "", const std::string& domain_tag = "",
                            const std::string& source_path = "");

// Raw diarization label -> role, consulted before any judge call.
using LabelTable = std::map<std::string, Role>;

// AGENT/ASSISTANT/REP -> Assistant, CALLER/CUSTOMER/CLIENT/USER -> User,
// SYSTEM/IVR/ANNOUNCEMENT -> System. Lookup is case-insensitive.
LabelTable default_label_table();

// Counts judge calls made, for tests asserting the bypass path.
struct RoleInferenceStats {
    std::size_t judge_calls = 0;
};

// Labels found in the table bypass the judge; everything else is classified
// by one chat call per distinct unknown label (majority utterance attached
// as evidence). Already-labeled roles (non-Unknown) are left untouched.
Transcript infer_roles(Transcript t, llm::LlmBackend& judge,
                       const LabelTable& table = default_label_table(),
                       const std::string& prompt_template = "",
                       RoleInferenceStats* stats = nullptr);

// Default classification prompt; {speaker_label}, {utterance} placeholders.
std::string default_role_prompt();

// eligible := role == Assistant && text readable (non-empty, >= 2 codepoints,
// printable ratio >= 0.8).
Transcript mark_eligibility(Transcript t);

bool readable_text(const std::string& text);

nlohmann::json to_json(const Transcript& t);
Transcript transcript_from_json(const nlohmann::json& j);

// Normalized corpus record (one JSONL line per transcript).
std::string serialize_corpus(const std::vector<Transcript>& corpus);
std::vector<Transcript> parse_corpus(const std::string& jsonl_content);

}  // namespace t2a::corpus
