#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace t2a::llm {

enum class MsgRole { System, User, Assistant };

std::string to_string(MsgRole r);

struct ChatMessage {
    MsgRole role;
    std::string content;
};

// Purpose labels. Everything under judge.* plus redteam.verdict is a verdict
// tag and must be sent at temperature 0.
namespace tags {
inline constexpr const char* judge_obs = "judge.obs";
inline constexpr const char* judge_p = "judge.p";
inline constexpr const char* judge_factual = "judge.factual";
inline constexpr const char* judge_goal = "judge.goal";
inline constexpr const char* judge_claim = "judge.claim";
inline constexpr const char* redteam_verdict = "redteam.verdict";
inline constexpr const char* infer_role = "infer.role";
inline constexpr const char* annotate = "annotate";
inline constexpr const char* extract = "extract";
inline constexpr const char* extract_goal = "extract.goal";
inline constexpr const char* agent = "agent";
inline constexpr const char* simulate = "simulate";
}  // namespace tags

bool is_known_tag(const std::string& tag);
bool is_verdict_tag(const std::string& tag);

struct ChatRequest {
    std::vector<ChatMessage> messages;
    double temperature = 0.0;
    int max_tokens = 512;
    std::string tag;
};

// Throws std::invalid_argument on contract violations: unknown tag, a system
// message that is not first, a verdict tag with nonzero temperature.
void validate_request(const ChatRequest& req);

// Whitespace-normalized, stable field order. The digest keys scripted
// fixtures, so it covers messages only — never sampling parameters.
std::string canonical_request(const ChatRequest& req);
std::string request_digest(const ChatRequest& req);

class LlmBackend {
public:
    virtual ~LlmBackend() = default;

    // Must be safe under concurrent calls.
    virtual std::string chat(const ChatRequest& req) = 0;
};

// Deterministic mock keyed by (tag, digest). In strict mode an unknown
// request throws FixtureMiss; otherwise it returns an empty string.
class ScriptedBackend : public LlmBackend {
public:
    explicit ScriptedBackend(bool strict = true) : strict_(strict) {}

    // Loads fixtures/llm/<suite>.jsonl records {"tag","digest","response"}.
    static ScriptedBackend from_file(const std::string& path, bool strict = true);

    void add_response(const std::string& tag, const std::string& digest,
                      const std::string& response);
    // Convenience: digest computed from the request itself.
    void add_for(const ChatRequest& req, const std::string& response);

    std::string chat(const ChatRequest& req) override;

    std::size_t size() const;

private:
    std::map<std::pair<std::string, std::string>, std::string> fixtures_;
    bool strict_;
    mutable std::mutex mu_;
};

// Decorator that append-logs {"tag","digest","response"} for every call, so
// live runs can be replayed as fixtures.
class CaptureBackend : public LlmBackend {
public:
    CaptureBackend(LlmBackend& inner, std::string log_path);

    std::string chat(const ChatRequest& req) override;

private:
    LlmBackend& inner_;
    std::string log_path_;
    std::mutex mu_;
};

struct HttpConfig {
    std::string endpoint;  // e.g. https://host/v1/chat/completions
    std::string api_key;
    std::string model;
    int max_attempts = 3;
    int backoff_ms = 250;
    int max_concurrency = 8;

    // Fills endpoint/api_key/model from LLM_ENDPOINT, LLM_API_KEY, LLM_MODEL
    // where the fields are empty.
    void apply_env();
};

// Chat-completion JSON client. Retries transient failures (connect errors,
// 429, 5xx) with exponential backoff. Honors T2A_NO_NETWORK=1 by failing
// permanently without touching the socket layer.
class HttpBackend : public LlmBackend {
public:
    explicit HttpBackend(HttpConfig config);
    ~HttpBackend() override;

    std::string chat(const ChatRequest& req) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Trim/uppercase/strip punctuation, then YES -> true, NO -> false.
std::optional<bool> parse_yes_no(const std::string& raw);

// Forces temperature 0, asks once, and on an unparseable answer retries once
// with an appended "Answer YES or NO only." user message before giving up.
bool binary_verdict(LlmBackend& backend, ChatRequest req);

}  // namespace t2a::llm
