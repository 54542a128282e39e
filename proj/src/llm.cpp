#include "t2a/llm.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "t2a/errors.hpp"
#include "t2a/jsonl.hpp"
#include "t2a/util.hpp"

namespace t2a::llm {

std::string to_string(MsgRole r) {
    switch (r) {
        case MsgRole::System: return "system";
        case MsgRole::User: return "user";
        case MsgRole::Assistant: return "assistant";
    }
    return "user";
}

namespace {

constexpr std::array<const char*, 12> kKnownTags = {
    tags::judge_obs,   tags::judge_p,      tags::judge_factual, tags::judge_goal,
    tags::judge_claim, tags::redteam_verdict, tags::infer_role, tags::annotate,
    tags::extract,     tags::extract_goal, tags::agent,          tags::simulate,
};

}  // namespace

bool is_known_tag(const std::string& tag) {
    for (const char* t : kKnownTags) {
        if (tag == t) return true;
    }
    return false;
}

bool is_verdict_tag(const std::string& tag) {
    return util::starts_with(tag, "judge.") || tag == tags::redteam_verdict;
}

void validate_request(const ChatRequest& req) {
    if (!is_known_tag(req.tag)) {
        throw std::invalid_argument("unknown request tag: " + req.tag);
    }
    if (req.messages.empty()) {
        throw std::invalid_argument("chat request has no messages");
    }
    for (std::size_t i = 1; i < req.messages.size(); ++i) {
        if (req.messages[i].role == MsgRole::System) {
            throw std::invalid_argument("system message must come first");
        }
    }
    if (is_verdict_tag(req.tag) && req.temperature != 0.0) {
        throw std::invalid_argument("verdict tag " + req.tag + " requires temperature 0");
    }
    if (req.temperature < 0.0) {
        throw std::invalid_argument("temperature must be >= 0");
    }
}

std::string canonical_request(const ChatRequest& req) {
    std::string out;
    for (const auto& m : req.messages) {
        out += to_string(m.role);
        out += '\x1f';
        out += util::normalize_ws(m.content);
        out += '\x1e';
    }
    return out;
}

std::string request_digest(const ChatRequest& req) {
    return util::fnv1a_hex(canonical_request(req));
}

// --- ScriptedBackend --------------------------------------------------------

ScriptedBackend ScriptedBackend::from_file(const std::string& path, bool strict) {
    ScriptedBackend backend(strict);
    auto f = jsonl::read(path);
    std::size_t line = f.meta ? 2 : 1;
    for (const auto& r : f.records) {
        if (!r.contains("tag") || !r.contains("digest") || !r.contains("response") ||
            !r["tag"].is_string() || !r["digest"].is_string() || !r["response"].is_string()) {
            throw SchemaViolation(line, "fixture record needs string tag/digest/response");
        }
        backend.add_response(r["tag"].get<std::string>(), r["digest"].get<std::string>(),
                             r["response"].get<std::string>());
        ++line;
    }
    return backend;
}

void ScriptedBackend::add_response(const std::string& tag, const std::string& digest,
                                   const std::string& response) {
    std::lock_guard lock(mu_);
    fixtures_[{tag, digest}] = response;
}

void ScriptedBackend::add_for(const ChatRequest& req, const std::string& response) {
    add_response(req.tag, request_digest(req), response);
}

std::string ScriptedBackend::chat(const ChatRequest& req) {
    validate_request(req);
    std::string digest = request_digest(req);
    std::lock_guard lock(mu_);
    auto it = fixtures_.find({req.tag, digest});
    if (it == fixtures_.end()) {
        if (strict_) throw FixtureMiss(req.tag, digest);
        return "";
    }
    return it->second;
}

std::size_t ScriptedBackend::size() const {
    std::lock_guard lock(mu_);
    return fixtures_.size();
}

// --- CaptureBackend ---------------------------------------------------------

CaptureBackend::CaptureBackend(LlmBackend& inner, std::string log_path)
    : inner_(inner), log_path_(std::move(log_path)) {}

std::string CaptureBackend::chat(const ChatRequest& req) {
    std::string response = inner_.chat(req);
    nlohmann::json rec;
    rec["tag"] = req.tag;
    rec["digest"] = request_digest(req);
    rec["response"] = response;
    std::lock_guard lock(mu_);
    std::ofstream out(log_path_, std::ios::app);
    if (!out) throw IoError("cannot append to " + log_path_);
    out << rec.dump() << '\n';
    return response;
}

// --- verdicts ---------------------------------------------------------------

std::optional<bool> parse_yes_no(const std::string& raw) {
    std::string token;
    for (char c : raw) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalpha(u)) token.push_back(static_cast<char>(std::toupper(u)));
    }
    if (token == "YES") return true;
    if (token == "NO") return false;
    return std::nullopt;
}

bool binary_verdict(LlmBackend& backend, ChatRequest req) {
    if (!is_verdict_tag(req.tag)) {
        throw std::invalid_argument("binary_verdict needs a judge/verdict tag, got " + req.tag);
    }
    req.temperature = 0.0;
    std::string first = backend.chat(req);
    if (auto v = parse_yes_no(first)) return *v;

    req.messages.push_back({MsgRole::User, "Answer YES or NO only."});
    std::string second = backend.chat(req);
    if (auto v = parse_yes_no(second)) return *v;
    throw UnparseableVerdict(second);
}

// --- HttpBackend ------------------------------------------------------------

void HttpConfig::apply_env() {
    auto fill = [](std::string& field, const char* var) {
        if (field.empty()) {
            if (const char* v = std::getenv(var)) field = v;
        }
    };
    fill(endpoint, "LLM_ENDPOINT");
    fill(api_key, "LLM_API_KEY");
    fill(model, "LLM_MODEL");
}

}  // namespace t2a::llm

// The HTTP transport (HttpBackend) lives in llm_http.cpp so the httplib
// include does not weigh on every consumer of this header.
