#include <chrono>
#include <cstdlib>
#include <semaphore>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "t2a/errors.hpp"
#include "t2a/llm.hpp"

namespace t2a::llm {

namespace {

struct ParsedUrl {
    std::string origin;  // scheme://host[:port]
    std::string path;
};

ParsedUrl parse_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("endpoint must be an http(s) URL: " + url);
    }
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        return {url, "/"};
    }
    return {url.substr(0, path_start), url.substr(path_start)};
}

bool network_disabled() {
    const char* v = std::getenv("T2A_NO_NETWORK");
    return v != nullptr && std::string(v) == "1";
}

}  // namespace

struct HttpBackend::Impl {
    HttpConfig config;
    ParsedUrl url;
    std::counting_semaphore<1024> in_flight;

    explicit Impl(HttpConfig cfg)
        : config(std::move(cfg)),
          url(parse_url(config.endpoint)),
          in_flight(config.max_concurrency > 0 ? config.max_concurrency : 1) {}
};

HttpBackend::HttpBackend(HttpConfig config) {
    if (config.endpoint.empty()) {
        throw ConfigError("http backend needs an endpoint (config or LLM_ENDPOINT)");
    }
    impl_ = std::make_unique<Impl>(std::move(config));
}

HttpBackend::~HttpBackend() = default;

std::string HttpBackend::chat(const ChatRequest& req) {
    validate_request(req);
    if (network_disabled()) {
        throw BackendError(BackendError::Kind::Permanent,
                           "network access disabled (T2A_NO_NETWORK=1)");
    }

    nlohmann::json body;
    body["model"] = impl_->config.model;
    body["temperature"] = req.temperature;
    body["max_tokens"] = req.max_tokens;
    auto& messages = body["messages"] = nlohmann::json::array();
    for (const auto& m : req.messages) {
        messages.push_back({{"role", to_string(m.role)}, {"content", m.content}});
    }
    const std::string payload = body.dump();

    impl_->in_flight.acquire();
    struct Release {
        std::counting_semaphore<1024>& sem;
        ~Release() { sem.release(); }
    } release{impl_->in_flight};

    httplib::Client client(impl_->url.origin);
    client.set_connection_timeout(30);
    client.set_read_timeout(120);
    httplib::Headers headers;
    if (!impl_->config.api_key.empty()) {
        headers.emplace("Authorization", "Bearer " + impl_->config.api_key);
    }

    std::string last_failure;
    int attempts = impl_->config.max_attempts > 0 ? impl_->config.max_attempts : 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        if (attempt > 0) {
            auto delay = std::chrono::milliseconds(impl_->config.backoff_ms) * (1 << (attempt - 1));
            std::this_thread::sleep_for(delay);
        }
        auto res = client.Post(impl_->url.path, headers, payload, "application/json");
        if (!res) {
            last_failure = "connection failure: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status == 429 || res->status >= 500) {
            last_failure = "HTTP " + std::to_string(res->status);
            continue;
        }
        if (res->status != 200) {
            throw BackendError(BackendError::Kind::Permanent,
                               "HTTP " + std::to_string(res->status) + ": " + res->body);
        }
        nlohmann::json j = nlohmann::json::parse(res->body, nullptr, false);
        if (j.is_discarded() || !j.contains("choices") || j["choices"].empty() ||
            !j["choices"][0].contains("message") ||
            !j["choices"][0]["message"].contains("content")) {
            throw BackendError(BackendError::Kind::Permanent,
                               "malformed completion response: " + res->body);
        }
        return j["choices"][0]["message"]["content"].get<std::string>();
    }
    throw BackendError(BackendError::Kind::Transient,
                       "gave up after " + std::to_string(attempts) + " attempts; last: " +
                           last_failure);
}

}  // namespace t2a::llm
