#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace t2a {

// Base for everything thrown by the library. Subcommands map these to
// exit codes, so each error carries a stable kind name.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// corpus
struct MalformedRecord : Error {
    MalformedRecord(std::size_t index, const std::string& detail)
        : Error("MalformedRecord",
                "record " + std::to_string(index) + ": " + detail),
          index(index) {}
    std::size_t index;
};

struct EmptyTranscript : Error {
    explicit EmptyTranscript(const std::string& detail)
        : Error("EmptyTranscript", detail) {}
};

// llm-backend
struct BackendError : Error {
    enum class Kind { Transient, Permanent };
    BackendError(Kind k, const std::string& detail)
        : Error("BackendError",
                std::string(k == Kind::Transient ? "(transient) " : "(permanent) ") + detail),
          transient(k == Kind::Transient) {}
    bool transient;
};

struct FixtureMiss : Error {
    FixtureMiss(const std::string& tag, const std::string& digest)
        : Error("FixtureMiss", "tag=" + tag + " digest=" + digest),
          tag(tag), digest(digest) {}
    std::string tag;
    std::string digest;
};

struct UnparseableVerdict : Error {
    explicit UnparseableVerdict(const std::string& got)
        : Error("UnparseableVerdict", "judge output not YES/NO: \"" + got + "\"") {}
};

// grading
struct NoEligibleUtterances : Error {
    explicit NoEligibleUtterances(const std::string& transcript_id)
        : Error("NoEligibleUtterances", "transcript " + transcript_id) {}
};

// selection
struct EmptyTopicSet : Error {
    explicit EmptyTopicSet(const std::string& transcript_id)
        : Error("EmptyTopicSet", "annotator returned no usable topics for " + transcript_id) {}
};

// knowledge / artifacts
struct SchemaViolation : Error {
    SchemaViolation(std::size_t line, const std::string& detail)
        : Error("SchemaViolation", "line " + std::to_string(line) + ": " + detail),
          line(line) {}
    std::size_t line;
};

struct IoError : Error {
    explicit IoError(const std::string& detail) : Error("IoError", detail) {}
};

// retrieval
struct EmptyKnowledgeBase : Error {
    EmptyKnowledgeBase() : Error("EmptyKnowledgeBase", "cannot index zero units") {}
};

// prompts
struct KnowledgeRequired : Error {
    explicit KnowledgeRequired(const std::string& variant)
        : Error("KnowledgeRequired", variant + " embeds knowledge; none supplied") {}
};

struct KnowledgeForbidden : Error {
    explicit KnowledgeForbidden(const std::string& variant)
        : Error("KnowledgeForbidden", variant + " must not embed knowledge") {}
};

struct MissingModule : Error {
    explicit MissingModule(const std::string& detail) : Error("MissingModule", detail) {}
};

// agent
struct SessionTerminal : Error {
    explicit SessionTerminal(const std::string& session_id)
        : Error("SessionTerminal", "session " + session_id + " already terminal") {}
};

// evaluation
struct GoalUnparseable : Error {
    explicit GoalUnparseable(const std::string& detail)
        : Error("GoalUnparseable", detail) {}
};

struct EmptyOutcomeSet : Error {
    EmptyOutcomeSet() : Error("EmptyOutcomeSet", "no session outcomes to aggregate") {}
};

// cli / pipeline
struct ConfigError : Error {
    explicit ConfigError(const std::string& detail) : Error("ConfigError", detail) {}
};

struct MissingPrerequisite : Error {
    MissingPrerequisite(const std::string& stage, const std::string& path)
        : Error("MissingPrerequisite", "stage '" + stage + "' needs " + path) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& detail)
        : Error("ValidationError", detail) {}
};

}  // namespace t2a
