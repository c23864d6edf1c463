// vgdlgen/client.hpp - Completion providers: a live chat-completion HTTP
// client, transcript replay, and fixture replay keyed by (provider, preset).
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vgdlgen/expected.hpp"

namespace vgdlgen {

struct ProviderError {
  enum class Kind { Network, Http, Auth, BadResponse, ReplayMiss, Config };
  Kind kind = Kind::Network;
  std::string message;
};

std::string_view provider_error_kind_name(ProviderError::Kind kind);

struct ProviderConfig {
  enum class Kind { Live, Replay };
  Kind kind = Kind::Replay;

  std::string name;  // e.g. "gpt-4"; identifies the provider in records

  // Live settings.
  std::string endpoint;  // scheme://host[:port]
  std::string path = "/v1/chat/completions";
  std::string model;
  double temperature = 1.0;
  int timeout_seconds = 30;
  std::string auth_env;        // environment variable holding the credential
  std::string system_message;  // empty by default: no system turn is sent
  int max_in_flight = 4;
  int retries = 3;
  int backoff_ms = 1000;
  bool record = false;  // append live responses to transcript_path

  // Replay settings: a transcript takes precedence over fixture files.
  std::string transcript_path;
  std::string fixtures_dir;  // <dir>/<name>/<preset>.txt, one file per preset
};

/// One line of a transcript file. Credentials are never written here.
struct TranscriptRecord {
  std::string prompt_hash;
  std::string prompt;
  std::string response;
  std::string provider;
  std::string model;
  std::int64_t timestamp = 0;
};

std::string transcript_record_to_json(const TranscriptRecord& record);
Expected<TranscriptRecord, std::string> transcript_record_from_json(std::string_view line);

/// Stable content digest used for transcript lookup (FNV-1a 64, hex).
std::string content_digest(std::string_view text);

struct CompletionRequest {
  std::string prompt_text;
  std::string preset_label;  // "P1".."P7"; used by fixture replay
};

class Provider {
 public:
  virtual ~Provider() = default;
  virtual Expected<std::string, ProviderError> complete(const CompletionRequest& request) = 0;
  virtual const ProviderConfig& config() const = 0;
};

/// Builds the provider matching the config: live HTTP, transcript replay, or
/// fixture replay. Replay providers never touch the network.
Expected<std::unique_ptr<Provider>, ProviderError> make_provider(const ProviderConfig& config);

Expected<std::vector<ProviderConfig>, std::string> load_provider_configs(
    const std::string& path);

}  // namespace vgdlgen
