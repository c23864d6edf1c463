// vgdlgen/client.cpp
#include "vgdlgen/client.hpp"

#include <chrono>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <semaphore>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace vgdlgen {

namespace {

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return {};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  ok = true;
  return buf.str();
}

class LiveProvider : public Provider {
 public:
  explicit LiveProvider(ProviderConfig config)
      : config_(std::move(config)),
        in_flight_(std::max(1, config_.max_in_flight)) {}

  Expected<std::string, ProviderError> complete(const CompletionRequest& request) override {
    in_flight_.acquire();
    auto result = complete_locked(request);
    in_flight_.release();
    return result;
  }

  const ProviderConfig& config() const override { return config_; }

 private:
  Expected<std::string, ProviderError> complete_locked(const CompletionRequest& request) {
    std::string credential;
    if (!config_.auth_env.empty()) {
      const char* value = std::getenv(config_.auth_env.c_str());
      if (!value) {
        return ProviderError{ProviderError::Kind::Auth,
                             "credential environment variable '" + config_.auth_env +
                                 "' is not set"};
      }
      credential = value;
    }

    nlohmann::json payload;
    payload["model"] = config_.model;
    payload["temperature"] = config_.temperature;
    nlohmann::json messages = nlohmann::json::array();
    if (!config_.system_message.empty()) {
      messages.push_back({{"role", "system"}, {"content", config_.system_message}});
    }
    messages.push_back({{"role", "user"}, {"content", request.prompt_text}});
    payload["messages"] = std::move(messages);
    const std::string body = payload.dump();

    ProviderError last{ProviderError::Kind::Network, "no attempt made"};
    for (int attempt = 0; attempt < std::max(1, config_.retries); ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(
            std::chrono::milliseconds(config_.backoff_ms << (attempt - 1)));
      }
      httplib::Client client(config_.endpoint);
      client.set_connection_timeout(config_.timeout_seconds);
      client.set_read_timeout(config_.timeout_seconds);
      httplib::Headers headers;
      if (!credential.empty()) headers.emplace("Authorization", "Bearer " + credential);

      auto response = client.Post(config_.path, headers, body, "application/json");
      if (!response) {
        last = {ProviderError::Kind::Network,
                "transport failure: " + httplib::to_string(response.error())};
        continue;
      }
      if (response->status == 401 || response->status == 403) {
        return ProviderError{ProviderError::Kind::Auth,
                             "authentication rejected (HTTP " +
                                 std::to_string(response->status) + ")"};
      }
      if (response->status == 429 || response->status >= 500) {
        last = {ProviderError::Kind::Http,
                "HTTP " + std::to_string(response->status) + " from provider"};
        continue;
      }
      if (response->status != 200) {
        return ProviderError{ProviderError::Kind::Http,
                             "HTTP " + std::to_string(response->status) + " from provider"};
      }
      auto doc = nlohmann::json::parse(response->body, nullptr, false);
      if (doc.is_discarded() || !doc.contains("choices") || doc["choices"].empty() ||
          !doc["choices"][0].contains("message")) {
        return ProviderError{ProviderError::Kind::BadResponse,
                             "response is not a chat completion"};
      }
      std::string content = doc["choices"][0]["message"].value("content", "");
      if (config_.record && !config_.transcript_path.empty()) {
        append_transcript(request.prompt_text, content);
      }
      return content;
    }
    return last;
  }

  void append_transcript(const std::string& prompt, const std::string& response) {
    TranscriptRecord record;
    record.prompt_hash = content_digest(prompt);
    record.prompt = prompt;
    record.response = response;
    record.provider = config_.name;
    record.model = config_.model;
    record.timestamp = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count();
    std::lock_guard<std::mutex> lock(transcript_mutex_);
    std::ofstream out(config_.transcript_path, std::ios::app | std::ios::binary);
    out << transcript_record_to_json(record) << '\n';
  }

  ProviderConfig config_;
  std::counting_semaphore<64> in_flight_;
  std::mutex transcript_mutex_;
};

// Replays recorded responses by prompt digest. Repeated prompts pop a FIFO
// queue so that a recorded session replays byte for byte in order.
class ReplayProvider : public Provider {
 public:
  static Expected<std::unique_ptr<Provider>, ProviderError> open(ProviderConfig config) {
    bool ok = false;
    std::string data = read_file(config.transcript_path, ok);
    if (!ok) {
      return ProviderError{ProviderError::Kind::Config,
                           "cannot read transcript '" + config.transcript_path + "'"};
    }
    auto provider = std::unique_ptr<ReplayProvider>(new ReplayProvider(std::move(config)));
    std::istringstream in(data);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto record = transcript_record_from_json(line);
      if (!record.ok()) {
        return ProviderError{ProviderError::Kind::Config,
                             "bad transcript line: " + record.error()};
      }
      provider->responses_[record.value().prompt_hash].push_back(record.value().response);
    }
    return std::unique_ptr<Provider>(std::move(provider));
  }

  Expected<std::string, ProviderError> complete(const CompletionRequest& request) override {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = responses_.find(content_digest(request.prompt_text));
    if (it == responses_.end() || it->second.empty()) {
      return ProviderError{ProviderError::Kind::ReplayMiss,
                           "no recorded response for this prompt"};
    }
    std::string response = it->second.front();
    if (it->second.size() > 1) it->second.pop_front();  // keep the last one sticky
    return response;
  }

  const ProviderConfig& config() const override { return config_; }

 private:
  explicit ReplayProvider(ProviderConfig config) : config_(std::move(config)) {}

  ProviderConfig config_;
  std::map<std::string, std::deque<std::string>> responses_;
  std::mutex mutex_;
};

// One response file per (provider, preset); each call returns it again, a
// replay cycle of length one.
class FixtureProvider : public Provider {
 public:
  explicit FixtureProvider(ProviderConfig config) : config_(std::move(config)) {}

  Expected<std::string, ProviderError> complete(const CompletionRequest& request) override {
    if (request.preset_label.empty()) {
      return ProviderError{ProviderError::Kind::Config,
                           "fixture replay needs a preset label"};
    }
    std::string label = request.preset_label;
    for (char& c : label) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const std::string path = config_.fixtures_dir + "/" + config_.name + "/" + label + ".txt";
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(path);
    if (it == cache_.end()) {
      bool ok = false;
      std::string data = read_file(path, ok);
      if (!ok) {
        return ProviderError{ProviderError::Kind::ReplayMiss,
                             "no fixture response at '" + path + "'"};
      }
      it = cache_.emplace(path, std::move(data)).first;
    }
    return it->second;
  }

  const ProviderConfig& config() const override { return config_; }

 private:
  ProviderConfig config_;
  std::map<std::string, std::string> cache_;
  std::mutex mutex_;
};

}  // namespace

std::string_view provider_error_kind_name(ProviderError::Kind kind) {
  switch (kind) {
    case ProviderError::Kind::Network: return "network";
    case ProviderError::Kind::Http: return "http";
    case ProviderError::Kind::Auth: return "auth";
    case ProviderError::Kind::BadResponse: return "bad_response";
    case ProviderError::Kind::ReplayMiss: return "replay_miss";
    case ProviderError::Kind::Config: return "config";
  }
  return "?";
}

std::string content_digest(std::string_view text) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string transcript_record_to_json(const TranscriptRecord& record) {
  nlohmann::json doc;
  doc["prompt_hash"] = record.prompt_hash;
  doc["prompt"] = record.prompt;
  doc["response"] = record.response;
  doc["provider"] = record.provider;
  doc["model"] = record.model;
  doc["timestamp"] = record.timestamp;
  return doc.dump();
}

Expected<TranscriptRecord, std::string> transcript_record_from_json(std::string_view line) {
  auto doc = nlohmann::json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::string("not a JSON object");
  TranscriptRecord record;
  record.prompt_hash = doc.value("prompt_hash", "");
  record.prompt = doc.value("prompt", "");
  record.response = doc.value("response", "");
  record.provider = doc.value("provider", "");
  record.model = doc.value("model", "");
  record.timestamp = doc.value("timestamp", static_cast<std::int64_t>(0));
  if (record.prompt_hash.empty()) return std::string("missing prompt_hash");
  return record;
}

Expected<std::unique_ptr<Provider>, ProviderError> make_provider(const ProviderConfig& config) {
  if (config.kind == ProviderConfig::Kind::Live) {
    if (config.endpoint.empty() || config.model.empty()) {
      return ProviderError{ProviderError::Kind::Config,
                           "live provider requires endpoint and model"};
    }
    return std::unique_ptr<Provider>(new LiveProvider(config));
  }
  if (!config.transcript_path.empty()) return ReplayProvider::open(config);
  if (!config.fixtures_dir.empty()) {
    return std::unique_ptr<Provider>(new FixtureProvider(config));
  }
  return ProviderError{ProviderError::Kind::Config,
                       "replay provider requires transcript_path or fixtures_dir"};
}

Expected<std::vector<ProviderConfig>, std::string> load_provider_configs(
    const std::string& path) {
  bool ok = false;
  std::string data = read_file(path, ok);
  if (!ok) return std::string("cannot read provider config '" + path + "'");
  auto doc = nlohmann::json::parse(data, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    return std::string("provider config must be a JSON array");
  }
  std::vector<ProviderConfig> configs;
  for (const auto& entry : doc) {
    ProviderConfig config;
    const std::string kind = entry.value("kind", "replay");
    if (kind == "live") {
      config.kind = ProviderConfig::Kind::Live;
    } else if (kind == "replay") {
      config.kind = ProviderConfig::Kind::Replay;
    } else {
      return std::string("unknown provider kind '" + kind + "'");
    }
    config.name = entry.value("name", "");
    config.endpoint = entry.value("endpoint", "");
    config.path = entry.value("path", config.path);
    config.model = entry.value("model", "");
    config.temperature = entry.value("temperature", config.temperature);
    config.timeout_seconds = entry.value("timeout_seconds", config.timeout_seconds);
    config.auth_env = entry.value("auth_env", "");
    config.system_message = entry.value("system_message", "");
    config.max_in_flight = entry.value("max_in_flight", config.max_in_flight);
    config.retries = entry.value("retries", config.retries);
    config.backoff_ms = entry.value("backoff_ms", config.backoff_ms);
    config.record = entry.value("record", false);
    config.transcript_path = entry.value("transcript_path", "");
    config.fixtures_dir = entry.value("fixtures_dir", "");
    if (config.name.empty()) return std::string("provider entry missing 'name'");
    configs.push_back(std::move(config));
  }
  return configs;
}

}  // namespace vgdlgen
