// Copyright 2026 The qga Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGA_BACKEND_H_
#define QGA_BACKEND_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace qga {

enum class ModelKind { kQg, kQa };

// "qg" or "qa", as used on the wire.
std::string_view ModelName(ModelKind model);
ModelKind ParseModelName(std::string_view name);

// Decoding knobs forwarded to the model server.
struct GenerationParams {
  int max_length = 64;
  int num_beams = 4;
  double length_penalty = 0.0;

  bool operator==(const GenerationParams &) const = default;
};

// Beam search with 4 beams for both stages; the QA stage favours short
// answers with a negative length penalty. max_length values are our own.
GenerationParams DefaultQgParams();
GenerationParams DefaultQaParams();

struct GenerationRequest {
  ModelKind model = ModelKind::kQg;
  std::vector<std::string> inputs;
  GenerationParams params;
};

// Throws std::invalid_argument for empty inputs, num_beams < 1 or
// max_length < 1.
void ValidateRequest(const GenerationRequest &request);

// Wire format of POST /v1/generate, byte for byte:
//   {"model":"qg","inputs":[...],"max_length":N,"num_beams":N,"length_penalty":X}
std::string EncodeGenerateRequest(const GenerationRequest &request);

// Parses {"outputs":[...]}; throws ProtocolError when the body is not that
// shape or the count differs from `expected_count`.
std::vector<std::string> DecodeGenerateResponse(std::string_view body,
                                                std::size_t expected_count);

// A text-to-text model. Generate returns one output per input, in input
// order. Implementations must tolerate concurrent callers without mixing
// outputs across requests.
class Backend {
 public:
  virtual ~Backend() = default;

  std::vector<std::string> Generate(const GenerationRequest &request);

 protected:
  virtual std::vector<std::string> DoGenerate(const GenerationRequest &request) = 0;
};

// Exact input string -> canned output.
class OracleBook {
 public:
  // Later entries for the same input overwrite earlier ones.
  void Add(std::string input, std::string output);
  const std::string *Find(std::string_view input) const;
  std::size_t size() const { return entries_.size(); }

  const std::map<std::string, std::string, std::less<>> &entries() const {
    return entries_;
  }

  // JSONL, one {"input": ..., "output": ...} per line, sorted by input.
  void Save(const std::filesystem::path &path) const;
  static OracleBook Load(const std::filesystem::path &path);

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

// Deterministic backend answering from an OracleBook. Reentrant.
class OracleBackend : public Backend {
 public:
  explicit OracleBackend(OracleBook book) : book_(std::move(book)) {}

  const OracleBook &book() const { return book_; }

 protected:
  std::vector<std::string> DoGenerate(const GenerationRequest &request) override;

 private:
  OracleBook book_;
};

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{250};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{8000};

  // Delay before attempt `attempt` (1-based, attempt >= 2).
  std::chrono::milliseconds Backoff(int attempt) const;
};

struct HttpOptions {
  RetryPolicy retry;
  std::chrono::seconds connect_timeout{10};
  std::chrono::seconds read_timeout{600};
};

// Client for the model-server protocol (docs/protocol.md). Transport errors
// and 5xx responses are retried with exponential backoff; 4xx responses and
// malformed bodies are not. Calls are serialized.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(std::string base_url, HttpOptions options = {});

  // GET /health answered 200 {"status":"ok"}.
  bool Healthy();

  const std::string &base_url() const { return base_url_; }

 protected:
  std::vector<std::string> DoGenerate(const GenerationRequest &request) override;

 private:
  std::string base_url_;
  HttpOptions options_;
  std::mutex mu_;
};

// "oracle:<book.jsonl>" or "http://host:port".
std::unique_ptr<Backend> MakeBackend(std::string_view spec,
                                     HttpOptions options = {});

}  // namespace qga

#endif  // QGA_BACKEND_H_
