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

#include "qga/backend.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "qga/error.h"
#include "qga/seq2seq.h"

namespace qga {

std::string_view ModelName(ModelKind model) {
  return model == ModelKind::kQg ? "qg" : "qa";
}

ModelKind ParseModelName(std::string_view name) {
  if (name == "qg") return ModelKind::kQg;
  if (name == "qa") return ModelKind::kQa;
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "', expected qg or qa");
}

GenerationParams DefaultQgParams() { return {64, 4, 0.0}; }

GenerationParams DefaultQaParams() { return {128, 4, -2.5}; }

void ValidateRequest(const GenerationRequest &request) {
  if (request.inputs.empty()) {
    throw std::invalid_argument("generation request has no inputs");
  }
  if (request.params.num_beams < 1) {
    throw std::invalid_argument("num_beams must be >= 1");
  }
  if (request.params.max_length < 1) {
    throw std::invalid_argument("max_length must be >= 1");
  }
}

std::string EncodeGenerateRequest(const GenerationRequest &request) {
  nlohmann::ordered_json body;
  body["model"] = ModelName(request.model);
  body["inputs"] = request.inputs;
  body["max_length"] = request.params.max_length;
  body["num_beams"] = request.params.num_beams;
  body["length_penalty"] = request.params.length_penalty;
  return body.dump();
}

std::vector<std::string> DecodeGenerateResponse(std::string_view body,
                                                std::size_t expected_count) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error &e) {
    throw ProtocolError(std::string("response is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("outputs") || !j.at("outputs").is_array()) {
    throw ProtocolError("response lacks an \"outputs\" array");
  }
  std::vector<std::string> outputs;
  for (const nlohmann::json &o : j.at("outputs")) {
    if (!o.is_string()) throw ProtocolError("non-string entry in \"outputs\"");
    outputs.push_back(o.get<std::string>());
  }
  if (outputs.size() != expected_count) {
    throw ProtocolError("expected " + std::to_string(expected_count) +
                        " outputs, got " + std::to_string(outputs.size()));
  }
  return outputs;
}

std::vector<std::string> Backend::Generate(const GenerationRequest &request) {
  ValidateRequest(request);
  std::vector<std::string> outputs = DoGenerate(request);
  if (outputs.size() != request.inputs.size()) {
    throw ProtocolError("backend returned " + std::to_string(outputs.size()) +
                        " outputs for " + std::to_string(request.inputs.size()) +
                        " inputs");
  }
  return outputs;
}

void OracleBook::Add(std::string input, std::string output) {
  entries_[std::move(input)] = std::move(output);
}

const std::string *OracleBook::Find(std::string_view input) const {
  auto it = entries_.find(input);
  return it == entries_.end() ? nullptr : &it->second;
}

void OracleBook::Save(const std::filesystem::path &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  for (const auto &[input, output] : entries_) {
    nlohmann::ordered_json j;
    j["input"] = input;
    j["output"] = output;
    out << j.dump() << '\n';
  }
}

OracleBook OracleBook::Load(const std::filesystem::path &path) {
  OracleBook book;
  for (const nlohmann::json &j : LoadJsonLines(path)) {
    try {
      book.Add(j.at("input").get<std::string>(),
               j.at("output").get<std::string>());
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }
  return book;
}

std::vector<std::string> OracleBackend::DoGenerate(
    const GenerationRequest &request) {
  std::vector<std::string> outputs;
  outputs.reserve(request.inputs.size());
  for (const std::string &input : request.inputs) {
    const std::string *out = book_.Find(input);
    if (out == nullptr) {
      throw OracleMissError("oracle has no output for " +
                            std::string(ModelName(request.model)) + " input \"" +
                            input + "\"");
    }
    outputs.push_back(*out);
  }
  return outputs;
}

std::chrono::milliseconds RetryPolicy::Backoff(int attempt) const {
  double ms = static_cast<double>(initial_backoff.count());
  for (int i = 2; i < attempt; ++i) ms *= multiplier;
  ms = std::min(ms, static_cast<double>(max_backoff.count()));
  return std::chrono::milliseconds(static_cast<long long>(ms));
}

HttpBackend::HttpBackend(std::string base_url, HttpOptions options)
    : base_url_(std::move(base_url)), options_(options) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

bool HttpBackend::Healthy() {
  httplib::Client client(base_url_);
  client.set_connection_timeout(options_.connect_timeout);
  client.set_read_timeout(options_.connect_timeout);
  auto res = client.Get("/health");
  if (!res || res->status != 200) return false;
  try {
    return nlohmann::json::parse(res->body).value("status", "") == "ok";
  } catch (const nlohmann::json::exception &) {
    return false;
  }
}

std::vector<std::string> HttpBackend::DoGenerate(
    const GenerationRequest &request) {
  std::lock_guard<std::mutex> lock(mu_);
  const std::string body = EncodeGenerateRequest(request);
  httplib::Client client(base_url_);
  client.set_connection_timeout(options_.connect_timeout);
  client.set_read_timeout(options_.read_timeout);

  const int max_attempts = std::max(1, options_.retry.max_attempts);
  std::string last_error;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    if (attempt > 1) std::this_thread::sleep_for(options_.retry.Backoff(attempt));
    auto res = client.Post("/v1/generate", body, "application/json");
    if (!res) {
      last_error = "POST " + base_url_ + "/v1/generate failed: " +
                   httplib::to_string(res.error());
      continue;
    }
    if (res->status == 200) {
      return DecodeGenerateResponse(res->body, request.inputs.size());
    }
    if (res->status >= 500) {
      last_error = "server returned " + std::to_string(res->status) +
                   (res->status == 503 ? " (model loading)" : "");
      continue;
    }
    throw ProtocolError("server returned " + std::to_string(res->status) +
                        ": " + res->body);
  }
  throw TransportError(last_error, max_attempts);
}

std::unique_ptr<Backend> MakeBackend(std::string_view spec,
                                     HttpOptions options) {
  constexpr std::string_view kOracle = "oracle:";
  if (spec.starts_with(kOracle)) {
    return std::make_unique<OracleBackend>(
        OracleBook::Load(std::string(spec.substr(kOracle.size()))));
  }
  if (spec.starts_with("http://")) {
    return std::make_unique<HttpBackend>(std::string(spec), options);
  }
  throw ValidationError("backend must be \"oracle:<path>\" or \"http://host:port\", got \"" +
                        std::string(spec) + "\"");
}

}  // namespace qga
