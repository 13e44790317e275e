#include "spellfix/remote_scorer.hpp"

#include <httplib.h>

#include <json.hpp>
#include <thread>

#include "spellfix/unicode.hpp"

namespace spellfix {

namespace {

using nlohmann::json;

json tokens_json(const std::vector<std::u32string>& tokens) {
  json arr = json::array();
  for (const auto& t : tokens) arr.push_back(utf8_encode(t));
  return arr;
}

json parse_body(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw MalformedResponseError(std::string("response is not JSON: ") + e.what());
  }
}

std::vector<double> score_array(const json& doc, const char* field) {
  if (!doc.is_object() || !doc.contains(field) || !doc[field].is_array()) {
    throw MalformedResponseError(std::string("response lacks '") + field + "' array");
  }
  std::vector<double> out;
  for (const auto& v : doc[field]) {
    if (!v.is_number()) throw MalformedResponseError(std::string("non-numeric entry in '") + field + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

std::string service_error(const std::string& body) {
  try {
    const json doc = json::parse(body);
    if (doc.is_object() && doc.contains("error") && doc["error"].is_string()) {
      return doc["error"].get<std::string>();
    }
  } catch (const json::exception&) {
  }
  return body.substr(0, 200);
}

}  // namespace

std::string encode_score_request(const MaskedQuery& query) {
  json req;
  req["tokens"] = tokens_json(query.tokens);
  req["mask_index"] = query.mask_index;
  req["candidates"] = tokens_json(query.candidates);
  return req.dump();
}

std::vector<ScoredCandidate> decode_score_response(const MaskedQuery& query,
                                                   const std::string& body) {
  const std::vector<double> scores = score_array(parse_body(body), "scores");
  std::vector<ScoredCandidate> out;
  if (scores.size() != query.candidates.size()) {
    throw ContractError("service returned " + std::to_string(scores.size()) +
                        " scores for " + std::to_string(query.candidates.size()) +
                        " candidates");
  }
  for (std::size_t i = 0; i < scores.size(); ++i) out.push_back({query.candidates[i], scores[i]});
  check_contract(query, out);
  return out;
}

RemoteScorer::RemoteScorer(RemoteScorerConfig config)
    : config_(std::move(config)),
      in_flight_(std::make_unique<std::counting_semaphore<>>(
          static_cast<std::ptrdiff_t>(std::max<std::size_t>(1, config_.max_in_flight)))) {}

RemoteScorer::~RemoteScorer() = default;

std::string RemoteScorer::post(const std::string& path, const std::string& body) const {
  in_flight_->acquire();
  struct Release {
    std::counting_semaphore<>& s;
    ~Release() { s.release(); }
  } release{*in_flight_};

  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(config_.timeout - secs);

  std::chrono::milliseconds backoff = config_.initial_backoff;
  for (std::size_t attempt = 0;; ++attempt) {
    try {
      httplib::Client client(config_.url);
      client.set_connection_timeout(secs.count(), usecs.count());
      client.set_read_timeout(secs.count(), usecs.count());
      client.set_write_timeout(secs.count(), usecs.count());
      auto res = client.Post(path, body, "application/json; charset=utf-8");
      if (!res) {
        const auto err = res.error();
        TransportErrorKind kind = TransportErrorKind::connection;
        if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read) {
          kind = TransportErrorKind::timeout;
        } else if (err == httplib::Error::Connection) {
          kind = TransportErrorKind::connection_refused;
        }
        throw TransportError(kind, config_.url + path + ": " + httplib::to_string(err));
      }
      if (res->status == 200) return res->body;
      const std::string message = "HTTP " + std::to_string(res->status) + " from " +
                                  config_.url + path + ": " + service_error(res->body);
      if (res->status >= 500) throw TransportError(TransportErrorKind::http_status, message);
      throw ContractError(message);
    } catch (const TransportError&) {
      if (attempt >= config_.max_retries) throw;
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
  }
}

std::vector<ScoredCandidate> RemoteScorer::score(const MaskedQuery& query) const {
  return decode_score_response(query, post("/v1/score", encode_score_request(query)));
}

std::vector<ScoredCandidate> RemoteScorer::top_n(const std::vector<std::u32string>& tokens,
                                                 std::size_t mask_index, std::size_t n) const {
  json req;
  req["tokens"] = tokens_json(tokens);
  req["mask_index"] = mask_index;
  req["n"] = n;
  const json doc = parse_body(post("/v1/topn", req.dump()));
  const std::vector<double> scores = score_array(doc, "scores");
  if (!doc.contains("candidates") || !doc["candidates"].is_array()) {
    throw MalformedResponseError("response lacks 'candidates' array");
  }
  const json& words = doc["candidates"];
  if (words.size() != scores.size()) {
    throw ContractError("topn returned " + std::to_string(words.size()) + " candidates and " +
                        std::to_string(scores.size()) + " scores");
  }
  if (words.size() > n) throw ContractError("topn returned more than n candidates");
  std::vector<ScoredCandidate> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!words[i].is_string()) throw MalformedResponseError("non-string candidate");
    std::u32string w;
    try {
      w = utf8_decode(words[i].get<std::string>());
    } catch (const Utf8Error& e) {
      throw MalformedResponseError(e.what());
    }
    if (!(scores[i] >= 0.0 && scores[i] <= 1.0)) {
      throw ContractError("topn score " + std::to_string(i) + " outside [0, 1]");
    }
    out.push_back({std::move(w), scores[i]});
  }
  return out;
}

bool RemoteScorer::healthy() const {
  try {
    httplib::Client client(config_.url);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
    client.set_connection_timeout(std::max<long>(1, secs.count()), 0);
    client.set_read_timeout(std::max<long>(1, secs.count()), 0);
    auto res = client.Get("/v1/health");
    return res && res->status == 200;
  } catch (...) {
    return false;
  }
}

}  // namespace spellfix
