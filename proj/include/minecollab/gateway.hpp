#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "minecollab/agent.hpp"

namespace minecollab {

constexpr int kProtocolVersion = 1;

/// One line of the wire protocol.
/// kinds: hello, task_brief, poll, agent_text, system_text, chat_delivery, command_result, episode_end
struct ProtocolMessage {
  std::uint64_t id = 0;
  std::string kind;
  std::string episode_id;
  AgentId agent;
  nlohmann::json payload = nlohmann::json::object();

  nlohmann::json to_json() const;
  std::string to_line() const { return to_json().dump() + "\n"; }
};

/// Parses and schema-checks one line; throws ProtocolViolation.
ProtocolMessage parse_message(const std::string& line);

/// Newline-framed socket with a reader thread feeding a queue.
class LineChannel {
 public:
  explicit LineChannel(int fd);
  ~LineChannel();
  LineChannel(const LineChannel&) = delete;
  LineChannel& operator=(const LineChannel&) = delete;

  void send_line(const std::string& line);
  /// Next complete line, or nullopt on timeout. Throws ProtocolViolation once the peer has closed.
  std::optional<std::string> next_line(std::chrono::milliseconds timeout);
  void close();

 private:
  void read_loop();

  int fd_;
  std::thread reader_;
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<std::string> lines_;
  bool eof_ = false;
};

/// Agent played over a gateway connection.
class RemoteEndpoint : public AgentEndpoint {
 public:
  RemoteEndpoint(std::unique_ptr<LineChannel> channel, AgentId agent, std::string episode_id,
                 std::chrono::milliseconds poll_timeout, std::uint64_t hello_id = 0);

  const AgentId& agent() const { return agent_; }

  void begin(const AgentBrief& brief) override;
  void observe(const ChatMessage& message, Tick tick) override;
  std::string poll(Tick tick) override;
  void finish(const std::string& end_reason, double score) override;

 private:
  std::uint64_t send(const std::string& kind, nlohmann::json payload);
  ProtocolMessage receive();

  std::unique_ptr<LineChannel> channel_;
  AgentId agent_;
  std::string episode_id_;
  std::chrono::milliseconds poll_timeout_;
  std::uint64_t next_id_ = 1;
  std::uint64_t last_in_id_ = 0;
};

/// Listening socket; each accepted connection must open with a hello.
class Gateway {
 public:
  /// Port 0 picks a free port. Throws BindFailure.
  explicit Gateway(const std::string& host = "127.0.0.1", std::uint16_t port = 0);
  ~Gateway();
  Gateway(const Gateway&) = delete;
  Gateway& operator=(const Gateway&) = delete;

  std::uint16_t port() const { return port_; }
  std::chrono::milliseconds poll_timeout{30000};
  std::string episode_id = "0";

  /// Waits for one connection and its hello. Throws ProtocolViolation or Io on timeout.
  std::shared_ptr<RemoteEndpoint> accept(std::chrono::milliseconds timeout);

 private:
  int listen_fd_ = -1;
  std::uint16_t port_ = 0;
};

// ---------------------------------------------------------------------------
// Client side, used by tests and the echo agent.

class GatewayClient {
 public:
  GatewayClient(const std::string& host, std::uint16_t port, const AgentId& agent);

  /// Next server message; nullopt on timeout.
  std::optional<ProtocolMessage> receive(std::chrono::milliseconds timeout);
  void reply(std::uint64_t poll_id, const std::string& text);
  /// Raw line, for protocol-violation tests.
  void send_raw(const std::string& line);

 private:
  std::unique_ptr<LineChannel> channel_;
  AgentId agent_;
  std::uint64_t next_id_ = 1;
};

/// Answers every poll with an empty text until episode_end; returns the end payload.
nlohmann::json run_echo_agent(const std::string& host, std::uint16_t port, const AgentId& agent,
                              std::chrono::milliseconds idle_timeout = std::chrono::milliseconds(60000));

}  // namespace minecollab
