#include "minecollab/gateway.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <set>

namespace minecollab {

namespace {

const std::set<std::string>& known_kinds() {
  static const std::set<std::string> k = {"hello",       "task_brief",    "poll",           "agent_text",
                                          "system_text", "chat_delivery", "command_result", "episode_end"};
  return k;
}

Error violation(const std::string& what) { return Error(ErrorCode::kProtocolViolation, what); }

sockaddr_in resolve(const std::string& host, std::uint16_t port, ErrorCode code) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (getaddrinfo(host.c_str(), nullptr, &hints, &res) != 0 || !res) {
    throw Error(code, "cannot resolve " + host);
  }
  sockaddr_in addr{};
  std::memcpy(&addr, res->ai_addr, sizeof(addr));
  freeaddrinfo(res);
  addr.sin_port = htons(port);
  return addr;
}

}  // namespace

nlohmann::json ProtocolMessage::to_json() const {
  return {{"id", id}, {"kind", kind}, {"episode_id", episode_id}, {"agent", agent}, {"payload", payload}};
}

ProtocolMessage parse_message(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw violation("malformed message: not JSON");
  }
  if (!j.is_object()) throw violation("malformed message: not an object");
  if (!j.contains("id") || !j["id"].is_number_unsigned()) throw violation("malformed message: missing id");
  if (!j.contains("kind") || !j["kind"].is_string()) throw violation("malformed message: missing kind");
  ProtocolMessage m;
  m.id = j["id"].get<std::uint64_t>();
  m.kind = j["kind"].get<std::string>();
  if (!known_kinds().count(m.kind)) throw violation("unknown message kind: " + m.kind);
  if (j.contains("episode_id")) {
    if (!j["episode_id"].is_string()) throw violation("episode_id must be a string");
    m.episode_id = j["episode_id"].get<std::string>();
  }
  if (j.contains("agent")) {
    if (!j["agent"].is_string()) throw violation("agent must be a string");
    m.agent = j["agent"].get<std::string>();
  }
  if (j.contains("payload")) {
    if (!j["payload"].is_object()) throw violation("payload must be an object");
    m.payload = j["payload"];
  }
  return m;
}

// ---------------------------------------------------------------------------

LineChannel::LineChannel(int fd) : fd_(fd) { reader_ = std::thread([this] { read_loop(); }); }

LineChannel::~LineChannel() {
  close();
  if (reader_.joinable()) reader_.join();
  ::close(fd_);
}

void LineChannel::close() { ::shutdown(fd_, SHUT_RDWR); }

void LineChannel::read_loop() {
  std::string buffer;
  char chunk[4096];
  for (;;) {
    const ssize_t n = ::recv(fd_, chunk, sizeof(chunk), 0);
    if (n <= 0) {
      if (n < 0 && errno == EINTR) continue;
      break;
    }
    buffer.append(chunk, static_cast<std::size_t>(n));
    std::size_t nl;
    while ((nl = buffer.find('\n')) != std::string::npos) {
      std::string line = buffer.substr(0, nl);
      buffer.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      std::lock_guard lock(mu_);
      lines_.push_back(std::move(line));
      cv_.notify_all();
    }
  }
  std::lock_guard lock(mu_);
  eof_ = true;
  cv_.notify_all();
}

void LineChannel::send_line(const std::string& line) {
  std::size_t sent = 0;
  while (sent < line.size()) {
    const ssize_t n = ::send(fd_, line.data() + sent, line.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw violation("connection dropped");
    }
    sent += static_cast<std::size_t>(n);
  }
}

std::optional<std::string> LineChannel::next_line(std::chrono::milliseconds timeout) {
  std::unique_lock lock(mu_);
  cv_.wait_for(lock, timeout, [&] { return !lines_.empty() || eof_; });
  if (!lines_.empty()) {
    std::string line = std::move(lines_.front());
    lines_.pop_front();
    return line;
  }
  if (eof_) throw violation("connection dropped");
  return std::nullopt;
}

// ---------------------------------------------------------------------------

RemoteEndpoint::RemoteEndpoint(std::unique_ptr<LineChannel> channel, AgentId agent, std::string episode_id,
                               std::chrono::milliseconds poll_timeout, std::uint64_t hello_id)
    : channel_(std::move(channel)),
      agent_(std::move(agent)),
      episode_id_(std::move(episode_id)),
      poll_timeout_(poll_timeout),
      last_in_id_(hello_id) {}

std::uint64_t RemoteEndpoint::send(const std::string& kind, nlohmann::json payload) {
  ProtocolMessage m{next_id_++, kind, episode_id_, agent_, std::move(payload)};
  channel_->send_line(m.to_line());
  return m.id;
}

ProtocolMessage RemoteEndpoint::receive() {
  auto line = channel_->next_line(poll_timeout_);
  if (!line) {
    channel_->close();
    throw violation("agent " + agent_ + " did not answer within the poll timeout");
  }
  ProtocolMessage m = parse_message(*line);
  if (m.id <= last_in_id_) throw violation("message ids must strictly increase");
  last_in_id_ = m.id;
  return m;
}

void RemoteEndpoint::begin(const AgentBrief& brief) { send("task_brief", brief.to_json()); }

void RemoteEndpoint::observe(const ChatMessage& message, Tick tick) {
  std::string kind = "system_text";
  if (message.role == "user") {
    kind = "chat_delivery";
  } else if (message.content.rfind("Code output:", 0) == 0) {
    kind = "command_result";
  }
  send(kind, {{"tick", tick}, {"role", message.role}, {"content", message.content}});
}

std::string RemoteEndpoint::poll(Tick tick) {
  const std::uint64_t id = send("poll", {{"tick", tick}});
  ProtocolMessage m = receive();
  if (m.kind != "agent_text") throw violation("expected agent_text, got " + m.kind);
  if (m.payload.value("reply_to", std::uint64_t{0}) != id) throw violation("agent_text does not answer the open poll");
  if (!m.payload.contains("text") || !m.payload["text"].is_string()) throw violation("agent_text without text");
  return m.payload["text"].get<std::string>();
}

void RemoteEndpoint::finish(const std::string& end_reason, double score) {
  send("episode_end", {{"reason", end_reason}, {"score", score}});
}

// ---------------------------------------------------------------------------

Gateway::Gateway(const std::string& host, std::uint16_t port) {
  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw Error(ErrorCode::kBindFailure, "socket: " + std::string(std::strerror(errno)));
  int one = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr = resolve(host, port, ErrorCode::kBindFailure);
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0 || ::listen(listen_fd_, 16) != 0) {
    const std::string why = std::strerror(errno);
    ::close(listen_fd_);
    throw Error(ErrorCode::kBindFailure, "cannot listen on " + host + ":" + std::to_string(port) + ": " + why);
  }
  socklen_t len = sizeof(addr);
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

Gateway::~Gateway() {
  if (listen_fd_ >= 0) ::close(listen_fd_);
}

std::shared_ptr<RemoteEndpoint> Gateway::accept(std::chrono::milliseconds timeout) {
  pollfd p{listen_fd_, POLLIN, 0};
  const int ready = ::poll(&p, 1, static_cast<int>(timeout.count()));
  if (ready <= 0) throw Error(ErrorCode::kIo, "no agent connected within the timeout");
  const int fd = ::accept(listen_fd_, nullptr, nullptr);
  if (fd < 0) throw Error(ErrorCode::kIo, "accept: " + std::string(std::strerror(errno)));
  auto channel = std::make_unique<LineChannel>(fd);
  auto line = channel->next_line(timeout);
  if (!line) throw violation("no hello received");
  ProtocolMessage hello = parse_message(*line);
  if (hello.kind != "hello") throw violation("first message must be hello");
  if (hello.payload.value("version", 0) != kProtocolVersion) {
    throw violation("unsupported protocol version; expected " + std::to_string(kProtocolVersion));
  }
  AgentId agent = hello.agent.empty() ? hello.payload.value("agent", "") : hello.agent;
  if (agent.empty()) throw violation("hello without agent name");
  auto ep = std::make_shared<RemoteEndpoint>(std::move(channel), agent, episode_id, poll_timeout, hello.id);
  return ep;
}

// ---------------------------------------------------------------------------

GatewayClient::GatewayClient(const std::string& host, std::uint16_t port, const AgentId& agent) : agent_(agent) {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw Error(ErrorCode::kIo, "socket: " + std::string(std::strerror(errno)));
  sockaddr_in addr = resolve(host, port, ErrorCode::kIo);
  if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
    const std::string why = std::strerror(errno);
    ::close(fd);
    throw Error(ErrorCode::kIo, "cannot connect to " + host + ":" + std::to_string(port) + ": " + why);
  }
  channel_ = std::make_unique<LineChannel>(fd);
  ProtocolMessage hello{next_id_++, "hello", "", agent_, {{"version", kProtocolVersion}}};
  channel_->send_line(hello.to_line());
}

std::optional<ProtocolMessage> GatewayClient::receive(std::chrono::milliseconds timeout) {
  auto line = channel_->next_line(timeout);
  if (!line) return std::nullopt;
  return parse_message(*line);
}

void GatewayClient::reply(std::uint64_t poll_id, const std::string& text) {
  ProtocolMessage m{next_id_++, "agent_text", "", agent_, {{"reply_to", poll_id}, {"text", text}}};
  channel_->send_line(m.to_line());
}

void GatewayClient::send_raw(const std::string& line) { channel_->send_line(line); }

nlohmann::json run_echo_agent(const std::string& host, std::uint16_t port, const AgentId& agent,
                              std::chrono::milliseconds idle_timeout) {
  GatewayClient client(host, port, agent);
  for (;;) {
    auto m = client.receive(idle_timeout);
    if (!m) throw Error(ErrorCode::kIo, "gateway went quiet");
    if (m->kind == "poll") client.reply(m->id, "");
    if (m->kind == "episode_end") return m->payload;
  }
}

}  // namespace minecollab
