#pragma once

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "minecollab/core.hpp"

namespace minecollab {

/// Ticks between deliveries when exactly one member is busy.
inline constexpr int kSlowInterval = 30;
/// Ticks between deliveries when both members are idle.
inline constexpr int kMinInterval = 10;

inline constexpr const char* kOtherBotTag = "(FROM OTHER BOT)";

enum class SessionStatus { kActive, kPaused, kSlowed, kEnded };

std::string to_string(SessionStatus s);

struct MessageEnvelope {
  AgentId from;
  AgentId to;
  std::string body;
  Tick enqueued_tick = 0;
};

struct ConversationState {
  AgentId a;  // the pair is stored sorted
  AgentId b;
  SessionStatus status = SessionStatus::kActive;
  std::deque<MessageEnvelope> queue;
  std::optional<Tick> last_delivery_tick;

  bool has(const AgentId& x) const { return x == a || x == b; }
  const AgentId& other(const AgentId& x) const { return x == a ? b : a; }
};

struct Delivery {
  Tick tick = 0;
  AgentId from;  // empty for system notices
  AgentId to;
  std::string content;  // text as the receiver sees it
  bool notice = false;
  SessionStatus status = SessionStatus::kActive;
};

/// "{from}: (FROM OTHER BOT){body}", never tagging twice.
std::string tag_message(const AgentId& from, const std::string& body);

class ConversationManager {
 public:
  ConversationManager() = default;
  explicit ConversationManager(std::vector<AgentId> agents);

  struct StartResult {
    std::string reply;                 // shown to the initiator; empty when the session was created
    std::vector<Delivery> deliveries;  // notices to deliver right away
  };

  /// Opens (a, b) and queues the first message. Sessions either side already has with someone
  /// else are ended first and the dropped partner is told; their queued messages still drain.
  StartResult start(const AgentId& a, const AgentId& b, const std::string& first_message, Tick now);
  /// Ends (a, b) and notifies b. Queued messages keep draining under the usual throttle.
  std::vector<Delivery> end(const AgentId& a, const AgentId& b, const std::optional<std::string>& message, Tick now);
  /// Queues chat from `from` to its current partner; false when `from` is not in a session.
  bool send(const AgentId& from, const std::string& body, Tick now);
  /// Throttled delivery for this tick.
  std::vector<Delivery> pump(const std::function<bool(const AgentId&)>& busy, Tick now);
  /// Ends every session without notices and returns undelivered messages in order.
  std::vector<MessageEnvelope> close_all();

  std::optional<AgentId> partner(const AgentId& agent) const;
  const std::vector<ConversationState>& sessions() const { return sessions_; }
  bool known(const AgentId& agent) const { return agents_.count(agent) > 0; }

 private:
  ConversationState* find_open(const AgentId& agent);
  const ConversationState* find_open(const AgentId& agent) const;

  std::set<AgentId> agents_;
  std::vector<ConversationState> sessions_;
};

}  // namespace minecollab
