#include "minecollab/conversation.hpp"

#include <algorithm>

namespace minecollab {

std::string to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::kActive: return "active";
    case SessionStatus::kPaused: return "paused";
    case SessionStatus::kSlowed: return "slowed";
    case SessionStatus::kEnded: return "ended";
  }
  return "active";
}

std::string tag_message(const AgentId& from, const std::string& body) {
  std::string text = body;
  const std::string prefix = from + ": ";
  if (text.rfind(prefix, 0) == 0) text = text.substr(prefix.size());
  const std::string tag = kOtherBotTag;
  for (auto pos = text.find(tag); pos != std::string::npos; pos = text.find(tag, pos)) text.erase(pos, tag.size());
  return prefix + tag + text;
}

ConversationManager::ConversationManager(std::vector<AgentId> agents) : agents_(agents.begin(), agents.end()) {}

ConversationState* ConversationManager::find_open(const AgentId& agent) {
  for (auto& s : sessions_) {
    if (s.status != SessionStatus::kEnded && s.has(agent)) return &s;
  }
  return nullptr;
}

const ConversationState* ConversationManager::find_open(const AgentId& agent) const {
  for (const auto& s : sessions_) {
    if (s.status != SessionStatus::kEnded && s.has(agent)) return &s;
  }
  return nullptr;
}

std::optional<AgentId> ConversationManager::partner(const AgentId& agent) const {
  const ConversationState* s = find_open(agent);
  if (!s) return std::nullopt;
  return s->other(agent);
}

ConversationManager::StartResult ConversationManager::start(const AgentId& a, const AgentId& b,
                                                            const std::string& first_message, Tick now) {
  if (!known(a)) throw Error(ErrorCode::kUnknownAgent, "Unknown agent " + a + ".");
  if (!known(b)) throw Error(ErrorCode::kUnknownAgent, b + " is not a bot, cannot start conversation.");
  if (a == b) throw Error(ErrorCode::kSelfConversation, "You cannot start a conversation with yourself.");
  StartResult result;
  if (ConversationState* cur = find_open(a)) {
    if (cur->has(b)) {
      result.reply = "You are already in conversation with " + b + ". Don't use this command to talk to them.";
      return result;
    }
    const AgentId dropped = cur->other(a);
    cur->status = SessionStatus::kEnded;
    result.deliveries.push_back({now, {}, dropped, "Conversation with " + a + " ended.", true, SessionStatus::kEnded});
  }
  if (ConversationState* theirs = find_open(b)) {
    // b is pulled out of its current session the same way
    const AgentId dropped = theirs->other(b);
    theirs->status = SessionStatus::kEnded;
    result.deliveries.push_back({now, {}, dropped, "Conversation with " + b + " ended.", true, SessionStatus::kEnded});
  }
  ConversationState s;
  s.a = std::min(a, b);
  s.b = std::max(a, b);
  s.queue.push_back({a, b, first_message, now});
  sessions_.push_back(std::move(s));
  return result;
}

std::vector<Delivery> ConversationManager::end(const AgentId& a, const AgentId& b,
                                               const std::optional<std::string>& message, Tick now) {
  ConversationState* s = find_open(a);
  if (!s || !s->has(b) || a == b) {
    throw Error(ErrorCode::kNoSuchConversation, "You are not in conversation with " + b + ".");
  }
  std::vector<Delivery> out;
  s->status = SessionStatus::kEnded;
  std::string notice = "Conversation with " + a + " ended";
  notice += message && !message->empty() ? " with message: " + *message : ".";
  out.push_back({now, {}, b, notice, true, SessionStatus::kEnded});
  return out;
}

bool ConversationManager::send(const AgentId& from, const std::string& body, Tick now) {
  ConversationState* s = find_open(from);
  if (!s) return false;
  s->queue.push_back({from, s->other(from), body, now});
  return true;
}

std::vector<Delivery> ConversationManager::pump(const std::function<bool(const AgentId&)>& busy, Tick now) {
  std::vector<Delivery> out;
  // an older session of the same pair must drain before a newer one delivers
  std::set<std::pair<AgentId, AgentId>> draining;
  for (auto& s : sessions_) {
    if (s.status == SessionStatus::kEnded && s.queue.empty()) continue;
    const bool ba = busy(s.a);
    const bool bb = busy(s.b);
    SessionStatus now_status = SessionStatus::kActive;
    if (ba && bb) {
      now_status = SessionStatus::kPaused;
    } else if (ba || bb) {
      now_status = SessionStatus::kSlowed;
    }
    if (s.status != SessionStatus::kEnded) s.status = now_status;
    if (s.queue.empty()) continue;
    if (!draining.insert({s.a, s.b}).second) continue;
    if (now_status == SessionStatus::kPaused) continue;
    const int interval = now_status == SessionStatus::kSlowed ? kSlowInterval : kMinInterval;
    if (s.last_delivery_tick && now - *s.last_delivery_tick < interval) continue;
    MessageEnvelope m = std::move(s.queue.front());
    s.queue.pop_front();
    s.last_delivery_tick = now;
    out.push_back({now, m.from, m.to, tag_message(m.from, m.body), false, now_status});
  }
  return out;
}

std::vector<MessageEnvelope> ConversationManager::close_all() {
  std::vector<MessageEnvelope> left;
  for (auto& s : sessions_) {
    for (auto& m : s.queue) left.push_back(std::move(m));
    s.queue.clear();
    s.status = SessionStatus::kEnded;
  }
  return left;
}

}  // namespace minecollab
