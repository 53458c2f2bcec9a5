#ifndef QUIVERTILT_TOOLS_SERVICE_HPP
#define QUIVERTILT_TOOLS_SERVICE_HPP

#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "quivertilt/mutation.hpp"
#include "quivertilt/quiver.hpp"

namespace httplib {
class Server;
}

namespace quivertilt::tools {

// Quiver plus the states it went through. history.front() is the upload.
struct Session {
  std::mutex mu;  // serializes mutate/undo on one session
  std::vector<BoundQuiver> history;
  MutationTrace steps;
};

// In-memory, least recently used session dropped first.
class SessionStore {
 public:
  explicit SessionStore(std::size_t capacity = 256) : capacity_(capacity) {}

  std::string create(BoundQuiver q);
  std::shared_ptr<Session> find(const std::string& id);  // null when unknown or evicted
  std::size_t size() const;

 private:
  struct Entry {
    std::shared_ptr<Session> session;
    std::list<std::string>::iterator pos;
  };
  std::size_t capacity_;
  mutable std::mutex mu_;
  std::list<std::string> order_;  // most recent first
  std::unordered_map<std::string, Entry> map_;
  unsigned long long counter_ = 0;
};

struct Response {
  int status = 200;
  nlohmann::json body;
};

// Routing is kept apart from the socket layer so it can be driven directly.
class Service {
 public:
  explicit Service(std::size_t capacity = 256) : store_(capacity) {}

  Response handle(const std::string& method, const std::string& path, const std::string& body);
  void install(httplib::Server& server);

  SessionStore& store() { return store_; }

 private:
  Response create(const std::string& body);
  Response state(const std::string& id);
  Response mutate(const std::string& id, const std::string& body);
  Response undo(const std::string& id);
  Response trace(const std::string& id);

  SessionStore store_;
};

// GET /session/{id} body for a quiver.
nlohmann::json session_state(const std::string& id, const Session& s);

// QUIVERTILT_PORT when set, else the given port.
int resolve_port(int flag_port);

// Blocks. Returns nonzero when the port could not be bound.
int serve(const std::string& host, int port);

}  // namespace quivertilt::tools

#endif  // QUIVERTILT_TOOLS_SERVICE_HPP
