#include "service.hpp"

#include <cstdio>
#include <cstdlib>
#include <random>
#include <regex>

#include <httplib.h>

#include "quivertilt/phi.hpp"
#include "report.hpp"

namespace quivertilt::tools {

std::string SessionStore::create(BoundQuiver q) {
  auto s = std::make_shared<Session>();
  s->history.push_back(std::move(q));
  std::lock_guard lock(mu_);
  // random prefix so ids are not guessable across restarts; counter keeps them unique
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%012llx%04llx", static_cast<unsigned long long>(rng() & 0xffffffffffffULL),
                ++counter_ & 0xffffULL);
  std::string id = buf;
  order_.push_front(id);
  map_[id] = {s, order_.begin()};
  while (map_.size() > capacity_) {
    map_.erase(order_.back());
    order_.pop_back();
  }
  return id;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = map_.find(id);
  if (it == map_.end()) return nullptr;
  order_.splice(order_.begin(), order_, it->second.pos);
  return it->second.session;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mu_);
  return map_.size();
}

nlohmann::json session_state(const std::string& id, const Session& s) {
  const BoundQuiver& q = s.history.back();
  nlohmann::json phi;
  try {
    phi = compute_phi(q).to_json();
  } catch (const DomainError& e) {
    phi = nullptr;
  }
  // no extract_params here: it may run a reduction on every click
  return {{"id", id},
          {"quiver", quiver_to_json(q)},
          {"phi", phi},
          {"classify", classify_json(q, false)},
          {"mutable_vertices", mutable_vertices(q)},
          {"history", trace_to_json(s.steps)},
          {"depth", s.steps.size()}};
}

namespace {

Response error(int status, const std::string& msg) { return {status, {{"error", msg}}}; }

}  // namespace

Response Service::create(const std::string& body) {
  BoundQuiver q;
  try {
    auto j = nlohmann::json::parse(body);
    q = quiver_from_json(j.contains("quiver") ? j["quiver"] : j);
  } catch (const std::exception& e) {
    return error(400, e.what());
  }
  auto g = validate_gentle(q);
  if (!g.ok()) {
    Response r = error(422, "not gentle");
    r.body["violations"] = gentle_to_json(g)["violations"];
    return r;
  }
  return {201, {{"id", store_.create(std::move(q))}}};
}

Response Service::state(const std::string& id) {
  auto s = store_.find(id);
  if (!s) return error(404, "unknown session " + id);
  std::lock_guard lock(s->mu);
  return {200, session_state(id, *s)};
}

Response Service::mutate(const std::string& id, const std::string& body) {
  MutationStep step;
  try {
    auto j = nlohmann::json::parse(body);
    step.vertex = j.at("vertex").get<std::string>();
    step.kind = parse_kind(j.at("kind").get<std::string>());
  } catch (const std::exception& e) {
    return error(400, e.what());
  }
  auto s = store_.find(id);
  if (!s) return error(404, "unknown session " + id);
  std::lock_guard lock(s->mu);
  const BoundQuiver& q = s->history.back();
  if (!q.has_vertex(step.vertex)) return error(422, "no vertex '" + step.vertex + "'");
  auto check = can_mutate(q, step);
  if (!check) return error(409, check.reason);
  s->history.push_back(quivertilt::mutate(q, step));
  s->steps.push_back(step);
  return {200, session_state(id, *s)};
}

Response Service::undo(const std::string& id) {
  auto s = store_.find(id);
  if (!s) return error(404, "unknown session " + id);
  std::lock_guard lock(s->mu);
  if (s->steps.empty()) return error(409, "nothing to undo");
  s->history.pop_back();
  s->steps.pop_back();
  return {200, session_state(id, *s)};
}

Response Service::trace(const std::string& id) {
  auto s = store_.find(id);
  if (!s) return error(404, "unknown session " + id);
  std::lock_guard lock(s->mu);
  return {200, {{"steps", trace_to_json(s->steps)}, {"text", serialize_trace(s->steps)}}};
}

Response Service::handle(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex with_id(R"(^/session/([A-Za-z0-9]+)(/(mutate|undo|trace))?$)");
  if (path == "/session") {
    if (method == "POST") return create(body);
    return error(405, "method not allowed");
  }
  std::smatch m;
  if (!std::regex_match(path, m, with_id)) return error(404, "no route " + path);
  const std::string id = m[1], action = m[3];
  if (action.empty() && method == "GET") return state(id);
  if (action == "mutate" && method == "POST") return mutate(id, body);
  if (action == "undo" && method == "POST") return undo(id);
  if (action == "trace" && method == "GET") return trace(id);
  return error(405, "method not allowed");
}

void Service::install(httplib::Server& server) {
  auto bridge = [this](const httplib::Request& req, httplib::Response& res) {
    Response r;
    try {
      r = handle(req.method, req.path, req.body);
    } catch (const std::exception& e) {
      r = error(500, e.what());
    }
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Post("/session", bridge);
  server.Get(R"(/session/[A-Za-z0-9]+)", bridge);
  server.Post(R"(/session/[A-Za-z0-9]+/(mutate|undo))", bridge);
  server.Get(R"(/session/[A-Za-z0-9]+/trace)", bridge);
}

int resolve_port(int flag_port) {
  if (const char* env = std::getenv("QUIVERTILT_PORT"); env && *env) {
    char* end = nullptr;
    long p = std::strtol(env, &end, 10);
    if (*end == '\0' && p > 0 && p < 65536) return static_cast<int>(p);
  }
  return flag_port;
}

int serve(const std::string& host, int port) {
  Service service;
  httplib::Server server;
  service.install(server);
  std::fprintf(stderr, "listening on %s:%d\n", host.c_str(), port);
  return server.listen(host, port) ? 0 : 1;
}

}  // namespace quivertilt::tools
