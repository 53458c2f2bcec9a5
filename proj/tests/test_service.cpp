#include <atomic>
#include <cstdlib>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "quivertilt/families.hpp"
#include "quivertilt/mutation.hpp"
#include "quivertilt/phi.hpp"
#include "service.hpp"

using namespace quivertilt;
using tools::Response;
using tools::Service;

namespace {

std::string upload(const BoundQuiver& q) { return quiver_to_json(q).dump(); }

std::string create(Service& s, const BoundQuiver& q) {
  auto r = s.handle("POST", "/session", upload(q));
  EXPECT_EQ(r.status, 201);
  return r.body["id"];
}

BoundQuiver kronecker() { return build_normal_form(NonOriented{1, 0, 1, 0, 0}, 1); }

}  // namespace

TEST(Service, KroneckerSession) {
  Service s;
  auto id = create(s, kronecker());
  auto r = s.handle("GET", "/session/" + id, "");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(quiver_from_json(r.body["quiver"]), kronecker());
  EXPECT_EQ(r.body["phi"], nlohmann::json::parse("[[1,1,2]]"));
  EXPECT_EQ(r.body["quiver"]["relations"].size(), 0u);
  EXPECT_TRUE(r.body["classify"]["gentle"]);
  EXPECT_EQ(r.body["depth"], 0);
}

TEST(Service, NormalFormSessionShowsCyclesAndPhi) {
  Service s;
  auto id = create(s, build_normal_form(NonOriented{6, 4, 5, 3, 1}, 2));
  auto r = s.handle("GET", "/session/" + id, "");
  EXPECT_EQ(r.body["classify"]["saturated_cycles"].size(), 7u);
  EXPECT_EQ(PhiInvariant::from_json(r.body["phi"]), (PhiInvariant{{{11, 2}, 1}, {{7, 2}, 1}, {{0, 4}, 7}}));
}

TEST(Service, MutateMatchesLibraryAndUndoRestores) {
  Service s;
  auto q = build_normal_form(NonOriented{4, 1, 3, 1, 0}, 2);
  auto id = create(s, q);
  auto initial = s.handle("GET", "/session/" + id, "").body;
  // eligibility agrees with can_mutate
  for (const auto& mv : initial["mutable_vertices"]) {
    std::string v = mv["vertex"];
    EXPECT_EQ(mv["tilt"].get<bool>(), can_mutate(q, {MutationKind::Tilt, v}).ok);
    EXPECT_EQ(mv["cotilt"].get<bool>(), can_mutate(q, {MutationKind::Cotilt, v}).ok);
  }
  std::vector<MutationStep> done;
  BoundQuiver cur = q;
  for (int i = 0; i < 3; ++i) {
    auto mv = s.handle("GET", "/session/" + id, "").body["mutable_vertices"][0];
    MutationStep step{mv["tilt"].get<bool>() ? MutationKind::Tilt : MutationKind::Cotilt, mv["vertex"]};
    auto r = s.handle("POST", "/session/" + id + "/mutate",
                      nlohmann::json{{"vertex", step.vertex}, {"kind", to_string(step.kind)}}.dump());
    ASSERT_EQ(r.status, 200) << r.body.dump();
    cur = mutate(cur, step);
    done.push_back(step);
    EXPECT_EQ(r.body["quiver"], quiver_to_json(cur));  // same JSON the CLI prints
    EXPECT_EQ(r.body["phi"], initial["phi"]);
  }
  auto tr = s.handle("GET", "/session/" + id + "/trace", "");
  EXPECT_EQ(tr.body["text"], serialize_trace(done));
  EXPECT_EQ(tr.body["steps"].size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(s.handle("POST", "/session/" + id + "/undo", "").status, 200);
  auto back = s.handle("GET", "/session/" + id, "").body;
  EXPECT_EQ(back.dump(), initial.dump());
  EXPECT_EQ(s.handle("POST", "/session/" + id + "/undo", "").status, 409);
}

TEST(Service, Rejections) {
  Service s;
  EXPECT_EQ(s.handle("POST", "/session", "{not json").status, 400);
  // three out-arrows at c
  nlohmann::json bad{{"m", 1},
                     {"vertices", {"a", "b", "c", "d"}},
                     {"arrows",
                      {{{"id", "x"}, {"source", "c"}, {"target", "a"}},
                       {{"id", "y"}, {"source", "c"}, {"target", "b"}},
                       {{"id", "z"}, {"source", "c"}, {"target", "d"}}}},
                     {"relations", nlohmann::json::array()}};
  auto r = s.handle("POST", "/session", bad.dump());
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.body["violations"][0]["condition"], "G1");
  auto id = create(s, build_normal_form(NonOriented{4, 1, 3, 1, 0}, 2));
  auto src = s.handle("POST", "/session/" + id + "/mutate", R"({"vertex":"v0","kind":"tilt"})");
  EXPECT_EQ(src.status, 409);
  EXPECT_FALSE(src.body["error"].get<std::string>().empty());
  EXPECT_EQ(s.handle("POST", "/session/" + id + "/mutate", R"({"vertex":"v0","kind":"flip"})").status, 400);
  EXPECT_EQ(s.handle("POST", "/session/" + id + "/mutate", R"({"vertex":"nope","kind":"tilt"})").status, 422);
  EXPECT_EQ(s.handle("GET", "/session/ffff", "").status, 404);
  EXPECT_EQ(s.handle("DELETE", "/session/" + id, "").status, 405);
  EXPECT_EQ(s.handle("GET", "/elsewhere", "").status, 404);
}

TEST(Service, LeastRecentlyUsedIsEvicted) {
  Service s(2);
  auto a = create(s, kronecker());
  auto b = create(s, kronecker());
  EXPECT_EQ(s.handle("GET", "/session/" + a, "").status, 200);  // a is now fresher than b
  auto c = create(s, kronecker());
  EXPECT_EQ(s.store().size(), 2u);
  EXPECT_EQ(s.handle("GET", "/session/" + b, "").status, 404);
  EXPECT_EQ(s.handle("GET", "/session/" + a, "").status, 200);
  EXPECT_EQ(s.handle("GET", "/session/" + c, "").status, 200);
}

TEST(Service, ConcurrentMutationsOnOneSessionSerialize) {
  Service s;
  // tilt and cotilt at a sink-source pair flip back and forth; every request
  // sees a consistent state so each one succeeds or is rejected cleanly
  auto id = create(s, build_normal_form(NonOriented{3, 0, 3, 0, 0}, 1));
  std::atomic<int> ok{0}, rejected{0};
  std::vector<std::thread> ts;
  for (int t = 0; t < 8; ++t)
    ts.emplace_back([&, t] {
      for (int i = 0; i < 20; ++i) {
        auto st = s.handle("GET", "/session/" + id, "").body;
        auto mv = st["mutable_vertices"][(t + i) % st["mutable_vertices"].size()];
        std::string kind = mv["tilt"].get<bool>() ? "tilt" : "cotilt";
        auto r = s.handle("POST", "/session/" + id + "/mutate",
                          nlohmann::json{{"vertex", mv["vertex"]}, {"kind", kind}}.dump());
        (r.status == 200 ? ok : rejected)++;
      }
    });
  for (auto& t : ts) t.join();
  EXPECT_EQ(ok + rejected, 160);
  auto st = s.handle("GET", "/session/" + id, "").body;
  EXPECT_EQ(st["depth"], ok.load());
  EXPECT_EQ(st["phi"], compute_phi(build_normal_form(NonOriented{3, 0, 3, 0, 0}, 1)).to_json());
}

TEST(Service, PortFromEnvironment) {
  ::unsetenv("QUIVERTILT_PORT");
  EXPECT_EQ(tools::resolve_port(8080), 8080);
  ::setenv("QUIVERTILT_PORT", "9123", 1);
  EXPECT_EQ(tools::resolve_port(8080), 9123);
  ::setenv("QUIVERTILT_PORT", "junk", 1);
  EXPECT_EQ(tools::resolve_port(8080), 8080);
  ::unsetenv("QUIVERTILT_PORT");
}

TEST(Service, OverHttp) {
  Service s;
  httplib::Server server;
  s.install(server);
  int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client cli("127.0.0.1", port);
  auto made = cli.Post("/session", upload(kronecker()), "application/json");
  ASSERT_TRUE(made);
  EXPECT_EQ(made->status, 201);
  std::string id = nlohmann::json::parse(made->body)["id"];
  auto got = cli.Get(("/session/" + id).c_str());
  ASSERT_TRUE(got);
  EXPECT_EQ(got->status, 200);
  EXPECT_EQ(nlohmann::json::parse(got->body)["phi"], nlohmann::json::parse("[[1,1,2]]"));
  auto mv = nlohmann::json::parse(got->body)["mutable_vertices"][0];
  auto m = cli.Post(("/session/" + id + "/mutate").c_str(),
                    nlohmann::json{{"vertex", mv["vertex"]}, {"kind", mv["tilt"].get<bool>() ? "tilt" : "cotilt"}}.dump(),
                    "application/json");
  ASSERT_TRUE(m);
  EXPECT_EQ(m->status, 200);
  auto tr = cli.Get(("/session/" + id + "/trace").c_str());
  ASSERT_TRUE(tr);
  EXPECT_EQ(nlohmann::json::parse(tr->body)["steps"].size(), 1u);
  auto u = cli.Post(("/session/" + id + "/undo").c_str(), "", "application/json");
  ASSERT_TRUE(u);
  EXPECT_EQ(nlohmann::json::parse(u->body)["quiver"], quiver_to_json(kronecker()));
  auto missing = cli.Get("/session/0000");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  server.stop();
  th.join();
}
