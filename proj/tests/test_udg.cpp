#include <doctest.h>

#include <cmath>
#include <set>

#include "cdsbench/kernels.hpp"
#include "cdsbench/rng.hpp"
#include "cdsbench/udg.hpp"
#include "support.hpp"

using namespace cdsbench;

TEST_CASE("generator stream is pinned") {
  std::uint64_t sm = 0;
  REQUIRE(splitmix64(sm) == 0xE220A8397B1DCDAFULL);
  // First outputs for seed 0, from an independent Python transcription.
  Xoshiro256 pinned(0);
  CHECK(pinned() == 0x99EC5F36CB75F2B4ULL);
  CHECK(pinned() == 0xBF6E1F784956452AULL);
  CHECK(pinned() == 0x1A5F849D4933E6E0ULL);
  Xoshiro256 rng(0);
  Xoshiro256 again(0);
  for (int i = 0; i < 100; ++i) CHECK(rng() == again());
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("instance seeds depend on every grid coordinate") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t n : {10, 20}) {
    for (double r : {20.0, 30.0}) {
      for (std::uint64_t i = 0; i < 5; ++i) seen.insert(derive_instance_seed(7, n, r, i));
    }
  }
  CHECK(seen.size() == 20);
  CHECK(derive_instance_seed(7, 10, 20.0, 3) == derive_instance_seed(7, 10, 20.0, 3));
  CHECK(derive_instance_seed(7, 10, 20.0, 3) != derive_instance_seed(8, 10, 20.0, 3));
}

TEST_CASE("build_adjacency uses the closed disk") {
  CHECK(build_adjacency({{0, 0}, {0, 5}}, 5.0) == std::vector<std::vector<NodeId>>{{1}, {0}});
  CHECK(build_adjacency({{0, 0}, {0, 5.001}}, 5.0) == std::vector<std::vector<NodeId>>{{}, {}});
  const double h = std::sqrt(3.0) / 2.0;
  const auto tri = build_adjacency({{0, 0}, {1, 0}, {0.5, h}}, 1.0 + 1e-12);
  CHECK(tri == std::vector<std::vector<NodeId>>{{1, 2}, {0, 2}, {0, 1}});
}

TEST_CASE("generate_udg edge cases") {
  SUBCASE("single node") {
    UdgSpec spec;
    spec.node_count = 1;
    spec.transmission_range = 10;
    spec.seed = 123;
    const auto g = generate_udg(spec);
    CHECK(g.size() == 1);
    CHECK(g.graph().edge_count() == 0);
  }
  SUBCASE("range beyond the area diagonal gives K5") {
    UdgSpec spec;
    spec.node_count = 5;
    spec.transmission_range = 700;
    spec.seed = 42;
    const auto g = generate_udg(spec);
    CHECK(g.graph().edge_count() == 10);
    for (const auto& p : g.coords()) {
      CHECK(p.x >= 20.0);
      CHECK(p.x < 500.0);
      CHECK(p.y >= 20.0);
      CHECK(p.y < 500.0);
    }
  }
  SUBCASE("n=100, r=10 on [20,500] is infeasible") {
    // Rejection-rate oracle: fraction of connected draws over 10,000 samples
    // drawn from the same stream the generator uses.
    Xoshiro256 rng(7);
    int connected = 0;
    std::vector<Point> pts(100);
    for (int draw = 0; draw < 10'000; ++draw) {
      for (auto& p : pts) {
        p.x = rng.uniform(20, 500);
        p.y = rng.uniform(20, 500);
      }
      connected += testing::union_find_connected(pts, 10.0) ? 1 : 0;
    }
    CHECK(connected == 0);

    UdgSpec spec;
    spec.node_count = 100;
    spec.transmission_range = 10;
    spec.seed = 7;
    CHECK_THROWS_AS(generate_udg(spec), ConnectivityUnattainable);
  }
  SUBCASE("invalid specs") {
    UdgSpec spec;
    spec.node_count = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.node_count = 3;
    spec.transmission_range = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.transmission_range = 1;
    spec.area_min = 5;
    spec.area_max = 5;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  }
}

TEST_CASE("generation is deterministic and honours the disk rule") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = testing::random_udg(25, 30.0, seed);
    const auto b = testing::random_udg(25, 30.0, seed);
    REQUIRE(a.coords() == b.coords());
    REQUIRE(a.graph().adjacency() == b.graph().adjacency());
    const auto& pts = a.coords();
    for (int i = 0; i < a.size(); ++i) {
      for (int j = i + 1; j < a.size(); ++j) {
        const double dist = std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y);
        CHECK(a.graph().adjacent(i, j) == (dist <= 30.0));
      }
    }
    CHECK(testing::union_find_connected(a.graph()));
  }
}

TEST_CASE("all_pairs_hop_dist fixed cases") {
  const auto path = testing::path_graph(4);
  const auto d = all_pairs_hop_dist(path);
  CHECK(d.at(0, 3) == 3);
  CHECK(d.at(1, 2) == 1);
  for (int a = 0; a < 4; ++a) CHECK(d.at(a, a) == 0);

  const auto c6 = testing::cycle_udg(6).graph();
  const auto dc = all_pairs_hop_dist(c6);
  CHECK(dc.at(0, 3) == 3);
  CHECK(dc.at(0, 2) == 2);
  const auto fw = testing::floyd_warshall(c6);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) CHECK(dc.at(a, b) == fw[a][b]);
  }
}

TEST_CASE("hop distances: metric axioms and Floyd-Warshall agreement") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 5 + static_cast<int>(seed % 26);  // up to 30
    const auto udg = testing::random_udg(n, 35.0, 1000 + seed);
    const auto d = all_pairs_hop_dist(udg.graph());
    REQUIRE(d == all_pairs_hop_dist_serial(udg.graph()));
    for (int a = 0; a < n; ++a) {
      CHECK(d.at(a, a) == 0);
      for (int b = 0; b < n; ++b) {
        CHECK(d.at(a, b) >= 0);
        CHECK(d.at(a, b) == d.at(b, a));
        for (int c = 0; c < n; ++c) CHECK(d.at(a, b) <= d.at(a, c) + d.at(c, b));
      }
    }
    if (n <= 15) {
      const auto fw = testing::floyd_warshall(udg.graph());
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) CHECK(d.at(a, b) == fw[a][b]);
      }
    }
  }
}

TEST_CASE("is_connected agrees with union-find") {
  CHECK(is_connected(testing::complete_graph(5)));
  CHECK_FALSE(is_connected(Graph(std::vector<std::vector<NodeId>>(2))));

  Xoshiro256 rng(2024);
  int connected = 0;
  for (int instance = 0; instance < 100; ++instance) {
    std::vector<Point> pts(20);
    for (auto& p : pts) p = {rng.uniform(20, 120), rng.uniform(20, 120)};
    const Graph g(build_adjacency(pts, 40.0));
    const bool expected = testing::union_find_connected(g);
    CHECK(is_connected(g) == expected);
    CHECK(disk_graph_connected(pts, 40.0) == expected);
    connected += expected ? 1 : 0;
  }
  // Both outcomes must be exercised for the comparison to mean anything.
  CHECK(connected > 0);
  CHECK(connected < 100);
}

TEST_CASE("graph JSON round trip") {
  const auto g = testing::random_udg(12, 40.0, 5);
  const auto back = udg_from_json(nlohmann::json::parse(to_json(g).dump()));
  CHECK(back.coords() == g.coords());
  CHECK(back.range() == g.range());
  CHECK(to_json(g).dump().rfind("{\"range\":", 0) == 0);
  CHECK_THROWS_AS(udg_from_json(nlohmann::json::parse(R"({"range": 1, "coords": [[0,0],[5,5]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(udg_from_json(nlohmann::json::parse(R"({"coords": []})")),
                  std::invalid_argument);
}

TEST_CASE("Graph rejects malformed adjacency") {
  using Lists = std::vector<std::vector<NodeId>>;
  CHECK_THROWS_AS(Graph(Lists{{0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(Lists{{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(Lists{{1, 1}, {0}}), std::invalid_argument);
}
