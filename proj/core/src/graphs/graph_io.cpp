#include "rarecase/graphs/graph_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace rarecase {

namespace {

using nlohmann::json;

int vertex(const json& v, int n) {
  int x = v.get<int>();
  if (x < 1 || x > n) throw UsageError("vertex label out of range 1.." + std::to_string(n));
  return x - 1;
}

}  // namespace

AnyGraph parse_graph_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed graph JSON: ") + e.what());
  }
  try {
    const auto kind = j.at("kind").get<std::string>();
    const int n = j.at("n").get<int>();
    if (n < 0) throw UsageError("negative n in graph file");
    const json edges = j.value("edges", json::array());
    if (kind == "simple") {
      SimpleGraph g(n);
      for (const auto& e : edges) {
        int a = vertex(e.at(0), n);
        int b = vertex(e.at(1), n);
        bool on = e.size() < 3 || e.at(2).get<long long>() != 0;
        g.set_edge(a, b, on);
      }
      return g;
    }
    const PrimeModulus p(j.at("p").get<u64>());
    auto weight = [&](const json& e) {
      if (e.size() < 3) return u64{1};
      return p.from_signed(e.at(2).get<std::int64_t>());
    };
    if (kind == "directed-multi") {
      DirectedMultigraph g(n, p);
      for (const auto& e : edges) g.set(vertex(e.at(0), n), vertex(e.at(1), n), weight(e));
      return g;
    }
    if (kind == "undirected-multi") {
      UndirectedMultigraph g(n, p);
      for (const auto& e : edges) g.set(vertex(e.at(0), n), vertex(e.at(1), n), weight(e));
      return g;
    }
    throw UsageError("unknown graph kind: " + kind);
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid graph JSON: ") + e.what());
  }
}

std::string to_graph_json(const AnyGraph& any) {
  json j;
  json edges = json::array();
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        j["n"] = g.n();
        if constexpr (std::is_same_v<T, SimpleGraph>) {
          j["kind"] = "simple";
          for (int a = 0; a < g.n(); ++a) {
            for (int b = a + 1; b < g.n(); ++b) {
              if (g.has_edge(a, b)) edges.push_back({a + 1, b + 1});
            }
          }
        } else if constexpr (std::is_same_v<T, DirectedMultigraph>) {
          j["kind"] = "directed-multi";
          j["p"] = g.modulus().value();
          for (int a = 0; a < g.n(); ++a) {
            for (int b = 0; b < g.n(); ++b) {
              if (g.at(a, b) != 0) edges.push_back({a + 1, b + 1, g.at(a, b)});
            }
          }
        } else {
          j["kind"] = "undirected-multi";
          j["p"] = g.modulus().value();
          for (int a = 0; a < g.n(); ++a) {
            for (int b = a + 1; b < g.n(); ++b) {
              if (g.at(a, b) != 0) edges.push_back({a + 1, b + 1, g.at(a, b)});
            }
          }
        }
      },
      any);
  j["edges"] = std::move(edges);
  return j.dump();
}

AnyGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

void write_graph_file(const std::filesystem::path& path, const AnyGraph& g) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write graph file: " + path.string());
  out << to_graph_json(g) << '\n';
}

}  // namespace rarecase
