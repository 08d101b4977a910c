#include "circuitsplit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "circuitsplit/duality.hpp"
#include "circuitsplit/electrical.hpp"
#include "circuitsplit/embedding.hpp"
#include "circuitsplit/enumeration.hpp"
#include "circuitsplit/kalmanson.hpp"
#include "circuitsplit/maps.hpp"
#include "circuitsplit/plabic.hpp"
#include "circuitsplit/random_network.hpp"
#include "circuitsplit/render.hpp"

namespace circuitsplit {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'", {{"path", path}});
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what(), {{"path", path}});
  }
}

// Either a network object or a matrix array.
struct Input {
  std::optional<CircularNetwork> network;
  std::optional<ExtMatrix> matrix;
};

Input read_input(const std::string& path) {
  const json j = read_json(path);
  Input in;
  if (j.is_array()) {
    in.matrix = matrix_from_json(j);
  } else if (j.is_object()) {
    in.network = network_from_json(j);
  } else {
    throw DomainError("expected a network object or a matrix array", {{"path", path}});
  }
  return in;
}

CircularNetwork need_network(const Input& in, const std::string& what) {
  if (!in.network) throw DomainError(what + " needs a network file");
  return *in.network;
}

void require_emit(const std::string& emit, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (emit == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError("--emit " + emit + " not supported here (choose from " + list + ")");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Selftest {
  int count = 100;
};

json run_selftest(int count, const Limits& limits) {
  unsigned long long seed = 1;
  if (const char* env = std::getenv("CIRCUITSPLIT_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError("CIRCUITSPLIT_SEED must be a nonnegative integer", {{"value", env}});
    }
  }
  std::mt19937_64 rng(seed);
  std::map<std::string, int> passed;
  json failures = json::array();
  auto check = [&](const std::string& name, bool ok, const CircularNetwork& net) {
    if (ok) {
      ++passed[name];
    } else {
      failures.push_back({{"check", name}, {"network", network_to_json(net)}});
    }
  };
  for (int i = 0; i < count; ++i) {
    RandomNetworkOptions opt;
    opt.cactus = i % 4 == 3;
    const auto net = random_planar_network(rng, opt);
    check("embedding", validate_embedding(net).valid, net);
    const auto dual = planar_dual(net);
    check("dualEmbedding", validate_embedding(dual).valid, net);
    const auto r = rho(net);
    check("sigmaEqualsRho", sigma(net, limits) == r, net);
    check("xiEqualsRhoOfDual", xi(net) == rho(dual), net);
    check("xiPrimeOfDualEqualsRho", xi_prime(dual) == r, net);
    check("doubleDual", equivalent(planar_dual(dual), relabel_rotate(net, 1)), net);
    check("metricRoundTrip", metric_of_splits(r) == resistance_matrix(net), net);
    if (net.is_plain()) {
      check("noObstruction", planarity_obstruction(response_matrix(net)).verdict == Obstruction::NoObstruction, net);
    }
  }
  return {{"seed", seed}, {"networks", count}, {"passed", passed}, {"failures", failures}, {"ok", failures.empty()}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Electrical networks, circular split systems and their enumeration", "circuitsplit"};
  app.require_subcommand(1);

  std::string emit = "json";
  bool unsafe = false;
  app.add_option("--emit", emit, "Output format")
      ->check(CLI::IsMember({"json", "dot", "svg", "table"}))
      ->capture_default_str();
  app.add_flag("--unsafe-size", unsafe, "Lift the size guards on exhaustive searches");

  std::string input;
  std::function<void()> action;

  auto* response = app.add_subcommand("response", "Response matrix M(N) of a network");
  response->add_option("input", input, "Network file")->required();
  response->callback([&] {
    action = [&] {
      require_emit(emit, {"json", "table"});
      const auto m = response_matrix(need_network(read_input(input), "response"));
      out << (emit == "table" ? matrix_to_table(m) : dump(matrix_to_json(m)));
    };
  });

  auto* resistance = app.add_subcommand("resistance", "Resistance matrix W from a network or a response matrix");
  resistance->add_option("input", input, "Network or response matrix file")->required();
  resistance->callback([&] {
    action = [&] {
      require_emit(emit, {"json", "table"});
      const auto in = read_input(input);
      const auto w = in.network ? resistance_matrix(*in.network) : resistance_matrix(*in.matrix);
      out << (emit == "table" ? matrix_to_table(w) : dump(matrix_to_json(w)));
    };
  });

  auto* kron = app.add_subcommand("kron", "Kron reduction");
  kron->add_option("input", input, "Network or response matrix file")->required();
  kron->callback([&] {
    action = [&] {
      require_emit(emit, {"json", "dot", "svg"});
      const auto in = read_input(input);
      const auto red = in.network ? kron_reduce(*in.network) : reduced_from_response(*in.matrix);
      if (emit == "json") {
        out << dump(reduced_to_json(red));
      } else {
        const auto net = reduced_to_network(red);
        out << (emit == "dot" ? network_to_dot(net) : network_to_svg(net));
      }
    };
  });

  std::string order_text = "clockwise";
  bool find_order = false;
  auto* kalmanson = app.add_subcommand("kalmanson", "Kalmanson test of a resistance matrix");
  kalmanson->add_option("input", input, "Resistance matrix file")->required();
  kalmanson->add_option("--order", order_text, "clockwise, or a comma separated cyclic order")->capture_default_str();
  kalmanson->add_flag("--find-order", find_order, "Search all cyclic orders");
  kalmanson->callback([&] {
    action = [&] {
      require_emit(emit, {"json"});
      const auto in = read_input(input);
      const ExtMatrix w = in.network ? resistance_matrix(*in.network) : *in.matrix;
      const int n = static_cast<int>(w.size());
      if (find_order) {
        Limits limits;
        limits.unsafe = unsafe;
        const auto o = find_circular_order(w, limits);
        out << dump({{"order", o ? json(*o) : json(nullptr)}, {"found", o.has_value()}});
        return;
      }
      CyclicOrder order;
      if (order_text == "clockwise") {
        order = clockwise_order(n);
      } else {
        std::stringstream ss(order_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          try {
            order.push_back(std::stoi(tok));
          } catch (const std::exception&) {
            throw UsageError("--order must be 'clockwise' or labels separated by commas");
          }
        }
      }
      auto report = kalmanson_report_to_json(is_kalmanson(w, order));
      report["order"] = order;
      out << dump(report);
    };
  });

  std::string map_name;
  bool unweighted_out = false;
  auto* map = app.add_subcommand("map", "Network to split system maps");
  map->add_option("name", map_name, "xi, xi-prime, sigma or rho")
      ->required()
      ->check(CLI::IsMember({"xi", "xi-prime", "sigma", "rho"}));
  map->add_option("input", input, "Network, response matrix (xi, xi-prime) or resistance matrix (rho)")->required();
  map->add_option("--order", order_text, "Cyclic order of the labels; only clockwise is supported")
      ->capture_default_str();
  map->add_flag("--unweighted", unweighted_out, "Drop split weights");
  map->callback([&] {
    action = [&] {
      require_emit(emit, {"json", "svg"});
      if (order_text != "clockwise") throw UsageError("map supports only --order clockwise");
      const auto in = read_input(input);
      Limits limits;
      limits.unsafe = unsafe;
      CompactifiedSplitSystem sys;
      if (map_name == "xi") {
        sys = in.network ? xi(*in.network) : xi(*in.matrix);
      } else if (map_name == "xi-prime") {
        sys = in.network ? xi_prime(*in.network) : xi_prime(*in.matrix);
      } else if (map_name == "sigma") {
        const auto net = need_network(in, "sigma");
        const auto report = validate_embedding(net);
        if (!report.valid) throw DomainError("sigma needs a valid disk embedding", {{"reason", report.reason}});
        sys = sigma(net, limits);
      } else {
        sys = in.network ? rho(*in.network) : rho(*in.matrix);
      }
      if (unweighted_out) sys = unweighted(sys);
      out << (emit == "svg" ? split_system_to_svg(sys) : dump(split_system_to_json(sys)));
    };
  });

  auto* dual = app.add_subcommand("dual", "Planar dual with reciprocal conductances");
  dual->add_option("input", input, "Network file with rotation system")->required();
  dual->callback([&] {
    action = [&] {
      require_emit(emit, {"json", "dot", "svg"});
      const auto d = planar_dual(need_network(read_input(input), "dual"));
      if (emit == "json") out << dump(network_to_json(d));
      else out << (emit == "dot" ? network_to_dot(d) : network_to_svg(d));
    };
  });

  auto* strands = app.add_subcommand("strands", "Medial strands and their perfect matching");
  strands->add_option("input", input, "Network file with rotation system")->required();
  strands->callback([&] {
    action = [&] {
      require_emit(emit, {"json", "dot", "svg"});
      const auto net = need_network(read_input(input), "strands");
      const auto sd = medial_strands(net);
      if (emit == "json") out << dump(strand_diagram_to_json(sd));
      else out << (emit == "dot" ? strands_to_dot(net, sd) : network_to_svg(net, &sd));
    };
  });

  auto* tiling = app.add_subcommand("tiling", "Plabic tiling of a split system (or of xi of a network)");
  tiling->add_option("input", input, "Split system or network file")->required();
  tiling->callback([&] {
    action = [&] {
      require_emit(emit, {"json", "svg"});
      const json j = read_json(input);
      const auto sys = j.contains("parts") ? split_system_from_json(j) : xi(network_from_json(j));
      const auto t = plabic_tiling(sys);
      out << (emit == "svg" ? tiling_to_svg(sys.n(), t) : dump(plabic_tiling_to_json(t)));
    };
  });

  auto* obstruction = app.add_subcommand("obstruction", "Ptolemy obstruction to circular planarity");
  obstruction->add_option("input", input, "Response matrix or network file")->required();
  obstruction->callback([&] {
    action = [&] {
      require_emit(emit, {"json"});
      const auto in = read_input(input);
      out << dump(obstruction_report_to_json(planarity_obstruction(in.network ? response_matrix(*in.network) : *in.matrix)));
    };
  });

  auto* embedding = app.add_subcommand("embedding", "Validate the rotation system of a network");
  embedding->add_option("input", input, "Network file")->required();
  embedding->callback([&] {
    action = [&] {
      require_emit(emit, {"json"});
      out << dump(embedding_report_to_json(validate_embedding(need_network(read_input(input), "embedding"))));
    };
  });

  std::string target;
  int n = 0;
  std::string method = "lagrange";
  auto* enumerate = app.add_subcommand("enumerate", "Count series, Ptolemy diagrams, or the whole table");
  enumerate->add_option("target", target, "omega, omegaBar, psi, psiBar, xiImage, faithfulBar, ptolemy or table")
      ->required();
  enumerate->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--method", method, "psiBar: lagrange or composition")
      ->check(CLI::IsMember({"lagrange", "composition"}))
      ->capture_default_str();
  enumerate->callback([&] {
    action = [&] {
      Limits limits;
      limits.unsafe = unsafe;
      if (target == "table") {
        require_emit(emit, {"json", "table"});
        std::vector<CountSeries> rows;
        for (const auto& name : series_names()) rows.push_back(count_series(name, n, limits));
        if (emit == "table") {
          out << count_table(rows, std::min(1, n), n);
        } else {
          json j = json::object();
          for (const auto& r : rows) j[r.name] = count_series_to_json(r)["terms"];
          out << dump({{"n", n}, {"series", j}});
        }
        return;
      }
      if (target == "ptolemy") {
        require_emit(emit, {"json"});
        json list = json::array();
        for (const auto& d : enumerate_ptolemy(n, limits)) {
          json chords = json::array();
          for (const auto& c : d.diagonals.chords) chords.push_back({c.first, c.second});
          list.push_back({{"diagonals", chords}, {"optionalSides", d.optional_sides}});
        }
        out << dump({{"n", n}, {"count", list.size()}, {"diagrams", list}});
        return;
      }
      require_emit(emit, {"json", "table"});
      CountSeries s = count_series(target, n, limits);
      if (target == "psiBar" && method == "composition") {
        const auto base = count_series("psi", n, limits);
        for (int k = 0; k <= n; ++k) s.terms[static_cast<std::size_t>(k)] = composition_count(base, k);
      }
      if (emit == "table") {
        out << count_table({s}, std::min(1, n), n);
      } else {
        json j = count_series_to_json(s);
        j["n"] = n;
        j["total"] = j["terms"].back();
        out << dump(j);
      }
    };
  });

  auto* cells = app.add_subcommand("cells", "f-vector of psi, psiBar or faithfulBar");
  cells->add_option("space", target, "psi, psiBar or faithfulBar")->required();
  cells->add_option("--n", n, "Size")->required()->check(CLI::PositiveNumber);
  cells->callback([&] {
    action = [&] {
      require_emit(emit, {"json", "table"});
      Limits limits;
      limits.unsafe = unsafe;
      const auto r = enumerate_cells(target, n, limits);
      if (emit == "table") {
        out << r.space << " n=" << r.n << " f=(";
        for (std::size_t i = 0; i < r.f_vector.size(); ++i) out << (i ? ", " : "") << r.f_vector[i].get_str();
        out << ") total=" << r.total.get_str() << "\n";
      } else {
        out << dump(cell_report_to_json(r));
      }
    };
  });

  int selftest_count = 100;
  auto* selftest = app.add_subcommand("selftest", "Property checks on random networks (seed: CIRCUITSPLIT_SEED)");
  selftest->add_option("--count", selftest_count, "Number of random networks")->check(CLI::PositiveNumber);
  bool selftest_ok = true;
  selftest->callback([&] {
    action = [&] {
      require_emit(emit, {"json"});
      Limits limits;
      limits.unsafe = unsafe;
      const auto report = run_selftest(selftest_count, limits);
      selftest_ok = report["ok"].get<bool>();
      out << dump(report);
    };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> argv_store{"circuitsplit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    action();
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << json{{"error", e.what()}, {"detail", e.detail().is_null() ? json::object() : e.detail()}}.dump() << "\n";
    return 1;
  }
  return selftest_ok ? 0 : 1;
}

}  // namespace circuitsplit
