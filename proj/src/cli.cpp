#include "gl3/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "gl3/emit.hpp"

namespace gl3 {

namespace {

// bounds a CLI request can ask for without runaway enumeration
constexpr int kMaxComponent = 16;
constexpr int kMaxSum = 48;

Triple parse_triple(const std::string& s) {
  Triple t;
  char comma1 = 0, comma2 = 0;
  std::istringstream in(s);
  if (!(in >> t.c1 >> comma1 >> t.c2 >> comma2 >> t.c3) || comma1 != ',' ||
      comma2 != ',' || !(in >> std::ws).eof())
    throw std::invalid_argument("malformed triple '" + s + "' (want c1,c2,c3)");
  return t;
}

struct BoundArgs {
  std::string max;
  int sum_max = -1;
  TmBound resolve() const {
    if (!max.empty() && sum_max >= 0)
      throw std::invalid_argument("give either --max or --sum-max, not both");
    if (!max.empty()) {
      Triple cap = parse_triple(max);
      if (cap.c1 > kMaxComponent || cap.c2 > kMaxComponent || cap.c3 > kMaxComponent)
        throw std::invalid_argument("bound exceeds the safety limit");
      return TmBound::componentwise(cap);
    }
    if (sum_max >= 0) {
      if (sum_max > kMaxSum) throw std::invalid_argument("bound exceeds the safety limit");
      return TmBound::sum(sum_max);
    }
    throw std::invalid_argument("missing bound: --max c1,c2,c3 or --sum-max S");
  }
};

void add_bound_flags(CLI::App* cmd, BoundArgs& bound) {
  cmd->add_option("--max", bound.max, "componentwise bound c1,c2,c3");
  cmd->add_option("--sum-max", bound.sum_max, "bound on c1+c2+c3");
}

void check_q0(std::optional<long long> q0) {
  if (q0 && *q0 <= 3) throw std::invalid_argument("q0 must be at least 4");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"branching data for ramified principal series of GL(3) over a "
               "p-adic field, restricted to the maximal compact subgroup"};
  app.require_subcommand(1);

  int M = 0, N = 1;
  auto add_conductors = [&](CLI::App* cmd) {
    cmd->add_option("--M", M, "conductor of the middle character")->required();
    cmd->add_option("--N", N, "conductor of the last character")->required();
  };

  BoundArgs bound;
  std::optional<long long> q0;
  std::string format = "text";
  std::string triple_arg, c_arg, d_arg;

  CLI::App* list = app.add_subcommand("list", "enumerate T_m within a bound");
  add_conductors(list);
  add_bound_flags(list, bound);
  list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* dims = app.add_subcommand("dims", "dimensions of U_c and V_c");
  add_conductors(dims);
  dims->add_option("--triple", triple_arg, "triple c1,c2,c3")->required();
  dims->add_option("--q0", q0, "also evaluate at a concrete q");
  dims->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* inter = app.add_subcommand("intertwine", "intertwining dimension of V_c with V_d");
  add_conductors(inter);
  inter->add_option("--c", c_arg)->required();
  inter->add_option("--d", d_arg)->required();
  inter->add_option("--q0", q0, "also evaluate at a concrete q");

  CLI::App* diagram = app.add_subcommand("diagram", "DOT diagram of the bounded poset");
  add_conductors(diagram);
  add_bound_flags(diagram, bound);

  CLI::App* table = app.add_subcommand("table", "CSV table of quotient dimensions");
  add_conductors(table);
  add_bound_flags(table, bound);
  table->add_option("--q0", q0, "also evaluate at a concrete q");

  long long p = 5;
  int level = 1;
  std::string mode = "auto";
  uint64_t seed = 1;
  long long samples = 100000, ceiling = 1000000000;
  std::vector<std::string> pair_args;
  CLI::App* verify = app.add_subcommand("verify", "compare against the finite-group oracle");
  add_conductors(verify);
  verify->add_option("--p", p, "odd prime >= 5 realizing q");
  verify->add_option("--level", level, "congruence level n")->check(CLI::Range(1, 2));
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sampled", "auto"}));
  verify->add_option("--seed", seed);
  verify->add_option("--samples", samples);
  verify->add_option("--ceiling", ceiling);
  verify->add_option("--pair", pair_args,
                     "restrict to pairs 'c1,c2,c3:d1,d2,d3' (repeatable)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    check_q0(q0);
    ConductorData cd(M, N);

    if (list->parsed()) {
      std::vector<Triple> ts = enumerate_Tm(cd.m, bound.resolve());
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = kSchemaTag;
        j["M"] = M;
        j["N"] = N;
        nlohmann::json arr = nlohmann::json::array();
        for (const Triple& t : ts) arr.push_back(to_json(t));
        j["triples"] = std::move(arr);
        out << j.dump(2) << "\n";
      } else {
        for (const Triple& t : ts)
          out << "(" << t.c1 << "," << t.c2 << "," << t.c3 << ")\n";
      }
      return 0;
    }

    if (dims->parsed()) {
      Triple c = parse_triple(triple_arg);
      QPoly u = dim_U(c, cd), v = dim_V(c, cd);
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = kSchemaTag;
        j["M"] = M;
        j["N"] = N;
        j["triple"] = to_json(c);
        j["dim_U"] = to_json(u);
        j["dim_U_str"] = u.str();
        j["dim_V"] = to_json(v);
        j["dim_V_str"] = v.str();
        if (q0) {
          j["dim_U_at_q0"] = to_json(poly_eval(u, *q0));
          j["dim_V_at_q0"] = to_json(poly_eval(v, *q0));
        }
        out << j.dump(2) << "\n";
      } else {
        out << "dim U = " << u.str() << "\n";
        out << "dim V = " << v.str() << "\n";
        if (q0) {
          out << "dim U at q=" << *q0 << ": " << poly_eval(u, *q0).str() << "\n";
          out << "dim V at q=" << *q0 << ": " << poly_eval(v, *q0).str() << "\n";
        }
      }
      return 0;
    }

    if (inter->parsed()) {
      IntertwiningReport rep = intertwine_V(parse_triple(c_arg), parse_triple(d_arg), cd);
      nlohmann::json j = to_json(rep);
      if (q0) j["i_VV_at_q0"] = to_json(poly_eval(rep.i_VV, *q0));
      out << j.dump(2) << "\n";
      return 0;
    }

    if (diagram->parsed()) {
      out << diagram_emit(cd, bound.resolve());
      return 0;
    }

    if (table->parsed()) {
      out << table_emit(cd, bound.resolve(), q0);
      return 0;
    }

    if (verify->parsed()) {
      std::vector<std::pair<Triple, Triple>> pairs;
      if (pair_args.empty()) {
        pairs = oracle::default_pairs(cd, level);
      } else {
        for (const std::string& s : pair_args) {
          size_t colon = s.find(':');
          if (colon == std::string::npos)
            throw std::invalid_argument("malformed pair '" + s + "' (want c:d)");
          pairs.emplace_back(parse_triple(s.substr(0, colon)),
                             parse_triple(s.substr(colon + 1)));
        }
      }
      oracle::MackeyMode mk = mode == "exact"   ? oracle::MackeyMode::Exact
                              : mode == "sampled" ? oracle::MackeyMode::Sampled
                                                  : oracle::MackeyMode::Auto;
      oracle::VerifyReport rep =
          oracle::verify_report(p, level, cd, pairs, mk, seed, samples, ceiling);
      out << to_json(rep).dump(2) << "\n";
      return rep.all_ok ? 0 : 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace gl3
