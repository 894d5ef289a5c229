#include "gswitch/io/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "gswitch/constructions/named.hpp"
#include "gswitch/core/homogenise.hpp"
#include "gswitch/groups/group_spec.hpp"
#include "gswitch/io/certificate.hpp"
#include "gswitch/io/format.hpp"
#include "gswitch/push_graph/push_graph.hpp"
#include "gswitch/search/classes.hpp"
#include "gswitch/search/orbit.hpp"
#include "gswitch/search/probes.hpp"

namespace gswitch {

namespace {

RamseyTarget parse_targets(const std::string& text) {
  std::vector<int> a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad target entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad target entry '" + item + "'");
    a.push_back(v);
  }
  if (a.empty()) throw std::invalid_argument("empty target list");
  return RamseyTarget(std::move(a));
}

int containment_exit(ContainmentStatus s) {
  switch (s) {
    case ContainmentStatus::found:
      return kExitTrue;
    case ContainmentStatus::absent:
      return kExitFalse;
    case ContainmentStatus::unknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return kExitTrue;
    case Verdict::refuted:
      return kExitFalse;
    case Verdict::unknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Switching classes of edge-coloured complete graphs and their Ramsey numbers",
               "gswitch"};
  app.require_subcommand(1);
  app.fallthrough();

  int jobs = 0;
  std::size_t budget = kDefaultOrbitBudget;
  app.add_option("--jobs", jobs, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", budget, "cap on orbit members or swept colourings")
      ->check(CLI::PositiveNumber);

  std::string in, in2, out_path, group_text, targets_text, seq_text, name;
  int vertex = 0, colour = 0, n = 0, m = 0;
  bool brute = false, star = false;
  std::vector<std::string> witness_files;

  auto* construct = app.add_subcommand("construct", "print a built-in colouring");
  construct->add_option("name", name, "paper-k6, gg16 or gg41")->required();
  construct->add_option("--out", out_path, "write to a file instead of stdout");

  auto* sw = app.add_subcommand("switch", "apply a switching sequence");
  sw->add_option("--in", in)->required();
  sw->add_option("--seq", seq_text, "\"(v,perm);(v,perm)...\", 1-based")->required();
  sw->add_option("--out", out_path);

  auto* homog = app.add_subcommand("homogenise", "make every edge at a vertex one colour");
  homog->add_option("--in", in)->required();
  homog->add_option("--group", group_text)->required();
  homog->add_option("--vertex", vertex, "1-based")->required();
  homog->add_option("--colour", colour, "1-based")->required();
  homog->add_option("--out", out_path);

  auto* decide = app.add_subcommand("decide", "can [G] hold a target clique?");
  decide->add_option("--in", in)->required();
  decide->add_option("--group", group_text)->required();
  decide->add_option("--targets", targets_text, "a1,...,am")->required();

  auto* equiv = app.add_subcommand("equivalent", "are two colourings switch equivalent?");
  equiv->add_option("--in1", in)->required();
  equiv->add_option("--in2", in2)->required();
  equiv->add_option("--group", group_text)->required();

  auto* classes = app.add_subcommand("classes", "count switching classes");
  classes->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  classes->add_option("--m", m)->required()->check(CLI::Range(2, kMaxDegree));
  classes->add_option("--group", group_text)->required();
  classes->add_flag("--brute", brute, "partition all colourings instead of the formula");

  auto* push = app.add_subcommand("push", "build the push graph P(G)");
  push->add_option("--in", in)->required();
  push->add_option("--group", group_text)->required();
  push->add_flag("--star", star, "add validated edges between corresponding vertices");
  push->add_option("--out", out_path);

  auto* lower = app.add_subcommand("verify-lower", "certify R >= n+1 from a colouring");
  lower->add_option("--in", in)->required();
  lower->add_option("--group", group_text)->required();
  lower->add_option("--targets", targets_text)->required();

  auto* exhaustive = app.add_subcommand("verify-exhaustive", "sweep homogenised representatives");
  exhaustive->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  exhaustive->add_option("--group", group_text)->required();
  exhaustive->add_option("--targets", targets_text)->required();

  auto* bounds = app.add_subcommand("bounds", "derive an interval for R_G(targets)");
  bounds->add_option("--group", group_text)->required();
  bounds->add_option("--targets", targets_text)->required();
  bounds->add_option("--witness", witness_files, "colouring files to verify as lower witnesses");

  auto* selfiso = app.add_subcommand("selfiso", "look for H in [G], H != G, isomorphic to G");
  selfiso->add_option("--in", in)->required();
  selfiso->add_option("--group", group_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitInput;
  }

  kernels::Parallelism par{jobs};
  try {
    if (*construct) {
      emit(out, out_path, emit_colouring(named_construction(name)));
      return kExitTrue;
    }
    if (*sw) {
      EdgeColouring g = read_colouring_file(in);
      emit(out, out_path, emit_colouring(apply_sequence(g, parse_sequence(seq_text, g.m()))));
      return kExitTrue;
    }
    if (*homog) {
      EdgeColouring g = read_colouring_file(in);
      ColourGroup group = parse_group_spec(group_text, g.m());
      Homogenised h = homogenise(g, group, vertex - 1, colour - 1);
      emit(out, out_path,
           "# switches: " + format_sequence(h.sequence) + "\n" + emit_colouring(h.graph));
      return kExitTrue;
    }
    if (*decide) {
      EdgeColouring g = read_colouring_file(in);
      ColourGroup group = parse_group_spec(group_text, g.m());
      RamseyTarget t = parse_targets(targets_text);
      ContainmentResult r = decide_containment(g, group, t, budget, par);
      Json j;
      j["status"] = r.found() ? "found" : r.absent() ? "absent" : "unknown";
      if (r.witness) j["witness"] = to_json(*r.witness);
      j["candidates"] = r.stats.candidates;
      j["orbit_members"] = r.stats.orbit_members;
      out << dump(j);
      return containment_exit(r.status);
    }
    if (*equiv) {
      EdgeColouring g = read_colouring_file(in);
      EdgeColouring h = read_colouring_file(in2);
      ColourGroup group = parse_group_spec(group_text, g.m());
      auto s = switching_between(g, h, group, budget);
      Json j;
      j["equivalent"] = s.has_value();
      if (s) j["sequence"] = format_sequence(*s);
      out << dump(j);
      return s ? kExitTrue : kExitFalse;
    }
    if (*classes) {
      ColourGroup group = parse_group_spec(group_text, m);
      auto count = count_classes(n, group, brute ? CountMode::brute : CountMode::formula,
                                 budget);
      out << count << "\n";
      return kExitTrue;
    }
    if (*push) {
      EdgeColouring g = read_colouring_file(in);
      ColourGroup group = parse_group_spec(group_text, g.m());
      PushGraph p = star ? build_push_star(g, group) : build_push(g, group);
      emit(out, out_path, emit_push_graph(p));
      return kExitTrue;
    }
    if (*lower) {
      EdgeColouring g = read_colouring_file(in);
      ColourGroup group = parse_group_spec(group_text, g.m());
      RamseyTarget t = parse_targets(targets_text);
      LowerCheck c = verify_lower_witness(g, group, t, in, budget, par);
      out << dump(to_json(c, g, group, t));
      return verdict_exit(c.verdict);
    }
    if (*exhaustive) {
      RamseyTarget t = parse_targets(targets_text);
      ColourGroup group = parse_group_spec(group_text, t.colours());
      err << "sweeping homogenised representatives on " << n << " vertices\n";
      ExhaustiveCheck c = verify_value_exhaustive(n, group, t, par, budget, budget);
      err << "checked " << c.checked << " of " << c.items << "\n";
      out << dump(to_json(c, n, group, t));
      return verdict_exit(c.verdict);
    }
    if (*bounds) {
      RamseyTarget t = parse_targets(targets_text);
      ColourGroup group = parse_group_spec(group_text, t.colours());
      std::vector<LowerWitness> witnesses;
      for (const auto& file : witness_files) {
        EdgeColouring g = read_colouring_file(file);
        LowerCheck c = verify_lower_witness(g, group, t, file, budget, par);
        if (c.verdict != Verdict::verified) {
          err << "witness " << file << " " << to_string(c.verdict) << "; not used\n";
          return verdict_exit(c.verdict);
        }
        err << "witness " << file << " verified: R >= " << c.certificate->bound() << "\n";
        witnesses.push_back(*c.certificate);
      }
      out << dump(to_json(derive_bounds(group, t, witnesses)));
      return kExitTrue;
    }
    if (*selfiso) {
      EdgeColouring g = read_colouring_file(in);
      ColourGroup group = parse_group_spec(group_text, g.m());
      SelfIsomorphism r = find_switch_isomorphic(g, group, budget, par);
      Json j;
      j["status"] = r.status == ContainmentStatus::found    ? "found"
                    : r.status == ContainmentStatus::absent ? "absent"
                                                            : "unknown";
      j["orbit_members"] = r.orbit_members;
      if (r.h) {
        j["sequence"] = format_sequence(r.sequence);
        Json f = Json::array();
        for (int x : r.bijection) f.push_back(x + 1);
        j["bijection"] = std::move(f);
      }
      out << dump(j);
      return containment_exit(r.status);
    }
  } catch (const BudgetExceeded& e) {
    err << "unknown: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace gswitch
