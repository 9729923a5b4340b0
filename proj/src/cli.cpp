#include "vinerep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "vinerep/error.hpp"
#include "vinerep/format.hpp"
#include "vinerep/generators.hpp"
#include "vinerep/simplify.hpp"
#include "vinerep/svg.hpp"

namespace vinerep {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("ParseError", "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("ParseError", "cannot write " + path);
  out << content;
}

nlohmann::ordered_json lambda_json(const SimplifiedModule& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ResidualEntry& r : s.lambda) {
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    e["time"] = rat_to_string(r.time);
    e["k"] = r.k;
    e["l"] = r.l;
    e["value"] = r.value.to_string();
    arr.push_back(std::move(e));
  }
  return arr;
}

void print_lambda_text(const SimplifiedModule& s, std::ostream& out) {
  for (const ResidualEntry& r : s.lambda)
    out << "t=" << rat_to_string(r.time) << " (k=" << r.k << ", l=" << r.l
        << ") lambda=" << r.value.to_string() << "\n";
  if (s.lambda.empty()) out << "(no backwards-incompatible times)\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"vineyard-module representations: simplification, lambda vectors, triviality"};
  app.name("vinerep");
  app.require_subcommand(1);

  std::string in_path, out_path;
  bool json_mode = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a module file; exit 0 iff compliant");
  validate_cmd->add_option("file", in_path)->required();

  auto* simplify_cmd = app.add_subcommand("simplify", "run simplification passes, write the result");
  simplify_cmd->add_option("file", in_path)->required();
  simplify_cmd->add_option("-o,--output", out_path)->required();
  std::string pass = "both";
  simplify_cmd->add_option("--pass", pass)->check(CLI::IsMember({"forward", "backward", "both"}));

  auto* lambda_cmd = app.add_subcommand("lambda", "print the lambda vector with times and (k,l)");
  lambda_cmd->add_option("file", in_path)->required();
  lambda_cmd->add_flag("--json", json_mode);

  auto* trivial_cmd = app.add_subcommand("trivial", "decide triviality; exit 0 iff trivial");
  trivial_cmd->add_option("file", in_path)->required();
  trivial_cmd->add_flag("--json", json_mode);

  auto* decompose_cmd = app.add_subcommand("decompose", "print the block partition of the vines");
  decompose_cmd->add_option("file", in_path)->required();
  decompose_cmd->add_flag("--json", json_mode);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force triviality check (small modules)");
  oracle_cmd->add_option("file", in_path)->required();

  auto* generate_cmd = app.add_subcommand("generate", "emit a module file");
  std::string kind;
  generate_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"annulus", "random"}));
  generate_cmd->add_option("-o,--output", out_path)->required();
  bool twisted = false, obfuscate = false, boundary = false, compact = false;
  std::uint64_t seed = 0;
  int vines = 2, events = 1, twists = 0;
  long from_t = 0, to_t = 10;
  std::string field_name = "gf2";
  generate_cmd->add_flag("--twisted", twisted, "annulus: carry the nontrivial twist at t=3");
  generate_cmd->add_option("--from", from_t, "annulus: window start");
  generate_cmd->add_option("--to", to_t, "annulus: window end");
  generate_cmd->add_option("--seed", seed);
  generate_cmd->add_option("--vines", vines);
  generate_cmd->add_option("--events", events);
  generate_cmd->add_option("--twists", twists);
  generate_cmd->add_flag("--obfuscate", obfuscate);
  generate_cmd->add_flag("--boundary", boundary, "random: include an interior-support vine");
  generate_cmd->add_flag("--compact", compact, "random: oracle-friendly grid sizes");
  generate_cmd->add_option("--field", field_name)->check(CLI::IsMember({"gf2", "q"}));

  auto* render_cmd = app.add_subcommand("render", "draw the vineyard as SVG");
  render_cmd->add_option("file", in_path)->required();
  render_cmd->add_option("-o,--output", out_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      VineyardModuleRep rep = parse_module(read_file(in_path), false);
      Report r = validate_vineyard(rep.vy);
      r.merge(validate_module(rep));
      if (r.ok()) {
        out << "ok\n";
        return 0;
      }
      out << r.to_string();
      return 1;
    }
    if (simplify_cmd->parsed()) {
      VineyardModuleRep rep = parse_module(read_file(in_path));
      VineyardModuleRep result = rep;
      if (pass == "forward")
        result = forward_simplify(rep).rep;
      else if (pass == "backward")
        result = backward_simplify(rep).rep;
      else
        result = simplify(rep).rep;
      write_file(out_path, serialize_module(result));
      out << "wrote " << out_path << "\n";
      return 0;
    }
    if (lambda_cmd->parsed()) {
      SimplifiedModule s = simplify(parse_module(read_file(in_path)));
      if (json_mode)
        out << lambda_json(s).dump(2) << "\n";
      else
        print_lambda_text(s, out);
      return 0;
    }
    if (trivial_cmd->parsed()) {
      SimplifiedModule s = simplify(parse_module(read_file(in_path)));
      TrivialityResult t = is_trivial(s);
      if (json_mode) {
        nlohmann::ordered_json j;
        j["trivial"] = t.trivial;
        j["lambda"] = lambda_json(s);
        out << j.dump(2) << "\n";
      } else {
        out << (t.trivial ? "trivial" : "nontrivial") << "\n";
      }
      return t.trivial ? 0 : 1;
    }
    if (decompose_cmd->parsed()) {
      VineyardModuleRep rep = parse_module(read_file(in_path));
      auto blocks = block_partition(rep);
      if (json_mode) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& b : blocks) j.push_back(b);
        out << j.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          out << "block " << i << ":";
          for (int id : blocks[i]) out << " " << id;
          out << "\n";
        }
      }
      return 0;
    }
    if (oracle_cmd->parsed()) {
      bool triv = brute_force_trivial(parse_module(read_file(in_path)));
      out << (triv ? "trivial" : "nontrivial") << "\n";
      return triv ? 0 : 1;
    }
    if (generate_cmd->parsed()) {
      VineyardModuleRep rep;
      if (kind == "annulus") {
        rep = generate_annulus(AnnulusOptions{twisted, from_t, to_t});
      } else {
        RandomOptions opt;
        opt.seed = seed;
        opt.n_vines = vines;
        opt.n_events = events;
        opt.field = field_name == "q" ? Field::rationals() : Field::gf(2);
        opt.obfuscate = obfuscate;
        opt.twist_count = twists;
        opt.with_boundary_vine = boundary;
        opt.compact = compact;
        rep = generate_random(opt);
      }
      write_file(out_path, serialize_module(rep));
      out << "wrote " << out_path << "\n";
      return 0;
    }
    if (render_cmd->parsed()) {
      VineyardModuleRep rep = parse_module(read_file(in_path));
      write_file(out_path, render_svg(rep.vy));
      out << "wrote " << out_path << "\n";
      return 0;
    }
  } catch (const error& e) {
    err << e.what() << "\n";
    return e.code() == "TooLarge" ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace vinerep
