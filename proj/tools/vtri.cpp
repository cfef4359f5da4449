#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vtri/alexander.hpp"
#include "vtri/coloring.hpp"
#include "vtri/diagram.hpp"
#include "vtri/enumerate.hpp"
#include "vtri/error.hpp"
#include "vtri/faces.hpp"
#include "vtri/knot_table.hpp"
#include "vtri/modular.hpp"
#include "vtri/tensor_io.hpp"

namespace {

using namespace vtri;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct DiagramInput {
  std::string gauss;
  std::string file;
};

void add_diagram_options(CLI::App* cmd, DiagramInput& in) {
  auto* g = cmd->add_option("--gauss", in.gauss, "Gauss code, e.g. O1-O2+U1-U2+ or 'o'");
  auto* f = cmd->add_option("--diagram", in.file, "explicit diagram file");
  g->excludes(f);
  f->excludes(g);
  cmd->require_option(1, 0);
}

Diagram load_diagram(const DiagramInput& in) {
  if (!in.file.empty()) return parse_diagram(slurp(in.file));
  return realize(parse_gauss(in.gauss));
}

// Writes to `path`, or stdout when empty.
template <class F>
void emit(const std::string& path, F&& body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  body(out);
}

std::string stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual tribrackets and region-coloring counts"};
  app.require_subcommand(1);

  std::string convention_name;
  app.add_option("--convention", convention_name, "quadrant role convention (debugging)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check the axioms of a tensor file");
  std::string verify_path;
  verify_cmd->add_option("tensor", verify_path)->required();

  // alexander
  auto* alex_cmd = app.add_subcommand("alexander", "emit an Alexander structure over Z_m");
  AlexanderParams alex;
  std::optional<int> alex_v;
  std::string alex_out;
  alex_cmd->add_option("--mod", alex.modulus)->required()->check(CLI::PositiveNumber);
  alex_cmd->add_option("--x", alex.x)->required();
  alex_cmd->add_option("--y", alex.y)->required();
  alex_cmd->add_option("--v", alex_v);
  alex_cmd->add_option("--out", alex_out);

  // count
  auto* count_cmd = app.add_subcommand("count", "count colorings by a tensor");
  DiagramInput count_in;
  std::string count_tensor;
  add_diagram_options(count_cmd, count_in);
  count_cmd->add_option("--tensor", count_tensor)->required();

  // count-alexander
  auto* calex_cmd = app.add_subcommand("count-alexander", "count colorings by linear algebra");
  DiagramInput calex_in;
  AlexanderParams calex;
  add_diagram_options(calex_cmd, calex_in);
  calex_cmd->add_option("--mod", calex.modulus)->required()->check(CLI::PositiveNumber);
  calex_cmd->add_option("--x", calex.x)->required();
  calex_cmd->add_option("--y", calex.y)->required();
  calex_cmd->add_option("--v", calex.v)->required();

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "list every virtual tribracket of an order");
  int enum_order = 0;
  std::optional<std::uint64_t> enum_limit;
  std::string enum_out;
  unsigned jobs = 0;
  enum_cmd->add_option("--order", enum_order)->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--limit", enum_limit)->check(CLI::PositiveNumber);
  enum_cmd->add_option("--out", enum_out);
  enum_cmd->add_option("--jobs", jobs, "worker threads (0: all cores)");

  // table
  auto* table_cmd = app.add_subcommand("table", "batch counts over a knot table");
  std::string table_knots, table_out;
  std::vector<std::string> table_tensors;
  table_cmd->add_option("--knots", table_knots)->required();
  table_cmd->add_option("--tensor", table_tensors)->required();
  table_cmd->add_option("--out", table_out);
  table_cmd->add_option("--jobs", jobs, "worker threads (0: all cores)");

  // realize
  auto* realize_cmd = app.add_subcommand("realize", "planar diagram of a Gauss code");
  std::string realize_gauss;
  realize_cmd->add_option("--gauss", realize_gauss)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const RoleConvention convention =
        convention_name.empty() ? kRoleConvention : parse_role_convention(convention_name);

    if (*verify_cmd) {
      TensorFile file = read_tensor_file(verify_path);
      if (!file.virtual_table) {
        if (!is_three_determined(file.classical)) {
          std::cout << "classical table: not three-determined\n";
          return 1;
        }
        auto violations = check_classical_axioms(file.classical);
        for (const Violation& v : violations)
          std::cout << "violation " << to_string(v.identity) << '\n';
        std::cout << (violations.empty() ? "verified (classical only)\n" : "not verified\n");
        return violations.empty() ? 0 : 1;
      }
      VerifyReport report = verify(VirtualTribracket(file.classical, *file.virtual_table));
      std::cout << describe(report) << '\n';
      return report.verified() ? 0 : 1;
    }

    if (*alex_cmd) {
      if (alex_v) {
        alex.v = *alex_v;
        VirtualTribracket v = virtual_alexander(alex);
        emit(alex_out, [&](std::ostream& os) { write_tensor(os, v); });
      } else {
        check_classical_params(alex);
        TernaryTable t = alexander_classical(alex.modulus, alex.x, alex.y);
        emit(alex_out, [&](std::ostream& os) {
          os << t.order() << "\n\n";
          write_table(os, t);
        });
      }
      return 0;
    }

    if (*count_cmd) {
      VirtualTribracket v = read_virtual_tribracket(count_tensor).verified();
      Diagram d = load_diagram(count_in);
      std::cout << count_colorings(d, v, CountOptions{false, convention}).count << '\n';
      return 0;
    }

    if (*calex_cmd) {
      Diagram d = load_diagram(calex_in);
      std::cout << count_alexander(d, calex, convention).count << '\n';
      return 0;
    }

    if (*enum_cmd) {
      EnumerateOptions opts;
      opts.limit = enum_limit;
      opts.jobs = jobs;
      std::uint64_t emitted = 0;
      emit(enum_out, [&](std::ostream& os) {
        emitted = enumerate_virtual_tribrackets(enum_order, opts, [&](const VirtualTribracket& v) {
          os << "# structure " << emitted + 1 << '\n';
          write_tensor(os, v);
          os << '\n';
          ++emitted;
          return true;
        });
      });
      std::cerr << emitted << " structures of order " << enum_order << '\n';
      return 0;
    }

    if (*table_cmd) {
      KnotTable knots = load_table(table_knots);
      std::vector<NamedStructure> structures;
      for (const std::string& path : table_tensors)
        structures.push_back({stem(path), read_virtual_tribracket(path).verified()});
      auto rows = batch_invariants(knots, structures, BatchOptions{jobs, convention});
      for (const InvariantRow& r : rows)
        if (!r.count) std::cerr << r.structure << ' ' << r.knot << ": " << r.error << '\n';
      emit(table_out, [&](std::ostream& os) { write_csv(os, rows); });
      return 0;
    }

    if (*realize_cmd) {
      Diagram d = realize(parse_gauss(realize_gauss));
      FaceSet f = faces(d);
      std::cout << format_diagram(d);
      std::cout << "# crossings " << d.crossing_count() << " (" << d.classical_count()
                << " classical, " << d.virtual_count() << " virtual), edges " << d.edge_count()
                << ", faces " << f.region_count << '\n';
      for (std::size_t i = 0; i < f.pieces.size(); ++i) {
        const auto& p = f.pieces[i];
        std::cout << "# piece " << i + 1 << ": V - E + F = " << p.crossings << " - " << p.edges
                  << " + " << p.faces << " = " << p.crossings - p.edges + p.faces << '\n';
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
