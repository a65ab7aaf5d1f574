#include "splinedim/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "splinedim/dimension.hpp"
#include "splinedim/error.hpp"
#include "splinedim/mesh_io.hpp"
#include "splinedim/oracle.hpp"
#include "splinedim/power_ideal.hpp"

namespace splinedim::cli {

namespace {

const std::vector<std::string> kHeader = {"r", "d", "L", "H1", "dim", "method"};

std::vector<std::string> cells(const TableRow& row) {
  std::vector<std::string> out = {std::to_string(row.r),          std::to_string(row.d),
                                  std::to_string(row.lower_bound), std::to_string(row.correction),
                                  std::to_string(row.total),       row.method};
  if (row.oracle_total) {
    out.push_back(std::to_string(*row.oracle_total));
    out.push_back(row.match.value_or(false) ? "true" : "false");
  }
  return out;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw Error(ErrorCode::ParseError, "bad integer '" + text + "'");
  return v;
}

TableRow make_row(const DimReport& rep) {
  return {rep.r, rep.d, rep.lower_bound, rep.correction, rep.total, std::string(to_string(rep.method)), {}, {}};
}

DimReport compute(const Partition& p, int d, int r, Method method, bool allow_large) {
  if (method == Method::Oracle) return dim_oracle(p, d, r, allow_large);
  return dim(p, d, r, method);
}

struct Options {
  std::string mesh;
  int r = 0;
  int d = 0;
  int dmax = 0;
  std::string method = "auto";
  std::string format = "csv";
  bool verify = false;
  bool allow_large = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const Triangulation t = read_mesh(o.mesh);
  const auto ties = t.totally_interior_edges();
  out << "valid triangulation\n";
  out << "vertices=" << t.vertices().size() << " edges=" << t.edges().size()
      << " triangles=" << t.triangles().size() << "\n";
  out << "interior edges: " << t.interior_edge_count()
      << "; boundary edges: " << t.edges().size() - t.interior_edge_count() << "\n";
  out << ties.size() << " totally interior edge" << (ties.size() == 1 ? "" : "s")
      << "; interior vertices: " << t.interior_vertex_count() << "\n";
  for (auto e : ties) {
    const Edge& edge = t.edges()[e];
    const auto& a = t.vertices()[edge.a];
    const auto& b = t.vertices()[edge.b];
    out << "  edge " << edge.a << "-" << edge.b << " (" << a.x << "," << a.y << ")-(" << b.x << "," << b.y
        << ")\n";
  }
  if (ties.size() == 1) {
    const OneTieParams pr = extract_one_tie_params(t);
    out << "p=" << pr.p << " s=" << pr.s << " q=" << pr.q << " t=" << pr.t
        << (pr.slope_collision ? " slope-collision" : "") << "\n";
  }
  out << "quasi-cross-cut: " << (is_quasi_cross_cut(t) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const Partition p(read_mesh(o.mesh));
  const DimReport rep = compute(p, o.d, o.r, parse_method(o.method), o.allow_large);
  out << "L=" << rep.lower_bound << " H1=" << rep.correction << " dim=" << rep.total
      << " method=" << to_string(rep.method) << "\n";
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const Partition p(read_mesh(o.mesh));
  const Method method = parse_method(o.method);
  TableFormat format = TableFormat::Csv;
  if (o.format == "tsv") format = TableFormat::Tsv;
  else if (o.format == "pretty") format = TableFormat::Pretty;
  std::vector<TableRow> rows;
  bool all_match = true;
  for (int d = 0; d <= o.dmax; ++d) {
    TableRow row = make_row(compute(p, d, o.r, method, o.allow_large));
    if (o.verify) {
      row.oracle_total = dim_spline_oracle(p, d, o.r, o.allow_large);
      row.match = *row.oracle_total == row.total;
      all_match = all_match && *row.match;
    }
    rows.push_back(std::move(row));
  }
  emit_table(out, rows, format);
  return all_match ? kOk : kMismatch;
}

int cmd_regularity(const Options& o, std::ostream& out) {
  const Triangulation t = read_mesh(o.mesh);
  if (is_quasi_cross_cut(t)) {
    out << "dim = L for all d (quasi-cross-cut partition)\n";
    return kOk;
  }
  const OneTieParams pr = extract_one_tie_params(t);
  if (pr.slope_collision) {
    out << "dim = L for all d (trivial case: the interior edge continues straight through an endpoint)\n";
    return kOk;
  }
  if (pr.trivial_many_slopes(o.r)) {
    out << "dim = L for all d (trivial case: an endpoint has " << std::max(pr.s, pr.t) + 1
        << " slopes, at least r+3 = " << o.r + 3 << ")\n";
    return kOk;
  }
  const TiePair tp(pr.s, pr.t, o.r);
  out << "s=" << pr.s << " t=" << pr.t << " r=" << o.r << "\n";
  out << "homology regularity: " << homology_regularity(tp) << "\n";
  out << "stabilization degree: " << stabilization_degree(pr, o.r) << "\n";
  out << "supersmoothness threshold: " << supersmoothness_threshold(pr.s, pr.t, o.r) << "\n";
  out << "congruence case: " << (congruence_case(tp) ? "yes" : "no") << "\n";
  return kOk;
}

int exit_for(const Error& e) { return e.code() == ErrorCode::ParseError ? kIoError : kDomainError; }

}  // namespace

void emit_table(std::ostream& out, const std::vector<TableRow>& rows, TableFormat format) {
  const bool verify = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.oracle_total; });
  std::vector<std::string> header = kHeader;
  if (verify) {
    header.emplace_back("oracle");
    header.emplace_back("match");
  }
  std::vector<std::vector<std::string>> grid{header};
  for (const auto& row : rows) {
    auto c = cells(row);
    c.resize(header.size());
    grid.push_back(std::move(c));
  }
  if (format == TableFormat::Pretty) {
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : grid) {
      for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    for (const auto& line : grid) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << line[i];
      }
      out << "\n";
    }
    return;
  }
  const char sep = format == TableFormat::Csv ? ',' : '\t';
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) out << (i ? std::string(1, sep) : "") << line[i];
    out << "\n";
  }
}

std::vector<TableRow> parse_table_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "empty table");
  const auto header = split(line, ',');
  const bool verify = header.size() == 8;
  std::vector<std::string> expected = kHeader;
  if (verify) {
    expected.emplace_back("oracle");
    expected.emplace_back("match");
  }
  if (header != expected) throw Error(ErrorCode::ParseError, "unexpected header '" + line + "'");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != header.size()) throw Error(ErrorCode::ParseError, "bad row '" + line + "'");
    TableRow row{static_cast<int>(parse_int(f[0])), static_cast<int>(parse_int(f[1])), parse_int(f[2]),
                 parse_int(f[3]), parse_int(f[4]), f[5], {}, {}};
    if (verify) {
      row.oracle_total = parse_int(f[6]);
      if (f[7] != "true" && f[7] != "false") throw Error(ErrorCode::ParseError, "bad match flag '" + f[7] + "'");
      row.match = f[7] == "true";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of planar spline spaces with exact arithmetic"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "check a mesh and print its classification");
  validate->add_option("mesh", o.mesh, "mesh file")->required();

  auto* dimc = app.add_subcommand("dim", "dimension of C^r_d for one (r, d)");
  dimc->add_option("mesh", o.mesh, "mesh file")->required();
  dimc->add_option("--r", o.r, "smoothness")->required()->check(CLI::NonNegativeNumber);
  dimc->add_option("--d", o.d, "degree")->required()->check(CLI::NonNegativeNumber);
  dimc->add_option("--method", o.method, "auto|lattice|explicit|oracle")
      ->check(CLI::IsMember({"auto", "lattice", "explicit", "oracle"}));
  dimc->add_flag("--allow-large", o.allow_large, "lift the oracle size limit");

  auto add_table_opts = [&](CLI::App* sub) {
    sub->add_option("mesh", o.mesh, "mesh file")->required();
    sub->add_option("--r", o.r, "smoothness")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--dmax", o.dmax, "largest degree")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "csv|tsv|pretty")->check(CLI::IsMember({"csv", "tsv", "pretty"}));
    sub->add_option("--method", o.method, "auto|lattice|explicit|oracle")
        ->check(CLI::IsMember({"auto", "lattice", "explicit", "oracle"}));
    sub->add_flag("--allow-large", o.allow_large, "lift the oracle size limit");
  };
  auto* table = app.add_subcommand("table", "dimension table for d = 0..dmax");
  add_table_opts(table);
  table->add_flag("--verify", o.verify, "add oracle columns; exit 3 on any mismatch");
  auto* verify = app.add_subcommand("verify", "same as table --verify");
  add_table_opts(verify);

  auto* reg = app.add_subcommand("regularity", "stabilization degree and thresholds");
  reg->add_option("mesh", o.mesh, "mesh file")->required();
  reg->add_option("--r", o.r, "smoothness")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kIoError;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*dimc) return cmd_dim(o, out);
    if (*verify) o.verify = true;
    if (*table || *verify) return cmd_table(o, out);
    if (*reg) return cmd_regularity(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kDomainError;
}

}  // namespace splinedim::cli
