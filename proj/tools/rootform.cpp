/*
 * Copyright 2026 The rootform Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// rootform: command line front end.
//
//   rootform reduce  --basis X1,Y1,X2,Y2 [--tol T] [--max-iter N]
//   rootform rootform -i FILE [-o FILE] [--oriented]
//   rootform dist    --q Q (--rf A,B,C --rf2 A,B,C | --basis ... --basis2 ...) [--oriented]
//   rootform qt      -i FILE -o FILE [--signed]
//   rootform grid    -i FILE -o OUT.csv [--pgm OUT.pgm] [--xmin ..] [--res N] [--mode rootpair|qt]
//   rootform voronoi --basis X1,Y1,X2,Y2

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rootform/errors.hpp"
#include "rootform/format.hpp"
#include "rootform/grid.hpp"
#include "rootform/lattice.hpp"
#include "rootform/metrics.hpp"
#include "rootform/pipeline.hpp"
#include "rootform/projection.hpp"
#include "rootform/records.hpp"
#include "rootform/voronoi.hpp"

namespace {

using namespace rootform;

struct InputOptions {
  std::string input;
  bool lenient = false;
};

Basis2 basis_from_text(const std::string& text) {
  const std::vector<double> v = parse_number_list(text, 4);
  return Basis2::make({v[0], v[1]}, {v[2], v[3]});
}

std::ostream& open_output(const std::string& path, std::unique_ptr<std::ofstream>& holder,
                          bool binary = false) {
  if (path.empty() || path == "-")
    return std::cout;
  holder = std::make_unique<std::ofstream>(path, binary ? std::ios::binary : std::ios::out);
  if (!*holder)
    fail(ErrorKind::InvalidArgument, "cannot open '" + path + "' for writing");
  return *holder;
}

std::vector<LatticeRecord> load_records(const InputOptions& in) {
  std::ifstream file;
  std::istream* src = &std::cin;
  if (in.input != "-") {
    file.open(in.input);
    if (!file)
      fail(ErrorKind::InvalidArgument, "cannot open '" + in.input + "'");
    src = &file;
  }
  if (!in.lenient)
    return parse_records(*src);
  ParseOutcome parsed = parse_records_lenient(*src);
  for (const ParseError& e : parsed.skipped)
    std::cerr << "warning: skipped " << e.what() << '\n';
  return std::move(parsed.records);
}

// Runs the batch and drops (lenient) or rejects (strict) failing records.
std::vector<RecordOutcome> run_batch(const std::vector<LatticeRecord>& records, bool lenient) {
  std::vector<RecordOutcome> out = process_records(records, worker_count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].invariants)
      continue;
    const std::string msg = "record '" + records[i].id + "' (line " +
                            std::to_string(records[i].line) + "): " + out[i].error;
    if (!lenient)
      fail(ErrorKind::InvalidArgument, msg);
    std::cerr << "warning: skipped " << msg << '\n';
  }
  return out;
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-i,--input", in.input, "record file ('-' for stdin)")->required();
  cmd->add_flag("--lenient", in.lenient, "skip malformed records with a warning");
}

int cmd_reduce(const std::string& basis_text, double tol, int max_iter) {
  const Basis2 b = basis_from_text(basis_text);
  const ObtuseSuperbase s = reduce_to_obtuse(b, {tol, max_iter});
  const RootForm rf = root_form(s);
  const OrientedRootForm orf = oriented_root_form(s);
  const ConormTriple& c = s.conorms();
  std::cout << "v0x,v0y,v1x,v1y,v2x,v2y,p12,p01,p02,r12,r01,r02,sign,steps\n";
  for (const Vec2& v : s.superbase().vectors())
    std::cout << format_number(v.x) << ',' << format_number(v.y) << ',';
  std::cout << format_number(c.p12) << ',' << format_number(c.p01) << ',' << format_number(c.p02)
            << ',' << format_number(rf.r12()) << ',' << format_number(rf.r01()) << ','
            << format_number(rf.r02()) << ',' << to_string(orf.sign()) << ','
            << s.reduction_steps() << '\n';
  return 0;
}

int cmd_rootform(const InputOptions& in, const std::string& output, bool oriented) {
  const std::vector<LatticeRecord> records = load_records(in);
  const std::vector<RecordOutcome> res = run_batch(records, in.lenient);
  std::unique_ptr<std::ofstream> holder;
  std::ostream& out = open_output(output, holder);
  out << "id,r12,r01,r02,sign\n";
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (!res[i].invariants)
      continue;
    const LatticeInvariants& inv = *res[i].invariants;
    const std::array<double, 3>& r = oriented ? inv.oriented.values() : inv.root_form.values();
    out << records[i].id << ',' << format_number(r[0]) << ',' << format_number(r[1]) << ','
        << format_number(r[2]) << ',' << to_string(inv.oriented.sign()) << '\n';
  }
  return 0;
}

struct DistOptions {
  std::string q = "2";
  std::string rf, rf2, basis, basis2;
  bool oriented = false;
};

int cmd_dist(const DistOptions& o) {
  const MinkowskiOrder q = MinkowskiOrder::parse(o.q);
  double d = 0.0;
  if (!o.rf.empty() && !o.rf2.empty() && o.basis.empty() && o.basis2.empty()) {
    const std::vector<double> a = parse_number_list(o.rf, 3), b = parse_number_list(o.rf2, 3);
    if (o.oriented)
      d = root_metric_oriented(OrientedRootForm::make(a[0], a[1], a[2]),
                               OrientedRootForm::make(b[0], b[1], b[2]), q);
    else
      d = root_metric(RootForm::make(a[0], a[1], a[2]), RootForm::make(b[0], b[1], b[2]), q);
  } else if (!o.basis.empty() && !o.basis2.empty() && o.rf.empty() && o.rf2.empty()) {
    const Basis2 a = basis_from_text(o.basis), b = basis_from_text(o.basis2);
    if (o.oriented)
      d = root_metric_oriented(oriented_root_form(a), oriented_root_form(b), q);
    else
      d = root_metric(root_form(a), root_form(b), q);
  } else {
    fail(ErrorKind::InvalidArgument, "give either --rf and --rf2, or --basis and --basis2");
  }
  std::cout << format_number(d) << '\n';
  return 0;
}

int cmd_qt(const InputOptions& in, const std::string& output, bool signed_x) {
  const std::vector<LatticeRecord> records = load_records(in);
  const std::vector<RecordOutcome> res = run_batch(records, in.lenient);
  std::unique_ptr<std::ofstream> holder;
  std::ostream& out = open_output(output, holder);
  out << "id,x,y\n";
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (!res[i].invariants)
      continue;
    const QTPoint& p = res[i].invariants->qt;
    out << records[i].id << ',' << format_number(signed_x ? p.signed_x : p.x) << ','
        << format_number(p.y) << '\n';
  }
  return 0;
}

struct GridOptions {
  std::string output, pgm;
  std::optional<double> x_min, x_max, y_min, y_max;
  std::optional<int> res;
  GridMode mode = GridMode::RootPair;
};

int cmd_grid(const InputOptions& in, const GridOptions& o) {
  GridSpec spec = default_grid_spec(o.mode);
  if (o.x_min) spec.x_min = *o.x_min;
  if (o.x_max) spec.x_max = *o.x_max;
  if (o.y_min) spec.y_min = *o.y_min;
  if (o.y_max) spec.y_max = *o.y_max;
  if (o.res) spec.resolution = *o.res;
  spec.validate();

  const std::vector<LatticeRecord> records = load_records(in);
  const std::vector<RecordOutcome> res = run_batch(records, in.lenient);
  const DensityGrid grid = grid_from_outcomes(res, o.mode, spec);
  {
    std::unique_ptr<std::ofstream> holder;
    emit_grid(grid, GridFormat::Csv, open_output(o.output, holder));
  }
  if (!o.pgm.empty()) {
    std::unique_ptr<std::ofstream> holder;
    emit_grid(grid, GridFormat::Pgm, open_output(o.pgm, holder, true));
  }
  std::cerr << "binned " << grid.total() << " lattices, " << grid.overflow()
            << " outside the grid\n";
  return 0;
}

int cmd_voronoi(const std::string& basis_text) {
  const Basis2 b = basis_from_text(basis_text);
  std::cout << "kind,c1,c2,x,y,strict\n";
  for (const VoronoiVector& v : voronoi_vectors(b))
    std::cout << "vector," << v.c1 << ',' << v.c2 << ',' << format_number(v.vector.x) << ','
              << format_number(v.vector.y) << ',' << (v.strict ? 1 : 0) << '\n';
  for (const Vec2& w : voronoi_domain(b).vertices)
    std::cout << "vertex,,," << format_number(w.x) << ',' << format_number(w.y) << ",\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root forms, root metrics and quotient-triangle maps of 2D lattices"};
  app.require_subcommand(1);

  std::string basis_text;
  double tol = 1e-10;
  int max_iter = 1000;
  auto* reduce = app.add_subcommand("reduce", "reduce a basis to an obtuse superbase");
  reduce->add_option("--basis", basis_text, "X1,Y1,X2,Y2")->required();
  reduce->add_option("--tol", tol, "relative negativity tolerance")->capture_default_str();
  reduce->add_option("--max-iter", max_iter, "reduction step limit")->capture_default_str();

  InputOptions rf_in;
  std::string rf_out;
  bool rf_oriented = false;
  auto* rootform_cmd = app.add_subcommand("rootform", "root form of every record");
  add_input(rootform_cmd, rf_in);
  rootform_cmd->add_option("-o,--output", rf_out, "output CSV (default stdout)");
  rootform_cmd->add_flag("--oriented", rf_oriented, "emit orientation-preserving root forms");

  DistOptions dist_opt;
  auto* dist = app.add_subcommand("dist", "root metric between two lattices");
  dist->add_option("--q", dist_opt.q, "Minkowski order (number >= 1 or inf)")->required();
  dist->add_option("--rf", dist_opt.rf, "first root form A12,A01,A02");
  dist->add_option("--rf2", dist_opt.rf2, "second root form");
  dist->add_option("--basis", dist_opt.basis, "first basis X1,Y1,X2,Y2");
  dist->add_option("--basis2", dist_opt.basis2, "second basis");
  dist->add_flag("--oriented", dist_opt.oriented, "orientation-preserving metric");

  InputOptions qt_in;
  std::string qt_out;
  bool qt_signed = false;
  auto* qt = app.add_subcommand("qt", "quotient-triangle coordinates of every record");
  add_input(qt, qt_in);
  qt->add_option("-o,--output", qt_out, "output CSV")->required();
  qt->add_flag("--signed", qt_signed, "negative lattices get x < 0");

  InputOptions grid_in;
  GridOptions grid_opt;
  std::string mode_text = "rootpair";
  auto* grid = app.add_subcommand("grid", "density grid of root pairs or QT points");
  add_input(grid, grid_in);
  grid->add_option("-o,--output", grid_opt.output, "output CSV")->required();
  grid->add_option("--pgm", grid_opt.pgm, "also write a binary PGM image");
  grid->add_option("--xmin", grid_opt.x_min);
  grid->add_option("--xmax", grid_opt.x_max);
  grid->add_option("--ymin", grid_opt.y_min);
  grid->add_option("--ymax", grid_opt.y_max);
  grid->add_option("--res", grid_opt.res, "pixels per axis");
  grid->add_option("--mode", mode_text, "rootpair | qt")
      ->check(CLI::IsMember({"rootpair", "qt"}))
      ->capture_default_str();

  std::string vor_basis;
  auto* voronoi = app.add_subcommand("voronoi", "Voronoi vectors and domain of a basis");
  voronoi->add_option("--basis", vor_basis, "X1,Y1,X2,Y2")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reduce) return cmd_reduce(basis_text, tol, max_iter);
    if (*rootform_cmd) return cmd_rootform(rf_in, rf_out, rf_oriented);
    if (*dist) return cmd_dist(dist_opt);
    if (*qt) return cmd_qt(qt_in, qt_out, qt_signed);
    if (*grid) {
      grid_opt.mode = mode_text == "qt" ? GridMode::Qt : GridMode::RootPair;
      return cmd_grid(grid_in, grid_opt);
    }
    if (*voronoi) return cmd_voronoi(vor_basis);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
